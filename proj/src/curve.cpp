#include "cuspidal/curve.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "cuspidal/errors.hpp"

namespace cuspidal {

Int gcd(Int x, Int y) { return std::gcd(x, y); }

Int lcm(Int x, Int y) { return std::lcm(x, y); }

Int floor_div(Int num, Int den) {
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Int mod_floor(Int num, Int den) { return num - floor_div(num, den) * den; }

CurveType make_curve_type(Int a, Int b, Int e) {
  const auto fail = [&](const std::string& why) {
    throw DomainError("invalid curve type (a,b,e)=(" + std::to_string(a) +
                      "," + std::to_string(b) + "," + std::to_string(e) +
                      "): " + why);
  };
  if (a < 0) fail("a must be >= 0");
  if (b <= 0) fail("b must be > 0");
  if (e < 0) fail("e must be >= 0");
  if (a > kMaxParameter || b > kMaxParameter || e > kMaxParameter) {
    fail("parameters are limited to " + std::to_string(kMaxParameter));
  }

  CurveType ct;
  ct.a_ = a;
  ct.b_ = b;
  ct.e_ = e;
  ct.w_ = a + b * e;
  ct.d_ = 2 * a * b + b * b * e;
  ct.c_ = gcd(a, b);
  // b(b-1) is even, so the genus is an integer.
  ct.g_ = (a - 1) * (b - 1) + b * (b - 1) / 2 * e;

  if (ct.w_ <= 0) fail("w = a + be must be positive");
  if (ct.d_ <= 0) fail("self-intersection d = 2ab + b^2 e must be positive");
  if (ct.g_ < 0) fail("arithmetic genus is negative");
  if (ct.d_ - 2 * ct.g_ != 2 * a + 2 * b + b * e - 2) {
    throw InternalError("d - 2g identity violated");
  }
  return ct;
}

PuiseuxCusp make_cusp(Int r, Int s) {
  const auto fail = [&](const std::string& why) {
    throw DomainError("invalid cusp (" + std::to_string(r) + "," +
                      std::to_string(s) + "): " + why);
  };
  if (r < 2) fail("r must be >= 2");
  if (s <= r) fail("s must be > r");
  if (s > kMaxParameter) fail("s is limited to " + std::to_string(kMaxParameter));
  if (gcd(r, s) != 1) fail("r and s must be coprime");
  PuiseuxCusp cusp;
  cusp.r_ = r;
  cusp.s_ = s;
  return cusp;
}

PuiseuxCusp parse_cusp(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw DomainError("malformed cusp '" + text + "', expected r:s");
  }
  std::size_t used_r = 0, used_s = 0;
  Int r = 0, s = 0;
  try {
    const std::string rs = text.substr(0, colon);
    const std::string ss = text.substr(colon + 1);
    r = std::stoll(rs, &used_r);
    s = std::stoll(ss, &used_s);
    if (used_r != rs.size() || used_s != ss.size()) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw DomainError("malformed cusp '" + text + "', expected r:s");
  }
  return make_cusp(r, s);
}

std::string PuiseuxCusp::str() const {
  return std::to_string(r_) + ":" + std::to_string(s_);
}

Int CuspConfiguration::total_delta() const {
  Int total = 0;
  for (const auto& c : cusps) total += c.delta();
  return total;
}

CuspConfiguration CuspConfiguration::canonical() const {
  CuspConfiguration out = *this;
  std::sort(out.cusps.begin(), out.cusps.end());
  return out;
}

std::string CuspConfiguration::str() const {
  std::string out;
  for (std::size_t i = 0; i < cusps.size(); ++i) {
    if (i) out += ';';
    out += cusps[i].str();
  }
  return out;
}

void require_genus_compatible(const CurveType& ct,
                              const CuspConfiguration& cfg) {
  if (!cfg.genus_compatible(ct)) {
    throw GenusMismatch("genus mismatch: expected sum of mu/2 = g = " +
                        std::to_string(ct.g()) + ", got " +
                        std::to_string(cfg.total_delta()));
  }
}

std::ostream& operator<<(std::ostream& os, const CurveType& ct) {
  return os << "(a,b,e)=(" << ct.a() << "," << ct.b() << "," << ct.e() << ")";
}

std::ostream& operator<<(std::ostream& os, const PuiseuxCusp& cusp) {
  return os << "(" << cusp.r() << "," << cusp.s() << ")";
}

}  // namespace cuspidal
