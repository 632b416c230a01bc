#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cuspidal {

using Int = std::int64_t;

Int gcd(Int x, Int y);
Int lcm(Int x, Int y);
// Floor division for a possibly negative numerator, den > 0.
Int floor_div(Int num, Int den);
// Representative of num mod den in [0, den), den > 0.
Int mod_floor(Int num, Int den);

// Upper bound accepted for each of a, b, e, r, s so that every derived
// quantity (d, g, mu, window sizes) stays well inside 64 bits.
inline constexpr Int kMaxParameter = 1'000'000;

// A curve of type (a, b) in the Hirzebruch surface X_e, i.e. of homology
// class aL + bM. All derived invariants are computed on construction.
class CurveType {
 public:
  Int a() const { return a_; }
  Int b() const { return b_; }
  Int e() const { return e_; }
  // w = a + b e, the multiplicity of the second splice component at infinity.
  Int w() const { return w_; }
  // d = C^2 = 2ab + b^2 e.
  Int d() const { return d_; }
  // c = gcd(a, b).
  Int c() const { return c_; }
  // Arithmetic genus g = (a-1)(b-1) + b(b-1)e/2.
  Int g() const { return g_; }

  friend bool operator==(const CurveType&, const CurveType&) = default;

 private:
  friend CurveType make_curve_type(Int a, Int b, Int e);
  CurveType() = default;

  Int a_ = 0, b_ = 0, e_ = 0, w_ = 0, d_ = 0, c_ = 0, g_ = 0;
};

// Throws DomainError unless a >= 0, b > 0, e >= 0, d > 0 and g >= 0.
CurveType make_curve_type(Int a, Int b, Int e);

// One-Puiseux-pair cusp, locally x^r = y^s with gcd(r, s) = 1 and 2 <= r < s.
class PuiseuxCusp {
 public:
  Int r() const { return r_; }
  Int s() const { return s_; }
  // Milnor number (r-1)(s-1).
  Int mu() const { return (r_ - 1) * (s_ - 1); }
  // Genus of the link, mu / 2.
  Int delta() const { return mu() / 2; }

  std::string str() const;  // "r:s"

  friend bool operator==(const PuiseuxCusp&, const PuiseuxCusp&) = default;
  // Canonical order: by delta, then r.
  friend std::strong_ordering operator<=>(const PuiseuxCusp& x,
                                          const PuiseuxCusp& y) {
    if (auto c = x.delta() <=> y.delta(); c != 0) return c;
    return x.r_ <=> y.r_;
  }

 private:
  friend PuiseuxCusp make_cusp(Int r, Int s);
  PuiseuxCusp() = default;

  Int r_ = 0, s_ = 0;
};

PuiseuxCusp make_cusp(Int r, Int s);
// Parses "r:s".
PuiseuxCusp parse_cusp(const std::string& text);

// Ordered list of cusps on one curve.
struct CuspConfiguration {
  std::vector<PuiseuxCusp> cusps;

  Int total_delta() const;
  Int total_mu() const { return 2 * total_delta(); }
  bool genus_compatible(const CurveType& ct) const {
    return total_delta() == ct.g();
  }
  // Cusps sorted into canonical order.
  CuspConfiguration canonical() const;
  std::string str() const;  // "r:s;r:s"

  friend bool operator==(const CuspConfiguration&,
                         const CuspConfiguration&) = default;
};

// Throws GenusMismatch naming the budget if cfg is not genus-compatible.
void require_genus_compatible(const CurveType& ct, const CuspConfiguration& cfg);

std::ostream& operator<<(std::ostream& os, const CurveType& ct);
std::ostream& operator<<(std::ostream& os, const PuiseuxCusp& cusp);

}  // namespace cuspidal
