#include "cuspidal/hf.hpp"

#include <tuple>

#include "cuspidal/errors.hpp"

namespace cuspidal {

namespace {

// Returns (g, x, y) with b x + w y = g = gcd(b, w).
std::tuple<Int, Int, Int> extended_gcd(Int b, Int w) {
  Int old_r = b, r = w, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_x, x) = std::make_tuple(x, old_x - q * x);
    std::tie(old_y, y) = std::make_tuple(y, old_y - q * y);
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

}  // namespace

Int p_bound(Int s1, Int s2, Int e) {
  return (s1 + 1) * (s2 + 1) + s2 * (s2 + 1) / 2 * e;
}

const char* to_string(Verdict v) {
  return v == Verdict::kPasses ? "passes" : "obstructed";
}

std::optional<Presentation> max_p_over_presentations(const CurveType& ct,
                                                     Int n) {
  const Int b = ct.b(), w = ct.w(), e = ct.e();
  const auto [c, x, y] = extended_gcd(b, w);
  if (mod_floor(n, c) != 0) return std::nullopt;

  const Int step1 = w / c;  // s1 moves by +step1 ...
  const Int step2 = b / c;  // ... while s2 moves by -step2.
  // Base solution with s1 reduced into [0, step1) to keep numbers small.
  const Int k0 = n / c;
  const Int s1_raw = mod_floor(static_cast<Int>((static_cast<__int128>(x) * k0) %
                                                 static_cast<__int128>(step1)),
                               step1);
  // s2 from the line equation: s2 = (n - s1 b) / w.
  const Int s2_raw = (n - s1_raw * b) / w;

  // Along k: s1 = s1_raw + k step1, s2 = s2_raw - k step2. With
  // A = s1_raw + 1 and B = s2_raw + 1,
  //   P(k) = (A + k step1)(B - k step2) + e/2 (B - 1 - k step2)(B - k step2)
  // is a concave quadratic with leading coefficient -d / (2 c^2). Its vertex
  // is at k* = lin c^2 / d where lin is the linear coefficient.
  const Int A = s1_raw + 1, B = s2_raw + 1;
  // 2 * lin = 2(B step1 - A step2) - e step2 (2B - 1)
  const Int twice_lin = 2 * (B * step1 - A * step2) - e * step2 * (2 * B - 1);
  // k* = lin c^2 / d = twice_lin c^2 / (2d)
  const Int vertex = floor_div(twice_lin * c * c, 2 * ct.d());

  std::optional<Presentation> best;
  for (Int k = vertex - 2; k <= vertex + 3; ++k) {
    const Int s1 = s1_raw + k * step1;
    const Int s2 = s2_raw - k * step2;
    const Int p = p_bound(s1, s2, e);
    if (!best || p > best->p_value || (p == best->p_value && s1 > best->s1)) {
      best = Presentation{s1, s2, p};
    }
  }
  return best;
}

HfReport hf_check(const CurveType& ct, const CuspConfiguration& cfg) {
  return hf_check(ct, curve_r_function(ct, cfg));
}

HfReport hf_check(const CurveType& ct, const CountingFunction& r) {
  HfReport report;
  const Int g = ct.g();
  for (Int m = -g; m <= g; ++m) {
    const auto best = max_p_over_presentations(ct, m + g - 1);
    if (!best) continue;
    const Int rv = r(m + g);
    if (rv < best->p_value) {
      report.witnesses.push_back(HfWitness{m, best->s1, best->s2, rv, best->p_value});
    }
  }
  report.verdict =
      report.witnesses.empty() ? Verdict::kPasses : Verdict::kObstructed;
  return report;
}

bool multiplicity_bound_check(const CurveType& ct, const PuiseuxCusp& cusp) {
  return cusp.r() <= ct.b();
}

Rational d_invariant(const CurveType& ct, const CuspConfiguration& cfg,
                     Int m) {
  return d_invariant(ct, curve_r_function(ct, cfg), m);
}

Rational d_invariant(const CurveType& ct, const CountingFunction& r, Int m) {
  const Int d = ct.d();
  if (2 * m < -d || 2 * m >= d) {
    throw RangeError("m = " + std::to_string(m) + " outside [-d/2, d/2) with d = " +
                     std::to_string(d));
  }
  const Rational dm(d - 2 * m);
  const Rational first = (dm * dm - Rational(d)) / Rational(4 * d);
  return -(first - Rational(2 * (r(m + ct.g()) - m)));
}

}  // namespace cuspidal
