#include "cuspidal/dedekind.hpp"

#include "cuspidal/errors.hpp"

namespace cuspidal {

namespace {

using Wide = __int128;

// 2q <k/q> as an exact integer.
Wide twice_scaled_sawtooth(Wide k, Int q) {
  Wide r = k % q;
  if (r < 0) r += q;
  return r == 0 ? 0 : 2 * r - q;
}

Rational from_wide(Wide num, Wide den) {
  const auto to_mpz = [](Wide v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                              : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class z = (hi << 64) + lo;
    return neg ? mpz_class(-z) : z;
  };
  return Rational(to_mpz(num), to_mpz(den));
}

// sum_{i=0}^{r-1} <xi/r><yi/r>.
Rational sawtooth_product_sum(Int x, Int y, Int r) {
  Wide acc = 0;
  for (Int i = 0; i < r; ++i) {
    acc += twice_scaled_sawtooth(Wide{x} * i, r) *
           twice_scaled_sawtooth(Wide{y} * i, r);
  }
  return from_wide(acc, Wide{4} * r * r);
}

}  // namespace

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x.frac() - Rational(1, 2);
}

Rational dedekind_sum(Int p, Int q) {
  if (q < 1) throw DomainError("dedekind sum needs q >= 1");
  return sawtooth_product_sum(1, p, q);
}

Rational rademacher_sum(Int p, Int q, Int r) {
  if (r < 1) throw DomainError("rademacher sum needs r >= 1");
  return sawtooth_product_sum(p, q, r);
}

Rational dedekind_reciprocity_rhs(Int p, Int q) {
  return (Rational(p, q) + Rational(q, p) + Rational(1, p * q) - Rational(3)) /
         Rational(12);
}

Rational rademacher_reciprocity_rhs(Int p, Int q, Int r) {
  const Rational pr(p), qr(q), rr(r);
  return (pr * pr + qr * qr + rr * rr - Rational(3) * pr * qr * rr) /
         (Rational(12) * pr * qr * rr);
}

SectionSums section_sums(Int b, Int w) {
  if (b < 2 || w < 2) throw DomainError("section sums need b, w >= 2");
  Wide a_acc = 0, b_acc = 0, c_acc = 0, d_acc = 0;
  const Int first_upper = (w + 1) / 2;  // ceil(w/2)
  for (Int p = 0; p < w; ++p) {
    const Wide s = twice_scaled_sawtooth(Wide{p} * b, w);  // 2w <pb/w>
    if (p >= first_upper) a_acc += s;
    b_acc += s * p;                                      // / w^2
    c_acc += s * twice_scaled_sawtooth(Wide{2} * p, w);  // / 4w^2
    d_acc += s;                                          // / 4w
  }
  return SectionSums{from_wide(a_acc, Wide{2} * w),
                     from_wide(b_acc, Wide{w} * w),
                     from_wide(c_acc, Wide{4} * w * w),
                     from_wide(d_acc, Wide{4} * w)};
}

SectionLimits section_limits(Int b) {
  if (b < 2) throw DomainError("section limits need b >= 2");
  const bool odd = b % 2 != 0;
  return SectionLimits{odd ? Rational(1, 8 * b) : Rational(0),
                       Rational(1, 6 * b),
                       odd ? Rational(1, 24 * b) : Rational(1, 6 * b)};
}

bool on_limit_subsequence(Int b, Int w) {
  if (b % 2 != 0) return gcd(w, 2 * b) == 1;
  return gcd(b, w) == 2;
}

LimitReport verify_limits(Int b, Int w_max, const Rational& tol) {
  if (b < 2) throw DomainError("verify_limits needs b >= 2");
  if (w_max < 100) throw DomainError("verify_limits needs wMax >= 100");
  LimitReport report;
  report.b = b;
  report.limits = section_limits(b);
  report.tolerance = tol;

  const auto largest_member_below = [&](Int top) {
    Int w = top;
    while (w >= 2 && !on_limit_subsequence(b, w)) --w;
    return w;
  };
  std::vector<Int> ws;
  for (Int decade = 100; decade < w_max; decade *= 10) {
    ws.push_back(largest_member_below(decade));
  }
  ws.push_back(largest_member_below(w_max));

  for (const Int w : ws) {
    if (w < 2 || (!report.samples.empty() && report.samples.back().w == w)) {
      continue;
    }
    const SectionSums sums = section_sums(b, w);
    LimitSample s;
    s.w = w;
    s.a_over_w = sums.a_w / Rational(w);
    s.b_over_w = sums.b_w / Rational(w);
    s.c_over_w = sums.c_w / Rational(w);
    s.a_deviation = abs(s.a_over_w - report.limits.a);
    s.b_deviation = abs(s.b_over_w - report.limits.b);
    s.c_deviation = abs(s.c_over_w - report.limits.c);
    report.samples.push_back(std::move(s));
  }
  const LimitSample& last = report.last();
  report.within_tolerance = last.a_deviation <= tol &&
                            last.b_deviation <= tol && last.c_deviation <= tol;
  return report;
}

}  // namespace cuspidal
