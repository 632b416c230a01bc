#pragma once

#include <vector>

#include "cuspidal/curve.hpp"
#include "cuspidal/rational.hpp"

namespace cuspidal {

// <x> = {x} - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

// s(p, q) = sum_{i=0}^{q-1} <i/q> <pi/q>, q >= 1.
Rational dedekind_sum(Int p, Int q);

// D(p, q, r) = sum_{i=0}^{r-1} <pi/r> <qi/r>, r >= 1.
Rational rademacher_sum(Int p, Int q, Int r);

// Right-hand sides of the two reciprocity laws.
Rational dedekind_reciprocity_rhs(Int p, Int q);
Rational rademacher_reciprocity_rhs(Int p, Int q, Int r);

// The sums controlling sum_{p >= w/2} <pb/w>:
//   a_w = sum_{p=ceil(w/2)}^{w-1} <pb/w>
//   b_w = sum_{p=0}^{w-1} <pb/w> 2p/w
//   c_w = sum_{p=0}^{w-1} <pb/w> <2p/w>
//   d_w = 1/2 sum_{p=0}^{w-1} <pb/w>
// with a_w = b_w - c_w + d_w and d_w = 0.
struct SectionSums {
  Rational a_w;
  Rational b_w;
  Rational c_w;
  Rational d_w;
};

SectionSums section_sums(Int b, Int w);

// Limits of a_w/w, b_w/w and c_w/w as w -> infinity for fixed b.
struct SectionLimits {
  Rational a;  // 0 for even b, 1/(8b) for odd b
  Rational b;  // 1/(6b)
  Rational c;  // 1/(6b) for even b, 1/(24b) for odd b
};

SectionLimits section_limits(Int b);

// True if w belongs to the subsequence used for the limit of c_w/w:
// gcd(w, 2b) = 1 for odd b, gcd(b, w) = 2 for even b.
bool on_limit_subsequence(Int b, Int w);

struct LimitSample {
  Int w = 0;
  Rational a_over_w;
  Rational b_over_w;
  Rational c_over_w;
  Rational a_deviation;  // |a_w/w - limit|
  Rational b_deviation;
  Rational c_deviation;
};

struct LimitReport {
  Int b = 0;
  SectionLimits limits;
  Rational tolerance;
  // Subsequence members near 10^2, 10^3, ... and the largest one <= wMax,
  // in increasing w.
  std::vector<LimitSample> samples;
  // All three deviations at the largest sampled w are <= tolerance.
  bool within_tolerance = false;

  const LimitSample& last() const { return samples.back(); }
};

// Convergence harness for the three limits above; b >= 2, wMax >= 100.
LimitReport verify_limits(Int b, Int w_max, const Rational& tol);

}  // namespace cuspidal
