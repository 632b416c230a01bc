#pragma once

#include <vector>

#include "cuspidal/curve.hpp"

namespace cuspidal {

// Numerical semigroup of Z>=0 with finitely many gaps.
class Semigroup {
 public:
  const std::vector<Int>& generators() const { return generators_; }
  // Largest gap, -1 if the semigroup is all of Z>=0.
  Int frobenius() const { return frobenius_; }
  // Number of positive integers not in the semigroup.
  Int gap_count() const { return gap_count_; }
  bool contains(Int t) const;

 private:
  friend Semigroup semigroup_from_generators(std::vector<Int> gens);
  Semigroup() = default;

  std::vector<Int> generators_;
  std::vector<char> members_;  // indices [0, frobenius + 1]
  Int frobenius_ = -1;
  Int gap_count_ = 0;
};

// Semigroup generated by gens; throws DomainError unless gens is a nonempty
// set of positive integers with gcd 1.
Semigroup semigroup_from_generators(std::vector<Int> gens);

// The semigroup <r, s> of a one-Puiseux-pair cusp.
Semigroup cusp_semigroup(const PuiseuxCusp& cusp);

// Nondecreasing map Z -> Z with unit steps, zero on t <= 0 and
// R(t) = t - tail_offset() for every t >= window_end().
class CountingFunction {
 public:
  CountingFunction(std::vector<Int> window, Int tail_offset);

  Int operator()(Int t) const;

  Int window_end() const { return static_cast<Int>(window_.size()) - 1; }
  Int tail_offset() const { return tail_offset_; }
  const std::vector<Int>& window() const { return window_; }
  // Smallest t >= 0 from which R(t) = t - tail_offset() holds.
  Int tail_start() const;

  // Same function with the stored window shrunk or grown to [0, end].
  // Shrinking below tail_start() throws InternalError.
  CountingFunction resized(Int end) const;

 private:
  std::vector<Int> window_;
  Int tail_offset_ = 0;
};

// R_S(t) = #(S ∩ [0, t)).
CountingFunction counting_function(const Semigroup& s);

// (R1 ⋄ R2)(t) = min_k R1(k) + R2(t - k). The returned window covers at
// least [0, window_end].
CountingFunction infimum_convolution(const CountingFunction& r1,
                                     const CountingFunction& r2,
                                     Int window_end);

// Composite R-function of a cuspidal curve: the convolution of the counting
// functions of all cusps, on the window [0, 2g + 1]. Throws GenusMismatch
// unless the configuration is genus-compatible.
CountingFunction curve_r_function(const CurveType& ct,
                                  const CuspConfiguration& cfg);

}  // namespace cuspidal
