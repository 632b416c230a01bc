#pragma once

#include <optional>
#include <vector>

#include "cuspidal/curve.hpp"
#include "cuspidal/rational.hpp"
#include "cuspidal/semigroup.hpp"

namespace cuspidal {

// P(s1, s2) = (s1 + 1)(s2 + 1) + s2(s2 + 1)e / 2.
Int p_bound(Int s1, Int s2, Int e);

// An integer solution of s1 b + s2 w = m + g - 1 together with its bound.
struct Presentation {
  Int s1 = 0;
  Int s2 = 0;
  Int p_value = 0;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Maximum of P over all integer solutions of s1 b + s2 w = n, or nullopt if
// gcd(a, b) does not divide n. Ties go to the larger s1.
std::optional<Presentation> max_p_over_presentations(const CurveType& ct,
                                                     Int n);

struct HfWitness {
  Int m = 0;
  Int s1 = 0;
  Int s2 = 0;
  Int r_value = 0;  // R(m + g)
  Int p_value = 0;  // P(s1, s2) > r_value

  Int m_plus_g(const CurveType& ct) const { return m + ct.g(); }
  friend bool operator==(const HfWitness&, const HfWitness&) = default;
};

enum class Verdict { kPasses, kObstructed };

const char* to_string(Verdict v);

struct HfReport {
  Verdict verdict = Verdict::kPasses;
  // One entry per violating m, in increasing m.
  std::vector<HfWitness> witnesses;
};

// Checks R(m + g) >= P(s1, s2) for every m in [-g, g] and every presentation
// m + g = s1 b + s2 (a + b e) + 1.
HfReport hf_check(const CurveType& ct, const CuspConfiguration& cfg);
HfReport hf_check(const CurveType& ct, const CountingFunction& r);

// r <= b. Equivalent to the (s1, s2) = (1, 0) instance of the HF check.
bool multiplicity_bound_check(const CurveType& ct, const PuiseuxCusp& cusp);

// d(Y, s_m) = -[((d - 2m)^2 - d) / (4d) - 2(R(m + g) - m)] for
// m in [-d/2, d/2); RangeError otherwise.
Rational d_invariant(const CurveType& ct, const CuspConfiguration& cfg, Int m);
Rational d_invariant(const CurveType& ct, const CountingFunction& r, Int m);

}  // namespace cuspidal
