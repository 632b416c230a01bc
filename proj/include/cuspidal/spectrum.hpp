#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cuspidal/curve.hpp"
#include "cuspidal/hf.hpp"
#include "cuspidal/rational.hpp"

namespace cuspidal {

// Finite multiset of rationals in [0, 2].
class SpectrumMultiset {
 public:
  // Adds `mult` copies of x. mult == 0 is a no-op; negative multiplicities
  // throw InternalError, values outside [0, 2] throw DomainError.
  void add(const Rational& x, Int mult = 1);

  Int multiplicity(const Rational& x) const;
  Int total() const { return total_; }
  bool contains(const Rational& x) const { return entries_.count(x) != 0; }
  // Number of elements in the open interval (lo, hi).
  Int count_open(const Rational& lo, const Rational& hi) const;
  // Number of elements outside the open interval (lo, hi).
  Int count_outside_open(const Rational& lo, const Rational& hi) const {
    return total_ - count_open(lo, hi);
  }
  // mult(x) == mult(2 - x) for every x in (0,1) ∪ (1,2).
  bool symmetric_about_one() const;

  const std::map<Rational, Int>& entries() const { return entries_; }

  friend bool operator==(const SpectrumMultiset&,
                         const SpectrumMultiset&) = default;

 private:
  std::map<Rational, Int> entries_;
  Int total_ = 0;
};

// Spectrum of x^r = y^s: { i/r + j/s : 1 <= i < r, 1 <= j < s }.
SpectrumMultiset cusp_spectrum(const PuiseuxCusp& cusp);

// Equivariant signatures of the two splice components of the link at
// infinity, from the closed form
//   sigma1(p/w) = 2 floor(pb/w) - (b-1) - [w | pb],   1 <= p < w,
//   sigma2(q/b) = 2 floor(qa/b) - (a-1) - [b | qa],   1 <= q < b.
class SignatureProfile {
 public:
  explicit SignatureProfile(const CurveType& ct);

  const CurveType& curve() const { return curve_; }
  Int sigma1(Int p) const;  // 1 <= p <= w - 1
  Int sigma2(Int q) const;  // 1 <= q <= b - 1
  // Total equivariant signature at x in (0, 1): sigma1 if x = p/w, plus
  // sigma2 if x = q/b, zero if neither.
  Int total_at(const Rational& x) const;

 private:
  CurveType curve_;
  std::vector<Int> sigma1_;
  std::vector<Int> sigma2_;
};

// Alexander polynomial (t-1)(t^w-1)^(b-1)(t^b-1)^(a-1) of the link at
// infinity, described by its root orders at roots of unity e^(2 pi i x).
class AlexanderData {
 public:
  explicit AlexanderData(const CurveType& ct) : curve_(ct) {}

  const CurveType& curve() const { return curve_; }
  // 1 + w(b-1) + b(a-1).
  Int degree() const;
  // Order of vanishing at e^(2 pi i x), x in [0, 1). For x = u/v reduced,
  // (b-1)[v | w] + (a-1)[v | b], plus 1 at x = 0.
  Int order_at(const Rational& x) const;
  // Order of Delta_2(t) = (t^c - 1)/(t - 1) at e^(2 pi i x). Not used by
  // the spectrum.
  Int delta2_order_at(const Rational& x) const;

 private:
  CurveType curve_;
};

// Spectrum at infinity from the eight-row closed-form table.
SpectrumMultiset spectrum_at_infinity_table(const CurveType& ct);

// Spectrum at infinity from Alexander orders and equivariant signatures:
// x gets (ord + sigma)/2, 1 + x gets (ord - sigma)/2 and 1 gets a + b - 1.
// Throws InternalError if a multiplicity is odd-half or negative.
SpectrumMultiset spectrum_at_infinity_derived(const CurveType& ct);

// Both sides of the two semicontinuity inequalities at one x in (0, 1).
struct SemicontinuityEvaluation {
  Rational x;
  Int inside_local = 0;      // sum_j #Sp_j ∩ (x, x+1)
  Int inside_infinity = 0;   // #Sp_inf ∩ (x, x+1)
  Int outside_local = 0;     // sum_j #Sp_j \ (x, x+1)
  Int outside_infinity = 0;  // #Sp_inf \ (x, x+1)

  bool inside_violated() const { return inside_local > inside_infinity; }
  bool outside_violated() const { return outside_local > outside_infinity; }
  bool violated() const { return inside_violated() || outside_violated(); }
  // Largest amount by which either inequality fails (<= 0 when none does).
  Int excess() const;
};

struct SemicontinuityReport {
  Verdict verdict = Verdict::kPasses;
  // All violating evaluations, in increasing x.
  std::vector<SemicontinuityEvaluation> witnesses;
  // Number of x values examined by the scan.
  Int evaluations = 0;

  // Witness with the largest excess, smallest x among ties.
  std::optional<SemicontinuityEvaluation> primary_witness() const;
};

SemicontinuityEvaluation evaluate_semicontinuity(
    const SpectrumMultiset& infinity,
    const std::vector<SpectrumMultiset>& local, const Rational& x);

// Scans every critical x in (0, 1) not in Sp_inf and every midpoint between
// consecutive critical points (with 0 and 1 as outer boundaries).
SemicontinuityReport semicontinuity_check(const CurveType& ct,
                                          const CuspConfiguration& cfg);
SemicontinuityReport semicontinuity_check(
    const SpectrumMultiset& infinity,
    const std::vector<SpectrumMultiset>& local);

// Counts of Sp_{r,s} and Sp_inf in the open interval (1/2, 3/2).
struct HalfWindowCounts {
  Int s_rs = 0;
  Int s_inf = 0;
};

HalfWindowCounts half_window_counts(const CurveType& ct,
                                    const PuiseuxCusp& cusp);

}  // namespace cuspidal
