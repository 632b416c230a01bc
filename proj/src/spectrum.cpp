#include "cuspidal/spectrum.hpp"

#include <algorithm>
#include <set>

#include "cuspidal/errors.hpp"

namespace cuspidal {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kTwo(2);

Int as_int(const mpz_class& z) {
  if (!z.fits_slong_p()) throw InternalError("integer overflow");
  return z.get_si();
}

// Sorted values with prefix sums for O(log n) interval counts.
class PrefixCounter {
 public:
  explicit PrefixCounter(const SpectrumMultiset& sp) {
    values_.reserve(sp.entries().size());
    cum_.reserve(sp.entries().size() + 1);
    cum_.push_back(0);
    for (const auto& [x, m] : sp.entries()) {
      values_.push_back(x);
      cum_.push_back(cum_.back() + m);
    }
  }

  Int total() const { return cum_.back(); }

  Int count_open(const Rational& lo, const Rational& hi) const {
    const auto first = std::upper_bound(values_.begin(), values_.end(), lo);
    const auto last = std::lower_bound(values_.begin(), values_.end(), hi);
    if (last <= first) return 0;
    return cum_[static_cast<std::size_t>(last - values_.begin())] -
           cum_[static_cast<std::size_t>(first - values_.begin())];
  }

 private:
  std::vector<Rational> values_;
  std::vector<Int> cum_;
};

SemicontinuityEvaluation evaluate(const PrefixCounter& infinity,
                                  const std::vector<PrefixCounter>& local,
                                  const Rational& x) {
  SemicontinuityEvaluation ev;
  ev.x = x;
  const Rational hi = x + kOne;
  ev.inside_infinity = infinity.count_open(x, hi);
  ev.outside_infinity = infinity.total() - ev.inside_infinity;
  for (const auto& sp : local) {
    const Int in = sp.count_open(x, hi);
    ev.inside_local += in;
    ev.outside_local += sp.total() - in;
  }
  return ev;
}

}  // namespace

// ---------------------------------------------------------------------------
// SpectrumMultiset

void SpectrumMultiset::add(const Rational& x, Int mult) {
  if (mult < 0) {
    throw InternalError("negative spectrum multiplicity at " + x.str());
  }
  if (mult == 0) return;
  if (x < kZero || x > kTwo) {
    throw DomainError("spectrum value " + x.str() + " outside [0, 2]");
  }
  entries_[x] += mult;
  total_ += mult;
}

Int SpectrumMultiset::multiplicity(const Rational& x) const {
  const auto it = entries_.find(x);
  return it == entries_.end() ? 0 : it->second;
}

Int SpectrumMultiset::count_open(const Rational& lo, const Rational& hi) const {
  Int n = 0;
  for (auto it = entries_.upper_bound(lo); it != entries_.end() && it->first < hi;
       ++it) {
    n += it->second;
  }
  return n;
}

bool SpectrumMultiset::symmetric_about_one() const {
  for (const auto& [x, m] : entries_) {
    if (x == kZero || x == kOne || x == kTwo) continue;
    if (multiplicity(kTwo - x) != m) return false;
  }
  return true;
}

SpectrumMultiset cusp_spectrum(const PuiseuxCusp& cusp) {
  SpectrumMultiset sp;
  const Int r = cusp.r(), s = cusp.s();
  for (Int i = 1; i < r; ++i) {
    for (Int j = 1; j < s; ++j) sp.add(Rational(i * s + j * r, r * s));
  }
  return sp;
}

// ---------------------------------------------------------------------------
// Signatures and Alexander orders

SignatureProfile::SignatureProfile(const CurveType& ct)
    : curve_(ct),
      sigma1_(static_cast<std::size_t>(ct.w()), 0),
      sigma2_(static_cast<std::size_t>(ct.b()), 0) {
  const Int a = ct.a(), b = ct.b(), w = ct.w();
  for (Int p = 1; p < w; ++p) {
    const Int delta = (p * b) % w == 0 ? 1 : 0;
    sigma1_[static_cast<std::size_t>(p)] = 2 * (p * b / w) - (b - 1) - delta;
  }
  for (Int q = 1; q < b; ++q) {
    const Int delta = (q * a) % b == 0 ? 1 : 0;
    sigma2_[static_cast<std::size_t>(q)] = 2 * (q * a / b) - (a - 1) - delta;
  }
}

Int SignatureProfile::sigma1(Int p) const {
  if (p < 1 || p >= curve_.w()) throw RangeError("sigma1 index out of range");
  return sigma1_[static_cast<std::size_t>(p)];
}

Int SignatureProfile::sigma2(Int q) const {
  if (q < 1 || q >= curve_.b()) throw RangeError("sigma2 index out of range");
  return sigma2_[static_cast<std::size_t>(q)];
}

Int SignatureProfile::total_at(const Rational& x) const {
  if (x <= kZero || x >= kOne) throw RangeError("signature needs x in (0, 1)");
  Int total = 0;
  const Rational xw = x * Rational(curve_.w());
  const Rational xb = x * Rational(curve_.b());
  if (xw.is_integer()) total += sigma1(as_int(xw.numerator()));
  if (xb.is_integer()) total += sigma2(as_int(xb.numerator()));
  return total;
}

Int AlexanderData::degree() const {
  return 1 + curve_.w() * (curve_.b() - 1) + curve_.b() * (curve_.a() - 1);
}

Int AlexanderData::order_at(const Rational& x) const {
  if (x < kZero || x >= kOne) throw RangeError("root order needs x in [0, 1)");
  const Int a = curve_.a(), b = curve_.b();
  if (x == kZero) return 1 + (b - 1) + (a - 1);
  const Int v = as_int(x.denominator());
  Int ord = 0;
  if (curve_.w() % v == 0) ord += b - 1;
  if (b % v == 0) ord += a - 1;
  return ord;
}

Int AlexanderData::delta2_order_at(const Rational& x) const {
  if (x < kZero || x >= kOne) throw RangeError("root order needs x in [0, 1)");
  if (x == kZero) return 0;
  return curve_.c() % as_int(x.denominator()) == 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Spectrum at infinity

SpectrumMultiset spectrum_at_infinity_table(const CurveType& ct) {
  const Int a = ct.a(), b = ct.b(), w = ct.w();
  std::set<Rational> xs;
  for (Int p = 1; p < w; ++p) xs.insert(Rational(p, w));
  for (Int q = 1; q < b; ++q) xs.insert(Rational(q, b));

  SpectrumMultiset sp;
  sp.add(kOne, a + b - 1);  // row 1
  for (const auto& x : xs) {
    const Rational xw = x * Rational(w);
    const Rational xb = x * Rational(b);
    const bool on_w = xw.is_integer();
    const bool on_b = xb.is_integer();
    const Int fw = on_w ? as_int(xw.numerator()) * b / w : 0;  // floor(pb/w)
    const Int fb = on_b ? as_int(xb.numerator()) * a / b : 0;  // floor(qa/b)
    if (on_w && on_b) {
      sp.add(x, fw + fb - 1);                   // row 2
      sp.add(kOne + x, a + b - 1 - fw - fb);    // row 3
    } else if (on_w) {
      sp.add(x, fw);                            // row 4
      sp.add(kOne + x, b - 1 - fw);             // row 5
    } else {
      sp.add(x, fb);                            // row 6
      sp.add(kOne + x, a - 1 - fb);             // row 7
    }
  }
  return sp;
}

SpectrumMultiset spectrum_at_infinity_derived(const CurveType& ct) {
  const AlexanderData alexander(ct);
  const SignatureProfile signatures(ct);

  // Denominators v >= 2 of roots of unity where Delta may vanish.
  std::set<Int> denominators;
  for (const Int n : {ct.w(), ct.b()}) {
    for (Int v = 2; v <= n; ++v) {
      if (n % v == 0) denominators.insert(v);
    }
  }

  SpectrumMultiset sp;
  sp.add(kOne, alexander.order_at(kZero));
  for (const Int v : denominators) {
    for (Int u = 1; u < v; ++u) {
      if (gcd(u, v) != 1) continue;
      const Rational x(u, v);
      const Int ord = alexander.order_at(x);
      const Int sigma = signatures.total_at(x);
      if ((ord + sigma) % 2 != 0) {
        throw InternalError("ord + sigma odd at x = " + x.str());
      }
      const Int above = (ord + sigma) / 2;  // multiplicity of x
      const Int below = (ord - sigma) / 2;  // multiplicity of 1 + x
      if (above < 0 || below < 0) {
        throw InternalError("negative Hodge count at x = " + x.str());
      }
      sp.add(x, above);
      sp.add(kOne + x, below);
    }
  }
  if (sp.total() != alexander.degree()) {
    throw InternalError("spectrum size differs from Alexander degree");
  }
  return sp;
}

// ---------------------------------------------------------------------------
// Semicontinuity

Int SemicontinuityEvaluation::excess() const {
  return std::max(inside_local - inside_infinity,
                  outside_local - outside_infinity);
}

std::optional<SemicontinuityEvaluation>
SemicontinuityReport::primary_witness() const {
  std::optional<SemicontinuityEvaluation> best;
  for (const auto& w : witnesses) {
    if (!best || w.excess() > best->excess()) best = w;
  }
  return best;
}

SemicontinuityEvaluation evaluate_semicontinuity(
    const SpectrumMultiset& infinity,
    const std::vector<SpectrumMultiset>& local, const Rational& x) {
  std::vector<PrefixCounter> counters;
  counters.reserve(local.size());
  for (const auto& sp : local) counters.emplace_back(sp);
  return evaluate(PrefixCounter(infinity), counters, x);
}

SemicontinuityReport semicontinuity_check(const CurveType& ct,
                                          const CuspConfiguration& cfg) {
  require_genus_compatible(ct, cfg);
  std::vector<SpectrumMultiset> local;
  local.reserve(cfg.cusps.size());
  for (const auto& cusp : cfg.cusps) local.push_back(cusp_spectrum(cusp));
  return semicontinuity_check(spectrum_at_infinity_table(ct), local);
}

SemicontinuityReport semicontinuity_check(
    const SpectrumMultiset& infinity,
    const std::vector<SpectrumMultiset>& local) {
  // Both counts are step functions of x that only jump where x or x + 1
  // hits a spectrum value.
  std::set<Rational> critical{kZero, kOne};
  const auto collect = [&](const SpectrumMultiset& sp) {
    for (const auto& [v, m] : sp.entries()) {
      if (kZero < v && v < kOne) critical.insert(v);
      if (kOne < v && v < kTwo) critical.insert(v - kOne);
    }
  };
  collect(infinity);
  for (const auto& sp : local) collect(sp);

  const PrefixCounter inf_counter(infinity);
  std::vector<PrefixCounter> local_counters;
  local_counters.reserve(local.size());
  for (const auto& sp : local) local_counters.emplace_back(sp);

  SemicontinuityReport report;
  const auto visit = [&](const Rational& x) {
    ++report.evaluations;
    auto ev = evaluate(inf_counter, local_counters, x);
    if (ev.violated()) report.witnesses.push_back(std::move(ev));
  };
  const Rational half(1, 2);
  for (auto it = critical.begin(); it != critical.end(); ++it) {
    const Rational& x = *it;
    if (x != kZero && x != kOne && !infinity.contains(x)) visit(x);
    const auto next = std::next(it);
    if (next != critical.end()) visit((x + *next) * half);
  }
  report.verdict =
      report.witnesses.empty() ? Verdict::kPasses : Verdict::kObstructed;
  return report;
}

HalfWindowCounts half_window_counts(const CurveType& ct,
                                    const PuiseuxCusp& cusp) {
  const Rational lo(1, 2), hi(3, 2);
  return HalfWindowCounts{cusp_spectrum(cusp).count_open(lo, hi),
                          spectrum_at_infinity_table(ct).count_open(lo, hi)};
}

}  // namespace cuspidal
