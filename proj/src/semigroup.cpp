#include "cuspidal/semigroup.hpp"

#include <algorithm>
#include <limits>

#include "cuspidal/errors.hpp"

namespace cuspidal {

bool Semigroup::contains(Int t) const {
  if (t < 0) return false;
  if (t > frobenius_) return true;
  return members_[static_cast<std::size_t>(t)] != 0;
}

Semigroup semigroup_from_generators(std::vector<Int> gens) {
  if (gens.empty()) throw DomainError("semigroup needs at least one generator");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() <= 0) throw DomainError("generators must be positive");
  Int g = 0;
  for (Int x : gens) g = gcd(g, x);
  if (g != 1) {
    throw DomainError("generators must have gcd 1 (got " + std::to_string(g) +
                      ")");
  }

  const Int smallest = gens.front();
  // Schur's bound: the Frobenius number is below (min - 1)(max - 1).
  const Int bound = (smallest - 1) * (gens.back() - 1) + smallest + 1;
  if (bound > 64 * kMaxParameter) {
    throw DomainError("semigroup too large to sieve");
  }

  // Additive sieve until `smallest` consecutive members appear; every later
  // integer is then a member.
  std::vector<char> members{1};
  Int run = 1, t = 0;
  while (run < smallest) {
    ++t;
    if (t > bound) throw InternalError("semigroup sieve did not stabilise");
    char in = 0;
    for (Int x : gens) {
      if (x > t) break;
      if (members[static_cast<std::size_t>(t - x)]) {
        in = 1;
        break;
      }
    }
    members.push_back(in);
    run = in ? run + 1 : 0;
  }

  Semigroup s;
  s.generators_ = std::move(gens);
  s.frobenius_ = t - smallest;  // the gap right before the run
  members.resize(static_cast<std::size_t>(s.frobenius_ + 2));
  s.members_ = std::move(members);
  s.gap_count_ = static_cast<Int>(
      std::count(s.members_.begin(), s.members_.end(), char{0}));
  return s;
}

Semigroup cusp_semigroup(const PuiseuxCusp& cusp) {
  return semigroup_from_generators({cusp.r(), cusp.s()});
}

CountingFunction::CountingFunction(std::vector<Int> window, Int tail_offset)
    : window_(std::move(window)), tail_offset_(tail_offset) {
  if (window_.empty() || window_.front() != 0) {
    throw InternalError("counting function must start at R(0) = 0");
  }
  for (std::size_t t = 1; t < window_.size(); ++t) {
    const Int step = window_[t] - window_[t - 1];
    if (step != 0 && step != 1) {
      throw InternalError("counting function steps must be 0 or 1");
    }
  }
  if (window_.back() != window_end() - tail_offset_) {
    throw InternalError("counting function window does not meet its tail");
  }
}

Int CountingFunction::operator()(Int t) const {
  if (t <= 0) return 0;
  if (t <= window_end()) return window_[static_cast<std::size_t>(t)];
  return t - tail_offset_;
}

Int CountingFunction::tail_start() const {
  Int t = window_end();
  while (t > 0 && window_[static_cast<std::size_t>(t - 1)] == t - 1 - tail_offset_) {
    --t;
  }
  return t;
}

CountingFunction CountingFunction::resized(Int end) const {
  if (end < 0 || end < tail_start()) {
    throw InternalError("cannot shrink counting function below its tail");
  }
  std::vector<Int> w(static_cast<std::size_t>(end + 1));
  for (Int t = 0; t <= end; ++t) w[static_cast<std::size_t>(t)] = (*this)(t);
  return CountingFunction(std::move(w), tail_offset_);
}

CountingFunction counting_function(const Semigroup& s) {
  const Int end = s.frobenius() + 2;
  std::vector<Int> window(static_cast<std::size_t>(end + 1), 0);
  for (Int t = 1; t <= end; ++t) {
    window[static_cast<std::size_t>(t)] =
        window[static_cast<std::size_t>(t - 1)] + (s.contains(t - 1) ? 1 : 0);
  }
  return CountingFunction(std::move(window), s.gap_count());
}

CountingFunction infimum_convolution(const CountingFunction& r1,
                                     const CountingFunction& r2,
                                     Int window_end) {
  // Both arguments vanish on t <= 0, so k outside [0, t] never beats the
  // endpoints. Once t - k >= tail2, r1(k) + (t - k - off2) is nonincreasing
  // in k, so only k >= t - tail2 needs scanning.
  const Int tail1 = r1.tail_start();
  const Int tail2 = r2.tail_start();
  const Int end = std::max(window_end, tail1 + tail2);
  std::vector<Int> window(static_cast<std::size_t>(end + 1));
  for (Int t = 0; t <= end; ++t) {
    Int best = std::numeric_limits<Int>::max();
    for (Int k = std::max<Int>(0, t - tail2); k <= t; ++k) {
      best = std::min(best, r1(k) + r2(t - k));
    }
    window[static_cast<std::size_t>(t)] = best;
  }
  CountingFunction out(std::move(window), r1.tail_offset() + r2.tail_offset());
  return end > window_end ? out.resized(std::max(window_end, out.tail_start()))
                          : out;
}

CountingFunction curve_r_function(const CurveType& ct,
                                  const CuspConfiguration& cfg) {
  require_genus_compatible(ct, cfg);
  const Int end = 2 * ct.g() + 1;
  // Identity element: R of Z>=0.
  std::vector<Int> identity(static_cast<std::size_t>(end + 1));
  for (Int t = 0; t <= end; ++t) identity[static_cast<std::size_t>(t)] = t;
  CountingFunction r(std::move(identity), 0);
  for (const auto& cusp : cfg.cusps) {
    r = infimum_convolution(r, counting_function(cusp_semigroup(cusp)), end);
  }
  if (r.tail_offset() != ct.g() || r.tail_start() > 2 * ct.g()) {
    throw InternalError("R(2g + m) = g + m violated");
  }
  return r.window_end() == end ? r : r.resized(end);
}

}  // namespace cuspidal
