#include "cuspidal/enumerate.hpp"

#include <algorithm>

#include "cuspidal/errors.hpp"

namespace cuspidal {

std::vector<PuiseuxCusp> cusps_with_delta(Int delta) {
  std::vector<PuiseuxCusp> out;
  if (delta <= 0) return out;
  const Int mu = 2 * delta;
  // r - 1 = x, s - 1 = mu / x with x < mu / x.
  for (Int x = 1; x * x < mu; ++x) {
    if (mu % x != 0) continue;
    const Int r = x + 1, s = mu / x + 1;
    if (gcd(r, s) == 1) out.push_back(make_cusp(r, s));
  }
  return out;
}

std::vector<PuiseuxCusp> enumerate_unicuspidal(const CurveType& ct) {
  return cusps_with_delta(ct.g());
}

std::vector<CuspConfiguration> enumerate_configurations(const CurveType& ct,
                                                        Int max_cusps,
                                                        Int cap) {
  if (max_cusps < 1) throw DomainError("max cusps must be >= 1");
  const Int g = ct.g();
  std::vector<CuspConfiguration> out;
  if (g == 0) return out;

  // Every cusp with delta <= g, in canonical order (delta, r).
  std::vector<PuiseuxCusp> pool;
  for (Int delta = 1; delta <= g; ++delta) {
    for (const auto& c : cusps_with_delta(delta)) pool.push_back(c);
  }

  // Nondecreasing index sequences into `pool` with delta sum g.
  std::vector<PuiseuxCusp> current;
  const auto recurse = [&](auto&& self, std::size_t start, Int remaining) -> void {
    if (remaining == 0) {
      if (static_cast<Int>(out.size()) >= cap) {
        throw ResourceError("more than " + std::to_string(cap) +
                            " candidate configurations; raise the cap");
      }
      out.push_back(CuspConfiguration{current});
      return;
    }
    if (static_cast<Int>(current.size()) >= max_cusps) return;
    const Int slots = max_cusps - static_cast<Int>(current.size());
    for (std::size_t i = start; i < pool.size(); ++i) {
      const Int delta = pool[i].delta();
      if (delta > remaining) break;
      // Later cusps are at least as large as this one, so whatever is left
      // after it must be zero or at least delta.
      const Int rest = remaining - delta;
      if (rest > 0 && (rest < delta || slots == 1)) continue;
      current.push_back(pool[i]);
      self(self, i, remaining - delta);
      current.pop_back();
    }
  };
  recurse(recurse, 0, g);
  return out;
}

namespace {

CandidateVerdict evaluate_with(const CurveType& ct, const CuspConfiguration& cfg,
                               const PipelineOptions& options,
                               const SpectrumMultiset& infinity) {
  CandidateVerdict v;
  v.configuration = cfg;
  v.genus_ok = cfg.genus_compatible(ct);
  v.multiplicity_ok = std::all_of(
      cfg.cusps.begin(), cfg.cusps.end(),
      [&](const PuiseuxCusp& c) { return multiplicity_bound_check(ct, c); });
  if (!v.genus_ok) return v;

  bool ok = v.multiplicity_ok || !options.run_hf;
  if (options.run_hf && !(options.fast && !ok)) {
    v.hf = hf_check(ct, cfg);
    ok = ok && v.hf->verdict == Verdict::kPasses;
  }
  if (options.run_spectrum && !(options.fast && !ok)) {
    std::vector<SpectrumMultiset> local;
    local.reserve(cfg.cusps.size());
    for (const auto& c : cfg.cusps) local.push_back(cusp_spectrum(c));
    v.spectrum = semicontinuity_check(infinity, local);
    ok = ok && v.spectrum->verdict == Verdict::kPasses;
  }
  v.survives = ok;
  return v;
}

}  // namespace

CandidateVerdict evaluate_candidate(const CurveType& ct,
                                    const CuspConfiguration& cfg,
                                    const PipelineOptions& options) {
  return evaluate_with(ct, cfg, options, spectrum_at_infinity_table(ct));
}

std::vector<CandidateVerdict> run_pipeline(
    const CurveType& ct, const std::vector<CuspConfiguration>& cfgs,
    const PipelineOptions& options) {
  std::vector<CandidateVerdict> out;
  out.reserve(cfgs.size());
  const SpectrumMultiset infinity = spectrum_at_infinity_table(ct);
  for (const auto& cfg : cfgs) {
    out.push_back(evaluate_with(ct, cfg, options, infinity));
  }
  return out;
}

}  // namespace cuspidal
