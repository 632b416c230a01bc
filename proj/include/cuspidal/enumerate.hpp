#pragma once

#include <optional>
#include <vector>

#include "cuspidal/curve.hpp"
#include "cuspidal/hf.hpp"
#include "cuspidal/spectrum.hpp"

namespace cuspidal {

inline constexpr Int kDefaultCandidateCap = 1'000'000;

// All one-pair cusps with Milnor number 2 * delta, sorted by r.
std::vector<PuiseuxCusp> cusps_with_delta(Int delta);

// All one-pair cusps (r, s) with (r-1)(s-1) = 2g, sorted by r. Empty for g = 0.
std::vector<PuiseuxCusp> enumerate_unicuspidal(const CurveType& ct);

// All multisets of between 1 and max_cusps one-pair cusps whose delta
// invariants sum to g, each in canonical cusp order, listed in
// lexicographic order. Throws ResourceError once more than `cap`
// configurations are produced.
std::vector<CuspConfiguration> enumerate_configurations(
    const CurveType& ct, Int max_cusps, Int cap = kDefaultCandidateCap);

struct CandidateVerdict {
  CuspConfiguration configuration;
  bool genus_ok = false;
  bool multiplicity_ok = false;
  // Unset when the check was not run (genus failure, or fast mode after an
  // earlier failure).
  std::optional<HfReport> hf;
  std::optional<SemicontinuityReport> spectrum;
  bool survives = false;
};

struct PipelineOptions {
  // Stop evaluating a configuration at its first failed filter.
  bool fast = false;
  bool run_hf = true;
  bool run_spectrum = true;
};

// Filters each configuration through genus -> multiplicity bound -> HF ->
// spectrum semicontinuity. A surviving configuration is merely not
// obstructed.
std::vector<CandidateVerdict> run_pipeline(
    const CurveType& ct, const std::vector<CuspConfiguration>& cfgs,
    const PipelineOptions& options = {});

CandidateVerdict evaluate_candidate(const CurveType& ct,
                                    const CuspConfiguration& cfg,
                                    const PipelineOptions& options = {});

}  // namespace cuspidal
