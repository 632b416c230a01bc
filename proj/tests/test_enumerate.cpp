#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cuspidal/enumerate.hpp"
#include "cuspidal/errors.hpp"

using namespace cuspidal;

namespace {

std::vector<std::pair<Int, Int>> pairs(const std::vector<PuiseuxCusp>& cs) {
  std::vector<std::pair<Int, Int>> out;
  for (const auto& c : cs) out.emplace_back(c.r(), c.s());
  return out;
}

// Every (r, s) with gcd 1, 2 <= r < s and (r-1)(s-1) = mu, by scanning r.
std::vector<std::pair<Int, Int>> brute_cusps(Int mu) {
  std::vector<std::pair<Int, Int>> out;
  for (Int r = 2; r <= mu + 1; ++r) {
    if (mu % (r - 1) != 0) continue;
    const Int s = mu / (r - 1) + 1;
    if (s > r && gcd(r, s) == 1) out.emplace_back(r, s);
  }
  return out;
}

using Key = std::vector<std::pair<Int, Int>>;

Key key_of(const CuspConfiguration& cfg) {
  Key k;
  for (const auto& c : cfg.cusps) k.emplace_back(c.r(), c.s());
  std::sort(k.begin(), k.end());
  return k;
}

// Configurations with at most two cusps by a double loop over all deltas.
std::set<Key> brute_two_cusp(Int g) {
  std::set<Key> out;
  for (const auto& rs : brute_cusps(2 * g)) out.insert({rs});
  for (Int d1 = 1; d1 < g; ++d1) {
    for (const auto& x : brute_cusps(2 * d1)) {
      for (const auto& y : brute_cusps(2 * (g - d1))) {
        Key k{x, y};
        std::sort(k.begin(), k.end());
        out.insert(k);
      }
    }
  }
  return out;
}

struct Constructed {
  CurveType ct;
  PuiseuxCusp cusp;
};

// Both families of curves known to exist, over the small parameter grid.
std::vector<Constructed> constructed_grid() {
  std::vector<Constructed> out;
  for (Int d = 3; d <= 6; ++d) {
    for (Int e = 0; e <= 3; ++e) {
      for (Int k = 0; k <= 3; ++k) {
        if (e == 0 && k == 0) continue;
        // For (e, k) = (1, 0) the first pair is (d, d - 1); cusps are unordered.
        const Int s1 = (e + 2 * k) * d - 1;
        out.push_back({make_curve_type(k * d, d, e), make_cusp(std::min(d, s1), std::max(d, s1))});
        out.push_back({make_curve_type(k * (d - 1) + 1, d - 1, e),
                       make_cusp(d - 1, (e + 2 * k) * (d - 1) + 1)});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("unicuspidal candidates") {
  using P = std::pair<Int, Int>;
  CHECK(pairs(enumerate_unicuspidal(make_curve_type(6, 6, 0))) ==
        std::vector<P>{{2, 51}, {3, 26}, {6, 11}});
  const auto c442 = pairs(enumerate_unicuspidal(make_curve_type(4, 4, 2)));
  CHECK(std::find(c442.begin(), c442.end(), P{3, 22}) != c442.end());
  CHECK(enumerate_unicuspidal(make_curve_type(1, 1, 0)).empty());
  for (Int g = 1; g <= 200; ++g) CHECK(pairs(cusps_with_delta(g)) == brute_cusps(2 * g));
}

TEST_CASE("two-cusp enumeration matches the brute-force partition") {
  for (auto [a, b, e] : std::vector<std::tuple<Int, Int, Int>>{
           {3, 3, 0}, {4, 4, 0}, {6, 6, 0}, {4, 4, 2}, {5, 3, 1}, {7, 2, 3}}) {
    const auto ct = make_curve_type(a, b, e);
    const auto cfgs = enumerate_configurations(ct, 2);
    std::set<Key> got;
    for (const auto& cfg : cfgs) got.insert(key_of(cfg));
    CHECK(got.size() == cfgs.size());
    const auto want = brute_two_cusp(ct.g());
    CHECK(got.size() == want.size());
    for (const auto& k : want) CHECK(got.count(k) == 1);
  }
}

TEST_CASE("enumerated configurations are canonical and distinct") {
  const auto ct = make_curve_type(5, 4, 1);
  const auto cfgs = enumerate_configurations(ct, 4);
  std::set<Key> seen;
  for (const auto& cfg : cfgs) {
    CHECK(cfg.total_mu() == 2 * ct.g());
    CHECK(cfg.genus_compatible(ct));
    CHECK(cfg.cusps.size() <= 4);
    CHECK(cfg.canonical().str() == cfg.str());
    CHECK(seen.insert(key_of(cfg)).second);
  }
  CHECK(cfgs.size() > 20);
  CHECK_THROWS_AS(enumerate_configurations(ct, 4, 5), ResourceError);
  CHECK_THROWS_AS(enumerate_configurations(ct, 0), DomainError);
}

TEST_CASE("pipeline on (6,6,0)") {
  const auto ct = make_curve_type(6, 6, 0);
  std::vector<CuspConfiguration> cfgs;
  for (const auto& c : enumerate_unicuspidal(ct)) cfgs.push_back({{c}});
  const auto verdicts = run_pipeline(ct, cfgs);
  REQUIRE(verdicts.size() == 3);
  CHECK_FALSE(verdicts[0].survives);
  REQUIRE(verdicts[0].spectrum);
  CHECK(verdicts[0].spectrum->verdict == Verdict::kObstructed);
  CHECK(verdicts[1].survives);
  CHECK(verdicts[2].survives);

  const auto wrong = evaluate_candidate(ct, {{make_cusp(2, 3)}});
  CHECK_FALSE(wrong.genus_ok);
  CHECK_FALSE(wrong.survives);
  CHECK_FALSE(wrong.hf);
  CHECK_FALSE(wrong.spectrum);
}

TEST_CASE("fast mode and filter selection") {
  const auto ct = make_curve_type(4, 4, 2);
  const auto cfg = CuspConfiguration{{make_cusp(3, 22)}};
  const auto full = evaluate_candidate(ct, cfg);
  CHECK_FALSE(full.survives);
  REQUIRE(full.hf);
  CHECK(full.hf->verdict == Verdict::kObstructed);
  CHECK(full.spectrum);

  const auto fast = evaluate_candidate(ct, cfg, {.fast = true});
  CHECK_FALSE(fast.survives);
  CHECK_FALSE(fast.spectrum);

  const auto spectrum_only = evaluate_candidate(ct, cfg, {.run_hf = false});
  CHECK_FALSE(spectrum_only.hf);
  REQUIRE(spectrum_only.spectrum);
  CHECK(spectrum_only.survives == (spectrum_only.spectrum->verdict == Verdict::kPasses));
}

TEST_CASE("verdicts do not depend on configuration order") {
  const auto ct = make_curve_type(4, 4, 1);
  auto cfgs = enumerate_configurations(ct, 3);
  const auto forward = run_pipeline(ct, cfgs);
  std::reverse(cfgs.begin(), cfgs.end());
  const auto backward = run_pipeline(ct, cfgs);
  REQUIRE(forward.size() == backward.size());
  for (std::size_t i = 0; i < forward.size(); ++i) {
    const auto& f = forward[i];
    const auto& b = backward[backward.size() - 1 - i];
    CHECK(f.configuration.str() == b.configuration.str());
    CHECK(f.survives == b.survives);
  }
}

TEST_CASE("constructed curves are never obstructed") {
  const auto grid = constructed_grid();
  CHECK(grid.size() == 2 * 4 * 15);
  for (const auto& [ct, cusp] : grid) {
    INFO(ct.a(), " ", ct.b(), " ", ct.e(), " cusp ", cusp.str());
    const auto v = evaluate_candidate(ct, {{cusp}});
    CHECK(v.genus_ok);
    CHECK(v.survives);
  }
}
