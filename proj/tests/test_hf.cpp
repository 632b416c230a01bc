#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cuspidal/errors.hpp"
#include "cuspidal/hf.hpp"
#include "oracles/brute.hpp"

using namespace cuspidal;

TEST_CASE("P bound") {
  for (Int e = 0; e <= 5; ++e) {
    CHECK(p_bound(1, 0, e) == 2);
    CHECK(p_bound(0, 0, e) == 1);
  }
  CHECK(p_bound(2, 1, 2) == 8);
  for (Int e = 0; e <= 10; e += 2) CHECK(p_bound(1 + e / 2, 1, e) == 2 * e + 4);
  CHECK(p_bound(-3, 2, 1) == -6 + 3);
}

TEST_CASE("max P over presentations") {
  const auto c442 = make_curve_type(4, 4, 2);
  const auto best = max_p_over_presentations(c442, 20);
  REQUIRE(best);
  CHECK(best->s1 == 2);
  CHECK(best->s2 == 1);
  CHECK(best->p_value == 8);

  // (6,6,0), m + g = b + 1: (1,0) and (0,1) tie at P = 2; ties go to larger s1.
  const auto c66 = make_curve_type(6, 6, 0);
  const auto tie = max_p_over_presentations(c66, 6);
  REQUIRE(tie);
  CHECK(tie->p_value == 2);
  CHECK(tie->s1 == 1);
  CHECK(tie->s2 == 0);

  CHECK_FALSE(max_p_over_presentations(c66, 7));
  CHECK_FALSE(max_p_over_presentations(c442, 21));
  CHECK(max_p_over_presentations(make_curve_type(3, 5, 1), 17));
}

TEST_CASE("vertex method agrees with brute force over the solution line") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<Int> small(1, 9), ee(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ct = make_curve_type(small(rng), small(rng), ee(rng));
    std::uniform_int_distribution<Int> mm(-ct.g() - 3, ct.g() + 3);
    for (int j = 0; j < 5; ++j) {
      const Int n = mm(rng) + ct.g() - 1;
      const auto fast = max_p_over_presentations(ct, n);
      // k in [-1000, 1000] moves s2 by k b / c.
      const auto brute = oracle::brute_max_p(ct.b(), ct.w(), ct.e(), n,
                                             1000 * ct.b() / ct.c() + 1000);
      REQUIRE(fast.has_value() == brute.found);
      if (fast) {
        CHECK(fast->p_value == brute.p_value);
        CHECK(fast->s1 * ct.b() + fast->s2 * ct.w() == n);
        CHECK(fast->p_value == p_bound(fast->s1, fast->s2, ct.e()));
      }
    }
  }
}

TEST_CASE("HF check on the (4,4) family with a (3, 6e+10) cusp") {
  const auto c442 = make_curve_type(4, 4, 2);
  const auto report = hf_check(c442, {{make_cusp(3, 22)}});
  CHECK(report.verdict == Verdict::kObstructed);
  bool found = false;
  for (const auto& w : report.witnesses) {
    if (w.m_plus_g(c442) == 21) {
      found = true;
      CHECK(w.r_value == 7);
      CHECK(w.p_value == 8);
    }
  }
  CHECK(found);

  const auto c443 = make_curve_type(4, 4, 3);
  CHECK(hf_check(c443, {{make_cusp(3, 28)}}).verdict == Verdict::kPasses);

  const auto c66 = make_curve_type(6, 6, 0);
  CHECK(hf_check(c66, {{make_cusp(6, 11)}}).verdict == Verdict::kPasses);
  CHECK_THROWS_AS(hf_check(c66, {{make_cusp(2, 3)}}), GenusMismatch);
}

TEST_CASE("every HF witness re-checks independently") {
  const auto c66 = make_curve_type(6, 6, 0);
  const CuspConfiguration cfg{{make_cusp(7, 9), make_cusp(2, 3)}};
  const auto report = hf_check(c66, cfg);
  REQUIRE(report.verdict == Verdict::kObstructed);
  const auto brute_r7 = oracle::counting({7, 9}, 200);
  const auto brute_r2 = oracle::counting({2, 3}, 200);
  for (const auto& w : report.witnesses) {
    CHECK(w.s1 * c66.b() + w.s2 * c66.w() == w.m + c66.g() - 1);
    CHECK(w.p_value == p_bound(w.s1, w.s2, c66.e()));
    CHECK(w.r_value == oracle::composition_min({brute_r7, brute_r2}, 0, w.m + c66.g()));
    CHECK(w.r_value < w.p_value);
  }
}

TEST_CASE("multiplicity bound") {
  const auto c66 = make_curve_type(6, 6, 0);
  CHECK(multiplicity_bound_check(c66, make_cusp(6, 11)));
  CHECK_FALSE(multiplicity_bound_check(c66, make_cusp(7, 9)));
}

TEST_CASE("HF check alone rejects cusps with r > b") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<Int> small(1, 7), ee(0, 3);
  int exercised = 0;
  for (int trial = 0; trial < 400 && exercised < 60; ++trial) {
    const auto ct = make_curve_type(small(rng), small(rng), ee(rng));
    // A cusp with r > b and delta <= g, padded with (2, 2k+1) cusps.
    std::uniform_int_distribution<Int> rr(ct.b() + 1, ct.b() + 4);
    const Int r = rr(rng);
    Int s = r + 1;
    while ((r - 1) * (s - 1) / 2 <= ct.g() && gcd(r, s) != 1) ++s;
    if ((r - 1) * (s - 1) / 2 > ct.g()) continue;
    CuspConfiguration cfg{{make_cusp(r, s)}};
    const Int rest = ct.g() - cfg.total_delta();
    if (rest > 0) cfg.cusps.push_back(make_cusp(2, 2 * rest + 1));
    REQUIRE(cfg.genus_compatible(ct));
    ++exercised;

    CHECK_FALSE(multiplicity_bound_check(ct, cfg.cusps.front()));
    const auto report = hf_check(ct, cfg);
    CHECK(report.verdict == Verdict::kObstructed);
    bool at_b_plus_one = false;
    for (const auto& w : report.witnesses) {
      if (w.m_plus_g(ct) == ct.b() + 1) {
        at_b_plus_one = true;
        CHECK(w.r_value < p_bound(1, 0, ct.e()));
      }
    }
    CHECK(at_b_plus_one);
  }
  CHECK(exercised >= 30);
}

TEST_CASE("d-invariant") {
  const auto c11 = make_curve_type(1, 1, 0);
  CHECK(d_invariant(c11, {}, 0) == Rational(-1, 4));
  CHECK(d_invariant(c11, {}, -1) == Rational(1, 4));
  CHECK_THROWS_AS(d_invariant(c11, {}, 1), RangeError);
  CHECK_THROWS_AS(d_invariant(c11, {}, -2), RangeError);

  const auto c66 = make_curve_type(6, 6, 0);
  const CuspConfiguration cfg{{make_cusp(6, 11)}};
  CHECK(d_invariant(c66, cfg, 25) == Rational(-103, 72));

  const auto r = curve_r_function(c66, cfg);
  const Int d = c66.d();
  for (Int m = -d / 2; m < d / 2; ++m) {
    const Rational dinv = d_invariant(c66, r, m);
    const Rational identity = Rational(4 * d) * dinv + Rational((d - 2 * m) * (d - 2 * m) - d) -
                              Rational(8 * d * (r(m + c66.g()) - m));
    CHECK(identity == Rational(0));
  }
}
