#include "doctest.h"
#include "mdslab/covering.hpp"
#include "mdslab/criteria.hpp"
#include "oracles.hpp"

using namespace mdslab;
using namespace oracle;

namespace {

EvalConfig example_cfg() { return EvalConfig::ones(Field::make(11), {3, 4, 5, 6, 7}); }

Elem subset_sigma(const Field& f, std::size_t i, const Vec& S) {
  Elem acc = 0;
  for (unsigned mask = 0; mask < (1u << S.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != i) continue;
    Elem prod = 1;
    for (std::size_t j = 0; j < S.size(); ++j)
      if (mask >> j & 1) prod = f.mul(prod, S[j]);
    acc = f.add(acc, prod);
  }
  return acc;
}

}  // namespace

TEST_CASE("sigma") {
  auto f = Field::make(11);
  Vec S{3, 4, 5};
  CHECK(sigma(f, 0, S) == 1);
  CHECK(sigma(f, 0, Vec{}) == 1);
  CHECK(sigma(f, -1, S) == 0);
  CHECK(sigma(f, 4, S) == 0);
  CHECK(sigma(f, 2, S) == 3);
  CHECK(subset_sigma(f, 2, S) == 3);

  std::mt19937 rng(51);
  for (auto fld : {Field::make(11), Field::make(13), Field::make(2, 3)}) {
    for (int t = 0; t < 20; ++t) {
      Vec T = random_distinct(fld, 1 + t % 6, rng);
      Poly prod(fld, {1});
      for (Elem a : T) prod = prod * Poly(fld, {fld.neg(a), 1});
      for (std::size_t i = 0; i <= T.size(); ++i) {
        REQUIRE(sigma(fld, static_cast<int>(i), T) == subset_sigma(fld, i, T));
        Elem coeff = prod.coeff(T.size() - i);
        if (i % 2) coeff = fld.neg(coeff);
        REQUIRE(sigma(fld, static_cast<int>(i), T) == coeff);
      }
    }
  }
}

TEST_CASE("generalized Vandermonde identity") {
  auto f = Field::make(11);
  Vec S{3, 4, 5};
  auto plain = gen_vandermonde_det(f, S, {0, 1, 2});
  CHECK(plain.raw == 2);
  auto gap = gen_vandermonde_det(f, S, {0, 1, 3});
  Matrix m = Matrix::from_rows(f, {{1, 1, 1}, {3, 4, 5}, {f.pow(3, 3), f.pow(4, 3), f.pow(5, 3)}});
  CHECK(gap.raw == determinant(m));
  CHECK(gap.raw == gap.factored);
  CHECK_THROWS_AS(gen_vandermonde_det(f, S, {1, 2, 3}), PartitionViolation);
  CHECK_THROWS_AS(gen_vandermonde_det(f, S, {0, 1}), PartitionViolation);
  CHECK_THROWS_AS(gen_vandermonde_det(f, S, {0, 1, 1}), PartitionViolation);

  // Every exponent pattern containing 0 with max exponent below s + 4.
  for (auto fld : {Field::make(11), Field::make(13)}) {
    std::mt19937 rng(fld.q());
    for (std::size_t s = 1; s <= 6; ++s) {
      Vec T = random_distinct(fld, s, rng);
      for (std::size_t m = s; m <= s + 3; ++m) {
        // choose the s-1 remaining exponents from {1..m-1}, with m-1 always present
        for_each_subset(m - 1, s - 1, [&](std::span<const std::size_t> idx) {
          std::vector<std::size_t> ex{0};
          for (auto i : idx) ex.push_back(i + 1);
          auto r = gen_vandermonde_det(fld, T, ex);
          REQUIRE(r.raw == r.factored);
          return true;
        });
      }
    }
  }
}

TEST_CASE("class-2 minor factorisation") {
  // The k x k minor on exponents {0..k-2, k+1} equals the Vandermonde product
  // times sigma_1^2 - sigma_2.
  auto f = Field::make(11);
  Vec Sk{3, 5, 7};
  auto r = gen_vandermonde_det(f, Sk, {0, 1, 4});
  Elem prod = f.mul(f.mul(f.sub(5, 3), f.sub(7, 3)), f.sub(7, 5));
  Elem s1 = sigma(f, 1, Sk), s2 = sigma(f, 2, Sk);
  CHECK(r.raw == f.mul(prod, f.sub(f.mul(s1, s1), s2)));
}

TEST_CASE("vk_filter") {
  auto f = Field::make(11);
  CHECK(vk_filter(Poly::monomial(f, 3, 2), 3));
  CHECK_FALSE(vk_filter(Poly(f, {1, 2, 0, 5}), 3));
  CHECK(vk_filter(Poly::monomial(f, 1, 4), 3));
}

TEST_CASE("class 1 examples") {
  auto cfg = example_cfg();
  auto f = cfg.field;
  Poly fx(f, {7, 10, 0, 4});
  CHECK(class1_is_deep_hole(cfg, 3, 3, fx, 4));
  CHECK(class1_is_deep_hole(cfg, 3, 3, fx, 3));
  CHECK(f.mul(3, f.inv(f.sub(3, 4))) == 8);
  int deep = 0;
  for (Elem u = 0; u < 11; ++u) {
    bool verdict = class1_is_deep_hole(cfg, 3, 3, fx, u);
    deep += verdict;
    if (u != 4) {
      Elem delta = f.mul(3, f.inv(f.sub(u, 4)));
      bool in_set = delta == 0 || delta == 8 || delta == 9 || delta == 10;
      CHECK(verdict == in_set);
    }
  }
  CHECK(deep == 4);
  auto g = candidate_polynomial(f, 3, 0, 3, fx);
  CHECK(deep_hole_candidate(cfg, g, 4) == Vec{7, 10, 5, 5, 1, 4});
  CHECK_THROWS_AS(class1_is_deep_hole(cfg, 3, 0, fx, 4), BadInput);
  CHECK_THROWS_AS(class1_is_deep_hole(cfg, 3, 3, Poly(f, {0, 0, 1}), 4), BadInput);
}

TEST_CASE("forbidden sets and class 2 examples") {
  auto cfg = example_cfg();
  auto f = cfg.field;
  Poly fx(f, {2, 5, 0, 3});
  CHECK(f.sub(0, 3) == 8);
  auto fs0 = forbidden_set(cfg, 3, 2, 8);
  CHECK(fs0.L.size() == 10);
  CHECK(fs0.L.count(8) == 0);
  CHECK(fs0.admissible(f) == std::vector<Elem>{8});
  CHECK(fs0.bound == 15);
  CHECK(fs0.L.size() <= fs0.L1.size() + fs0.L2.size());
  CHECK(fs0.L1.size() + fs0.L2.size() <= 15);
  auto fs4 = forbidden_set(cfg, 3, 2, 1);
  CHECK(fs4.L.size() == 11);

  CHECK(class2_is_deep_hole(cfg, 3, 2, 8, fx, 0));
  auto g = candidate_polynomial(f, 3, 2, 8, fx);
  CHECK(g == Poly(f, {2, 5, 8, 3, 2}));
  auto u = deep_hole_candidate(cfg, g, 0);
  CHECK(u == Vec{2, 7, 4, 7, 1, 0});
  CHECK(SyndromeTable::build(esgrs(cfg, 3)).error_distance(u) == 3);
  for (Elem g2 = 0; g2 < 11; ++g2) CHECK_FALSE(class2_is_deep_hole(cfg, 3, 2, g2, fx, 4));
  CHECK_THROWS_AS(class2_is_deep_hole(cfg, 3, 0, 8, fx, 0), BadInput);
}

TEST_CASE("formal g_{k+1} = 0 specialisation matches class 1") {
  std::mt19937 rng(61);
  for (auto f : {Field::make(7), Field::make(11), Field::make(13)}) {
    for (int t = 0; t < 5; ++t) {
      auto cfg = EvalConfig::ones(f, random_distinct(f, 5 + t % 2, rng));
      for (Elem c = 0; c < f.q(); ++c) {
        auto fs = forbidden_set(cfg, 3, 0, c, true);
        for (Elem g = 1; g < f.q(); ++g) {
          Poly fx(f, {0, 0, 0, 1});
          Elem u = f.add(c, 1);  // f_k = 1 so c = u - 1
          REQUIRE(!fs.L.count(g) == class1_is_deep_hole(cfg, 3, g, fx, u));
        }
      }
    }
  }
}

TEST_CASE("mds extension test") {
  auto cfg = example_cfg();
  auto c = esgrs(cfg, 3);
  CHECK(mds_extension_deep_hole_test(c, Vec{7, 10, 5, 5, 1, 4}));
  CHECK_FALSE(mds_extension_deep_hole_test(c, c.generator().row(1)));
  CHECK_THROWS_AS(mds_extension_deep_hole_test(c, Vec{1, 2, 3}), LengthMismatch);

  // Full sweep over GF(5)^6 for S = GF(5), k = 3.
  auto f5 = Field::make(5);
  auto c5 = esgrs(EvalConfig::ones(f5, {0, 1, 2, 3, 4}), 3);
  auto t5 = SyndromeTable::build(c5);
  Vec x(6, 0);
  std::size_t deep = 0;
  while (true) {
    bool def = t5.error_distance(x) == t5.covering_radius();
    REQUIRE(mds_extension_deep_hole_test(c5, x) == def);
    deep += def;
    std::size_t i = 0;
    while (i < 6 && ++x[i] == 5) x[i++] = 0;
    if (i == 6) break;
  }
  CHECK(deep == deep_hole_count(t5));
}

TEST_CASE("criteria agree with the definition on sampled grids") {
  std::mt19937 rng(71);
  for (auto f : {Field::make(7), Field::make(11), Field::make(13)}) {
    for (std::size_t n : {5u, 6u}) {
      Vec v(n);
      std::uniform_int_distribution<Elem> nz(1, f.q() - 1), el(0, f.q() - 1);
      for (auto& x : v) x = nz(rng);
      auto cfg = EvalConfig::make(f, random_distinct(f, n, rng), v);
      auto c = esgrs(cfg, 3);
      auto t = SyndromeTable::build(c);
      for (int s = 0; s < 120; ++s) {
        Elem gkp1 = s % 2 ? 0 : nz(rng);
        Elem gkm1 = gkp1 == 0 ? nz(rng) : el(rng);
        Poly fx(f, {el(rng), el(rng), 0, el(rng)});
        Elem u = el(rng);
        auto word = deep_hole_candidate(cfg, candidate_polynomial(f, 3, gkp1, gkm1, fx), u);
        bool def = t.error_distance(word) == t.covering_radius();
        bool crit = gkp1 == 0 ? class1_is_deep_hole(cfg, 3, gkm1, fx, u)
                              : class2_is_deep_hole(cfg, 3, gkp1, gkm1, fx, u);
        REQUIRE(crit == def);
        REQUIRE(mds_extension_deep_hole_test(c, word) == def);
      }
      // Filter necessity: g' in V_k never gives a deep hole.
      for (int s = 0; s < 40; ++s) {
        Poly gp(f, {el(rng), el(rng), 0, el(rng)});
        Poly fx(f, {el(rng), el(rng), 0, el(rng)});
        REQUIRE_FALSE(vk_filter(gp, 3));
        auto word = deep_hole_candidate(cfg, gp + fx, el(rng));
        REQUIRE(t.error_distance(word) < t.covering_radius());
      }
    }
  }
}

TEST_CASE("forbidden set leaves room when q exceeds the bound") {
  std::mt19937 rng(81);
  for (auto f : {Field::make(17), Field::make(19), Field::make(2, 4)}) {
    for (int t = 0; t < 10; ++t) {
      auto cfg = EvalConfig::ones(f, random_distinct(f, 5, rng));
      std::uniform_int_distribution<Elem> nz(1, f.q() - 1), el(0, f.q() - 1);
      auto fs = forbidden_set(cfg, 3, nz(rng), el(rng));
      REQUIRE(fs.bound == 15);
      REQUIRE(f.q() > fs.bound);
      REQUIRE(!fs.admissible(f).empty());
    }
  }
}
