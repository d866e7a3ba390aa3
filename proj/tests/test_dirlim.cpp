#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tgq/dirlim_suites.hpp"

using namespace tgq;

namespace {

MatZ mat1(std::int64_t a) {
  MatZ m(1, 1);
  m.at(0, 0) = a;
  return m;
}

MatZ diag2(std::int64_t a, std::int64_t b) {
  MatZ m(2, 2);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  return m;
}

// companion matrix of x^2 - x - 1 (row-vector convention)
MatZ fib_companion() {
  MatZ m(2, 2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = 1;
  return m;
}

}  // namespace

TEST_CASE("doubling system equalities from the identification (g,i) ~ (2g,i+1)") {
  ZSystem sys(mat1(2));
  CHECK(sys.equal({{1}, 0}, {{2}, 1}));
  CHECK_FALSE(sys.equal({{1}, 0}, {{1}, 1}));
  CHECK(sys.equal({{0}, 5}, {{0}, -7}));
}

TEST_CASE("addition lifts to the common level") {
  ZSystem sys(mat1(2));
  ZColimitElement sum = sys.add({{1}, 0}, {{1}, 1});
  CHECK(sum.level == 1);
  CHECK(sum.g == std::vector<std::int64_t>{3});
  CHECK(sys.equal(sum, {{3}, 1}));
}

TEST_CASE("alpha examples") {
  ZSystem sys(mat1(2));
  ZColimitElement image = sys.alpha({{1}, 1});
  CHECK(image.g == std::vector<std::int64_t>{2});
  CHECK(image.level == 1);
  CHECK(sys.equal(image, {{1}, 0}));
  // restricted to the level-0 copy alpha is zeta itself
  CHECK(sys.equal(sys.alpha({{7}, 0}), {{14}, 0}));
}

TEST_CASE("group laws and automorphism suites pass 1000 samples on all systems") {
  ZSystem doubling(mat1(2));
  ZSystem stretched(diag2(2, 3));
  ZSystem fib(fib_companion());
  for (const ZSystem* sys : {&doubling, &stretched, &fib}) {
    auto laws = group_law_suite(*sys, 1000, 0xC0FFEE);
    CHECK(laws.pass);
    CHECK(laws.samples == 1000);
    auto alpha = alpha_suite(*sys, 1000, 0xBEEF);
    CHECK(alpha.pass);
  }
  FpSystem fin(3, parse_fp_matrix("1,1;0,1", 3));
  CHECK(group_law_suite(fin, 1000, 1).pass);
  CHECK(alpha_suite(fin, 1000, 2).pass);
}

TEST_CASE("strictness: |det| >= 2 is strict at every level with basis witnesses") {
  ZSystem sys(mat1(2));
  StrictnessReport rep = sys.strictness(5);
  CHECK(rep.verdict == StrictnessVerdict::Strict);
  REQUIRE(rep.witnesses.size() == 5);
  for (std::uint32_t j = 1; j <= 5; ++j) {
    const auto& w = rep.witnesses[j - 1];
    CHECK(w.level == j);
    CHECK(w.g == std::vector<std::int64_t>{1});
    // re-verify: no level-(j-1) element matches, i.e. w is outside im(zeta)
    CHECK_FALSE(sys.in_image(w.g, 1));
    CHECK_FALSE(sys.equal(w, {{w.g[0] / 2}, w.level - 1}));
  }
  StrictnessReport d2 = ZSystem(diag2(2, 3)).strictness(5);
  CHECK(d2.verdict == StrictnessVerdict::Strict);
  CHECK(d2.witnesses.size() == 5);
}

TEST_CASE("unimodular zeta reports stable, finite bases trivializing") {
  CHECK(ZSystem(diag2(1, 1)).strictness(5).verdict == StrictnessVerdict::Stable);
  CHECK(ZSystem(fib_companion()).strictness(5).verdict == StrictnessVerdict::Stable);

  FpSystem f32(3, parse_fp_matrix("1,1;0,1", 3));
  CHECK(f32.strictness(5).verdict == StrictnessVerdict::Trivializing);
  FpSystem f5(5, parse_fp_matrix("2", 5));
  CHECK(f5.strictness(5).verdict == StrictnessVerdict::Trivializing);
  FpSystem f23(2, parse_fp_matrix("0,1,0;0,0,1;1,0,0", 2));
  CHECK(f23.strictness(5).verdict == StrictnessVerdict::Trivializing);
}

TEST_CASE("finite base collapses to level 0") {
  FpSystem sys(3, parse_fp_matrix("1,1;0,1", 3));
  for (std::uint64_t code = 0; code < 9; ++code) {
    for (std::int64_t level : {-2, -1, 0, 1, 2, 3}) {
      FpColimitElement e{unpack_vec(code, 3, 2), level};
      FpColimitElement base = sys.collapse(e);
      CHECK(base.level == 0);
      CHECK(sys.equal(e, base));
    }
  }
}

TEST_CASE("zeta injectivity is enforced at construction") {
  CHECK_THROWS_AS(ZSystem{mat1(0)}, std::invalid_argument);
  MatZ singular(2, 2);
  singular.at(0, 0) = 2;
  singular.at(1, 0) = 4;  // rank 1
  CHECK_THROWS_AS(ZSystem{singular}, std::invalid_argument);
  CHECK_THROWS_AS(FpSystem(2, parse_fp_matrix("1,1;1,1", 2)), std::invalid_argument);
}

TEST_CASE("commuting squares: scalars, zeta itself, polynomials in zeta") {
  ZSystem fib(fib_companion());
  std::vector<std::vector<std::int64_t>> samples{{1, 0}, {0, 1}, {3, -5}};

  MatZ scalar = diag2(4, 4);
  CHECK(fib.verify_commuting_square(scalar, 6, samples).pass);
  CHECK(fib.verify_commuting_square(fib.zeta(), 6, samples).pass);

  // h(zeta) = zeta^3 - 2 zeta + 5 I
  MatZ h = fib.zeta().pow(3);
  for (std::uint32_t i = 0; i < 2; ++i) {
    for (std::uint32_t j = 0; j < 2; ++j) h.at(i, j) -= 2 * fib.zeta().at(i, j);
    h.at(i, i) += 5;
  }
  CHECK(fib.verify_commuting_square(h, 6, samples).pass);

  // a non-commuting phi is rejected outright
  MatZ skew(2, 2);
  skew.at(0, 1) = 1;
  CHECK_THROWS_AS(fib.verify_commuting_square(skew, 3, samples), std::invalid_argument);
}

TEST_CASE("randomized commuting-square suites") {
  CHECK(commuting_square_suite(ZSystem(mat1(2)), 6, 200, 99).pass);
  CHECK(commuting_square_suite(ZSystem(diag2(2, 3)), 6, 200, 100).pass);
  CHECK(commuting_square_suite(ZSystem(fib_companion()), 6, 200, 101).pass);
  CHECK(commuting_square_suite(FpSystem(5, parse_fp_matrix("2,1;0,3", 5)), 6, 200, 102).pass);
}

TEST_CASE("exact lattice membership via the adjugate") {
  ZSystem sys(diag2(2, 3));
  CHECK(sys.in_image({2, 3}, 1));
  CHECK(sys.in_image({4, 9}, 2));
  CHECK_FALSE(sys.in_image({1, 0}, 1));
  CHECK_FALSE(sys.in_image({2, 1}, 1));
  CHECK(sys.in_image({0, 0}, 3));
  // membership in im(zeta^k) agrees with the equal() definition
  CHECK(sys.equal({{2, 3}, 1}, {{1, 1}, 0}));
}
