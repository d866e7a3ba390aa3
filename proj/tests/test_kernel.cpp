#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tgq/kernel.hpp"

using namespace tgq;

namespace {

KantorFamily t2_conic(std::uint64_t q) {
  OvalSpec spec;
  spec.field = field_for_order(q);
  return build_t2_oval(spec);
}

// Enumeration oracle: filter all p^(n^2) matrices by the preservation
// constraints directly, no linear solve involved.
std::set<FpMat> oracle_kernel(const KantorFamily& fam, KernelMode mode) {
  std::set<FpMat> out;
  const std::uint32_t n = fam.n;
  const std::uint64_t total = pow_u64(fam.p, n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    FpVec flat = unpack_vec(code, fam.p, n * n);
    FpMat m(fam.p, n, n);
    for (std::uint32_t r = 0; r < n; ++r)
      for (std::uint32_t c = 0; c < n; ++c) m.at(r, c) = flat[static_cast<std::size_t>(r) * n + c];
    if (preserves_family(fam, mode, m)) out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("solver matches the exhaustive oracle for q = 2 and q = 3") {
  for (std::uint64_t q : {2, 3}) {
    KantorFamily fam = t2_conic(q);
    for (KernelMode mode : {KernelMode::FAndFStar, KernelMode::FOnly}) {
      KernelRing ring = compute_kernel(fam, mode);
      std::set<FpMat> oracle = oracle_kernel(fam, mode);
      std::set<FpMat> solved;
      for (const auto& m : ring.elements()) solved.insert(m);
      CHECK(solved == oracle);
    }
  }
}

TEST_CASE("q=4 solver agrees with a sampling oracle over Mat_6(F_2)") {
  // the full 2^36 enumeration is out of reach; sample the matrix space and
  // check both directions of the characterization on what we draw
  KantorFamily fam = t2_conic(4);
  KernelRing ring = compute_kernel(fam);
  CHECK(ring.size() == 4);
  for (const auto& m : ring.elements()) CHECK(preserves_family(fam, KernelMode::FAndFStar, m));
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint32_t> bit(0, 1);
  for (int it = 0; it < 20000; ++it) {
    FpMat m(2, 6, 6);
    for (std::uint32_t r = 0; r < 6; ++r)
      for (std::uint32_t c = 0; c < 6; ++c) m.at(r, c) = bit(rng);
    CHECK(preserves_family(fam, KernelMode::FAndFStar, m) == ring.contains(m));
  }
  // closure under products of solution-space elements
  for (const auto& a : ring.elements())
    for (const auto& b : ring.elements()) CHECK(ring.contains(a.mul(b)));
}

TEST_CASE("kernel sizes across the families") {
  CHECK(compute_kernel(t2_conic(2), KernelMode::FAndFStar).size() == 2);
  CHECK(compute_kernel(t2_conic(2), KernelMode::FOnly).size() == 8);
  CHECK(compute_kernel(t2_conic(3), KernelMode::FAndFStar).size() == 3);
  CHECK(compute_kernel(t2_conic(4), KernelMode::FAndFStar).size() == 4);
  CHECK(compute_kernel(t2_conic(5), KernelMode::FAndFStar).size() == 5);
  CHECK(compute_kernel(build_secant2(field_for_order(4)), KernelMode::FAndFStar).size() == 4);
}

TEST_CASE("classification: commutative fields in the two-constraint mode") {
  struct Row {
    std::uint64_t q;
    std::uint32_t p;
  };
  for (const Row& row : {Row{2, 2}, Row{3, 3}, Row{4, 2}}) {
    KernelRing ring = compute_kernel(t2_conic(row.q));
    KernelClassification cls = classify(ring);
    CHECK(cls.size == row.q);
    CHECK(cls.commutative);
    CHECK(cls.integral_domain);
    CHECK(cls.is_field);
    CHECK(cls.characteristic == row.p);
    CHECK(cls.prime_field_size == row.p);
    CHECK(cls.unit_count == row.q - 1);
    auto ser = classify(ring, Exec::Serial);
    CHECK(ser.is_field == cls.is_field);
    CHECK(ser.unit_count == cls.unit_count);
  }
}

TEST_CASE("the one-constraint mode at q = 2 is not an integral domain") {
  KernelRing ring = compute_kernel(t2_conic(2), KernelMode::FOnly);
  CHECK(ring.size() == 8);
  KernelClassification cls = classify(ring);
  CHECK_FALSE(cls.integral_domain);
  CHECK_FALSE(cls.is_field);
  REQUIRE(cls.zero_divisor_witness.has_value());
  const auto& [a, b] = *cls.zero_divisor_witness;
  CHECK(a.mul(b).is_zero());
  CHECK_FALSE(a.is_zero());
  CHECK_FALSE(b.is_zero());
  // and it contains non-injective nonzero elements
  InjectivityReport inj = injectivity_check(ring);
  CHECK_FALSE(inj.all_injective);
  REQUIRE_FALSE(inj.failures.empty());
  const auto& [m, v] = inj.failures[0];
  CHECK_FALSE(is_zero(v));
  CHECK(is_zero(m.apply_row(v)));
}

TEST_CASE("every nonzero element is injective in the field cases") {
  for (std::uint64_t q : {2, 3, 4}) {
    KernelRing ring = compute_kernel(t2_conic(q));
    CHECK(injectivity_check(ring).all_injective);
  }
}

TEST_CASE("kernel units permute the family members setwise") {
  for (std::uint64_t q : {3, 4}) {
    KantorFamily fam = t2_conic(q);
    KernelRing ring = compute_kernel(fam);
    for (const auto& u : ring.units()) {
      std::set<Subspace> lines_before, lines_after, stars_before, stars_after;
      for (const auto& m : fam.members) {
        lines_before.insert(m.line);
        stars_before.insert(m.star);
        lines_after.insert(apply_endo(u, m.line));
        stars_after.insert(apply_endo(u, m.star));
      }
      CHECK(lines_before == lines_after);
      CHECK(stars_before == stars_after);
    }
  }
}

TEST_CASE("scalar endomorphisms and their multiplicative orders") {
  KantorFamily fam5 = t2_conic(5);
  KernelRing ring5 = compute_kernel(fam5);

  const FpMat two = multiplication_endo(fam5, 2);
  CHECK(unit_order(ring5, two) == 4);
  CHECK(two.pow(4).is_identity());

  KantorFamily fam3 = t2_conic(3);
  CHECK(multiplication_endo(fam3, 4) == FpMat::identity(3, 3));

  const FpMat zero = multiplication_endo(fam5, 5);
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(unit_order(ring5, zero), std::invalid_argument);

  // lambda^(p-1) = id for every nonzero scalar
  for (std::uint32_t p : {2u, 3u, 5u}) {
    KantorFamily fam = t2_conic(p);
    for (std::uint32_t lam = 1; lam < p; ++lam) {
      CHECK(multiplication_endo(fam, lam).pow(p - 1).is_identity());
    }
  }
}

TEST_CASE("ring element arithmetic and the integer-polynomial algebra") {
  KantorFamily fam = t2_conic(5);
  KernelRing ring = compute_kernel(fam);
  KernelElement beta = make_element(ring, multiplication_endo(fam, 2));
  KernelElement zero = make_element(ring, FpMat(5, 3, 3));
  CHECK(ring_add(beta, zero).mat == beta.mat);

  // h(x) = x^2 - 1 at beta = 2I over F_5: 4 - 1 = 3
  const std::int64_t h[] = {-1, 0, 1};
  CHECK(poly_eval(h, beta.mat) == multiplication_endo(fam, 3));

  // elements of Z[beta] commute (100 random polynomial pairs)
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> coeff(-6, 6);
  for (int it = 0; it < 100; ++it) {
    std::vector<std::int64_t> r(4), s(4);
    for (auto& c : r) c = coeff(rng);
    for (auto& c : s) c = coeff(rng);
    const FpMat rm = poly_eval(r, beta.mat);
    const FpMat sm = poly_eval(s, beta.mat);
    CHECK(rm.mul(sm) == sm.mul(rm));
  }

  // ring mismatch is rejected
  KernelRing other = compute_kernel(t2_conic(5), KernelMode::FOnly);
  KernelElement foreign = make_element(other, multiplication_endo(fam, 1));
  CHECK_THROWS_AS(ring_add(beta, foreign), std::invalid_argument);
}

TEST_CASE("membership checking guards element construction") {
  KantorFamily fam = t2_conic(2);
  KernelRing ring = compute_kernel(fam);
  FpMat outsider(2, 3, 3);
  outsider.at(0, 1) = 1;  // shears e1 toward e2: not family-preserving
  CHECK_FALSE(ring.contains(outsider));
  CHECK_THROWS_AS(make_element(ring, outsider), std::invalid_argument);
  CHECK(ring.contains(FpMat::identity(2, 3)));
}

TEST_CASE("every element maps each constrained subspace into itself") {
  for (std::uint64_t q : {2, 3, 4}) {
    KantorFamily fam = t2_conic(q);
    for (KernelMode mode : {KernelMode::FAndFStar, KernelMode::FOnly}) {
      KernelRing ring = compute_kernel(fam, mode);
      for (const auto& m : ring.elements()) CHECK(preserves_family(fam, mode, m));
    }
  }
}
