#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "family_mutations.hpp"
#include "tgq/kantor.hpp"

using namespace tgq;

namespace {

using ElemSet = std::set<FpVec>;

ElemSet sumset(std::uint32_t p, const ElemSet& a, const ElemSet& b) {
  Fp fp(p);
  ElemSet out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(fp.add(x, y));
  return out;
}

ElemSet group_elements(std::uint32_t p, std::uint32_t n) {
  ElemSet out;
  for (std::uint64_t c = 0; c < pow_u64(p, n); ++c) out.insert(unpack_vec(c, p, n));
  return out;
}

// Independent axiom oracle working on raw element sets: sumsets and literal
// coset enumeration, no row reduction involved.
struct BruteVerdicts {
  bool kf1 = true, kf2 = true, kf3 = true, kf4 = true;
};

BruteVerdicts brute_verify(const KantorFamily& fam) {
  Fp fp(fam.p);
  BruteVerdicts v;
  const std::size_t k = fam.members.size();
  std::vector<ElemSet> lines(k), stars(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& e : fam.members[i].line.elements()) lines[i].insert(e);
    for (const auto& e : fam.members[i].star.elements()) stars[i].insert(e);
  }
  const ElemSet whole = group_elements(fam.p, fam.n);

  for (std::size_t i = 0; i < k; ++i) {
    if (!std::includes(stars[i].begin(), stars[i].end(), lines[i].begin(), lines[i].end()) ||
        stars[i] == lines[i])
      v.kf1 = false;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && sumset(fam.p, lines[i], stars[j]) != whole) v.kf2 = false;
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        if (l == i || l == j) continue;
        ElemSet sum = sumset(fam.p, lines[i], lines[j]);
        std::size_t hits = 0;
        for (const auto& e : lines[l])
          if (sum.count(e)) ++hits;
        if (hits != 1) v.kf3 = false;  // only the zero vector may survive
      }
  // KF4 literally: pairwise-disjoint nontrivial cosets covering the quotient.
  for (std::size_t L = 0; L < k && v.kf4; ++L) {
    auto coset_of = [&](const FpVec& x) {
      ElemSet c;
      for (const auto& l : lines[L]) c.insert(fp.add(x, l));
      return c;
    };
    std::vector<ElemSet> collected;
    auto collect = [&](const ElemSet& space) {
      std::set<ElemSet> seen;
      for (const auto& x : space) {
        ElemSet c = coset_of(x);
        if (c == lines[L]) continue;  // trivial coset
        seen.insert(std::move(c));
      }
      for (auto& c : seen) collected.push_back(c);
    };
    collect(stars[L]);
    for (std::size_t M = 0; M < k; ++M) {
      if (M != L) collect(sumset(fam.p, lines[L], lines[M]));
    }
    std::set<FpVec> covered;
    std::size_t total = 0;
    for (const auto& c : collected) {
      total += c.size();
      covered.insert(c.begin(), c.end());
    }
    if (total != covered.size()) v.kf4 = false;  // overlap between collections
    covered.insert(lines[L].begin(), lines[L].end());
    if (covered != whole) v.kf4 = false;  // not a cover of A/A_L
  }
  return v;
}

KantorFamily t2_conic(std::uint64_t q) {
  OvalSpec spec;
  spec.field = field_for_order(q);
  return build_t2_oval(spec);
}

}  // namespace

TEST_CASE("t2 conic families pass all axioms with (s,t) = (q,q)") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    KantorFamily fam = t2_conic(q);
    CHECK(fam.members.size() == q + 1);
    KFReport rep = verify_kf(fam);
    CHECK(rep.all_pass());
    CHECK(rep.s == q);
    CHECK(rep.t == q);
    CHECK(rep.size_consistent);
    // serial path produces the same verdicts
    KFReport ser = verify_kf(fam, Exec::Serial);
    CHECK(ser.all_pass() == rep.all_pass());
  }
}

TEST_CASE("secant2 families pass all axioms") {
  for (std::uint64_t q : {2, 4}) {
    KantorFamily fam = build_secant2(field_for_order(q));
    CHECK(fam.members.size() == q + 1);
    KFReport rep = verify_kf(fam);
    CHECK(rep.all_pass());
    CHECK(rep.s == q);
    CHECK(rep.t == q);
  }
}

TEST_CASE("brute-force element oracle agrees on families and mutants") {
  std::vector<KantorFamily> fams{t2_conic(2), t2_conic(3), build_secant2(field_for_order(2), 1),
                                 build_secant2(field_for_order(4))};
  for (const auto& fam : fams) {
    BruteVerdicts brute = brute_verify(fam);
    KFReport rep = verify_kf(fam);
    CHECK(rep.kf1.pass == brute.kf1);
    CHECK(rep.kf2.pass == brute.kf2);
    CHECK(rep.kf3.pass == brute.kf3);
    CHECK(rep.kf4.pass == brute.kf4);
    CHECK(rep.all_pass());
    for (int axiom = 1; axiom <= 4; ++axiom) {
      KantorFamily bad = testing::mutate(fam, axiom);
      BruteVerdicts bb = brute_verify(bad);
      KFReport br = verify_kf(bad);
      CHECK(br.kf1.pass == bb.kf1);
      CHECK(br.kf2.pass == bb.kf2);
      CHECK(br.kf3.pass == bb.kf3);
      CHECK(br.kf4.pass == bb.kf4);
      CHECK_FALSE(br.axiom(axiom).pass);
    }
  }
}

TEST_CASE("t2 conic q=2 matches the hand-computed members") {
  KantorFamily fam = t2_conic(2);
  // oval order: (1,0,0), (1,1,1), (0,0,1)
  CHECK(fam.members[0].line == Subspace::span(2, 3, {{1, 0, 0}}));
  CHECK(fam.members[0].star == Subspace::span(2, 3, {{1, 0, 0}, {0, 1, 0}}));
  CHECK(fam.members[1].line == Subspace::span(2, 3, {{1, 1, 1}}));
  CHECK(fam.members[1].star == Subspace::span(2, 3, {{1, 1, 1}, {0, 1, 0}}));
  CHECK(fam.members[2].line == Subspace::span(2, 3, {{0, 0, 1}}));
  CHECK(fam.members[2].star == Subspace::span(2, 3, {{0, 0, 1}, {0, 1, 0}}));
}

TEST_CASE("kf1 mutation: star replaced by a 2-space missing the line") {
  KantorFamily bad = testing::mutate_kf1(t2_conic(2));
  KFReport rep = verify_kf(bad);
  CHECK_FALSE(rep.kf1.pass);
  REQUIRE(rep.kf1.witness.has_value());
  CHECK(rep.kf1.witness->indices == std::vector<std::size_t>{0});
  CHECK(reverify_kf_witness(bad, 1, *rep.kf1.witness));
}

TEST_CASE("witnesses re-verify for every axiom and family") {
  std::vector<KantorFamily> fams{t2_conic(2), t2_conic(3), build_secant2(field_for_order(4))};
  for (const auto& fam : fams) {
    for (int axiom = 1; axiom <= 4; ++axiom) {
      KantorFamily bad = testing::mutate(fam, axiom);
      KFReport rep = verify_kf(bad);
      REQUIRE_FALSE(rep.axiom(axiom).pass);
      REQUIRE(rep.axiom(axiom).witness.has_value());
      CHECK(reverify_kf_witness(bad, axiom, *rep.axiom(axiom).witness));
      // a witness must not re-verify against the unmutated family
      CHECK_FALSE(reverify_kf_witness(fam, axiom, *rep.axiom(axiom).witness));
    }
  }
}

TEST_CASE("kf3 witness plugs back in") {
  KantorFamily bad = testing::mutate_kf3(t2_conic(3));
  KFReport rep = verify_kf(bad);
  REQUIRE_FALSE(rep.kf3.pass);
  const auto& w = *rep.kf3.witness;
  REQUIRE(w.indices.size() == 3);
  const FpVec& g = *w.element;
  CHECK_FALSE(is_zero(g));
  CHECK(bad.members[w.indices[0]].line.join(bad.members[w.indices[1]].line).contains(g));
  CHECK(bad.members[w.indices[2]].line.contains(g));
}

TEST_CASE("conic q=3 has 4 members with the forced dimensions") {
  KantorFamily fam = t2_conic(3);
  CHECK(fam.members.size() == 4);
  for (const auto& m : fam.members) {
    CHECK(m.line.dim() == 1);
    CHECK(m.star.dim() == 2);
  }
}

TEST_CASE("explicit oval with three collinear points is rejected") {
  OvalSpec spec;
  spec.field = field_for_order(3);
  spec.kind = OvalSpec::Kind::Explicit;
  // (1,0,0), (1,1,0), (1,2,0) all lie on z = 0
  spec.points = {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(build_t2_oval(spec), std::invalid_argument);
}

TEST_CASE("secant2 q=2 with c = (1,1,1) matches the hand-expanded frame") {
  FieldSpec f2 = field_for_order(2);
  auto pts = secant2_point_set(f2);
  // conic then nucleus
  CHECK(pts == std::vector<ProjPoint>{{1, 0, 0}, {1, 1, 1}, {0, 0, 1}, {0, 1, 0}});
  KantorFamily fam = build_secant2(f2, 1);  // c = (1,1,1)
  REQUIRE(fam.members.size() == 3);
  CHECK(fam.members[0].line == Subspace::span(2, 3, {{1, 0, 0}}));
  CHECK(fam.members[0].star == Subspace::span(2, 3, {{1, 0, 0}, {1, 1, 1}}));
  CHECK(fam.members[1].line == Subspace::span(2, 3, {{0, 0, 1}}));
  CHECK(fam.members[2].line == Subspace::span(2, 3, {{0, 1, 0}}));
  CHECK(verify_kf(fam).all_pass());
}

TEST_CASE("secant2 q=4 has 5 members, stars of F_p-dimension 4") {
  KantorFamily fam = build_secant2(field_for_order(4));
  CHECK(fam.members.size() == 5);
  for (const auto& m : fam.members) {
    CHECK(m.line.dim() == 2);
    CHECK(m.star.dim() == 4);
  }
}

TEST_CASE("secant2 rejects odd q") {
  CHECK_THROWS_AS(build_secant2(field_for_order(3)), std::invalid_argument);
}

TEST_CASE("image family under the identity and zero endomorphisms") {
  KantorFamily fam = t2_conic(3);
  CHECK(image_family(fam, FpMat::identity(3, 3)) == fam);
  KantorFamily degenerate = image_family(fam, FpMat(3, 3, 3));  // zero is a kernel element
  for (const auto& m : degenerate.members) CHECK(m.line.is_zero());
  CHECK_FALSE(verify_kf(degenerate).kf1.pass);
}

TEST_CASE("image family rejects non-kernel endomorphisms unless waived") {
  KantorFamily fam = t2_conic(2);
  FpMat proj(2, 3, 3);
  proj.at(0, 0) = 1;  // kills two directions, does not preserve the members
  CHECK_THROWS_AS(image_family(fam, proj), std::invalid_argument);
  KantorFamily forced = image_family(fam, proj, /*waive_kernel_check=*/true);
  CHECK_FALSE(verify_kf(forced).all_pass());
}

TEST_CASE("kernel scalars fix the family member-wise") {
  for (std::uint64_t q : {3, 5}) {
    KantorFamily fam = t2_conic(q);
    for (std::uint32_t m = 1; m < fam.p; ++m) {
      KantorFamily image = image_family(fam, FpMat::scalar(fam.p, fam.n, m));
      CHECK(image == fam);
    }
  }
}

TEST_CASE("the alternate reading of the hyperoval family also verifies") {
  // removing a different point of the conic-plus-nucleus set is equally valid
  FieldSpec f4 = field_for_order(4);
  for (std::size_t c = 0; c < 6; ++c) {
    CHECK(verify_kf(build_secant2(f4, c)).all_pass());
  }
}

TEST_CASE("structural validation") {
  KantorFamily fam = t2_conic(2);
  fam.members.pop_back();
  CHECK_THROWS_AS(verify_kf(fam), std::invalid_argument);
}
