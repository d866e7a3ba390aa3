#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tgq/gq.hpp"

using namespace tgq;

namespace {

KantorFamily t2_conic(std::uint64_t q) {
  OvalSpec spec;
  spec.field = field_for_order(q);
  return build_t2_oval(spec);
}

// 3x3 grid: 9 points, 3 row lines + 3 column lines.
IncidenceStructure grid3() {
  std::vector<std::string> pts(9);
  for (int i = 0; i < 9; ++i) pts[i] = "g" + std::to_string(i);
  std::vector<std::vector<std::uint32_t>> lines;
  for (std::uint32_t r = 0; r < 3; ++r) lines.push_back({3 * r, 3 * r + 1, 3 * r + 2});
  for (std::uint32_t c = 0; c < 3; ++c) lines.push_back({c, c + 3, c + 6});
  return IncidenceStructure::make(std::move(pts), {}, std::move(lines));
}

// Adds one incidence that creates a triangle (x, p, q).  In a thick
// quadrangle the widened line also picks up a digon with the line joining q
// to its old projection point; both findings are reported independently.
IncidenceStructure inject_triangle(const IncidenceStructure& geom) {
  CollinearityIndex coll(geom);
  for (std::uint32_t la = 0; la < geom.num_lines(); ++la) {
    for (std::uint32_t lb = 0; lb < geom.num_lines(); ++lb) {
      if (la == lb) continue;
      std::uint32_t x = geom.num_points();
      for (auto pt : geom.line(la)) {
        if (geom.incident(pt, lb)) x = pt;
      }
      if (x == geom.num_points()) continue;
      for (auto p : geom.line(la)) {
        if (p == x) continue;
        for (auto q : geom.line(lb)) {
          if (q == x || coll.collinear(p, q)) continue;
          for (auto n : geom.lines_of_point(p)) {
            if (n == la || geom.incident(x, n) || geom.incident(q, n)) continue;
            auto lines = geom.lines();
            lines[n].push_back(q);
            return IncidenceStructure::make(geom.point_labels(), geom.line_labels(), std::move(lines),
                                            /*strict=*/false);
          }
        }
      }
    }
  }
  throw std::logic_error("inject_triangle: no injection found");
}

}  // namespace

TEST_CASE("expanded families verify as thick quadrangles of order (q,q)") {
  struct Row {
    std::uint64_t q;
    bool secant2;
    std::uint32_t count;
  };
  for (const Row& row :
       {Row{2, false, 15}, Row{3, false, 40}, Row{4, false, 85}, Row{5, false, 156}, Row{2, true, 15},
        Row{4, true, 85}}) {
    KantorFamily fam = row.secant2 ? build_secant2(field_for_order(row.q)) : t2_conic(row.q);
    CosetGeometry geom = expand(fam);
    GQReport rep = verify_gq(geom.inc);
    CHECK(rep.axiom_i());
    CHECK(rep.axiom_ii());
    CHECK(rep.thickness == Thickness::Thick);
    REQUIRE(rep.order.has_value());
    CHECK(rep.order->first == row.q);
    CHECK(rep.order->second == row.q);
    CHECK(geom.inc.num_points() == row.count);
    // counting identity (s+1)(st+1)
    const auto [s, t] = *rep.order;
    CHECK(geom.inc.num_points() == (s + 1) * (s * t + 1));
    CHECK(geom.inc.num_lines() == (t + 1) * (s * t + 1));
  }
}

TEST_CASE("serial and parallel checks produce the same report") {
  CosetGeometry geom = expand(t2_conic(3));
  GQReport a = verify_gq(geom.inc, Exec::Parallel);
  GQReport b = verify_gq(geom.inc, Exec::Serial);
  CHECK(a.axiom_i() == b.axiom_i());
  CHECK(a.order == b.order);
  IncidenceStructure bad = inject_triangle(geom.inc);
  GQReport ta = verify_gq(bad, Exec::Parallel);
  GQReport tb = verify_gq(bad, Exec::Serial);
  REQUIRE(ta.triangle.has_value());
  REQUIRE(tb.triangle.has_value());
  CHECK(ta.triangle->points == tb.triangle->points);
  CHECK(ta.triangle->lines == tb.triangle->lines);
}

TEST_CASE("3x3 grid is thin of order (2,1)") {
  GQReport rep = verify_gq(grid3());
  CHECK(rep.axiom_i());
  CHECK(rep.axiom_ii());
  CHECK(rep.thickness == Thickness::Thin);
  REQUIRE(rep.order.has_value());
  CHECK(*rep.order == std::pair<std::uint64_t, std::uint64_t>{2, 1});
}

TEST_CASE("a triangle injection fails axiom i with a re-verifiable witness") {
  CosetGeometry geom = expand(t2_conic(2));
  IncidenceStructure bad = inject_triangle(geom.inc);
  GQReport rep = verify_gq(bad);
  CHECK_FALSE(rep.no_triangle);
  REQUIRE(rep.triangle.has_value());
  CHECK(reverify_gq_witness(bad, rep));
}

TEST_CASE("a duplicated point pair fails axiom i as a digon") {
  // join two coset lines of different members at a second point
  CosetGeometry geom = expand(t2_conic(2));
  auto lines = geom.inc.lines();
  // create two lines sharing two points: append a point of line 0 to a line
  // meeting it in one point
  const std::uint32_t a = lines[0][0], b = lines[0][1];
  for (std::uint32_t l = 1; l < lines.size(); ++l) {
    if (geom.inc.incident(a, l) && !geom.inc.incident(b, l)) {
      lines[l].push_back(b);
      break;
    }
  }
  IncidenceStructure bad = IncidenceStructure::make(geom.inc.point_labels(), geom.inc.line_labels(),
                                                    std::move(lines), /*strict=*/false);
  GQReport rep = verify_gq(bad);
  CHECK_FALSE(rep.no_digon);
  REQUIRE(rep.digon.has_value());
  CHECK(reverify_gq_witness(bad, rep));
}

TEST_CASE("perp sizes in the order-(2,2) quadrangle") {
  CosetGeometry geom = expand(t2_conic(2));
  const std::uint32_t x = geom.infinity_point;
  // |x^perp| = 1 + s(t+1) = 7
  CHECK(perp(geom.inc, std::vector<std::uint32_t>{x}).size() == 7);
  // two collinear points: exactly the s+1 points of their common line
  const auto& line0 = geom.inc.line(0);
  auto common = perp(geom.inc, std::vector<std::uint32_t>{line0[0], line0[1]});
  CHECK(common == line0);
  // every point: nothing is collinear with everything in a thick quadrangle
  std::vector<std::uint32_t> all(geom.inc.num_points());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  CHECK(perp(geom.inc, all).empty());
}

TEST_CASE("regular pair outcomes across the families") {
  {  // q = 2: regular with perpperp = t+1 = 3
    CosetGeometry geom = expand(t2_conic(2));
    auto res = regular_pair(geom.inc, geom.infinity_point, 0);
    CHECK(res.regular);
    CHECK(res.perpperp_size == 3);
    CHECK(verify_ideal_subgq(geom.inc, res.grid));
  }
  {  // q = 3: antiregular point pairs, perpperp = 2
    CosetGeometry geom = expand(t2_conic(3));
    auto res = regular_pair(geom.inc, geom.infinity_point, 0);
    CHECK_FALSE(res.regular);
    CHECK(res.perpperp_size == 2);
  }
  {  // secant2 q = 4: the translation point is regular
    CosetGeometry geom = expand(build_secant2(field_for_order(4)));
    auto res = regular_pair(geom.inc, geom.infinity_point, 0);
    CHECK(res.regular);
    CHECK(res.perpperp_size == 5);
  }
}

TEST_CASE("regular_pair rejects collinear input and is symmetric") {
  CosetGeometry geom = expand(t2_conic(2));
  const auto& line0 = geom.inc.line(0);
  CHECK_THROWS_AS(regular_pair(geom.inc, line0[0], line0[1]), std::invalid_argument);
  CollinearityIndex coll(geom.inc);
  for (std::uint32_t y = 0; y < geom.inc.num_points(); ++y) {
    if (y == geom.infinity_point || coll.collinear(geom.infinity_point, y)) continue;
    CHECK(regular_pair(geom.inc, geom.infinity_point, y).regular ==
          regular_pair(geom.inc, y, geom.infinity_point).regular);
  }
}

TEST_CASE("regular points: dichotomy between the constructions") {
  {
    CosetGeometry geom = expand(build_secant2(field_for_order(4)));
    CHECK(is_regular_point(geom.inc, geom.infinity_point).regular);
  }
  {
    CosetGeometry geom = expand(t2_conic(3));
    auto res = is_regular_point(geom.inc, geom.infinity_point);
    CHECK_FALSE(res.regular);
    REQUIRE(res.witness.has_value());
    CHECK_FALSE(regular_pair(geom.inc, geom.infinity_point, *res.witness).regular);
    auto ser = is_regular_point(geom.inc, geom.infinity_point, Exec::Serial);
    CHECK(ser.witness == res.witness);
  }
  {  // q = 2: every point of the (2,2) quadrangle is regular
    CosetGeometry geom = expand(t2_conic(2));
    for (std::uint32_t x = 0; x < geom.inc.num_points(); ++x) {
      CHECK(is_regular_point(geom.inc, x).regular);
    }
  }
}

TEST_CASE("ideal substructure verdicts") {
  CosetGeometry geom = expand(t2_conic(2));
  Substructure whole;
  for (std::uint32_t p = 0; p < geom.inc.num_points(); ++p) whole.points.push_back(p);
  for (std::uint32_t l = 0; l < geom.inc.num_lines(); ++l) whole.lines.push_back(l);
  CHECK(verify_ideal_subgq(geom.inc, whole));

  // one line with its points carries too few lines through its points
  Substructure lone;
  lone.lines = {0};
  lone.points = geom.inc.line(0);
  CHECK_FALSE(verify_ideal_subgq(geom.inc, lone));
}

TEST_CASE("ideal closure classifications are frozen per family") {
  {  // even q: the closure stays inside the regular-pair grid
    CosetGeometry geom = expand(t2_conic(2));
    auto res = ideal_closure(geom.inc, geom.infinity_point, 0);
    CHECK(res.cls == ClosureClass::ThinIdeal);
    CHECK(res.sub.points.size() == 6);
    CHECK(res.sub.lines.size() == 9);
    CHECK(verify_ideal_subgq(geom.inc, res.sub));
    // it coincides with the regular-pair grid, hence equals the core
    auto pair = regular_pair(geom.inc, geom.infinity_point, 0);
    CHECK(res.sub.points == pair.grid.points);
    CHECK(res.sub.lines == pair.grid.lines);
  }
  {  // odd q: projections escape through the pairwise-distinct tangent meets
    CosetGeometry geom = expand(t2_conic(3));
    auto res = ideal_closure(geom.inc, geom.infinity_point, 0);
    CHECK(res.cls == ClosureClass::Whole);
  }
  {
    CosetGeometry geom = expand(build_secant2(field_for_order(4)));
    auto res = ideal_closure(geom.inc, geom.infinity_point, 0);
    CHECK(res.cls == ClosureClass::ThinIdeal);
    CHECK(res.sub.points.size() == 10);
    CHECK(verify_ideal_subgq(geom.inc, res.sub));
  }
}

TEST_CASE("ideal closure is idempotent and monotone from grid seeds") {
  CosetGeometry geom = expand(build_secant2(field_for_order(4)));
  auto res = ideal_closure(geom.inc, geom.infinity_point, 0);
  REQUIRE(res.cls == ClosureClass::ThinIdeal);
  // reclose from any noncollinear seed pair inside the grid: same fixpoint
  CollinearityIndex coll(geom.inc);
  for (auto x : res.sub.points) {
    for (auto z : res.sub.points) {
      if (x >= z || coll.collinear(x, z)) continue;
      auto again = ideal_closure(geom.inc, x, z);
      CHECK(again.sub.points == res.sub.points);
      CHECK(again.sub.lines == res.sub.lines);
    }
  }
  CHECK_THROWS_AS(ideal_closure(geom.inc, geom.infinity_point, geom.infinity_point), std::invalid_argument);
}

TEST_CASE("duality smoke test: dual order is (t,s)") {
  for (std::uint64_t q : {2, 3}) {
    CosetGeometry geom = expand(t2_conic(q));
    GQReport rep = verify_gq(dual_structure(geom.inc));
    CHECK(rep.axiom_i());
    CHECK(rep.axiom_ii());
    REQUIRE(rep.order.has_value());
    CHECK(*rep.order == std::pair<std::uint64_t, std::uint64_t>{q, q});
  }
  GQReport grid_dual = verify_gq(dual_structure(grid3()));
  REQUIRE(grid_dual.order.has_value());
  CHECK(*grid_dual.order == std::pair<std::uint64_t, std::uint64_t>{1, 2});
}

TEST_CASE("every line through infinity is an axis of symmetry") {
  struct Row {
    std::uint64_t q;
    bool secant2;
  };
  for (const Row& row : {Row{2, false}, Row{3, false}, Row{2, true}, Row{4, true}}) {
    KantorFamily fam = row.secant2 ? build_secant2(field_for_order(row.q)) : t2_conic(row.q);
    CosetGeometry geom = expand(fam);
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      AxisReport rep = verify_axis_of_symmetry(geom, i);
      CHECK(rep.fixes_concurrent_lines);
      CHECK(rep.sharply_transitive);
      CHECK(rep.line_regular);
    }
  }
}

TEST_CASE("a non-member subgroup fails the axis checks") {
  CosetGeometry geom = expand(t2_conic(3));
  Fp fp(3);
  const FpVec diag = fp.add(geom.fam.members[0].line.basis()[0], geom.fam.members[1].line.basis()[0]);
  Subspace fake = Subspace::span(3, 3, {diag});
  AxisReport rep = verify_axis_of_symmetry(geom, 0, &fake);
  CHECK_FALSE(rep.pass());
  const bool action_intact = rep.fixes_concurrent_lines && rep.sharply_transitive;
  CHECK_FALSE(action_intact);
}

TEST_CASE("a regular point on regular lines forces s = t with s even") {
  // finite counting cross-check, asserted on the hyperoval construction
  for (std::uint64_t q : {2, 4}) {
    CosetGeometry geom = expand(build_secant2(field_for_order(q)));
    GQReport rep = verify_gq(geom.inc);
    REQUIRE(is_regular_point(geom.inc, geom.infinity_point).regular);
    for (auto l : geom.inc.lines_of_point(geom.infinity_point)) {
      REQUIRE(is_regular_line(geom.inc, l).regular);
    }
    REQUIRE(rep.order.has_value());
    CHECK(rep.order->first == rep.order->second);
    CHECK(rep.order->first % 2 == 0);
  }
}
