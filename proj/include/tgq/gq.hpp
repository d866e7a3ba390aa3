#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tgq/cosetgeom.hpp"
#include "tgq/incidence.hpp"

namespace tgq {

struct DigonWitness {
  std::uint32_t line_a, line_b, point_a, point_b;
};

struct TriangleWitness {
  std::array<std::uint32_t, 3> points;
  std::array<std::uint32_t, 3> lines;
};

struct ProjectionWitness {
  std::uint32_t point, line;
  std::uint64_t count;  // pairs (q, M) with p I M I q I L; must be 1
};

enum class Thickness { Thick, Thin, Irregular };

struct GQReport {
  bool no_digon = true;
  bool no_triangle = true;
  bool projection_unique = true;
  std::optional<DigonWitness> digon;
  std::optional<TriangleWitness> triangle;
  std::optional<ProjectionWitness> projection;

  Thickness thickness = Thickness::Irregular;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> order;  // (s, t) when degrees are constant

  bool degrees_ok = true;  // every line >= 2 points, every point >= 2 lines

  bool axiom_i() const { return no_digon && no_triangle; }
  bool axiom_ii() const { return projection_unique; }
  bool is_thick_gq() const { return axiom_i() && axiom_ii() && thickness == Thickness::Thick; }
  bool is_gq_or_thin() const {
    return axiom_i() && axiom_ii() && degrees_ok && thickness != Thickness::Irregular;
  }
};

GQReport verify_gq(const IncidenceStructure& geom, Exec exec = Exec::Parallel);
bool reverify_gq_witness(const IncidenceStructure& geom, const GQReport& rep);

// Points collinear with every member of pts (x ~ x included).
std::vector<std::uint32_t> perp(const IncidenceStructure& geom, std::span<const std::uint32_t> pts);
std::vector<std::uint32_t> perp(const IncidenceStructure& geom, const CollinearityIndex& coll,
                                std::span<const std::uint32_t> pts);

struct Substructure {
  std::vector<std::uint32_t> points;  // sorted ambient indices
  std::vector<std::uint32_t> lines;

  bool is_whole(const IncidenceStructure& geom) const {
    return points.size() == geom.num_points() && lines.size() == geom.num_lines();
  }
};

// Restriction of the ambient incidence to a substructure; lenient (lines may
// shrink below 2 points, which the axiom checks then report).
IncidenceStructure induced_structure(const IncidenceStructure& geom, const Substructure& sub);

struct RegularPairResult {
  bool regular = false;
  std::size_t perp_size = 0;
  std::size_t perpperp_size = 0;
  Substructure grid;  // the thin ideal subGQ on success
  std::string reason;
};

// x, y must be distinct and noncollinear.  Builds {x,y}^perp ∪ {x,y}^perpperp
// with every ambient line through it; regular iff each such line meets the
// point set in exactly 2 points and the restriction is a thin structure with
// full ambient line-degree at each point.
RegularPairResult regular_pair(const IncidenceStructure& geom, std::uint32_t x, std::uint32_t y);
RegularPairResult regular_pair(const IncidenceStructure& geom, const CollinearityIndex& coll, std::uint32_t x,
                               std::uint32_t y);

struct RegularPointResult {
  bool regular = true;
  std::optional<std::uint32_t> witness;  // least noncollinear y failing
};

RegularPointResult is_regular_point(const IncidenceStructure& geom, std::uint32_t x, Exec exec = Exec::Parallel);

// Line regularity via the dual structure.
RegularPointResult is_regular_line(const IncidenceStructure& geom, std::uint32_t line, Exec exec = Exec::Parallel);

bool verify_ideal_subgq(const IncidenceStructure& geom, const Substructure& sub);

enum class ClosureClass { ThinIdeal, ThickIdeal, Whole, NotSubGQ };

struct ClosureResult {
  Substructure sub;
  ClosureClass cls;
};

// Least fixpoint of (R1) a point pulls in all ambient lines through it and
// (R2) a non-incident point-line pair in the set pulls in its projection
// point and joining line.  Seeds must be noncollinear.
ClosureResult ideal_closure(const IncidenceStructure& geom, std::uint32_t x, std::uint32_t z);

std::string closure_class_name(ClosureClass c);

struct AxisReport {
  bool fixes_concurrent_lines = true;
  bool sharply_transitive = true;
  bool line_regular = true;
  std::optional<FpVec> witness_g;
  std::string detail;

  bool pass() const { return fixes_concurrent_lines && sharply_transitive && line_regular; }
};

// Checks that the member subgroup (or `acting`, when given) realizes the
// star line of member i as an axis of symmetry, and that the line is regular.
AxisReport verify_axis_of_symmetry(const CosetGeometry& geom, std::size_t i, const Subspace* acting = nullptr,
                                   Exec exec = Exec::Parallel);

}  // namespace tgq
