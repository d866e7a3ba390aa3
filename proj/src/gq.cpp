#include "tgq/gq.hpp"

#include <algorithm>
#include <deque>
#include <array>
#include <stdexcept>

namespace tgq {

namespace {

struct LinePairFinding {
  std::uint32_t la, lb;
  bool is_digon;
  std::array<std::uint32_t, 3> pts;  // digon: 2 shared points; triangle: x, p, q
  std::uint32_t third_line = 0;

  std::array<std::uint64_t, 4> key() const { return {la, lb, pts[0], pts[1]}; }
  bool operator<(const LinePairFinding& o) const { return key() < o.key(); }
};

// Index of the joining line of two collinear points (first in line order).
std::optional<std::uint32_t> joining_line(const IncidenceStructure& geom, std::uint32_t a, std::uint32_t b) {
  for (auto l : geom.lines_of_point(a)) {
    if (geom.incident(b, l)) return l;
  }
  return std::nullopt;
}

}  // namespace

GQReport verify_gq(const IncidenceStructure& geom, Exec exec) {
  if (geom.num_points() == 0 || geom.num_lines() == 0)
    throw std::invalid_argument("verify_gq: empty structure");
  GQReport rep;
  const std::uint32_t nl = geom.num_lines();
  const std::uint32_t np = geom.num_points();
  CollinearityIndex coll(geom);

  // Digons: two lines sharing two points.
  auto digon = scan_min<LinePairFinding>(
      nl, exec,
      [&](std::size_t la) -> std::optional<LinePairFinding> {
        std::optional<LinePairFinding> best;
        const auto& pa = geom.line(static_cast<std::uint32_t>(la));
        for (std::uint32_t lb = static_cast<std::uint32_t>(la) + 1; lb < nl; ++lb) {
          const auto& pb = geom.line(lb);
          std::uint32_t shared[2];
          std::size_t cnt = 0, i = 0, j = 0;
          while (i < pa.size() && j < pb.size() && cnt < 2) {
            if (pa[i] == pb[j]) {
              shared[cnt++] = pa[i];
              ++i;
              ++j;
            } else if (pa[i] < pb[j]) {
              ++i;
            } else {
              ++j;
            }
          }
          if (cnt == 2) {
            LinePairFinding f{static_cast<std::uint32_t>(la), lb, true, {shared[0], shared[1], 0}, 0};
            if (!best || f < *best) best = f;
          }
        }
        return best;
      },
      std::less<>());
  if (digon) {
    rep.no_digon = false;
    rep.digon = DigonWitness{digon->la, digon->lb, digon->pts[0], digon->pts[1]};
  }

  // Triangles: lines meeting at x with a cross-collinear pair off x.
  auto triangle = scan_min<LinePairFinding>(
      nl, exec,
      [&](std::size_t la) -> std::optional<LinePairFinding> {
        std::optional<LinePairFinding> best;
        const auto& pa = geom.line(static_cast<std::uint32_t>(la));
        for (std::uint32_t lb = static_cast<std::uint32_t>(la) + 1; lb < nl; ++lb) {
          const auto& pb = geom.line(lb);
          std::uint32_t meet = np;
          std::size_t cnt = 0, i = 0, j = 0;
          while (i < pa.size() && j < pb.size()) {
            if (pa[i] == pb[j]) {
              if (cnt++ == 0) meet = pa[i];
              ++i;
              ++j;
            } else if (pa[i] < pb[j]) {
              ++i;
            } else {
              ++j;
            }
          }
          if (cnt != 1) continue;  // disjoint, or a digon handled above
          for (auto p : pa) {
            if (p == meet) continue;
            for (auto q : pb) {
              if (q == meet || q == p || !coll.collinear(p, q)) continue;
              auto n3 = joining_line(geom, p, q);
              if (!n3 || *n3 == la || *n3 == lb) continue;
              LinePairFinding f{static_cast<std::uint32_t>(la), lb, false, {meet, p, q}, *n3};
              if (!best || f < *best) best = f;
            }
          }
        }
        return best;
      },
      std::less<>());
  if (triangle) {
    rep.no_triangle = false;
    rep.triangle = TriangleWitness{{triangle->pts[0], triangle->pts[1], triangle->pts[2]},
                                   {triangle->la, triangle->lb, triangle->third_line}};
  }

  // Projection uniqueness: for every non-incident (p, L) exactly one chain
  // p I M I q I L.  Counts shared lines through a scratch table per point.
  struct ProjBad {
    std::uint32_t p, l;
    std::uint64_t count;
    bool operator<(const ProjBad& o) const { return std::tie(p, l) < std::tie(o.p, o.l); }
  };
  auto proj = scan_min<ProjBad>(
      np, exec,
      [&](std::size_t p) -> std::optional<ProjBad> {
        std::vector<std::uint32_t> common(np, 0);
        for (auto m : geom.lines_of_point(static_cast<std::uint32_t>(p))) {
          for (auto q : geom.line(m)) ++common[q];
        }
        std::optional<ProjBad> best;
        for (std::uint32_t l = 0; l < nl; ++l) {
          if (geom.incident(static_cast<std::uint32_t>(p), l)) continue;
          std::uint64_t total = 0;
          for (auto q : geom.line(l)) total += common[q];
          if (total != 1) {
            ProjBad bad{static_cast<std::uint32_t>(p), l, total};
            if (!best || bad < *best) best = bad;
            break;  // per-point scan is ascending in l, so first hit is least
          }
        }
        return best;
      },
      std::less<>());
  if (proj) {
    rep.projection_unique = false;
    rep.projection = ProjectionWitness{proj->p, proj->l, proj->count};
  }

  // Degrees and order.
  std::uint64_t min_line = UINT64_MAX, max_line = 0, min_deg = UINT64_MAX, max_deg = 0;
  for (std::uint32_t l = 0; l < nl; ++l) {
    min_line = std::min<std::uint64_t>(min_line, geom.line(l).size());
    max_line = std::max<std::uint64_t>(max_line, geom.line(l).size());
  }
  for (std::uint32_t p = 0; p < np; ++p) {
    min_deg = std::min<std::uint64_t>(min_deg, geom.lines_of_point(p).size());
    max_deg = std::max<std::uint64_t>(max_deg, geom.lines_of_point(p).size());
  }
  rep.degrees_ok = min_line >= 2 && min_deg >= 2;
  if (min_line == max_line && min_deg == max_deg) {
    rep.order = std::make_pair(min_line - 1, min_deg - 1);
    rep.thickness = (min_line >= 3 && min_deg >= 3) ? Thickness::Thick : Thickness::Thin;
  } else {
    rep.thickness = Thickness::Irregular;
  }
  return rep;
}

bool reverify_gq_witness(const IncidenceStructure& geom, const GQReport& rep) {
  if (rep.digon) {
    const auto& w = *rep.digon;
    if (w.line_a == w.line_b || w.point_a == w.point_b) return false;
    for (auto pt : {w.point_a, w.point_b}) {
      if (!geom.incident(pt, w.line_a) || !geom.incident(pt, w.line_b)) return false;
    }
  }
  if (rep.triangle) {
    const auto& w = *rep.triangle;
    // three distinct points pairwise joined by the three distinct lines
    if (w.points[0] == w.points[1] || w.points[1] == w.points[2] || w.points[0] == w.points[2]) return false;
    if (w.lines[0] == w.lines[1] || w.lines[1] == w.lines[2] || w.lines[0] == w.lines[2]) return false;
    if (!geom.incident(w.points[0], w.lines[0]) || !geom.incident(w.points[1], w.lines[0])) return false;
    if (!geom.incident(w.points[0], w.lines[1]) || !geom.incident(w.points[2], w.lines[1])) return false;
    if (!geom.incident(w.points[1], w.lines[2]) || !geom.incident(w.points[2], w.lines[2])) return false;
  }
  if (rep.projection) {
    const auto& w = *rep.projection;
    if (geom.incident(w.point, w.line)) return false;
    std::uint64_t total = 0;
    for (auto q : geom.line(w.line)) {
      for (auto m : geom.lines_of_point(w.point)) {
        if (geom.incident(q, m)) ++total;
      }
    }
    if (total != w.count || total == 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> perp(const IncidenceStructure& geom, const CollinearityIndex& coll,
                                std::span<const std::uint32_t> pts) {
  if (pts.empty()) throw std::invalid_argument("perp: empty point set");
  std::vector<std::uint64_t> acc(coll.words(), ~std::uint64_t{0});
  for (auto pt : pts) {
    if (pt >= geom.num_points()) throw std::invalid_argument("perp: unknown point index");
    coll.intersect_row(pt, acc);
  }
  return bits_to_indices(acc, geom.num_points());
}

std::vector<std::uint32_t> perp(const IncidenceStructure& geom, std::span<const std::uint32_t> pts) {
  CollinearityIndex coll(geom);
  return perp(geom, coll, pts);
}

IncidenceStructure induced_structure(const IncidenceStructure& geom, const Substructure& sub) {
  std::vector<std::uint32_t> point_of_ambient(geom.num_points(), geom.num_points());
  std::vector<std::string> labels;
  labels.reserve(sub.points.size());
  for (std::uint32_t i = 0; i < sub.points.size(); ++i) {
    point_of_ambient[sub.points[i]] = i;
    labels.push_back(geom.point_labels()[sub.points[i]]);
  }
  std::vector<std::string> line_labels;
  std::vector<std::vector<std::uint32_t>> lines;
  for (auto l : sub.lines) {
    std::vector<std::uint32_t> pts;
    for (auto pt : geom.line(l)) {
      if (point_of_ambient[pt] != geom.num_points()) pts.push_back(point_of_ambient[pt]);
    }
    lines.push_back(std::move(pts));
    line_labels.push_back(geom.line_labels()[l]);
  }
  return IncidenceStructure::make(std::move(labels), std::move(line_labels), std::move(lines), /*strict=*/false);
}

RegularPairResult regular_pair(const IncidenceStructure& geom, std::uint32_t x, std::uint32_t y) {
  CollinearityIndex coll(geom);
  return regular_pair(geom, coll, x, y);
}

RegularPairResult regular_pair(const IncidenceStructure& geom, const CollinearityIndex& coll, std::uint32_t x,
                               std::uint32_t y) {
  if (x == y || coll.collinear(x, y)) throw std::invalid_argument("regular_pair: points must be noncollinear");
  RegularPairResult res;
  const std::uint32_t seed[2] = {x, y};
  std::vector<std::uint32_t> hyper = perp(geom, coll, seed);
  std::vector<std::uint32_t> hyperhyper = perp(geom, coll, hyper);
  res.perp_size = hyper.size();
  res.perpperp_size = hyperhyper.size();

  std::vector<std::uint32_t> pts = hyper;
  pts.insert(pts.end(), hyperhyper.begin(), hyperhyper.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<bool> in_set(geom.num_points(), false);
  for (auto pt : pts) in_set[pt] = true;
  std::vector<std::uint32_t> lines;
  for (auto pt : pts) {
    for (auto l : geom.lines_of_point(pt)) lines.push_back(l);
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

  res.grid = Substructure{pts, lines};

  for (auto l : lines) {
    std::size_t meets = 0;
    for (auto pt : geom.line(l)) meets += in_set[pt];
    if (meets != 2) {
      res.reason = "line " + std::to_string(l) + " meets the candidate set in " + std::to_string(meets) + " points";
      return res;
    }
  }

  // Thin substructure with full ambient line-degree at every point.
  IncidenceStructure ind = induced_structure(geom, res.grid);
  for (std::uint32_t i = 0; i < ind.num_points(); ++i) {
    if (ind.lines_of_point(i).size() != geom.lines_of_point(res.grid.points[i]).size()) {
      res.reason = "point " + std::to_string(res.grid.points[i]) + " is missing ambient lines";
      return res;
    }
  }
  GQReport sub_rep = verify_gq(ind, Exec::Serial);
  if (!sub_rep.is_gq_or_thin() || sub_rep.thickness != Thickness::Thin) {
    res.reason = "candidate substructure is not a thin quadrangle";
    return res;
  }
  res.regular = true;
  return res;
}

RegularPointResult is_regular_point(const IncidenceStructure& geom, std::uint32_t x, Exec exec) {
  CollinearityIndex coll(geom);
  auto bad = scan_min<std::uint32_t>(
      geom.num_points(), exec,
      [&](std::size_t y) -> std::optional<std::uint32_t> {
        if (y == x || coll.collinear(x, static_cast<std::uint32_t>(y))) return std::nullopt;
        if (!regular_pair(geom, coll, x, static_cast<std::uint32_t>(y)).regular)
          return static_cast<std::uint32_t>(y);
        return std::nullopt;
      },
      std::less<>());
  RegularPointResult res;
  if (bad) {
    res.regular = false;
    res.witness = *bad;
  }
  return res;
}

RegularPointResult is_regular_line(const IncidenceStructure& geom, std::uint32_t line, Exec exec) {
  IncidenceStructure dual = dual_structure(geom);
  return is_regular_point(dual, line, exec);
}

bool verify_ideal_subgq(const IncidenceStructure& geom, const Substructure& sub) {
  if (sub.points.empty() || sub.lines.empty()) return false;
  for (auto pt : sub.points) {
    if (pt >= geom.num_points()) throw std::invalid_argument("verify_ideal_subgq: malformed substructure");
  }
  for (auto l : sub.lines) {
    if (l >= geom.num_lines()) throw std::invalid_argument("verify_ideal_subgq: malformed substructure");
  }
  std::vector<bool> line_in(geom.num_lines(), false);
  for (auto l : sub.lines) line_in[l] = true;
  for (auto pt : sub.points) {
    for (auto l : geom.lines_of_point(pt)) {
      if (!line_in[l]) return false;  // ideality: ambient lines through sub points must belong
    }
  }
  IncidenceStructure ind = induced_structure(geom, sub);
  GQReport rep = verify_gq(ind, Exec::Serial);
  return rep.is_gq_or_thin();
}

ClosureResult ideal_closure(const IncidenceStructure& geom, std::uint32_t x, std::uint32_t z) {
  CollinearityIndex coll(geom);
  if (x == z || coll.collinear(x, z)) throw std::invalid_argument("ideal_closure: seeds must be noncollinear");

  std::vector<bool> in_pts(geom.num_points(), false), in_lines(geom.num_lines(), false);
  std::deque<std::uint32_t> new_pts, new_lines;
  auto add_point = [&](std::uint32_t pt) {
    if (!in_pts[pt]) {
      in_pts[pt] = true;
      new_pts.push_back(pt);
    }
  };
  auto add_line = [&](std::uint32_t l) {
    if (!in_lines[l]) {
      in_lines[l] = true;
      new_lines.push_back(l);
    }
  };
  // projection of p onto non-incident L: pulls the collinear point(s) on L
  // and the joining line(s); in a verified quadrangle there is exactly one.
  auto project = [&](std::uint32_t p, std::uint32_t l) {
    for (auto q : geom.line(l)) {
      if (q == p || !coll.collinear(p, q)) continue;
      add_point(q);
      if (auto m = joining_line(geom, p, q)) add_line(*m);
    }
  };

  add_point(x);
  add_point(z);
  while (!new_pts.empty() || !new_lines.empty()) {
    if (!new_pts.empty()) {
      const std::uint32_t p = new_pts.front();
      new_pts.pop_front();
      for (auto l : geom.lines_of_point(p)) add_line(l);  // R1
      for (std::uint32_t l = 0; l < geom.num_lines(); ++l) {
        if (in_lines[l] && !geom.incident(p, l)) project(p, l);  // R2
      }
      continue;
    }
    const std::uint32_t l = new_lines.front();
    new_lines.pop_front();
    for (std::uint32_t p = 0; p < geom.num_points(); ++p) {
      if (in_pts[p] && !geom.incident(p, l)) project(p, l);  // R2
    }
  }

  ClosureResult res;
  for (std::uint32_t p = 0; p < geom.num_points(); ++p)
    if (in_pts[p]) res.sub.points.push_back(p);
  for (std::uint32_t l = 0; l < geom.num_lines(); ++l)
    if (in_lines[l]) res.sub.lines.push_back(l);

  if (res.sub.is_whole(geom)) {
    res.cls = ClosureClass::Whole;
    return res;
  }
  if (!verify_ideal_subgq(geom, res.sub)) {
    res.cls = ClosureClass::NotSubGQ;
    return res;
  }
  GQReport rep = verify_gq(induced_structure(geom, res.sub), Exec::Serial);
  res.cls = rep.thickness == Thickness::Thick ? ClosureClass::ThickIdeal : ClosureClass::ThinIdeal;
  return res;
}

std::string closure_class_name(ClosureClass c) {
  switch (c) {
    case ClosureClass::ThinIdeal: return "thin-ideal-subgq";
    case ClosureClass::ThickIdeal: return "thick-ideal-subgq";
    case ClosureClass::Whole: return "whole-geometry";
    default: return "not-a-subgq";
  }
}

AxisReport verify_axis_of_symmetry(const CosetGeometry& geom, std::size_t i, const Subspace* acting, Exec exec) {
  if (i >= geom.fam.members.size()) throw std::invalid_argument("verify_axis_of_symmetry: index out of range");
  const Subspace& group = acting ? *acting : geom.fam.members[i].line;
  if (group.prime() != geom.fam.p || group.ambient_dim() != geom.fam.n)
    throw std::invalid_argument("verify_axis_of_symmetry: acting subgroup ambient mismatch");
  AxisReport rep;
  const IncidenceStructure& inc = geom.inc;
  const std::uint32_t axis = geom.starline_index(i);

  // Lines concurrent with the axis.
  std::vector<std::uint32_t> concurrent;
  {
    std::vector<bool> seen(inc.num_lines(), false);
    for (auto pt : inc.line(axis)) {
      for (auto l : inc.lines_of_point(pt)) {
        if (!seen[l]) {
          seen[l] = true;
          concurrent.push_back(l);
        }
      }
    }
    std::sort(concurrent.begin(), concurrent.end());
  }

  const auto elems = group.elements();
  std::vector<CosetGeometry::Collineation> maps;
  maps.reserve(elems.size());
  for (const auto& g : elems) maps.push_back(geom.translation(g));

  for (std::size_t gi = 0; gi < elems.size(); ++gi) {
    const auto& c = maps[gi];
    if (!geom.is_automorphism(c)) {
      rep.fixes_concurrent_lines = false;
      rep.witness_g = elems[gi];
      rep.detail = "translation is not an automorphism";
      break;
    }
    for (auto l : concurrent) {
      if (c.line_map[l] != l) {
        rep.fixes_concurrent_lines = false;
        rep.witness_g = elems[gi];
        rep.detail = "line " + std::to_string(l) + " moved";
        break;
      }
    }
    if (!rep.fixes_concurrent_lines) break;
  }

  // Sharp transitivity on the points of every concurrent line off the axis.
  for (auto l : concurrent) {
    if (l == axis) continue;
    std::vector<std::uint32_t> off;
    for (auto pt : inc.line(l)) {
      if (!inc.incident(pt, axis)) off.push_back(pt);
    }
    if (off.empty()) continue;
    if (off.size() != elems.size()) {
      rep.sharply_transitive = false;
      rep.detail = "line " + std::to_string(l) + ": orbit size mismatch";
      break;
    }
    std::vector<std::uint32_t> orbit;
    for (const auto& c : maps) orbit.push_back(c.point_map[off[0]]);
    std::sort(orbit.begin(), orbit.end());
    if (orbit != off || std::adjacent_find(orbit.begin(), orbit.end()) != orbit.end()) {
      rep.sharply_transitive = false;
      rep.detail = "line " + std::to_string(l) + ": action is not sharply transitive";
      break;
    }
  }

  rep.line_regular = is_regular_line(inc, axis, exec).regular;
  return rep;
}

}  // namespace tgq
