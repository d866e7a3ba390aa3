#include "tgq/kantor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tgq {

bool KantorFamily::operator==(const KantorFamily& o) const {
  if (p != o.p || n != o.n || members.size() != o.members.size()) return false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].line != o.members[i].line || members[i].star != o.members[i].star) return false;
  }
  return true;
}

void check_structure(const KantorFamily& fam) {
  if (!is_prime(fam.p)) throw std::invalid_argument("KantorFamily: p is not prime");
  if (fam.members.size() < 3) throw std::invalid_argument("KantorFamily: at least 3 members required");
  for (const auto& m : fam.members) {
    if (m.line.prime() != fam.p || m.line.ambient_dim() != fam.n || m.star.prime() != fam.p ||
        m.star.ambient_dim() != fam.n)
      throw std::invalid_argument("KantorFamily: member ambient mismatch");
  }
}

const KFVerdict& KFReport::axiom(int k) const {
  switch (k) {
    case 1: return kf1;
    case 2: return kf2;
    case 3: return kf3;
    default: return kf4;
  }
}

namespace {

bool witness_less(const KFWitness& a, const KFWitness& b) {
  if (a.indices != b.indices) return a.indices < b.indices;
  if (a.element.has_value() != b.element.has_value()) return b.element.has_value();
  if (a.element && b.element && *a.element != *b.element) return *a.element < *b.element;
  return a.kind < b.kind;
}

FpVec least_nonzero_element(const Subspace& s) {
  FpVec best;
  for (const auto& v : s.elements()) {
    if (is_zero(v)) continue;
    if (best.empty() || v < best) best = v;
  }
  return best;
}

FpVec least_vector_outside(const Subspace& s) {
  const std::uint64_t total = pow_u64(s.prime(), s.ambient_dim());
  for (std::uint64_t code = 0; code < total; ++code) {
    FpVec v = unpack_vec(code, s.prime(), s.ambient_dim());
    if (!s.contains(v)) return v;
  }
  return {};
}

// KF4 bookkeeping: collection id t+... = the star collection, id M = the
// member collection for A_L + A_M.
std::optional<KFWitness> check_kf4_at(const KantorFamily& fam, std::size_t L) {
  const auto& AL = fam.members[L].line;
  const std::size_t star_id = fam.members.size();
  std::map<FpVec, std::size_t> first_owner;
  std::optional<KFWitness> overlap;

  auto add_collection = [&](const Subspace& space, std::size_t owner) {
    std::set<FpVec> reps;
    for (const auto& v : space.elements()) {
      FpVec rep = AL.coset_rep(v);
      if (!is_zero(rep)) reps.insert(std::move(rep));
    }
    for (const auto& rep : reps) {
      auto [it, inserted] = first_owner.emplace(rep, owner);
      if (!inserted && it->second != owner) {
        KFWitness w{"coset-overlap", {L, std::min(it->second, owner), std::max(it->second, owner)}, rep};
        if (!overlap || witness_less(w, *overlap)) overlap = std::move(w);
      }
    }
  };

  add_collection(fam.members[L].star, star_id);
  for (std::size_t M = 0; M < fam.members.size(); ++M) {
    if (M == L) continue;
    add_collection(AL.join(fam.members[M].line), M);
  }
  if (overlap) return overlap;

  // Coverage: distinct nontrivial cosets plus the trivial one must exhaust A/A_L.
  const std::uint64_t quotient = fam.group_size() / AL.size();
  if (first_owner.size() + 1 != quotient) {
    const std::uint64_t total = fam.group_size();
    for (std::uint64_t code = 0; code < total; ++code) {
      FpVec rep = AL.coset_rep(unpack_vec(code, fam.p, fam.n));
      if (is_zero(rep) || first_owner.count(rep)) continue;
      return KFWitness{"coset-uncovered", {L}, rep};
    }
  }
  return std::nullopt;
}

}  // namespace

KFReport verify_kf(const KantorFamily& fam, Exec exec) {
  check_structure(fam);
  const std::size_t k = fam.members.size();
  KFReport rep;

  // KF1
  auto w1 = scan_min<KFWitness>(
      k, exec,
      [&](std::size_t i) -> std::optional<KFWitness> {
        const auto& m = fam.members[i];
        if (!m.star.contains(m.line)) {
          FpVec g;
          for (const auto& v : m.line.elements()) {
            if (!m.star.contains(v) && (g.empty() || v < g)) g = v;
          }
          return KFWitness{"not-contained", {i}, g};
        }
        if (m.line == m.star) return KFWitness{"star-equals-line", {i}, std::nullopt};
        return std::nullopt;
      },
      witness_less);
  rep.kf1 = {!w1.has_value(), std::move(w1)};

  // KF2 over ordered pairs i != j.
  auto w2 = scan_min<KFWitness>(
      k * k, exec,
      [&](std::size_t idx) -> std::optional<KFWitness> {
        const std::size_t i = idx / k, j = idx % k;
        if (i == j) return std::nullopt;
        Subspace join = fam.members[i].line.join(fam.members[j].star);
        if (join.is_full()) return std::nullopt;
        return KFWitness{"join-not-full", {i, j}, least_vector_outside(join)};
      },
      witness_less);
  rep.kf2 = {!w2.has_value(), std::move(w2)};

  // KF3 over unordered pairs {i, j} with any third index k.
  auto w3 = scan_min<KFWitness>(
      k * k * k, exec,
      [&](std::size_t idx) -> std::optional<KFWitness> {
        const std::size_t i = idx / (k * k), j = (idx / k) % k, kk = idx % k;
        if (i >= j || kk == i || kk == j) return std::nullopt;
        Subspace meet = fam.members[i].line.join(fam.members[j].line).meet(fam.members[kk].line);
        if (meet.is_zero()) return std::nullopt;
        return KFWitness{"meet-nontrivial", {i, j, kk}, least_nonzero_element(meet)};
      },
      witness_less);
  rep.kf3 = {!w3.has_value(), std::move(w3)};

  // KF4 per member L.
  auto w4 = scan_min<KFWitness>(
      k, exec, [&](std::size_t L) { return check_kf4_at(fam, L); }, witness_less);
  rep.kf4 = {!w4.has_value(), std::move(w4)};

  rep.s = fam.members[0].line.size();
  rep.t = fam.members.size() - 1;
  for (const auto& m : fam.members) {
    if (m.line.size() != rep.s) rep.s_uniform = false;
    if (m.star.size() != rep.s * rep.t) rep.star_uniform = false;
  }
  rep.size_consistent = rep.s_uniform && fam.group_size() == rep.s * rep.s * rep.t;
  return rep;
}

bool reverify_kf_witness(const KantorFamily& fam, int axiom, const KFWitness& w) {
  const std::size_t k = fam.members.size();
  for (auto idx : w.indices) {
    if (idx > k) return false;  // k itself is the KF4 star-collection id
  }
  switch (axiom) {
    case 1: {
      if (w.indices.size() != 1 || w.indices[0] >= k) return false;
      const auto& m = fam.members[w.indices[0]];
      if (w.kind == "star-equals-line") return m.line == m.star;
      return w.element && m.line.contains(*w.element) && !m.star.contains(*w.element);
    }
    case 2: {
      if (w.indices.size() != 2 || !w.element) return false;
      const auto [i, j] = std::pair(w.indices[0], w.indices[1]);
      if (i >= k || j >= k || i == j) return false;
      return !fam.members[i].line.join(fam.members[j].star).contains(*w.element);
    }
    case 3: {
      if (w.indices.size() != 3 || !w.element || is_zero(*w.element)) return false;
      const std::size_t i = w.indices[0], j = w.indices[1], kk = w.indices[2];
      if (i >= k || j >= k || kk >= k) return false;
      return fam.members[i].line.join(fam.members[j].line).contains(*w.element) &&
             fam.members[kk].line.contains(*w.element);
    }
    case 4: {
      if (w.indices.empty() || !w.element) return false;
      const std::size_t L = w.indices[0];
      if (L >= k) return false;
      const auto& AL = fam.members[L].line;
      FpVec rep = AL.coset_rep(*w.element);
      if (is_zero(rep)) return false;
      auto in_collection = [&](std::size_t c) {
        const Subspace space = c == k ? fam.members[L].star : AL.join(fam.members[c].line);
        return space.contains(rep);
      };
      if (w.kind == "coset-overlap") {
        if (w.indices.size() != 3) return false;
        return w.indices[1] != w.indices[2] && in_collection(w.indices[1]) && in_collection(w.indices[2]);
      }
      if (w.kind == "coset-uncovered") {
        if (fam.members[L].star.contains(rep)) return false;
        for (std::size_t M = 0; M < k; ++M) {
          if (M != L && in_collection(M)) return false;
        }
        return true;
      }
      return false;
    }
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------

ProjPoint normalize_proj(const Fq& fq, ProjPoint pt) {
  for (auto& c : pt) c %= fq.q();
  for (std::size_t i = 0; i < 3; ++i) {
    if (pt[i] != 0) {
      const std::uint64_t s = fq.inv(pt[i]);
      for (auto& c : pt) c = fq.mul(s, c);
      return pt;
    }
  }
  throw std::invalid_argument("normalize_proj: zero vector is not a projective point");
}

bool proj_collinear(const Fq& fq, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  // 3x3 determinant over F_q.
  auto m = [&](std::uint64_t x, std::uint64_t y) { return fq.mul(x, y); };
  std::uint64_t det = fq.sub(m(a[0], m(b[1], c[2])), m(a[0], m(b[2], c[1])));
  det = fq.add(det, fq.sub(m(a[1], m(b[2], c[0])), m(a[1], m(b[0], c[2]))));
  det = fq.add(det, fq.sub(m(a[2], m(b[0], c[1])), m(a[2], m(b[1], c[0]))));
  return det == 0;
}

std::vector<ProjPoint> oval_points(const OvalSpec& spec) {
  Fq fq(spec.field);
  std::vector<ProjPoint> pts;
  if (spec.kind == OvalSpec::Kind::Conic) {
    for (std::uint64_t t = 0; t < fq.q(); ++t) pts.push_back({1, t, fq.mul(t, t)});
    pts.push_back({0, 0, 1});
  } else {
    for (const auto& pt : spec.points) pts.push_back(normalize_proj(fq, pt));
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) throw std::invalid_argument("oval_points: duplicate point");
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t l = j + 1; l < pts.size(); ++l) {
        if (proj_collinear(fq, pts[i], pts[j], pts[l]))
          throw std::invalid_argument("oval_points: three collinear points");
      }
    }
  }
  if (spec.add_nucleus) {
    if (fq.p() != 2) throw std::invalid_argument("oval_points: nucleus completion needs even q");
    pts.push_back(oval_nucleus(fq, pts));
  }
  return pts;
}

namespace {

std::uint64_t proj_dot(const Fq& fq, const ProjPoint& u, const ProjPoint& x) {
  return fq.add(fq.mul(u[0], x[0]), fq.add(fq.mul(u[1], x[1]), fq.mul(u[2], x[2])));
}

std::vector<ProjPoint> all_proj_points(const Fq& fq) {
  std::vector<ProjPoint> pts;
  pts.push_back({0, 0, 1});
  for (std::uint64_t z = 0; z < fq.q(); ++z) pts.push_back({0, 1, z});
  for (std::uint64_t y = 0; y < fq.q(); ++y)
    for (std::uint64_t z = 0; z < fq.q(); ++z) pts.push_back({1, y, z});
  return pts;
}

}  // namespace

ProjPoint tangent_line_at(const Fq& fq, const std::vector<ProjPoint>& pts, std::size_t idx) {
  std::optional<ProjPoint> tangent;
  for (const auto& u : all_proj_points(fq)) {  // dual points = lines
    if (proj_dot(fq, u, pts[idx]) != 0) continue;
    std::size_t hits = 0;
    for (const auto& s : pts)
      if (proj_dot(fq, u, s) == 0) ++hits;
    if (hits == 1) {
      if (tangent) throw std::invalid_argument("tangent_line_at: ambiguous tangent");
      tangent = u;
    }
  }
  if (!tangent) throw std::invalid_argument("tangent_line_at: no tangent line at point");
  return *tangent;
}

ProjPoint oval_nucleus(const Fq& fq, const std::vector<ProjPoint>& pts) {
  // Intersect two tangents, then confirm every tangent passes through it.
  auto line_points = [&](const ProjPoint& u) {
    std::vector<ProjPoint> on;
    for (const auto& x : all_proj_points(fq))
      if (proj_dot(fq, u, x) == 0) on.push_back(x);
    return on;
  };
  const ProjPoint t0 = tangent_line_at(fq, pts, 0);
  const ProjPoint t1 = tangent_line_at(fq, pts, 1);
  std::optional<ProjPoint> nucleus;
  for (const auto& x : line_points(t0)) {
    if (proj_dot(fq, t1, x) == 0) nucleus = x;
  }
  if (!nucleus) throw std::invalid_argument("oval_nucleus: tangents do not meet");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (proj_dot(fq, tangent_line_at(fq, pts, i), *nucleus) != 0)
      throw std::invalid_argument("oval_nucleus: tangents are not concurrent");
  }
  return *nucleus;
}

Subspace fq_span(const Fq& fq, std::uint32_t ambient_fq_dim, const std::vector<ProjPoint>& vectors) {
  const std::uint32_t d = fq.d();
  const std::uint32_t n = ambient_fq_dim * d;
  const std::uint64_t x = fq.p();  // code of the generator "x" when d > 1
  std::vector<FpVec> rows;
  for (const auto& v : vectors) {
    std::uint64_t scale = 1;
    for (std::uint32_t j = 0; j < d; ++j) {
      FpVec row;
      row.reserve(n);
      for (std::uint32_t c = 0; c < ambient_fq_dim; ++c) {
        FpVec coeffs = fq.coeffs(fq.mul(scale, v[c]));
        row.insert(row.end(), coeffs.begin(), coeffs.end());
      }
      rows.push_back(std::move(row));
      scale = fq.mul(scale, x);
    }
  }
  return Subspace::span(fq.p(), n, std::move(rows));
}

namespace {

// Solve u . x = 0 for a 2-dim F_q solution space, returned as two vectors.
std::vector<ProjPoint> dual_plane_basis(const Fq& fq, const ProjPoint& u) {
  std::vector<ProjPoint> basis;
  std::size_t piv = 3;
  for (std::size_t i = 0; i < 3; ++i) {
    if (u[i] != 0) {
      piv = i;
      break;
    }
  }
  if (piv == 3) throw std::invalid_argument("dual_plane_basis: zero form");
  const std::uint64_t inv = fq.inv(u[piv]);
  for (std::size_t free = 0; free < 3; ++free) {
    if (free == piv) continue;
    ProjPoint v{0, 0, 0};
    v[free] = 1;
    v[piv] = fq.neg(fq.mul(inv, u[free]));
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

KantorFamily build_t2_oval(const OvalSpec& spec) {
  Fq fq(spec.field);
  std::vector<ProjPoint> pts = oval_points(spec);
  if (pts.size() != fq.q() + 1)
    throw std::invalid_argument("build_t2_oval: need a (q+1)-point oval, got " + std::to_string(pts.size()));
  KantorFamily fam;
  fam.p = fq.p();
  fam.n = 3 * fq.d();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const ProjPoint tangent = tangent_line_at(fq, pts, i);
    KantorMember m{fq_span(fq, 3, {pts[i]}), fq_span(fq, 3, dual_plane_basis(fq, tangent))};
    fam.members.push_back(std::move(m));
  }
  return fam;
}

std::vector<ProjPoint> secant2_point_set(const FieldSpec& field) {
  Fq fq(field);
  if (fq.p() != 2) throw std::invalid_argument("build_secant2: q must be even");
  OvalSpec conic{field, OvalSpec::Kind::Conic, {}, true};
  return oval_points(conic);  // conic ∪ nucleus, meeting every line in 0 or 2 points
}

KantorFamily build_secant2(const FieldSpec& field, std::size_t c_index) {
  Fq fq(field);
  std::vector<ProjPoint> hyperoval = secant2_point_set(field);
  if (c_index >= hyperoval.size()) throw std::invalid_argument("build_secant2: c index out of range");
  const ProjPoint c = hyperoval[c_index];
  KantorFamily fam;
  fam.p = fq.p();
  fam.n = 3 * fq.d();
  for (std::size_t i = 0; i < hyperoval.size(); ++i) {
    if (i == c_index) continue;
    KantorMember m{fq_span(fq, 3, {hyperoval[i]}), fq_span(fq, 3, {hyperoval[i], c})};
    fam.members.push_back(std::move(m));
  }
  return fam;
}

KantorFamily image_family(const KantorFamily& fam, const FpMat& m, bool waive_kernel_check) {
  if (m.prime() != fam.p || m.rows() != fam.n || m.cols() != fam.n)
    throw std::invalid_argument("image_family: dimension mismatch");
  if (!waive_kernel_check) {
    for (const auto& member : fam.members) {
      if (!member.line.contains(apply_endo(m, member.line)) || !member.star.contains(apply_endo(m, member.star)))
        throw std::invalid_argument("image_family: endomorphism is not a kernel element (pass waive to force)");
    }
  }
  KantorFamily out;
  out.p = fam.p;
  out.n = fam.n;
  for (const auto& member : fam.members) {
    out.members.push_back({apply_endo(m, member.line), apply_endo(m, member.star)});
  }
  return out;
}

}  // namespace tgq
