#include "tgq/egg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tgq {

FpMat EggRepresentation::k_matrix(std::uint64_t code) const {
  FpMat acc(p, n, n);
  for (std::uint32_t i = 0; i < e; ++i) {
    const std::uint32_t c = static_cast<std::uint32_t>(code % p);
    code /= p;
    if (c != 0) acc = acc.add(kbasis_field[i].scale(c));
  }
  return acc;
}

std::uint64_t EggRepresentation::k_code(const FpMat& m) const {
  // Solve m = sum c_i gamma^i: rref the vectorized powers with a bookkeeping
  // block [A | I], eliminate m against the reduced rows, and read the
  // combination back through the bookkeeping columns.
  Fp fp(p);
  const std::size_t width = kbasis_field[0].flat().size();
  std::vector<FpVec> aug;
  for (std::uint32_t i = 0; i < e; ++i) {
    FpVec row(width + e, 0);
    const auto& flat = kbasis_field[i].flat();
    std::copy(flat.begin(), flat.end(), row.begin());
    row[width + i] = 1;
    aug.push_back(std::move(row));
  }
  aug = rref_rows(p, std::move(aug));
  FpVec r(m.flat().begin(), m.flat().end());
  FpVec combo(e, 0);
  for (const auto& row : aug) {
    std::size_t piv = 0;
    while (piv < width && row[piv] == 0) ++piv;
    if (piv == width) throw std::logic_error("k_code: degenerate K basis");
    const std::uint32_t c = r[piv];
    if (c == 0) continue;
    for (std::size_t j = 0; j < width; ++j) r[j] = fp.sub(r[j], fp.mul(c, row[j]));
    for (std::uint32_t j = 0; j < e; ++j) combo[j] = fp.add(combo[j], fp.mul(c, row[width + j]));
  }
  if (!is_zero(r)) throw std::invalid_argument("k_code: matrix is not a K-scalar");
  std::uint64_t code = 0;
  for (std::uint32_t i = e; i-- > 0;) code = code * p + combo[i];
  return code;
}

std::uint64_t EggRepresentation::k_mul(std::uint64_t a, std::uint64_t b) const {
  return k_code(k_matrix(a).mul(k_matrix(b)));
}

std::uint64_t EggRepresentation::k_add(std::uint64_t a, std::uint64_t b) const {
  return k_code(k_matrix(a).add(k_matrix(b)));
}

std::uint64_t EggRepresentation::k_inv(std::uint64_t a) const {
  auto inv = k_matrix(a).inverse();
  if (!inv) throw std::domain_error("k_inv: zero scalar");
  return k_code(*inv);
}

std::vector<std::uint64_t> EggRepresentation::k_coordinates(const FpVec& v) const {
  // Solve v = sum_i abasis_i * kappa_i; unknowns are the e*m F_p-coefficients
  // of the kappa's over the power basis.
  std::vector<FpVec> rows;
  rows.reserve(n);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < e; ++j) rows.push_back(kbasis_field[j].apply_row(abasis[i]));
  }
  // invert the n x n system once per call (desk scale)
  FpMat sys = FpMat::from_rows(p, rows);
  auto inv = sys.inverse();
  if (!inv) throw std::logic_error("k_coordinates: basis system is singular");
  FpVec sol = inv->apply_row(v);  // row-vector convention: v = sol * sys
  std::vector<std::uint64_t> coords(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    std::uint64_t code = 0;
    for (std::uint32_t j = e; j-- > 0;) code = code * p + sol[static_cast<std::size_t>(i) * e + j];
    coords[i] = code;
  }
  return coords;
}

FpVec EggRepresentation::from_k_coordinates(const std::vector<std::uint64_t>& coords) const {
  if (coords.size() != m) throw std::invalid_argument("from_k_coordinates: wrong length");
  Fp fp(p);
  FpVec acc(n, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    const FpVec part = k_matrix(coords[i]).apply_row(abasis[i]);
    acc = fp.add(acc, part);
  }
  return acc;
}

namespace {

// K-rref over scalar codes, normalizing leading entries to 1.
std::vector<std::vector<std::uint64_t>> k_rref(const EggRepresentation& egg,
                                               std::vector<std::vector<std::uint64_t>> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    const std::uint64_t lead_inv = egg.k_inv(rows[pivot_row][col]);
    for (auto& c : rows[pivot_row]) c = egg.k_mul(lead_inv, c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      const std::uint64_t f = rows[r][col];
      for (std::size_t j = 0; j < cols; ++j) {
        // rows[r][j] -= f * rows[pivot][j]
        const std::uint64_t prod = egg.k_mul(f, rows[pivot_row][j]);
        // additive inverse: scale by p-1 in the prime field works only for
        // e = 1, so go through the matrix representation
        const FpMat diff = egg.k_matrix(rows[r][j]).sub(egg.k_matrix(prod));
        rows[r][j] = egg.k_code(diff);
      }
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::vector<std::vector<std::uint64_t>> member_k_basis(const EggRepresentation& egg, const Subspace& sub,
                                                       std::uint32_t e) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& b : sub.basis()) rows.push_back(egg.k_coordinates(b));
  auto reduced = k_rref(egg, std::move(rows));
  if (reduced.size() * e != sub.dim()) throw std::logic_error("member_k_basis: K-dimension mismatch");
  return reduced;
}

}  // namespace

EggRepresentation build_egg(const KantorFamily& fam, const KernelRing& ring) {
  KernelClassification cls = classify(ring);
  if (!cls.is_field) throw std::invalid_argument("build_egg: kernel ring is not a field");

  EggRepresentation egg;
  egg.p = fam.p;
  egg.n = fam.n;

  // e from the ring size; gamma = first ring element whose powers span K.
  std::uint32_t e = 0;
  for (std::uint64_t s = cls.size; s > 1; s /= fam.p) ++e;
  egg.e = e;
  if (egg.n % egg.e != 0)
    throw std::logic_error("build_egg: kernel degree does not divide the ambient dimension");
  egg.m = egg.n / egg.e;

  const auto elems = ring.elements();
  bool found = false;
  for (const auto& cand : elems) {
    std::vector<FpVec> rows;
    FpMat pow = FpMat::identity(fam.p, fam.n);
    std::vector<FpMat> powers;
    for (std::uint32_t i = 0; i < e; ++i) {
      rows.push_back(FpVec(pow.flat().begin(), pow.flat().end()));
      powers.push_back(pow);
      pow = pow.mul(cand);
    }
    if (rref_rows(fam.p, rows).size() == e) {
      egg.gamma = cand;
      egg.kbasis_field = powers;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("build_egg: no generator of K found");

  // Greedy K-basis of A: first vector (in lexicographic order) outside the
  // current K-span, then its K-orbit.
  Subspace span = Subspace::zero(fam.p, fam.n);
  const std::uint64_t total = fam.group_size();
  while (egg.abasis.size() < egg.m) {
    bool extended = false;
    for (std::uint64_t code = 1; code < total; ++code) {
      FpVec v = unpack_vec(code, fam.p, fam.n);
      if (span.contains(v)) continue;
      egg.abasis.push_back(v);
      std::vector<FpVec> rows = span.basis();
      for (const auto& k : egg.kbasis_field) rows.push_back(k.apply_row(v));
      span = Subspace::span(fam.p, fam.n, std::move(rows));
      extended = true;
      break;
    }
    if (!extended) throw std::logic_error("build_egg: ambient not spanned");
  }
  if (!span.is_full()) throw std::logic_error("build_egg: K-basis does not span A");

  // Invariants, then member coordinates.
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const auto& mi = fam.members[i];
    for (const auto& k : ring.basis()) {
      if (!mi.line.contains(apply_endo(k, mi.line)) || !mi.star.contains(apply_endo(k, mi.star)))
        throw std::logic_error("build_egg: member is not closed under the kernel action");
    }
    if (!mi.star.contains(mi.line)) throw std::invalid_argument("build_egg: tangent containment fails");
    for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
      if (!mi.line.meet(fam.members[j].line).is_zero())
        throw std::invalid_argument("build_egg: egg elements are not pairwise disjoint");
    }
  }
  for (const auto& member : fam.members) {
    EggMember em;
    em.line_kbasis = member_k_basis(egg, member.line, egg.e);
    em.star_kbasis = member_k_basis(egg, member.star, egg.e);
    em.kdim_line = em.line_kbasis.size();
    em.kdim_star = em.star_kbasis.size();
    egg.members.push_back(std::move(em));
  }
  return egg;
}

EggPermutationResult verify_unit_egg_permutation(const KantorFamily& fam, const KernelRing& ring,
                                                 const FpMat& unit) {
  if (!ring.is_unit(unit)) throw std::invalid_argument("verify_unit_egg_permutation: not a unit");
  EggPermutationResult res;
  res.permutation.resize(fam.members.size());
  std::map<Subspace, std::size_t> line_index;
  for (std::size_t i = 0; i < fam.members.size(); ++i) line_index.emplace(fam.members[i].line, i);
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    Subspace image = apply_endo(unit, fam.members[i].line);
    auto it = line_index.find(image);
    if (it == line_index.end()) {
      res.ok = false;
      res.identity = false;
      return res;
    }
    res.permutation[i] = it->second;
    if (it->second != i) res.identity = false;
    // the paired star must follow the same permutation
    if (apply_endo(unit, fam.members[i].star) != fam.members[it->second].star) res.ok = false;
  }
  return res;
}

}  // namespace tgq
