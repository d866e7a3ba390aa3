#include "tgq/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace tgq {

namespace {

FpVec vectorize(const FpMat& m) {
  return FpVec(m.flat().begin(), m.flat().end());
}

FpMat matricize(const FpVec& v, std::uint32_t p, std::uint32_t n) {
  FpMat m(p, n, n);
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t c = 0; c < n; ++c) m.at(r, c) = v[static_cast<std::size_t>(r) * n + c];
  return m;
}

std::vector<const Subspace*> constrained_subspaces(const KantorFamily& fam, KernelMode mode) {
  std::vector<const Subspace*> out;
  for (const auto& m : fam.members) {
    out.push_back(&m.line);
    if (mode == KernelMode::FAndFStar) out.push_back(&m.star);
  }
  return out;
}

}  // namespace

bool preserves_family(const KantorFamily& fam, KernelMode mode, const FpMat& m) {
  for (const auto* sub : constrained_subspaces(fam, mode)) {
    for (const auto& v : sub->basis()) {
      if (!sub->contains(m.apply_row(v))) return false;
    }
  }
  return true;
}

KernelRing::KernelRing(KantorFamily fam, KernelMode mode, std::vector<FpMat> basis)
    : fam_(std::move(fam)), mode_(mode), basis_(std::move(basis)) {
  std::vector<FpVec> rows;
  rows.reserve(basis_.size());
  for (const auto& b : basis_) rows.push_back(vectorize(b));
  rows = rref_rows(fam_.p, std::move(rows));
  if (rows.size() != basis_.size()) throw std::logic_error("KernelRing: dependent basis");
  basis_.clear();
  for (const auto& r : rows) basis_.push_back(matricize(r, fam_.p, fam_.n));
  reduced_basis_ = std::move(rows);

  // Ring sanity: identity and zero are members and basis products stay inside.
  if (!contains(FpMat::identity(fam_.p, fam_.n))) throw std::logic_error("KernelRing: identity missing");
  for (const auto& a : basis_) {
    for (const auto& b : basis_) {
      if (!contains(a.mul(b))) throw std::logic_error("KernelRing: not closed under multiplication");
    }
  }
}

bool KernelRing::contains(const FpMat& m) const {
  if (m.prime() != fam_.p || m.rows() != fam_.n || m.cols() != fam_.n) return false;
  Subspace span = Subspace::span(fam_.p, fam_.n * fam_.n, reduced_basis_);
  return span.contains(vectorize(m));
}

FpMat KernelRing::element(std::uint64_t index) const {
  Fp fp(fam_.p);
  FpMat acc(fam_.p, fam_.n, fam_.n);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::uint32_t c = static_cast<std::uint32_t>(index % fam_.p);
    index /= fam_.p;
    if (c != 0) acc = acc.add(basis_[i].scale(c));
  }
  return acc;
}

std::vector<FpMat> KernelRing::elements() const {
  const std::uint64_t count = size();
  std::vector<FpMat> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(element(i));
  return out;
}

bool KernelRing::is_unit(const FpMat& m) const {
  auto inv = m.inverse();
  return inv && contains(*inv);
}

std::vector<FpMat> KernelRing::units() const {
  std::vector<FpMat> out;
  for (const auto& m : elements()) {
    if (is_unit(m)) out.push_back(m);
  }
  return out;
}

KernelRing compute_kernel(const KantorFamily& fam, KernelMode mode, Exec exec) {
  check_structure(fam);
  const std::uint32_t n = fam.n;
  const std::uint32_t p = fam.p;
  Fp fp(p);

  // Unknowns: the n^2 entries of M, row-major.  For each constrained V and
  // each basis row v of V, require the residual of v M against V to vanish.
  const auto subs = constrained_subspaces(fam, mode);
  std::vector<FpVec> rows;
#ifdef _OPENMP
#pragma omp parallel if (exec == Exec::Parallel)
#endif
  {
    std::vector<FpVec> local;
#ifdef _OPENMP
#pragma omp for schedule(static) nowait
#endif
    for (long long si = 0; si < static_cast<long long>(subs.size()); ++si) {
      const Subspace& V = *subs[si];
      for (const auto& v : V.basis()) {
        // (vM)_c = sum_a v_a M_{a,c}; residual_j(vM) is linear in M entries.
        for (std::uint32_t j = 0; j < n; ++j) {
          FpVec row(static_cast<std::size_t>(n) * n, 0);
          // contribution of (vM)_c to residual_j: delta_{c,j} minus the
          // elimination of pivot coordinates against V's basis
          for (std::uint32_t c = 0; c < n; ++c) {
            // residual_j = (vM)_j - sum_i (vM)_{piv_i} * B_i[j]
            std::uint32_t coeff = (c == j) ? 1u : 0u;
            for (const auto& b : V.basis()) {
              std::uint32_t piv = 0;
              while (piv < n && b[piv] == 0) ++piv;
              if (piv == c) coeff = fp.sub(coeff, b[j]);
            }
            if (coeff == 0) continue;
            for (std::uint32_t a = 0; a < n; ++a) {
              const std::size_t idx = static_cast<std::size_t>(a) * n + c;
              row[idx] = fp.add(row[idx], fp.mul(coeff, static_cast<std::uint32_t>(v[a])));
            }
          }
          local.push_back(std::move(row));
        }
      }
    }
#ifdef _OPENMP
#pragma omp critical(tgq_kernel_rows)
#endif
    rows.insert(rows.end(), local.begin(), local.end());
  }

  // Nullspace of the constraint matrix via rref.
  std::vector<FpVec> reduced = rref_rows(p, std::move(rows));
  const std::uint32_t dim = n * n;
  std::vector<bool> is_pivot(dim, false);
  for (const auto& r : reduced) {
    std::uint32_t piv = 0;
    while (piv < dim && r[piv] == 0) ++piv;
    if (piv < dim) is_pivot[piv] = true;
  }
  std::vector<FpMat> basis;
  for (std::uint32_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    FpVec sol(dim, 0);
    sol[free] = 1;
    for (const auto& r : reduced) {
      std::uint32_t piv = 0;
      while (piv < dim && r[piv] == 0) ++piv;
      if (piv < dim && r[free] != 0) sol[piv] = fp.neg(r[free]);
    }
    basis.push_back(matricize(sol, p, n));
  }
  return KernelRing(fam, mode, std::move(basis));
}

KernelClassification classify(const KernelRing& ring, Exec exec) {
  KernelClassification res;
  if (ring.dim() > 24) throw std::invalid_argument("classify: ring too large to enumerate");
  const auto elems = ring.elements();
  res.size = elems.size();

  struct PairBad {
    std::uint64_t i, j;
    bool commut_fail;
    bool operator<(const PairBad& o) const { return std::tie(i, j, commut_fail) < std::tie(o.i, o.j, o.commut_fail); }
  };
  const std::uint64_t count = elems.size();
  auto zero_div = scan_min<PairBad>(
      count, exec,
      [&](std::size_t i) -> std::optional<PairBad> {
        if (elems[i].is_zero()) return std::nullopt;
        for (std::uint64_t j = 0; j < count; ++j) {
          if (elems[j].is_zero()) continue;
          if (elems[i].mul(elems[j]).is_zero()) return PairBad{i, j, false};
        }
        return std::nullopt;
      },
      std::less<>());
  if (zero_div) {
    res.integral_domain = false;
    res.zero_divisor_witness = std::make_pair(elems[zero_div->i], elems[zero_div->j]);
  }

  auto commute_bad = scan_min<PairBad>(
      count, exec,
      [&](std::size_t i) -> std::optional<PairBad> {
        for (std::uint64_t j = i + 1; j < count; ++j) {
          if (elems[i].mul(elems[j]) != elems[j].mul(elems[i])) return PairBad{i, j, true};
        }
        return std::nullopt;
      },
      std::less<>());
  res.commutative = !commute_bad.has_value();

  res.unit_count = 0;
  bool all_nonzero_invertible = true;
  for (const auto& m : elems) {
    if (ring.is_unit(m)) {
      ++res.unit_count;
    } else if (!m.is_zero()) {
      all_nonzero_invertible = false;
    }
  }
  res.is_field = res.commutative && res.integral_domain && all_nonzero_invertible && res.size >= 2;

  // characteristic: additive order of the identity
  const FpMat id = FpMat::identity(ring.p(), ring.n());
  FpMat acc = id;
  res.characteristic = 1;
  while (!acc.is_zero()) {
    acc = acc.add(id);
    ++res.characteristic;
    if (res.characteristic > ring.p() + 1) throw std::logic_error("classify: runaway characteristic");
  }

  // prime field <0,1> = span of the identity
  std::uint64_t prime_count = 0;
  for (std::uint32_t c = 0; c < ring.p(); ++c) {
    if (ring.contains(id.scale(c))) ++prime_count;
  }
  res.prime_field_size = prime_count;
  return res;
}

InjectivityReport injectivity_check(const KernelRing& ring) {
  InjectivityReport rep;
  for (const auto& m : ring.elements()) {
    if (m.is_zero()) continue;
    if (m.rank() == ring.n()) continue;
    rep.all_injective = false;
    // a kernel vector: reduce the rows of [M | I] and pick a combination
    // vanishing on the left
    std::vector<FpVec> aug;
    for (std::uint32_t r = 0; r < ring.n(); ++r) {
      FpVec row(2 * ring.n(), 0);
      for (std::uint32_t c = 0; c < ring.n(); ++c) row[c] = m.at(r, c);
      row[ring.n() + r] = 1;
      aug.push_back(std::move(row));
    }
    aug = rref_rows(ring.p(), std::move(aug));
    for (const auto& row : aug) {
      bool left_zero = true;
      for (std::uint32_t c = 0; c < ring.n(); ++c) {
        if (row[c] != 0) left_zero = false;
      }
      if (left_zero) {
        rep.failures.emplace_back(m, FpVec(row.begin() + ring.n(), row.end()));
        break;
      }
    }
  }
  return rep;
}

FpMat multiplication_endo(const KantorFamily& fam, std::int64_t m) {
  return FpMat::scalar(fam.p, fam.n, m);
}

std::uint64_t unit_order(const KernelRing& ring, const FpMat& elem) {
  if (!ring.is_unit(elem)) throw std::invalid_argument("unit_order: element is not a unit");
  FpMat acc = elem;
  std::uint64_t order = 1;
  while (!acc.is_identity()) {
    acc = acc.mul(elem);
    ++order;
    if (order > ring.size() * ring.size() + 2) throw std::logic_error("unit_order: runaway order");
  }
  return order;
}

KernelElement make_element(const KernelRing& ring, FpMat m) {
  if (!ring.contains(m)) throw std::invalid_argument("make_element: matrix violates the kernel constraints");
  return KernelElement{&ring, std::move(m)};
}

namespace {
void check_same_ring(const KernelElement& a, const KernelElement& b) {
  if (a.ring != b.ring) throw std::invalid_argument("kernel elements belong to different rings");
}
}  // namespace

KernelElement ring_add(const KernelElement& a, const KernelElement& b) {
  check_same_ring(a, b);
  return KernelElement{a.ring, a.mat.add(b.mat)};
}

KernelElement ring_mul(const KernelElement& a, const KernelElement& b) {
  check_same_ring(a, b);
  return KernelElement{a.ring, a.mat.mul(b.mat)};
}

FpMat poly_eval(std::span<const std::int64_t> coeffs, const FpMat& beta) {
  FpMat acc(beta.prime(), beta.rows(), beta.cols());
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc.mul(beta).add(FpMat::scalar(beta.prime(), beta.rows(), coeffs[i]));
  }
  return acc;
}

}  // namespace tgq
