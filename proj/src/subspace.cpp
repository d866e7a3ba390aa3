#include "tgq/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace tgq {

std::vector<FpVec> rref_rows(std::uint32_t p, std::vector<FpVec> rows) {
  Fp fp(p);
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("rref: dimension mismatch among rows");
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] % p == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    const std::uint32_t lead_inv = fp.inv(rows[pivot_row][col]);
    for (std::size_t j = 0; j < n; ++j) rows[pivot_row][j] = fp.mul(lead_inv, rows[pivot_row][j]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row) continue;
      const std::uint32_t factor = rows[r][col] % p;
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rows[r][j] = fp.sub(rows[r][j], fp.mul(factor, rows[pivot_row][j]));
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

Subspace Subspace::span(std::uint32_t p, std::uint32_t n, std::vector<FpVec> rows) {
  for (auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("Subspace::span: dimension mismatch among rows");
    for (auto& c : r) c %= p;
  }
  Subspace s(p, n);
  s.basis_ = rref_rows(p, std::move(rows));
  return s;
}

Subspace Subspace::full(std::uint32_t p, std::uint32_t n) {
  std::vector<FpVec> rows(n, FpVec(n, 0));
  for (std::uint32_t i = 0; i < n; ++i) rows[i][i] = 1;
  return span(p, n, std::move(rows));
}

FpVec Subspace::reduce(const FpVec& v) const {
  if (v.size() != n_) throw std::invalid_argument("Subspace::reduce: dimension mismatch");
  Fp fp(p_);
  FpVec r(v);
  for (auto& c : r) c %= p_;
  for (const auto& b : basis_) {
    std::size_t piv = 0;
    while (piv < n_ && b[piv] == 0) ++piv;
    const std::uint32_t factor = r[piv];
    if (factor == 0) continue;
    for (std::size_t j = piv; j < n_; ++j) r[j] = fp.sub(r[j], fp.mul(factor, b[j]));
  }
  return r;
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other);
  for (const auto& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

void Subspace::check_compatible(const Subspace& other) const {
  if (p_ != other.p_ || n_ != other.n_) throw std::invalid_argument("Subspace: ambient mismatch");
}

Subspace Subspace::join(const Subspace& other) const {
  check_compatible(other);
  std::vector<FpVec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(p_, n_, std::move(rows));
}

// Zassenhaus: row reduce [U | U ; V | 0]; rows whose left half vanished carry
// a basis for the intersection in their right half.
Subspace Subspace::meet(const Subspace& other) const {
  check_compatible(other);
  std::vector<FpVec> block;
  block.reserve(basis_.size() + other.basis_.size());
  for (const auto& u : basis_) {
    FpVec row(2 * n_, 0);
    std::copy(u.begin(), u.end(), row.begin());
    std::copy(u.begin(), u.end(), row.begin() + n_);
    block.push_back(std::move(row));
  }
  for (const auto& v : other.basis_) {
    FpVec row(2 * n_, 0);
    std::copy(v.begin(), v.end(), row.begin());
    block.push_back(std::move(row));
  }
  block = rref_rows(p_, std::move(block));
  std::vector<FpVec> meet_rows;
  for (const auto& row : block) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n_; ++j) {
      if (row[j] != 0) {
        left_zero = false;
        break;
      }
    }
    if (left_zero) meet_rows.emplace_back(row.begin() + n_, row.end());
  }
  return span(p_, n_, std::move(meet_rows));
}

std::vector<FpVec> Subspace::elements() const {
  Fp fp(p_);
  std::vector<FpVec> out;
  const std::uint64_t count = size();
  out.reserve(count);
  const std::size_t k = basis_.size();
  std::vector<std::uint32_t> coeff(k, 0);
  for (std::uint64_t it = 0; it < count; ++it) {
    FpVec v(n_, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (coeff[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = fp.add(v[j], fp.mul(coeff[i], basis_[i][j]));
    }
    out.push_back(std::move(v));
    for (std::size_t i = k; i-- > 0;) {
      if (++coeff[i] < p_) break;
      coeff[i] = 0;
    }
  }
  return out;
}

bool Subspace::operator<(const Subspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return basis_ < o.basis_;
}

}  // namespace tgq
