#include "tgq/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace tgq {

FpMat FpMat::identity(std::uint32_t p, std::uint32_t n) {
  FpMat m(p, n, n);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::scalar(std::uint32_t p, std::uint32_t n, std::int64_t c) {
  Fp fp(p);
  FpMat m(p, n, n);
  const std::uint32_t r = fp.reduce_signed(c);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = r;
  return m;
}

FpMat FpMat::from_rows(std::uint32_t p, const std::vector<FpVec>& rows) {
  if (rows.empty()) throw std::invalid_argument("FpMat::from_rows: no rows");
  FpMat m(p, static_cast<std::uint32_t>(rows.size()), static_cast<std::uint32_t>(rows[0].size()));
  for (std::uint32_t r = 0; r < m.rows(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("FpMat::from_rows: ragged rows");
    for (std::uint32_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c] % p;
  }
  return m;
}

FpVec FpMat::row(std::uint32_t r) const {
  return FpVec(data_.begin() + static_cast<std::size_t>(r) * cols_,
               data_.begin() + static_cast<std::size_t>(r + 1) * cols_);
}

FpMat FpMat::add(const FpMat& o) const {
  if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("FpMat::add: shape mismatch");
  FpMat r(p_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + o.data_[i]) % p_;
  return r;
}

FpMat FpMat::sub(const FpMat& o) const {
  if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("FpMat::sub: shape mismatch");
  FpMat r(p_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + p_ - o.data_[i]) % p_;
  return r;
}

FpMat FpMat::mul(const FpMat& o) const {
  if (p_ != o.p_ || cols_ != o.rows_) throw std::invalid_argument("FpMat::mul: shape mismatch");
  FpMat r(p_, rows_, o.cols_);
  for (std::uint32_t i = 0; i < rows_; ++i) {
    for (std::uint32_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = at(i, k);
      if (a == 0) continue;
      for (std::uint32_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) = static_cast<std::uint32_t>((r.at(i, j) + a * o.at(k, j)) % p_);
      }
    }
  }
  return r;
}

FpMat FpMat::scale(std::uint32_t c) const {
  FpMat r(p_, rows_, cols_);
  c %= p_;
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * data_[i] % p_);
  return r;
}

FpMat FpMat::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("FpMat::pow: square matrix required");
  FpMat acc = identity(p_, rows_);
  FpMat base = *this;
  while (e > 0) {
    if (e & 1) acc = acc.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return acc;
}

FpVec FpMat::apply_row(const FpVec& v) const {
  if (v.size() != rows_) throw std::invalid_argument("FpMat::apply_row: dimension mismatch");
  FpVec r(cols_, 0);
  for (std::uint32_t i = 0; i < rows_; ++i) {
    const std::uint64_t a = v[i] % p_;
    if (a == 0) continue;
    for (std::uint32_t j = 0; j < cols_; ++j) {
      r[j] = static_cast<std::uint32_t>((r[j] + a * at(i, j)) % p_);
    }
  }
  return r;
}

std::uint32_t FpMat::rank() const {
  std::vector<FpVec> rows;
  rows.reserve(rows_);
  for (std::uint32_t i = 0; i < rows_; ++i) rows.push_back(row(i));
  return static_cast<std::uint32_t>(rref_rows(p_, std::move(rows)).size());
}

std::optional<FpMat> FpMat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  // Gauss-Jordan on [M | I].
  Fp fp(p_);
  const std::uint32_t n = rows_;
  std::vector<FpVec> aug(n, FpVec(2 * n, 0));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) aug[i][j] = at(i, j);
    aug[i][n + i] = 1;
  }
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t sel = col;
    while (sel < n && aug[sel][col] == 0) ++sel;
    if (sel == n) return std::nullopt;
    std::swap(aug[col], aug[sel]);
    const std::uint32_t lead_inv = fp.inv(aug[col][col]);
    for (auto& c : aug[col]) c = fp.mul(lead_inv, c);
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const std::uint32_t f = aug[r][col];
      for (std::uint32_t j = 0; j < 2 * n; ++j) aug[r][j] = fp.sub(aug[r][j], fp.mul(f, aug[col][j]));
    }
  }
  FpMat inv(p_, n, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) inv.at(i, j) = aug[i][n + j];
  return inv;
}

bool FpMat::is_zero() const {
  for (auto c : data_)
    if (c != 0) return false;
  return true;
}

bool FpMat::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(p_, rows_);
}

std::string FpMat::format() const {
  std::ostringstream os;
  for (std::uint32_t i = 0; i < rows_; ++i) {
    if (i) os << ';';
    for (std::uint32_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << at(i, j);
    }
  }
  return os.str();
}

FpMat parse_fp_matrix(const std::string& text, std::uint32_t p) {
  std::vector<FpVec> rows;
  std::string row_text;
  std::istringstream is(text);
  while (std::getline(is, row_text, ';')) rows.push_back(parse_vec(row_text, p));
  if (rows.empty()) throw std::invalid_argument("parse_fp_matrix: empty matrix");
  return FpMat::from_rows(p, rows);
}

Subspace apply_endo(const FpMat& m, const Subspace& u) {
  if (m.prime() != u.prime() || m.rows() != u.ambient_dim() || m.cols() != u.ambient_dim())
    throw std::invalid_argument("apply_endo: dimension mismatch");
  std::vector<FpVec> image;
  image.reserve(u.dim());
  for (const auto& b : u.basis()) image.push_back(m.apply_row(b));
  return Subspace::span(u.prime(), u.ambient_dim(), std::move(image));
}

}  // namespace tgq
