#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgq/subspace.hpp"

namespace tgq {

// Dense matrix over F_p.  Group endomorphisms act on row vectors from the
// right (v -> v * M), so composition reads left to right.
class FpMat {
 public:
  FpMat(std::uint32_t p, std::uint32_t rows, std::uint32_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static FpMat identity(std::uint32_t p, std::uint32_t n);
  static FpMat scalar(std::uint32_t p, std::uint32_t n, std::int64_t m);
  static FpMat from_rows(std::uint32_t p, const std::vector<FpVec>& rows);

  std::uint32_t prime() const { return p_; }
  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }

  std::uint32_t& at(std::uint32_t r, std::uint32_t c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  const std::vector<std::uint32_t>& flat() const { return data_; }
  FpVec row(std::uint32_t r) const;

  FpMat add(const FpMat& o) const;
  FpMat sub(const FpMat& o) const;
  FpMat mul(const FpMat& o) const;
  FpMat scale(std::uint32_t c) const;
  FpMat pow(std::uint64_t e) const;

  FpVec apply_row(const FpVec& v) const;  // v * M

  std::uint32_t rank() const;
  std::optional<FpMat> inverse() const;
  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const FpMat& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const FpMat& o) const { return !(*this == o); }
  bool operator<(const FpMat& o) const { return data_ < o.data_; }

  std::string format() const;  // rows ';'-separated, entries ','-separated

 private:
  std::uint32_t p_;
  std::uint32_t rows_;
  std::uint32_t cols_;
  std::vector<std::uint32_t> data_;
};

FpMat parse_fp_matrix(const std::string& text, std::uint32_t p);

// Image of a subspace under an endomorphism, in canonical form.
Subspace apply_endo(const FpMat& m, const Subspace& u);

}  // namespace tgq
