#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgq/matrix.hpp"

namespace tgq {

// Small exact integer matrix (row-vector convention, like FpMat).
class MatZ {
 public:
  MatZ(std::uint32_t rows, std::uint32_t cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static MatZ identity(std::uint32_t n);
  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  std::int64_t& at(std::uint32_t r, std::uint32_t c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t at(std::uint32_t r, std::uint32_t c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  MatZ mul(const MatZ& o) const;
  MatZ pow(std::uint32_t e) const;
  std::vector<std::int64_t> apply_row(const std::vector<std::int64_t>& v) const;
  std::int64_t det() const;
  MatZ adjugate() const;

  bool operator==(const MatZ& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  std::string format() const;

 private:
  std::uint32_t rows_, cols_;
  std::vector<std::int64_t> data_;
};

MatZ parse_z_matrix(const std::string& text);

// An element of the colimit of ... -> G -> G -> ... along zeta: the pair
// (g, level) modulo (g, i) ~ (zeta g, i+1).  Higher level = deeper copy in
// the flag; the level-j copy contains the level-(j-1) copy.
struct ZColimitElement {
  std::vector<std::int64_t> g;
  std::int64_t level = 0;
};

struct FpColimitElement {
  FpVec g;
  std::int64_t level = 0;
};

enum class StrictnessVerdict { Strict, Stable, Trivializing };

struct StrictnessReport {
  StrictnessVerdict verdict;
  // per level 1..depth: a witness element at that level equal to nothing one
  // level down (Strict), or empty
  std::vector<ZColimitElement> witnesses;
  std::string note;
};

std::string strictness_verdict_name(StrictnessVerdict v);

// Directed system over the lattice Z^r with an injective (det != 0) zeta.
class ZSystem {
 public:
  explicit ZSystem(MatZ zeta);

  std::uint32_t rank() const { return zeta_.rows(); }
  const MatZ& zeta() const { return zeta_; }
  std::int64_t det() const { return det_; }

  ZColimitElement zero() const { return {std::vector<std::int64_t>(rank(), 0), 0}; }
  bool equal(const ZColimitElement& a, const ZColimitElement& b) const;
  ZColimitElement add(const ZColimitElement& a, const ZColimitElement& b) const;
  ZColimitElement neg(const ZColimitElement& a) const;
  ZColimitElement alpha(const ZColimitElement& a) const;      // (g, i) -> (zeta g, i)
  ZColimitElement alpha_inv(const ZColimitElement& a) const;  // (g, i) -> (g, i+1)

  // g in image of zeta^k over Z, decided exactly via the adjugate.
  bool in_image(const std::vector<std::int64_t>& g, std::uint32_t k) const;

  StrictnessReport strictness(std::uint32_t depth) const;

  struct CommuteReport {
    bool pass = true;
    std::int64_t level = 0;
    std::optional<ZColimitElement> witness;
  };
  // phi must commute with zeta (rejected otherwise); verifies that the stable
  // extension (g, i) -> (phi g, i) restricts coherently to every level copy.
  CommuteReport verify_commuting_square(const MatZ& phi, std::uint32_t depth,
                                        const std::vector<std::vector<std::int64_t>>& samples) const;

 private:
  ZColimitElement lift(const ZColimitElement& a, std::int64_t to_level) const;
  MatZ zeta_;
  std::int64_t det_;
};

// Same machinery over a finite base F_p^n; injective zeta is bijective, so
// every chain collapses ("trivializing").
class FpSystem {
 public:
  FpSystem(std::uint32_t p, FpMat zeta);

  std::uint32_t p() const { return p_; }
  std::uint32_t rank() const { return zeta_.rows(); }
  const FpMat& zeta() const { return zeta_; }

  FpColimitElement zero() const { return {FpVec(rank(), 0), 0}; }
  bool equal(const FpColimitElement& a, const FpColimitElement& b) const;
  FpColimitElement add(const FpColimitElement& a, const FpColimitElement& b) const;
  FpColimitElement neg(const FpColimitElement& a) const;
  FpColimitElement alpha(const FpColimitElement& a) const;
  FpColimitElement alpha_inv(const FpColimitElement& a) const;

  // Level-0 representative; exists for every element since zeta is bijective.
  FpColimitElement collapse(const FpColimitElement& a) const;

  StrictnessReport strictness(std::uint32_t depth) const;

  struct CommuteReport {
    bool pass = true;
    std::int64_t level = 0;
    std::optional<FpColimitElement> witness;
  };
  CommuteReport verify_commuting_square(const FpMat& phi, std::uint32_t depth,
                                        const std::vector<FpVec>& samples) const;

 private:
  FpColimitElement lift(const FpColimitElement& a, std::int64_t to_level) const;
  std::uint32_t p_;
  FpMat zeta_;
  FpMat zeta_inv_;
};

}  // namespace tgq
