#pragma once

#include <cstdint>
#include <vector>

#include "tgq/fp.hpp"

namespace tgq {

// Row-reduced echelon form of a list of row vectors over F_p.  Zero rows are
// dropped; the result is the canonical basis of the row span.
std::vector<FpVec> rref_rows(std::uint32_t p, std::vector<FpVec> rows);

// A subspace of F_p^n, stored as its reduced row-echelon basis.  The basis is
// canonical: two subspaces are equal iff their stored matrices are identical.
class Subspace {
 public:
  Subspace(std::uint32_t p, std::uint32_t n) : p_(p), n_(n) {}

  static Subspace zero(std::uint32_t p, std::uint32_t n) { return Subspace(p, n); }
  static Subspace span(std::uint32_t p, std::uint32_t n, std::vector<FpVec> rows);
  static Subspace full(std::uint32_t p, std::uint32_t n);

  std::uint32_t prime() const { return p_; }
  std::uint32_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  std::uint64_t size() const { return pow_u64(p_, static_cast<std::uint32_t>(dim())); }
  const std::vector<FpVec>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return dim() == n_; }

  // Residual of v after elimination against the basis: zero iff v is a
  // member.  The residual vanishes on all pivot columns, which makes it the
  // lexicographically least element of the coset v + this; it doubles as the
  // canonical coset representative.
  FpVec reduce(const FpVec& v) const;
  bool contains(const FpVec& v) const { return tgq::is_zero(reduce(v)); }
  FpVec coset_rep(const FpVec& v) const { return reduce(v); }

  bool contains(const Subspace& other) const;

  Subspace meet(const Subspace& other) const;
  Subspace join(const Subspace& other) const;

  // All p^dim elements, in odometer order over the basis coefficients.
  std::vector<FpVec> elements() const;

  bool operator==(const Subspace& o) const {
    return p_ == o.p_ && n_ == o.n_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const;  // for deterministic set ordering

 private:
  void check_compatible(const Subspace& other) const;

  std::uint32_t p_;
  std::uint32_t n_;
  std::vector<FpVec> basis_;
};

}  // namespace tgq
