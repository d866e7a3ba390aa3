#pragma once

#include <cstdint>
#include <vector>

#include "tgq/fp.hpp"

namespace tgq {

// Description of F_{p^d}.  poly is the monic irreducible modulus as an
// ascending coefficient list of length d+1 (constant term first, leading 1);
// it is empty when d == 1.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t d = 1;
  std::vector<std::uint32_t> poly;

  std::uint64_t q() const { return pow_u64(p, d); }
};

// Lexicographically least monic irreducible of degree d over F_p, where
// candidates are ordered by the packed value c0 + c1*p + ... of the
// non-leading coefficients.
std::vector<std::uint32_t> default_irreducible(std::uint32_t p, std::uint32_t d);

bool poly_is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

// Builds a validated FieldSpec; non-prime p, a reducible or non-monic modulus,
// or a degree mismatch raise std::invalid_argument.
FieldSpec make_field(std::uint32_t p, std::uint32_t d);
FieldSpec make_field(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> poly);
FieldSpec field_for_order(std::uint64_t q);  // factors q = p^d

// Arithmetic in F_{p^d}.  Elements are encoded as integers in [0, q): the
// code of the coefficient tuple (c0, ..., c_{d-1}) is sum c_i * p^i.
class Fq {
 public:
  explicit Fq(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t d() const { return spec_.d; }
  std::uint64_t q() const { return q_; }

  FpVec coeffs(std::uint64_t code) const;
  std::uint64_t code(const FpVec& coeffs) const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;  // throws std::domain_error on zero
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t frobenius(std::uint64_t a) const { return pow(a, spec_.p); }

  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 1; }

 private:
  FieldSpec spec_;
  std::uint64_t q_;
};

}  // namespace tgq
