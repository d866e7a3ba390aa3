#pragma once

#include <cstdint>
#include <vector>

#include "tgq/kernel.hpp"

namespace tgq {

// A as a vector space over the kernel field K, with the family members
// re-expressed as K-subspaces.  K-scalars are encoded as indices into a
// deterministic power basis {I, gamma, ..., gamma^{e-1}} of K over F_p.
struct EggMember {
  std::size_t kdim_line = 0;
  std::size_t kdim_star = 0;
  std::vector<std::vector<std::uint64_t>> line_kbasis;  // rows of K-codes, K-rref
  std::vector<std::vector<std::uint64_t>> star_kbasis;
};

struct EggRepresentation {
  std::uint32_t p = 2;
  std::uint32_t n = 0;
  std::uint32_t e = 1;  // |K| = p^e
  std::uint32_t m = 0;  // K-dimension of A, n = e * m
  FpMat gamma;          // K generator whose powers give the F_p-basis of K
  std::vector<FpMat> kbasis_field;  // {I, gamma, ..., gamma^{e-1}}
  std::vector<FpVec> abasis;        // greedy K-basis of A
  std::vector<EggMember> members;

  EggRepresentation() : gamma(2, 0, 0) {}

  // K-coordinates of an F_p vector with respect to abasis; inverse below.
  std::vector<std::uint64_t> k_coordinates(const FpVec& v) const;
  FpVec from_k_coordinates(const std::vector<std::uint64_t>& coords) const;

  // K-scalar arithmetic on codes.
  std::uint64_t k_size() const { return pow_u64(p, e); }
  FpMat k_matrix(std::uint64_t code) const;
  std::uint64_t k_code(const FpMat& m) const;
  std::uint64_t k_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t k_add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t k_inv(std::uint64_t a) const;
};

// Requires classify(ring).is_field.  Builds the K-structure greedily with
// lexicographic tie-breaking and verifies the egg invariants: e | n, members
// K-closed, pairwise trivial intersections, tangent containment.
EggRepresentation build_egg(const KantorFamily& fam, const KernelRing& ring);

struct EggPermutationResult {
  bool ok = true;
  std::vector<std::size_t> permutation;  // member i maps onto permutation[i]
  bool identity = true;
};

// How a kernel unit permutes the egg elements (setwise member images).
EggPermutationResult verify_unit_egg_permutation(const KantorFamily& fam, const KernelRing& ring, const FpMat& unit);

}  // namespace tgq
