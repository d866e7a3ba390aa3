#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tgq/kantor.hpp"
#include "tgq/matrix.hpp"

namespace tgq {

enum class KernelMode { FOnly, FAndFStar };

// Solution space of the subspace-preservation constraints: all n x n
// matrices mapping each constrained subgroup into itself.  Closed under
// addition and multiplication; always contains 0 and the identity.
class KernelRing {
 public:
  KernelRing(KantorFamily fam, KernelMode mode, std::vector<FpMat> basis);

  const KantorFamily& family() const { return fam_; }
  KernelMode mode() const { return mode_; }
  std::uint32_t p() const { return fam_.p; }
  std::uint32_t n() const { return fam_.n; }
  const std::vector<FpMat>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::uint64_t size() const { return pow_u64(fam_.p, static_cast<std::uint32_t>(basis_.size())); }

  bool contains(const FpMat& m) const;
  // All p^dim elements, ordered by basis coefficients (odometer).
  std::vector<FpMat> elements() const;
  FpMat element(std::uint64_t index) const;

  // Unit = invertible matrix whose inverse also satisfies the constraints.
  bool is_unit(const FpMat& m) const;
  std::vector<FpMat> units() const;

 private:
  KantorFamily fam_;
  KernelMode mode_;
  std::vector<FpMat> basis_;           // row-reduced over vectorized entries
  std::vector<FpVec> reduced_basis_;   // vectorized, for membership tests
};

// Assembles and solves the homogeneous linear system "v M stays in V" for
// every basis row v of every constrained subspace V.
KernelRing compute_kernel(const KantorFamily& fam, KernelMode mode = KernelMode::FAndFStar,
                          Exec exec = Exec::Parallel);

// True iff m maps every constrained subspace of the mode into itself.
bool preserves_family(const KantorFamily& fam, KernelMode mode, const FpMat& m);

struct KernelClassification {
  std::uint64_t size = 0;
  bool commutative = true;
  bool integral_domain = true;
  bool is_field = true;
  std::uint32_t characteristic = 0;  // additive order of the identity
  std::uint64_t prime_field_size = 0;
  std::uint64_t unit_count = 0;
  std::optional<std::pair<FpMat, FpMat>> zero_divisor_witness;
};

// Exhaustive classification over all ring elements.
KernelClassification classify(const KernelRing& ring, Exec exec = Exec::Parallel);

struct InjectivityReport {
  bool all_injective = true;
  // non-injective nonzero elements with a kernel vector each
  std::vector<std::pair<FpMat, FpVec>> failures;
};

InjectivityReport injectivity_check(const KernelRing& ring);

// The scalar endomorphism b -> m*b (the matrix (m mod p) I).
FpMat multiplication_endo(const KantorFamily& fam, std::int64_t m);

// Multiplicative order of a unit; throws std::invalid_argument on non-units.
std::uint64_t unit_order(const KernelRing& ring, const FpMat& elem);

struct KernelElement {
  const KernelRing* ring;
  FpMat mat;
};

KernelElement make_element(const KernelRing& ring, FpMat m);  // validates membership
KernelElement ring_add(const KernelElement& a, const KernelElement& b);
KernelElement ring_mul(const KernelElement& a, const KernelElement& b);

// h(beta) = sum c_i beta^i with integer coefficients reduced mod p.
FpMat poly_eval(std::span<const std::int64_t> coeffs, const FpMat& beta);

}  // namespace tgq
