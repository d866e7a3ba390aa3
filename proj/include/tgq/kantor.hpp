#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgq/exec.hpp"
#include "tgq/fq.hpp"
#include "tgq/matrix.hpp"
#include "tgq/subspace.hpp"

namespace tgq {

// A family of subgroup pairs A_i <= A_i* in the elementary abelian group
// F_p^n.  Construction enforces structural well-formedness only; the four
// defining axioms are checked by verify_kf.
struct KantorMember {
  Subspace line;
  Subspace star;
};

struct KantorFamily {
  std::uint32_t p = 2;
  std::uint32_t n = 0;
  std::vector<KantorMember> members;

  std::uint64_t group_size() const { return pow_u64(p, n); }
  bool operator==(const KantorFamily& o) const;
};

// Throws std::invalid_argument on ambient mismatches or fewer than 3 members.
void check_structure(const KantorFamily& fam);

struct KFWitness {
  std::string kind;                  // e.g. "not-contained", "join-not-full"
  std::vector<std::size_t> indices;  // member indices involved
  std::optional<FpVec> element;
};

struct KFVerdict {
  bool pass = true;
  std::optional<KFWitness> witness;
};

struct KFReport {
  KFVerdict kf1, kf2, kf3, kf4;
  std::uint64_t s = 0;    // common member size, from member 0
  std::uint64_t t = 0;    // member count - 1
  bool s_uniform = true;  // all |A_i| equal
  bool star_uniform = true;
  bool size_consistent = false;  // |A| == s^2 * t

  bool all_pass() const { return kf1.pass && kf2.pass && kf3.pass && kf4.pass; }
  const KFVerdict& axiom(int k) const;
};

// Checks the four axioms.
//   1. A_i <= A_i* and A_i != A_i* for all i.
//   2. A_i + A_j* = A for all i != j.
//   3. (A_i + A_j) ∩ A_k = 0 for distinct i, j, k.
//   4. The nontrivial cosets of A_L inside A_L*, together with those inside
//      A_L + A_M for each M != L, are pairwise disjoint across collections
//      and cover A/A_L minus the trivial coset.
// Failures are reported with the lexicographically least witness.
KFReport verify_kf(const KantorFamily& fam, Exec exec = Exec::Parallel);

// Re-runs the membership arithmetic a witness claims; true iff the witness
// really violates the named axiom.
bool reverify_kf_witness(const KantorFamily& fam, int axiom, const KFWitness& w);

// ---------------------------------------------------------------------------
// Projective-plane scaffolding for the two constructions.

using ProjPoint = std::array<std::uint64_t, 3>;  // homogeneous F_q codes, normalized

ProjPoint normalize_proj(const Fq& fq, ProjPoint pt);
bool proj_collinear(const Fq& fq, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

struct OvalSpec {
  FieldSpec field;
  enum class Kind { Conic, Explicit } kind = Kind::Conic;
  std::vector<ProjPoint> points;  // for Explicit
  bool add_nucleus = false;       // even q: complete to a hyperoval
};

// Point set of an OvalSpec: the conic {(1, t, t^2)} plus (0,0,1), or the
// explicit list, with the nucleus appended when requested.  Validates the
// no-3-collinear property and throws on violations.
std::vector<ProjPoint> oval_points(const OvalSpec& spec);

// Unique line meeting the oval only at pts[idx]; returned as a dual vector.
// Throws if the tangent is missing or ambiguous.
ProjPoint tangent_line_at(const Fq& fq, const std::vector<ProjPoint>& pts, std::size_t idx);

// Common point of all tangents of a (q+1)-oval, q even.
ProjPoint oval_nucleus(const Fq& fq, const std::vector<ProjPoint>& pts);

// F_p-subspace of F_p^{3d} spanned over F_q by the given F_q^3 vectors.
Subspace fq_span(const Fq& fq, std::uint32_t ambient_fq_dim, const std::vector<ProjPoint>& vectors);

// Coset-geometry seed of T2(O): A = F_q^3; for each oval point s the member
// is the direction line of s paired with the span of the tangent at s.
KantorFamily build_t2_oval(const OvalSpec& spec);

// Hyperoval variant: S = conic ∪ nucleus (q even), one point c removed; for
// s in S \ {c} the member is T_s paired with T_s ⊕ T_c.
KantorFamily build_secant2(const FieldSpec& field, std::size_t c_index = 0);
std::vector<ProjPoint> secant2_point_set(const FieldSpec& field);

// Member-wise image (apply_endo on lines and stars).  Unless waived, m must
// map every constrained subspace into itself.
KantorFamily image_family(const KantorFamily& fam, const FpMat& m, bool waive_kernel_check = false);

}  // namespace tgq
