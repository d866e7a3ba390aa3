#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgq/incidence.hpp"
#include "tgq/kantor.hpp"

namespace tgq {

// Label grammar of the coset geometry:
//   points: "aff:<coords>"  "star:<i>:<coords>"  "inf"
//   lines:  "coset:<i>:<coords>"  "starline:<i>"
// Coset representatives are canonical (lexicographically least member).
struct PointLabel {
  enum class Kind { Affine, StarCoset, Infinity } kind;
  std::size_t member = 0;
  FpVec vec;
};

std::string format_point_label(const PointLabel& label);
std::optional<PointLabel> parse_point_label(const std::string& token, std::uint32_t p);

// Expanded coset geometry, keeping the family and the index tables needed to
// realize translations as collineations.
struct CosetGeometry {
  KantorFamily fam;
  IncidenceStructure inc;

  std::uint64_t affine_count = 0;
  std::vector<std::vector<FpVec>> line_reps;        // per member, sorted coset reps of A_i
  std::vector<std::vector<FpVec>> star_reps;        // per member, sorted coset reps of A_i*
  std::vector<std::uint32_t> coset_line_offset;     // per member
  std::vector<std::uint32_t> star_point_offset;     // per member
  std::uint32_t starline_offset = 0;                // first star line index
  std::uint32_t infinity_point = 0;

  std::uint32_t affine_index(const FpVec& g) const;
  std::uint32_t star_point_index(std::size_t i, const FpVec& rep) const;
  std::uint32_t coset_line_index(std::size_t i, const FpVec& rep) const;
  std::uint32_t starline_index(std::size_t i) const { return starline_offset + static_cast<std::uint32_t>(i); }

  FpVec affine_vector(std::uint32_t point) const;

  // Point and line permutation induced by right translation with g.
  struct Collineation {
    std::vector<std::uint32_t> point_map;
    std::vector<std::uint32_t> line_map;
  };
  Collineation translation(const FpVec& g) const;
  // Relabeling by a kernel unit: aff g -> aff g*m, coset reps likewise.
  Collineation endo_collineation(const FpMat& m) const;

  bool is_automorphism(const Collineation& c) const;
};

// Expands a verified family into its coset geometry.  Unless waived, the
// family must pass verify_kf.
CosetGeometry expand(const KantorFamily& fam, Exec exec = Exec::Parallel, bool waive_verification = false);

struct TranslationActionReport {
  bool automorphisms = true;        // every translation preserves incidence
  bool fixes_starlines = true;      // and fixes each line through infinity
  bool sharply_transitive = true;   // on affine points
  bool affine_complement = true;    // affine points = points not collinear with infinity
  bool abelian = true;
  std::optional<FpVec> witness_g;
  std::string detail;

  bool pass() const {
    return automorphisms && fixes_starlines && sharply_transitive && affine_complement && abelian;
  }
};

TranslationActionReport verify_translation_action(const CosetGeometry& geom, Exec exec = Exec::Parallel);

// Variant that checks the translation maps against an arbitrary structure
// (used to exhibit failures on tampered geometries).
TranslationActionReport verify_translation_action_on(const CosetGeometry& geom, const IncidenceStructure& inc,
                                                     Exec exec = Exec::Parallel);

}  // namespace tgq
