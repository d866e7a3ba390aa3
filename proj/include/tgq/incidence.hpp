#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tgq/exec.hpp"

namespace tgq {

// Labeled point-line incidence structure.  Point and line labels are plain
// space-free tokens; line point lists are kept sorted.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;

  // strict = reject structures that can never be geometries (duplicate line
  // point sets, lines with fewer than 2 points).  Induced substructures are
  // built leniently and judged by the axiom checkers instead.
  static IncidenceStructure make(std::vector<std::string> point_labels, std::vector<std::string> line_labels,
                                 std::vector<std::vector<std::uint32_t>> line_points, bool strict = true);

  std::uint32_t num_points() const { return static_cast<std::uint32_t>(point_labels_.size()); }
  std::uint32_t num_lines() const { return static_cast<std::uint32_t>(line_points_.size()); }

  const std::vector<std::string>& point_labels() const { return point_labels_; }
  const std::vector<std::string>& line_labels() const { return line_labels_; }
  const std::vector<std::uint32_t>& line(std::uint32_t l) const { return line_points_[l]; }
  const std::vector<std::vector<std::uint32_t>>& lines() const { return line_points_; }
  const std::vector<std::uint32_t>& lines_of_point(std::uint32_t pt) const { return point_lines_[pt]; }

  bool incident(std::uint32_t pt, std::uint32_t l) const;

  // Index of the point carrying this label, or num_points() if absent.
  std::uint32_t find_point(const std::string& label) const;

  bool operator==(const IncidenceStructure& o) const {
    return point_labels_ == o.point_labels_ && line_labels_ == o.line_labels_ && line_points_ == o.line_points_;
  }

 private:
  std::vector<std::string> point_labels_;
  std::vector<std::string> line_labels_;
  std::vector<std::vector<std::uint32_t>> line_points_;
  std::vector<std::vector<std::uint32_t>> point_lines_;
};

// Point-point collinearity closed under x ~ x, stored as a bit matrix.
class CollinearityIndex {
 public:
  explicit CollinearityIndex(const IncidenceStructure& geom);

  bool collinear(std::uint32_t a, std::uint32_t b) const {
    return (rows_[static_cast<std::size_t>(a) * words_ + (b >> 6)] >> (b & 63)) & 1;
  }
  // AND-accumulate the row of `pt` into acc (acc sized words()).
  void intersect_row(std::uint32_t pt, std::vector<std::uint64_t>& acc) const;
  std::vector<std::uint64_t> row(std::uint32_t pt) const;
  std::size_t words() const { return words_; }
  std::uint32_t points() const { return n_; }

 private:
  std::uint32_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

std::vector<std::uint32_t> bits_to_indices(const std::vector<std::uint64_t>& bits, std::uint32_t n);

// Interchanges points and lines.
IncidenceStructure dual_structure(const IncidenceStructure& geom);

}  // namespace tgq
