#include "tgq/incidence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tgq {

IncidenceStructure IncidenceStructure::make(std::vector<std::string> point_labels,
                                            std::vector<std::string> line_labels,
                                            std::vector<std::vector<std::uint32_t>> line_points, bool strict) {
  IncidenceStructure g;
  g.point_labels_ = std::move(point_labels);
  g.line_labels_ = std::move(line_labels);
  g.line_points_ = std::move(line_points);
  if (g.line_labels_.empty()) g.line_labels_.resize(g.line_points_.size());
  if (g.line_labels_.size() != g.line_points_.size())
    throw std::invalid_argument("IncidenceStructure: line label count mismatch");

  const std::uint32_t np = g.num_points();
  for (auto& pts : g.line_points_) {
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
      throw std::invalid_argument("IncidenceStructure: repeated point on a line");
    for (auto pt : pts) {
      if (pt >= np) throw std::invalid_argument("IncidenceStructure: point index out of range");
    }
    if (strict && pts.size() < 2) throw std::invalid_argument("IncidenceStructure: line with fewer than 2 points");
  }
  if (strict) {
    std::map<std::vector<std::uint32_t>, std::size_t> seen;
    for (std::size_t l = 0; l < g.line_points_.size(); ++l) {
      auto [it, inserted] = seen.emplace(g.line_points_[l], l);
      if (!inserted) throw std::invalid_argument("IncidenceStructure: two lines with identical point sets");
    }
  }
  g.point_lines_.assign(np, {});
  for (std::uint32_t l = 0; l < g.num_lines(); ++l) {
    for (auto pt : g.line_points_[l]) g.point_lines_[pt].push_back(l);
  }
  return g;
}

bool IncidenceStructure::incident(std::uint32_t pt, std::uint32_t l) const {
  const auto& pts = line_points_[l];
  return std::binary_search(pts.begin(), pts.end(), pt);
}

std::uint32_t IncidenceStructure::find_point(const std::string& label) const {
  for (std::uint32_t i = 0; i < num_points(); ++i) {
    if (point_labels_[i] == label) return i;
  }
  return num_points();
}

CollinearityIndex::CollinearityIndex(const IncidenceStructure& geom) {
  n_ = geom.num_points();
  words_ = (n_ + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  auto set_bit = [&](std::uint32_t a, std::uint32_t b) {
    rows_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
  };
  for (std::uint32_t a = 0; a < n_; ++a) set_bit(a, a);
  for (std::uint32_t l = 0; l < geom.num_lines(); ++l) {
    const auto& pts = geom.line(l);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        set_bit(pts[i], pts[j]);
        set_bit(pts[j], pts[i]);
      }
    }
  }
}

void CollinearityIndex::intersect_row(std::uint32_t pt, std::vector<std::uint64_t>& acc) const {
  const std::uint64_t* row = rows_.data() + static_cast<std::size_t>(pt) * words_;
  for (std::size_t w = 0; w < words_; ++w) acc[w] &= row[w];
}

std::vector<std::uint64_t> CollinearityIndex::row(std::uint32_t pt) const {
  return std::vector<std::uint64_t>(rows_.begin() + static_cast<std::size_t>(pt) * words_,
                                    rows_.begin() + static_cast<std::size_t>(pt + 1) * words_);
}

std::vector<std::uint32_t> bits_to_indices(const std::vector<std::uint64_t>& bits, std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    if ((bits[i >> 6] >> (i & 63)) & 1) out.push_back(i);
  }
  return out;
}

IncidenceStructure dual_structure(const IncidenceStructure& geom) {
  std::vector<std::vector<std::uint32_t>> dual_lines(geom.num_points());
  for (std::uint32_t pt = 0; pt < geom.num_points(); ++pt) dual_lines[pt] = geom.lines_of_point(pt);
  std::vector<std::string> dual_point_labels(geom.num_lines());
  for (std::uint32_t l = 0; l < geom.num_lines(); ++l) {
    dual_point_labels[l] = geom.line_labels()[l].empty() ? "l" + std::to_string(l) : geom.line_labels()[l];
  }
  return IncidenceStructure::make(std::move(dual_point_labels), geom.point_labels(), std::move(dual_lines),
                                  /*strict=*/false);
}

}  // namespace tgq
