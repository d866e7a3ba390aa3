#include "tgq/dirlim.hpp"

#include <sstream>
#include <stdexcept>

namespace tgq {

MatZ MatZ::identity(std::uint32_t n) {
  MatZ m(n, n);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatZ MatZ::mul(const MatZ& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("MatZ::mul: shape mismatch");
  MatZ r(rows_, o.cols_);
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t k = 0; k < cols_; ++k) {
      const std::int64_t a = at(i, k);
      if (a == 0) continue;
      for (std::uint32_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

MatZ MatZ::pow(std::uint32_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("MatZ::pow: square matrix required");
  MatZ acc = identity(rows_);
  for (std::uint32_t i = 0; i < e; ++i) acc = acc.mul(*this);
  return acc;
}

std::vector<std::int64_t> MatZ::apply_row(const std::vector<std::int64_t>& v) const {
  if (v.size() != rows_) throw std::invalid_argument("MatZ::apply_row: dimension mismatch");
  std::vector<std::int64_t> r(cols_, 0);
  for (std::uint32_t i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (std::uint32_t j = 0; j < cols_; ++j) r[j] += v[i] * at(i, j);
  }
  return r;
}

std::int64_t MatZ::det() const {
  if (rows_ != cols_) throw std::invalid_argument("MatZ::det: square matrix required");
  const std::uint32_t n = rows_;
  if (n == 1) return at(0, 0);
  std::int64_t acc = 0;
  // cofactor expansion along the first row; ranks here are tiny
  for (std::uint32_t j = 0; j < n; ++j) {
    if (at(0, j) == 0) continue;
    MatZ minor(n - 1, n - 1);
    for (std::uint32_t r = 1; r < n; ++r) {
      std::uint32_t cc = 0;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = at(r, c);
      }
    }
    const std::int64_t term = at(0, j) * minor.det();
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

MatZ MatZ::adjugate() const {
  const std::uint32_t n = rows_;
  MatZ adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      MatZ minor(n - 1, n - 1);
      for (std::uint32_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::uint32_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = at(r, c);
        }
        ++rr;
      }
      const std::int64_t cof = minor.det();
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

std::string MatZ::format() const {
  std::ostringstream os;
  for (std::uint32_t i = 0; i < rows_; ++i) {
    if (i) os << ';';
    for (std::uint32_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << at(i, j);
    }
  }
  return os.str();
}

MatZ parse_z_matrix(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::istringstream is(text);
  std::string row_text;
  while (std::getline(is, row_text, ';')) {
    std::vector<std::int64_t> row;
    std::istringstream rs(row_text);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      std::size_t pos = 0;
      row.push_back(std::stoll(cell, &pos));
      if (pos != cell.size()) throw std::invalid_argument("parse_z_matrix: bad entry '" + cell + "'");
    }
    if (row.empty()) throw std::invalid_argument("parse_z_matrix: empty row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("parse_z_matrix: empty matrix");
  MatZ m(static_cast<std::uint32_t>(rows.size()), static_cast<std::uint32_t>(rows[0].size()));
  for (std::uint32_t i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("parse_z_matrix: ragged rows");
    for (std::uint32_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::string strictness_verdict_name(StrictnessVerdict v) {
  switch (v) {
    case StrictnessVerdict::Strict: return "strict";
    case StrictnessVerdict::Stable: return "stable";
    default: return "trivializing";
  }
}

// ---------------------------------------------------------------------------

ZSystem::ZSystem(MatZ zeta) : zeta_(std::move(zeta)), det_(0) {
  if (zeta_.rows() != zeta_.cols()) throw std::invalid_argument("ZSystem: zeta must be square");
  det_ = zeta_.det();
  if (det_ == 0) throw std::invalid_argument("ZSystem: zeta must be injective (det != 0)");
}

ZColimitElement ZSystem::lift(const ZColimitElement& a, std::int64_t to_level) const {
  if (to_level < a.level) throw std::logic_error("ZSystem::lift: cannot lower a level");
  ZColimitElement out = a;
  out.level = to_level;
  out.g = zeta_.pow(static_cast<std::uint32_t>(to_level - a.level)).apply_row(a.g);
  return out;
}

bool ZSystem::equal(const ZColimitElement& a, const ZColimitElement& b) const {
  const std::int64_t level = std::max(a.level, b.level);
  return lift(a, level).g == lift(b, level).g;
}

ZColimitElement ZSystem::add(const ZColimitElement& a, const ZColimitElement& b) const {
  const std::int64_t level = std::max(a.level, b.level);
  ZColimitElement la = lift(a, level), lb = lift(b, level);
  for (std::size_t i = 0; i < la.g.size(); ++i) la.g[i] += lb.g[i];
  return la;
}

ZColimitElement ZSystem::neg(const ZColimitElement& a) const {
  ZColimitElement out = a;
  for (auto& c : out.g) c = -c;
  return out;
}

ZColimitElement ZSystem::alpha(const ZColimitElement& a) const {
  return {zeta_.apply_row(a.g), a.level};
}

ZColimitElement ZSystem::alpha_inv(const ZColimitElement& a) const { return {a.g, a.level + 1}; }

bool ZSystem::in_image(const std::vector<std::int64_t>& g, std::uint32_t k) const {
  // x zeta^k = g has an integer solution iff g . adj(zeta^k) is divisible by
  // det(zeta^k) componentwise.
  const MatZ zk = zeta_.pow(k);
  const std::int64_t d = zk.det();
  const std::vector<std::int64_t> scaled = zk.adjugate().apply_row(g);
  for (auto c : scaled) {
    if (c % d != 0) return false;
  }
  return true;
}

StrictnessReport ZSystem::strictness(std::uint32_t depth) const {
  StrictnessReport rep;
  if (det_ == 1 || det_ == -1) {
    rep.verdict = StrictnessVerdict::Stable;
    rep.note = "zeta is already an automorphism (|det| = 1)";
    return rep;
  }
  rep.verdict = StrictnessVerdict::Strict;
  // A standard basis vector outside the image lattice always exists when
  // |det| >= 2; that vector witnesses strictness at every level.
  std::vector<std::int64_t> witness;
  for (std::uint32_t i = 0; i < rank(); ++i) {
    std::vector<std::int64_t> e(rank(), 0);
    e[i] = 1;
    if (!in_image(e, 1)) {
      witness = e;
      break;
    }
  }
  if (witness.empty()) throw std::logic_error("ZSystem::strictness: no basis witness despite |det| >= 2");
  for (std::uint32_t j = 1; j <= depth; ++j) {
    // (witness, j) equals a level j-1 element iff witness lies in im zeta.
    rep.witnesses.push_back({witness, static_cast<std::int64_t>(j)});
  }
  return rep;
}

ZSystem::CommuteReport ZSystem::verify_commuting_square(
    const MatZ& phi, std::uint32_t depth, const std::vector<std::vector<std::int64_t>>& samples) const {
  if (!(phi.mul(zeta_) == zeta_.mul(phi)))
    throw std::invalid_argument("verify_commuting_square: phi does not commute with zeta");
  CommuteReport rep;
  for (std::uint32_t j = 0; j <= depth && rep.pass; ++j) {
    const MatZ zj = zeta_.pow(j);
    for (const auto& g : samples) {
      // lift then apply vs apply then lift
      ZColimitElement lifted{zj.apply_row(g), static_cast<std::int64_t>(j)};
      ZColimitElement route_a{phi.apply_row(lifted.g), lifted.level};
      ZColimitElement route_b{phi.apply_row(g), 0};
      if (!equal(route_a, route_b)) {
        rep.pass = false;
        rep.level = j;
        rep.witness = ZColimitElement{g, 0};
        break;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

FpSystem::FpSystem(std::uint32_t p, FpMat zeta) : p_(p), zeta_(std::move(zeta)), zeta_inv_(p, 0, 0) {
  if (zeta_.rows() != zeta_.cols()) throw std::invalid_argument("FpSystem: zeta must be square");
  if (zeta_.prime() != p) throw std::invalid_argument("FpSystem: characteristic mismatch");
  auto inv = zeta_.inverse();
  if (!inv) throw std::invalid_argument("FpSystem: zeta must be injective (full rank)");
  zeta_inv_ = *inv;  // injective on a finite group is bijective
}

FpColimitElement FpSystem::lift(const FpColimitElement& a, std::int64_t to_level) const {
  if (to_level < a.level) throw std::logic_error("FpSystem::lift: cannot lower a level");
  return {zeta_.pow(static_cast<std::uint64_t>(to_level - a.level)).apply_row(a.g), to_level};
}

bool FpSystem::equal(const FpColimitElement& a, const FpColimitElement& b) const {
  const std::int64_t level = std::max(a.level, b.level);
  return lift(a, level).g == lift(b, level).g;
}

FpColimitElement FpSystem::add(const FpColimitElement& a, const FpColimitElement& b) const {
  const std::int64_t level = std::max(a.level, b.level);
  Fp fp(p_);
  return {fp.add(lift(a, level).g, lift(b, level).g), level};
}

FpColimitElement FpSystem::neg(const FpColimitElement& a) const {
  Fp fp(p_);
  FpColimitElement out = a;
  for (auto& c : out.g) c = fp.neg(c);
  return out;
}

FpColimitElement FpSystem::alpha(const FpColimitElement& a) const { return {zeta_.apply_row(a.g), a.level}; }

FpColimitElement FpSystem::alpha_inv(const FpColimitElement& a) const { return {a.g, a.level + 1}; }

FpColimitElement FpSystem::collapse(const FpColimitElement& a) const {
  if (a.level <= 0) {
    // raise to level 0 by applying zeta
    return {zeta_.pow(static_cast<std::uint64_t>(-a.level)).apply_row(a.g), 0};
  }
  return {zeta_inv_.pow(static_cast<std::uint64_t>(a.level)).apply_row(a.g), 0};
}

StrictnessReport FpSystem::strictness(std::uint32_t depth) const {
  StrictnessReport rep;
  rep.verdict = StrictnessVerdict::Trivializing;
  rep.note = "finite base: injective zeta is bijective, every copy equals the base";
  // Confirm the collapse: every element at every level <= depth has a
  // level-0 representative.
  const std::uint64_t total = pow_u64(p_, rank());
  for (std::uint32_t j = 1; j <= depth; ++j) {
    for (std::uint64_t code = 0; code < std::min<std::uint64_t>(total, 256); ++code) {
      FpColimitElement e{unpack_vec(code, p_, rank()), static_cast<std::int64_t>(j)};
      FpColimitElement base = collapse(e);
      if (!equal(e, base)) {
        rep.note = "collapse check failed";
        rep.verdict = StrictnessVerdict::Strict;
        return rep;
      }
    }
  }
  return rep;
}

FpSystem::CommuteReport FpSystem::verify_commuting_square(const FpMat& phi, std::uint32_t depth,
                                                          const std::vector<FpVec>& samples) const {
  if (!(phi.mul(zeta_) == zeta_.mul(phi)))
    throw std::invalid_argument("verify_commuting_square: phi does not commute with zeta");
  CommuteReport rep;
  for (std::uint32_t j = 0; j <= depth && rep.pass; ++j) {
    const FpMat zj = zeta_.pow(j);
    for (const auto& g : samples) {
      FpColimitElement route_a{phi.apply_row(zj.apply_row(g)), static_cast<std::int64_t>(j)};
      FpColimitElement route_b{phi.apply_row(g), 0};
      if (!equal(route_a, route_b)) {
        rep.pass = false;
        rep.level = j;
        rep.witness = FpColimitElement{g, 0};
        break;
      }
    }
  }
  return rep;
}

}  // namespace tgq
