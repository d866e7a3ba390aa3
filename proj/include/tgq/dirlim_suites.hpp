#pragma once

#include <random>
#include <string>

#include "tgq/dirlim.hpp"

namespace tgq {

struct SuiteResult {
  bool pass = true;
  std::uint64_t samples = 0;
  std::string detail;
};

inline ZColimitElement random_element(const ZSystem& sys, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> level(-3, 3);
  ZColimitElement e;
  e.g.resize(sys.rank());
  for (auto& c : e.g) c = coord(rng);
  e.level = level(rng);
  return e;
}

inline FpColimitElement random_element(const FpSystem& sys, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coord(0, sys.p() - 1);
  std::uniform_int_distribution<std::int64_t> level(-3, 3);
  FpColimitElement e;
  e.g.resize(sys.rank());
  for (auto& c : e.g) c = coord(rng);
  e.level = level(rng);
  return e;
}

// Abelian-group laws under the semantic equality.
template <class System>
SuiteResult group_law_suite(const System& sys, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult res;
  res.samples = samples;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto a = random_element(sys, rng);
    const auto b = random_element(sys, rng);
    const auto c = random_element(sys, rng);
    if (!sys.equal(sys.add(a, b), sys.add(b, a))) {
      res.pass = false;
      res.detail = "commutativity failed at sample " + std::to_string(i);
      return res;
    }
    if (!sys.equal(sys.add(sys.add(a, b), c), sys.add(a, sys.add(b, c)))) {
      res.pass = false;
      res.detail = "associativity failed at sample " + std::to_string(i);
      return res;
    }
    if (!sys.equal(sys.add(a, sys.neg(a)), sys.zero())) {
      res.pass = false;
      res.detail = "inverse law failed at sample " + std::to_string(i);
      return res;
    }
    if (!sys.equal(sys.add(a, sys.zero()), a)) {
      res.pass = false;
      res.detail = "identity law failed at sample " + std::to_string(i);
      return res;
    }
  }
  return res;
}

// The stable extension of zeta is a group automorphism.
template <class System>
SuiteResult alpha_suite(const System& sys, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult res;
  res.samples = samples;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto a = random_element(sys, rng);
    const auto b = random_element(sys, rng);
    if (!sys.equal(sys.alpha(sys.add(a, b)), sys.add(sys.alpha(a), sys.alpha(b)))) {
      res.pass = false;
      res.detail = "homomorphism failed at sample " + std::to_string(i);
      return res;
    }
    if (!sys.equal(sys.alpha(sys.alpha_inv(a)), a) || !sys.equal(sys.alpha_inv(sys.alpha(a)), a)) {
      res.pass = false;
      res.detail = "inverse composition failed at sample " + std::to_string(i);
      return res;
    }
    if (!sys.equal(a, b) && sys.equal(sys.alpha(a), sys.alpha(b))) {
      res.pass = false;
      res.detail = "injectivity failed at sample " + std::to_string(i);
      return res;
    }
  }
  return res;
}

// Commuting squares for random integer polynomials of zeta.
inline SuiteResult commuting_square_suite(const ZSystem& sys, std::uint32_t depth, std::uint64_t samples,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
  std::uniform_int_distribution<std::int64_t> coord(-50, 50);
  SuiteResult res;
  res.samples = samples;
  for (std::uint64_t i = 0; i < samples; ++i) {
    MatZ phi(sys.rank(), sys.rank());
    MatZ power = MatZ::identity(sys.rank());
    for (int deg = 0; deg <= 3; ++deg) {
      const std::int64_t c = coeff(rng);
      for (std::uint32_t r = 0; r < sys.rank(); ++r)
        for (std::uint32_t cc = 0; cc < sys.rank(); ++cc) phi.at(r, cc) += c * power.at(r, cc);
      power = power.mul(sys.zeta());
    }
    std::vector<std::vector<std::int64_t>> pts;
    for (std::uint32_t b = 0; b < sys.rank(); ++b) {
      std::vector<std::int64_t> e(sys.rank(), 0);
      e[b] = 1;
      pts.push_back(std::move(e));
    }
    std::vector<std::int64_t> r(sys.rank());
    for (auto& c : r) c = coord(rng);
    pts.push_back(std::move(r));
    const auto rep = sys.verify_commuting_square(phi, depth, pts);
    if (!rep.pass) {
      res.pass = false;
      res.detail = "square failed at sample " + std::to_string(i) + " level " + std::to_string(rep.level);
      return res;
    }
  }
  return res;
}

inline SuiteResult commuting_square_suite(const FpSystem& sys, std::uint32_t depth, std::uint64_t samples,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(0, sys.p() - 1);
  SuiteResult res;
  res.samples = samples;
  for (std::uint64_t i = 0; i < samples; ++i) {
    FpMat phi(sys.p(), sys.rank(), sys.rank());
    FpMat power = FpMat::identity(sys.p(), sys.rank());
    for (int deg = 0; deg <= 3; ++deg) {
      phi = phi.add(power.scale(static_cast<std::uint32_t>(coeff(rng))));
      power = power.mul(sys.zeta());
    }
    std::vector<FpVec> pts;
    for (std::uint32_t b = 0; b < sys.rank(); ++b) {
      FpVec e(sys.rank(), 0);
      e[b] = 1;
      pts.push_back(std::move(e));
    }
    const auto rep = sys.verify_commuting_square(phi, depth, pts);
    if (!rep.pass) {
      res.pass = false;
      res.detail = "square failed at sample " + std::to_string(i) + " level " + std::to_string(rep.level);
      return res;
    }
  }
  return res;
}

}  // namespace tgq
