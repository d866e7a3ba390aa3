#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgq {

// Coordinate vector over F_p, entries reduced into [0, p).
using FpVec = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t m);

// Arithmetic in the prime field F_p.
class Fp {
 public:
  explicit Fp(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("Fp: modulus " + std::to_string(p) + " is not prime");
  }

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b % p_) % p_; }
  std::uint32_t neg(std::uint32_t a) const { return a % p_ == 0 ? 0 : p_ - a % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  std::uint32_t reduce_signed(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  FpVec add(const FpVec& a, const FpVec& b) const;
  FpVec sub(const FpVec& a, const FpVec& b) const;
  FpVec scale(std::uint32_t c, const FpVec& a) const;

 private:
  std::uint32_t p_;
};

bool is_zero(const FpVec& v);

// Mixed-radix packing of a coordinate vector; the first coordinate is the
// most significant digit, so numeric order on packed values equals
// lexicographic order on tuples.
std::uint64_t pack_vec(const FpVec& v, std::uint32_t p);
FpVec unpack_vec(std::uint64_t code, std::uint32_t p, std::size_t n);
std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp);

std::string format_vec(const FpVec& v);
FpVec parse_vec(const std::string& text, std::uint32_t p);

}  // namespace tgq
