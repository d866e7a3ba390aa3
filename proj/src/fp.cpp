#include "tgq/fp.hpp"

#include <sstream>

namespace tgq {

bool is_prime(std::uint32_t m) {
  if (m < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

std::uint32_t Fp::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t base = a % p_, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t Fp::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) throw std::domain_error("Fp::inv: zero has no inverse");
  return pow(a, p_ - 2);
}

FpVec Fp::add(const FpVec& a, const FpVec& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("Fp::add: dimension mismatch");
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
  return r;
}

FpVec Fp::sub(const FpVec& a, const FpVec& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("Fp::sub: dimension mismatch");
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i]);
  return r;
}

FpVec Fp::scale(std::uint32_t c, const FpVec& a) const {
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(c, a[i]);
  return r;
}

bool is_zero(const FpVec& v) {
  for (auto c : v)
    if (c != 0) return false;
  return true;
}

std::uint64_t pack_vec(const FpVec& v, std::uint32_t p) {
  std::uint64_t code = 0;
  for (auto c : v) code = code * p + c;
  return code;
}

FpVec unpack_vec(std::uint64_t code, std::uint32_t p, std::size_t n) {
  FpVec v(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i < exp; ++i) acc *= base;
  return acc;
}

std::string format_vec(const FpVec& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

FpVec parse_vec(const std::string& text, std::uint32_t p) {
  FpVec v;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    if (cur.empty()) throw std::invalid_argument("parse_vec: empty coordinate in '" + text + "'");
    std::size_t pos = 0;
    long val = std::stol(cur, &pos);
    if (pos != cur.size()) throw std::invalid_argument("parse_vec: bad coordinate '" + cur + "'");
    if (val < 0) throw std::invalid_argument("parse_vec: negative coordinate '" + cur + "'");
    v.push_back(static_cast<std::uint32_t>(val % p));
  }
  if (v.empty()) throw std::invalid_argument("parse_vec: no coordinates in '" + text + "'");
  return v;
}

}  // namespace tgq
