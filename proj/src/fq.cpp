#include "tgq/fq.hpp"

#include <stdexcept>
#include <string>

namespace tgq {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo m (m monic).
Poly poly_mod(const Fp& fp, Poly a, const Poly& m) {
  poly_trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() >= m.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = fp.sub(a[shift + i], fp.mul(lead, m[i]));
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

Poly poly_mul(const Fp& fp, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fp.add(r[i + j], fp.mul(a[i], b[j]));
  }
  return r;
}

}  // namespace

bool poly_is_irreducible(std::uint32_t p, const Poly& poly) {
  Fp fp(p);
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(poly.size() - 1);
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::uint32_t dd = 1; dd <= deg / 2; ++dd) {
    const std::uint64_t count = pow_u64(p, dd);
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly divisor = unpack_vec(c, p, dd);
      // unpack is big-endian; ascending order wanted
      Poly asc(divisor.rbegin(), divisor.rend());
      asc.push_back(1);
      Poly rem = poly_mod(fp, poly, asc);
      if (rem.empty()) return false;
    }
  }
  return true;
}

Poly default_irreducible(std::uint32_t p, std::uint32_t d) {
  Fp fp(p);
  const std::uint64_t count = pow_u64(p, d);
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly low(d, 0);
    std::uint64_t rest = c;
    for (std::uint32_t i = 0; i < d; ++i) {
      low[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    Poly candidate = low;
    candidate.push_back(1);
    if (poly_is_irreducible(p, candidate)) return candidate;
  }
  throw std::logic_error("default_irreducible: no irreducible found");
}

FieldSpec make_field(std::uint32_t p, std::uint32_t d) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: p = " + std::to_string(p) + " is not prime");
  if (d == 0) throw std::invalid_argument("make_field: degree must be >= 1");
  FieldSpec spec;
  spec.p = p;
  spec.d = d;
  if (d > 1) spec.poly = default_irreducible(p, d);
  return spec;
}

FieldSpec make_field(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> poly) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: p = " + std::to_string(p) + " is not prime");
  if (d == 1 && poly.empty()) return make_field(p, 1);
  if (poly.size() != d + 1) throw std::invalid_argument("make_field: modulus degree mismatch");
  for (auto& c : poly) c %= p;
  if (poly.back() != 1) throw std::invalid_argument("make_field: modulus must be monic");
  if (!poly_is_irreducible(p, poly)) throw std::invalid_argument("make_field: modulus is reducible");
  FieldSpec spec;
  spec.p = p;
  spec.d = d;
  spec.poly = std::move(poly);
  return spec;
}

FieldSpec field_for_order(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field_for_order: q must be a prime power >= 2");
  std::uint32_t p = 0;
  for (std::uint32_t c = 2; static_cast<std::uint64_t>(c) * c <= q; ++c) {
    if (q % c == 0) {
      p = c;
      break;
    }
  }
  if (p == 0) return make_field(static_cast<std::uint32_t>(q), 1);
  std::uint32_t d = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++d;
  }
  if (rest != 1) throw std::invalid_argument("field_for_order: " + std::to_string(q) + " is not a prime power");
  return make_field(p, d);
}

Fq::Fq(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.q()) {
  if (!is_prime(spec_.p)) throw std::invalid_argument("Fq: non-prime characteristic");
  if (spec_.d > 1 && spec_.poly.size() != spec_.d + 1) throw std::invalid_argument("Fq: missing modulus");
}

FpVec Fq::coeffs(std::uint64_t code) const {
  FpVec c(spec_.d, 0);
  for (std::uint32_t i = 0; i < spec_.d; ++i) {
    c[i] = static_cast<std::uint32_t>(code % spec_.p);
    code /= spec_.p;
  }
  return c;
}

std::uint64_t Fq::code(const FpVec& coeffs) const {
  if (coeffs.size() != spec_.d) throw std::invalid_argument("Fq::code: wrong coefficient count");
  std::uint64_t acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * spec_.p + coeffs[i] % spec_.p;
  return acc;
}

std::uint64_t Fq::add(std::uint64_t a, std::uint64_t b) const {
  Fp fp(spec_.p);
  return code(fp.add(coeffs(a), coeffs(b)));
}

std::uint64_t Fq::sub(std::uint64_t a, std::uint64_t b) const {
  Fp fp(spec_.p);
  return code(fp.sub(coeffs(a), coeffs(b)));
}

std::uint64_t Fq::neg(std::uint64_t a) const { return sub(0, a); }

std::uint64_t Fq::mul(std::uint64_t a, std::uint64_t b) const {
  Fp fp(spec_.p);
  if (spec_.d == 1) return fp.mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  Poly prod = poly_mul(fp, coeffs(a), coeffs(b));
  Poly rem = poly_mod(fp, prod, spec_.poly);
  rem.resize(spec_.d, 0);
  return code(rem);
}

std::uint64_t Fq::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t acc = 1, base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t Fq::inv(std::uint64_t a) const {
  if (a % q_ == 0) throw std::domain_error("Fq::inv: zero has no inverse");
  return pow(a, q_ - 2);
}

}  // namespace tgq
