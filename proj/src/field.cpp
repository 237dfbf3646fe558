#include "starconf/field.hpp"

#include <array>

namespace starconf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kSmall{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kSmall) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve bases are sufficient for all n < 3.3e24.
  for (u64 a : kSmall) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void FieldConfig::validate() const {
  if (kind == FieldKind::Rational) return;
  if (prime >= (u64{1} << 62U)) throw std::invalid_argument("prime must be < 2^62");
  if (prime < kMinPrime) throw std::invalid_argument("prime must be >= 32003");
  if (!is_prime_u64(prime)) throw std::invalid_argument("modulus " + std::to_string(prime) + " is not prime");
}

std::string to_string(FieldKind kind) { return kind == FieldKind::PrimeField ? "PrimeField" : "Rational"; }

FieldKind field_kind_from_string(std::string_view text) {
  if (text == "PrimeField" || text == "prime") return FieldKind::PrimeField;
  if (text == "Rational" || text == "rational") return FieldKind::Rational;
  throw std::invalid_argument("unknown field kind '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------

PrimeField::PrimeField(std::uint64_t p) : p_(p), small_(p < (u64{1} << 32U)) {
  FieldConfig::prime_field(p).validate();
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
  if (v >= 0) return static_cast<u64>(v) % p_;
  u64 m = static_cast<u64>(-(v + 1)) + 1;  // |v| without overflow
  return neg(m % p_);
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r = v % mpz_class(std::to_string(p_));
  if (r < 0) r += mpz_class(std::to_string(p_));
  return std::stoull(r.get_str());
}

PrimeField::Element PrimeField::from_mpq(const mpq_class& v) const {
  Element den = from_mpz(v.get_den());
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
  return div(from_mpz(v.get_num()), den);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const { return powmod(a, e, p_); }

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // Extended Euclid on signed 128-bit to stay exact for p < 2^62.
  __int128 t = 0;
  __int128 new_t = 1;
  __int128 r = p_;
  __int128 new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::dot(std::span<const Element> a, std::span<const Element> b) const {
  const std::size_t len = a.size() < b.size() ? a.size() : b.size();
  if (small_) {
    // Each product is < 2^64, so a 128-bit accumulator cannot overflow here.
    u128 acc = 0;
    for (std::size_t i = 0; i < len; ++i) acc += static_cast<u128>(a[i] * b[i]);
    return static_cast<Element>(acc % p_);
  }
  u128 acc = 0;
  for (std::size_t i = 0; i < len; ++i) {
    acc += static_cast<u128>(a[i]) * b[i];
    if ((i & 7U) == 7U) acc %= p_;  // products are < 2^124
  }
  return static_cast<Element>(acc % p_);
}

void PrimeField::axpy(std::span<Element> y, Element s, std::span<const Element> x) const {
  const std::size_t len = y.size() < x.size() ? y.size() : x.size();
  if (s == 0) return;
  if (small_) {
    for (std::size_t i = 0; i < len; ++i) y[i] = (y[i] + s * x[i]) % p_;
    return;
  }
  for (std::size_t i = 0; i < len; ++i) y[i] = add(y[i], mul(s, x[i]));
}

PrimeField::Element PrimeField::random(Rng& rng) const {
  std::uniform_int_distribution<u64> dist(0, p_ - 1);
  return dist(rng);
}

// ---------------------------------------------------------------------------

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero");
  return Element(1) / a;
}

RationalField::Element RationalField::pow(Element a, std::uint64_t e) const {
  Element r(1);
  while (e != 0) {
    if (e & 1U) r *= a;
    a *= a;
    e >>= 1U;
  }
  return r;
}

RationalField::Element RationalField::dot(std::span<const Element> a, std::span<const Element> b) const {
  const std::size_t len = a.size() < b.size() ? a.size() : b.size();
  Element acc(0);
  for (std::size_t i = 0; i < len; ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  }
  return acc;
}

void RationalField::axpy(std::span<Element> y, const Element& s, std::span<const Element> x) const {
  if (sgn(s) == 0) return;
  const std::size_t len = y.size() < x.size() ? y.size() : x.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (sgn(x[i]) != 0) y[i] += s * x[i];
  }
}

RationalField::Element RationalField::random(Rng& rng) const {
  std::uniform_int_distribution<long> dist(-kRandomRange, kRandomRange);
  return Element(dist(rng));
}

}  // namespace starconf
