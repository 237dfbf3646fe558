#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace starconf {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1
inline constexpr std::uint64_t kMinPrime = 32003ULL;

enum class FieldKind { PrimeField, Rational };

struct FieldConfig {
  FieldKind kind = FieldKind::PrimeField;
  std::uint64_t prime = kDefaultPrime;

  /// Throws std::invalid_argument unless a PrimeField config names a prime
  /// in [32003, 2^62).
  void validate() const;

  static FieldConfig prime_field(std::uint64_t p = kDefaultPrime) { return {FieldKind::PrimeField, p}; }
  static FieldConfig rational() { return {FieldKind::Rational, kDefaultPrime}; }

  bool operator==(const FieldConfig&) const = default;
};

std::string to_string(FieldKind kind);
FieldKind field_kind_from_string(std::string_view text);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Z/pZ with elements stored as canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }
  FieldConfig config() const { return FieldConfig::prime_field(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }

  Element from_int(std::int64_t v) const;
  Element from_mpz(const mpz_class& v) const;
  Element from_mpq(const mpq_class& v) const;  // throws std::domain_error if p divides the denominator

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    if (small_) return (a * b) % p_;
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  /// Sum of a[i]*b[i] with reduction deferred to the end where the modulus allows it.
  Element dot(std::span<const Element> a, std::span<const Element> b) const;
  /// y += s * x
  void axpy(std::span<Element> y, Element s, std::span<const Element> x) const;

  Element random(Rng& rng) const;

  /// Integer lift: the canonical residue.
  mpz_class lift(Element a) const { return mpz_class(std::to_string(a)); }
  std::string to_string(Element a) const { return std::to_string(a); }
  /// Canonical residues print without a sign.
  bool is_negative(Element) const { return false; }

 private:
  std::uint64_t p_;
  bool small_;  // p < 2^32, products fit in 64 bits
};

/// Exact rationals backed by GMP.
class RationalField {
 public:
  using Element = mpq_class;

  /// Random elements are integers in [-range, range].
  static constexpr long kRandomRange = 9;

  FieldConfig config() const { return FieldConfig::rational(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }

  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_mpz(const mpz_class& v) const { return Element(v); }
  Element from_mpq(const mpq_class& v) const { return v; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return a * inv(b); }
  Element pow(Element a, std::uint64_t e) const;

  Element dot(std::span<const Element> a, std::span<const Element> b) const;
  void axpy(std::span<Element> y, const Element& s, std::span<const Element> x) const;

  Element random(Rng& rng) const;

  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }
};

template <class F>
concept ExactField = requires(const F f, typename F::Element a, Rng& rng, std::int64_t i) {
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.one() } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_int(i) } -> std::convertible_to<typename F::Element>;
  { f.add(a, a) } -> std::convertible_to<typename F::Element>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.random(rng) } -> std::convertible_to<typename F::Element>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
};

static_assert(ExactField<PrimeField>);
static_assert(ExactField<RationalField>);

}  // namespace starconf
