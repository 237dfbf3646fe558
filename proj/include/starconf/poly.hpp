#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "starconf/field.hpp"
#include "starconf/monomial.hpp"

namespace starconf {

/// Homogeneous polynomial of a declared degree in `nvars` variables over F.
/// Terms are kept in graded-lex order; stored coefficients are never zero.
template <ExactField F>
class MultiPoly {
 public:
  using Element = typename F::Element;
  using TermMap = std::map<Monomial, Element, GradedLexGreater>;

  MultiPoly(F field, int nvars, int degree) : field_(std::move(field)), nvars_(nvars), degree_(degree) {
    if (nvars < 1) throw std::invalid_argument("MultiPoly: nvars must be >= 1");
    if (degree < 0) throw std::invalid_argument("MultiPoly: degree must be >= 0");
  }

  static MultiPoly constant(F field, int nvars, Element c) {
    MultiPoly p(field, nvars, 0);
    p.add_term(Monomial::one(nvars), std::move(c));
    return p;
  }

  static MultiPoly variable(F field, int nvars, int index) {
    MultiPoly p(field, nvars, 1);
    p.add_term(Monomial::variable(nvars, index), field.one());
    return p;
  }

  /// sum_i coeffs[i] * x_i
  static MultiPoly linear(F field, std::span<const Element> coeffs) {
    const int nvars = static_cast<int>(coeffs.size());
    MultiPoly p(field, nvars, 1);
    for (int i = 0; i < nvars; ++i) p.add_term(Monomial::variable(nvars, i), coeffs[static_cast<std::size_t>(i)]);
    return p;
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Element coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Adds c * m; the monomial must match nvars and the declared degree.
  void add_term(const Monomial& m, const Element& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("add_term: variable count mismatch");
    if (static_cast<int>(m.degree()) != degree_) throw std::invalid_argument("add_term: monomial breaks homogeneity");
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_same_shape(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    check_same_shape(o);
    for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  MultiPoly operator-() const {
    MultiPoly out(field_, nvars_, degree_);
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_.neg(c));
    return out;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly product: variable count mismatch");
    MultiPoly out(a.field_, a.nvars_, a.degree_ + b.degree_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, a.field_.mul(ca, cb));
    }
    return out;
  }

  MultiPoly scaled(const Element& s) const {
    MultiPoly out(field_, nvars_, degree_);
    if (field_.is_zero(s)) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_.mul(s, c));
    return out;
  }

  /// Monomial shift: this * m.
  MultiPoly shifted(const Monomial& m) const {
    MultiPoly out(field_, nvars_, degree_ + static_cast<int>(m.degree()));
    for (const auto& [t, c] : terms_) out.terms_.emplace(t * m, c);
    return out;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(field_, nvars_, field_.one());
    MultiPoly base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  Element eval(std::span<const Element> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("eval: point length does not match nvars");
    Element acc = field_.zero();
    for (const auto& [m, c] : terms_) {
      Element v = c;
      for (int i = 0; i < nvars_; ++i) {
        const unsigned e = m[i];
        if (e != 0) v = field_.mul(v, field_.pow(point[static_cast<std::size_t>(i)], e));
      }
      acc = field_.add(acc, v);
    }
    return acc;
  }

  /// Dense coefficient vector indexed by monomial_basis(nvars, degree).
  std::vector<Element> coefficient_vector() const {
    std::vector<Element> out(basis_size(nvars_, degree_), field_.zero());
    for (const auto& [m, c] : terms_) out[monomial_rank(m)] = c;
    return out;
  }

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  void check_same_shape(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    if (o.degree_ != degree_) throw std::invalid_argument("MultiPoly: degree mismatch in sum");
  }

  F field_;
  int nvars_;
  int degree_;
  TermMap terms_;
};

/// Dense random form of degree d; one draw per basis monomial in basis order,
/// so the result is a pure function of the rng state.
template <ExactField F>
MultiPoly<F> random_form(const F& field, int nvars, int d, Rng& rng) {
  MultiPoly<F> p(field, nvars, d);
  for (const Monomial& m : monomial_basis(nvars, d)) p.add_term(m, field.random(rng));
  return p;
}

/// Coefficients of a linear form in variable order.
template <ExactField F>
std::vector<typename F::Element> linear_coefficients(const MultiPoly<F>& form) {
  if (form.degree() != 1) throw std::invalid_argument("linear_coefficients: form is not linear");
  std::vector<typename F::Element> out;
  out.reserve(static_cast<std::size_t>(form.nvars()));
  for (int i = 0; i < form.nvars(); ++i) out.push_back(form.coefficient(Monomial::variable(form.nvars(), i)));
  return out;
}

}  // namespace starconf
