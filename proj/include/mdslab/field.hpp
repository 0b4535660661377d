#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdslab/errors.hpp"

namespace mdslab {

// Raw element of GF(p^m): the integer encoding sum_i c_i p^i of the
// coefficient vector (c_0, ..., c_{m-1}). Prime fields use the residue itself.
using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

// Largest field order the table-driven arithmetic supports.
inline constexpr std::uint32_t kMaxFieldOrder = 1024;

// Immutable handle to a finite field GF(p^m). Copies share the same tables.
//
// All arithmetic is table driven; the inverse table is filled with the
// extended Euclidean algorithm (integers for m = 1, polynomials over GF(p)
// otherwise) and the multiplication table through discrete logarithms.
class Field {
 public:
  // Builds GF(p^m). When m > 1 and no modulus is given, the lexicographically
  // smallest monic irreducible of degree m is used (ordered by the encoding of
  // its lower coefficients). `modulus` lists c_0, ..., c_m with c_m = 1.
  static Field make(std::uint32_t p, std::uint32_t m = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  // Parses `GF(p)` or `GF(p^m; modulus=c0,c1,...,cm)`.
  static Field parse(std::string_view token);

  std::uint32_t p() const;
  std::uint32_t m() const;
  std::uint32_t q() const;
  // Coefficients c_0..c_m of the modulus; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const;
  std::string token() const;

  bool contains(Elem a) const { return a < q(); }

  Elem add(Elem a, Elem b) const { return impl_->add[a * impl_->q + b]; }
  Elem mul(Elem a, Elem b) const { return impl_->mul[a * impl_->q + b]; }
  Elem neg(Elem a) const { return impl_->neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  // Image of an integer in the prime subfield.
  Elem from_int(long long value) const;
  // Coefficient vector (length m) of an element, and back.
  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;
  // Some generator of the multiplicative group.
  Elem primitive() const { return impl_->primitive; }

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> mul;
    std::vector<std::uint16_t> neg;
    std::vector<std::uint16_t> inv;
    Elem primitive = 0;
  };
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// Field element that carries its field; the checked, ergonomic counterpart of
// the raw Elem used by the kernels.
class FieldElement {
 public:
  FieldElement(Field field, Elem value);

  const Field& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  Field field_;
  Elem value_;
};

// Multiplicative inverse; throws DivisionByZero for 0.
FieldElement fe_inv(const FieldElement& a);

// Primality and irreducibility helpers exposed for tests.
bool is_prime(std::uint32_t n);
// `poly` is c_0..c_d over GF(p) with c_d != 0. Trial division by every monic
// polynomial of degree <= d/2.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

// Univariate polynomial over a field, coefficients in ascending degree with
// trailing zeros stripped.
class Poly {
 public:
  // Degree reported for the zero polynomial (stands in for minus infinity).
  static constexpr int kZeroDegree = -1;

  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, Vec coeffs);
  static Poly monomial(Field field, Elem coeff, std::size_t degree);

  const Field& field() const { return field_; }
  const Vec& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  // Horner evaluation.
  Elem eval(Elem a) const;
  FieldElement eval(const FieldElement& a) const;

  // True iff deg <= k and the x^{k-1} coefficient vanishes, i.e. the
  // polynomial lies in span{1, x, ..., x^{k-2}, x^k}.
  bool in_vk(std::size_t k) const;

  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize();

  Field field_;
  Vec coeffs_;
};

Elem poly_eval(const Poly& f, Elem a);
FieldElement poly_eval(const Poly& f, const FieldElement& a);
bool vk_member(const Poly& f, std::size_t k);

}  // namespace mdslab
