#include "mdslab/field.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <sstream>

namespace mdslab {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on integers.
  long long r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long t = r0 / r1;
    long long r2 = r0 - t * r1;
    r0 = r1;
    r1 = r2;
    long long s2 = s0 - t * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw DivisionByZero("element is not invertible");
  long long res = s0 % static_cast<long long>(p);
  if (res < 0) res += p;
  return static_cast<std::uint32_t>(res);
}

// Remainder and quotient of a / b over GF(p); b must be nonzero.
void poly_divmod(Coeffs a, const Coeffs& b, std::uint32_t p, Coeffs& quot, Coeffs& rem) {
  trim(a);
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    std::uint32_t factor = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.back()) * lead_inv) % p);
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = (static_cast<std::uint64_t>(factor) * b[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  rem = std::move(a);
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  trim(out);
  return out;
}

Coeffs poly_sub(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  trim(out);
  return out;
}

// Inverse of `a` modulo the irreducible `modulus` by extended polynomial Euclid.
Coeffs poly_inv_mod(const Coeffs& a, const Coeffs& modulus, std::uint32_t p) {
  Coeffs r0 = modulus, r1 = a, s0 = {}, s1 = {1};
  trim(r1);
  if (r1.empty()) throw DivisionByZero("inverse of zero");
  while (!r1.empty()) {
    Coeffs quot, rem;
    poly_divmod(r0, r1, p, quot, rem);
    Coeffs s2 = poly_sub(s0, poly_mul(quot, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant; scale s0 by its inverse.
  std::uint32_t c = inv_mod_p(r0[0], p);
  for (auto& x : s0) x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * c) % p);
  trim(s0);
  return s0;
}

Coeffs decode(Elem a, std::uint32_t p, std::uint32_t m) {
  Coeffs c(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

Elem encode(const Coeffs& c, std::uint32_t p) {
  Elem a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
  return a;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Coeffs f = poly;
  trim(f);
  if (f.size() < 2) return false;
  std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Coeffs g = decode(static_cast<Elem>(low), p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      Coeffs quot, rem;
      poly_divmod(f, g, p, quot, rem);
      if (rem.empty()) return false;
    }
  }
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw CompositeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw BadInput("extension degree must be at least 1");
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q64 *= p;
    if (q64 > kMaxFieldOrder)
      throw TooLarge("field order exceeds " + std::to_string(kMaxFieldOrder));
  }
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = static_cast<std::uint32_t>(q64);
  const std::uint32_t q = impl->q;

  if (m > 1) {
    if (modulus) {
      Coeffs mod = *modulus;
      if (mod.size() != m + 1 || mod.back() != 1)
        throw BadInput("modulus must be monic of degree " + std::to_string(m));
      for (auto c : mod)
        if (c >= p) throw BadInput("modulus coefficient out of range");
      if (!is_irreducible_mod_p(mod, p)) throw ReducibleModulus("modulus is reducible over GF(p)");
      impl->modulus = std::move(mod);
    } else {
      for (Elem low = 0; low < q; ++low) {
        Coeffs cand = decode(low, p, m);
        cand.push_back(1);
        if (is_irreducible_mod_p(cand, p)) {
          impl->modulus = std::move(cand);
          break;
        }
      }
    }
  } else if (modulus && !modulus->empty()) {
    if (modulus->size() != 2 || (*modulus)[1] != 1) throw BadInput("prime field modulus must be x + c");
  }

  impl->add.resize(static_cast<std::size_t>(q) * q);
  impl->mul.resize(static_cast<std::size_t>(q) * q);
  impl->neg.resize(q);
  impl->inv.assign(q, 0);

  std::vector<Coeffs> digits(q);
  for (Elem a = 0; a < q; ++a) digits[a] = decode(a, p, m);
  for (Elem a = 0; a < q; ++a) {
    Coeffs n(m);
    for (std::uint32_t i = 0; i < m; ++i) n[i] = (p - digits[a][i]) % p;
    impl->neg[a] = static_cast<std::uint16_t>(encode(n, p));
    for (Elem b = 0; b < q; ++b) {
      Coeffs s(m);
      for (std::uint32_t i = 0; i < m; ++i) s[i] = (digits[a][i] + digits[b][i]) % p;
      impl->add[a * q + b] = static_cast<std::uint16_t>(encode(s, p));
    }
  }

  auto slow_mul = [&](Elem a, Elem b) -> Elem {
    if (m == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
    Coeffs prod = poly_mul(digits[a], digits[b], p);
    Coeffs quot, rem;
    poly_divmod(prod, impl->modulus, p, quot, rem);
    rem.resize(m, 0);
    return encode(rem, p);
  };

  // Locate a primitive element, then fill multiplication through logs.
  std::vector<std::uint32_t> exp_table(q - 1), log_table(q, 0);
  for (Elem g = 1; g < q; ++g) {
    Elem x = 1;
    std::uint32_t order = 0;
    do {
      x = slow_mul(x, g);
      ++order;
    } while (x != 1 && order < q);
    if (order == q - 1) {
      impl->primitive = g;
      break;
    }
  }
  {
    Elem x = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      exp_table[i] = x;
      log_table[x] = i;
      x = slow_mul(x, impl->primitive);
    }
  }
  for (Elem a = 0; a < q; ++a) {
    for (Elem b = 0; b < q; ++b) {
      Elem v = 0;
      if (a != 0 && b != 0) v = exp_table[(log_table[a] + log_table[b]) % (q - 1)];
      impl->mul[a * q + b] = static_cast<std::uint16_t>(v);
    }
  }
  for (Elem a = 1; a < q; ++a) {
    Elem b = (m == 1) ? inv_mod_p(a, p) : [&] {
      Coeffs r = poly_inv_mod(digits[a], impl->modulus, p);
      r.resize(m, 0);
      return encode(r, p);
    }();
    impl->inv[a] = static_cast<std::uint16_t>(b);
  }
  return Field(std::move(impl));
}

Field Field::parse(std::string_view token) {
  static const std::regex prime_re(R"(^\s*GF\(\s*(\d+)\s*\)\s*$)");
  static const std::regex ext_re(R"(^\s*GF\(\s*(\d+)\s*\^\s*(\d+)\s*(?:;\s*modulus\s*=\s*([0-9,\s]+))?\)\s*$)");
  std::string s(token);
  std::smatch match;
  if (std::regex_match(s, match, prime_re)) {
    return make(static_cast<std::uint32_t>(std::stoul(match[1].str())));
  }
  if (std::regex_match(s, match, ext_re)) {
    auto p = static_cast<std::uint32_t>(std::stoul(match[1].str()));
    auto m = static_cast<std::uint32_t>(std::stoul(match[2].str()));
    std::optional<Coeffs> mod;
    if (match[3].matched) {
      Coeffs c;
      std::stringstream ss(match[3].str());
      std::string item;
      while (std::getline(ss, item, ',')) c.push_back(static_cast<std::uint32_t>(std::stoul(item)));
      mod = std::move(c);
    }
    if (m == 1) return make(p, 1);
    return make(p, m, mod);
  }
  throw ParseError("cannot parse field token '" + s + "'");
}

std::uint32_t Field::p() const { return impl_->p; }
std::uint32_t Field::m() const { return impl_->m; }
std::uint32_t Field::q() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }

std::string Field::token() const {
  if (impl_->m == 1) return "GF(" + std::to_string(impl_->p) + ")";
  std::string out = "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->m) + "; modulus=";
  for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(impl_->modulus[i]);
  }
  return out + ")";
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  return impl_->inv[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::from_int(long long value) const {
  long long r = value % static_cast<long long>(impl_->p);
  if (r < 0) r += impl_->p;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const { return decode(a, impl_->p, impl_->m); }

Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > impl_->m) throw BadInput("too many coefficients for this field");
  Coeffs c(coeffs.begin(), coeffs.end());
  for (auto& x : c) x %= impl_->p;
  return encode(c, impl_->p);
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->m == b.impl_->m && a.impl_->modulus == b.impl_->modulus;
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_))
    throw FieldMismatch("value " + std::to_string(value) + " is not an element of " + field_.token());
}

FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("operands live in different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field(), a.field().add(a.value(), b.value())};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field(), a.field().sub(a.value(), b.value())};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field(), a.field().mul(a.value(), b.value())};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field(), a.field().div(a.value(), b.value())};
}
FieldElement operator-(const FieldElement& a) { return {a.field(), a.field().neg(a.value())}; }
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field() == b.field() && a.value() == b.value();
}

FieldElement fe_inv(const FieldElement& a) { return a.inv(); }

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(Field field, Vec coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_)
    if (!field_.contains(c)) throw FieldMismatch("coefficient outside " + field_.token());
  normalize();
}

Poly Poly::monomial(Field field, Elem coeff, std::size_t degree) {
  Vec c(degree + 1, 0);
  c[degree] = coeff;
  return Poly(std::move(field), std::move(c));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Elem Poly::eval(Elem a) const {
  if (!field_.contains(a)) throw FieldMismatch("evaluation point outside " + field_.token());
  Elem acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, a), coeffs_[i]);
  return acc;
}

FieldElement Poly::eval(const FieldElement& a) const {
  if (!(a.field() == field_)) throw FieldMismatch("evaluation point lives in another field");
  return {field_, eval(a.value())};
}

bool Poly::in_vk(std::size_t k) const {
  if (k < 2) throw BadInput("V_k requires k >= 2");
  if (degree() > static_cast<int>(k)) return false;
  return coeff(k - 1) == 0;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || coeffs_[i] != 1) out << coeffs_[i];
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("polynomials over different fields");
  Vec c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field().add(a.coeff(i), b.coeff(i));
  return Poly(a.field(), std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("polynomials over different fields");
  Vec c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field().sub(a.coeff(i), b.coeff(i));
  return Poly(a.field(), std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  const Field& f = a.field();
  Vec c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
  return Poly(f, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) { return a.field() == b.field() && a.coeffs() == b.coeffs(); }

Elem poly_eval(const Poly& f, Elem a) { return f.eval(a); }
FieldElement poly_eval(const Poly& f, const FieldElement& a) { return f.eval(a); }
bool vk_member(const Poly& f, std::size_t k) { return f.in_vk(k); }

}  // namespace mdslab
