#include "mdslab/criteria.hpp"

#include <algorithm>

namespace mdslab {

Elem sigma(const Field& f, int i, std::span<const Elem> S) {
  if (i < 0 || static_cast<std::size_t>(i) > S.size()) return 0;
  // Coefficients of prod (1 + a x).
  Vec e(S.size() + 1, 0);
  e[0] = 1;
  for (std::size_t j = 0; j < S.size(); ++j)
    for (std::size_t d = j + 1; d > 0; --d) e[d] = f.add(e[d], f.mul(S[j], e[d - 1]));
  return e[static_cast<std::size_t>(i)];
}

VandermondeEvaluation gen_vandermonde_det(const Field& f, std::span<const Elem> S, std::vector<std::size_t> exponents) {
  const std::size_t s = S.size();
  std::sort(exponents.begin(), exponents.end());
  if (exponents.size() != s) throw PartitionViolation("need exactly |S| exponents");
  if (s == 0) return {1, 1};
  if (std::adjacent_find(exponents.begin(), exponents.end()) != exponents.end())
    throw PartitionViolation("exponents must be distinct");
  if (exponents.front() != 0) throw PartitionViolation("exponent set must contain 0");
  const std::size_t m = exponents.back() + 1;
  std::vector<std::size_t> gaps;
  for (std::size_t e = 0, t = 0; e < m; ++e) {
    if (t < s && exponents[t] == e) ++t;
    else gaps.push_back(e);
  }

  Matrix raw(f, s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) raw.set(i, j, f.pow(S[j], exponents[i]));

  Elem prod = 1;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) prod = f.mul(prod, f.sub(S[j], S[i]));
  const std::size_t sp = gaps.size();
  Elem block = 1;
  if (sp > 0) {
    Matrix sig(f, sp, sp);
    for (std::size_t i = 0; i < sp; ++i)
      for (std::size_t j = 0; j < sp; ++j)
        sig.set(i, j, sigma(f, static_cast<int>(s + i) - static_cast<int>(gaps[j]), S));
    block = determinant(sig);
  }
  VandermondeEvaluation out{determinant(raw), f.mul(prod, block)};
  if (out.raw != out.factored) throw MismatchDetected("generalized Vandermonde sides disagree");
  return out;
}

bool vk_filter(const Poly& gprime, std::size_t k) { return !gprime.in_vk(k); }

Vec deep_hole_candidate(const EvalConfig& cfg, const Poly& g, Elem u_scalar) {
  const Field& f = cfg.field;
  if (!(g.field() == f)) throw FieldMismatch("polynomial and configuration over different fields");
  if (!f.contains(u_scalar)) throw FieldMismatch("u_scalar outside " + f.token());
  Vec out(cfg.n() + 1);
  for (std::size_t i = 0; i < cfg.n(); ++i) out[i] = f.mul(cfg.v[i], g.eval(cfg.S[i]));
  out[cfg.n()] = u_scalar;
  return out;
}

Poly candidate_polynomial(const Field& field, std::size_t k, Elem g_kp1, Elem g_km1, const Poly& f) {
  return Poly::monomial(field, g_kp1, k + 1) + Poly::monomial(field, g_km1, k - 1) + f;
}

namespace {

void check_esgrs_dims(const EvalConfig& cfg, std::size_t k) {
  if (k < 3 || k + 2 > cfg.n()) throw BadDimension("ESGRS needs 3 <= k <= n-2 <= q-2");
}

void check_f(const EvalConfig& cfg, const Poly& f, std::size_t k) {
  if (!(f.field() == cfg.field)) throw FieldMismatch("f over a different field");
  if (!f.in_vk(k)) throw BadInput("f must lie in V_k");
}

}  // namespace

bool class1_is_deep_hole(const EvalConfig& cfg, std::size_t k, Elem g_km1, const Poly& f, Elem u_scalar) {
  check_esgrs_dims(cfg, k);
  check_f(cfg, f, k);
  const Field& fld = cfg.field;
  if (g_km1 == 0) throw BadInput("g_{k-1} must be nonzero");
  const Elem fk = f.coeff(k);
  if (u_scalar == fk) return true;
  Elem delta = fld.mul(g_km1, fld.inv(fld.sub(u_scalar, fk)));
  return is_nk_delta_set(fld, cfg.S, k, delta);
}

std::vector<Elem> ForbiddenSet::admissible(const Field& f) const {
  std::vector<Elem> out;
  for (Elem a = 0; a < f.q(); ++a)
    if (!L.count(a)) out.push_back(a);
  return out;
}

ForbiddenSet forbidden_set(const EvalConfig& cfg, std::size_t k, Elem g_kp1, Elem c, bool allow_zero_gkp1) {
  check_esgrs_dims(cfg, k);
  const Field& f = cfg.field;
  if (g_kp1 == 0 && !allow_zero_gkp1) throw BadInput("g_{k+1} must be nonzero");
  const std::size_t n = cfg.n();
  if (binomial(n, k) + binomial(n, k + 1) > kMaxColumnSubsets) throw TooLarge("too many subsets for the forbidden set");
  ForbiddenSet out;
  out.bound = binomial(n + 1, k + 1);
  Vec sub;
  for_each_subset(n, k, [&](std::span<const std::size_t> idx) {
    sub.clear();
    for (auto i : idx) sub.push_back(cfg.S[i]);
    Elem s1 = sigma(f, 1, sub), s2 = sigma(f, 2, sub);
    out.L1.insert(f.add(f.mul(g_kp1, f.sub(s2, f.mul(s1, s1))), f.mul(c, s1)));
    return true;
  });
  for_each_subset(n, k + 1, [&](std::span<const std::size_t> idx) {
    sub.clear();
    for (auto i : idx) sub.push_back(cfg.S[i]);
    out.L2.insert(f.mul(g_kp1, sigma(f, 2, sub)));
    return true;
  });
  out.L = out.L1;
  out.L.insert(out.L2.begin(), out.L2.end());
  return out;
}

bool class2_is_deep_hole(const EvalConfig& cfg, std::size_t k, Elem g_kp1, Elem g_km1, const Poly& f, Elem u_scalar) {
  check_esgrs_dims(cfg, k);
  check_f(cfg, f, k);
  if (g_kp1 == 0) throw BadInput("g_{k+1} must be nonzero");
  auto fs = forbidden_set(cfg, k, g_kp1, cfg.field.sub(u_scalar, f.coeff(k)));
  return !fs.L.count(g_km1);
}

bool mds_extension_deep_hole_test(const LinearCode& c_esgrs, std::span<const Elem> u) {
  if (u.size() != c_esgrs.n()) throw LengthMismatch("vector length differs from code length");
  Matrix g = c_esgrs.generator().append_row(u);
  const std::size_t k1 = g.rows();
  if (rank(g) != k1) return false;
  if (binomial(g.cols(), k1) > kMaxColumnSubsets) throw TooLarge("too many column subsets");
  return for_each_subset(g.cols(), k1, [&](std::span<const std::size_t> idx) {
    return determinant(g.select_columns(idx)) != 0;
  });
}

}  // namespace mdslab
