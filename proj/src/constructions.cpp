#include "mdslab/constructions.hpp"

#include <set>

namespace mdslab {

EvalConfig EvalConfig::make(Field field, Vec S, Vec v) {
  if (S.size() != v.size()) throw LengthMismatch("S and v must have the same length");
  if (S.empty()) throw BadInput("evaluation set is empty");
  if (S.size() > field.q()) throw BadInput("evaluation set longer than the field");
  std::set<Elem> seen;
  for (Elem a : S) {
    if (!field.contains(a)) throw FieldMismatch("evaluation point outside " + field.token());
    if (!seen.insert(a).second) throw BadInput("evaluation points must be distinct");
  }
  for (Elem x : v) {
    if (!field.contains(x)) throw FieldMismatch("multiplier outside " + field.token());
    if (x == 0) throw BadInput("multipliers must be nonzero");
  }
  return EvalConfig{std::move(field), std::move(S), std::move(v)};
}

EvalConfig EvalConfig::ones(Field field, Vec S) {
  Vec v(S.size(), 1);
  return make(std::move(field), std::move(S), std::move(v));
}

namespace {

void check_grs_dims(const EvalConfig& cfg, std::size_t k) {
  if (k < 1 || k > cfg.n()) throw BadDimension("GRS needs 1 <= k <= n");
}

Matrix power_rows(const EvalConfig& cfg, const std::vector<std::size_t>& exps) {
  const Field& f = cfg.field;
  Matrix g(f, exps.size(), cfg.n());
  for (std::size_t r = 0; r < exps.size(); ++r)
    for (std::size_t i = 0; i < cfg.n(); ++i) g.set(r, i, f.mul(cfg.v[i], f.pow(cfg.S[i], exps[r])));
  return g;
}

Vec unit(std::size_t len, std::size_t pos, Elem value = 1) {
  Vec e(len, 0);
  e[pos] = value;
  return e;
}

}  // namespace

Matrix grs_generator(const EvalConfig& cfg, std::size_t k) {
  check_grs_dims(cfg, k);
  std::vector<std::size_t> exps(k);
  for (std::size_t j = 0; j < k; ++j) exps[j] = j;
  return power_rows(cfg, exps);
}

Matrix egrs_generator(const EvalConfig& cfg, std::size_t k) {
  return grs_generator(cfg, k).append_column(unit(k, k - 1));
}

Matrix esgrs_generator(const EvalConfig& cfg, std::size_t k) {
  const std::size_t n = cfg.n();
  if (k < 3 || k + 2 > n || n > cfg.field.q())
    throw BadDimension("ESGRS needs 3 <= k <= n-2 <= q-2");
  std::vector<std::size_t> exps;
  for (std::size_t j = 0; j + 1 < k; ++j) exps.push_back(j);
  exps.push_back(k);
  return power_rows(cfg, exps).append_column(unit(k, k - 1));
}

Matrix roth_lempel_generator(const Field& field, const Vec& S, std::size_t k, Elem delta) {
  auto cfg = EvalConfig::ones(field, S);
  const std::size_t n = cfg.n();
  if (k < 3 || k > n) throw BadDimension("Roth-Lempel needs 3 <= k <= n <= q");
  if (!field.contains(delta)) throw FieldMismatch("delta outside " + field.token());
  Vec tail(k, 0);
  tail[k - 2] = 1;
  tail[k - 1] = delta;
  return grs_generator(cfg, k).append_column(unit(k, k - 1)).append_column(tail);
}

LinearCode grs(const EvalConfig& cfg, std::size_t k) { return LinearCode::from_generator(grs_generator(cfg, k)); }
LinearCode egrs(const EvalConfig& cfg, std::size_t k) { return LinearCode::from_generator(egrs_generator(cfg, k)); }
LinearCode esgrs(const EvalConfig& cfg, std::size_t k) { return LinearCode::from_generator(esgrs_generator(cfg, k)); }
LinearCode roth_lempel(const Field& field, const Vec& S, std::size_t k, Elem delta) {
  return LinearCode::from_generator(roth_lempel_generator(field, S, k, delta));
}

bool is_nk_delta_set(const Field& field, const Vec& S, std::size_t k, Elem delta) {
  if (k < 1 || k > S.size()) throw BadDimension("(n,k,delta)-set needs 1 <= k <= n");
  if (binomial(S.size(), k) > kMaxColumnSubsets) throw TooLarge("too many k-subsets");
  return for_each_subset(S.size(), k, [&](std::span<const std::size_t> idx) {
    Elem sum = 0;
    for (auto i : idx) sum = field.add(sum, S[i]);
    return sum != delta;
  });
}

bool is_zero_sum_free(const Field& field, const Vec& S, std::size_t k) { return is_nk_delta_set(field, S, k, 0); }

CodeClass esgrs_classify(const EvalConfig& cfg, std::size_t k) {
  const std::size_t n = cfg.n();
  if (k < 3 || k + 2 > n) throw BadDimension("ESGRS needs 3 <= k <= n-2 <= q-2");
  // The code has length n+1.
  if (is_zero_sum_free(cfg.field, cfg.S, k)) return {CodeTag::MDS, n - k + 2, k + 1};
  return {CodeTag::NMDS, n - k + 1, k};
}

}  // namespace mdslab
