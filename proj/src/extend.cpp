#include "mdslab/extend.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "mdslab/parallel.hpp"

namespace mdslab {

namespace {

Matrix block_generator(const LinearCode& c, std::span<const Elem> u) {
  const std::size_t n = c.n(), k = c.k();
  Matrix g(c.field(), k + 1, n + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) g.set(i, j, c.generator().at(i, j));
  for (std::size_t j = 0; j < n; ++j) g.set(k, j, u[j]);
  g.set(k, n, 1);
  return g;
}

ExtensionResult extend_impl(const LinearCode& c, const SyndromeTable* table, std::span<const Elem> u, bool do_classify) {
  if (u.size() != c.n()) throw LengthMismatch("deep hole length differs from code length");
  for (Elem x : u)
    if (!c.field().contains(x)) throw FieldMismatch("vector entry outside " + c.field().token());
  ExtensionResult r{.base = c,
                    .u = Vec(u.begin(), u.end()),
                    .extended = LinearCode::from_generator(block_generator(c, u))};
  if (table) {
    r.hypotheses_checked = true;
    const bool radius_ok = table->covering_radius() + c.k() == c.n();
    const bool deep = table->error_distance(u) == table->covering_radius();
    r.hypotheses_hold = radius_ok && deep;
    if (!radius_ok)
      r.warnings.push_back("covering radius " + std::to_string(table->covering_radius()) + " differs from n-k = " +
                           std::to_string(c.n() - c.k()));
    if (!deep) r.warnings.push_back("u is not a deep hole");
  } else {
    r.warnings.push_back("syndrome table too large; hypotheses not checked");
  }
  if (!(shorten(r.extended, c.n()) == c)) throw MismatchDetected("shortening the extension does not recover the base code");
  if (do_classify) {
    r.base_class = classify(c);
    r.extended_class = classify(r.extended);
    r.nongrs_inherited = r.hypotheses_hold && r.base_class.tag != CodeTag::OTHER;
  }
  return r;
}

// Elimination-based independence test that charges one op per field
// addition, multiplication or inversion.
bool independent_counted(const Field& f, std::vector<Vec> cols, std::uint64_t& ops) {
  if (cols.empty()) return true;
  const std::size_t rows = cols[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows && cols[c][piv] == 0) ++piv;
    if (piv == rows) return false;
    for (auto& col : cols) std::swap(col[r], col[piv]);
    Elem inv = f.inv(cols[c][r]);
    ++ops;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (cols[c][i] == 0) continue;
      Elem factor = f.mul(cols[c][i], inv);
      ++ops;
      for (std::size_t cc = c; cc < cols.size(); ++cc) {
        cols[cc][i] = f.sub(cols[cc][i], f.mul(factor, cols[cc][r]));
        ops += 2;
      }
    }
    ++r;
  }
  return true;
}

BigInt big_binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt out = 1;
  for (std::size_t i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
  return out;
}

BigInt big_pow(std::uint64_t base, std::size_t e) {
  BigInt out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

ExtensionResult extend_by_deep_hole(const LinearCode& c, std::span<const Elem> u) {
  if (u.size() != c.n()) throw LengthMismatch("deep hole length differs from code length");
  std::optional<SyndromeTable> table;
  try {
    table = SyndromeTable::build(c);
  } catch (const TooLarge&) {
  }
  return extend_impl(c, table ? &*table : nullptr, u, true);
}

ExtensionResult extend_by_deep_hole(const SyndromeTable& table, std::span<const Elem> u) {
  return extend_impl(table.code(), &table, u, true);
}

LinearCode second_kind_extend(const LinearCode& c, std::span<const Elem> u) {
  if (u.size() != c.n()) throw LengthMismatch("vector length differs from code length");
  if (c.k() == 0) return LinearCode::zero(c.field(), c.n() + 1);
  return LinearCode::from_generator(c.generator().append_column(c.generator().right_mul(u)));
}

Matrix second_kind_parity_check(const LinearCode& c, std::span<const Elem> u) {
  if (u.size() != c.n()) throw LengthMismatch("vector length differs from code length");
  const Field& f = c.field();
  Matrix h = parity_check_matrix(c);
  Matrix out(f, h.rows() + 1, c.n() + 1);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < c.n(); ++j) out.set(i, j, h.at(i, j));
  for (std::size_t j = 0; j < c.n(); ++j) out.set(h.rows(), j, u[j]);
  out.set(h.rows(), c.n(), f.neg(1));
  return out;
}

LinearCode dual_path_extend(const LinearCode& c, std::span<const Elem> u) {
  return dual(second_kind_extend(dual(c), u));
}

MkzReport mkz_check(const LinearCode& c, std::span<const Elem> u) {
  const std::size_t n = c.n(), k = c.k();
  if (u.size() != n) throw LengthMismatch("vector length differs from code length");
  if (k < 2 || k + 2 > n) throw BadDimension("need 2 <= k <= n-2");
  if (binomial(n, k - 2) > kMaxColumnSubsets) throw TooLarge("too many column subsets");
  const Field& f = c.field();
  std::uint64_t hyper = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    hyper *= f.q();
    if (hyper > kMaxMessages) throw TooLarge("hyperplane too large to enumerate");
  }
  if (classify(c).tag != CodeTag::NMDS) throw NotNmds("the base code is not NMDS");

  const Matrix& g = c.generator();
  MkzReport rep;
  std::uint64_t& ops = rep.ops_count;

  Vec w(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      w[i] = f.add(w[i], f.mul(g.at(i, j), u[j]));
      ops += 2;
    }
  const bool w_zero = std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });

  std::vector<Vec> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = g.column(j);

  if (w_zero) {
    rep.cond1 = false;
  } else {
    rep.cond1 = for_each_subset(n, k - 2, [&](std::span<const std::size_t> idx) {
      std::vector<Vec> m;
      for (auto i : idx) m.push_back(cols[i]);
      m.push_back(w);
      return independent_counted(f, std::move(m), ops);
    });
  }
  if (!w_zero) {
    rep.cond2_evaluated = true;
    // Basis of w^⊥: e_j - (w_j / w_p) e_p for j != p.
    std::size_t p = 0;
    while (w[p] == 0) ++p;
    Elem winv = f.inv(w[p]);
    ++ops;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == p) continue;
      Vec b(k, 0);
      b[j] = 1;
      b[p] = f.neg(f.mul(w[j], winv));
      ops += 2;
      basis.push_back(std::move(b));
    }
    Vec digits(basis.size(), 0), v(k, 0);
    rep.cond2 = true;
    while (true) {
      // Next combination; adding b_j advances digit j by one modulo q.
      std::size_t j = 0;
      while (j < basis.size()) {
        for (std::size_t t = 0; t < k; ++t) v[t] = f.add(v[t], basis[j][t]);
        ops += k;
        if (++digits[j] < f.q()) break;
        digits[j] = 0;
        ++j;
      }
      if (j == basis.size()) break;
      std::size_t hits = 0;
      for (const auto& col : cols) {
        Elem s = 0;
        for (std::size_t t = 0; t < k; ++t) s = f.add(s, f.mul(col[t], v[t]));
        ops += 2 * k;
        hits += s == 0;
      }
      if (hits > k - 1) {
        rep.cond2 = false;
        break;
      }
    }
  }
  rep.verdict = rep.cond1 && rep.cond2;
  return rep;
}

BigInt mkz_cost_bound(std::size_t n, std::size_t k, std::uint64_t q, bool dual_path, bool exhaustive) {
  if (k < 2 || k > n) throw BadDimension("need 2 <= k <= n");
  BigInt body;
  if (!dual_path) {
    body = big_binomial(n, k - 2) * k * (k - 1) * (k - 1) + big_pow(q, k - 1) * n * k;
  } else {
    const std::size_t r = n - k;
    BigInt tail = r >= 1 ? big_pow(q, r - 1) * n * r : BigInt(0);
    BigInt head = r >= 1 ? big_binomial(n, k + 2) * r * (r - 1) * (r - 1) : BigInt(0);
    body = head + tail;
  }
  return exhaustive ? body * big_pow(q, n) : body;
}

namespace {

__extension__ typedef unsigned __int128 u128;

struct Point {
  Elem g_kp1, g_km1, u_scalar;
  std::uint64_t f_index;
  int branch;
};

Poly f_from_index(const Field& fld, std::size_t k, std::uint64_t idx) {
  Vec c(k + 1, 0);
  for (std::size_t i = 0; i <= k; ++i) {
    if (i + 1 == k) continue;
    c[i] = static_cast<Elem>(idx % fld.q());
    idx /= fld.q();
  }
  return Poly(fld, c);
}

std::uint64_t index_of_f(const Field& fld, std::size_t k, const Poly& f) {
  std::uint64_t idx = 0;
  for (std::size_t i = k + 1; i-- > 0;) {
    if (i + 1 == k) continue;
    idx = idx * fld.q() + f.coeff(i);
  }
  return idx;
}

}  // namespace

void algorithm1(const EvalConfig& cfg, std::size_t k, const Algorithm1Options& opts,
                const std::function<bool(const Algorithm1Output&)>& visit) {
  const Field& fld = cfg.field;
  const std::size_t n = cfg.n();
  if (k < 3 || k + 2 > n) throw BadDimension("ESGRS needs 3 <= k <= n-2 <= q-2");
  if (opts.f && (!(opts.f->field() == fld) || !opts.f->in_vk(k))) throw BadInput("pinned f must lie in V_k");
  if (binomial(n, k) + binomial(n, k + 1) > kMaxColumnSubsets) throw TooLarge("too many subsets for the forbidden set");
  if (opts.budget == 0) return;

  std::uint64_t f_count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (f_count > (std::uint64_t{1} << 62) / fld.q()) throw TooLarge("V_k too large to index");
    f_count *= fld.q();
  }

  auto elems = [&](const std::optional<Elem>& pin) {
    std::vector<Elem> out;
    if (pin) {
      if (!fld.contains(*pin)) throw FieldMismatch("pinned value outside " + fld.token());
      out.push_back(*pin);
    } else {
      out.resize(fld.q());
      std::iota(out.begin(), out.end(), Elem{0});
    }
    return out;
  };
  const auto ax_kp1 = elems(opts.g_kp1);
  const auto ax_km1 = elems(opts.g_km1);
  const auto ax_u = elems(opts.u_scalar);
  const std::uint64_t f_axis = opts.f ? 1 : f_count;
  const u128 total = static_cast<u128>(ax_kp1.size()) * ax_km1.size() * f_axis * ax_u.size();
  if (total >> 63) throw TooLarge("parameter grid too large to index");
  const std::uint64_t grid = static_cast<std::uint64_t>(total);
  // With a seed the grid is walked by an affine permutation of its index space.
  std::uint64_t mult = 1, off = 0;
  if (opts.seed && grid > 1) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, grid - 1);
    do mult = dist(rng); while (std::gcd(mult, grid) != 1);
    off = dist(rng);
  }

  const LinearCode base = esgrs(cfg, k);
  const SyndromeTable table = SyndromeTable::build(base);
  const CodeClass base_class = opts.classify ? classify(base) : CodeClass{};
  const CodeClass promised = esgrs_classify(cfg, k);
  const std::size_t promised_d = promised.tag == CodeTag::MDS ? n - k + 2 : n - k + 1;

  std::vector<bool> delta_set(fld.q());
  for (Elem d = 0; d < fld.q(); ++d) delta_set[d] = is_nk_delta_set(fld, cfg.S, k, d);
  std::map<std::pair<Elem, Elem>, std::set<Elem>> forbidden;

  std::vector<Point> batch;
  bool stopped = false;
  auto flush = [&] {
    std::vector<std::optional<Algorithm1Output>> built(batch.size());
    parallel_ranges(
        batch.size(),
        [&](unsigned, std::uint64_t b, std::uint64_t e) {
          for (std::uint64_t i = b; i < e; ++i) {
            const Point& pt = batch[i];
            Poly f = f_from_index(fld, k, pt.f_index);
            Poly g = candidate_polynomial(fld, k, pt.g_kp1, pt.g_km1, f);
            Vec u = deep_hole_candidate(cfg, g, pt.u_scalar);
            ExtensionResult res = extend_impl(base, &table, u, false);
            if (opts.classify) {
              res.base_class = base_class;
              res.extended_class = classify(res.extended);
              res.nongrs_inherited = res.hypotheses_hold && base_class.tag != CodeTag::OTHER;
            }
            built[i].emplace(Algorithm1Output{.branch = pt.branch,
                                              .g_kp1 = pt.g_kp1,
                                              .g_km1 = pt.g_km1,
                                              .u_scalar = pt.u_scalar,
                                              .f = std::move(f),
                                              .g = std::move(g),
                                              .advertised_tag = promised.tag,
                                              .advertised_d = promised_d,
                                              .result = std::move(res),
                                              .classified = opts.classify});
          }
        },
        1);
    for (auto& out : built)
      if (!stopped && !visit(*out)) stopped = true;
    batch.clear();
  };

  const std::uint64_t steps = std::min(grid, opts.budget);
  for (std::uint64_t step = 0; step < steps && !stopped; ++step) {
    std::uint64_t idx = static_cast<std::uint64_t>((static_cast<u128>(step) * mult + off) % grid);
    const Elem u = ax_u[idx % ax_u.size()];
    idx /= ax_u.size();
    const std::uint64_t f_index = opts.f ? index_of_f(fld, k, *opts.f) : idx % f_axis;
    idx /= f_axis;
    const Elem gkm1 = ax_km1[idx % ax_km1.size()];
    const Elem gkp1 = ax_kp1[idx / ax_km1.size()];
    const Elem fk = static_cast<Elem>(f_index / (f_count / fld.q()));
    int branch = 0;
    if (gkp1 == 0) {
      if (gkm1 == 0) continue;
      if (u == fk) branch = 1;
      else if (delta_set[fld.mul(gkm1, fld.inv(fld.sub(u, fk)))]) branch = 2;
    } else {
      const Elem c = fld.sub(u, fk);
      auto it = forbidden.find({gkp1, c});
      if (it == forbidden.end()) it = forbidden.emplace(std::pair{gkp1, c}, forbidden_set(cfg, k, gkp1, c).L).first;
      if (!it->second.count(gkm1)) branch = 3;
    }
    if (branch == 0) continue;
    batch.push_back({gkp1, gkm1, u, f_index, branch});
    if (batch.size() >= 64) flush();
  }
  flush();
}

std::vector<Algorithm1Output> algorithm1_collect(const EvalConfig& cfg, std::size_t k, const Algorithm1Options& opts) {
  std::vector<Algorithm1Output> out;
  algorithm1(cfg, k, opts, [&](const Algorithm1Output& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

}  // namespace mdslab
