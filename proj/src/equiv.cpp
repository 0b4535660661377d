#include "mdslab/equiv.hpp"

#include <atomic>
#include <map>

#include "mdslab/constructions.hpp"
#include "mdslab/parallel.hpp"

namespace mdslab {

namespace {

constexpr std::uint64_t kMaxSquareMessages = 2'000'000;

// Scales a nonzero vector so its first nonzero entry is 1; returns that entry.
Elem normalize(const Field& f, Vec& v) {
  std::size_t i = 0;
  while (i < v.size() && v[i] == 0) ++i;
  if (i == v.size()) return 0;
  Elem lead = v[i], inv = f.inv(lead);
  for (auto& x : v) x = f.mul(x, inv);
  return lead;
}

struct ColumnIndex {
  std::map<Vec, std::vector<std::size_t>> points;  // projective point -> columns
  std::vector<Elem> lead;                          // column = lead * point
  std::vector<std::size_t> zeros;
};

ColumnIndex index_columns(const Matrix& g) {
  ColumnIndex idx;
  idx.lead.resize(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) {
    Vec col = g.column(j);
    Elem lead = normalize(g.field(), col);
    idx.lead[j] = lead;
    if (lead == 0) idx.zeros.push_back(j);
    else idx.points[col].push_back(j);
  }
  return idx;
}

// Tries the transformation T (rows act on columns of A); on success fills the witness.
bool try_transform(const Matrix& t, const Matrix& ga, const ColumnIndex& bi, EquivWitness& w) {
  const Field& f = ga.field();
  const std::size_t n = ga.cols();
  std::map<Vec, std::size_t> used;
  std::size_t zeros_used = 0;
  w.perm.assign(n, 0);
  w.scale.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Vec y = t.right_mul(ga.column(i));
    Elem mu = normalize(f, y);
    if (mu == 0) {
      if (zeros_used == bi.zeros.size()) return false;
      w.perm[i] = bi.zeros[zeros_used++];
      w.scale[i] = 1;
      continue;
    }
    auto it = bi.points.find(y);
    if (it == bi.points.end()) return false;
    std::size_t& u = used[y];
    if (u == it->second.size()) return false;
    std::size_t j = it->second[u++];
    w.perm[i] = j;
    w.scale[i] = f.div(bi.lead[j], mu);
  }
  w.found = true;
  return true;
}

// B_F diag(lambda) A_F^{-1}.
Matrix transform(const Matrix& bf, const Vec& lambda, const Matrix& af_inv) {
  Matrix scaled = bf;
  for (std::size_t r = 0; r < scaled.rows(); ++r)
    for (std::size_t c = 0; c < scaled.cols(); ++c) scaled.set(r, c, bf.field().mul(bf.at(r, c), lambda[c]));
  return scaled * af_inv;
}

std::uint64_t falling(std::size_t n, std::size_t r) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (out > UINT64_MAX / (n - i)) return UINT64_MAX;
    out *= n - i;
  }
  return out;
}

// Visits ordered r-tuples of distinct indices below n whose first entry is `first`.
template <class F>
bool ordered_tuples(std::size_t n, std::size_t r, std::size_t first, F&& fn) {
  std::vector<std::size_t> tup{first};
  std::vector<bool> taken(n, false);
  taken[first] = true;
  std::function<bool()> rec = [&]() -> bool {
    if (tup.size() == r) return fn(std::span<const std::size_t>(tup));
    for (std::size_t j = 0; j < n; ++j) {
      if (taken[j]) continue;
      taken[j] = true;
      tup.push_back(j);
      bool go = rec();
      tup.pop_back();
      taken[j] = false;
      if (!go) return false;
    }
    return true;
  };
  return rec();
}

std::optional<std::vector<std::size_t>> find_frame(const Matrix& g) {
  const std::size_t n = g.cols(), k = g.rows();
  std::optional<std::vector<std::size_t>> frame;
  for_each_subset(n, k + 1, [&](std::span<const std::size_t> idx) {
    bool general = for_each_subset(k + 1, k, [&](std::span<const std::size_t> sub) {
      std::vector<std::size_t> cols;
      for (auto s : sub) cols.push_back(idx[s]);
      return determinant(g.select_columns(cols)) != 0;
    });
    if (general) frame.emplace(idx.begin(), idx.end());
    return !general;
  });
  return frame;
}

// Runs `search(first)` for every first index, keeping the witness from the
// smallest first index that succeeds.
template <class Search>
EquivWitness first_witness(std::size_t n, Search&& search) {
  std::vector<EquivWitness> found(n);
  std::atomic<std::size_t> best{n};
  parallel_ranges(
      n,
      [&](unsigned, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t j = b; j < e; ++j) {
          if (j > best.load()) return;
          if (search(static_cast<std::size_t>(j), found[j])) {
            std::size_t cur = best.load();
            while (j < cur && !best.compare_exchange_weak(cur, j)) {
            }
          }
        }
      },
      1);
  return best.load() < n ? found[best.load()] : EquivWitness{};
}

EquivWitness frame_search(const LinearCode& a, const LinearCode& b, const std::vector<std::size_t>& frame) {
  const Field& f = a.field();
  const std::size_t n = a.n(), k = a.k();
  if (falling(n, k + 1) > kMaxFrameTuples) throw TooLarge("frame search too large");
  const Matrix& ga = a.generator();
  const Matrix& gb = b.generator();
  const ColumnIndex bi = index_columns(gb);
  std::vector<std::size_t> basis(frame.begin(), frame.begin() + static_cast<std::ptrdiff_t>(k));
  Matrix af_inv = inverse(ga.select_columns(basis));
  Vec alpha = af_inv.right_mul(ga.column(frame[k]));

  return first_witness(n, [&](std::size_t first, EquivWitness& out) {
    std::optional<Matrix> bf_inv;
    std::vector<std::size_t> last_basis;
    bool hit = false;
    ordered_tuples(n, k + 1, first, [&](std::span<const std::size_t> tup) {
      std::vector<std::size_t> bb(tup.begin(), tup.begin() + static_cast<std::ptrdiff_t>(k));
      if (bb != last_basis) {
        last_basis = bb;
        Matrix bf = gb.select_columns(bb);
        if (determinant(bf) == 0) bf_inv.reset();
        else bf_inv = inverse(bf);
      }
      if (!bf_inv) return true;
      Vec beta = bf_inv->right_mul(gb.column(tup[k]));
      Vec lambda(k);
      for (std::size_t t = 0; t < k; ++t) {
        if (beta[t] == 0) return true;
        lambda[t] = f.div(beta[t], alpha[t]);
      }
      Matrix t = transform(gb.select_columns(bb), lambda, af_inv);
      if (try_transform(t, ga, bi, out)) {
        hit = true;
        return false;
      }
      return true;
    });
    return hit;
  });
}

// Frameless fallback: every ordered k-tuple of independent B columns as the
// image of A's first basis, with every projective choice of basis scalars.
EquivWitness fallback_search(const LinearCode& a, const LinearCode& b) {
  const Field& f = a.field();
  const std::size_t n = a.n(), k = a.k();
  std::uint64_t cand = falling(n, k);
  for (std::size_t i = 1; i < k; ++i)
    cand = cand > kMaxFallbackCandidates ? cand : cand * (f.q() - 1);
  if (cand > kMaxFallbackCandidates) throw TooLarge("frameless equivalence search too large");
  const Matrix& ga = a.generator();
  const Matrix& gb = b.generator();
  const ColumnIndex bi = index_columns(gb);
  Matrix af_inv = inverse(ga.select_columns(a.pivots()));

  return first_witness(n, [&](std::size_t first, EquivWitness& out) {
    bool hit = false;
    ordered_tuples(n, k, first, [&](std::span<const std::size_t> tup) {
      Matrix bf = gb.select_columns(tup);
      if (determinant(bf) == 0) return true;
      Vec lambda(k, 1);
      while (true) {
        if (try_transform(transform(bf, lambda, af_inv), ga, bi, out)) {
          hit = true;
          return false;
        }
        std::size_t i = 1;
        while (i < k && ++lambda[i] == f.q()) lambda[i++] = 1;
        if (i >= k) break;
      }
      return true;
    });
    return hit;
  });
}

EquivWitness equivalent_given(const LinearCode& a, const EquivInvariants& ia, const LinearCode& b,
                              const EquivInvariants& ib) {
  if (!(ia == ib)) return {};
  const std::size_t n = a.n(), k = a.k();
  EquivWitness w;
  if (k == 0 || k == n) {
    if (!(a == b)) return {};
    for (std::size_t i = 0; i < n; ++i) w.perm.push_back(i);
    w.scale.assign(n, 1);
    w.found = true;
    return w;
  }
  auto frame = find_frame(a.generator());
  w = frame ? frame_search(a, b, *frame) : fallback_search(a, b);
  if (w.found && !(apply_monomial(a, w) == b)) throw MismatchDetected("equivalence witness fails verification");
  return w;
}

void check_shapes(const LinearCode& a, const LinearCode& b) {
  if (!(a.field() == b.field())) throw ShapeMismatch("codes over different fields");
  if (a.n() != b.n() || a.k() != b.k()) throw ShapeMismatch("codes of different length or dimension");
}

}  // namespace

LinearCode apply_monomial(const LinearCode& a, const EquivWitness& w) {
  const std::size_t n = a.n();
  if (w.perm.size() != n || w.scale.size() != n) throw LengthMismatch("witness size differs from code length");
  if (a.k() == 0) return a;
  const Field& f = a.field();
  Matrix out(f, a.k(), n);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (w.perm[i] >= n || hit[w.perm[i]]) throw BadInput("witness permutation is not a bijection");
    if (w.scale[i] == 0) throw BadInput("witness scale must be nonzero");
    hit[w.perm[i]] = true;
    for (std::size_t r = 0; r < a.k(); ++r) out.set(r, w.perm[i], f.mul(w.scale[i], a.generator().at(r, i)));
  }
  return LinearCode::from_generator(out);
}

EquivInvariants equiv_invariants(const LinearCode& c) {
  EquivInvariants inv;
  inv.weights = weight_distribution(c);
  if (c.field().q() <= 3) inv.hull = hull_dimension(c);
  if (c.k() == 0) return inv;
  LinearCode sq = schur_square(c);
  inv.square_dim = sq.k();
  if (sq.k() == sq.n()) {
    inv.square_d = 1;
  } else {
    std::uint64_t msgs = 1;
    for (std::size_t i = 0; i < sq.k() && msgs <= kMaxSquareMessages; ++i) msgs *= c.field().q();
    if (msgs <= kMaxSquareMessages) inv.square_d = min_distance(sq);
  }
  return inv;
}

EquivWitness monomial_equivalent(const LinearCode& a, const LinearCode& b) {
  check_shapes(a, b);
  return equivalent_given(a, equiv_invariants(a), b, equiv_invariants(b));
}

std::optional<GrsWitness> equivalent_to_some_grs(const LinearCode& c) {
  const Field& f = c.field();
  const std::size_t n = c.n(), k = c.k();
  if (k == 0 || k >= n) throw BadDimension("need 1 <= k < n");
  if (binomial(f.q(), n) + binomial(f.q(), n - 1) > kMaxEvaluationSets) throw TooLarge("too many evaluation sets");
  const EquivInvariants ic = equiv_invariants(c);
  for (bool extended : {false, true}) {
    const std::size_t len = extended ? n - 1 : n;
    if (len > f.q() || len < k) continue;
    std::optional<GrsWitness> out;
    for_each_subset(f.q(), len, [&](std::span<const std::size_t> idx) {
      Vec S(idx.begin(), idx.end());
      auto cfg = EvalConfig::ones(f, S);
      LinearCode cand = extended ? egrs(cfg, k) : grs(cfg, k);
      auto w = equivalent_given(c, ic, cand, equiv_invariants(cand));
      if (w.found) out = GrsWitness{extended, S, w};
      return !w.found;
    });
    if (out) return out;
  }
  return std::nullopt;
}

std::size_t square_code_distinguisher(const LinearCode& c) {
  LinearCode d = dual(c);
  if (d.k() == 0) return c.n() + 1;
  return min_distance(schur_square(d));
}

}  // namespace mdslab
