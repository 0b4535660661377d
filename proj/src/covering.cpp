#include "mdslab/covering.hpp"

#include <limits>

namespace mdslab {

namespace {

constexpr std::uint8_t kUnseen = std::numeric_limits<std::uint8_t>::max();

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

SyndromeTable SyndromeTable::build(const LinearCode& c) {
  const Field& f = c.field();
  const std::size_t n = c.n(), r = n - c.k();
  const std::uint64_t total = checked_pow(f.q(), r, kMaxSyndromes);
  if (total > kMaxSyndromes) throw TooLarge("syndrome table exceeds limit");
  if (n >= kUnseen) throw TooLarge("code length too large for the syndrome table");

  Matrix h = parity_check_matrix(c);
  Matrix::Echelon ech = h.rows() ? h.rref(true) : Matrix::Echelon{Matrix(f, 0, n), {}};
  SyndromeTable t(c, ech.reduced);
  t.pivots_ = ech.pivots;
  t.weights_.assign(total, kUnseen);
  t.weights_[0] = 0;
  std::uint64_t seen = 1;
  std::size_t rho = 0;

  // Columns of H scaled by every nonzero value.
  std::vector<Vec> scaled(n * f.q());
  for (std::size_t i = 0; i < n; ++i)
    for (Elem a = 0; a < f.q(); ++a) {
      Vec col(r);
      for (std::size_t j = 0; j < r; ++j) col[j] = f.mul(a, t.parity_.at(j, i));
      scaled[i * f.q() + a] = std::move(col);
    }

  // Weight shells w = 1, 2, ...; within a shell, supports in lexicographic
  // order and values in increasing order. Stops once every syndrome is seen.
  std::vector<Vec> stack;
  for (std::size_t w = 1; w <= n && seen < total; ++w) {
    stack.assign(w + 1, Vec(r, 0));
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t depth, std::size_t start) {
      if (seen == total) return;
      if (depth == w) {
        auto k = t.key(stack[depth]);
        if (t.weights_[k] == kUnseen) {
          t.weights_[k] = static_cast<std::uint8_t>(w);
          rho = w;
          ++seen;
        }
        return;
      }
      for (std::size_t i = start; i + (w - depth) <= n; ++i)
        for (Elem a = 1; a < f.q(); ++a) {
          const Vec& col = scaled[i * f.q() + a];
          for (std::size_t j = 0; j < r; ++j) stack[depth + 1][j] = f.add(stack[depth][j], col[j]);
          dfs(depth + 1, i + 1);
          if (seen == total) return;
        }
    };
    dfs(0, 0);
  }
  t.rho_ = rho;
  return t;
}

Vec SyndromeTable::syndrome(std::span<const Elem> u) const {
  if (u.size() != code_.n()) throw LengthMismatch("vector length differs from code length");
  return parity_.rows() ? parity_.right_mul(u) : Vec{};
}

std::uint64_t SyndromeTable::key(std::span<const Elem> s) const {
  std::uint64_t k = 0;
  const std::uint64_t q = code_.field().q();
  for (std::size_t j = s.size(); j-- > 0;) k = k * q + s[j];
  return k;
}

Vec SyndromeTable::syndrome_of_key(std::uint64_t k) const {
  Vec s(redundancy());
  const std::uint64_t q = code_.field().q();
  for (auto& x : s) {
    x = static_cast<Elem>(k % q);
    k /= q;
  }
  return s;
}

std::size_t SyndromeTable::error_distance(std::span<const Elem> u) const { return weights_[key(syndrome(u))]; }

Vec SyndromeTable::representative(std::uint64_t k) const {
  Vec s = syndrome_of_key(k);
  Vec x(code_.n(), 0);
  // parity_ is in RREF, so placing s on the pivot columns reproduces it.
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = s[i];
  return x;
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::MdsExtension: return "mds-extension";
    case Criterion::Class1: return "class1";
    case Criterion::Class2: return "class2";
    default: return "definition";
  }
}

std::size_t error_distance(const SyndromeTable& t, std::span<const Elem> u) { return t.error_distance(u); }

std::size_t covering_radius(const LinearCode& c) { return SyndromeTable::build(c).covering_radius(); }

DeepHoleReport deep_hole_report(const SyndromeTable& t, std::span<const Elem> u) {
  DeepHoleReport rep;
  rep.vector.assign(u.begin(), u.end());
  rep.error_distance = t.error_distance(u);
  rep.rho = t.covering_radius();
  rep.is_deep_hole = rep.error_distance == rep.rho;
  rep.degenerate = t.code().k() == t.code().n();
  return rep;
}

void for_each_deep_hole(const SyndromeTable& t, const std::function<bool(const Vec&)>& visit) {
  const LinearCode& c = t.code();
  const Field& f = c.field();
  const std::size_t k = c.k(), n = c.n();
  for (std::uint64_t key = 0; key < t.size(); ++key) {
    if (t.leader_weight(key) != t.covering_radius()) continue;
    Vec base = t.representative(key);
    Vec msg(k, 0), word = base;
    while (true) {
      if (!visit(word)) return;
      std::size_t i = 0;
      while (i < k && ++msg[i] == f.q()) msg[i++] = 0;
      if (i == k) break;
      Vec cw = c.encode(msg);
      for (std::size_t j = 0; j < n; ++j) word[j] = f.add(base[j], cw[j]);
    }
  }
}

std::uint64_t deep_hole_count(const SyndromeTable& t) {
  std::uint64_t deep = 0;
  for (std::uint64_t key = 0; key < t.size(); ++key) deep += t.leader_weight(key) == t.covering_radius();
  std::uint64_t per = checked_pow(t.code().field().q(), t.code().k(), kMaxDeepHoles);
  if (per > kMaxDeepHoles || deep > std::numeric_limits<std::uint64_t>::max() / per)
    return std::numeric_limits<std::uint64_t>::max();
  return deep * per;
}

std::vector<DeepHoleReport> enumerate_deep_holes(const SyndromeTable& t, std::uint64_t limit) {
  if (limit == 0 && deep_hole_count(t) > kMaxDeepHoles) throw TooLarge("too many deep holes to list");
  std::vector<DeepHoleReport> out;
  const bool degenerate = t.code().k() == t.code().n();
  for_each_deep_hole(t, [&](const Vec& u) {
    DeepHoleReport rep;
    rep.vector = u;
    rep.error_distance = t.covering_radius();
    rep.rho = t.covering_radius();
    rep.is_deep_hole = true;
    rep.degenerate = degenerate;
    out.push_back(std::move(rep));
    return limit == 0 || out.size() < limit;
  });
  return out;
}

std::vector<DeepHoleReport> enumerate_deep_holes(const LinearCode& c, std::uint64_t limit) {
  return enumerate_deep_holes(SyndromeTable::build(c), limit);
}

}  // namespace mdslab
