#pragma once

#include <algorithm>
#include <random>
#include <set>

#include "mdslab/matrix.hpp"

namespace oracle {

using mdslab::Elem;
using mdslab::Field;
using mdslab::Matrix;
using mdslab::Vec;

// All codewords of the row space of g, by plain enumeration of every message.
inline std::set<Vec> all_codewords(const Matrix& g) {
  const Field& f = g.field();
  std::set<Vec> out;
  Vec msg(g.rows(), 0);
  while (true) {
    out.insert(g.rows() ? g.left_mul(msg) : Vec(g.cols(), 0));
    std::size_t i = 0;
    while (i < msg.size() && ++msg[i] == f.q()) msg[i++] = 0;
    if (i == msg.size()) break;
  }
  return out;
}

inline std::size_t brute_min_distance(const Matrix& g) {
  std::size_t best = g.cols() + 1;
  for (auto& cw : all_codewords(g)) {
    std::size_t w = mdslab::hamming_weight(cw);
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

// Distance from y to the nearest word of the row space of g.
inline std::size_t brute_error_distance(const Matrix& g, const Vec& y) {
  std::size_t best = y.size();
  const Field& f = g.field();
  for (auto& cw : all_codewords(g)) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < y.size(); ++i) w += f.sub(y[i], cw[i]) != 0;
    best = std::min(best, w);
  }
  return best;
}

inline Matrix random_full_rank(const Field& f, std::size_t k, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> el(0, f.q() - 1);
  while (true) {
    Matrix m(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, el(rng));
    if (mdslab::rank(m) == k) return m;
  }
}

// Subset sums by bitmask.
inline bool some_k_subset_sums_to(const Field& f, const Vec& S, std::size_t k, Elem target) {
  for (unsigned mask = 0; mask < (1u << S.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Elem s = 0;
    for (std::size_t i = 0; i < S.size(); ++i)
      if (mask >> i & 1) s = f.add(s, S[i]);
    if (s == target) return true;
  }
  return false;
}

inline Vec random_distinct(const Field& f, std::size_t n, std::mt19937& rng) {
  Vec all(f.q());
  for (Elem a = 0; a < f.q(); ++a) all[a] = a;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(n);
  return all;
}

// Generator of a random monomial image: column i of g, scaled, lands at perm[i].
inline Matrix random_monomial(const Matrix& g, std::mt19937& rng, std::vector<std::size_t>* perm_out = nullptr,
                              Vec* scale_out = nullptr) {
  const Field& f = g.field();
  std::vector<std::size_t> perm(g.cols());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<Elem> nz(1, f.q() - 1);
  Vec scale(g.cols());
  for (auto& x : scale) x = nz(rng);
  Matrix out(f, g.rows(), g.cols());
  for (std::size_t i = 0; i < g.cols(); ++i)
    for (std::size_t r = 0; r < g.rows(); ++r) out.set(r, perm[i], f.mul(scale[i], g.at(r, i)));
  if (perm_out) *perm_out = perm;
  if (scale_out) *scale_out = scale;
  return out;
}

// Exhaustive monomial equivalence over every permutation and scaling.
inline bool brute_monomially_equivalent(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  const std::size_t n = a.cols();
  const auto target = all_codewords(b);
  const auto source = all_codewords(a);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    Vec scale(n, 1);
    while (true) {
      bool ok = true;
      for (const auto& cw : source) {
        Vec img(n);
        for (std::size_t i = 0; i < n; ++i) img[perm[i]] = f.mul(scale[i], cw[i]);
        if (!target.count(img)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
      std::size_t i = 0;
      while (i < n && ++scale[i] == f.q()) scale[i++] = 1;
      if (i == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
