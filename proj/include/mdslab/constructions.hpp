#pragma once

#include <cstddef>
#include <vector>

#include "mdslab/code.hpp"

namespace mdslab {

// Ordered evaluation set S = (a_1..a_n) with multipliers v = (v_1..v_n).
struct EvalConfig {
  Field field;
  Vec S;
  Vec v;

  // Validates distinct S, nonzero v, |S| = |v| <= q.
  static EvalConfig make(Field field, Vec S, Vec v);
  // Multiplier vector of all ones.
  static EvalConfig ones(Field field, Vec S);

  std::size_t n() const { return S.size(); }
};

// Generator rows v_i a_i^j for j = 0..k-1.
Matrix grs_generator(const EvalConfig& cfg, std::size_t k);
// grs_generator with the column e_k appended.
Matrix egrs_generator(const EvalConfig& cfg, std::size_t k);
// Rows v_i a_i^j for j = 0..k-2 and j = k, with the column e_k appended.
Matrix esgrs_generator(const EvalConfig& cfg, std::size_t k);
// Rows a_i^j (j < k) with the two tail columns e_k and e_{k-1} + delta e_k.
Matrix roth_lempel_generator(const Field& field, const Vec& S, std::size_t k, Elem delta);

LinearCode grs(const EvalConfig& cfg, std::size_t k);
LinearCode egrs(const EvalConfig& cfg, std::size_t k);
LinearCode esgrs(const EvalConfig& cfg, std::size_t k);
LinearCode roth_lempel(const Field& field, const Vec& S, std::size_t k, Elem delta);

// No k-subset of S sums to delta.
bool is_nk_delta_set(const Field& field, const Vec& S, std::size_t k, Elem delta);
bool is_zero_sum_free(const Field& field, const Vec& S, std::size_t k);

// Class of the ESGRS code read off the zero-sum structure of S, without
// touching the code itself.
CodeClass esgrs_classify(const EvalConfig& cfg, std::size_t k);

}  // namespace mdslab
