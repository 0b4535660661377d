#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "mdslab/constructions.hpp"

namespace mdslab {

// i-th elementary symmetric function of S; 1 at i = 0 and 0 outside [0, |S|].
Elem sigma(const Field& f, int i, std::span<const Elem> S);

struct VandermondeEvaluation {
  Elem raw;       // det(a_j^{t_i})
  Elem factored;  // prod_{i<j}(a_j - a_i) * det(sigma block)
};

// Both sides of the generalized Vandermonde identity for the exponent set
// {t_1 < ... < t_s}, which must contain 0 and have |S| members. Throws
// MismatchDetected if the two sides disagree.
VandermondeEvaluation gen_vandermonde_det(const Field& f, std::span<const Elem> S, std::vector<std::size_t> exponents);

// True iff g' lies outside V_k, the necessary condition for deep holes of
// the shape (v, v_{n+1}) * (g(a_1), ..., g(a_n), u).
bool vk_filter(const Poly& gprime, std::size_t k);

// The word (v_1 g(a_1), ..., v_n g(a_n), u_scalar).
Vec deep_hole_candidate(const EvalConfig& cfg, const Poly& g, Elem u_scalar);
// g_kp1 x^{k+1} + g_km1 x^{k-1} + f.
Poly candidate_polynomial(const Field& field, std::size_t k, Elem g_kp1, Elem g_km1, const Poly& f);

// Criterion for g = g_km1 x^{k-1} + f with g_km1 != 0.
bool class1_is_deep_hole(const EvalConfig& cfg, std::size_t k, Elem g_km1, const Poly& f, Elem u_scalar);

struct ForbiddenSet {
  std::set<Elem> L1;  // from k-subsets
  std::set<Elem> L2;  // from (k+1)-subsets
  std::set<Elem> L;
  std::uint64_t bound = 0;  // C(n+1, k+1)

  std::vector<Elem> admissible(const Field& f) const;
};

// Values of g_{k-1} excluded for the second class, with c = u_scalar - f_k.
// g_kp1 = 0 is rejected unless `allow_zero_gkp1`, in which case the formal
// specialisation {0} ∪ {c sigma_1(S_k)} is produced.
ForbiddenSet forbidden_set(const EvalConfig& cfg, std::size_t k, Elem g_kp1, Elem c, bool allow_zero_gkp1 = false);

// Criterion for g = g_kp1 x^{k+1} + g_km1 x^{k-1} + f with g_kp1 != 0.
bool class2_is_deep_hole(const EvalConfig& cfg, std::size_t k, Elem g_kp1, Elem g_km1, const Poly& f, Elem u_scalar);

// True iff the code spanned by the generator of `c_esgrs` plus the row u is
// an [N, k+1] MDS code: rank k+1 and every k+1 columns independent.
bool mds_extension_deep_hole_test(const LinearCode& c_esgrs, std::span<const Elem> u);

}  // namespace mdslab
