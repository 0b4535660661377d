#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mdslab/covering.hpp"
#include "mdslab/criteria.hpp"

namespace mdslab {

struct ExtensionResult {
  LinearCode base;
  Vec u;
  LinearCode extended;
  CodeClass base_class{};
  CodeClass extended_class{};
  // Set when the covering radius and deep-hole status of u were checked.
  bool hypotheses_checked = false;
  // rho(base) = n - k and u is a deep hole.
  bool hypotheses_hold = false;
  // Base is MDS or NMDS and the hypotheses hold, so a non-GRS base yields a
  // non-GRS extension.
  bool nongrs_inherited = false;
  std::vector<std::string> warnings{};
};

// Code generated by [G 0; u 1]. Never refuses to build when the hypotheses
// fail; it records a warning instead. Throws MismatchDetected if shortening
// the result at the last coordinate does not give back C.
ExtensionResult extend_by_deep_hole(const LinearCode& c, std::span<const Elem> u);
// Same, reusing a syndrome table of C for the hypothesis check.
ExtensionResult extend_by_deep_hole(const SyndromeTable& table, std::span<const Elem> u);

// {(c, <c, u>) : c in C}, generated by [G | G u^T].
LinearCode second_kind_extend(const LinearCode& c, std::span<const Elem> u);
// [H 0; u -1], a parity-check matrix of second_kind_extend(c, u).
Matrix second_kind_parity_check(const LinearCode& c, std::span<const Elem> u);
// dual(second_kind_extend(dual(c), u)); equals the extension by u after the
// last coordinate is scaled by -1.
LinearCode dual_path_extend(const LinearCode& c, std::span<const Elem> u);

struct MkzReport {
  bool cond1 = false;
  bool cond2 = false;
  // False when w = G u^T vanishes and the second condition was skipped.
  bool cond2_evaluated = false;
  std::uint64_t ops_count = 0;
  bool verdict = false;
};

// Two-condition test for second_kind_extend(c, u) to stay NMDS. c must be
// NMDS with 2 <= k <= n-2. Counts every field addition and multiplication.
MkzReport mkz_check(const LinearCode& c, std::span<const Elem> u);

using BigInt = boost::multiprecision::cpp_int;

// C(n,k-2) k (k-1)^2 + q^{k-1} n k, or with dual_path
// C(n,k+2) (n-k) (n-k-1)^2 + q^{n-k-1} n (n-k); times q^n when exhaustive.
BigInt mkz_cost_bound(std::size_t n, std::size_t k, std::uint64_t q, bool dual_path, bool exhaustive = true);

struct Algorithm1Options {
  std::uint64_t budget = 0;  // grid points visited
  std::uint64_t seed = 0;    // 0 walks the grid in natural order
  std::optional<Elem> g_kp1;
  std::optional<Elem> g_km1;
  std::optional<Poly> f;
  std::optional<Elem> u_scalar;
  bool classify = true;
};

struct Algorithm1Output {
  int branch = 0;  // 1, 2 or 3
  Elem g_kp1 = 0;
  Elem g_km1 = 0;
  Elem u_scalar = 0;
  Poly f;
  Poly g;
  // Parameters promised by the construction: [n+2, k+1, d].
  CodeTag advertised_tag = CodeTag::OTHER;
  std::size_t advertised_d = 0;
  ExtensionResult result;
  bool classified = false;
};

// Walks (g_{k+1}, g_{k-1}, f in V_k, u_scalar) and emits every point
// accepted by one of the three branches, in grid order. u_scalar stands for
// the product u_{n+1} v_{n+1}. The visitor returns false to stop.
void algorithm1(const EvalConfig& cfg, std::size_t k, const Algorithm1Options& opts,
                const std::function<bool(const Algorithm1Output&)>& visit);
std::vector<Algorithm1Output> algorithm1_collect(const EvalConfig& cfg, std::size_t k, const Algorithm1Options& opts);

}  // namespace mdslab
