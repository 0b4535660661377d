#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdslab/code.hpp"

namespace mdslab {

// Largest number of ordered column tuples the frame search will try.
inline constexpr std::uint64_t kMaxFrameTuples = 10'000'000;
// Largest number of (tuple, scalar) candidates the frameless fallback will try.
inline constexpr std::uint64_t kMaxFallbackCandidates = 100'000'000;
// Largest number of evaluation sets equivalent_to_some_grs will try.
inline constexpr std::uint64_t kMaxEvaluationSets = 1'000'000;

// Monomial map sending coordinate i of A, scaled by scale[i], to coordinate perm[i].
struct EquivWitness {
  std::vector<std::size_t> perm;
  Vec scale;
  bool found = false;
};

// The image of `a` under the witness.
LinearCode apply_monomial(const LinearCode& a, const EquivWitness& w);

// Cheap monomial invariants used for early rejection.
struct EquivInvariants {
  std::vector<std::uint64_t> weights;
  // Only meaningful for q <= 3, where every nonzero scalar squares to 1.
  std::optional<std::size_t> hull;
  std::size_t square_dim = 0;
  // Skipped when the Schur square is too large to enumerate.
  std::optional<std::size_t> square_d;

  friend bool operator==(const EquivInvariants&, const EquivInvariants&) = default;
};
EquivInvariants equiv_invariants(const LinearCode& c);

// Searches for a monomial map taking A onto B. Throws ShapeMismatch on
// different n, k or field, and TooLarge when the search is out of reach.
EquivWitness monomial_equivalent(const LinearCode& a, const LinearCode& b);

struct GrsWitness {
  bool extended = false;  // EGRS rather than GRS
  Vec S;
  EquivWitness map;
};

// First GRS_k(S', 1) (|S'| = n) or EGRS_k(S', 1) (|S'| = n-1) over the same
// field that is monomially equivalent to c, in lexicographic order of S'.
std::optional<GrsWitness> equivalent_to_some_grs(const LinearCode& c);

// d(schur_square(dual(c))).
std::size_t square_code_distinguisher(const LinearCode& c);

}  // namespace mdslab
