#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mdslab/code.hpp"

namespace mdslab {

// Largest syndrome space build() accepts.
inline constexpr std::uint64_t kMaxSyndromes = 10'000'000;
// Largest number of deep holes enumerate_deep_holes materializes without a limit.
inline constexpr std::uint64_t kMaxDeepHoles = 100'000'000;

// Minimal coset weight for every syndrome of a code, indexed by the radix-q
// encoding of the syndrome with respect to an RREF parity-check matrix.
class SyndromeTable {
 public:
  static SyndromeTable build(const LinearCode& c);

  const LinearCode& code() const { return code_; }
  const Matrix& parity() const { return parity_; }
  std::size_t redundancy() const { return parity_.rows(); }
  std::uint64_t size() const { return weights_.size(); }

  Vec syndrome(std::span<const Elem> u) const;
  std::uint64_t key(std::span<const Elem> syndrome) const;
  Vec syndrome_of_key(std::uint64_t key) const;
  std::size_t leader_weight(std::uint64_t key) const { return weights_[key]; }

  std::size_t error_distance(std::span<const Elem> u) const;
  std::size_t covering_radius() const { return rho_; }

  // Some vector with the given syndrome (supported on the pivot columns of the parity matrix).
  Vec representative(std::uint64_t key) const;

 private:
  SyndromeTable(LinearCode code, Matrix parity) : code_(std::move(code)), parity_(std::move(parity)) {}

  LinearCode code_;
  Matrix parity_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint8_t> weights_;
  std::size_t rho_ = 0;
};

enum class Criterion { Definition, MdsExtension, Class1, Class2 };
std::string to_string(Criterion c);

struct DeepHoleReport {
  Vec vector;
  std::size_t error_distance = 0;
  std::size_t rho = 0;
  bool is_deep_hole = false;
  Criterion criterion = Criterion::Definition;
  // Set for k = n codes, where rho = 0 and every vector is a codeword.
  bool degenerate = false;
};

std::size_t error_distance(const SyndromeTable& t, std::span<const Elem> u);
std::size_t covering_radius(const LinearCode& c);
// Definition-level verdict for one vector.
DeepHoleReport deep_hole_report(const SyndromeTable& t, std::span<const Elem> u);

// Visits every deep hole: deep syndromes in key order, each followed by all
// codeword translates of its representative. Return false to stop.
void for_each_deep_hole(const SyndromeTable& t, const std::function<bool(const Vec&)>& visit);
// Number of deep holes, (#deep syndromes) * q^k, saturating.
std::uint64_t deep_hole_count(const SyndromeTable& t);
// All deep holes, or the first `limit` of them when limit > 0.
std::vector<DeepHoleReport> enumerate_deep_holes(const LinearCode& c, std::uint64_t limit = 0);
std::vector<DeepHoleReport> enumerate_deep_holes(const SyndromeTable& t, std::uint64_t limit = 0);

}  // namespace mdslab
