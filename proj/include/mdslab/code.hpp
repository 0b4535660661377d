#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdslab/matrix.hpp"

namespace mdslab {

// Largest message space min_distance and weight_distribution will enumerate.
inline constexpr std::uint64_t kMaxMessages = 100'000'000;
// Largest number of column subsets the column criteria will examine.
inline constexpr std::uint64_t kMaxColumnSubsets = 10'000'000;

// An [n,k]_q linear code held as its canonical (RREF) generator matrix.
// k = 0 is allowed so that the dual of the full space is representable.
class LinearCode {
 public:
  // Row-reduces `m`; throws ZeroMatrix when m has rank 0.
  static LinearCode from_generator(const Matrix& m);
  static LinearCode zero(Field field, std::size_t n);

  const Matrix& generator() const { return gen_; }
  const Field& field() const { return gen_.field(); }
  std::size_t n() const { return gen_.cols(); }
  std::size_t k() const { return gen_.rows(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Vec encode(std::span<const Elem> message) const { return gen_.left_mul(message); }
  bool contains(std::span<const Elem> word) const;

  // Header `field=<token> n=<n> k=<k>` followed by the generator rows.
  std::string to_text() const;
  static LinearCode parse_text(std::string_view text);

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gen_ == b.gen_; }

 private:
  friend std::size_t min_distance(const LinearCode&);
  friend std::vector<std::uint64_t> weight_distribution(const LinearCode&);

  struct Cache;
  LinearCode(Matrix gen, std::vector<std::size_t> pivots);

  Matrix gen_;
  std::vector<std::size_t> pivots_;
  std::shared_ptr<Cache> cache_;
};

enum class CodeTag { MDS, NMDS, OTHER };
std::string to_string(CodeTag tag);

struct CodeClass {
  CodeTag tag;
  std::size_t d;
  std::size_t d_dual;
};

// Visits one representative of every projective class of nonzero codewords
// (messages whose first nonzero coordinate is 1). The visitor receives the
// codeword and returns false to stop early. Enumeration is split over
// thread_count() workers; the visitor must then be thread safe.
using CodewordVisitor = std::function<bool(unsigned worker, std::span<const Elem> codeword)>;
void for_each_projective_codeword(const Matrix& gen, const CodewordVisitor& visit);
// Number of projective messages, (q^k - 1)/(q - 1); throws TooLarge past kMaxMessages.
std::uint64_t projective_message_count(const Field& f, std::size_t k);

// Minimum Hamming weight of a nonzero codeword. The zero code reports n + 1.
std::size_t min_distance(const LinearCode& c);
// A_0 .. A_n.
std::vector<std::uint64_t> weight_distribution(const LinearCode& c);
LinearCode dual(const LinearCode& c);
// A parity-check matrix ((n-k) x n, full rank) of c.
Matrix parity_check_matrix(const LinearCode& c);
CodeClass classify(const LinearCode& c);

bool is_mds_by_columns(const LinearCode& c);
bool is_nmds_by_columns(const LinearCode& c);

LinearCode puncture(const LinearCode& c, std::size_t i);
LinearCode shorten(const LinearCode& c, std::size_t i);
LinearCode schur_square(const LinearCode& c);
// Dimension of C ∩ C^⊥.
std::size_t hull_dimension(const LinearCode& c);

// Visits every r-subset of {0..n-1} in lexicographic order; stop by returning false.
// Returns false iff the visitor stopped early.
bool for_each_subset(std::size_t n, std::size_t r, const std::function<bool(std::span<const std::size_t>)>& visit);
// C(n, r) saturated at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t r);

}  // namespace mdslab
