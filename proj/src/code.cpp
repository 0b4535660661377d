#include "mdslab/code.hpp"

#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <regex>
#include <sstream>

#include "mdslab/parallel.hpp"

namespace mdslab {

struct LinearCode::Cache {
  std::mutex mu;
  std::optional<std::size_t> d;
  std::optional<std::vector<std::uint64_t>> wd;
};

LinearCode::LinearCode(Matrix gen, std::vector<std::size_t> pivots)
    : gen_(std::move(gen)), pivots_(std::move(pivots)), cache_(std::make_shared<Cache>()) {}

LinearCode LinearCode::from_generator(const Matrix& m) {
  auto ech = m.rref(true);
  if (ech.pivots.empty()) throw ZeroMatrix("generator matrix has rank 0");
  return LinearCode(std::move(ech.reduced), std::move(ech.pivots));
}

LinearCode LinearCode::zero(Field field, std::size_t n) { return LinearCode(Matrix(std::move(field), 0, n), {}); }

bool LinearCode::contains(std::span<const Elem> word) const {
  if (word.size() != n()) throw LengthMismatch("word length differs from code length");
  // In RREF the message is read off the pivot coordinates.
  Vec msg(k());
  for (std::size_t i = 0; i < k(); ++i) msg[i] = word[pivots_[i]];
  return encode(msg) == Vec(word.begin(), word.end());
}

std::string LinearCode::to_text() const {
  std::ostringstream out;
  out << "field=" << field().token() << " n=" << n() << " k=" << k() << '\n' << gen_.to_text();
  return out.str();
}

LinearCode LinearCode::parse_text(std::string_view text) {
  std::string s(text);
  auto nl = s.find('\n');
  std::string header = s.substr(0, nl);
  std::string body = nl == std::string::npos ? std::string() : s.substr(nl + 1);
  auto fpos = header.find("field=");
  if (fpos == std::string::npos) throw ParseError("code header lacks field=");
  auto close = header.find(')', fpos);
  if (close == std::string::npos) throw ParseError("unterminated field token");
  Field f = Field::parse(header.substr(fpos + 6, close - fpos - 5));
  std::smatch mt;
  std::string rest = header.substr(close + 1);
  static const std::regex dims(R"(^\s*n=(\d+)\s+k=(\d+)\s*$)");
  if (!std::regex_match(rest, mt, dims)) throw ParseError("code header must read 'field=<token> n=<n> k=<k>'");
  std::size_t n = std::stoul(mt[1]), k = std::stoul(mt[2]);
  Matrix g = Matrix::parse_text(f, body);
  if (k == 0) {
    if (g.rows() != 0) throw ParseError("k=0 code must have no generator rows");
    return zero(f, n);
  }
  if (g.rows() != k || g.cols() != n) throw ParseError("generator shape does not match header");
  auto code = from_generator(g);
  if (code.k() != k) throw ParseError("generator rows are linearly dependent");
  return code;
}

std::string to_string(CodeTag tag) {
  switch (tag) {
    case CodeTag::MDS: return "MDS";
    case CodeTag::NMDS: return "NMDS";
    default: return "OTHER";
  }
}

std::uint64_t projective_message_count(const Field& f, std::size_t k) {
  std::uint64_t total = 0, block = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += block;
    if (total > kMaxMessages) throw TooLarge("message space exceeds enumeration limit");
    block *= f.q();
  }
  return total;
}

void for_each_projective_codeword(const Matrix& gen, const CodewordVisitor& visit) {
  const Field& f = gen.field();
  const std::size_t k = gen.rows(), n = gen.cols();
  const Elem q = f.q();
  const std::uint64_t total = projective_message_count(f, k);
  if (total == 0) return;

  // mult[(j*q + a)*n + t] = a * gen[j][t]
  Vec mult(k * q * n);
  for (std::size_t j = 0; j < k; ++j)
    for (Elem a = 0; a < q; ++a)
      for (std::size_t t = 0; t < n; ++t) mult[(j * q + a) * n + t] = f.mul(a, gen.at(j, t));
  // Projective messages are grouped by lead position i; block i holds q^(k-1-i) messages.
  std::vector<std::uint64_t> block_start(k + 1, 0);
  {
    std::vector<std::uint64_t> sizes(k, 1);
    for (std::size_t i = k - 1; i-- > 0;) sizes[i] = sizes[i + 1] * q;
    for (std::size_t i = 0; i < k; ++i) block_start[i + 1] = block_start[i] + sizes[i];
  }

  std::atomic<bool> stop{false};
  parallel_ranges(total, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    std::size_t lead = 0;
    while (block_start[lead + 1] <= begin) ++lead;
    Vec digits(k, 0), cw(n);
    auto reset = [&](std::uint64_t index) {
      std::uint64_t off = index - block_start[lead];
      std::fill(digits.begin(), digits.end(), 0);
      digits[lead] = 1;
      for (std::size_t j = k; j-- > lead + 1;) {
        digits[j] = static_cast<Elem>(off % q);
        off /= q;
      }
      std::fill(cw.begin(), cw.end(), 0);
      for (std::size_t j = lead; j < k; ++j) {
        const Elem* row = &mult[(j * q + digits[j]) * n];
        for (std::size_t t = 0; t < n; ++t) cw[t] = f.add(cw[t], row[t]);
      }
    };
    reset(begin);
    for (std::uint64_t idx = begin; idx < end;) {
      if ((idx & 1023) == 0 && stop.load(std::memory_order_relaxed)) return;
      if (!visit(worker, cw)) {
        stop = true;
        return;
      }
      if (++idx >= end) break;
      if (idx == block_start[lead + 1]) {
        ++lead;
        reset(idx);
        continue;
      }
      // Odometer step over digits lead+1 .. k-1 (last digit fastest).
      for (std::size_t j = k - 1; j > lead; --j) {
        Elem old = digits[j];
        Elem nxt = old + 1 == q ? 0 : old + 1;
        digits[j] = nxt;
        const Elem* ro = &mult[(j * q + old) * n];
        const Elem* rn = &mult[(j * q + nxt) * n];
        for (std::size_t t = 0; t < n; ++t) cw[t] = f.add(f.sub(cw[t], ro[t]), rn[t]);
        if (nxt != 0) break;
      }
    }
  });
}

std::size_t min_distance(const LinearCode& c) {
  {
    std::lock_guard lock(c.cache_->mu);
    if (c.cache_->d) return *c.cache_->d;
  }
  std::size_t d = c.n() + 1;
  if (c.k() > 0) {
    std::vector<std::size_t> best(thread_count(), c.n() + 1);
    for_each_projective_codeword(c.generator(), [&](unsigned w, std::span<const Elem> cw) {
      std::size_t wt = hamming_weight(cw);
      if (wt < best[w]) best[w] = wt;
      return wt > 1;
    });
    d = *std::min_element(best.begin(), best.end());
  }
  std::lock_guard lock(c.cache_->mu);
  c.cache_->d = d;
  return d;
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& c) {
  {
    std::lock_guard lock(c.cache_->mu);
    if (c.cache_->wd) return *c.cache_->wd;
  }
  const std::size_t n = c.n();
  std::vector<std::vector<std::uint64_t>> partial(thread_count(), std::vector<std::uint64_t>(n + 1, 0));
  if (c.k() > 0)
    for_each_projective_codeword(c.generator(), [&](unsigned w, std::span<const Elem> cw) {
      ++partial[w][hamming_weight(cw)];
      return true;
    });
  std::vector<std::uint64_t> wd(n + 1, 0);
  for (auto& p : partial)
    for (std::size_t i = 0; i <= n; ++i) wd[i] += p[i] * (c.field().q() - 1);
  wd[0] = 1;
  std::lock_guard lock(c.cache_->mu);
  c.cache_->wd = wd;
  if (!c.cache_->d) {
    std::size_t d = n + 1;
    for (std::size_t i = 1; i <= n; ++i)
      if (wd[i]) {
        d = i;
        break;
      }
    c.cache_->d = d;
  }
  return wd;
}

Matrix parity_check_matrix(const LinearCode& c) {
  if (c.k() == 0) return Matrix::identity(c.field(), c.n());
  return right_null_space(c.generator());
}

LinearCode dual(const LinearCode& c) {
  Matrix h = parity_check_matrix(c);
  if (h.rows() == 0) return LinearCode::zero(c.field(), c.n());
  return LinearCode::from_generator(h);
}

CodeClass classify(const LinearCode& c) {
  std::size_t d = min_distance(c);
  std::size_t dd = min_distance(dual(c));
  const std::size_t n = c.n(), k = c.k();
  CodeTag tag = CodeTag::OTHER;
  if (d == n - k + 1) tag = CodeTag::MDS;
  else if (d + k == n && dd == k) tag = CodeTag::NMDS;
  return {tag, d, dd};
}

std::uint64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  __extension__ typedef unsigned __int128 u128;
  u128 acc = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

bool for_each_subset(std::size_t n, std::size_t r, const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

void guard_subsets(std::uint64_t count) {
  if (count > kMaxColumnSubsets) throw TooLarge("column subset enumeration exceeds limit");
}

// True iff every r-subset of columns of g has rank `want`.
bool all_subsets_have_rank(const Matrix& g, std::size_t r, std::size_t want) {
  return for_each_subset(g.cols(), r, [&](std::span<const std::size_t> idx) {
    return rank(g.select_columns(idx)) == want;
  });
}

}  // namespace

bool is_mds_by_columns(const LinearCode& c) {
  const std::size_t n = c.n(), k = c.k();
  if (k == 0) return true;
  guard_subsets(binomial(n, k));
  return for_each_subset(n, k, [&](std::span<const std::size_t> idx) {
    return determinant(c.generator().select_columns(idx)) != 0;
  });
}

bool is_nmds_by_columns(const LinearCode& c) {
  const std::size_t n = c.n(), k = c.k();
  if (k == 0 || k > n) return false;
  guard_subsets(binomial(n, k - 1) + binomial(n, k) + binomial(n, k + 1));
  const Matrix& g = c.generator();
  if (!all_subsets_have_rank(g, k - 1, k - 1)) return false;
  bool some_dependent = !for_each_subset(n, k, [&](std::span<const std::size_t> idx) {
    return determinant(g.select_columns(idx)) != 0;
  });
  if (!some_dependent) return false;
  if (n < k + 1) return true;
  return all_subsets_have_rank(g, k + 1, k);
}

LinearCode puncture(const LinearCode& c, std::size_t i) {
  if (i >= c.n()) throw IndexOutOfRange("puncture index out of range");
  if (c.k() == 0) return LinearCode::zero(c.field(), c.n() - 1);
  Matrix g = c.generator().remove_column(i);
  if (rank(g) == 0) return LinearCode::zero(c.field(), c.n() - 1);
  return LinearCode::from_generator(g);
}

LinearCode shorten(const LinearCode& c, std::size_t i) {
  if (i >= c.n()) throw IndexOutOfRange("shorten index out of range");
  const Field& f = c.field();
  const Matrix& g = c.generator();
  std::size_t pivot_row = g.rows();
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (g.at(r, i) != 0) {
      pivot_row = r;
      break;
    }
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (r == pivot_row) continue;
    Vec row(g.row(r).begin(), g.row(r).end());
    if (pivot_row < g.rows() && row[i] != 0) {
      Elem factor = f.div(row[i], g.at(pivot_row, i));
      for (std::size_t t = 0; t < row.size(); ++t) row[t] = f.sub(row[t], f.mul(factor, g.at(pivot_row, t)));
    }
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(i));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return LinearCode::zero(f, c.n() - 1);
  Matrix m = Matrix::from_rows(f, rows);
  if (rank(m) == 0) return LinearCode::zero(f, c.n() - 1);
  return LinearCode::from_generator(m);
}

LinearCode schur_square(const LinearCode& c) {
  const std::size_t k = c.k();
  if (k == 0) return c;
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) rows.push_back(star_product(c.field(), c.generator().row(a), c.generator().row(b)));
  return LinearCode::from_generator(Matrix::from_rows(c.field(), rows));
}

std::size_t hull_dimension(const LinearCode& c) {
  if (c.k() == 0) return 0;
  const Matrix& g = c.generator();
  return c.k() - rank(g * g.transpose());
}

}  // namespace mdslab
