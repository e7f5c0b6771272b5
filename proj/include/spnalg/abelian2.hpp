#ifndef SPNALG_ABELIAN2_HPP
#define SPNALG_ABELIAN2_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spnalg {

/** Isomorphism type of a finite abelian 2-group: the list of elementary
 * divisors (powers of two), sorted ascending.  The trivial group is the empty
 * list and prints as "1".
 */
struct AbelianGroupShape {
  std::vector<std::uint64_t> divisors;

  static AbelianGroupShape trivial() { return {}; }

  /// r copies of Z/2^e
  static AbelianGroupShape homocyclic(int r, int e)
  {
    AbelianGroupShape s;
    s.divisors.assign(r, std::uint64_t{1} << e);
    return s;
  }

  bool is_trivial() const { return divisors.empty(); }

  std::uint64_t order() const
  {
    std::uint64_t res = 1;
    for (auto d : divisors)
      res *= d;
    return res;
  }

  bool operator==(const AbelianGroupShape &other) const = default;

  std::string str() const
  {
    if (divisors.empty())
      return "1";
    std::string res;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (i > 0)
        res += " x ";
      res += "Z/" + std::to_string(divisors[i]);
    }
    return res;
  }
};

/// shape from the exponent-count profile c_t = #{divisors > 2^t}, t = 0..e-1
inline AbelianGroupShape shape_from_corank_profile(const std::vector<int> &c)
{
  AbelianGroupShape res;
  for (std::size_t t = 1; t <= c.size(); ++t) {
    int count = (t == c.size() ? 0 : -c[t]) + c[t - 1];
    for (int i = 0; i < count; ++i)
      res.divisors.push_back(std::uint64_t{1} << t);
  }
  std::sort(res.divisors.begin(), res.divisors.end());
  return res;
}

/** Row space over F_2 with bitset rows, maintained as a reduced staircase.
 * Used for the large mod-2 cocycle systems where entry-per-word storage would
 * be too slow.
 */
class F2RowSpace {
public:
  explicit F2RowSpace(int cols)
  : cols_(cols),
    words_((cols + 63) / 64)
  {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  static void set_bit(std::vector<std::uint64_t> &row, int i)
  { row[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::vector<std::uint64_t> zero_row() const
  { return std::vector<std::uint64_t>(words_, 0); }

  /// reduce against the basis; returns true if the row enlarged the space
  bool insert(std::vector<std::uint64_t> row)
  {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (bit(row, pivots_[i]))
        xor_into(row, rows_[i]);
    int p = first_bit(row);
    if (p < 0)
      return false;
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }

private:
  static bool bit(const std::vector<std::uint64_t> &row, int i)
  { return (row[i >> 6] >> (i & 63)) & 1; }

  static void xor_into(std::vector<std::uint64_t> &dst,
                       const std::vector<std::uint64_t> &src)
  {
    for (std::size_t w = 0; w < dst.size(); ++w)
      dst[w] ^= src[w];
  }

  int first_bit(const std::vector<std::uint64_t> &row) const
  {
    for (std::size_t w = 0; w < row.size(); ++w)
      if (row[w])
        return static_cast<int>(w * 64) + std::countr_zero(row[w]);
    return -1;
  }

  int cols_;
  int words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<int> pivots_;
};

/** Row space over Z/2^e, kept as a staircase with normalized pivots (each
 * pivot entry is an exact power of two) and closed under annihilators: for a
 * pivot 2^a at column c, 2^{e-a} times that row lies in the span of the rows
 * with later pivots.  This closure is what makes greedy reduction a complete
 * membership test and the pivot valuations determine the span order.
 */
class Staircase {
public:
  Staircase(int cols, int e)
  : cols_(cols),
    e_(e),
    mask_(e >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << e) - 1),
    pivot_row_(cols, -1)
  {
    if (e < 1 || e > 30)
      throw std::invalid_argument("Staircase: exponent out of range");
  }

  int cols() const { return cols_; }
  int exponent() const { return e_; }

  const std::vector<std::vector<std::uint32_t>> &rows() const { return rows_; }

  void insert(std::vector<std::uint32_t> row)
  {
    std::vector<std::vector<std::uint32_t>> pending;
    pending.push_back(std::move(row));
    while (!pending.empty()) {
      auto cur = std::move(pending.back());
      pending.pop_back();
      insert_one(std::move(cur), pending);
    }
  }

  /// true when the row lies in the span (reduction reaches zero)
  bool contains(std::vector<std::uint32_t> row) const
  {
    for (int c = 0; c < cols_; ++c) {
      std::uint32_t v = row[c] & mask_;
      if (v == 0)
        continue;
      int r = pivot_row_[c];
      if (r < 0)
        return false;
      int alpha = val2(rows_[r][c]);
      if (val2(v) < alpha)
        return false;
      sub_multiple(row, rows_[r], v >> alpha);
    }
    return true;
  }

  /// log2 of the number of elements in the span
  int log2_order() const
  {
    int res = 0;
    for (const auto &r : rows_)
      res += e_ - val2(r[pivot_col(r)]);
    return res;
  }

  /** Generators of {x : R x = 0} for the rows R of this staircase, via the
   * staircase of (R^T | I) — combinations with vanishing left half are
   * exactly the null vectors, and the closure property makes the list
   * complete.
   */
  std::vector<std::vector<std::uint32_t>> null_space() const
  {
    int k = static_cast<int>(rows_.size());
    Staircase aug(k + cols_, e_);
    for (int i = 0; i < cols_; ++i) {
      std::vector<std::uint32_t> row(k + cols_, 0);
      for (int j = 0; j < k; ++j)
        row[j] = rows_[j][i];
      row[k + i] = 1;
      aug.insert(std::move(row));
    }

    std::vector<std::vector<std::uint32_t>> res;
    for (const auto &row : aug.rows_) {
      bool left_zero = true;
      for (int j = 0; j < k; ++j)
        if (row[j] != 0) {
          left_zero = false;
          break;
        }
      if (left_zero)
        res.emplace_back(row.begin() + k, row.end());
    }
    return res;
  }

private:
  int val2(std::uint32_t v) const
  { return v == 0 ? e_ : std::countr_zero(v); }

  int pivot_col(const std::vector<std::uint32_t> &row) const
  {
    for (int c = 0; c < cols_; ++c)
      if (row[c] != 0)
        return c;
    return cols_;
  }

  /// inverse of an odd unit mod 2^e by Hensel lifting
  std::uint32_t unit_inverse(std::uint32_t u) const
  {
    std::uint32_t inv = 1;
    for (int it = 0; it < 5; ++it)
      inv = (inv * (2 - u * inv)) & mask_;
    return inv;
  }

  void scale(std::vector<std::uint32_t> &row, std::uint32_t f) const
  {
    for (auto &v : row)
      v = static_cast<std::uint32_t>((std::uint64_t{v} * f) & mask_);
  }

  static void sub_multiple(std::vector<std::uint32_t> &dst,
                           const std::vector<std::uint32_t> &src,
                           std::uint32_t f)
  {
    // masking happens lazily; entries stay within uint32 via wraparound
    for (std::size_t i = 0; i < dst.size(); ++i)
      dst[i] -= static_cast<std::uint32_t>(std::uint64_t{src[i]} * f);
  }

  /// pivot becomes the exact power of two 2^{val}
  void normalize(std::vector<std::uint32_t> &row, int c) const
  {
    std::uint32_t v = row[c] & mask_;
    scale(row, unit_inverse(v >> val2(v)));
  }

  void insert_one(std::vector<std::uint32_t> row,
                  std::vector<std::vector<std::uint32_t>> &pending)
  {
    for (auto &v : row)
      v &= mask_;
    for (int c = 0; c < cols_; ++c) {
      std::uint32_t v = row[c] & mask_;
      if (v == 0)
        continue;
      int r = pivot_row_[c];
      if (r < 0) {
        normalize(row, c);
        int beta = val2(row[c] & mask_);
        if (beta < e_) {
          auto ann = row;
          scale(ann, std::uint32_t{1} << (e_ - beta));
          pending.push_back(std::move(ann));
        }
        pivot_row_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return;
      }
      int alpha = val2(rows_[r][c]);
      int beta = val2(v);
      if (beta >= alpha) {
        sub_multiple(row, rows_[r], v >> alpha);
        continue;
      }
      // the incoming row has the finer pivot: swap it in, keep reducing the
      // displaced row, and queue the annihilator of the new pivot
      normalize(row, c);
      std::swap(row, rows_[r]);
      auto ann = rows_[r];
      scale(ann, std::uint32_t{1} << (e_ - beta));
      pending.push_back(std::move(ann));
      // the displaced row has valuation alpha > beta at c; clear and go on
      sub_multiple(row, rows_[r], (row[c] & mask_) >> beta);
    }
  }

  int cols_;
  int e_;
  std::uint32_t mask_;
  std::vector<int> pivot_row_; // column -> row index, -1 if none
  std::vector<std::vector<std::uint32_t>> rows_;
};

/** Shape of (A + B) / B for subgroups of (Z/2^e)^n given by generators, with
 * B contained in A + B by construction.  Uses only span orders: writing the
 * quotient as a sum of Z/2^{lambda_i}, the count of lambda_i > t equals
 * log2|2^t A + B| - log2|2^{t+1} A + B|.
 */
inline AbelianGroupShape quotient_shape(
    int cols, int e, const std::vector<std::vector<std::uint32_t>> &a_gens,
    const std::vector<std::vector<std::uint32_t>> &b_gens)
{
  std::vector<int> log_orders;
  for (int t = 0; t <= e; ++t) {
    Staircase st(cols, e);
    for (auto row : a_gens) {
      for (auto &v : row)
        v = static_cast<std::uint32_t>(
            (std::uint64_t{v} << t));
      st.insert(std::move(row));
    }
    for (const auto &row : b_gens)
      st.insert(row);
    log_orders.push_back(st.log2_order());
  }

  std::vector<int> corank(e);
  for (int t = 0; t < e; ++t)
    corank[t] = log_orders[t] - log_orders[t + 1];
  return shape_from_corank_profile(corank);
}

} // namespace spnalg

#endif // SPNALG_ABELIAN2_HPP
