#ifndef SPNALG_INVARIANTS_HPP
#define SPNALG_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "spnalg/abelian2.hpp"
#include "spnalg/power_series.hpp"
#include "spnalg/weyl_subgroup.hpp"

namespace spnalg {

namespace detail {

/// all exponent vectors of total degree d in n variables, lexicographic
inline std::vector<std::vector<int>> exponent_vectors(int n, int d)
{
  std::vector<std::vector<int>> res;
  std::vector<int> e(n, 0);
  // walk the compositions of d into n parts
  e[0] = d;
  while (true) {
    res.push_back(e);
    // next composition: find the last positive entry before the final slot
    int i = n - 2;
    while (i >= 0 && e[i] == 0)
      --i;
    if (i < 0)
      break;
    --e[i];
    int rest = e[n - 1] + 1;
    e[n - 1] = 0;
    e[i + 1] = rest;
    if (res.size() > (1u << 24))
      throw std::overflow_error("exponent_vectors: too many monomials");
  }
  return res;
}

inline int exact_integer_rank(std::vector<std::vector<long long>> m)
{
  if (m.empty())
    return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  auto checked = [](__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("invariant dimension: coefficient overflow");
    return static_cast<long long>(v);
  };

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    // smallest nonzero pivot keeps the integer growth down
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0 &&
          (pivot == -1 ||
           std::llabs(m[r][col]) < std::llabs(m[pivot][col])))
        pivot = r;
    if (pivot == -1)
      continue;
    std::swap(m[rank], m[pivot]);
    long long a = m[rank][col];
    for (int r = rank + 1; r < rows; ++r) {
      long long b = m[r][col];
      if (b == 0)
        continue;
      long long g = std::gcd(std::llabs(a), std::llabs(b));
      long long fa = b / g, fb = a / g;
      long long content = 0;
      for (int c = col; c < cols; ++c) {
        m[r][c] = checked(static_cast<__int128>(m[r][c]) * fb -
                          static_cast<__int128>(m[rank][c]) * fa);
        content = std::gcd(content, std::llabs(m[r][c]));
      }
      if (content > 1)
        for (int c = col; c < cols; ++c)
          m[r][c] /= content;
    }
    ++rank;
  }
  return rank;
}

} // namespace detail

/** Molien series (1/|H|) sum over w of 1/det(1 - q rho(w)) for a group of
 * signed permutations acting on the rank-n torus coordinates, each in series
 * degree 1 (cohomological degree 2).  The determinant factors over the
 * signed cycles: a cycle of length l with sign product eps contributes
 * (1 - eps q^l).
 */
inline PowerSeries molien(const WeylSubgroup &h, int max_degree)
{
  int n = h.rank();
  PowerSeries sum(max_degree);
  for (const SignedPerm &w : h.elements()) {
    PowerSeries term = PowerSeries::one(max_degree);
    std::vector<bool> done(n, false);
    for (int i = 0; i < n; ++i) {
      if (done[i])
        continue;
      int len = 0;
      bool negative = false;
      int j = i;
      do {
        done[j] = true;
        negative ^= w.sign_at(j);
        ++len;
        j = w.perm()[j];
      } while (j != i);
      term = term.times_inverse_linear(len, negative ? -1 : 1);
    }
    sum = sum + term;
  }
  return sum.scaled(Rational(1, static_cast<long long>(h.order())));
}

/// prod_{i=1..n} 1/(1 - q^{2i}): generators in series degrees 2, 4, ..., 2n
inline PowerSeries target_series(int n, int max_degree)
{
  if (n < 1 || n > 64)
    throw std::invalid_argument("target_series: rank out of range");
  PowerSeries s = PowerSeries::one(max_degree);
  for (int i = 1; i <= n; ++i)
    s = s.times_inverse_linear(2 * i, 1);
  return s;
}

/// prod_{i=1..n} 1/(1 - q^{4i}): the same algebra in cohomological grading
inline PowerSeries cohomological_target_series(int n, int max_degree)
{
  if (n < 1 || n > 64)
    throw std::invalid_argument(
        "cohomological_target_series: rank out of range");
  PowerSeries s = PowerSeries::one(max_degree);
  for (int i = 1; i <= n; ++i)
    s = s.times_inverse_linear(4 * i, 1);
  return s;
}

/** Dimension of the degree-d invariants of the polynomial action for each
 * d <= max_degree, computed by Reynolds averaging of every monomial followed
 * by an exact integer rank.  Deliberately independent of the Molien series.
 */
inline std::vector<int> invariant_dims_direct(const WeylSubgroup &h,
                                              int max_degree)
{
  int n = h.rank();
  if (n > 3)
    throw std::invalid_argument("invariant_dims_direct: rank capped at 3");
  if (max_degree > 12)
    throw std::invalid_argument("invariant_dims_direct: degree capped at 12");

  std::vector<int> dims;
  for (int d = 0; d <= max_degree; ++d) {
    auto monomials = detail::exponent_vectors(n, d);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < monomials.size(); ++i)
      index[monomials[i]] = static_cast<int>(i);

    // row e = |H| times the Reynolds average of the monomial t^e
    std::vector<std::vector<long long>> rows;
    for (const auto &e : monomials) {
      std::vector<long long> row(monomials.size(), 0);
      for (const SignedPerm &w : h.elements()) {
        std::vector<int> img(n, 0);
        int sign_parity = 0;
        for (int c = 0; c < n; ++c) {
          int target = w.perm()[c];
          img[target] = e[c];
          if (w.sign_at(target))
            sign_parity ^= e[c] & 1;
        }
        row[index.at(img)] += sign_parity ? -1 : 1;
      }
      rows.push_back(std::move(row));
    }
    dims.push_back(detail::exact_integer_rank(std::move(rows)));
  }
  return dims;
}

/** Dimensions over F_2 of the symmetric-group invariants of F_2[q_1..q_n]
 * with every q_i in cohomological degree 4, reported for each degree
 * 0..max_degree (odd and non-multiple-of-4 degrees are zero).  Computed by
 * row-reducing the orbit sums of monomials.
 */
inline std::vector<int> f2_invariant_dims(int n, int max_degree)
{
  if (n < 1 || n > 4)
    throw std::invalid_argument("f2_invariant_dims: rank capped at 4");
  if (max_degree > 32)
    throw std::invalid_argument("f2_invariant_dims: degree capped at 32");

  std::vector<int> dims(max_degree + 1, 0);
  for (int deg = 0; deg <= max_degree; ++deg) {
    if (deg % 4 != 0)
      continue;
    int k = deg / 4;
    auto monomials = detail::exponent_vectors(n, k);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < monomials.size(); ++i)
      index[monomials[i]] = static_cast<int>(i);

    // group the monomials into symmetric-group orbits by sorted exponents
    std::map<std::vector<int>, std::vector<int>> orbits;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      std::vector<int> key = monomials[i];
      std::sort(key.begin(), key.end());
      orbits[key].push_back(static_cast<int>(i));
    }

    F2RowSpace space(static_cast<int>(monomials.size()));
    for (const auto &[key, members] : orbits) {
      auto row = space.zero_row();
      for (int i : members)
        F2RowSpace::set_bit(row, i);
      space.insert(std::move(row));
    }
    dims[deg] = space.rank();
  }
  return dims;
}

} // namespace spnalg

#endif // SPNALG_INVARIANTS_HPP
