#ifndef SPNALG_SIGNED_PERM_HPP
#define SPNALG_SIGNED_PERM_HPP

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spnalg/torus.hpp"

namespace spnalg {

/** A signed permutation on n coordinates: permute, then negate the marked
 * coordinates.  These are exactly the elements of the Weyl group of the rank-n
 * compact symplectic group acting on the maximal torus.
 *
 * Conventions:
 *   - perm()[c] is the image of coordinate c (0-based),
 *   - sign bit i applies to the *target* coordinate i,
 *   - act(w, t)[i] = +-t[w.perm()^-1 (i)].
 */
class SignedPerm {
public:
  static constexpr int max_rank = 16;

  SignedPerm() = default;

  SignedPerm(std::vector<std::uint8_t> perm, std::uint32_t signs)
  : perm_(std::move(perm)),
    signs_(signs)
  {
    assert(rank() <= max_rank);
    assert(valid());
  }

  static SignedPerm identity(int n)
  {
    std::vector<std::uint8_t> perm(n);
    for (int i = 0; i < n; ++i)
      perm[i] = static_cast<std::uint8_t>(i);
    return SignedPerm(std::move(perm), 0u);
  }

  /// negation of a single coordinate
  static SignedPerm sign_flip(int n, int i)
  {
    auto res = identity(n);
    res.signs_ = 1u << i;
    return res;
  }

  /// swap of coordinates i, j; signed == true negates both targets
  static SignedPerm transposition(int n, int i, int j, bool signed_ = false)
  {
    assert(i != j);
    auto res = identity(n);
    std::swap(res.perm_[i], res.perm_[j]);
    if (signed_)
      res.signs_ = (1u << i) | (1u << j);
    return res;
  }

  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<std::uint8_t> &perm() const { return perm_; }
  std::uint32_t signs() const { return signs_; }
  bool sign_at(int i) const { return (signs_ >> i) & 1u; }

  bool is_identity() const
  {
    if (signs_ != 0)
      return false;
    for (int i = 0; i < rank(); ++i)
      if (perm_[i] != i)
        return false;
    return true;
  }

  /// group law: (a * b) acts as a after b
  friend SignedPerm operator*(const SignedPerm &a, const SignedPerm &b)
  {
    assert(a.rank() == b.rank());
    int n = a.rank();
    std::vector<std::uint8_t> perm(n);
    std::uint32_t signs = a.signs_;
    for (int c = 0; c < n; ++c) {
      int i = a.perm_[b.perm_[c]];
      perm[c] = static_cast<std::uint8_t>(i);
      // sign of target a.perm_[c'] twists by b's sign at c'
      if (b.sign_at(b.perm_[c]))
        signs ^= 1u << a.perm_[b.perm_[c]];
    }
    return SignedPerm(std::move(perm), signs);
  }

  SignedPerm inverse() const
  {
    int n = rank();
    std::vector<std::uint8_t> perm(n);
    std::uint32_t signs = 0;
    for (int c = 0; c < n; ++c) {
      perm[perm_[c]] = static_cast<std::uint8_t>(c);
      if (sign_at(perm_[c]))
        signs ^= 1u << c;
    }
    return SignedPerm(std::move(perm), signs);
  }

  int order() const
  {
    SignedPerm p = *this;
    int res = 1;
    while (!p.is_identity()) {
      p = p * *this;
      ++res;
      assert(res <= 2 * max_rank * max_rank);
    }
    return res;
  }

  bool operator==(const SignedPerm &other) const = default;

  bool operator<(const SignedPerm &other) const
  { return key() < other.key(); }

  /// packs into (perm nibbles, sign mask); unique for rank <= 16
  std::pair<std::uint64_t, std::uint64_t> key() const
  {
    std::uint64_t hi = 0;
    for (int i = 0; i < rank(); ++i)
      hi |= static_cast<std::uint64_t>(perm_[i]) << (4 * i);
    return {hi, static_cast<std::uint64_t>(signs_)};
  }

  /// cycle notation plus a sign character per coordinate, e.g. "(1 2)|+-+"
  std::string str() const
  {
    int n = rank();
    std::string res;
    std::vector<bool> done(n, false);
    for (int i = 0; i < n; ++i) {
      if (done[i] || perm_[i] == i)
        continue;
      res += "(" + std::to_string(i + 1);
      done[i] = true;
      for (int j = perm_[i]; j != i; j = perm_[j]) {
        res += " " + std::to_string(j + 1);
        done[j] = true;
      }
      res += ")";
    }
    if (res.empty())
      res = "()";
    res += "|";
    for (int i = 0; i < n; ++i)
      res += sign_at(i) ? '-' : '+';
    return res;
  }

private:
  bool valid() const
  {
    std::uint32_t seen = 0;
    for (auto i : perm_) {
      if (i >= perm_.size() || (seen & (1u << i)))
        return false;
      seen |= 1u << i;
    }
    return (signs_ >> perm_.size()) == 0;
  }

  std::vector<std::uint8_t> perm_;
  std::uint32_t signs_ = 0;
};

struct SignedPermHash {
  std::size_t operator()(const SignedPerm &w) const
  {
    auto [hi, lo] = w.key();
    return std::hash<std::uint64_t>{}(hi * 0x9e3779b97f4a7c15ull ^ lo);
  }
};

/// torus action: act(w, t)[i] = +-t[perm^-1(i)]
inline TorusPoint act(const SignedPerm &w, const TorusPoint &t)
{
  assert(w.rank() == t.rank());
  int n = w.rank();
  std::vector<DyadicAngle> coords(n);
  for (int c = 0; c < n; ++c) {
    int i = w.perm()[c];
    coords[i] = w.sign_at(i) ? -t[c] : t[c];
  }
  return TorusPoint(std::move(coords));
}

/** Pseudoreflection test over the rationals: the fixed space of the signed
 * permutation matrix has dimension (number of permutation cycles whose sign
 * product is +1); a reflection is an element where this equals rank - 1.
 */
inline bool is_reflection(const SignedPerm &w)
{
  int n = w.rank();
  std::vector<bool> done(n, false);
  int positive_cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (done[i])
      continue;
    bool negative = false;
    int j = i;
    do {
      done[j] = true;
      negative ^= w.sign_at(j);
      j = w.perm()[j];
    } while (j != i);
    if (!negative)
      ++positive_cycles;
  }
  return positive_cycles == n - 1;
}

/** All reflections of the rank-n group, in canonical order: n sign flips, then
 * for each pair i < j the plain and the signed transposition.  There are n^2
 * of them in total.
 */
inline std::vector<SignedPerm> reflections(int n)
{
  std::vector<SignedPerm> res;
  for (int i = 0; i < n; ++i)
    res.push_back(SignedPerm::sign_flip(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      res.push_back(SignedPerm::transposition(n, i, j, false));
      res.push_back(SignedPerm::transposition(n, i, j, true));
    }
  return res;
}

/// parity of the underlying permutation (1 = odd)
inline int perm_parity(const SignedPerm &w)
{
  int n = w.rank();
  std::vector<bool> done(n, false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (done[i])
      continue;
    ++cycles;
    for (int j = i; !done[j]; j = w.perm()[j])
      done[j] = true;
  }
  return (n - cycles) % 2;
}

/** Projection onto (Z/2)^2: first bit the product of all signs, second bit
 * the permutation parity.  This is a surjective homomorphism for n >= 2, and
 * its kernel cuts out the subgroups of 2-power index.
 */
inline std::pair<int, int> pi_projection(const SignedPerm &w)
{
  return {std::popcount(w.signs()) % 2, perm_parity(w)};
}

} // namespace spnalg

#endif // SPNALG_SIGNED_PERM_HPP
