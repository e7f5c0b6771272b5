#ifndef SPNALG_TORUS_HPP
#define SPNALG_TORUS_HPP

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spnalg/dyadic.hpp"

namespace spnalg {

/** A point of the discrete maximal torus at dyadic level: one DyadicAngle per
 * coordinate.  The additive group of such points of bounded level is finite,
 * which is what makes every check in this library exact.
 */
class TorusPoint {
public:
  TorusPoint() = default;

  explicit TorusPoint(std::vector<DyadicAngle> coords)
  : coords_(std::move(coords))
  {}

  static TorusPoint zero(int rank)
  { return TorusPoint(std::vector<DyadicAngle>(rank)); }

  /// 2^-level in a single coordinate, zero elsewhere
  static TorusPoint unit(int rank, int coord, int level)
  {
    assert(coord >= 0 && coord < rank);
    auto res = zero(rank);
    res.coords_[coord] = DyadicAngle::make(1, level);
    return res;
  }

  int rank() const { return static_cast<int>(coords_.size()); }

  const DyadicAngle &operator[](int i) const { return coords_[i]; }
  const std::vector<DyadicAngle> &coords() const { return coords_; }

  DyadicAngle &at(int i) { return coords_[i]; }

  bool is_zero() const
  {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const DyadicAngle &a) { return a.is_zero(); });
  }

  /// maximum coordinate level; the point lives at torus depth >= this
  int level() const
  {
    int res = 0;
    for (const auto &a : coords_)
      res = std::max(res, a.level());
    return res;
  }

  friend TorusPoint operator+(const TorusPoint &a, const TorusPoint &b)
  {
    assert(a.rank() == b.rank());
    std::vector<DyadicAngle> coords(a.coords_.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] = a.coords_[i] + b.coords_[i];
    return TorusPoint(std::move(coords));
  }

  friend TorusPoint operator-(const TorusPoint &a)
  {
    std::vector<DyadicAngle> coords(a.coords_.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] = -a.coords_[i];
    return TorusPoint(std::move(coords));
  }

  friend TorusPoint operator-(const TorusPoint &a, const TorusPoint &b)
  { return a + (-b); }

  TorusPoint doubled() const
  {
    std::vector<DyadicAngle> coords(coords_.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] = coords_[i].doubled();
    return TorusPoint(std::move(coords));
  }

  bool operator==(const TorusPoint &other) const = default;

  bool operator<(const TorusPoint &other) const
  {
    assert(rank() == other.rank());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] < other.coords_[i])
        return true;
      if (other.coords_[i] < coords_[i])
        return false;
    }
    return false;
  }

  std::string str() const
  {
    std::string res = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i > 0)
        res += ", ";
      res += coords_[i].str();
    }
    return res + ")";
  }

  /// inverse of str(): "(a/2^m, ..., 0, ...)"
  static TorusPoint parse(const std::string &s)
  {
    std::string t;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c)))
        t += c;

    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
      throw std::invalid_argument("TorusPoint: cannot parse '" + s + "'");

    std::vector<DyadicAngle> coords;
    std::string body = t.substr(1, t.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string item = body.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      coords.push_back(DyadicAngle::parse(item));
      if (comma == std::string::npos)
        break;
      pos = comma + 1;
    }
    return TorusPoint(std::move(coords));
  }

private:
  std::vector<DyadicAngle> coords_;
};

/// coordinatewise sum (named alias kept for API clarity)
inline TorusPoint torus_add(const TorusPoint &a, const TorusPoint &b)
{ return a + b; }

/// additive order: the lcm of coordinate orders, always a power of two
inline std::int64_t point_order(const TorusPoint &t)
{ return std::int64_t{1} << t.level(); }

/** A finite subgroup of the discrete torus, stored as the full sorted element
 * list.  Intended for small subgroups (2-torsion data, singular-set images);
 * construction throws once max_elements is exceeded.
 */
class TorusSubgroup {
public:
  static TorusSubgroup generated_by(int rank, std::vector<TorusPoint> gens,
                                    std::size_t max_elements = (1u << 22))
  {
    for (const auto &g : gens)
      if (g.rank() != rank)
        throw std::invalid_argument("TorusSubgroup: generator rank mismatch");

    std::set<TorusPoint> seen;
    std::vector<TorusPoint> queue;
    seen.insert(TorusPoint::zero(rank));
    queue.push_back(TorusPoint::zero(rank));

    while (!queue.empty()) {
      TorusPoint cur = queue.back();
      queue.pop_back();
      for (const auto &g : gens) {
        TorusPoint next = cur + g;
        if (seen.insert(next).second) {
          if (seen.size() > max_elements)
            throw std::runtime_error("TorusSubgroup: closure exceeds cap");
          queue.push_back(next);
        }
      }
    }

    TorusSubgroup res;
    res.rank_ = rank;
    res.gens_ = std::move(gens);
    res.elements_.assign(seen.begin(), seen.end());
    return res;
  }

  static TorusSubgroup trivial(int rank)
  { return generated_by(rank, {}); }

  /// all points with every coordinate of level <= 1
  static TorusSubgroup two_torsion(int rank)
  {
    std::vector<TorusPoint> gens;
    for (int i = 0; i < rank; ++i)
      gens.push_back(TorusPoint::unit(rank, i, 1));
    return generated_by(rank, std::move(gens));
  }

  int rank() const { return rank_; }
  const std::vector<TorusPoint> &generators() const { return gens_; }

  /// canonical sorted enumeration
  const std::vector<TorusPoint> &elements() const { return elements_; }

  std::size_t order() const { return elements_.size(); }

  bool contains(const TorusPoint &t) const
  {
    return std::binary_search(elements_.begin(), elements_.end(), t);
  }

private:
  int rank_ = 0;
  std::vector<TorusPoint> gens_;
  std::vector<TorusPoint> elements_;
};

/// canonical sorted enumeration of a generated subgroup (API-level shorthand)
inline std::vector<TorusPoint> subgroup_elements(int rank,
                                                 std::vector<TorusPoint> gens)
{ return TorusSubgroup::generated_by(rank, std::move(gens)).elements(); }

} // namespace spnalg

#endif // SPNALG_TORUS_HPP
