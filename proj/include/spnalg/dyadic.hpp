#ifndef SPNALG_DYADIC_HPP
#define SPNALG_DYADIC_HPP

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace spnalg {

/** An exact angle with dyadic coordinates: the value num/2^level taken mod 1.
 *
 * Canonical form: either num is odd, or num == 0 and level == 0; always
 * 0 <= num < 2^level.  Addition never loses exactness, so no floating point
 * appears anywhere downstream.
 */
class DyadicAngle {
public:
  static constexpr int max_level = 30;

  constexpr DyadicAngle() = default;

  static DyadicAngle make(std::int64_t num, int level)
  {
    if (level < 0 || level > max_level)
      throw std::invalid_argument("DyadicAngle: level out of range");

    std::int64_t mod = std::int64_t{1} << level;
    num %= mod;
    if (num < 0)
      num += mod;

    while (level > 0 && num % 2 == 0) {
      num /= 2;
      --level;
    }

    DyadicAngle res;
    res.num_ = num;
    res.level_ = level;
    return res;
  }

  static DyadicAngle zero() { return DyadicAngle(); }
  static DyadicAngle half() { return make(1, 1); }
  static DyadicAngle quarter() { return make(1, 2); }

  std::int64_t num() const { return num_; }
  int level() const { return level_; }
  std::int64_t den() const { return std::int64_t{1} << level_; }

  bool is_zero() const { return num_ == 0; }

  /// additive order, always 2^level
  std::int64_t order() const { return den(); }

  friend DyadicAngle operator+(const DyadicAngle &a, const DyadicAngle &b)
  {
    int level = std::max(a.level_, b.level_);
    std::int64_t na = a.num_ << (level - a.level_);
    std::int64_t nb = b.num_ << (level - b.level_);
    return make(na + nb, level);
  }

  friend DyadicAngle operator-(const DyadicAngle &a)
  { return make(-a.num_, a.level_); }

  friend DyadicAngle operator-(const DyadicAngle &a, const DyadicAngle &b)
  { return a + (-b); }

  DyadicAngle doubled() const
  { return level_ == 0 ? DyadicAngle() : make(num_, level_ - 1); }

  /// the two preimages under doubling
  std::array<DyadicAngle, 2> halves() const
  {
    if (level_ + 1 > max_level)
      throw std::invalid_argument("DyadicAngle: halving exceeds max level");
    return {make(num_, level_ + 1), make(num_ + den(), level_ + 1)};
  }

  /// integer multiple
  DyadicAngle times(std::int64_t k) const
  {
    std::int64_t r = k % den();
    if (r < 0)
      r += den();
    return make(num_ * r, level_);
  }

  bool operator==(const DyadicAngle &other) const = default;

  /// orders by value in [0,1); used for every canonical enumeration
  bool operator<(const DyadicAngle &other) const
  { return (num_ << other.level_) < (other.num_ << level_); }

  std::string str() const
  {
    if (is_zero())
      return "0";
    return std::to_string(num_) + "/" + std::to_string(den());
  }

  /// inverse of str(); accepts unreduced fractions with power-of-two denominator
  static DyadicAngle parse(const std::string &s)
  {
    auto fail = [&] {
      throw std::invalid_argument("DyadicAngle: cannot parse '" + s + "'");
    };

    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
      if (s != "0")
        fail();
      return DyadicAngle();
    }

    std::string num_part = s.substr(0, slash);
    std::string den_part = s.substr(slash + 1);
    if (num_part.empty() || den_part.empty())
      fail();

    std::int64_t num = 0, den = 0;
    try {
      num = std::stoll(num_part);
      den = std::stoll(den_part);
    } catch (std::exception const &) {
      fail();
    }

    if (den <= 0 || (den & (den - 1)) != 0)
      fail();

    int level = 0;
    while ((std::int64_t{1} << level) < den)
      ++level;
    return make(num, level);
  }

  std::size_t hash() const
  {
    return std::hash<std::int64_t>{}((num_ << 5) ^ level_);
  }

private:
  std::int64_t num_ = 0;
  int level_ = 0;
};

} // namespace spnalg

#endif // SPNALG_DYADIC_HPP
