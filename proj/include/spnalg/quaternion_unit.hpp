#ifndef SPNALG_QUATERNION_UNIT_HPP
#define SPNALG_QUATERNION_UNIT_HPP

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spnalg/dyadic.hpp"

namespace spnalg {

/** A unit quaternion of the form z(theta) = exp(2*pi*i*theta) or z(theta)*j,
 * with theta a dyadic angle.  These are exactly the elements of the unit-circle
 * normalizer inside the unit quaternions with 2-power torsion angles; the
 * eight Lipschitz units +-1, +-i, +-j, +-k arise at quarter angles.
 *
 * Multiplication follows from j*z = conj(z)*j and j^2 = -1:
 *   z(a) * z(b)   = z(a+b)        z(a) * z(b)j  = z(a+b)j
 *   z(a)j * z(b)  = z(a-b)j       z(a)j * z(b)j = z(a-b+1/2)
 */
class UnitCoef {
public:
  UnitCoef() = default;

  UnitCoef(DyadicAngle angle, bool j_flag)
  : angle_(angle),
    j_flag_(j_flag)
  {}

  static UnitCoef one() { return {DyadicAngle{}, false}; }
  static UnitCoef minus_one() { return {DyadicAngle::half(), false}; }
  static UnitCoef i() { return {DyadicAngle::quarter(), false}; }
  static UnitCoef j() { return {DyadicAngle{}, true}; }
  static UnitCoef k() { return {DyadicAngle::quarter(), true}; }
  static UnitCoef circle(DyadicAngle angle) { return {angle, false}; }

  const DyadicAngle &angle() const { return angle_; }
  bool j_flag() const { return j_flag_; }
  bool is_one() const { return !j_flag_ && angle_.is_zero(); }

  /// true for the eight Lipschitz units +-1, +-i, +-j, +-k
  bool is_lipschitz() const { return angle_.level() <= 2; }

  friend UnitCoef operator*(const UnitCoef &a, const UnitCoef &b)
  {
    DyadicAngle angle = a.j_flag_ ? a.angle_ - b.angle_ : a.angle_ + b.angle_;
    if (a.j_flag_ && b.j_flag_)
      return {angle + DyadicAngle::half(), false};
    return {angle, a.j_flag_ != b.j_flag_};
  }

  UnitCoef inverse() const
  {
    if (j_flag_)
      return {angle_ + DyadicAngle::half(), true};
    return {-angle_, false};
  }

  UnitCoef conjugate() const
  {
    if (j_flag_)
      return {angle_ + DyadicAngle::half(), true}; // conj(zj) = -zj
    return {-angle_, false};
  }

  int order() const
  {
    if (j_flag_)
      return 4; // (zj)^2 = -1 for every angle
    return angle_.order();
  }

  bool operator==(const UnitCoef &other) const = default;

  bool operator<(const UnitCoef &other) const
  {
    if (j_flag_ != other.j_flag_)
      return j_flag_ < other.j_flag_;
    return angle_ < other.angle_;
  }

  /// e.g. "z(0)", "z(1/2)", "z(1/4)j"
  std::string str() const
  {
    std::string res = "z(" + angle_.str() + ")";
    if (j_flag_)
      res += "j";
    return res;
  }

  static UnitCoef parse(const std::string &text)
  {
    if (text.size() < 4 || text.substr(0, 2) != "z(")
      throw std::invalid_argument("UnitCoef: expected z(...) in '" + text +
                                  "'");
    auto close = text.find(')');
    if (close == std::string::npos)
      throw std::invalid_argument("UnitCoef: missing ')' in '" + text + "'");
    auto tail = text.substr(close + 1);
    bool jf = tail == "j";
    if (!jf && !tail.empty())
      throw std::invalid_argument("UnitCoef: trailing text in '" + text + "'");
    return {DyadicAngle::parse(text.substr(2, close - 2)), jf};
  }

  std::size_t hash() const
  {
    return angle_.hash() * 2 + (j_flag_ ? 1 : 0);
  }

private:
  DyadicAngle angle_;
  bool j_flag_ = false;
};

/// the quaternion group Q(8) = {+-1, +-i, +-j, +-k}: quarter angles times 1, j
inline std::vector<UnitCoef> quaternion_group8()
{
  std::vector<UnitCoef> res;
  for (int jf = 0; jf < 2; ++jf)
    for (int q = 0; q < 4; ++q)
      res.push_back({DyadicAngle::make(q, 2), jf != 0});
  return res;
}

/// all unit coefficients with angle level <= m, in canonical order
inline std::vector<UnitCoef> unit_coefs_at_depth(int m)
{
  std::vector<UnitCoef> res;
  for (int jf = 0; jf < 2; ++jf)
    for (std::int64_t num = 0; num < (std::int64_t{1} << m); ++num)
      res.push_back({DyadicAngle::make(num, m), jf != 0});
  return res;
}

} // namespace spnalg

#endif // SPNALG_QUATERNION_UNIT_HPP
