#ifndef SPNALG_POWER_SERIES_HPP
#define SPNALG_POWER_SERIES_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace spnalg {

/// exact rational with overflow-checked 64-bit arithmetic
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long v) : num(v) {}

  Rational(long long n, long long d)
  : num(n),
    den(d)
  {
    if (den == 0)
      throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  void normalize()
  {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static long long checked(__int128 v)
  {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("Rational: 64-bit overflow");
    return static_cast<long long>(v);
  }

  static Rational from128(__int128 n, __int128 d)
  {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rational r;
    r.num = checked(n);
    r.den = checked(d);
    if (r.den == 0)
      throw std::invalid_argument("Rational: zero denominator");
    return r;
  }

  Rational operator+(const Rational &o) const
  {
    return from128(static_cast<__int128>(num) * o.den +
                       static_cast<__int128>(o.num) * den,
                   static_cast<__int128>(den) * o.den);
  }

  Rational operator-(const Rational &o) const
  {
    return from128(static_cast<__int128>(num) * o.den -
                       static_cast<__int128>(o.num) * den,
                   static_cast<__int128>(den) * o.den);
  }

  Rational operator*(const Rational &o) const
  {
    return from128(static_cast<__int128>(num) * o.num,
                   static_cast<__int128>(den) * o.den);
  }

  Rational operator/(const Rational &o) const
  {
    if (o.num == 0)
      throw std::invalid_argument("Rational: division by zero");
    return from128(static_cast<__int128>(num) * o.den,
                   static_cast<__int128>(den) * o.num);
  }

  Rational operator-() const
  {
    Rational r;
    r.num = -num;
    r.den = den;
    return r;
  }

  bool operator==(const Rational &o) const = default;

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  std::string str() const
  {
    if (den == 1)
      return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

/** Truncated formal power series with exact rational coefficients in
 * degrees 0..degree().  All arithmetic requires matching truncation degrees.
 */
class PowerSeries {
public:
  explicit PowerSeries(int degree)
  : coefs_(static_cast<std::size_t>(degree) + 1)
  {
    if (degree < 0 || degree > 4096)
      throw std::invalid_argument("PowerSeries: degree out of range");
  }

  static PowerSeries one(int degree)
  {
    PowerSeries s(degree);
    s.coefs_[0] = Rational(1);
    return s;
  }

  int degree() const { return static_cast<int>(coefs_.size()) - 1; }

  const Rational &coef(int d) const { return coefs_.at(d); }
  void set_coef(int d, Rational v) { coefs_.at(d) = v; }

  PowerSeries operator+(const PowerSeries &o) const
  {
    check_degree(o);
    PowerSeries r(degree());
    for (int d = 0; d <= degree(); ++d)
      r.coefs_[d] = coefs_[d] + o.coefs_[d];
    return r;
  }

  PowerSeries operator-(const PowerSeries &o) const
  {
    check_degree(o);
    PowerSeries r(degree());
    for (int d = 0; d <= degree(); ++d)
      r.coefs_[d] = coefs_[d] - o.coefs_[d];
    return r;
  }

  PowerSeries operator*(const PowerSeries &o) const
  {
    check_degree(o);
    PowerSeries r(degree());
    for (int a = 0; a <= degree(); ++a) {
      if (coefs_[a].is_zero())
        continue;
      for (int b = 0; a + b <= degree(); ++b)
        r.coefs_[a + b] = r.coefs_[a + b] + coefs_[a] * o.coefs_[b];
    }
    return r;
  }

  PowerSeries scaled(const Rational &f) const
  {
    PowerSeries r(degree());
    for (int d = 0; d <= degree(); ++d)
      r.coefs_[d] = coefs_[d] * f;
    return r;
  }

  /// multiply by 1/(1 - s q^l) with s = +1 or -1
  PowerSeries times_inverse_linear(int l, int s) const
  {
    if (l < 1 || (s != 1 && s != -1))
      throw std::invalid_argument("times_inverse_linear: bad factor");
    PowerSeries r(degree());
    Rational sign(s);
    for (int d = 0; d <= degree(); ++d) {
      r.coefs_[d] = coefs_[d];
      if (d >= l)
        r.coefs_[d] = r.coefs_[d] + sign * r.coefs_[d - l];
    }
    return r;
  }

  bool operator==(const PowerSeries &o) const = default;

  /// coefficients as integers; throws when any coefficient is fractional
  std::vector<long long> integer_coefficients() const
  {
    std::vector<long long> res;
    for (const auto &c : coefs_) {
      if (!c.is_integer())
        throw std::domain_error("PowerSeries: non-integer coefficient");
      res.push_back(c.num);
    }
    return res;
  }

  /// "1 + 0·q + 1·q² + ..." with every coefficient up to the truncation degree
  std::string str() const
  {
    std::string res;
    for (int d = 0; d <= degree(); ++d) {
      if (d > 0)
        res += " + ";
      res += coefs_[d].str();
      if (d >= 1) {
        res += "·q";
        if (d >= 2)
          res += superscript(d);
      }
    }
    return res;
  }

private:
  void check_degree(const PowerSeries &o) const
  {
    if (o.degree() != degree())
      throw std::invalid_argument("PowerSeries: truncation degrees differ");
  }

  static std::string superscript(int v)
  {
    static const char *digits[10] = {"⁰", "¹", "²", "³",
                                     "⁴", "⁵", "⁶", "⁷",
                                     "⁸", "⁹"};
    std::string s = std::to_string(v);
    std::string res;
    for (char c : s)
      res += digits[c - '0'];
    return res;
  }

  std::vector<Rational> coefs_;
};

} // namespace spnalg

#endif // SPNALG_POWER_SERIES_HPP
