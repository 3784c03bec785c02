#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hopf/rational.hpp"

namespace hopf {

// Integer polynomial, coefficient of X^i at index i.
using IntPoly = std::vector<long long>;

IntPoly cyclotomic_polynomial(int M);
int euler_phi(int M);

// Element of Q(zeta_M) in the power basis 1, z, ..., z^{phi(M)-1}.
// Storage drops trailing zero coordinates; coords() pads back to phi(M).
// Conductor 1 values are plain rationals and combine with any conductor.
class CycloNum {
 public:
  CycloNum() = default;
  CycloNum(long long v) : CycloNum(Rational(v)) {}  // NOLINT(implicit)
  CycloNum(const Rational& r);                       // NOLINT(implicit)
  CycloNum(int conductor, const Rational& r);
  static CycloNum zero(int conductor);
  static CycloNum one(int conductor) { return CycloNum(conductor, Rational(1)); }
  // zeta_M^k for any integer k.
  static CycloNum zeta(int conductor, long long k = 1);
  // Arbitrary coefficient vector in powers of zeta; reduced mod Phi_M.
  static CycloNum from_poly(int conductor, const std::vector<Rational>& poly);
  static CycloNum parse(std::string_view text, int conductor);

  int conductor() const { return m_; }
  std::vector<Rational> coords() const;
  const std::vector<Rational>& raw() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const;  // requires is_rational()

  CycloNum operator-() const;
  CycloNum inv() const;
  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  CycloNum& operator+=(const CycloNum& b);
  CycloNum& operator-=(const CycloNum& b);
  CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }
  // this += a * b
  void addmul(const CycloNum& a, const CycloNum& b);
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  CycloNum pow(long long e) const;
  CycloNum embed(int new_conductor) const;
  std::string str() const;

 private:
  void trim();
  static int join(int a, int b);

  int m_ = 1;
  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const CycloNum& a) { return os << a.str(); }

}  // namespace hopf
