#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "qlc/scalar.hpp"
#include "qlc/upoly.hpp"

namespace qlc {

class MPoly;

/// Homogeneous form in (lambda, mu). Coefficient j multiplies
/// lambda^(d-j) mu^j. The zero form has no degree (degree() == -1) and is
/// compatible with forms of any degree under addition.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, std::vector<Scalar> coeffs);
  /// a*lambda + b*mu
  static BinaryForm linear(const Scalar& a, const Scalar& b);
  static BinaryForm constant(const Scalar& c);
  /// mu^k * (p(lambda) homogenized to degree deg p)
  static BinaryForm homogenize(const UPoly& p, std::size_t mu_power = 0);
  static BinaryForm from_mpoly(const MPoly& p);

  bool is_zero() const noexcept { return zero_; }
  bool is_constant() const noexcept { return !zero_ && degree_ == 0; }
  int degree() const noexcept { return zero_ ? -1 : degree_; }
  /// coefficient of lambda^(d-j) mu^j
  const Scalar& coeff(std::size_t j) const { return c_[j]; }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }

  /// Leading coefficient in graded reverse lexicographic order (highest
  /// power of lambda carrying a nonzero coefficient).
  Scalar leading_coeff() const;
  BinaryForm monic() const;
  /// Exponent of the largest power of mu dividing the form.
  std::size_t mu_valuation() const;
  /// f(lambda, 1) with the mu-power stripped: f = mu^a * homogenize(p).
  UPoly dehomogenize() const;

  Scalar operator()(const Scalar& lambda, const Scalar& mu) const;
  MPoly to_mpoly() const;

  BinaryForm operator-() const;
  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  BinaryForm& operator*=(const BinaryForm& o);
  BinaryForm& operator*=(const Scalar& s);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(BinaryForm a, const BinaryForm& b) { return a *= b; }
  friend BinaryForm operator*(BinaryForm a, const Scalar& s) { return a *= s; }
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);

 private:
  void normalize_zero();
  bool zero_ = true;
  int degree_ = 0;
  std::vector<Scalar> c_;
};

inline constexpr std::size_t kInfiniteValuation = std::numeric_limits<std::size_t>::max();

BinaryForm exact_div(const BinaryForm& a, const BinaryForm& b);
/// Monic gcd; gcd(0, b) = monic b.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);
BinaryForm squarefree_part(const BinaryForm& f);
std::vector<BinaryForm> coprime_basis(const std::vector<BinaryForm>& fs);
/// Largest k with b^k | f; kInfiniteValuation for f = 0.
std::size_t valuation(const BinaryForm& f, const BinaryForm& b);
bool binary_less(const BinaryForm& a, const BinaryForm& b);

/// Gcd on the MPoly representation: univariate (1 variable) or binary
/// forms (2 variables, homogeneous). Anything else is rejected.
MPoly poly_gcd(const MPoly& a, const MPoly& b);

inline BinaryForm unit_like(const BinaryForm&) { return BinaryForm::constant(Scalar(1)); }

}  // namespace qlc
