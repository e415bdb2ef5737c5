#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qlc/scalar.hpp"

namespace qlc {

/// Dense univariate polynomial over Q(i); coefficient k multiplies x^k.
/// Trailing zeros are never stored, so the zero polynomial has no
/// coefficients and degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coeffs);
  UPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static UPoly x() { return UPoly({Scalar(0), Scalar(1)}); }
  /// x - root
  static UPoly linear_root(const Scalar& root) { return UPoly({-root, Scalar(1)}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
  const Scalar& lc() const { return c_.back(); }

  UPoly monic() const;
  UPoly derivative() const;
  Scalar operator()(const Scalar& x) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Scalar& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Scalar& s) { return a *= s; }
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Exact quotient; throws if b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
bool divides(const UPoly& b, const UPoly& a);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& f);
/// Yun's algorithm: f = lc * prod_k s_k^k with s_k squarefree, pairwise
/// coprime and monic. Entry k-1 holds s_k (possibly 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& f);
/// Pairwise-coprime monic refinement of the nonconstant inputs; every input is
/// a unit times a product of powers of the result. Sorted deterministically.
std::vector<UPoly> coprime_basis(const std::vector<UPoly>& fs);
/// Largest k with b^k | f. b must be nonconstant; f must be nonzero.
std::size_t valuation(const UPoly& f, const UPoly& b);

/// Deterministic ordering (degree, then coefficients from the top).
bool upoly_less(const UPoly& a, const UPoly& b);

inline UPoly unit_like(const UPoly&) { return UPoly(Scalar(1)); }

}  // namespace qlc
