#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlc/scalar.hpp"

namespace qlc {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector packed one byte per variable. Exponents stay far below
/// 256 for everything this library builds (degree <= 12).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exps);

  int exp(std::size_t var) const noexcept { return static_cast<int>((key_ >> (8 * var)) & 0xffu); }
  int degree() const noexcept;
  std::vector<int> exps(std::size_t nvars) const;
  std::uint64_t key() const noexcept { return key_; }

  bool divides(const Monomial& other, std::size_t nvars) const noexcept;
  friend Monomial operator*(Monomial a, Monomial b) { return Monomial(a.key_ + b.key_, 0); }
  /// Caller guarantees divisibility.
  friend Monomial operator/(Monomial a, Monomial b) { return Monomial(a.key_ - b.key_, 0); }
  friend bool operator==(Monomial, Monomial) = default;

 private:
  Monomial(std::uint64_t key, int) : key_(key) {}
  std::uint64_t key_ = 0;
};

/// Graded reverse lexicographic comparison: true iff a > b.
bool grevlex_greater(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept;

/// Sparse multivariate polynomial over Q(i).
///
/// Terms are kept sorted in descending graded reverse lexicographic order
/// with no zero coefficients, so two equal polynomials always have identical
/// term lists. A default-constructed MPoly is the zero polynomial in 0
/// variables and acts as zero for any variable count.
class MPoly {
 public:
  struct Term {
    Monomial mono;
    Scalar coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MPoly() = default;
  explicit MPoly(std::size_t nvars);
  static MPoly constant(std::size_t nvars, const Scalar& c);
  static MPoly variable(std::size_t nvars, std::size_t k);
  static MPoly monomial(std::size_t nvars, std::span<const int> exps, const Scalar& c = Scalar(1));
  /// Builds from unsorted terms; repeated monomials are summed.
  static MPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Total degree; -1 for zero.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  int degree_in(std::size_t var) const noexcept;
  Scalar coeff(std::span<const int> exps) const;
  const Term& leading_term() const { return terms_.front(); }

  MPoly monic() const;
  MPoly derivative(std::size_t var) const;
  MPoly homogeneous_part(int d) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  /// Replaces variable k by images[k]; all images share one variable count.
  MPoly substitute(std::span<const MPoly> images) const;
  std::optional<MPoly> divide_by_monomial(const Monomial& m) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Scalar& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Scalar& s) { return a *= s; }
  friend MPoly operator*(const Scalar& s, MPoly a) { return a *= s; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  /// Human-readable form with variables named by `names` (defaults x0, x1, ...).
  std::string str(std::span<const std::string> names = {}) const;

 private:
  void adopt_nvars(const MPoly& o);
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

MPoly pow(const MPoly& p, unsigned k);
/// Exact quotient a / b by multivariate division, or nullopt if b does not divide a.
std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b);
/// Q with Q*Q == p when p is a perfect square.
std::optional<MPoly> exact_sqrt(const MPoly& p);
/// True iff a == c*b for some nonzero scalar c.
bool proportional(const MPoly& a, const MPoly& b);

inline MPoly unit_like(const MPoly& p) { return MPoly::constant(p.nvars(), Scalar(1)); }

}  // namespace qlc
