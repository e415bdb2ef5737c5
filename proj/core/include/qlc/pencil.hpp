#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qlc/binary_form.hpp"
#include "qlc/matrix.hpp"

namespace qlc {

inline constexpr std::size_t kDim = 6;

/// The quadratic line complex X = F ∩ G, i.e. the pencil λF + μG.
/// G is nonsingular and F is not a multiple of G.
class Pencil {
 public:
  Pencil(ScalarMatrix F, ScalarMatrix G);

  const ScalarMatrix& F() const noexcept { return F_; }
  const ScalarMatrix& G() const noexcept { return G_; }
  /// λF + μG as a matrix of linear binary forms.
  Matrix<BinaryForm> pencil_matrix() const;
  /// Congruence A^t F A, A^t G A.
  Pencil congruent(const ScalarMatrix& A) const;
  /// (F + c G, G).
  Pencil shifted(const Scalar& c) const;

  friend bool operator==(const Pencil&, const Pencil&) = default;

 private:
  ScalarMatrix F_, G_;
};

/// Characteristic numbers e_0 >= e_1 >= ... of one root.
using Bracket = std::vector<int>;

/// Brackets in canonical order: longer first, then lexicographically larger first.
bool bracket_before(const Bracket& a, const Bracket& b);
std::string bracket_str(const Bracket& b);

struct RootFactor {
  BinaryForm factor;  // monic coprime-basis element of the discriminant
  Bracket bracket;    // shared by each of its deg(factor) roots
};

class SegreSymbol {
 public:
  SegreSymbol() = default;
  /// Validates monotonicity and Σe = 6, then sorts.
  explicit SegreSymbol(std::vector<Bracket> brackets, std::vector<RootFactor> factors = {});
  /// "[(21)(11)1]"
  static SegreSymbol parse(std::string_view text);

  const std::vector<Bracket>& brackets() const noexcept { return brackets_; }
  const std::vector<RootFactor>& factors() const noexcept { return factors_; }
  std::string str() const;

  /// Number of brackets (distinct roots of the discriminant).
  int r() const noexcept { return static_cast<int>(brackets_.size()); }
  /// Number of brackets of length k.
  int count_length(std::size_t k) const noexcept;
  std::size_t max_length() const noexcept;

  /// Brackets only; the per-factor data is bookkeeping.
  friend bool operator==(const SegreSymbol& a, const SegreSymbol& b) { return a.brackets_ == b.brackets_; }

 private:
  std::vector<Bracket> brackets_;
  std::vector<RootFactor> factors_;
};

}  // namespace qlc
