#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlc/matrix.hpp"
#include "qlc/mpoly.hpp"
#include "qlc/pencil.hpp"

namespace qlc::stability {

/// r1 >= r2 >= r3 >= 0 with r4 = -r1, r5 = -r2, r6 = -r3.
void validate_so6_weights(std::span<const int> w);
/// r0 >= r1 >= r2 >= r3, sum zero.
void validate_sl4_weights(std::span<const int> w);

/// F - (tr F / 6) G for a pencil in Klein coordinates (G = I).
ScalarMatrix trace_zero_representative(const Pencil& p);

/// max{r_i + r_j : q_ij != 0}. Q is in Plücker coordinates with G the
/// hyperbolic form pairing i and i+3.
int mu_quadric(const ScalarMatrix& Q, std::span<const int> w);

/// Entries that must vanish for the destabilizing pattern: the upper-left
/// 3x3 block and q14, q15, q16, q25, q26, q36 (1-based). Given coordinates only.
bool unstable_pattern_quadric(const ScalarMatrix& Q);
/// The 1-based index pairs of the off-block zero entries.
const std::vector<std::pair<int, int>>& quadric_pattern_pairs();

inline constexpr std::array<int, 6> kQuadricWitness{3, 2, 1, -3, -2, -1};
inline constexpr std::array<int, 4> kQuarticWitness{8, -1, -3, -4};

/// At least two brackets.
bool segre_semistable(const Pencil& p);
bool segre_semistable(const SegreSymbol& s);

/// One-bracket symbols listed as not semistable (paper-asserted reference data).
const std::vector<std::string>& unstable_irreducible_symbols();

/// Quartics are homogeneous degree-4 MPolys in X0..X3.
void validate_quartic(const MPoly& q);
int mu_quartic(const MPoly& q, std::span<const int> w);
/// The 15 exponent vectors of the destabilizing pattern.
const std::vector<std::array<int, 4>>& quartic_pattern();
bool unstable_pattern_quartic(const MPoly& q);

struct TriplePointReport {
  bool on_surface = false;
  bool is_triple = false;
  /// Degree-3 part of the expansion at p, in the three affine coordinates of
  /// the chart at p's first nonzero coordinate (other coordinates in order).
  MPoly tangent_cone;
  std::optional<bool> r_singular;
  std::optional<std::size_t> hessian_rank;  // of the cone at r
  std::optional<bool> cusp_at;
};

TriplePointReport triple_point_report(const MPoly& q, std::span<const Scalar> p,
                                      std::optional<std::vector<Scalar>> r = std::nullopt);

struct CuspSearchHit {
  std::vector<Scalar> point;
  std::vector<Scalar> cone_point;
  std::size_t hessian_rank;
};

/// Triple points with coordinates in {0, ±1}, each paired with the cone's
/// singular points in {0, ±1}^3. A cusp is a hit with hessian_rank == 1.
struct TriplePointSearch {
  std::vector<std::vector<Scalar>> triple_points;
  std::vector<CuspSearchHit> singular_cone_points;
  bool has_cusp() const;
};
TriplePointSearch search_triple_points(const MPoly& q);

}  // namespace qlc::stability
