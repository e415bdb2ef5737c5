#pragma once

#include <array>
#include <span>
#include <vector>

#include "qlc/matrix.hpp"

namespace qlc::klein {

/// Plücker coordinates in the fixed order (p01, p02, p03, p23, p31, p12).
using Line = std::array<Scalar, 6>;

/// The ordered index pairs behind each Plücker coordinate.
inline constexpr std::array<std::array<std::size_t, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}}};

Line join(std::span<const Scalar> a, std::span<const Scalar> b);
/// p01 p23 + p02 p31 + p03 p12
Scalar plucker_relation(const Line& p);
/// Polarization of the relation; two lines meet iff it vanishes.
Scalar polar(const Line& p, const Line& q);
bool lines_equal(const Line& p, const Line& q);

struct Meet {
  enum class Kind { kPoint, kSkew, kEqualLines } kind;
  std::vector<Scalar> point;  // set for kPoint, normalized so the first nonzero entry is 1
};
Meet meet_point(const Line& x, const Line& y);

/// Matrix of p01 p23 + p02 p31 + p03 p12 scaled by 2: (0 I; I 0).
ScalarMatrix plucker_quadric();

/// x = K p with x1 = p01 + p23/2, x2 = i(p01 - p23/2) and likewise for the
/// pairs (p02, p31) and (p03, p12). K^t K is the Plücker quadric, so the
/// Klein quadric is sum x_i^2. T = K^-1.
struct KleinFrame {
  ScalarMatrix K;
  ScalarMatrix T;
};
const KleinFrame& klein_frame();

/// T^t Q T
ScalarMatrix to_klein(const ScalarMatrix& q_plucker);
/// K^t Q K
ScalarMatrix to_plucker(const ScalarMatrix& q_klein);

/// Action of a unimodular 4x4 matrix on Plücker coordinates.
ScalarMatrix wedge_square(const ScalarMatrix& m);

/// Some A with A^t G A = I (orthonormal frame over Q(i)).
ScalarMatrix orthonormal_frame(const ScalarMatrix& G);

std::vector<Scalar> normalize_projective(std::span<const Scalar> v);

}  // namespace qlc::klein
