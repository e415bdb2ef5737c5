#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlc/klein.hpp"
#include "qlc/mpoly.hpp"
#include "qlc/pencil.hpp"

namespace qlc::surface {

/// F in Plücker coordinates. Pencils whose G already is the Plücker quadric
/// are used as given; otherwise F is brought to Klein coordinates by an
/// orthonormal frame A (A^t G A = I) and then to Plücker coordinates.
ScalarMatrix plucker_form(const Pencil& p);
/// The frame A used by plucker_form (identity for G = I).
ScalarMatrix klein_frame_for(const Pencil& p);

/// A(p) = C(p)^t F_P C(p), where C(p) q are the Plücker coordinates of the
/// line through p and q. Entries are quadratic forms in p0..p3 and A(p) p = 0.
Matrix<MPoly> conic_matrix(const Pencil& p);

struct SurfaceResult {
  MPoly quartic;                       // monic
  std::pair<std::size_t, std::size_t> pivot;  // adjugate entry used for the division
  bool certificate = false;            // adj(A) == S p p^t entrywise
};

/// The singular surface: adj(A(p)) = S(p) p p^t.
SurfaceResult singular_surface_full(const Pencil& p);
MPoly singular_surface(const Pencil& p);

struct SigmaSurface {
  ScalarMatrix G, F, H;  // H = F G^-1 F
};
SigmaSurface sigma_surface(const Pencil& p);
bool on_sigma(const SigmaSurface& s, const std::vector<Scalar>& x);

/// Meet of l_x and l_y with y = G^-1 F x, as a point of P^3 in the Plücker
/// frame of plucker_form.
std::vector<Scalar> pi_map(const Pencil& p, const std::vector<Scalar>& x);

/// Points of Σ of small height. Diagonal pencils with G = I are searched
/// through u_i = x_i^2 on the solution space of the three linear equations
/// (coefficients up to `height`); other pencils by a box of integer points
/// with entries up to `box`. Points singular on X are skipped.
std::vector<std::vector<Scalar>> find_sigma_points(const Pencil& p, int height = 12, int box = 2,
                                                   std::size_t max_points = 16);

enum class StructureKind { kProductOfPlanes, kPerfectSquare, kQuadricTimesPlanes, kNone };
std::string structure_name(StructureKind k);

struct Structure {
  StructureKind kind = StructureKind::kNone;
  /// Linear factors found over Q(i), monic, with multiplicities.
  std::vector<std::pair<MPoly, int>> planes;
  std::size_t plane_rank = 0;  // rank of the plane coefficient matrix
  /// Set when q = Q^2.
  std::optional<MPoly> square_root;
  std::size_t quadric_rank = 0;
  /// What is left after removing the planes.
  MPoly residual;
};

/// Coordinate-free description of a quartic: complete splitting into planes
/// takes precedence, then perfect square, then a quadric times planes.
Structure structural_class(const MPoly& q);

/// Monic linear factors of f over Q(i) (one per distinct plane), found by
/// specializing to random lines and verifying by exact division.
std::vector<MPoly> linear_factors(const MPoly& f);

/// Symmetric matrix of a quadratic form.
ScalarMatrix quadric_matrix(const MPoly& q);
MPoly quadratic_form(const ScalarMatrix& m);

}  // namespace qlc::surface
