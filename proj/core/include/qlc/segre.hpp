#pragma once

#include <string>
#include <vector>

#include "qlc/binary_form.hpp"
#include "qlc/pencil.hpp"

namespace qlc::segre {

/// det(λF + μG), a binary sextic.
BinaryForm discriminant(const Pencil& p);

/// D_k = monic gcd of all k x k minors of λF + μG, for k = 0..6 (D_0 = 1).
std::vector<BinaryForm> determinantal_divisors(const Pencil& p);

/// Referee route: valuations of the determinantal divisors along a coprime
/// basis of the discriminant.
SegreSymbol segre_symbol(const Pencil& p);
/// Invariant factors of λF' + G over Q(i)[λ], F' = F + cG sheared so that
/// det F' != 0.
SegreSymbol segre_symbol_snf(const Pencil& p);
/// Jordan block sizes of (G^-1 F)^t; requires eigenvalues in Q(i).
SegreSymbol segre_symbol_jordan(const Pencil& p);

/// Invariant factors d_1 | ... | d_n of a square polynomial matrix (monic,
/// zero entries for a singular matrix).
std::vector<UPoly> smith_invariant_factors(Matrix<UPoly> m);

enum class Geometry { kNonreduced, kReducible, kIrreducibleReduced };
std::string geometry_name(Geometry g);

struct BracketSingularity {
  Bracket bracket;
  bool tabulated = false;
  std::string vertex_dim;
  std::string vertex_meet_x;
  std::string singularity;
};

struct GeometryReport {
  Geometry geometry = Geometry::kIrreducibleReduced;
  std::vector<BracketSingularity> singularities;  // one per bracket, canonical order
};

GeometryReport classify_geometry(const SegreSymbol& s);

}  // namespace qlc::segre
