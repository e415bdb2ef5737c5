#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qlc/pencil.hpp"

namespace qlc::moduli {

/// Dimension of {A : A^t G + G A = 0, A^t F + F A = 0}, the Lie algebra of
/// the stabilizer of X in SO(G).
int stabilizer_dim(const Pencil& p);

/// r2 + 3 r3, or 2 for [(22)11].
int expected_stabilizer_dim(const SegreSymbol& s);

struct ModuliReport {
  SegreSymbol symbol;
  int r = 0, r1 = 0, r2 = 0, r3 = 0;
  bool in_scope = false;  // no bracket of length >= 4 and at least 3 brackets
  std::string verdict;    // set when out of scope
  int dim_stab = 0;
  int dim_R = 0;
  int dim_Mqc = 0;
  std::optional<int> dim_Mss;    // paper-asserted
  std::optional<int> dim_fiber;  // paper-asserted
  std::optional<int> table_row;
};

ModuliReport moduli_report(const SegreSymbol& s);

/// t ↦ a t / (c t + 1) on t = λ/μ; on eigenvalues r (root rλ + μ) this is
/// r ↦ alpha r + beta with alpha = 1/a, beta = -c/a.
struct AffineWitness {
  Scalar alpha, beta;
  Scalar a() const { return alpha.inverse(); }
  Scalar c() const { return -beta / alpha; }
};

struct IsoResult {
  bool isomorphic = false;
  std::optional<AffineWitness> witness;
};

/// Eigenvalues of G^-1 F with their brackets; throws kUnsupported if some
/// root is not in Q(i).
std::vector<std::pair<Scalar, Bracket>> labelled_eigenvalues(const Pencil& p);

IsoResult isomorphic(const Pencil& a, const Pencil& b);

/// Matrix (a b; c d) acting by r ↦ (a r + b) / (c r + d).
using Mobius = std::array<Scalar, 4>;
struct MobiusResult {
  bool equivalent = false;
  std::optional<Mobius> witness;
};
std::vector<Scalar> diagonal_eigenvalues(const Pencil& p);
MobiusResult mobius_equivalent(const Pencil& a, const Pencil& b);
/// Applies m to each value; nullopt if some value is sent to infinity.
std::optional<std::vector<Scalar>> apply_mobius(const Mobius& m, const std::vector<Scalar>& r);

struct CosingularFamily {
  std::array<Scalar, 6> lambdas;
  Scalar rho;
};
void validate(const CosingularFamily& c);
/// F_ρ = diag(1 / (λ_i - ρ)), G = I.
Pencil cosingular_member(const CosingularFamily& c);
/// Base pencil diag(λ_i), G = I.
Pencil base_pencil(const CosingularFamily& c);

/// Substitutes x_i = y_i / (λ_i - ρ') into the three Σ quadrics of the base
/// and tests membership in the span of the Σ quadrics of X_ρ. ρ' defaults to ρ.
bool verify_phi(const CosingularFamily& c, std::optional<Scalar> rho_subst = std::nullopt);

/// Limit as ρ → ∞ of -ρ (G + (ρ0 + ρ) F_ρ), entrywise as rational functions of ρ.
Pencil rho_limit(const CosingularFamily& c, const Scalar& rho0);

}  // namespace qlc::moduli
