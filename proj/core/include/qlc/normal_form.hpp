#pragma once

#include <array>
#include <string>
#include <vector>

#include "qlc/pencil.hpp"

namespace qlc::normal_form {

/// Brackets with one root per bracket. A root r is an eigenvalue of G^-1 F;
/// its linear form in the discriminant is r*λ + μ.
struct RootedSymbol {
  std::vector<Bracket> brackets;
  std::vector<Scalar> roots;
};

/// Block-diagonal Segre normal form: for each characteristic number e of a
/// bracket with root r, an e x e block with F = r on the anti-diagonal and 1
/// just above it, G = anti-identity. Blocks follow canonical bracket order.
Pencil build_normal_form(const RootedSymbol& rs);

/// monic(r*λ + μ)
BinaryForm root_form(const Scalar& r);

struct Table73Row {
  int n;
  std::string symbol;
  int dim_mqc;
  int dim_mss;    // paper-asserted
  int dim_fiber;  // paper-asserted
  std::string remark;
};

const std::array<Table73Row, 23>& table73();
const Table73Row& table73_row(int n);

/// Pencil for row n of the classification table; λ_k defaults to k.
/// Rows 11, 14, 18, 20, 23 use the explicit coordinates of the displayed
/// equations, the rest the Segre normal form with roots 1..r.
Pencil paper_case(int n);

/// Default parameter values used by paper_case.
std::vector<Scalar> default_lambdas();

}  // namespace qlc::normal_form
