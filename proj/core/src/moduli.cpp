#include "qlc/moduli.hpp"

#include <algorithm>
#include <set>

#include "qlc/error.hpp"
#include "qlc/normal_form.hpp"
#include "qlc/roots.hpp"
#include "qlc/segre.hpp"

namespace qlc::moduli {

int stabilizer_dim(const Pencil& p) {
  constexpr std::size_t n = kDim;
  // unknown A(k, l) at column n*k + l; one row per (i <= j) for each of G and F
  ScalarMatrix sys(n * (n + 1), n * n);
  std::size_t row = 0;
  for (const ScalarMatrix* M : {&p.G(), &p.F()}) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j, ++row)
        for (std::size_t k = 0; k < n; ++k) {
          // (A^t M)_ij = sum_k A_ki M_kj ; (M A)_ij = sum_k M_ik A_kj
          sys(row, n * k + i) += (*M)(k, j);
          sys(row, n * k + j) += (*M)(i, k);
        }
  }
  return static_cast<int>(n * n - rank(sys));
}

int expected_stabilizer_dim(const SegreSymbol& s) {
  if (s == SegreSymbol::parse("[(22)11]")) return 2;
  return s.count_length(2) + 3 * s.count_length(3);
}

ModuliReport moduli_report(const SegreSymbol& s) {
  ModuliReport rep;
  rep.symbol = s;
  rep.r = s.r();
  rep.r1 = s.count_length(1);
  rep.r2 = s.count_length(2);
  rep.r3 = s.count_length(3);
  rep.in_scope = s.max_length() < 4 && s.r() >= 3;
  if (!rep.in_scope) {
    if (s.r() <= 2) {
      rep.verdict = "at most 2 brackets: all quadratic complexes with this symbol are isomorphic";
    } else {
      rep.verdict = "bracket of length >= 4: the complex is reducible or nonreduced";
    }
  }
  normal_form::RootedSymbol rs{s.brackets(), {}};
  for (int k = 1; k <= s.r(); ++k) rs.roots.emplace_back(k);
  rep.dim_stab = stabilizer_dim(normal_form::build_normal_form(rs));
  rep.dim_R = rep.r + 13 - rep.dim_stab;
  rep.dim_Mqc = rep.r - 2;
  for (const auto& row : normal_form::table73()) {
    if (SegreSymbol::parse(row.symbol) == s) {
      rep.table_row = row.n;
      rep.dim_Mss = row.dim_mss;
      rep.dim_fiber = row.dim_fiber;
    }
  }
  return rep;
}

std::vector<std::pair<Scalar, Bracket>> labelled_eigenvalues(const Pencil& p) {
  std::vector<std::pair<Scalar, Bracket>> out;
  const SegreSymbol sym = segre::segre_symbol(p);
  for (const auto& f : sym.factors()) {
    if (f.factor.mu_valuation() > 0) {
      out.emplace_back(Scalar(0), f.bracket);
      continue;
    }
    UPoly u = f.factor.dehomogenize();
    auto roots = gaussian_rational_roots(u);
    if (static_cast<int>(roots.size()) != u.degree()) {
      throw_unsupported("moduli.irrational_roots", "irrational roots unsupported");
    }
    // root t of b(t, 1) is the point (t : 1); r t + 1 = 0
    for (const auto& t : roots) out.emplace_back(-t.inverse(), f.bracket);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IsoResult isomorphic(const Pencil& pa, const Pencil& pb) {
  if (!(segre::segre_symbol(pa) == segre::segre_symbol(pb))) return {};
  const auto A = labelled_eigenvalues(pa), B = labelled_eigenvalues(pb);
  if (A.size() == 1) return {true, AffineWitness{Scalar(1), B[0].first - A[0].first}};
  std::set<std::pair<Scalar, Bracket>> target(B.begin(), B.end());
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (i == j || B[i].second != A[0].second || B[j].second != A[1].second) continue;
      Scalar alpha = (B[j].first - B[i].first) / (A[1].first - A[0].first);
      Scalar beta = B[i].first - alpha * A[0].first;
      bool ok = true;
      for (const auto& [r, br] : A)
        if (!target.count({alpha * r + beta, br})) {
          ok = false;
          break;
        }
      if (ok) return {true, AffineWitness{alpha, beta}};
    }
  return {};
}

std::vector<Scalar> diagonal_eigenvalues(const Pencil& p) {
  std::vector<Scalar> r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      if (i != j && (!p.F()(i, j).is_zero() || !p.G()(i, j).is_zero())) {
        throw_invalid("moduli.not_diagonal", "Möbius equivalence needs diagonal pencils");
      }
  for (std::size_t i = 0; i < kDim; ++i) r.push_back(p.F()(i, i) / p.G()(i, i));
  std::set<Scalar> s(r.begin(), r.end());
  if (s.size() != r.size()) throw_invalid("moduli.repeated_eigenvalue", "eigenvalues must be distinct");
  return r;
}

std::optional<std::vector<Scalar>> apply_mobius(const Mobius& m, const std::vector<Scalar>& r) {
  std::vector<Scalar> out;
  for (const auto& x : r) {
    Scalar den = m[2] * x + m[3];
    if (den.is_zero()) return std::nullopt;
    out.push_back((m[0] * x + m[1]) / den);
  }
  return out;
}

MobiusResult mobius_equivalent(const Pencil& pa, const Pencil& pb) {
  const auto A = diagonal_eigenvalues(pa), B = diagonal_eigenvalues(pb);
  const std::set<Scalar> target(B.begin(), B.end());
  const Scalar &z1 = A[0], &z2 = A[1], &z3 = A[2];
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j)
      for (std::size_t k = 0; k < B.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        const Scalar &w1 = B[i], &w2 = B[j], &w3 = B[k];
        // z ↦ (z - z1)(z2 - z3) / ((z - z3)(z2 - z1)) sends z1, z2, z3 to 0, 1, ∞
        Mobius S{z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
        Mobius Tw{w2 - w3, -w1 * (w2 - w3), w2 - w1, -w3 * (w2 - w1)};
        // M = Tw^-1 S, with Tw^-1 = (d -b; -c a)
        Mobius Ti{Tw[3], -Tw[1], -Tw[2], Tw[0]};
        Mobius M{Ti[0] * S[0] + Ti[1] * S[2], Ti[0] * S[1] + Ti[1] * S[3],
                 Ti[2] * S[0] + Ti[3] * S[2], Ti[2] * S[1] + Ti[3] * S[3]};
        auto img = apply_mobius(M, A);
        if (!img) continue;
        std::set<Scalar> got(img->begin(), img->end());
        if (got == target) {
          // normalize: first nonzero entry 1
          Scalar s = !M[0].is_zero() ? M[0] : !M[1].is_zero() ? M[1] : M[2];
          for (auto& x : M) x /= s;
          return {true, M};
        }
      }
  return {};
}

void validate(const CosingularFamily& c) {
  std::set<Scalar> s(c.lambdas.begin(), c.lambdas.end());
  if (s.size() != kDim) throw_invalid("cosingular.repeated_lambda", "the λ_i must be pairwise distinct");
  if (s.count(c.rho)) throw_invalid("cosingular.rho_is_lambda", "ρ must differ from every λ_i");
}

Pencil base_pencil(const CosingularFamily& c) {
  return Pencil(diagonal({c.lambdas.begin(), c.lambdas.end()}), ScalarMatrix::identity(kDim, Scalar(1)));
}

Pencil cosingular_member(const CosingularFamily& c) {
  validate(c);
  std::vector<Scalar> d;
  for (const auto& l : c.lambdas) d.push_back((l - c.rho).inverse());
  return Pencil(diagonal(d), ScalarMatrix::identity(kDim, Scalar(1)));
}

bool verify_phi(const CosingularFamily& c, std::optional<Scalar> rho_subst) {
  validate(c);
  const Scalar rs = rho_subst.value_or(c.rho);
  if (std::count(c.lambdas.begin(), c.lambdas.end(), rs)) {
    throw_invalid("cosingular.rho_is_lambda", "substitution parameter equals some λ_i");
  }
  // all quadrics involved are diagonal; compare diagonals
  ScalarMatrix m(6, kDim);  // rows: I, F_ρ, F_ρ^2, then the three transformed base quadrics
  for (std::size_t i = 0; i < kDim; ++i) {
    const Scalar& l = c.lambdas[i];
    const Scalar f = (l - c.rho).inverse();
    const Scalar d = (l - rs).inverse();
    m(0, i) = Scalar(1);
    m(1, i) = f;
    m(2, i) = f * f;
    m(3, i) = d * d;          // D I D
    m(4, i) = d * l * d;      // D F D
    m(5, i) = d * l * l * d;  // D H D
  }
  ScalarMatrix span(3, kDim);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t i = 0; i < kDim; ++i) span(r, i) = m(r, i);
  return rank(m) == rank(span);
}

Pencil rho_limit(const CosingularFamily& c, const Scalar& rho0) {
  std::set<Scalar> s(c.lambdas.begin(), c.lambdas.end());
  if (s.size() != kDim) throw_invalid("cosingular.repeated_lambda", "the λ_i must be pairwise distinct");
  if (s.count(rho0)) throw_invalid("cosingular.rho0", "rho0 must differ from every λ_i");
  const UPoly rho = UPoly::x();
  std::vector<Scalar> d;
  for (const auto& l : c.lambdas) {
    // -ρ (1 + (ρ0 + ρ) / (λ - ρ)) = -ρ ((λ - ρ) + (ρ0 + ρ)) / (λ - ρ)
    const UPoly den = UPoly(l) - rho;
    const UPoly num = -(rho * (den + (UPoly(rho0) + rho)));
    if (num.degree() > den.degree()) throw_invalid("cosingular.divergent", "limit does not exist");
    d.push_back(num.degree() < den.degree() ? Scalar(0) : num.lc() / den.lc());
  }
  return Pencil(diagonal(d), ScalarMatrix::identity(kDim, Scalar(1)));
}

}  // namespace qlc::moduli
