#include "qlc/segre.hpp"

#include <algorithm>
#include <map>

#include "qlc/error.hpp"
#include "qlc/mpoly.hpp"
#include "qlc/roots.hpp"

namespace qlc::segre {

namespace {

[[noreturn]] void degenerate() {
  throw_degenerate("pencil.degenerate", "degenerate pencil: no Segre symbol");
}

// Symbol from per-factor valuations of the determinantal divisors.
SegreSymbol from_divisors(const std::vector<BinaryForm>& D) {
  std::vector<BinaryForm> nonconst;
  for (std::size_t k = 1; k <= kDim; ++k)
    if (D[k].degree() > 0) nonconst.push_back(D[k]);
  std::vector<Bracket> brackets;
  std::vector<RootFactor> factors;
  for (const auto& b : coprime_basis(nonconst)) {
    std::vector<std::size_t> l(kDim + 1);
    for (std::size_t i = 0; i <= kDim; ++i) l[i] = valuation(D[kDim - i], b);
    Bracket br;
    for (std::size_t i = 0; i < kDim && l[i] >= 1; ++i) br.push_back(static_cast<int>(l[i] - l[i + 1]));
    for (int k = 0; k < b.degree(); ++k) brackets.push_back(br);
    factors.push_back({b, br});
  }
  return SegreSymbol(std::move(brackets), std::move(factors));
}

// b(λ, μ) ↦ b(λ, μ + cλ)
BinaryForm shear(const BinaryForm& b, const Scalar& c) {
  MPoly lam = MPoly::variable(2, 0), mu = MPoly::variable(2, 1);
  std::vector<MPoly> img{lam, mu + lam * c};
  return BinaryForm::from_mpoly(b.to_mpoly().substitute(img));
}

Scalar shear_constant(const Pencil& p) {
  for (long c = 0;; ++c) {
    ScalarMatrix Gc = p.G();
    Gc.scale(Scalar(c));
    if (!det(p.F() + Gc).is_zero()) return Scalar(c);
  }
}

}  // namespace

BinaryForm discriminant(const Pencil& p) {
  BinaryForm d = det(p.pencil_matrix());
  if (d.is_zero()) degenerate();
  return d;
}

std::vector<BinaryForm> determinantal_divisors(const Pencil& p) {
  auto m = p.pencil_matrix();
  MinorTable<BinaryForm> t(m);
  std::vector<BinaryForm> D(kDim + 1, BinaryForm::constant(Scalar(1)));
  if (t.det().is_zero()) degenerate();
  D[kDim] = t.det().monic();
  const std::uint32_t full = (1u << kDim) - 1;
  for (std::size_t k = kDim - 1; k >= 1; --k) {
    BinaryForm g;
    for (std::uint32_t rm = 0; rm <= full && !g.is_constant(); ++rm) {
      if (static_cast<std::size_t>(std::popcount(rm)) != k) continue;
      for (std::uint32_t cm = 0; cm <= full; ++cm) {
        if (static_cast<std::size_t>(std::popcount(cm)) != k) continue;
        const BinaryForm& x = t.get(rm, cm);
        if (x.is_zero()) continue;
        g = gcd(g, x);
        if (g.is_constant()) break;
      }
    }
    if (g.is_zero()) degenerate();
    D[k] = g;
    if (g.is_constant()) break;  // lower divisors divide this one
  }
  return D;
}

SegreSymbol segre_symbol(const Pencil& p) { return from_divisors(determinantal_divisors(p)); }

std::vector<UPoly> smith_invariant_factors(Matrix<UPoly> a) {
  if (!a.is_square()) throw_invalid("matrix.not_square", "Smith form of a non-square matrix");
  const std::size_t n = a.rows();
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot: nonzero entry of least degree in the trailing block
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!a(i, j).is_zero() && (pi == n || a(i, j).degree() < a(pi, pj).degree())) pi = i, pj = j;
      if (pi == n) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t).is_zero()) continue;
        auto [q, r] = divmod(a(i, t), a(t, t));
        for (std::size_t c = t; c < n; ++c)
          if (!a(t, c).is_zero()) a(i, c) -= q * a(t, c);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j).is_zero()) continue;
        auto [q, r] = divmod(a(t, j), a(t, t));
        for (std::size_t rr = t; rr < n; ++rr)
          if (!a(rr, t).is_zero()) a(rr, j) -= q * a(rr, t);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the trailing block
      bool divides_all = true;
      for (std::size_t i = t + 1; i < n && divides_all; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!a(i, j).is_zero() && !divides(a(t, t), a(i, j))) {
            for (std::size_t c = t; c < n; ++c) a(t, c) += a(i, c);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
  }
  std::vector<UPoly> d(n);
  for (std::size_t t = 0; t < n; ++t) d[t] = a(t, t).is_zero() ? UPoly() : a(t, t).monic();
  return d;
}

SegreSymbol segre_symbol_snf(const Pencil& p) {
  const Scalar c = shear_constant(p);
  ScalarMatrix Gc = p.G();
  Gc.scale(c);
  const ScalarMatrix Fs = p.F() + Gc;
  Matrix<UPoly> m(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) m(i, j) = UPoly({p.G()(i, j), Fs(i, j)});
  auto d = smith_invariant_factors(std::move(m));
  if (d.back().is_zero()) degenerate();
  std::vector<UPoly> nonconst;
  for (const auto& x : d)
    if (x.degree() > 0) nonconst.push_back(x);
  std::vector<Bracket> brackets;
  std::vector<RootFactor> factors;
  if (!nonconst.empty()) {
    for (const auto& u : coprime_basis(nonconst)) {
      Bracket br;
      for (std::size_t i = 0; i < kDim; ++i) {
        const UPoly& di = d[kDim - 1 - i];
        std::size_t v = di.degree() > 0 ? valuation(di, u) : 0;
        if (v == 0) break;
        br.push_back(static_cast<int>(v));
      }
      for (int k = 0; k < u.degree(); ++k) brackets.push_back(br);
      // the sheared pencil is P(λ, cλ + μ); undo with μ ↦ μ - cλ
      factors.push_back({shear(BinaryForm::homogenize(u), -c).monic(), br});
    }
  }
  // invariant factors over Q(i)[λ] miss nothing: det F' != 0 keeps (1:0) off the roots
  std::sort(factors.begin(), factors.end(),
            [](const RootFactor& a, const RootFactor& b) { return binary_less(a.factor, b.factor); });
  return SegreSymbol(std::move(brackets), std::move(factors));
}

SegreSymbol segre_symbol_jordan(const Pencil& p) {
  const ScalarMatrix M = (inverse(p.G()) * p.F()).transpose();
  const std::size_t n = kDim;
  // Faddeev-LeVerrier: char poly coefficients c_k of det(xI - M)
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  ScalarMatrix Mk(n, n);
  const ScalarMatrix I = ScalarMatrix::identity(n, Scalar(1));
  for (std::size_t k = 1; k <= n; ++k) {
    ScalarMatrix cI = I;
    cI.scale(c[n - k + 1]);
    Mk = M * (Mk + cI);
    c[n - k] = -trace(Mk) / Scalar(static_cast<long>(k));
  }
  UPoly chi(c);
  auto roots = gaussian_rational_roots(chi);
  if (static_cast<int>(roots.size()) != squarefree_part(chi).degree()) {
    throw_unsupported("segre.irrational_eigenvalues", "irrational eigenvalues: use segre_symbol");
  }
  std::vector<Bracket> brackets;
  std::vector<RootFactor> factors;
  for (const auto& z : roots) {
    ScalarMatrix zI = I;
    zI.scale(z);
    const ScalarMatrix N = M - zI;
    std::vector<std::size_t> rk{n};
    ScalarMatrix Np = I;
    for (;;) {
      Np = Np * N;
      rk.push_back(rank(Np));
      if (rk.back() == rk[rk.size() - 2]) break;
    }
    // blocks of size >= k: rk[k-1] - rk[k]
    Bracket br;
    std::size_t kmax = rk.size() - 2;
    for (std::size_t k = kmax; k >= 1; --k) {
      std::size_t at_least_k = rk[k - 1] - rk[k];
      std::size_t at_least_k1 = k + 1 < rk.size() ? rk[k] - rk[k + 1] : 0;
      for (std::size_t m = 0; m < at_least_k - at_least_k1; ++m) br.push_back(static_cast<int>(k));
    }
    brackets.push_back(br);
    factors.push_back({BinaryForm::linear(z, Scalar(1)).monic(), br});
  }
  std::sort(factors.begin(), factors.end(),
            [](const RootFactor& a, const RootFactor& b) { return binary_less(a.factor, b.factor); });
  return SegreSymbol(std::move(brackets), std::move(factors));
}

std::string geometry_name(Geometry g) {
  switch (g) {
    case Geometry::kNonreduced: return "nonreduced";
    case Geometry::kReducible: return "reducible";
    case Geometry::kIrreducibleReduced: return "irreducible-and-reduced";
  }
  return "";
}

GeometryReport classify_geometry(const SegreSymbol& s) {
  struct Row {
    const char* dim;
    const char* meet;
    const char* type;
  };
  static const std::map<Bracket, Row> table{
      {{1}, {"0", "empty", "no singularities"}},
      {{2}, {"0", "1 point", "A1"}},
      {{3}, {"0", "1 point", "A2"}},
      {{4}, {"0", "1 point", "A3"}},
      {{1, 1}, {"1", "2 different points", "A1"}},
      {{2, 1}, {"1", "1 point", "A2"}},
      {{2, 2}, {"1", "1 point", "A3"}},
      {{1, 1, 1}, {"2", "smooth conic C", "X singular along C"}},
      {{2, 1, 1}, {"2", "rank 2 conic C", "X singular along C"}},
  };
  GeometryReport rep;
  std::size_t len = s.max_length();
  rep.geometry = len >= 5 ? Geometry::kNonreduced : len == 4 ? Geometry::kReducible : Geometry::kIrreducibleReduced;
  for (const auto& b : s.brackets()) {
    BracketSingularity bs;
    bs.bracket = b;
    if (auto it = table.find(b); it != table.end()) {
      bs.tabulated = true;
      bs.vertex_dim = it->second.dim;
      bs.vertex_meet_x = it->second.meet;
      bs.singularity = it->second.type;
    } else {
      bs.singularity = "not tabulated";
    }
    rep.singularities.push_back(std::move(bs));
  }
  return rep;
}

}  // namespace qlc::segre
