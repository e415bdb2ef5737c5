#include "qlc/surface.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "qlc/error.hpp"
#include "qlc/roots.hpp"

namespace qlc::surface {

namespace {

bool is_plucker(const ScalarMatrix& G) { return G == klein::plucker_quadric(); }

Matrix<MPoly> constant_matrix(const ScalarMatrix& m, std::size_t nvars) {
  Matrix<MPoly> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out(i, j) = MPoly::constant(nvars, m(i, j));
  return out;
}

Scalar form(const ScalarMatrix& m, const std::vector<Scalar>& x) {
  Scalar s;
  auto mx = mat_vec(m, x);
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * mx[k];
  return s;
}

bool parallel(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  // a ∥ b, with the zero vector parallel to everything
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

klein::Line to_line(const Pencil& p, const std::vector<Scalar>& x) {
  std::vector<Scalar> v = x;
  if (!is_plucker(p.G())) {
    v = mat_vec(inverse(klein_frame_for(p)), x);
    v = mat_vec(klein::klein_frame().T, v);
  }
  klein::Line l;
  std::copy(v.begin(), v.end(), l.begin());
  return l;
}

bool is_diagonal(const ScalarMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

}  // namespace

ScalarMatrix klein_frame_for(const Pencil& p) { return klein::orthonormal_frame(p.G()); }

ScalarMatrix plucker_form(const Pencil& p) {
  if (is_plucker(p.G())) return p.F();
  const ScalarMatrix A = klein_frame_for(p);
  return klein::to_plucker(A.transpose() * p.F() * A);
}

Matrix<MPoly> conic_matrix(const Pencil& p) {
  constexpr std::size_t n = 4;
  Matrix<MPoly> C(6, n);
  for (std::size_t I = 0; I < 6; ++I) {
    auto [i, j] = klein::kPairs[I];
    // (p ∧ q)_ij = p_i q_j - p_j q_i
    C(I, j) = MPoly::variable(n, i);
    C(I, i) = -MPoly::variable(n, j);
  }
  return C.transpose() * constant_matrix(plucker_form(p), n) * C;
}

SurfaceResult singular_surface_full(const Pencil& p) {
  const auto A = conic_matrix(p);
  const auto adj = adjugate(A);
  constexpr std::size_t n = 4;
  auto pipj = [](std::size_t i, std::size_t j) {
    std::array<int, n> e{};
    ++e[i];
    ++e[j];
    return Monomial(e);
  };
  SurfaceResult res;
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i)
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (adj(i, j).is_zero()) continue;
      auto s = adj(i, j).divide_by_monomial(pipj(i, j));
      if (!s) throw_invalid("surface.extraction", "adjugate entry not divisible by p_i p_j");
      res.quartic = s->monic();
      res.pivot = {i, j};
      found = true;
    }
  if (!found) throw_degenerate("surface.degenerate", "surface degenerates: rank <= 2 everywhere");
  // certificate: every entry equals S p_i p_j up to the common scalar
  const MPoly S = adj(res.pivot.first, res.pivot.second).divide_by_monomial(pipj(res.pivot.first, res.pivot.second)).value();
  res.certificate = true;
  for (std::size_t i = 0; i < n && res.certificate; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MPoly expect = S * MPoly::variable(n, i) * MPoly::variable(n, j);
      if (!(adj(i, j) == expect)) {
        res.certificate = false;
        break;
      }
    }
  if (res.quartic.degree() != 4 || !res.quartic.is_homogeneous()) res.certificate = false;
  return res;
}

MPoly singular_surface(const Pencil& p) {
  auto r = singular_surface_full(p);
  if (!r.certificate) throw_invalid("surface.certificate", "adjugate does not factor as S p p^t");
  return r.quartic;
}

SigmaSurface sigma_surface(const Pencil& p) { return {p.G(), p.F(), p.F() * inverse(p.G()) * p.F()}; }

bool on_sigma(const SigmaSurface& s, const std::vector<Scalar>& x) {
  return form(s.G, x).is_zero() && form(s.F, x).is_zero() && form(s.H, x).is_zero();
}

std::vector<Scalar> pi_map(const Pencil& p, const std::vector<Scalar>& x) {
  if (x.size() != kDim) throw_invalid("point.length", "points of P^5 have 6 coordinates");
  const auto gx = mat_vec(p.G(), x), fx = mat_vec(p.F(), x);
  if (parallel(fx, gx)) throw_invalid("surface.singular_point", "singular point of X");
  if (!on_sigma(sigma_surface(p), x)) throw_invalid("surface.not_on_sigma", "point is not on the singular surface");
  const auto y = mat_vec(inverse(p.G()), fx);
  auto m = klein::meet_point(to_line(p, x), to_line(p, y));
  if (m.kind != klein::Meet::Kind::kPoint) throw_invalid("surface.skew", "lines do not meet; point is not on Σ");
  return m.point;
}

std::vector<std::vector<Scalar>> find_sigma_points(const Pencil& p, int height, int box, std::size_t max_points) {
  const auto sig = sigma_surface(p);
  std::vector<std::vector<Scalar>> out;
  std::set<std::vector<Scalar>> seen;
  auto accept = [&](std::vector<Scalar> x) {
    bool nonzero = std::any_of(x.begin(), x.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (!nonzero || !on_sigma(sig, x)) return;
    if (parallel(mat_vec(p.F(), x), mat_vec(p.G(), x))) return;
    x = klein::normalize_projective(x);
    if (seen.insert(x).second) out.push_back(std::move(x));
  };
  if (p.G() == ScalarMatrix::identity(kDim, Scalar(1)) && is_diagonal(p.F())) {
    ScalarMatrix sys(3, kDim);
    for (std::size_t k = 0; k < kDim; ++k) {
      sys(0, k) = Scalar(1);
      sys(1, k) = p.F()(k, k);
      sys(2, k) = p.F()(k, k) * p.F()(k, k);
    }
    auto basis = nullspace(sys);
    const std::size_t d = basis.size();
    int h = height;
    while (d > 3 && h > 1 && std::pow(2.0 * h + 1, static_cast<double>(d)) > 50000) --h;
    std::vector<int> c(d, -h);
    for (;;) {
      std::vector<Scalar> u(kDim);
      for (std::size_t b = 0; b < d; ++b)
        if (c[b] != 0)
          for (std::size_t k = 0; k < kDim; ++k) u[k] += Scalar(c[b]) * basis[b][k];
      std::vector<Scalar> x;
      for (const auto& ui : u) {
        auto r = exact_sqrt(ui);
        if (!r) break;
        x.push_back(*r);
      }
      if (x.size() == kDim) accept(std::move(x));
      if (out.size() >= max_points) break;
      std::size_t b = 0;
      while (b < d && c[b] == h) c[b++] = -h;
      if (b == d) break;
      ++c[b];
    }
    return out;
  }
  std::vector<int> c(kDim, -box);
  for (;;) {
    std::vector<Scalar> x;
    for (int v : c) x.emplace_back(v);
    accept(std::move(x));
    if (out.size() >= max_points) break;
    std::size_t b = 0;
    while (b < kDim && c[b] == box) c[b++] = -box;
    if (b == kDim) break;
    ++c[b];
  }
  return out;
}

std::string structure_name(StructureKind k) {
  switch (k) {
    case StructureKind::kProductOfPlanes: return "product-of-planes";
    case StructureKind::kPerfectSquare: return "perfect-square";
    case StructureKind::kQuadricTimesPlanes: return "quadric-times-planes";
    case StructureKind::kNone: return "none";
  }
  return "";
}

ScalarMatrix quadric_matrix(const MPoly& q) {
  const std::size_t n = q.nvars();
  if (!q.is_zero() && (q.degree() != 2 || !q.is_homogeneous())) throw_invalid("quadric.shape", "not a quadratic form");
  ScalarMatrix m(n, n);
  for (const auto& t : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      for (int e = 0; e < t.mono.exp(k); ++e) idx.push_back(k);
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) += t.coeff;
    } else {
      m(idx[0], idx[1]) += t.coeff / Scalar(2);
      m(idx[1], idx[0]) += t.coeff / Scalar(2);
    }
  }
  return m;
}

MPoly quadratic_form(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  MPoly q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) q += MPoly::variable(n, i) * MPoly::variable(n, j) * m(i, j);
  return q;
}

namespace {

UPoly to_upoly(const MPoly& p) {
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
  for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.mono.exp(0))] = t.coeff;
  return UPoly(std::move(c));
}

// A linear factor of f whose first nonzero coefficient sits at variable k.
std::optional<MPoly> factor_with_lead(const MPoly& f, std::size_t k, std::mt19937& rng) {
  const std::size_t n = f.nvars();
  MPoly xk = MPoly::variable(n, k);
  if (k + 1 == n) {
    if (exact_div(f, xk)) return xk;
    return std::nullopt;
  }
  const std::size_t m = n - 1 - k;  // unknown coefficients c_j, j > k
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int attempt = 0; attempt < 4; ++attempt) {
    ScalarMatrix pts(m, m);
    std::vector<std::vector<Scalar>> roots(m);
    bool ok = true;
    for (std::size_t r = 0; r < m && ok; ++r) {
      std::vector<MPoly> img(n);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) {
          img[j] = MPoly::variable(1, 0);
        } else {
          Scalar a(dist(rng));
          img[j] = MPoly::constant(1, a);
          if (j > k) pts(r, j - k - 1) = a;
        }
      }
      UPoly g = to_upoly(f.substitute(img));
      if (g.degree() < 1) {
        ok = false;
        break;
      }
      roots[r] = gaussian_rational_roots(g);
    }
    if (!ok || det(pts).is_zero()) continue;
    // every combination of one root per specialization
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
      bool any_empty = std::any_of(roots.begin(), roots.end(), [](const auto& v) { return v.empty(); });
      if (any_empty) break;
      std::vector<Scalar> rhs(m);
      for (std::size_t r = 0; r < m; ++r) rhs[r] = -roots[r][idx[r]];
      if (auto c = solve(pts, rhs)) {
        MPoly L = xk;
        for (std::size_t j = 0; j < m; ++j)
          if (!(*c)[j].is_zero()) L += MPoly::variable(n, k + 1 + j) * (*c)[j];
        if (exact_div(f, L)) return L;
      }
      std::size_t r = 0;
      while (r < m && idx[r] + 1 == roots[r].size()) idx[r++] = 0;
      if (r == m) break;
      ++idx[r];
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::vector<MPoly> linear_factors(const MPoly& f) {
  if (f.is_zero()) throw_invalid("quartic.zero", "linear factors of zero");
  std::mt19937 rng(20240617);
  std::vector<MPoly> out;
  MPoly cur = f;
  for (std::size_t k = 0; k < f.nvars() && cur.degree() >= 1; ++k) {
    while (cur.degree() >= 1) {
      auto L = factor_with_lead(cur, k, rng);
      if (!L) break;
      out.push_back(*L);
      while (auto q = exact_div(cur, *L)) cur = *q;
    }
  }
  return out;
}

Structure structural_class(const MPoly& q) {
  if (q.is_zero()) throw_invalid("quartic.zero", "structural class of zero");
  Structure s;
  MPoly cur = q.monic();
  for (const auto& L : linear_factors(cur)) {
    int mult = 0;
    while (auto d = exact_div(cur, L)) {
      cur = *d;
      ++mult;
    }
    s.planes.emplace_back(L, mult);
  }
  s.residual = cur;
  if (!s.planes.empty()) {
    ScalarMatrix coeffs(s.planes.size(), q.nvars());
    for (std::size_t r = 0; r < s.planes.size(); ++r)
      for (const auto& t : s.planes[r].first.terms())
        for (std::size_t k = 0; k < q.nvars(); ++k)
          if (t.mono.exp(k) == 1) coeffs(r, k) = t.coeff;
    s.plane_rank = rank(coeffs);
  }
  if (auto r = exact_sqrt(q.monic())) {
    s.square_root = *r;
    if (r->degree() == 2) s.quadric_rank = rank(quadric_matrix(*r));
  }
  if (!s.planes.empty() && cur.degree() == 0) {
    s.kind = StructureKind::kProductOfPlanes;
  } else if (s.square_root) {
    s.kind = StructureKind::kPerfectSquare;
  } else if (!s.planes.empty() && cur.degree() == 2) {
    s.kind = StructureKind::kQuadricTimesPlanes;
  }
  return s;
}

}  // namespace qlc::surface
