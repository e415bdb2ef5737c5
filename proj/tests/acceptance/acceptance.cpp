// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "qlc/error.hpp"
#include "qlc/klein.hpp"
#include "qlc/moduli.hpp"
#include "qlc/normal_form.hpp"
#include "qlc/segre.hpp"
#include "qlc/stability.hpp"
#include "qlc/surface.hpp"
#include "support/random.hpp"

using namespace qlc;
using namespace qlc::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Pencil rooted(const SegreSymbol& s, std::vector<Scalar> roots) {
  return normal_form::build_normal_form({s.brackets(), std::move(roots)});
}

Pencil random_rooted(const SegreSymbol& s) { return rooted(s, distinct_rationals(static_cast<std::size_t>(s.r()))); }

bool proportional_poly(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.monic() == b.monic();
}

MPoly pullback(const MPoly& q, const ScalarMatrix& M) {
  std::vector<MPoly> img;
  for (std::size_t i = 0; i < 4; ++i) {
    MPoly r(4);
    for (std::size_t j = 0; j < 4; ++j) r += MPoly::variable(4, j) * M(i, j);
    img.push_back(r);
  }
  return q.substitute(img);
}

Outcome c1_round_trip() {
  Outcome o;
  for (const auto& row : normal_form::table73()) {
    auto s = SegreSymbol::parse(row.symbol);
    if (!(segre::segre_symbol(random_rooted(s)) == s)) o.fail("round trip failed for " + row.symbol);
  }
  o.detail = o.pass ? "23 symbols with random distinct rational roots" : o.detail;
  return o;
}

Outcome c2_oracles() {
  Outcome o;
  int jordan = 0, total = 0;
  auto check = [&](const Pencil& p, const std::string& label) {
    ++total;
    auto a = segre::segre_symbol(p);
    if (!(segre::segre_symbol_snf(p) == a)) o.fail("minors and SNF disagree on " + label);
    try {
      if (!(segre::segre_symbol_jordan(p) == a)) o.fail("Jordan route disagrees on " + label);
      ++jordan;
    } catch (const Error& e) {
      if (e.kind() != Error::Kind::kUnsupported) throw;
    }
  };
  for (int n = 1; n <= 23; ++n) check(normal_form::paper_case(n), "case " + std::to_string(n));
  for (int t = 0; t < 200; ++t) {
    const auto& row = normal_form::table73()[static_cast<std::size_t>(rand_int(0, 22))];
    check(congruent_random(random_rooted(SegreSymbol::parse(row.symbol))), "random " + row.symbol);
  }
  if (o.pass) o.detail = std::to_string(total) + " pencils, Jordan route on " + std::to_string(jordan);
  return o;
}

Outcome c3_semistable() {
  Outcome o;
  for (int n = 1; n <= 23; ++n)
    if (!stability::segre_semistable(normal_form::paper_case(n))) o.fail("case " + std::to_string(n) + " reported unstable");
  if (stability::segre_semistable(rooted(SegreSymbol::parse("[6]"), {Scalar(1)}))) o.fail("[6] pencil reported semistable");
  for (const auto& s : stability::unstable_irreducible_symbols()) {
    auto sym = SegreSymbol::parse(s);
    if (stability::segre_semistable(rooted(sym, {Scalar(2)}))) o.fail(s + " reported semistable");
  }
  if (o.pass) o.detail = "23 cases semistable; [6] and " + std::to_string(stability::unstable_irreducible_symbols().size()) + " listed symbols not";
  return o;
}

Outcome c4_witnesses() {
  Outcome o;
  // quadric: only entries outside the pattern, with q24 and q35 present
  ScalarMatrix Q(6, 6);
  auto set = [&](std::size_t i, std::size_t j, long v) { Q(i - 1, j - 1) = Q(j - 1, i - 1) = Scalar(v); };
  set(2, 4, 1), set(3, 5, 2), set(3, 4, 1), set(4, 4, 3), set(5, 6, 1), set(6, 6, -1);
  std::vector<int> wq(stability::kQuadricWitness.begin(), stability::kQuadricWitness.end());
  if (!stability::unstable_pattern_quadric(Q)) o.fail("constructed quadric does not have the pattern");
  int mq = stability::mu_quadric(Q, wq);
  if (mq != -1) o.fail("quadric weight " + std::to_string(mq));
  // quartic: X0 X2^3 + X1^2 X3^2 + X2^4 + X3^4
  MPoly x0 = MPoly::variable(4, 0), x1 = MPoly::variable(4, 1), x2 = MPoly::variable(4, 2), x3 = MPoly::variable(4, 3);
  MPoly q = x0 * pow(x2, 3) + x1 * x1 * x3 * x3 + pow(x2, 4) + pow(x3, 4);
  std::vector<int> wf(stability::kQuarticWitness.begin(), stability::kQuarticWitness.end());
  if (!stability::unstable_pattern_quartic(q)) o.fail("constructed quartic does not have the pattern");
  int mf = stability::mu_quartic(q, wf);
  if (mf != -1) o.fail("quartic weight " + std::to_string(mf));
  if (o.pass) o.detail = "mu = -1 for both witnesses";
  return o;
}

Outcome c5_stabilizer() {
  Outcome o;
  for (const auto& row : normal_form::table73()) {
    auto s = SegreSymbol::parse(row.symbol);
    int expected = row.symbol == "[(22)11]" ? 2 : s.count_length(2) + 3 * s.count_length(3);
    int got = moduli::stabilizer_dim(normal_form::paper_case(row.n));
    if (got != expected)
      o.fail(row.symbol + ": " + std::to_string(got) + " instead of " + std::to_string(expected));
  }
  if (o.pass) o.detail = "r2 + 3 r3 on 22 rows, 2 for [(22)11]";
  return o;
}

Outcome c6_table() {
  Outcome o;
  for (const auto& row : normal_form::table73()) {
    Pencil p = normal_form::paper_case(row.n);
    auto s = segre::segre_symbol(p);
    auto m = moduli::moduli_report(s);
    int stab = moduli::stabilizer_dim(p);
    if (m.dim_Mqc != row.dim_mqc) o.fail("row " + std::to_string(row.n) + ": dim Mqc differs from the table");
    if (m.dim_R - 15 + stab != s.r() - 2) o.fail("row " + std::to_string(row.n) + ": dimension bookkeeping fails");
  }
  if (o.pass) o.detail = "23 rows";
  return o;
}

Outcome c7_structure() {
  Outcome o;
  for (int n = 1; n <= 23; ++n)
    if (!surface::singular_surface_full(normal_form::paper_case(n)).certificate)
      o.fail("adjugate certificate fails for case " + std::to_string(n));
  auto s19 = surface::structural_class(surface::singular_surface(normal_form::paper_case(19)));
  if (s19.kind != surface::StructureKind::kProductOfPlanes || s19.planes.size() != 4 || s19.plane_rank != 4)
    o.fail("case 19 is not four independent planes");
  auto s20 = surface::structural_class(surface::singular_surface(normal_form::paper_case(20)));
  if (s20.kind != surface::StructureKind::kPerfectSquare || s20.quadric_rank != 4)
    o.fail("case 20 is not the square of a rank-4 quadric");
  auto s23 = surface::structural_class(surface::singular_surface(normal_form::paper_case(23)));
  bool two_double = s23.kind == surface::StructureKind::kProductOfPlanes && s23.planes.size() == 2 &&
                    s23.planes[0].second == 2 && s23.planes[1].second == 2;
  if (!two_double) o.fail("case 23 is not the square of two planes");
  if (o.pass) o.detail = "certificate on 23 cases; 19, 20, 23 classified";
  return o;
}

Outcome c8_representative() {
  Outcome o;
  for (int n : {1, 8, 15, 19, 23}) {
    Pencil p = normal_form::paper_case(n);
    MPoly s = surface::singular_surface(p);
    for (int t = 0; t < 5; ++t) {
      Scalar l = rand_rational();
      if (!proportional_poly(surface::singular_surface(p.shifted(l)), s))
        o.fail("case " + std::to_string(n) + " changes under F -> F + " + l.str() + " G");
    }
  }
  if (o.pass) o.detail = "5 shifts on 5 cases";
  return o;
}

Outcome c9_equivariance() {
  Outcome o;
  Pencil generic = normal_form::paper_case(1);
  Pencil plucker(surface::plucker_form(generic), klein::plucker_quadric());
  MPoly s = surface::singular_surface(plucker);
  for (int t = 0; t < 10; ++t) {
    ScalarMatrix M = rand_unimodular(4);
    MPoly moved = surface::singular_surface(plucker.congruent(klein::wedge_square(M)));
    if (!proportional_poly(moved, pullback(s, M))) o.fail("transform " + std::to_string(t) + " breaks equivariance");
  }
  if (o.pass) o.detail = "10 unimodular transforms";
  return o;
}

Outcome c10_cosingular() {
  Outcome o;
  std::array<Scalar, 6> lam{Scalar(0), Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5)};
  std::vector<Pencil> members;
  const std::array<long, 3> rhos{6, 7, -1};
  for (long r : rhos) {
    std::string tag = "rho = " + std::to_string(r) + ": ";
    moduli::CosingularFamily c{lam, Scalar(r)};
    Pencil x = moduli::base_pencil(c), xr = moduli::cosingular_member(c);
    members.push_back(xr);
    if (segre::segre_symbol(xr).str() != "[111111]") o.fail(tag + "symbol");
    if (!moduli::verify_phi(c)) o.fail(tag + "phi");
    if (moduli::isomorphic(x, xr).isomorphic) o.fail(tag + "isomorphic to the base");
    if (!moduli::mobius_equivalent(x, xr).equivalent) o.fail(tag + "not Möbius equivalent");
    // (0,-1;1,-rho) sends the base eigenvalues to those of -F_rho, the same complex
    moduli::Mobius w{Scalar(0), Scalar(-1), Scalar(1), Scalar(-r)};
    auto img = moduli::apply_mobius(w, moduli::diagonal_eigenvalues(x));
    std::multiset<Scalar> target;
    for (const auto& e : moduli::diagonal_eigenvalues(xr)) target.insert(-e);
    if (!img || std::multiset<Scalar>(img->begin(), img->end()) != target) o.fail(tag + "witness (0,-1;1,-rho)");
    for (const Scalar& r0 : {Scalar(7), Scalar(-3), Scalar(1, 2)})
      if (!(moduli::rho_limit(c, r0).F() == x.F() + x.G() * r0)) o.fail(tag + "limit");
  }
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (auto iso = moduli::isomorphic(members[a], members[b]); iso.isomorphic) {
        const auto& w = *iso.witness;
        o.fail("X_rho for rho = " + std::to_string(rhos[a]) + ", " + std::to_string(rhos[b]) +
               " are isomorphic (eigenvalue map l -> " + w.a().str() + "*l + " + w.c().str() + ")");
      }
  if (o.pass) o.detail = "rho in {6, 7, -1}: (a)-(e)";
  return o;
}

Outcome c11_properties() {
  Outcome o;
  int n = 0;
  for (int t = 0; t < 60; ++t, ++n) {
    Scalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
    bool field = a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                 (a.is_zero() || a * a.inverse() == Scalar(1));
    if (!field) o.fail("field axioms");
    MPoly p = rand_mpoly(4, 3, 4), q = rand_mpoly(4, 3, 4), r = rand_mpoly(4, 2, 3);
    if (!(p * (q + r) == p * q + p * r && (p * q) * r == p * (q * r) && p * q == q * p)) o.fail("ring axioms");

    std::size_t dim = static_cast<std::size_t>(rand_int(2, 6));
    ScalarMatrix m = rand_matrix(dim);
    if (!(m * adjugate(m) == ScalarMatrix::identity(dim, Scalar(1)) * det(m))) o.fail("adjugate identity");

    std::vector<UPoly> fs{rand_upoly(3) * rand_upoly(2), rand_upoly(3) * rand_upoly(1), rand_upoly(2) * rand_upoly(2)};
    std::vector<UPoly> nonconst;
    for (auto& f : fs)
      if (f.degree() > 0) nonconst.push_back(f);
    if (!nonconst.empty()) {
      auto basis = coprime_basis(nonconst);
      for (const auto& f : nonconst) {
        UPoly prod(Scalar(1));
        for (const auto& bb : basis)
          for (std::size_t e = 0; e < valuation(f, bb); ++e) prod = prod * bb;
        if (!(prod == f.monic())) o.fail("coprime basis reconstruction");
      }
    }

    auto e = distinct_rationals(6);
    auto mob = [] {
      for (;;) {
        moduli::Mobius m{Scalar(rand_int(-3, 3)), Scalar(rand_int(-3, 3)), Scalar(rand_int(-3, 3)), Scalar(rand_int(-3, 3))};
        if (!(m[0] * m[3] - m[1] * m[2]).is_zero()) return m;
      }
    };
    std::optional<std::vector<Scalar>> f, g;
    while (!f) f = moduli::apply_mobius(mob(), e);
    while (!g) g = moduli::apply_mobius(mob(), *f);
    auto diag = [](const std::vector<Scalar>& v) { return Pencil(diagonal(v), ScalarMatrix::identity(6, Scalar(1))); };
    Pencil pa = diag(e), pb = diag(*f), pc = diag(*g);
    bool rel = moduli::mobius_equivalent(pa, pa).equivalent && moduli::mobius_equivalent(pa, pb).equivalent &&
               moduli::mobius_equivalent(pb, pa).equivalent && moduli::mobius_equivalent(pb, pc).equivalent &&
               moduli::mobius_equivalent(pa, pc).equivalent;
    if (!rel) o.fail("Möbius equivalence is not an equivalence relation");
  }
  if (o.pass) o.detail = std::to_string(n) + " instances per suite";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Segre round trip", c1_round_trip},
      {"triple-oracle agreement", c2_oracles},
      {"semistability by symbol", c3_semistable},
      {"destabilizing witnesses", c4_witnesses},
      {"stabilizer dimensions", c5_stabilizer},
      {"moduli table", c6_table},
      {"singular-surface structure", c7_structure},
      {"F-representative independence", c8_representative},
      {"equivariance", c9_equivariance},
      {"cosingular suite", c10_cosingular},
      {"property suites", c11_properties},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("criterion %2zu: %s  %-32s %7.2fs  %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
