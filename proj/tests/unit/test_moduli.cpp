#include "doctest.h"

#include <set>

#include "qlc/error.hpp"
#include "qlc/moduli.hpp"
#include "qlc/normal_form.hpp"
#include "qlc/segre.hpp"
#include "support/random.hpp"

using namespace qlc;
using namespace qlc::testing;

namespace {

Pencil diag_pencil(const std::vector<Scalar>& eig) { return Pencil(diagonal(eig), ScalarMatrix::identity(6, Scalar(1))); }

moduli::Mobius rand_mobius() {
  for (;;) {
    moduli::Mobius m{Scalar(rand_int(-3, 3)), Scalar(rand_int(-3, 3)), Scalar(rand_int(-3, 3)), Scalar(rand_int(-3, 3))};
    if (!(m[0] * m[3] - m[1] * m[2]).is_zero()) return m;
  }
}

// Six distinct eigenvalues together with a Möbius image that stays finite.
std::pair<std::vector<Scalar>, std::vector<Scalar>> related_pair() {
  for (;;) {
    auto e = distinct_rationals(6);
    auto img = moduli::apply_mobius(rand_mobius(), e);
    if (img) return {e, *img};
  }
}

std::multiset<Scalar> as_set(const std::vector<Scalar>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("stabilizer dimension is a congruence invariant") {
  for (int t = 0; t < 10; ++t) {
    int n = rand_int(1, 23);
    Pencil p = normal_form::paper_case(n);
    CHECK(moduli::stabilizer_dim(congruent_random(p)) == moduli::stabilizer_dim(p));
  }
  CHECK(moduli::stabilizer_dim(normal_form::paper_case(1)) == 0);
  CHECK(moduli::stabilizer_dim(normal_form::paper_case(15)) == 2);
}

TEST_CASE("moduli report bookkeeping") {
  for (const auto& row : normal_form::table73()) {
    auto m = moduli::moduli_report(SegreSymbol::parse(row.symbol));
    CHECK(m.in_scope);
    CHECK(m.dim_Mqc == m.r - 2);
    CHECK(m.dim_R - 15 + m.dim_stab == m.r - 2);
    CHECK(m.table_row.value() == row.n);
  }
  auto out = moduli::moduli_report(SegreSymbol::parse("[(1111)11]"));
  CHECK_FALSE(out.in_scope);
  CHECK_FALSE(out.verdict.empty());
  CHECK_FALSE(moduli::moduli_report(SegreSymbol::parse("[(33)]")).in_scope);
}

TEST_CASE("isomorphism up to congruence and affine change of parameter") {
  for (int t = 0; t < 20; ++t) {
    int n = rand_int(1, 23);
    Pencil p = normal_form::paper_case(n);
    Pencil q = congruent_random(p);
    auto r = moduli::isomorphic(p, q);
    CHECK(r.isomorphic);
    Scalar a = rand_nonzero(), b = rand_rational();
    Pencil moved(p.F() * a + p.G() * b, p.G());
    auto r2 = moduli::isomorphic(p, moved);
    REQUIRE(r2.isomorphic);
    // the witness maps labelled eigenvalues onto labelled eigenvalues
    auto ea = moduli::labelled_eigenvalues(p), eb = moduli::labelled_eigenvalues(moved);
    for (const auto& [z, br] : ea) {
      Scalar w = r2.witness->alpha * z + r2.witness->beta;
      bool found = false;
      for (const auto& [z2, br2] : eb) found = found || (z2 == w && br2 == br);
      CHECK(found);
    }
  }
  auto x = diag_pencil({Scalar(0), Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5)});
  auto y = diag_pencil({Scalar(0), Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(7)});
  CHECK_FALSE(moduli::isomorphic(x, y).isomorphic);
  CHECK_FALSE(moduli::isomorphic(x, normal_form::paper_case(2)).isomorphic);
}

TEST_CASE("Möbius equivalence is an equivalence relation") {
  for (int t = 0; t < 50; ++t) {
    auto [e, f] = related_pair();
    Pencil a = diag_pencil(e), b = diag_pencil(f);
    auto ab = moduli::mobius_equivalent(a, b);
    REQUIRE(ab.equivalent);
    CHECK(as_set(*moduli::apply_mobius(*ab.witness, e)) == as_set(f));
    CHECK(moduli::mobius_equivalent(a, a).equivalent);
    CHECK(moduli::mobius_equivalent(b, a).equivalent);
    std::optional<std::vector<Scalar>> g;
    while (!g) g = moduli::apply_mobius(rand_mobius(), f);
    Pencil c = diag_pencil(*g);
    REQUIRE(moduli::mobius_equivalent(b, c).equivalent);
    CHECK(moduli::mobius_equivalent(a, c).equivalent);
  }
  auto x = diag_pencil({Scalar(0), Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5)});
  auto y = diag_pencil({Scalar(0), Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(7)});
  CHECK_FALSE(moduli::mobius_equivalent(x, y).equivalent);
  CHECK_THROWS_AS(moduli::mobius_equivalent(x, normal_form::paper_case(2)), Error);
}

TEST_CASE("cosingular family") {
  std::array<Scalar, 6> lam{Scalar(0), Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5)};
  for (long rho : {6L, 7L, -1L}) {
    moduli::CosingularFamily c{lam, Scalar(rho)};
    Pencil x = moduli::base_pencil(c), xr = moduli::cosingular_member(c);
    CHECK(segre::segre_symbol(xr).str() == "[111111]");
    CHECK(moduli::verify_phi(c));
    CHECK_FALSE(moduli::isomorphic(x, xr).isomorphic);
    CHECK(moduli::mobius_equivalent(x, xr).equivalent);
    CHECK(moduli::rho_limit(c, Scalar(7)).F() == x.F() + x.G() * Scalar(7));
  }
  moduli::CosingularFamily c{lam, Scalar(6)};
  CHECK_FALSE(moduli::verify_phi(c, Scalar(9)));
  moduli::CosingularFamily bad{lam, Scalar(3)};
  CHECK_THROWS_AS(moduli::cosingular_member(bad), Error);
  CHECK_THROWS_AS(moduli::rho_limit(c, Scalar(3)), Error);
  CHECK(moduli::rho_limit(c, Scalar(-3)).F()(3, 3).is_zero());
  moduli::CosingularFamily rep{{Scalar(0), Scalar(0), Scalar(2), Scalar(3), Scalar(4), Scalar(5)}, Scalar(6)};
  CHECK_THROWS_AS(moduli::validate(rep), Error);
}

// Eigenvalues of the family member are 1/(l - rho); for the symmetric set
// 0..5 the members for rho and 5 - rho have opposite eigenvalues.
TEST_CASE("family members for mirrored parameters coincide") {
  std::array<Scalar, 6> lam{Scalar(0), Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5)};
  Pencil a = moduli::cosingular_member({lam, Scalar(6)});
  Pencil b = moduli::cosingular_member({lam, Scalar(-1)});
  std::multiset<Scalar> ea, neg_eb;
  for (const auto& l : lam) {
    ea.insert((l - Scalar(6)).inverse());
    neg_eb.insert(-(l + Scalar(1)).inverse());
  }
  REQUIRE(ea == neg_eb);
  auto iso = moduli::isomorphic(a, b);
  CHECK(iso.isomorphic);
  CHECK(iso.witness->a() == Scalar(-1));
}

TEST_CASE("family members are pairwise distinct for an asymmetric set") {
  std::array<Scalar, 6> lam{Scalar(0), Scalar(1), Scalar(3), Scalar(4), Scalar(7), Scalar(9)};
  std::vector<Pencil> members;
  for (long rho : {6L, 8L, -1L, 2L}) members.push_back(moduli::cosingular_member({lam, Scalar(rho)}));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) CHECK_FALSE(moduli::isomorphic(members[i], members[j]).isomorphic);
}
