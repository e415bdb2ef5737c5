#include "doctest.h"

#include "qlc/error.hpp"
#include "qlc/normal_form.hpp"
#include "qlc/segre.hpp"
#include "support/random.hpp"

using namespace qlc;
using namespace qlc::testing;

namespace {

std::vector<Scalar> roots_for(const SegreSymbol& s) { return distinct_rationals(static_cast<std::size_t>(s.r())); }

Pencil with_roots(const SegreSymbol& s, std::vector<Scalar> roots) {
  return normal_form::build_normal_form({s.brackets(), std::move(roots)});
}

}  // namespace

TEST_CASE("symbol grammar") {
  auto s = SegreSymbol::parse("[1(11)(21)]");
  CHECK(s.str() == "[(21)(11)1]");
  CHECK(s.r() == 3);
  CHECK(s.count_length(2) == 2);
  CHECK(s.max_length() == 2);
  CHECK(SegreSymbol::parse("[6]").str() == "[6]");
  CHECK(SegreSymbol::parse("[(111)111]").brackets().front() == Bracket{1, 1, 1});
  // bracket entries are decreasing and sum to 6
  CHECK_THROWS_AS(SegreSymbol::parse("[(12)111]"), Error);
  CHECK_THROWS_AS(SegreSymbol::parse("[11111]"), Error);
  CHECK_THROWS_AS(SegreSymbol::parse("(21)111"), Error);
  CHECK_THROWS_AS(SegreSymbol::parse("[(21)11x]"), Error);
}

TEST_CASE("discriminant agrees with pointwise determinants") {
  for (int n = 1; n <= 23; ++n) {
    Pencil p = normal_form::paper_case(n);
    BinaryForm d = segre::discriminant(p);
    CHECK(d.degree() == 6);
    for (int t = 0; t < 3; ++t) {
      Scalar l = rand_scalar(), m = rand_scalar();
      CHECK(d(l, m) == det(p.F() * l + p.G() * m));
    }
  }
}

TEST_CASE("determinantal divisors form a divisibility chain") {
  for (int n = 1; n <= 23; ++n) {
    auto D = segre::determinantal_divisors(normal_form::paper_case(n));
    for (std::size_t k = 1; k < D.size(); ++k) {
      CHECK(exact_div(D[k], D[k - 1]).degree() == D[k].degree() - D[k - 1].degree());
    }
  }
}

TEST_CASE("the three routes agree on the table") {
  for (const auto& row : normal_form::table73()) {
    CAPTURE(row.n);
    Pencil p = normal_form::paper_case(row.n);
    auto a = segre::segre_symbol(p);
    CHECK(a.str() == row.symbol);
    CHECK(segre::segre_symbol_snf(p) == a);
    CHECK(segre::segre_symbol_jordan(p) == a);
  }
}

TEST_CASE("round trip with random roots, including zero") {
  for (int t = 0; t < 3; ++t) {
    for (const auto& row : normal_form::table73()) {
      auto s = SegreSymbol::parse(row.symbol);
      auto roots = roots_for(s);
      if (t == 0 && std::find(roots.begin(), roots.end(), Scalar(0)) == roots.end()) roots[0] = Scalar(0);
      Pencil p = with_roots(s, roots);
      CAPTURE(row.symbol);
      CHECK(segre::segre_symbol(p) == s);
      CHECK(segre::segre_symbol_snf(p) == s);
      CHECK(segre::segre_symbol_jordan(p) == s);
    }
  }
}

TEST_CASE("symbol is a congruence invariant") {
  for (int t = 0; t < 40; ++t) {
    const auto& row = normal_form::table73()[static_cast<std::size_t>(rand_int(0, 22))];
    auto s = SegreSymbol::parse(row.symbol);
    Pencil p = congruent_random(with_roots(s, roots_for(s)));
    CAPTURE(row.symbol);
    CHECK(segre::segre_symbol(p) == s);
    CHECK(segre::segre_symbol_snf(p) == s);
  }
}

TEST_CASE("factors carry their brackets") {
  auto s = SegreSymbol::parse("[(21)(11)1]");
  Pencil p = with_roots(s, {Scalar(0), Scalar(3), Scalar(-1, 2)});
  auto got = segre::segre_symbol(p);
  REQUIRE(got.factors().size() == 3);
  for (const auto& f : got.factors()) {
    CHECK(f.factor.degree() == 1);
    // root z gives the factor z lambda + mu up to scale
    if (f.bracket == Bracket{2, 1}) CHECK(f.factor(Scalar(1), Scalar(0)).is_zero());
    if (f.bracket == Bracket{1, 1}) CHECK(f.factor(Scalar(1), Scalar(-3)).is_zero());
    if (f.bracket == Bracket{1}) CHECK(f.factor(Scalar(2), Scalar(1)).is_zero());
  }
}

TEST_CASE("irrational eigenvalues: minors and SNF work, Jordan refuses") {
  ScalarMatrix F(6, 6), G = ScalarMatrix::identity(6, Scalar(1));
  // G^-1 F has the block (0 2; 1 0), eigenvalues +-sqrt 2
  F(0, 1) = F(1, 0) = Scalar(2);
  G(1, 1) = Scalar(2);
  for (std::size_t k = 2; k < 6; ++k) F(k, k) = Scalar(static_cast<long>(k));
  Pencil p(F, G);
  auto s = segre::segre_symbol(p);
  CHECK(s.str() == "[111111]");
  CHECK(segre::segre_symbol_snf(p) == s);
  CHECK_THROWS_AS(segre::segre_symbol_jordan(p), Error);
}

TEST_CASE("degenerate pencils") {
  ScalarMatrix I = ScalarMatrix::identity(6, Scalar(1));
  CHECK_THROWS_AS(Pencil(I, I), Error);
  try {
    Pencil(I * Scalar(2), I);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::kDegenerate);
  }
  ScalarMatrix singular = I;
  singular(5, 5) = Scalar(0);
  CHECK_THROWS_AS(Pencil(I, singular), Error);
  ScalarMatrix asym = I;
  asym(0, 1) = Scalar(1);
  CHECK_THROWS_AS(Pencil(asym, I), Error);
  CHECK_THROWS_AS(Pencil(ScalarMatrix::identity(5, Scalar(1)), ScalarMatrix::identity(5, Scalar(1))), Error);
}

TEST_CASE("smith form of a small polynomial matrix") {
  UPoly x = UPoly::x();
  Matrix<UPoly> m(2, 2);
  m(0, 0) = x;
  m(1, 1) = x * x - UPoly(Scalar(1));
  m(0, 1) = UPoly(Scalar(0));
  m(1, 0) = UPoly(Scalar(0));
  auto inv = segre::smith_invariant_factors(m);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == UPoly(Scalar(1)));
  CHECK(inv[1] == (x * (x * x - UPoly(Scalar(1)))).monic());
}

TEST_CASE("geometry of the pencil") {
  using segre::Geometry;
  CHECK(segre::classify_geometry(SegreSymbol::parse("[111111]")).geometry == Geometry::kIrreducibleReduced);
  auto rep = segre::classify_geometry(SegreSymbol::parse("[(21)111]"));
  REQUIRE(rep.singularities.size() == 4);
  CHECK(rep.singularities[0].tabulated);
  auto wide = segre::classify_geometry(SegreSymbol::parse("[(1111)11]"));
  CHECK_FALSE(wide.singularities[0].tabulated);
  CHECK(segre::geometry_name(Geometry::kReducible) == "reducible");
}

TEST_CASE("long brackets make the complex reducible or nonreduced") {
  using segre::Geometry;
  CHECK(segre::classify_geometry(SegreSymbol::parse("[(1111)11]")).geometry == Geometry::kReducible);
  CHECK(segre::classify_geometry(SegreSymbol::parse("[(11111)1]")).geometry == Geometry::kNonreduced);
  CHECK(segre::classify_geometry(SegreSymbol::parse("[(111111)]")).geometry == Geometry::kNonreduced);
}
