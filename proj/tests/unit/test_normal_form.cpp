#include "doctest.h"

#include "qlc/error.hpp"
#include "qlc/normal_form.hpp"
#include "qlc/segre.hpp"
#include "support/random.hpp"

using namespace qlc;
using namespace qlc::testing;

TEST_CASE("table rows") {
  const auto& t = normal_form::table73();
  CHECK(t.size() == 23);
  for (std::size_t k = 0; k < t.size(); ++k) {
    CHECK(t[k].n == static_cast<int>(k) + 1);
    auto s = SegreSymbol::parse(t[k].symbol);
    CHECK(s.str() == t[k].symbol);
    CHECK(t[k].dim_mqc == s.r() - 2);
  }
  CHECK_THROWS_AS(normal_form::table73_row(0), Error);
  CHECK_THROWS_AS(normal_form::table73_row(24), Error);
}

TEST_CASE("normal form blocks") {
  // [3] with root 5: anti-diagonal 5, one superdiagonal of ones, G the anti-identity
  auto p = normal_form::build_normal_form({{Bracket{3}, Bracket{1}, Bracket{1}, Bracket{1}},
                                           {Scalar(5), Scalar(1), Scalar(2), Scalar(3)}});
  CHECK(p.G()(0, 2) == Scalar(1));
  CHECK(p.G()(1, 1) == Scalar(1));
  CHECK(p.F()(0, 2) == Scalar(5));
  CHECK(p.F()(0, 1) == Scalar(1));
  CHECK(p.F()(0, 0) == Scalar(0));
  CHECK(p.F().is_symmetric());
  CHECK(p.G().is_symmetric());
  CHECK_FALSE(det(p.G()).is_zero());
}

TEST_CASE("root forms") {
  auto f = normal_form::root_form(Scalar(4));
  CHECK(f(Scalar(1), Scalar(-4)).is_zero());
  CHECK(normal_form::root_form(Scalar(0))(Scalar(1), Scalar(0)).is_zero());
}

TEST_CASE("normal form input validation") {
  auto s = SegreSymbol::parse("[(21)111]");
  CHECK_THROWS_AS(normal_form::build_normal_form({s.brackets(), {Scalar(1), Scalar(2)}}), Error);
  CHECK_THROWS_AS(normal_form::build_normal_form({s.brackets(), {Scalar(1), Scalar(2), Scalar(2), Scalar(3)}}), Error);
}

TEST_CASE("paper cases use default parameters") {
  CHECK(normal_form::default_lambdas().size() == 6);
  for (int n = 1; n <= 23; ++n) {
    Pencil p = normal_form::paper_case(n);
    CHECK(segre::segre_symbol(p).str() == normal_form::table73_row(n).symbol);
  }
  // explicit cases keep the Plücker-independent frame of their displayed equations
  CHECK(normal_form::paper_case(20).G() == ScalarMatrix::identity(6, Scalar(1)));
}

TEST_CASE("shifting F by G keeps the symbol") {
  for (int t = 0; t < 20; ++t) {
    int n = rand_int(1, 23);
    Pencil p = normal_form::paper_case(n).shifted(rand_rational());
    CHECK(segre::segre_symbol(p).str() == normal_form::table73_row(n).symbol);
  }
}
