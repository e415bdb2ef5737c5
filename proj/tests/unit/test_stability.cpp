#include "doctest.h"

#include <algorithm>
#include <climits>

#include "qlc/error.hpp"
#include "qlc/klein.hpp"
#include "qlc/normal_form.hpp"
#include "qlc/stability.hpp"
#include "qlc/surface.hpp"
#include "support/random.hpp"

using namespace qlc;
using namespace qlc::testing;

namespace {

// Hilbert-Mumford weight recomputed from scratch: the largest weight of a
// monomial that occurs.
int weight_oracle(const ScalarMatrix& Q, const std::vector<int>& w) {
  int best = INT_MIN;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i; j < 6; ++j)
      if (!Q(i, j).is_zero()) best = std::max(best, w[i] + w[j]);
  return best;
}

bool in_quadric_pattern(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  if (j < 3) return true;
  for (auto [a, b] : stability::quadric_pattern_pairs())
    if (static_cast<std::size_t>(a - 1) == i && static_cast<std::size_t>(b - 1) == j) return true;
  return false;
}

ScalarMatrix random_pattern_quadric() {
  ScalarMatrix Q(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i; j < 6; ++j) {
      if (in_quadric_pattern(i, j)) continue;
      Scalar v(rand_int(-3, 3));
      Q(i, j) = v;
      Q(j, i) = v;
    }
  Q(1, 3) = Q(3, 1) = Scalar(1);  // q24 keeps the weight at -1
  return Q;
}

MPoly random_pattern_quartic() {
  const auto& pat = stability::quartic_pattern();
  MPoly q(4);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4; ++c) {
        std::array<int, 4> e{a, b, c, 4 - a - b - c};
        if (e == std::array<int, 4>{1, 0, 3, 0} || std::find(pat.begin(), pat.end(), e) != pat.end()) continue;
        q += MPoly::monomial(4, e, Scalar(rand_int(-2, 2)));
      }
  std::array<int, 4> lead{1, 0, 3, 0};
  q += MPoly::monomial(4, lead, Scalar(1));
  return q;
}

}  // namespace

TEST_CASE("weight validation") {
  std::vector<int> ok{3, 2, 1, -3, -2, -1};
  CHECK_NOTHROW(stability::validate_so6_weights(ok));
  std::vector<int> unordered{1, 2, 1, -1, -2, -1};
  CHECK_THROWS_AS(stability::validate_so6_weights(unordered), Error);
  std::vector<int> unpaired{3, 2, 1, -3, -2, 0};
  CHECK_THROWS_AS(stability::validate_so6_weights(unpaired), Error);
  std::vector<int> sl4{8, -1, -3, -4};
  CHECK_NOTHROW(stability::validate_sl4_weights(sl4));
  std::vector<int> nonzero_sum{8, -1, -3, -3};
  CHECK_THROWS_AS(stability::validate_sl4_weights(nonzero_sum), Error);
}

TEST_CASE("quadric witness: pattern forces weight -1") {
  std::vector<int> w(stability::kQuadricWitness.begin(), stability::kQuadricWitness.end());
  for (int t = 0; t < 60; ++t) {
    ScalarMatrix Q = random_pattern_quadric();
    CHECK(stability::unstable_pattern_quadric(Q));
    CHECK(stability::mu_quadric(Q, w) == -1);
    CHECK(stability::mu_quadric(Q, w) == weight_oracle(Q, w));
  }
}

TEST_CASE("quadric weight matches the oracle on random quadrics and weights") {
  for (int t = 0; t < 60; ++t) {
    ScalarMatrix Q(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i; j < 6; ++j)
        if (rand_int(0, 2) == 0) Q(i, j) = Q(j, i) = Scalar(rand_int(1, 3));
    if (Q.is_zero()) Q(0, 3) = Q(3, 0) = Scalar(1);
    int r3 = rand_int(0, 3), r2 = r3 + rand_int(0, 3), r1 = r2 + rand_int(0, 3);
    std::vector<int> w{r1, r2, r3, -r1, -r2, -r3};
    CHECK(stability::mu_quadric(Q, w) == weight_oracle(Q, w));
  }
  // the Plücker quadric itself has weight 0 for every 1-PS of SO(G)
  std::vector<int> w{5, 2, 1, -5, -2, -1};
  CHECK(stability::mu_quadric(klein::plucker_quadric(), w) == 0);
}

TEST_CASE("a full quadric is not destabilized by the witness") {
  ScalarMatrix Q = ScalarMatrix::identity(6, Scalar(1));
  CHECK_FALSE(stability::unstable_pattern_quadric(Q));
  std::vector<int> w(stability::kQuadricWitness.begin(), stability::kQuadricWitness.end());
  CHECK(stability::mu_quadric(Q, w) == 6);
}

TEST_CASE("quartic witness: pattern forces weight -1") {
  std::vector<int> w(stability::kQuarticWitness.begin(), stability::kQuarticWitness.end());
  for (int t = 0; t < 60; ++t) {
    MPoly q = random_pattern_quartic();
    CHECK(stability::unstable_pattern_quartic(q));
    CHECK(stability::mu_quartic(q, w) == -1);
  }
  MPoly fermat(4);
  for (std::size_t k = 0; k < 4; ++k) fermat += pow(MPoly::variable(4, k), 4);
  CHECK_FALSE(stability::unstable_pattern_quartic(fermat));
  CHECK(stability::mu_quartic(fermat, w) == 32);
  CHECK_THROWS_AS(stability::validate_quartic(MPoly::variable(4, 0)), Error);
}

TEST_CASE("semistability by symbol") {
  for (const auto& row : normal_form::table73()) CHECK(stability::segre_semistable(normal_form::paper_case(row.n)));
  for (const auto& s : stability::unstable_irreducible_symbols()) CHECK_FALSE(stability::segre_semistable(SegreSymbol::parse(s)));
  Pencil six = normal_form::build_normal_form({{Bracket{6}}, {Scalar(2)}});
  CHECK_FALSE(stability::segre_semistable(six));
}

TEST_CASE("trace-zero representative") {
  Pencil p = normal_form::paper_case(1);
  ScalarMatrix t = stability::trace_zero_representative(p);
  CHECK(trace(t).is_zero());
  CHECK(proportional(t - p.F(), p.G()));
  CHECK_THROWS_AS(stability::trace_zero_representative(normal_form::paper_case(11)), Error);
}

TEST_CASE("triple points of the coordinate tetrahedron") {
  MPoly q = MPoly::variable(4, 0) * MPoly::variable(4, 1) * MPoly::variable(4, 2) * MPoly::variable(4, 3);
  std::vector<Scalar> vertex{Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  auto rep = stability::triple_point_report(q, vertex);
  CHECK(rep.on_surface);
  CHECK(rep.is_triple);
  CHECK(rep.tangent_cone.degree() == 3);
  std::vector<Scalar> edge{Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
  CHECK_FALSE(stability::triple_point_report(q, edge).is_triple);
  auto found = stability::search_triple_points(q);
  CHECK(found.triple_points.size() == 4);
}

TEST_CASE("cusp on a tangent cone") {
  // tangent cone v^3 - u^2 w at (1:0:0:0): cuspidal along (0:0:1)
  MPoly x0 = MPoly::variable(4, 0), x1 = MPoly::variable(4, 1), x2 = MPoly::variable(4, 2), x3 = MPoly::variable(4, 3);
  MPoly q = x0 * (x2 * x2 * x2 - x1 * x1 * x3) + x3 * x3 * x3 * x3;
  std::vector<Scalar> p{Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  std::vector<Scalar> r{Scalar(0), Scalar(0), Scalar(1)};
  auto rep = stability::triple_point_report(q, p, r);
  CHECK(rep.is_triple);
  REQUIRE(rep.r_singular.has_value());
  CHECK(*rep.r_singular);
  REQUIRE(rep.cusp_at.has_value());
  CHECK(*rep.cusp_at);
  CHECK(rep.hessian_rank.value() == 1);
}

namespace {

struct Displayed {
  int row;
  MPoly surface;
};

// Singular surfaces as written in the classification table, in y1..y4,
// for l1 = 2, l2 = -1, l3 = 5, l4 = 3.
std::vector<Displayed> displayed_surfaces() {
  MPoly y1 = MPoly::variable(4, 0), y2 = MPoly::variable(4, 1), y3 = MPoly::variable(4, 2), y4 = MPoly::variable(4, 3);
  const Scalar l1(2), l2(-1), l3(5), l4(3);
  std::vector<Displayed> out;
  out.push_back({11, l1 * l1 * y1 * y1 * y3 * y3 + (l1 - l2) * (l1 - l2) * y1 * y1 * y4 * y4 -
                         Scalar(4) * l1 * l2 * (l1 - l2) * y1 * y2 * y3 * y4});
  out.push_back({14, (l1 - l2) * (y1 * y1 * y1 * y1 + y4 * y4 * y4 * y4) +
                         Scalar(8) * (l1 - l3) * (l2 - l3) * y1 * y4 * (y1 * y3 - y2 * y4) +
                         Scalar(2) * (l1 + l2 - Scalar(2) * l3) * y1 * y1 * y4 * y4});
  MPoly s18 = y1 * y3 + y2 * y4;
  out.push_back({18, (l1 - l4) * (l3 - l4) * s18 * s18 - Scalar(4) * (l3 - l1) * y1 * y1 * y4 * y4});
  out.push_back({19, y1 * y2 * y3 * y4});
  MPoly s20 = y1 * y3 - y2 * y4;
  out.push_back({20, s20 * s20});
  out.push_back({23, y1 * y1 * y4 * y4});
  return out;
}

}  // namespace

TEST_CASE("displayed table surfaces pass the pattern check in their own coordinates") {
  for (const auto& [row, s] : displayed_surfaces()) {
    CAPTURE(row);
    CHECK_FALSE(stability::unstable_pattern_quartic(s));
    auto found = stability::search_triple_points(s);
    CHECK(found.has_cusp() == (row == 14));
  }
}

TEST_CASE("row 14 surface has a degenerate cuspidal triple point") {
  const MPoly s = displayed_surfaces()[1].surface;
  std::vector<Scalar> p{Scalar(0), Scalar(1), Scalar(0), Scalar(0)};
  auto rep = stability::triple_point_report(s, p, std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(0)});
  CHECK(rep.is_triple);
  CHECK(rep.tangent_cone == MPoly::variable(3, 0) * MPoly::variable(3, 2) * MPoly::variable(3, 2) * Scalar(-144));
  CHECK(rep.cusp_at.value());
  // swap y1 and y2 so the point is (1:0:0:0); the witness then applies
  std::vector<MPoly> swap{MPoly::variable(4, 1), MPoly::variable(4, 0), MPoly::variable(4, 2), MPoly::variable(4, 3)};
  MPoly moved = s.substitute(swap);
  CHECK(stability::unstable_pattern_quartic(moved));
  CHECK(stability::mu_quartic(moved, stability::kQuarticWitness) < 0);
}

TEST_CASE("a double pair of planes is destabilized after relabelling coordinates") {
  // y1^2 y4^2 with y1, y4 moved to the middle slots
  MPoly moved = MPoly::variable(4, 1) * MPoly::variable(4, 1) * MPoly::variable(4, 2) * MPoly::variable(4, 2);
  CHECK(stability::unstable_pattern_quartic(moved));
  CHECK(stability::mu_quartic(moved, stability::kQuarticWitness) == -8);
}
