#include "qlc/normal_form.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "qlc/error.hpp"

namespace qlc::normal_form {

BinaryForm root_form(const Scalar& r) { return BinaryForm::linear(r, Scalar(1)).monic(); }

Pencil build_normal_form(const RootedSymbol& rs) {
  if (rs.brackets.size() != rs.roots.size()) {
    throw_invalid("normal_form.root_count", "need exactly one root per bracket");
  }
  SegreSymbol check(rs.brackets);  // validates Σe = 6 and monotonicity
  std::set<Scalar> seen(rs.roots.begin(), rs.roots.end());
  if (seen.size() != rs.roots.size()) throw_invalid("normal_form.repeated_root", "roots must be distinct");

  std::vector<std::size_t> order(rs.brackets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return bracket_before(rs.brackets[a], rs.brackets[b]);
  });

  ScalarMatrix F(kDim, kDim), G(kDim, kDim);
  std::size_t off = 0;
  for (std::size_t idx : order) {
    const Scalar& r = rs.roots[idx];
    for (int e : rs.brackets[idx]) {
      const std::size_t s = static_cast<std::size_t>(e);
      for (std::size_t i = 0; i < s; ++i) {
        G(off + i, off + s - 1 - i) = Scalar(1);
        F(off + i, off + s - 1 - i) = r;
        if (i + 1 < s) F(off + i, off + s - 2 - i) = Scalar(1);
      }
      off += s;
    }
  }
  return Pencil(std::move(F), std::move(G));
}

const std::array<Table73Row, 23>& table73() {
  static const std::array<Table73Row, 23> rows{{
      {1, "[111111]", 4, 3, 1, "Kummer surface"},
      {2, "[21111]", 3, 2, 1, ""},
      {3, "[3111]", 2, 1, 1, ""},
      {4, "[411]", 1, 0, 1, ""},
      {5, "[2211]", 2, 1, 1, ""},
      {6, "[321]", 1, 0, 1, ""},
      {7, "[222]", 1, 0, 1, ""},
      {8, "[(11)1111]", 3, 2, 1, ""},
      {9, "[(11)211]", 2, 1, 1, ""},
      {10, "[(11)31]", 1, 0, 1, ""},
      {11, "[(11)22]", 1, 0, 1, ""},
      {12, "[(21)111]", 2, 1, 1, ""},
      {13, "[(21)21]", 1, 0, 1, ""},
      {14, "[(31)11]", 1, 0, 1, ""},
      {15, "[(22)11]", 1, 0, 1, ""},
      {16, "[(11)(11)11]", 2, 1, 1, ""},
      {17, "[(11)(11)2]", 1, 0, 1, ""},
      {18, "[(21)(11)1]", 1, 0, 1, ""},
      {19, "[(11)(11)(11)]", 1, 0, 1, "coordinate tetrahedron"},
      {20, "[(111)111]", 2, 0, 2, ""},
      {21, "[(111)(11)1]", 1, 0, 1, ""},
      {22, "[(111)21]", 1, 0, 1, ""},
      {23, "[(211)11]", 1, 0, 1, ""},
  }};
  return rows;
}

const Table73Row& table73_row(int n) {
  if (n < 1 || n > 23) throw_invalid("paper_case.range", "case number must be in 1..23");
  return table73()[static_cast<std::size_t>(n - 1)];
}

std::vector<Scalar> default_lambdas() {
  std::vector<Scalar> l;
  for (long k = 1; k <= 6; ++k) l.emplace_back(k);
  return l;
}

namespace {

// coefficient matrix of a quadratic form given as a list of (i, j, c) meaning c*x_i*x_j
ScalarMatrix quadric(std::initializer_list<std::tuple<int, int, Scalar>> terms) {
  ScalarMatrix m(kDim, kDim);
  for (const auto& [i, j, c] : terms) {
    const std::size_t a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
    if (a == b) {
      m(a, a) += c;
    } else {
      m(a, b) += c / Scalar(2);
      m(b, a) += c / Scalar(2);
    }
  }
  return m;
}

}  // namespace

Pencil paper_case(int n) {
  const Table73Row& row = table73_row(n);
  const auto L = default_lambdas();
  const Scalar &l1 = L[0], &l2 = L[1], &l3 = L[2], &l4 = L[3], &l5 = L[4], &l6 = L[5];
  const Scalar one(1), two(2);
  switch (n) {
    case 11:
      return Pencil(quadric({{1, 1, l1}, {2, 2, l1}, {3, 4, two * l2}, {5, 6, two * l3}, {3, 3, one}, {5, 5, one}}),
                    quadric({{1, 1, one}, {2, 2, one}, {3, 4, two}, {5, 6, two}}));
    case 14:
      return Pencil(quadric({{1, 1, l1}, {2, 2, l2}, {3, 3, l3}, {5, 5, l3}, {4, 6, two * l3}, {4, 5, two}}),
                    quadric({{1, 1, one}, {2, 2, one}, {3, 3, one}, {5, 5, one}, {4, 6, two}}));
    case 18:
      return Pencil(quadric({{1, 1, l1}, {2, 2, l1}, {3, 3, l3}, {4, 4, l4}, {5, 6, two * l4}, {5, 5, one}}),
                    quadric({{1, 1, one}, {2, 2, one}, {3, 3, one}, {4, 4, one}, {5, 6, two}}));
    case 20:
      return Pencil(quadric({{1, 1, l1}, {2, 2, l1}, {3, 3, l1}, {4, 4, l4}, {5, 5, l5}, {6, 6, l6}}),
                    ScalarMatrix::identity(kDim, one));
    case 23:
      return Pencil(quadric({{1, 1, l1}, {2, 2, l2}, {3, 3, l3}, {4, 4, l3}, {5, 6, two * l3}, {5, 5, one}}),
                    quadric({{1, 1, one}, {2, 2, one}, {3, 3, one}, {4, 4, one}, {5, 6, two}}));
    default: {
      SegreSymbol s = SegreSymbol::parse(row.symbol);
      RootedSymbol rs{s.brackets(), {}};
      for (std::size_t k = 0; k < rs.brackets.size(); ++k) rs.roots.push_back(L[k]);
      return build_normal_form(rs);
    }
  }
}

}  // namespace qlc::normal_form
