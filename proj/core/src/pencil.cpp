#include "qlc/pencil.hpp"

#include <algorithm>

#include "qlc/error.hpp"

namespace qlc {

Pencil::Pencil(ScalarMatrix F, ScalarMatrix G) : F_(std::move(F)), G_(std::move(G)) {
  if (F_.rows() != kDim || F_.cols() != kDim || G_.rows() != kDim || G_.cols() != kDim) {
    throw_invalid("pencil.shape", "pencil matrices must be 6x6");
  }
  if (!F_.is_symmetric()) throw_invalid("pencil.F_not_symmetric", "F is not symmetric");
  if (!G_.is_symmetric()) throw_invalid("pencil.G_not_symmetric", "G is not symmetric");
  if (det(G_).is_zero()) throw_degenerate("pencil.singular_G", "G is singular");
  if (F_.is_zero() || proportional(F_, G_)) {
    throw_degenerate("pencil.degenerate", "degenerate pencil: F is a multiple of G");
  }
}

Matrix<BinaryForm> Pencil::pencil_matrix() const {
  Matrix<BinaryForm> m(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) m(i, j) = BinaryForm::linear(F_(i, j), G_(i, j));
  return m;
}

Pencil Pencil::congruent(const ScalarMatrix& A) const {
  ScalarMatrix At = A.transpose();
  return Pencil(At * F_ * A, At * G_ * A);
}

Pencil Pencil::shifted(const Scalar& c) const {
  ScalarMatrix Gc = G_;
  Gc.scale(c);
  return Pencil(F_ + Gc, G_);
}

bool bracket_before(const Bracket& a, const Bracket& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a > b;
}

std::string bracket_str(const Bracket& b) {
  std::string s;
  for (int e : b) s += std::to_string(e);
  return b.size() == 1 ? s : "(" + s + ")";
}

SegreSymbol::SegreSymbol(std::vector<Bracket> brackets, std::vector<RootFactor> factors)
    : brackets_(std::move(brackets)), factors_(std::move(factors)) {
  if (brackets_.empty()) throw_invalid("segre.empty", "a Segre symbol has at least one bracket");
  int total = 0;
  for (const auto& b : brackets_) {
    if (b.empty()) throw_invalid("segre.empty_bracket", "empty bracket");
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] <= 0) throw_invalid("segre.nonpositive", "characteristic numbers are positive");
      if (i > 0 && b[i] > b[i - 1]) throw_invalid("segre.not_monotone", "bracket entries must be nonincreasing");
      total += b[i];
    }
  }
  if (total != static_cast<int>(kDim)) throw_invalid("segre.degree", "characteristic numbers must sum to 6");
  std::sort(brackets_.begin(), brackets_.end(), bracket_before);
  std::stable_sort(factors_.begin(), factors_.end(),
                   [](const RootFactor& a, const RootFactor& b) { return bracket_before(a.bracket, b.bracket); });
}

SegreSymbol SegreSymbol::parse(std::string_view t) {
  auto bad = [&] { throw_invalid("segre.syntax", "malformed Segre symbol: " + std::string(t)); };
  if (t.size() < 3 || t.front() != '[' || t.back() != ']') bad();
  std::vector<Bracket> out;
  std::size_t i = 1;
  while (i + 1 < t.size()) {
    char c = t[i];
    if (c == '(') {
      Bracket b;
      ++i;
      while (i + 1 < t.size() && t[i] != ')') {
        if (t[i] < '1' || t[i] > '6') bad();
        b.push_back(t[i] - '0');
        ++i;
      }
      if (i + 1 >= t.size() || b.empty()) bad();
      ++i;
      out.push_back(std::move(b));
    } else if (c >= '1' && c <= '6') {
      out.push_back({c - '0'});
      ++i;
    } else {
      bad();
    }
  }
  return SegreSymbol(std::move(out));
}

std::string SegreSymbol::str() const {
  std::string s = "[";
  for (const auto& b : brackets_) s += bracket_str(b);
  return s + "]";
}

int SegreSymbol::count_length(std::size_t k) const noexcept {
  return static_cast<int>(std::count_if(brackets_.begin(), brackets_.end(), [k](const Bracket& b) { return b.size() == k; }));
}

std::size_t SegreSymbol::max_length() const noexcept {
  std::size_t m = 0;
  for (const auto& b : brackets_) m = std::max(m, b.size());
  return m;
}

}  // namespace qlc
