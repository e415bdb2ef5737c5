#include "qlc/upoly.hpp"

#include <algorithm>

#include "qlc/error.hpp"

namespace qlc {

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = lc().inverse();
  UPoly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
  return UPoly(std::move(d));
}

Scalar UPoly::operator()(const Scalar& x) const {
  Scalar acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1);
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw_invalid("upoly.division_by_zero", "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quo(rem.size() - b.coeffs().size() + 1);
  Scalar inv = b.lc().inverse();
  const auto& bc = b.coeffs();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Scalar q = rem[k + bc.size() - 1] * inv;
    if (q.is_zero()) continue;
    quo[k] = q;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw_invalid("upoly.inexact_division", "polynomial division is not exact");
  return q;
}

bool divides(const UPoly& b, const UPoly& a) { return divmod(a, b).second.is_zero(); }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.monic();
  UPoly y = b.monic();
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UPoly squarefree_part(const UPoly& f) {
  if (f.is_zero()) throw_invalid("upoly.zero", "squarefree part of the zero polynomial");
  if (f.is_constant()) return UPoly(Scalar(1));
  return exact_div(f, gcd(f, f.derivative())).monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& f) {
  if (f.is_zero()) throw_invalid("upoly.zero", "squarefree decomposition of the zero polynomial");
  std::vector<UPoly> out;
  if (f.is_constant()) return out;
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = exact_div(f, a);
  UPoly c = exact_div(fp, a);
  UPoly d = c - b.derivative();
  while (!b.is_constant()) {
    UPoly g = gcd(b, d);
    out.push_back(g.monic());
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    auto c = a.coeffs()[k] <=> b.coeffs()[k];
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<UPoly> coprime_basis(const std::vector<UPoly>& fs) {
  if (fs.empty()) throw_invalid("coprime_basis.empty", "coprime basis of an empty list");
  std::vector<UPoly> work;
  for (const auto& f : fs) {
    if (f.is_zero()) throw_invalid("coprime_basis.zero", "coprime basis input is zero");
    for (auto& s : squarefree_decomposition(f)) {
      if (!s.is_constant()) work.push_back(std::move(s));
    }
  }
  // pairwise refinement: total degree strictly drops on every split
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        if (work[i] == work[j]) {
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
        UPoly g = gcd(work[i], work[j]);
        if (g.is_constant()) continue;
        UPoly a = exact_div(work[i], g).monic();
        UPoly b = exact_div(work[j], g).monic();
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        for (UPoly* p : {&g, &a, &b}) {
          if (!p->is_constant()) work.push_back(std::move(*p));
        }
        changed = true;
      }
    }
  }
  std::sort(work.begin(), work.end(), upoly_less);
  return work;
}

std::size_t valuation(const UPoly& f, const UPoly& b) {
  if (b.is_constant()) throw_invalid("valuation.constant_base", "valuation with respect to a constant");
  if (f.is_zero()) throw_invalid("valuation.zero", "valuation of the zero polynomial");
  std::size_t k = 0;
  UPoly cur = f;
  for (;;) {
    auto [q, r] = divmod(cur, b);
    if (!r.is_zero()) return k;
    cur = std::move(q);
    ++k;
  }
}

}  // namespace qlc
