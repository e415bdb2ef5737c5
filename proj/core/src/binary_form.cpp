#include "qlc/binary_form.hpp"

#include <algorithm>

#include "qlc/error.hpp"
#include "qlc/mpoly.hpp"

namespace qlc {

BinaryForm::BinaryForm(int degree, std::vector<Scalar> coeffs) : degree_(degree), c_(std::move(coeffs)) {
  if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1) {
    throw_invalid("binary_form.shape", "binary form needs degree+1 coefficients");
  }
  zero_ = false;
  normalize_zero();
}

void BinaryForm::normalize_zero() {
  if (zero_) return;
  if (std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); })) {
    zero_ = true;
    degree_ = 0;
    c_.clear();
  }
}

BinaryForm BinaryForm::linear(const Scalar& a, const Scalar& b) { return BinaryForm(1, {a, b}); }

BinaryForm BinaryForm::constant(const Scalar& c) { return BinaryForm(0, {c}); }

BinaryForm BinaryForm::homogenize(const UPoly& p, std::size_t mu_power) {
  if (p.is_zero()) return BinaryForm();
  const std::size_t e = static_cast<std::size_t>(p.degree());
  std::vector<Scalar> c(e + mu_power + 1);
  for (std::size_t j = 0; j <= e; ++j) c[j + mu_power] = p.coeff(e - j);
  return BinaryForm(static_cast<int>(e + mu_power), std::move(c));
}

BinaryForm BinaryForm::from_mpoly(const MPoly& p) {
  if (p.is_zero()) return BinaryForm();
  if (p.nvars() != 2 || !p.is_homogeneous()) {
    throw_invalid("binary_form.not_binary", "expected a homogeneous polynomial in 2 variables");
  }
  const int d = p.degree();
  std::vector<Scalar> c(static_cast<std::size_t>(d) + 1);
  for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.mono.exp(1))] = t.coeff;
  return BinaryForm(d, std::move(c));
}

Scalar BinaryForm::leading_coeff() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return c;
  }
  return Scalar(0);
}

BinaryForm BinaryForm::monic() const {
  if (zero_) return *this;
  return *this * leading_coeff().inverse();
}

std::size_t BinaryForm::mu_valuation() const {
  if (zero_) return kInfiniteValuation;
  std::size_t a = 0;
  while (c_[a].is_zero()) ++a;
  return a;
}

UPoly BinaryForm::dehomogenize() const {
  if (zero_) return UPoly();
  std::size_t a = mu_valuation();
  std::size_t e = static_cast<std::size_t>(degree_) - a;
  std::vector<Scalar> u(e + 1);
  for (std::size_t j = 0; j <= e; ++j) u[e - j] = c_[j + a];
  return UPoly(std::move(u));
}

Scalar BinaryForm::operator()(const Scalar& lambda, const Scalar& mu) const {
  Scalar acc;
  if (zero_) return acc;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    Scalar term = c_[j];
    for (std::size_t k = 0; k < c_.size() - 1 - j; ++k) term *= lambda;
    for (std::size_t k = 0; k < j; ++k) term *= mu;
    acc += term;
  }
  return acc;
}

MPoly BinaryForm::to_mpoly() const {
  std::vector<MPoly::Term> terms;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    std::array<int, 2> e{degree_ - static_cast<int>(j), static_cast<int>(j)};
    terms.push_back({Monomial(e), c_[j]});
  }
  return MPoly::from_terms(2, std::move(terms));
}

BinaryForm BinaryForm::operator-() const { return *this * Scalar(-1); }

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.zero_) return *this;
  if (zero_) return *this = o;
  if (degree_ != o.degree_) throw_invalid("binary_form.degree_mismatch", "adding binary forms of different degree");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  normalize_zero();
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) { return *this += -o; }

BinaryForm& BinaryForm::operator*=(const BinaryForm& o) {
  if (zero_) return *this;
  if (o.zero_) return *this = BinaryForm();
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1);
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b) {
      if (!o.c_[b].is_zero()) r[a + b] += c_[a] * o.c_[b];
    }
  }
  degree_ += o.degree_;
  c_ = std::move(r);
  normalize_zero();
  return *this;
}

BinaryForm& BinaryForm::operator*=(const Scalar& s) {
  if (zero_) return *this;
  for (auto& c : c_) c *= s;
  normalize_zero();
  return *this;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
  return a.degree_ == b.degree_ && a.c_ == b.c_;
}

BinaryForm exact_div(const BinaryForm& a, const BinaryForm& b) {
  if (b.is_zero()) throw_invalid("binary_form.division_by_zero", "division by the zero form");
  if (a.is_zero()) return a;
  std::size_t va = a.mu_valuation(), vb = b.mu_valuation();
  if (va < vb || a.degree() < b.degree()) {
    throw_invalid("binary_form.inexact_division", "binary form division is not exact");
  }
  UPoly q = exact_div(a.dehomogenize(), b.dehomogenize());
  return BinaryForm::homogenize(q, va - vb);
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::size_t mu = std::min(a.mu_valuation(), b.mu_valuation());
  return BinaryForm::homogenize(gcd(a.dehomogenize(), b.dehomogenize()), mu);
}

BinaryForm squarefree_part(const BinaryForm& f) {
  if (f.is_zero()) throw_invalid("squarefree_part.zero", "squarefree part of the zero form");
  std::size_t mu = f.mu_valuation() > 0 ? 1 : 0;
  return BinaryForm::homogenize(squarefree_part(f.dehomogenize()), mu);
}

bool binary_less(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    auto c = a.coeffs()[j] <=> b.coeffs()[j];
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<BinaryForm> coprime_basis(const std::vector<BinaryForm>& fs) {
  if (fs.empty()) throw_invalid("coprime_basis.empty", "coprime basis of an empty list");
  std::vector<UPoly> parts;
  bool has_mu = false;
  for (const auto& f : fs) {
    if (f.is_zero()) throw_invalid("coprime_basis.zero", "coprime basis input is zero");
    has_mu = has_mu || f.mu_valuation() > 0;
    UPoly u = f.dehomogenize();
    if (!u.is_constant()) parts.push_back(std::move(u));
  }
  std::vector<BinaryForm> out;
  if (!parts.empty()) {
    for (const auto& u : coprime_basis(parts)) out.push_back(BinaryForm::homogenize(u));
  }
  if (has_mu) out.push_back(BinaryForm::linear(Scalar(0), Scalar(1)));
  std::sort(out.begin(), out.end(), binary_less);
  return out;
}

std::size_t valuation(const BinaryForm& f, const BinaryForm& b) {
  if (b.is_zero() || b.degree() < 1) throw_invalid("valuation.constant_base", "valuation with respect to a constant");
  if (f.is_zero()) return kInfiniteValuation;
  std::size_t vb = b.mu_valuation();
  UPoly bu = b.dehomogenize();
  if (bu.is_constant()) {
    // b = c * mu^vb
    return f.mu_valuation() / vb;
  }
  if (vb > 0) {
    // b shares no factor structure we can split without a coprime basis: divide directly
    std::size_t k = 0;
    BinaryForm cur = f;
    for (;;) {
      if (cur.mu_valuation() < vb || cur.degree() < b.degree()) return k;
      UPoly cu = cur.dehomogenize();
      auto [q, r] = divmod(cu, bu);
      if (!r.is_zero()) return k;
      cur = BinaryForm::homogenize(q, cur.mu_valuation() - vb);
      ++k;
    }
  }
  return valuation(f.dehomogenize(), bu);
}

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
  std::size_t n = std::max(a.nvars(), b.nvars());
  if ((!a.is_zero() && a.nvars() != n) || (!b.is_zero() && b.nvars() != n)) {
    throw_invalid("poly_gcd.arity", "gcd operands over different variable sets");
  }
  if (n == 1) {
    auto to_u = [](const MPoly& p) {
      std::vector<Scalar> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
      for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.mono.exp(0))] = t.coeff;
      return UPoly(std::move(c));
    };
    UPoly g = gcd(to_u(a), to_u(b));
    std::vector<MPoly::Term> terms;
    for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
      if (g.coeffs()[k].is_zero()) continue;
      std::array<int, 1> e{static_cast<int>(k)};
      terms.push_back({Monomial(e), g.coeffs()[k]});
    }
    return MPoly::from_terms(1, std::move(terms));
  }
  if (n == 2) return gcd(BinaryForm::from_mpoly(a), BinaryForm::from_mpoly(b)).to_mpoly();
  throw_invalid("poly_gcd.multivariate", "gcd is only supported for univariate polynomials and binary forms");
}

}  // namespace qlc
