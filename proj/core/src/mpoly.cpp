#include "qlc/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "qlc/error.hpp"

namespace qlc {

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > kMaxVars) throw_invalid("mpoly.too_many_variables", "at most 8 variables supported");
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] < 0 || exps[k] > 255) throw_invalid("mpoly.exponent_range", "exponent out of range");
    key_ |= static_cast<std::uint64_t>(exps[k]) << (8 * k);
  }
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (std::size_t k = 0; k < kMaxVars; ++k) d += exp(k);
  return d;
}

std::vector<int> Monomial::exps(std::size_t nvars) const {
  std::vector<int> e(nvars);
  for (std::size_t k = 0; k < nvars; ++k) e[k] = exp(k);
  return e;
}

bool Monomial::divides(const Monomial& other, std::size_t nvars) const noexcept {
  for (std::size_t k = 0; k < nvars; ++k) {
    if (exp(k) > other.exp(k)) return false;
  }
  return true;
}

bool grevlex_greater(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t k = nvars; k-- > 0;) {
    int ea = a.exp(k), eb = b.exp(k);
    if (ea != eb) return ea < eb;
  }
  return false;
}

namespace {

void sort_terms(std::vector<MPoly::Term>& terms, std::size_t nvars) {
  std::sort(terms.begin(), terms.end(), [nvars](const MPoly::Term& a, const MPoly::Term& b) {
    return grevlex_greater(a.mono, b.mono, nvars);
  });
}

}  // namespace

MPoly::MPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw_invalid("mpoly.too_many_variables", "at most 8 variables supported");
}

MPoly MPoly::constant(std::size_t nvars, const Scalar& c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t k) {
  std::vector<int> e(nvars, 0);
  e.at(k) = 1;
  return monomial(nvars, e);
}

MPoly MPoly::monomial(std::size_t nvars, std::span<const int> exps, const Scalar& c) {
  if (exps.size() != nvars) throw_invalid("mpoly.arity", "exponent vector length mismatch");
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(exps), c});
  return p;
}

MPoly MPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  MPoly p(nvars);
  std::unordered_map<std::uint64_t, Scalar> acc;
  for (auto& t : terms) acc[t.mono.key()] += t.coeff;
  for (auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    std::vector<int> e(nvars);
    for (std::size_t k = 0; k < nvars; ++k) e[k] = static_cast<int>((key >> (8 * k)) & 0xffu);
    p.terms_.push_back({Monomial(e), std::move(c)});
  }
  sort_terms(p.terms_, nvars);
  return p;
}

bool MPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.key() == 0);
}

int MPoly::degree() const noexcept { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

bool MPoly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

int MPoly::degree_in(std::size_t var) const noexcept {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
  return d;
}

Scalar MPoly::coeff(std::span<const int> exps) const {
  Monomial m(exps);
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return Scalar(0);
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return *this * terms_.front().coeff.inverse();
}

MPoly MPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  std::vector<int> one(nvars_, 0);
  one.at(var) = 1;
  Monomial step(one);
  for (const auto& t : terms_) {
    int e = t.mono.exp(var);
    if (e == 0) continue;
    out.push_back({t.mono / step, t.coeff * Scalar(e)});
  }
  MPoly p(nvars_);
  p.terms_ = std::move(out);
  sort_terms(p.terms_, nvars_);
  return p;
}

MPoly MPoly::homogeneous_part(int d) const {
  MPoly p(nvars_);
  for (const auto& t : terms_) {
    if (t.mono.degree() == d) p.terms_.push_back(t);
  }
  return p;
}

Scalar MPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw_invalid("mpoly.arity", "evaluation point has wrong dimension");
  Scalar acc;
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t k = 0; k < nvars_; ++k) {
      for (int e = t.mono.exp(k); e > 0; --e) v *= point[k];
    }
    acc += v;
  }
  return acc;
}

MPoly MPoly::substitute(std::span<const MPoly> images) const {
  if (images.size() != nvars_) throw_invalid("mpoly.arity", "substitution has wrong arity");
  std::size_t target = 0;
  for (const auto& im : images) target = std::max(target, im.nvars());
  // cache powers per variable
  std::vector<std::vector<MPoly>> powers(nvars_);
  MPoly acc(target);
  for (const auto& t : terms_) {
    MPoly v = MPoly::constant(target, t.coeff);
    for (std::size_t k = 0; k < nvars_; ++k) {
      int e = t.mono.exp(k);
      if (e == 0) continue;
      auto& pk = powers[k];
      if (pk.empty()) pk.push_back(MPoly::constant(target, Scalar(1)));
      while (static_cast<int>(pk.size()) <= e) pk.push_back(pk.back() * images[k]);
      v = v * pk[static_cast<std::size_t>(e)];
    }
    acc += v;
  }
  return acc;
}

std::optional<MPoly> MPoly::divide_by_monomial(const Monomial& m) const {
  MPoly p(nvars_);
  for (const auto& t : terms_) {
    if (!m.divides(t.mono, nvars_)) return std::nullopt;
    p.terms_.push_back({t.mono / m, t.coeff});
  }
  return p;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void MPoly::adopt_nvars(const MPoly& o) {
  if (nvars_ == o.nvars_) return;
  if (is_zero() && nvars_ == 0) {
    nvars_ = o.nvars_;
    return;
  }
  if (o.is_zero() && o.nvars_ == 0) return;
  throw_invalid("mpoly.arity", "polynomials over different variable sets");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  adopt_nvars(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t a = 0, b = 0;
  while (a < terms_.size() || b < o.terms_.size()) {
    if (b == o.terms_.size() || (a < terms_.size() && grevlex_greater(terms_[a].mono, o.terms_[b].mono, nvars_))) {
      out.push_back(std::move(terms_[a++]));
    } else if (a == terms_.size() || grevlex_greater(o.terms_[b].mono, terms_[a].mono, nvars_)) {
      out.push_back(o.terms_[b++]);
    } else {
      Scalar c = terms_[a].coeff + o.terms_[b].coeff;
      if (!c.is_zero()) out.push_back({terms_[a].mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.nvars_);
  r.adopt_nvars(b);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.terms_.size() == 1 || a.terms_.size() == 1) {
    const MPoly& many = b.terms_.size() == 1 ? a : b;
    const MPoly::Term& one = b.terms_.size() == 1 ? b.terms_[0] : a.terms_[0];
    // multiplying by a single term preserves the order
    for (const auto& t : many.terms_) r.terms_.push_back({t.mono * one.mono, t.coeff * one.coeff});
    return r;
  }
  std::unordered_map<std::uint64_t, Scalar> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) acc[(x.mono * y.mono).key()] += x.coeff * y.coeff;
  }
  for (auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    std::vector<int> e(r.nvars_);
    for (std::size_t k = 0; k < r.nvars_; ++k) e[k] = static_cast<int>((key >> (8 * k)) & 0xffu);
    r.terms_.push_back({Monomial(e), std::move(c)});
  }
  sort_terms(r.terms_, r.nvars_);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string MPoly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.str();
    bool compound = !t.coeff.is_real() && sgn(t.coeff.re()) != 0;
    bool neg = !compound && c.front() == '-';
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (neg) c.erase(0, 1);
    bool has_vars = t.mono.key() != 0;
    if (compound) c = "(" + c + ")";
    if (!has_vars || c != "1") os << c;
    bool first_var = !has_vars || c == "1";
    for (std::size_t k = 0; k < nvars_; ++k) {
      int e = t.mono.exp(k);
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << (k < names.size() ? names[k] : "x" + std::to_string(k));
      if (e > 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

MPoly pow(const MPoly& p, unsigned k) {
  MPoly r = MPoly::constant(p.nvars(), Scalar(1));
  for (unsigned j = 0; j < k; ++j) r = r * p;
  return r;
}

std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw_invalid("mpoly.division_by_zero", "polynomial division by zero");
  const std::size_t n = std::max(a.nvars(), b.nvars());
  MPoly q(n);
  MPoly r = a;
  const auto& lb = b.leading_term();
  Scalar inv = lb.coeff.inverse();
  while (!r.is_zero()) {
    const auto& lr = r.leading_term();
    if (!lb.mono.divides(lr.mono, n)) return std::nullopt;
    std::vector<MPoly::Term> t{{lr.mono / lb.mono, lr.coeff * inv}};
    MPoly step = MPoly::from_terms(n, std::move(t));
    q += step;
    r -= step * b;
  }
  return q;
}

std::optional<MPoly> exact_sqrt(const MPoly& p) {
  if (p.is_zero()) return p;
  const std::size_t n = p.nvars();
  const auto& lt = p.leading_term();
  const auto lead_coeff = exact_sqrt(lt.coeff);
  if (!lead_coeff) return std::nullopt;
  std::vector<int> half(n);
  for (std::size_t k = 0; k < n; ++k) {
    int e = lt.mono.exp(k);
    if (e % 2) return std::nullopt;
    half[k] = e / 2;
  }
  MPoly root = MPoly::monomial(n, half, *lead_coeff);
  const Monomial lead_root(half);
  const Scalar twice_lead = Scalar(2) * *lead_coeff;
  const int max_terms = 1 << 12;
  for (int iter = 0; iter < max_terms; ++iter) {
    MPoly rem = p - root * root;
    if (rem.is_zero()) return root;
    const auto& lr = rem.leading_term();
    // rem's leading term must be 2 * lt(root) * (next term of the root)
    if (!lead_root.divides(lr.mono, n)) return std::nullopt;
    Monomial next = lr.mono / lead_root;
    if (!grevlex_greater(lead_root, next, n)) return std::nullopt;
    MPoly::Term t{next, lr.coeff / twice_lead};
    root += MPoly::from_terms(n, {t});
  }
  return std::nullopt;
}

bool proportional(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.monic() == b.monic();
}

}  // namespace qlc
