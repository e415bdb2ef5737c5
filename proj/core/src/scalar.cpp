#include "qlc/scalar.hpp"

#include <cctype>

#include "qlc/error.hpp"

namespace qlc {
namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  std::string s(text);
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  if (s.front() == '+') s.erase(0, 1);
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t k = 0;
    if (allow_sign && part[0] == '-') k = 1;
    if (k == part.size()) return false;
    for (; k < part.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) return false;
    }
    return true;
  };
  std::string_view num = std::string_view(s).substr(0, slash);
  if (!digits_ok(num, true)) {
    throw_invalid("scalar.syntax", "malformed scalar '" + std::string(whole) + "'");
  }
  mpq_class q;
  if (slash == std::string::npos) {
    q = mpq_class(mpz_class(std::string(num)));
  } else {
    std::string_view den = std::string_view(s).substr(slash + 1);
    if (!digits_ok(den, false)) {
      throw_invalid("scalar.syntax", "malformed scalar '" + std::string(whole) + "'");
    }
    mpz_class d(std::string{den});
    if (d == 0) throw_invalid("scalar.zero_denominator", "zero denominator in '" + std::string(whole) + "'");
    q = mpq_class(mpz_class(std::string(num)), d);
    q.canonicalize();
  }
  return q;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw_invalid("scalar.syntax", "empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s, text));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // split at the last sign that is not the leading character
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Scalar(mpq_class(0), parse_rational(s, text));
  return Scalar(parse_rational(s.substr(0, split), text),
                parse_rational(s.substr(split), text));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw_invalid("scalar.division_by_zero", "division by zero");
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw_invalid("scalar.division_by_zero", "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return rational_str(re_);
  std::string imag = rational_str(im_) + "*i";
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return rational_str(re_) + "+" + imag;
  return rational_str(re_) + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

std::optional<Scalar> exact_sqrt(const Scalar& s) {
  if (s.is_real()) {
    if (sgn(s.re()) >= 0) {
      if (auto r = rational_sqrt(s.re())) return Scalar(*r);
      return std::nullopt;
    }
    if (auto r = rational_sqrt(-s.re())) return Scalar(mpq_class(0), *r);
    return std::nullopt;
  }
  // (x + iy)^2 = a + ib  =>  x^2 = (a + |s|)/2, y = b / (2x)
  auto modulus = rational_sqrt(s.norm());
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt((s.re() + *modulus) / 2);
  if (!x || sgn(*x) == 0) return std::nullopt;
  mpq_class y = s.im() / (2 * *x);
  return Scalar(*x, y);
}

}  // namespace qlc
