#include "qlc/klein.hpp"

#include <algorithm>

#include "qlc/error.hpp"

namespace qlc::klein {

namespace {

bool all_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// L_ij = p_ij, antisymmetric
ScalarMatrix primal(const Line& p) {
  ScalarMatrix L(4, 4);
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = kPairs[k];
    L(i, j) = p[k];
    L(j, i) = -p[k];
  }
  return L;
}

// Dual matrix: its columns are planes through the line.
ScalarMatrix dual(const Line& p) {
  const Scalar &p01 = p[0], &p02 = p[1], &p03 = p[2], &p23 = p[3], &p31 = p[4], &p12 = p[5];
  return ScalarMatrix::from_rows({
      {Scalar(0), p23, p31, p12},
      {-p23, Scalar(0), p03, -p02},
      {-p31, -p03, Scalar(0), p01},
      {-p12, p02, -p01, Scalar(0)},
  });
}

}  // namespace

std::vector<Scalar> normalize_projective(std::span<const Scalar> v) {
  std::vector<Scalar> out(v.begin(), v.end());
  for (const auto& x : v)
    if (!x.is_zero()) {
      Scalar inv = x.inverse();
      for (auto& y : out) y *= inv;
      return out;
    }
  throw_invalid("point.zero", "the zero vector is not a projective point");
}

Line join(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != 4 || b.size() != 4) throw_invalid("point.length", "points of P^3 have 4 coordinates");
  Line p;
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = kPairs[k];
    p[k] = a[i] * b[j] - a[j] * b[i];
  }
  if (all_zero(p)) throw_invalid("klein.collinear", "join of projectively equal points");
  return p;
}

Scalar plucker_relation(const Line& p) { return p[0] * p[3] + p[1] * p[4] + p[2] * p[5]; }

Scalar polar(const Line& p, const Line& q) {
  return p[0] * q[3] + p[3] * q[0] + p[1] * q[4] + p[4] * q[1] + p[2] * q[5] + p[5] * q[2];
}

bool lines_equal(const Line& p, const Line& q) {
  if (all_zero(p) || all_zero(q)) return false;
  return normalize_projective(p) == normalize_projective(q);
}

Meet meet_point(const Line& x, const Line& y) {
  if (all_zero(x) || all_zero(y)) throw_invalid("klein.zero_line", "zero Plücker vector");
  if (lines_equal(x, y)) return {Meet::Kind::kEqualLines, {}};
  if (!polar(x, y).is_zero()) return {Meet::Kind::kSkew, {}};
  ScalarMatrix D = dual(x), L = primal(y);
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<Scalar> plane(4);
    for (std::size_t r = 0; r < 4; ++r) plane[r] = D(r, k);
    if (all_zero(plane)) continue;
    auto pt = mat_vec(L, plane);
    if (!all_zero(pt)) return {Meet::Kind::kPoint, normalize_projective(pt)};
  }
  throw_invalid("klein.meet", "meeting lines without a common point");
}

ScalarMatrix plucker_quadric() {
  ScalarMatrix g(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    g(i, i + 3) = Scalar(1);
    g(i + 3, i) = Scalar(1);
  }
  return g;
}

const KleinFrame& klein_frame() {
  static const KleinFrame frame = [] {
    ScalarMatrix K(6, 6);
    const Scalar half(1, 2), i = Scalar::i();
    for (std::size_t k = 0; k < 3; ++k) {
      K(2 * k, k) = Scalar(1);
      K(2 * k, k + 3) = half;
      K(2 * k + 1, k) = i;
      K(2 * k + 1, k + 3) = -i * half;
    }
    return KleinFrame{K, inverse(K)};
  }();
  return frame;
}

ScalarMatrix to_klein(const ScalarMatrix& q) {
  const auto& T = klein_frame().T;
  return T.transpose() * q * T;
}

ScalarMatrix to_plucker(const ScalarMatrix& q) {
  const auto& K = klein_frame().K;
  return K.transpose() * q * K;
}

ScalarMatrix wedge_square(const ScalarMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw_invalid("klein.shape", "wedge square needs a 4x4 matrix");
  if (!(det(m) == Scalar(1))) throw_invalid("klein.not_unimodular", "wedge square needs det M = 1");
  ScalarMatrix w(6, 6);
  for (std::size_t I = 0; I < 6; ++I)
    for (std::size_t J = 0; J < 6; ++J) {
      auto [i, j] = kPairs[I];
      auto [k, l] = kPairs[J];
      w(I, J) = m(i, k) * m(j, l) - m(i, l) * m(j, k);
    }
  return w;
}

namespace {

using Vec = std::vector<Scalar>;

Vec axpy(Vec u, const Scalar& c, const Vec& v) {
  for (std::size_t k = 0; k < u.size(); ++k) u[k] += c * v[k];
  return u;
}

Vec scaled(const Scalar& c, Vec u) {
  for (auto& x : u) x *= c;
  return u;
}

// Peels orthonormal vectors off the space, two at a time through isotropic
// vectors (a hyperbolic plane is x^2 + y^2 over Q(i)) or one at a time
// through vectors of square norm.
class FrameBuilder {
 public:
  explicit FrameBuilder(const ScalarMatrix& G) : G_(G), n_(G.rows()) {}

  ScalarMatrix build() {
    std::vector<Vec> basis;
    for (std::size_t k = 0; k < n_; ++k) {
      Vec e(n_);
      e[k] = Scalar(1);
      basis.push_back(std::move(e));
    }
    while (!basis.empty()) {
      if (basis.size() == 1) {
        auto s = exact_sqrt(B(basis[0], basis[0]));
        if (!s || s->is_zero()) fail();
        done_.push_back(scaled(s->inverse(), basis[0]));
        break;
      }
      if (basis.size() == 2) {
        if (!take_plane(basis[0], basis[1])) fail();
        break;
      }
      std::size_t added = basis.size() % 2 == 0 ? search_plane(basis) : 0;
      basis = complement(basis, added ? added : search(basis));
    }
    ScalarMatrix A(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i) A(i, j) = done_[j][i];
    return A;
  }

 private:
  [[noreturn]] static void fail() { throw_degenerate("klein.no_frame", "no orthonormal frame over Q(i) found"); }

  Scalar B(const Vec& u, const Vec& v) const {
    Scalar s;
    for (std::size_t i = 0; i < n_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!v[j].is_zero() && !G_(i, j).is_zero()) s += u[i] * G_(i, j) * v[j];
    }
    return s;
  }

  // Orthonormal pair spanning the plane of w and other, with w isotropic.
  void split_plane(const Vec& w, const Vec& other) {
    Vec z = scaled(B(w, other).inverse(), other);
    z = axpy(z, -B(z, z) / Scalar(2), w);
    done_.push_back(axpy(z, Scalar(1, 2), w));
    done_.push_back(scaled(Scalar::i(), axpy(scaled(Scalar(-1), z), Scalar(1, 2), w)));
  }

  // The plane spanned by u and v, solved exactly.
  bool take_plane(const Vec& u, const Vec& v) {
    Scalar a = B(u, u), b = B(u, v), c = B(v, v);
    if ((a * c - b * b).is_zero()) throw_invalid("klein.frame_input", "need a nondegenerate symmetric matrix");
    if (a.is_zero()) {
      split_plane(u, v);
      return true;
    }
    // a x^2 + 2 b x + c = 0 for w = x u + v
    if (auto r = exact_sqrt(b * b - a * c)) {
      split_plane(axpy(v, (r.value() - b) / a, u), u);
      return true;
    }
    if (auto s = exact_sqrt(a)) {
      Vec e = scaled(s->inverse(), u);
      Vec f = axpy(v, -B(v, e), e);
      if (auto t = exact_sqrt(B(f, f))) {
        done_.push_back(e);
        done_.push_back(scaled(t->inverse(), f));
        return true;
      }
    }
    return false;
  }

  // A plane spanned by two small integer combinations whose Gram determinant
  // is a square: it splits exactly, and so does its complement when the
  // space has square determinant. Returns 2, or 0 when nothing was found.
  std::size_t search_plane(const std::vector<Vec>& basis) {
    const std::size_t m = basis.size();
    ScalarMatrix M(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) M(i, j) = M(j, i) = B(basis[i], basis[j]);
    for (int h = 1; h <= (m <= 4 ? 3 : 2); ++h) {
      std::vector<std::vector<int>> cs;
      std::vector<int> c(m, -h);
      for (;;) {
        auto lead = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
        if (lead != c.end() && *lead > 0) cs.push_back(c);
        std::size_t k = 0;
        while (k < m && c[k] == h) c[k++] = -h;
        if (k == m) break;
        ++c[k];
      }
      // sparse combinations first keep the frame close to the input basis
      std::stable_sort(cs.begin(), cs.end(), [](const auto& x, const auto& y) {
        return std::count(x.begin(), x.end(), 0) > std::count(y.begin(), y.end(), 0);
      });
      std::vector<std::vector<Scalar>> Mc;
      std::vector<Scalar> q;
      for (const auto& x : cs) {
        std::vector<Scalar> row(m);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j)
            if (x[j] != 0) row[i] += M(i, j) * Scalar(x[j]);
        Scalar v;
        for (std::size_t i = 0; i < m; ++i)
          if (x[i] != 0) v += row[i] * Scalar(x[i]);
        Mc.push_back(std::move(row));
        q.push_back(std::move(v));
      }
      for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
          Scalar bab;
          for (std::size_t i = 0; i < m; ++i)
            if (cs[b][i] != 0) bab += Mc[a][i] * Scalar(cs[b][i]);
          Scalar d = q[a] * q[b] - bab * bab;
          if (d.is_zero() || !exact_sqrt(d)) continue;
          Vec x(n_), y(n_);
          for (std::size_t k = 0; k < m; ++k) {
            if (cs[a][k] != 0) x = axpy(x, Scalar(cs[a][k]), basis[k]);
            if (cs[b][k] != 0) y = axpy(y, Scalar(cs[b][k]), basis[k]);
          }
          if (take_plane(x, y)) return 2;
        }
    }
    return 0;
  }

  // Small combinations of the basis: integer coefficients by growing height,
  // then Gaussian integers for short bases. Returns the number of new
  // orthonormal vectors (1 or 2).
  std::size_t search(const std::vector<Vec>& basis) {
    const std::size_t m = basis.size();
    ScalarMatrix M(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) M(i, j) = M(j, i) = B(basis[i], basis[j]);
    for (int h = 1; h <= 4; ++h) {
      std::vector<Scalar> vals;
      for (int a = -h; a <= h; ++a) vals.emplace_back(a);
      if (auto got = sweep(basis, M, vals, [h](const std::vector<Scalar>& c) {
            for (const auto& x : c)
              if (abs(x.re()) == h) return true;
            return false;
          }))
        return *got;
    }
    if (m <= 3) {
      std::vector<Scalar> vals;
      for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) vals.push_back(Scalar(mpq_class(a), mpq_class(b)));
      if (auto got = sweep(basis, M, vals, [](const std::vector<Scalar>& c) {
            for (const auto& x : c)
              if (x.im() != 0) return true;
            return false;
          }))
        return *got;
    }
    fail();
  }

  // All coefficient vectors over vals accepted by keep and with first
  // nonzero entry having positive real part or, failing that, positive
  // imaginary part.
  template <class Keep>
  std::optional<std::size_t> sweep(const std::vector<Vec>& basis, const ScalarMatrix& M, const std::vector<Scalar>& vals,
                                   Keep keep) {
    const std::size_t m = basis.size();
    std::vector<std::size_t> idx(m, 0);
    std::vector<Scalar> c(m);
    for (;;) {
      for (std::size_t k = 0; k < m; ++k) c[k] = vals[idx[k]];
      auto lead = std::find_if(c.begin(), c.end(), [](const Scalar& x) { return !x.is_zero(); });
      if (lead != c.end() && (sgn(lead->re()) > 0 || (lead->re() == 0 && sgn(lead->im()) > 0)) && keep(c)) {
        Scalar q;
        for (std::size_t i = 0; i < m; ++i) {
          if (c[i].is_zero()) continue;
          Scalar row;
          for (std::size_t j = 0; j < m; ++j)
            if (!c[j].is_zero()) row += M(i, j) * c[j];
          q += row * c[i];
        }
        auto root = q.is_zero() ? std::optional<Scalar>() : exact_sqrt(q);
        if (q.is_zero() || root) {
          Vec v(n_);
          for (std::size_t k = 0; k < m; ++k)
            if (!c[k].is_zero()) v = axpy(v, c[k], basis[k]);
          if (root) {
            done_.push_back(scaled(root->inverse(), v));
            return 1;
          }
          for (const auto& u : basis)
            if (!B(v, u).is_zero()) {
              split_plane(v, u);
              return 2;
            }
          throw_invalid("klein.frame_input", "need a nondegenerate symmetric matrix");
        }
      }
      std::size_t k = 0;
      while (k < m && idx[k] + 1 == vals.size()) idx[k++] = 0;
      if (k == m) return std::nullopt;
      ++idx[k];
    }
  }

  // Basis of the orthogonal complement of the newest `added` vectors inside
  // span(basis), with denominators cleared.
  std::vector<Vec> complement(const std::vector<Vec>& basis, std::size_t added) {
    std::vector<Vec> proj;
    for (Vec u : basis) {
      for (std::size_t k = done_.size() - added; k < done_.size(); ++k) u = axpy(u, -B(u, done_[k]), done_[k]);
      proj.push_back(std::move(u));
    }
    std::vector<Vec> out;
    ScalarMatrix rows(0, n_);
    for (auto& u : proj) {
      ScalarMatrix trial(out.size() + 1, n_);
      for (std::size_t r = 0; r < out.size(); ++r)
        for (std::size_t j = 0; j < n_; ++j) trial(r, j) = out[r][j];
      for (std::size_t j = 0; j < n_; ++j) trial(out.size(), j) = u[j];
      if (rank(trial) == out.size() + 1) out.push_back(clear_denominators(u));
      if (out.size() == basis.size() - added) break;
    }
    return out;
  }

  static Vec clear_denominators(Vec v) {
    mpz_class l = 1;
    for (const auto& x : v) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
    }
    mpz_class g = 0;
    for (const auto& x : v) {
      mpq_class re = x.re() * l, im = x.im() * l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re.get_num_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im.get_num_mpz_t());
    }
    if (g == 0) return v;
    return scaled(Scalar(mpq_class(l, g)), std::move(v));
  }

  const ScalarMatrix& G_;
  std::size_t n_;
  std::vector<Vec> done_;
};

}  // namespace

ScalarMatrix orthonormal_frame(const ScalarMatrix& G) {
  if (!G.is_square() || !G.is_symmetric()) throw_invalid("klein.frame_input", "need a symmetric matrix");
  return FrameBuilder(G).build();
}

}  // namespace qlc::klein
