#include "qlc/stability.hpp"

#include <algorithm>
#include <limits>

#include "qlc/error.hpp"
#include "qlc/segre.hpp"

namespace qlc::stability {

void validate_so6_weights(std::span<const int> w) {
  if (w.size() != 6) throw_invalid("weights.length", "SO(6) weights need 6 entries");
  if (!(w[0] >= w[1] && w[1] >= w[2] && w[2] >= 0)) {
    throw_invalid("weights.order", "SO(6) weights need r1 >= r2 >= r3 >= 0");
  }
  for (std::size_t i = 0; i < 3; ++i)
    if (w[i + 3] != -w[i]) throw_invalid("weights.pairing", "SO(6) weights need r(i+3) = -r(i)");
}

void validate_sl4_weights(std::span<const int> w) {
  if (w.size() != 4) throw_invalid("weights.length", "SL(4) weights need 4 entries");
  if (!(w[0] >= w[1] && w[1] >= w[2] && w[2] >= w[3])) {
    throw_invalid("weights.order", "SL(4) weights need r0 >= r1 >= r2 >= r3");
  }
  if (w[0] + w[1] + w[2] + w[3] != 0) throw_invalid("weights.sum", "SL(4) weights must sum to zero");
}

ScalarMatrix trace_zero_representative(const Pencil& p) {
  if (!(p.G() == ScalarMatrix::identity(kDim, Scalar(1)))) {
    throw_invalid("stability.not_klein", "trace-zero representative needs G = I; convert with the Klein frame first");
  }
  ScalarMatrix shift = p.G();
  shift.scale(trace(p.F()) / Scalar(6));
  return p.F() - shift;
}

int mu_quadric(const ScalarMatrix& Q, std::span<const int> w) {
  validate_so6_weights(w);
  if (Q.rows() != kDim || Q.cols() != kDim) throw_invalid("stability.shape", "quadric must be 6x6");
  if (Q.is_zero()) throw_invalid("stability.zero", "zero quadric");
  int mu = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      if (!Q(i, j).is_zero()) mu = std::max(mu, w[i] + w[j]);
  return mu;
}

const std::vector<std::pair<int, int>>& quadric_pattern_pairs() {
  static const std::vector<std::pair<int, int>> pairs{{1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 6}};
  return pairs;
}

bool unstable_pattern_quadric(const ScalarMatrix& Q) {
  if (Q.rows() != kDim || Q.cols() != kDim) throw_invalid("stability.shape", "quadric must be 6x6");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!Q(i, j).is_zero()) return false;
  for (auto [i, j] : quadric_pattern_pairs())
    if (!Q(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)).is_zero()) return false;
  return true;
}

bool segre_semistable(const SegreSymbol& s) { return s.r() >= 2; }

bool segre_semistable(const Pencil& p) { return segre_semistable(segre::segre_symbol(p)); }

const std::vector<std::string>& unstable_irreducible_symbols() {
  static const std::vector<std::string> list{"[6]", "[(51)]", "[(42)]", "[(33)]", "[(411)]", "[(321)]", "[(222)]"};
  return list;
}

void validate_quartic(const MPoly& q) {
  if (q.is_zero()) throw_invalid("quartic.zero", "zero quartic");
  if (q.nvars() != 4 || !q.is_homogeneous() || q.degree() != 4) {
    throw_invalid("quartic.shape", "expected a homogeneous quartic in 4 variables");
  }
}

int mu_quartic(const MPoly& q, std::span<const int> w) {
  validate_sl4_weights(w);
  validate_quartic(q);
  int mu = std::numeric_limits<int>::min();
  for (const auto& t : q.terms()) {
    int s = 0;
    for (std::size_t k = 0; k < 4; ++k) s += w[k] * t.mono.exp(k);
    mu = std::max(mu, s);
  }
  return mu;
}

const std::vector<std::array<int, 4>>& quartic_pattern() {
  static const std::vector<std::array<int, 4>> pat{
      {4, 0, 0, 0}, {3, 1, 0, 0}, {3, 0, 1, 0}, {3, 0, 0, 1}, {2, 2, 0, 0},
      {2, 1, 1, 0}, {2, 1, 0, 1}, {2, 0, 2, 0}, {2, 0, 1, 1}, {2, 0, 0, 2},
      {1, 3, 0, 0}, {1, 2, 1, 0}, {1, 2, 0, 1}, {1, 1, 2, 0}, {1, 1, 1, 1},
  };
  return pat;
}

bool unstable_pattern_quartic(const MPoly& q) {
  validate_quartic(q);
  for (const auto& e : quartic_pattern())
    if (!q.coeff(e).is_zero()) return false;
  return true;
}

namespace {

std::vector<Scalar> normalize_point(std::span<const Scalar> p, std::size_t& chart) {
  chart = p.size();
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!p[k].is_zero()) {
      chart = k;
      break;
    }
  if (chart == p.size()) throw_invalid("point.zero", "the zero vector is not a projective point");
  Scalar inv = p[chart].inverse();
  std::vector<Scalar> out;
  for (const auto& x : p) out.push_back(x * inv);
  return out;
}

// f(p + y) with the chart coordinate fixed at 1; y ranges over the other coordinates.
MPoly local_expansion(const MPoly& f, std::span<const Scalar> p, std::size_t chart) {
  const std::size_t n = p.size();
  std::vector<MPoly> img;
  std::size_t v = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == chart) {
      img.push_back(MPoly::constant(n - 1, Scalar(1)));
    } else {
      img.push_back(MPoly::constant(n - 1, p[k]) + MPoly::variable(n - 1, v++));
    }
  }
  return f.substitute(img);
}

std::vector<std::vector<Scalar>> sign_points(std::size_t n) {
  // projective points with entries in {0, 1, -1}, first nonzero entry 1
  std::vector<std::vector<Scalar>> out;
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<Scalar> pt(n);
    std::size_t c = code;
    for (std::size_t k = 0; k < n; ++k) {
      int d = static_cast<int>(c % 3);
      c /= 3;
      pt[k] = Scalar(d == 2 ? -1 : d);
    }
    auto first = std::find_if(pt.begin(), pt.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (first->is_one()) out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace

TriplePointReport triple_point_report(const MPoly& q, std::span<const Scalar> p, std::optional<std::vector<Scalar>> r) {
  validate_quartic(q);
  if (p.size() != 4) throw_invalid("point.length", "points of P^3 have 4 coordinates");
  std::size_t chart;
  auto pn = normalize_point(p, chart);
  MPoly loc = local_expansion(q, pn, chart);
  TriplePointReport rep;
  rep.on_surface = loc.homogeneous_part(0).is_zero();
  rep.is_triple = rep.on_surface && loc.homogeneous_part(1).is_zero() && loc.homogeneous_part(2).is_zero();
  rep.tangent_cone = loc.homogeneous_part(3);
  if (r) {
    if (r->size() != 3) throw_invalid("point.length", "cone points have 3 coordinates");
    const MPoly& c = rep.tangent_cone;
    bool singular = true;
    for (std::size_t k = 0; k < 3 && singular; ++k) singular = c.derivative(k).evaluate(*r).is_zero();
    ScalarMatrix h(3, 3);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) h(a, b) = c.derivative(a).derivative(b).evaluate(*r);
    rep.r_singular = singular;
    rep.hessian_rank = rank(h);
    rep.cusp_at = singular && !c.is_zero() && *rep.hessian_rank == 1;
  }
  return rep;
}

bool TriplePointSearch::has_cusp() const {
  return std::any_of(singular_cone_points.begin(), singular_cone_points.end(),
                     [](const CuspSearchHit& h) { return h.hessian_rank == 1; });
}

TriplePointSearch search_triple_points(const MPoly& q) {
  validate_quartic(q);
  TriplePointSearch out;
  const auto cone_pts = sign_points(3);
  for (const auto& p : sign_points(4)) {
    auto rep = triple_point_report(q, p);
    if (!rep.is_triple) continue;
    out.triple_points.push_back(p);
    if (rep.tangent_cone.is_zero()) continue;  // point of multiplicity 4: no cubic cone
    for (const auto& r : cone_pts) {
      auto rr = triple_point_report(q, p, r);
      if (*rr.r_singular) out.singular_cone_points.push_back({p, r, *rr.hessian_rank});
    }
  }
  return out;
}

}  // namespace qlc::stability
