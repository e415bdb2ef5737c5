#pragma once

#include <vector>

#include "qlc/scalar.hpp"
#include "qlc/upoly.hpp"

namespace qlc {

/// Distinct roots of f lying in Q(i), sorted by Scalar order.
///
/// Roots are isolated numerically (Aberth iteration on the squarefree part),
/// recognized by continued fractions and then verified exactly, so every
/// returned value is an exact root. A root whose height is beyond the
/// recognizer's reach is silently missed; callers that need all roots compare
/// the count against the squarefree degree (see splits_over_gaussian).
std::vector<Scalar> gaussian_rational_roots(const UPoly& f);

/// True iff f is a product of linear factors over Q(i).
bool splits_over_gaussian(const UPoly& f);

/// Best rational approximation p/q of x with q <= max_den.
mpq_class rational_approx(long double x, long max_den);

}  // namespace qlc
