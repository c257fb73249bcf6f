#ifndef GGR_LINEAR_SOLVE_HPP
#define GGR_LINEAR_SOLVE_HPP

#include <optional>
#include <vector>

#include "ggr/laurent.hpp"
#include "ggr/rational.hpp"

namespace ggr {

/// Solves sum_i x_i * columns[i] = target exactly over the rationals, one
/// equation per exponent.
///
/// Gaussian elimination on sparse rows; pivots are taken at the leftmost
/// available column, so the returned basic solution is supported on the
/// earliest linearly independent columns and every free column is zero.
/// Returns nullopt when target is not in the span.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<LaurentPoly> &columns,
                                                   const LaurentPoly &target);

} // namespace ggr

#endif // GGR_LINEAR_SOLVE_HPP
