#pragma once

namespace lcpoly {

/*!
 * Appell F2(1, 1/2, 1/2, 3/2, 3/2; -p, -q) for p, q >= 0.
 *
 * Only this parameter point is supported. Its Euler integral is
 *
 *   1/4 int_0^1 int_0^1 u^{-1/2} v^{-1/2} / (1 + p u + q v) du dv
 *     = int_0^1 int_0^1 1 / (1 + p x^2 + q y^2) dx dy,
 *
 * which stays valid where the double series diverges (p or q >= 1). The
 * inner integral is done in closed form and the outer one adaptively.
 * Throws DomainError for negative or non-finite arguments.
 */
double appell_f2_restricted(double p, double q);

}  // namespace lcpoly
