#pragma once

#include <array>
#include <vector>

#include "qkz/matrix.hpp"
#include "qkz/scalar.hpp"

namespace qkz {

// Masses (m1, m2, m3, m4) of the four-dimensional limit.
using Masses = std::array<Rat, 4>;

// Tridiagonal first-order matrix on the window [-n, m], storage shifted by +n.
// Requires (m + m1)(m + m2) = 0 and (n + m3)(n + m4) = 0 so the window closes.
Matrix<Rat> r1_fourd(const Masses& mv, int m, int n, const Rat& Lambda);

// r_{i,j} at q = e^h, d1 = e^{m1 h}, d4 = e^{m4 h} and rational Lambda;
// entry k of the result is the h^k coefficient matrix, k <= order.
std::vector<Matrix<Rat>> r_jet_orders(int m, int n, const Rat& m1, const Rat& m4, const Rat& Lambda, int order);

// Operators on the basis x^j of the window; row i holds the image of x^i.
struct H4d {
  Matrix<Rat> H, A0, A1, theta;
};
H4d h4d_matrix(const Masses& mv, const Rat& kappa, const Rat& a, int m, int n, const Rat& Lambda);
// H - (kappa + 1 + a) theta == A0 + Lambda/(Lambda - 1) A1
bool kz_split_holds(const H4d& h, const Rat& kappa, const Rat& a, const Rat& Lambda);

// The 4x4 example display at m1 = -2, m3 = -1 on the window [-1, 2], entry by entry.
Matrix<Rat> r1_printed_example(const Rat& m2, const Rat& m4, const Rat& Lambda);

// Symbols of the two second-order operators in (x, z) with theta_x -> s,
// theta_z -> r, coefficients placed to the left.
struct SpinGauge {
  Rat c, e1, e2;  // x^c (z-1)^e1 z^e2
};
// kappa theta_z - theta_x(theta_x - A) + (x-z)/(1-z) P12 + z(1-x)/(x(1-z)) P34
Rat kz_symbol(const Rat& x, const Rat& z, const Rat& s, const Rat& r, const Rat& kappa, const Rat& A,
              const std::array<Rat, 2>& c12, const std::array<Rat, 2>& c34);
// The mass-form operator conjugated by the gauge, minus the spin form; zero
// iff the two agree at the sample point.
Rat spin_form_difference(const Masses& mv, const Rat& kappa, const Rat& a, const SpinGauge& g, const Rat& x,
                         const Rat& z, const Rat& s, const Rat& r);
// Unique gauge solving the identity; and the gauge as printed alongside it.
SpinGauge spin_gauge_solved(const Masses& mv, const Rat& kappa, const Rat& a);
SpinGauge spin_gauge_printed(const Masses& mv, const Rat& kappa, const Rat& a);

}  // namespace qkz
