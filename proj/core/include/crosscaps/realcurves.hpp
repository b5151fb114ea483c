#ifndef CROSSCAPS_REALCURVES_HPP
#define CROSSCAPS_REALCURVES_HPP

#include <complex>
#include <random>
#include <vector>

namespace crosscaps {

using Complex = std::complex<double>;

// Parameters of a rational map P^1 -> P^n equivariant for the fixed-point
// free involution [u,v] -> [-conj(v), conj(u)] upstairs and coordinatewise
// conjugation downstairs: a real coefficient vector A (a point of RP^n) and
// d/2 complex roots per coordinate.  The degree d must be even; for odd d
// the space of such maps is empty.
struct RealMapParams {
    int n = 1;                                // target dimension
    int degree = 2;                           // even, positive
    std::vector<double> coeffs;               // length n+1, not all zero
    std::vector<std::vector<Complex>> roots;  // (n+1) lists of d/2 roots
};

void validate(const RealMapParams& p);

// Tuple of n+1 degree-d homogeneous polynomials in (x, y); coefficient j
// multiplies x^(d-j) y^j.
struct PolyTuple {
    int degree = 0;
    std::vector<std::vector<Complex>> coords;  // each of length degree+1
};

void validate(const PolyTuple& t);

Complex eval(const std::vector<Complex>& poly, Complex x, Complex y);

// p_i(x,y) = A_i * prod_r (x - b_{i,r} y)(conj(b_{i,r}) x + y), expanded.
// Each factor satisfies q(-conj y, conj x) = -conj(q(x, y)), which is what
// makes the tuple equivariant.
PolyTuple build_map(const RealMapParams& p);

// Maximum projective deviation between u(eta([x,y])) and tau(u([x,y])) over
// random unit samples of P^1, measured by normalized coordinate cross
// products (scale- and phase-invariant).  A sample where both images vanish,
// or an identically zero coordinate polynomial, signals a degenerate tuple
// and raises an error.
double check_equivariance(const PolyTuple& t, int samples, double tol,
                          std::mt19937_64& rng);

// 1 iff the root orbit sets O_i = {b_{i,r}} union {-1/conj(b_{i,r})} have a
// common point on the Riemann sphere, matched in the chordal metric (the
// root b = 0 contributes the point at infinity).  Such parameter tuples
// produce coordinate polynomials with a common factor and are outside the
// domain of build_map's parametrization.
bool in_degenerate_locus(const RealMapParams& p, double tol = 1e-8);

}  // namespace crosscaps

#endif
