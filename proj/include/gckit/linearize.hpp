#ifndef GCKIT_LINEARIZE_HPP
#define GCKIT_LINEARIZE_HPP

#include <vector>

#include "gckit/gc_field.hpp"
#include "gckit/gc_linear.hpp"

namespace gckit {

/// First-order data of a structure at a rank-0 point: a complex Lie algebra
/// of complex dimension d/2 together with its real model, the quotient of
/// the functions vanishing at the point by those vanishing to second order,
/// carrying the complex-multiplication automorphism A with A^2 = -1 and
/// A[f,g] = [f, Ag].
struct ComplexLieAlgebra {
    int n_complex = 0;

    /// Complex structure constants: bracket(i, j) over the complex basis,
    /// entry k is the coefficient of basis vector k.
    std::vector<std::vector<std::vector<Gaussian>>> c;

    /// Real model: structure constants of the real bracket on dx_1..dx_d ...
    std::vector<std::vector<std::vector<Gaussian>>> real_c;
    /// ... the automorphism A = -J(m)^T acting on that basis ...
    GMat a_mat;
    /// ... and the chosen complex basis: column k of `complex_basis` is the
    /// real vector representing the k-th complex basis element (with A of it
    /// representing i times it).
    GMat complex_basis;

    int real_dim() const { return 2 * n_complex; }

    std::vector<Gaussian> bracket(const std::vector<Gaussian>& u,
                                  const std::vector<Gaussian>& v) const;

    bool is_abelian() const;
    /// Complex dimension of the span of all brackets.
    int derived_dim() const;
    /// Complex dimension of { v : [v, g] = 0 }.
    int center_dim() const;
};

/// A normalizing two-form at a point of vanishing Poisson tensor: for a
/// constant structure with pi = 0, returns the real skew B with
/// B = -eps on E x E, conjugate on the conjugate, zero across, so that the
/// exp(B)-transform has sigma = 0 (complex type).
GMat normalize_point(const ConstantGC& g0);

/// The first-order approximation at a rank-0 point: structure constants are
/// the degree-1 coefficients of the coordinate brackets at m, A is the action
/// of -J(m)^T on the cotangent model.  All algebra axioms are re-derived
/// checks; their failure signals non-integrable input.
ComplexLieAlgebra linearize(const FieldGC& g, const std::vector<Rational>& m);

/// Structure constants under a complex change of basis (columns of t are the
/// new basis vectors over the old one).
ComplexLieAlgebra change_basis(const ComplexLieAlgebra& alg,
                               const std::vector<std::vector<Gaussian>>& t);

/// Equality of the (abelian?, derived dimension, center dimension)
/// fingerprint; decisive for complex dimension <= 2, a necessary condition
/// above that.
bool same_fingerprint(const ComplexLieAlgebra& x, const ComplexLieAlgebra& y);

/// Explicit-basis test against the non-abelian two-dimensional complex Lie
/// algebra [e1, e2] = e1: finds u spanning the derived algebra and solves
/// [x, u] = u.  Decisive in complex dimension 2.
bool is_isomorphic_to_aff1(const ComplexLieAlgebra& alg);

} // namespace gckit

#endif
