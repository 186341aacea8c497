#ifndef GCKIT_NORMAL_FORM_HPP
#define GCKIT_NORMAL_FORM_HPP

#include "gckit/cartan.hpp"
#include "gckit/matrix.hpp"

namespace gckit {

/// Product chart R^2 x R^n_dim with leaf coordinates (a, b) = (variables
/// 0, 1) and transverse coordinates n_1..n_{n_dim} (variables 2..).  The leaf
/// Hamiltonian fields are X_p = -d/db and X_q = +d/da; their flows are the
/// commuting translations
///   phi_s(a, b, n) = (a, b - s, n),   psi_t(a, b, n) = (a + t, b, n),
/// so pullback stays polynomial and the integrals below are exact.
struct ProductChart {
    int n_dim = 0;

    int nvars() const { return 2 + n_dim; }
    VectorField x_p() const;
    VectorField x_q() const;
};

/// Slice data for the two-form extension: cross(i, j) = B'(s_i, n_j) along
/// {a = b = 0}, a polynomial in the transverse coordinates only.
struct LeafFamilyB {
    PMat cross; // 2 x n_dim
};

/// The unique closed extension B' with B'(s_i, s_k) = 0, the given cross
/// terms (independent of the leaf coordinates), and
///   B'(n_j, n_l) = sum_i x_i (n_j B'(s_i, n_l) - n_l B'(s_i, n_j)).
KForm extend_bfield(const ProductChart& chart, const LeafFamilyB& fam);

/// The four closedness identity families for the extension, one residual per
/// index combination, kept separate so each can be verified individually.
struct ExtendIdentities {
    std::vector<Polynomial> sss; ///< d B'(s_i, s_k, s_s)
    std::vector<Polynomial> ssn; ///< d B'(s_i, s_k, n_j)
    std::vector<Polynomial> snn; ///< d B'(s_i, n_j, n_l)
    std::vector<Polynomial> nnn; ///< d B'(n_j, n_l, n_t)

    bool all_zero() const;
};
ExtendIdentities extend_bfield_identities(const ProductChart& chart, const LeafFamilyB& fam);

enum class FtcForm {
    leaf_p, ///< tau = phi_b^* tau_(a,0,n) - int_0^b (phi_{b-s}^* L_{X_p} tau) ds
    leaf_q, ///< tau = psi_{-a}^* tau_(0,b,n) + int_0^a (psi_{t-a}^* L_{X_q} tau) dt
};

/// Left-minus-right residual of the chosen flow-integral identity, evaluated
/// by exact pullback substitution and polynomial integration (expected zero).
KForm ftc_identity(const ProductChart& chart, const KForm& tau, FtcForm which);

/// The flow-integral two-form
///   B_(a,b,n) = int_0^a (d xi_q)(t,0,n) dt - int_0^b (d xi_p)(a,s,n) ds.
/// Preconditions (checked): L_{X_p} xi_q = iota_{X_q} d xi_p,
/// L_{X_q} xi_p = iota_{X_p} d xi_q, L_{X_p} xi_p = iota_{X_p} d xi_p,
/// L_{X_q} xi_q = iota_{X_q} d xi_q, and both forms vanish along {a = b = 0}.
/// Postconditions (verified before returning): L_{X_p} B = d xi_p,
/// L_{X_q} B = d xi_q, iota_{X_p} B = xi_p, iota_{X_q} B = xi_q, d B = 0.
KForm step3_bfield(const ProductChart& chart, const OneForm& xi_p, const OneForm& xi_q);

struct Step3Identities {
    KForm lie_p;    ///< L_{X_p} B - d xi_p
    KForm lie_q;    ///< L_{X_q} B - d xi_q
    OneForm iota_p; ///< iota_{X_p} B - xi_p
    OneForm iota_q; ///< iota_{X_q} B - xi_q
    KForm db;       ///< d B

    bool all_zero() const;
};
Step3Identities step3_identities(const ProductChart& chart, const OneForm& xi_p,
                                 const OneForm& xi_q, const KForm& b);

} // namespace gckit

#endif
