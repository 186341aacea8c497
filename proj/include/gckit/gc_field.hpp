#ifndef GCKIT_GC_FIELD_HPP
#define GCKIT_GC_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gckit/cartan.hpp"
#include "gckit/gc_linear.hpp"
#include "gckit/matrix.hpp"

namespace gckit {

/// Skew matrix of polynomials: the Poisson candidate pi viewed as a bivector.
struct Bivector {
    PMat m;

    int dim() const { return m.rows(); }
};

/// A generalized complex structure on R^d with polynomial coefficients: a
/// 2d x 2d polynomial matrix in the coordinate frame satisfying the algebraic
/// constraints identically.  Integrability is checked separately
/// (nijenhuis_check), never assumed.
class FieldGC {
public:
    /// Validates J^2 = -1, pairing preservation and the block constraints as
    /// polynomial identities.
    static FieldGC from_matrix(const PMat& jmat, int d);
    static FieldGC from_constant(const ConstantGC& g);

    int d() const { return d_; }
    const PMat& jmat() const { return jmat_; }
    PMat j_block() const { return jmat_.block(0, 0, d_, d_); }
    PMat pi_block() const { return jmat_.block(0, d_, d_, d_); }
    PMat sigma_block() const { return jmat_.block(d_, 0, d_, d_); }
    PMat k_block() const { return jmat_.block(d_, d_, d_, d_); }

    bool is_real() const { return pmat_is_real(jmat_); }

    /// Apply the automorphism to a section.
    Section apply(const Section& s) const;

    bool operator==(const FieldGC& o) const { return jmat_ == o.jmat_; }

private:
    int d_;
    PMat jmat_;

    FieldGC(int d, PMat jmat) : d_(d), jmat_(std::move(jmat)) {}
};

/// Frame section (d/dx_i, 0) or (0, dx_i) of the generalized tangent space.
Section frame_vector(int d, int i);
Section frame_covector(int d, int i);

/// Courant-Nijenhuis tensor
///   N(A,B) = [[JA,JB]] - J[[JA,B]] - J[[A,JB]] - [[A,B]].
Section nijenhuis(const FieldGC& g, const Section& a, const Section& b);

/// True iff the tensor vanishes on all pairs of coordinate frame sections.
bool nijenhuis_check(const FieldGC& g);

struct IntegrabilityReport {
    bool frame_ok = false;
    bool random_ok = false;
    int frame_pairs = 0;
    int random_pairs = 0;
    std::string first_failure; // empty when both scans pass
    bool agree() const { return frame_ok == random_ok; }
};

/// Frame-pair scan plus a seeded random polynomial-section spot check.  The
/// two verdicts are reported separately: the tensor property is relied on
/// only while they agree.
IntegrabilityReport nijenhuis_report(const FieldGC& g, int random_pairs, uint32_t seed);

/// Upper-right block of the automorphism.
Bivector poisson(const FieldGC& g);

/// {f, g} = X_f(g) with X_f = pi(df).
Polynomial poisson_bracket(const Bivector& pi, const Polynomial& f, const Polynomial& g);
/// {{f,g},h} + {{g,h},f} + {{h,f},g}.
Polynomial jacobiator(const Bivector& pi, const Polynomial& f, const Polynomial& g,
                      const Polynomial& h);

/// J(0, df) = (X_f, xi_f).  X_f agrees with pi(df); both are real for real f.
std::pair<VectorField, OneForm> hamiltonian_pair(const FieldGC& g, const Polynomial& f);

struct XiIdentityReport {
    OneForm product_residual;  ///< xi_{f h} - f xi_h - h xi_f
    OneForm bracket_residual;  ///< xi_{{f,h}} - (L_{X_f} xi_h - iota_{X_h} d xi_f)
    bool ok() const { return product_residual.is_zero() && bracket_residual.is_zero(); }
};

/// Evaluates both derivation identities of the map f -> xi_f, exactly.
XiIdentityReport check_xi_identities(const FieldGC& g, const Polynomial& f,
                                     const Polynomial& h);

struct FlowEpsilonReport {
    bool supported = false;
    KForm residual; ///< numerator of L_{X_f} eps - d xi_f over det(pi)^2
    bool ok() const { return supported && residual.is_zero(); }
};

/// Checks L_{X_f}(eps) = (d xi_f)|_E in the generically-full-E case, where
/// eps is the global 2-form pi^{-1}(i - J) over the fraction field; the
/// identity is cleared of denominators and tested as a polynomial.  Throws
/// UnsupportedError when det(pi) vanishes identically.
FlowEpsilonReport check_flow_epsilon(const FieldGC& g, const Polynomial& f);

/// Substitute a rational point into the coefficients.
ConstantGC evaluate_at(const FieldGC& g, const std::vector<Rational>& point);
/// Rank of the Poisson tensor at the point; always even.
int rank_at(const FieldGC& g, const std::vector<Rational>& point);

/// exp(B) J exp(-B) for a polynomial 2-form B (as a skew component matrix).
/// Closedness of B is the caller's responsibility; it is what preserves
/// integrability.
FieldGC b_transform_field(const FieldGC& g, const PMat& b);

/// Symplectic-type structure for a pointwise-invertible polynomial 2-form
/// whose determinant is a nonzero constant (so the inverse stays polynomial).
FieldGC symplectic_field(const KForm& omega);

std::vector<Gaussian> to_gaussian_point(const std::vector<Rational>& point);

} // namespace gckit

#endif
