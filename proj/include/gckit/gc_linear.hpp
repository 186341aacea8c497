#ifndef GCKIT_GC_LINEAR_HPP
#define GCKIT_GC_LINEAR_HPP

#include <vector>

#include "gckit/matrix.hpp"
#include "gckit/subspace.hpp"

namespace gckit {

/// V + V* for V = R^n, with the standard symmetric pairing
/// <(X,xi),(Y,eta)> = xi(Y) + eta(X) (no 1/2 factor), whose Gram matrix in
/// the standard basis is [[0,I],[I,0]]: symmetric, nondegenerate, split
/// signature (n,n).
struct PairingSpace {
    int n = 0;
    GMat gram;

    static PairingSpace standard(int n);
};

/// The pair (E, eps) together with the leaf data (S, omega).
///   E = projection of the eigenspace to V_C, eps the induced 2-form on E,
///   S the real subspace with S_C = E n conj(E), omega = Im(eps|_S).
struct EpsilonData {
    Subspace e_space;
    GMat eps;   // in the echelon basis of E
    Subspace s_space;
    GMat omega; // in the echelon basis of S
};

/// A constant generalized complex structure on R^n: an automorphism J of
/// V + V* with J^2 = -1 preserving the pairing, equivalently its
/// +i-eigenspace L, isotropic with L + conj(L) = everything.
class ConstantGC {
public:
    /// Build from the automorphism matrix (2n x 2n, real entries).
    /// Validates every structure identity and derives the eigenspace.
    static ConstantGC from_automorphism(const GMat& jmat, const PairingSpace& space);
    /// Build from the +i-eigenspace; round-trips with from_automorphism.
    static ConstantGC from_subspace(const Subspace& l, const PairingSpace& space);

    const PairingSpace& space() const { return space_; }
    int n() const { return space_.n; }
    const GMat& jmat() const { return jmat_; }
    const Subspace& eigenspace() const { return l_; }

    GMat j_block() const { return jmat_.block(0, 0, n(), n()); }
    GMat pi_block() const { return jmat_.block(0, n(), n(), n()); }
    GMat sigma_block() const { return jmat_.block(n(), 0, n(), n()); }
    GMat k_block() const { return jmat_.block(n(), n(), n(), n()); }

    /// A covector xi with (x, xi) in L; requires x in E.
    std::vector<Gaussian> lift_form(const std::vector<Gaussian>& x) const;
    /// eps(x, y) = xi(y) for any lift (x, xi); well defined by isotropy.
    Gaussian eps_eval(const std::vector<Gaussian>& x, const std::vector<Gaussian>& y) const;

    bool operator==(const ConstantGC& o) const { return jmat_ == o.jmat_; }

private:
    PairingSpace space_;
    GMat jmat_;
    Subspace l_;

    ConstantGC(PairingSpace space, GMat jmat, Subspace l);
};

/// exp(B) = [[1,0],[B,1]] acting on V + V*.
GMat exp_b(int n, const GMat& b);

EpsilonData extract_es(const ConstantGC& g);

/// exp(B) J exp(-B) for a real skew B.  Fixes E, S, omega and shifts eps by
/// B restricted to E.
ConstantGC b_transform(const ConstantGC& g, const GMat& b);

struct InducedSubspace {
    Subspace w;    ///< echelonized W; its basis is the coordinate frame below
    Subspace l_w;  ///< projection of L n (W_C + V*_C), in W-coordinates
    bool is_gc;    ///< l_w n conj(l_w) = 0
};

/// L_W and the generalized complex subspace verdict for a real subspace W.
InducedSubspace induced_subspace(const ConstantGC& g, const Subspace& w);

/// The structure induced on a GC subspace, in the echelon basis of W.
ConstantGC induced_structure(const ConstantGC& g, const Subspace& w);

/// Leafwise criterion: W n S is a symplectic subspace of S and
/// W_C = (W_C n E) + (W_C n conj(E)).  Agrees with induced_subspace().is_gc.
bool gc_subspace_criterion(const ConstantGC& g, const Subspace& w);

/// C_W: the projection to V_C of the annihilator, inside conj(L), of
/// L n (W_C + V*_C).  Equals the complexified omega-orthogonal complement of
/// W n S in S whenever W + S = V.
Subspace orth_complement(const ConstantGC& g, const Subspace& w);

/// The same space computed directly from (S, omega) by Gaussian elimination;
/// kept as an independent route for cross-checking.
Subspace orth_complement_oracle(const ConstantGC& g, const Subspace& w);

/// The unique real skew B with B|_S0 = 0, B|_W = 0 whose transform splits g
/// into the direct sum of the structures induced on S0 and W.  Requires
/// V = S0 + W (direct), S0 inside S, and S0 omega-orthogonal to S n W.
GMat splitting_bfield(const ConstantGC& g, const Subspace& s0, const Subspace& w);

struct Decomposition {
    Subspace s0;
    Subspace w;
    GMat b;
};

/// Split off the leaf: S0 = S, W a deterministic coordinate complement
/// (greedy pivot completion), B = splitting_bfield(g, S, W).
Decomposition decompose(const ConstantGC& g);

/// Product structure on P + Q, L = L_P + L_Q.
ConstantGC direct_sum(const ConstantGC& p, const ConstantGC& q);

/// The same structure written in the coordinates given by the rows of
/// `basis_rows` (an invertible matrix of new basis vectors).
ConstantGC pullback_gc(const ConstantGC& g, const GMat& basis_rows);

// Standard building blocks.

/// Symplectic structure for the invertible skew matrix m of the map
/// X -> omega(., X); J = [[0, -m^{-1}],[m, 0]].  With this convention the
/// Hamiltonian field of p for omega = dp^dq is -d/dq.
ConstantGC symplectic_gc(const GMat& omega_map);
/// Complex structure: J = [[j,0],[0,-j^T]] for j^2 = -I.
ConstantGC complex_gc(const GMat& j);

} // namespace gckit

#endif
