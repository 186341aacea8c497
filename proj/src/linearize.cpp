#include "gckit/linearize.hpp"

#include "gckit/errors.hpp"

namespace gckit {

namespace {

// Decompose a real vector as e + conj(e) with e in the given subspace
// (assumed to satisfy E + conj(E) = ambient, E n conj(E) = 0).
std::vector<Gaussian> half_of(const Subspace& e_space, const std::vector<Gaussian>& u) {
    int n = e_space.ambient_dim();
    int df = e_space.dim();
    GMat sys(n, 2 * df);
    for (int i = 0; i < df; ++i)
        for (int j = 0; j < n; ++j) {
            const Gaussian& fij = e_space.basis()(i, j);
            sys(j, i) = Gaussian(2 * fij.re);
            sys(j, df + i) = Gaussian(-2 * fij.im);
        }
    std::vector<Gaussian> coef;
    if (!solve(sys, u, coef))
        throw ConstraintError("vector is not in E + conj(E)");
    std::vector<Gaussian> e(n, Gaussian());
    for (int i = 0; i < df; ++i) {
        Gaussian ci(coef[i].re, coef[df + i].re);
        for (int j = 0; j < n; ++j)
            e[j] += ci * e_space.basis()(i, j);
    }
    return e;
}

} // namespace

GMat normalize_point(const ConstantGC& g0) {
    int n = g0.n();
    if (!g0.pi_block().is_zero())
        throw ConstraintError("pi != 0 at the point: split off the leaf first");
    EpsilonData es = extract_es(g0);
    if (es.s_space.dim() != 0)
        throw ConstraintError("S != 0 although pi = 0");

    GMat b(n, n);
    std::vector<std::vector<Gaussian>> halves;
    for (int k = 0; k < n; ++k) {
        std::vector<Gaussian> u(n, Gaussian());
        u[k] = Gaussian(1);
        halves.push_back(half_of(es.e_space, u));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b(i, j) = Gaussian(-2 * g0.eps_eval(halves[i], halves[j]).re);
    if (!gmat_is_skew(b) || !gmat_is_real(b))
        throw ConstraintError("normalizing form is not real skew");
    if (!b_transform(g0, b).sigma_block().is_zero())
        throw ConstraintError("normalizing form does not produce a complex structure");
    return b;
}

std::vector<Gaussian> ComplexLieAlgebra::bracket(const std::vector<Gaussian>& u,
                                                 const std::vector<Gaussian>& v) const {
    if (static_cast<int>(u.size()) != n_complex || static_cast<int>(v.size()) != n_complex)
        throw DimensionError("bracket argument has wrong dimension");
    std::vector<Gaussian> out(n_complex, Gaussian());
    for (int i = 0; i < n_complex; ++i)
        for (int j = 0; j < n_complex; ++j) {
            Gaussian f = u[i] * v[j];
            if (f.is_zero())
                continue;
            for (int k = 0; k < n_complex; ++k)
                out[k] += f * c[i][j][k];
        }
    return out;
}

bool ComplexLieAlgebra::is_abelian() const {
    for (int i = 0; i < n_complex; ++i)
        for (int j = 0; j < n_complex; ++j)
            for (int k = 0; k < n_complex; ++k)
                if (!c[i][j][k].is_zero())
                    return false;
    return true;
}

int ComplexLieAlgebra::derived_dim() const {
    GMat rows(n_complex * n_complex, n_complex);
    int r = 0;
    for (int i = 0; i < n_complex; ++i)
        for (int j = i + 1; j < n_complex; ++j) {
            for (int k = 0; k < n_complex; ++k)
                rows(r, k) = c[i][j][k];
            ++r;
        }
    return rank(rows);
}

int ComplexLieAlgebra::center_dim() const {
    // v central iff sum_i v_i c[i][j][k] = 0 for all j, k
    GMat sys(n_complex * n_complex, n_complex);
    for (int j = 0; j < n_complex; ++j)
        for (int k = 0; k < n_complex; ++k)
            for (int i = 0; i < n_complex; ++i)
                sys(j * n_complex + k, i) = c[i][j][k];
    return n_complex - rank(sys);
}

namespace {

void check_algebra_axioms(const ComplexLieAlgebra& alg, const GMat& a,
                          const std::vector<std::vector<std::vector<Gaussian>>>& rc) {
    int d = a.rows();
    // antisymmetry of the real constants
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (rc[i][j][k] != -rc[j][i][k])
                    throw ConstraintError("structure constants are not antisymmetric");
    // Jacobi identity, exactly
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Gaussian acc;
                    for (int m = 0; m < d; ++m)
                        acc += rc[i][j][m] * rc[m][k][l] + rc[j][k][m] * rc[m][i][l] +
                               rc[k][i][m] * rc[m][j][l];
                    if (!acc.is_zero())
                        throw ConstraintError(
                            "Jacobi identity fails: input is not integrable");
                }
    if (a * a != -gmat_identity(d))
        throw ConstraintError("A^2 != -1");
    // A[f,g] = [f, Ag] on the real basis
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                Gaussian lhs, rhs;
                for (int k = 0; k < d; ++k) {
                    lhs += a(l, k) * rc[i][j][k];
                    rhs += a(k, j) * rc[i][k][l];
                }
                if (lhs != rhs)
                    throw ConstraintError(
                        "A is not bracket-compatible: input is not integrable");
            }
    (void)alg;
}

} // namespace

ComplexLieAlgebra linearize(const FieldGC& g, const std::vector<Rational>& m) {
    int d = g.d();
    if (d % 2 != 0)
        throw DimensionError("ambient dimension must be even");
    if (rank_at(g, m) != 0)
        throw ConstraintError("rank at m is nonzero");
    ConstantGC at = evaluate_at(g, m);
    if (!at.sigma_block().is_zero())
        throw ConstraintError(
            "sigma at m is nonzero: apply the normalizing constant B-field first");

    std::vector<Gaussian> gpt = to_gaussian_point(m);
    Bivector pi = poisson(g);
    std::vector<std::vector<std::vector<Gaussian>>> rc(
        d, std::vector<std::vector<Gaussian>>(d, std::vector<Gaussian>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Polynomial h = poisson_bracket(pi, Polynomial::variable(d, i),
                                           Polynomial::variable(d, j));
            for (int k = 0; k < d; ++k)
                rc[i][j][k] = h.derivative(k).eval(gpt);
        }

    GMat a = -at.j_block().transpose();

    ComplexLieAlgebra alg;
    alg.n_complex = d / 2;
    alg.real_c = rc;
    alg.a_mat = a;
    check_algebra_axioms(alg, a, rc);

    // complex basis: greedy span completion by {v, Av} pairs
    Subspace span = Subspace::zero(d);
    std::vector<int> picks;
    for (int k = 0; k < d && static_cast<int>(picks.size()) < d / 2; ++k) {
        std::vector<Gaussian> e(d, Gaussian());
        e[k] = Gaussian(1);
        if (span.contains(e))
            continue;
        picks.push_back(k);
        GMat two(2, d);
        for (int j = 0; j < d; ++j) {
            two(0, j) = e[j];
            two(1, j) = a(j, k);
        }
        span = sum(span, Subspace::span(d, two));
    }
    if (static_cast<int>(picks.size()) != d / 2)
        throw ConstraintError("failed to build a complex basis");

    alg.complex_basis = GMat(d, d / 2);
    GMat mcols(d, d);
    for (int idx = 0; idx < d / 2; ++idx) {
        int k = picks[idx];
        for (int j = 0; j < d; ++j) {
            alg.complex_basis(j, idx) = (j == k) ? Gaussian(1) : Gaussian();
            mcols(j, 2 * idx) = (j == k) ? Gaussian(1) : Gaussian();
            mcols(j, 2 * idx + 1) = a(j, k);
        }
    }
    GMat minv = inverse_of(mcols);

    auto real_bracket = [&](const std::vector<Gaussian>& u, const std::vector<Gaussian>& v) {
        std::vector<Gaussian> out(d, Gaussian());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Gaussian f = u[i] * v[j];
                if (f.is_zero())
                    continue;
                for (int k = 0; k < d; ++k)
                    out[k] += f * rc[i][j][k];
            }
        return out;
    };

    alg.c.assign(d / 2, std::vector<std::vector<Gaussian>>(
                            d / 2, std::vector<Gaussian>(d / 2, Gaussian())));
    for (int aidx = 0; aidx < d / 2; ++aidx)
        for (int bidx = 0; bidx < d / 2; ++bidx) {
            std::vector<Gaussian> fa(d), fb(d);
            for (int j = 0; j < d; ++j) {
                fa[j] = alg.complex_basis(j, aidx);
                fb[j] = alg.complex_basis(j, bidx);
            }
            std::vector<Gaussian> w = real_bracket(fa, fb);
            std::vector<Gaussian> coords(d, Gaussian());
            for (int r = 0; r < d; ++r)
                for (int s = 0; s < d; ++s)
                    coords[r] += minv(r, s) * w[s];
            for (int k = 0; k < d / 2; ++k)
                alg.c[aidx][bidx][k] = coords[2 * k] + Gaussian::i() * coords[2 * k + 1];
        }

    // complex Jacobi, re-derived on the complex basis
    int nc = d / 2;
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j)
            for (int k = 0; k < nc; ++k)
                for (int l = 0; l < nc; ++l) {
                    Gaussian acc;
                    for (int mm = 0; mm < nc; ++mm)
                        acc += alg.c[i][j][mm] * alg.c[mm][k][l] +
                               alg.c[j][k][mm] * alg.c[mm][i][l] +
                               alg.c[k][i][mm] * alg.c[mm][j][l];
                    if (!acc.is_zero())
                        throw ConstraintError("complex Jacobi identity fails");
                }
    return alg;
}

ComplexLieAlgebra change_basis(const ComplexLieAlgebra& alg,
                               const std::vector<std::vector<Gaussian>>& t) {
    int n = alg.n_complex;
    if (static_cast<int>(t.size()) != n)
        throw DimensionError("basis has wrong size");
    GMat tm(n, n);
    for (int j = 0; j < n; ++j) {
        if (static_cast<int>(t[j].size()) != n)
            throw DimensionError("basis vector has wrong size");
        for (int i = 0; i < n; ++i)
            tm(i, j) = t[j][i];
    }
    GMat tinv = inverse_of(tm);
    ComplexLieAlgebra out;
    out.n_complex = n;
    out.real_c = alg.real_c;
    out.a_mat = alg.a_mat;
    out.complex_basis = alg.complex_basis;
    out.c.assign(n, std::vector<std::vector<Gaussian>>(n, std::vector<Gaussian>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Gaussian> w = alg.bracket(t[i], t[j]);
            for (int k = 0; k < n; ++k) {
                Gaussian acc;
                for (int s = 0; s < n; ++s)
                    acc += tinv(k, s) * w[s];
                out.c[i][j][k] = acc;
            }
        }
    return out;
}

bool same_fingerprint(const ComplexLieAlgebra& x, const ComplexLieAlgebra& y) {
    return x.n_complex == y.n_complex && x.is_abelian() == y.is_abelian() &&
           x.derived_dim() == y.derived_dim() && x.center_dim() == y.center_dim();
}

bool is_isomorphic_to_aff1(const ComplexLieAlgebra& alg) {
    if (alg.n_complex != 2 || alg.is_abelian() || alg.derived_dim() != 1)
        return false;
    // u spans the derived algebra; solve [x, u] = u
    std::vector<Gaussian> u;
    for (int i = 0; i < 2 && u.empty(); ++i)
        for (int j = i + 1; j < 2 && u.empty(); ++j) {
            std::vector<Gaussian> w = alg.bracket({Gaussian(i == 0 ? 1 : 0), Gaussian(i == 1 ? 1 : 0)},
                                                  {Gaussian(j == 0 ? 1 : 0), Gaussian(j == 1 ? 1 : 0)});
            if (!(w[0].is_zero() && w[1].is_zero()))
                u = w;
        }
    if (u.empty())
        return false;
    GMat sys(2, 2);
    for (int i = 0; i < 2; ++i) {
        std::vector<Gaussian> x(2, Gaussian());
        x[i] = Gaussian(1);
        std::vector<Gaussian> w = alg.bracket(x, u);
        sys(0, i) = w[0];
        sys(1, i) = w[1];
    }
    std::vector<Gaussian> sol;
    return solve(sys, u, sol);
}

} // namespace gckit
