#include "gckit/gc_field.hpp"

#include <random>

#include "gckit/errors.hpp"

namespace gckit {

FieldGC FieldGC::from_matrix(const PMat& jmat, int d) {
    if (jmat.rows() != 2 * d || jmat.cols() != 2 * d)
        throw DimensionError("structure matrix must be 2d x 2d");
    int nv = d > 0 ? jmat(0, 0).nvars() : 0;
    if (nv != d)
        throw DimensionError("structure entries must be polynomials in d coordinates");
    for (int i = 0; i < 2 * d; ++i)
        for (int j = 0; j < 2 * d; ++j)
            if (jmat(i, j).nvars() != nv)
                throw DimensionError("structure entries over mixed variable sets");
    if (!pmat_is_real(jmat))
        throw ConstraintError("structure matrix must be real");
    PMat sq = jmat * jmat;
    PMat minus_id = pmat_identity(2 * d, nv);
    for (int i = 0; i < 2 * d; ++i)
        minus_id(i, i) = -minus_id(i, i);
    if (!(sq == minus_id))
        throw ConstraintError("square: J^2 != -1");
    PMat gram = pmat_zero(2 * d, 2 * d, nv);
    Polynomial one = Polynomial::constant(nv, Gaussian(1));
    for (int i = 0; i < d; ++i) {
        gram(i, d + i) = one;
        gram(d + i, i) = one;
    }
    if (!(jmat.transpose() * gram * jmat == gram))
        throw ConstraintError("pairing: J does not preserve the pairing");
    FieldGC g(d, jmat);
    if (!(g.k_block() == -g.j_block().transpose()))
        throw ConstraintError("blocks: K != -J^T");
    if (!pmat_is_skew(g.pi_block()))
        throw ConstraintError("blocks: pi is not skew");
    if (!pmat_is_skew(g.sigma_block()))
        throw ConstraintError("blocks: sigma is not skew");
    return g;
}

FieldGC FieldGC::from_constant(const ConstantGC& g) {
    return from_matrix(pmat_from_gmat(g.jmat(), g.n()), g.n());
}

Section FieldGC::apply(const Section& s) const {
    if (s.dim() != d_)
        throw DimensionError("section dimension mismatch");
    VectorField x(d_, d_);
    OneForm xi(d_, d_);
    for (int i = 0; i < d_; ++i) {
        Polynomial vac(d_), fac(d_);
        for (int j = 0; j < d_; ++j) {
            vac += jmat_(i, j) * s.vec.c[j] + jmat_(i, d_ + j) * s.form.c[j];
            fac += jmat_(d_ + i, j) * s.vec.c[j] + jmat_(d_ + i, d_ + j) * s.form.c[j];
        }
        x.c[i] = vac;
        xi.c[i] = fac;
    }
    return Section(std::move(x), std::move(xi));
}

Section frame_vector(int d, int i) {
    VectorField x(d, d);
    x.c[i] = Polynomial::constant(d, Gaussian(1));
    return Section(std::move(x), OneForm(d, d));
}

Section frame_covector(int d, int i) {
    OneForm xi(d, d);
    xi.c[i] = Polynomial::constant(d, Gaussian(1));
    return Section(VectorField(d, d), std::move(xi));
}

Section nijenhuis(const FieldGC& g, const Section& a, const Section& b) {
    Section ja = g.apply(a);
    Section jb = g.apply(b);
    return courant(ja, jb) - g.apply(courant(ja, b)) - g.apply(courant(a, jb)) -
           courant(a, b);
}

bool nijenhuis_check(const FieldGC& g) {
    int d = g.d();
    std::vector<Section> frame;
    for (int i = 0; i < d; ++i)
        frame.push_back(frame_vector(d, i));
    for (int i = 0; i < d; ++i)
        frame.push_back(frame_covector(d, i));
    for (size_t i = 0; i < frame.size(); ++i)
        for (size_t j = i + 1; j < frame.size(); ++j)
            if (!nijenhuis(g, frame[i], frame[j]).is_zero())
                return false;
    return true;
}

namespace {

Polynomial sample_poly(std::mt19937& rng, int nvars, int max_degree) {
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> expo(0, max_degree);
    Polynomial p(nvars);
    for (int t = 0; t < 3; ++t) {
        Exponents e(nvars, 0);
        int budget = max_degree;
        for (int v = 0; v < nvars && budget > 0; ++v) {
            int k = expo(rng) % (budget + 1);
            e[v] = static_cast<unsigned>(k);
            budget -= k;
        }
        p += Polynomial::monomial(nvars, e, Gaussian(Rational(num(rng))));
    }
    return p;
}

Section sample_section(std::mt19937& rng, int d) {
    VectorField x(d, d);
    OneForm xi(d, d);
    for (int i = 0; i < d; ++i) {
        x.c[i] = sample_poly(rng, d, 2);
        xi.c[i] = sample_poly(rng, d, 2);
    }
    return Section(std::move(x), std::move(xi));
}

} // namespace

IntegrabilityReport nijenhuis_report(const FieldGC& g, int random_pairs, uint32_t seed) {
    IntegrabilityReport rep;
    int d = g.d();
    std::vector<Section> frame;
    for (int i = 0; i < d; ++i)
        frame.push_back(frame_vector(d, i));
    for (int i = 0; i < d; ++i)
        frame.push_back(frame_covector(d, i));
    rep.frame_ok = true;
    for (size_t i = 0; i < frame.size() && rep.frame_ok; ++i)
        for (size_t j = i + 1; j < frame.size(); ++j) {
            ++rep.frame_pairs;
            if (!nijenhuis(g, frame[i], frame[j]).is_zero()) {
                rep.frame_ok = false;
                rep.first_failure = "frame pair (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")";
                break;
            }
        }
    std::mt19937 rng(seed);
    rep.random_ok = true;
    for (int t = 0; t < random_pairs; ++t) {
        Section a = sample_section(rng, d);
        Section b = sample_section(rng, d);
        ++rep.random_pairs;
        if (!nijenhuis(g, a, b).is_zero()) {
            rep.random_ok = false;
            if (rep.first_failure.empty())
                rep.first_failure = "random pair " + std::to_string(t);
            break;
        }
    }
    return rep;
}

Bivector poisson(const FieldGC& g) {
    Bivector b{g.pi_block()};
    if (!pmat_is_skew(b.m))
        throw ConstraintError("pi is not skew");
    return b;
}

Polynomial poisson_bracket(const Bivector& pi, const Polynomial& f, const Polynomial& g) {
    int d = pi.dim();
    if (f.nvars() != d || g.nvars() != d)
        throw DimensionError("bracket arguments over wrong variable set");
    Polynomial acc(d);
    for (int j = 0; j < d; ++j) {
        Polynomial dgj = g.derivative(j);
        if (dgj.is_zero())
            continue;
        for (int k = 0; k < d; ++k) {
            if (pi.m(j, k).is_zero())
                continue;
            acc += pi.m(j, k) * f.derivative(k) * dgj;
        }
    }
    return acc;
}

Polynomial jacobiator(const Bivector& pi, const Polynomial& f, const Polynomial& g,
                      const Polynomial& h) {
    return poisson_bracket(pi, poisson_bracket(pi, f, g), h) +
           poisson_bracket(pi, poisson_bracket(pi, g, h), f) +
           poisson_bracket(pi, poisson_bracket(pi, h, f), g);
}

std::pair<VectorField, OneForm> hamiltonian_pair(const FieldGC& g, const Polynomial& f) {
    int d = g.d();
    if (f.nvars() != d)
        throw DimensionError("function over wrong variable set");
    OneForm df(d, d);
    for (int i = 0; i < d; ++i)
        df.c[i] = f.derivative(i);
    Section out = g.apply(Section(VectorField(d, d), df));

    // cross-check: the vector part must agree with the pi block applied to df
    PMat pi = g.pi_block();
    for (int i = 0; i < d; ++i) {
        Polynomial acc(d);
        for (int j = 0; j < d; ++j)
            acc += pi(i, j) * df.c[j];
        if (!(acc == out.vec.c[i]))
            throw ConstraintError("X_f != pi(df)");
    }
    if (f.is_real() && (!out.vec.is_real() || !out.form.is_real()))
        throw ConstraintError("Hamiltonian pair of a real function is not real");
    return {out.vec, out.form};
}

XiIdentityReport check_xi_identities(const FieldGC& g, const Polynomial& f,
                                     const Polynomial& h) {
    auto [xf, xif] = hamiltonian_pair(g, f);
    auto [xh, xih] = hamiltonian_pair(g, h);

    XiIdentityReport rep;
    auto fh_pair = hamiltonian_pair(g, f * h);
    rep.product_residual = fh_pair.second - (xih * f + xif * h);

    Polynomial fh = poisson_bracket(poisson(g), f, h);
    auto br_pair = hamiltonian_pair(g, fh);
    KForm lie = lie_derivative(xf, KForm::from_one_form(xih));
    KForm contr = iota(xh, d(KForm::from_one_form(xif)));
    rep.bracket_residual = br_pair.second - (lie - contr).to_one_form();
    return rep;
}

FlowEpsilonReport check_flow_epsilon(const FieldGC& g, const Polynomial& f) {
    int dd = g.d();
    PMat pi = g.pi_block();
    Polynomial delta = pmat_det(pi);
    if (delta.is_zero())
        throw UnsupportedError("E is not generically full: det(pi) vanishes identically");

    // eps = pi^{-1}(i - J), written P/delta with P polynomial:
    // eps(e_j, e_k) = N_{kj} for N = adj(pi)(i - J), so the form matrix is N^T.
    PMat shifted = -g.j_block();
    for (int i = 0; i < dd; ++i)
        shifted(i, i) += Polynomial::constant(dd, Gaussian::i());
    PMat nmat = pmat_adjugate(pi) * shifted;
    KForm p2 = KForm::from_component_matrix(nmat.transpose(), dd);

    auto ham = hamiltonian_pair(g, f);
    const VectorField& xf = ham.first;
    KForm dxi = d(KForm::from_one_form(ham.second));
    // L_X(P/delta) - d xi = [delta L_X P - X(delta) P - delta^2 d xi] / delta^2
    KForm residual =
        lie_derivative(xf, p2) * delta - p2 * xf.apply(delta) - dxi * (delta * delta);
    FlowEpsilonReport rep;
    rep.supported = true;
    rep.residual = residual;
    return rep;
}

std::vector<Gaussian> to_gaussian_point(const std::vector<Rational>& point) {
    std::vector<Gaussian> out;
    out.reserve(point.size());
    for (const Rational& r : point)
        out.emplace_back(r);
    return out;
}

ConstantGC evaluate_at(const FieldGC& g, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != g.d())
        throw DimensionError("point has wrong dimension");
    GMat jm = pmat_eval(g.jmat(), to_gaussian_point(point));
    return ConstantGC::from_automorphism(jm, PairingSpace::standard(g.d()));
}

int rank_at(const FieldGC& g, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != g.d())
        throw DimensionError("point has wrong dimension");
    int r = rank(pmat_eval(g.pi_block(), to_gaussian_point(point)));
    if (r % 2 != 0)
        throw ConstraintError("Poisson rank is odd");
    return r;
}

FieldGC b_transform_field(const FieldGC& g, const PMat& b) {
    int d = g.d();
    if (b.rows() != d || b.cols() != d)
        throw DimensionError("B must be d x d");
    if (!pmat_is_skew(b) || !pmat_is_real(b))
        throw ConstraintError("B must be a real skew polynomial matrix");
    PMat e = pmat_identity(2 * d, d);
    PMat einv = pmat_identity(2 * d, d);
    e.set_block(d, 0, b.transpose());
    PMat bt = -b.transpose();
    einv.set_block(d, 0, bt);
    return FieldGC::from_matrix(e * g.jmat() * einv, d);
}

FieldGC symplectic_field(const KForm& omega) {
    int d = omega.dim();
    if (omega.k() != 2)
        throw DimensionError("omega must be a 2-form");
    PMat w = omega.component_matrix();
    Polynomial delta = pmat_det(w);
    if (!delta.is_constant() || delta.is_zero())
        throw ConstraintError(
            "omega must have constant nonzero determinant for a polynomial inverse");
    PMat winv = pmat_adjugate(w) * Polynomial::constant(d, inverse(delta.constant_term()));
    PMat jm = pmat_zero(2 * d, 2 * d, d);
    jm.set_block(0, d, -winv);
    jm.set_block(d, 0, w);
    return FieldGC::from_matrix(jm, d);
}

} // namespace gckit
