#include "gckit/gc_linear.hpp"

#include "gckit/errors.hpp"

namespace gckit {

PairingSpace PairingSpace::standard(int n) {
    PairingSpace s;
    s.n = n;
    s.gram = GMat(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        s.gram(i, n + i) = Gaussian(1);
        s.gram(n + i, i) = Gaussian(1);
    }
    return s;
}

ConstantGC::ConstantGC(PairingSpace space, GMat jmat, Subspace l)
    : space_(std::move(space)), jmat_(std::move(jmat)), l_(std::move(l)) {}

ConstantGC ConstantGC::from_automorphism(const GMat& jmat, const PairingSpace& space) {
    int n = space.n;
    if (jmat.rows() != 2 * n || jmat.cols() != 2 * n)
        throw DimensionError("automorphism matrix must be 2n x 2n");
    if (!gmat_is_real(jmat))
        throw ConstraintError("automorphism matrix must be real");
    if (jmat * jmat != -gmat_identity(2 * n))
        throw ConstraintError("square: J^2 != -1");
    if (jmat.transpose() * space.gram * jmat != space.gram)
        throw ConstraintError("pairing: J does not preserve the pairing");
    GMat j = jmat.block(0, 0, n, n);
    GMat pi = jmat.block(0, n, n, n);
    GMat sg = jmat.block(n, 0, n, n);
    GMat k = jmat.block(n, n, n, n);
    if (k != -j.transpose())
        throw ConstraintError("blocks: K != -J^T");
    if (!gmat_is_skew(pi))
        throw ConstraintError("blocks: pi is not skew");
    if (!gmat_is_skew(sg))
        throw ConstraintError("blocks: sigma is not skew");

    // L = ker(J - i), the +i-eigenspace.
    GMat shifted = jmat;
    for (int d = 0; d < 2 * n; ++d)
        shifted(d, d) -= Gaussian::i();
    Subspace l = Subspace::span(2 * n, kernel(shifted));
    if (l.dim() != n)
        throw ConstraintError("eigenspace: dim L != n");
    for (int a = 0; a < n; ++a) {
        std::vector<Gaussian> u = l.basis_vector(a);
        for (int b = a; b < n; ++b) {
            std::vector<Gaussian> v = l.basis_vector(b);
            Gaussian acc;
            for (int r = 0; r < 2 * n; ++r)
                for (int c = 0; c < 2 * n; ++c)
                    if (!space.gram(r, c).is_zero())
                        acc += u[r] * space.gram(r, c) * v[c];
            if (!acc.is_zero())
                throw ConstraintError("eigenspace: L is not isotropic");
        }
    }
    if (intersect(l, l.conj()).dim() != 0)
        throw ConstraintError("eigenspace: L n conj(L) != 0");
    return ConstantGC(space, jmat, l);
}

ConstantGC ConstantGC::from_subspace(const Subspace& l, const PairingSpace& space) {
    int n = space.n;
    if (l.ambient_dim() != 2 * n)
        throw DimensionError("subspace must live in V_C + V*_C");
    if (l.dim() != n)
        throw ConstraintError("dimension: dim L != n");
    for (int a = 0; a < n; ++a) {
        std::vector<Gaussian> u = l.basis_vector(a);
        for (int b = a; b < n; ++b) {
            std::vector<Gaussian> v = l.basis_vector(b);
            Gaussian acc;
            for (int r = 0; r < 2 * n; ++r)
                for (int c = 0; c < 2 * n; ++c)
                    if (!space.gram(r, c).is_zero())
                        acc += u[r] * space.gram(r, c) * v[c];
            if (!acc.is_zero())
                throw ConstraintError("isotropy: L is not isotropic");
        }
    }
    if (intersect(l, l.conj()).dim() != 0)
        throw ConstraintError("conjugate: L n conj(L) != 0");

    // J acts by +i on L and -i on conj(L); assemble in the eigenbasis and
    // conjugate back.
    GMat m(2 * n, 2 * n);
    for (int col = 0; col < n; ++col)
        for (int r = 0; r < 2 * n; ++r) {
            m(r, col) = l.basis()(col, r);
            m(r, n + col) = l.basis()(col, r).conj();
        }
    GMat dmat(2 * n, 2 * n);
    for (int dgl = 0; dgl < n; ++dgl) {
        dmat(dgl, dgl) = Gaussian::i();
        dmat(n + dgl, n + dgl) = -Gaussian::i();
    }
    GMat jmat = m * dmat * inverse_of(m);
    if (!gmat_is_real(jmat))
        throw ConstraintError("reconstruction: J is not real");
    return from_automorphism(jmat, space);
}

std::vector<Gaussian> ConstantGC::lift_form(const std::vector<Gaussian>& x) const {
    int nn = n();
    if (static_cast<int>(x.size()) != nn)
        throw DimensionError("lift_form: vector has wrong length");
    // coefficients c with c^T (L basis, first n columns) = x
    GMat head = l_.basis().block(0, 0, l_.dim(), nn).transpose();
    std::vector<Gaussian> c;
    if (!solve(head, x, c))
        throw ConstraintError("lift_form: vector is not in E");
    std::vector<Gaussian> xi(nn, Gaussian());
    for (int a = 0; a < l_.dim(); ++a)
        for (int j = 0; j < nn; ++j)
            xi[j] += c[a] * l_.basis()(a, nn + j);
    return xi;
}

Gaussian ConstantGC::eps_eval(const std::vector<Gaussian>& x, const std::vector<Gaussian>& y) const {
    std::vector<Gaussian> xi = lift_form(x);
    Gaussian acc;
    for (int j = 0; j < n(); ++j)
        acc += xi[j] * y[j];
    return acc;
}

GMat exp_b(int n, const GMat& b) {
    if (b.rows() != n || b.cols() != n)
        throw DimensionError("B must be n x n");
    // b holds the component matrix B(e_i, e_j); the action on sections is
    // (X, xi) -> (X, iota_X B + xi), and iota_X B has components B^T X.
    // This is what makes eps transform by eps -> eps + B|_E.
    GMat e = gmat_identity(2 * n);
    e.set_block(n, 0, b.transpose());
    return e;
}

EpsilonData extract_es(const ConstantGC& g) {
    int n = g.n();
    const Subspace& l = g.eigenspace();
    EpsilonData out{Subspace::zero(n), GMat(), Subspace::zero(n), GMat()};
    out.e_space = l.project(0, n);

    // eps in the echelon basis of E, with the well-definedness of the lift
    // checked against ker(rho|_L) = L n V*_C.
    int de = out.e_space.dim();
    out.eps = GMat(de, de);
    std::vector<std::vector<Gaussian>> lifts;
    for (int a = 0; a < de; ++a)
        lifts.push_back(g.lift_form(out.e_space.basis_vector(a)));
    for (int a = 0; a < de; ++a)
        for (int b = 0; b < de; ++b) {
            Gaussian acc;
            std::vector<Gaussian> eb = out.e_space.basis_vector(b);
            for (int j = 0; j < n; ++j)
                acc += lifts[a][j] * eb[j];
            out.eps(a, b) = acc;
        }
    GMat head = l.basis().block(0, 0, l.dim(), n).transpose();
    GMat ker = kernel(head);
    for (int r = 0; r < ker.rows(); ++r) {
        std::vector<Gaussian> eta(n, Gaussian());
        for (int a = 0; a < l.dim(); ++a)
            for (int j = 0; j < n; ++j)
                eta[j] += ker(r, a) * l.basis()(a, n + j);
        for (int b = 0; b < de; ++b) {
            Gaussian acc;
            std::vector<Gaussian> eb = out.e_space.basis_vector(b);
            for (int j = 0; j < n; ++j)
                acc += eta[j] * eb[j];
            if (!acc.is_zero())
                throw ConstraintError("eps is not independent of the lift choice");
        }
    }
    if (out.eps != -out.eps.transpose())
        throw ConstraintError("eps is not skew");

    out.s_space = real_form(intersect(out.e_space, out.e_space.conj()));
    int ds = out.s_space.dim();
    out.omega = GMat(ds, ds);
    for (int a = 0; a < ds; ++a)
        for (int b = 0; b < ds; ++b)
            out.omega(a, b) = Gaussian(
                g.eps_eval(out.s_space.basis_vector(a), out.s_space.basis_vector(b)).im);
    if (rank(out.omega) != ds)
        throw ConstraintError("omega is degenerate on S");
    return out;
}

ConstantGC b_transform(const ConstantGC& g, const GMat& b) {
    int n = g.n();
    if (b.rows() != n || b.cols() != n)
        throw DimensionError("B must be n x n");
    if (!gmat_is_real(b))
        throw ConstraintError("B must be real");
    if (!gmat_is_skew(b))
        throw ConstraintError("B must be skew-symmetric");
    GMat e = exp_b(n, b);
    GMat einv = exp_b(n, -b);
    return ConstantGC::from_automorphism(e * g.jmat() * einv, g.space());
}

namespace {

// W_C + V*_C inside V_C + V*_C.
Subspace mixed_space(const Subspace& w, int n) {
    GMat rows(w.dim() + n, 2 * n);
    for (int i = 0; i < w.dim(); ++i)
        for (int j = 0; j < n; ++j)
            rows(i, j) = w.basis()(i, j);
    for (int i = 0; i < n; ++i)
        rows(w.dim() + i, n + i) = Gaussian(1);
    return Subspace::span(2 * n, rows);
}

void require_real_subspace(const Subspace& w) {
    if (!w.is_real())
        throw ConstraintError("subspace must have a real (conjugation-stable) basis");
}

} // namespace

InducedSubspace induced_subspace(const ConstantGC& g, const Subspace& w_in) {
    require_real_subspace(w_in);
    int n = g.n();
    if (w_in.ambient_dim() != n)
        throw DimensionError("W must be a subspace of V");
    Subspace w = w_in; // already echelonized by construction
    int k = w.dim();

    Subspace lt = intersect(g.eigenspace(), mixed_space(w, n));
    GMat rows(lt.dim(), 2 * k);
    for (int r = 0; r < lt.dim(); ++r) {
        std::vector<Gaussian> v = lt.basis_vector(r);
        std::vector<Gaussian> head(v.begin(), v.begin() + n);
        auto coords = w.coordinates(head);
        if (!coords)
            throw ConstraintError("projection of L~ is not inside W");
        for (int j = 0; j < k; ++j)
            rows(r, j) = (*coords)[j];
        for (int b = 0; b < k; ++b) {
            Gaussian acc;
            for (int j = 0; j < n; ++j)
                acc += v[n + j] * w.basis()(b, j);
            rows(r, k + b) = acc;
        }
    }
    InducedSubspace out{w, Subspace::span(2 * k, rows), false};
    if (out.l_w.dim() != k)
        throw ConstraintError("dim L_W != dim W");
    out.is_gc = intersect(out.l_w, out.l_w.conj()).dim() == 0;
    return out;
}

ConstantGC induced_structure(const ConstantGC& g, const Subspace& w) {
    InducedSubspace ind = induced_subspace(g, w);
    if (!ind.is_gc)
        throw ConstraintError("W is not a generalized complex subspace");
    return ConstantGC::from_subspace(ind.l_w, PairingSpace::standard(w.dim()));
}

bool gc_subspace_criterion(const ConstantGC& g, const Subspace& w) {
    require_real_subspace(w);
    EpsilonData es = extract_es(g);
    Subspace t = intersect(w, es.s_space);
    GMat om(t.dim(), t.dim());
    for (int a = 0; a < t.dim(); ++a)
        for (int b = 0; b < t.dim(); ++b)
            om(a, b) = Gaussian(g.eps_eval(t.basis_vector(a), t.basis_vector(b)).im);
    bool symplectic_slice = rank(om) == t.dim();
    Subspace we = intersect(w, es.e_space);
    Subspace wec = intersect(w, es.e_space.conj());
    bool split = sum(we, wec) == w;
    return symplectic_slice && split;
}

Subspace orth_complement(const ConstantGC& g, const Subspace& w) {
    require_real_subspace(w);
    int n = g.n();
    Subspace lt = intersect(g.eigenspace(), mixed_space(w, n));
    Subspace aw = intersect(g.eigenspace().conj(), annihilator(lt, g.space().gram));
    return aw.project(0, n);
}

Subspace orth_complement_oracle(const ConstantGC& g, const Subspace& w) {
    require_real_subspace(w);
    EpsilonData es = extract_es(g);
    const Subspace& s = es.s_space;
    Subspace t = intersect(w, s);
    GMat tc(t.dim(), s.dim());
    for (int r = 0; r < t.dim(); ++r) {
        auto coords = s.coordinates(t.basis_vector(r));
        for (int j = 0; j < s.dim(); ++j)
            tc(r, j) = (*coords)[j];
    }
    // omega(c . S, t_r) = 0 for all rows: kernel of Tc * omega^T.
    GMat cond = tc * es.omega.transpose();
    GMat coeffs = kernel(cond);
    GMat rows(coeffs.rows(), g.n());
    for (int r = 0; r < coeffs.rows(); ++r)
        for (int j = 0; j < g.n(); ++j) {
            Gaussian acc;
            for (int a = 0; a < s.dim(); ++a)
                acc += coeffs(r, a) * s.basis()(a, j);
            rows(r, j) = acc;
        }
    return Subspace::span(g.n(), rows);
}

GMat splitting_bfield(const ConstantGC& g, const Subspace& s0, const Subspace& w) {
    require_real_subspace(s0);
    require_real_subspace(w);
    int n = g.n();
    if (s0.ambient_dim() != n || w.ambient_dim() != n)
        throw DimensionError("subspaces must live in V");
    if (s0.dim() + w.dim() != n || intersect(s0, w).dim() != 0)
        throw ConstraintError("V is not the direct sum of S0 and W");
    EpsilonData es = extract_es(g);
    if (!es.s_space.contains(s0))
        throw ConstraintError("S0 is not contained in S");
    Subspace t = intersect(es.s_space, w);
    for (int a = 0; a < s0.dim(); ++a)
        for (int b = 0; b < t.dim(); ++b)
            if (g.eps_eval(s0.basis_vector(a), t.basis_vector(b)).im != 0)
                throw ConstraintError(
                    "splitting requires S0 to be omega-orthogonal to S n W");

    // For each basis vector of W find e in W_C n E with e + conj(e) = w_b,
    // then B(s, w_b) = -2 Re eps(s, e): the transform adds B|_E to eps, so B
    // must cancel the cross pairing between the two factors.
    Subspace f = intersect(w, es.e_space);
    int df = f.dim();
    GMat cross(s0.dim(), w.dim());
    for (int b = 0; b < w.dim(); ++b) {
        GMat sys(n, 2 * df);
        for (int i = 0; i < df; ++i)
            for (int j = 0; j < n; ++j) {
                const Gaussian& fij = f.basis()(i, j);
                sys(j, i) = Gaussian(2 * fij.re);
                sys(j, df + i) = Gaussian(-2 * fij.im);
            }
        std::vector<Gaussian> coef;
        if (!solve(sys, w.basis_vector(b), coef))
            throw ConstraintError("W_C is not spanned by (W_C n E) + conjugates");
        std::vector<Gaussian> e(n, Gaussian());
        for (int i = 0; i < df; ++i) {
            Gaussian ci(coef[i].re, coef[df + i].re);
            for (int j = 0; j < n; ++j)
                e[j] += ci * f.basis()(i, j);
        }
        for (int a = 0; a < s0.dim(); ++a)
            cross(a, b) = Gaussian(-2 * g.eps_eval(s0.basis_vector(a), e).re);
    }

    GMat p(n, n);
    p.set_block(0, 0, s0.basis());
    p.set_block(s0.dim(), 0, w.basis());
    GMat bp(n, n);
    bp.set_block(0, s0.dim(), cross);
    bp.set_block(s0.dim(), 0, -cross.transpose());
    GMat pinv = inverse_of(p);
    GMat b = pinv * bp * pinv.transpose();

    // The transform must be exactly the product of the induced structures in
    // the adapted coordinates.
    ConstantGC transformed = pullback_gc(b_transform(g, b), p);
    ConstantGC expected = direct_sum(induced_structure(g, s0), induced_structure(g, w));
    if (transformed.jmat() != expected.jmat())
        throw ConstraintError("splitting B-field does not produce the product structure");
    return b;
}

Decomposition decompose(const ConstantGC& g) {
    int n = g.n();
    EpsilonData es = extract_es(g);
    Subspace span_so_far = es.s_space;
    GMat wrows(n - es.s_space.dim(), n);
    int cnt = 0;
    for (int k = 0; k < n && cnt < wrows.rows(); ++k) {
        std::vector<Gaussian> e(n, Gaussian());
        e[k] = Gaussian(1);
        if (span_so_far.contains(e))
            continue;
        for (int j = 0; j < n; ++j)
            wrows(cnt, j) = e[j];
        ++cnt;
        GMat one(1, n);
        for (int j = 0; j < n; ++j)
            one(0, j) = e[j];
        span_so_far = sum(span_so_far, Subspace::span(n, one));
    }
    Decomposition out{es.s_space, Subspace::span(n, wrows), GMat()};
    out.b = splitting_bfield(g, out.s0, out.w);
    return out;
}

ConstantGC direct_sum(const ConstantGC& p, const ConstantGC& q) {
    int np = p.n(), nq = q.n();
    int n = np + nq;
    GMat jm(2 * n, 2 * n);
    auto place = [&](const GMat& blk, int r0, int c0, int roff, int coff) {
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j)
                jm(r0 + roff + i, c0 + coff + j) = blk(i, j);
    };
    // vector coordinates (x_P, x_Q), covector coordinates (xi_P, xi_Q)
    place(p.j_block(), 0, 0, 0, 0);
    place(q.j_block(), 0, 0, np, np);
    place(p.pi_block(), 0, n, 0, 0);
    place(q.pi_block(), 0, n, np, np);
    place(p.sigma_block(), n, 0, 0, 0);
    place(q.sigma_block(), n, 0, np, np);
    place(p.k_block(), n, n, 0, 0);
    place(q.k_block(), n, n, np, np);
    return ConstantGC::from_automorphism(jm, PairingSpace::standard(n));
}

ConstantGC pullback_gc(const ConstantGC& g, const GMat& basis_rows) {
    int n = g.n();
    if (basis_rows.rows() != n || basis_rows.cols() != n)
        throw DimensionError("basis matrix must be n x n");
    GMat phi = basis_rows.transpose(); // new coordinates -> V
    GMat phi_inv = inverse_of(phi);
    GMat a(2 * n, 2 * n), ainv(2 * n, 2 * n);
    a.set_block(0, 0, phi_inv);
    a.set_block(n, n, phi.transpose());
    ainv.set_block(0, 0, phi);
    ainv.set_block(n, n, phi_inv.transpose());
    return ConstantGC::from_automorphism(a * g.jmat() * ainv, g.space());
}

ConstantGC symplectic_gc(const GMat& omega_map) {
    int n = omega_map.rows();
    if (omega_map.cols() != n)
        throw DimensionError("omega must be square");
    if (!gmat_is_skew(omega_map) || !gmat_is_real(omega_map))
        throw ConstraintError("omega must be a real skew matrix");
    GMat winv = inverse_of(omega_map);
    GMat jm(2 * n, 2 * n);
    jm.set_block(0, n, -winv);
    jm.set_block(n, 0, omega_map);
    return ConstantGC::from_automorphism(jm, PairingSpace::standard(n));
}

ConstantGC complex_gc(const GMat& j) {
    int n = j.rows();
    if (j.cols() != n)
        throw DimensionError("J must be square");
    if (j * j != -gmat_identity(n))
        throw ConstraintError("J^2 != -1");
    GMat jm(2 * n, 2 * n);
    jm.set_block(0, 0, j);
    jm.set_block(n, n, -j.transpose());
    return ConstantGC::from_automorphism(jm, PairingSpace::standard(n));
}

} // namespace gckit
