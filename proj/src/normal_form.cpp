#include "gckit/normal_form.hpp"

#include "gckit/errors.hpp"

namespace gckit {

VectorField ProductChart::x_p() const {
    VectorField x(nvars(), nvars());
    x.c[1] = Polynomial::constant(nvars(), Gaussian(-1));
    return x;
}

VectorField ProductChart::x_q() const {
    VectorField x(nvars(), nvars());
    x.c[0] = Polynomial::constant(nvars(), Gaussian(1));
    return x;
}

namespace {

void require_transverse_only(const ProductChart& chart, const Polynomial& p) {
    if (p.nvars() != chart.nvars())
        throw DimensionError("family entry over wrong variable set");
    if (!p.derivative(0).is_zero() || !p.derivative(1).is_zero())
        throw ConstraintError("family entry depends on the leaf coordinates");
}

// int_0^{x_upper} f du where u replaces variable `slot` of f; the
// substitutions in `subs` are applied to the remaining variables first.
Polynomial slice_integral(const Polynomial& coef, int slot, int upper_var,
                          const std::vector<std::pair<int, Polynomial>>& subs) {
    int nv = coef.nvars();
    int ext = nv + 1;
    Polynomial q = coef.resized(ext);
    q = q.substituted(slot, Polynomial::variable(ext, nv));
    for (const auto& [v, val] : subs)
        q = q.substituted(v, val.resized(ext));
    Polynomial integrated = q.definite_integral(nv, Polynomial(ext),
                                                Polynomial::variable(ext, upper_var));
    return integrated.resized(nv);
}

} // namespace

KForm extend_bfield(const ProductChart& chart, const LeafFamilyB& fam) {
    int nd = chart.n_dim;
    int nv = chart.nvars();
    if (fam.cross.rows() != 2 || fam.cross.cols() != nd)
        throw DimensionError("family must be 2 x n_dim");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < nd; ++j)
            require_transverse_only(chart, fam.cross(i, j));

    KForm b(nv, 2, nv);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < nd; ++j)
            b.set_component({i, 2 + j}, fam.cross(i, j));
    for (int j = 0; j < nd; ++j)
        for (int l = j + 1; l < nd; ++l) {
            Polynomial acc(nv);
            for (int i = 0; i < 2; ++i) {
                Polynomial term = fam.cross(i, l).derivative(2 + j) -
                                  fam.cross(i, j).derivative(2 + l);
                acc += Polynomial::variable(nv, i) * term;
            }
            b.set_component({2 + j, 2 + l}, acc);
        }
    return b;
}

bool ExtendIdentities::all_zero() const {
    auto ok = [](const std::vector<Polynomial>& v) {
        for (const auto& p : v)
            if (!p.is_zero())
                return false;
        return true;
    };
    return ok(sss) && ok(ssn) && ok(snn) && ok(nnn);
}

ExtendIdentities extend_bfield_identities(const ProductChart& chart, const LeafFamilyB& fam) {
    KForm b = extend_bfield(chart, fam);
    int nd = chart.n_dim;
    // dB'(u, v, w) for coordinate fields is the cyclic sum of directional
    // derivatives of the components.
    auto dcomp = [&](int u, int v, int w) {
        return b.component({v, w}).derivative(u) - b.component({u, w}).derivative(v) +
               b.component({u, v}).derivative(w);
    };
    ExtendIdentities out;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int s = 0; s < 2; ++s)
                out.sss.push_back(dcomp(i, k, s));
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < nd; ++j)
                out.ssn.push_back(dcomp(i, k, 2 + j));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < nd; ++j)
            for (int l = j + 1; l < nd; ++l)
                out.snn.push_back(dcomp(i, 2 + j, 2 + l));
    for (int j = 0; j < nd; ++j)
        for (int l = j + 1; l < nd; ++l)
            for (int t = l + 1; t < nd; ++t)
                out.nnn.push_back(dcomp(2 + j, 2 + l, 2 + t));
    return out;
}

KForm ftc_identity(const ProductChart& chart, const KForm& tau, FtcForm which) {
    int nv = chart.nvars();
    if (tau.nvars() != nv || tau.dim() != nv)
        throw DimensionError("form over wrong chart");
    KForm residual(nv, tau.k(), nv);
    Polynomial zero(nv);
    if (which == FtcForm::leaf_p) {
        KForm lie = lie_derivative(chart.x_p(), tau);
        for (const auto& [idx, coef] : tau.components()) {
            Polynomial term1 = coef.substituted(1, zero);
            Polynomial term2 = slice_integral(lie.component(idx), 1, 1, {});
            residual.set_component(idx, coef - term1 + term2);
        }
        // components absent from tau can still appear in the Lie derivative
        for (const auto& [idx, coef] : lie.components()) {
            if (!tau.component(idx).is_zero())
                continue;
            Polynomial term2 = slice_integral(coef, 1, 1, {});
            residual.set_component(idx, residual.component(idx) + term2);
        }
    } else {
        KForm lie = lie_derivative(chart.x_q(), tau);
        for (const auto& [idx, coef] : tau.components()) {
            Polynomial term1 = coef.substituted(0, zero);
            Polynomial term2 = slice_integral(lie.component(idx), 0, 0, {});
            residual.set_component(idx, coef - term1 - term2);
        }
        for (const auto& [idx, coef] : lie.components()) {
            if (!tau.component(idx).is_zero())
                continue;
            Polynomial term2 = slice_integral(coef, 0, 0, {});
            residual.set_component(idx, residual.component(idx) - term2);
        }
    }
    return residual;
}

namespace {

void check_relation(const KForm& lhs, const KForm& rhs, const char* name) {
    if (!(lhs == rhs))
        throw ConstraintError(std::string("flow relation violated: ") + name);
}

} // namespace

KForm step3_bfield(const ProductChart& chart, const OneForm& xi_p, const OneForm& xi_q) {
    int nv = chart.nvars();
    if (xi_p.dim() != nv || xi_q.dim() != nv)
        throw DimensionError("one-form over wrong chart");
    VectorField xp = chart.x_p();
    VectorField xq = chart.x_q();
    KForm fp = KForm::from_one_form(xi_p);
    KForm fq = KForm::from_one_form(xi_q);
    KForm dxp = d(fp);
    KForm dxq = d(fq);

    check_relation(lie_derivative(xp, fq), iota(xq, dxp),
                   "L_{X_p} xi_q = iota_{X_q} d xi_p");
    check_relation(lie_derivative(xq, fp), iota(xp, dxq),
                   "L_{X_q} xi_p = iota_{X_p} d xi_q");
    check_relation(lie_derivative(xp, fp), iota(xp, dxp),
                   "L_{X_p} xi_p = iota_{X_p} d xi_p");
    check_relation(lie_derivative(xq, fq), iota(xq, dxq),
                   "L_{X_q} xi_q = iota_{X_q} d xi_q");
    Polynomial zero(nv);
    for (int i = 0; i < nv; ++i) {
        if (!xi_p.c[i].substituted(0, zero).substituted(1, zero).is_zero())
            throw ConstraintError("xi_p does not vanish along the transverse slice");
        if (!xi_q.c[i].substituted(0, zero).substituted(1, zero).is_zero())
            throw ConstraintError("xi_q does not vanish along the transverse slice");
    }

    KForm b(nv, 2, nv);
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) {
            // int_0^a (d xi_q)_I(t, 0, n) dt - int_0^b (d xi_p)_I(a, s, n) ds
            Polynomial term1 = slice_integral(dxq.component({i, j}), 0, 0, {{1, zero}});
            Polynomial term2 = slice_integral(dxp.component({i, j}), 1, 1, {});
            b.set_component({i, j}, term1 - term2);
        }

    Step3Identities ids = step3_identities(chart, xi_p, xi_q, b);
    if (!ids.all_zero())
        throw ConstraintError("flow-integral B violates a characterizing identity");
    return b;
}

bool Step3Identities::all_zero() const {
    return lie_p.is_zero() && lie_q.is_zero() && iota_p.is_zero() && iota_q.is_zero() &&
           db.is_zero();
}

Step3Identities step3_identities(const ProductChart& chart, const OneForm& xi_p,
                                 const OneForm& xi_q, const KForm& b) {
    VectorField xp = chart.x_p();
    VectorField xq = chart.x_q();
    Step3Identities out;
    out.lie_p = lie_derivative(xp, b) - d(KForm::from_one_form(xi_p));
    out.lie_q = lie_derivative(xq, b) - d(KForm::from_one_form(xi_q));
    out.iota_p = iota(xp, b).to_one_form() - xi_p;
    out.iota_q = iota(xq, b).to_one_form() - xi_q;
    out.db = d(b);
    return out;
}

} // namespace gckit
