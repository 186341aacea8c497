#include "gckit/cartan.hpp"

#include <algorithm>
#include <functional>

#include "gckit/errors.hpp"

namespace gckit {

namespace {

// Sorts idx in place; returns the permutation sign, or 0 on repeats.
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
        size_t j = i;
        while (j > 0 && idx[j] < idx[j - 1]) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
            --j;
        }
    }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1])
            return 0;
    return sign;
}

void require_compatible(const VectorField& a, const VectorField& b) {
    if (a.dim() != b.dim())
        throw DimensionError("vector field dimension mismatch");
}

} // namespace

bool VectorField::is_zero() const {
    for (const auto& p : c)
        if (!p.is_zero())
            return false;
    return true;
}

bool VectorField::is_real() const {
    for (const auto& p : c)
        if (!p.is_real())
            return false;
    return true;
}

VectorField VectorField::conj() const {
    VectorField r = *this;
    for (auto& p : r.c)
        p = p.conj();
    return r;
}

Polynomial VectorField::apply(const Polynomial& f) const {
    if (c.empty())
        return f - f;
    Polynomial acc(c.front().nvars());
    for (int i = 0; i < dim(); ++i)
        acc += c[i] * f.derivative(i);
    return acc;
}

VectorField VectorField::operator-() const {
    VectorField r = *this;
    for (auto& p : r.c)
        p = -p;
    return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
    require_compatible(*this, o);
    for (int i = 0; i < dim(); ++i)
        c[i] += o.c[i];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    require_compatible(*this, o);
    for (int i = 0; i < dim(); ++i)
        c[i] -= o.c[i];
    return *this;
}

VectorField VectorField::operator*(const Gaussian& s) const {
    VectorField r = *this;
    for (auto& p : r.c)
        p *= s;
    return r;
}

VectorField VectorField::operator*(const Polynomial& f) const {
    VectorField r = *this;
    for (auto& p : r.c)
        p *= f;
    return r;
}

bool OneForm::is_zero() const {
    for (const auto& p : c)
        if (!p.is_zero())
            return false;
    return true;
}

bool OneForm::is_real() const {
    for (const auto& p : c)
        if (!p.is_real())
            return false;
    return true;
}

OneForm OneForm::conj() const {
    OneForm r = *this;
    for (auto& p : r.c)
        p = p.conj();
    return r;
}

Polynomial OneForm::apply(const VectorField& x) const {
    if (dim() != x.dim())
        throw DimensionError("one-form/vector dimension mismatch");
    if (c.empty())
        return Polynomial(0);
    Polynomial acc(c.front().nvars());
    for (int i = 0; i < dim(); ++i)
        acc += c[i] * x.c[i];
    return acc;
}

OneForm OneForm::operator-() const {
    OneForm r = *this;
    for (auto& p : r.c)
        p = -p;
    return r;
}

OneForm& OneForm::operator+=(const OneForm& o) {
    if (dim() != o.dim())
        throw DimensionError("one-form dimension mismatch");
    for (int i = 0; i < dim(); ++i)
        c[i] += o.c[i];
    return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
    if (dim() != o.dim())
        throw DimensionError("one-form dimension mismatch");
    for (int i = 0; i < dim(); ++i)
        c[i] -= o.c[i];
    return *this;
}

OneForm OneForm::operator*(const Gaussian& s) const {
    OneForm r = *this;
    for (auto& p : r.c)
        p *= s;
    return r;
}

OneForm OneForm::operator*(const Polynomial& f) const {
    OneForm r = *this;
    for (auto& p : r.c)
        p *= f;
    return r;
}

KForm::KForm(int dim, int k, int nvars) : dim_(dim), k_(k), nvars_(nvars) {
    // k > dim is allowed: such forms are identically zero.
    if (k < 0)
        throw DimensionError("negative form degree");
}

KForm KForm::from_function(const Polynomial& f, int dim) {
    KForm w(dim, 0, f.nvars());
    w.set_component({}, f);
    return w;
}

KForm KForm::from_one_form(const OneForm& xi) {
    if (xi.c.empty())
        throw DimensionError("empty one-form");
    KForm w(xi.dim(), 1, xi.c.front().nvars());
    for (int i = 0; i < xi.dim(); ++i)
        w.set_component({i}, xi.c[i]);
    return w;
}

KForm KForm::two_form_term(int dim, int nvars, int i, int j, const Polynomial& c) {
    KForm w(dim, 2, nvars);
    w.add_component({i, j}, c);
    return w;
}

bool KForm::is_zero() const {
    return comp_.empty();
}

bool KForm::is_real() const {
    for (const auto& [i, p] : comp_)
        if (!p.is_real())
            return false;
    return true;
}

Polynomial KForm::component(const Index& idx) const {
    if (static_cast<int>(idx.size()) != k_)
        throw DimensionError("component index arity mismatch");
    Index s = idx;
    int sign = sort_sign(s);
    if (sign == 0)
        return Polynomial(nvars_);
    auto it = comp_.find(s);
    if (it == comp_.end())
        return Polynomial(nvars_);
    return sign > 0 ? it->second : -it->second;
}

void KForm::set_component(const Index& idx, const Polynomial& p) {
    if (static_cast<int>(idx.size()) != k_)
        throw DimensionError("component index arity mismatch");
    if (p.nvars() != nvars_)
        throw DimensionError("component over wrong variable set");
    Index s = idx;
    int sign = sort_sign(s);
    if (sign == 0) {
        if (!p.is_zero())
            throw ConstraintError("nonzero component on repeated indices");
        return;
    }
    for (int v : s)
        if (v < 0 || v >= dim_)
            throw DimensionError("component index out of range");
    Polynomial q = sign > 0 ? p : -p;
    if (q.is_zero())
        comp_.erase(s);
    else
        comp_[s] = q;
}

void KForm::add_component(const Index& idx, const Polynomial& p) {
    set_component(idx, component(idx) + p);
}

GMat KForm::eval_matrix_at(const std::vector<Gaussian>& point) const {
    if (k_ != 2)
        throw DimensionError("eval_matrix_at expects a 2-form");
    GMat m(dim_, dim_);
    for (const auto& [idx, p] : comp_) {
        Gaussian v = p.eval(point);
        m(idx[0], idx[1]) = v;
        m(idx[1], idx[0]) = -v;
    }
    return m;
}

PMat KForm::component_matrix() const {
    if (k_ != 2)
        throw DimensionError("component_matrix expects a 2-form");
    PMat m = pmat_zero(dim_, dim_, nvars_);
    for (const auto& [idx, p] : comp_) {
        m(idx[0], idx[1]) = p;
        m(idx[1], idx[0]) = -p;
    }
    return m;
}

KForm KForm::from_component_matrix(const PMat& m, int nvars) {
    if (m.rows() != m.cols())
        throw DimensionError("2-form matrix must be square");
    if (!pmat_is_skew(m))
        throw ConstraintError("2-form matrix must be skew-symmetric");
    KForm w(m.rows(), 2, nvars);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            w.set_component({i, j}, m(i, j));
    return w;
}

OneForm KForm::to_one_form() const {
    if (k_ != 1)
        throw DimensionError("to_one_form expects a 1-form");
    OneForm xi(dim_, nvars_);
    for (const auto& [idx, p] : comp_)
        xi.c[idx[0]] = p;
    return xi;
}

Polynomial KForm::to_function() const {
    if (k_ != 0)
        throw DimensionError("to_function expects a 0-form");
    auto it = comp_.find({});
    return it == comp_.end() ? Polynomial(nvars_) : it->second;
}

KForm KForm::conj() const {
    KForm r = *this;
    for (auto& [i, p] : r.comp_)
        p = p.conj();
    return r;
}

KForm KForm::operator-() const {
    KForm r = *this;
    for (auto& [i, p] : r.comp_)
        p = -p;
    return r;
}

KForm& KForm::operator+=(const KForm& o) {
    if (dim_ != o.dim_ || k_ != o.k_ || nvars_ != o.nvars_)
        throw DimensionError("form shape mismatch");
    for (const auto& [i, p] : o.comp_)
        set_component(i, component(i) + p);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) {
    if (dim_ != o.dim_ || k_ != o.k_ || nvars_ != o.nvars_)
        throw DimensionError("form shape mismatch");
    for (const auto& [i, p] : o.comp_)
        set_component(i, component(i) - p);
    return *this;
}

KForm KForm::operator*(const Gaussian& s) const {
    KForm r(dim_, k_, nvars_);
    if (s.is_zero())
        return r;
    for (const auto& [i, p] : comp_)
        r.comp_[i] = p * s;
    return r;
}

KForm KForm::operator*(const Polynomial& f) const {
    KForm r(dim_, k_, nvars_);
    for (const auto& [i, p] : comp_) {
        Polynomial q = p * f;
        if (!q.is_zero())
            r.comp_[i] = q;
    }
    return r;
}

bool KForm::operator==(const KForm& o) const {
    return dim_ == o.dim_ && k_ == o.k_ && nvars_ == o.nvars_ && comp_ == o.comp_;
}

KForm d(const KForm& w) {
    KForm r(w.dim(), w.k() + 1, w.nvars());
    for (const auto& [idx, p] : w.components()) {
        for (int j = 0; j < w.dim(); ++j) {
            // dx_j ^ dx_I vanishes when j already occurs in I
            if (std::find(idx.begin(), idx.end(), j) != idx.end())
                continue;
            Polynomial dp = p.derivative(j);
            if (dp.is_zero())
                continue;
            KForm::Index nidx;
            nidx.reserve(idx.size() + 1);
            nidx.push_back(j);
            nidx.insert(nidx.end(), idx.begin(), idx.end());
            r.set_component(nidx, r.component(nidx) + dp);
        }
    }
    return r;
}

KForm iota(const VectorField& x, const KForm& w) {
    if (x.dim() != w.dim())
        throw DimensionError("interior product dimension mismatch");
    if (w.k() == 0)
        throw DimensionError("interior product of a 0-form");
    KForm r(w.dim(), w.k() - 1, w.nvars());
    for (const auto& [idx, p] : w.components()) {
        // omega(X, e_{i_2}, ..., e_{i_k}) expanded over the slot X occupies.
        for (size_t pos = 0; pos < idx.size(); ++pos) {
            const Polynomial& xc = x.c[idx[pos]];
            if (xc.is_zero())
                continue;
            KForm::Index rest;
            rest.reserve(idx.size() - 1);
            for (size_t q = 0; q < idx.size(); ++q)
                if (q != pos)
                    rest.push_back(idx[q]);
            Polynomial term = xc * p;
            if (pos % 2 == 1)
                term = -term;
            r.set_component(rest, r.component(rest) + term);
        }
    }
    return r;
}

KForm lie_derivative(const VectorField& x, const KForm& w) {
    if (w.k() == 0) {
        KForm r(w.dim(), 0, w.nvars());
        r.set_component({}, x.apply(w.to_function()));
        return r;
    }
    return iota(x, d(w)) + d(iota(x, w));
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim() || a.nvars() != b.nvars())
        throw DimensionError("wedge dimension mismatch");
    KForm r(a.dim(), a.k() + b.k(), a.nvars());
    for (const auto& [ia, pa] : a.components()) {
        for (const auto& [ib, pb] : b.components()) {
            KForm::Index merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            KForm::Index sorted = merged;
            int sign = sort_sign(sorted);
            if (sign == 0)
                continue;
            Polynomial term = pa * pb;
            if (sign < 0)
                term = -term;
            r.set_component(sorted, r.component(sorted) + term);
        }
    }
    return r;
}

KForm pullback_affine(const KForm& w, const GMat& a, const std::vector<Polynomial>& t) {
    int n = w.dim();
    if (a.rows() != n || a.cols() != n || static_cast<int>(t.size()) != n)
        throw DimensionError("pullback map shape mismatch");
    std::vector<Polynomial> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) {
        Polynomial img = t[i];
        for (int j = 0; j < n; ++j)
            if (!a(i, j).is_zero())
                img += Polynomial::variable(w.nvars(), j) * a(i, j);
        images.push_back(img);
    }
    KForm r(n, w.k(), w.nvars());
    if (w.k() == 0) {
        r.set_component({}, w.to_function().compose(images));
        return r;
    }
    // Enumerate target index tuples J and contract with minors of A.
    std::vector<int> J(w.k());
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == w.k()) {
            Polynomial acc(w.nvars());
            for (const auto& [I, p] : w.components()) {
                // det of the submatrix A[I, J]
                int kk = w.k();
                GMat sub(kk, kk);
                for (int r1 = 0; r1 < kk; ++r1)
                    for (int c1 = 0; c1 < kk; ++c1)
                        sub(r1, c1) = a(I[r1], J[c1]);
                Gaussian m = det(sub);
                if (m.is_zero())
                    continue;
                acc += p.compose(images) * m;
            }
            r.set_component(J, acc);
            return;
        }
        for (int v = start; v < n; ++v) {
            J[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
    return r;
}

Polynomial lie_bracket_component(const VectorField& x, const VectorField& y, int i) {
    return x.apply(y.c[i]) - y.apply(x.c[i]);
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    if (x.dim() != y.dim())
        throw DimensionError("vector field dimension mismatch");
    VectorField r = x;
    for (int i = 0; i < x.dim(); ++i)
        r.c[i] = lie_bracket_component(x, y, i);
    return r;
}

Section::Section(VectorField v, OneForm f) : vec(std::move(v)), form(std::move(f)) {
    if (vec.dim() != form.dim())
        throw DimensionError("section components have different dimensions");
}

Section courant(const Section& a, const Section& b) {
    if (a.dim() != b.dim())
        throw DimensionError("section dimension mismatch");
    VectorField xy = lie_bracket(a.vec, b.vec);
    KForm eta = KForm::from_one_form(b.form);
    KForm xi = KForm::from_one_form(a.form);
    KForm cov = lie_derivative(a.vec, eta) - lie_derivative(b.vec, xi);
    // iota_X eta - iota_Y xi = eta(X) - xi(Y)
    Polynomial h = b.form.apply(a.vec) - a.form.apply(b.vec);
    KForm dh = d(KForm::from_function(h, a.dim()));
    cov -= dh * Gaussian(Rational(1, 2));
    return Section(xy, cov.to_one_form());
}

Polynomial pairing(const Section& a, const Section& b) {
    if (a.dim() != b.dim())
        throw DimensionError("section dimension mismatch");
    return a.form.apply(b.vec) + b.form.apply(a.vec);
}

} // namespace gckit
