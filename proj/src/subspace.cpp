#include "gckit/subspace.hpp"

namespace gckit {

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {
    if (ambient_dim < 0)
        throw DimensionError("negative ambient dimension");
}

Subspace Subspace::span(int ambient_dim, const GMat& rows) {
    if (rows.cols() != ambient_dim)
        throw DimensionError("basis row length does not match ambient dimension");
    GMat m = rows;
    std::vector<int> piv = rref_inplace(m);
    Subspace s(ambient_dim);
    s.basis_ = m.block(0, 0, static_cast<int>(piv.size()), ambient_dim);
    return s;
}

Subspace Subspace::full(int ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = gmat_identity(ambient_dim);
    return s;
}

std::optional<std::vector<Gaussian>> Subspace::coordinates(const std::vector<Gaussian>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw DimensionError("vector length does not match ambient dimension");
    // Solve c^T basis = v, i.e. basis^T c = v^T.
    std::vector<Gaussian> c;
    if (!solve(basis_.transpose(), v, c))
        return std::nullopt;
    return c;
}

bool Subspace::contains(const std::vector<Gaussian>& v) const {
    return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw DimensionError("ambient dimension mismatch");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i)))
            return false;
    return true;
}

Subspace Subspace::conj() const {
    return span(ambient_, gmat_conj(basis_));
}

Subspace Subspace::project(int c0, int len) const {
    if (c0 < 0 || c0 + len > ambient_)
        throw DimensionError("projection range out of bounds");
    return span(len, basis_.block(0, c0, dim(), len));
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("ambient dimension mismatch");
    GMat stacked(a.dim() + b.dim(), a.ambient_dim());
    stacked.set_block(0, 0, a.basis());
    stacked.set_block(a.dim(), 0, b.basis());
    return Subspace::span(a.ambient_dim(), stacked);
}

// Zassenhaus: echelonizing rows [a|a] and [b|0] makes the right half of the
// zero-left-half rows a basis of the intersection.
Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("ambient dimension mismatch");
    int n = a.ambient_dim();
    GMat work(a.dim() + b.dim(), 2 * n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < n; ++j) {
            work(i, j) = a.basis()(i, j);
            work(i, n + j) = a.basis()(i, j);
        }
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < n; ++j)
            work(a.dim() + i, j) = b.basis()(i, j);
    rref_inplace(work);
    GMat inter(work.rows(), n);
    int cnt = 0;
    for (int i = 0; i < work.rows(); ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            left_zero = work(i, j).is_zero();
        bool right_zero = true;
        for (int j = 0; j < n && right_zero; ++j)
            right_zero = work(i, n + j).is_zero();
        if (left_zero && !right_zero) {
            for (int j = 0; j < n; ++j)
                inter(cnt, j) = work(i, n + j);
            ++cnt;
        }
    }
    return Subspace::span(n, inter.block(0, 0, cnt, n));
}

Subspace annihilator(const Subspace& a, const GMat& gram) {
    int n = a.ambient_dim();
    if (gram.rows() != n || gram.cols() != n)
        throw DimensionError("gram matrix shape mismatch");
    if (!gmat_is_symmetric(gram) || det(gram).is_zero())
        throw ConstraintError("pairing must be a nondegenerate symmetric bilinear form");
    // v^T g a_i = 0 for all basis rows a_i  <=>  (A g^T) v = 0 with A = basis.
    GMat system = a.basis() * gram.transpose();
    return Subspace::span(n, kernel(system));
}

Subspace real_form(const Subspace& s) {
    if (!s.is_conjugation_stable())
        throw ConstraintError("subspace is not conjugation-stable");
    int n = s.ambient_dim();
    GMat parts(2 * s.dim(), n);
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < n; ++j) {
            const Gaussian& z = s.basis()(i, j);
            parts(2 * i, j) = Gaussian(z.re);
            parts(2 * i + 1, j) = Gaussian(z.im);
        }
    Subspace r = Subspace::span(n, parts);
    if (r.dim() != s.dim())
        throw ConstraintError("real form has wrong dimension");
    return r;
}

Subspace complexify(const Subspace& s) {
    if (!s.is_real())
        throw ConstraintError("complexify expects a real basis");
    return s;
}

} // namespace gckit
