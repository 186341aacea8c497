#include "gckit/matrix.hpp"

namespace gckit {

GMat gmat_identity(int n) {
    GMat m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = Gaussian(1);
    return m;
}

GMat gmat_conj(const GMat& m) {
    GMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).conj();
    return r;
}

bool gmat_is_real(const GMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_real())
                return false;
    return true;
}

bool gmat_is_skew(const GMat& m) {
    if (m.rows() != m.cols())
        return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j <= i; ++j)
            if (m(i, j) != -m(j, i))
                return false;
    return true;
}

bool gmat_is_symmetric(const GMat& m) {
    if (m.rows() != m.cols())
        return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (m(i, j) != m(j, i))
                return false;
    return true;
}

std::vector<int> rref_inplace(GMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0)
            continue;
        if (p != r)
            m.swap_rows(p, r);
        Gaussian inv = inverse(m(r, c));
        for (int j = c; j < m.cols(); ++j)
            m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Gaussian f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

GMat rref(const GMat& m) {
    GMat r = m;
    rref_inplace(r);
    return r;
}

int rank(const GMat& m) {
    GMat r = m;
    return static_cast<int>(rref_inplace(r).size());
}

Gaussian det(const GMat& m) {
    if (m.rows() != m.cols())
        throw DimensionError("determinant of non-square matrix");
    GMat a = m;
    int n = a.rows();
    Gaussian d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i) {
            if (!a(i, c).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0)
            return Gaussian();
        if (p != c) {
            a.swap_rows(p, c);
            d = -d;
        }
        d *= a(c, c);
        Gaussian inv = inverse(a(c, c));
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero())
                continue;
            Gaussian f = a(i, c) * inv;
            for (int j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

GMat inverse_of(const GMat& m) {
    if (m.rows() != m.cols())
        throw DimensionError("inverse of non-square matrix");
    int n = m.rows();
    if (n == 0)
        return m;
    GMat aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, gmat_identity(n));
    std::vector<int> piv = rref_inplace(aug);
    if (static_cast<int>(piv.size()) != n || piv.back() != n - 1)
        throw ConstraintError("matrix is singular");
    return aug.block(0, n, n, n);
}

GMat kernel(const GMat& m) {
    GMat r = m;
    std::vector<int> piv = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv)
        is_pivot[c] = true;
    int nfree = m.cols() - static_cast<int>(piv.size());
    GMat basis(nfree, m.cols());
    int row = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        basis(row, c) = Gaussian(1);
        for (size_t k = 0; k < piv.size(); ++k)
            basis(row, piv[k]) = -r(static_cast<int>(k), c);
        ++row;
    }
    rref_inplace(basis);
    return basis;
}

bool solve(const GMat& m, const std::vector<Gaussian>& rhs, std::vector<Gaussian>& out) {
    if (static_cast<int>(rhs.size()) != m.rows())
        throw DimensionError("solve: rhs length mismatch");
    GMat aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (int i = 0; i < m.rows(); ++i)
        aug(i, m.cols()) = rhs[i];
    std::vector<int> piv = rref_inplace(aug);
    if (!piv.empty() && piv.back() == m.cols())
        return false; // inconsistent
    out.assign(m.cols(), Gaussian());
    for (size_t k = 0; k < piv.size(); ++k)
        out[piv[k]] = aug(static_cast<int>(k), m.cols());
    return true;
}

PMat pmat_zero(int rows, int cols, int nvars) {
    return PMat(rows, cols, Polynomial(nvars));
}

PMat pmat_identity(int n, int nvars) {
    PMat m = pmat_zero(n, n, nvars);
    for (int i = 0; i < n; ++i)
        m(i, i) = Polynomial::constant(nvars, Gaussian(1));
    return m;
}

PMat pmat_from_gmat(const GMat& m, int nvars) {
    PMat r = pmat_zero(m.rows(), m.cols(), nvars);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r(i, j) = Polynomial::constant(nvars, m(i, j));
    return r;
}

GMat pmat_eval(const PMat& m, const std::vector<Gaussian>& point) {
    GMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).eval(point);
    return r;
}

bool pmat_is_skew(const PMat& m) {
    if (m.rows() != m.cols())
        return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j <= i; ++j)
            if (m(i, j) != -m(j, i))
                return false;
    return true;
}

Polynomial pmat_det(const PMat& m) {
    if (m.rows() != m.cols())
        throw DimensionError("determinant of non-square matrix");
    int n = m.rows();
    int nv = n > 0 ? m(0, 0).nvars() : 0;
    if (n == 0)
        return Polynomial::constant(nv, Gaussian(1));
    if (n == 1)
        return m(0, 0);
    // Cofactor expansion along the first row; fine at the small sizes that
    // occur here.
    Polynomial acc(nv);
    for (int j = 0; j < n; ++j) {
        if (m(0, j).is_zero())
            continue;
        PMat minor = pmat_zero(n - 1, n - 1, nv);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        Polynomial term = m(0, j) * pmat_det(minor);
        if (j % 2 == 1)
            term = -term;
        acc += term;
    }
    return acc;
}

PMat pmat_adjugate(const PMat& m) {
    if (m.rows() != m.cols())
        throw DimensionError("adjugate of non-square matrix");
    int n = m.rows();
    int nv = n > 0 ? m(0, 0).nvars() : 0;
    PMat adj = pmat_zero(n, n, nv);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            PMat minor = pmat_zero(n - 1, n - 1, nv);
            int rr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i)
                    continue;
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j)
                        continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            Polynomial cof = pmat_det(minor);
            if ((i + j) % 2 == 1)
                cof = -cof;
            adj(j, i) = cof;
        }
    }
    return adj;
}

PMat pmat_conj(const PMat& m) {
    PMat r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).conj();
    return r;
}

bool pmat_is_real(const PMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_real())
                return false;
    return true;
}

} // namespace gckit
