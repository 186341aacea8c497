#ifndef GCKIT_SUBSPACE_HPP
#define GCKIT_SUBSPACE_HPP

#include <optional>
#include <vector>

#include "gckit/matrix.hpp"

namespace gckit {

/// A linear subspace of C^n over the Gaussian rationals, held as the reduced
/// row echelon basis (one basis vector per row, no zero rows).  Two subspaces
/// are equal exactly when their echelon bases are identical, which makes
/// equality a syntactic check.
class Subspace {
public:
    explicit Subspace(int ambient_dim);

    /// Span of the rows of `rows` (echelonized, zero rows dropped).
    static Subspace span(int ambient_dim, const GMat& rows);
    static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const GMat& basis() const { return basis_; }
    std::vector<Gaussian> basis_vector(int i) const { return basis_.row(i); }

    bool contains(const std::vector<Gaussian>& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the echelon basis, if v lies in the subspace.
    std::optional<std::vector<Gaussian>> coordinates(const std::vector<Gaussian>& v) const;

    /// Entrywise complex conjugation of the basis, re-echelonized.
    Subspace conj() const;
    bool is_conjugation_stable() const { return *this == conj(); }
    bool is_real() const { return gmat_is_real(basis_); }

    /// Image under the coordinate projection onto columns [c0, c0+len).
    Subspace project(int c0, int len) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    int ambient_;
    GMat basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// { v : pairing(v, a) = 0 for all a in the subspace }, where
/// pairing(v, w) = v^T g w.  Requires a nondegenerate symmetric g.
Subspace annihilator(const Subspace& a, const GMat& gram);

/// Real points of a conjugation-stable complex subspace, as a subspace with a
/// real echelon basis of the same dimension.
Subspace real_form(const Subspace& s);

/// Complexification of a subspace given by a real basis (same basis, viewed
/// over the Gaussian rationals; this is just a checked copy).
Subspace complexify(const Subspace& s);

} // namespace gckit

#endif
