#ifndef GCKIT_CARTAN_HPP
#define GCKIT_CARTAN_HPP

#include <map>
#include <vector>

#include "gckit/matrix.hpp"
#include "gckit/polynomial.hpp"

namespace gckit {

/// Polynomial vector field on R^d: one component per coordinate, all over the
/// same variable set.  Complex (Gaussian) coefficients are permitted; reality
/// is a predicate, not a type distinction.
struct VectorField {
    std::vector<Polynomial> c;

    VectorField() = default;
    explicit VectorField(int dim, int nvars) : c(dim, Polynomial(nvars)) {}

    int dim() const { return static_cast<int>(c.size()); }
    bool is_zero() const;
    bool is_real() const;
    VectorField conj() const;
    /// Directional derivative X(f).
    Polynomial apply(const Polynomial& f) const;

    VectorField operator-() const;
    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    VectorField operator*(const Gaussian& s) const;
    VectorField operator*(const Polynomial& f) const;
    bool operator==(const VectorField& o) const { return c == o.c; }
};

/// Polynomial one-form; same storage as a vector field, dual meaning.
struct OneForm {
    std::vector<Polynomial> c;

    OneForm() = default;
    explicit OneForm(int dim, int nvars) : c(dim, Polynomial(nvars)) {}

    int dim() const { return static_cast<int>(c.size()); }
    bool is_zero() const;
    bool is_real() const;
    OneForm conj() const;
    /// Pairing xi(X).
    Polynomial apply(const VectorField& x) const;

    OneForm operator-() const;
    OneForm& operator+=(const OneForm& o);
    OneForm& operator-=(const OneForm& o);
    friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
    friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
    OneForm operator*(const Gaussian& s) const;
    OneForm operator*(const Polynomial& f) const;
    bool operator==(const OneForm& o) const { return c == o.c; }
};

/// Differential k-form with polynomial coefficients, stored on strictly
/// increasing index tuples only; evaluation antisymmetrizes.
class KForm {
public:
    using Index = std::vector<int>; // strictly increasing
    using CompMap = std::map<Index, Polynomial>;

    KForm() : dim_(0), k_(0), nvars_(0) {}
    KForm(int dim, int k, int nvars);

    static KForm from_function(const Polynomial& f, int dim);
    static KForm from_one_form(const OneForm& xi);
    /// c * dx_i ^ dx_j (i != j, any order).
    static KForm two_form_term(int dim, int nvars, int i, int j, const Polynomial& c);

    int dim() const { return dim_; }
    int k() const { return k_; }
    int nvars() const { return nvars_; }
    bool is_zero() const;
    bool is_real() const;
    const CompMap& components() const { return comp_; }

    /// Component on an arbitrary index tuple (antisymmetrized; zero on
    /// repeated indices).
    Polynomial component(const Index& idx) const;
    void set_component(const Index& idx, const Polynomial& p);
    void add_component(const Index& idx, const Polynomial& p);

    /// Skew matrix of a 2-form: m(i,j) = omega(e_i, e_j).
    GMat eval_matrix_at(const std::vector<Gaussian>& point) const;
    PMat component_matrix() const;
    static KForm from_component_matrix(const PMat& m, int nvars);

    OneForm to_one_form() const;
    Polynomial to_function() const;

    KForm conj() const;
    KForm operator-() const;
    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    KForm operator*(const Gaussian& s) const;
    KForm operator*(const Polynomial& f) const;
    bool operator==(const KForm& o) const;
    bool operator!=(const KForm& o) const { return !(*this == o); }

private:
    int dim_, k_, nvars_;
    CompMap comp_;
};

KForm d(const KForm& w);
KForm iota(const VectorField& x, const KForm& w);
/// Cartan formula: L_X = d iota_X + iota_X d.
KForm lie_derivative(const VectorField& x, const KForm& w);
KForm wedge(const KForm& a, const KForm& b);

/// Pullback along the affine map x -> A x + t (A constant, t polynomial in
/// the target coordinates): coefficients compose with the map and indices
/// contract with A.
KForm pullback_affine(const KForm& w, const GMat& a, const std::vector<Polynomial>& t);

Polynomial lie_bracket_component(const VectorField& x, const VectorField& y, int i);
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// Section (X, xi) of the generalized tangent space.
struct Section {
    VectorField vec;
    OneForm form;

    Section() = default;
    Section(VectorField v, OneForm f);
    int dim() const { return vec.dim(); }
    bool is_zero() const { return vec.is_zero() && form.is_zero(); }
    Section conj() const { return Section(vec.conj(), form.conj()); }
    Section operator-() const { return Section(-vec, -form); }
    friend Section operator+(const Section& a, const Section& b) {
        return Section(a.vec + b.vec, a.form + b.form);
    }
    friend Section operator-(const Section& a, const Section& b) {
        return Section(a.vec - b.vec, a.form - b.form);
    }
    Section operator*(const Gaussian& s) const { return Section(vec * s, form * s); }
    bool operator==(const Section& o) const { return vec == o.vec && form == o.form; }
};

/// Courant bracket
///   [[(X,xi),(Y,eta)]] = ([X,Y], L_X eta - L_Y xi - 1/2 d(iota_X eta - iota_Y xi)).
Section courant(const Section& a, const Section& b);

/// <(X,xi),(Y,eta)> = xi(Y) + eta(X); the symmetric pairing, no 1/2 factor.
Polynomial pairing(const Section& a, const Section& b);

} // namespace gckit

#endif
