#ifndef GCKIT_POLYNOMIAL_HPP
#define GCKIT_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "gckit/scalar.hpp"

namespace gckit {

/// Exponent vector of a monomial; size equals the variable count of the
/// ambient polynomial ring.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// Graded lexicographic order: lower total degree first, ties broken
/// lexicographically.  Fixed project-wide so that printed polynomials and
/// echelon forms are canonical.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial over the Gaussian rationals.  The variable set is
/// fixed at construction (identified with indices 0..nvars-1); combining
/// polynomials over different variable sets is an error, never an implicit
/// union.  No zero coefficients are ever stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Gaussian, GradedLexLess>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars);

    static Polynomial constant(int nvars, const Gaussian& c);
    static Polynomial variable(int nvars, int index);
    static Polynomial monomial(int nvars, const Exponents& e, const Gaussian& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_real() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    Gaussian constant_term() const;
    Gaussian coeff(const Exponents& e) const;
    const TermMap& terms() const { return terms_; }

    Polynomial conj() const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Gaussian& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Gaussian& c) { return a *= c; }
    friend Polynomial operator*(const Gaussian& c, Polynomial a) { return a *= c; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned k) const;

    /// Exact partial derivative.
    Polynomial derivative(int var) const;
    /// Antiderivative in `var` with zero constant of integration.
    Polynomial antiderivative(int var) const;
    /// Exact definite integral over `var`; the bounds are polynomials in the
    /// remaining variables (they must not involve `var`).
    Polynomial definite_integral(int var, const Polynomial& lo, const Polynomial& hi) const;

    /// Full composition: substitute images[i] for variable i.  All images
    /// must share a common variable set, which becomes the result's.
    Polynomial compose(const std::vector<Polynomial>& images) const;
    /// Substitute a single variable, keeping the variable set.
    Polynomial substituted(int var, const Polynomial& value) const;
    /// Embed into a larger variable set (appended variables), or shrink to a
    /// smaller one provided the dropped variables do not occur.
    Polynomial resized(int new_nvars) const;

    Gaussian eval(const std::vector<Gaussian>& point) const;

    /// Canonical text form (descending graded-lex term order).  `names`
    /// defaults to x1..xd.
    std::string str(const std::vector<std::string>& names = {}) const;
    /// Parse the text grammar: terms like `3/2*x1^2*x2 - x3 + 1/4`, with `i`
    /// reserved for the imaginary unit; whitespace-insensitive.
    static Polynomial parse(const std::string& text, int nvars,
                            const std::vector<std::string>& names = {});

private:
    int nvars_;
    TermMap terms_;

    void add_term(const Exponents& e, const Gaussian& c);
};

void require_same_vars(const Polynomial& a, const Polynomial& b);
std::vector<std::string> default_var_names(int nvars);

} // namespace gckit

#endif
