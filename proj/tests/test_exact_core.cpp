#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gckit/errors.hpp"
#include "gckit/matrix.hpp"
#include "gckit/polynomial.hpp"
#include "gckit/subspace.hpp"
#include "support/generators.hpp"

using namespace gckit;
using gckit::testing::Rng;

TEST_CASE("gaussian rational field arithmetic") {
    Gaussian a(Rational(1, 2), Rational(3, 4));
    Gaussian b(Rational(-2), Rational(1, 3));
    CHECK(a + b - b == a);
    CHECK((a * b) / b == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
    CHECK(Gaussian::i() * Gaussian::i() == Gaussian(-1));
    CHECK_THROWS_AS(a / Gaussian(), ConstraintError);
    CHECK(to_string(Gaussian(Rational(1, 2), Rational(-3, 4))) == "1/2-3/4*i");
}

TEST_CASE("rational parsing is canonical") {
    CHECK(rational_from_string("6/4") == Rational(3, 2));
    CHECK(rational_from_string("-10/5") == Rational(-2));
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("x"), ParseError);
}

TEST_CASE("polynomial grammar round trip") {
    Polynomial p = Polynomial::parse("3/2*x1^2*x2 - x3 + 1/4", 3);
    Exponents e{2, 1, 0};
    CHECK(p.coeff(e) == Gaussian(Rational(3, 2)));
    CHECK(p.coeff({0, 0, 1}) == Gaussian(-1));
    CHECK(p.constant_term() == Gaussian(Rational(1, 4)));
    CHECK(Polynomial::parse(p.str(), 3) == p);

    Polynomial q = Polynomial::parse("(1/2+3/4*i)*x1 - 2*i", 1);
    CHECK(q.coeff({1}) == Gaussian(Rational(1, 2), Rational(3, 4)));
    CHECK(Polynomial::parse(q.str(), 1) == q);

    CHECK_THROWS_AS(Polynomial::parse("x4", 3), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x1/x2", 2), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x1 +", 2), ParseError);
}

TEST_CASE("polynomial printing of random polynomials parses back") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        Polynomial p = testing::rand_polynomial(rng, 4, 4, false);
        CHECK(Polynomial::parse(p.str(), 4) == p);
    }
}

TEST_CASE("polynomial ring axioms on random triples") {
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        Polynomial a = testing::rand_polynomial(rng, 3, 3, false);
        Polynomial b = testing::rand_polynomial(rng, 3, 3, false);
        Polynomial c = testing::rand_polynomial(rng, 3, 3, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("differentiation: Leibniz rule holds exactly") {
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        Polynomial a = testing::rand_polynomial(rng, 3, 3, false);
        Polynomial b = testing::rand_polynomial(rng, 3, 3, false);
        for (int v = 0; v < 3; ++v)
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
}

TEST_CASE("variable set mixing is an error") {
    Polynomial a = Polynomial::variable(2, 0);
    Polynomial b = Polynomial::variable(3, 0);
    CHECK_THROWS_AS(a + b, DimensionError);
    CHECK_THROWS_AS(a * b, DimensionError);
}

TEST_CASE("definite integrals") {
    // int_0^a 1 dt with variables (a, t)
    Polynomial one = Polynomial::constant(2, Gaussian(1));
    Polynomial a = Polynomial::variable(2, 0);
    CHECK(one.definite_integral(1, Polynomial(2) , a) == a);

    // int_0^b s ds with variables (s, b)
    Polynomial s = Polynomial::variable(2, 0);
    Polynomial b = Polynomial::variable(2, 1);
    Polynomial half_b2 = Polynomial::parse("1/2*x2^2", 2);
    CHECK(s.definite_integral(0, Polynomial(2), b) == half_b2);

    // d/dx int_0^x p(t) dt = p(x) for random cubics: variables (x, t)
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        Polynomial pt = testing::rand_polynomial(rng, 2, 3, false);
        // make p a function of t alone
        Polynomial p = pt.substituted(0, Polynomial::constant(2, Gaussian(1)));
        Polynomial x = Polynomial::variable(2, 0);
        Polynomial integral = p.definite_integral(1, Polynomial(2), x);
        Polynomial back = p.substituted(1, x);
        CHECK(integral.derivative(0) == back);
    }
    CHECK_THROWS_AS(s.definite_integral(0, Polynomial(2), s), DimensionError);
}

TEST_CASE("rref basics") {
    CHECK(rref(gmat_identity(2)) == gmat_identity(2));
    GMat m(2, 2);
    m(0, 1) = Gaussian(1);
    m(1, 1) = Gaussian(2);
    GMat expect(2, 2);
    expect(0, 1) = Gaussian(1);
    CHECK(rref(m) == expect);
}

namespace {

// Rank oracle: size of the largest nonvanishing minor, checked exhaustively.
int minor_rank(const GMat& m) {
    int best = 0;
    int n = m.rows(), c = m.cols();
    std::vector<int> rsel, csel;
    std::function<bool(int, int, int)> any_minor = [&](int k, int rstart, int cstart) -> bool {
        if (static_cast<int>(rsel.size()) == k) {
            if (static_cast<int>(csel.size()) == k) {
                GMat sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        sub(i, j) = m(rsel[i], csel[j]);
                return !det(sub).is_zero();
            }
            for (int j = cstart; j < c; ++j) {
                csel.push_back(j);
                bool ok = any_minor(k, rstart, j + 1);
                csel.pop_back();
                if (ok)
                    return true;
            }
            return false;
        }
        for (int i = rstart; i < n; ++i) {
            rsel.push_back(i);
            bool ok = any_minor(k, i + 1, cstart);
            rsel.pop_back();
            if (ok)
                return true;
        }
        return false;
    };
    for (int k = 1; k <= std::min(n, c); ++k) {
        rsel.clear();
        csel.clear();
        if (any_minor(k, 0, 0))
            best = k;
    }
    return best;
}

} // namespace

TEST_CASE("rref rank agrees with the exhaustive minor-rank oracle on 5x5") {
    Rng rng(23);
    for (int t = 0; t < 8; ++t) {
        GMat m = testing::rand_gmat(rng, 5, 5);
        if (t % 2 == 0) {
            // plant rank deficiency: last row = sum of the first two
            for (int j = 0; j < 5; ++j)
                m(4, j) = m(0, j) + m(1, j);
        }
        CHECK(rank(m) == minor_rank(m));
        CHECK(Subspace::span(5, rref(m)) == Subspace::span(5, m));
    }
}

TEST_CASE("kernel and solve") {
    Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        GMat m = testing::rand_gmat(rng, 4, 6);
        GMat k = kernel(m);
        CHECK(k.rows() == 6 - rank(m));
        for (int r = 0; r < k.rows(); ++r) {
            std::vector<Gaussian> x = k.row(r);
            for (int i = 0; i < 4; ++i) {
                Gaussian acc;
                for (int j = 0; j < 6; ++j)
                    acc += m(i, j) * x[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("subspace dimension formula dim(a+b) + dim(a n b) = dim a + dim b") {
    Rng rng(31);
    for (int ambient : {3, 6, 12}) {
        for (int t = 0; t < 12; ++t) {
            Subspace a = testing::rand_subspace(rng, ambient, 1 + t % (ambient / 2));
            Subspace b = testing::rand_subspace(rng, ambient, 1 + (t + 1) % (ambient / 2));
            Subspace s = sum(a, b);
            Subspace i = intersect(a, b);
            CHECK(s.dim() + i.dim() == a.dim() + b.dim());
            CHECK(a.contains(i));
            CHECK(b.contains(i));
            CHECK(s.contains(a));
            CHECK(s.contains(b));
        }
    }
}

TEST_CASE("annihilator") {
    GMat e1(1, 2);
    e1(0, 0) = Gaussian(1);
    Subspace a = Subspace::span(2, e1);
    Subspace ann = annihilator(a, gmat_identity(2));
    GMat e2(1, 2);
    e2(0, 1) = Gaussian(1);
    CHECK(ann == Subspace::span(2, e2));

    CHECK(annihilator(Subspace::full(3), gmat_identity(3)).dim() == 0);

    GMat degenerate(2, 2);
    degenerate(0, 0) = Gaussian(1);
    CHECK_THROWS_AS(annihilator(a, degenerate), ConstraintError);

    // double annihilator is the identity for nondegenerate symmetric pairings
    Rng rng(37);
    for (int t = 0; t < 10; ++t) {
        GMat g(4, 4);
        do {
            GMat r = testing::rand_gmat(rng, 4, 4);
            g = r + r.transpose();
        } while (det(g).is_zero());
        Subspace s = testing::rand_subspace(rng, 4, 2);
        Subspace ann2 = annihilator(annihilator(s, g), g);
        CHECK(ann2 == s);
        CHECK(annihilator(s, g).dim() == 4 - s.dim());
    }
}

TEST_CASE("conjugation of subspaces") {
    Rng rng(41);
    Subspace real = testing::rand_subspace(rng, 4, 2);
    GMat realized(real.dim(), 4);
    for (int i = 0; i < real.dim(); ++i)
        for (int j = 0; j < 4; ++j)
            realized(i, j) = Gaussian(real.basis()(i, j).re);
    Subspace r = Subspace::span(4, realized);
    CHECK(r.conj() == r);

    GMat v(1, 2);
    v(0, 0) = Gaussian(1);
    v(0, 1) = Gaussian::i();
    Subspace s = Subspace::span(2, v);
    GMat w(1, 2);
    w(0, 0) = Gaussian(1);
    w(0, 1) = -Gaussian::i();
    CHECK(s.conj() == Subspace::span(2, w));
}

TEST_CASE("projection of subspaces") {
    GMat rows(2, 4);
    rows(0, 0) = Gaussian(1);
    rows(0, 2) = Gaussian(2);
    rows(1, 1) = Gaussian(1);
    rows(1, 3) = Gaussian(-1);
    Subspace s = Subspace::span(4, rows);
    CHECK(s.project(0, 2) == Subspace::full(2));
    CHECK(s.project(2, 2).dim() == 2);
}
