#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gckit/cartan.hpp"
#include "gckit/errors.hpp"
#include "support/generators.hpp"

using namespace gckit;
using gckit::testing::Rng;

namespace {

VectorField vf(int dim, std::initializer_list<const char*> comps) {
    VectorField x(dim, dim);
    int i = 0;
    for (const char* c : comps)
        x.c[i++] = Polynomial::parse(c, dim);
    return x;
}

OneForm of(int dim, std::initializer_list<const char*> comps) {
    OneForm x(dim, dim);
    int i = 0;
    for (const char* c : comps)
        x.c[i++] = Polynomial::parse(c, dim);
    return x;
}

VectorField rand_vf(Rng& rng, int dim, int deg) {
    VectorField x(dim, dim);
    for (int i = 0; i < dim; ++i)
        x.c[i] = testing::rand_polynomial(rng, dim, deg, false);
    return x;
}

KForm rand_kform(Rng& rng, int dim, int k, int deg) {
    KForm w(dim, k, dim);
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            w.set_component(idx, testing::rand_polynomial(rng, dim, deg, false));
            return;
        }
        for (int v = start; v < dim; ++v) {
            idx[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
    return w;
}

} // namespace

TEST_CASE("lie bracket basics") {
    // [d/dx, x d/dy] = d/dy  (coordinates x=x1, y=x2)
    VectorField dx = vf(2, {"1", "0"});
    VectorField xdy = vf(2, {"0", "x1"});
    CHECK(lie_bracket(dx, xdy) == vf(2, {"0", "1"}));

    Rng rng(5);
    VectorField x = rand_vf(rng, 3, 2);
    CHECK(lie_bracket(x, x).is_zero());
}

TEST_CASE("lie bracket satisfies the Jacobi identity on random quadratic fields") {
    Rng rng(9);
    for (int t = 0; t < 10; ++t) {
        VectorField x = rand_vf(rng, 3, 2);
        VectorField y = rand_vf(rng, 3, 2);
        VectorField z = rand_vf(rng, 3, 2);
        VectorField j = lie_bracket(lie_bracket(x, y), z) + lie_bracket(lie_bracket(y, z), x) +
                        lie_bracket(lie_bracket(z, x), y);
        CHECK(j.is_zero());
    }
}

TEST_CASE("exterior derivative basics") {
    // d(x dy) = dx ^ dy
    KForm xdy = KForm::from_one_form(of(2, {"0", "x1"}));
    KForm dxdy = d(xdy);
    CHECK(dxdy.component({0, 1}) == Polynomial::constant(2, Gaussian(1)));

    Rng rng(15);
    for (int t = 0; t < 10; ++t) {
        Polynomial f = testing::rand_polynomial(rng, 3, 3, false);
        CHECK(d(d(KForm::from_function(f, 3))).is_zero());
    }
}

TEST_CASE("d^2 = 0 on k-forms of every degree") {
    Rng rng(19);
    for (int k = 0; k <= 2; ++k)
        for (int t = 0; t < 6; ++t)
            CHECK(d(d(rand_kform(rng, 4, k, 3))).is_zero());
}

TEST_CASE("interior product and Cartan formula") {
    // L_{d/dq}(dp ^ dq) = 0   (p=x1, q=x2)
    KForm omega = KForm::two_form_term(2, 2, 0, 1, Polynomial::constant(2, Gaussian(1)));
    VectorField dq = vf(2, {"0", "1"});
    CHECK(lie_derivative(dq, omega).is_zero());

    Rng rng(21);
    for (int k = 1; k <= 3; ++k) {
        for (int t = 0; t < 6; ++t) {
            KForm w = rand_kform(rng, 4, k, 2);
            VectorField x = rand_vf(rng, 4, 2);
            CHECK(iota(x, iota(x, wedge(w, rand_kform(rng, 4, 1, 1)))).is_zero());
            // magic formula against the two-route expansion
            KForm lhs = lie_derivative(x, w);
            KForm rhs = iota(x, d(w)) + d(iota(x, w));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("lie derivative is a derivation over wedge") {
    Rng rng(23);
    for (int t = 0; t < 8; ++t) {
        KForm a = rand_kform(rng, 3, 1, 2);
        KForm b = rand_kform(rng, 3, 1, 2);
        VectorField x = rand_vf(rng, 3, 2);
        CHECK(lie_derivative(x, wedge(a, b)) ==
              wedge(lie_derivative(x, a), b) + wedge(a, lie_derivative(x, b)));
    }
}

TEST_CASE("courant bracket evaluates the defining display") {
    // [[(d/dx, 0), (0, x dy)]] = (0, dy): the Lie-derivative term contributes
    // iota_{d/dx} d(x dy) = dy and the trailing exact term vanishes.
    Section a(vf(2, {"1", "0"}), of(2, {"0", "0"}));
    Section b(vf(2, {"0", "0"}), of(2, {"0", "x1"}));
    Section expect(vf(2, {"0", "0"}), of(2, {"0", "1"}));
    CHECK(courant(a, b) == expect);

    Rng rng(27);
    for (int t = 0; t < 8; ++t) {
        Section s(rand_vf(rng, 3, 2), OneForm(3, 3));
        for (int i = 0; i < 3; ++i)
            s.form.c[i] = testing::rand_polynomial(rng, 3, 2, false);
        CHECK(courant(s, s).is_zero());
        Section s2(rand_vf(rng, 3, 2), OneForm(3, 3));
        for (int i = 0; i < 3; ++i)
            s2.form.c[i] = testing::rand_polynomial(rng, 3, 2, false);
        CHECK((courant(s, s2) + courant(s2, s)).is_zero());
    }
}

TEST_CASE("courant bracket with nonvanishing contraction terms") {
    // a = (d/dx1, -x3 dx4), b = (d/dx4, x3 dx1 + x1 dx3): the Lie-derivative
    // term dx3 cancels against -1/2 d(iota_X eta - iota_Y xi) = -dx3.
    Section a(vf(4, {"1", "0", "0", "0"}), of(4, {"0", "0", "0", "-x3"}));
    Section b(vf(4, {"0", "0", "0", "1"}), of(4, {"x3", "0", "x1", "0"}));
    CHECK(courant(a, b).is_zero());
}

TEST_CASE("the action (X, xi) -> (X, xi + iota_X B) preserves the bracket for closed B") {
    Rng rng(41);
    for (int t = 0; t < 6; ++t) {
        // B = d(alpha) for a random polynomial one-form alpha, so dB = 0
        OneForm alpha(4, 4);
        for (int i = 0; i < 4; ++i)
            alpha.c[i] = testing::rand_polynomial(rng, 4, 2, false);
        KForm bfield = d(KForm::from_one_form(alpha));
        auto act = [&](const Section& s) {
            return Section(s.vec, s.form + iota(s.vec, bfield).to_one_form());
        };
        Section s1(rand_vf(rng, 4, 2), OneForm(4, 4));
        Section s2(rand_vf(rng, 4, 2), OneForm(4, 4));
        for (int i = 0; i < 4; ++i) {
            s1.form.c[i] = testing::rand_polynomial(rng, 4, 2, false);
            s2.form.c[i] = testing::rand_polynomial(rng, 4, 2, false);
        }
        CHECK(courant(act(s1), act(s2)) == act(courant(s1, s2)));
    }
}

TEST_CASE("pairing of sections") {
    Section a(vf(1, {"1"}), of(1, {"0"}));
    Section b(vf(1, {"0"}), of(1, {"1"}));
    CHECK(pairing(a, b) == Polynomial::constant(1, Gaussian(1)));
    Section c(vf(1, {"1"}), of(1, {"1"}));
    CHECK(pairing(c, c) == Polynomial::constant(1, Gaussian(2)));

    Rng rng(31);
    for (int t = 0; t < 6; ++t) {
        Section x(rand_vf(rng, 2, 2), OneForm(2, 2));
        Section y(rand_vf(rng, 2, 2), OneForm(2, 2));
        x.form.c = {testing::rand_polynomial(rng, 2, 2, false),
                    testing::rand_polynomial(rng, 2, 2, false)};
        y.form.c = {testing::rand_polynomial(rng, 2, 2, false),
                    testing::rand_polynomial(rng, 2, 2, false)};
        Polynomial f = testing::rand_polynomial(rng, 2, 2, false);
        CHECK(pairing(x, y) == pairing(y, x));
        // bilinearity over polynomial coefficients
        Section fx(x.vec * f, x.form * f);
        CHECK(pairing(fx, y) == f * pairing(x, y));
    }
}

TEST_CASE("pullback by affine substitution commutes with d and wedge") {
    Rng rng(35);
    for (int t = 0; t < 6; ++t) {
        GMat a(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                a(i, j) = Gaussian(testing::rand_rational(rng));
        std::vector<Polynomial> shift;
        for (int i = 0; i < 3; ++i)
            shift.push_back(Polynomial::constant(3, Gaussian(testing::rand_rational(rng))));
        KForm w = rand_kform(rng, 3, 1, 2);
        CHECK(pullback_affine(d(w), a, shift) == d(pullback_affine(w, a, shift)));
        KForm u = rand_kform(rng, 3, 1, 2);
        CHECK(pullback_affine(wedge(w, u), a, shift) ==
              wedge(pullback_affine(w, a, shift), pullback_affine(u, a, shift)));
    }
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(lie_bracket(vf(2, {"1", "0"}), vf(3, {"1", "0", "0"})), DimensionError);
    CHECK_THROWS_AS(pairing(Section(vf(2, {"1", "0"}), of(2, {"0", "0"})),
                            Section(vf(1, {"1"}), of(1, {"0"}))),
                    DimensionError);
}
