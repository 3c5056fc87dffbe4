#include <doctest.h>

#include "supermac/nvar.hpp"
#include "supermac/superpoly.hpp"

using namespace supermac;

namespace {

SuperPolynomial pi(int k) {
    return mul_pi_poly(k, SuperPolynomial::one());
}

SuperPolynomial p(int k) {
    return mul_p_poly(k, SuperPolynomial::one());
}

}  // namespace

TEST_CASE("canonical ordering and signs") {
    // pi_2 pi_1 is canonical; pi_1 pi_2 reorders with a sign
    SuperPolynomial a = mul_pi_poly(2, pi(1));
    CHECK(a == SuperPolynomial::basis(SuperPartition::parse("3/2,1/2")));
    SuperPolynomial b = mul_pi_poly(1, pi(2));
    CHECK(b == -a);
    CHECK(mul_pi_poly(1, pi(1)).is_zero());
    // d_p on a power
    SuperPolynomial p1sq = mul_p_poly(1, p(1));
    CHECK(d_p_poly(1, p1sq) == p(1) * Scalar(2));
    // left Grassmann derivative signs
    CHECK(d_pi_poly(1, a) == -pi(2));
    CHECK(d_pi_poly(2, a) == pi(1));
}

TEST_CASE("anticommutator of d_pi and mul_pi is the identity") {
    for (int k : {1, 2, 3}) {
        for (int l2 = 0; l2 <= 6; ++l2) {
            for (const auto& part : basis_level(l2)) {
                SuperPolynomial f = SuperPolynomial::basis(part);
                SuperPolynomial got =
                    d_pi_poly(k, mul_pi_poly(k, f)) + mul_pi_poly(k, d_pi_poly(k, f));
                CHECK(got == f);
            }
        }
    }
}

TEST_CASE("graded operator windows") {
    GradedOperator op = mul_pi(2, 6);
    CHECK(op.degree2() == 3);
    CHECK_THROWS(op.apply(SuperPartition::parse("7/2")));
    GradedOperator sum = compose(d_pi(2, 9), mul_pi(2, 6)) + compose(mul_pi(2, 3), d_pi(2, 6));
    CHECK(sum.degree2() == 0);
    // the anticommutator of mul/d pi is the identity on the common window
    CHECK(!GradedOperator::first_difference(sum, GradedOperator::identity(3)).has_value());
}

TEST_CASE("level homogeneity of primitive operators") {
    for (int l2 = 0; l2 <= 5; ++l2)
        for (const auto& part : basis_level(l2)) {
            SuperPolynomial f = SuperPolynomial::basis(part);
            CHECK(mul_p_poly(2, f).level_homogeneous(l2 + 4));
            SuperPolynomial g = mul_pi_poly(3, f);
            if (!g.is_zero()) CHECK(g.level_homogeneous(l2 + 5));
            SuperPolynomial h = d_pi_poly(1, f);
            if (!h.is_zero()) CHECK(h.level_homogeneous(l2 - 1));
        }
}

TEST_CASE("expand_in_variables") {
    // p_1 pi_1 at N=2: (x1+x2)(th1+th2)
    NVarSuperPoly e = expand_in_variables(mul_p_poly(1, pi(1)), 2);
    CHECK(e.coeff(NVarKey{{1, 0}, 1u}) == Scalar(1));   // x1 th1
    CHECK(e.coeff(NVarKey{{1, 0}, 2u}) == Scalar(1));   // x1 th2
    CHECK(e.coeff(NVarKey{{0, 1}, 1u}) == Scalar(1));
    CHECK(e.coeff(NVarKey{{0, 1}, 2u}) == Scalar(1));
    // pi_2 pi_1 at N=2: (th1 x1 + th2 x2)(th1 + th2) = (x1 - x2) th1 th2
    NVarSuperPoly f = expand_in_variables(mul_pi_poly(2, pi(1)), 2);
    CHECK(f.coeff(NVarKey{{1, 0}, 3u}) == Scalar(1));
    CHECK(f.coeff(NVarKey{{0, 1}, 3u}) == Scalar(-1));
    // ring homomorphism on products for N large enough
    SuperPolynomial a = mul_p_poly(2, pi(2));
    SuperPolynomial b = mul_pi_poly(3, p(1));
    NVarSuperPoly lhs = expand_in_variables(poly_product(a, b), 7);
    NVarSuperPoly rhs = expand_in_variables(a, 7) * expand_in_variables(b, 7);
    CHECK(lhs == rhs);
}

TEST_CASE("expansion symmetry and Grassmann sign oracle") {
    // every basis expansion is invariant under simultaneous permutations
    for (int l2 = 0; l2 <= 5; ++l2)
        for (const auto& part : basis_level(l2))
            CHECK(expand_in_variables(SuperPolynomial::basis(part), 3).symmetric());
    // oracle: transposition count for a 3-letter theta word
    // th2 th1 th3 = - th1 th2 th3
    NVarSuperPoly w(3);
    w.add_term(NVarKey{{0, 0, 0}, 2u}, Scalar(1));  // th2
    NVarSuperPoly v(3);
    v.add_term(NVarKey{{0, 0, 0}, 1u}, Scalar(1));  // th1
    NVarSuperPoly u(3);
    u.add_term(NVarKey{{0, 0, 0}, 4u}, Scalar(1));  // th3
    NVarSuperPoly prod = (w * v) * u;
    CHECK(prod.coeff(NVarKey{{0, 0, 0}, 7u}) == Scalar(-1));
}

TEST_CASE("dominant coefficient") {
    // M_{(1,1/2)} = p_1 pi_1 - pi_2: coefficient of x1 th2 is 1
    SuperPolynomial m = mul_p_poly(1, pi(1)) - pi(2);
    CHECK(dominant_coefficient(m, SuperPartition::parse("1,1/2"), 2) == Scalar(1));
    CHECK(dominant_coefficient(p(1), SuperPartition::parse("1"), 1) == Scalar(1));
    // agrees with the full expansion read-off
    SuperPartition lam = SuperPartition::parse("2,1/2");
    SuperPolynomial f = mul_p_poly(2, pi(1)) + mul_p_poly(1, pi(2)) * Scalar(3);
    NVarKey key{{2, 0, 0}, 2u};  // x1^2 th2
    CHECK(dominant_coefficient(f, lam, 3) == expand_in_variables(f, 3).coeff(key));
    CHECK_THROWS(dominant_coefficient(f, lam, 1));
}

TEST_CASE("divide_linear") {
    // (x1^2 - x2^2) / (x1 - x2) = x1 + x2
    NVarSuperPoly f(2);
    f.add_term(NVarKey{{2, 0}, 0}, Scalar(1));
    f.add_term(NVarKey{{0, 2}, 0}, Scalar(-1));
    NVarSuperPoly g = divide_linear(f, 0, 1, Scalar(1));
    NVarSuperPoly want(2);
    want.add_term(NVarKey{{1, 0}, 0}, Scalar(1));
    want.add_term(NVarKey{{0, 1}, 0}, Scalar(1));
    CHECK(g == want);
    NVarSuperPoly bad(2);
    bad.add_term(NVarKey{{1, 0}, 0}, Scalar(1));
    bad.add_term(NVarKey{{0, 1}, 0}, Scalar(1));
    CHECK_THROWS(divide_linear(bad, 0, 1, Scalar(1)));
}
