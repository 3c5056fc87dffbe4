#include <doctest.h>

#include "supermac/scalar.hpp"

using namespace supermac;

namespace {

// Small deterministic generator for property checks.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int range(int lo, int hi) { return lo + (int)(next() % (std::uint64_t)(hi - lo + 1)); }
};

IntPoly random_intpoly(Rng& rng, bool nonzero) {
    IntPoly p;
    int terms = rng.range(nonzero ? 1 : 0, 3);
    for (int i = 0; i < terms; ++i) {
        int c = rng.range(-4, 4);
        if (c == 0) c = 1;
        p.add_term(Integer(c), Mono{rng.range(0, 3), rng.range(0, 3), rng.range(0, 1)});
    }
    if (nonzero && p.is_zero()) p.add_term(1, Mono{1, 0, 0});
    return p;
}

Scalar random_scalar(Rng& rng, bool nonzero = false) {
    IntPoly num = random_intpoly(rng, nonzero);
    IntPoly den = random_intpoly(rng, true);
    return Scalar(num, den);
}

bool cross_equal(const Scalar& a, const Scalar& b) {
    return a.num() * b.den() == b.num() * a.den();
}

}  // namespace

TEST_CASE("normalize") {
    Scalar q = Scalar::q(), t = Scalar::t();
    // (q - q) / 1 = 0
    CHECK(normalize((q - q).num(), IntPoly(1)).is_zero());
    // (q^2 - 1)/(q - 1) = q + 1
    Scalar c = normalize((q * q - Scalar(1)).num(), (q - Scalar(1)).num());
    CHECK(c == q + Scalar(1));
    // ((1-q)(1-qt)) / (1-qt)^2 = (1-q)/(1-qt), checked by cross-products
    Scalar lhs = normalize(((Scalar(1) - q) * (Scalar(1) - q * t)).num(),
                           ((Scalar(1) - q * t) * (Scalar(1) - q * t)).num());
    Scalar rhs = (Scalar(1) - q) / (Scalar(1) - q * t);
    CHECK(cross_equal(lhs, rhs));
    CHECK(lhs == rhs);
    CHECK_THROWS(Scalar(IntPoly(1), IntPoly(0)));
}

TEST_CASE("normalize idempotent and construction-path stable") {
    Rng rng(7);
    for (int i = 0; i < 60; ++i) {
        Scalar a = random_scalar(rng);
        Scalar again = normalize(a.num(), a.den());
        CHECK(a == again);
        // multiply num and den by a common junk factor; same value
        IntPoly junk = random_intpoly(rng, true);
        Scalar b(a.num() * junk, a.den() * junk);
        CHECK(a == b);
    }
}

TEST_CASE("invert_qt") {
    Scalar q = Scalar::q(), t = Scalar::t();
    CHECK(Scalar(1).invert_qt() == Scalar(1));
    // 1 - q -> (q-1)/q
    CHECK((Scalar(1) - q).invert_qt() == (q - Scalar(1)) / q);
    // (1-q)/(1-qt) -> t(1-q)/(1-qt)
    Scalar a = (Scalar(1) - q) / (Scalar(1) - q * t);
    CHECK(a.invert_qt() == t * a);
    // involution, automorphism
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        Scalar x = random_scalar(rng), y = random_scalar(rng);
        CHECK(x.invert_qt().invert_qt() == x);
        CHECK((x * y).invert_qt() == x.invert_qt() * y.invert_qt());
        CHECK((x + y).invert_qt() == x.invert_qt() + y.invert_qt());
    }
    // u is left alone
    CHECK(Scalar::u().invert_qt() == Scalar::u());
}

TEST_CASE("qt_integer") {
    Scalar q = Scalar::q(), t = Scalar::t();
    CHECK(qt_integer(1, q, t) == Scalar(1));
    CHECK(qt_integer(2, q.inverse(), t) == q.inverse() + t);
    CHECK(qt_integer(3, q.inverse(), t.inverse()) ==
          q.pow(-2) + q.inverse() * t.inverse() + t.pow(-2));
    // divided-difference oracle where t1 != t2
    Scalar t1 = q * q, t2 = t;
    CHECK(qt_integer(4, t1, t2) == (t1.pow(4) - t2.pow(4)) / (t1 - t2));
    // well defined at t1 == t2
    CHECK(qt_integer(3, t, t) == Scalar(3) * t * t);
    CHECK_THROWS(qt_integer(0, q, t));
}

TEST_CASE("field axioms on random scalars") {
    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar());
        Scalar nz = random_scalar(rng, true);
        CHECK(nz * nz.inverse() == Scalar(1));
    }
}

TEST_CASE("gcd and exact division") {
    Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        IntPoly a = random_intpoly(rng, true);
        IntPoly b = random_intpoly(rng, true);
        IntPoly g = poly_gcd(a, b);
        CHECK(exact_divide(a, g) * g == a);
        CHECK(exact_divide(b, g) * g == b);
        // gcd of multiples contains the common factor
        IntPoly m = random_intpoly(rng, true);
        IntPoly g2 = poly_gcd(a * m, b * m);
        CHECK(exact_divide(g2, poly_gcd(g2, g * m)) == IntPoly(1));
    }
}
