#include <doctest.h>

#include "supermac/fockrep.hpp"

using namespace supermac;

namespace {

const Scalar kOne(1);

FockState state(const char* label) {
    return FockState::from_super(SuperPartition::parse(label));
}

Scalar coeff_on(const std::vector<FockTerm>& terms, const char* label) {
    SuperPartition want = SuperPartition::parse(label);
    Scalar acc;
    for (const auto& t : terms)
        if (t.state.to_super() == want) acc += t.coeff;
    return acc;
}

}  // namespace

TEST_CASE("dictionary round trip") {
    for (int l2 = 0; l2 <= 8; ++l2)
        for (const auto& p : basis_level(l2)) {
            FockState st = FockState::from_super(p);
            CHECK(st.to_super() == p);
            CHECK(st.lam == p.circledstar());
        }
}

TEST_CASE("pieri_E basics") {
    const Scalar q = Scalar::q(), t = Scalar::t();
    // E_{1,0} on the vacuum creates M_{(1/2)} with coefficient 1
    auto vac = pieri_E(1, 0, state("0"));
    REQUIRE(vac.size() == 1);
    CHECK(vac[0].coeff == kOne);
    CHECK(vac[0].state.to_super() == SuperPartition::parse("1/2"));
    // E_{1,0} on (1): 1 on (3/2) and (1-q)/(1-qt) on (1,1/2)
    auto on1 = pieri_E(1, 0, state("1"));
    CHECK(coeff_on(on1, "3/2") == kOne);
    CHECK(coeff_on(on1, "1,1/2") == (kOne - q) / (kOne - q * t));
    // E_{2,0} on (1/2): coefficient (1-t) on (1)
    auto on_half = pieri_E(2, 0, state("1/2"));
    REQUIRE(on_half.size() == 1);
    CHECK(on_half[0].coeff == kOne - t);
    CHECK(on_half[0].state.to_super() == SuperPartition::parse("1"));
    // strictness forces zero instead of an invalid label
    CHECK(pieri_E(1, 0, state("1/2")).empty());
}

TEST_CASE("pieri_F basics") {
    const Scalar q = Scalar::q(), t = Scalar::t(), u = Scalar::u();
    // F_{1,1} on (1/2) hits the vacuum with coefficient 1
    auto f = pieri_F(1, 1, state("1/2"));
    REQUIRE(f.size() == 1);
    CHECK(f[0].coeff == kOne);
    CHECK(f[0].state.length() == 0);
    // F_{2,-1} on (1): q^{-1}(q-1) on (1/2)
    auto g = pieri_F(2, -1, state("1"));
    REQUIRE(g.size() == 1);
    CHECK(g[0].coeff == q.inverse() * (q - kOne));
    // F on the vacuum vanishes
    CHECK(pieri_F(1, 0, state("0")).empty());
    CHECK(pieri_F(2, 3, state("0")).empty());
    // F_{1,0} carries u^{-1}
    auto h = pieri_F(1, 0, state("1,1/2"));
    REQUIRE(h.size() == 1);
    CHECK(h[0].coeff == u.inverse() * t);
}

TEST_CASE("cartan series") {
    // vacuum: K_1(z) = 1/(z - u)
    CartanSeries k1 = cartan(1, state("0"));
    REQUIRE(k1.num.size() == 1);
    REQUIRE(k1.den.size() == 2);
    CHECK(k1.num[0] == kOne);
    CHECK(k1.den[0] == -Scalar::u());
    CHECK(k1.den[1] == kOne);
    // leading coefficients: z^{-1} K1+ -> 1, K1- -> -u^{-1},
    //                       z K2+ -> 1,    K2- -> -(t/q)^{1/2} u
    for (const char* label : {"0", "1", "3/2,1/2", "2,1"}) {
        FockState st = state(label);
        auto k1p = cartan_series(1, st, +1, 0);
        CHECK(k1p.lead == -1);
        CHECK(k1p.coeffs[0] == kOne);
        auto k1m = cartan_series(1, st, -1, 0);
        CHECK(k1m.coeffs[0] == -Scalar::u().inverse());
        auto k2p = cartan_series(2, st, +1, 0);
        CHECK(k2p.lead == 1);
        CHECK(k2p.coeffs[0] == kOne);
        auto k2m = cartan_series(2, st, -1, 0);
        CHECK(k2m.coeffs[0] == -Scalar::mono2(-1, 1, 1));
    }
}

TEST_CASE("shifted EF relation on the Fock side") {
    // (i=1, m=0, n=1): both sides equal 1 on every state
    for (int l2 = 0; l2 <= 6; ++l2)
        for (const auto& p : basis_level(l2))
            CHECK(shifted_EF_rhs(1, 0, 1, FockState::from_super(p)) == kOne);
    // full operator checks
    for (auto [i, m, n] : {std::tuple<int, int, int>{1, 0, 1}, {2, 0, -1}, {1, -1, 0},
                           {2, 1, -1}, {1, 0, 2}, {1, 1, 1}, {2, -1, 0}, {1, 2, 0}}) {
        auto res = check_shifted_EF(i, m, n, 5);
        INFO("i=", i, " m=", m, " n=", n, ": ", res.detail);
        CHECK(res.ok);
    }
}

TEST_CASE("hamiltonian modes from the cartan series") {
    const Scalar q = Scalar::q(), t = Scalar::t(), u = Scalar::u();
    FockState st = state("1");
    Scalar h2m1 = cartan_hamiltonian_mode(2, -1, st);
    Scalar lhs = kOne - u * Scalar::mono2(-1, 1, 0) * h2m1;
    Scalar want = (t - kOne) * (q.inverse() - kOne);  // box sum over (1)
    CHECK(lhs == want);
    CHECK(shifted_EF_rhs(2, 0, -1, st) == want);
}

TEST_CASE("vector representation") {
    const Scalar t = Scalar::t();
    // E1 F1 = 1 - t^{-1}, E2 F2 = 1 - t through composition
    {
        VectorState v{3, 1};
        auto f = vector_F(1, v);
        REQUIRE(f.size() == 1);
        auto e = vector_E(1, f[0].state);
        REQUIRE(e.size() == 1);
        CHECK(e[0].coeff * f[0].coeff == kOne - t.inverse());
        CHECK(e[0].state == v);
    }
    {
        VectorState v{2, 1};
        auto e = vector_E(2, v);
        REQUIRE(e.size() == 1);
        auto f = vector_F(2, e[0].state);
        REQUIRE(f.size() == 1);
        CHECK(e[0].coeff * f[0].coeff == kOne - t);
    }
    // grading selection: E_1 on sigma = 1 gives zero
    CHECK(vector_E(1, VectorState{2, 1}).empty());
    // the vector representation is unshifted
    for (int s : {1, 2})
        for (int k : {-1, 0, 1, 3})
            for (int sigma : {0, 1}) {
                auto res = check_vector_unshifted(s, VectorState{k, sigma});
                INFO("s=", s, " k=", k, " sigma=", sigma, ": ", res.detail);
                CHECK(res.ok);
            }
}
