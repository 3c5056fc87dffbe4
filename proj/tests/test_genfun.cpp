#include <doctest.h>

#include "supermac/genfun.hpp"

using namespace supermac;

namespace {

const Scalar kOne(1);

// Independent oracle: coefficient of z^k in exp(sum_r a_r p_r z^r) by direct
// multinomial expansion over partitions of k (a_r supplied as Scalars).
SuperPolynomial exp_series_oracle(int k, const std::function<Scalar(int)>& a) {
    SuperPolynomial total;
    std::vector<int> mu;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            Scalar coeff(1);
            int run = 1;
            for (size_t i = 0; i < mu.size(); ++i) {
                coeff *= a(mu[i]);
                if (i + 1 < mu.size() && mu[i + 1] == mu[i])
                    ++run;
                else {
                    for (int f = 2; f <= run; ++f) coeff *= Scalar(1, f);
                    run = 1;
                }
            }
            SuperPolynomial mono = SuperPolynomial::one();
            for (int part : mu) mono = mul_p_poly(part, mono);
            total += mono * coeff;
            return;
        }
        for (int part = std::min(rem, maxp); part >= 1; --part) {
            mu.push_back(part);
            rec(rem - part, part);
            mu.pop_back();
        }
    };
    rec(k, k);
    return total;
}

}  // namespace

TEST_CASE("c and ctilde coefficients against the multinomial oracle") {
    const Scalar q = Scalar::q(), t = Scalar::t();
    CHECK(c_poly(0) == SuperPolynomial::one());
    CHECK(ctilde_pattern(0) == SuperPolynomial::one());
    CHECK(c_poly(1) == mul_p_poly(1, SuperPolynomial::one()) * (kOne - t));
    // c_2 = (1-t^2)/2 p_2 + (1-t)^2/2 p_1^2
    SuperPolynomial c2 = mul_p_poly(2, SuperPolynomial::one()) * ((kOne - t * t) * Scalar(1, 2));
    c2 += mul_p_poly(1, mul_p_poly(1, SuperPolynomial::one())) *
          ((kOne - t) * (kOne - t) * Scalar(1, 2));
    CHECK(c_poly(2) == c2);
    for (int k = 1; k <= 5; ++k) {
        CHECK(c_poly(k) == exp_series_oracle(k, [&](int r) {
                  return (kOne - t.pow(r)) * Scalar(1, r);
              }));
        CHECK(ctilde_pattern(k) ==
              exp_series_oracle(k, [&](int r) { return q.pow(-r) - kOne; }));
        CHECK(c_check_poly(k) == exp_series_oracle(k, [&](int r) {
                  return (kOne - t.pow(-r)) * Scalar(1, r);
              }));
        CHECK(ctilde_check_pattern(k) ==
              exp_series_oracle(k, [&](int r) { return q.pow(r) - kOne; }));
    }
    CHECK(c_check_poly(1) ==
          mul_p_poly(1, SuperPolynomial::one()) * (kOne - t.inverse()));
    // ctilde_check(1) applied: (q-1) d/dp_1
    SuperPolynomial p1 = mul_p_poly(1, SuperPolynomial::one());
    CHECK(apply_ctilde_check(1, p1) == SuperPolynomial(Scalar::q() - kOne));
}

TEST_CASE("C_l on the vacuum") {
    CHECK(apply_C(0, SuperPolynomial::one()) == SuperPolynomial::one());
    CHECK(apply_C(1, SuperPolynomial::one()) ==
          mul_p_poly(1, SuperPolynomial::one()) * (kOne - Scalar::t().inverse()));
    CHECK(apply_C(-1, SuperPolynomial::one()).is_zero());
}

TEST_CASE("Ctilde closed form") {
    const Scalar q = Scalar::q(), t = Scalar::t();
    Scalar pre = (kOne - t) * (q.inverse() - kOne);
    // Ctilde(1,1) = pre * id
    for (int l2 = 0; l2 <= 4; ++l2)
        for (const auto& p : basis_level(l2)) {
            SuperPolynomial f = SuperPolynomial::basis(p);
            CHECK(apply_Ctilde(1, 1, f) == f * pre);
        }
    // Ctilde(1,2) . 1 = pre (1-t) p_1 [[1]]
    CHECK(apply_Ctilde(1, 2, SuperPolynomial::one()) ==
          mul_p_poly(1, SuperPolynomial::one()) * (pre * (kOne - t)));
    // equals the commutator [ct_k, c_l] on a window
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
            for (int l2 = 0; l2 <= 5; ++l2)
                for (const auto& p : basis_level(l2)) {
                    SuperPolynomial f = SuperPolynomial::basis(p);
                    SuperPolynomial comm =
                        apply_ctilde(k, apply_c(l, f)) - apply_c(l, apply_ctilde(k, f));
                    CHECK(apply_Ctilde(k, l, f) == comm);
                }
        }
}

TEST_CASE("b coefficients") {
    const Scalar q = Scalar::q(), t = Scalar::t();
    CHECK(b_coeff(1) == Scalar(1));
    CHECK(b_coeff(2) == kOne + q / t);
    CHECK(b_coeff(3) == kOne + q / t + (q * q) / (t * t));
}

TEST_CASE("c family commutes; series type") {
    // multiplication operators commute; derivative patterns commute
    SuperPolynomial f = mul_p_poly(2, mul_p_poly(1, SuperPolynomial::one()));
    CHECK(apply_c(1, apply_c(2, f)) == apply_c(2, apply_c(1, f)));
    CHECK(apply_ctilde(1, apply_ctilde(2, f)) == apply_ctilde(2, apply_ctilde(1, f)));
    OperatorSeries s = c_series(3, 4);
    CHECK(s.coeffs.size() == 4);
    CHECK(s.zstep == 1);
    CHECK(!GradedOperator::first_difference(s.coeffs[0], GradedOperator::identity(4)));
}
