#include "supermac/genfun.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace supermac {

namespace {

// Coefficients of exp(sum_r w_r p_r z^r) via the Newton-style recursion
// k g_k = sum_{r=1}^{k} r w_r p_r g_{k-r}.
std::vector<SuperPolynomial> series_polys(int K, const std::function<Scalar(int)>& weight_times_r) {
    std::vector<SuperPolynomial> g(K + 1);
    g[0] = SuperPolynomial::one();
    for (int k = 1; k <= K; ++k) {
        SuperPolynomial acc;
        for (int r = 1; r <= k; ++r) acc += mul_p_poly(r, g[k - r]) * weight_times_r(r);
        g[k] = acc * Scalar(1, k);
    }
    return g;
}

enum class Family { C, Ctilde, Ccheck, CtildeCheck };

const SuperPolynomial& cached_poly(Family fam, int k) {
    static std::map<Family, std::vector<SuperPolynomial>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& vec = cache[fam];
    if ((int)vec.size() <= k) {
        int K = std::max(k, 8);
        std::function<Scalar(int)> w;
        switch (fam) {
            case Family::C:  // r * (1-t^r)/r
                w = [](int r) { return Scalar(1) - Scalar::t().pow(r); };
                break;
            case Family::Ctilde:  // r * (q^{-r}-1)
                w = [](int r) { return (Scalar::q().pow(-r) - Scalar(1)) * Scalar(r); };
                break;
            case Family::Ccheck:
                w = [](int r) { return Scalar(1) - Scalar::t().pow(-r); };
                break;
            case Family::CtildeCheck:
                w = [](int r) { return (Scalar::q().pow(r) - Scalar(1)) * Scalar(r); };
                break;
        }
        vec = series_polys(K, w);
    }
    return vec[k];
}

}  // namespace

const SuperPolynomial& c_poly(int k) {
    if (k < 0) throw std::invalid_argument("c_poly: k >= 0 required");
    return cached_poly(Family::C, k);
}

const SuperPolynomial& c_check_poly(int k) {
    if (k < 0) throw std::invalid_argument("c_check_poly: k >= 0 required");
    return cached_poly(Family::Ccheck, k);
}

const SuperPolynomial& ctilde_pattern(int k) {
    if (k < 0) throw std::invalid_argument("ctilde_pattern: k >= 0 required");
    return cached_poly(Family::Ctilde, k);
}

const SuperPolynomial& ctilde_check_pattern(int k) {
    if (k < 0) throw std::invalid_argument("ctilde_check_pattern: k >= 0 required");
    return cached_poly(Family::CtildeCheck, k);
}

SuperPolynomial apply_c(int k, const SuperPolynomial& f) {
    return poly_product(c_poly(k), f);
}

SuperPolynomial apply_ctilde(int k, const SuperPolynomial& f) {
    if (k > (f.max_level2() + 1) / 2) return SuperPolynomial();
    return apply_p_derivative_pattern(ctilde_pattern(k), f);
}

SuperPolynomial apply_c_check(int k, const SuperPolynomial& f) {
    return poly_product(c_check_poly(k), f);
}

SuperPolynomial apply_ctilde_check(int k, const SuperPolynomial& f) {
    if (k > (f.max_level2() + 1) / 2) return SuperPolynomial();
    return apply_p_derivative_pattern(ctilde_check_pattern(k), f);
}

SuperPolynomial apply_C(int ell, const SuperPolynomial& f) {
    SuperPolynomial r;
    int nmax = f.max_level2() / 2;  // ct^_n kills anything of lower bosonic level
    for (int n = std::max(0, -ell); n <= nmax; ++n) {
        SuperPolynomial g = apply_ctilde_check(n, f);
        if (g.is_zero()) continue;
        r += apply_c_check(n + ell, g);
    }
    return r;
}

SuperPolynomial apply_Ctilde(int k, int ell, const SuperPolynomial& f) {
    if (k < 1 || ell < 1) throw std::invalid_argument("Ctilde: k, l >= 1 required");
    Scalar pre = (Scalar(1) - Scalar::t()) * (Scalar::q().inverse() - Scalar(1));
    SuperPolynomial r;
    for (int n = std::max(0, ell - k); n <= ell - 1; ++n) {
        SuperPolynomial g = apply_ctilde(k - ell + n, f);
        if (g.is_zero()) continue;
        Scalar w = qt_integer(ell - n, Scalar::q().inverse(), Scalar::t());
        r += apply_c(n, g) * (pre * w);
    }
    return r;
}

GradedOperator c_op(int k, int max_in2) {
    return GradedOperator::build(2 * k, max_in2, [k](const SuperPartition& p) {
        return apply_c(k, SuperPolynomial::basis(p));
    });
}

GradedOperator ctilde_op(int k, int max_in2) {
    return GradedOperator::build(-2 * k, max_in2, [k](const SuperPartition& p) {
        return apply_ctilde(k, SuperPolynomial::basis(p));
    });
}

GradedOperator c_check_op(int k, int max_in2) {
    return GradedOperator::build(2 * k, max_in2, [k](const SuperPartition& p) {
        return apply_c_check(k, SuperPolynomial::basis(p));
    });
}

GradedOperator ctilde_check_op(int k, int max_in2) {
    return GradedOperator::build(-2 * k, max_in2, [k](const SuperPartition& p) {
        return apply_ctilde_check(k, SuperPolynomial::basis(p));
    });
}

GradedOperator C_op(int ell, int max_in2) {
    return GradedOperator::build(2 * ell, max_in2, [ell](const SuperPartition& p) {
        return apply_C(ell, SuperPolynomial::basis(p));
    });
}

GradedOperator Ctilde_op(int k, int ell, int max_in2) {
    return GradedOperator::build(2 * (ell - k), max_in2, [k, ell](const SuperPartition& p) {
        return apply_Ctilde(k, ell, SuperPolynomial::basis(p));
    });
}

Scalar b_coeff(int k) {
    if (k < 1) throw std::invalid_argument("b_coeff: k >= 1 required");
    return Scalar::tpow2(2 * (1 - k)) * qt_integer(k, Scalar::q(), Scalar::t());
}

namespace {

OperatorSeries make_series(int K, int zstep, GradedOperator (*op)(int, int), int max_in2) {
    OperatorSeries s;
    s.zstep = zstep;
    for (int k = 0; k <= K; ++k) s.coeffs.push_back(op(k, max_in2));
    return s;
}

}  // namespace

OperatorSeries c_series(int K, int max_in2) {
    return make_series(K, +1, &c_op, max_in2);
}

OperatorSeries ctilde_series(int K, int max_in2) {
    return make_series(K, -1, &ctilde_op, max_in2);
}

OperatorSeries c_check_series(int K, int max_in2) {
    return make_series(K, +1, &c_check_op, max_in2);
}

OperatorSeries ctilde_check_series(int K, int max_in2) {
    return make_series(K, -1, &ctilde_check_op, max_in2);
}

}  // namespace supermac
