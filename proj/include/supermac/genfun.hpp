#pragma once

// Coefficient operators defined by generating functions:
//
//   sum_k c_k[p] z^k           = exp( sum_r (1-t^r)/r  p_r z^r )
//   sum_k ct_k[d/dp] z^{-k}    = exp( sum_n (q^{-n}-1) d/dp_n z^{-n} )
//
// and their (q,t) -> (q^{-1},t^{-1}) companions c^ and ct^, the composite
// C_l = sum_{n>=0} c^_{n+l} ct^_n, the fermion bi-linear coefficients
// Ct_{k,l} = [ct_k, c_l], and b_k = t^{1-k} [[k]]_{(q,t)}.

#include <vector>

#include "supermac/superpoly.hpp"

namespace supermac {

// Multiplication patterns (bosonic polynomials in the p's).
const SuperPolynomial& c_poly(int k);
const SuperPolynomial& c_check_poly(int k);
// Derivative patterns; each key is read as a product of d/dp's.
const SuperPolynomial& ctilde_pattern(int k);
const SuperPolynomial& ctilde_check_pattern(int k);

// Direct applications (fast paths used all over the tower).
SuperPolynomial apply_c(int k, const SuperPolynomial& f);
SuperPolynomial apply_ctilde(int k, const SuperPolynomial& f);
SuperPolynomial apply_c_check(int k, const SuperPolynomial& f);
SuperPolynomial apply_ctilde_check(int k, const SuperPolynomial& f);

// C_l = sum_{n >= max(0,-l)} c^_{n+l} ct^_n, cut exactly by the grading.
SuperPolynomial apply_C(int ell, const SuperPolynomial& f);

// Ct_{k,l} = (1-t)(q^{-1}-1) sum_{n=max(0,l-k)}^{l-1} [[l-n]]_{(q^{-1},t)} c_n ct_{k-l+n}.
SuperPolynomial apply_Ctilde(int k, int ell, const SuperPolynomial& f);

// Windowed operator forms.
GradedOperator c_op(int k, int max_in2);
GradedOperator ctilde_op(int k, int max_in2);
GradedOperator c_check_op(int k, int max_in2);
GradedOperator ctilde_check_op(int k, int max_in2);
GradedOperator C_op(int ell, int max_in2);
GradedOperator Ctilde_op(int k, int ell, int max_in2);

// b_k(q,t) = 1 + (q/t) + ... + (q/t)^{k-1}.
Scalar b_coeff(int k);

// A truncated series of operators with a fixed z-exponent step.
struct OperatorSeries {
    std::vector<GradedOperator> coeffs;  // index k = 0..K
    int zstep = 1;                       // +1 for z^k series, -1 for z^{-k}
};

OperatorSeries c_series(int K, int max_in2);
OperatorSeries ctilde_series(int K, int max_in2);
OperatorSeries c_check_series(int K, int max_in2);
OperatorSeries ctilde_check_series(int K, int max_in2);

}  // namespace supermac
