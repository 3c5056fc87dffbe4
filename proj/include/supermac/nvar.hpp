#pragma once

// Polynomials in x_1..x_N and Grassmann theta_1..theta_N with Scalar
// coefficients.  Theta subsets are stored as bitmasks and read in increasing
// index order; products pick up the usual transposition signs.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "supermac/superpoly.hpp"

namespace supermac {

struct NVarKey {
    std::vector<int> xs;     // exponent of x_i, size N
    std::uint32_t theta = 0;  // bit i-1 set when theta_i present

    bool operator<(const NVarKey& o) const {
        if (theta != o.theta) return theta < o.theta;
        return xs < o.xs;
    }
    bool operator==(const NVarKey& o) const { return theta == o.theta && xs == o.xs; }
};

class NVarSuperPoly {
public:
    NVarSuperPoly() = default;
    explicit NVarSuperPoly(int n) : n_(n) {}
    static NVarSuperPoly constant(int n, const Scalar& c);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<NVarKey, Scalar>& terms() const { return terms_; }

    void add_term(const NVarKey& k, const Scalar& c);
    Scalar coeff(const NVarKey& k) const;

    NVarSuperPoly operator-() const;
    NVarSuperPoly& operator+=(const NVarSuperPoly& o);
    NVarSuperPoly& operator-=(const NVarSuperPoly& o);
    friend NVarSuperPoly operator+(NVarSuperPoly a, const NVarSuperPoly& b) { return a += b; }
    friend NVarSuperPoly operator-(NVarSuperPoly a, const NVarSuperPoly& b) { return a -= b; }
    NVarSuperPoly operator*(const Scalar& c) const;
    friend NVarSuperPoly operator*(const NVarSuperPoly& a, const NVarSuperPoly& b);
    bool operator==(const NVarSuperPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const NVarSuperPoly& o) const { return !(*this == o); }

    // Total x-degree plus theta count; -1 for zero.
    int total_degree() const;
    bool symmetric() const;  // under simultaneous permutations of (x_i, theta_i)

    std::string to_string() const;

private:
    int n_ = 0;
    std::map<NVarKey, Scalar> terms_;
};

// p_k = sum_i x_i^k and pi_k = sum_i theta_i x_i^{k-1} in N variables.
NVarSuperPoly expand_p(int k, int n);
NVarSuperPoly expand_pi(int k, int n);

// Substitutes the power sums and expands over the Grassmann algebra.
NVarSuperPoly expand_in_variables(const SuperPolynomial& f, int n);

// Coefficient of prod_i x_i^{floor(Lambda_i)} * prod_{odd rows i} theta_i in
// expand_in_variables(f, n); requires n >= length(Lambda).
Scalar dominant_coefficient(const SuperPolynomial& f, const SuperPartition& lambda, int n);

// Exact division by (x_a - c x_b), a != b, or by (x_a - c) when b < 0.
// Throws when the division is not exact.
NVarSuperPoly divide_linear(const NVarSuperPoly& f, int a, int b, const Scalar& c);

}  // namespace supermac
