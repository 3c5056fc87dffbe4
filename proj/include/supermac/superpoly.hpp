#pragma once

// The graded ring of supersymmetric polynomials in the bosonic power sums
// p_k and the fermionic power sums pi_k, with basis p_Lambda indexed by
// super partitions:
//
//   p_Lambda = pi_{a_1} ... pi_{a_m} p_{b_1} ... p_{b_l}
//
// where the pi indices a_i (odd doubled parts (2a_i - 1)) are strictly
// decreasing and the bosonic parts b_j weakly decreasing.  pi_k carries
// doubled level 2k-1, p_k carries 2k.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supermac/scalar.hpp"
#include "supermac/superpartition.hpp"

namespace supermac {

class SuperPolynomial {
public:
    using Terms = std::map<SuperPartition, Scalar>;

    SuperPolynomial() = default;
    explicit SuperPolynomial(const Scalar& c);
    static SuperPolynomial basis(const SuperPartition& p, const Scalar& c = Scalar(1));
    static SuperPolynomial one() { return SuperPolynomial(Scalar(1)); }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const SuperPartition& p, const Scalar& c);
    Scalar coeff(const SuperPartition& p) const;

    // Largest doubled level present; -1 for the zero polynomial.
    int max_level2() const;
    bool level_homogeneous(int level2) const;

    SuperPolynomial operator-() const;
    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    friend SuperPolynomial operator+(SuperPolynomial x, const SuperPolynomial& y) { return x += y; }
    friend SuperPolynomial operator-(SuperPolynomial x, const SuperPolynomial& y) { return x -= y; }
    SuperPolynomial operator*(const Scalar& c) const;
    bool operator==(const SuperPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const SuperPolynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Terms terms_;
};

// Elementary operations.  Multiplication acts from the left; d_pi is the
// left Grassmann derivative, normalized by [d_pi(k), mul_pi(k)]_+ = 1.
SuperPolynomial mul_p_poly(int k, const SuperPolynomial& f);
SuperPolynomial mul_pi_poly(int k, const SuperPolynomial& f);
SuperPolynomial d_p_poly(int k, const SuperPolynomial& f);
SuperPolynomial d_pi_poly(int k, const SuperPolynomial& f);

// Left multiplication by the basis monomial p_M (pi factors first).
SuperPolynomial mul_basis_poly(const SuperPartition& m, const SuperPolynomial& f);
// Ring product; the left factor's monomials multiply from the left.
SuperPolynomial poly_product(const SuperPolynomial& f, const SuperPolynomial& g);
// Interprets every part of `pattern` keys as a p-derivative and applies the
// resulting constant-coefficient differential operator; keys must be bosonic.
SuperPolynomial apply_p_derivative_pattern(const SuperPolynomial& pattern,
                                           const SuperPolynomial& f);

// A level-homogeneous linear endomorphism materialized on all basis elements
// of doubled level <= max_in2.  Applying it beyond that window is an error,
// never a silent truncation.
class GradedOperator {
public:
    GradedOperator() = default;

    static GradedOperator build(int degree2, int max_in2,
                                const std::function<SuperPolynomial(const SuperPartition&)>& action);
    static GradedOperator identity(int max_in2);
    static GradedOperator zero(int degree2, int max_in2);

    int degree2() const { return degree2_; }
    int max_in2() const { return max_in2_; }

    SuperPolynomial apply(const SuperPartition& p) const;
    SuperPolynomial apply(const SuperPolynomial& f) const;

    GradedOperator operator+(const GradedOperator& o) const;
    GradedOperator operator-(const GradedOperator& o) const;
    GradedOperator operator*(const Scalar& c) const;
    GradedOperator restricted(int max_in2) const;

    bool is_zero() const;

    friend GradedOperator compose(const GradedOperator& a, const GradedOperator& b);

    struct Difference {
        SuperPartition input;
        SuperPolynomial left;
        SuperPolynomial right;
    };
    // First basis element (up to the common window) where the two operators
    // disagree; degree mismatch reports the empty partition.
    static std::optional<Difference> first_difference(const GradedOperator& a,
                                                      const GradedOperator& b);

private:
    int degree2_ = 0;
    int max_in2_ = -1;
    std::map<SuperPartition, SuperPolynomial> images_;
};

GradedOperator compose(const GradedOperator& a, const GradedOperator& b);
GradedOperator anticommutator(const GradedOperator& a, const GradedOperator& b);
GradedOperator commutator(const GradedOperator& a, const GradedOperator& b);

// Spec "superpoly" operator constructors on an explicit input window.
GradedOperator mul_p(int k, int max_in2);
GradedOperator mul_pi(int k, int max_in2);
GradedOperator d_p(int k, int max_in2);
GradedOperator d_pi(int k, int max_in2);

}  // namespace supermac
