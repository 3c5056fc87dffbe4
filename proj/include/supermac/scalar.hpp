#pragma once

// Exact arithmetic in the coefficient field Q(q^{1/2}, t^{1/2}, u).
//
// IntPoly is a trivariate polynomial over Z with non-negative exponents in
// the base variables qh = q^{1/2}, th = t^{1/2} and u.  Scalar is a reduced
// fraction of two IntPoly with a fixed sign convention, so equal values have
// equal representations and operator== is a plain comparison.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace supermac {

using Integer = mpz_class;

// Exponent triple for (q^{1/2}, t^{1/2}, u).
struct Mono {
    int a = 0;
    int b = 0;
    int c = 0;

    int degree() const { return a + b + c; }
    bool operator==(const Mono& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Graded lexicographic term order, the canonical order for normal forms.
struct MonoLess {
    bool operator()(const Mono& x, const Mono& y) const {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }
};

class IntPoly {
public:
    using Terms = std::map<Mono, Integer, MonoLess>;

    IntPoly() = default;
    IntPoly(long v);
    explicit IntPoly(const Integer& v);
    static IntPoly monomial(const Integer& coeff, Mono m);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const Terms& terms() const { return terms_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly x, const IntPoly& y) { return x += y; }
    friend IntPoly operator-(IntPoly x, const IntPoly& y) { return x -= y; }
    friend IntPoly operator*(const IntPoly& x, const IntPoly& y);
    bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }

    // Largest term in the graded lex order.  Polynomial must be non-zero.
    const Mono& lead_mono() const;
    const Integer& lead_coeff() const;

    int max_exp_a() const;
    int max_exp_b() const;
    int max_exp_c() const;

    // gcd of all integer coefficients, non-negative.
    Integer integer_content() const;
    // Componentwise minimum of all exponents.
    Mono monomial_content() const;

    void add_term(const Integer& coeff, Mono m);

    std::string to_string() const;

private:
    Terms terms_;
};

// Polynomial gcd over Z[qh, th, u], normalized to positive leading coefficient.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

// Quotient f / g, valid only when the division is exact; throws otherwise.
IntPoly exact_divide(const IntPoly& f, const IntPoly& g);

class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long v) : num_(v), den_(1) {}
    Scalar(long num, long den);
    Scalar(IntPoly num, IntPoly den);
    explicit Scalar(IntPoly num) : num_(std::move(num)), den_(1) {}

    static Scalar q() { return qpow2(2); }
    static Scalar t() { return tpow2(2); }
    static Scalar u() { return upow(1); }
    static Scalar q_half() { return qpow2(1); }
    static Scalar t_half() { return tpow2(1); }
    // q^{a2/2}, t^{b2/2}, u^{c}; negative exponents land in the denominator.
    static Scalar qpow2(int a2);
    static Scalar tpow2(int b2);
    static Scalar upow(int c);
    static Scalar mono2(int a2, int b2, int c);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    Scalar pow(int e) const;

    // The involution (q, t) -> (q^{-1}, t^{-1}); u is untouched.
    Scalar invert_qt() const;

    std::string to_string() const;

private:
    void reduce();

    IntPoly num_;
    IntPoly den_;
};

// num / den with the gcd/sign invariants enforced; throws on zero denominator.
Scalar normalize(IntPoly num, IntPoly den);

// [[n]]_{(t1,t2)} = sum_{k=0}^{n-1} t1^k t2^{n-k-1}; requires n >= 1.
Scalar qt_integer(int n, const Scalar& t1, const Scalar& t2);

}  // namespace supermac
