#include "supermac/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace supermac {

IntPoly::IntPoly(long v) {
    if (v != 0) terms_[Mono{}] = Integer(v);
}

IntPoly::IntPoly(const Integer& v) {
    if (v != 0) terms_[Mono{}] = v;
}

IntPoly IntPoly::monomial(const Integer& coeff, Mono m) {
    IntPoly p;
    if (coeff != 0) p.terms_[m] = coeff;
    return p;
}

bool IntPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Mono{} && terms_.begin()->second == 1;
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

void IntPoly::add_term(const Integer& coeff, Mono m) {
    if (coeff == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
    IntPoly r;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_)
            r.add_term(cx * cy, Mono{mx.a + my.a, mx.b + my.b, mx.c + my.c});
    return r;
}

const Mono& IntPoly::lead_mono() const {
    if (terms_.empty()) throw std::logic_error("lead_mono of zero polynomial");
    return terms_.rbegin()->first;
}

const Integer& IntPoly::lead_coeff() const {
    if (terms_.empty()) throw std::logic_error("lead_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

int IntPoly::max_exp_a() const {
    int m = 0;
    for (const auto& [mo, c] : terms_) m = std::max(m, mo.a);
    return m;
}

int IntPoly::max_exp_b() const {
    int m = 0;
    for (const auto& [mo, c] : terms_) m = std::max(m, mo.b);
    return m;
}

int IntPoly::max_exp_c() const {
    int m = 0;
    for (const auto& [mo, c] : terms_) m = std::max(m, mo.c);
    return m;
}

Integer IntPoly::integer_content() const {
    Integer g = 0;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Mono IntPoly::monomial_content() const {
    if (terms_.empty()) return Mono{};
    Mono r{INT32_MAX, INT32_MAX, INT32_MAX};
    for (const auto& [m, c] : terms_) {
        r.a = std::min(r.a, m.a);
        r.b = std::min(r.b, m.b);
        r.c = std::min(r.c, m.c);
    }
    return r;
}

std::string IntPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Print highest terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Integer abs = c >= 0 ? c : Integer(-c);
        std::vector<std::string> factors;
        bool has_var = m.a || m.b || m.c;
        if (abs != 1 || !has_var) factors.push_back(abs.get_str());
        auto var = [&](const char* name, int e2, bool halves) {
            if (e2 == 0) return;
            std::string s = name;
            if (halves) {
                if (e2 != 2) {
                    if (e2 % 2 == 0)
                        s += "^" + std::to_string(e2 / 2);
                    else
                        s += "^(" + std::to_string(e2) + "/2)";
                }
            } else if (e2 != 1) {
                s += "^" + std::to_string(e2);
            }
            factors.push_back(s);
        };
        var("q", m.a, true);
        var("t", m.b, true);
        var("u", m.c, false);
        std::string term;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) term += "*";
            term += factors[i];
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

namespace {

// Dense-in-one-variable view: coefficients indexed by the exponent of the
// chosen variable (0 = qh, 1 = th, 2 = u).
std::vector<IntPoly> to_univar(const IntPoly& f, int var) {
    std::vector<IntPoly> coeffs;
    for (const auto& [m, c] : f.terms()) {
        int e = var == 0 ? m.a : var == 1 ? m.b : m.c;
        Mono rest = m;
        (var == 0 ? rest.a : var == 1 ? rest.b : rest.c) = 0;
        if ((int)coeffs.size() <= e) coeffs.resize(e + 1);
        coeffs[e].add_term(c, rest);
    }
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

IntPoly from_univar(const std::vector<IntPoly>& coeffs, int var) {
    IntPoly f;
    for (int e = 0; e < (int)coeffs.size(); ++e) {
        for (const auto& [m, c] : coeffs[e].terms()) {
            Mono me = m;
            (var == 0 ? me.a : var == 1 ? me.b : me.c) += e;
            f.add_term(c, me);
        }
    }
    return f;
}

int degree_in(const IntPoly& f, int var) {
    int d = 0;
    for (const auto& [m, c] : f.terms()) d = std::max(d, var == 0 ? m.a : var == 1 ? m.b : m.c);
    return d;
}

IntPoly mul_int(const IntPoly& f, const Integer& k) {
    return f * IntPoly(k);
}

IntPoly div_int(const IntPoly& f, const Integer& k) {
    IntPoly r;
    for (const auto& [m, c] : f.terms()) {
        Integer qv;
        mpz_divexact(qv.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
        r.add_term(qv, m);
    }
    return r;
}

IntPoly content_univar(const std::vector<IntPoly>& coeffs) {
    IntPoly g;
    for (const auto& c : coeffs) {
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// prem(a, b) = lb^{da-db+1} a mod b, on dense coefficient vectors.  The full
// lb power matters: the subresultant divisions below rely on it even when
// intermediate leading coefficients cancel early.
std::vector<IntPoly> pseudo_rem(std::vector<IntPoly> a, const std::vector<IntPoly>& b) {
    int db = (int)b.size() - 1;
    const IntPoly& lb = b.back();
    int need = (int)a.size() - 1 - db + 1;
    int used = 0;
    while ((int)a.size() - 1 >= db && !a.empty()) {
        int da = (int)a.size() - 1;
        IntPoly la = a.back();
        for (auto& c : a) c = c * lb;
        ++used;
        int shift = da - db;
        for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    for (; used < need; ++used)
        for (auto& c : a) c = c * lb;
    return a;
}

IntPoly poly_pow(const IntPoly& x, int e) {
    IntPoly r(1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    auto norm_sign = [](IntPoly p) {
        if (!p.is_zero() && p.lead_coeff() < 0) return -p;
        return p;
    };
    if (f.is_zero()) return norm_sign(g);
    if (g.is_zero()) return norm_sign(f);

    Mono mc_f = f.monomial_content(), mc_g = g.monomial_content();
    Mono mc{std::min(mc_f.a, mc_g.a), std::min(mc_f.b, mc_g.b), std::min(mc_f.c, mc_g.c)};
    Integer ic;
    mpz_gcd(ic.get_mpz_t(), f.integer_content().get_mpz_t(), g.integer_content().get_mpz_t());
    IntPoly base = IntPoly::monomial(ic, mc);

    IntPoly a = exact_divide(f, IntPoly::monomial(f.integer_content(), mc_f));
    IntPoly b = exact_divide(g, IntPoly::monomial(g.integer_content(), mc_g));

    // Pick the common variable with the smallest degree; if none, the
    // monomial part is all they share.
    int var = -1, best = INT32_MAX;
    for (int v = 0; v < 3; ++v) {
        int da = degree_in(a, v), db = degree_in(b, v);
        if (da > 0 && db > 0 && std::min(da, db) < best) {
            best = std::min(da, db);
            var = v;
        }
    }
    if (var < 0 || a.is_one() || b.is_one()) return base;

    auto ua = to_univar(a, var);
    auto ub = to_univar(b, var);
    IntPoly cont_a = content_univar(ua);
    IntPoly cont_b = content_univar(ub);
    IntPoly cont_gcd = poly_gcd(cont_a, cont_b);
    auto primitive = [&](std::vector<IntPoly>& u, const IntPoly& cont) {
        if (cont.is_one()) return;
        for (auto& c : u) c = exact_divide(c, cont);
    };
    primitive(ua, cont_a);
    primitive(ub, cont_b);

    // Subresultant PRS; keeps the coefficient growth polynomial.
    if (ua.size() < ub.size()) std::swap(ua, ub);
    IntPoly sr_g(1), sr_h(1);
    while (true) {
        int delta = (int)ua.size() - (int)ub.size();
        auto r = pseudo_rem(ua, ub);
        if (r.empty()) {
            ua = std::move(ub);
            break;
        }
        IntPoly divisor = sr_g * poly_pow(sr_h, delta);
        for (auto& c : r) c = exact_divide(c, divisor);
        ua = std::move(ub);
        ub = std::move(r);
        sr_g = ua.back();
        if (delta >= 1) {
            IntPoly gp = poly_pow(sr_g, delta);
            sr_h = delta == 1 ? gp : exact_divide(gp, poly_pow(sr_h, delta - 1));
        }
    }
    IntPoly prim = content_univar(ua);
    primitive(ua, prim);
    IntPoly result = base * cont_gcd * from_univar(ua, var);
    return norm_sign(result);
}

IntPoly exact_divide(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("exact_divide by zero");
    if (g.is_one()) return f;
    IntPoly rem = f, quot;
    const Mono& lg = g.lead_mono();
    const Integer& cg = g.lead_coeff();
    while (!rem.is_zero()) {
        const Mono& lr = rem.lead_mono();
        Mono d{lr.a - lg.a, lr.b - lg.b, lr.c - lg.c};
        if (d.a < 0 || d.b < 0 || d.c < 0) throw std::domain_error("exact_divide: not divisible");
        Integer qc;
        if (!mpz_divisible_p(rem.lead_coeff().get_mpz_t(), cg.get_mpz_t()))
            throw std::domain_error("exact_divide: not divisible");
        mpz_divexact(qc.get_mpz_t(), rem.lead_coeff().get_mpz_t(), cg.get_mpz_t());
        IntPoly term = IntPoly::monomial(qc, d);
        quot += term;
        rem -= term * g;
    }
    return quot;
}

Scalar::Scalar(long num, long den) : num_(num), den_(den) {
    reduce();
}

Scalar::Scalar(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

Scalar Scalar::qpow2(int a2) {
    return mono2(a2, 0, 0);
}

Scalar Scalar::tpow2(int b2) {
    return mono2(0, b2, 0);
}

Scalar Scalar::upow(int c) {
    return mono2(0, 0, c);
}

Scalar Scalar::mono2(int a2, int b2, int c) {
    Mono mn{std::max(a2, 0), std::max(b2, 0), std::max(c, 0)};
    Mono md{std::max(-a2, 0), std::max(-b2, 0), std::max(-c, 0)};
    return Scalar(IntPoly::monomial(1, mn), IntPoly::monomial(1, md));
}

void Scalar::reduce() {
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
    }
    if (den_.lead_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    // Cross-cancel first to keep the gcds small.
    IntPoly g1 = poly_gcd(num_, o.den_);
    IntPoly g2 = poly_gcd(o.num_, den_);
    IntPoly n1 = g1.is_one() ? num_ : exact_divide(num_, g1);
    IntPoly d2 = g1.is_one() ? o.den_ : exact_divide(o.den_, g1);
    IntPoly n2 = g2.is_one() ? o.num_ : exact_divide(o.num_, g2);
    IntPoly d1 = g2.is_one() ? den_ : exact_divide(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return *this;
    }
    if (den_.lead_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (num_.is_zero()) throw std::domain_error("Scalar: inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

namespace {

// x^{deg} * p(1/x) in the variables qh and th simultaneously; u untouched.
IntPoly reverse_qt(const IntPoly& p, int max_a, int max_b) {
    IntPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(c, Mono{max_a - m.a, max_b - m.b, m.c});
    return r;
}

}  // namespace

Scalar Scalar::invert_qt() const {
    if (num_.is_zero()) return Scalar();
    int an = num_.max_exp_a(), bn = num_.max_exp_b();
    int ad = den_.max_exp_a(), bd = den_.max_exp_b();
    IntPoly n = reverse_qt(num_, an, bn);
    IntPoly d = reverse_qt(den_, ad, bd);
    // num/den evaluated at inverse variables picks up qh^{ad-an} th^{bd-bn}.
    Scalar r(std::move(n), std::move(d));
    return r * mono2(ad - an, bd - bn, 0);
}

std::string Scalar::to_string() const {
    if (num_.is_zero()) return "0";
    std::string ns = num_.to_string();
    if (den_.is_one()) return ns;
    std::string ds = den_.to_string();
    std::string r;
    if (num_.terms().size() > 1)
        r = "(" + ns + ")";
    else
        r = ns;
    r += "/";
    if (den_.terms().size() > 1 || ds.find('*') != std::string::npos)
        r += "(" + ds + ")";
    else
        r += ds;
    return r;
}

Scalar normalize(IntPoly num, IntPoly den) {
    return Scalar(std::move(num), std::move(den));
}

Scalar qt_integer(int n, const Scalar& t1, const Scalar& t2) {
    if (n < 1) throw std::domain_error("qt_integer: n must be >= 1");
    // Horner form of sum_{k=0}^{n-1} t1^k t2^{n-k-1}.
    Scalar acc(1);
    for (int k = 1; k < n; ++k) acc = acc * t1 + t2.pow(k);
    return acc;
}

}  // namespace supermac
