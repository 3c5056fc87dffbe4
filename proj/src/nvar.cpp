#include "supermac/nvar.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace supermac {

NVarSuperPoly NVarSuperPoly::constant(int n, const Scalar& c) {
    NVarSuperPoly f(n);
    if (!c.is_zero()) f.terms_[NVarKey{std::vector<int>(n, 0), 0}] = c;
    return f;
}

void NVarSuperPoly::add_term(const NVarKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar NVarSuperPoly::coeff(const NVarKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
}

NVarSuperPoly NVarSuperPoly::operator-() const {
    NVarSuperPoly r(n_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

NVarSuperPoly& NVarSuperPoly::operator+=(const NVarSuperPoly& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

NVarSuperPoly& NVarSuperPoly::operator-=(const NVarSuperPoly& o) {
    if (n_ == 0) n_ = o.n_;
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

NVarSuperPoly NVarSuperPoly::operator*(const Scalar& c) const {
    NVarSuperPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [k, s] : terms_) r.terms_[k] = s * c;
    return r;
}

namespace {

// Sign of theta_S * theta_T as a reordering into increasing order; 0 if the
// sets intersect.  Counts pairs (s in S, t in T) with s > t.
int theta_merge_sign(std::uint32_t s, std::uint32_t t) {
    if (s & t) return 0;
    int inversions = 0;
    for (std::uint32_t bt = t; bt; bt &= bt - 1) {
        int i = std::countr_zero(bt);
        std::uint32_t above = s >> (i + 1);
        inversions += std::popcount(above << (i + 1));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

NVarSuperPoly operator*(const NVarSuperPoly& a, const NVarSuperPoly& b) {
    int n = std::max(a.nvars(), b.nvars());
    NVarSuperPoly r(n);
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            int sign = theta_merge_sign(ka.theta, kb.theta);
            if (sign == 0) continue;
            NVarKey k;
            k.xs.resize(n, 0);
            for (int i = 0; i < (int)ka.xs.size(); ++i) k.xs[i] += ka.xs[i];
            for (int i = 0; i < (int)kb.xs.size(); ++i) k.xs[i] += kb.xs[i];
            k.theta = ka.theta | kb.theta;
            Scalar c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(k, c);
        }
    }
    return r;
}

int NVarSuperPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
        int s = std::popcount(k.theta);
        for (int e : k.xs) s += e;
        d = std::max(d, s);
    }
    return d;
}

bool NVarSuperPoly::symmetric() const {
    // Invariance under adjacent transpositions generates S_N.
    for (int i = 0; i + 1 < n_; ++i) {
        NVarSuperPoly swapped(n_);
        for (const auto& [k, c] : terms_) {
            NVarKey k2 = k;
            std::swap(k2.xs[i], k2.xs[i + 1]);
            std::uint32_t bi = 1u << i, bj = 1u << (i + 1);
            bool has_i = k.theta & bi, has_j = k.theta & bj;
            Scalar c2 = c;
            if (has_i != has_j) {
                k2.theta = (k.theta & ~(bi | bj)) | (has_i ? bj : bi);
            } else if (has_i && has_j) {
                c2 = -c2;  // theta_i theta_j -> theta_j theta_i
            }
            swapped.add_term(k2, c2);
        }
        if (swapped != *this) return false;
    }
    return true;
}

std::string NVarSuperPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string mono;
        for (int i = 0; i < (int)k.xs.size(); ++i)
            if (k.xs[i]) {
                mono += (mono.empty() ? "" : "*") + std::string("x") + std::to_string(i + 1);
                if (k.xs[i] > 1) mono += "^" + std::to_string(k.xs[i]);
            }
        for (int i = 0; i < 32; ++i)
            if (k.theta & (1u << i))
                mono += (mono.empty() ? "" : "*") + std::string("th") + std::to_string(i + 1);
        std::string term = "(" + c.to_string() + ")";
        if (!mono.empty()) term += "*" + mono;
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

NVarSuperPoly expand_p(int k, int n) {
    NVarSuperPoly f(n);
    for (int i = 0; i < n; ++i) {
        NVarKey key{std::vector<int>(n, 0), 0};
        key.xs[i] = k;
        f.add_term(key, Scalar(1));
    }
    return f;
}

NVarSuperPoly expand_pi(int k, int n) {
    NVarSuperPoly f(n);
    for (int i = 0; i < n; ++i) {
        NVarKey key{std::vector<int>(n, 0), 1u << i};
        key.xs[i] = k - 1;
        f.add_term(key, Scalar(1));
    }
    return f;
}

NVarSuperPoly expand_in_variables(const SuperPolynomial& f, int n) {
    if (n < 1) throw std::invalid_argument("expand_in_variables: N >= 1 required");
    NVarSuperPoly out(n);
    for (const auto& [part, c] : f.terms()) {
        NVarSuperPoly term = NVarSuperPoly::constant(n, c);
        for (int i = 0; i < part.length(); ++i) {
            if (part.odd(i))
                term = term * expand_pi((part.part2(i) + 1) / 2, n);
            else
                term = term * expand_p(part.part2(i) / 2, n);
        }
        out += term;
    }
    return out;
}

Scalar dominant_coefficient(const SuperPolynomial& f, const SuperPartition& lambda, int n) {
    if (n < lambda.length())
        throw std::invalid_argument("dominant_coefficient: N < length(Lambda)");
    NVarKey key{std::vector<int>(n, 0), 0};
    for (int i = 0; i < lambda.length(); ++i) {
        key.xs[i] = lambda.part2(i) / 2;  // floor(Lambda_i)
        if (lambda.odd(i)) key.theta |= 1u << i;
    }
    // The coefficient of a monomial supported on the first l variables is the
    // same for every N >= l, so expand only where the target lives.
    Scalar acc;
    for (const auto& [part, c] : f.terms()) {
        NVarSuperPoly term = NVarSuperPoly::constant(n, c);
        for (int i = 0; i < part.length() && !term.is_zero(); ++i) {
            NVarSuperPoly factor = part.odd(i) ? expand_pi((part.part2(i) + 1) / 2, n)
                                               : expand_p(part.part2(i) / 2, n);
            NVarSuperPoly grown = term * factor;
            NVarSuperPoly pruned(n);
            for (const auto& [k2, c2] : grown.terms()) {
                bool ok = (k2.theta & ~key.theta) == 0;
                for (int v = 0; ok && v < n; ++v) ok = k2.xs[v] <= key.xs[v];
                if (ok) pruned.add_term(k2, c2);
            }
            term = pruned;
        }
        acc += term.coeff(key);
    }
    return acc;
}

NVarSuperPoly divide_linear(const NVarSuperPoly& f, int a, int b, const Scalar& c) {
    // Synthetic division in x_a around the root c*x_b (or the constant c).
    // f = (x_a - c x_b) g + r with r = f|_{x_a -> c x_b}; exact iff r = 0.
    NVarSuperPoly quot(f.nvars());
    NVarSuperPoly rem = f;
    while (!rem.is_zero()) {
        // Take any term with maximal x_a-degree.
        auto best = rem.terms().begin();
        int dbest = best->first.xs[a];
        for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it)
            if (it->first.xs[a] > dbest) {
                best = it;
                dbest = it->first.xs[a];
            }
        if (dbest == 0) throw std::domain_error("divide_linear: not divisible");
        NVarKey k = best->first;
        Scalar cf = best->second;
        k.xs[a] -= 1;
        quot.add_term(k, cf);
        // Subtract (x_a - c x_b) * cf * x^k.
        NVarKey k_hi = k;
        k_hi.xs[a] += 1;
        NVarKey k_lo = k;
        if (b >= 0) k_lo.xs[b] += 1;
        NVarSuperPoly sub(f.nvars());
        sub.add_term(k_hi, cf);
        sub.add_term(k_lo, -(cf * c));
        rem -= sub;
    }
    return quot;
}

}  // namespace supermac
