#include "supermac/finiten.hpp"

#include <bit>
#include <stdexcept>

#include "supermac/genfun.hpp"
#include "supermac/linalg.hpp"

namespace supermac {

namespace {

const Scalar kOne(1);

// theta_i d/dtheta_i-free helpers on bitmask words; increasing-order
// canonical form throughout.

// d/dtheta_i with the left-derivative sign.
bool strip_theta(std::uint32_t theta, int i, std::uint32_t& out, int& sign) {
    std::uint32_t bit = 1u << i;
    if (!(theta & bit)) return false;
    int below = std::popcount(theta & (bit - 1));
    sign = below % 2 == 0 ? 1 : -1;
    out = theta & ~bit;
    return true;
}

NVarSuperPoly d_theta(int i, const NVarSuperPoly& f) {
    NVarSuperPoly r(f.nvars());
    for (const auto& [k, c] : f.terms()) {
        std::uint32_t rest;
        int sign;
        if (!strip_theta(k.theta, i, rest, sign)) continue;
        NVarKey k2 = k;
        k2.theta = rest;
        r.add_term(k2, sign < 0 ? -c : c);
    }
    return r;
}

NVarSuperPoly mul_theta(int i, const NVarSuperPoly& f) {
    NVarSuperPoly r(f.nvars());
    for (const auto& [k, c] : f.terms()) {
        std::uint32_t bit = 1u << i;
        if (k.theta & bit) continue;
        int below = std::popcount(k.theta & (bit - 1));
        NVarKey k2 = k;
        k2.theta |= bit;
        r.add_term(k2, below % 2 == 0 ? c : -c);
    }
    return r;
}

NVarSuperPoly mul_x_pow(int i, int e, const NVarSuperPoly& f) {
    NVarSuperPoly r(f.nvars());
    for (const auto& [k, c] : f.terms()) {
        NVarKey k2 = k;
        k2.xs[i] += e;
        r.add_term(k2, c);
    }
    return r;
}

// Divides by prod_{j != i, j in others} (x_i - c x_j); throws if not exact.
NVarSuperPoly divide_product(NVarSuperPoly f, int i, const std::vector<int>& others,
                             const Scalar& c) {
    for (int j : others) f = divide_linear(f, i, j, c);
    return f;
}

}  // namespace

NVarSuperPoly tau(int i, int dir, const NVarSuperPoly& f) {
    NVarSuperPoly r(f.nvars());
    for (const auto& [k, c] : f.terms())
        r.add_term(k, c * Scalar::qpow2(2 * dir * k.xs[i]));
    return r;
}

NVarSuperPoly tau_set(std::uint32_t mask, int dir, const NVarSuperPoly& f) {
    NVarSuperPoly r(f.nvars());
    for (const auto& [k, c] : f.terms()) {
        int total = 0;
        for (int i = 0; i < f.nvars(); ++i)
            if (mask & (1u << i)) total += k.xs[i];
        r.add_term(k, c * Scalar::qpow2(2 * dir * total));
    }
    return r;
}

NVarSuperPoly a_multiplier_num(int i, const Scalar& tparam, int n) {
    NVarSuperPoly num = NVarSuperPoly::constant(n, kOne);
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        NVarSuperPoly lin(n);
        NVarKey xi{std::vector<int>(n, 0), 0}, xj{std::vector<int>(n, 0), 0};
        xi.xs[i] = 1;
        xj.xs[j] = 1;
        lin.add_term(xi, tparam);
        lin.add_term(xj, -kOne);
        num = num * lin;
    }
    return num;
}

namespace {

// sum_i A_i(tparam) g_i with g_i polynomial; clears the Vandermonde exactly.
NVarSuperPoly a_weighted_sum(const Scalar& tparam, const std::vector<NVarSuperPoly>& g,
                             int n) {
    NVarSuperPoly total(n);
    bool any = false;
    for (int i = 0; i < n; ++i)
        if (!g[i].is_zero()) any = true;
    if (!any) return total;
    // Common denominator prod_{a<b}(x_a - x_b); the i-th term carries
    // sign (-1)^{i} from aligning prod_{j != i}(x_i - x_j) with it.
    for (int i = 0; i < n; ++i) {
        if (g[i].is_zero()) continue;
        NVarSuperPoly term = a_multiplier_num(i, tparam, n) * g[i];
        // multiply by the complementary Vandermonde factors
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (a == i || b == i) continue;
                NVarSuperPoly lin(n);
                NVarKey xa{std::vector<int>(n, 0), 0}, xb{std::vector<int>(n, 0), 0};
                xa.xs[a] = 1;
                xb.xs[b] = 1;
                lin.add_term(xa, kOne);
                lin.add_term(xb, -kOne);
                term = term * lin;
            }
        if (i % 2 != 0) term = -term;
        total += term;
    }
    // Divide by the full Vandermonde.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) total = divide_linear(total, a, b, kOne);
    return total;
}

}  // namespace

NVarSuperPoly a_weighted_power_sum(const Scalar& tparam, int r, int n) {
    std::vector<NVarSuperPoly> g;
    for (int i = 0; i < n; ++i) {
        NVarSuperPoly xi(n);
        NVarKey key{std::vector<int>(n, 0), 0};
        key.xs[i] = r;
        xi.add_term(key, kOne);
        g.push_back(std::move(xi));
    }
    return a_weighted_sum(tparam, g, n);
}

NVarSuperPoly a_weighted_dtheta(const Scalar& tparam, const NVarSuperPoly& f) {
    int n = f.nvars();
    std::vector<NVarSuperPoly> g;
    for (int i = 0; i < n; ++i) g.push_back(d_theta(i, f));
    return a_weighted_sum(tparam, g, n);
}

NVarSuperPoly q_charge(int j, const NVarSuperPoly& f) {
    int n = f.nvars();
    switch (j) {
        case 1: {  // Q1 = sum_i theta_i tau_i^{-1}
            NVarSuperPoly r(n);
            for (int i = 0; i < n; ++i) r += mul_theta(i, tau(i, -1, f));
            return r;
        }
        case 2:  // Q2 = sum_i A_i(t^{-1}) d/dtheta_i
            return a_weighted_dtheta(Scalar::t().inverse(), f);
        case 3: {  // Q3 = sum_i A_i(t) xi_i tau_i d/dtheta_i, sector by sector
            NVarSuperPoly r(n);
            // Split f by theta sector.
            std::map<std::uint32_t, NVarSuperPoly> sectors;
            for (const auto& [k, c] : f.terms()) {
                auto it = sectors.find(k.theta);
                if (it == sectors.end()) it = sectors.emplace(k.theta, NVarSuperPoly(n)).first;
                it->second.add_term(k, c);
            }
            for (const auto& [mask, part] : sectors) {
                for (int i = 0; i < n; ++i) {
                    if (!(mask & (1u << i))) continue;
                    NVarSuperPoly g = tau(i, +1, d_theta(i, part));
                    if (g.is_zero()) continue;
                    std::uint32_t rest = mask & ~(1u << i);
                    // prefactor prod_{k notin mask}(t x_i - x_k)/(x_i - x_k)
                    //        * prod_{j in rest}(qt x_i - x_j)/(q x_i - x_j)
                    std::vector<int> out_idx, in_idx;
                    for (int v = 0; v < n; ++v) {
                        if (v == i) continue;
                        if (mask & (1u << v))
                            in_idx.push_back(v);
                        else
                            out_idx.push_back(v);
                    }
                    for (int v : out_idx) {
                        NVarSuperPoly lin(n);
                        NVarKey xi{std::vector<int>(n, 0), 0}, xv{std::vector<int>(n, 0), 0};
                        xi.xs[i] = 1;
                        xv.xs[v] = 1;
                        lin.add_term(xi, Scalar::t());
                        lin.add_term(xv, -kOne);
                        g = g * lin;
                    }
                    for (int v : in_idx) {
                        NVarSuperPoly lin(n);
                        NVarKey xi{std::vector<int>(n, 0), 0}, xv{std::vector<int>(n, 0), 0};
                        xi.xs[i] = 1;
                        xv.xs[v] = 1;
                        lin.add_term(xi, Scalar::q() * Scalar::t());
                        lin.add_term(xv, -kOne);
                        g = g * lin;
                    }
                    for (int v : out_idx) g = divide_linear(g, i, v, kOne);
                    for (int v : in_idx) g = divide_linear(g, i, v, Scalar::q().inverse());
                    // (q x_i - x_v) = q (x_i - q^{-1} x_v): restore the q factors.
                    g = g * Scalar::q().pow(-(int)in_idx.size());
                    r += g;
                }
            }
            return r;
        }
        case 4: {  // Q4 = sum_i theta_i
            NVarSuperPoly r(n);
            for (int i = 0; i < n; ++i) r += mul_theta(i, f);
            return r;
        }
        default:
            throw std::invalid_argument("q_charge: j must be 1..4");
    }
}

NVarSuperPoly Tq(int dir, const NVarSuperPoly& f) {
    NVarSuperPoly r(f.nvars());
    for (const auto& [k, c] : f.terms()) {
        int total = 0;
        for (int i = 0; i < f.nvars(); ++i)
            if (k.theta & (1u << i)) total += k.xs[i];
        r.add_term(k, c * Scalar::qpow2(2 * dir * total));
    }
    return r;
}

GradedOperator tq_one_fermion(int max_in2) {
    return GradedOperator::build(0, max_in2, [](const SuperPartition& p) {
        SuperPolynomial f = SuperPolynomial::basis(p);
        SuperPolynomial img;
        for (int n = 1; 2 * n - 1 <= p.level2(); ++n) {
            SuperPolynomial g = d_pi_poly(n, f);
            if (g.is_zero()) continue;
            g = g * Scalar::q().pow(n - 1);
            for (int k = 0; 2 * k <= g.max_level2(); ++k) {
                SuperPolynomial h = apply_ctilde_check(k, g);
                if (!h.is_zero()) img += mul_pi_poly(n + k, h);
            }
        }
        return img;
    });
}

NVarSuperPoly rm_hamiltonian(int r, const NVarSuperPoly& f) {
    int n = f.nvars();
    if (r < 1 || r > n) throw std::invalid_argument("rm_hamiltonian: need 1 <= r <= N");
    NVarSuperPoly total(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != r) continue;
        NVarSuperPoly g = tau_set(mask, +1, f);
        // prod_{i in I, j notin I} (t x_i - x_j)/(x_i - x_j)
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            for (int j = 0; j < n; ++j) {
                if (mask & (1u << j)) continue;
                NVarSuperPoly lin(n);
                NVarKey xi{std::vector<int>(n, 0), 0}, xj{std::vector<int>(n, 0), 0};
                xi.xs[i] = 1;
                xj.xs[j] = 1;
                lin.add_term(xi, Scalar::t());
                lin.add_term(xj, -kOne);
                g = g * lin;
            }
        }
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            for (int j = 0; j < n; ++j) {
                if (mask & (1u << j)) continue;
                g = divide_linear(g, i, j, kOne);
            }
        }
        total += g;
    }
    return total * Scalar::t().pow(r * (r - 1) / 2);
}

NVarSuperPoly rm_generating(const Scalar& uparam, const NVarSuperPoly& f) {
    int n = f.nvars();
    NVarSuperPoly total = f;  // r = 0 term
    Scalar sign(1);
    for (int r = 1; r <= n; ++r) {
        sign = sign * (-uparam);
        total += rm_hamiltonian(r, f) * sign;
    }
    return total;
}

SuperPolynomial powersum_map(const NVarSuperPoly& f, int max_level2) {
    if (f.is_zero()) return SuperPolynomial();
    if (!f.symmetric())
        throw std::invalid_argument("powersum_map: input is not symmetric");
    int n = f.nvars();
    // Solve the linear system over all basis elements of level <= max_level2.
    std::vector<SuperPartition> keys;
    std::vector<NVarSuperPoly> expansions;
    std::map<NVarKey, size_t> rows;
    for (int l2 = 0; l2 <= max_level2; ++l2)
        for (const auto& p : basis_level(l2)) {
            if (p.fermion_count() > n) continue;
            keys.push_back(p);
            expansions.push_back(expand_in_variables(SuperPolynomial::basis(p), n));
            for (const auto& [k, c] : expansions.back().terms())
                rows.emplace(k, rows.size());
        }
    for (const auto& [k, c] : f.terms()) rows.emplace(k, rows.size());
    ScalarMatrix m(rows.size(), std::vector<Scalar>(keys.size() + 1));
    for (size_t j = 0; j < keys.size(); ++j)
        for (const auto& [k, c] : expansions[j].terms()) m[rows.at(k)][j] = c;
    for (const auto& [k, c] : f.terms()) m[rows.at(k)][keys.size()] = -c;
    auto kernel = nullspace(m);
    // Exactly one kernel vector, with nonzero last coordinate, means a unique
    // preimage; anything else is a dependency among basis expansions at this N.
    if (kernel.size() > 1)
        throw std::domain_error("powersum_map: preimage not unique at this N");
    if (kernel.empty() || kernel[0].back().is_zero())
        throw std::domain_error("powersum_map: no preimage of level <= cap");
    SuperPolynomial out;
    Scalar scale = kernel[0].back().inverse();
    for (size_t j = 0; j < keys.size(); ++j) out.add_term(keys[j], kernel[0][j] * scale);
    // Exact verification: expand back.
    if (expand_in_variables(out, n) != f)
        throw std::domain_error("powersum_map: verification failed (N too small?)");
    return out;
}

}  // namespace supermac
