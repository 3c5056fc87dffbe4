#include "supermac/hamiltonians.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "supermac/charges.hpp"
#include "supermac/genfun.hpp"
#include "supermac/linalg.hpp"
#include "supermac/nvar.hpp"

namespace supermac {

namespace {

const Scalar kOne(1);

// 1 + sum_k c_k ct_k applied to a basis element, the common bosonic core.
SuperPolynomial apply_bosonic_core(const SuperPolynomial& f) {
    SuperPolynomial img = f;
    for (int k = 1; 2 * k <= f.max_level2(); ++k) {
        SuperPolynomial g = apply_ctilde(k, f);
        if (!g.is_zero()) img += apply_c(k, g);
    }
    return img;
}

GradedOperator neg_core_closed(int i, int max_in2) {
    return GradedOperator::build(0, max_in2, [i](const SuperPartition& p) {
        SuperPolynomial f = SuperPolynomial::basis(p);
        SuperPolynomial img = apply_bosonic_core(f);
        int shift = i == 2 ? 0 : 1;
        int cap = (p.level2() + 1) / 2;
        for (int ell = 1; ell + shift <= cap; ++ell) {
            SuperPolynomial g = d_pi_poly(ell + shift, f);
            if (g.is_zero()) continue;
            for (int k = 1; 2 * (k + shift) - 1 <= p.level2() + 1; ++k) {
                SuperPolynomial h = apply_Ctilde(k, ell, g);
                if (!h.is_zero()) img += mul_pi_poly(k + shift, h);
            }
        }
        return img;
    });
}

// Anticommutator presentations, built from the charges.
GradedOperator core_from_anticommutator(int i, int sign, int max_in2) {
    int pad = max_in2 + 1;
    if (sign < 0) {
        if (i == 2) {
            // [E_{2,0}, F_{2,-1}]_+ = 1 - core(2,-1)
            GradedOperator ac = anticommutator(charge({Side::E, 2, 0}, pad),
                                               charge({Side::F, 2, -1}, pad));
            return (GradedOperator::identity(max_in2) - ac.restricted(max_in2));
        }
        // [E_{1,-1}, F_{1,0}]_+ = -u^{-1} H_{1,-1} = u^{-2} core(1,-1)
        GradedOperator ac = anticommutator(charge({Side::E, 1, -1}, pad),
                                           charge({Side::F, 1, 0}, pad));
        return ac.restricted(max_in2) * Scalar::u().pow(2);
    }
    if (i == 2) {
        // [E_{2,1}, F_{2,-1}]_+ = (t/q)^{1/2} u + H_{2,+1}
        //                       = (t/q)^{1/2} u (1 - core(2,+1)) ... solve:
        // core(2,+1) = -u^{-1}(q/t)^{1/2} H_{2,+1}
        GradedOperator ac = anticommutator(charge({Side::E, 2, 1}, pad),
                                           charge({Side::F, 2, -1}, pad));
        GradedOperator h = ac.restricted(max_in2) -
                           GradedOperator::identity(max_in2) * Scalar::mono2(-1, 1, 1);
        return h * (-(Scalar::mono2(1, -1, -1)));
    }
    // [E_{1,0}, F_{1,2}]_+ = H_{1,+1}; core(1,+1) = u^{-1} H_{1,+1}
    GradedOperator ac = anticommutator(charge({Side::E, 1, 0}, pad),
                                       charge({Side::F, 1, 2}, pad));
    return ac.restricted(max_in2) * Scalar::u().inverse();
}

GradedOperator pos_core_vertex(int i, int max_in2) {
    // core(2,+1) = res_w V_B^- V_B^+ <V_F^- V_F^+>,
    // core(1,+1) = res_w V_B^- V_B^+ <Vt_F^- Vt_F^+>.
    return vertex_hamiltonian_core(i == 2 ? VFVariant::plain : VFVariant::tilde, max_in2);
}

// H = prefactor * core:
//   H_{2,-1} =  u^{-1}(q/t)^{1/2} core(2,-1)
//   H_{1,-1} = -u^{-1}           core(1,-1)
//   H_{2,+1} = -u(t/q)^{1/2}     core(2,+1)
//   H_{1,+1} =  u                core(1,+1)
Scalar eigen_prefactor_inverse(int i, int sign) {
    if (sign < 0)
        return i == 2 ? Scalar::mono2(1, -1, -1) : -(Scalar::u().inverse());
    return i == 2 ? -(Scalar::mono2(-1, 1, 1)) : Scalar::u();
}

Scalar box_sum(const std::vector<int>& lam, bool inverted) {
    // sum_{(i,j) in lam} q^{1-j} t^{i-1}, or q^{j-1} t^{1-i} when inverted.
    Scalar acc;
    for (size_t i = 0; i < lam.size(); ++i)
        for (int j = 1; j <= lam[i]; ++j) {
            int qe = inverted ? j - 1 : 1 - j;
            int te = inverted ? -(int)i : (int)i;
            acc += Scalar::mono2(2 * qe, 2 * te, 0);
        }
    return acc;
}

}  // namespace

GradedOperator ham_core(int i, int sign, int max_in2, Presentation pres) {
    if (i != 1 && i != 2) throw std::invalid_argument("ham_core: i must be 1 or 2");
    if (sign != 1 && sign != -1) throw std::invalid_argument("ham_core: sign must be +-1");
    if (sign < 0) {
        if (pres == Presentation::vertex_integral)
            throw std::invalid_argument("ham_core: negative modes have no vertex presentation");
        if (pres == Presentation::anticommutator) return core_from_anticommutator(i, -1, max_in2);
        return neg_core_closed(i, max_in2);
    }
    if (pres == Presentation::closed_bilinear)
        throw std::invalid_argument("ham_core: positive modes have no closed bilinear form");
    if (pres == Presentation::anticommutator) return core_from_anticommutator(i, +1, max_in2);
    return pos_core_vertex(i, max_in2);
}

Scalar ham_core_eigenvalue(int i, int sign, const SuperPartition& lam) {
    std::vector<int> part = i == 2 ? lam.circledstar() : lam.star();
    if (sign < 0) {
        Scalar s = (Scalar::t() - kOne) * (Scalar::q().inverse() - kOne);
        return kOne - s * box_sum(part, false);
    }
    Scalar s = (Scalar::t().inverse() - kOne) * (Scalar::q() - kOne);
    return kOne - s * box_sum(part, true);
}

GradedOperator hamiltonian(int i, int sign, int max_in2, Presentation pres) {
    Presentation use = pres;
    if (sign < 0 && pres == Presentation::vertex_integral)
        throw std::invalid_argument("hamiltonian: negative modes have no vertex presentation");
    if (sign > 0 && pres == Presentation::closed_bilinear) use = Presentation::vertex_integral;
    GradedOperator core = ham_core(i, sign, max_in2, use);
    return core * eigen_prefactor_inverse(i, sign);
}

Scalar eigenvalue(int i, int sign, const SuperPartition& lam) {
    return ham_core_eigenvalue(i, sign, lam) * eigen_prefactor_inverse(i, sign);
}

GradedOperator rm_bosonic(int max_in2) {
    Scalar pref = (kOne - Scalar::t()).inverse();
    return GradedOperator::build(0, max_in2, [pref](const SuperPartition& p) {
        if (!p.is_bosonic()) return SuperPolynomial();  // bosonic sector only
        SuperPolynomial f = SuperPolynomial::basis(p);
        SuperPolynomial img;
        for (int k = 1; 2 * k <= p.level2(); ++k) {
            SuperPolynomial g = apply_ctilde(k, f);
            if (!g.is_zero()) img += apply_c(k, g);
        }
        return img * pref;
    });
}

namespace {

std::mutex mac_mutex;
std::map<SuperPartition, SuperPolynomial> mac_cache;

SuperPolynomial macdonald_uncached(const SuperPartition& lam) {
    int lev2 = lam.level2();
    const auto& basis = basis_level(lev2);
    size_t n = basis.size();
    std::map<SuperPartition, size_t> index;
    for (size_t j = 0; j < n; ++j) index[basis[j]] = j;

    GradedOperator a2 = ham_core(2, -1, lev2);
    GradedOperator a1 = ham_core(1, -1, lev2);
    Scalar e2 = ham_core_eigenvalue(2, -1, lam);
    Scalar e1 = ham_core_eigenvalue(1, -1, lam);

    auto build_matrix = [&](const std::vector<std::pair<GradedOperator, Scalar>>& ops) {
        ScalarMatrix m(ops.size() * n, std::vector<Scalar>(n));
        for (size_t b = 0; b < ops.size(); ++b)
            for (size_t col = 0; col < n; ++col) {
                SuperPolynomial img = ops[b].first.apply(basis[col]);
                img -= SuperPolynomial::basis(basis[col], ops[b].second);
                for (const auto& [p, c] : img.terms()) m[b * n + index.at(p)][col] = c;
            }
        return m;
    };

    std::vector<std::pair<GradedOperator, Scalar>> ops = {{a2, e2}, {a1, e1}};
    auto kernel = nullspace(build_matrix(ops));
    if (kernel.size() != 1) {
        // Adjoin the positive pair before giving up.
        ops.push_back({ham_core(2, +1, lev2, Presentation::vertex_integral),
                       ham_core_eigenvalue(2, +1, lam)});
        ops.push_back({ham_core(1, +1, lev2, Presentation::vertex_integral),
                       ham_core_eigenvalue(1, +1, lam)});
        kernel = nullspace(build_matrix(ops));
        if (kernel.size() != 1)
            throw std::runtime_error("macdonald: joint eigenspace of " + lam.to_string() +
                                     " has dimension " + std::to_string(kernel.size()));
    }
    SuperPolynomial f;
    for (size_t j = 0; j < n; ++j) f.add_term(basis[j], kernel[0][j]);
    int nvars = lev2 + 1;  // ceil(2L) + 1
    Scalar dom = dominant_coefficient(f, lam, std::max(nvars, lam.length()));
    if (dom.is_zero())
        throw std::runtime_error("macdonald: dominant coefficient vanished for " +
                                 lam.to_string());
    return f * dom.inverse();
}

}  // namespace

const SuperPolynomial& macdonald(const SuperPartition& lam) {
    std::lock_guard<std::mutex> lock(mac_mutex);
    auto it = mac_cache.find(lam);
    if (it == mac_cache.end()) {
        auto poly = macdonald_uncached(lam);
        it = mac_cache.emplace(lam, std::move(poly)).first;
    }
    return it->second;
}

std::vector<std::pair<SuperPartition, Scalar>> macdonald_expand(const SuperPolynomial& f) {
    std::vector<std::pair<SuperPartition, Scalar>> out;
    if (f.is_zero()) return out;
    int lev2 = f.max_level2();
    if (!f.level_homogeneous(lev2))
        throw std::invalid_argument("macdonald_expand: input must be level-homogeneous");
    const auto& basis = basis_level(lev2);
    size_t n = basis.size();
    std::map<SuperPartition, size_t> index;
    for (size_t j = 0; j < n; ++j) index[basis[j]] = j;
    ScalarMatrix m(n, std::vector<Scalar>(n));
    for (size_t col = 0; col < n; ++col)
        for (const auto& [p, c] : macdonald(basis[col]).terms()) m[index.at(p)][col] = c;
    std::vector<Scalar> rhs(n);
    for (const auto& [p, c] : f.terms()) rhs[index.at(p)] = c;
    std::vector<Scalar> x = solve(m, rhs);
    for (size_t j = 0; j < n; ++j)
        if (!x[j].is_zero()) out.push_back({basis[j], x[j]});
    return out;
}

}  // namespace supermac
