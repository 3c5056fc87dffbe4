#include "supermac/fockrep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace supermac {

namespace {

const Scalar kOne(1);

Scalar qp(int e) {
    return Scalar::qpow2(2 * e);
}

Scalar tp(int e) {
    return Scalar::tpow2(2 * e);
}

// q^{a2/2} t^{b2/2} u^c
Scalar mono(int a2, int b2, int c) {
    return Scalar::mono2(a2, b2, c);
}

int sign_F(const FockState& st, int row) {
    int f = 0;
    for (int i = 0; i < row; ++i) f += st.sigma[i];
    return f % 2 == 0 ? 1 : -1;
}

}  // namespace

FockState FockState::from_super(const SuperPartition& p) {
    FockState st;
    st.lam = p.circledstar();
    for (int i = 0; i < p.length(); ++i) st.sigma.push_back(p.sigma(i));
    return st;
}

SuperPartition FockState::to_super() const {
    std::vector<int> parts2;
    for (size_t i = 0; i < lam.size(); ++i) parts2.push_back(2 * lam[i] - sigma[i]);
    return SuperPartition::validate(std::move(parts2));
}

Scalar pieri_E_coeff(int s, int n, const FockState& st, int row) {
    int ell = st.length();
    if (row < 0 || row > ell) throw std::out_of_range("pieri_E_coeff: row");
    int lam_k = row < ell ? st.lam[row] : 0;
    int sig_k = row < ell ? st.sigma[row] : 0;
    // Grading selection: E_1 acts on sigma = 0 rows, E_2 on sigma = 1 rows.
    if (s == 1 && sig_k != 0) return Scalar();
    if (s == 2 && sig_k != 1) return Scalar();
    if (s == 2 && row >= ell) return Scalar();

    Scalar coeff = s == 2 ? kOne - Scalar::t() : kOne;
    if (sign_F(st, row) < 0) coeff = -coeff;
    for (int i = 0; i < row; ++i) {
        int dl = st.lam[i] - lam_k;
        Scalar ratio;
        if (s == 1) {
            int e = dl - st.sigma[i];
            ratio = (kOne - qp(e) * tp(row - i - 1)) / (kOne - qp(e) * tp(row - i));
        } else {
            ratio = (kOne - qp(dl) * tp(1 + row - i)) / (kOne - qp(dl) * tp(row - i));
        }
        coeff *= ratio;
    }
    if (coeff.is_zero() || n == 0) return coeff;
    // Mode factor: the delta-function support raised to the n-th power,
    // u t^{1-k} q^{lam_k} for E_1 and u t^{1/2-k} q^{lam_k-1/2} for E_2.
    Scalar support = s == 1 ? mono(2 * lam_k, 2 * (1 - (row + 1)), 1)
                            : mono(2 * lam_k - 1, 1 - 2 * (row + 1), 1);
    return coeff * support.pow(n);
}

std::vector<FockTerm> pieri_E(int s, int n, const FockState& st) {
    if (s != 1 && s != 2) throw std::invalid_argument("pieri_E: s must be 1 or 2");
    std::vector<FockTerm> out;
    int rows = st.length() + (s == 1 ? 1 : 0);
    for (int row = 0; row < rows; ++row) {
        Scalar c = pieri_E_coeff(s, n, st, row);
        if (c.is_zero()) continue;
        FockState next = st;
        if (row == next.length()) {
            next.lam.push_back(0);
            next.sigma.push_back(0);
        }
        if (s == 1) {
            next.lam[row] += 1;
            next.sigma[row] = 1;
        } else {
            next.sigma[row] = 0;
        }
        next.to_super();  // throws if the formulas ever produced an invalid state
        out.push_back(FockTerm{c, std::move(next)});
    }
    return out;
}

Scalar pieri_F_coeff(int s, int n, const FockState& st, int row) {
    int ell = st.length();
    if (row < 0 || row >= ell) return Scalar();
    int lam_k = st.lam[row];
    int sig_k = st.sigma[row];
    // Grading selection: F_1 acts on sigma = 1 rows, F_2 on sigma = 0 rows.
    if (s == 1 && sig_k != 1) return Scalar();
    if (s == 2 && sig_k != 0) return Scalar();

    Scalar coeff;
    if (s == 1) {
        coeff = tp(row) * (kOne - Scalar::t()) /
                (kOne - qp(lam_k - 1) * tp(ell - row)) * Scalar::u().inverse();
    } else {
        coeff = -mono(-1, 1, 1) * tp(-(row + 1)) * (kOne - qp(lam_k) * tp(ell - row - 1));
    }
    if (sign_F(st, row) < 0) coeff = -coeff;
    for (int i = row + 1; i < ell; ++i) {
        int dl = lam_k - st.lam[i];
        Scalar ratio;
        if (s == 1) {
            int e = dl - 1 + st.sigma[i];
            ratio = (kOne - qp(e) * tp(i - row + 1)) / (kOne - qp(e) * tp(i - row));
        } else {
            ratio = (kOne - qp(dl) * tp(i - row - 1)) / (kOne - qp(dl) * tp(i - row));
        }
        coeff *= ratio;
    }
    if (coeff.is_zero() || n == 0) return coeff;
    // u q^{lam_k-1} t^{1-k} for F_1 and u q^{lam_k-1/2} t^{1/2-k} for F_2.
    Scalar support = s == 1 ? mono(2 * (lam_k - 1), 2 * (1 - (row + 1)), 1)
                            : mono(2 * lam_k - 1, 1 - 2 * (row + 1), 1);
    return coeff * support.pow(n);
}

std::vector<FockTerm> pieri_F(int s, int n, const FockState& st) {
    if (s != 1 && s != 2) throw std::invalid_argument("pieri_F: s must be 1 or 2");
    std::vector<FockTerm> out;
    for (int row = 0; row < st.length(); ++row) {
        Scalar c = pieri_F_coeff(s, n, st, row);
        if (c.is_zero()) continue;
        FockState next = st;
        if (s == 1) {
            next.lam[row] -= 1;
            next.sigma[row] = 0;
            if (next.lam[row] == 0) {
                next.lam.erase(next.lam.begin() + row);
                next.sigma.erase(next.sigma.begin() + row);
            }
        } else {
            next.sigma[row] = 1;
        }
        next.to_super();
        out.push_back(FockTerm{c, std::move(next)});
    }
    return out;
}

namespace {

std::vector<Scalar> poly_mul_z(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> r(a.size() + b.size() - 1, Scalar());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// (z - root) as a coefficient vector.
std::vector<Scalar> linear_z(const Scalar& root) {
    return {-root, kOne};
}

}  // namespace

CartanSeries cartan(int i, const FockState& st) {
    int ell = st.length();
    CartanSeries k;
    if (i == 1) {
        k.num = {kOne};
        k.den = linear_z(tp(-ell) * Scalar::u());
        for (int r = 0; r < ell; ++r) {
            int e = st.lam[r] - st.sigma[r];
            k.num = poly_mul_z(k.num, linear_z(qp(e) * tp(-(r + 1)) * Scalar::u()));
            k.den = poly_mul_z(k.den, linear_z(qp(e) * tp(-r) * Scalar::u()));
        }
    } else if (i == 2) {
        k.num = linear_z(mono(-1, 1 - 2 * ell, 1));
        k.den = {kOne};
        for (int r = 0; r < ell; ++r) {
            int a2 = 2 * st.lam[r] - 1;
            k.num = poly_mul_z(k.num, linear_z(mono(a2, 1 - 2 * r, 1)));
            k.den = poly_mul_z(k.den, linear_z(mono(a2, -1 - 2 * r, 1)));
        }
    } else {
        throw std::invalid_argument("cartan: i must be 1 or 2");
    }
    return k;
}

CartanSeries::Expansion CartanSeries::expand(int direction, int order) const {
    Expansion e;
    int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
    std::vector<Scalar> n_c(order + 1), d_c(order + 1);
    if (direction > 0) {
        // Series in 1/z; leading term z^{dn-dd}.
        e.lead = dn - dd;
        for (int r = 0; r <= order; ++r) {
            n_c[r] = dn - r >= 0 ? num[dn - r] : Scalar();
            d_c[r] = dd - r >= 0 ? den[dd - r] : Scalar();
        }
    } else {
        e.lead = 0;
        for (int r = 0; r <= order; ++r) {
            n_c[r] = r < (int)num.size() ? num[r] : Scalar();
            d_c[r] = r < (int)den.size() ? den[r] : Scalar();
        }
        if (d_c[0].is_zero()) throw std::domain_error("CartanSeries: pole at z = 0");
    }
    // Power series division n/d.
    e.coeffs.assign(order + 1, Scalar());
    Scalar inv = d_c[0].inverse();
    for (int r = 0; r <= order; ++r) {
        Scalar acc = n_c[r];
        for (int j = 1; j <= r; ++j) acc -= d_c[j] * e.coeffs[r - j];
        e.coeffs[r] = acc * inv;
    }
    return e;
}

CartanSeries::Expansion cartan_series(int i, const FockState& st, int direction, int order) {
    return cartan(i, st).expand(direction, order);
}

Scalar cartan_hamiltonian_mode(int i, int r, const FockState& st) {
    if (r == 0) throw std::invalid_argument("cartan_hamiltonian_mode: r != 0 required");
    int order = std::abs(r);
    auto exp = cartan(i, st).expand(r > 0 ? +1 : -1, order);
    // K^+ = z^{r_i} K0^+ exp(sum H_{i,r} z^{-r}) with K0^+ = 1;
    // K^- = K0^- exp(-sum H_{i,-r} z^r).
    std::vector<Scalar> s(order + 1);
    Scalar lead = exp.coeffs[0];
    for (int j = 0; j <= order; ++j) s[j] = exp.coeffs[j] / lead;
    // log of the normalized series; h[j] are the log coefficients.
    std::vector<Scalar> h(order + 1);
    for (int j = 1; j <= order; ++j) {
        Scalar acc = s[j] * Scalar(j);
        for (int m = 1; m < j; ++m) acc -= h[m] * s[j - m] * Scalar(m);
        h[j] = acc * Scalar(1, j);
    }
    return r > 0 ? h[order] : -h[order];
}

Scalar shifted_EF_rhs(int i, int m, int n, const FockState& st) {
    CartanSeries k = cartan(i, st);
    int target = -(m + n);  // coefficient of z^{target}
    Scalar plus, minus;
    int lead = (int)k.num.size() - (int)k.den.size();
    int r_inf = lead - target;
    if (r_inf >= 0) plus = k.expand(+1, r_inf).coeffs[r_inf];
    if (target >= 0) minus = k.expand(-1, target).coeffs[target];
    return plus - minus;
}

CheckResult check_shifted_EF(int i, int m, int n, int max_level2) {
    CheckResult res;
    for (int l2 = 0; l2 <= max_level2 && res.ok; ++l2) {
        for (const auto& part : basis_level(l2)) {
            FockState st = FockState::from_super(part);
            // [E_{i,m}, F_{i,n}]_+ |st>
            std::map<SuperPartition, Scalar> acc;
            for (const auto& ft : pieri_F(i, n, st))
                for (const auto& et : pieri_E(i, m, ft.state)) {
                    auto key = et.state.to_super();
                    auto it = acc.find(key);
                    Scalar v = ft.coeff * et.coeff;
                    if (it == acc.end())
                        acc.emplace(key, v);
                    else
                        it->second += v;
                }
            for (const auto& et : pieri_E(i, m, st))
                for (const auto& ft : pieri_F(i, n, et.state)) {
                    auto key = ft.state.to_super();
                    auto it = acc.find(key);
                    Scalar v = et.coeff * ft.coeff;
                    if (it == acc.end())
                        acc.emplace(key, v);
                    else
                        it->second += v;
                }
            Scalar expected = shifted_EF_rhs(i, m, n, st);
            for (const auto& [key, v] : acc) {
                if (key == part) continue;
                if (!v.is_zero()) {
                    res.ok = false;
                    res.detail = "off-diagonal term " + key.to_string() + " on " +
                                 part.to_string() + ": " + v.to_string();
                    break;
                }
            }
            Scalar diag = acc.count(part) ? acc.at(part) : Scalar();
            if (res.ok && diag != expected) {
                res.ok = false;
                res.detail = "diagonal mismatch on " + part.to_string() + ": got " +
                             diag.to_string() + ", expected " + expected.to_string();
            }
            if (!res.ok) break;
        }
    }
    return res;
}

std::vector<VectorTerm> vector_E(int s, const VectorState& v) {
    std::vector<VectorTerm> out;
    int need_sigma = s == 1 ? 0 : 1;
    if (v.sigma != need_sigma) return out;
    Scalar coeff = s == 1 ? kOne : kOne - Scalar::t();
    // support u q1^{k+1} q2^{k+1-sigma} with q1 = (q/t)^{1/2}, q2 = (qt)^{1/2}.
    int e1 = v.k + 1, e2 = v.k + 1 - v.sigma;
    Scalar support = mono(e1 + e2, e2 - e1, 1);
    out.push_back(VectorTerm{coeff, support, VectorState{v.k + (s == 1 ? 1 : 0), 1 - v.sigma}});
    return out;
}

std::vector<VectorTerm> vector_F(int s, const VectorState& v) {
    std::vector<VectorTerm> out;
    int need_sigma = s == 1 ? 1 : 0;
    if (v.sigma != need_sigma) return out;
    Scalar coeff = s == 1 ? kOne - Scalar::t().inverse() : kOne;
    int sbar = s == 1 ? 1 : 0;
    int e1 = v.k + 1 - sbar, e2 = v.k;
    Scalar support = mono(e1 + e2, e2 - e1, 1);
    out.push_back(VectorTerm{coeff, support, VectorState{v.k - (s == 1 ? 1 : 0), 1 - v.sigma}});
    return out;
}

CartanSeries vector_K(int s, const VectorState& v) {
    CartanSeries k;
    if (s == 1) {
        int e = v.k + 1 - v.sigma;
        k.num = linear_z(qp(e) * tp(-1) * Scalar::u());
        k.den = linear_z(qp(e) * Scalar::u());
    } else {
        // (z - q^{k+1/2} t^{1/2} u) / (z - q^{k+1/2} t^{-1/2} u)
        k.num = linear_z(mono(2 * v.k + 1, 1, 1));
        k.den = linear_z(mono(2 * v.k + 1, -1, 1));
    }
    return k;
}

CheckResult check_vector_unshifted(int s, const VectorState& v) {
    CheckResult res;
    // LHS terms: coeff * delta(z/zs) delta(w/ws) |state>
    struct Entry {
        Scalar zs, ws;
        VectorState state;
        Scalar coeff;
    };
    std::vector<Entry> lhs;
    for (const auto& f : vector_F(s, v))
        for (const auto& e : vector_E(s, f.state))
            lhs.push_back(Entry{e.support, f.support, e.state, e.coeff * f.coeff});
    for (const auto& e : vector_E(s, v))
        for (const auto& f : vector_F(s, e.state))
            lhs.push_back(Entry{e.support, f.support, f.state, e.coeff * f.coeff});
    // RHS: delta(w/z)(K^+ - K^-)|v> = (1 - beta/alpha) delta(w/z) delta(z/alpha u)|v>
    // for K = (z - beta u)/(z - alpha u).
    CartanSeries k = vector_K(s, v);
    Scalar alpha = -k.den[0] / Scalar::u();
    Scalar beta = -k.num[0] / Scalar::u();
    Scalar rhs_coeff = kOne - beta / alpha;
    Scalar rhs_support = alpha * Scalar::u();

    // All LHS entries must sit on z = w = rhs_support and return to |v>.
    Scalar total;
    for (const auto& en : lhs) {
        if (!(en.state == v)) {
            res.ok = false;
            res.detail = "vector EF: state changed";
            return res;
        }
        if (en.zs != en.ws || en.zs != rhs_support) {
            res.ok = false;
            res.detail = "vector EF: support mismatch: z " + en.zs.to_string() + ", w " +
                         en.ws.to_string() + ", expected " + rhs_support.to_string();
            return res;
        }
        total += en.coeff;
    }
    if (total != rhs_coeff) {
        res.ok = false;
        res.detail = "vector EF: coefficient " + total.to_string() + " != " +
                     rhs_coeff.to_string();
    }
    return res;
}

}  // namespace supermac
