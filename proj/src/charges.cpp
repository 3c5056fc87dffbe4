#include "supermac/charges.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "supermac/genfun.hpp"

namespace supermac {

namespace {

const Scalar kOne(1);

int elem_parity(const ElemOp& e) {
    return e.kind == ElemOp::Kind::MulPi || e.kind == ElemOp::Kind::DPi ? 1 : 0;
}

int elem_degree2(const ElemOp& e) {
    switch (e.kind) {
        case ElemOp::Kind::MulP: return 2 * e.k;
        case ElemOp::Kind::MulPi: return 2 * e.k - 1;
        case ElemOp::Kind::DP: return -2 * e.k;
        case ElemOp::Kind::DPi: return -(2 * e.k - 1);
    }
    return 0;
}

SuperPolynomial elem_apply(const ElemOp& e, const SuperPolynomial& f) {
    switch (e.kind) {
        case ElemOp::Kind::MulP: return mul_p_poly(e.k, f);
        case ElemOp::Kind::MulPi: return mul_pi_poly(e.k, f);
        case ElemOp::Kind::DP: return d_p_poly(e.k, f);
        case ElemOp::Kind::DPi: return d_pi_poly(e.k, f);
    }
    return SuperPolynomial();
}

int chain_der_mass2(const OpChain& c) {
    int m = 0;
    for (const auto& e : c)
        if (e.kind == ElemOp::Kind::DP || e.kind == ElemOp::Kind::DPi) m -= elem_degree2(e);
    return m;
}

int chain_mult_mass2(const OpChain& c) {
    int m = 0;
    for (const auto& e : c)
        if (e.kind == ElemOp::Kind::MulP || e.kind == ElemOp::Kind::MulPi) m += elem_degree2(e);
    return m;
}

}  // namespace

int chain_parity(const OpChain& c) {
    int p = 0;
    for (const auto& e : c) p ^= elem_parity(e);
    return p;
}

int chain_degree2(const OpChain& c) {
    int d = 0;
    for (const auto& e : c) d += elem_degree2(e);
    return d;
}

SuperPolynomial chain_apply(const OpChain& c, const SuperPolynomial& f) {
    SuperPolynomial g = f;
    for (auto it = c.rbegin(); it != c.rend() && !g.is_zero(); ++it) g = elem_apply(*it, g);
    return g;
}

void OperatorLaurent::set(int wexp, GradedOperator op) {
    coeffs_[wexp] = std::move(op);
}

const GradedOperator* OperatorLaurent::coeff(int wexp) const {
    auto it = coeffs_.find(wexp);
    return it == coeffs_.end() ? nullptr : &it->second;
}

OperatorLaurent OperatorLaurent::operator+(const OperatorLaurent& o) const {
    OperatorLaurent r = *this;
    for (const auto& [e, op] : o.coeffs_) {
        auto it = r.coeffs_.find(e);
        if (it == r.coeffs_.end())
            r.coeffs_.emplace(e, op);
        else
            it->second = it->second + op;
    }
    return r;
}

OperatorLaurent laurent_product(const OperatorLaurent& a, const OperatorLaurent& b) {
    OperatorLaurent r;
    for (const auto& [ea, oa] : a.coeffs_)
        for (const auto& [eb, ob] : b.coeffs_) {
            GradedOperator prod = compose(oa, ob);
            auto it = r.coeffs_.find(ea + eb);
            if (it == r.coeffs_.end())
                r.coeffs_.emplace(ea + eb, std::move(prod));
            else
                it->second = it->second + prod;
        }
    return r;
}

GradedOperator residue(const OperatorLaurent& s, int degree2, int max_in2) {
    const GradedOperator* c = s.coeff(0);
    if (!c) return GradedOperator::zero(degree2, max_in2);
    return c->restricted(std::min(max_in2, c->max_in2()));
}

int clifford_word_vev(const std::vector<CliffLetter>& word) {
    if (word.empty()) return 1;
    if (word.size() % 2 != 0) return 0;
    const CliffLetter& first = word.front();
    if (first.dagger) return 0;  // <0| psi^dag = 0
    int total = 0;
    for (size_t j = 1; j < word.size(); ++j) {
        if (!word[j].dagger || word[j].mode != first.mode) continue;
        std::vector<CliffLetter> rest;
        for (size_t r = 1; r < word.size(); ++r)
            if (r != j) rest.push_back(word[r]);
        int sign = (j - 1) % 2 == 0 ? 1 : -1;
        total += sign * clifford_word_vev(rest);
    }
    return total;
}

CliffordOp CliffordOp::one() {
    CliffordOp c;
    c.terms_.push_back(Term{kOne, 0, {}, {}});
    return c;
}

CliffordOp CliffordOp::single(Term t) {
    CliffordOp c;
    c.add(std::move(t));
    return c;
}

void CliffordOp::add(Term t) {
    if (t.coeff.is_zero()) return;
    terms_.push_back(std::move(t));
}

CliffordOp CliffordOp::operator+(const CliffordOp& o) const {
    CliffordOp r = *this;
    for (const auto& t : o.terms_) r.terms_.push_back(t);
    return r;
}

namespace {

bool term_within(const CliffordOp::Term& t, int window2) {
    if (chain_der_mass2(t.chain) > window2) return false;
    if (chain_mult_mass2(t.chain) > window2 + 2) return false;
    if (std::abs(t.wexp) > 4 * window2 + 16) return false;
    // Adjacent equal Grassmann generators square to zero.
    for (size_t i = 0; i + 1 < t.chain.size(); ++i) {
        const ElemOp &a = t.chain[i], &b = t.chain[i + 1];
        bool odd = a.kind == ElemOp::Kind::MulPi || a.kind == ElemOp::Kind::DPi;
        if (odd && a.kind == b.kind && a.k == b.k) return false;
    }
    return true;
}

// Canonical encoding of (wexp, chain, word) for merging equal terms.
using TermKey = std::tuple<int, std::vector<int>, std::vector<int>>;

TermKey term_key(const CliffordOp::Term& t) {
    std::vector<int> ch, wd;
    for (const auto& e : t.chain) ch.push_back((int)e.kind * 1024 + e.k);
    for (const auto& l : t.word) wd.push_back(l.mode * 2 + (l.dagger ? 1 : 0));
    return {t.wexp, std::move(ch), std::move(wd)};
}

CliffordOp merge_terms(std::map<TermKey, Scalar>&& acc) {
    CliffordOp r;
    for (auto& [key, coeff] : acc) {
        if (coeff.is_zero()) continue;
        CliffordOp::Term t;
        t.coeff = std::move(coeff);
        t.wexp = std::get<0>(key);
        for (int enc : std::get<1>(key))
            t.chain.push_back(ElemOp{(ElemOp::Kind)(enc / 1024), enc % 1024});
        for (int enc : std::get<2>(key))
            t.word.push_back(CliffLetter{enc / 2, (enc & 1) != 0});
        r.add(std::move(t));
    }
    return r;
}

}  // namespace

CliffordOp clifford_product(const CliffordOp& a, const CliffordOp& b, int window2) {
    std::map<TermKey, Scalar> acc;
    for (const auto& ta : a.terms()) {
        int wa_parity = (int)ta.word.size() % 2;
        for (const auto& tb : b.terms()) {
            // (A (x) w1)(B (x) w2) = (-1)^{|w1||B|} AB (x) w1 w2.
            CliffordOp::Term t;
            t.wexp = ta.wexp + tb.wexp;
            t.chain = ta.chain;
            t.chain.insert(t.chain.end(), tb.chain.begin(), tb.chain.end());
            t.word = ta.word;
            t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
            if (!term_within(t, window2)) continue;
            Scalar c = ta.coeff * tb.coeff;
            if (wa_parity && chain_parity(tb.chain)) c = -c;
            auto key = term_key(t);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(std::move(key), std::move(c));
            else
                it->second += c;
        }
    }
    return merge_terms(std::move(acc));
}

CliffordOp clifford_exp(const CliffordOp& x, int window2) {
    // Every exponent letter here is even (an odd chain paired with an odd
    // psi letter, or a plain bosonic chain), so the letters commute as units
    // and the exponential is a sum over sorted multisets with 1/m_j!
    // symmetry factors.
    const auto& letters = x.terms();
    CliffordOp sum = CliffordOp::one();
    std::function<void(size_t, const CliffordOp::Term&)> rec =
        [&](size_t start, const CliffordOp::Term& acc) {
            for (size_t i = start; i < letters.size(); ++i) {
                int reps = 1;
                CliffordOp::Term cur = acc;
                while (true) {
                    CliffordOp::Term next;
                    next.wexp = cur.wexp + letters[i].wexp;
                    next.chain = cur.chain;
                    next.chain.insert(next.chain.end(), letters[i].chain.begin(),
                                      letters[i].chain.end());
                    next.word = cur.word;
                    next.word.insert(next.word.end(), letters[i].word.begin(),
                                     letters[i].word.end());
                    if (!term_within(next, window2)) break;
                    // (A (x) w)(B (x) v) = (-1)^{|w||B|} AB (x) wv
                    bool flip = (cur.word.size() % 2) && chain_parity(letters[i].chain);
                    next.coeff = cur.coeff * letters[i].coeff * Scalar(1, reps);
                    if (flip) next.coeff = -next.coeff;
                    sum.add(next);
                    rec(i + 1, next);
                    cur = next;
                    ++reps;
                }
            }
        };
    CliffordOp::Term unit;
    unit.coeff = Scalar(1);
    rec(0, unit);
    return sum;
}

OperatorLaurent clifford_vev(const CliffordOp& op, int max_in2) {
    // Collect (wexp -> list of weighted chains), then materialize.
    std::map<int, std::vector<std::pair<Scalar, OpChain>>> grouped;
    for (const auto& t : op.terms()) {
        int v = clifford_word_vev(t.word);
        if (v == 0) continue;
        Scalar c = v < 0 ? -t.coeff : t.coeff;
        grouped[t.wexp].push_back({std::move(c), t.chain});
    }
    OperatorLaurent out;
    for (const auto& [wexp, chains] : grouped) {
        int deg2 = chain_degree2(chains.front().second);
        for (const auto& [c, ch] : chains)
            if (chain_degree2(ch) != deg2)
                throw std::logic_error("clifford_vev: inhomogeneous Laurent coefficient");
        GradedOperator g = GradedOperator::build(deg2, max_in2, [&](const SuperPartition& p) {
            SuperPolynomial img;
            SuperPolynomial f = SuperPolynomial::basis(p);
            for (const auto& [c, ch] : chains) img += chain_apply(ch, f) * c;
            return img;
        });
        out.set(wexp, std::move(g));
    }
    return out;
}

OperatorLaurent vertex_VB(int sign, int max_in2) {
    // Represent the exponential through CliffordOp terms with empty psi words.
    CliffordOp x;
    for (int k = 1; 2 * k <= max_in2 + 2; ++k) {
        CliffordOp::Term t;
        if (sign < 0) {
            t.coeff = (kOne - Scalar::t().pow(-k)) * Scalar(1, k);
            t.wexp = 2 * k;
            t.chain = {ElemOp{ElemOp::Kind::MulP, k}};
        } else {
            t.coeff = Scalar::q().pow(k) - kOne;
            t.wexp = -2 * k;
            t.chain = {ElemOp{ElemOp::Kind::DP, k}};
        }
        x.add(std::move(t));
    }
    return clifford_vev(clifford_exp(x, max_in2), max_in2);
}

CliffordOp vertex_VF(int sign, VFVariant variant, int window2) {
    int low = variant == VFVariant::tilde ? 2 : 1;
    int off = variant == VFVariant::tilde ? 2 : 1;
    CliffordOp x;
    for (int k = low; 2 * k - 1 <= window2 + 2; ++k) {
        for (int m = 0; m <= k - off; ++m) {
            CliffordOp::Term t;
            if (sign < 0) {
                // (1 - t^{-1}) t^{off-k} w^{2k-1} pi_k * t^m psi_m
                t.coeff = (kOne - Scalar::t().inverse()) * Scalar::t().pow(off - k + m);
                t.wexp = 2 * k - 1;
                t.chain = {ElemOp{ElemOp::Kind::MulPi, k}};
                t.word = {CliffLetter{m, false}};
            } else {
                // (q - 1) q^{k-off} w^{-2k+1} (q^{-m} psi_m^dag) d/dpi_k
                // psi^dag stands left of the odd derivative: one transposition.
                t.coeff = -(Scalar::q() - kOne) * Scalar::q().pow(k - off - m);
                t.wexp = -(2 * k - 1);
                t.chain = {ElemOp{ElemOp::Kind::DPi, k}};
                t.word = {CliffLetter{m, true}};
            }
            x.add(std::move(t));
        }
    }
    return clifford_exp(x, window2);
}

OperatorLaurent vertex_VF_vev(VFVariant variant, int max_in2) {
    CliffordOp prod = clifford_product(vertex_VF(-1, variant, max_in2),
                                       vertex_VF(+1, variant, max_in2), max_in2);
    return clifford_vev(prod, max_in2);
}

void GalakhovExpr::add(Term t) {
    if (t.coeff.is_zero()) return;
    terms_.push_back(std::move(t));
}

Scalar galakhov_pair_value(int b) {
    if (b < 0) return Scalar();
    Scalar qt = Scalar::q() * Scalar::t();
    return (kOne - qt.pow(b + 1)) / (Scalar::q().pow(b) * (kOne - qt));
}

GalakhovExpr galakhov_residue(const GalakhovExpr& expr) {
    GalakhovExpr r;
    for (const auto& t : expr.terms())
        if (t.wexp == 0) r.add(t);
    return r;
}

GradedOperator galakhov_vev(const GalakhovExpr& expr, int degree2, int max_in2) {
    std::vector<std::pair<Scalar, OpChain>> chains;
    for (const auto& t : expr.terms()) {
        if (t.wexp != 0)
            throw std::invalid_argument("galakhov_vev: take the w-residue first");
        Scalar v;
        if (t.nu.empty()) {
            v = kOne;  // <s^a> = 1
        } else if (t.nu.size() == 2 && t.nu[0] == +1 && t.nu[1] == -1) {
            v = galakhov_pair_value(t.spow);
        } else {
            throw std::invalid_argument("galakhov_vev: malformed nu word");
        }
        if (v.is_zero()) continue;
        if (chain_degree2(t.chain) != degree2)
            throw std::invalid_argument("galakhov_vev: chain degree mismatch");
        chains.push_back({t.coeff * v, t.chain});
    }
    return GradedOperator::build(degree2, max_in2, [&](const SuperPartition& p) {
        SuperPolynomial img;
        SuperPolynomial f = SuperPolynomial::basis(p);
        for (const auto& [c, ch] : chains) img += chain_apply(ch, f) * c;
        return img;
    });
}

namespace {

// Converts a multiplication pattern (bosonic polynomial in the p's) into
// weighted chains of MulP factors, with an s-power -|mu| per term.
void pattern_chains(const SuperPolynomial& pat, bool derivative,
                    std::vector<GalakhovExpr::Term>& out, int s_per_unit) {
    for (const auto& [part, c] : pat.terms()) {
        GalakhovExpr::Term t;
        t.coeff = c;
        int total = 0;
        for (int i = 0; i < part.length(); ++i) {
            int k = part.part2(i) / 2;
            total += k;
            t.chain.push_back(ElemOp{derivative ? ElemOp::Kind::DP : ElemOp::Kind::MulP, k});
        }
        t.spow = s_per_unit * total;
        t.wexp = (derivative ? -2 : 2) * total;
        out.push_back(std::move(t));
    }
}

}  // namespace

GradedOperator galakhov_h_minus(int i, int max_in2) {
    // <V^(+)(w) V^(-)(w)> with
    //   V^(+) = (1 + (1-t) sum_k w^{2k-1} pi_k nu) exp(sum (1-t^k)/k p_k w^{2k} s^{-k})
    //   V^(-) = (1 + (q^{-1}-1) sum_k w^{-2k+1} d/dpi_k nu^dag s^{k-off})
    //           exp(sum (q^{-k}-1) d/dp_k w^{-2k})
    // off = 1 for i = 2 and off = 2 for i = 1; nu letters commute past the
    // p/pi coefficients, the pair contracts by the s-graded rule.
    int off = i == 2 ? 1 : 2;
    GalakhovExpr expr;
    int kmax = (max_in2 + 2) / 2;
    int pimax = (max_in2 + 3) / 2;
    for (int n = 0; n <= kmax; ++n) {
        std::vector<GalakhovExpr::Term> left;
        pattern_chains(c_poly(n), false, left, -1);
        for (int m = 0; m <= kmax; ++m) {
            std::vector<GalakhovExpr::Term> right;
            pattern_chains(ctilde_pattern(m), true, right, 0);
            for (const auto& lt : left) {
                for (const auto& rt : right) {
                    // Pure bosonic part: c_n[p] s^{-n} w^{2n} ct_m w^{-2m}.
                    GalakhovExpr::Term t;
                    t.coeff = lt.coeff * rt.coeff;
                    t.wexp = lt.wexp + rt.wexp;
                    t.chain = lt.chain;
                    t.chain.insert(t.chain.end(), rt.chain.begin(), rt.chain.end());
                    t.spow = lt.spow;
                    expr.add(std::move(t));
                    // nu-bilinear insertion: (1-t) w^{2a-1} pi_a nu from V^(+),
                    // (q^{-1}-1) w^{-2b+1} d/dpi_b nu^dag s^{b-off} from V^(-).
                    for (int a = 1; a <= pimax; ++a)
                        for (int b = 1; b <= pimax; ++b) {
                            GalakhovExpr::Term tn;
                            tn.coeff = lt.coeff * rt.coeff * (kOne - Scalar::t()) *
                                       (Scalar::q().inverse() - kOne);
                            tn.wexp = lt.wexp + rt.wexp + 2 * (a - b);
                            tn.chain = {ElemOp{ElemOp::Kind::MulPi, a}};
                            tn.chain.insert(tn.chain.end(), lt.chain.begin(), lt.chain.end());
                            tn.chain.push_back(ElemOp{ElemOp::Kind::DPi, b});
                            tn.chain.insert(tn.chain.end(), rt.chain.begin(), rt.chain.end());
                            tn.spow = lt.spow + b - off;
                            tn.nu = {+1, -1};
                            expr.add(std::move(tn));
                        }
                }
            }
        }
    }
    return galakhov_vev(galakhov_residue(expr), 0, max_in2);
}

namespace {

// Weighted chains grouped by w-exponent.
using ChainLaurent = std::map<int, std::vector<std::pair<Scalar, OpChain>>>;

SuperPolynomial apply_chains_at(const ChainLaurent& cl, int wexp, const SuperPolynomial& f) {
    SuperPolynomial r;
    auto it = cl.find(wexp);
    if (it == cl.end()) return r;
    for (const auto& [c, ch] : it->second) r += chain_apply(ch, f) * c;
    return r;
}

CliffordOp make_VB_exponent(int sign, int window2) {
    CliffordOp x;
    for (int k = 1; 2 * k <= window2 + 2; ++k) {
        CliffordOp::Term tm;
        if (sign < 0) {
            tm.coeff = (kOne - Scalar::t().pow(-k)) * Scalar(1, k);
            tm.wexp = 2 * k;
            tm.chain = {ElemOp{ElemOp::Kind::MulP, k}};
        } else {
            tm.coeff = Scalar::q().pow(k) - kOne;
            tm.wexp = -2 * k;
            tm.chain = {ElemOp{ElemOp::Kind::DP, k}};
        }
        x.add(std::move(tm));
    }
    return x;
}

ChainLaurent to_chains(const CliffordOp& op) {
    // Contract the psi words and merge equal chains per w-exponent.
    std::map<std::pair<int, std::vector<int>>, Scalar> acc;
    for (const auto& t : op.terms()) {
        int v = clifford_word_vev(t.word);
        if (v == 0) continue;
        Scalar c = v < 0 ? -t.coeff : t.coeff;
        std::vector<int> enc;
        for (const auto& e : t.chain) enc.push_back((int)e.kind * 1024 + e.k);
        auto key = std::make_pair(t.wexp, std::move(enc));
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(std::move(key), std::move(c));
        else
            it->second += c;
    }
    ChainLaurent cl;
    for (auto& [key, coeff] : acc) {
        if (coeff.is_zero()) continue;
        OpChain chain;
        for (int enc : key.second)
            chain.push_back(ElemOp{(ElemOp::Kind)(enc / 1024), enc % 1024});
        cl[key.first].push_back({std::move(coeff), std::move(chain)});
    }
    return cl;
}

// V_B^-(w) V_B^+(w), the fermion VEVs and their products, cached per window.
struct VertexCores {
    ChainLaurent bos;        // V_B^- V_B^+
    ChainLaurent vf_tilde;   // <0| Vt_F^- Vt_F^+ |0>
    ChainLaurent vf_plain;   // <0| V_F^- V_F^+ |0>
    ChainLaurent full;       // bos * vf_tilde
    ChainLaurent full_plain; // bos * vf_plain
};

const VertexCores& vertex_cores(int window2) {
    static std::map<int, VertexCores> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(window2);
    if (it != cache.end()) return it->second;

    CliffordOp bos = clifford_product(clifford_exp(make_VB_exponent(-1, window2), window2),
                                      clifford_exp(make_VB_exponent(+1, window2), window2),
                                      window2);
    CliffordOp vf = clifford_product(vertex_VF(-1, VFVariant::tilde, window2),
                                     vertex_VF(+1, VFVariant::tilde, window2), window2);
    CliffordOp vfp = clifford_product(vertex_VF(-1, VFVariant::plain, window2),
                                      vertex_VF(+1, VFVariant::plain, window2), window2);
    VertexCores cores;
    cores.bos = to_chains(bos);
    cores.vf_tilde = to_chains(vf);
    cores.vf_plain = to_chains(vfp);
    cores.full = to_chains(clifford_product(bos, vf, window2));
    cores.full_plain = to_chains(clifford_product(bos, vfp, window2));
    return cache.emplace(window2, std::move(cores)).first->second;
}

GradedOperator charge_E21(int max_in2) {
    // u^{-1}(q/t)^{1/2} E_{2,1} =
    //   - sum_k res_w w^{-2k} V_B^- V_B^+ <Vt_F^- Vt_F^+> q^k d/dpi_k.
    const VertexCores& cores = vertex_cores(max_in2 + 1);
    return GradedOperator::build(1, max_in2, [&cores](const SuperPartition& p) {
        SuperPolynomial img;
        SuperPolynomial f = SuperPolynomial::basis(p);
        for (int k = 1; 2 * k - 1 <= p.level2(); ++k) {
            SuperPolynomial g = d_pi_poly(k, f);
            if (g.is_zero()) continue;
            img += apply_chains_at(cores.full, 2 * k, g) * Scalar::q().pow(k);
        }
        return -(img * Scalar::mono2(-1, 1, 1));  // overall -u (t/q)^{1/2}
    });
}

GradedOperator charge_F12(int max_in2) {
    // u^{-1} F_{1,2} = sum_k res_w w^{-2k+2} V_B^- V_B^+ <Vt Vt> q^{k-1} d/dpi_k.
    const VertexCores& cores = vertex_cores(max_in2 + 1);
    return GradedOperator::build(-1, max_in2, [&cores](const SuperPartition& p) {
        SuperPolynomial img;
        SuperPolynomial f = SuperPolynomial::basis(p);
        for (int k = 1; 2 * k - 1 <= p.level2(); ++k) {
            SuperPolynomial g = d_pi_poly(k, f);
            if (g.is_zero()) continue;
            img += apply_chains_at(cores.full, 2 * (k - 1), g) * Scalar::q().pow(k - 1);
        }
        return img * Scalar::u();
    });
}

GradedOperator charge_F20(int max_in2) {
    // F_{2,0} = u (t/q)^{1/2} sum_k res_w w^{2k} V_B^- V_B^+ t^{-k} pi_k <Vt Vt>;
    // pi_k stands between the bosonic block and the fermion VEV block.
    const VertexCores& cores = vertex_cores(max_in2 + 1);
    return GradedOperator::build(-1, max_in2, [&cores, max_in2](const SuperPartition& p) {
        SuperPolynomial img;
        SuperPolynomial f = SuperPolynomial::basis(p);
        for (int k = 1; 2 * k - 1 <= max_in2 + 1; ++k) {
            // residue forces wexp(bos) + wexp(vev) = -2k.
            SuperPolynomial acc;
            for (const auto& [mv, chains] : cores.vf_tilde) {
                SuperPolynomial g = apply_chains_at(cores.vf_tilde, mv, f);
                if (g.is_zero()) continue;
                g = mul_pi_poly(k, g);
                if (g.is_zero()) continue;
                acc += apply_chains_at(cores.bos, -2 * k - mv, g);
            }
            if (!acc.is_zero()) img += acc * Scalar::t().pow(-k);
        }
        return img * Scalar::mono2(-1, 1, 1);  // u (t/q)^{1/2}
    });
}

}  // namespace

GradedOperator vertex_hamiltonian_core(VFVariant variant, int max_in2) {
    const VertexCores& cores = vertex_cores(max_in2 + 1);
    const ChainLaurent& full = variant == VFVariant::plain ? cores.full_plain : cores.full;
    return GradedOperator::build(0, max_in2, [&full](const SuperPartition& p) {
        return apply_chains_at(full, 0, SuperPolynomial::basis(p));
    });
}

SuperPolynomial apply_vertex_bos(int wexp, const SuperPolynomial& f, int window2) {
    return apply_chains_at(vertex_cores(window2).bos, wexp, f);
}

SuperPolynomial apply_vertex_vf(VFVariant variant, int wexp, const SuperPolynomial& f,
                                int window2) {
    const VertexCores& cores = vertex_cores(window2);
    return apply_chains_at(variant == VFVariant::plain ? cores.vf_plain : cores.vf_tilde,
                           wexp, f);
}

std::vector<int> vertex_vf_support(VFVariant variant, int window2) {
    const VertexCores& cores = vertex_cores(window2);
    const ChainLaurent& cl = variant == VFVariant::plain ? cores.vf_plain : cores.vf_tilde;
    std::vector<int> out;
    for (const auto& [e, chains] : cl) out.push_back(e);
    return out;
}

bool charge_supported(const ChargeId& id) {
    if (id.i != 1 && id.i != 2) return false;
    if (id.side == Side::E)
        return (id.i == 1 && (id.mode == 0 || id.mode == -1)) ||
               (id.i == 2 && (id.mode == 0 || id.mode == 1));
    return (id.i == 1 && (id.mode == 1 || id.mode == 0 || id.mode == 2)) ||
           (id.i == 2 && (id.mode == -1 || id.mode == 0));
}

bool charge_is_conjectural(const ChargeId& id) {
    if (id.side == Side::E) return id.i == 2 && id.mode == 1;
    return (id.i == 1 && id.mode == 2) || (id.i == 2 && id.mode == 0);
}

GradedOperator charge(const ChargeId& id, int max_in2) {
    if (!charge_supported(id))
        throw std::invalid_argument(
            "charge: no closed form implemented for this mode; ansatz_charge covers more "
            "modes on low levels");
    const bool is_E = id.side == Side::E;
    if (is_E && id.i == 1 && id.mode == 0) return mul_pi(1, max_in2);
    if (!is_E && id.i == 1 && id.mode == 1) return d_pi(1, max_in2);
    if (is_E && id.i == 2 && id.mode == 0) {
        return GradedOperator::build(1, max_in2, [](const SuperPartition& p) {
            SuperPolynomial img;
            SuperPolynomial f = SuperPolynomial::basis(p);
            for (int k = 1; 2 * k - 1 <= p.level2(); ++k) {
                SuperPolynomial g = d_pi_poly(k, f);
                if (!g.is_zero()) img += apply_c(k, g);
            }
            return img;
        });
    }
    if (!is_E && id.i == 2 && id.mode == -1) {
        return GradedOperator::build(-1, max_in2, [](const SuperPartition& p) {
            SuperPolynomial img;
            SuperPolynomial f = SuperPolynomial::basis(p);
            for (int k = 1; 2 * k <= p.level2() + 1; ++k) {
                SuperPolynomial g = apply_ctilde(k, f);
                if (!g.is_zero()) img += mul_pi_poly(k, g);
            }
            return -img;
        });
    }
    if (is_E && id.i == 1 && id.mode == -1) {
        return GradedOperator::build(1, max_in2, [](const SuperPartition& p) {
            SuperPolynomial img;
            SuperPolynomial f = SuperPolynomial::basis(p);
            for (int k = 1; 2 * (k - 1) <= p.level2(); ++k) {
                SuperPolynomial g = apply_ctilde(k - 1, f);
                if (!g.is_zero()) img += mul_pi_poly(k, g);
            }
            return img * Scalar::u().inverse();
        });
    }
    if (!is_E && id.i == 1 && id.mode == 0) {
        return GradedOperator::build(-1, max_in2, [](const SuperPartition& p) {
            SuperPolynomial img;
            SuperPolynomial f = SuperPolynomial::basis(p);
            for (int k = 1; 2 * k - 1 <= p.level2(); ++k) {
                SuperPolynomial g = d_pi_poly(k, f);
                if (!g.is_zero()) img += apply_c(k - 1, g);
            }
            return img * Scalar::u().inverse();
        });
    }
    if (is_E && id.i == 2 && id.mode == 1) return charge_E21(max_in2);
    if (!is_E && id.i == 1 && id.mode == 2) return charge_F12(max_in2);
    return charge_F20(max_in2);
}

int ansatz_input_cap2(const ChargeId& id) {
    if (id.i == 1 && id.side == Side::E) return 3;
    if (id.i == 1 && id.side == Side::F) return 4;
    if (id.i == 2 && id.side == Side::E) return 3;
    return 4;  // F_{2,n}
}

namespace {

using K = ElemOp::Kind;

GradedOperator chains_operator(int degree2, int max_in2,
                               const std::vector<std::pair<Scalar, OpChain>>& chains) {
    return GradedOperator::build(degree2, max_in2, [&chains](const SuperPartition& p) {
        SuperPolynomial img;
        SuperPolynomial f = SuperPolynomial::basis(p);
        for (const auto& [c, ch] : chains) img += chain_apply(ch, f) * c;
        return img;
    });
}

}  // namespace

GradedOperator ansatz_charge(const ChargeId& id, int level_cap2) {
    int cap2 = ansatz_input_cap2(id);
    if (level_cap2 > cap2)
        throw std::invalid_argument("ansatz_charge: valid only on inputs of level <= " +
                                    std::to_string(cap2) + "/2");
    const Scalar q = Scalar::q(), t = Scalar::t();
    const int n = id.mode;
    std::vector<std::pair<Scalar, OpChain>> chains;
    if (id.side == Side::E && id.i == 1) {
        Scalar one_qt = kOne - q * t;
        Scalar a = q * (kOne - t) / one_qt;      // p_1 pi_1 weight of M_{3/2}
        Scalar b = (kOne - q) / one_qt;          // pi_2 weight of M_{3/2}
        Scalar alpha = (q.pow(n + 1) * (kOne - t) + t.pow(-n) * (kOne - q)) / one_qt - kOne;
        Scalar beta = (kOne - q) * (q.pow(n) - t.pow(-n)) / one_qt;
        Scalar delta = b * (kOne - t.pow(-n)) - a * (q.pow(n) - kOne);
        Scalar gamma = q.pow(n) - kOne - beta + delta;
        Scalar un = Scalar::u().pow(n);
        chains = {{un, {ElemOp{K::MulPi, 1}}},
                  {un * alpha, {ElemOp{K::MulP, 1}, ElemOp{K::DP, 1}, ElemOp{K::MulPi, 1}}},
                  {un * beta, {ElemOp{K::MulPi, 2}, ElemOp{K::DP, 1}}},
                  {un * gamma,
                   {ElemOp{K::MulPi, 2}, ElemOp{K::MulPi, 1}, ElemOp{K::DPi, 1},
                    ElemOp{K::DP, 1}}},
                  {un * delta, {ElemOp{K::MulPi, 2}, ElemOp{K::MulPi, 1}, ElemOp{K::DPi, 2}}}};
        return chains_operator(1, level_cap2, chains);
    }
    if (id.side == Side::F && id.i == 1) {
        Scalar one_qt = kOne - q * t;
        Scalar alpha = q * (kOne - t) * (q.pow(n - 1) - t.pow(1 - n)) / one_qt;
        Scalar beta = t.pow(1 - n) - kOne + alpha;
        Scalar un = Scalar::u().pow(n - 1);
        chains = {{un, {ElemOp{K::DPi, 1}}},
                  {un * alpha, {ElemOp{K::MulP, 1}, ElemOp{K::DPi, 2}}},
                  {un * beta, {ElemOp{K::MulP, 1}, ElemOp{K::DP, 1}, ElemOp{K::DPi, 1}}},
                  {-(un * beta),
                   {ElemOp{K::MulPi, 2}, ElemOp{K::DPi, 1}, ElemOp{K::DPi, 2}}}};
        return chains_operator(-1, level_cap2, chains);
    }
    if (id.side == Side::E && id.i == 2) {
        Scalar half(1, 2);
        Scalar s = half * (q.pow(n) - t.pow(-n)) *
                   ((q.inverse() - t).inverse() + (q - t.inverse()).inverse());
        Scalar gamma = half * (q.pow(n) + t.pow(-n)) + s - kOne;
        Scalar delta = half * (q.pow(n) - t.pow(-n)) - s;
        Scalar beta = half * (q.pow(n) + t.pow(1 - n)) - s;
        Scalar alpha = half * (q.pow(n) - t.pow(1 - n)) + s;
        // prefactor (1-t) u^n (q/t)^{n/2}
        Scalar pre = (kOne - t) * Scalar::u().pow(n) * Scalar::mono2(n, -n, 0);
        chains = {{pre, {ElemOp{K::MulP, 1}, ElemOp{K::DPi, 1}}},
                  {pre * alpha, {ElemOp{K::MulP, 1}, ElemOp{K::MulP, 1}, ElemOp{K::DPi, 2}}},
                  {pre * beta, {ElemOp{K::MulP, 2}, ElemOp{K::DPi, 2}}},
                  {pre * gamma,
                   {ElemOp{K::MulP, 1}, ElemOp{K::MulP, 1}, ElemOp{K::DP, 1},
                    ElemOp{K::DPi, 1}}},
                  {pre * delta, {ElemOp{K::MulP, 2}, ElemOp{K::DP, 1}, ElemOp{K::DPi, 1}}}};
        return chains_operator(1, level_cap2, chains);
    }
    // F_{2,n}
    Scalar half(1, 2);
    Scalar qi = q.inverse();
    Scalar denom = qi - t;
    Scalar A = q.pow(n) - t.pow(-n);
    Scalar B = q.pow(n + 1) - t.pow(-n - 1);
    Scalar alpha = half * t.pow(-n - 1) + half * (qi * A - B) / denom;
    Scalar beta = half * (qi - kOne) * (A + B) / denom;
    Scalar gamma = half * (kOne + qi) * B / denom;
    Scalar delta = half * t.pow(-n - 1) + half * (A + B) / denom - kOne;
    // prefactor u^{n+1} t^{-(n+1)/2} q^{(n-1)/2} (q-1)
    Scalar pre = Scalar::u().pow(n + 1) * Scalar::mono2(n - 1, -(n + 1), 0) * (q - kOne);
    chains = {{pre, {ElemOp{K::MulPi, 1}, ElemOp{K::DP, 1}}},
              {pre * alpha * Scalar(2), {ElemOp{K::MulPi, 2}, ElemOp{K::DP, 2}}},
              {pre * beta, {ElemOp{K::MulPi, 2}, ElemOp{K::DP, 1}, ElemOp{K::DP, 1}}},
              {pre * gamma * Scalar(2),
               {ElemOp{K::MulPi, 1}, ElemOp{K::MulP, 1}, ElemOp{K::DP, 2}}},
              {pre * delta,
               {ElemOp{K::MulPi, 1}, ElemOp{K::MulP, 1}, ElemOp{K::DP, 1}, ElemOp{K::DP, 1}}}};
    return chains_operator(-1, level_cap2, chains);
}

}  // namespace supermac
