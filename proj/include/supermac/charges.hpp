#pragma once

// Super charges as graded operators: the closed forms E_{1,0}, E_{2,0},
// F_{1,1}, F_{2,-1} and the derived E_{1,-1}, F_{1,0}; the vertex-operator
// residue forms E_{2,1}, F_{1,2}, F_{2,0}; partial low-level ansatz forms for
// general modes; and the two vacuum-expectation engines (charged fermions
// psi_m, psi_m^dag and the s/nu auxiliary system).

#include <map>
#include <vector>

#include "supermac/superpoly.hpp"

namespace supermac {

// ---- elementary operator chains (the building blocks of every vertex) ----

struct ElemOp {
    enum class Kind { MulP, MulPi, DP, DPi } kind;
    int k;
};

using OpChain = std::vector<ElemOp>;  // ops[0] is applied last (leftmost factor)

int chain_parity(const OpChain& c);
int chain_degree2(const OpChain& c);
SuperPolynomial chain_apply(const OpChain& c, const SuperPolynomial& f);

// ---- w-Laurent objects ----

class OperatorLaurent {
public:
    OperatorLaurent() = default;

    void set(int wexp, GradedOperator op);
    const GradedOperator* coeff(int wexp) const;
    const std::map<int, GradedOperator>& coeffs() const { return coeffs_; }

    OperatorLaurent operator+(const OperatorLaurent& o) const;
    // Operator-composition convolution: (A*B)(w) = A(w) B(w).
    friend OperatorLaurent laurent_product(const OperatorLaurent& a, const OperatorLaurent& b);

private:
    std::map<int, GradedOperator> coeffs_;
};

// Coefficient of w^0.
GradedOperator residue(const OperatorLaurent& s, int degree2, int max_in2);

// ---- charged-fermion words ----

struct CliffLetter {
    int mode;
    bool dagger;
};

// <0| psi...psi^dag... |0> with {psi_m, psi_n^dag} = delta_{mn}; Wick signs.
int clifford_word_vev(const std::vector<CliffLetter>& word);

// A linear combination of (Scalar, w-power, operator chain, psi word); psi
// letters anticommute with the odd chain generators, with the transposition
// sign tracked at multiplication time.
class CliffordOp {
public:
    struct Term {
        Scalar coeff;
        int wexp = 0;
        OpChain chain;
        std::vector<CliffLetter> word;
    };

    CliffordOp() = default;
    static CliffordOp one();
    static CliffordOp single(Term t);

    const std::vector<Term>& terms() const { return terms_; }
    void add(Term t);

    friend CliffordOp clifford_product(const CliffordOp& a, const CliffordOp& b, int window2);
    friend CliffordOp clifford_exp(const CliffordOp& x, int window2);
    CliffordOp operator+(const CliffordOp& o) const;

private:
    std::vector<Term> terms_;
};

// Full Wick contraction; the result carries only p/pi operator content.
OperatorLaurent clifford_vev(const CliffordOp& op, int max_in2);

// ---- vertex operators ----

// V_B^{(-)}(w) = exp(sum (1-t^{-k})/k p_k w^{2k}),
// V_B^{(+)}(w) = exp(sum (q^k - 1) d/dp_k w^{-2k}).
OperatorLaurent vertex_VB(int sign, int max_in2);

enum class VFVariant { plain, tilde };
CliffordOp vertex_VF(int sign, VFVariant variant, int window2);

// <0| V_F^-(w) V_F^+(w) |0> evaluated on a window (cached); variant selects
// the plain or tilde pair.
OperatorLaurent vertex_VF_vev(VFVariant variant, int max_in2);

// res_w V_B^-(w) V_B^+(w) <0| V_F^-(w) V_F^+(w) |0>, the degree-0 operator
// behind the positive Hamiltonians (tilde variant gives the H_{1,+1} core).
GradedOperator vertex_hamiltonian_core(VFVariant variant, int max_in2);

// Direct application of single w-coefficients of the cached vertex blocks;
// used by identity checks that interleave pi/d_pi factors between them.
SuperPolynomial apply_vertex_bos(int wexp, const SuperPolynomial& f, int window2);
SuperPolynomial apply_vertex_vf(VFVariant variant, int wexp, const SuperPolynomial& f,
                                int window2);
std::vector<int> vertex_vf_support(VFVariant variant, int window2);

// ---- Galakhov s/nu engine ----

class GalakhovExpr {
public:
    struct Term {
        Scalar coeff;
        int wexp = 0;
        OpChain chain;
        int spow = 0;
        std::vector<int> nu;  // +1 = nu, -1 = nu^dag, in order
    };

    const std::vector<Term>& terms() const { return terms_; }
    void add(Term t);

private:
    std::vector<Term> terms_;
};

// <s^a> = 1; <nu nu^dag s^b> = (1-(qt)^{b+1})/(q^b (1-qt)) for b >= 0, else 0.
// nu letters commute past the p/pi coefficients here; a nu^dag-first pair is
// malformed and throws.
Scalar galakhov_pair_value(int b);
GalakhovExpr galakhov_residue(const GalakhovExpr& expr);
GradedOperator galakhov_vev(const GalakhovExpr& expr, int degree2, int max_in2);

// Residue of <V^(+)(w) V^(-)(w)> for the s/nu vertex pair; i = 2 gives the
// s^{k-1} weighting, i = 1 the s^{k-2} one.
GradedOperator galakhov_h_minus(int i, int max_in2);

// ---- charges ----

enum class Side { E, F };

struct ChargeId {
    Side side;
    int i;     // 1 or 2
    int mode;  // the current mode n
};

bool charge_supported(const ChargeId& id);
bool charge_is_conjectural(const ChargeId& id);

// Closed-form / vertex-residue charge on the window; throws for unsupported
// modes (ansatz_charge covers more modes on low levels).
GradedOperator charge(const ChargeId& id, int max_in2);

// Partial low-level forms valid on inputs of level <= cap2/2:
//   E_{1,n}: cap2 = 3,  F_{1,n}: cap2 = 4,  E_{2,n}: cap2 = 3,  F_{2,n}: cap2 = 4.
int ansatz_input_cap2(const ChargeId& id);
GradedOperator ansatz_charge(const ChargeId& id, int level_cap2);

}  // namespace supermac
