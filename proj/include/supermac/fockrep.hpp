#pragma once

// The toroidal-algebra side: the super Fock basis |lambda, sigma> with the
// Pieri-coefficient actions of the E/F modes, the Cartan eigen-series
// K_1(z), K_2(z), and the vector representation V(u).
//
// Dictionary: lambda = Lambda^{circledstar}, sigma the grading of Lambda.
// E_2 and F_2 are the s = 0 currents (E_2 == E_0bar).

#include <string>
#include <vector>

#include "supermac/scalar.hpp"
#include "supermac/superpartition.hpp"

namespace supermac {

struct FockState {
    std::vector<int> lam;    // weakly decreasing, entries >= 1
    std::vector<int> sigma;  // same length, entries in {0,1}

    static FockState from_super(const SuperPartition& p);
    SuperPartition to_super() const;
    int length() const { return (int)lam.size(); }
    bool operator==(const FockState& o) const { return lam == o.lam && sigma == o.sigma; }
};

struct FockTerm {
    Scalar coeff;
    FockState state;
};

// Action of the mode E_{s,n} resp. F_{s,n} on a state, s in {1,2}.
std::vector<FockTerm> pieri_E(int s, int n, const FockState& state);
std::vector<FockTerm> pieri_F(int s, int n, const FockState& state);

// Pieri coefficient of a single row (zero if the grading selection fails),
// including the mode factor; exposed for coefficient-level tests.
Scalar pieri_E_coeff(int s, int n, const FockState& state, int row);
Scalar pieri_F_coeff(int s, int n, const FockState& state, int row);

// Exact rational function of z with Scalar coefficients.
struct CartanSeries {
    std::vector<Scalar> num;  // index = power of z
    std::vector<Scalar> den;

    struct Expansion {
        int lead;                    // K(z) = sum_r coeffs[r] z^{lead - dir*r}
        std::vector<Scalar> coeffs;  // r = 0..order
    };
    // direction +1: around z = infinity; -1: around z = 0.
    Expansion expand(int direction, int order) const;
};

// Generating function K_i(z) of the Cartan eigenvalues on a Fock state.
CartanSeries cartan(int i, const FockState& state);
CartanSeries::Expansion cartan_series(int i, const FockState& state, int direction, int order);

// Eigenvalue of H_{i,r} (r != 0) on the state, read from the Cartan series.
Scalar cartan_hamiltonian_mode(int i, int r, const FockState& state);

// Eigenvalue of [E_{i,m}, F_{i,n}]_+ predicted by the shifted relation:
// the z^{-(m+n)} coefficient of [K_i(z)]_inf - [K_i(z)]_0.
Scalar shifted_EF_rhs(int i, int m, int n, const FockState& state);

struct CheckResult {
    bool ok = true;
    std::string detail;
};

// Verifies [E_{i,m}, F_{i,n}]_+ acting on every state of level <= max_level2:
// off-diagonal cancellation plus diagonal equality with shifted_EF_rhs.
CheckResult check_shifted_EF(int i, int m, int n, int max_level2);

// ---- vector representation V(u) ----

struct VectorState {
    int k;
    int sigma;
    bool operator==(const VectorState& o) const { return k == o.k && sigma == o.sigma; }
};

// coeff * delta(z / support) |state>
struct VectorTerm {
    Scalar coeff;
    Scalar support;
    VectorState state;
};

std::vector<VectorTerm> vector_E(int s, const VectorState& v);
std::vector<VectorTerm> vector_F(int s, const VectorState& v);
CartanSeries vector_K(int s, const VectorState& v);

// [E_s(z), F_s(w)]_+ == delta(w/z)(K_s^+(z) - K_s^-(z)) on the given state
// (the representation is unshifted, r_i = 0).
CheckResult check_vector_unshifted(int s, const VectorState& v);

}  // namespace supermac
