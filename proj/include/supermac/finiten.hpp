#pragma once

// The finite-variable engine: q-shift operators, the four super charges
// Q_1..Q_4, the involution operator T_q, the Ruijsenaars-Macdonald operators,
// and the power-sum inverse of expand_in_variables.

#include "supermac/nvar.hpp"
#include "supermac/superpoly.hpp"

namespace supermac {

// x_i -> q^{dir} x_i.
NVarSuperPoly tau(int i, int dir, const NVarSuperPoly& f);
// Simultaneous shift on a set of variables (bitmask).
NVarSuperPoly tau_set(std::uint32_t mask, int dir, const NVarSuperPoly& f);

// A_i(tparam) = prod_{j != i} (tparam x_i - x_j)/(x_i - x_j), used inside the
// charges; exposed as numerator/denominator pieces for tests.
NVarSuperPoly a_multiplier_num(int i, const Scalar& tparam, int n);

// sum_i A_i(tparam) x_i^r, Vandermonde cleared to a polynomial.
NVarSuperPoly a_weighted_power_sum(const Scalar& tparam, int r, int n);
// sum_i A_i(tparam) d/dtheta_i f; Q_2 is the tparam = t^{-1} case.
NVarSuperPoly a_weighted_dtheta(const Scalar& tparam, const NVarSuperPoly& f);

// Super charges; inputs must keep every rational prefactor summable to a
// polynomial (symmetric inputs do).  Non-exact division throws.
NVarSuperPoly q_charge(int j, const NVarSuperPoly& f);

// T_q: on the theta_I sector applies tau_I.  A linear endomorphism.
NVarSuperPoly Tq(int dir, const NVarSuperPoly& f);

// T_q restricted to the one-fermion sector as an operator on the p/pi space:
// sum_{n,k} ct^_k pi_{n+k} q^{n-1} d/dpi_n.
GradedOperator tq_one_fermion(int max_in2);

// Ruijsenaars-Macdonald operator H_r on N variables.
NVarSuperPoly rm_hamiltonian(int r, const NVarSuperPoly& f);

// Generating combination D^x(u') = sum_r (-u')^r H_r with u' treated as a
// formal Scalar multiplier.
NVarSuperPoly rm_generating(const Scalar& uparam, const NVarSuperPoly& f);

// The unique p/pi preimage of a symmetric polynomial of level <= max_level2;
// verified by expanding back, so an under-determined N is reported, never
// silently accepted.
SuperPolynomial powersum_map(const NVarSuperPoly& f, int max_level2);

}  // namespace supermac
