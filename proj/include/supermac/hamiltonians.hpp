#pragma once

// The quartet H_{1,+-1}, H_{2,+-1}, the closed eigenvalue formulas, and the
// construction of super Macdonald polynomials by exact kernel computation.
//
// The u-free cores used internally are
//   core(2,-1) =  u (t/q)^{1/2} H_{2,-1} = 1 + sum c_k ct_k + sum Ct_{k,l} pi_k d_pi_l
//   core(1,-1) = -u           H_{1,-1} = 1 + sum c_k ct_k + sum Ct_{k,l} pi_{k+1} d_pi_{l+1}
//   core(2,+1) = -u^{-1}(q/t)^{1/2} H_{2,+1}
//   core(1,+1) =  u^{-1}          H_{1,+1}

#include "supermac/superpoly.hpp"

namespace supermac {

enum class Presentation { closed_bilinear, anticommutator, vertex_integral };

// u-free core operators; `pres` applies to the positive pair.
GradedOperator ham_core(int i, int sign, int max_in2,
                        Presentation pres = Presentation::closed_bilinear);
// Predicted core eigenvalue on M_Lambda (Prop. 2.1 box sums).
Scalar ham_core_eigenvalue(int i, int sign, const SuperPartition& lam);

// Full Hamiltonians with their u-prefactors restored.
GradedOperator hamiltonian(int i, int sign, int max_in2,
                           Presentation pres = Presentation::closed_bilinear);
Scalar eigenvalue(int i, int sign, const SuperPartition& lam);

// D_2^B = sum_{k>=1} c_k ct_k / (1-t), the Ruijsenaars-Macdonald core
// on the bosonic sector.
GradedOperator rm_bosonic(int max_in2);

// The joint eigenvector of the quartet with label Lambda, normalized so the
// dominant monomial prod x_i^{floor(Lambda_i)} prod_{odd i} theta_i has
// coefficient 1.  Results are cached.
const SuperPolynomial& macdonald(const SuperPartition& lam);

// Expands f in the Macdonald basis of its (homogeneous) level.
std::vector<std::pair<SuperPartition, Scalar>> macdonald_expand(const SuperPolynomial& f);

}  // namespace supermac
