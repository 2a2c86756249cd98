#ifndef RECURV_TENSOR_OPS_HPP
#define RECURV_TENSOR_OPS_HPP

#include "recurv/tensor.hpp"

namespace recurv {

// Kulkarni-Nomizu product of symmetric (0,2) tensors:
// (A^E)_{hijk} = A_{hk}E_{ij} + A_{ij}E_{hk} - A_{hj}E_{ik} - A_{ik}E_{hj}.
Tensor kulkarni_nomizu(const Tensor& A, const Tensor& E);

// Wedge of a symmetric (0,2) tensor with a (0,k) tensor, k >= 2; the extra
// slots of T trail. Reduces to kulkarni_nomizu for k = 2 symmetric T.
Tensor wedge_2_with_k(const Tensor& A, const Tensor& T);

// Exterior product of 1-forms: (P^Q)_{ij} = (P_i Q_j - P_j Q_i)/2.
Tensor exterior_product(const Tensor& P, const Tensor& Q);

// Exterior derivative of a 1-form: (dP)_{ij} = d_i P_j - d_j P_i.
Tensor exterior_derivative(const Tensor& P);

struct SecondLevelData {
    Tensor squared;          // A2_{ij} = A_{ik} g^{kl} A_{lj}
    RationalFunction trace;  // g^{ij} A_{ij}
    RationalFunction trace2; // g^{ij} A2_{ij}
};

// Second level of a symmetric (0,2) tensor w.r.t. a metric inverse.
SecondLevelData second_level(const Tensor& A, const Tensor& g_inv);

// Curvature action of a (0,4) tensor D on a (0,k) tensor T:
// (D.T)_{i1..ik,xy} = -sum_m g^{pq} D_{x y i_m q} T_{i1..p..ik}.
Tensor curvature_action(const Tensor& D, const Tensor& T, const Tensor& g_inv);

// Tachibana action: Q(A,T)_{i1..ik,xy} = sum_m [A_{x i_m} T_{..y..} - A_{y i_m} T_{..x..}].
Tensor q_action(const Tensor& A, const Tensor& T);

// (0,k+2) array of the X ^_T Y operator, (x,y) slots appended:
// W_{i1..ik,xy} = T(y,i1,i3..ik) g(x,i2) - T(x,i1,i3..ik) g(y,i2).
Tensor wedge_vector_with_T(const Tensor& T, const Tensor& g);

// Metric contraction over two distinct slots (0-based).
Tensor contract(const Tensor& T, int slot_a, int slot_b, const Tensor& g_inv);

// Tensor product of a 1-form with a (0,k) tensor, 1-form slot appended last
// to match the covariant-derivative slot convention.
Tensor outer_last(const Tensor& T, const Tensor& omega);

} // namespace recurv

#endif
