#pragma once

#include "kostka/qpoly.hpp"
#include "kostka/shapes.hpp"

namespace kostka {

/// Fermionic configuration sum F(L, lambda): sum over sequences of
/// partitions alpha^{(1)}, ..., alpha^{(n-1)} with
/// |alpha^{(a)}| = sum_j j*lbar_j^{(a)} - (lambda_1+...+lambda_a) of
/// q^{C(alpha)} prod qbin(P_i^{(a)} + alpha_i^{(a)} - alpha_{i+1}^{(a)},
/// alpha_i^{(a)} - alpha_{i+1}^{(a)}). Zero when |lambda| != weight(L) or
/// some required size is negative.
QPoly fermionic_f(const LMatrix& L, const Partition& lambda);

/// Classical Kirillov--Reshetikhin sum with alpha^{(0)} = mu^T; equals the
/// Kostka polynomial K_{lambda mu}(q).
QPoly kr_kostka(const Partition& lambda, const Partition& mu);

/// Polynomial identity F(L,.) = q^{lbar_i^{(a)}-a} F(L + e_{i-1}^{(a)}
/// - 2e_i^{(a)} + e_{i+1}^{(a)}, .) + F(L + e_i^{(a-1)} - 2e_i^{(a)}
/// + e_i^{(a+1)}, .), checked exactly. Requires L_i^{(a)} >= 2, i < N, a < n.
bool fermionic_recurrence_check(const LMatrix& L, const Partition& lambda, int i, int a);

/// Hypothesis of the F = K theorem: L_i^{(a)} >= L_i^{(a+2)} for all a,i, or
/// L_i^{(a)} >= L_{i+2}^{(a)} for all a,i.
bool kf_theorem_hypothesis(const LMatrix& L);

}  // namespace kostka
