#pragma once

#include "kostka/paths.hpp"
#include "kostka/qpoly.hpp"
#include "kostka/shapes.hpp"

#include <map>
#include <string>
#include <vector>

namespace kostka {

struct IdentityReport {
  std::string identity;
  std::string instance;
  QPoly lhs, rhs;
  bool pass = false;
  double elapsed_ms = 0.0;
};

/// Shared memo for path-generated polynomials, used by the sweep drivers.
class SupernomialTable {
 public:
  /// S(L, lambda); zero for negative components or weight mismatch.
  const QPoly& s(const LMatrix& L, const std::vector<int>& lambda);
  /// Ktilde(L, lambda) and K(L, lambda); lambda must be a partition.
  const QPoly& ktilde(const LMatrix& L, const Partition& lambda);
  QPoly k(const LMatrix& L, const Partition& lambda);
  int n() const { return n_; }
  explicit SupernomialTable(int n) : n_(n) {}

 private:
  int n_;
  // keys are canonical rectangle lists so differently padded matrices share
  std::map<std::pair<RectList, std::vector<int>>, QPoly> s_;
  std::map<std::pair<RectList, Partition>, QPoly> kt_;
};

/// Theorem 6.2 route: S_{lambda mu}(q) = sum_eta K_{eta lambda} Ktilde_{eta mu}(q).
IdentityReport check_sas_sb(const std::vector<int>& lambda, const RectList& mu, int n,
                            SupernomialTable* table = nullptr);

/// Inverse relation: Ktilde_{lambda mu}(q) as the alternating S-sum over S_n.
IdentityReport check_sbas_s(const Partition& lambda, const RectList& mu, int n,
                            SupernomialTable* table = nullptr);

/// Duality K_{lambda mu}(q) = q^{||mu||} K_{lambda^T mu*}(1/q).
IdentityReport check_duality(const Partition& lambda, const RectList& mu, int n,
                             SupernomialTable* table = nullptr);

/// Recurrences for S and (when lambda is a partition) for K at (i, a).
std::vector<IdentityReport> check_recurrences(const LMatrix& L, const std::vector<int>& lambda,
                                              int i, int a, SupernomialTable* table = nullptr);

/// Full-height column removal: S(L+e_i^{(n)}, lambda+(i^n)) = S(L, lambda)
/// and the q-shifted statement for K.
std::vector<IdentityReport> check_column_removal(const LMatrix& L, const std::vector<int>& lambda,
                                                 int i, SupernomialTable* table = nullptr);

/// The closed-form A1 supernomial [L; a]. a2 = 2a (integer encoding of the
/// half-integer offset). Zero outside the admissible range.
QPoly a1_supernomial(const std::vector<int>& L, long long a2);

/// Same sum with modified q-binomials so that L may have negative entries.
QPoly a1_supernomial_modified(const std::vector<int>& L, long long a2);

/// Closed form against the path-based supernomial for all admissible a.
IdentityReport check_a1_closed_form(const std::vector<int>& L);

/// The family recurrence S1(L+e_A+e_B) = S1(L+e_{A-1}+e_{B+1})
/// + q^{l_A+A} S1(L+e_{B-A}), preconditions as in the source relation.
IdentityReport check_a1_family_recurrence(const std::vector<int>& L, int A, int B, long long a2);

/// The two recurrences of the X-function statement, evaluated on the
/// modified-q-binomial closed form (L ranging over all of Z^N).
IdentityReport check_x_recurrence(const std::vector<int>& L, int A, int B, long long a2);

/// Bounded Rogers--Ramanujan identity (ABF fusion hierarchy), exact in
/// fractional powers of q.
IdentityReport check_rr_identity(int p, int N, int a, int b, const std::vector<int>& L);

/// Conjectured higher-rank identity; reported, never asserted.
IdentityReport check_anrr_conjecture(int n, int p, int N, const LMatrix& L);

}  // namespace kostka
