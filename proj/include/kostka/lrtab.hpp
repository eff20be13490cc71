#pragma once

#include "kostka/qpoly.hpp"
#include "kostka/shapes.hpp"
#include "kostka/tableaux.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kostka {

/// Heights a_i of the compound alphabet X^a, read off the content mu.
std::vector<int> alphabet_heights(const RectList& mu);

/// Membership in W: every i-subword balanced Yamanouchi for the given heights.
bool is_lr_word(const Word& w, const std::vector<int>& heights);

/// Word and tableau of the minimal LR tableau T_min(mu) (shape mu_1+...+mu_L).
Word t_min_word(const RectList& mu);
Word t_max_word(const RectList& mu);
Tableau t_min(const RectList& mu);
Tableau t_max(const RectList& mu);

/// All LR tableaux of shape lambda and content mu.
std::vector<Tableau> enumerate_lrt(const Partition& lambda, const RectList& mu);

/// The chain w -> w^{(a_i)} -> ... -> w^{(1)}: cycle the first letter
/// x_i^{(a_i)} to the back, then for each level swap the two non-inverted
/// letters of the (x_i^{(j)}, x_i^{(j-1)}) subword. Requires the first
/// letter to be top-level for its subscript.
Word cyclage_chain(const Word& w, const std::vector<int>& heights);

/// Inverse chain for the cocyclage: w must end in some x_i^{(1)}; exchange
/// the trailing letter with its inverted partner level by level, then cycle
/// the final x_i^{(a_i)} to the front.
Word cocyclage_chain(const Word& w, const std::vector<int>& heights);

/// Initial cyclage C(T) = [w^{(1)}].
Tableau initial_cyclage(const Tableau& t, const RectList& mu);

struct DropResult {
  Tableau reduced;           // original subscripts kept
  std::vector<int> dropped;  // subscripts in drop order
};

/// D: repeatedly drop every box of a subscript i whose letters x_i^{(j)}
/// meet row j for all rows j of the current tableau.
DropResult drop_d(const Tableau& t, const RectList& mu);

/// U: reinsert the recorded subscripts (reverse drop order), each x_i^{(j)}
/// into row j at the leftmost position keeping the tableau valid.
Tableau insert_u(const Tableau& t, const std::vector<int>& dropped, const RectList& mu);

/// Cbar = U o C o D.
Tableau modified_initial_cyclage(const Tableau& t, const RectList& mu);

/// Iteration count of Cbar down to T_min; capped at ||mu||+1.
int cocharge(const Tableau& t, const RectList& mu);
int charge(const Tableau& t, const RectList& mu);

/// Z_lambda(T): a word w = x_i^{(a_i)} u in the Knuth class of w_T with
/// shape(u) = lambda, subject to the orbit condition; all qualifying words
/// must give the same tableau. nullopt encodes the zero result.
std::optional<Tableau> lambda_cyclage(const Tableau& t, const Partition& lambda,
                                      const RectList& mu);
std::optional<Tableau> lambda_cocyclage(const Tableau& t, const Partition& lambda,
                                        const RectList& mu);

/// Zbar_lambda = U o Z_lambda o D; the label lambda refers to the reduced
/// tableau's word. Zbar'_lambda = U' o Z^{-1}_lambda o D' is realized through
/// the involution: D' = Lambda D Lambda, U' = Lambda U Lambda.
std::optional<Tableau> modified_lambda_cyclage(const Tableau& t, const Partition& lambda,
                                               const RectList& mu);
std::optional<Tableau> modified_lambda_cocyclage(const Tableau& t, const Partition& lambda,
                                                 const RectList& mu);

/// All lambda -> Zbar_lambda(T) with nonzero value.
std::map<Partition, Tableau> modified_lambda_cyclage_targets(const Tableau& t,
                                                             const RectList& mu);

/// The involution Lambda: LRT(lambda, mu) -> LRT(lambda^T, mu*): the kth
/// occurrence (from the left) of x_i^{(j)} becomes x_i^{(k)}, word reversed.
Tableau lambda_involution(const Tableau& t);

/// phi: change the rightmost x_1^{(j)} to x_2^{(j)} for all j <= a_1.
/// Requires height(mu_1) == height(mu_2) and width(mu_1) > width(mu_2).
std::pair<Tableau, RectList> phi_embed(const Tableau& t, const RectList& mu);

/// phi': same letter change against an empty second slot; splits one column
/// off mu_1, inserting a new component (1^{a_1}) at position 2.
std::pair<Tableau, RectList> phi_prime(const Tableau& t, const RectList& mu);

/// Conjugated isomorphism omega o sigma_i o omega^{-1}: transposes content
/// components i, i+1.
std::pair<Tableau, RectList> g_move(const Tableau& t, const RectList& mu, int i);

/// Standardization: iterate phi' and g-moves until every component is a
/// single column, then sort heights decreasingly (nu* a partition).
std::pair<Tableau, RectList> standardize_theta(const Tableau& t, const RectList& mu);

struct CyclageEdge {
  int from = 0, to = 0;
  std::vector<Partition> labels;
  bool initial = false;  // target equals Cbar(source)
};

struct CyclageGraph {
  RectList mu;
  std::vector<Tableau> vertices;
  std::vector<int> ranks;  // = cocharge
  std::vector<CyclageEdge> edges;
};

/// Full cyclage graph over all shapes: edges T -> Zbar_lambda(T), ranks
/// checked to drop by exactly one along every edge.
CyclageGraph build_cyclage_graph(const RectList& mu);

/// DOT rendering: solid edges for Cbar, dashed for other lambda-cyclages.
std::string graph_to_dot(const CyclageGraph& g);

std::string word_to_string(const Word& w, const std::vector<int>& heights);

}  // namespace kostka
