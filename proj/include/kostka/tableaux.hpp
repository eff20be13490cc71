#pragma once

#include "kostka/shapes.hpp"

#include <compare>
#include <map>
#include <vector>

namespace kostka {

/// Letter x_i^{(j)} of the compound alphabet X^a, ordered lexicographically
/// by (step, row). Plain alphabets use row = 1.
struct Letter {
  int step = 1;
  int row = 1;
  auto operator<=>(const Letter&) const = default;
};

inline Letter plain(int v) { return Letter{v, 1}; }

using Word = std::vector<Letter>;

/// Semistandard Young tableau, French convention: rows[0] is the bottom row,
/// rows weakly increase left to right, columns strictly increase upwards.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<Letter>> rows) : rows_(std::move(rows)) {}

  const std::vector<std::vector<Letter>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  int height() const { return static_cast<int>(rows_.size()); }
  Partition shape() const;
  std::map<Letter, int> content() const;
  long long boxes() const;
  bool valid() const;

  /// Schensted row insertion.
  void insert(Letter x);

  /// Reading word: top row first, each row left to right.
  Word row_word() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  std::vector<std::vector<Letter>> rows_;
};

/// Insertion tableau [w].
Tableau tableau_of_word(const Word& w);

/// S . T = [w_S w_T].
Tableau product(const Tableau& s, const Tableau& t);

/// Knuth equivalence, decided via insertion tableaux (Knuth's theorem).
bool knuth_equivalent(const Word& w, const Word& v);

/// L(w,k): largest total length of k disjoint increasing subsequences,
/// read off the shape of [w] (Greene's theorem).
long long longest_k_increasing(const Word& w, int k);

/// All rearrangements of w with the same insertion tableau. |w| <= 9.
std::vector<Word> knuth_class(const Word& w);

/// Anti-automorphism Omega: reverse the word and dualize each letter,
/// x_i^{(j)} -> x_{L+1-i}^{(a_i+1-j)}, for the alphabet with the given
/// heights a_1..a_L.
Word omega_involution(const Word& w, const std::vector<int>& heights);

/// All SSYT of the given shape over letters; if content is non-null the
/// multiplicity of each letter is fixed. Deterministic order (cells filled
/// bottom row first, letters ascending).
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<Letter>& letters,
                                    const std::map<Letter, int>* content = nullptr);

/// Cocharge of a plain-alphabet tableau: iterations of the initial cyclage
/// [x_i u] -> [u x_i] down to the one-row minimal tableau.
int classical_cocharge(const Tableau& t);
/// Charge c(T) = ||mu|| - co(T) where mu = content of t.
int classical_charge(const Tableau& t);

/// Kostka number K_{eta lambda}: SSYT of shape eta, content lambda, counted
/// by direct enumeration. lambda may be any composition.
long long kostka_number(const Partition& eta, const std::vector<int>& lambda);

}  // namespace kostka
