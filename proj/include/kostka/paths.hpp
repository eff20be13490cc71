#pragma once

#include "kostka/qpoly.hpp"
#include "kostka/shapes.hpp"
#include "kostka/tableaux.hpp"

#include <compare>
#include <functional>
#include <set>
#include <vector>

namespace kostka {

/// Inhomogeneous lattice path p_L (x) ... (x) p_1 of rectangular steps over
/// the plain alphabet {1..n}. steps[k] is p_{k+1}, so steps.front() = p_1.
struct Path {
  int n = 2;
  std::vector<Tableau> steps;
  int length() const { return static_cast<int>(steps.size()); }
  RectList content_rects() const;
  auto operator<=>(const Path&) const = default;
};

struct PathSpace {
  int n = 2;
  std::vector<int> lambda;  // content vector, length n
  RectList mu;
};

/// All paths of the space, deterministic order: fillings lexicographic,
/// p_1 varying fastest. Empty when |lambda| != |mu| or lambda has a
/// negative component.
std::vector<Path> enumerate_paths(const PathSpace& space);

/// h(p (x) p') = |nu+nu'| - |shape(p.p') cap (nu+nu')| with p the left step.
int local_energy(const Tableau& p, const Tableau& pprime);

/// h(P) = sum_i i * h(p_{i+1} (x) p_i).
long long energy_h(const Path& p);

/// The isomorphism on one bond: given (p, p') = (p_{i+1}, p_i), the unique
/// pair (q', q) with swapped shapes and q'.q = p.p'. Results are memoized.
std::pair<Tableau, Tableau> sigma(const Tableau& p, const Tableau& pprime, int n);

/// sigma_i acting on the bond (p_i, p_{i+1}), i in 1..L-1.
Path sigma_i(const Path& p, int i);

/// Orbit of P under all sigma_i (BFS closure). Throws defect_error when the
/// cap is exceeded (override with KOSTKA_MAX_ORBIT).
std::set<Path> orbit(const Path& p);
long long orbit_cap();

/// H(P): mean of h over the orbit, asserted integral.
long long weight_H(const Path& p);

/// S_{lambda mu}(q) = sum over paths of q^{H(P)}.
QPoly supernomial(const PathSpace& space);

/// The word map omega : P_{lambda mu} -> W_mu.
Word omega_map(const Path& p);

/// Inverse on standard-content words: builds the path in P_mu with
/// omega(path) = w; mu is recovered from the letters of w.
/// Throws std::invalid_argument when w is not in W.
Path omega_inverse(const Word& w, int n);

/// Classically restricted subset: shape(omega(P)) == lambda.
std::vector<Path> restricted_paths(const PathSpace& space);

/// Ktilde_{lambda mu}(q) = sum over restricted paths of q^{H(P)}.
QPoly cocharge_kostka(const PathSpace& space);
/// K_{lambda mu}(q) = q^{||mu||} Ktilde_{lambda mu}(1/q).
QPoly gen_kostka(const PathSpace& space);

/// Omega on a single plain step: rotate 180 degrees, dualize letters.
Tableau omega_step(const Tableau& t, int n);
/// Omega_p(P) = Omega(p_1) (x) ... (x) Omega(p_L).
Path omega_path(const Path& p);

/// C_p: remove the largest entry from the top-right of its step, move the
/// hole to the bottom-left by inverse sliding, insert 0, then shift entries
/// back to 1..|mu|. Input must be standard (entries 1..|mu| each once).
Path cp_cyclage(const Path& p);
/// Inverse: remove the 1 from the bottom-left of its step, slide the hole to
/// the top-right, insert |mu|+1, shift back down.
Path cp_inverse(const Path& p);

/// True when some orbit element carries the maximal entry in its first step
/// (the condition zeroing the cyclage Z), resp. the entry 1 for the
/// cocyclage direction.
bool orbit_has_max_in_first_step(const Path& p);
bool orbit_has_min_in_first_step(const Path& p);

}  // namespace kostka
