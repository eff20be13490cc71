#include "kostka/lrtab.hpp"

#include "kostka/paths.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace kostka {

std::vector<int> alphabet_heights(const RectList& mu) {
  std::vector<int> h;
  h.reserve(mu.size());
  for (const Rect& r : mu) h.push_back(r.height);
  return h;
}

namespace {

bool balanced_yamanouchi_sub(const Word& w, int sub, int height) {
  std::vector<int> cnt(height + 2, 0);
  for (const Letter& x : w)
    if (x.step == sub) {
      if (x.row < 1 || x.row > height) return false;
      ++cnt[x.row];
    }
  for (int j = 2; j <= height; ++j)
    if (cnt[j] != cnt[1]) return false;
  std::vector<int> suf(height + 2, 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->step != sub) continue;
    ++suf[it->row];
    if (it->row > 1 && suf[it->row] > suf[it->row - 1]) return false;
  }
  return true;
}

}  // namespace

bool is_lr_word(const Word& w, const std::vector<int>& heights) {
  int L = static_cast<int>(heights.size());
  for (const Letter& x : w)
    if (x.step < 1 || x.step > L || x.row < 1 || x.row > heights[x.step - 1]) return false;
  for (int i = 1; i <= L; ++i)
    if (!balanced_yamanouchi_sub(w, i, heights[i - 1])) return false;
  return true;
}

Word t_min_word(const RectList& mu) {
  Word w;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (int c = 0; c < mu[i].width; ++c)
      for (int j = mu[i].height; j >= 1; --j)
        w.push_back(Letter{static_cast<int>(i) + 1, j});
  return w;
}

Word t_max_word(const RectList& mu) {
  Word w;
  for (std::size_t i = mu.size(); i-- > 0;)
    for (int c = 0; c < mu[i].width; ++c)
      for (int j = mu[i].height; j >= 1; --j)
        w.push_back(Letter{static_cast<int>(i) + 1, j});
  return w;
}

Tableau t_min(const RectList& mu) { return tableau_of_word(t_min_word(mu)); }
Tableau t_max(const RectList& mu) { return tableau_of_word(t_max_word(mu)); }

std::vector<Tableau> enumerate_lrt(const Partition& lambda, const RectList& mu) {
  std::vector<Tableau> out;
  if (lambda.size() != total_boxes(mu)) return out;
  std::vector<Letter> letters;
  std::map<Letter, int> content;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (int j = 1; j <= mu[i].height; ++j) {
      Letter x{static_cast<int>(i) + 1, j};
      letters.push_back(x);
      content[x] = mu[i].width;
    }
  std::vector<int> hs = alphabet_heights(mu);
  for (Tableau& t : enumerate_ssyt(lambda, letters, &content)) {
    if (t.boxes() != lambda.size()) continue;
    if (t.content() != content) continue;
    if (is_lr_word(t.row_word(), hs)) out.push_back(std::move(t));
  }
  return out;
}

namespace {

// Bracket matching on the (level, level-1) subword: returns the positions of
// the non-inverted letters (unmatched x's come first, then unmatched y's).
void non_inverted(const Word& w, int sub, int hi_level,
                  std::vector<std::size_t>& xs, std::vector<std::size_t>& ys) {
  std::vector<std::size_t> stack;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].step != sub) continue;
    if (w[p].row == hi_level) {
      stack.push_back(p);
    } else if (w[p].row == hi_level - 1) {
      if (!stack.empty())
        stack.pop_back();
      else
        xs.push_back(p);
    }
  }
  ys = stack;
}

}  // namespace

Word cyclage_chain(const Word& w, const std::vector<int>& heights) {
  if (w.empty()) throw std::invalid_argument("empty word");
  Letter first = w.front();
  int i = first.step;
  int a = heights[i - 1];
  if (first.row != a) throw std::invalid_argument("first letter is not top-level");
  Word cur(w.begin() + 1, w.end());
  cur.push_back(first);
  for (int lev = a; lev >= 2; --lev) {
    std::vector<std::size_t> xs, ys;
    non_inverted(cur, i, lev, xs, ys);
    if (xs.size() != 1 || ys.size() != 1)
      throw defect_error("cyclage chain: non-inverted letters not unique");
    std::swap(cur[xs[0]], cur[ys[0]]);
  }
  return cur;
}

Word cocyclage_chain(const Word& w, const std::vector<int>& heights) {
  if (w.empty()) throw std::invalid_argument("empty word");
  Letter last = w.back();
  int i = last.step;
  if (last.row != 1) throw std::invalid_argument("last letter is not bottom-level");
  int a = heights[i - 1];
  Word cur = w;
  for (int lev = 1; lev < a; ++lev) {
    // partner of the trailing x_i^{(lev)} among the (lev+1, lev) subword
    std::vector<std::size_t> stack;
    std::size_t partner = cur.size();
    for (std::size_t p = 0; p < cur.size(); ++p) {
      if (cur[p].step != i) continue;
      if (cur[p].row == lev + 1) {
        stack.push_back(p);
      } else if (cur[p].row == lev) {
        if (p + 1 == cur.size()) {
          if (stack.empty()) throw defect_error("cocyclage chain: no inverted partner");
          partner = stack.back();
        }
        if (!stack.empty()) stack.pop_back();
      }
    }
    if (partner == cur.size()) throw defect_error("cocyclage chain: trailing letter unmatched");
    std::swap(cur[partner], cur.back());
  }
  Word out;
  out.push_back(cur.back());
  out.insert(out.end(), cur.begin(), cur.end() - 1);
  return out;
}

Tableau initial_cyclage(const Tableau& t, const RectList& mu) {
  return tableau_of_word(cyclage_chain(t.row_word(), alphabet_heights(mu)));
}

DropResult drop_d(const Tableau& t, const RectList& mu) {
  std::vector<int> hs = alphabet_heights(mu);
  DropResult res;
  res.reduced = t;
  for (;;) {
    int h = res.reduced.height();
    if (h == 0) break;
    std::set<int> subs;
    for (const auto& row : res.reduced.rows())
      for (const Letter& x : row) subs.insert(x.step);
    int hit = 0;
    for (int i : subs) {
      if (hs[i - 1] != h) continue;
      bool ok = true;
      for (int j = 1; j <= h && ok; ++j) {
        const auto& row = res.reduced.rows()[j - 1];
        ok = std::find(row.begin(), row.end(), Letter{i, j}) != row.end();
      }
      if (ok) { hit = i; break; }
    }
    if (hit == 0) break;
    std::vector<std::vector<Letter>> rows;
    for (const auto& row : res.reduced.rows()) {
      std::vector<Letter> nr;
      for (const Letter& x : row)
        if (x.step != hit) nr.push_back(x);
      if (!nr.empty()) rows.push_back(std::move(nr));
    }
    res.reduced = Tableau(std::move(rows));
    if (!res.reduced.empty() && !res.reduced.valid())
      throw defect_error("D produced an invalid tableau");
    res.dropped.push_back(hit);
  }
  return res;
}

namespace {

// One box with letter x into row row_idx (0-based), leftmost valid position.
Tableau insert_one(const Tableau& t, Letter x, int row_idx) {
  std::vector<std::vector<Letter>> rows = t.rows();
  while (static_cast<int>(rows.size()) <= row_idx) rows.emplace_back();
  const auto& r = rows[row_idx];
  for (std::size_t pos = 0; pos <= r.size(); ++pos) {
    std::vector<Letter> cand(r);
    cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(pos), x);
    bool weak = true;
    for (std::size_t c = 0; c + 1 < cand.size(); ++c)
      if (cand[c + 1] < cand[c]) { weak = false; break; }
    if (!weak) continue;
    std::vector<std::vector<Letter>> nr = rows;
    nr[row_idx] = cand;
    while (!nr.empty() && nr.back().empty()) nr.pop_back();
    bool holes = false;
    for (const auto& row : nr)
      if (row.empty()) { holes = true; break; }
    if (holes) continue;
    Tableau cand_t((std::vector<std::vector<Letter>>(nr)));
    if (cand_t.valid()) return cand_t;
  }
  throw defect_error("U: no valid insertion position");
}

}  // namespace

Tableau insert_u(const Tableau& t, const std::vector<int>& dropped, const RectList& mu) {
  Tableau cur = t;
  for (auto it = dropped.rbegin(); it != dropped.rend(); ++it) {
    const Rect& r = mu[*it - 1];
    for (int j = 1; j <= r.height; ++j)
      for (int c = 0; c < r.width; ++c) cur = insert_one(cur, Letter{*it, j}, j - 1);
  }
  return cur;
}

Tableau modified_initial_cyclage(const Tableau& t, const RectList& mu) {
  DropResult d = drop_d(t, mu);
  if (d.reduced.empty()) throw defect_error("Cbar on a tableau that drops to nothing");
  Word w1 = cyclage_chain(d.reduced.row_word(), alphabet_heights(mu));
  return insert_u(tableau_of_word(w1), d.dropped, mu);
}

int cocharge(const Tableau& t, const RectList& mu) {
  Tableau tmin = t_min(mu);
  Tableau cur = t;
  int co = 0;
  int cap = static_cast<int>(mu_norm(mu)) + 1;
  while (cur != tmin) {
    cur = modified_initial_cyclage(cur, mu);
    if (++co > cap) throw defect_error("cocharge exceeded ||mu||+1 iterations");
  }
  return co;
}

int charge(const Tableau& t, const RectList& mu) {
  return static_cast<int>(mu_norm(mu)) - cocharge(t, mu);
}

namespace {

struct ReducedProblem {
  Word word;               // relabeled to subscripts 1..k
  RectList mu;             // relabeled content
  std::vector<int> unmap;  // position -> original subscript
};

ReducedProblem relabel(const Tableau& reduced, const RectList& mu) {
  std::set<int> subs;
  for (const auto& row : reduced.rows())
    for (const Letter& x : row) subs.insert(x.step);
  ReducedProblem rp;
  std::map<int, int> remap;
  for (int s : subs) {
    remap[s] = static_cast<int>(rp.unmap.size()) + 1;
    rp.unmap.push_back(s);
    rp.mu.push_back(mu[s - 1]);
  }
  for (const Letter& x : reduced.row_word()) rp.word.push_back(Letter{remap[x.step], x.row});
  return rp;
}

// Z on a word of the (possibly reduced) problem: nullopt when the orbit
// condition fails. The caller guarantees the first letter is top-level.
std::optional<Word> z_on_word(const Word& w, const RectList& mu) {
  Path p = omega_inverse(w, static_cast<int>(w.size()));
  if (orbit_has_max_in_first_step(p)) return std::nullopt;
  return cyclage_chain(w, alphabet_heights(mu));
}

std::optional<Word> z_inv_on_word(const Word& w, const RectList& mu) {
  Path p = omega_inverse(w, static_cast<int>(w.size()));
  if (orbit_has_min_in_first_step(p)) return std::nullopt;
  return cocyclage_chain(w, alphabet_heights(mu));
}

// All lambda -> Z_lambda result on a given word's Knuth class.
std::map<Partition, Tableau> z_targets(const Word& word, const RectList& mu) {
  std::vector<int> hs = alphabet_heights(mu);
  std::map<Partition, std::vector<Word>> by_shape;
  for (const Word& w : knuth_class(word)) {
    if (w.front().row != hs[w.front().step - 1]) continue;
    Word u(w.begin() + 1, w.end());
    by_shape[tableau_of_word(u).shape()].push_back(w);
  }
  std::map<Partition, Tableau> out;
  for (const auto& [lam, words] : by_shape) {
    std::optional<Tableau> result;
    for (const Word& w : words) {
      auto z = z_on_word(w, mu);
      if (!z) continue;
      Tableau zt = tableau_of_word(*z);
      if (result && !(*result == zt)) throw defect_error("Z_lambda is ambiguous");
      result = zt;
    }
    if (result) out.emplace(lam, *result);
  }
  return out;
}

Word unrelabel_word(const Word& w, const std::vector<int>& unmap) {
  Word out;
  out.reserve(w.size());
  for (const Letter& x : w) out.push_back(Letter{unmap[x.step - 1], x.row});
  return out;
}

}  // namespace

std::optional<Tableau> lambda_cyclage(const Tableau& t, const Partition& lambda,
                                      const RectList& mu) {
  auto targets = z_targets(t.row_word(), mu);
  auto it = targets.find(lambda);
  if (it == targets.end()) return std::nullopt;
  return it->second;
}

std::optional<Tableau> lambda_cocyclage(const Tableau& t, const Partition& lambda,
                                        const RectList& mu) {
  std::vector<int> hs = alphabet_heights(mu);
  std::optional<Tableau> result;
  for (const Word& w : knuth_class(t.row_word())) {
    if (w.back().row != 1) continue;
    Word u(w.begin(), w.end() - 1);
    if (tableau_of_word(u).shape() != lambda) continue;
    auto z = z_inv_on_word(w, mu);
    if (!z) continue;
    Tableau zt = tableau_of_word(*z);
    if (result && !(*result == zt)) throw defect_error("Z_lambda^{-1} is ambiguous");
    result = zt;
  }
  return result;
}

std::map<Partition, Tableau> modified_lambda_cyclage_targets(const Tableau& t,
                                                             const RectList& mu) {
  DropResult d = drop_d(t, mu);
  std::map<Partition, Tableau> out;
  if (d.reduced.empty()) return out;
  ReducedProblem rp = relabel(d.reduced, mu);
  for (const auto& [lam, zt] : z_targets(rp.word, rp.mu)) {
    Tableau full = insert_u(tableau_of_word(unrelabel_word(zt.row_word(), rp.unmap)),
                            d.dropped, mu);
    out.emplace(lam, full);
  }
  return out;
}

std::optional<Tableau> modified_lambda_cyclage(const Tableau& t, const Partition& lambda,
                                               const RectList& mu) {
  auto targets = modified_lambda_cyclage_targets(t, mu);
  auto it = targets.find(lambda);
  if (it == targets.end()) return std::nullopt;
  return it->second;
}

std::optional<Tableau> modified_lambda_cocyclage(const Tableau& t, const Partition& lambda,
                                                 const RectList& mu) {
  // Zbar'_lambda = U' o Z^{-1}_lambda o D' with D' = Lambda D Lambda and
  // U' = Lambda U Lambda; the inner cocyclage is the direct one, so the
  // graph duality (lem_TT') stays a two-route comparison.
  Tableau lt = lambda_involution(t);
  RectList ms = mu_star(mu);
  DropResult d = drop_d(lt, ms);
  if (d.reduced.empty()) return std::nullopt;
  ReducedProblem rp = relabel(d.reduced, ms);
  Tableau dprime = lambda_involution(tableau_of_word(rp.word));
  auto z = lambda_cocyclage(dprime, lambda, mu_star(rp.mu));
  if (!z) return std::nullopt;
  Tableau zl = lambda_involution(*z);
  Tableau full = insert_u(tableau_of_word(unrelabel_word(zl.row_word(), rp.unmap)),
                          d.dropped, ms);
  return lambda_involution(full);
}

Tableau lambda_involution(const Tableau& t) {
  Word w = t.row_word();
  std::map<Letter, int> seen;
  Word wp;
  wp.reserve(w.size());
  for (const Letter& x : w) wp.push_back(Letter{x.step, ++seen[x]});
  std::reverse(wp.begin(), wp.end());
  return tableau_of_word(wp);
}

namespace {

// rightmost occurrence = last in reading order (occurrences of a fixed
// letter ascend in column along the word)
std::pair<Tableau, RectList> phi_letter_change(const Tableau& t, const RectList& mu,
                                               bool insert_slot) {
  int a1 = mu[0].height;
  Word w = t.row_word();
  for (int j = 1; j <= a1; ++j) {
    std::size_t pos = w.size();
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p] == Letter{1, j}) pos = p;
    if (pos == w.size()) throw defect_error("phi: missing letter x_1^{(j)}");
    w[pos] = Letter{0, j};  // marked for subscript 2
  }
  RectList nu;
  Word out;
  out.reserve(w.size());
  if (insert_slot) {
    nu.push_back(Rect{mu[0].width - 1, a1});
    nu.push_back(Rect{1, a1});
    nu.insert(nu.end(), mu.begin() + 1, mu.end());
    for (const Letter& x : w)
      out.push_back(x.step == 0 ? Letter{2, x.row}
                                : (x.step >= 2 ? Letter{x.step + 1, x.row} : x));
  } else {
    nu = mu;
    nu[0].width -= 1;
    nu[1].width += 1;
    for (const Letter& x : w) out.push_back(x.step == 0 ? Letter{2, x.row} : x);
  }
  Tableau r = tableau_of_word(out);
  if (!(r.row_word() == out) || !is_lr_word(out, alphabet_heights(nu)))
    throw defect_error("phi left the LR tableau set");
  return {r, nu};
}

}  // namespace

std::pair<Tableau, RectList> phi_embed(const Tableau& t, const RectList& mu) {
  if (mu.size() < 2 || mu[0].height != mu[1].height || mu[0].width <= mu[1].width)
    throw std::invalid_argument("phi needs height(mu1)=height(mu2), width(mu1)>width(mu2)");
  return phi_letter_change(t, mu, false);
}

std::pair<Tableau, RectList> phi_prime(const Tableau& t, const RectList& mu) {
  if (mu.empty() || mu[0].width < 2) throw std::invalid_argument("phi' needs width(mu1) >= 2");
  return phi_letter_change(t, mu, true);
}

std::pair<Tableau, RectList> g_move(const Tableau& t, const RectList& mu, int i) {
  Path p = omega_inverse(t.row_word(), static_cast<int>(total_boxes(mu)));
  Path q = sigma_i(p, i);
  Word w = omega_map(q);
  RectList nu = mu;
  std::swap(nu[i - 1], nu[i]);
  Tableau r = tableau_of_word(w);
  if (!(r.row_word() == w)) throw defect_error("g-move left row representation");
  return {r, nu};
}

std::pair<Tableau, RectList> standardize_theta(const Tableau& t, const RectList& mu) {
  Tableau cur = t;
  RectList nu = mu;
  for (;;) {
    int wide = -1;
    for (std::size_t k = 0; k < nu.size(); ++k)
      if (nu[k].width > 1) { wide = static_cast<int>(k); break; }
    if (wide < 0) break;
    for (int b = wide; b >= 1; --b) std::tie(cur, nu) = g_move(cur, nu, b);
    std::tie(cur, nu) = phi_prime(cur, nu);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < nu.size(); ++k)
      if (nu[k].height < nu[k + 1].height) {
        std::tie(cur, nu) = g_move(cur, nu, static_cast<int>(k) + 1);
        changed = true;
      }
  }
  return {cur, nu};
}

CyclageGraph build_cyclage_graph(const RectList& mu) {
  CyclageGraph g;
  g.mu = mu;
  long long tot = total_boxes(mu);
  std::function<void(long long, int, std::vector<int>&)> parts =
      [&](long long rem, int maxp, std::vector<int>& cur) {
        if (rem == 0) {
          for (Tableau& t : enumerate_lrt(Partition(cur), mu))
            g.vertices.push_back(std::move(t));
          return;
        }
        for (int p = static_cast<int>(std::min<long long>(rem, maxp)); p >= 1; --p) {
          cur.push_back(p);
          parts(rem - p, p, cur);
          cur.pop_back();
        }
      };
  std::vector<int> cur;
  parts(tot, static_cast<int>(tot), cur);
  std::sort(g.vertices.begin(), g.vertices.end());

  std::map<Tableau, int> index;
  for (std::size_t k = 0; k < g.vertices.size(); ++k)
    index[g.vertices[k]] = static_cast<int>(k);
  Tableau tmin = t_min(mu);
  for (const Tableau& t : g.vertices) g.ranks.push_back(cocharge(t, mu));

  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    const Tableau& t = g.vertices[k];
    if (t == tmin) continue;
    Tableau cbar = modified_initial_cyclage(t, mu);
    std::map<int, CyclageEdge> by_target;
    for (const auto& [lam, z] : modified_lambda_cyclage_targets(t, mu)) {
      auto it = index.find(z);
      if (it == index.end()) throw defect_error("cyclage target outside vertex set");
      auto& e = by_target[it->second];
      e.from = static_cast<int>(k);
      e.to = it->second;
      e.labels.push_back(lam);
      e.initial = e.initial || z == cbar;
      if (g.ranks[k] - g.ranks[it->second] != 1)
        throw defect_error("cyclage edge does not drop the rank by one");
    }
    for (auto& [to, e] : by_target) g.edges.push_back(std::move(e));
  }
  return g;
}

std::string word_to_string(const Word& w, const std::vector<int>& heights) {
  std::ostringstream out;
  bool first = true;
  for (const Letter& x : w) {
    if (!first) out << " ";
    first = false;
    out << x.step;
    if (!(x.row == 1 && heights[x.step - 1] == 1)) out << "^" << x.row;
  }
  return out.str();
}

std::string graph_to_dot(const CyclageGraph& g) {
  std::vector<int> hs = alphabet_heights(g.mu);
  std::ostringstream out;
  out << "digraph cyclage {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    out << "  v" << k << " [label=\"" << word_to_string(g.vertices[k].row_word(), hs)
        << "\\nco=" << g.ranks[k] << "\"];\n";
  }
  for (const CyclageEdge& e : g.edges) {
    out << "  v" << e.from << " -> v" << e.to;
    if (e.initial) {
      out << " [style=solid]";
    } else {
      out << " [style=dashed, label=\"";
      for (std::size_t i = 0; i < e.labels.size(); ++i) {
        if (i) out << ";";
        out << "(";
        const auto& ps = e.labels[i].parts();
        for (std::size_t j = 0; j < ps.size(); ++j) {
          if (j) out << ",";
          out << ps[j];
        }
        out << ")";
      }
      out << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace kostka
