#include "kostka/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace kostka {

RectList Path::content_rects() const {
  RectList mu;
  mu.reserve(steps.size());
  for (const Tableau& s : steps) {
    Partition sh = s.shape();
    mu.push_back(Rect{sh.width(), sh.height()});
  }
  return mu;
}

namespace {

std::vector<Letter> plain_letters(int n) {
  std::vector<Letter> ls;
  for (int v = 1; v <= n; ++v) ls.push_back(plain(v));
  return ls;
}

void add_content(std::vector<int>& acc, const Tableau& t) {
  for (const auto& [x, m] : t.content()) acc[x.step - 1] += m;
}

}  // namespace

std::vector<Path> enumerate_paths(const PathSpace& space) {
  std::vector<Path> out;
  long long tot = 0;
  for (int v : space.lambda) {
    if (v < 0) return out;
    tot += v;
  }
  if (static_cast<int>(space.lambda.size()) != space.n)
    throw std::invalid_argument("lambda length != n");
  for (const Rect& r : space.mu)
    if (r.height > space.n) return out;
  if (tot != total_boxes(space.mu)) return out;

  auto letters = plain_letters(space.n);
  std::vector<std::vector<Tableau>> choices;  // choices[k] for step p_{k+1}
  for (const Rect& r : space.mu)
    choices.push_back(enumerate_ssyt(r.as_partition(), letters));

  int L = static_cast<int>(space.mu.size());
  std::vector<Tableau> cur(L);
  std::vector<int> used(space.n, 0);
  // p_1 varies fastest: recurse from p_L down to p_1
  std::function<void(int)> rec = [&](int k) {
    if (k < 0) {
      out.push_back(Path{space.n, cur});
      return;
    }
    for (const Tableau& t : choices[k]) {
      std::vector<int> nu = used;
      add_content(nu, t);
      bool ok = true;
      for (int v = 0; v < space.n; ++v)
        if (nu[v] > space.lambda[v]) { ok = false; break; }
      if (!ok) continue;
      cur[k] = t;
      std::swap(used, nu);
      rec(k - 1);
      std::swap(used, nu);
    }
  };
  rec(L - 1);
  return out;
}

int local_energy(const Tableau& p, const Tableau& pprime) {
  Partition tot = add(p.shape(), pprime.shape());
  Partition pr = product(p, pprime).shape();
  return static_cast<int>(tot.size() - intersect(pr, tot).size());
}

long long energy_h(const Path& p) {
  long long h = 0;
  for (int i = 1; i < p.length(); ++i)
    h += static_cast<long long>(i) * local_energy(p.steps[i], p.steps[i - 1]);
  return h;
}

std::pair<Tableau, Tableau> sigma(const Tableau& p, const Tableau& pprime, int n) {
  if (p.shape() == pprime.shape()) return {p, pprime};
  using Key = std::tuple<int, Tableau, Tableau>;
  thread_local std::map<Key, std::pair<Tableau, Tableau>> cache;
  Key key{n, p, pprime};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  Tableau target = product(p, pprime);
  std::map<Letter, int> want = target.content();
  auto letters = plain_letters(n);
  std::vector<std::pair<Tableau, Tableau>> found;
  for (const Tableau& qp : enumerate_ssyt(pprime.shape(), letters, &want)) {
    std::map<Letter, int> rem = want;
    bool ok = true;
    for (const auto& [x, m] : qp.content()) {
      rem[x] -= m;
      if (rem[x] < 0) { ok = false; break; }
    }
    if (!ok) continue;
    std::erase_if(rem, [](const auto& kv) { return kv.second == 0; });
    for (const Tableau& q : enumerate_ssyt(p.shape(), letters, &rem)) {
      if (q.content() != rem) continue;
      if (product(qp, q) == target) found.emplace_back(qp, q);
    }
  }
  if (found.size() != 1)
    throw defect_error("sigma: expected exactly one factorization, got " +
                       std::to_string(found.size()));
  cache.emplace(key, found.front());
  return found.front();
}

Path sigma_i(const Path& p, int i) {
  if (i < 1 || i >= p.length()) throw std::invalid_argument("sigma_i index out of range");
  auto [qp, q] = sigma(p.steps[i], p.steps[i - 1], p.n);
  Path r = p;
  r.steps[i] = qp;
  r.steps[i - 1] = q;
  return r;
}

long long orbit_cap() {
  if (const char* s = std::getenv("KOSTKA_MAX_ORBIT")) {
    long long v = std::atoll(s);
    if (v > 0) return v;
  }
  return 50000;
}

std::set<Path> orbit(const Path& p) {
  long long cap = orbit_cap();
  std::set<Path> seen{p};
  std::vector<Path> frontier{p};
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const Path& q : frontier) {
      for (int i = 1; i < q.length(); ++i) {
        Path r = sigma_i(q, i);
        if (seen.insert(r).second) {
          if (static_cast<long long>(seen.size()) > cap)
            throw defect_error("orbit cap exceeded (KOSTKA_MAX_ORBIT)");
          next.push_back(std::move(r));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

long long weight_H(const Path& p) {
  std::set<Path> o = orbit(p);
  long long s = 0;
  for (const Path& q : o) s += energy_h(q);
  auto m = static_cast<long long>(o.size());
  if (s % m != 0) throw defect_error("weight H is not an integer");
  return s / m;
}

QPoly supernomial(const PathSpace& space) {
  QPoly s;
  std::map<Path, long long> known;  // H is constant on orbits
  for (const Path& p : enumerate_paths(space)) {
    auto it = known.find(p);
    long long H;
    if (it != known.end()) {
      H = it->second;
    } else {
      std::set<Path> o = orbit(p);
      long long sum = 0;
      for (const Path& q : o) sum += energy_h(q);
      auto m = static_cast<long long>(o.size());
      if (sum % m != 0) throw defect_error("weight H is not an integer");
      H = sum / m;
      for (const Path& q : o) known.emplace(q, H);
    }
    s.add_term(Rational(H), 1);
  }
  return s;
}

Word omega_map(const Path& p) {
  // peel the rightmost maximal entry: smallest step index, then largest column
  std::vector<std::vector<std::vector<Letter>>> g;
  long long remaining = 0;
  for (const Tableau& s : p.steps) {
    g.emplace_back();
    for (const auto& r : s.rows()) {
      g.back().emplace_back(r);
      remaining += static_cast<long long>(r.size());
    }
  }
  const Letter hole{0, 0};
  Word w;
  w.reserve(remaining);
  while (remaining > 0) {
    int bj = -1, br = -1, bc = -1;
    Letter best = hole;
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t r = 0; r < g[j].size(); ++r)
        for (std::size_t c = 0; c < g[j][r].size(); ++c) {
          Letter v = g[j][r][c];
          if (v == hole) continue;
          bool better;
          if (best == hole) better = true;
          else if (v != best) better = best < v;
          else if (static_cast<int>(j) != bj) better = static_cast<int>(j) < bj;
          else better = static_cast<int>(c) > bc;
          if (better) { best = v; bj = static_cast<int>(j); br = static_cast<int>(r); bc = static_cast<int>(c); }
        }
    g[bj][br][bc] = hole;
    w.push_back(Letter{bj + 1, br + 1});
    --remaining;
  }
  return w;
}

namespace {

// content rectangles implied by a word in W (subscript -> Rect)
RectList rects_of_word(const Word& w, int* L_out) {
  std::map<int, std::map<int, int>> counts;  // step -> row -> multiplicity
  int L = 0;
  for (const Letter& x : w) {
    ++counts[x.step][x.row];
    L = std::max(L, x.step);
  }
  RectList mu(L, Rect{0, 0});
  for (auto& [i, rows] : counts) {
    int h = static_cast<int>(rows.size());
    int width = rows.begin()->second;
    for (auto& [j, m] : rows)
      if (m != width || j < 1 || j > h) throw std::invalid_argument("word not in W");
    mu[i - 1] = Rect{width, h};
  }
  for (const Rect& r : mu)
    if (r.width == 0) throw std::invalid_argument("word has a gap in its subscripts");
  if (L_out) *L_out = L;
  return mu;
}

bool balanced_yamanouchi(const Word& w, int sub, int height) {
  std::vector<int> cnt(height + 2, 0);
  int total = -1;
  // balanced: all rows occur equally often
  for (const Letter& x : w)
    if (x.step == sub) ++cnt[x.row];
  for (int j = 1; j <= height; ++j) {
    if (total < 0) total = cnt[j];
    if (cnt[j] != total) return false;
  }
  // Yamanouchi: every suffix has weakly decreasing row counts
  std::vector<int> suf(height + 2, 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->step != sub) continue;
    ++suf[it->row];
    if (it->row > 1 && suf[it->row] > suf[it->row - 1]) return false;
  }
  return true;
}

}  // namespace

Path omega_inverse(const Word& w, int n) {
  if (n < static_cast<int>(w.size()))
    throw std::invalid_argument("omega_inverse: alphabet too small for a standard path");
  int L = 0;
  RectList mu = rects_of_word(w, &L);
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (!balanced_yamanouchi(w, static_cast<int>(i) + 1, mu[i].height))
      throw std::invalid_argument("word not in W");
  std::vector<std::vector<std::vector<Letter>>> g;
  for (const Rect& r : mu)
    g.emplace_back(r.height, std::vector<Letter>(r.width, Letter{0, 0}));
  long long M = static_cast<long long>(w.size());
  for (std::size_t t = 0; t < w.size(); ++t) {
    auto val = static_cast<int>(M - static_cast<long long>(t));
    auto& row = g[w[t].step - 1][w[t].row - 1];
    int c = static_cast<int>(row.size()) - 1;
    while (c >= 0 && !(row[c] == Letter{0, 0})) --c;
    if (c < 0) throw std::invalid_argument("word not in W (row overflow)");
    row[c] = plain(val);
  }
  Path p;
  p.n = n;
  for (auto& grid : g) p.steps.emplace_back(Tableau(std::move(grid)));
  for (const Tableau& s : p.steps)
    if (!s.valid()) throw defect_error("omega_inverse produced an invalid step");
  return p;
}

std::vector<Path> restricted_paths(const PathSpace& space) {
  Partition lam(space.lambda);
  std::vector<Path> out;
  for (Path& p : enumerate_paths(space)) {
    if (tableau_of_word(omega_map(p)).shape() == lam) out.push_back(std::move(p));
  }
  return out;
}

QPoly cocharge_kostka(const PathSpace& space) {
  QPoly s;
  std::map<Path, long long> known;
  for (const Path& p : restricted_paths(space)) {
    auto it = known.find(p);
    long long H;
    if (it != known.end()) {
      H = it->second;
    } else {
      std::set<Path> o = orbit(p);
      long long sum = 0;
      for (const Path& q : o) sum += energy_h(q);
      auto m = static_cast<long long>(o.size());
      if (sum % m != 0) throw defect_error("weight H is not an integer");
      H = sum / m;
      for (const Path& q : o) known.emplace(q, H);
    }
    s.add_term(Rational(H), 1);
  }
  return s;
}

QPoly gen_kostka(const PathSpace& space) {
  return cocharge_kostka(space).substitute_inverse_q().shifted(Rational(mu_norm(space.mu)));
}

Tableau omega_step(const Tableau& t, int n) {
  std::vector<std::vector<Letter>> rows;
  const auto& rs = t.rows();
  for (auto it = rs.rbegin(); it != rs.rend(); ++it) {
    std::vector<Letter> row;
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt)
      row.push_back(plain(n + 1 - jt->step));
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

Path omega_path(const Path& p) {
  Path r;
  r.n = p.n;
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
    r.steps.push_back(omega_step(*it, p.n));
  return r;
}

namespace {

struct StdInfo {
  int step;  // index into steps
  int row, col;
};

StdInfo locate_value(const Path& p, int val) {
  for (int j = 0; j < p.length(); ++j) {
    const auto& rows = p.steps[j].rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c)
        if (rows[r][c] == plain(val)) return {j, static_cast<int>(r), static_cast<int>(c)};
  }
  throw std::invalid_argument("path is not standard");
}

Path shift_all(const Path& p, int d) {
  Path r;
  r.n = p.n;
  for (const Tableau& s : p.steps) {
    std::vector<std::vector<Letter>> rows;
    for (const auto& row : s.rows()) {
      std::vector<Letter> nr;
      for (const Letter& x : row) nr.push_back(plain(x.step + d));
      rows.push_back(std::move(nr));
    }
    r.steps.emplace_back(std::move(rows));
  }
  return r;
}

}  // namespace

Path cp_cyclage(const Path& p) {
  auto M = static_cast<int>(total_boxes(p.content_rects()));
  StdInfo loc = locate_value(p, M);
  Path r = p;
  std::vector<std::vector<Letter>> g(r.steps[loc.step].rows());
  int h = static_cast<int>(g.size());
  int wd = static_cast<int>(g[0].size());
  if (loc.row != h - 1 || loc.col != wd - 1)
    throw defect_error("largest entry not at the top-right of its step");
  int rr = h - 1, cc = wd - 1;
  for (;;) {  // inverse sliding: bigger of left/below moves in, below on ties
    bool has_left = cc > 0, has_below = rr > 0;
    if (!has_left && !has_below) break;
    if (!has_below || (has_left && g[rr - 1][cc] < g[rr][cc - 1])) {
      g[rr][cc] = g[rr][cc - 1];
      --cc;
    } else {
      g[rr][cc] = g[rr - 1][cc];
      --rr;
    }
  }
  g[rr][cc] = plain(0);
  r.steps[loc.step] = Tableau(std::move(g));
  return shift_all(r, 1);
}

Path cp_inverse(const Path& p) {
  auto M = static_cast<int>(total_boxes(p.content_rects()));
  StdInfo loc = locate_value(p, 1);
  Path r = p;
  std::vector<std::vector<Letter>> g(r.steps[loc.step].rows());
  int h = static_cast<int>(g.size());
  int wd = static_cast<int>(g[0].size());
  if (loc.row != 0 || loc.col != 0)
    throw defect_error("smallest entry not at the bottom-left of its step");
  int rr = 0, cc = 0;
  for (;;) {  // sliding: smaller of right/above moves in, above on ties
    bool has_right = cc + 1 < wd, has_above = rr + 1 < h;
    if (!has_right && !has_above) break;
    if (!has_above || (has_right && g[rr][cc + 1] < g[rr + 1][cc])) {
      g[rr][cc] = g[rr][cc + 1];
      ++cc;
    } else {
      g[rr][cc] = g[rr + 1][cc];
      ++rr;
    }
  }
  g[rr][cc] = plain(M + 1);
  r.steps[loc.step] = Tableau(std::move(g));
  return shift_all(r, -1);
}

bool orbit_has_max_in_first_step(const Path& p) {
  auto M = static_cast<int>(total_boxes(p.content_rects()));
  for (const Path& q : orbit(p))
    if (locate_value(q, M).step == 0) return true;
  return false;
}

bool orbit_has_min_in_first_step(const Path& p) {
  for (const Path& q : orbit(p))
    if (locate_value(q, 1).step == 0) return true;
  return false;
}

}  // namespace kostka
