#include "kostka/tableaux.hpp"

#include "kostka/qpoly.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace kostka {

Partition Tableau::shape() const {
  std::vector<int> s;
  s.reserve(rows_.size());
  for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
  return Partition(std::move(s));
}

std::map<Letter, int> Tableau::content() const {
  std::map<Letter, int> c;
  for (const auto& r : rows_)
    for (const Letter& x : r) ++c[x];
  return c;
}

long long Tableau::boxes() const {
  long long s = 0;
  for (const auto& r : rows_) s += static_cast<long long>(r.size());
  return s;
}

bool Tableau::valid() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) return false;
    for (std::size_t c = 0; c + 1 < rows_[i].size(); ++c)
      if (rows_[i][c + 1] < rows_[i][c]) return false;
    if (i + 1 < rows_.size()) {
      if (rows_[i + 1].size() > rows_[i].size()) return false;
      for (std::size_t c = 0; c < rows_[i + 1].size(); ++c)
        if (!(rows_[i][c] < rows_[i + 1][c])) return false;
    }
  }
  return true;
}

void Tableau::insert(Letter x) {
  std::size_t row = 0;
  for (;;) {
    if (row == rows_.size()) {
      rows_.push_back({x});
      return;
    }
    auto& r = rows_[row];
    auto it = std::upper_bound(r.begin(), r.end(), x);
    if (it == r.end()) {
      r.push_back(x);
      return;
    }
    std::swap(x, *it);
    ++row;
  }
}

Word Tableau::row_word() const {
  Word w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

Tableau tableau_of_word(const Word& w) {
  Tableau t;
  for (const Letter& x : w) t.insert(x);
  return t;
}

Tableau product(const Tableau& s, const Tableau& t) {
  Word w = s.row_word();
  Word v = t.row_word();
  w.insert(w.end(), v.begin(), v.end());
  return tableau_of_word(w);
}

bool knuth_equivalent(const Word& w, const Word& v) {
  return tableau_of_word(w) == tableau_of_word(v);
}

long long longest_k_increasing(const Word& w, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Partition sh = tableau_of_word(w).shape();
  long long s = 0;
  for (int i = 0; i < k; ++i) s += sh.part(i);
  return s;
}

std::vector<Word> knuth_class(const Word& w) {
  if (w.size() > 9) throw std::invalid_argument("knuth_class capped at length 9");
  Tableau target = tableau_of_word(w);
  std::vector<Letter> sorted(w);
  std::sort(sorted.begin(), sorted.end());
  std::vector<Word> out;
  Word cur;
  std::vector<bool> picked(sorted.size(), false);
  // distinct multiset permutations
  std::function<void()> rec = [&]() {
    if (cur.size() == sorted.size()) {
      if (tableau_of_word(cur) == target) out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (picked[i]) continue;
      if (i > 0 && sorted[i] == sorted[i - 1] && !picked[i - 1]) continue;
      picked[i] = true;
      cur.push_back(sorted[i]);
      rec();
      cur.pop_back();
      picked[i] = false;
    }
  };
  rec();
  return out;
}

Word omega_involution(const Word& w, const std::vector<int>& heights) {
  int L = static_cast<int>(heights.size());
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->step < 1 || it->step > L) throw std::invalid_argument("letter outside alphabet");
    int a = heights[it->step - 1];
    if (it->row < 1 || it->row > a) throw std::invalid_argument("letter outside alphabet");
    out.push_back(Letter{L + 1 - it->step, a + 1 - it->row});
  }
  return out;
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<Letter>& letters,
                                    const std::map<Letter, int>* content) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.height(); ++r)
    for (int c = 0; c < shape.part(r); ++c) cells.emplace_back(r, c);
  std::vector<Tableau> out;
  std::vector<std::vector<Letter>> rows(shape.height());
  std::map<Letter, int> used;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      out.emplace_back(rows);
      return;
    }
    auto [r, c] = cells[idx];
    for (const Letter& x : letters) {
      if (content) {
        auto it = content->find(x);
        if (it == content->end() || used[x] >= it->second) continue;
      }
      if (c > 0 && x < rows[r][c - 1]) continue;
      if (r > 0 && !(rows[r - 1][c] < x)) continue;
      rows[r].push_back(x);
      ++used[x];
      rec(idx + 1);
      --used[x];
      rows[r].pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

Tableau plain_min_tableau(const std::map<Letter, int>& content) {
  std::vector<Letter> row;
  for (const auto& [x, m] : content)
    for (int k = 0; k < m; ++k) row.push_back(x);
  return Tableau({row});
}

}  // namespace

int classical_cocharge(const Tableau& t) {
  for (const auto& [x, m] : t.content())
    if (x.row != 1) throw std::invalid_argument("classical cocharge needs a plain alphabet");
  if (!t.valid() && !t.empty()) throw std::invalid_argument("not a tableau");
  Tableau tmin = plain_min_tableau(t.content());
  Tableau cur = t;
  int co = 0;
  while (cur != tmin) {
    Word w = cur.row_word();
    Word v(w.begin() + 1, w.end());
    v.push_back(w.front());
    cur = tableau_of_word(v);
    ++co;
  }
  return co;
}

int classical_charge(const Tableau& t) {
  RectList mu;
  for (const auto& [x, m] : t.content()) mu.push_back(Rect{m, 1});
  return static_cast<int>(mu_norm(mu)) - classical_cocharge(t);
}

long long kostka_number(const Partition& eta, const std::vector<int>& lambda) {
  long long tot = 0;
  for (int v : lambda) {
    if (v < 0) return 0;
    tot += v;
  }
  if (eta.size() != tot) throw std::invalid_argument("|eta| != |lambda|");
  std::vector<Letter> letters;
  std::map<Letter, int> content;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    letters.push_back(plain(static_cast<int>(i) + 1));
    content[letters.back()] = lambda[i];
  }
  return static_cast<long long>(enumerate_ssyt(eta, letters, &content).size());
}

}  // namespace kostka
