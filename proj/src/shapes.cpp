#include "kostka/shapes.hpp"

#include <algorithm>

namespace kostka {

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int c = 0; c < width(); ++c) {
    int h = 0;
    for (int p : parts_)
      if (p > c) ++h;
    t.push_back(h);
  }
  return Partition(std::move(t));
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominance needs equal sizes");
  long long sa = 0, sb = 0;
  std::size_t m = std::max(a.parts().size(), b.parts().size());
  for (std::size_t i = 0; i < m; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sb < sa) return false;
  }
  return true;
}

Partition add(const Partition& a, const Partition& b) {
  std::size_t m = std::max(a.parts().size(), b.parts().size());
  std::vector<int> r(m);
  for (std::size_t i = 0; i < m; ++i) r[i] = a.part(i) + b.part(i);
  return Partition(std::move(r));
}

Partition intersect(const Partition& a, const Partition& b) {
  std::size_t m = std::min(a.parts().size(), b.parts().size());
  std::vector<int> r(m);
  for (std::size_t i = 0; i < m; ++i) r[i] = std::min(a.part(i), b.part(i));
  return Partition(std::move(r));
}

long long total_boxes(const RectList& mu) {
  long long s = 0;
  for (const Rect& r : mu) s += r.boxes();
  return s;
}

RectList mu_star(const RectList& mu) {
  RectList s;
  s.reserve(mu.size());
  for (const Rect& r : mu) s.push_back(r.transpose());
  return s;
}

long long mu_norm(const RectList& mu) {
  long long s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = i + 1; j < mu.size(); ++j)
      s += static_cast<long long>(std::min(mu[i].width, mu[j].width)) *
           std::min(mu[i].height, mu[j].height);
  return s;
}

long long LMatrix::weight() const {
  long long s = 0;
  for (int a = 1; a <= n_; ++a)
    for (int i = 1; i <= N_; ++i) s += static_cast<long long>(a) * i * at(a, i);
  return s;
}

long long LMatrix::ell(int a, int i) const {
  long long s = 0;
  for (int j = 1; j <= N_; ++j) s += static_cast<long long>(std::min(i, j)) * at(a, j);
  return s;
}

long long LMatrix::ell_bar(int a, int i) const {
  long long s = 0;
  for (int b = 1; b <= n_; ++b) s += static_cast<long long>(std::min(a, b)) * at(b, i);
  return s;
}

LMatrix to_lmatrix(const RectList& mu, int n, int N) {
  LMatrix L(n, N);
  for (const Rect& r : mu) {
    if (r.height > n || r.width > N) throw std::invalid_argument("rectangle exceeds matrix bounds");
    L.bump(r.height, r.width, 1);
  }
  return L;
}

RectList from_lmatrix(const LMatrix& L) {
  RectList mu;
  for (int a = 1; a <= L.rows(); ++a)
    for (int i = 1; i <= L.cols(); ++i)
      for (int k = 0; k < L.at(a, i); ++k) mu.push_back(Rect{i, a});
  return mu;
}

}  // namespace kostka
