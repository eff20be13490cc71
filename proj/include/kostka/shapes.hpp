#pragma once

#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kostka {

/// Integer partition, weakly decreasing, trailing zeros stripped.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
      if (parts_[i] < parts_[i + 1]) throw std::invalid_argument("not weakly decreasing");
    if (!parts_.empty() && parts_.back() < 0) throw std::invalid_argument("negative part");
  }

  const std::vector<int>& parts() const { return parts_; }
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int height() const { return static_cast<int>(parts_.size()); }
  int width() const { return parts_.empty() ? 0 : parts_[0]; }
  long long size() const {
    long long s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// true iff a <= b in dominance order; requires |a| == |b|.
bool dominance_leq(const Partition& a, const Partition& b);

Partition add(const Partition& a, const Partition& b);
Partition intersect(const Partition& a, const Partition& b);

/// Rectangular partition (width^height).
struct Rect {
  int width = 1;
  int height = 1;
  Partition as_partition() const { return Partition(std::vector<int>(height, width)); }
  Rect transpose() const { return {height, width}; }
  long long boxes() const { return static_cast<long long>(width) * height; }
  auto operator<=>(const Rect&) const = default;
};

/// Ordered array mu = (mu_1, ..., mu_L) of rectangles.
using RectList = std::vector<Rect>;

long long total_boxes(const RectList& mu);

/// mu* = componentwise transpose.
RectList mu_star(const RectList& mu);

/// ||mu|| = sum_{i<j} |mu_i cap mu_j|.
long long mu_norm(const RectList& mu);

/// Matrix L_i^{(a)} counting components of mu equal to (i^a);
/// rows a = 1..n, columns i = 1..N.
class LMatrix {
 public:
  LMatrix() = default;
  LMatrix(int n, int N) : n_(n), N_(N), e_(static_cast<std::size_t>(n) * N, 0) {}

  int rows() const { return n_; }
  int cols() const { return N_; }
  int at(int a, int i) const {  // 1-based
    if (a < 1 || a > n_ || i < 1 || i > N_) return 0;
    return e_[idx(a, i)];
  }
  void set(int a, int i, int v) { e_[idx(a, i)] = v; }
  void bump(int a, int i, int v) {
    if (v == 0) return;
    if (a < 1 || a > n_ || i < 1 || i > N_) throw std::invalid_argument("entry out of range");
    e_[idx(a, i)] += v;
  }
  bool nonnegative() const {
    for (int v : e_) if (v < 0) return false;
    return true;
  }

  /// sum over all entries of a*i*L_i^{(a)} = |mu|.
  long long weight() const;
  /// l_i^{(a)} = sum_j min(i,j) L_j^{(a)}; i may exceed N (clipped).
  long long ell(int a, int i) const;
  /// lbar_i^{(a)} = sum_b min(a,b) L_i^{(b)}.
  long long ell_bar(int a, int i) const;

  auto operator<=>(const LMatrix&) const = default;

 private:
  std::size_t idx(int a, int i) const { return static_cast<std::size_t>(a - 1) * N_ + (i - 1); }
  int n_ = 0, N_ = 0;
  std::vector<int> e_;
};

/// Count rectangles of mu into an n x N matrix; every component must fit.
LMatrix to_lmatrix(const RectList& mu, int n, int N);
/// Rectangles of L in canonical order (a ascending, then i ascending).
RectList from_lmatrix(const LMatrix& L);

}  // namespace kostka
