#pragma once

#include "kostka/shapes.hpp"

#include <functional>
#include <vector>

namespace kostka {

inline std::vector<Partition> all_partitions_of(int m, int max_height = 1 << 20) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_height) return;
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

inline std::vector<std::vector<int>> all_compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> rec = [&](int idx, int rem) {
    if (idx == parts - 1) {
      cur[idx] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[idx] = v;
      rec(idx + 1, rem - v);
    }
  };
  if (parts > 0) rec(0, total);
  return out;
}

/// All multisets of rectangles with 1 <= total boxes <= max_boxes and height
/// bounded by max_height, in a deterministic order.
inline std::vector<RectList> all_contents(int max_boxes, int max_height) {
  std::vector<Rect> rects;
  for (int h = 1; h <= max_height; ++h)
    for (int w = 1; w * h <= max_boxes; ++w) rects.push_back(Rect{w, h});
  std::vector<RectList> out;
  RectList cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (!cur.empty()) out.push_back(cur);
    for (std::size_t k = start; k < rects.size(); ++k) {
      int area = static_cast<int>(rects[k].boxes());
      if (area <= left) {
        cur.push_back(rects[k]);
        rec(k, left - area);
        cur.pop_back();
      }
    }
  };
  rec(0, max_boxes);
  return out;
}

/// All n x N matrices with nonnegative entries and 1 <= weight <= max_weight.
inline std::vector<LMatrix> all_lmatrices(int n, int N, int max_weight) {
  std::vector<LMatrix> out;
  LMatrix cur(n, N);
  std::function<void(int, long long)> rec = [&](int idx, long long left) {
    if (idx == n * N) {
      if (left < max_weight) out.push_back(cur);
      return;
    }
    int a = idx / N + 1, i = idx % N + 1;
    for (long long v = 0; v * a * i <= left; ++v) {
      cur.set(a, i, static_cast<int>(v));
      rec(idx + 1, left - v * a * i);
    }
    cur.set(a, i, 0);
  };
  rec(0, max_weight);
  return out;
}

}  // namespace kostka
