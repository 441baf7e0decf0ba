#include "lrcrystal/plactic.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

namespace {

bool is_straight(const Tableau& t) {
  return !t.rational && !t.shape.rotated && t.shape.inner.size() == 0;
}

std::vector<std::vector<int>> nonempty_rows(const Tableau& t) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : t.rows)
    if (!r.empty()) rows.push_back(r);
  return rows;
}

Tableau straight_from_rows(std::vector<std::vector<int>> rows, int n) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (static_cast<int>(rows.size()) > n)
    throw std::logic_error("plactic: result has more rows than the rank allows");
  std::vector<int> outer(n, 0);
  std::vector<std::vector<int>> grid(n);
  for (size_t i = 0; i < rows.size(); ++i) {
    outer[i] = static_cast<int>(rows[i].size());
    grid[i] = std::move(rows[i]);
  }
  return make_tableau(straight_shape(Partition(std::move(outer))), std::move(grid));
}

}  // namespace

Tableau row_insert(const Tableau& t, int x) {
  if (!is_straight(t)) throw std::invalid_argument("row_insert: straight tableau expected");
  if (x <= 0) throw std::invalid_argument("row_insert: unbarred letter expected");
  auto rows = nonempty_rows(t);
  int cur = x;
  size_t r = 0;
  for (; r < rows.size(); ++r) {
    auto it = std::upper_bound(rows[r].begin(), rows[r].end(), cur);
    if (it == rows[r].end()) {
      rows[r].push_back(cur);
      return straight_from_rows(std::move(rows), t.rank());
    }
    std::swap(cur, *it);
  }
  rows.push_back({cur});
  return straight_from_rows(std::move(rows), t.rank());
}

Tableau insertion_tableau(const std::vector<int>& w, int n) {
  Tableau t = empty_tableau(n);
  for (int x : w) t = row_insert(t, x);
  return t;
}

namespace {

// Jeu de taquin on per-row column spans.  innerlen/outerlen are 1-based row
// arrays of the first-1/last column of each row; both are weakly decreasing.
Tableau slide_to_straight(const Tableau& t) {
  const SkewShape& s = t.shape;
  int n = s.ambient(), w = s.width();
  std::vector<int> innerlen(n + 1, 0), outerlen(n + 1, 0);
  std::vector<std::vector<int>> grid(n + 1, std::vector<int>(w + 2, 0));
  for (int r = 1; r <= n; ++r) {
    innerlen[r] = s.row_begin(r) - 1;
    outerlen[r] = s.row_end(r);
    if (outerlen[r] < innerlen[r]) outerlen[r] = innerlen[r];  // empty row
    for (int c = s.row_begin(r); c <= s.row_end(r); ++c)
      grid[r][c] = t.rows[r - 1][c - s.row_begin(r)];
  }
  auto has = [&](int r, int c) {
    return r >= 1 && r <= n && c > innerlen[r] && c <= outerlen[r];
  };
  for (;;) {
    int corner = 0;
    for (int r = 1; r <= n; ++r)
      if (innerlen[r] > 0 && (r == n || innerlen[r + 1] < innerlen[r])) {
        corner = r;
        break;
      }
    if (!corner) break;
    int hr = corner, hc = innerlen[corner];
    for (;;) {
      bool right = has(hr, hc + 1);
      bool below = has(hr + 1, hc);
      if (!right && !below) {
        outerlen[hr] = hc - 1;
        break;
      }
      if (below && (!right || grid[hr + 1][hc] <= grid[hr][hc + 1])) {
        grid[hr][hc] = grid[hr + 1][hc];
        ++hr;
      } else {
        grid[hr][hc] = grid[hr][hc + 1];
        ++hc;
      }
    }
    --innerlen[corner];
  }
  std::vector<std::vector<int>> rows(n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= outerlen[r]; ++c) rows[r - 1].push_back(grid[r][c]);
  return straight_from_rows(std::move(rows), n);
}

}  // namespace

Tableau rectify(const Tableau& t) {
  if (t.rational) throw std::invalid_argument("rectify: staircase tableaux not supported");
  if (is_straight(t)) return t;
  return slide_to_straight(t);
}

Tableau product(const Tableau& t1, const Tableau& t2, ProductMethod method) {
  if (t1.rational || t2.rational)
    throw std::invalid_argument("product: staircase tableaux not supported");
  int n = std::max(t1.rank(), t2.rank());
  switch (method) {
    case ProductMethod::ConcatWord: {
      std::vector<int> w = row_word(t1);
      for (int e : row_word(t2)) w.push_back(e);
      return insertion_tableau(w, n);
    }
    case ProductMethod::Insert: {
      Tableau r = rectify(t1);
      if (r.rank() < n) r = straight_from_rows(nonempty_rows(r), n);
      for (int e : row_word(t2)) r = row_insert(r, e);
      return r;
    }
    case ProductMethod::StarRect: {
      // T2 sits to the right of an empty rectangle of width(T1) columns; T1
      // sits below it.
      int off = t1.shape.width();
      std::vector<int> outer, inner;
      std::vector<std::vector<int>> rows;
      int n2 = t2.shape.ambient();
      int last2 = 0;
      for (int r = 1; r <= n2; ++r)
        if (t2.shape.row_len(r) > 0) last2 = r;
      for (int r = 1; r <= last2; ++r) {
        int begin = off + t2.shape.row_begin(r) - 1;
        inner.push_back(begin);
        outer.push_back(begin + std::max(0, t2.shape.row_len(r)));
        rows.push_back(t2.rows[r - 1]);
      }
      int n1 = t1.shape.ambient();
      for (int r = 1; r <= n1; ++r) {
        int begin = t1.shape.row_begin(r) - 1;
        inner.push_back(begin);
        outer.push_back(begin + std::max(0, t1.shape.row_len(r)));
        rows.push_back(t1.rows[r - 1]);
      }
      SkewShape comb{Partition(outer), Partition(inner), false};
      Tableau star = make_tableau(comb, std::move(rows));
      Tableau r = slide_to_straight(star);
      return straight_from_rows(nonempty_rows(r), n);
    }
  }
  throw std::logic_error("product: unknown method");
}

bool knuth_equivalent(const std::vector<int>& w1, const std::vector<int>& w2, int n) {
  return same_filling(insertion_tableau(w1, n), insertion_tableau(w2, n));
}

bool same_filling(const Tableau& a, const Tableau& b) {
  return nonempty_rows(a) == nonempty_rows(b);
}

}  // namespace lrc
