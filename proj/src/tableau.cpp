#include "lrcrystal/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

namespace {

int entry_at(const Tableau& t, const SkewShape& s, int r, int c) {
  return t.rows[r - 1][c - s.row_begin(r)];
}

void validate_skew_rows(const SkewShape& s, const std::vector<std::vector<int>>& rows, int lo,
                        int hi) {
  if (static_cast<int>(rows.size()) != s.ambient())
    throw std::invalid_argument("tableau: wrong number of rows");
  for (int r = 1; r <= s.ambient(); ++r) {
    int len = std::max(0, s.row_len(r));
    if (static_cast<int>(rows[r - 1].size()) != len)
      throw std::invalid_argument("tableau: row length mismatch");
    for (int j = 0; j < len; ++j) {
      int e = rows[r - 1][j];
      if (e == 0 || e < lo || e > hi) throw std::invalid_argument("tableau: bad letter");
      if (j > 0 && rows[r - 1][j - 1] > e)
        throw std::invalid_argument("tableau: row not weakly increasing");
    }
  }
  for (int r = 2; r <= s.ambient(); ++r)
    for (int c = s.row_begin(r); c <= s.row_end(r); ++c)
      if (s.has_cell(r - 1, c)) {
        int above = rows[r - 2][c - s.row_begin(r - 1)];
        int here = rows[r - 1][c - s.row_begin(r)];
        if (above >= here)
          throw std::invalid_argument("tableau: column not strictly increasing");
      }
}

}  // namespace

Tableau make_tableau(const SkewShape& shape, std::vector<std::vector<int>> rows) {
  if (!shape.valid()) throw std::invalid_argument("tableau: invalid shape");
  validate_skew_rows(shape, rows, 1, shape.ambient());
  return Tableau{shape, std::nullopt, std::move(rows)};
}

Tableau make_rational_tableau(const RationalShape& rs, std::vector<std::vector<int>> plus_rows,
                              std::vector<std::vector<int>> minus_rows) {
  if (!rs.valid()) throw std::invalid_argument("tableau: invalid rational shape");
  int n = rs.n;
  SkewShape sp = straight_shape(reambient(rs.plus, n));
  SkewShape sm = straight_shape(reambient(rs.minus, n));
  std::vector<std::vector<int>> pr(n), mr(n);
  for (size_t i = 0; i < plus_rows.size(); ++i) pr[i] = plus_rows[i];
  for (size_t i = 0; i < minus_rows.size(); ++i) mr[i] = minus_rows[i];
  validate_skew_rows(sp, pr, 1, n);
  validate_skew_rows(sm, mr, 1, n);
  std::vector<std::vector<int>> grid(n);
  int lp = rs.plus.length();
  for (int r = 1; r <= lp; ++r) grid[r - 1] = pr[r - 1];
  int lm = rs.minus.length();
  for (int j = 1; j <= lm; ++j) {
    std::vector<int> row(mr[j - 1].rbegin(), mr[j - 1].rend());
    for (int& e : row) e = -e;
    grid[n - j] = std::move(row);
  }
  return Tableau{SkewShape{}, rs, std::move(grid)};
}

Tableau empty_tableau(int n) {
  return Tableau{straight_shape(Partition(std::vector<int>(n, 0))), std::nullopt,
                 std::vector<std::vector<int>>(n)};
}

Tableau plus_part(const Tableau& t) {
  const RationalShape& rs = *t.rational;
  std::vector<std::vector<int>> rows(rs.n);
  for (int r = 1; r <= rs.plus.length(); ++r) rows[r - 1] = t.rows[r - 1];
  return Tableau{straight_shape(reambient(rs.plus, rs.n)), std::nullopt, std::move(rows)};
}

Tableau minus_part(const Tableau& t) {
  const RationalShape& rs = *t.rational;
  int n = rs.n;
  std::vector<std::vector<int>> rows(n);
  for (int j = 1; j <= rs.minus.length(); ++j) {
    std::vector<int> row(t.rows[n - j].rbegin(), t.rows[n - j].rend());
    for (int& e : row) e = -e;
    rows[j - 1] = std::move(row);
  }
  return Tableau{straight_shape(reambient(rs.minus, n)), std::nullopt, std::move(rows)};
}

std::vector<int> row_word(const Tableau& t) {
  std::vector<int> w;
  for (int r = static_cast<int>(t.rows.size()); r >= 1; --r)
    for (int e : t.rows[r - 1]) w.push_back(e);
  return w;
}

std::vector<WordPos> row_word_positions(const Tableau& t) {
  std::vector<WordPos> ps;
  for (int r = static_cast<int>(t.rows.size()); r >= 1; --r)
    for (int j = 0; j < static_cast<int>(t.rows[r - 1].size()); ++j) ps.push_back({r, j});
  return ps;
}

std::vector<int> word_weight(const std::vector<int>& w, int n) {
  std::vector<int> wt(n, 0);
  for (int e : w) {
    if (e > 0)
      ++wt[e - 1];
    else
      --wt[-e - 1];
  }
  return wt;
}

std::vector<int> weight(const Tableau& t) { return word_weight(row_word(t), t.rank()); }

namespace {

std::vector<std::vector<int>> highest_rows(const SkewShape& s) {
  int n = s.ambient(), w = s.width();
  std::vector<int> colcnt(w + 1, 0);
  std::vector<std::vector<int>> rows(n);
  for (int r = 1; r <= n; ++r)
    for (int c = s.row_begin(r); c <= s.row_end(r); ++c) rows[r - 1].push_back(++colcnt[c]);
  return rows;
}

std::vector<std::vector<int>> lowest_rows(const SkewShape& s, int rank) {
  int n = s.ambient(), w = s.width();
  std::vector<int> below(w + 1, 0);
  std::vector<std::vector<int>> rows(n);
  for (int r = n; r >= 1; --r) {
    std::vector<int>& row = rows[r - 1];
    for (int c = s.row_begin(r); c <= s.row_end(r); ++c) row.push_back(rank - below[c]++);
    // entries were pushed left to right; the column counts make them correct as-is
  }
  return rows;
}

}  // namespace

Tableau highest_tableau(const SkewShape& s) { return make_tableau(s, highest_rows(s)); }

Tableau lowest_tableau(const SkewShape& s) {
  return make_tableau(s, lowest_rows(s, s.ambient()));
}

Tableau highest_tableau(const RationalShape& rs) {
  int n = rs.n;
  auto plus = highest_rows(straight_shape(reambient(rs.plus, n)));
  auto minus = lowest_rows(straight_shape(reambient(rs.minus, n)), n);
  return make_rational_tableau(rs, std::move(plus), std::move(minus));
}

Tableau lowest_tableau(const RationalShape& rs) {
  int n = rs.n;
  auto plus = lowest_rows(straight_shape(reambient(rs.plus, n)), n);
  auto minus = highest_rows(straight_shape(reambient(rs.minus, n)));
  return make_rational_tableau(rs, std::move(plus), std::move(minus));
}

namespace {

struct Cell {
  int r, c;
};

void fill_cells(const SkewShape& s, int n, size_t k, const std::vector<Cell>& cells,
                std::vector<std::vector<int>>& grid, std::vector<int>& counts,
                const std::vector<int>* target, std::vector<Tableau>& out) {
  if (k == cells.size()) {
    out.push_back(Tableau{s, std::nullopt, grid});
    return;
  }
  auto [r, c] = cells[k];
  int lo = 1;
  int j = c - s.row_begin(r);
  if (j > 0) lo = std::max(lo, grid[r - 1][j - 1]);
  if (r > 1 && s.has_cell(r - 1, c)) lo = std::max(lo, grid[r - 2][c - s.row_begin(r - 1)] + 1);
  for (int e = lo; e <= n; ++e) {
    if (target && counts[e - 1] >= (*target)[e - 1]) continue;
    grid[r - 1][j] = e;
    ++counts[e - 1];
    fill_cells(s, n, k + 1, cells, grid, counts, target, out);
    --counts[e - 1];
  }
  grid[r - 1][j] = 0;
}

void sort_by_row_word(std::vector<Tableau>& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Tableau& a, const Tableau& b) { return row_word(a) < row_word(b); });
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const SkewShape& s, int n,
                                    const std::optional<std::vector<int>>& target_weight) {
  std::vector<Tableau> out;
  if (!s.valid()) throw std::invalid_argument("enumerate_ssyt: invalid shape");
  const std::vector<int>* target = target_weight ? &*target_weight : nullptr;
  if (target) {
    int tot = 0;
    for (int v : *target) tot += v;
    if (tot != s.cells()) return out;
  }
  std::vector<Cell> cells;
  std::vector<std::vector<int>> grid(s.ambient());
  for (int r = 1; r <= s.ambient(); ++r) {
    for (int c = s.row_begin(r); c <= s.row_end(r); ++c) cells.push_back({r, c});
    grid[r - 1].assign(std::max(0, s.row_len(r)), 0);
  }
  std::vector<int> counts(n, 0);
  fill_cells(s, n, 0, cells, grid, counts, target, out);
  sort_by_row_word(out);
  return out;
}

namespace {

// Flag condition on a staircase pair: for every i, the first columns of the
// plus and minus components together hold at most i entries <= i.
bool rational_flag_ok(const std::vector<std::vector<int>>& plus_rows,
                      const std::vector<std::vector<int>>& minus_rows, int n) {
  std::vector<int> cnt(n + 1, 0);
  for (const auto& row : plus_rows)
    if (!row.empty()) ++cnt[row[0]];
  for (const auto& row : minus_rows)
    if (!row.empty()) ++cnt[row[0]];
  int run = 0;
  for (int i = 1; i <= n; ++i) {
    run += cnt[i];
    if (run > i) return false;
  }
  return true;
}

}  // namespace

std::vector<Tableau> enumerate_rational(const RationalShape& rs) {
  if (!rs.valid()) throw std::invalid_argument("enumerate_rational: invalid shape");
  int n = rs.n;
  auto plus = enumerate_ssyt(straight_shape(reambient(rs.plus, n)), n);
  auto minus = enumerate_ssyt(straight_shape(reambient(rs.minus, n)), n);
  std::vector<Tableau> out;
  for (const auto& tp : plus)
    for (const auto& tm : minus) {
      if (!rational_flag_ok(tp.rows, tm.rows, n)) continue;
      out.push_back(make_rational_tableau(rs, tp.rows, tm.rows));
    }
  sort_by_row_word(out);
  return out;
}

bool in_khat(const Partition& nu, const KSpec& k) {
  if (!nu.valid() || nu.ambient() != k.rank) return false;
  switch (k.cls) {
    case KClass::O: {
      Partition c = conjugate(nu);
      return c.at(0) + c.at(1) <= k.rank;
    }
    case KClass::GLrat:
      return true;
    case KClass::SpH:
    case KClass::SpBallot:
      return k.rank % 2 == 0 && nu.length() <= k.rank / 2;
  }
  return false;
}

bool in_khat(const RationalShape& nu, const KSpec& k) {
  return k.cls == KClass::GLrat && nu.valid() && nu.n == k.rank;
}

bool is_ballot_word(const std::vector<int>& w, int rank) {
  std::vector<int> cnt(rank + 1, 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int e = *it;
    ++cnt[e];
    if (e % 2 == 0 && cnt[e] > cnt[e - 1]) return false;
  }
  return true;
}

namespace {

std::vector<int> first_columns_entries(const Tableau& t, int ncols) {
  std::vector<int> es;
  for (int r = 1; r <= t.shape.ambient(); ++r)
    for (int c = t.shape.row_begin(r); c <= std::min(t.shape.row_end(r), ncols); ++c)
      es.push_back(entry_at(t, t.shape, r, c));
  return es;
}

// For every i in 1..n: #{entries <= i} <= i.
bool flag_count_ok(const std::vector<int>& entries, int n) {
  std::vector<int> cnt(n + 1, 0);
  for (int e : entries) ++cnt[e];
  int run = 0;
  for (int i = 1; i <= n; ++i) {
    run += cnt[i];
    if (run > i) return false;
  }
  return true;
}

}  // namespace

bool is_k_tableau(const Tableau& t, const KSpec& k) {
  switch (k.cls) {
    case KClass::O: {
      if (t.rational || t.shape.rotated || t.shape.inner.size() != 0)
        throw std::invalid_argument("is_k_tableau: O expects a straight tableau");
      return flag_count_ok(first_columns_entries(t, 2), k.rank);
    }
    case KClass::GLrat: {
      if (!t.rational) throw std::invalid_argument("is_k_tableau: GLrat expects staircase");
      return rational_flag_ok(plus_part(t).rows, minus_part(t).rows, k.rank);
    }
    case KClass::SpH:
    case KClass::SpBallot: {
      if (t.rational || t.shape.rotated || t.shape.inner.size() != 0)
        throw std::invalid_argument("is_k_tableau: Sp expects a straight tableau");
      std::vector<int> col1 = first_columns_entries(t, 1);
      std::vector<int> cnt(k.rank + 1, 0);
      for (int e : col1) ++cnt[e];
      int run = 0;
      for (int i = 1; i <= k.rank / 2; ++i) {
        run += cnt[2 * i - 1] + cnt[2 * i];
        if (run > i) return false;
      }
      if (k.cls == KClass::SpBallot) return is_ballot_word(row_word(t), k.rank);
      return true;
    }
  }
  return false;
}

std::vector<int> m_weight(const Tableau& t, const KSpec& k) {
  switch (k.cls) {
    case KClass::O: {
      std::vector<int> wt = weight(t);
      for (int& v : wt) v = ((v % 2) + 2) % 2;
      return wt;
    }
    case KClass::GLrat:
      return weight(t);
    case KClass::SpH:
    case KClass::SpBallot: {
      std::vector<int> wt = weight(t);
      std::vector<int> d(k.rank / 2);
      for (int i = 1; i <= k.rank / 2; ++i) d[i - 1] = wt[2 * i - 2] - wt[2 * i - 1];
      return d;
    }
  }
  return {};
}

std::vector<Tableau> k_tableaux(const Partition& nu, const KSpec& k) {
  if (!in_khat(nu, k)) throw std::invalid_argument("k_tableaux: shape not in Khat");
  if (k.cls == KClass::GLrat) return enumerate_rational(RationalShape{nu, Partition{}, k.rank});
  std::vector<Tableau> out;
  for (auto& t : enumerate_ssyt(straight_shape(nu), k.rank))
    if (is_k_tableau(t, k)) out.push_back(std::move(t));
  return out;
}

namespace {

bool zero_vec(const std::vector<int>& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::vector<Tableau> zero_weight_tableaux(const Partition& nu, const KSpec& k) {
  if (!in_khat(nu, k)) throw std::invalid_argument("zero_weight_tableaux: shape not in Khat");
  if ((k.cls == KClass::O || k.cls == KClass::SpH || k.cls == KClass::SpBallot) &&
      nu.size() % 2 != 0)
    return {};
  KSpec eff = k;
  if (k.cls == KClass::SpH) eff.cls = KClass::SpBallot;  // M-weights live on the ballot set
  std::vector<Tableau> out;
  for (auto& t : k_tableaux(nu, eff))
    if (zero_vec(m_weight(t, eff))) out.push_back(std::move(t));
  return out;
}

std::vector<Tableau> zero_weight_tableaux(const RationalShape& nu, const KSpec& k) {
  if (!in_khat(nu, k)) throw std::invalid_argument("zero_weight_tableaux: shape not in Khat");
  std::vector<Tableau> out;
  for (auto& t : enumerate_rational(nu))
    if (zero_vec(m_weight(t, k))) out.push_back(std::move(t));
  return out;
}

std::map<std::vector<int>, long long> m_polynomial(const Partition& nu, const KSpec& k) {
  KSpec eff = k;
  if (k.cls == KClass::SpH) eff.cls = KClass::SpBallot;
  std::map<std::vector<int>, long long> out;
  for (const auto& t : k_tableaux(nu, eff)) ++out[m_weight(t, eff)];
  return out;
}

std::map<std::vector<int>, long long> m_polynomial(const RationalShape& nu, const KSpec& k) {
  if (!in_khat(nu, k)) throw std::invalid_argument("m_polynomial: shape not in Khat");
  std::map<std::vector<int>, long long> out;
  for (const auto& t : enumerate_rational(nu)) ++out[m_weight(t, k)];
  return out;
}

long long dim_k(const Partition& nu, const KSpec& k) {
  KSpec eff = k;
  if (k.cls == KClass::SpBallot) eff.cls = KClass::SpH;  // dimension counts the H-set
  return static_cast<long long>(k_tableaux(nu, eff).size());
}

long long dim_k(const RationalShape& nu, const KSpec& k) {
  if (!in_khat(nu, k)) throw std::invalid_argument("dim_k: shape not in Khat");
  return static_cast<long long>(enumerate_rational(nu).size());
}

}  // namespace lrc
