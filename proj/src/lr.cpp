#include "lrcrystal/lr.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

namespace {

struct NormQuery {
  Partition lambda, mu, nu;
  int n;
  LRVariant variant;
};

NormQuery normalize(const LRQuery& q) {
  if (q.n < 1) throw std::invalid_argument("lr: rank must be positive");
  if (q.variant == LRVariant::Sp && q.n % 2 != 0)
    throw std::invalid_argument("lr: Sp variant needs an even GL rank");
  NormQuery r{reambient(q.lambda, q.n), reambient(q.mu, q.n), reambient(q.nu, q.n), q.n,
              q.variant};
  if (!r.lambda.valid() || !r.mu.valid() || !r.nu.valid())
    throw std::invalid_argument("lr: invalid partition");
  return r;
}

std::vector<int> word_phis(const std::vector<int>& w, int n) {
  std::vector<int> out(std::max(0, n - 1));
  for (int i = 1; i < n; ++i) out[i - 1] = eps_phi(w, i).second;
  return out;
}

bool companion_filter(const Tableau& t, const NormQuery& q) {
  std::vector<int> wt = weight(t);
  for (int j = 1; j <= q.n; ++j)
    if (wt[j - 1] != q.lambda.at(q.n - j) - q.mu.at(q.n - j)) return false;
  std::vector<int> phis = word_phis(row_word(t), q.n);
  for (int i = 1; i < q.n; ++i)
    if (q.mu.at(i - 1) - q.mu.at(i) < phis[q.n - i - 1]) return false;
  return true;
}

bool variant_companion_ok(const Tableau& t, const NormQuery& q) {
  switch (q.variant) {
    case LRVariant::GL:
      return true;
    case LRVariant::O:
      return is_k_tableau(t, KSpec{KClass::O, q.n});
    case LRVariant::Sp:
      return is_k_tableau(t, KSpec{KClass::SpH, q.n});
  }
  return false;
}

// Reading the row word right to left, a box is highlighted when it holds the
// first (Sp) or first-or-second (O) occurrence of its value; the count of
// highlighted boxes in the top rows is bounded.
bool highlight_ok(const Tableau& t, const NormQuery& q) {
  if (q.variant == LRVariant::GL) return true;
  std::vector<int> w = row_word(t);
  std::vector<WordPos> pos = row_word_positions(t);
  std::vector<int> occ(q.n + 1, 0), perrow(q.n + 2, 0);
  for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k) {
    int lim = (q.variant == LRVariant::O) ? 2 : 1;
    if (++occ[w[k]] <= lim) ++perrow[pos[k].row];
  }
  int run = 0;
  if (q.variant == LRVariant::O) {
    for (int i = 1; i <= q.n; ++i) {
      run += perrow[i];
      if (run > i) return false;
    }
  } else {
    for (int i = 1; i <= q.n / 2; ++i) {
      run += perrow[2 * i - 1] + perrow[2 * i];
      if (run > i) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Tableau> lowest_companions(const LRQuery& query) {
  NormQuery q = normalize(query);
  std::vector<Tableau> out;
  if (q.lambda.size() != q.mu.size() + q.nu.size()) return out;
  for (auto& t : enumerate_ssyt(straight_shape(q.nu), q.n))
    if (companion_filter(t, q) && variant_companion_ok(t, q)) out.push_back(std::move(t));
  return out;
}

std::vector<Tableau> hl_tableaux(const LRQuery& query) {
  NormQuery q = normalize(query);
  std::vector<Tableau> out;
  if (q.lambda.size() != q.mu.size() + q.nu.size()) return out;
  if (!contains(q.lambda, q.mu)) return out;
  SkewShape shape = pi_rotate(skew_shape(q.lambda, q.mu));
  std::vector<int> target(q.n, 0);
  for (int i = 0; i < q.n; ++i) target[i] = q.nu.at(i);
  for (auto& t : enumerate_ssyt(shape, q.n, target)) {
    if (!is_yamanouchi(row_word(t), q.n)) continue;
    if (!highlight_ok(t, q)) continue;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Tableau> highest_companions(const LRQuery& query) {
  NormQuery q = normalize(query);
  std::vector<Tableau> out;
  if (q.lambda.size() != q.mu.size() + q.nu.size()) return out;
  for (auto& t : enumerate_ssyt(straight_shape(q.nu), q.n)) {
    std::vector<int> wt = weight(t);
    bool ok = true;
    for (int j = 1; j <= q.n && ok; ++j)
      if (wt[j - 1] != q.lambda.at(j - 1) - q.mu.at(j - 1)) ok = false;
    if (!ok) continue;
    std::vector<int> w = row_word(t);
    for (int i = 1; i < q.n && ok; ++i)
      if (eps_phi(w, i).first > q.mu.at(i - 1) - q.mu.at(i)) ok = false;
    if (ok) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Tableau> lowest_lr(const LRQuery& query) {
  NormQuery q = normalize(query);
  std::vector<Tableau> out;
  if (q.lambda.size() != q.mu.size() + q.nu.size()) return out;
  if (!contains(q.lambda, q.mu)) return out;
  SkewShape shape = skew_shape(q.lambda, q.mu);
  std::vector<int> target(q.n, 0);
  for (int j = 1; j <= q.n; ++j) target[j - 1] = q.nu.at(q.n - j);
  for (auto& t : enumerate_ssyt(shape, q.n, target))
    if (is_anti_yamanouchi(row_word(t), q.n)) out.push_back(std::move(t));
  return out;
}

long long lr_coefficient(const LRQuery& q) {
  long long lc = static_cast<long long>(lowest_companions(q).size());
  long long hl = static_cast<long long>(hl_tableaux(q).size());
  if (lc != hl) throw std::logic_error("lr_coefficient: companion and LR counts disagree");
#ifndef NDEBUG
  if (q.variant == LRVariant::GL) {
    long long hc = static_cast<long long>(highest_companions(q).size());
    long long ll = static_cast<long long>(lowest_lr(q).size());
    if (hc != lc || ll != lc)
      throw std::logic_error("lr_coefficient: four tableau families disagree");
  }
#endif
  return lc;
}

namespace {

// Shared transpose step: entry i in row j on one side becomes entry j in row
// i on the other; rows are the sorted multisets poured into `shape`.
Tableau transpose_filling(const Tableau& t, const SkewShape& shape) {
  int n = shape.ambient();
  std::vector<std::vector<int>> target(n);
  for (int r = 1; r <= static_cast<int>(t.rows.size()); ++r)
    for (int e : t.rows[r - 1]) {
      if (e < 1 || e > n) throw std::invalid_argument("transpose: entry out of range");
      target[e - 1].push_back(r);
    }
  std::vector<std::vector<int>> rows(n);
  for (int r = 1; r <= n; ++r) {
    if (static_cast<int>(target[r - 1].size()) != std::max(0, shape.row_len(r)))
      throw std::invalid_argument("transpose: filling does not fit the target shape");
    std::sort(target[r - 1].begin(), target[r - 1].end());
    rows[r - 1] = std::move(target[r - 1]);
  }
  return make_tableau(shape, std::move(rows));
}

}  // namespace

Tableau companion_to_lr(const Tableau& t, const LRQuery& query) {
  NormQuery q = normalize(query);
  return transpose_filling(t, pi_rotate(skew_shape(q.lambda, q.mu)));
}

Tableau lr_to_companion(const Tableau& t, const LRQuery& query) {
  NormQuery q = normalize(query);
  return transpose_filling(t, straight_shape(q.nu));
}

long long rational_lr(const RationalShape& lambda, const RationalShape& mu,
                      const RationalShape& nu, int n) {
  RationalShape l = lambda, m = mu, v = nu;
  l.n = m.n = v.n = n;
  if (!l.valid() || !m.valid() || !v.valid())
    throw std::invalid_argument("rational_lr: invalid staircase shape");
  std::vector<int> wl = l.staircase_weight(), wm = m.staircase_weight();
  long long count = 0;
  for (const auto& t : enumerate_rational(v)) {
    std::vector<int> wt = weight(t);
    bool ok = true;
    for (int j = 1; j <= n && ok; ++j)
      if (wt[j - 1] != wl[n - j] - wm[n - j]) ok = false;
    if (!ok) continue;
    std::vector<int> w = row_word(t);
    for (int i = 1; i < n && ok; ++i)
      if (wm[i - 1] - wm[i] < eps_phi(w, n - i).second) ok = false;
    if (ok) ++count;
  }
  return count;
}

}  // namespace lrc
