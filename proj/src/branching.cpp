#include "lrcrystal/branching.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

int gl_rank(const SymPair& p) { return p.kind == PairKind::Sp ? 2 * p.n : p.n; }

Monoid pair_monoid(const SymPair& p) {
  switch (p.kind) {
    case PairKind::O:
      return Monoid::EvenRows;
    case PairKind::GL:
      return Monoid::All;
    case PairKind::Sp:
      return Monoid::EvenColumns;
  }
  throw std::logic_error("pair_monoid: unknown pair");
}

KSpec pair_kspec(const SymPair& p) {
  switch (p.kind) {
    case PairKind::O:
      return KSpec{KClass::O, p.n};
    case PairKind::GL:
      return KSpec{KClass::GLrat, p.n};
    case PairKind::Sp:
      return KSpec{KClass::SpH, 2 * p.n};
  }
  throw std::logic_error("pair_kspec: unknown pair");
}

namespace {

LRVariant pair_variant(const SymPair& p) {
  return p.kind == PairKind::O ? LRVariant::O : LRVariant::Sp;
}

}  // namespace

long long branch_multiplicity(const Partition& lambda, const Partition& nu, const SymPair& p) {
  if (p.kind == PairKind::GL)
    throw std::invalid_argument("branch_multiplicity: use branch_gl2_to_gl for the GL pair");
  int rank = gl_rank(p);
  Partition l = reambient(lambda, rank), v = reambient(nu, rank);
  if (!in_khat(v, pair_kspec(p)))
    throw std::invalid_argument("branch_multiplicity: nu is not a K-type");
  int k = l.size() - v.size();
  if (k < 0) return 0;
  long long total = 0;
  for (const auto& mu : enumerate_partitions(k, rank, pair_monoid(p), l))
    total += lr_coefficient(LRQuery{l, mu, v, rank, pair_variant(p)});
  return total;
}

std::map<Partition, long long> branch_decompose(const Partition& lambda, const SymPair& p) {
  int rank = gl_rank(p);
  Partition l = reambient(lambda, rank);
  KSpec k = pair_kspec(p);
  std::map<Partition, long long> out;
  for (int s = l.size(); s >= 0; --s)
    for (const auto& nu : enumerate_partitions(s, rank, Monoid::All, l)) {
      if (!in_khat(nu, k)) continue;
      long long m = branch_multiplicity(l, nu, p);
      if (m > 0) out[nu] = m;
    }
  return out;
}

long long branch_gl2_to_gl(const RationalShape& lambda1, const RationalShape& lambda2,
                           const RationalShape& nu, int n) {
  return rational_lr(nu, lambda1, lambda2, n);
}

long long stable_littlewood(const Partition& lambda, const Partition& nu, const SymPair& p) {
  int rank = gl_rank(p);
  Partition l = reambient(lambda, rank), v = reambient(nu, rank);
  bool stable = (p.kind == PairKind::O) ? 2 * l.length() <= p.n
              : (p.kind == PairKind::Sp) ? l.length() <= p.n
                                         : false;
  if (!stable) throw std::invalid_argument("stable_littlewood: stability hypothesis violated");
  int k = l.size() - v.size();
  if (k < 0) return 0;
  long long total = 0;
  for (const auto& mu : enumerate_partitions(k, rank, pair_monoid(p), l))
    total += lr_coefficient(LRQuery{l, mu, v, rank, LRVariant::GL});
  return total;
}

bool is_rjk(const Tableau& t, int n) {
  if (t.rational || t.shape.rotated || t.shape.inner.size() != 0)
    throw std::invalid_argument("is_rjk: straight tableau expected");
  std::vector<int> sigma, tau;
  for (int r = 1; r <= t.shape.ambient(); ++r) {
    if (t.shape.row_len(r) >= 1) sigma.push_back(t.rows[r - 1][0]);
    if (t.shape.row_len(r) >= 2) tau.push_back(t.rows[r - 1][1]);
  }
  int l1 = static_cast<int>(sigma.size());
  for (int j = 1; j <= static_cast<int>(tau.size()); ++j) {
    std::vector<bool> removed(n + 1, false);
    for (int i = j + 1; i <= l1; ++i)
      if (sigma[i - 1] <= n) removed[sigma[i - 1]] = true;
    int seen = 0, nj = -1;
    for (int v = j + 1; v <= n; ++v) {
      if (removed[v]) continue;
      if (++seen == j) {
        nj = v;
        break;
      }
    }
    if (nj < 0) return false;
    if (tau[j - 1] < nj) return false;
  }
  return true;
}

bool is_jk(const Tableau& t, int n) {
  if (t.rational || !t.shape.rotated)
    throw std::invalid_argument("is_jk: rotated tableau expected");
  int w = t.shape.width();
  std::vector<int> cnt(n + 2, 0);
  for (int r = 1; r <= t.shape.ambient(); ++r)
    for (int c = std::max(t.shape.row_begin(r), w - 1); c <= t.shape.row_end(r); ++c)
      ++cnt[t.rows[r - 1][c - t.shape.row_begin(r)]];
  int run = 0;
  for (int i = 1; i <= n; ++i) {
    run += cnt[n + 1 - i];
    if (run > i) return false;
  }
  return true;
}

}  // namespace lrc
