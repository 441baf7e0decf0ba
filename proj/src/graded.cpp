#include "lrcrystal/graded.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lrc {

void GradedPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

long long GradedPoly::at_one() const { return std::accumulate(c.begin(), c.end(), 0LL); }

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
  for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
  normalize();
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly out;
  if (a.c.empty() || b.c.empty()) return out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  out.normalize();
  return out;
}

GradedPoly GradedPoly::truncated(int max_degree) const {
  GradedPoly out = *this;
  if (static_cast<int>(out.c.size()) > max_degree + 1) out.c.resize(max_degree + 1);
  out.normalize();
  return out;
}

std::string GradedPoly::str() const {
  if (c.empty()) return "0";
  std::string out;
  for (int d = 0; d < static_cast<int>(c.size()); ++d) {
    if (c[d] == 0) continue;
    if (!out.empty()) out += " + ";
    if (d == 0) {
      out += std::to_string(c[d]);
    } else {
      if (c[d] != 1) out += std::to_string(c[d]);
      out += (d == 1) ? "q" : "q^" + std::to_string(d);
    }
  }
  return out;
}

GradedPoly monomial(int degree, long long coeff) {
  GradedPoly p;
  p.c.assign(degree + 1, 0);
  p.c[degree] = coeff;
  p.normalize();
  return p;
}

GradedPoly hilbert_series_inverse(int n) {
  GradedPoly prod = monomial(0);
  for (int i = 1; i <= n; ++i) {
    GradedPoly f = monomial(0);
    f += monomial(i, -1);
    prod = prod * f;
  }
  return prod;
}

namespace {

int ceil_even(int x) { return x + (x % 2); }

void require_zero_weight(const Tableau& t, const SymPair& p) {
  KSpec k = pair_kspec(p);
  std::vector<int> mwt = m_weight(t, k);
  for (int v : mwt)
    if (v != 0) throw std::invalid_argument("d_statistic: nonzero M-weight input");
}

}  // namespace

long long d_statistic(const Tableau& t, const SymPair& p) {
  require_zero_weight(t, p);
  std::vector<int> phis = phi_vector(t);
  switch (p.kind) {
    case PairKind::O: {
      int n = p.n;
      long long tot = t.shape.outer.size();
      for (int i = 1; i < n; ++i) tot += static_cast<long long>(n - i) * ceil_even(phis[i - 1]);
      if (tot % 2 != 0) throw std::logic_error("d_statistic: odd total for the O pair");
      return tot / 2;
    }
    case PairKind::GL: {
      int n = p.n;
      long long tot = 0;
      for (int i = 1; i < n; ++i) tot += static_cast<long long>(n - i) * phis[i - 1];
      return tot;
    }
    case PairKind::Sp: {
      int n = p.n;
      for (int i = 1; i <= n; ++i)
        if (phis[2 * i - 2] != 0)
          throw std::logic_error("d_statistic: odd-index phi does not vanish");
      long long tot = t.shape.outer.size();
      for (int i = 1; i < n; ++i) tot += static_cast<long long>(2 * n - 2 * i) * phis[2 * i - 1];
      if (tot % 2 != 0) throw std::logic_error("d_statistic: odd total for the Sp pair");
      return tot / 2;
    }
  }
  throw std::logic_error("d_statistic: unknown pair");
}

namespace {

GradedPoly sum_degrees(const std::vector<Tableau>& zs, const SymPair& p, bool parallel) {
  std::vector<long long> degs(zs.size(), 0);
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(zs.size()); ++i)
      degs[i] = d_statistic(zs[i], p);
  } else {
    for (size_t i = 0; i < zs.size(); ++i) degs[i] = d_statistic(zs[i], p);
  }
  GradedPoly out;
  for (long long d : degs) {
    if (static_cast<long long>(out.c.size()) <= d) out.c.resize(d + 1, 0);
    ++out.c[d];
  }
  out.normalize();
  return out;
}

}  // namespace

GradedPoly graded_multiplicity(const Partition& nu, const SymPair& p) {
  return sum_degrees(zero_weight_tableaux(nu, pair_kspec(p)), p, true);
}

GradedPoly graded_multiplicity(const RationalShape& nu, const SymPair& p) {
  return sum_degrees(zero_weight_tableaux(nu, pair_kspec(p)), p, true);
}

GradedPoly graded_multiplicity_serial(const Partition& nu, const SymPair& p) {
  return sum_degrees(zero_weight_tableaux(nu, pair_kspec(p)), p, false);
}

GradedPoly graded_multiplicity_serial(const RationalShape& nu, const SymPair& p) {
  return sum_degrees(zero_weight_tableaux(nu, pair_kspec(p)), p, false);
}

GradedPoly degree_one_multiplicity(const SymPair& p) {
  switch (p.kind) {
    case PairKind::O: {
      std::vector<int> parts(p.n, 0);
      parts[0] = 2;
      return graded_multiplicity(Partition(parts), p);
    }
    case PairKind::Sp: {
      std::vector<int> parts(2 * p.n, 0);
      parts[0] = parts[1] = 1;
      return graded_multiplicity(Partition(parts), p);
    }
    case PairKind::GL: {
      Partition one{{1}};
      return graded_multiplicity(RationalShape{one, one, p.n}, p);
    }
  }
  throw std::logic_error("degree_one_multiplicity: unknown pair");
}

Partition mu_min(const Tableau& t, const SymPair& p) {
  std::vector<int> phis = phi_vector(t);
  switch (p.kind) {
    case PairKind::O: {
      std::vector<int> parts(p.n, 0);
      for (int i = 1; i < p.n; ++i)
        for (int j = 1; j <= p.n - i; ++j) parts[j - 1] += ceil_even(phis[i - 1]);
      return Partition(parts);
    }
    case PairKind::GL: {
      std::vector<int> parts(p.n, 0);
      for (int i = 1; i < p.n; ++i)
        for (int j = 1; j <= p.n - i; ++j) parts[j - 1] += phis[i - 1];
      return Partition(parts);
    }
    case PairKind::Sp: {
      std::vector<int> parts(2 * p.n, 0);
      for (int i = 1; i < p.n; ++i)
        for (int j = 1; j <= 2 * p.n - 2 * i; ++j) parts[j - 1] += phis[2 * i - 1];
      return Partition(parts);
    }
  }
  throw std::logic_error("mu_min: unknown pair");
}

Partition lambda_min(const Tableau& t, const SymPair& p) {
  Partition mu = mu_min(t, p);
  std::vector<int> wt = weight(t);
  int rank = gl_rank(p);
  std::vector<int> parts(rank, 0);
  for (int j = 1; j <= rank; ++j) parts[j - 1] = mu.at(j - 1) + wt[rank - j];
  Partition out(parts);
  if (!out.valid()) throw std::logic_error("lambda_min: result is not a partition");
  return out;
}

namespace {

GradedPoly branching_series(const Partition& nu, const SymPair& p, int D) {
  int rank = gl_rank(p);
  GradedPoly lhs;
  lhs.c.assign(D + 1, 0);
  for (int d = 0; d <= D; ++d) {
    auto lams = enumerate_partitions(2 * d, rank, pair_monoid(p));
    long long acc = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : acc)
    for (long long i = 0; i < static_cast<long long>(lams.size()); ++i)
      acc += branch_multiplicity(lams[i], nu, p);
    lhs.c[d] = acc;
  }
  lhs.normalize();
  return lhs;
}

GradedPoly branching_series(const RationalShape& nu, const SymPair& p, int D) {
  int n = p.n;
  GradedPoly lhs;
  lhs.c.assign(D + 1, 0);
  for (int d = 0; d <= D; ++d) {
    auto lams = enumerate_partitions(d, n, Monoid::All);
    long long acc = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : acc)
    for (long long i = 0; i < static_cast<long long>(lams.size()); ++i) {
      RationalShape dual{Partition{}, lams[i], n};   // -w0(lambda)
      RationalShape plain{lams[i], Partition{}, n};  // lambda itself
      acc += branch_gl2_to_gl(dual, plain, nu, n);
    }
    lhs.c[d] = acc;
  }
  lhs.normalize();
  return lhs;
}

}  // namespace

bool series_identity_check(const Partition& nu, const SymPair& p, int D) {
  if (p.kind == PairKind::GL)
    return series_identity_check(RationalShape{nu, Partition{}, p.n}, p, D);
  GradedPoly lhs = branching_series(reambient(nu, gl_rank(p)), p, D);
  GradedPoly rhs = graded_multiplicity(nu, p);
  return (lhs * hilbert_series_inverse(p.n)).truncated(D) == rhs.truncated(D);
}

bool series_identity_check(const RationalShape& nu, const SymPair& p, int D) {
  if (p.kind != PairKind::GL)
    throw std::invalid_argument("series_identity_check: rational nu needs the GL pair");
  GradedPoly lhs = branching_series(nu, p, D);
  GradedPoly rhs = graded_multiplicity(nu, p);
  return (lhs * hilbert_series_inverse(p.n)).truncated(D) == rhs.truncated(D);
}

std::vector<std::vector<GradedPoly>> so4_table(int max_i, int max_j) {
  SymPair o4{PairKind::O, 4};
  std::vector<std::vector<GradedPoly>> table(max_i + 1,
                                             std::vector<GradedPoly>(max_j + 1));
  for (int i = 0; i <= max_i; ++i)
    for (int j = 0; j <= max_j; ++j) {
      if (i == j) {
        GradedPoly entry = graded_multiplicity(Partition{{2 * i, 0, 0, 0}}, o4);
        if (i > 0) entry += graded_multiplicity(Partition{{2 * i, 1, 1, 0}}, o4);
        table[i][j] = entry;
      } else {
        int a = std::min(i, j), b = std::max(i, j);
        table[i][j] = graded_multiplicity(Partition{{a + b, b - a, 0, 0}}, o4);
      }
    }
  return table;
}

}  // namespace lrc
