#include "lrcrystal/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lrcrystal/graded.hpp"
#include "lrcrystal/plactic.hpp"

namespace lrc {

Monomials schur_polynomial(const Partition& lambda, int n) {
  Monomials out;
  for (const auto& t : enumerate_ssyt(straight_shape(reambient(lambda, n)), n))
    ++out[weight(t)];
  return out;
}

Monomials poly_mul(const Monomials& a, const Monomials& b) {
  Monomials out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Monomials poly_sub(Monomials a, const Monomials& b, long long scale) {
  for (const auto& [e, c] : b) {
    a[e] -= scale * c;
    if (a[e] == 0) a.erase(e);
  }
  return a;
}

bool is_symmetric(const Monomials& f, int n) {
  for (const auto& [e, c] : f)
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<int> s = e;
      std::swap(s[i], s[i + 1]);
      auto it = f.find(s);
      if (it == f.end() || it->second != c) return false;
    }
  return true;
}

std::map<Partition, long long> decompose_into_schur(const Monomials& f, int n) {
  if (!is_symmetric(f, n))
    throw std::invalid_argument("decompose_into_schur: input is not symmetric");
  std::map<Partition, long long> out;
  Monomials work = f;
  while (!work.empty()) {
    auto it = std::prev(work.end());  // lexicographically largest exponent
    std::vector<int> e = it->first;
    long long c = it->second;
    for (size_t i = 0; i + 1 < e.size(); ++i)
      if (e[i] < e[i + 1])
        throw std::logic_error("decompose_into_schur: leading exponent is not a partition");
    if (c < 0) throw std::logic_error("decompose_into_schur: negative coefficient");
    Partition lam{e};
    work = poly_sub(std::move(work), schur_polynomial(lam, n), c);
    out[lam] = c;
  }
  return out;
}

long long weyl_dimension(const Partition& lambda, int n) {
  Partition l = reambient(lambda, n);
  long long num = 1, den = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= l.at(i - 1) - l.at(j - 1) + j - i;
      den *= j - i;
      long long g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  if (den != 1) throw std::logic_error("weyl_dimension: non-integral result");
  return num;
}

namespace {

void run(VerifyReport& rep, const std::string& name, bool ok) {
  (ok ? rep.passed : rep.failed).push_back(name);
}

bool check_lr_vs_schur(int max_size, int max_rank) {
  for (int n = 1; n <= max_rank; ++n)
    for (int s1 = 0; s1 <= max_size; ++s1)
      for (const auto& mu : enumerate_partitions(s1, n, Monoid::All))
        for (int s2 = 0; s2 + s1 <= max_size; ++s2)
          for (const auto& nu : enumerate_partitions(s2, n, Monoid::All)) {
            auto coeffs =
                decompose_into_schur(poly_mul(schur_polynomial(mu, n), schur_polynomial(nu, n)), n);
            for (const auto& lam : enumerate_partitions(s1 + s2, n, Monoid::All)) {
              long long want = 0;
              if (auto it = coeffs.find(lam); it != coeffs.end()) want = it->second;
              if (lr_coefficient(LRQuery{lam, mu, nu, n, LRVariant::GL}) != want) return false;
            }
          }
  return true;
}

bool check_dimension_sum(int max_size, int max_o_rank, int max_sp_rank) {
  std::vector<SymPair> pairs;
  for (int n = 1; n <= max_o_rank; ++n) pairs.push_back({PairKind::O, n});
  for (int n = 1; 2 * n <= max_sp_rank; ++n) pairs.push_back({PairKind::Sp, n});
  for (const auto& p : pairs) {
    int rank = gl_rank(p);
    for (int s = 0; s <= max_size; ++s)
      for (const auto& lam : enumerate_partitions(s, rank, Monoid::All)) {
        long long total = 0;
        for (const auto& [nu, m] : branch_decompose(lam, p))
          total += m * dim_k(nu, pair_kspec(p));
        long long want =
            static_cast<long long>(enumerate_ssyt(straight_shape(lam), rank).size());
        if (total != want) return false;
      }
  }
  return true;
}

bool check_series(int max_nu, int D, bool full) {
  std::vector<SymPair> pairs = {{PairKind::O, 3}, {PairKind::Sp, 2}};
  if (full) pairs.push_back({PairKind::O, 4});
  for (const auto& p : pairs) {
    int rank = gl_rank(p);
    for (int s = 0; s <= max_nu; ++s)
      for (const auto& nu : enumerate_partitions(s, rank, Monoid::All)) {
        if (!in_khat(nu, pair_kspec(p))) continue;
        if (!series_identity_check(nu, p, D)) return false;
      }
  }
  std::vector<int> gl_ranks = full ? std::vector<int>{2, 3} : std::vector<int>{2};
  for (int n : gl_ranks) {
    SymPair p{PairKind::GL, n};
    for (int sp = 0; sp <= max_nu; ++sp)
      for (const auto& plus : enumerate_partitions(sp, n, Monoid::All))
        for (int sm = 0; sp + sm <= max_nu; ++sm)
          for (const auto& minus : enumerate_partitions(sm, n, Monoid::All)) {
            RationalShape nu{plus, minus, n};
            if (!nu.valid()) continue;
            if (!series_identity_check(nu, p, D)) return false;
          }
  }
  return true;
}

bool check_rjk(int max_size, int max_rank) {
  for (int n = 1; n <= max_rank; ++n)
    for (int s = 0; s <= max_size; ++s)
      for (const auto& nu : enumerate_partitions(s, n, Monoid::All)) {
        bool in_hat = in_khat(nu, KSpec{KClass::O, n});
        for (const auto& t : enumerate_ssyt(straight_shape(nu), n)) {
          bool o_tab = in_hat && is_k_tableau(t, KSpec{KClass::O, n});
          if (is_rjk(t, n) != o_tab) return false;
          if (is_jk(rotate_complement(t), n) != o_tab) return false;
        }
      }
  return true;
}

bool check_products(int max_total, int rank) {
  for (int s1 = 0; s1 <= max_total; ++s1)
    for (const auto& l1 : enumerate_partitions(s1, rank, Monoid::All))
      for (const auto& t1 : enumerate_ssyt(straight_shape(l1), rank))
        for (int s2 = 0; s1 + s2 <= max_total; ++s2)
          for (const auto& l2 : enumerate_partitions(s2, rank, Monoid::All))
            for (const auto& t2 : enumerate_ssyt(straight_shape(l2), rank)) {
              Tableau a = product(t1, t2, ProductMethod::ConcatWord);
              Tableau b = product(t1, t2, ProductMethod::Insert);
              Tableau c = product(t1, t2, ProductMethod::StarRect);
              if (!same_filling(a, b) || !same_filling(a, c)) return false;
            }
  return true;
}

}  // namespace

VerifyReport verify_all(bool full) {
  VerifyReport rep;
  run(rep, "lr-coefficients-vs-schur-oracle", check_lr_vs_schur(full ? 6 : 4, full ? 4 : 3));
  run(rep, "branching-dimension-sum", check_dimension_sum(full ? 6 : 4, full ? 4 : 3, full ? 4 : 2));
  run(rep, "series-factorization", check_series(full ? 4 : 2, full ? 6 : 4, full));
  run(rep, "rjk-tableau-equality", check_rjk(full ? 6 : 4, full ? 4 : 3));
  run(rep, "product-construction-agreement", check_products(full ? 5 : 4, 3));
  return rep;
}

}  // namespace lrc
