#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lrcrystal/crystal.hpp"
#include "lrcrystal/lr.hpp"
#include "lrcrystal/oracle.hpp"

using namespace lrc;

namespace {

Partition P(std::vector<int> v) { return Partition{std::move(v)}; }
using Rows = std::vector<std::vector<int>>;

Tableau straight(const Partition& lam, int n, Rows rows) {
  rows.resize(n);
  return make_tableau(straight_shape(reambient(lam, n)), std::move(rows));
}

bool contains_filling(const std::vector<Tableau>& ts, const Rows& nonempty) {
  return std::any_of(ts.begin(), ts.end(), [&](const Tableau& t) {
    Rows rows;
    for (const auto& r : t.rows)
      if (!r.empty()) rows.push_back(r);
    return rows == nonempty;
  });
}

std::set<Rows> fillings(const std::vector<Tableau>& ts) {
  std::set<Rows> out;
  for (const auto& t : ts) out.insert(t.rows);
  return out;
}

}  // namespace

TEST_CASE("lowest companions golden") {
  LRQuery q{P({4, 4, 2, 1, 0}), P({3, 1, 0, 0, 0}), P({4, 2, 1, 0, 0}), 5, LRVariant::GL};
  auto lc = lowest_companions(q);
  CHECK(contains_filling(lc, {{2, 3, 4, 4}, {3, 5}, {4}}));
  CHECK(lc.size() == lr_coefficient(q));

  LRQuery triv{P({2, 1, 0}), P({2, 1, 0}), P({0, 0, 0}), 3, LRVariant::GL};
  auto e = lowest_companions(triv);
  REQUIRE(e.size() == 1);
  CHECK(e[0].shape.cells() == 0);
}

TEST_CASE("O variant excludes the n=4 tableau") {
  Partition lam = P({7, 3, 3, 3}), mu = P({2, 2, 2, 0}), nu = P({5, 3, 1, 1});
  CHECK(lowest_companions(LRQuery{lam, mu, nu, 4, LRVariant::O}).empty());
  CHECK(hl_tableaux(LRQuery{lam, mu, nu, 4, LRVariant::O}).empty());

  // the unique GL_4 LR tableau and its companion, as displayed
  auto gl = hl_tableaux(LRQuery{lam, mu, nu, 4, LRVariant::GL});
  REQUIRE(gl.size() == 1);
  CHECK(gl[0].rows == Rows{{1, 1, 1}, {2}, {3}, {1, 1, 2, 2, 4}});
  auto comp = lowest_companions(LRQuery{lam, mu, nu, 4, LRVariant::GL});
  REQUIRE(comp.size() == 1);
  CHECK(comp[0].rows == Rows{{1, 1, 1, 4, 4}, {2, 4, 4}, {3}, {4}});

  CHECK(lr_coefficient(LRQuery{lam, mu, nu, 5, LRVariant::O}) == 0);
  for (int n = 6; n <= 7; ++n) {
    LRQuery q{lam, mu, nu, n, LRVariant::O};
    CHECK(lr_coefficient(q) == 1);
  }
  auto stable = lowest_companions(LRQuery{lam, mu, nu, 6, LRVariant::O});
  REQUIRE(stable.size() == 1);
  CHECK(stable[0].rows == Rows{{3, 3, 3, 6, 6}, {4, 6, 6}, {5}, {6}, {}, {}});
}

TEST_CASE("Sp variant golden") {
  Partition lam = P({5, 4, 3, 2}), mu = P({2, 2, 1, 1}), nu = P({4, 3, 1, 0});
  CHECK(lr_coefficient(LRQuery{lam, mu, nu, 4, LRVariant::Sp}) == 0);
  CHECK(lr_coefficient(LRQuery{lam, mu, nu, 6, LRVariant::Sp}) == 1);

  auto gl = hl_tableaux(LRQuery{lam, mu, nu, 4, LRVariant::GL});
  CHECK(contains_filling(gl, {{1}, {1, 2}, {1, 2}, {1, 2, 3}}));
  auto comp = lowest_companions(LRQuery{lam, mu, nu, 4, LRVariant::GL});
  CHECK(contains_filling(comp, {{1, 2, 3, 4}, {2, 3, 4}, {4}}));
}

TEST_CASE("lr coefficient goldens") {
  CHECK(lr_coefficient(LRQuery{P({2, 2}), P({2, 0}), P({2, 0}), 2, LRVariant::GL}) == 1);
  CHECK(lr_coefficient(LRQuery{P({3, 2, 1}), P({0, 0, 0}), P({3, 2, 1}), 3, LRVariant::GL}) == 1);
  CHECK(lr_coefficient(LRQuery{P({3, 2, 1}), P({2, 1, 0}), P({2, 1, 0}), 3, LRVariant::GL}) == 2);
}

TEST_CASE("phi bijection golden pair") {
  LRQuery q{P({4, 4, 2, 1, 0}), P({3, 1, 0, 0, 0}), P({4, 2, 1, 0, 0}), 5, LRVariant::GL};
  Tableau comp = straight(P({4, 2, 1}), 5, {{2, 3, 4, 4}, {3, 5}, {4}});
  Tableau lr = companion_to_lr(comp, q);
  CHECK(lr.rows == Rows{{}, {1}, {1, 2}, {1, 1, 3}, {2}});
  CHECK(lr_to_companion(lr, q) == comp);
}

TEST_CASE("four tableau families have equal cardinality with bijections") {
  for (int n = 2; n <= 3; ++n)
    for (int s1 = 0; s1 <= 3; ++s1)
      for (const auto& mu : enumerate_partitions(s1, n, Monoid::All))
        for (int s2 = 0; s1 + s2 <= 5; ++s2)
          for (const auto& nu : enumerate_partitions(s2, n, Monoid::All))
            for (const auto& lam : enumerate_partitions(s1 + s2, n, Monoid::All)) {
              if (!contains(lam, mu)) continue;
              LRQuery q{lam, mu, nu, n, LRVariant::GL};
              auto lc = lowest_companions(q);
              auto hl = hl_tableaux(q);
              auto hc = highest_companions(q);
              auto ll = lowest_lr(q);
              REQUIRE(lc.size() == hl.size());
              REQUIRE(lc.size() == hc.size());
              REQUIRE(lc.size() == ll.size());

              // phi round-trips between companions and LR tableaux
              std::set<Rows> images;
              for (const auto& t : lc) {
                Tableau u = companion_to_lr(t, q);
                images.insert(u.rows);
                REQUIRE(lr_to_companion(u, q) == t);
              }
              CHECK(images == fillings(hl));

              // evacuation maps highest companions onto lowest companions
              std::set<Rows> evac;
              for (const auto& t : hc) evac.insert(evacuation(t).rows);
              CHECK(evac == fillings(lc));
            }
}

TEST_CASE("gl coefficients match the Schur oracle") {
  int n = 3;
  for (int s1 = 0; s1 <= 3; ++s1)
    for (const auto& mu : enumerate_partitions(s1, n, Monoid::All))
      for (int s2 = 0; s1 + s2 <= 5; ++s2)
        for (const auto& nu : enumerate_partitions(s2, n, Monoid::All)) {
          auto coeffs = decompose_into_schur(
              poly_mul(schur_polynomial(mu, n), schur_polynomial(nu, n)), n);
          for (const auto& lam : enumerate_partitions(s1 + s2, n, Monoid::All)) {
            long long want = coeffs.count(lam) ? coeffs.at(lam) : 0;
            CHECK(lr_coefficient(LRQuery{lam, mu, nu, n, LRVariant::GL}) == want);
          }
        }
}

TEST_CASE("rational coefficients") {
  int n = 3;
  RationalShape triv{P({0}), P({0}), n};
  RationalShape lam{P({2, 1}), P({1}), n};
  CHECK(rational_lr(lam, lam, triv, n) == 1);

  // polynomial rational shapes agree with classical coefficients
  LRQuery q{P({3, 2, 1}), P({2, 1, 0}), P({2, 1, 0}), 3, LRVariant::GL};
  CHECK(rational_lr(RationalShape{P({3, 2, 1}), P({}), n},
                    RationalShape{P({2, 1}), P({}), n},
                    RationalShape{P({2, 1}), P({}), n}, n) == 2);
  CHECK(lr_coefficient(q) == 2);
}

TEST_CASE("rational symmetries") {
  int n = 3;
  auto dual = [](const RationalShape& s) { return RationalShape{s.minus, s.plus, s.n}; };
  std::vector<RationalShape> shapes;
  for (int sp = 0; sp <= 2; ++sp)
    for (const auto& p : enumerate_partitions(sp, n, Monoid::All))
      for (int sm = 0; sp + sm <= 3; ++sm)
        for (const auto& m : enumerate_partitions(sm, n, Monoid::All)) {
          RationalShape s{p, m, n};
          if (s.valid()) shapes.push_back(s);
        }
  int checked = 0;
  for (const auto& lam : shapes)
    for (const auto& mu : shapes)
      for (const auto& nu : shapes) {
        if (lam.size() + mu.size() + nu.size() > 5) continue;
        long long c = rational_lr(lam, mu, nu, n);
        CHECK(c == rational_lr(lam, nu, mu, n));
        CHECK(c == rational_lr(dual(mu), dual(lam), nu, n));
        CHECK(c == rational_lr(dual(lam), dual(mu), dual(nu), n));
        checked += c > 0;
      }
  CHECK(checked > 0);

  // c^nu_{lambda* lambda} = c^lambda_{lambda nu}
  for (const auto& lam : shapes)
    for (const auto& nu : shapes) {
      if (lam.size() + nu.size() > 4) continue;
      CHECK(rational_lr(nu, dual(lam), lam, n) == rational_lr(lam, lam, nu, n));
    }
}
