#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lrcrystal/oracle.hpp"
#include "lrcrystal/tableau.hpp"

using namespace lrc;

namespace {

Partition P(std::vector<int> v) { return Partition{std::move(v)}; }
using Rows = std::vector<std::vector<int>>;

Tableau straight(const Partition& lam, int n, Rows rows) {
  rows.resize(n);
  return make_tableau(straight_shape(reambient(lam, n)), std::move(rows));
}

// The sub-tableau of entries <= cap, as a straight tableau at rank cap.
Tableau support(const Tableau& t, int cap) {
  Rows rows;
  std::vector<int> outer;
  for (const auto& row : t.rows) {
    std::vector<int> kept;
    for (int e : row)
      if (e <= cap) kept.push_back(e);
    outer.push_back(static_cast<int>(kept.size()));
    rows.push_back(std::move(kept));
  }
  std::sort(outer.begin(), outer.end(), std::greater<>());
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return make_tableau(straight_shape(Partition{outer}), rows);
}

}  // namespace

TEST_CASE("row word") {
  Tableau t = make_tableau(skew_shape(P({5, 4, 4, 2, 0}), P({3, 1, 0, 0, 0})),
                           {{2, 5}, {1, 3, 3}, {2, 3, 4, 4}, {4, 4}, {}});
  CHECK(row_word(t) == std::vector<int>{4, 4, 2, 3, 4, 4, 1, 3, 3, 2, 5});
  CHECK(row_word(empty_tableau(3)).empty());

  Tableau s = make_rational_tableau(RationalShape{P({3, 2}), P({3, 1}), 5},
                                    {{1, 4, 5}, {2, 5}}, {{3, 4, 5}, {5}});
  CHECK(row_word(s) == std::vector<int>{-5, -4, -3, -5, 2, 5, 1, 4, 5});
  CHECK(s.rows == Rows{{1, 4, 5}, {2, 5}, {}, {-5}, {-5, -4, -3}});
}

TEST_CASE("weight") {
  Tableau t = straight(P({4, 2, 1}), 5, {{1, 3, 3, 4}, {3, 4}, {5}});
  CHECK(weight(t) == std::vector<int>{1, 0, 3, 2, 1});

  Tableau s = make_rational_tableau(RationalShape{P({3, 2}), P({3, 1}), 5},
                                    {{1, 4, 5}, {2, 5}}, {{3, 4, 5}, {5}});
  CHECK(weight(s) == std::vector<int>{1, 1, -1, 0, 0});
}

TEST_CASE("highest and lowest tableaux") {
  Partition lam = P({4, 2, 1, 0, 0});
  CHECK(highest_tableau(straight_shape(lam)).rows ==
        Rows{{1, 1, 1, 1}, {2, 2}, {3}, {}, {}});
  CHECK(lowest_tableau(straight_shape(lam)).rows ==
        Rows{{3, 4, 5, 5}, {4, 5}, {5}, {}, {}});
  CHECK(highest_tableau(pi_rotate(lam)).rows ==
        Rows{{}, {}, {1}, {1, 2}, {1, 1, 2, 3}});
  CHECK(lowest_tableau(pi_rotate(lam)).rows ==
        Rows{{}, {}, {3}, {4, 4}, {5, 5, 5, 5}});
  CHECK(weight(highest_tableau(straight_shape(lam))) == lam.parts);
  CHECK(weight(lowest_tableau(straight_shape(lam))) ==
        std::vector<int>{0, 0, 1, 2, 4});

  RationalShape rs{P({3, 2}), P({3, 1}), 5};
  CHECK(highest_tableau(rs).rows ==
        Rows{{1, 1, 1}, {2, 2}, {}, {-5}, {-5, -5, -4}});
  CHECK(lowest_tableau(rs).rows ==
        Rows{{4, 4, 5}, {5, 5}, {}, {-2}, {-1, -1, -1}});
}

TEST_CASE("ssyt enumeration") {
  CHECK(enumerate_ssyt(straight_shape(P({2, 1})), 2).size() == 2);
  CHECK(enumerate_ssyt(straight_shape(P({1, 0, 0})), 3).size() == 3);
  // target weight filter
  auto zs = enumerate_ssyt(straight_shape(P({2, 1, 0})), 3,
                           std::vector<int>{1, 1, 1});
  CHECK(zs.size() == 2);
  // sorted and duplicate-free by row word
  auto all = enumerate_ssyt(straight_shape(P({3, 1, 0})), 3);
  for (size_t i = 0; i + 1 < all.size(); ++i)
    CHECK(row_word(all[i]) < row_word(all[i + 1]));
}

TEST_CASE("rational enumeration satisfies the flag condition") {
  RationalShape rs{P({1, 0, 0}), P({1, 0, 0}), 3};
  auto elems = enumerate_rational(rs);
  // staircase of the adjoint of GL_3: 9 - 1 = 8 tableaux
  CHECK(elems.size() == 8);
  for (const auto& t : elems) {
    // (1-bar, 1) filling is excluded by the flag condition
    CHECK(!(plus_part(t).rows[0] == std::vector<int>{1} &&
            minus_part(t).rows[0] == std::vector<int>{1}));
  }
}

TEST_CASE("k-tableau predicates") {
  CHECK(is_k_tableau(straight(P({2, 1}), 4, {{1, 1}, {3}}), KSpec{KClass::SpBallot, 4}));
  CHECK(is_k_tableau(straight(P({2, 2}), 4, {{2, 2}, {4, 4}}), KSpec{KClass::O, 4}));
  CHECK(!is_k_tableau(straight(P({2, 2}), 4, {{1, 1}, {2, 2}}), KSpec{KClass::O, 4}));
  Tableau s = make_rational_tableau(RationalShape{P({3, 2}), P({3, 1}), 5},
                                    {{1, 4, 5}, {2, 5}}, {{3, 4, 5}, {5}});
  CHECK(is_k_tableau(s, KSpec{KClass::GLrat, 5}));
}

TEST_CASE("in_khat") {
  CHECK(in_khat(P({4, 1, 1, 0}), KSpec{KClass::O, 4}));
  CHECK(!in_khat(P({2, 2, 1, 0}), KSpec{KClass::O, 4}));
  CHECK(in_khat(P({2, 1, 0, 0}), KSpec{KClass::SpH, 4}));
  CHECK(!in_khat(P({1, 1, 1, 0}), KSpec{KClass::SpH, 4}));
}

TEST_CASE("m-weights") {
  CHECK(m_weight(straight(P({2, 1}), 4, {{1, 1}, {3}}), KSpec{KClass::SpBallot, 4}) ==
        std::vector<int>{2, 1});
  CHECK(m_weight(straight(P({2, 2}), 4, {{2, 2}, {4, 4}}), KSpec{KClass::O, 4}) ==
        std::vector<int>{0, 0, 0, 0});
  Tableau s = make_rational_tableau(RationalShape{P({1}), P({1}), 3}, {{2}}, {{2}});
  CHECK(m_weight(s, KSpec{KClass::GLrat, 3}) == std::vector<int>{0, 0, 0});
}

TEST_CASE("Sp ballot family for (2,1)") {
  auto ballot = k_tableaux(P({2, 1, 0, 0}), KSpec{KClass::SpBallot, 4});
  REQUIRE(ballot.size() == 4);
  std::set<Rows> fillings;
  std::multiset<std::vector<int>> mwts;
  for (const auto& t : ballot) {
    fillings.insert({t.rows[0], t.rows[1]});
    mwts.insert(m_weight(t, KSpec{KClass::SpBallot, 4}));
  }
  CHECK(fillings == std::set<Rows>{{{1, 1}, {3}}, {{1, 3}, {3}}, {{1, 3}, {4}}, {{3, 3}, {4}}});
  CHECK(mwts == std::multiset<std::vector<int>>{{2, 1}, {1, 2}, {1, 0}, {0, 1}});
  CHECK(dim_k(P({2, 1, 0, 0}), KSpec{KClass::SpH, 4}) == 16);
}

TEST_CASE("zero weight tableaux") {
  auto o2 = zero_weight_tableaux(P({2, 0, 0, 0}), KSpec{KClass::O, 4});
  REQUIRE(o2.size() == 3);
  std::set<std::vector<int>> first_rows;
  for (const auto& t : o2) first_rows.insert(t.rows[0]);
  CHECK(first_rows == std::set<std::vector<int>>{{2, 2}, {3, 3}, {4, 4}});

  auto hook = zero_weight_tableaux(P({4, 1, 1, 0}), KSpec{KClass::O, 4});
  REQUIRE(hook.size() == 1);
  CHECK(hook[0].rows == Rows{{2, 2, 3, 4}, {3}, {4}, {}});

  auto sq = zero_weight_tableaux(P({2, 2, 0, 0}), KSpec{KClass::O, 4});
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].rows[1] == std::vector<int>{4, 4});
  CHECK(sq[1].rows[1] == std::vector<int>{4, 4});

  CHECK(zero_weight_tableaux(P({1, 0, 0}), KSpec{KClass::O, 3}).empty());
  CHECK(zero_weight_tableaux(P({1, 1, 1, 0}), KSpec{KClass::O, 4}).empty());
}

TEST_CASE("m-polynomials") {
  auto mp = m_polynomial(P({0, 0}), KSpec{KClass::O, 2});
  CHECK(mp == std::map<std::vector<int>, long long>{{{0, 0}, 1}});
  auto box = m_polynomial(P({1, 0}), KSpec{KClass::O, 2});
  CHECK(box == std::map<std::vector<int>, long long>{{{1, 0}, 1}, {{0, 1}, 1}});
  auto sp = m_polynomial(P({2, 1, 0, 0}), KSpec{KClass::SpBallot, 4});
  CHECK(sp.size() == 4);
  for (const auto& [d, c] : sp) CHECK(c == 1);
}

TEST_CASE("dim_k") {
  CHECK(dim_k(P({1, 0, 0, 0}), KSpec{KClass::O, 4}) == 4);
  CHECK(dim_k(P({0, 0, 0}), KSpec{KClass::O, 3}) == 1);
  CHECK(dim_k(RationalShape{P({0}), P({0}), 3}, KSpec{KClass::GLrat, 3}) == 1);
  // adjoint of GL_3 has dimension 8 as a staircase crystal
  CHECK(dim_k(RationalShape{P({1}), P({1}), 3}, KSpec{KClass::GLrat, 3}) == 8);
}

TEST_CASE("restriction property for O") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= 6; ++k)
      for (const auto& nu : enumerate_partitions(k, n, Monoid::All))
        for (const auto& t : enumerate_ssyt(straight_shape(nu), n)) {
          bool full = in_khat(nu, KSpec{KClass::O, n}) &&
                      is_k_tableau(t, KSpec{KClass::O, n});
          bool restricted = true;
          for (int i = 1; i <= n && restricted; ++i) {
            Tableau sub = support(t, i);
            Partition shape = sub.shape.outer;
            restricted = in_khat(reambient(shape, i), KSpec{KClass::O, i}) &&
                         is_k_tableau(sub, KSpec{KClass::O, i});
          }
          CHECK(full == restricted);
        }
}

TEST_CASE("SpH equals the row bound characterization") {
  for (int n = 1; 2 * n <= 6; ++n)
    for (int k = 0; k <= 6; ++k)
      for (const auto& nu : enumerate_partitions(k, 2 * n, Monoid::All)) {
        if (!in_khat(nu, KSpec{KClass::SpH, 2 * n})) continue;
        for (const auto& t : enumerate_ssyt(straight_shape(nu), 2 * n)) {
          bool rows_ok = true;
          for (int r = 1; r <= nu.length(); ++r)
            for (int e : t.rows[r - 1])
              if (e < 2 * r - 1) rows_ok = false;
          CHECK(is_k_tableau(t, KSpec{KClass::SpH, 2 * n}) == rows_ok);
        }
      }
}

TEST_CASE("GL m-polynomial of a polynomial shape is the Schur expansion") {
  for (int k = 0; k <= 4; ++k)
    for (const auto& lam : enumerate_partitions(k, 3, Monoid::All)) {
      auto mp = m_polynomial(RationalShape{lam, P({0, 0, 0}), 3},
                             KSpec{KClass::GLrat, 3});
      auto schur = schur_polynomial(lam, 3);
      CHECK(std::map<std::vector<int>, long long>(mp.begin(), mp.end()) == schur);
    }
}

TEST_CASE("Sp m-polynomial weighted by SL2 dimensions counts SpH tableaux") {
  for (int k = 0; k <= 4; ++k)
    for (const auto& nu : enumerate_partitions(k, 4, Monoid::All)) {
      if (!in_khat(nu, KSpec{KClass::SpH, 4})) continue;
      long long total = 0;
      for (const auto& [delta, c] : m_polynomial(nu, KSpec{KClass::SpBallot, 4})) {
        long long dim = 1;
        for (int d : delta) dim *= d + 1;
        total += c * dim;
      }
      CHECK(total == dim_k(nu, KSpec{KClass::SpH, 4}));
    }
}
