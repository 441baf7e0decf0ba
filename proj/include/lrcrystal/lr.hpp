#pragma once

#include "lrcrystal/crystal.hpp"
#include "lrcrystal/tableau.hpp"

namespace lrc {

enum class LRVariant { GL, O, Sp };

// The triple of c^lambda_{mu nu} and its orthogonal/symplectic variants.
// n is the GL rank (2n for the Sp variant); shapes are re-padded to n.
struct LRQuery {
  Partition lambda, mu, nu;
  int n = 0;
  LRVariant variant = LRVariant::GL;
};

// Companion tableaux T in B^nu with L^mu (x) T lowest (intersected with the
// K-tableaux for the O/Sp variants).
std::vector<Tableau> lowest_companions(const LRQuery& q);
// Skew tableaux on the rotated shape of lambda/mu, weight nu, Yamanouchi row
// word, filtered by the highlighted-box bounds for the O/Sp variants.
std::vector<Tableau> hl_tableaux(const LRQuery& q);
// Companion tableaux T in B^nu with T (x) H^mu highest (GL condition).
std::vector<Tableau> highest_companions(const LRQuery& q);
// Skew tableaux on lambda/mu of weight w0(nu) with anti-Yamanouchi row word.
std::vector<Tableau> lowest_lr(const LRQuery& q);

long long lr_coefficient(const LRQuery& q);

// The self-inverse bijection between companion and LR tableaux: an entry i in
// row j on one side becomes an entry j in row i on the other.
Tableau companion_to_lr(const Tableau& t, const LRQuery& q);
Tableau lr_to_companion(const Tableau& t, const LRQuery& q);

// Rational coefficient c^lambda_{mu nu} for staircase shapes at rank n.
long long rational_lr(const RationalShape& lambda, const RationalShape& mu,
                      const RationalShape& nu, int n);

}  // namespace lrc
