#pragma once

#include "lrcrystal/tableau.hpp"

namespace lrc {

// Bump an unbarred letter into a straight-shape tableau.
Tableau row_insert(const Tableau& t, int x);
// P(w): the unique straight tableau whose word is Knuth equivalent to w.
Tableau insertion_tableau(const std::vector<int>& w, int n);
// Jeu-de-taquin slides to straight shape; inner corners are consumed in a
// fixed topmost-then-leftmost scan order.
Tableau rectify(const Tableau& t);

enum class ProductMethod { ConcatWord, Insert, StarRect };

// The plactic product; all three constructions agree.
Tableau product(const Tableau& t1, const Tableau& t2, ProductMethod method);

bool knuth_equivalent(const std::vector<int>& w1, const std::vector<int>& w2, int n);
// Equality of the nonempty-row fillings (ambient row counts may differ).
bool same_filling(const Tableau& a, const Tableau& b);

}  // namespace lrc
