#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lrcrystal/tableau.hpp"

namespace lrc {

// A pure tensor x_1 (x) ... (x) x_k of words over the (possibly barred)
// alphabet of rank n; the word of a tensor is the concatenation.
struct CrystalElement {
  std::vector<std::vector<int>> segments;
  int n = 0;

  bool operator==(const CrystalElement&) const = default;
};

CrystalElement word_element(std::vector<int> w, int n);
CrystalElement tableau_element(const Tableau& t);
CrystalElement tensor(const CrystalElement& x, const CrystalElement& y);

// Signature rule: counts of surviving +'s (eps) and -'s (phi) for index i.
std::pair<int, int> eps_phi(const std::vector<int>& w, int i);
std::pair<int, int> eps_phi(const CrystalElement& x, int i);
std::pair<int, int> eps_phi(const Tableau& t, int i);
std::vector<int> phi_vector(const Tableau& t);  // phi_1..phi_{n-1}
std::vector<int> eps_vector(const Tableau& t);

struct OpResult {
  CrystalElement elem;
  int segment;  // 0-based segment whose letter changed
  int index;    // 0-based index within that segment
};

// e_i / f_i; empty optional encodes the null result.
std::optional<OpResult> raise(const CrystalElement& x, int i);
std::optional<OpResult> lower(const CrystalElement& x, int i);

struct TableauOpResult {
  Tableau tableau;
  WordPos cell;  // the cell whose entry changed
};

std::optional<TableauOpResult> raise(const Tableau& t, int i);
std::optional<TableauOpResult> lower(const Tableau& t, int i);

bool is_highest(const CrystalElement& x);
bool is_lowest(const CrystalElement& x);
bool is_highest(const Tableau& t);
bool is_lowest(const Tableau& t);
// Suffix (resp. prefix) counting characterizations for unbarred words.
bool is_yamanouchi(const std::vector<int>& w, int n);
bool is_anti_yamanouchi(const std::vector<int>& w, int n);

// Schuetzenberger evacuation S: rotate, complement entries, rectify.
Tableau evacuation(const Tableau& t);
// S^pi: rotate and complement only (an anti-isomorphism onto the rotated shape).
Tableau rotate_complement(const Tableau& t);
// S on a tensor: reverse the factors and apply S factorwise.
std::vector<Tableau> tensor_anti_iso(const std::vector<Tableau>& xs);

// Decision procedure for plactic equivalence: raise both to highest weight,
// compare highest weights and replay the recorded operator string.
bool plactic_equivalent(const CrystalElement& x, const CrystalElement& y);

}  // namespace lrc
