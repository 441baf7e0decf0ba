#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lrcrystal/partition.hpp"

namespace lrc {

// Entries are letters: positive i for unbarred, negative -i for barred i.
// The natural integer order -n < ... < -1 < 1 < ... < n matches the letter
// order; barred and unbarred regions never meet inside a row or column.
struct Tableau {
  SkewShape shape;                        // geometry; ignored when rational is set
  std::optional<RationalShape> rational;  // set for staircase tableaux
  std::vector<std::vector<int>> rows;     // grid rows top to bottom

  int rank() const { return rational ? rational->n : shape.ambient(); }
  bool operator==(const Tableau&) const = default;
  bool operator<(const Tableau& o) const { return rows < o.rows; }
};

// Validating constructors (throw std::invalid_argument on bad fillings).
Tableau make_tableau(const SkewShape& shape, std::vector<std::vector<int>> rows);
// minus_rows is the unrotated positive tableau of shape rs.minus.
Tableau make_rational_tableau(const RationalShape& rs, std::vector<std::vector<int>> plus_rows,
                              std::vector<std::vector<int>> minus_rows);
Tableau empty_tableau(int n);

// Components of a staircase tableau, as ordinary straight tableaux with
// positive entries at rank rs.n.
Tableau plus_part(const Tableau& t);
Tableau minus_part(const Tableau& t);

struct WordPos {
  int row;  // grid row, 1-based
  int idx;  // index into rows[row-1]
  bool operator==(const WordPos&) const = default;
};

std::vector<int> row_word(const Tableau& t);  // rows bottom to top, left to right
std::vector<WordPos> row_word_positions(const Tableau& t);
std::vector<int> weight(const Tableau& t);  // epsilon-coordinates, length rank()
std::vector<int> word_weight(const std::vector<int>& w, int n);

Tableau highest_tableau(const SkewShape& s);
Tableau lowest_tableau(const SkewShape& s);
Tableau highest_tableau(const RationalShape& rs);
Tableau lowest_tableau(const RationalShape& rs);

// All semistandard fillings with entries in 1..n, sorted by row word.  When
// target_weight is given only fillings of that weight are returned.
std::vector<Tableau> enumerate_ssyt(
    const SkewShape& s, int n,
    const std::optional<std::vector<int>>& target_weight = std::nullopt);
// All flagged staircase tableaux on rs (the rational crystal), sorted by row word.
std::vector<Tableau> enumerate_rational(const RationalShape& rs);

enum class KClass { O, GLrat, SpH, SpBallot };

struct KSpec {
  KClass cls;
  int rank;  // GL rank: n for O/GLrat, 2n for Sp
};

bool in_khat(const Partition& nu, const KSpec& k);
bool in_khat(const RationalShape& nu, const KSpec& k);
bool is_k_tableau(const Tableau& t, const KSpec& k);
// Reading w right to left, the running count of 2i never exceeds that of 2i-1.
bool is_ballot_word(const std::vector<int>& w, int rank);
// Length rank (O, GLrat) or rank/2 (Sp).
std::vector<int> m_weight(const Tableau& t, const KSpec& k);

std::vector<Tableau> k_tableaux(const Partition& nu, const KSpec& k);
std::vector<Tableau> zero_weight_tableaux(const Partition& nu, const KSpec& k);
std::vector<Tableau> zero_weight_tableaux(const RationalShape& nu, const KSpec& k);
std::map<std::vector<int>, long long> m_polynomial(const Partition& nu, const KSpec& k);
std::map<std::vector<int>, long long> m_polynomial(const RationalShape& nu, const KSpec& k);
long long dim_k(const Partition& nu, const KSpec& k);
long long dim_k(const RationalShape& nu, const KSpec& k);

}  // namespace lrc
