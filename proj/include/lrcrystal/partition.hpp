#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace lrc {

// Weakly decreasing nonnegative parts; trailing zeros are significant
// (the ambient length fixes the rank n).
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {}

  int ambient() const { return static_cast<int>(parts.size()); }
  int at(int i) const { return (i >= 0 && i < ambient()) ? parts[i] : 0; }  // 0-based
  int size() const;    // sum of parts
  int length() const;  // index of last nonzero part
  bool valid() const;

  auto operator<=>(const Partition&) const = default;
};

Partition reambient(const Partition& p, int n);
Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

enum class Monoid { EvenRows, All, EvenColumns };

bool in_monoid(const Partition& p, Monoid q);
// All partitions of k with ambient length n lying in q (and inside bound if
// given), in lexicographic-descending order.
std::vector<Partition> enumerate_partitions(
    int k, int n, Monoid q, const std::optional<Partition>& bound = std::nullopt);
// The n free generators of q in degrees 1..n (EvenColumns generators live at
// ambient length 2n; degree is |p| for All and |p|/2 otherwise).
std::vector<Partition> monoid_generators(int n, Monoid q);

// Skew (or straight) shape; `rotated` marks the 180-degree form.  All cells
// live in one (row, col) grid with row 1 at top; rotated shapes are
// right-justified at width outer_1.
struct SkewShape {
  Partition outer, inner;
  bool rotated = false;

  int ambient() const { return outer.ambient(); }
  int width() const { return outer.at(0); }
  // 1-based inclusive column span of grid row r in 1..ambient(); the row is
  // empty when row_begin(r) > row_end(r).
  int row_begin(int r) const;
  int row_end(int r) const;
  int row_len(int r) const { return row_end(r) - row_begin(r) + 1; }
  int cells() const;
  bool has_cell(int r, int c) const;
  bool valid() const;

  auto operator<=>(const SkewShape&) const = default;
};

SkewShape straight_shape(const Partition& p);
SkewShape skew_shape(const Partition& outer, const Partition& inner);
SkewShape pi_rotate(const Partition& p);
SkewShape pi_rotate(const SkewShape& s);
// Row lengths top to bottom (the reversed partition for rotated shapes).
std::vector<int> row_lengths(const SkewShape& s);

// Pair (plus, minus) describing a rational GL_n weight, realized as a
// staircase shape: plus rows at the top, minus rows rotated, negated and
// right-justified at the bottom.
struct RationalShape {
  Partition plus, minus;
  int n = 0;

  bool valid() const;
  int size() const { return plus.size() + minus.size(); }
  bool is_polynomial() const { return minus.size() == 0; }
  // (plus_1, ..., 0, ..., 0, -minus_l, ..., -minus_1), length n.
  std::vector<int> staircase_weight() const;

  auto operator<=>(const RationalShape&) const = default;
};

std::optional<Partition> parse_partition(const std::string& s);
std::optional<RationalShape> parse_rational(const std::string& s);  // "3,2|3,1@5"
std::string to_string(const Partition& p);
std::string to_string(const RationalShape& s);

}  // namespace lrc
