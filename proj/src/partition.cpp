#include "lrcrystal/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lrc {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::length() const {
  int l = 0;
  for (int i = 0; i < ambient(); ++i)
    if (parts[i] > 0) l = i + 1;
  return l;
}

bool Partition::valid() const {
  for (int i = 0; i < ambient(); ++i) {
    if (parts[i] < 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

Partition reambient(const Partition& p, int n) {
  if (p.length() > n) throw std::invalid_argument("reambient: partition longer than target");
  std::vector<int> q(n, 0);
  for (int i = 0; i < n && i < p.ambient(); ++i) q[i] = p.parts[i];
  return Partition(std::move(q));
}

Partition conjugate(const Partition& p) {
  int w = p.at(0);
  std::vector<int> q(w, 0);
  for (int c = 1; c <= w; ++c) {
    int cnt = 0;
    for (int i = 0; i < p.ambient(); ++i)
      if (p.parts[i] >= c) ++cnt;
    q[c - 1] = cnt;
  }
  return Partition(std::move(q));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (outer.ambient() != inner.ambient())
    throw std::invalid_argument("contains: ambient length mismatch");
  for (int i = 0; i < outer.ambient(); ++i)
    if (inner.parts[i] > outer.parts[i]) return false;
  return true;
}

bool in_monoid(const Partition& p, Monoid q) {
  switch (q) {
    case Monoid::All:
      return true;
    case Monoid::EvenRows:
      for (int x : p.parts)
        if (x % 2 != 0) return false;
      return true;
    case Monoid::EvenColumns:
      return in_monoid(conjugate(p), Monoid::EvenRows);
  }
  return false;
}

namespace {

void gen_parts(int idx, int n, int remaining, int maxpart, const Partition* bound,
               std::vector<int>& cur, Monoid q, std::vector<Partition>& out) {
  if (idx == n) {
    if (remaining == 0) {
      Partition p{cur};
      if (in_monoid(p, q)) out.push_back(std::move(p));
    }
    return;
  }
  int hi = std::min(maxpart, remaining);
  if (bound) hi = std::min(hi, bound->at(idx));
  for (int v = hi; v >= 0; --v) {
    if (remaining - v > v * (n - idx - 1)) continue;  // cannot reach zero
    cur[idx] = v;
    gen_parts(idx + 1, n, remaining - v, v, bound, cur, q, out);
  }
  cur[idx] = 0;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int k, int n, Monoid q,
                                            const std::optional<Partition>& bound) {
  std::vector<Partition> out;
  if (k < 0 || n < 0) return out;
  const Partition* b = bound ? &*bound : nullptr;
  if (b && b->ambient() != n)
    throw std::invalid_argument("enumerate_partitions: bound ambient mismatch");
  std::vector<int> cur(n, 0);
  gen_parts(0, n, k, k, b, cur, q, out);
  return out;
}

std::vector<Partition> monoid_generators(int n, Monoid q) {
  std::vector<Partition> out;
  for (int d = 1; d <= n; ++d) {
    if (q == Monoid::EvenColumns) {
      std::vector<int> p(2 * n, 0);
      for (int i = 0; i < 2 * d; ++i) p[i] = 1;
      out.emplace_back(std::move(p));
    } else {
      std::vector<int> p(n, 0);
      for (int i = 0; i < d; ++i) p[i] = (q == Monoid::EvenRows) ? 2 : 1;
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

int SkewShape::row_begin(int r) const {
  return rotated ? width() - outer.at(ambient() - r) + 1 : inner.at(r - 1) + 1;
}

int SkewShape::row_end(int r) const {
  return rotated ? width() - inner.at(ambient() - r) : outer.at(r - 1);
}

int SkewShape::cells() const { return outer.size() - inner.size(); }

bool SkewShape::has_cell(int r, int c) const {
  return r >= 1 && r <= ambient() && c >= row_begin(r) && c <= row_end(r);
}

bool SkewShape::valid() const {
  return outer.valid() && inner.valid() && outer.ambient() == inner.ambient() &&
         contains(outer, inner);
}

SkewShape straight_shape(const Partition& p) {
  return SkewShape{p, Partition(std::vector<int>(p.ambient(), 0)), false};
}

SkewShape skew_shape(const Partition& outer, const Partition& inner) {
  SkewShape s{outer, reambient(inner, outer.ambient()), false};
  if (!s.valid()) throw std::invalid_argument("skew_shape: inner not contained in outer");
  return s;
}

SkewShape pi_rotate(const Partition& p) {
  SkewShape s = straight_shape(p);
  s.rotated = true;
  return s;
}

SkewShape pi_rotate(const SkewShape& s) {
  SkewShape t = s;
  t.rotated = !t.rotated;
  return t;
}

std::vector<int> row_lengths(const SkewShape& s) {
  std::vector<int> out(s.ambient());
  for (int r = 1; r <= s.ambient(); ++r) out[r - 1] = std::max(0, s.row_len(r));
  return out;
}

bool RationalShape::valid() const {
  return n >= 1 && plus.valid() && minus.valid() && plus.length() + minus.length() <= n;
}

std::vector<int> RationalShape::staircase_weight() const {
  std::vector<int> w(n, 0);
  for (int i = 0; i < plus.length(); ++i) w[i] = plus.parts[i];
  for (int j = 1; j <= minus.length(); ++j) w[n - j] = -minus.parts[j - 1];
  return w;
}

std::optional<Partition> parse_partition(const std::string& s) {
  std::vector<int> parts;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) return std::nullopt;
        parts.push_back(v);
      } catch (...) {
        return std::nullopt;
      }
    }
  }
  Partition p{std::move(parts)};
  if (!p.valid()) return std::nullopt;
  return p;
}

std::optional<RationalShape> parse_rational(const std::string& s) {
  auto at = s.find('@');
  auto bar = s.find('|');
  if (at == std::string::npos || bar == std::string::npos || bar > at) return std::nullopt;
  auto plus = parse_partition(s.substr(0, bar));
  auto minus = parse_partition(s.substr(bar + 1, at - bar - 1));
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(s.substr(at + 1), &used);
    if (used != s.size() - at - 1) return std::nullopt;
  } catch (...) {
    return std::nullopt;
  }
  if (!plus || !minus) return std::nullopt;
  RationalShape r{*plus, *minus, n};
  if (!r.valid()) return std::nullopt;
  return r;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (int i = 0; i < p.ambient(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts[i]);
  }
  return out;
}

std::string to_string(const RationalShape& s) {
  return to_string(s.plus) + "|" + to_string(s.minus) + "@" + std::to_string(s.n);
}

}  // namespace lrc
