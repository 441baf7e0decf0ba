#include "lrcrystal/crystal.hpp"

#include <algorithm>
#include <stdexcept>

#include "lrcrystal/plactic.hpp"

namespace lrc {

namespace {

// +1 for a '+' sign, -1 for a '-', 0 for letters the index ignores.
// '-' sits over unbarred i and barred i+1; '+' over unbarred i+1 and barred i.
int sign_of(int letter, int i) {
  if (letter == i || letter == -(i + 1)) return -1;
  if (letter == i + 1 || letter == -i) return +1;
  return 0;
}

struct Signature {
  int eps = 0, phi = 0;
  int leftmost_plus = -1;    // flat position of the leftmost surviving '+'
  int rightmost_minus = -1;  // flat position of the rightmost surviving '-'
};

Signature scan(const std::vector<int>& w, int i) {
  Signature sig;
  std::vector<int> plus_stack;
  for (int p = 0; p < static_cast<int>(w.size()); ++p) {
    int s = sign_of(w[p], i);
    if (s > 0) {
      plus_stack.push_back(p);
    } else if (s < 0) {
      if (!plus_stack.empty()) {
        plus_stack.pop_back();
      } else {
        ++sig.phi;
        sig.rightmost_minus = p;
      }
    }
  }
  sig.eps = static_cast<int>(plus_stack.size());
  if (!plus_stack.empty()) sig.leftmost_plus = plus_stack.front();
  return sig;
}

std::vector<int> flatten(const CrystalElement& x) {
  std::vector<int> w;
  for (const auto& seg : x.segments) w.insert(w.end(), seg.begin(), seg.end());
  return w;
}

int raised_letter(int letter, int i) {
  if (letter == i + 1) return i;
  if (letter == -i) return -(i + 1);
  throw std::logic_error("crystal: raise applied to a letter without a '+'");
}

int lowered_letter(int letter, int i) {
  if (letter == i) return i + 1;
  if (letter == -(i + 1)) return -i;
  throw std::logic_error("crystal: lower applied to a letter without a '-'");
}

std::pair<int, int> locate(const CrystalElement& x, int flat) {
  for (int s = 0; s < static_cast<int>(x.segments.size()); ++s) {
    int len = static_cast<int>(x.segments[s].size());
    if (flat < len) return {s, flat};
    flat -= len;
  }
  throw std::logic_error("crystal: flat position out of range");
}

void check_index(int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("crystal: operator index out of range");
}

}  // namespace

CrystalElement word_element(std::vector<int> w, int n) {
  return CrystalElement{{std::move(w)}, n};
}

CrystalElement tableau_element(const Tableau& t) { return word_element(row_word(t), t.rank()); }

CrystalElement tensor(const CrystalElement& x, const CrystalElement& y) {
  if (x.n != y.n) throw std::invalid_argument("tensor: rank mismatch");
  CrystalElement z = x;
  z.segments.insert(z.segments.end(), y.segments.begin(), y.segments.end());
  return z;
}

std::pair<int, int> eps_phi(const std::vector<int>& w, int i) {
  Signature sig = scan(w, i);
  return {sig.eps, sig.phi};
}

std::pair<int, int> eps_phi(const CrystalElement& x, int i) {
  check_index(i, x.n);
  return eps_phi(flatten(x), i);
}

std::pair<int, int> eps_phi(const Tableau& t, int i) {
  check_index(i, t.rank());
  return eps_phi(row_word(t), i);
}

std::vector<int> phi_vector(const Tableau& t) {
  std::vector<int> w = row_word(t);
  std::vector<int> out(std::max(0, t.rank() - 1));
  for (int i = 1; i < t.rank(); ++i) out[i - 1] = eps_phi(w, i).second;
  return out;
}

std::vector<int> eps_vector(const Tableau& t) {
  std::vector<int> w = row_word(t);
  std::vector<int> out(std::max(0, t.rank() - 1));
  for (int i = 1; i < t.rank(); ++i) out[i - 1] = eps_phi(w, i).first;
  return out;
}

std::optional<OpResult> raise(const CrystalElement& x, int i) {
  check_index(i, x.n);
  Signature sig = scan(flatten(x), i);
  if (sig.eps == 0) return std::nullopt;
  auto [seg, idx] = locate(x, sig.leftmost_plus);
  OpResult res{x, seg, idx};
  int& letter = res.elem.segments[seg][idx];
  letter = raised_letter(letter, i);
  return res;
}

std::optional<OpResult> lower(const CrystalElement& x, int i) {
  check_index(i, x.n);
  Signature sig = scan(flatten(x), i);
  if (sig.phi == 0) return std::nullopt;
  auto [seg, idx] = locate(x, sig.rightmost_minus);
  OpResult res{x, seg, idx};
  int& letter = res.elem.segments[seg][idx];
  letter = lowered_letter(letter, i);
  return res;
}

namespace {

std::optional<TableauOpResult> tableau_op(const Tableau& t, int i, bool up) {
  CrystalElement x = tableau_element(t);
  auto res = up ? raise(x, i) : lower(x, i);
  if (!res) return std::nullopt;
  WordPos pos = row_word_positions(t)[res->index];
  TableauOpResult out{t, pos};
  out.tableau.rows[pos.row - 1][pos.idx] = res->elem.segments[0][res->index];
  return out;
}

}  // namespace

std::optional<TableauOpResult> raise(const Tableau& t, int i) { return tableau_op(t, i, true); }

std::optional<TableauOpResult> lower(const Tableau& t, int i) { return tableau_op(t, i, false); }

namespace {

bool extremal(const std::vector<int>& w, int n, bool high) {
  for (int i = 1; i < n; ++i) {
    auto [e, p] = eps_phi(w, i);
    if ((high ? e : p) != 0) return false;
  }
  return true;
}

}  // namespace

bool is_highest(const CrystalElement& x) { return extremal(flatten(x), x.n, true); }
bool is_lowest(const CrystalElement& x) { return extremal(flatten(x), x.n, false); }
bool is_highest(const Tableau& t) { return extremal(row_word(t), t.rank(), true); }
bool is_lowest(const Tableau& t) { return extremal(row_word(t), t.rank(), false); }

bool is_yamanouchi(const std::vector<int>& w, int n) {
  std::vector<int> cnt(n + 2, 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int x = *it;
    if (x <= 0 || x > n) throw std::invalid_argument("is_yamanouchi: unbarred word expected");
    ++cnt[x];
    if (x >= 2 && cnt[x] > cnt[x - 1]) return false;
  }
  return true;
}

bool is_anti_yamanouchi(const std::vector<int>& w, int n) {
  std::vector<int> cnt(n + 2, 0);
  for (int x : w) {
    if (x <= 0 || x > n) throw std::invalid_argument("is_anti_yamanouchi: unbarred word expected");
    ++cnt[x];
    if (x < n && cnt[x] > cnt[x + 1]) return false;
  }
  return true;
}

Tableau rotate_complement(const Tableau& t) {
  if (t.rational)
    throw std::invalid_argument("rotate_complement: staircase tableaux not supported");
  int n = t.rank();
  std::vector<std::vector<int>> rows(n);
  for (int r = 1; r <= n; ++r) {
    std::vector<int> row(t.rows[n - r].rbegin(), t.rows[n - r].rend());
    for (int& e : row) {
      if (e <= 0) throw std::invalid_argument("rotate_complement: unbarred tableau expected");
      e = n + 1 - e;
    }
    rows[r - 1] = std::move(row);
  }
  return make_tableau(pi_rotate(t.shape), std::move(rows));
}

Tableau evacuation(const Tableau& t) {
  if (t.rational || t.shape.rotated || t.shape.inner.size() != 0)
    throw std::invalid_argument("evacuation: straight tableau expected");
  return rectify(rotate_complement(t));
}

std::vector<Tableau> tensor_anti_iso(const std::vector<Tableau>& xs) {
  std::vector<Tableau> out;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) out.push_back(evacuation(*it));
  return out;
}

bool plactic_equivalent(const CrystalElement& x, const CrystalElement& y) {
  if (x.n != y.n) return false;
  auto to_highest = [](CrystalElement e, std::vector<int>& ops) {
    for (;;) {
      bool moved = false;
      for (int i = 1; i < e.n && !moved; ++i) {
        if (auto r = raise(e, i)) {
          e = r->elem;
          ops.push_back(i);
          moved = true;
        }
      }
      if (!moved) return e;
    }
  };
  std::vector<int> ops_x, ops_y;
  CrystalElement hx = to_highest(x, ops_x);
  CrystalElement hy = to_highest(y, ops_y);
  std::vector<int> wx = flatten(hx), wy = flatten(hy);
  if (word_weight(wx, x.n) != word_weight(wy, y.n)) return false;
  CrystalElement cur = hy;
  for (auto it = ops_x.rbegin(); it != ops_x.rend(); ++it) {
    auto r = lower(cur, *it);
    if (!r) return false;
    cur = r->elem;
  }
  return cur == y;
}

}  // namespace lrc
