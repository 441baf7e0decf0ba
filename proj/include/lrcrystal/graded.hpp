#pragma once

#include <string>
#include <vector>

#include "lrcrystal/branching.hpp"

namespace lrc {

// Exact polynomial (or truncated series) in q with integer coefficients,
// stored densely by degree.
struct GradedPoly {
  std::vector<long long> c;

  GradedPoly() = default;
  explicit GradedPoly(std::vector<long long> v) : c(std::move(v)) { normalize(); }

  void normalize();
  int degree() const { return static_cast<int>(c.size()) - 1; }
  long long coeff(int d) const {
    return (d >= 0 && d < static_cast<int>(c.size())) ? c[d] : 0;
  }
  long long at_one() const;
  bool is_zero() const { return c.empty(); }

  GradedPoly& operator+=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  GradedPoly truncated(int max_degree) const;
  bool operator==(const GradedPoly&) const = default;

  // Ascending degrees, '^' exponents, unit coefficients suppressed:
  // "q + q^2 + 2q^4"; the zero polynomial prints as "0".
  std::string str() const;
};

GradedPoly monomial(int degree, long long coeff = 1);
// (1-q)(1-q^2)...(1-q^n): the inverse of the invariant Hilbert series.
GradedPoly hilbert_series_inverse(int n);

// Degree statistic on a zero-M-weight tableau; throws when the input weight
// is nonzero or the required parity/vanishing fails (which signals a bug).
long long d_statistic(const Tableau& t, const SymPair& p);

GradedPoly graded_multiplicity(const Partition& nu, const SymPair& p);
GradedPoly graded_multiplicity(const RationalShape& nu, const SymPair& p);
// Serial reference implementations of the parallel kernels above.
GradedPoly graded_multiplicity_serial(const Partition& nu, const SymPair& p);
GradedPoly graded_multiplicity_serial(const RationalShape& nu, const SymPair& p);

// Graded multiplicity of the representation appearing in degree one
// (expected to equal q + q^2 + ... + q^{n-1}).
GradedPoly degree_one_multiplicity(const SymPair& p);

// Minimal monoid element whose fiber contains T, and the minimal lambda.
Partition mu_min(const Tableau& t, const SymPair& p);
Partition lambda_min(const Tableau& t, const SymPair& p);

// Checks sum_{deg(lambda) <= D} q^deg b^lambda_nu == m^nu(q) / prod(1-q^i)
// modulo q^{D+1}, by multiplying the left side through by prod(1-q^i).
bool series_identity_check(const Partition& nu, const SymPair& p, int truncation);
bool series_identity_check(const RationalShape& nu, const SymPair& p, int truncation);

// Graded multiplicities for the rank-two orthogonal group in four variables,
// assembled from the O(4) values: two-row shapes fill entry (i,j) and (j,i);
// the diagonal combines a one-row shape with its associated hook.
std::vector<std::vector<GradedPoly>> so4_table(int max_i, int max_j);

}  // namespace lrc
