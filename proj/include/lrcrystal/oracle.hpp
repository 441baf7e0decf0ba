#pragma once

#include <map>
#include <string>
#include <vector>

#include "lrcrystal/partition.hpp"

namespace lrc {

// Exponent vector (fixed length n) -> integer coefficient.
using Monomials = std::map<std::vector<int>, long long>;

// Exact monomial expansion of the Schur polynomial by tableau enumeration.
// Deliberately independent of the crystal and LR modules.
Monomials schur_polynomial(const Partition& lambda, int n);
Monomials poly_mul(const Monomials& a, const Monomials& b);
Monomials poly_sub(Monomials a, const Monomials& b, long long scale);
bool is_symmetric(const Monomials& f, int n);
// Repeated leading-monomial subtraction; throws on non-symmetric input or a
// negative coefficient (non-Schur-positive input).
std::map<Partition, long long> decompose_into_schur(const Monomials& f, int n);
long long weyl_dimension(const Partition& lambda, int n);

struct VerifyReport {
  std::vector<std::string> passed;
  std::vector<std::string> failed;
  bool ok() const { return failed.empty(); }
};

VerifyReport verify_all(bool full);

}  // namespace lrc
