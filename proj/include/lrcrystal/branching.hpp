#pragma once

#include <map>

#include "lrcrystal/lr.hpp"

namespace lrc {

enum class PairKind { O, GL, Sp };

// O: O_n inside GL_n (rank n); GL: GL_n diagonal in GL_n x GL_n; Sp: Sp_2n
// inside GL_2n (n is the half-rank, GL rank 2n).
struct SymPair {
  PairKind kind;
  int n;
};

int gl_rank(const SymPair& p);
Monoid pair_monoid(const SymPair& p);
KSpec pair_kspec(const SymPair& p);  // companion-side K-tableau predicate

// Multiplicity of the K-type nu in the GL representation lambda, as the sum
// of modified LR coefficients over the pair's monoid.
long long branch_multiplicity(const Partition& lambda, const Partition& nu, const SymPair& p);
std::map<Partition, long long> branch_decompose(const Partition& lambda, const SymPair& p);

// Multiplicity of nu in [lambda1, lambda2] restricted to the diagonal GL_n.
long long branch_gl2_to_gl(const RationalShape& lambda1, const RationalShape& lambda2,
                           const RationalShape& nu, int n);

// Classical stable sum (unmodified coefficients); requires the stability
// hypothesis len(lambda) <= n/2 (O) or len(lambda) <= n (Sp_2n).
long long stable_littlewood(const Partition& lambda, const Partition& nu, const SymPair& p);

bool is_rjk(const Tableau& t, int n);  // straight shape
bool is_jk(const Tableau& t, int n);   // rotated shape

}  // namespace lrc
