#ifndef COVERLAB_POWERS_HPP
#define COVERLAB_POWERS_HPP

#include <cstddef>
#include <vector>

#include "coverlab/monomial_ideal.hpp"

namespace coverlab {

/// I^s; I^0 is the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, int s);

/// I^[s] = (g^s : g a minimal generator of I), s >= 1.
MonomialIdeal bracket_power(const MonomialIdeal& ideal, int s);

/// I^(s) for a squarefree, proper, nonzero I: the intersection of p^s over the
/// minimal primes p of I. I^(0) is the unit ideal.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int s);

/// u in I^(s) iff deg_p(u) >= s for every minimal prime p of I.
bool symbolic_membership(const MonomialIdeal& ideal, const Monomial& u, int s);

/// J(K_parts)^(s) by the recursion M * J^(s-2) + (N_1^s, ..., N_k^s), with
/// J^(0) = S and J^(1) = (N_1, ..., N_k).
MonomialIdeal multipartite_symbolic_generators(const std::vector<std::size_t>& parts, int s);

/// (M, N_1^s, ..., N_j^s) for s >= 2 and 1 <= j <= k, parts sorted descending.
MonomialIdeal partial_symbolic_ideal(const std::vector<std::size_t>& parts, int s, std::size_t j);

} // namespace coverlab

#endif
