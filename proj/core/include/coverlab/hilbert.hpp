#ifndef COVERLAB_HILBERT_HPP
#define COVERLAB_HILBERT_HPP

#include <cstddef>
#include <vector>

#include "coverlab/graph.hpp"
#include "coverlab/monomial_ideal.hpp"
#include "coverlab/polynomial.hpp"

namespace coverlab {

/// numerator / (1 - t)^den_pow
struct HilbertSeries {
    IntPolynomial numerator;
    std::size_t den_pow = 0;

    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Equality as rational functions: both numerators are brought to the common
/// denominator power before comparing coefficients.
bool same_rational_function(const HilbertSeries& a, const HilbertSeries& b);

struct ReducedSeries {
    IntPolynomial h;        // h(1) != 0
    std::size_t dim = 0;    // Krull dimension
    Integer multiplicity;   // h(1)
};

/// Hilbert series of S/I over (1 - t)^n, by the pivot recursion
///   N(I) = N(I + (p)) + t^deg(p) N(I : p)
/// with p a power of the variable occurring in the most generators.
HilbertSeries numerator(const MonomialIdeal& ideal);

/// Cancels every factor (1 - t); throws PreconditionError for a zero numerator
/// or when the series does not reduce to h(1) > 0.
ReducedSeries reduce(const HilbertSeries& series);

/// The first D + 1 coefficients of numerator / (1 - t)^den_pow.
std::vector<Integer> expand(const HilbertSeries& series, std::size_t max_degree);

/// dim_K (S/I)_d for d = 0..D by enumerating every monomial of degree d.
std::vector<Integer> hilbert_function_oracle(const MonomialIdeal& ideal, std::size_t max_degree);

// Closed forms for the cover-ideal families. Numerators are over (1 - t)^(2n-2)
// for crown graphs and (1 - t)^n for K_parts.

/// S / J(C_{n,n})^s, n >= 3, s >= 1.
HilbertSeries closed_form_crown(std::size_t n, int s);
/// S / J(K_parts)^[s], s >= 1.
HilbertSeries closed_form_bracket(const std::vector<std::size_t>& parts, int s);
/// S / (J(K_parts)^[s], M), s >= 1.
HilbertSeries closed_form_bracket_plus_m(const std::vector<std::size_t>& parts, int s);
/// S / J(K_parts)^(s), s >= 1, split on the parity of s.
HilbertSeries closed_form_symbolic_multipartite(const std::vector<std::size_t>& parts, int s);

/// e(S / I^s) = C(s + h - 1, h) for I generated by h linear forms.
Integer linear_power_multiplicity(std::size_t h, int s);

enum class IdealKind { Edge, Cover };

/// Combinatorial multiplicity of S / I(G)^(s) or S / J(G)^(s):
///   cover: C(s + 1, 2) |E(G)|;  edge: C(h + s - 1, h) V(G)
/// with h the minimum vertex-cover size and V(G) the number of minimum covers.
Integer symbolic_multiplicity(const SimpleGraph& g, IdealKind kind, int s);

/// C(h + s - 1, h) |Minh(I)| from the minimal primes of a squarefree I, where
/// h is the height of I and Minh(I) its minimal primes of that height.
Integer minh_multiplicity(const MonomialIdeal& ideal, int s);

} // namespace coverlab

#endif
