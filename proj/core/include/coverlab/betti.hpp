#ifndef COVERLAB_BETTI_HPP
#define COVERLAB_BETTI_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "coverlab/monomial_ideal.hpp"
#include "coverlab/polynomial.hpp"

namespace coverlab {

/// The lcm lattice of I without its bottom element: every lcm of a non-empty
/// subset of the minimal generators, in canonical order.
struct LcmLattice {
    std::vector<Monomial> elements;
};

LcmLattice lcm_lattice(const MonomialIdeal& ideal);

using Face = std::vector<std::size_t>;

/// A simplicial complex given by its full face list. The void complex has no
/// faces; the irrelevant complex has only the empty face.
struct SimplicialComplexLite {
    std::vector<std::size_t> vertices;
    std::vector<Face> faces; // sorted by size, then lexicographically

    bool is_void() const noexcept { return faces.empty(); }
};

/// K^b(I) = { squarefree tau <= b : x^(b - tau) in I }, on the support of b.
SimplicialComplexLite upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& b);

/// Reduced homology ranks over Q. Element d + 1 holds dim H~_d, so index 0 is
/// H~_{-1}; trailing zeros are dropped and the void complex gives {}.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplexLite& complex);

struct BettiEntry {
    int i = 0;      // homological degree, for the ideal I
    Monomial b;     // multidegree
    std::size_t rank = 0;
};

/// Multigraded Betti numbers beta_{i,b}(I); beta_{i+1,b}(S/I) = beta_{i,b}(I).
class BettiTable {
  public:
    BettiTable() = default;
    BettiTable(std::size_t ambient, std::vector<BettiEntry> entries);

    std::size_t ambient() const noexcept { return ambient_; }
    const std::vector<BettiEntry>& entries() const noexcept { return entries_; }

    /// beta_{i,b}(I), zero when absent.
    std::size_t at(int i, const Monomial& b) const;

    /// (i, |b|) -> sum of ranks.
    std::map<std::pair<int, std::uint64_t>, std::size_t> coarse() const;

    /// reg(I) = max(|b| - i); reg(S/I) = reg(I) - 1.
    long regularity() const;
    long quotient_regularity() const { return regularity() - 1; }
    /// pd(I) = max i; pd(S/I) = pd(I) + 1.
    int projective_dimension() const;
    int quotient_projective_dimension() const { return projective_dimension() + 1; }

    /// sum_i (-1)^i sum_b beta_{i,b}(S/I) t^|b|: the numerator of the Hilbert
    /// series of S/I over (1 - t)^n.
    IntPolynomial k_polynomial() const;

  private:
    std::size_t ambient_ = 0;
    std::vector<BettiEntry> entries_; // sorted by (i, b)
};

struct BettiOptions {
    /// Worker threads for the per-multidegree homology; 0 picks default_thread_count().
    std::size_t threads = 0;
};

/// hardware_concurrency, capped by COVERLAB_THREADS when set.
std::size_t default_thread_count();

BettiTable betti_table(const MonomialIdeal& ideal, BettiOptions options = {});

long regularity(const MonomialIdeal& ideal, BettiOptions options = {});
/// pd(S/I)
int projective_dimension(const MonomialIdeal& ideal, BettiOptions options = {});

// Closed-form regularity values.

/// reg(J(C_{n,n})^s) = s (2n - 2); n >= 3, s >= 1.
long crown_power_regularity(std::size_t n, int s);
/// reg(J(K_parts)^(s)) = s (n - p_k) + p_k - 1; s >= 1.
long multipartite_symbolic_regularity(const std::vector<std::size_t>& parts, int s);
/// reg(I_{s,j}) = s (n - p_j) + p_j - 1 with parts sorted descending; s >= 2, 1 <= j <= k.
long partial_symbolic_regularity(const std::vector<std::size_t>& parts, int s, std::size_t j);
/// reg(J(K_n)^(s)) = s (n - 1); n >= 2, s >= 1.
long complete_graph_symbolic_regularity(std::size_t n, int s);

} // namespace coverlab

#endif
