#ifndef COVERLAB_MONOMIAL_IDEAL_HPP
#define COVERLAB_MONOMIAL_IDEAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coverlab/monomial.hpp"

namespace coverlab {

/// A monomial ideal in K[x_1..x_n], held by its minimal generating set in
/// canonical order. Two ideals are equal iff their representations are equal.
///
/// The zero ideal has no generators; the unit ideal has the single identity
/// monomial as generator.
class MonomialIdeal {
  public:
    MonomialIdeal() = default;

    /// Builds the ideal generated by `gens`, discarding non-minimal generators.
    MonomialIdeal(std::size_t ambient, std::vector<Monomial> gens);

    static MonomialIdeal zero(std::size_t ambient) { return MonomialIdeal(ambient, {}); }
    static MonomialIdeal unit(std::size_t ambient);
    static MonomialIdeal principal(const Monomial& m);

    std::size_t ambient() const noexcept { return ambient_; }
    std::span<const Monomial> generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_identity(); }
    bool is_squarefree() const noexcept;

    /// Largest generator degree (deg(I) in the cover-ideal literature); 0 for zero ideal.
    std::uint64_t max_degree() const noexcept;
    std::uint64_t min_degree() const noexcept;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  private:
    std::size_t ambient_ = 0;
    std::vector<Monomial> gens_;
};

/// The minimal elements of `gens` under divisibility, in canonical order.
MonomialIdeal minimalize(std::size_t ambient, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// I : m
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
/// I : J, computed as the intersection of I : g over the generators g of J.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
/// J ⊆ I
bool contains(const MonomialIdeal& ideal, const MonomialIdeal& sub);

/// sqrt(I): generated by the radicals of the generators.
MonomialIdeal radical(const MonomialIdeal& ideal);

/// A monomial prime (x_{i_1}, ..., x_{i_r}), held by its sorted variable indices.
class PrimeSupport {
  public:
    explicit PrimeSupport(std::vector<std::size_t> variables);

    std::span<const std::size_t> variables() const noexcept { return vars_; }
    std::size_t height() const noexcept { return vars_.size(); }

    /// deg_p(u): the sum of the exponents of u on the variables of p.
    std::uint64_t degree_of(const Monomial& u) const;

    MonomialIdeal to_ideal(std::size_t ambient) const;
    /// p^s, generated by all degree-s monomials in the variables of p.
    MonomialIdeal power(std::size_t ambient, Exponent s) const;

    friend auto operator<=>(const PrimeSupport&, const PrimeSupport&) = default;

  private:
    std::vector<std::size_t> vars_;
};

/// The inclusion-minimal monomial primes containing I, as minimal transversals
/// of the supports of the generators of sqrt(I). Sorted by height, then
/// lexicographically by variable list.
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal);

std::string to_string(const MonomialIdeal& ideal, std::span<const std::string> labels,
                      std::string_view separator = {});

} // namespace coverlab

#endif
