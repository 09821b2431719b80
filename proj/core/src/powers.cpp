#include "coverlab/powers.hpp"

#include <algorithm>

#include "coverlab/errors.hpp"
#include "coverlab/graph.hpp"

namespace coverlab {

namespace {

void require_symbolic_input(const MonomialIdeal& ideal, int s) {
    if (s < 0) throw PreconditionError("symbolic power exponent must be >= 0");
    if (ideal.is_zero() || ideal.is_unit())
        throw PreconditionError("symbolic power needs a proper nonzero ideal");
    if (!ideal.is_squarefree())
        throw PreconditionError("symbolic power is only defined here for squarefree ideals");
}

} // namespace

MonomialIdeal power(const MonomialIdeal& ideal, int s) {
    if (s < 0) throw PreconditionError("power exponent must be >= 0");
    auto result = MonomialIdeal::unit(ideal.ambient());
    for (int k = 0; k < s; ++k) result = product(result, ideal);
    return result;
}

MonomialIdeal bracket_power(const MonomialIdeal& ideal, int s) {
    if (s < 1) throw PreconditionError("bracket power exponent must be >= 1");
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.generators()) gens.push_back(pow(g, static_cast<Exponent>(s)));
    return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int s) {
    require_symbolic_input(ideal, s);
    const auto n = ideal.ambient();
    if (s == 0) return MonomialIdeal::unit(n);

    std::vector<MonomialIdeal> prime_powers;
    for (const auto& p : minimal_primes(ideal))
        prime_powers.push_back(p.power(n, static_cast<Exponent>(s)));
    // Small factors first keeps the intermediate generator sets small.
    std::stable_sort(prime_powers.begin(), prime_powers.end(),
                     [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.size() < b.size(); });

    auto result = MonomialIdeal::unit(n);
    for (const auto& q : prime_powers) result = intersect(result, q);
    return result;
}

bool symbolic_membership(const MonomialIdeal& ideal, const Monomial& u, int s) {
    require_symbolic_input(ideal, s);
    if (u.ambient() != ideal.ambient()) throw AmbientMismatch(ideal.ambient(), u.ambient());
    if (s == 0) return true;
    const auto primes = minimal_primes(ideal);
    return std::all_of(primes.begin(), primes.end(), [&](const PrimeSupport& p) {
        return p.degree_of(u) >= static_cast<std::uint64_t>(s);
    });
}

MonomialIdeal multipartite_symbolic_generators(const std::vector<std::size_t>& parts, int s) {
    if (s < 0) throw PreconditionError("symbolic power exponent must be >= 0");
    const auto mm = multipartite_monomials(parts);
    const auto n = mm.n;
    const MonomialIdeal cover(n, mm.cofactors);

    // Two interleaved chains: even s from S, odd s from J.
    MonomialIdeal current = (s % 2 == 0) ? MonomialIdeal::unit(n) : cover;
    for (int t = (s % 2 == 0) ? 2 : 3; t <= s; t += 2) {
        std::vector<Monomial> gens;
        for (const auto& g : current.generators()) gens.push_back(mm.m * g);
        for (const auto& nj : mm.cofactors) gens.push_back(pow(nj, static_cast<Exponent>(t)));
        current = MonomialIdeal(n, std::move(gens));
    }
    return current;
}

MonomialIdeal partial_symbolic_ideal(const std::vector<std::size_t>& parts, int s, std::size_t j) {
    if (s < 2) throw PreconditionError("I_{s,j} requires s >= 2");
    const auto mm = multipartite_monomials(parts);
    if (j < 1 || j > mm.parts.size()) throw PreconditionError("I_{s,j} requires 1 <= j <= k");
    std::vector<Monomial> gens{mm.m};
    for (std::size_t i = 0; i < j; ++i) gens.push_back(pow(mm.cofactors[i], static_cast<Exponent>(s)));
    return MonomialIdeal(mm.n, std::move(gens));
}

} // namespace coverlab
