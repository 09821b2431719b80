// Brute-force oracles used by the test suites. Nothing here calls into the
// algorithmic paths it is used to check: transversals are found by subset
// enumeration, minimalization by the quadratic divisibility filter, and so on.
#ifndef COVERLAB_TESTS_ORACLES_HPP
#define COVERLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "coverlab/graph.hpp"
#include "coverlab/monomial_ideal.hpp"

namespace coverlab::testing {

inline Monomial mono(std::initializer_list<Exponent> e) { return Monomial(std::vector<Exponent>(e)); }

inline MonomialIdeal ideal(std::size_t n, std::initializer_list<std::initializer_list<Exponent>> gens) {
    std::vector<Monomial> g;
    for (auto e : gens) g.push_back(mono(e));
    return MonomialIdeal(n, std::move(g));
}

inline bool divides_naive(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline std::vector<Exponent> exps(const Monomial& m) {
    return {m.exponents().begin(), m.exponents().end()};
}

/// Keeps g unless some other, distinct element divides it.
inline std::set<std::vector<Exponent>> minimal_elements(const std::vector<Monomial>& gens) {
    std::set<std::vector<Exponent>> all;
    for (const auto& g : gens) all.insert(exps(g));
    std::set<std::vector<Exponent>> out;
    for (const auto& g : all) {
        bool redundant = false;
        for (const auto& h : all)
            if (h != g && divides_naive(h, g)) redundant = true;
        if (!redundant) out.insert(g);
    }
    return out;
}

inline std::set<std::vector<Exponent>> generator_set(const MonomialIdeal& I) {
    std::set<std::vector<Exponent>> out;
    for (const auto& g : I.generators()) out.insert(exps(g));
    return out;
}

inline bool member_naive(const MonomialIdeal& I, const std::vector<Exponent>& m) {
    for (const auto& g : I.generators())
        if (divides_naive(exps(g), m)) return true;
    return false;
}

/// Minimal hitting sets of the supports of the generators, by enumerating
/// every subset of variables (n <= 20).
inline std::set<std::vector<std::size_t>> minimal_transversals_brute(const MonomialIdeal& I) {
    const auto n = I.ambient();
    std::vector<std::uint32_t> edges;
    for (const auto& g : I.generators()) {
        std::uint32_t mask = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (g[v] > 0) mask |= 1u << v;
        edges.push_back(mask);
    }
    std::vector<std::uint32_t> hitting;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
        if (std::all_of(edges.begin(), edges.end(), [s](std::uint32_t e) { return (e & s) != 0; }))
            hitting.push_back(s);
    std::set<std::vector<std::size_t>> out;
    for (auto s : hitting) {
        bool minimal = std::none_of(hitting.begin(), hitting.end(),
                                    [s](std::uint32_t t) { return t != s && (t & ~s) == 0; });
        if (!minimal) continue;
        std::vector<std::size_t> vars;
        for (std::size_t v = 0; v < n; ++v)
            if (s & (1u << v)) vars.push_back(v);
        out.insert(vars);
    }
    return out;
}

/// Minimal vertex covers by subset enumeration.
inline std::set<std::vector<std::size_t>> minimal_vertex_covers_brute(const SimpleGraph& g) {
    const auto n = g.vertex_count();
    std::vector<std::uint32_t> covers;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!((s >> u) & 1) && !((s >> v) & 1)) ok = false;
        if (ok) covers.push_back(s);
    }
    std::set<std::vector<std::size_t>> out;
    for (auto s : covers) {
        if (std::any_of(covers.begin(), covers.end(),
                        [s](std::uint32_t t) { return t != s && (t & ~s) == 0; }))
            continue;
        std::vector<std::size_t> vs;
        for (std::size_t v = 0; v < n; ++v)
            if (s & (1u << v)) vs.push_back(v);
        out.insert(vs);
    }
    return out;
}

/// Every exponent vector in [0, bound]^n.
inline std::vector<Monomial> all_monomials_bounded(std::size_t n, Exponent bound) {
    std::vector<Monomial> out;
    std::vector<Exponent> e(n, 0);
    while (true) {
        out.emplace_back(e);
        std::size_t k = 0;
        while (k < n && e[k] == bound) e[k++] = 0;
        if (k == n) break;
        ++e[k];
    }
    return out;
}

inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n, Exponent max_exp, std::size_t max_gens) {
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    std::uniform_int_distribution<Exponent> ex(0, max_exp);
    std::vector<Monomial> gens;
    const auto k = count(rng);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Exponent> e(n);
        for (auto& x : e) x = ex(rng);
        if (std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; })) e[0] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t n, Exponent max_exp) {
    std::uniform_int_distribution<Exponent> ex(0, max_exp);
    std::vector<Exponent> e(n);
    for (auto& x : e) x = ex(rng);
    return Monomial(std::move(e));
}

/// Squarefree ideal from random subsets of variables.
inline MonomialIdeal random_squarefree_ideal(std::mt19937& rng, std::size_t n, std::size_t max_gens) {
    return radical(random_ideal(rng, n, 1, max_gens));
}

/// Every multiset of part sizes with k >= 2 and total <= max_total, descending.
inline std::vector<std::vector<std::size_t>> all_part_lists(std::size_t max_total) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto go = [&](auto&& self, std::size_t remaining, std::size_t cap) -> void {
        if (cur.size() >= 2) out.push_back(cur);
        for (std::size_t p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    go(go, max_total, max_total);
    return out;
}

} // namespace coverlab::testing

#endif
