#include "coverlab/monomial_ideal.hpp"

#include <algorithm>
#include <bit>

#include "coverlab/errors.hpp"

namespace coverlab {

namespace {

void check_ambient(std::size_t a, std::size_t b) {
    if (a != b) throw AmbientMismatch(a, b);
}

// Support folded into 64 bits; a | b implies mask(a) ⊆ mask(b) for any ambient.
std::uint64_t support_mask(const Monomial& m) {
    std::uint64_t mask = 0;
    auto e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) mask |= std::uint64_t{1} << (i % 64);
    return mask;
}

} // namespace

MonomialIdeal minimalize(std::size_t ambient, std::vector<Monomial> gens) {
    return MonomialIdeal(ambient, std::move(gens));
}

MonomialIdeal::MonomialIdeal(std::size_t ambient, std::vector<Monomial> gens) : ambient_(ambient) {
    for (const auto& g : gens) check_ambient(ambient, g.ambient());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // After sorting by degree, a generator can only be divided by an earlier one.
    std::vector<std::uint64_t> masks;
    gens_.reserve(gens.size());
    masks.reserve(gens.size());
    for (auto& g : gens) {
        const auto mask = support_mask(g);
        bool redundant = false;
        for (std::size_t k = 0; k < gens_.size(); ++k) {
            if ((masks[k] & ~mask) != 0) continue;
            if (divides(gens_[k], g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            gens_.push_back(std::move(g));
            masks.push_back(mask);
        }
    }
}

MonomialIdeal MonomialIdeal::unit(std::size_t ambient) {
    return MonomialIdeal(ambient, {Monomial(ambient)});
}

MonomialIdeal MonomialIdeal::principal(const Monomial& m) {
    return MonomialIdeal(m.ambient(), {m});
}

bool MonomialIdeal::is_squarefree() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

std::uint64_t MonomialIdeal::max_degree() const noexcept {
    return gens_.empty() ? 0 : gens_.back().degree();
}

std::uint64_t MonomialIdeal::min_degree() const noexcept {
    return gens_.empty() ? 0 : gens_.front().degree();
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_ambient(a.ambient(), b.ambient());
    std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_ambient(a.ambient(), b.ambient());
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(g * h);
    return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_ambient(a.ambient(), b.ambient());
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
    return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
    check_ambient(ideal.ambient(), m.ambient());
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.generators()) gens.push_back(colon(g, m));
    return MonomialIdeal(ideal.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
    check_ambient(ideal.ambient(), by.ambient());
    // I : 0 = S
    auto result = MonomialIdeal::unit(ideal.ambient());
    for (const auto& g : by.generators()) result = intersect(result, colon(ideal, g));
    return result;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
    check_ambient(ideal.ambient(), m.ambient());
    for (const auto& g : ideal.generators()) {
        if (g.degree() > m.degree()) break;
        if (divides(g, m)) return true;
    }
    return false;
}

bool contains(const MonomialIdeal& ideal, const MonomialIdeal& sub) {
    return std::all_of(sub.generators().begin(), sub.generators().end(),
                       [&](const Monomial& g) { return contains(ideal, g); });
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.generators()) gens.push_back(radical(g));
    return MonomialIdeal(ideal.ambient(), std::move(gens));
}

PrimeSupport::PrimeSupport(std::vector<std::size_t> variables) : vars_(std::move(variables)) {
    std::sort(vars_.begin(), vars_.end());
    if (vars_.empty()) throw PreconditionError("prime support must be non-empty");
    if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
        throw PreconditionError("prime support has duplicate variables");
}

std::uint64_t PrimeSupport::degree_of(const Monomial& u) const {
    std::uint64_t d = 0;
    for (auto v : vars_) {
        if (v >= u.ambient()) throw AmbientMismatch(v + 1, u.ambient());
        d += u[v];
    }
    return d;
}

MonomialIdeal PrimeSupport::to_ideal(std::size_t ambient) const {
    return power(ambient, 1);
}

MonomialIdeal PrimeSupport::power(std::size_t ambient, Exponent s) const {
    if (vars_.back() >= ambient) throw AmbientMismatch(vars_.back() + 1, ambient);
    // All compositions of s into height() parts.
    std::vector<Monomial> gens;
    std::vector<Exponent> e(ambient, 0);
    const std::size_t r = vars_.size();
    std::vector<Exponent> parts(r, 0);
    parts[r - 1] = s;
    while (true) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t k = 0; k < r; ++k) e[vars_[k]] = parts[k];
        gens.emplace_back(e);
        // Next composition: move one unit from the last nonzero non-first slot leftwards.
        std::size_t k = r - 1;
        while (k > 0 && parts[k] == 0) --k;
        if (k == 0) break;
        const Exponent tail = parts[k];
        parts[k] = 0;
        parts[k - 1] += 1;
        parts[r - 1] = tail - 1;
    }
    return MonomialIdeal(ambient, std::move(gens));
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw PreconditionError("minimal_primes: zero ideal");
    if (ideal.is_unit()) throw PreconditionError("minimal_primes: unit ideal");
    if (ideal.ambient() > 64) throw PreconditionError("minimal_primes: more than 64 variables");

    std::vector<std::uint64_t> edges;
    const auto rad = radical(ideal);
    for (const auto& g : rad.generators()) edges.push_back(support_mask(g));
    std::sort(edges.begin(), edges.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b);
    });

    // Berge's incremental minimal-transversal construction.
    std::vector<std::uint64_t> transversals{0};
    for (auto edge : edges) {
        std::vector<std::uint64_t> next;
        for (auto t : transversals) {
            if (t & edge) {
                next.push_back(t);
                continue;
            }
            for (auto bits = edge; bits; bits &= bits - 1) next.push_back(t | (bits & -bits));
        }
        std::sort(next.begin(), next.end(), [](std::uint64_t a, std::uint64_t b) {
            const int pa = std::popcount(a), pb = std::popcount(b);
            return pa < pb || (pa == pb && a < b);
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        transversals.clear();
        for (auto t : next) {
            bool has_subset = std::any_of(transversals.begin(), transversals.end(),
                                          [t](std::uint64_t k) { return (k & ~t) == 0; });
            if (!has_subset) transversals.push_back(t);
        }
    }

    std::vector<PrimeSupport> primes;
    primes.reserve(transversals.size());
    for (auto t : transversals) {
        std::vector<std::size_t> vars;
        for (auto bits = t; bits; bits &= bits - 1)
            vars.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
        primes.emplace_back(std::move(vars));
    }
    std::sort(primes.begin(), primes.end(), [](const PrimeSupport& a, const PrimeSupport& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a < b;
    });
    return primes;
}

std::string to_string(const MonomialIdeal& ideal, std::span<const std::string> labels,
                      std::string_view separator) {
    if (ideal.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < ideal.size(); ++i) {
        if (i) out += ", ";
        out += to_string(ideal.generators()[i], labels, separator);
    }
    return out;
}

} // namespace coverlab
