#include "coverlab/betti.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "coverlab/errors.hpp"

namespace coverlab {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* who) {
    if (ideal.is_zero() || ideal.is_unit())
        throw PreconditionError(std::string(who) + ": ideal must be proper and nonzero");
}

template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < count && !failed;) {
                    try {
                        fn(i);
                    } catch (...) {
                        if (!failed.exchange(true)) failure = std::current_exception();
                    }
                }
            });
    }
    if (failure) std::rethrow_exception(failure);
}

// Cone over some vertex v: tau in K implies tau + v in K. Cones are acyclic.
bool is_cone(const std::vector<std::uint64_t>& faces, std::uint64_t vertices) {
    const std::unordered_set<std::uint64_t> set(faces.begin(), faces.end());
    for (auto bits = vertices; bits; bits &= bits - 1) {
        const auto v = bits & (~bits + 1);
        if (std::all_of(faces.begin(), faces.end(),
                        [&](std::uint64_t f) { return set.count(f | v) > 0; }))
            return true;
    }
    return false;
}

// Faces of K^b(I) as masks over the ambient variables.
std::vector<std::uint64_t> koszul_faces(const MonomialIdeal& ideal, const Monomial& b) {
    const auto n = ideal.ambient();
    if (n > 64) throw PreconditionError("upper_koszul_complex: more than 64 variables");
    std::vector<const Monomial*> below;
    for (const auto& g : ideal.generators())
        if (divides(g, b)) below.push_back(&g);
    auto member = [&](std::uint64_t tau) {
        for (const auto* g : below) {
            bool ok = true;
            for (std::size_t v = 0; v < n && ok; ++v) {
                const Exponent bv = b[v] - ((tau >> v) & 1);
                ok = (*g)[v] <= bv;
            }
            if (ok) return true;
        }
        return false;
    };

    std::vector<std::uint64_t> faces;
    if (below.empty()) return faces;
    std::uint64_t support = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (b[v] > 0) support |= std::uint64_t{1} << v;

    // Grow faces by adding vertices above their current maximum; downward
    // closure guarantees every face is reached.
    faces.push_back(0);
    for (std::size_t head = 0; head < faces.size(); ++head) {
        const auto tau = faces[head];
        const std::size_t start = tau ? 64 - static_cast<std::size_t>(std::countl_zero(tau)) : 0;
        for (std::size_t v = start; v < n; ++v) {
            const auto bit = std::uint64_t{1} << v;
            if (!(support & bit)) continue;
            if (member(tau | bit)) faces.push_back(tau | bit);
        }
    }
    return faces;
}

SimplicialComplexLite to_complex(const std::vector<std::uint64_t>& masks, const Monomial& b) {
    SimplicialComplexLite c;
    c.vertices = b.support();
    for (auto m : masks) {
        Face f;
        for (auto bits = m; bits; bits &= bits - 1)
            f.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
        c.faces.push_back(std::move(f));
    }
    std::sort(c.faces.begin(), c.faces.end(), [](const Face& x, const Face& y) {
        return x.size() < y.size() || (x.size() == y.size() && x < y);
    });
    return c;
}

long family_total(const std::vector<std::size_t>& parts) {
    return static_cast<long>(std::accumulate(parts.begin(), parts.end(), std::size_t{0}));
}

std::vector<std::size_t> checked_sorted_parts(std::vector<std::size_t> parts) {
    if (parts.size() < 2) throw PreconditionError("multipartite family needs k >= 2");
    if (std::any_of(parts.begin(), parts.end(), [](std::size_t p) { return p < 1; }))
        throw PreconditionError("multipartite family needs every p_i >= 1");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

} // namespace

LcmLattice lcm_lattice(const MonomialIdeal& ideal) {
    require_proper_nonzero(ideal, "lcm_lattice");
    // Join-closure, one generator at a time.
    std::unordered_set<Monomial, MonomialHash> seen;
    std::vector<Monomial> elements;
    for (const auto& g : ideal.generators()) {
        const auto current = elements.size();
        if (seen.insert(g).second) elements.push_back(g);
        for (std::size_t i = 0; i < current; ++i) {
            auto l = lcm(elements[i], g);
            if (seen.insert(l).second) elements.push_back(std::move(l));
        }
    }
    std::sort(elements.begin(), elements.end());
    return {std::move(elements)};
}

SimplicialComplexLite upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& b) {
    if (b.ambient() != ideal.ambient()) throw AmbientMismatch(ideal.ambient(), b.ambient());
    return to_complex(koszul_faces(ideal, b), b);
}

BettiTable::BettiTable(std::size_t ambient, std::vector<BettiEntry> entries)
    : ambient_(ambient), entries_(std::move(entries)) {
    std::erase_if(entries_, [](const BettiEntry& e) { return e.rank == 0; });
    std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& x, const BettiEntry& y) {
        return x.i < y.i || (x.i == y.i && x.b < y.b);
    });
}

std::size_t BettiTable::at(int i, const Monomial& b) const {
    for (const auto& e : entries_)
        if (e.i == i && e.b == b) return e.rank;
    return 0;
}

std::map<std::pair<int, std::uint64_t>, std::size_t> BettiTable::coarse() const {
    std::map<std::pair<int, std::uint64_t>, std::size_t> out;
    for (const auto& e : entries_) out[{e.i, e.b.degree()}] += e.rank;
    return out;
}

long BettiTable::regularity() const {
    if (entries_.empty()) throw PreconditionError("regularity of an empty Betti table");
    long reg = std::numeric_limits<long>::min();
    for (const auto& e : entries_) reg = std::max(reg, static_cast<long>(e.b.degree()) - e.i);
    return reg;
}

int BettiTable::projective_dimension() const {
    if (entries_.empty()) throw PreconditionError("projective dimension of an empty Betti table");
    int pd = 0;
    for (const auto& e : entries_) pd = std::max(pd, e.i);
    return pd;
}

IntPolynomial BettiTable::k_polynomial() const {
    IntPolynomial k{1};
    for (const auto& e : entries_)
        k.add_term(e.b.degree(), (e.i % 2 == 0 ? -1 : 1) * Integer(e.rank));
    return k;
}

std::size_t default_thread_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("COVERLAB_THREADS")) {
        char* end = nullptr;
        const auto cap = std::strtoul(env, &end, 10);
        if (end != env && cap > 0) n = std::min<std::size_t>(n, cap);
    }
    return n;
}

BettiTable betti_table(const MonomialIdeal& ideal, BettiOptions options) {
    require_proper_nonzero(ideal, "betti_table");
    const auto lattice = lcm_lattice(ideal);
    const auto& bs = lattice.elements;

    std::vector<std::vector<std::size_t>> ranks(bs.size());
    const auto threads = options.threads ? options.threads : default_thread_count();
    parallel_for(bs.size(), threads, [&](std::size_t idx) {
        const auto& b = bs[idx];
        const auto faces = koszul_faces(ideal, b);
        std::uint64_t support = 0;
        for (std::size_t v = 0; v < b.ambient(); ++v)
            if (b[v] > 0) support |= std::uint64_t{1} << v;
        if (is_cone(faces, support)) return;
        ranks[idx] = reduced_homology_ranks(to_complex(faces, b));
    });

    std::vector<BettiEntry> entries;
    for (std::size_t idx = 0; idx < bs.size(); ++idx)
        for (std::size_t k = 0; k < ranks[idx].size(); ++k)
            if (ranks[idx][k] > 0) entries.push_back({static_cast<int>(k), bs[idx], ranks[idx][k]});
    return BettiTable(ideal.ambient(), std::move(entries));
}

long regularity(const MonomialIdeal& ideal, BettiOptions options) {
    return betti_table(ideal, options).regularity();
}

int projective_dimension(const MonomialIdeal& ideal, BettiOptions options) {
    return betti_table(ideal, options).quotient_projective_dimension();
}

long crown_power_regularity(std::size_t n, int s) {
    if (n < 3) throw PreconditionError("crown regularity formula holds for n >= 3");
    if (s < 1) throw PreconditionError("crown regularity formula requires s >= 1");
    return static_cast<long>(s) * (2 * static_cast<long>(n) - 2);
}

long multipartite_symbolic_regularity(const std::vector<std::size_t>& parts, int s) {
    if (s < 1) throw PreconditionError("multipartite regularity formula requires s >= 1");
    const auto sorted = checked_sorted_parts(parts);
    const long n = family_total(sorted);
    const long pk = static_cast<long>(sorted.back());
    return s * (n - pk) + pk - 1;
}

long partial_symbolic_regularity(const std::vector<std::size_t>& parts, int s, std::size_t j) {
    if (s < 2) throw PreconditionError("I_{s,j} regularity formula requires s >= 2");
    const auto sorted = checked_sorted_parts(parts);
    if (j < 1 || j > sorted.size()) throw PreconditionError("I_{s,j} requires 1 <= j <= k");
    const long n = family_total(sorted);
    const long pj = static_cast<long>(sorted[j - 1]);
    return s * (n - pj) + pj - 1;
}

long complete_graph_symbolic_regularity(std::size_t n, int s) {
    if (n < 2) throw PreconditionError("complete graph needs n >= 2");
    if (s < 1) throw PreconditionError("complete graph regularity formula requires s >= 1");
    return static_cast<long>(s) * (static_cast<long>(n) - 1);
}

} // namespace coverlab
