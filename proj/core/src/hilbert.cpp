#include "coverlab/hilbert.hpp"

#include <algorithm>
#include <numeric>

#include "coverlab/errors.hpp"

namespace coverlab {

namespace {

void require_family_args(const std::vector<std::size_t>& parts, int s) {
    if (s < 1) throw PreconditionError("closed form requires s >= 1");
    if (parts.size() < 2) throw PreconditionError("closed form requires k >= 2 parts");
    if (std::any_of(parts.begin(), parts.end(), [](std::size_t p) { return p < 1; }))
        throw PreconditionError("closed form requires every p_i >= 1");
}

std::size_t total(const std::vector<std::size_t>& parts) {
    return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

IntPolynomial one_minus_t_pow_of(std::uint64_t d) {
    IntPolynomial p{1};
    p.add_term(d, -1);
    return p;
}

IntPolynomial numerator_rec(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return IntPolynomial{1};
    if (ideal.is_unit()) return {};

    const auto n = ideal.ambient();
    std::vector<std::size_t> count(n, 0);
    for (const auto& g : ideal.generators())
        for (std::size_t v = 0; v < n; ++v)
            if (g[v] > 0) ++count[v];

    const auto best = std::max_element(count.begin(), count.end());
    if (*best <= 1) {
        // Pairwise coprime generators form a regular sequence.
        IntPolynomial p{1};
        for (const auto& g : ideal.generators()) p = p * one_minus_t_pow_of(g.degree());
        return p;
    }

    const auto var = static_cast<std::size_t>(best - count.begin());
    Exponent e = 0;
    for (const auto& g : ideal.generators())
        if (g[var] > 0 && (e == 0 || g[var] < e)) e = g[var];
    const auto pivot = Monomial::variable(n, var, e);

    // I + (pivot): the pivot absorbs every generator involving var and is
    // coprime to the rest.
    std::vector<Monomial> rest;
    for (const auto& g : ideal.generators())
        if (g[var] == 0) rest.push_back(g);
    auto with_pivot = one_minus_t_pow_of(e) * numerator_rec(MonomialIdeal(n, std::move(rest)));

    return with_pivot + numerator_rec(colon(ideal, pivot)).shifted(e);
}

} // namespace

bool same_rational_function(const HilbertSeries& a, const HilbertSeries& b) {
    const auto k = std::max(a.den_pow, b.den_pow);
    return times_one_minus_t_pow(a.numerator, k - a.den_pow) ==
           times_one_minus_t_pow(b.numerator, k - b.den_pow);
}

HilbertSeries numerator(const MonomialIdeal& ideal) {
    return {numerator_rec(ideal), ideal.ambient()};
}

ReducedSeries reduce(const HilbertSeries& series) {
    if (series.numerator.is_zero()) throw PreconditionError("reduce: zero numerator (zero module)");
    ReducedSeries out{series.numerator, series.den_pow, 0};
    while (true) {
        auto [q, rem] = divide_by_one_minus_t(out.h);
        if (rem != 0) break;
        if (out.dim == 0)
            throw PreconditionError("reduce: numerator has more (1 - t) factors than the denominator");
        out.h = std::move(q);
        --out.dim;
    }
    out.multiplicity = out.h.at_one();
    if (out.multiplicity <= 0) throw PreconditionError("reduce: multiplicity is not positive");
    return out;
}

std::vector<Integer> expand(const HilbertSeries& series, std::size_t max_degree) {
    std::vector<Integer> c(max_degree + 1, Integer(0));
    for (std::size_t k = 0; k <= max_degree; ++k) c[k] = series.numerator.coeff(k);
    // Each factor 1 / (1 - t) is a prefix sum.
    for (std::size_t r = 0; r < series.den_pow; ++r)
        for (std::size_t k = 1; k <= max_degree; ++k) c[k] += c[k - 1];
    return c;
}

std::vector<Integer> hilbert_function_oracle(const MonomialIdeal& ideal, std::size_t max_degree) {
    const auto n = ideal.ambient();
    std::vector<Integer> out(max_degree + 1, Integer(0));
    if (n == 0) {
        if (!contains(ideal, Monomial(0))) out[0] = 1;
        return out;
    }
    std::vector<Exponent> e(n, 0);
    for (std::size_t d = 0; d <= max_degree; ++d) {
        // Walk all compositions of d into n parts.
        std::fill(e.begin(), e.end(), 0);
        e[n - 1] = static_cast<Exponent>(d);
        std::size_t outside = 0;
        while (true) {
            if (!contains(ideal, Monomial(e))) ++outside;
            std::size_t k = n - 1;
            while (k > 0 && e[k] == 0) --k;
            if (k == 0) break;
            const auto tail = e[k];
            e[k] = 0;
            e[k - 1] += 1;
            e[n - 1] = tail - 1;
        }
        out[d] = outside;
    }
    return out;
}

HilbertSeries closed_form_crown(std::size_t n, int s) {
    if (n < 3) throw PreconditionError("crown closed form holds for n >= 3");
    if (s < 1) throw PreconditionError("crown closed form requires s >= 1");
    const auto us = static_cast<std::size_t>(s);
    IntPolynomial p;
    for (std::size_t i = 0; i < n * us; ++i) p.add_term(i, Integer(i + 1));
    for (std::size_t i = 0; i + 3 <= n; ++i) p.add_term(n * us + i, Integer((n - i - 1) * us));
    p.add_term(n * us + n - 2, -Integer((n - 1) * us));
    for (std::size_t i = 0; i + 2 <= us; ++i)
        p.add_term(us * (2 * n - 2) - i * (n - 2), -Integer((i + 1) * n));
    return {p, 2 * n - 2};
}

HilbertSeries closed_form_bracket(const std::vector<std::size_t>& parts, int s) {
    require_family_args(parts, s);
    const auto n = total(parts);
    const auto k = parts.size();
    const auto us = static_cast<std::size_t>(s);
    IntPolynomial p{1};
    for (auto pi : parts) p.add_term(us * (n - pi), -1);
    p.add_term(us * n, Integer(k - 1));
    return {p, n};
}

HilbertSeries closed_form_bracket_plus_m(const std::vector<std::size_t>& parts, int s) {
    require_family_args(parts, s);
    const auto n = total(parts);
    const auto us = static_cast<std::size_t>(s);
    IntPolynomial p{1};
    p.add_term(n, -1);
    for (auto pi : parts) {
        p.add_term(us * (n - pi), -1);
        p.add_term(us * (n - pi) + pi, 1);
    }
    return {p, n};
}

HilbertSeries closed_form_symbolic_multipartite(const std::vector<std::size_t>& parts, int s) {
    require_family_args(parts, s);
    const auto n = total(parts);
    const auto k = parts.size();
    const auto us = static_cast<std::size_t>(s);
    const auto r = us / 2;
    IntPolynomial p{1};
    if (us % 2 == 0) {
        p.add_term(r * n, -1);
    } else {
        p.add_term((r + 1) * n, Integer(k - 1));
        for (auto pi : parts) p.add_term((n - pi) + r * n, -1);
    }
    // sum_{j<r} sum_i (t^{p_i} - 1) t^{(s-j)(n-p_i) + j p_i}
    for (std::size_t j = 0; j < r; ++j)
        for (auto pi : parts) {
            const auto base = (us - j) * (n - pi) + j * pi;
            p.add_term(base + pi, 1);
            p.add_term(base, -1);
        }
    return {p, n};
}

Integer linear_power_multiplicity(std::size_t h, int s) {
    if (h < 1 || s < 1) throw PreconditionError("linear_power_multiplicity requires h >= 1, s >= 1");
    return binomial(static_cast<unsigned long>(s) + h - 1, h);
}

Integer symbolic_multiplicity(const SimpleGraph& g, IdealKind kind, int s) {
    if (g.edges().empty()) throw PreconditionError("symbolic_multiplicity: graph has no edges");
    if (s < 1) throw PreconditionError("symbolic_multiplicity requires s >= 1");
    if (kind == IdealKind::Cover)
        return binomial(static_cast<unsigned long>(s) + 1, 2) * static_cast<unsigned long>(g.edges().size());
    const auto mc = minimum_vertex_covers(g);
    return linear_power_multiplicity(mc.size, s) * static_cast<unsigned long>(mc.count);
}

Integer minh_multiplicity(const MonomialIdeal& ideal, int s) {
    if (!ideal.is_squarefree()) throw PreconditionError("minh_multiplicity requires a squarefree ideal");
    const auto primes = minimal_primes(ideal);
    const auto h = primes.front().height();
    const auto minh = std::count_if(primes.begin(), primes.end(),
                                    [h](const PrimeSupport& p) { return p.height() == h; });
    return linear_power_multiplicity(h, s) * static_cast<unsigned long>(minh);
}

} // namespace coverlab
