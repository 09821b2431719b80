#include "coverlab/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "coverlab/errors.hpp"

namespace coverlab {

namespace {

void check_ambient(const Monomial& a, const Monomial& b) {
    if (a.ambient() != b.ambient()) throw AmbientMismatch(a.ambient(), b.ambient());
}

std::uint64_t sum_of(const std::vector<Exponent>& v) {
    return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

} // namespace

Monomial::Monomial(std::size_t ambient) : exps_(ambient, 0) {}

Monomial::Monomial(std::vector<Exponent> exponents)
    : exps_(std::move(exponents)), degree_(sum_of(exps_)) {}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::vector<Exponent>(exponents)) {}

Monomial Monomial::variable(std::size_t ambient, std::size_t var, Exponent power) {
    if (var >= ambient) throw PreconditionError("variable index out of range");
    std::vector<Exponent> e(ambient, 0);
    e[var] = power;
    return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) out.push_back(i);
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_ambient(a, b);
    std::vector<Exponent> e(a.ambient());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    check_ambient(a, b);
    std::vector<Exponent> e(a.ambient());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    check_ambient(a, b);
    std::vector<Exponent> e(a.ambient());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (a[i] > std::numeric_limits<Exponent>::max() - b[i]) throw ExponentOverflow();
        e[i] = a[i] + b[i];
    }
    return Monomial(std::move(e));
}

Monomial pow(const Monomial& a, Exponent k) {
    std::vector<Exponent> e(a.ambient());
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::uint64_t v = std::uint64_t{a[i]} * k;
        if (v > std::numeric_limits<Exponent>::max()) throw ExponentOverflow();
        e[i] = static_cast<Exponent>(v);
    }
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    check_ambient(a, b);
    if (a.degree() > b.degree()) return false;
    auto ea = a.exponents();
    auto eb = b.exponents();
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (ea[i] > eb[i]) return false;
    return true;
}

Monomial exact_quotient(const Monomial& b, const Monomial& a) {
    if (!divides(a, b)) throw PreconditionError("exact_quotient: divisor does not divide");
    std::vector<Exponent> e(b.ambient());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = b[i] - a[i];
    return Monomial(std::move(e));
}

Monomial colon(const Monomial& g, const Monomial& m) {
    check_ambient(g, m);
    std::vector<Exponent> e(g.ambient());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = g[i] > m[i] ? g[i] - m[i] : 0;
    return Monomial(std::move(e));
}

Monomial radical(const Monomial& a) {
    std::vector<Exponent> e(a.ambient());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] > 0 ? 1 : 0;
    return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    // FNV-1a over the exponents.
    std::size_t h = 1469598103934665603ull;
    for (Exponent e : m.exponents()) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_string(const Monomial& m, std::span<const std::string> labels,
                      std::string_view separator) {
    if (m.is_identity()) return "1";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < m.ambient(); ++i) {
        if (m[i] == 0) continue;
        if (!first) out += separator;
        first = false;
        out += i < labels.size() ? labels[i] : "x" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

std::vector<std::string> default_labels(std::size_t ambient) {
    std::vector<std::string> out;
    out.reserve(ambient);
    for (std::size_t i = 0; i < ambient; ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
}

} // namespace coverlab
