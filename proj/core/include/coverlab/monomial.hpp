#ifndef COVERLAB_MONOMIAL_HPP
#define COVERLAB_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coverlab {

using Exponent = std::uint32_t;

/// A monomial x^a over a fixed number of variables, stored as its exponent
/// vector. The total degree is cached. Values are immutable once built.
class Monomial {
  public:
    Monomial() = default;

    /// The identity monomial (all exponents zero) in `ambient` variables.
    explicit Monomial(std::size_t ambient);
    explicit Monomial(std::vector<Exponent> exponents);
    Monomial(std::initializer_list<Exponent> exponents);

    /// x_var in `ambient` variables.
    static Monomial variable(std::size_t ambient, std::size_t var, Exponent power = 1);

    std::size_t ambient() const noexcept { return exps_.size(); }
    std::uint64_t degree() const noexcept { return degree_; }
    Exponent operator[](std::size_t var) const { return exps_[var]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    bool is_identity() const noexcept { return degree_ == 0; }
    bool is_squarefree() const noexcept;

    /// Indices of variables with positive exponent, ascending.
    std::vector<std::size_t> support() const;

    // Equality is exponent-vector equality; the ordering is the canonical
    // generator order (total degree, then lexicographic on exponents).
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.exps_ == b.exps_;
    }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

  private:
    std::vector<Exponent> exps_;
    std::uint64_t degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);

/// a^k; throws ExponentOverflow when an exponent does not fit.
Monomial pow(const Monomial& a, Exponent k);

/// True iff a divides b (componentwise a <= b).
bool divides(const Monomial& a, const Monomial& b);

/// b / a, requiring divides(a, b).
Monomial exact_quotient(const Monomial& b, const Monomial& a);

/// g / gcd(g, m): the generator of (g) : m.
Monomial colon(const Monomial& g, const Monomial& m);

/// Componentwise min(e, 1).
Monomial radical(const Monomial& a);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Render with the given variable labels, e.g. "x1^2x2". The identity renders
/// as "1". When `separator` is non-empty it is placed between factors.
std::string to_string(const Monomial& m, std::span<const std::string> labels,
                      std::string_view separator = {});

/// Labels x1..xn.
std::vector<std::string> default_labels(std::size_t ambient);

} // namespace coverlab

#endif
