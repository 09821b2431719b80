#ifndef COVERLAB_POLYNOMIAL_HPP
#define COVERLAB_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coverlab {

using Integer = boost::multiprecision::cpp_int;

/// Exact univariate polynomial in t with integer coefficients; index = power
/// of t. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    /// c * t^k
    static IntPolynomial term(std::size_t k, Integer c = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    Integer at_one() const;

    /// Adds c * t^k in place.
    void add_term(std::size_t k, const Integer& c);

    /// p * t^k
    IntPolynomial shifted(std::size_t k) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator-(IntPolynomial a);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Synthetic division by (1 - t). Returns (q, p(1)); p = (1 - t) q exactly
/// when p(1) == 0.
std::pair<IntPolynomial, Integer> divide_by_one_minus_t(const IntPolynomial& p);

/// p * (1 - t)^k
IntPolynomial times_one_minus_t_pow(IntPolynomial p, std::size_t k);

/// "1 - 3t^2 + 2t^3"; zero renders as "0".
std::string to_string(const IntPolynomial& p);

/// Inverse of to_string; throws std::invalid_argument on malformed input.
IntPolynomial parse_polynomial(const std::string& text);

/// Binomial coefficient C(n, k), zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

} // namespace coverlab

#endif
