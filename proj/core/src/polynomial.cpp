#include "coverlab/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace coverlab {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    for (auto c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::term(std::size_t k, Integer c) {
    IntPolynomial p;
    p.add_term(k, c);
    return p;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::at_one() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

void IntPolynomial::add_term(std::size_t k, const Integer& c) {
    if (c == 0) return;
    if (coeffs_.size() <= k) coeffs_.resize(k + 1);
    coeffs_[k] += c;
    trim();
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Integer> c(k, Integer(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator-(IntPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, Integer> divide_by_one_minus_t(const IntPolynomial& p) {
    // With q_i the prefix sums of p: p = (1 - t) * sum_{i<deg} q_i t^i + p(1) t^deg.
    const auto& c = p.coefficients();
    if (c.empty()) return {IntPolynomial{}, Integer(0)};
    std::vector<Integer> q(c.size() - 1);
    Integer running = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        running += c[i];
        q[i] = running;
    }
    running += c.back();
    return {IntPolynomial(std::move(q)), running};
}

IntPolynomial times_one_minus_t_pow(IntPolynomial p, std::size_t k) {
    const IntPolynomial one_minus_t{1, -1};
    for (std::size_t i = 0; i < k; ++i) p = p * one_minus_t;
    return p;
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Integer mag = c[k] < 0 ? Integer(-c[k]) : c[k];
        if (first) {
            if (c[k] < 0) out += "-";
        } else {
            out += c[k] < 0 ? " - " : " + ";
        }
        first = false;
        if (k == 0 || mag != 1) out += mag.str();
        if (k >= 1) out += "t";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

IntPolynomial parse_polynomial(const std::string& text) {
    IntPolynomial p;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("malformed polynomial '") + text + "': " + why);
    };
    bool first = true;
    skip_ws();
    if (text.compare(i, std::string::npos, "0") == 0) return p;
    while (true) {
        skip_ws();
        if (i >= text.size()) {
            if (first) fail("empty");
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail("expected + or -");
        }
        first = false;
        Integer coef = 1;
        bool had_digits = false;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) {
            coef = Integer(text.substr(start, i - start));
            had_digits = true;
        }
        std::size_t power = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == start) fail("missing exponent");
                power = std::stoul(text.substr(start, i - start));
            }
        } else if (!had_digits) {
            fail("expected a term");
        }
        p.add_term(power, sign * coef);
    }
    return p;
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace coverlab
