#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include "coverlab/betti.hpp"
#include "coverlab/polynomial.hpp"

namespace coverlab {

namespace {

struct Overflow {};

// Checked arithmetic for the machine-word elimination; the big-integer pass
// reruns the same code when a product leaves int64.
struct CheckedI64 {
    using T = std::int64_t;
    static T mul(T a, T b) {
        T r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T sub(T a, T b) {
        T r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T gcd(T a, T b) { return std::gcd(a, b); }
    static T abs(T a) { return a < 0 ? -a : a; }
};

struct Big {
    using T = Integer;
    static T mul(const T& a, const T& b) { return a * b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T gcd(const T& a, const T& b) { return boost::multiprecision::gcd(a, b); }
    static T abs(const T& a) { return a < 0 ? T(-a) : a; }
};

// Rank over Q by fraction-free row elimination. Rows are rescaled by their
// content after each update, which keeps entries small and leaves the row
// space over Q unchanged.
template <class Ops>
std::size_t rank_of(std::vector<std::vector<typename Ops::T>> rows, std::size_t cols) {
    using T = typename Ops::T;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            if (pivot == rows.size()) pivot = r;
            if (Ops::abs(rows[r][c]) == 1) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const T p = rows[rank][c];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const T a = rows[r][c];
            if (a == 0) continue;
            auto& row = rows[r];
            const auto& prow = rows[rank];
            T content = 0;
            for (std::size_t k = c; k < cols; ++k) {
                row[k] = Ops::sub(Ops::mul(p, row[k]), Ops::mul(a, prow[k]));
                if (row[k] != 0) content = Ops::gcd(content, Ops::abs(row[k]));
            }
            if (content > 1)
                for (std::size_t k = c; k < cols; ++k) row[k] /= content;
        }
        ++rank;
    }
    return rank;
}

std::size_t exact_rank(const std::vector<std::vector<std::int64_t>>& m, std::size_t cols) {
    try {
        return rank_of<CheckedI64>(m, cols);
    } catch (const Overflow&) {
        std::vector<std::vector<Integer>> big;
        big.reserve(m.size());
        for (const auto& row : m) big.emplace_back(row.begin(), row.end());
        return rank_of<Big>(std::move(big), cols);
    }
}

} // namespace

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplexLite& complex) {
    if (complex.faces.empty()) return {};

    // Faces grouped by dimension d (index d + 1), each face as a bitmask over
    // positions in the vertex list.
    std::unordered_map<std::size_t, std::size_t> position;
    std::size_t next = 0;
    for (const auto& f : complex.faces)
        for (auto v : f)
            if (position.emplace(v, next).second) ++next;
    if (next > 64) throw std::domain_error("reduced_homology_ranks: more than 64 vertices");

    std::vector<std::vector<std::uint64_t>> by_dim;
    for (const auto& f : complex.faces) {
        std::uint64_t mask = 0;
        for (auto v : f) mask |= std::uint64_t{1} << position.at(v);
        if (by_dim.size() <= f.size()) by_dim.resize(f.size() + 1);
        by_dim[f.size()].push_back(mask);
    }
    for (auto& level : by_dim) std::sort(level.begin(), level.end());

    // rank of the boundary from size-k faces to size-(k-1) faces.
    std::vector<std::size_t> boundary_rank(by_dim.size() + 1, 0);
    for (std::size_t k = 1; k < by_dim.size(); ++k) {
        const auto& rows_faces = by_dim[k];
        const auto& cols_faces = by_dim[k - 1];
        if (rows_faces.empty() || cols_faces.empty()) continue;
        std::unordered_map<std::uint64_t, std::size_t> col_index;
        for (std::size_t j = 0; j < cols_faces.size(); ++j) col_index.emplace(cols_faces[j], j);
        std::vector<std::vector<std::int64_t>> m(rows_faces.size(),
                                                 std::vector<std::int64_t>(cols_faces.size(), 0));
        for (std::size_t r = 0; r < rows_faces.size(); ++r) {
            std::int64_t sign = 1;
            for (auto bits = rows_faces[r]; bits; bits &= bits - 1) {
                const auto low = bits & (~bits + 1);
                auto it = col_index.find(rows_faces[r] & ~low);
                if (it == col_index.end())
                    throw std::domain_error("reduced_homology_ranks: face list is not downward closed");
                m[r][it->second] = sign;
                sign = -sign;
            }
        }
        boundary_rank[k] = exact_rank(m, cols_faces.size());
    }

    std::vector<std::size_t> ranks(by_dim.size(), 0);
    for (std::size_t k = 0; k < by_dim.size(); ++k)
        ranks[k] = by_dim[k].size() - boundary_rank[k] - boundary_rank[k + 1];
    while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
    return ranks;
}

} // namespace coverlab
