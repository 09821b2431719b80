#ifndef COVERLAB_GRAPH_HPP
#define COVERLAB_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "coverlab/monomial_ideal.hpp"

namespace coverlab {

struct CrownFamily {
    std::size_t n = 0;
    friend bool operator==(const CrownFamily&, const CrownFamily&) = default;
};

struct MultipartiteFamily {
    /// Part sizes, sorted descending.
    std::vector<std::size_t> parts;
    /// order[i] is the position in the caller's input of sorted part i.
    std::vector<std::size_t> order;

    std::size_t vertex_count() const;
    friend bool operator==(const MultipartiteFamily&, const MultipartiteFamily&) = default;
};

using GraphFamily = std::variant<CrownFamily, MultipartiteFamily>;

using Edge = std::pair<std::size_t, std::size_t>;

/// A finite simple graph whose vertices double as the variables of the
/// ambient polynomial ring. Edges are stored with u < v, sorted.
class SimpleGraph {
  public:
    SimpleGraph() = default;
    SimpleGraph(std::vector<std::string> labels, std::vector<Edge> edges,
                std::optional<GraphFamily> family = std::nullopt);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::optional<GraphFamily>& family() const noexcept { return family_; }

    std::optional<std::size_t> index_of(std::string_view label) const;

  private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::optional<GraphFamily> family_;
};

/// C_{n,n}: vertices x1..xn, y1..yn; edges {x_i, y_j} for i != j.
SimpleGraph crown(std::size_t n);

/// K_{p_1,...,p_k}. Parts are sorted descending; vertex x{i}_{j} is the j-th
/// vertex of the i-th sorted part.
SimpleGraph complete_multipartite(std::vector<std::size_t> parts);

/// K_n as K_{1,...,1}.
SimpleGraph complete_graph(std::size_t n);

class EdgeListError : public std::runtime_error {
  public:
    enum class Kind { Parse, Loop, DuplicateEdge };
    EdgeListError(Kind kind, std::size_t line, const std::string& what);
    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

  private:
    Kind kind_;
    std::size_t line_;
};

/// Parses "u v" lines; '#' starts a comment. Vertices are numbered in order
/// of first appearance.
SimpleGraph from_edge_list(std::string_view text);
std::string to_edge_list(const SimpleGraph& g);

MonomialIdeal edge_ideal(const SimpleGraph& g);

struct CoverIdeal {
    MonomialIdeal ideal;
    /// Set for an edgeless graph, whose cover ideal is the unit ideal.
    bool edgeless = false;
};

/// J(G) as the intersection of the edge primes (x_u, x_v).
CoverIdeal cover_ideal(const SimpleGraph& g);

/// Inclusion-minimal vertex covers, each as sorted vertex indices, in the
/// canonical order of the corresponding cover-ideal generators.
std::vector<std::vector<std::size_t>> minimal_vertex_covers(const SimpleGraph& g);

/// max{|C| : C minimal vertex cover}.
std::size_t cover_degree(const SimpleGraph& g);

/// Size of a smallest vertex cover, and how many covers attain it.
struct MinimumCoverCount {
    std::size_t size = 0;
    std::size_t count = 0;
};
MinimumCoverCount minimum_vertex_covers(const SimpleGraph& g);

/// The named monomials of the crown notation, over x1..xn, y1..yn.
struct CrownMonomials {
    Monomial mx, my, m;
    std::vector<Monomial> mi; // M_i = M / (x_i y_i)
};
CrownMonomials crown_monomials(std::size_t n);

/// The named monomials of the multipartite notation over the sorted parts.
struct MultipartiteMonomials {
    std::vector<std::size_t> parts;
    std::size_t n = 0;
    std::vector<Monomial> part_products; // M_i: product of the i-th part
    Monomial m;                          // product of all variables
    std::vector<Monomial> cofactors;     // N_i = M / M_i
};
MultipartiteMonomials multipartite_monomials(std::vector<std::size_t> parts);

/// Generators written directly from the family's closed form:
/// crown (M_x, M_y, M_1..M_n), n >= 3; multipartite (N_1..N_k), k >= 2.
/// The returned vector keeps that notation order; the ideal is canonical.
struct ClosedFormGenerators {
    MonomialIdeal ideal;
    std::vector<Monomial> notation_order;
};
ClosedFormGenerators closed_form_cover_generators(const GraphFamily& family);

} // namespace coverlab

#endif
