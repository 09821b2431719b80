#include "coverlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "coverlab/errors.hpp"

namespace coverlab {

std::size_t MultipartiteFamily::vertex_count() const {
    return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

SimpleGraph::SimpleGraph(std::vector<std::string> labels, std::vector<Edge> edges,
                         std::optional<GraphFamily> family)
    : labels_(std::move(labels)), edges_(std::move(edges)), family_(std::move(family)) {
    {
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError("graph labels must be unique");
    }
    for (auto& [u, v] : edges_) {
        if (u >= labels_.size() || v >= labels_.size())
            throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("graph has a loop at " + labels_[u]);
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw PreconditionError("graph has a duplicate edge");
}

std::optional<std::size_t> SimpleGraph::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

SimpleGraph crown(std::size_t n) {
    if (n < 2) throw PreconditionError("crown graph needs n >= 2");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) edges.emplace_back(i, n + j);
    return SimpleGraph(std::move(labels), std::move(edges), CrownFamily{n});
}

namespace {

MultipartiteFamily sort_parts(std::vector<std::size_t> parts) {
    if (parts.size() < 2) throw PreconditionError("complete multipartite graph needs k >= 2 parts");
    if (std::any_of(parts.begin(), parts.end(), [](std::size_t p) { return p < 1; }))
        throw PreconditionError("every part must have p_i >= 1");
    std::vector<std::size_t> order(parts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return parts[a] > parts[b]; });
    MultipartiteFamily fam;
    for (auto i : order) fam.parts.push_back(parts[i]);
    fam.order = std::move(order);
    return fam;
}

} // namespace

SimpleGraph complete_multipartite(std::vector<std::size_t> parts) {
    auto fam = sort_parts(std::move(parts));
    std::vector<std::string> labels;
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < fam.parts.size(); ++i)
        for (std::size_t j = 0; j < fam.parts[i]; ++j) {
            labels.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            part_of.push_back(i);
        }
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < labels.size(); ++u)
        for (std::size_t v = u + 1; v < labels.size(); ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return SimpleGraph(std::move(labels), std::move(edges), std::move(fam));
}

SimpleGraph complete_graph(std::size_t n) {
    if (n < 2) throw PreconditionError("complete graph needs n >= 2");
    return complete_multipartite(std::vector<std::size_t>(n, 1));
}

EdgeListError::EdgeListError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

SimpleGraph from_edge_list(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<Edge> edges;
    auto vertex = [&](const std::string& label) {
        auto [it, inserted] = index.emplace(label, labels.size());
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw EdgeListError(EdgeListError::Kind::Parse, lineno,
                                "expected two vertex labels, got " + std::to_string(tokens.size()));
        if (tokens[0] == tokens[1])
            throw EdgeListError(EdgeListError::Kind::Loop, lineno, "loop at " + tokens[0]);
        auto u = vertex(tokens[0]);
        auto v = vertex(tokens[1]);
        Edge e = std::minmax(u, v);
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw EdgeListError(EdgeListError::Kind::DuplicateEdge, lineno,
                                "duplicate edge " + tokens[0] + " " + tokens[1]);
        edges.push_back(e);
    }
    return SimpleGraph(std::move(labels), std::move(edges));
}

std::string to_edge_list(const SimpleGraph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) out += g.labels()[u] + " " + g.labels()[v] + "\n";
    return out;
}

MonomialIdeal edge_ideal(const SimpleGraph& g) {
    const auto n = g.vertex_count();
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edges()) {
        std::vector<Exponent> e(n, 0);
        e[u] = e[v] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

CoverIdeal cover_ideal(const SimpleGraph& g) {
    const auto n = g.vertex_count();
    auto ideal = MonomialIdeal::unit(n);
    for (auto [u, v] : g.edges()) {
        const MonomialIdeal prime(n, {Monomial::variable(n, u), Monomial::variable(n, v)});
        ideal = intersect(ideal, prime);
    }
    return {std::move(ideal), g.edges().empty()};
}

std::vector<std::vector<std::size_t>> minimal_vertex_covers(const SimpleGraph& g) {
    std::vector<std::vector<std::size_t>> covers;
    const auto cover = cover_ideal(g).ideal;
    for (const auto& gen : cover.generators()) covers.push_back(gen.support());
    return covers;
}

std::size_t cover_degree(const SimpleGraph& g) {
    if (g.edges().empty()) throw PreconditionError("cover_degree: graph has no edges");
    return static_cast<std::size_t>(cover_ideal(g).ideal.max_degree());
}

MinimumCoverCount minimum_vertex_covers(const SimpleGraph& g) {
    if (g.edges().empty()) throw PreconditionError("minimum_vertex_covers: graph has no edges");
    const auto covers = cover_ideal(g).ideal;
    MinimumCoverCount out{static_cast<std::size_t>(covers.min_degree()), 0};
    for (const auto& gen : covers.generators())
        if (gen.degree() == out.size) ++out.count;
    return out;
}

CrownMonomials crown_monomials(std::size_t n) {
    if (n < 2) throw PreconditionError("crown graph needs n >= 2");
    const auto vars = 2 * n;
    std::vector<Exponent> ex(vars, 0), ey(vars, 0);
    for (std::size_t i = 0; i < n; ++i) {
        ex[i] = 1;
        ey[n + i] = 1;
    }
    CrownMonomials out{Monomial(ex), Monomial(ey), Monomial(std::vector<Exponent>(vars, 1)), {}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Exponent> e(vars, 1);
        e[i] = e[n + i] = 0;
        out.mi.emplace_back(std::move(e));
    }
    return out;
}

MultipartiteMonomials multipartite_monomials(std::vector<std::size_t> parts) {
    auto fam = sort_parts(std::move(parts));
    MultipartiteMonomials out;
    out.parts = fam.parts;
    out.n = fam.vertex_count();
    out.m = Monomial(std::vector<Exponent>(out.n, 1));
    std::size_t offset = 0;
    for (auto p : out.parts) {
        std::vector<Exponent> mi(out.n, 0), ni(out.n, 1);
        for (std::size_t j = 0; j < p; ++j) {
            mi[offset + j] = 1;
            ni[offset + j] = 0;
        }
        out.part_products.emplace_back(std::move(mi));
        out.cofactors.emplace_back(std::move(ni));
        offset += p;
    }
    return out;
}

ClosedFormGenerators closed_form_cover_generators(const GraphFamily& family) {
    std::vector<Monomial> gens;
    std::size_t ambient = 0;
    if (const auto* c = std::get_if<CrownFamily>(&family)) {
        if (c->n < 3) throw PreconditionError("crown closed form requires n >= 3");
        auto cm = crown_monomials(c->n);
        gens.push_back(cm.mx);
        gens.push_back(cm.my);
        gens.insert(gens.end(), cm.mi.begin(), cm.mi.end());
        ambient = 2 * c->n;
    } else {
        const auto& mp = std::get<MultipartiteFamily>(family);
        auto mm = multipartite_monomials(mp.parts);
        gens = mm.cofactors;
        ambient = mm.n;
    }
    return {MonomialIdeal(ambient, gens), gens};
}

} // namespace coverlab
