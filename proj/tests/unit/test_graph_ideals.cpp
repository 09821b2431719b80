#include <doctest.h>

#include <random>

#include "coverlab/errors.hpp"
#include "coverlab/graph.hpp"
#include "support/oracles.hpp"

using namespace coverlab;
using namespace coverlab::testing;

namespace {

SimpleGraph triangle() { return from_edge_list("x y\nx z\ny z\n"); }

std::set<std::pair<std::string, std::string>> labelled_edges(const SimpleGraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : g.edges()) out.insert(std::minmax(g.labels()[u], g.labels()[v]));
    return out;
}

std::set<std::vector<std::size_t>> covers_as_set(const SimpleGraph& g) {
    const auto covers = minimal_vertex_covers(g);
    return {covers.begin(), covers.end()};
}

std::vector<std::size_t> indices(const SimpleGraph& g, std::initializer_list<const char*> labels) {
    std::vector<std::size_t> out;
    for (auto l : labels) out.push_back(*g.index_of(l));
    std::sort(out.begin(), out.end());
    return out;
}

SimpleGraph random_graph(std::mt19937& rng, std::size_t n, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return SimpleGraph(default_labels(n), std::move(edges));
}

} // namespace

TEST_CASE("crown graphs") {
    const auto c3 = crown(3);
    CHECK(c3.vertex_count() == 6);
    CHECK(c3.edges().size() == 6);
    const auto c4 = crown(4);
    CHECK(c4.vertex_count() == 8);
    CHECK(c4.edges().size() == 12);
    CHECK(c4.labels().front() == "x1");
    CHECK(c4.labels().back() == "y4");
    CHECK_THROWS_AS(crown(1), PreconditionError);
    REQUIRE(c3.family().has_value());
    CHECK(std::get<CrownFamily>(*c3.family()).n == 3);
}

TEST_CASE("complete multipartite graphs") {
    CHECK(complete_multipartite({1, 1, 1}).edges().size() == 3);
    const auto g = complete_multipartite({2, 2, 1, 1});
    CHECK(g.vertex_count() == 6);
    CHECK(g.edges().size() == 13); // (36 - 10) / 2
    CHECK(complete_multipartite({2, 1}).edges().size() == 2);
    CHECK_THROWS_AS(complete_multipartite({3}), PreconditionError);
    CHECK_THROWS_AS(complete_multipartite({2, 0}), PreconditionError);

    const auto unsorted = complete_multipartite({1, 3, 2});
    const auto& fam = std::get<MultipartiteFamily>(*unsorted.family());
    CHECK(fam.parts == std::vector<std::size_t>{3, 2, 1});
    CHECK(fam.order == std::vector<std::size_t>{1, 2, 0});
    CHECK(unsorted.labels()[0] == "x1_1");
    CHECK(unsorted.labels()[5] == "x3_1");
    CHECK(complete_graph(4).edges().size() == 6);
}

TEST_CASE("edge-list parsing") {
    const auto path = from_edge_list("a b\nb c");
    CHECK(path.vertex_count() == 3);
    CHECK(path.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(path.edges().size() == 2);

    const auto commented = from_edge_list("# header\n\na b  # trailing\n  c a\n");
    CHECK(commented.edges().size() == 2);

    auto kind_of = [](const char* text) {
        try {
            from_edge_list(text);
        } catch (const EdgeListError& e) {
            return e.kind();
        }
        FAIL("expected an EdgeListError");
        return EdgeListError::Kind::Parse;
    };
    CHECK(kind_of("a a") == EdgeListError::Kind::Loop);
    CHECK(kind_of("a b\nb a") == EdgeListError::Kind::DuplicateEdge);
    CHECK(kind_of("a b c") == EdgeListError::Kind::Parse);
    CHECK(kind_of("a") == EdgeListError::Kind::Parse);

    const auto c3 = crown(3);
    const auto reparsed = from_edge_list(to_edge_list(c3));
    CHECK(labelled_edges(reparsed) == labelled_edges(c3));
}

TEST_CASE("edge ideals") {
    const auto tri = triangle();
    CHECK(edge_ideal(tri) == ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    const auto I = edge_ideal(crown(3));
    CHECK(I.size() == 6);
    for (const auto& g : I.generators()) CHECK(g.degree() == 2);
    CHECK(edge_ideal(SimpleGraph({"a", "b"}, {})).is_zero());
}

TEST_CASE("cover ideals") {
    CHECK(cover_ideal(triangle()).ideal == ideal(3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(cover_ideal(crown(3)).ideal == closed_form_cover_generators(CrownFamily{3}).ideal);
    const auto single = from_edge_list("a b");
    CHECK(cover_ideal(single).ideal == ideal(2, {{1, 0}, {0, 1}}));
    CHECK_FALSE(cover_ideal(single).edgeless);

    const auto empty = cover_ideal(SimpleGraph({"a", "b"}, {}));
    CHECK(empty.edgeless);
    CHECK(empty.ideal.is_unit());
}

TEST_CASE("minimal vertex covers") {
    const auto c4 = crown(4);
    CHECK(covers_as_set(c4).count(indices(c4, {"x2", "x3", "x4", "y2", "y3", "y4"})) == 1);
    const auto g = complete_multipartite({2, 2, 1, 1});
    CHECK(covers_as_set(g).count(indices(g, {"x1_1", "x1_2", "x2_1", "x2_2", "x3_1"})) == 1);
    CHECK(covers_as_set(from_edge_list("a b")) == std::set<std::vector<std::size_t>>{{0}, {1}});
}

TEST_CASE("closed-form cover generators") {
    const auto crown3 = closed_form_cover_generators(CrownFamily{3});
    std::vector<std::uint64_t> degrees;
    for (const auto& m : crown3.notation_order) degrees.push_back(m.degree());
    CHECK(degrees == std::vector<std::uint64_t>{3, 3, 4, 4, 4});
    CHECK(crown3.ideal.max_degree() == 4);

    const auto k21 = closed_form_cover_generators(complete_multipartite({2, 1}).family().value());
    CHECK(k21.ideal == ideal(3, {{0, 0, 1}, {1, 1, 0}}));
    CHECK(k21.ideal.max_degree() == 2);

    const auto k111 = closed_form_cover_generators(complete_multipartite({1, 1, 1}).family().value());
    CHECK(k111.notation_order == std::vector<Monomial>{mono({0, 1, 1}), mono({1, 0, 1}), mono({1, 1, 0})});

    CHECK_THROWS_AS(closed_form_cover_generators(CrownFamily{2}), PreconditionError);
}

TEST_CASE("cover degree") {
    CHECK(cover_degree(crown(4)) == 6);
    CHECK(cover_degree(complete_multipartite({3, 2, 1})) == 5);
    CHECK(cover_degree(from_edge_list("a b")) == 1);
    CHECK_THROWS_AS(cover_degree(SimpleGraph({"a"}, {})), PreconditionError);
}

TEST_CASE("closed forms agree with the intersection of edge primes") {
    for (std::size_t n = 3; n <= 5; ++n)
        CHECK(cover_ideal(crown(n)).ideal == closed_form_cover_generators(CrownFamily{n}).ideal);
    for (const auto& parts : all_part_lists(7)) {
        const auto g = complete_multipartite(parts);
        CHECK(cover_ideal(g).ideal == closed_form_cover_generators(*g.family()).ideal);
        CHECK(cover_degree(g) == g.vertex_count() - parts.back());
    }
}

TEST_CASE("cover generators, minimal covers and edge-ideal primes correspond") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_graph(rng, 3 + trial % 7, 0.45);
        if (g.edges().empty()) continue;
        const auto J = cover_ideal(g).ideal;
        for (const auto& gen : J.generators()) CHECK(gen.is_squarefree());

        const auto brute = minimal_vertex_covers_brute(g);
        CHECK(covers_as_set(g) == brute);
        CHECK(J.size() == brute.size());

        std::set<std::vector<std::size_t>> primes;
        for (const auto& p : minimal_primes(edge_ideal(g))) primes.insert({p.variables().begin(), p.variables().end()});
        CHECK(primes == brute);
    }
}

TEST_CASE("minimum vertex covers") {
    const auto mc = minimum_vertex_covers(crown(3));
    CHECK(mc.size == 3);
    CHECK(mc.count == 2);
    const auto tri = minimum_vertex_covers(triangle());
    CHECK(tri.size == 2);
    CHECK(tri.count == 3);
}
