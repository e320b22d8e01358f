#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"
#include "tptri/embedded_graph.hpp"

using namespace tptri;

namespace {

// canonical form of a face walk: lexicographic minimum over rotations and the
// two directions, so gauge choices do not matter when comparing
std::vector<int> canon_walk(std::vector<int> w) {
    std::vector<int> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (size_t r = 0; r < w.size(); ++r) {
            std::vector<int> cand(w.size());
            for (size_t i = 0; i < w.size(); ++i) cand[i] = w[(r + i) % w.size()];
            if (best.empty() || cand < best) best = cand;
        }
        std::reverse(w.begin(), w.end());
    }
    return best;
}

std::multiset<std::vector<int>> canon_faces(const EmbeddedGraph& g) {
    std::multiset<std::vector<int>> out;
    for (auto& w : g.trace_faces()) out.insert(canon_walk(w));
    return out;
}

}  // namespace

TEST_CASE("K6 projective embedding validates with 10 triangular faces") {
    auto g = fixtures::k6_projective();
    REQUIRE(g.num_vertices() == 6);
    REQUIRE(g.num_edges() == 15);
    auto rep = g.validate(true);
    CAPTURE(rep.violations.empty() ? "" : rep.violations[0].rule + ": " + rep.violations[0].locus);
    REQUIRE(rep.ok);
    REQUIRE(rep.faces == 10);
    REQUIRE(rep.euler_characteristic == 1);
    auto walks = g.trace_faces();
    REQUIRE(walks.size() == 10);
    for (auto& w : walks) REQUIRE(w.size() == 3);
}

TEST_CASE("pprs round trip on K6") {
    auto g = fixtures::k6_projective();
    std::string text = write_pprs(g);
    auto h = parse_pprs(text);
    REQUIRE(h.num_vertices() == 6);
    REQUIRE(h.num_edges() == 15);
    REQUIRE(h.validate(true).ok);
    REQUIRE(write_pprs(h) == text);
    REQUIRE(canon_faces(h) == canon_faces(g));
}

TEST_CASE("pprs parse errors") {
    SECTION("id out of range") {
        std::string text = "pprs 1\nvertices 6\nrot 0: 7+\n";
        REQUIRE_THROWS_MATCHES(parse_pprs(text), PprsError,
                               Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("out of range")));
    }
    SECTION("duplicate vertex id") {
        std::string text = "pprs 1\nvertices 2\nrot 0: 1+\nrot 0: 1+\n";
        REQUIRE_THROWS_MATCHES(parse_pprs(text), PprsError,
                               Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("duplicate")));
    }
    SECTION("syntax error carries line number") {
        std::string text = "pprs 1\nvertices 2\nrot 0 1+\n";
        REQUIRE_THROWS_MATCHES(parse_pprs(text), PprsError,
                               Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("line 3")));
    }
    SECTION("degenerate n=1 parses but fails validation") {
        std::string text = "pprs 1\nvertices 1\n";
        auto g = parse_pprs(text);
        REQUIRE(g.num_vertices() == 1);
        REQUIRE(g.num_edges() == 0);
        REQUIRE_FALSE(g.validate(false).ok);
    }
    SECTION("comments and blank lines are fine") {
        std::string text = "# a comment\npprs 1\nvertices 2\n\nrot 0: 1+  # trailing\nrot 1: 0+\n";
        REQUIRE(parse_pprs(text).num_edges() == 1);
    }
}

TEST_CASE("sphere embedding is rejected: chi = 2") {
    auto g = fixtures::tetrahedron_sphere();
    auto rep = g.validate(true);
    REQUIRE_FALSE(rep.ok);
    bool saw = false;
    for (auto& v : rep.violations)
        if (v.rule == "projective-plane") saw = true;
    REQUIRE(saw);
    REQUIRE(rep.euler_characteristic == 2);
}

TEST_CASE("missing reciprocal rotation entry is reported") {
    std::vector<std::vector<HalfEdge>> rot = {{{1, 0}}, {}};
    auto g = EmbeddedGraph::from_rotations(2, std::move(rot));
    auto rep = g.validate(false);
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.violations[0].rule == "reciprocity");
}

TEST_CASE("signature mismatch between endpoints is reported") {
    std::vector<std::vector<HalfEdge>> rot = {{{1, 0}}, {{0, 1}}};
    auto g = EmbeddedGraph::from_rotations(2, std::move(rot));
    auto rep = g.validate(false);
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.violations[0].rule == "reciprocity");
}

TEST_CASE("single edge traces one walk of length 2") {
    std::vector<std::vector<HalfEdge>> rot = {{{1, 0}}, {{0, 0}}};
    auto g = EmbeddedGraph::from_rotations(2, std::move(rot));
    auto walks = g.trace_faces();
    REQUIRE(walks.size() == 1);
    REQUIRE(walks[0].size() == 2);
}

TEST_CASE("face walk lengths sum to 2E") {
    auto g = fixtures::k6_projective();
    size_t total = 0;
    for (auto& w : g.trace_faces()) total += w.size();
    REQUIRE(total == 2 * static_cast<size_t>(g.num_edges()));
}

TEST_CASE("link cycles of K6") {
    auto g = fixtures::k6_projective();
    for (int v = 0; v < 6; ++v) {
        auto hc = g.link_cycle(v);
        REQUIRE(hc.length() == g.degree(v));
        REQUIRE(hc.length() == 5);
        REQUIRE(g.is_contractible(hc));
        std::set<int> on(hc.vertices.begin(), hc.vertices.end());
        REQUIRE(on.size() == 5);
        REQUIRE(on.count(v) == 0);
    }
}

TEST_CASE("face triangles are contractible with empty interior") {
    auto g = fixtures::k6_projective();
    for (auto& w : g.trace_faces()) {
        auto tri = g.make_cycle(w);
        REQUIRE(g.is_contractible(tri));
        REQUIRE(g.interior_vertices(tri).empty());
    }
}

TEST_CASE("interior partitions the remaining vertices") {
    auto g = fixtures::k6_projective();
    for (auto& w : g.trace_faces()) {
        auto tri = g.make_cycle(w);
        auto inner = g.interior_vertices(tri);
        REQUIRE(inner.size() + tri.vertices.size() <= 6u);
    }
}

TEST_CASE("K6 is nice") {
    auto g = fixtures::k6_projective();
    REQUIRE(g.is_nice().nice);
}

TEST_CASE("odd signature sum means non-contractible") {
    auto g = fixtures::k6_projective();
    // search some cycle with odd signature sum; K6 on P^2 has non-contractible
    // 3-cycles (non-facial triangles)
    bool found = false;
    for (int u = 0; u < 6 && !found; ++u)
        for (int v = u + 1; v < 6 && !found; ++v)
            for (int w = v + 1; w < 6 && !found; ++w) {
                auto c = g.make_cycle({u, v, w});
                if (c.signature_sum == 1) {
                    REQUIRE_FALSE(g.is_contractible(c));
                    found = true;
                }
            }
    REQUIRE(found);
}

TEST_CASE("segment readout") {
    CycleWitness c;
    c.vertices = {1, 2, 3, 4, 5};
    auto p1 = segment(c, 1, 3, 5);
    REQUIRE(p1.vertices == std::vector<int>{1, 2, 3});
    REQUIRE(p1.edge_count() == 2);
    REQUIRE_FALSE(p1.odd());
    auto p2 = segment(c, 1, 3, 2);
    REQUIRE(p2.vertices == std::vector<int>{1, 5, 4, 3});
    REQUIRE(p2.edge_count() == 3);
    REQUIRE(p2.odd());
    REQUIRE_THROWS_AS(segment(c, 1, 3, 6), std::invalid_argument);
}

TEST_CASE("gauge flip changes no observable") {
    auto g = fixtures::k6_projective();
    auto base_faces = canon_faces(g);
    for (int v = 0; v < 6; ++v) {
        auto h = g.gauge_flipped(v);
        REQUIRE(h.validate(true).ok);
        REQUIRE(canon_faces(h) == base_faces);
        for (int u = 0; u < 6; ++u) {
            auto c1 = g.link_cycle(u);
            auto c2 = h.link_cycle(u);
            REQUIRE(g.is_contractible(c1) == h.is_contractible(c2));
        }
        REQUIRE(h.is_nice().nice == g.is_nice().nice);
    }
}
