#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flatwall/mesh.h"
#include "oracles.h"

using namespace flatwall;

TEST_CASE("elementary 4-wall has 30 vertices and degrees in {2,3}") {
    Wall w = buildElementaryWall(4);
    CHECK(w.graph.n() == 30);
    for (VertexId v : w.graph.vertices()) {
        size_t d = w.graph.neighbors(v).size();
        CHECK(d >= 2);
        CHECK(d <= 3);
    }
    CHECK(checkMesh(w.graph, w.mesh));
    CHECK(w.pegs.size() >= 4);
    // corners are pegs and lie on the boundary paths
    for (VertexId c : w.corners) CHECK(vsetContains(w.pegs, c));
}

TEST_CASE("smallest wall r=2 is a 6-cycle") {
    Wall w = buildElementaryWall(2);
    CHECK(w.graph.n() == 6);
    CHECK(w.graph.m() == 6);
    CHECK(checkMesh(w.graph, w.mesh));
    CHECK(w.outerCycle.size() == 6);
    auto bricks = wallBricks(w);
    CHECK(bricks.size() == 1);
}

TEST_CASE("walls for r=2..7 pass the mesh checker; r<2 rejected") {
    CHECK_THROWS_AS(buildElementaryWall(1), InputError);
    for (int r = 2; r <= 7; r++) {
        Wall w = buildElementaryWall(r);
        std::string why;
        CHECK_MESSAGE(checkMesh(w.graph, w.mesh, &why), why);
        CHECK(w.graph.n() == 2 * r * r - 2);
        auto bricks = wallBricks(w);
        CHECK(static_cast<int>(bricks.size()) == w.graph.m() - w.graph.n() + 1);
    }
}

TEST_CASE("grid distance closed form matches examples") {
    CHECK(gridDistance({2, 2}, {5, 5}, 6, 6) == 3);
    CHECK(gridDistance({1, 2}, {8, 7}, 8, 8) == 1);
    CHECK(gridDistance({3, 3}, {3, 3}, 5, 5) == 0);
    CHECK_THROWS_AS(gridDistance({0, 1}, {1, 1}, 3, 3), InputError);
}

TEST_CASE("grid distance equals the curve-crossing oracle up to 5x5") {
    for (int rows = 2; rows <= 5; rows++)
        for (int cols = 2; cols <= 5; cols++)
            for (int i1 = 1; i1 <= rows; i1++)
                for (int j1 = 1; j1 <= cols; j1++)
                    for (int i2 = 1; i2 <= rows; i2++)
                        for (int j2 = 1; j2 <= cols; j2++) {
                            GridCoord a{i1, j1}, b{i2, j2};
                            CHECK(gridDistance(a, b, rows, cols) ==
                                  oracles::curveCrossingDistance(a, b, rows, cols));
                        }
}

TEST_CASE("grid distance is symmetric and triangle on random triples") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(1, 50);
    for (int trial = 0; trial < 20000; trial++) {
        GridCoord a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
        int ab = gridDistance(a, b, 50, 50);
        int ba = gridDistance(b, a, 50, 50);
        CHECK(ab == ba);
        CHECK(ab <= gridDistance(a, c, 50, 50) + gridDistance(c, b, 50, 50));
    }
}

TEST_CASE("grid contraction of a wall: surjective connected fibers containing junctions") {
    for (int r : {3, 4, 6}) {
        Wall w = buildElementaryWall(r);
        GridContraction f = gridContraction(w.mesh);
        CHECK(f.rows == r);
        CHECK(f.cols == r);
        // every mesh vertex mapped
        for (VertexId v : w.graph.vertices()) CHECK(f.f.count(v) == 1);
        // surjective, fibers connected, fiber (i,j) contains P_i ∩ Q_j
        for (int i = 1; i <= r; i++)
            for (int j = 1; j <= r; j++) {
                VSet fiber;
                for (auto& [v, c] : f.f)
                    if (c.i == i && c.j == j) fiber.push_back(v);
                fiber = vsetFrom(std::move(fiber));
                REQUIRE(!fiber.empty());
                CHECK(isConnected(w.graph.inducedSubgraph(fiber)));
                VSet pi = vsetFrom(std::vector<VertexId>(w.mesh.horizontal[i - 1].begin(), w.mesh.horizontal[i - 1].end()));
                VSet qj = vsetFrom(std::vector<VertexId>(w.mesh.vertical[j - 1].begin(), w.mesh.vertical[j - 1].end()));
                for (VertexId v : vsetIntersect(pi, qj)) CHECK(vsetContains(fiber, v));
            }
    }
}

TEST_CASE("mesh distance is a pseudometric; balls match the predicate") {
    Wall w = buildElementaryWall(5);
    GridContraction f = gridContraction(w.mesh);
    const VSet vs = w.graph.vertices();
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> dv(0, static_cast<int>(vs.size()) - 1);
    for (int trial = 0; trial < 3000; trial++) {
        VertexId a = vs[dv(rng)], b = vs[dv(rng)], c = vs[dv(rng)];
        CHECK(meshDistance(f, a, b) == meshDistance(f, b, a));
        CHECK(meshDistance(f, a, b) <= meshDistance(f, a, c) + meshDistance(f, c, b));
        CHECK(meshDistance(f, a, a) == 0);
    }
    // distinct vertices at distance zero exist (same fiber)
    bool zeroPair = false;
    for (VertexId a : vs)
        for (VertexId b : vs)
            if (a < b && meshDistance(f, a, b) == 0) zeroPair = true;
    CHECK(zeroPair);

    for (int l : {0, 1, 2, 3}) {
        for (VertexId x : {vs[0], vs[10], vs[20]}) {
            VSet bl = ball(w.mesh, f, x, l);
            for (VertexId y : vs) {
                bool inBall = vsetContains(bl, y);
                CHECK(inBall == (l > 0 && meshDistance(f, x, y) < l));
            }
        }
    }
    // l=0 gives the empty ball, l=1 gives the fiber of x
    CHECK(ball(w.mesh, f, vs[0], 0).empty());
    VSet fib;
    for (auto& [v, c] : f.f)
        if (c == f.at(vs[0])) fib.push_back(v);
    CHECK(ball(w.mesh, f, vs[0], 1) == vsetFrom(std::move(fib)));
}

TEST_CASE("subwall extraction: full range is the wall itself; inner windows validate") {
    Wall w = buildElementaryWall(6);
    Wall full = subwallExtract(w, 1, 6, 1, 6);
    CHECK(full.graph.n() == w.graph.n());
    Wall inner = subwallExtract(w, 2, 4, 2, 4);
    CHECK(inner.size() == 3);
    std::string why;
    CHECK_MESSAGE(checkMesh(inner.graph, inner.mesh, &why), why);
    // horizontal paths are subpaths of distinct horizontal paths of w
    for (int i = 0; i < 3; i++) {
        const auto& sp = inner.mesh.horizontal[i];
        const auto& parent = w.mesh.horizontal[i + 1];
        auto it = std::search(parent.begin(), parent.end(), sp.begin(), sp.end());
        CHECK(it != parent.end());
    }
    // ranges avoiding 1 and r keep the subwall off the outer cycle
    VSet outer = vsetFrom(std::vector<VertexId>(w.outerCycle.begin(), w.outerCycle.end()));
    CHECK(vsetIntersect(inner.vertexSet(), outer).empty());
    CHECK_THROWS_AS(subwallExtract(w, 3, 2, 1, 2), InputError);
}

TEST_CASE("H1 construction counts") {
    H1Graph h1 = buildH1(1);
    CHECK(h1.graph.n() == 4);
    CHECK(h1.graph.m() == 4 + 2);
    for (int r : {1, 2, 3}) {
        H1Graph h = buildH1(r);
        CHECK(h.graph.n() == 4 * r * r);
        int gridEdges = 2 * 2 * r * (2 * r - 1);
        CHECK(h.graph.m() == gridEdges + 2 * (2 * r - 1));
        CHECK(checkMesh(h.graph, h.grid));
    }
}

TEST_CASE("strip selection avoids forbidden vertices and places subwalls") {
    Wall w = buildElementaryWall(14);
    Config cfg = Config::relaxed(2, 3);
    cfg.stripRows = 7;
    cfg.subwallSize = 3;
    cfg.subwallMargin = 1;
    cfg.pairDistance = 3;
    SUBCASE("empty forbidden set picks the first strip") {
        auto ss = stripSubwalls(w, cfg, {});
        CHECK(ss.strip.rowLo == 1);
        CHECK(ss.subwalls.size() == 2);  // t(t-1) = 2
        for (auto& sw : ss.subwalls) CHECK(checkMesh(sw.graph, sw.mesh));
        // pairwise distance between subwalls
        GridContraction f = gridContraction(w.mesh);
        for (size_t a = 0; a < ss.subwalls.size(); a++)
            for (size_t b = a + 1; b < ss.subwalls.size(); b++)
                for (VertexId u : ss.subwalls[a].vertexSet())
                    for (VertexId v : ss.subwalls[b].vertexSet())
                        CHECK(meshDistance(f, u, v) >= cfg.pairDistance);
    }
    SUBCASE("forbidden vertex in the first strip pushes the choice down") {
        VertexId bad = w.mesh.horizontal[2][3];
        auto ss = stripSubwalls(w, cfg, {bad});
        CHECK(ss.strip.rowLo == 8);
    }
    SUBCASE("relaxed 2-subwall placement on a 30-wall sized instance") {
        Wall big = buildElementaryWall(16);
        Config c2 = Config::relaxed(2, 3);
        c2.stripRows = 8;
        c2.subwallSize = 4;
        c2.subwallMargin = 2;
        c2.pairDistance = 4;
        auto ss = stripSubwalls(big, c2, {});
        CHECK(ss.subwalls.size() == 2);
        GridContraction f = gridContraction(big.mesh);
        for (VertexId u : ss.subwalls[0].vertexSet())
            for (VertexId v : ss.subwalls[1].vertexSet()) CHECK(meshDistance(f, u, v) >= c2.pairDistance);
    }
}

TEST_CASE("mesh checker rejects a swapped vertical order") {
    Wall w = buildElementaryWall(4);
    Mesh bad = w.mesh;
    std::swap(bad.vertical[1], bad.vertical[2]);
    std::string why;
    CHECK_FALSE(checkMesh(w.graph, bad, &why));
    CHECK(why.find("condition (3)") != std::string::npos);
}

TEST_CASE("subdivided wall: pegs and corners are images of elementary degree-2 vertices") {
    Wall w = buildElementaryWall(3);
    // subdivide every edge once
    std::vector<std::pair<VertexId, VertexId>> segs;
    std::map<EdgeId, VertexId> midOf;
    VertexId next = 1000;
    std::vector<Edge> edges;
    EdgeId ne = 0;
    for (const Edge& e : w.graph.edges()) {
        VertexId mid = next++;
        midOf[e.id] = mid;
        edges.push_back(Edge{ne++, e.u, mid});
        edges.push_back(Edge{ne++, mid, e.v});
    }
    VSet vs = w.graph.vertices();
    for (auto& [e, mid] : midOf) vs.push_back(mid);
    Graph sub(vsetFrom(std::move(vs)), std::move(edges));
    auto subdividePath = [&](const std::vector<VertexId>& p) {
        std::vector<VertexId> out;
        for (size_t i = 0; i < p.size(); i++) {
            out.push_back(p[i]);
            if (i + 1 < p.size()) out.push_back(midOf[w.graph.edgeBetween(p[i], p[i + 1])]);
        }
        return out;
    };
    Mesh m2;
    for (auto& p : w.mesh.horizontal) m2.horizontal.push_back(subdividePath(p));
    for (auto& q : w.mesh.vertical) m2.vertical.push_back(subdividePath(q));
    Wall w2 = wallFromMesh(sub, m2);
    CHECK(w2.corners == w.corners);
    CHECK(w2.pegs.size() == w.pegs.size());
    auto bricks2 = wallBricks(w2);
    CHECK(static_cast<int>(bricks2.size()) == w2.graph.m() - w2.graph.n() + 1);
}
