#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flatwall/dispersed.h"
#include "oracles.h"

using namespace flatwall;
using testutil::GridInstance;
using testutil::makeGrid;
using testutil::withChords;

TEST_CASE("no M-paths at all gives the empty blocker") {
    GridInstance gi = makeGrid(4, 4);
    GridContraction f = gridContraction(gi.mesh);
    for (auto mode : {0, 1}) {
        auto res = mode ? findDispersed(gi.graph, gi.mesh, f, 2, 2)
                        : findSemiDispersed(gi.graph, gi.mesh, f, 2, 2);
        CHECK_FALSE(res.isFamily);
        CHECK(res.blocker.apex.empty());
        CHECK(res.blocker.zset.empty());
        CHECK(verifyBlocker(gi.graph, gi.mesh, f, res.blocker, 20));
    }
}

TEST_CASE("radius beyond the grid dimension short-circuits to a tiny blocker") {
    GridInstance gi = makeGrid(4, 4);
    GridContraction f = gridContraction(gi.mesh);
    auto res = findSemiDispersed(gi.graph, gi.mesh, f, 10, 3);
    CHECK_FALSE(res.isFamily);
    CHECK(res.blocker.apex.empty());
    CHECK(static_cast<int>(res.blocker.zset.size()) <= 1);
    CHECK(res.iterations == 0);
}

TEST_CASE("planted far-apart chords yield a validated family") {
    const int l = 3, k = 3;
    GridInstance base = makeGrid(11, 15);
    std::vector<std::pair<VertexId, VertexId>> chords;
    for (int i = 0; i < k; i++) {
        int col = 4 + 4 * i;
        chords.push_back({base.at(4, col), base.at(8, col)});
    }
    GridInstance gi = withChords(base, chords);
    GridContraction f = gridContraction(gi.mesh);
    for (int mode = 0; mode < 2; mode++) {
        auto res = mode ? findDispersed(gi.graph, gi.mesh, f, l, k)
                        : findSemiDispersed(gi.graph, gi.mesh, f, l, k);
        REQUIRE(res.isFamily);
        std::string why;
        CHECK_MESSAGE(validateFamily(gi.graph, gi.mesh, f, res.family, k, &why), why);
        CHECK(res.iterations <= 3 * k);
    }
}

TEST_CASE("k=1 returns any single long M-path") {
    GridInstance base = makeGrid(9, 9);
    GridInstance gi = withChords(base, {{base.at(3, 3), base.at(7, 7)}});
    GridContraction f = gridContraction(gi.mesh);
    auto res = findDispersed(gi.graph, gi.mesh, f, 3, 1);
    REQUIRE(res.isFamily);
    CHECK(res.family.paths.size() == 1);
}

TEST_CASE("chords sharing one vertex force the blocker branch") {
    GridInstance base = makeGrid(9, 9);
    VertexId hub = base.at(5, 5);
    GridInstance gi = withChords(base, {{hub, base.at(2, 2)}, {hub, base.at(8, 8)}, {hub, base.at(2, 8)}});
    GridContraction f = gridContraction(gi.mesh);
    auto res = findSemiDispersed(gi.graph, gi.mesh, f, 3, 2);
    CHECK_FALSE(res.isFamily);
    CHECK(static_cast<int>(res.blocker.apex.size()) <= 1);
    CHECK(static_cast<int>(res.blocker.zset.size()) <= 3);
    CHECK(verifyBlocker(gi.graph, gi.mesh, f, res.blocker, 100));
}

TEST_CASE("corrupting an emitted blocker is detected") {
    GridInstance base = makeGrid(9, 9);
    VertexId hub = base.at(5, 5);
    GridInstance gi = withChords(base, {{hub, base.at(2, 2)}, {hub, base.at(8, 8)}});
    GridContraction f = gridContraction(gi.mesh);
    auto res = findSemiDispersed(gi.graph, gi.mesh, f, 3, 2);
    REQUIRE_FALSE(res.isFamily);
    REQUIRE(verifyBlocker(gi.graph, gi.mesh, f, res.blocker, 100));
    REQUIRE(!res.blocker.zset.empty() || !res.blocker.apex.empty());
    BlockerCert bad = res.blocker;
    if (!bad.apex.empty()) {
        bad.apex.clear();
        CHECK_FALSE(verifyBlocker(gi.graph, gi.mesh, f, bad, 100));
    } else {
        bad.zset.pop_back();
        CHECK_FALSE(verifyBlocker(gi.graph, gi.mesh, f, bad, 100));
    }
}

TEST_CASE("exact slow mode blocks at d < l") {
    GridInstance base = makeGrid(9, 9);
    VertexId hub = base.at(5, 5);
    GridInstance gi = withChords(base, {{hub, base.at(2, 2)}, {hub, base.at(8, 8)}});
    GridContraction f = gridContraction(gi.mesh);
    auto res = findSemiDispersed(gi.graph, gi.mesh, f, 3, 2, /*exact=*/true);
    if (!res.isFamily) {
        CHECK_FALSE(res.blocker.weakened);
        CHECK(verifyBlocker(gi.graph, gi.mesh, f, res.blocker, 100));
    }
}

TEST_CASE("randomized planted instances always return a validated branch") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 120; trial++) {
        std::uniform_int_distribution<int> dim(6, 12), dk(1, 3), dl(2, 4), dc(0, 5);
        int rows = dim(rng), cols = dim(rng);
        GridInstance base = makeGrid(rows, cols);
        std::vector<std::pair<VertexId, VertexId>> chords;
        int nch = dc(rng);
        std::uniform_int_distribution<int> di(1, rows), dj(1, cols);
        for (int c = 0; c < nch; c++) {
            VertexId u = base.at(di(rng), dj(rng)), v = base.at(di(rng), dj(rng));
            if (u != v) chords.push_back({u, v});
        }
        GridInstance gi = withChords(base, chords);
        GridContraction f = gridContraction(gi.mesh);
        int k = dk(rng), l = dl(rng);
        for (int mode = 0; mode < 2; mode++) {
            auto res = mode ? findDispersed(gi.graph, gi.mesh, f, l, k)
                            : findSemiDispersed(gi.graph, gi.mesh, f, l, k);
            CHECK(res.iterations <= 3 * k);
            if (res.isFamily) {
                std::string why;
                CHECK_MESSAGE(validateFamily(gi.graph, gi.mesh, f, res.family, k, &why), why);
            } else {
                CHECK(static_cast<int>(res.blocker.apex.size()) <= k - 1);
                CHECK(static_cast<int>(res.blocker.zset.size()) <= 3 * k - 3);
                CHECK(verifyBlocker(gi.graph, gi.mesh, f, res.blocker, 200));
            }
        }
    }
}

TEST_CASE("verify_blocker guard rejects oversized instances") {
    GridInstance gi = makeGrid(10, 10);
    GridContraction f = gridContraction(gi.mesh);
    BlockerCert cert{DisperseMode::Semi, 2, {}, {}, true};
    CHECK_THROWS_AS(verifyBlocker(gi.graph, gi.mesh, f, cert, 13), CapacityError);
}
