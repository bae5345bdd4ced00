#ifndef FLATWALL_TEST_ORACLES_H
#define FLATWALL_TEST_ORACLES_H

#include <random>

#include "flatwall/graph.h"
#include "flatwall/mesh.h"

// Brute-force reference implementations used only by tests. These stay
// independent of the library code paths they check.
namespace oracles {

using namespace flatwall;

// crossing distance on the grid straight from the curve definition:
// positions are faces of the plane grid, steps pass through vertices
int curveCrossingDistance(GridCoord a, GridCoord b, int rows, int cols);

// every simple path with >= 1 edge, both ends in mverts \ avoid, internal
// vertices outside mverts and avoid, and no edge of medges
std::vector<std::vector<VertexId>> allMPaths(const Graph& g, const VSet& mverts,
                                             const std::vector<EdgeId>& medges, const VSet& avoid);

// maximum number of vertex-disjoint paths, each with >= 1 edge and both
// ends in y (exponential; keep n small)
int maxDisjointYPathPacking(const Graph& g, const VSet& y, int stopAt = -1);

// is there a pair of disjoint paths s1-t1, s2-t2 with all internal
// vertices drawn from `allowedInternal` and the four ends distinct?
bool twoDisjointPaths(const Graph& g, VertexId s1, VertexId t1, VertexId s2, VertexId t2,
                      const VSet& allowedInternal);

// brute-force C-cross existence: some interleaved quadruple on the cycle
// admits two disjoint paths internally avoiding V(C)
bool hasCrossBrute(const Graph& g, const std::vector<VertexId>& cycle);

// exhaustive search for r pairwise disjoint intervals / s sharing a point
bool intervalsHaveDisjoint(const std::vector<std::pair<int, int>>& iv, int r);
bool intervalsHaveCommonPoint(const std::vector<std::pair<int, int>>& iv, int s);

int longestNonDecreasing(const std::vector<double>& seq);
int longestNonIncreasing(const std::vector<double>& seq);

// random connected graph with n vertices, m extra edges beyond a spanning
// tree, optional parallel edges/loops
Graph randomConnectedGraph(std::mt19937& rng, int n, int extraEdges, bool multi = false);

Graph randomConnectedMaxDeg4(std::mt19937& rng, int n);

// all graphs on n labeled vertices as edge masks (n <= 7)
bool maskConnected(int n, unsigned long long mask);
std::vector<std::pair<int, int>> maskEdges(int n);

// shortest cycle through the lexicographically smallest choices, empty if
// acyclic
std::vector<VertexId> canonicalCycle(const Graph& g);

}  // namespace oracles

#endif

// ----- shared test scaffolding ---------------------------------------------

namespace testutil {

using namespace flatwall;

struct GridInstance {
    Graph graph;
    Mesh mesh;
    int rows = 0, cols = 0;
    VertexId at(int i, int j) const { return (i - 1) * cols + (j - 1); }  // row i, col j (1-based)
};

// rows x cols grid with the identity mesh structure
GridInstance makeGrid(int rows, int cols);

// grid plus extra chord edges; chords get fresh edge ids after the grid's
GridInstance withChords(const GridInstance& base, const std::vector<std::pair<VertexId, VertexId>>& chords);

}  // namespace testutil
