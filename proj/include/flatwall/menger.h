#ifndef FLATWALL_MENGER_H
#define FLATWALL_MENGER_H

#include "flatwall/graph.h"

namespace flatwall {

struct MengerResult {
    bool foundPaths = false;
    // exactly k pairwise vertex-disjoint X-Y paths when foundPaths; a path
    // may be a single vertex of X ∩ Y
    std::vector<std::vector<VertexId>> paths;
    // separator of size < k meeting every X-Y path otherwise
    VSet separator;
};

// Vertex-capacity max-flow via vertex splitting; augmenting path search and
// path decomposition break ties by lowest vertex id.
MengerResult mengerPaths(const Graph& g, int k, const VSet& x, const VSet& y);

struct FanResult {
    int size = 0;                               // max number of paths from v to target, disjoint except at v
    std::vector<std::vector<VertexId>> paths;   // each starts at v, ends in target
    VSet cutNearTarget;                         // min v-target cut (v excluded), chosen nearest to target
    VSet sideOfV;                               // vertices separated from target by the cut, v included, cut excluded
};

// Max fan from a single vertex v to a target set, with the min cut whose
// far side (containing v) is inclusion-maximal.
FanResult maxFan(const Graph& g, VertexId v, const VSet& target);

}  // namespace flatwall

#endif
