#ifndef FLATWALL_DISPERSED_H
#define FLATWALL_DISPERSED_H

#include "flatwall/mesh.h"

namespace flatwall {

enum class DisperseMode { Semi, Full };

struct DispersedFamily {
    DisperseMode mode = DisperseMode::Semi;
    int radius = 0;
    std::vector<std::vector<VertexId>> paths;            // pairwise disjoint M-paths
    std::vector<std::pair<VertexId, VertexId>> ends;     // labeled (x_i, y_i) per path
};

struct BlockerCert {
    DisperseMode mode = DisperseMode::Semi;
    int radius = 0;
    VSet apex;  // |A| <= k-1
    VSet zset;  // |Z| <= 3k-3, subset of V(M)
    bool weakened = true;  // true: d <= 2l-2 blocking; false: d < l (slow mode)
};

struct DisperseResult {
    bool isFamily = false;
    DispersedFamily family;
    BlockerCert blocker;
    int iterations = 0;
};

// Packing/covering search for M-paths whose ends are far apart in the mesh
// metric. Default mode gives the weakened blocking guarantee (d <= 2l-2);
// exact mode re-scans attachments pairwise and blocks at d < l.
DisperseResult findSemiDispersed(const Graph& g, const Mesh& m, const GridContraction& f, int l, int k,
                                 bool exact = false);
DisperseResult findDispersed(const Graph& g, const Mesh& m, const GridContraction& f, int l, int k,
                             bool exact = false);

bool validateFamily(const Graph& g, const Mesh& m, const GridContraction& f, const DispersedFamily& fam,
                    int k, std::string* why = nullptr);

// Exhaustive oracle: checks the blocking predicate over every M-path of
// G - A. Guarded: refuses hosts larger than maxN vertices.
bool verifyBlocker(const Graph& g, const Mesh& m, const GridContraction& f, const BlockerCert& cert,
                   int maxN = 13);

}  // namespace flatwall

#endif
