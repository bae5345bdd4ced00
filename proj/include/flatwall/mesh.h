#ifndef FLATWALL_MESH_H
#define FLATWALL_MESH_H

#include <array>
#include <optional>

#include "flatwall/config.h"
#include "flatwall/graph.h"

namespace flatwall {

// r x s mesh: ordered horizontal paths P_1..P_r and vertical paths
// Q_1..Q_s inside a host graph. Paths are stored as vertex sequences in
// traversal order (P_i from Q_1 to Q_s, Q_j from P_1 to P_r).
struct Mesh {
    std::vector<std::vector<VertexId>> horizontal;
    std::vector<std::vector<VertexId>> vertical;

    int rows() const { return static_cast<int>(horizontal.size()); }
    int cols() const { return static_cast<int>(vertical.size()); }
    VSet vertexSet() const;
    Subgraph asSubgraph(const Graph& g) const;
};

// Checks mesh conditions (1)-(4); on failure names the violated condition.
bool checkMesh(const Graph& g, const Mesh& m, std::string* why = nullptr);

struct GridCoord {
    int i = 0;  // horizontal path index, 1-based
    int j = 0;  // vertical path index, 1-based
    bool operator==(const GridCoord& o) const { return i == o.i && j == o.j; }
    bool operator<(const GridCoord& o) const { return i < o.i || (i == o.i && j < o.j); }
};

struct GridContraction {
    int rows = 0, cols = 0;
    std::map<VertexId, GridCoord> f;
    GridCoord at(VertexId v) const;
};

// Canonical contraction: fiber (i,j) holds V(P_i) ∩ V(Q_j), the internal
// vertices of P_i strictly between Q_j and Q_{j+1}, and the internal
// vertices of Q_j strictly between P_i and P_{i+1}.
GridContraction gridContraction(const Mesh& m);

// Crossing distance on the r x s grid: minimum of the interior term
// max(|i1-i2|, |j1-j2|) and the boundary term
// min(i1,j1,r+1-i1,s+1-j1) + min(i2,j2,r+1-i2,s+1-j2) - 1.
int gridDistance(GridCoord a, GridCoord b, int rows, int cols);

int meshDistance(const GridContraction& f, VertexId u, VertexId v);

// { y in V(M) : d(x,y) < l }, ascending.
VSet ball(const Mesh& m, const GridContraction& f, VertexId x, int l);

// ----- walls --------------------------------------------------------------

struct Wall {
    Graph graph;  // the wall as a standalone graph (a subgraph copy of its host)
    Mesh mesh;    // r horizontal and r vertical paths
    std::array<VertexId, 4> corners{};  // in outer-cycle order: P1∩Q1, P1∩Qr, Pr∩Qr, Pr∩Q1
    VSet pegs;
    std::vector<VertexId> outerCycle;  // cyclic vertex sequence
    // elementary coordinates (column 1..2r, row 1..r); filled for walls built
    // by this library, empty for loaded subdivided walls
    std::map<VertexId, std::pair<int, int>> elemCoord;

    int size() const { return mesh.rows(); }
    VSet vertexSet() const { return graph.vertices(); }
};

// The elementary r-wall: the 2r x r grid with alternating vertical edges
// removed and the two degree-one vertices deleted. Vertex ids are
// (row-1)*2r + (col-1) in the original grid numbering.
Wall buildElementaryWall(int r);

// Derives the wall layer (corners, pegs, outer cycle) on top of a valid
// r x r mesh; fails with InputError naming the broken invariant.
Wall wallFromMesh(const Graph& host, const Mesh& mesh);

// Brick list: boundary cycles of the finite faces of the natural plane
// embedding, each as a cyclic vertex sequence.
std::vector<std::vector<VertexId>> wallBricks(const Wall& w);

// Sub-wall spanned by horizontal paths rowLo..rowHi and vertical paths
// colLo..colHi (1-based, inclusive); paths are trimmed by the
// shortest-subpath rule and the result is re-validated.
Wall subwallExtract(const Wall& w, int rowLo, int rowHi, int colLo, int colHi);

// 2r x 2r grid plus a pair of crossing edges in each face of the middle
// row of faces.
struct H1Graph {
    Graph graph;
    int twoR = 0;
    Mesh grid;  // the underlying grid as a mesh (rows/columns)
    VertexId at(int col, int row) const;          // col,row in [1..2r]
    std::pair<int, int> coord(VertexId v) const;  // inverse
};
H1Graph buildH1(int r);

// ----- strips -------------------------------------------------------------

struct Strip {
    int rowLo = 0, rowHi = 0;  // horizontal path indices of W
    VSet vertices;
};

struct StripSubwalls {
    Strip strip;
    std::vector<Wall> subwalls;
    // placement of each subwall in W's path indices (rowLo,rowHi,colLo,colHi)
    std::vector<std::array<int, 4>> placement;
};

// Chooses the first strip (top to bottom) avoiding `forbidden` and places
// up to t(t-1) subwalls per cfg. Throws CapacityError when no strip fits.
StripSubwalls stripSubwalls(const Wall& w, const Config& cfg, const VSet& forbidden);

}  // namespace flatwall

#endif
