#ifndef FLATWALL_GRAPH_H
#define FLATWALL_GRAPH_H

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatwall {

using VertexId = int;
using EdgeId = int;

// Thrown when a caller violates a documented precondition.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an instance is too small/large for the requested constants.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal invariant that should be unreachable fires.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

struct Edge {
    EdgeId id = -1;
    VertexId u = -1;
    VertexId v = -1;
    bool isLoop() const { return u == v; }
    VertexId other(VertexId w) const { return w == u ? v : u; }
};

// Sorted-unique vertex set helpers. All public vertex sets in this library
// are kept sorted ascending so every iteration order is reproducible.
using VSet = std::vector<VertexId>;

VSet vsetFrom(std::vector<VertexId> xs);
bool vsetContains(const VSet& s, VertexId v);
VSet vsetUnion(const VSet& a, const VSet& b);
VSet vsetIntersect(const VSet& a, const VSet& b);
VSet vsetMinus(const VSet& a, const VSet& b);

// Finite multigraph with loops and parallel edges. Vertex and edge
// identifiers are stable: derived graphs keep the ids of surviving
// elements. Immutable after construction.
class Graph {
  public:
    Graph() = default;
    Graph(VSet vertices, std::vector<Edge> edges);

    // Vertices named 0..n-1, edges get ids 0..m-1 in input order.
    static Graph fromEdgeList(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs);

    const VSet& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int n() const { return static_cast<int>(verts_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }

    bool hasVertex(VertexId v) const { return vsetContains(verts_, v); }
    bool hasEdgeId(EdgeId e) const { return edgeIndex_.count(e) != 0; }
    const Edge& edge(EdgeId e) const;

    // Incident non-loop edge ids, ascending. Loops are stored but never
    // reported here; no algorithm in this library uses them.
    const std::vector<EdgeId>& incident(VertexId v) const;
    // Distinct neighbors via non-loop edges, ascending.
    const VSet& neighbors(VertexId v) const;

    bool adjacent(VertexId u, VertexId v) const;
    // Lowest edge id joining u and v, or -1.
    EdgeId edgeBetween(VertexId u, VertexId v) const;

    Graph inducedSubgraph(const VSet& keep) const;
    // Deletes a vertex set; keeps ids of the rest.
    Graph deleteVertices(const VSet& del) const;

  private:
    VSet verts_;
    std::vector<Edge> edges_;
    std::map<EdgeId, int> edgeIndex_;
    std::map<VertexId, std::vector<EdgeId>> inc_;
    std::map<VertexId, VSet> nbr_;
    void buildIndexes();
};

// A subgraph given by explicit vertex and edge id sets of a host graph.
struct Subgraph {
    VSet vertices;
    std::vector<EdgeId> edges;  // sorted ascending
    bool containsVertex(VertexId v) const { return vsetContains(vertices, v); }
    bool containsEdge(EdgeId e) const;
};

Subgraph subgraphOfPaths(const Graph& g, const std::vector<std::vector<VertexId>>& paths);

struct Separation {
    VSet sideA;
    VSet sideB;
    int order() const { return static_cast<int>(vsetIntersect(sideA, sideB).size()); }
    VSet middle() const { return vsetIntersect(sideA, sideB); }
};

// Checks sideA ∪ sideB = V(G) and that no edge joins A\B to B\A.
bool isSeparation(const Graph& g, const Separation& sep, std::string* why = nullptr);

struct Bridge {
    std::vector<EdgeId> edges;   // sorted
    VSet attachments;            // ⊆ V(H)
    VSet interior;               // disjoint from V(H); empty for a single-edge bridge
    EdgeId minEdge() const { return edges.empty() ? -1 : edges.front(); }
};

// H-bridges of g: either a single edge with both ends in H, or the edges
// incident with one component of g - V(H). Loops are skipped. Bridges are
// returned ordered by their smallest edge id.
std::vector<Bridge> enumerateBridges(const Graph& g, const Subgraph& h);

// Path utilities. Paths are vertex sequences; consecutive vertices must be
// adjacent in the graph they live in.
bool isPath(const Graph& g, const std::vector<VertexId>& p);
std::vector<EdgeId> pathEdges(const Graph& g, const std::vector<VertexId>& p);

// An M-path: at least one edge, both ends in V(M), internally disjoint
// from V(M), no edge of M used.
bool isMPath(const Graph& g, const Subgraph& m, const std::vector<VertexId>& p, std::string* why = nullptr);

std::vector<VSet> connectedComponents(const Graph& g);
std::vector<VSet> componentsAvoiding(const Graph& g, const VSet& removed);
bool isConnected(const Graph& g);

// BFS shortest path between vertex sets through allowed vertices
// (inclusive of endpoints). Ties broken by ascending vertex id. Empty if
// none exists.
std::vector<VertexId> shortestPath(const Graph& g, const VSet& from, const VSet& to,
                                   const VSet& forbidden = {});

// ----- contraction -------------------------------------------------------

struct Contraction {
    Graph contracted;
    std::map<VertexId, VertexId> cmap;  // V(G) -> V(G')
    VSet fiber(VertexId target) const;
};

// G / Z. Each fiber is named after its smallest original vertex; edge ids
// of surviving edges are kept, and parallel copies of a contracted pair
// become loops.
Contraction contractEdges(const Graph& g, const std::vector<EdgeId>& z);

}  // namespace flatwall

#endif
