#include "flatwall/graph.h"

#include <algorithm>
#include <queue>
#include <set>

namespace flatwall {

VSet vsetFrom(std::vector<VertexId> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

bool vsetContains(const VSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VSet vsetUnion(const VSet& a, const VSet& b) {
    VSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VSet vsetIntersect(const VSet& a, const VSet& b) {
    VSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VSet vsetMinus(const VSet& a, const VSet& b) {
    VSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph::Graph(VSet vertices, std::vector<Edge> edges) : verts_(std::move(vertices)), edges_(std::move(edges)) {
    for (size_t i = 1; i < verts_.size(); i++)
        if (verts_[i - 1] >= verts_[i]) throw InputError("graph: vertex ids must be sorted and unique");
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (size_t i = 1; i < edges_.size(); i++)
        if (edges_[i - 1].id == edges_[i].id) throw InputError("graph: duplicate edge id " + std::to_string(edges_[i].id));
    for (const Edge& e : edges_)
        if (!hasVertex(e.u) || !hasVertex(e.v))
            throw InputError("graph: edge " + std::to_string(e.id) + " has an endpoint outside the vertex set");
    buildIndexes();
}

Graph Graph::fromEdgeList(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    VSet vs;
    vs.reserve(n);
    for (int i = 0; i < n; i++) vs.push_back(i);
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (size_t i = 0; i < pairs.size(); i++)
        es.push_back(Edge{static_cast<EdgeId>(i), pairs[i].first, pairs[i].second});
    return Graph(std::move(vs), std::move(es));
}

void Graph::buildIndexes() {
    edgeIndex_.clear();
    inc_.clear();
    nbr_.clear();
    for (VertexId v : verts_) {
        inc_[v];
        nbr_[v];
    }
    for (size_t i = 0; i < edges_.size(); i++) {
        const Edge& e = edges_[i];
        edgeIndex_[e.id] = static_cast<int>(i);
        if (e.isLoop()) continue;
        inc_[e.u].push_back(e.id);
        inc_[e.v].push_back(e.id);
        nbr_[e.u].push_back(e.v);
        nbr_[e.v].push_back(e.u);
    }
    for (auto& [v, ns] : nbr_) ns = vsetFrom(std::move(ns));
}

const Edge& Graph::edge(EdgeId e) const {
    auto it = edgeIndex_.find(e);
    if (it == edgeIndex_.end()) throw InputError("graph: unknown edge id " + std::to_string(e));
    return edges_[it->second];
}

const std::vector<EdgeId>& Graph::incident(VertexId v) const {
    auto it = inc_.find(v);
    if (it == inc_.end()) throw InputError("graph: unknown vertex " + std::to_string(v));
    return it->second;
}

const VSet& Graph::neighbors(VertexId v) const {
    auto it = nbr_.find(v);
    if (it == nbr_.end()) throw InputError("graph: unknown vertex " + std::to_string(v));
    return it->second;
}

bool Graph::adjacent(VertexId u, VertexId v) const { return vsetContains(neighbors(u), v); }

EdgeId Graph::edgeBetween(VertexId u, VertexId v) const {
    for (EdgeId e : incident(u))
        if (edge(e).other(u) == v) return e;
    return -1;
}

Graph Graph::inducedSubgraph(const VSet& keep) const {
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (vsetContains(keep, e.u) && vsetContains(keep, e.v)) es.push_back(e);
    return Graph(vsetIntersect(verts_, keep), std::move(es));
}

Graph Graph::deleteVertices(const VSet& del) const { return inducedSubgraph(vsetMinus(verts_, del)); }

bool Subgraph::containsEdge(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }

Subgraph subgraphOfPaths(const Graph& g, const std::vector<std::vector<VertexId>>& paths) {
    Subgraph s;
    std::vector<VertexId> vs;
    std::vector<EdgeId> es;
    for (const auto& p : paths) {
        vs.insert(vs.end(), p.begin(), p.end());
        auto pe = pathEdges(g, p);
        es.insert(es.end(), pe.begin(), pe.end());
    }
    s.vertices = vsetFrom(std::move(vs));
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    s.edges = std::move(es);
    return s;
}

bool isSeparation(const Graph& g, const Separation& sep, std::string* why) {
    if (vsetUnion(sep.sideA, sep.sideB) != g.vertices()) {
        if (why) *why = "sideA ∪ sideB != V(G)";
        return false;
    }
    VSet mid = sep.middle();
    for (const Edge& e : g.edges()) {
        if (e.isLoop()) continue;
        bool uA = vsetContains(sep.sideA, e.u), uB = vsetContains(sep.sideB, e.u);
        bool vA = vsetContains(sep.sideA, e.v), vB = vsetContains(sep.sideB, e.v);
        if ((uA && !uB && vB && !vA) || (uB && !uA && vA && !vB)) {
            if (why) *why = "edge " + std::to_string(e.id) + " crosses the separation";
            return false;
        }
    }
    (void)mid;
    return true;
}

std::vector<Bridge> enumerateBridges(const Graph& g, const Subgraph& h) {
    for (VertexId v : h.vertices)
        if (!g.hasVertex(v)) throw InputError("enumerateBridges: H has a vertex outside G");
    for (EdgeId e : h.edges)
        if (!g.hasEdgeId(e)) throw InputError("enumerateBridges: H has an edge outside G");

    std::vector<Bridge> out;
    // single-edge bridges: both ends in H, edge not in H
    for (const Edge& e : g.edges()) {
        if (e.isLoop() || h.containsEdge(e.id)) continue;
        if (h.containsVertex(e.u) && h.containsVertex(e.v)) {
            Bridge b;
            b.edges = {e.id};
            b.attachments = vsetFrom({e.u, e.v});
            out.push_back(std::move(b));
        }
    }
    // component bridges
    for (const VSet& comp : componentsAvoiding(g, h.vertices)) {
        Bridge b;
        b.interior = comp;
        std::vector<VertexId> att;
        for (VertexId v : comp)
            for (EdgeId e : g.incident(v)) {
                b.edges.push_back(e);
                VertexId w = g.edge(e).other(v);
                if (h.containsVertex(w)) att.push_back(w);
            }
        std::sort(b.edges.begin(), b.edges.end());
        b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
        b.attachments = vsetFrom(std::move(att));
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const Bridge& a, const Bridge& b) { return a.minEdge() < b.minEdge(); });
    return out;
}

bool isPath(const Graph& g, const std::vector<VertexId>& p) {
    if (p.empty()) return false;
    std::set<VertexId> seen;
    for (VertexId v : p) {
        if (!g.hasVertex(v)) return false;
        if (!seen.insert(v).second) return false;
    }
    for (size_t i = 0; i + 1 < p.size(); i++)
        if (!g.adjacent(p[i], p[i + 1])) return false;
    return true;
}

std::vector<EdgeId> pathEdges(const Graph& g, const std::vector<VertexId>& p) {
    std::vector<EdgeId> es;
    for (size_t i = 0; i + 1 < p.size(); i++) {
        EdgeId e = g.edgeBetween(p[i], p[i + 1]);
        if (e < 0) throw InputError("pathEdges: consecutive vertices not adjacent");
        es.push_back(e);
    }
    return es;
}

bool isMPath(const Graph& g, const Subgraph& m, const std::vector<VertexId>& p, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (p.size() < 2) return fail("M-path needs at least one edge");
    if (!isPath(g, p)) return fail("not a path in G");
    if (!m.containsVertex(p.front()) || !m.containsVertex(p.back())) return fail("an end is not in V(M)");
    for (size_t i = 1; i + 1 < p.size(); i++)
        if (m.containsVertex(p[i])) return fail("internal vertex on M");
    for (size_t i = 0; i + 1 < p.size(); i++) {
        bool onM = false;
        for (EdgeId e : g.incident(p[i]))
            if (g.edge(e).other(p[i]) == p[i + 1] && m.containsEdge(e)) onM = true;
        // only edge-disjointness from M matters; any parallel non-M edge realizes the step
        if (onM && g.edgeBetween(p[i], p[i + 1]) >= 0) {
            bool hasNonM = false;
            for (EdgeId e : g.incident(p[i]))
                if (g.edge(e).other(p[i]) == p[i + 1] && !m.containsEdge(e)) hasNonM = true;
            if (!hasNonM) return fail("path step uses an edge of M");
        }
    }
    return true;
}

std::vector<VSet> connectedComponents(const Graph& g) { return componentsAvoiding(g, {}); }

std::vector<VSet> componentsAvoiding(const Graph& g, const VSet& removed) {
    std::vector<VSet> comps;
    std::set<VertexId> seen(removed.begin(), removed.end());
    for (VertexId s : g.vertices()) {
        if (seen.count(s)) continue;
        VSet comp;
        std::queue<VertexId> q;
        q.push(s);
        seen.insert(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v))
                if (!seen.count(w)) {
                    seen.insert(w);
                    q.push(w);
                }
        }
        comps.push_back(vsetFrom(std::move(comp)));
    }
    return comps;
}

bool isConnected(const Graph& g) { return connectedComponents(g).size() <= 1; }

std::vector<VertexId> shortestPath(const Graph& g, const VSet& from, const VSet& to, const VSet& forbidden) {
    std::map<VertexId, VertexId> parent;
    std::queue<VertexId> q;
    for (VertexId v : from)
        if (g.hasVertex(v) && !vsetContains(forbidden, v)) {
            parent[v] = v;
            q.push(v);
            if (vsetContains(to, v)) return {v};
        }
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.neighbors(v)) {
            if (vsetContains(forbidden, w) || parent.count(w)) continue;
            parent[w] = v;
            if (vsetContains(to, w)) {
                std::vector<VertexId> path{w};
                VertexId cur = v;
                while (true) {
                    path.push_back(cur);
                    if (parent[cur] == cur) break;
                    cur = parent[cur];
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(w);
        }
    }
    return {};
}

VSet Contraction::fiber(VertexId target) const {
    VSet out;
    for (const auto& [src, dst] : cmap)
        if (dst == target) out.push_back(src);
    return vsetFrom(std::move(out));
}

namespace {
struct DSU {
    std::map<VertexId, VertexId> p;
    VertexId find(VertexId x) {
        auto it = p.find(x);
        if (it == p.end() || it->second == x) return x;
        return it->second = find(it->second);
    }
    void unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p[b] = a;  // smaller id wins, keeps names stable
    }
};
}  // namespace

Contraction contractEdges(const Graph& g, const std::vector<EdgeId>& z) {
    DSU dsu;
    std::set<EdgeId> zset;
    for (EdgeId e : z) {
        if (!g.hasEdgeId(e)) throw InputError("contractEdges: unknown edge id " + std::to_string(e));
        zset.insert(e);
        const Edge& ed = g.edge(e);
        if (!ed.isLoop()) dsu.unite(ed.u, ed.v);
    }
    Contraction c;
    VSet newVerts;
    for (VertexId v : g.vertices()) {
        VertexId r = dsu.find(v);
        c.cmap[v] = r;
        newVerts.push_back(r);
    }
    newVerts = vsetFrom(std::move(newVerts));
    std::vector<Edge> newEdges;
    for (const Edge& e : g.edges()) {
        if (zset.count(e.id)) continue;
        newEdges.push_back(Edge{e.id, c.cmap[e.u], c.cmap[e.v]});
    }
    c.contracted = Graph(std::move(newVerts), std::move(newEdges));
    return c;
}

}  // namespace flatwall
