#include "flatwall/menger.h"

#include <algorithm>
#include <map>
#include <queue>

namespace flatwall {

namespace {

// Small deterministic max-flow network (BFS augmentation, neighbors in
// ascending node order). Node count stays modest everywhere this is used.
struct FlowNet {
    struct Arc {
        int to, cap, flow = 0;
        int rev;  // index of reverse arc in adj[to]
    };
    std::vector<std::vector<Arc>> adj;
    explicit FlowNet(int n) : adj(n) {}

    void addArc(int a, int b, int cap) {
        adj[a].push_back(Arc{b, cap, 0, static_cast<int>(adj[b].size())});
        adj[b].push_back(Arc{a, 0, 0, static_cast<int>(adj[a].size()) - 1});
    }

    void sortArcs() {
        // stable order by head; fix up rev indices afterwards
        for (size_t v = 0; v < adj.size(); v++) {
            std::vector<int> order(adj[v].size());
            for (size_t i = 0; i < order.size(); i++) order[i] = static_cast<int>(i);
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return adj[v][a].to < adj[v][b].to; });
            std::vector<Arc> na;
            std::vector<int> pos(order.size());
            for (size_t i = 0; i < order.size(); i++) {
                pos[order[i]] = static_cast<int>(i);
                na.push_back(adj[v][order[i]]);
            }
            adj[v] = std::move(na);
            for (size_t i = 0; i < adj[v].size(); i++) {
                Arc& a = adj[v][i];
                // the reverse arc still refers to the old index; record new one lazily
                adj[a.to][a.rev].rev = static_cast<int>(i);
            }
        }
    }

    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> par(adj.size(), {-1, -1});
        std::queue<int> q;
        q.push(s);
        par[s] = {s, -1};
        while (!q.empty() && par[t].first < 0) {
            int v = q.front();
            q.pop();
            for (size_t i = 0; i < adj[v].size(); i++) {
                const Arc& a = adj[v][i];
                if (a.cap - a.flow > 0 && par[a.to].first < 0) {
                    par[a.to] = {v, static_cast<int>(i)};
                    q.push(a.to);
                }
            }
        }
        if (par[t].first < 0) return false;
        int v = t;
        while (v != s) {
            auto [pv, pi] = par[v];
            Arc& a = adj[pv][pi];
            a.flow++;
            adj[a.to][a.rev].flow--;
            v = pv;
        }
        return true;
    }

    std::vector<bool> residualReach(int s) const {
        std::vector<bool> seen(adj.size(), false);
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : adj[v])
                if (a.cap - a.flow > 0 && !seen[a.to]) {
                    seen[a.to] = true;
                    q.push(a.to);
                }
        }
        return seen;
    }

    std::vector<bool> residualReachReverse(int t) const {
        std::vector<bool> seen(adj.size(), false);
        std::queue<int> q;
        q.push(t);
        seen[t] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            // w reaches t if some residual arc w->v exists; that is the
            // reverse view of arcs out of v
            for (const Arc& a : adj[v]) {
                const Arc& back = adj[a.to][a.rev];
                if (back.cap - back.flow > 0 && !seen[a.to]) {
                    seen[a.to] = true;
                    q.push(a.to);
                }
            }
        }
        return seen;
    }
};

constexpr int kInf = 1 << 28;

}  // namespace

MengerResult mengerPaths(const Graph& g, int k, const VSet& x, const VSet& y) {
    if (k < 1) throw InputError("mengerPaths: k must be >= 1");
    const VSet& verts = g.vertices();
    std::map<VertexId, int> idx;
    for (size_t i = 0; i < verts.size(); i++) idx[verts[i]] = static_cast<int>(i);
    int n = static_cast<int>(verts.size());
    auto inNode = [&](VertexId v) { return 2 * idx.at(v); };
    auto outNode = [&](VertexId v) { return 2 * idx.at(v) + 1; };
    int S = 2 * n, T = 2 * n + 1;
    FlowNet net(2 * n + 2);
    for (VertexId v : verts) net.addArc(inNode(v), outNode(v), 1);
    for (const Edge& e : g.edges()) {
        if (e.isLoop()) continue;
        net.addArc(outNode(e.u), inNode(e.v), kInf);
        net.addArc(outNode(e.v), inNode(e.u), kInf);
    }
    for (VertexId v : x)
        if (g.hasVertex(v)) net.addArc(S, inNode(v), kInf);
    for (VertexId v : y)
        if (g.hasVertex(v)) net.addArc(outNode(v), T, kInf);
    net.sortArcs();

    int flow = 0;
    while (flow < k && net.augment(S, T)) flow++;

    MengerResult res;
    if (flow >= k) {
        res.foundPaths = true;
        // walk the flow from each used source arc
        for (const auto& a : net.adj[S]) {
            if (a.flow <= 0) continue;
            if (static_cast<int>(res.paths.size()) == k) break;
            std::vector<VertexId> path;
            int node = a.to;  // an inNode
            while (node != T) {
                if (node % 2 == 0 && node < 2 * n) path.push_back(verts[node / 2]);
                auto& arcs = net.adj[node];
                bool moved = false;
                for (auto& arc : arcs) {
                    if (arc.cap > 0 && arc.flow > 0) {
                        arc.flow--;
                        node = arc.to;
                        moved = true;
                        break;
                    }
                }
                if (!moved) throw InternalError("mengerPaths: flow walk stuck");
            }
            res.paths.push_back(std::move(path));
        }
        if (static_cast<int>(res.paths.size()) != k) throw InternalError("mengerPaths: path decomposition mismatch");
        return res;
    }
    auto reach = net.residualReach(S);
    for (VertexId v : verts)
        if (reach[inNode(v)] && !reach[outNode(v)]) res.separator.push_back(v);
    res.separator = vsetFrom(std::move(res.separator));
    if (static_cast<int>(res.separator.size()) != flow)
        throw InternalError("mengerPaths: cut size does not match flow value");
    return res;
}

FanResult maxFan(const Graph& g, VertexId v, const VSet& target) {
    if (!g.hasVertex(v)) throw InputError("maxFan: unknown vertex");
    if (vsetContains(target, v)) throw InputError("maxFan: v may not be in the target set");
    const VSet& verts = g.vertices();
    std::map<VertexId, int> idx;
    for (size_t i = 0; i < verts.size(); i++) idx[verts[i]] = static_cast<int>(i);
    int n = static_cast<int>(verts.size());
    auto inNode = [&](VertexId w) { return 2 * idx.at(w); };
    auto outNode = [&](VertexId w) { return 2 * idx.at(w) + 1; };
    int T = 2 * n;
    FlowNet net(2 * n + 1);
    for (VertexId w : verts) net.addArc(inNode(w), outNode(w), w == v ? kInf : 1);
    for (const Edge& e : g.edges()) {
        if (e.isLoop()) continue;
        net.addArc(outNode(e.u), inNode(e.v), kInf);
        net.addArc(outNode(e.v), inNode(e.u), kInf);
    }
    for (VertexId w : target)
        if (g.hasVertex(w)) net.addArc(outNode(w), T, kInf);
    net.sortArcs();
    int S = outNode(v);

    FanResult res;
    while (net.augment(S, T)) res.size++;

    // decompose into fan paths
    {
        FlowNet copy = net;
        for (int p = 0; p < res.size; p++) {
            std::vector<VertexId> path{v};
            int node = S;
            bool first = true;
            while (node != T) {
                if (!first && node % 2 == 0 && node < 2 * n) path.push_back(verts[node / 2]);
                auto& arcs = copy.adj[node];
                bool moved = false;
                for (auto& arc : arcs) {
                    if (arc.cap > 0 && arc.flow > 0) {
                        arc.flow--;
                        node = arc.to;
                        moved = true;
                        break;
                    }
                }
                if (!moved) throw InternalError("maxFan: flow walk stuck");
                first = false;
            }
            res.paths.push_back(std::move(path));
        }
    }

    auto reachT = net.residualReachReverse(T);
    for (VertexId w : verts) {
        if (w == v) continue;
        if (reachT[outNode(w)] && !reachT[inNode(w)]) res.cutNearTarget.push_back(w);
    }
    res.cutNearTarget = vsetFrom(std::move(res.cutNearTarget));
    for (VertexId w : verts) {
        if (w == v) continue;
        if (!reachT[outNode(w)]) res.sideOfV.push_back(w);
    }
    res.sideOfV.push_back(v);
    res.sideOfV = vsetFrom(std::move(res.sideOfV));
    res.sideOfV = vsetMinus(res.sideOfV, res.cutNearTarget);
    if (static_cast<int>(res.cutNearTarget.size()) != res.size)
        throw InternalError("maxFan: cut size does not match fan size");
    return res;
}

}  // namespace flatwall
