#include "flatwall/mesh.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace flatwall {

VSet Mesh::vertexSet() const {
    std::vector<VertexId> vs;
    for (const auto& p : horizontal) vs.insert(vs.end(), p.begin(), p.end());
    for (const auto& p : vertical) vs.insert(vs.end(), p.begin(), p.end());
    return vsetFrom(std::move(vs));
}

Subgraph Mesh::asSubgraph(const Graph& g) const {
    std::vector<std::vector<VertexId>> all = horizontal;
    all.insert(all.end(), vertical.begin(), vertical.end());
    return subgraphOfPaths(g, all);
}

namespace {

// position of every vertex on its (unique) horizontal / vertical path
struct PathIndex {
    std::map<VertexId, std::pair<int, int>> onH;  // v -> (path idx 0-based, pos)
    std::map<VertexId, std::pair<int, int>> onV;
};

PathIndex indexMesh(const Mesh& m, std::string* why) {
    PathIndex px;
    for (int i = 0; i < m.rows(); i++)
        for (size_t p = 0; p < m.horizontal[i].size(); p++) {
            VertexId v = m.horizontal[i][p];
            if (px.onH.count(v)) {
                if (why) *why = "condition (1): horizontal paths are not pairwise disjoint";
                return {};
            }
            px.onH[v] = {i, static_cast<int>(p)};
        }
    for (int j = 0; j < m.cols(); j++)
        for (size_t p = 0; p < m.vertical[j].size(); p++) {
            VertexId v = m.vertical[j][p];
            if (px.onV.count(v)) {
                if (why) *why = "condition (1): vertical paths are not pairwise disjoint";
                return {};
            }
            px.onV[v] = {j, static_cast<int>(p)};
        }
    return px;
}

// maximal run of positions of path `a` that lie on path index `want` of the
// other family; returns runs as [start,end] position pairs
std::vector<std::pair<int, int>> runsOn(const std::vector<VertexId>& path,
                                        const std::map<VertexId, std::pair<int, int>>& other, int want) {
    std::vector<std::pair<int, int>> runs;
    int start = -1;
    for (size_t p = 0; p <= path.size(); p++) {
        bool hit = p < path.size() && other.count(path[p]) && other.at(path[p]).first == want;
        if (hit && start < 0) start = static_cast<int>(p);
        if (!hit && start >= 0) {
            runs.push_back({start, static_cast<int>(p) - 1});
            start = -1;
        }
    }
    return runs;
}

}  // namespace

bool checkMesh(const Graph& g, const Mesh& m, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (m.rows() < 2 || m.cols() < 2) return fail("mesh needs at least 2 horizontal and 2 vertical paths");
    for (const auto& p : m.horizontal)
        if (!isPath(g, p)) return fail("a horizontal path is not a path of the host graph");
    for (const auto& p : m.vertical)
        if (!isPath(g, p)) return fail("a vertical path is not a path of the host graph");

    std::string w2;
    PathIndex px = indexMesh(m, &w2);
    if (px.onH.empty() && px.onV.empty() && !w2.empty()) return fail(w2);

    int r = m.rows(), s = m.cols();
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < s; j++) {
            auto runsH = runsOn(m.horizontal[i], px.onV, j);
            if (runsH.empty()) return fail("condition (2): P_" + std::to_string(i + 1) + " does not meet Q_" + std::to_string(j + 1));
            if (runsH.size() > 1)
                return fail("condition (2): P_" + std::to_string(i + 1) + " ∩ Q_" + std::to_string(j + 1) + " is not a path");
            bool boundary = (i == 0 || i == r - 1 || j == 0 || j == s - 1);
            if (boundary && runsH[0].second != runsH[0].first)
                return fail("condition (2): boundary intersection P_" + std::to_string(i + 1) + " ∩ Q_" +
                            std::to_string(j + 1) + " has more than one vertex");
            // the same vertices must be consecutive along Q_j as well
            auto runsV = runsOn(m.vertical[j], px.onH, i);
            if (runsV.size() != 1)
                return fail("condition (2): P_" + std::to_string(i + 1) + " ∩ Q_" + std::to_string(j + 1) +
                            " is not a subpath of Q_" + std::to_string(j + 1));
            if (runsV[0].second - runsV[0].first != runsH[0].second - runsH[0].first)
                return fail("condition (2): inconsistent intersection of P_" + std::to_string(i + 1) + " and Q_" +
                            std::to_string(j + 1));
        }
    }
    // (3): ends and traversal order of the vertical families along P_i
    for (int i = 0; i < r; i++) {
        const auto& P = m.horizontal[i];
        if (!px.onV.count(P.front()) || px.onV.at(P.front()).first != 0)
            return fail("condition (3): P_" + std::to_string(i + 1) + " does not start in Q_1");
        if (!px.onV.count(P.back()) || px.onV.at(P.back()).first != s - 1)
            return fail("condition (3): P_" + std::to_string(i + 1) + " does not end in Q_" + std::to_string(s));
        int cur = -1;
        for (VertexId v : P) {
            auto it = px.onV.find(v);
            if (it == px.onV.end()) continue;
            int j = it->second.first;
            if (j == cur) continue;
            if (j != cur + 1)
                return fail("condition (3): P_" + std::to_string(i + 1) + " meets the vertical paths out of order");
            cur = j;
        }
        if (cur != s - 1) return fail("condition (3): P_" + std::to_string(i + 1) + " misses a vertical path");
    }
    // (4): symmetric for Q_j
    for (int j = 0; j < s; j++) {
        const auto& Q = m.vertical[j];
        if (!px.onH.count(Q.front()) || px.onH.at(Q.front()).first != 0)
            return fail("condition (4): Q_" + std::to_string(j + 1) + " does not start in P_1");
        if (!px.onH.count(Q.back()) || px.onH.at(Q.back()).first != r - 1)
            return fail("condition (4): Q_" + std::to_string(j + 1) + " does not end in P_" + std::to_string(r));
        int cur = -1;
        for (VertexId v : Q) {
            auto it = px.onH.find(v);
            if (it == px.onH.end()) continue;
            int i = it->second.first;
            if (i == cur) continue;
            if (i != cur + 1)
                return fail("condition (4): Q_" + std::to_string(j + 1) + " meets the horizontal paths out of order");
            cur = i;
        }
        if (cur != r - 1) return fail("condition (4): Q_" + std::to_string(j + 1) + " misses a horizontal path");
    }
    return true;
}

GridCoord GridContraction::at(VertexId v) const {
    auto it = f.find(v);
    if (it == f.end()) throw InputError("gridContraction: vertex not in the mesh");
    return it->second;
}

GridContraction gridContraction(const Mesh& m) {
    std::string why;
    PathIndex px = indexMesh(m, &why);
    GridContraction gc;
    gc.rows = m.rows();
    gc.cols = m.cols();
    for (int i = 0; i < m.rows(); i++) {
        int curJ = 0;
        for (VertexId v : m.horizontal[i]) {
            auto it = px.onV.find(v);
            if (it != px.onV.end()) {
                curJ = it->second.first;
                gc.f[v] = GridCoord{i + 1, curJ + 1};
            } else {
                gc.f[v] = GridCoord{i + 1, curJ + 1};
            }
        }
    }
    for (int j = 0; j < m.cols(); j++) {
        int curI = 0;
        for (VertexId v : m.vertical[j]) {
            auto it = px.onH.find(v);
            if (it != px.onH.end())
                curI = it->second.first;
            else
                gc.f[v] = GridCoord{curI + 1, j + 1};
        }
    }
    return gc;
}

int gridDistance(GridCoord a, GridCoord b, int rows, int cols) {
    if (a.i < 1 || a.i > rows || a.j < 1 || a.j > cols || b.i < 1 || b.i > rows || b.j < 1 || b.j > cols)
        throw InputError("gridDistance: coordinate out of range");
    int interior = std::max(std::abs(a.i - b.i), std::abs(a.j - b.j));
    int bdA = std::min(std::min(a.i, a.j), std::min(rows + 1 - a.i, cols + 1 - a.j));
    int bdB = std::min(std::min(b.i, b.j), std::min(rows + 1 - b.i, cols + 1 - b.j));
    return std::min(interior, bdA + bdB - 1);
}

int meshDistance(const GridContraction& f, VertexId u, VertexId v) {
    return gridDistance(f.at(u), f.at(v), f.rows, f.cols);
}

VSet ball(const Mesh& m, const GridContraction& f, VertexId x, int l) {
    VSet out;
    if (l <= 0) return out;
    GridCoord cx = f.at(x);
    for (const auto& [v, c] : f.f)
        if (gridDistance(cx, c, f.rows, f.cols) < l) out.push_back(v);
    (void)m;
    return vsetFrom(std::move(out));
}

// ----- elementary wall ------------------------------------------------------

namespace {

// vertical edge (c,row)-(c,row+1) of the 2r x r grid survives unless the
// column and row parities agree
bool wallVerticalEdge(int c, int row) { return (c % 2) != (row % 2); }

}  // namespace

Wall buildElementaryWall(int r) {
    if (r < 2) throw InputError("buildElementaryWall: r must be >= 2");
    int W = 2 * r;
    auto vid = [&](int c, int row) { return (row - 1) * W + (c - 1); };
    std::set<VertexId> alive;
    for (int row = 1; row <= r; row++)
        for (int c = 1; c <= W; c++) alive.insert(vid(c, row));

    auto degreeOf = [&](int c, int row) {
        int d = 0;
        if (c > 1 && alive.count(vid(c - 1, row))) d++;
        if (c < W && alive.count(vid(c + 1, row))) d++;
        if (row > 1 && wallVerticalEdge(c, row - 1) && alive.count(vid(c, row - 1))) d++;
        if (row < r && wallVerticalEdge(c, row) && alive.count(vid(c, row + 1))) d++;
        return d;
    };
    // the construction produces exactly two degree-one vertices
    std::vector<VertexId> dead;
    for (int row = 1; row <= r; row++)
        for (int c = 1; c <= W; c++)
            if (degreeOf(c, row) == 1) dead.push_back(vid(c, row));
    if (dead.size() != 2) throw InternalError("buildElementaryWall: expected exactly two degree-one vertices");
    for (VertexId v : dead) alive.erase(v);

    std::vector<Edge> edges;
    EdgeId next = 0;
    for (int row = 1; row <= r; row++)
        for (int c = 1; c < W; c++)
            if (alive.count(vid(c, row)) && alive.count(vid(c + 1, row)))
                edges.push_back(Edge{next++, vid(c, row), vid(c + 1, row)});
    for (int row = 1; row < r; row++)
        for (int c = 1; c <= W; c++)
            if (wallVerticalEdge(c, row) && alive.count(vid(c, row)) && alive.count(vid(c, row + 1)))
                edges.push_back(Edge{next++, vid(c, row), vid(c, row + 1)});
    Graph g(VSet(alive.begin(), alive.end()), std::move(edges));

    Mesh mesh;
    // vertical zigzags: start at the even column of each pair in row 1
    for (int j = 1; j <= r; j++) {
        int c = 2 * j;
        std::vector<VertexId> q{vid(c, 1)};
        for (int row = 1; row < r; ) {
            if (wallVerticalEdge(c, row)) {
                q.push_back(vid(c, row + 1));
                row++;
            } else {
                int sib = (c % 2 == 0) ? c - 1 : c + 1;
                q.push_back(vid(sib, row));
                if (!wallVerticalEdge(sib, row)) throw InternalError("buildElementaryWall: zigzag stuck");
                q.push_back(vid(sib, row + 1));
                c = sib;
                row++;
            }
        }
        mesh.vertical.push_back(std::move(q));
    }
    // horizontal rows, trimmed between their Q_1 and Q_r vertices
    for (int row = 1; row <= r; row++) {
        int lo = 1, hi = W;
        auto onQ = [&](int j, int c) {
            for (VertexId v : mesh.vertical[j])
                if (v == vid(c, row)) return true;
            return false;
        };
        int start = -1, end = -1;
        for (int c = 1; c <= W; c++)
            if (alive.count(vid(c, row)) && onQ(0, c)) start = std::max(start, c);
        for (int c = W; c >= 1; c--)
            if (alive.count(vid(c, row)) && onQ(r - 1, c)) end = std::min(end == -1 ? W + 1 : end, c);
        if (start < 0 || end < 0) throw InternalError("buildElementaryWall: row misses a boundary zigzag");
        std::vector<VertexId> p;
        for (int c = start; c <= end; c++) p.push_back(vid(c, row));
        mesh.horizontal.push_back(std::move(p));
        (void)lo;
        (void)hi;
    }

    Wall w = wallFromMesh(g, mesh);
    for (int row = 1; row <= r; row++)
        for (int c = 1; c <= W; c++)
            if (alive.count(vid(c, row))) w.elemCoord[vid(c, row)] = {c, row};
    return w;
}

// ----- wall layer -----------------------------------------------------------

VSet subdividedWallPegs(const Wall& w);

Wall wallFromMesh(const Graph& host, const Mesh& mesh) {
    std::string why;
    if (!checkMesh(host, mesh, &why)) throw InputError("wallFromMesh: " + why);
    if (mesh.rows() != mesh.cols()) throw InputError("wallFromMesh: a wall needs r horizontal and r vertical paths");

    Wall w;
    Subgraph sub = mesh.asSubgraph(host);
    {
        std::vector<Edge> es;
        for (EdgeId e : sub.edges) es.push_back(host.edge(e));
        w.graph = Graph(sub.vertices, std::move(es));
    }
    w.mesh = mesh;
    int r = mesh.rows();

    auto single = [&](const std::vector<VertexId>& p, const std::vector<VertexId>& q) -> VertexId {
        VSet a = vsetFrom(std::vector<VertexId>(p.begin(), p.end()));
        VSet b = vsetFrom(std::vector<VertexId>(q.begin(), q.end()));
        VSet c = vsetIntersect(a, b);
        if (c.size() != 1) throw InputError("wallFromMesh: corner intersection is not a single vertex");
        return c[0];
    };
    w.corners[0] = single(mesh.horizontal[0], mesh.vertical[0]);
    w.corners[1] = single(mesh.horizontal[0], mesh.vertical[r - 1]);
    w.corners[2] = single(mesh.horizontal[r - 1], mesh.vertical[r - 1]);
    w.corners[3] = single(mesh.horizontal[r - 1], mesh.vertical[0]);

    // outer cycle: P_1 west->east, Q_r on down, P_r east->west, Q_1 back up
    {
        std::vector<VertexId> cyc;
        auto pushSeg = [&](std::vector<VertexId> seg) {
            for (VertexId v : seg)
                if (cyc.empty() || cyc.back() != v) cyc.push_back(v);
        };
        const auto& P1 = mesh.horizontal[0];
        const auto& Pr = mesh.horizontal[r - 1];
        const auto& Q1 = mesh.vertical[0];
        const auto& Qr = mesh.vertical[r - 1];
        pushSeg(P1);
        {
            auto it = std::find(Qr.begin(), Qr.end(), w.corners[1]);
            pushSeg(std::vector<VertexId>(it, Qr.end()));
        }
        {
            std::vector<VertexId> rev(Pr.rbegin(), Pr.rend());
            pushSeg(rev);
        }
        {
            std::vector<VertexId> rev(Q1.rbegin(), Q1.rend());
            auto it = std::find(rev.begin(), rev.end(), w.corners[3]);
            std::vector<VertexId> seg(it, rev.end());
            if (!seg.empty() && seg.back() == w.corners[0]) seg.pop_back();
            pushSeg(seg);
        }
        if (cyc.front() == cyc.back()) cyc.pop_back();
        std::set<VertexId> uniq(cyc.begin(), cyc.end());
        if (uniq.size() != cyc.size()) throw InputError("wallFromMesh: outer boundary is not a cycle");
        for (size_t i = 0; i < cyc.size(); i++)
            if (!w.graph.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]))
                throw InputError("wallFromMesh: outer boundary is not a cycle");
        w.outerCycle = std::move(cyc);
    }

    // pegs: images of the degree-two vertices of the underlying elementary
    // wall. Unsubdivided walls have exactly 2r^2 - 2 vertices and their pegs
    // are exactly the degree-two vertices; subdivided walls align their
    // outer-cycle stretches against the elementary reference and pick one
    // representative per original degree-two vertex.
    if (w.graph.n() == 2 * r * r - 2) {
        std::vector<VertexId> pegs;
        for (VertexId v : w.graph.vertices())
            if (w.graph.neighbors(v).size() == 2) pegs.push_back(v);
        w.pegs = vsetFrom(std::move(pegs));
    } else {
        w.pegs = subdividedWallPegs(w);
    }
    return w;
}

// Chains of the outer cycle between consecutive junction vertices, walked
// from corner 0; the cyclic chain/event structure is the same for every
// wall of the same size, which lets a subdivided wall borrow the
// peg counts of the elementary reference.
static std::vector<std::vector<VertexId>> outerChains(const Wall& w, std::vector<VertexId>* events) {
    std::string why;
    Mesh m = w.mesh;
    std::set<VertexId> junction;
    {
        std::set<VertexId> onH;
        for (const auto& p : m.horizontal) onH.insert(p.begin(), p.end());
        for (const auto& q : m.vertical)
            for (VertexId v : q)
                if (onH.count(v)) junction.insert(v);
    }
    const auto& D = w.outerCycle;
    size_t n = D.size();
    size_t start = 0;
    while (start < n && D[start] != w.corners[0]) start++;
    if (start == n) throw InternalError("outerChains: corner not on the outer cycle");
    std::vector<std::vector<VertexId>> chains;
    std::vector<VertexId> cur;
    for (size_t step = 1; step <= n; step++) {
        VertexId v = D[(start + step) % n];
        if (junction.count(v)) {
            chains.push_back(cur);
            cur.clear();
            if (events) events->push_back(v);
        } else {
            cur.push_back(v);
        }
    }
    // D[start] itself is a junction (a corner); the walk above closes at it
    return chains;
}

VSet subdividedWallPegs(const Wall& w) {
    int r = w.size();
    Wall ref = buildElementaryWall(r);
    std::vector<VertexId> refEvents, events;
    auto refChains = outerChains(ref, &refEvents);
    auto chains = outerChains(w, &events);
    if (refChains.size() != chains.size() || refEvents.size() != events.size())
        throw InputError("wallFromMesh: outer-cycle junction structure does not match an elementary " +
                         std::to_string(r) + "-wall");
    std::vector<VertexId> pegs;
    for (size_t c = 0; c < chains.size(); c++) {
        size_t want = refChains[c].size();  // all reference chain vertices have degree two
        if (chains[c].size() < want)
            throw InputError("wallFromMesh: boundary stretch too short to be a subdivision of the elementary wall");
        for (size_t k = 0; k < want; k++) pegs.push_back(chains[c][k]);
    }
    for (size_t c = 0; c < events.size(); c++)
        if (ref.graph.neighbors(refEvents[c]).size() == 2) pegs.push_back(events[c]);
    return vsetFrom(std::move(pegs));
}

// ----- bricks ---------------------------------------------------------------

namespace {

// compass order E,S,W,N per half edge from the path structure; shared
// edges count as horizontal
struct WallRotation {
    std::map<VertexId, std::vector<std::pair<VertexId, int>>> rot;  // v -> ordered (to, dir)
};

WallRotation wallRotation(const Wall& w) {
    std::string why;
    PathIndex px = indexMesh(w.mesh, &why);
    WallRotation wr;
    auto dirOf = [&](VertexId a, VertexId b) -> int {
        // 0=E,1=S,2=W,3=N seen from a
        auto ha = px.onH.find(a), hb = px.onH.find(b);
        if (ha != px.onH.end() && hb != px.onH.end() && ha->second.first == hb->second.first)
            return hb->second.second > ha->second.second ? 0 : 2;
        auto va = px.onV.find(a), vb = px.onV.find(b);
        if (va != px.onV.end() && vb != px.onV.end() && va->second.first == vb->second.first)
            return vb->second.second > va->second.second ? 1 : 3;
        throw InternalError("wallRotation: edge not along any mesh path");
    };
    for (VertexId v : w.graph.vertices()) {
        std::vector<std::pair<VertexId, int>> around;
        for (VertexId u : w.graph.neighbors(v)) around.push_back({u, dirOf(v, u)});
        std::sort(around.begin(), around.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        wr.rot[v] = std::move(around);
    }
    return wr;
}

}  // namespace

std::vector<std::vector<VertexId>> wallBricks(const Wall& w) {
    WallRotation wr = wallRotation(w);
    // face tracing: next dart after (a -> b) is the rotation successor of
    // (b -> a)
    std::set<std::pair<VertexId, VertexId>> used;
    std::vector<std::vector<VertexId>> faces;
    for (VertexId a : w.graph.vertices()) {
        for (auto [b, d] : wr.rot[a]) {
            (void)d;
            if (used.count({a, b})) continue;
            std::vector<VertexId> face;
            VertexId ca = a, cb = b;
            while (!used.count({ca, cb})) {
                used.insert({ca, cb});
                face.push_back(ca);
                const auto& around = wr.rot[cb];
                int pos = -1;
                for (size_t i = 0; i < around.size(); i++)
                    if (around[i].first == ca) pos = static_cast<int>(i);
                if (pos < 0) throw InternalError("wallBricks: broken rotation");
                auto [nb, nd] = around[(pos + 1) % around.size()];
                (void)nd;
                ca = cb;
                cb = nb;
            }
            faces.push_back(std::move(face));
        }
    }
    // drop the outer face: the unique face with the full outer cycle's vertex set,
    // breaking the r=2 tie by orientation against the stored outer cycle
    VSet dset = vsetFrom(std::vector<VertexId>(w.outerCycle.begin(), w.outerCycle.end()));
    std::vector<std::vector<VertexId>> bricks;
    bool outerDropped = false;
    for (auto& f : faces) {
        VSet fs = vsetFrom(std::vector<VertexId>(f.begin(), f.end()));
        bool isOuterCandidate = (fs == dset) && f.size() == w.outerCycle.size();
        if (isOuterCandidate && !outerDropped) {
            outerDropped = true;
            continue;
        }
        bricks.push_back(std::move(f));
    }
    if (!outerDropped) throw InternalError("wallBricks: outer face not found");
    int expected = w.graph.m() - w.graph.n() + 1;
    if (static_cast<int>(bricks.size()) != expected)
        throw InternalError("wallBricks: face count mismatch (" + std::to_string(bricks.size()) + " vs " +
                            std::to_string(expected) + ")");
    return bricks;
}

// ----- subwalls ---------------------------------------------------------------

namespace {

std::vector<VertexId> shortestSubpathBetween(const std::vector<VertexId>& path, const VSet& fromSet,
                                             const VSet& toSet) {
    int lastFrom = -1, firstTo = -1;
    for (size_t p = 0; p < path.size(); p++) {
        if (vsetContains(fromSet, path[p])) {
            if (firstTo == -1) lastFrom = static_cast<int>(p);
        }
        if (vsetContains(toSet, path[p]) && firstTo == -1 && lastFrom != -1 && static_cast<int>(p) >= lastFrom)
            firstTo = static_cast<int>(p);
    }
    if (lastFrom < 0 || firstTo < 0) throw InputError("shortestSubpathBetween: sets not met in order");
    return std::vector<VertexId>(path.begin() + lastFrom, path.begin() + firstTo + 1);
}

}  // namespace

Wall subwallExtract(const Wall& w, int rowLo, int rowHi, int colLo, int colHi) {
    int r = w.size();
    if (rowLo < 1 || colLo < 1 || rowHi > r || colHi > r || rowLo > rowHi || colLo > colHi)
        throw InputError("subwallExtract: range out of bounds or empty");
    if (rowHi - rowLo != colHi - colLo) throw InputError("subwallExtract: subwall range must be square");
    if (rowHi - rowLo + 1 < 2) throw InputError("subwallExtract: subwall must have size >= 2");

    Mesh sub;
    for (int i = rowLo; i <= rowHi; i++) {
        VSet qlo = vsetFrom(std::vector<VertexId>(w.mesh.vertical[colLo - 1].begin(), w.mesh.vertical[colLo - 1].end()));
        VSet qhi = vsetFrom(std::vector<VertexId>(w.mesh.vertical[colHi - 1].begin(), w.mesh.vertical[colHi - 1].end()));
        sub.horizontal.push_back(shortestSubpathBetween(w.mesh.horizontal[i - 1], qlo, qhi));
    }
    VSet pLo = vsetFrom(std::vector<VertexId>(sub.horizontal.front().begin(), sub.horizontal.front().end()));
    VSet pHi = vsetFrom(std::vector<VertexId>(sub.horizontal.back().begin(), sub.horizontal.back().end()));
    for (int j = colLo; j <= colHi; j++)
        sub.vertical.push_back(shortestSubpathBetween(w.mesh.vertical[j - 1], pLo, pHi));

    Wall out = wallFromMesh(w.graph, sub);
    if (!w.elemCoord.empty())
        for (VertexId v : out.graph.vertices()) {
            auto it = w.elemCoord.find(v);
            if (it != w.elemCoord.end()) out.elemCoord[v] = it->second;
        }
    return out;
}

// ----- H1 -------------------------------------------------------------------

VertexId H1Graph::at(int col, int row) const {
    if (col < 1 || col > twoR || row < 1 || row > twoR) throw InputError("H1Graph::at: out of range");
    return (row - 1) * twoR + (col - 1);
}

std::pair<int, int> H1Graph::coord(VertexId v) const { return {v % twoR + 1, v / twoR + 1}; }

H1Graph buildH1(int r) {
    if (r < 1) throw InputError("buildH1: r must be >= 1");
    H1Graph h;
    h.twoR = 2 * r;
    int W = h.twoR;
    VSet vs;
    for (int i = 0; i < W * W; i++) vs.push_back(i);
    std::vector<Edge> es;
    EdgeId next = 0;
    auto vid = [&](int c, int row) { return (row - 1) * W + (c - 1); };
    for (int row = 1; row <= W; row++)
        for (int c = 1; c < W; c++) es.push_back(Edge{next++, vid(c, row), vid(c + 1, row)});
    for (int row = 1; row < W; row++)
        for (int c = 1; c <= W; c++) es.push_back(Edge{next++, vid(c, row), vid(c, row + 1)});
    for (int c = 1; c < W; c++) {
        es.push_back(Edge{next++, vid(c, r), vid(c + 1, r + 1)});
        es.push_back(Edge{next++, vid(c, r + 1), vid(c + 1, r)});
    }
    h.graph = Graph(std::move(vs), std::move(es));
    for (int row = 1; row <= W; row++) {
        std::vector<VertexId> p;
        for (int c = 1; c <= W; c++) p.push_back(vid(c, row));
        h.grid.horizontal.push_back(std::move(p));
    }
    for (int c = 1; c <= W; c++) {
        std::vector<VertexId> q;
        for (int row = 1; row <= W; row++) q.push_back(vid(c, row));
        h.grid.vertical.push_back(std::move(q));
    }
    return h;
}

// ----- strips ---------------------------------------------------------------

StripSubwalls stripSubwalls(const Wall& w, const Config& cfg, const VSet& forbidden) {
    int R = w.size();
    int h = cfg.stripRows;
    if (h < 2) throw InputError("stripSubwalls: strip_rows must be >= 2");
    if (cfg.pairDistance > 2 * cfg.subwallMargin + 1)
        throw CapacityError("stripSubwalls: pair_distance > 2*subwall_margin+1 cannot be guaranteed");

    StripSubwalls out;
    bool found = false;
    for (int top = 1; top + h - 1 <= R; top += h) {
        int bot = top + h - 1;
        VSet stripVerts;
        {
            std::vector<VertexId> vs;
            for (int i = top; i <= bot; i++)
                vs.insert(vs.end(), w.mesh.horizontal[i - 1].begin(), w.mesh.horizontal[i - 1].end());
            VSet pTop = vsetFrom(std::vector<VertexId>(w.mesh.horizontal[top - 1].begin(), w.mesh.horizontal[top - 1].end()));
            VSet pBot = vsetFrom(std::vector<VertexId>(w.mesh.horizontal[bot - 1].begin(), w.mesh.horizontal[bot - 1].end()));
            for (int j = 1; j <= R; j++) {
                auto seg = shortestSubpathBetween(w.mesh.vertical[j - 1], pTop, pBot);
                vs.insert(vs.end(), seg.begin(), seg.end());
            }
            stripVerts = vsetFrom(std::move(vs));
        }
        if (!vsetIntersect(stripVerts, forbidden).empty()) continue;
        out.strip.rowLo = top;
        out.strip.rowHi = bot;
        out.strip.vertices = std::move(stripVerts);
        found = true;
        break;
    }
    if (!found)
        throw CapacityError("stripSubwalls: no strip of " + std::to_string(h) +
                            " rows avoids the forbidden set; wall of size " + std::to_string(R) + " is too small");

    int margin = cfg.subwallMargin;
    int size = cfg.subwallSize;
    int gap = cfg.pairDistance;
    int want = cfg.t * (cfg.t - 1);
    int rowLo = out.strip.rowLo + margin;
    int rowHi = rowLo + size - 1;
    if (rowHi > out.strip.rowHi - margin)
        throw CapacityError("stripSubwalls: subwall_size + 2*subwall_margin exceeds strip_rows");
    int col = margin + 1;
    for (int i = 0; i < want; i++) {
        int colHi = col + size - 1;
        if (colHi > R - margin) break;
        out.subwalls.push_back(subwallExtract(w, rowLo, rowHi, col, colHi));
        out.placement.push_back({rowLo, rowHi, col, colHi});
        col = colHi + gap + 1;
    }
    if (out.subwalls.empty())
        throw CapacityError("stripSubwalls: wall too narrow for even one subwall of size " + std::to_string(size));
    return out;
}

}  // namespace flatwall
