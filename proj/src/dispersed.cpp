#include "flatwall/dispersed.h"

#include <algorithm>
#include <functional>
#include <set>

namespace flatwall {

namespace {

struct PathState {
    std::vector<VertexId> verts;  // oriented x -> y
    VertexId x, y;
};

struct AnchorState {
    std::vector<VertexId> verts;  // oriented a -> w
    int pathIdx = -1;
    VertexId a, w;
};

struct Engine {
    const Graph& g;
    const Mesh& m;
    const GridContraction& f;
    int l, k;
    DisperseMode mode;
    bool exact;

    std::vector<PathState> paths;
    std::vector<AnchorState> anchors;
    std::vector<std::vector<bool>> mark;  // grid marks: membership in W
    VSet mverts;
    std::vector<EdgeId> medges;

    Engine(const Graph& g_, const Mesh& m_, const GridContraction& f_, int l_, int k_, DisperseMode mode_,
           bool exact_)
        : g(g_), m(m_), f(f_), l(l_), k(k_), mode(mode_), exact(exact_) {
        mark.assign(f.rows + 1, std::vector<bool>(f.cols + 1, false));
        Subgraph ms = m.asSubgraph(g);
        mverts = ms.vertices;
        medges = ms.edges;
    }

    bool inW(VertexId v) const {
        GridCoord c = f.at(v);
        return mark[c.i][c.j];
    }

    void markBall(VertexId z) {
        GridCoord cz = f.at(z);
        for (int i = 1; i <= f.rows; i++)
            for (int j = 1; j <= f.cols; j++)
                if (gridDistance(cz, GridCoord{i, j}, f.rows, f.cols) < l) mark[i][j] = true;
    }

    int dist(VertexId a, VertexId b) const { return meshDistance(f, a, b); }

    VSet apexSet() const {
        VSet a;
        for (const auto& q : anchors) a.push_back(q.a);
        return vsetFrom(std::move(a));
    }

    // good path through one bridge (far end first), or empty
    std::vector<VertexId> goodPathInBridge(const Bridge& b, const Graph& ga) const {
        auto pathThrough = [&](VertexId x, VertexId y) -> std::vector<VertexId> {
            if (b.interior.empty()) return {x, y};
            VSet allowed = vsetUnion(b.interior, vsetFrom({x, y}));
            VSet forbidden = vsetMinus(ga.vertices(), allowed);
            auto p = shortestPath(ga, {x}, {y}, forbidden);
            if (p.empty()) throw InternalError("dispersed: bridge path vanished");
            return p;
        };
        std::vector<VertexId> xs;
        for (VertexId u : b.attachments)
            if (!inW(u)) xs.push_back(u);
        if (xs.empty()) return {};
        if (!exact) xs.resize(1);  // the fast subroutine fixes one designated x per bridge
        for (VertexId x : xs) {
            for (VertexId y : b.attachments) {
                if (y == x || dist(x, y) < l) continue;
                if (mode == DisperseMode::Full && inW(y)) continue;
                return pathThrough(x, y);
            }
        }
        return {};
    }

    std::vector<VertexId> findGoodPath() const {
        VSet apex = apexSet();
        Graph ga = apex.empty() ? g : g.deleteVertices(apex);
        Subgraph ms;
        ms.vertices = vsetMinus(mverts, apex);
        for (EdgeId e : medges) {
            const Edge& ed = g.edge(e);
            if (!vsetContains(apex, ed.u) && !vsetContains(apex, ed.v)) ms.edges.push_back(ed.id);
        }
        for (const Bridge& b : enumerateBridges(ga, ms)) {
            auto p = goodPathInBridge(b, ga);
            if (!p.empty()) return p;
        }
        return {};
    }

    struct Hit {
        int kind = 0;  // 0 none, 1 path, 2 anchor
        int idx = -1;
        int pos = -1;
        VertexId c = -1;
    };

    Hit firstHit(const std::vector<VertexId>& s) const {
        std::map<VertexId, std::pair<int, int>> onPath, onAnchor;
        for (size_t i = 0; i < paths.size(); i++)
            for (size_t p = 0; p < paths[i].verts.size(); p++)
                onPath[paths[i].verts[p]] = {static_cast<int>(i), static_cast<int>(p)};
        for (size_t i = 0; i < anchors.size(); i++)
            for (size_t p = 0; p < anchors[i].verts.size(); p++)
                onAnchor[anchors[i].verts[p]] = {static_cast<int>(i), static_cast<int>(p)};
        for (size_t pos = 1; pos < s.size(); pos++) {
            auto itA = onAnchor.find(s[pos]);
            if (itA != onAnchor.end()) return Hit{2, itA->second.first, itA->second.second, s[pos]};
            auto itP = onPath.find(s[pos]);
            if (itP != onPath.end()) return Hit{1, itP->second.first, itP->second.second, s[pos]};
        }
        return Hit{};
    }

    void applyGoodPath(const std::vector<VertexId>& s) {
        VertexId x = s.front(), yEnd = s.back();
        Hit h = firstHit(s);
        if (h.kind == 0) {
            paths.push_back(PathState{s, x, yEnd});
            markBall(x);
            markBall(yEnd);
            return;
        }
        std::vector<VertexId> sPrefix;
        for (VertexId v : s) {
            sPrefix.push_back(v);
            if (v == h.c) break;
        }
        if (h.kind == 2) {
            // c on an anchor: prefix plus the anchor tail is a new long path
            const AnchorState q = anchors[h.idx];
            std::vector<VertexId> np = sPrefix;
            for (size_t i = h.pos + 1; i < q.verts.size(); i++) np.push_back(q.verts[i]);
            paths.push_back(PathState{np, x, q.w});
            anchors.erase(anchors.begin() + h.idx);
            markBall(x);
            return;
        }
        int i = h.idx;
        int anchorAt = -1;
        for (size_t a = 0; a < anchors.size(); a++)
            if (anchors[a].pathIdx == i) anchorAt = static_cast<int>(a);
        const PathState old = paths[i];
        if (anchorAt < 0) {
            AnchorState q;
            q.verts = std::vector<VertexId>(sPrefix.rbegin(), sPrefix.rend());
            q.pathIdx = i;
            q.a = h.c;
            q.w = x;
            anchors.push_back(std::move(q));
            markBall(x);
            return;
        }
        const AnchorState anc = anchors[anchorAt];
        int posA = -1;
        for (size_t p = 0; p < old.verts.size(); p++)
            if (old.verts[p] == anc.a) posA = static_cast<int>(p);
        if (posA < 0 || posA == h.pos) throw InternalError("dispersed: anchor vertex confusion");
        // split: S plus the c-side of P_i; the anchor plus the far side
        std::vector<VertexId> p1 = sPrefix;
        if (h.pos < posA) {
            for (int p = h.pos - 1; p >= 0; p--) p1.push_back(old.verts[p]);
            std::vector<VertexId> p2(anc.verts.rbegin(), anc.verts.rend());  // w .. a
            for (size_t p = posA + 1; p < old.verts.size(); p++) p2.push_back(old.verts[p]);
            paths[i] = PathState{p1, x, old.verts.front()};
            paths.push_back(PathState{p2, anc.w, old.verts.back()});
        } else {
            for (size_t p = h.pos + 1; p < old.verts.size(); p++) p1.push_back(old.verts[p]);
            std::vector<VertexId> p2(anc.verts.rbegin(), anc.verts.rend());
            for (int p = posA - 1; p >= 0; p--) p2.push_back(old.verts[p]);
            paths[i] = PathState{p1, x, old.verts.back()};
            paths.push_back(PathState{p2, anc.w, old.verts.front()});
        }
        anchors.erase(anchors.begin() + anchorAt);
        markBall(x);
    }

    // re-index anchors after a path swap is never needed: anchors reference
    // paths by index and path order only changes by push_back/replace

    DisperseResult run() {
        DisperseResult res;
        int maxDistUpper = std::min(std::max(f.rows, f.cols) - 1,
                                    2 * std::min((f.rows + 1) / 2, (f.cols + 1) / 2) - 1);
        bool allShort = exact ? (l > maxDistUpper) : (2 * l - 2 >= maxDistUpper);
        if (allShort) {
            res.isFamily = false;
            res.blocker = BlockerCert{mode, l, {}, {}, !exact};
            return res;
        }
        int guard = 3 * k;
        while (static_cast<int>(paths.size()) < k) {
            auto s = findGoodPath();
            if (s.empty()) break;
            applyGoodPath(s);
            res.iterations++;
            if (res.iterations > guard) throw InternalError("dispersed: exceeded the 3k iteration bound");
        }
        if (static_cast<int>(paths.size()) >= k) {
            res.isFamily = true;
            res.family.mode = mode;
            res.family.radius = l;
            for (int i = 0; i < k; i++) {
                res.family.paths.push_back(paths[i].verts);
                res.family.ends.push_back({paths[i].x, paths[i].y});
            }
            std::string why;
            if (!validateFamily(g, m, f, res.family, k, &why))
                throw InternalError("dispersed: emitted family fails validation: " + why);
            return res;
        }
        res.isFamily = false;
        res.blocker.mode = mode;
        res.blocker.radius = l;
        res.blocker.weakened = !exact;
        res.blocker.apex = apexSet();
        std::vector<VertexId> z;
        for (const auto& p : paths) {
            z.push_back(p.x);
            z.push_back(p.y);
        }
        for (const auto& q : anchors) z.push_back(q.w);
        res.blocker.zset = vsetFrom(std::move(z));
        if (static_cast<int>(res.blocker.apex.size()) > k - 1) throw InternalError("dispersed: |A| exceeds k-1");
        if (static_cast<int>(res.blocker.zset.size()) > 3 * k - 3)
            throw InternalError("dispersed: |Z| exceeds 3k-3");
        return res;
    }
};

}  // namespace

DisperseResult findSemiDispersed(const Graph& g, const Mesh& m, const GridContraction& f, int l, int k,
                                 bool exact) {
    if (l < 1 || k < 1) throw InputError("findSemiDispersed: l and k must be >= 1");
    Engine e(g, m, f, l, k, DisperseMode::Semi, exact);
    return e.run();
}

DisperseResult findDispersed(const Graph& g, const Mesh& m, const GridContraction& f, int l, int k,
                             bool exact) {
    if (l < 1 || k < 1) throw InputError("findDispersed: l and k must be >= 1");
    Engine e(g, m, f, l, k, DisperseMode::Full, exact);
    return e.run();
}

bool validateFamily(const Graph& g, const Mesh& m, const GridContraction& f, const DispersedFamily& fam,
                    int k, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (static_cast<int>(fam.paths.size()) != k) return fail("family has the wrong number of paths");
    Subgraph ms = m.asSubgraph(g);
    std::set<VertexId> used;
    for (size_t i = 0; i < fam.paths.size(); i++) {
        std::string mwhy;
        if (!isMPath(g, ms, fam.paths[i], &mwhy)) return fail("path " + std::to_string(i) + ": " + mwhy);
        auto [x, y] = fam.ends[i];
        bool endsOk = (fam.paths[i].front() == x && fam.paths[i].back() == y) ||
                      (fam.paths[i].front() == y && fam.paths[i].back() == x);
        if (!endsOk) return fail("path " + std::to_string(i) + ": labeled ends do not match");
        for (VertexId v : fam.paths[i])
            if (!used.insert(v).second) return fail("paths are not pairwise disjoint");
    }
    for (size_t i = 0; i < fam.paths.size(); i++) {
        auto [xi, yi] = fam.ends[i];
        if (meshDistance(f, xi, yi) < fam.radius) return fail("short path in the family");
        for (size_t j = 0; j < fam.paths.size(); j++) {
            if (i == j) continue;
            auto [xj, yj] = fam.ends[j];
            if (meshDistance(f, xi, xj) < fam.radius) return fail("close x-ends in the family");
            if (fam.mode == DisperseMode::Full)
                if (meshDistance(f, xi, yj) < fam.radius || meshDistance(f, yi, yj) < fam.radius)
                    return fail("close ends in a dispersed family");
        }
    }
    return true;
}

bool verifyBlocker(const Graph& g, const Mesh& m, const GridContraction& f, const BlockerCert& cert,
                   int maxN) {
    if (g.n() > maxN)
        throw CapacityError("verifyBlocker: instance with " + std::to_string(g.n()) +
                            " vertices exceeds the enumeration guard of " + std::to_string(maxN));
    Subgraph ms = m.asSubgraph(g);
    std::vector<std::vector<bool>> mark(f.rows + 1, std::vector<bool>(f.cols + 1, false));
    for (VertexId z : cert.zset) {
        GridCoord cz = f.at(z);
        for (int i = 1; i <= f.rows; i++)
            for (int j = 1; j <= f.cols; j++)
                if (gridDistance(cz, GridCoord{i, j}, f.rows, f.cols) < cert.radius) mark[i][j] = true;
    }
    auto inW = [&](VertexId v) {
        GridCoord c = f.at(v);
        return mark[c.i][c.j];
    };
    int shortBound = cert.weakened ? 2 * cert.radius - 2 : cert.radius - 1;

    std::vector<std::vector<VertexId>> all;
    {
        std::set<EdgeId> medge(ms.edges.begin(), ms.edges.end());
        std::function<void(std::vector<VertexId>&, std::set<VertexId>&)> dfs =
            [&](std::vector<VertexId>& cur, std::set<VertexId>& on) {
                VertexId v = cur.back();
                for (EdgeId e : g.incident(v)) {
                    VertexId w = g.edge(e).other(v);
                    if (vsetContains(cert.apex, w) || on.count(w)) continue;
                    if (vsetContains(ms.vertices, w)) {
                        if (cur.size() == 1 && medge.count(e)) continue;
                        if (cur.front() <= w) {
                            auto p = cur;
                            p.push_back(w);
                            all.push_back(p);
                        }
                        continue;
                    }
                    on.insert(w);
                    cur.push_back(w);
                    dfs(cur, on);
                    cur.pop_back();
                    on.erase(w);
                }
            };
        for (VertexId s : vsetMinus(ms.vertices, cert.apex)) {
            std::vector<VertexId> cur{s};
            std::set<VertexId> on{s};
            dfs(cur, on);
        }
    }
    for (const auto& p : all) {
        VertexId x = p.front(), y = p.back();
        int d = meshDistance(f, x, y);
        bool ok;
        if (cert.mode == DisperseMode::Semi)
            ok = d <= shortBound || (inW(x) && inW(y));
        else
            ok = d <= shortBound || inW(x) || inW(y);
        if (!ok) return false;
    }
    return true;
}

}  // namespace flatwall
