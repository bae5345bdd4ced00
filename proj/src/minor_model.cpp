#include "flatwall/minor_model.h"

#include <algorithm>
#include <set>

#include "flatwall/mesh.h"

namespace flatwall {

bool validateModel(const Graph& g, const MinorModel& model, int t, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (model.t() != t) return fail("model has " + std::to_string(model.t()) + " branch sets, expected " + std::to_string(t));
    std::set<VertexId> seen;
    for (int i = 0; i < t; i++) {
        const VSet& x = model.branchSets[i];
        if (x.empty()) return fail("branch set " + std::to_string(i) + " is empty");
        for (VertexId v : x) {
            if (!g.hasVertex(v)) return fail("branch set " + std::to_string(i) + " uses a vertex outside G");
            if (!seen.insert(v).second) return fail("branch sets are not pairwise disjoint at vertex " + std::to_string(v));
        }
        if (!isConnected(g.inducedSubgraph(x)))
            return fail("branch set " + std::to_string(i) + " does not induce a connected subgraph");
    }
    for (int i = 0; i < t; i++)
        for (int j = i + 1; j < t; j++) {
            auto it = model.witness.find({i, j});
            if (it == model.witness.end()) return fail("missing witness edge for pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (!g.hasEdgeId(it->second)) return fail("witness edge for pair is not an edge of G");
            const Edge& e = g.edge(it->second);
            bool ok = (vsetContains(model.branchSets[i], e.u) && vsetContains(model.branchSets[j], e.v)) ||
                      (vsetContains(model.branchSets[i], e.v) && vsetContains(model.branchSets[j], e.u));
            if (!ok) return fail("witness edge for pair (" + std::to_string(i) + "," + std::to_string(j) + ") does not join the sets");
        }
    return true;
}

namespace {
std::vector<int> pathsMet(const std::vector<std::vector<VertexId>>& family, const VSet& x) {
    std::vector<int> met;
    for (size_t k = 0; k < family.size(); k++) {
        bool hit = false;
        for (VertexId v : family[k])
            if (vsetContains(x, v)) {
                hit = true;
                break;
            }
        if (hit) met.push_back(static_cast<int>(k) + 1);
    }
    return met;
}
}  // namespace

bool validateGrasp(const Mesh& mesh, const MinorModel& model, int t, const GraspCert& cert, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (static_cast<int>(cert.entries.size()) != model.t()) return fail("grasp certificate entry count mismatch");
    for (int i = 0; i < model.t(); i++) {
        const auto& e = cert.entries[i];
        if (static_cast<int>(e.pathIndices.size()) < t)
            return fail("branch set " + std::to_string(i) + " lists fewer than t paths");
        const auto& family = e.horizontal ? mesh.horizontal : mesh.vertical;
        std::set<int> uniq;
        for (int idx : e.pathIndices) {
            if (idx < 1 || idx > static_cast<int>(family.size())) return fail("path index out of range");
            if (!uniq.insert(idx).second) return fail("duplicate path index in grasp certificate");
            bool hit = false;
            for (VertexId v : family[idx - 1])
                if (vsetContains(model.branchSets[i], v)) {
                    hit = true;
                    break;
                }
            if (!hit)
                return fail("branch set " + std::to_string(i) + " does not meet listed path " + std::to_string(idx));
        }
    }
    return true;
}

bool measureGrasp(const Mesh& mesh, const MinorModel& model, int t, GraspCert* out) {
    GraspCert cert;
    for (const VSet& x : model.branchSets) {
        auto h = pathsMet(mesh.horizontal, x);
        auto v = pathsMet(mesh.vertical, x);
        GraspCert::Entry e;
        if (static_cast<int>(h.size()) >= t && h.size() >= v.size()) {
            e.horizontal = true;
            e.pathIndices = h;
        } else if (static_cast<int>(v.size()) >= t) {
            e.horizontal = false;
            e.pathIndices = v;
        } else {
            return false;
        }
        cert.entries.push_back(std::move(e));
    }
    if (out) *out = std::move(cert);
    return true;
}

MinorModel liftModel(const MinorModel& model, const std::map<VertexId, VertexId>& cmap) {
    std::map<VertexId, VSet> pre;
    for (const auto& [src, dst] : cmap) pre[dst].push_back(src);
    MinorModel out;
    for (const VSet& x : model.branchSets) {
        std::vector<VertexId> lifted;
        for (VertexId v : x) {
            auto it = pre.find(v);
            if (it == pre.end()) throw InputError("liftModel: cmap does not cover branch-set vertex " + std::to_string(v));
            lifted.insert(lifted.end(), it->second.begin(), it->second.end());
        }
        out.branchSets.push_back(vsetFrom(std::move(lifted)));
    }
    out.witness = model.witness;
    return out;
}

}  // namespace flatwall
