#ifndef FLATWALL_MINOR_MODEL_H
#define FLATWALL_MINOR_MODEL_H

#include "flatwall/graph.h"

namespace flatwall {

struct Mesh;  // mesh.h

struct MinorModel {
    std::vector<VSet> branchSets;                 // X_1..X_t, pairwise disjoint
    std::map<std::pair<int, int>, EdgeId> witness;  // {i<j} -> edge of G between X_i and X_j
    int t() const { return static_cast<int>(branchSets.size()); }
};

// Per branch set, >= t horizontal path indices or >= t vertical path
// indices of the mesh that the set meets (1-based indices, horizontal
// flagged true).
struct GraspCert {
    struct Entry {
        bool horizontal = false;
        std::vector<int> pathIndices;
    };
    std::vector<Entry> entries;  // one per branch set
};

bool validateModel(const Graph& g, const MinorModel& model, int t, std::string* why = nullptr);

// Grasp check against a mesh; cert lists which paths each branch set meets.
bool validateGrasp(const Mesh& mesh, const MinorModel& model, int t, const GraspCert& cert,
                   std::string* why = nullptr);

// Measures a grasp certificate (or reports failure) by counting met paths.
bool measureGrasp(const Mesh& mesh, const MinorModel& model, int t, GraspCert* out);

// Replaces each branch set by its cmap-preimage union; witness edges keep
// their ids. cmap must cover every vertex used by the model.
MinorModel liftModel(const MinorModel& model, const std::map<VertexId, VertexId>& cmap);

}  // namespace flatwall

#endif
