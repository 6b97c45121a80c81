#pragma once

#include "sonn/core.hpp"

#include <functional>
#include <map>
#include <set>

namespace sonn {

struct GcsNode {
    int id = 0;
    Vector w;
    double counter = 0.0;  // decaying win count
};

// k-dimensional simplicial complex. Neighborhood is derived: two nodes
// are neighbors iff they co-occur in some simplex. Invariants held
// after every mutation: each simplex has exactly k+1 distinct existing
// nodes, and each node belongs to at least one simplex.
class GcsNetwork {
public:
    using Simplex = std::vector<int>;  // sorted node ids, size k+1

    // Builds the initial k-simplex over k+1 vertex positions.
    GcsNetwork(int k, std::vector<Vector> vertices);

    int k() const { return k_; }
    std::size_t node_count() const { return nodes_.size(); }
    const std::map<int, GcsNode>& nodes() const { return nodes_; }
    GcsNode& node(int id);
    const GcsNode& node(int id) const;
    const std::set<Simplex>& simplices() const { return simplices_; }

    // Derived topological neighbors of a node, ascending ids.
    std::vector<int> neighbors(int id) const;

    // Derived edge set, each pair once with a < b.
    std::set<std::pair<int, int>> edges() const;

    double counter_mass() const;

    // Splits the edge (q, f): a new node with position w and counter
    // `counter` replaces the edge, and every simplex containing both q
    // and f is split into two. Returns the new node's id.
    int split_edge(int q, int f, Vector w, double counter);

    // Removes a node, every simplex containing it, and all nodes left
    // without a simplex. Refuses (returns false, no change) when the
    // removal would destroy the last simplex.
    bool remove_node_cascade(int id);

    // Throws Error when a structural invariant is broken.
    void validate() const;

private:
    int k_;
    int next_id_ = 0;
    std::map<int, GcsNode> nodes_;
    std::set<Simplex> simplices_;
};

struct GcsParams {
    double eps_b = 0.06;
    double eps_n = 0.006;
    double counter_decay = 0.02;       // per presentation
    std::uint64_t insert_every = 100;  // presentations per insertion
    std::uint64_t delete_every = 0;    // presentations per deletion pass, 0 = never
    double delete_threshold = 0.5;     // counters below this are deletion candidates
    std::size_t max_nodes = 100;

    void validate(int k) const;  // strict checks applied by gcs_train
};

// One presentation: move the winner by eps_b and its neighbors by
// eps_n toward x, add 1 to the winner's counter, then decay all
// counters by (1 - counter_decay).
void gcs_adapt(GcsNetwork& net, const GcsParams& p, const Vector& x);

// Inserts a node halfway between the highest-counter node and its
// farthest neighbor; their counters are halved and the new node takes
// the mean of their old values, so total counter mass is conserved.
void gcs_insert(GcsNetwork& net);

// Removes the minimum-counter node when its counter is below the
// threshold, with dangling-node cascade. Returns whether anything was
// removed (the last simplex is never destroyed).
bool gcs_delete(GcsNetwork& net, const GcsParams& p);

// Initial k-simplex with vertices drawn uniformly from the
// per-coordinate bounding box of d.
GcsNetwork gcs_initial(int k, const Dataset& d, RandomStream& rs);

enum class GcsEvent { Adapt, Insert, Delete };

// Called after each completed mutation during training.
using GcsObserver = std::function<void(GcsEvent, const GcsNetwork&)>;

GcsNetwork gcs_train(const Dataset& d, const GcsParams& p, RandomStream& rs,
                     std::uint64_t presentations, int k = 2, const GcsObserver& observer = {});

}  // namespace sonn
