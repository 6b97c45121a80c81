#pragma once

#include "sonn/core.hpp"

#include <functional>
#include <map>
#include <set>

namespace sonn {

struct GngNode {
    int id = 0;
    Vector w;
    double error = 0.0;  // accumulated local quantization error
};

// Simple undirected graph with aged edges. No self-loops, at most one
// edge per node pair.
class GngGraph {
public:
    GngGraph() = default;

    int add_node(Vector w, double error = 0.0);
    void remove_node(int id);  // drops incident edges

    const std::map<int, GngNode>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }
    GngNode& node(int id);
    const GngNode& node(int id) const;

    // Edge ages keyed by (min id, max id).
    const std::map<std::pair<int, int>, int>& edges() const { return edges_; }
    bool has_edge(int a, int b) const;
    int edge_age(int a, int b) const;
    void set_edge_age(int a, int b, int age);  // creates the edge if absent
    void remove_edge(int a, int b);

    std::vector<int> neighbors(int id) const;  // ascending ids
    std::size_t degree(int id) const;

    void validate() const;  // simple graph, endpoints exist, finite errors

private:
    static std::pair<int, int> key(int a, int b);

    int next_id_ = 0;
    std::map<int, GngNode> nodes_;
    std::map<std::pair<int, int>, int> edges_;
    std::map<int, std::set<int>> adjacency_;
};

struct GngParams {
    double eps_b = 0.2;
    double eps_n = 0.006;
    int max_age = 50;
    std::uint64_t insert_every = 100;  // adaptation steps per insertion
    double alpha_split = 0.5;          // error reduction at insertion
    double beta_decay = 0.0005;        // global per-step error decay
    std::size_t max_nodes = 100;

    void validate() const;  // strict checks applied by gng_train
};

// One adaptation step: accumulate squared error at the winner, move the
// winner and its neighbors toward x, refresh the Hebbian edge between
// the two winners, age/prune the winner's other edges, drop isolated
// nodes, decay all errors.
void gng_adapt_step(GngGraph& g, const GngParams& p, const Vector& x);

// Inserts a node halfway between the maximum-error node and its
// maximum-error neighbor, re-wiring the edge through the new node and
// re-distributing the local error.
void gng_insert(GngGraph& g, const GngParams& p);

// Number of connected components (empty graph: 0).
std::size_t gng_components(const GngGraph& g);

enum class GngEvent { Step, Insert };

using GngObserver = std::function<void(GngEvent, const GngGraph&)>;

// Starts from two nodes drawn from the bounding box of d (no edge) and
// runs `presentations` adaptation steps with periodic insertions.
GngGraph gng_train(const Dataset& d, const GngParams& p, RandomStream& rs,
                   std::uint64_t presentations, const GngObserver& observer = {});

}  // namespace sonn
