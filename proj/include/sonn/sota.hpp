#pragma once

#include "sonn/core.hpp"

#include <array>
#include <functional>
#include <map>

namespace sonn {

// Position-wise symbol distribution: `positions` rows of length
// `alphabet`, each row summing to 1 within 1e-9.
struct SequenceProfile {
    std::size_t positions = 0;  // L
    std::size_t alphabet = 0;   // A
    std::vector<double> values;  // row-major, values[l * alphabet + r]

    SequenceProfile() = default;
    SequenceProfile(std::size_t positions_in, std::size_t alphabet_in, std::vector<double> values_in);

    double at(std::size_t l, std::size_t r) const { return values[l * alphabet + r]; }
};

// Mean per-position mismatch d = sum_l (1 - sum_r s[l,r] * c[l,r]) / L.
// Lies in [0, 1]; zero exactly for identical one-hot profiles.
double sequence_distance(const SequenceProfile& s, const SequenceProfile& c);

struct SotaParams {
    double eta_winner = 0.1;
    double eta_sister = 0.05;
    double eta_mother = 0.01;
    std::uint64_t cycle_presentations = 0;  // 0 = one pass over the inputs
    double resource_threshold = 0.05;
    std::size_t max_leaves = 16;

    void validate() const;
};

// Point policies: how to measure, blend and average the two profile kinds.
struct VectorPoint {
    using value_type = Vector;
    static double distance(const Vector& a, const Vector& b) { return euclidean_distance(a, b); }
    static void blend(Vector& c, const Vector& x, double eta) { move_toward(c, x, eta); }
    static Vector mean(std::span<const Vector> items);
    static void check_shape(const Vector& a, const Vector& b);
};

struct ProfilePoint {
    using value_type = SequenceProfile;
    static double distance(const SequenceProfile& a, const SequenceProfile& b) {
        return sequence_distance(a, b);
    }
    static void blend(SequenceProfile& c, const SequenceProfile& x, double eta);
    static SequenceProfile mean(std::span<const SequenceProfile> items);
    static void check_shape(const SequenceProfile& a, const SequenceProfile& b);
};

template <class Point>
struct SotaNode {
    int id = 0;
    int parent = -1;
    std::array<int, 2> children{-1, -1};
    typename Point::value_type profile;
    double resource = 0.0;
    bool frozen = false;  // set once the node becomes a mother

    bool is_leaf() const { return children[0] < 0; }
};

// Binary tree of neurons. Nodes are append-only (ids are dense and
// stable); only leaves compete for inputs.
template <class Point>
class SotaTree {
public:
    using value_type = typename Point::value_type;

    explicit SotaTree(value_type root_profile) {
        SotaNode<Point> root;
        root.id = 0;
        root.profile = std::move(root_profile);
        nodes_.push_back(std::move(root));
    }

    const std::vector<SotaNode<Point>>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }

    SotaNode<Point>& node(int id) {
        if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size()) {
            throw Error("sota: unknown node id " + std::to_string(id));
        }
        return nodes_[static_cast<std::size_t>(id)];
    }
    const SotaNode<Point>& node(int id) const {
        return const_cast<SotaTree*>(this)->node(id);
    }

    std::vector<int> leaves() const {
        std::vector<int> out;
        for (const auto& n : nodes_) {
            if (n.is_leaf()) out.push_back(n.id);
        }
        return out;
    }

    std::size_t leaf_count() const {
        std::size_t c = 0;
        for (const auto& n : nodes_) c += n.is_leaf() ? 1 : 0;
        return c;
    }

    // -1 for the root.
    int sibling(int id) const {
        const SotaNode<Point>& n = node(id);
        if (n.parent < 0) return -1;
        const auto& ch = node(n.parent).children;
        return ch[0] == id ? ch[1] : ch[0];
    }

    // Attaches two fresh leaves copying the target's profile and
    // freezes the target. The target must be a leaf.
    void split(int id) {
        SotaNode<Point>& target = node(id);
        if (!target.is_leaf()) throw Error("sota: split target is not a leaf");
        const value_type profile_copy = target.profile;
        const int base = static_cast<int>(nodes_.size());
        for (int c = 0; c < 2; ++c) {
            SotaNode<Point> child;
            child.id = base + c;
            child.parent = id;
            child.profile = profile_copy;
            node(id).children[static_cast<std::size_t>(c)] = child.id;
            nodes_.push_back(std::move(child));
        }
        node(id).frozen = true;
    }

    // Proper-binary-tree shape check; throws Error on breach.
    void validate() const {
        std::size_t roots = 0;
        for (const auto& n : nodes_) {
            if (n.parent < 0) {
                ++roots;
            } else if (node(n.parent).children[0] != n.id && node(n.parent).children[1] != n.id) {
                throw Error("sota invariant: parent does not list node " + std::to_string(n.id));
            }
            const bool c0 = n.children[0] >= 0, c1 = n.children[1] >= 0;
            if (c0 != c1) throw Error("sota invariant: node with exactly one child");
            if (c0 && (node(n.children[0]).parent != n.id || node(n.children[1]).parent != n.id)) {
                throw Error("sota invariant: child does not point back to its parent");
            }
            if (n.frozen && n.is_leaf()) throw Error("sota invariant: frozen leaf");
        }
        if (roots != 1) throw Error("sota invariant: tree must have exactly one root");
    }

private:
    std::vector<SotaNode<Point>> nodes_;
};

using VectorSotaTree = SotaTree<VectorPoint>;
using ProfileSotaTree = SotaTree<ProfilePoint>;

// Minimum-distance leaf for x, ties to the lowest id.
template <class Point>
int sota_winner(const SotaTree<Point>& tree, const typename Point::value_type& x) {
    int best = -1;
    double best_d = 0.0;
    for (const auto& n : tree.nodes()) {
        if (!n.is_leaf()) continue;
        Point::check_shape(n.profile, x);
        const double d = Point::distance(n.profile, x);
        if (best < 0 || d < best_d) {
            best = n.id;
            best_d = d;
        }
    }
    if (best < 0) throw Error("sota: tree has no leaves");
    return best;
}

// One presentation: the winning leaf moves by eta_winner, its sibling
// by eta_sister when that sibling is a leaf, their parent by eta_mother
// unless frozen.
template <class Point>
void sota_present(SotaTree<Point>& tree, const SotaParams& p, const typename Point::value_type& x) {
    const int winner = sota_winner(tree, x);
    Point::blend(tree.node(winner).profile, x, p.eta_winner);
    const int parent = tree.node(winner).parent;
    if (parent < 0) return;
    const int sister = tree.sibling(winner);
    if (tree.node(sister).is_leaf()) {
        Point::blend(tree.node(sister).profile, x, p.eta_sister);
    }
    if (!tree.node(parent).frozen) {
        Point::blend(tree.node(parent).profile, x, p.eta_mother);
    }
}

// Assigns every input to its nearest leaf and stores/returns the mean
// assigned distance per leaf (0 for leaves that win nothing).
template <class Point>
std::map<int, double> sota_resources(SotaTree<Point>& tree,
                                     std::span<const typename Point::value_type> inputs) {
    std::map<int, double> sums;
    std::map<int, std::size_t> counts;
    for (int leaf : tree.leaves()) {
        sums[leaf] = 0.0;
        counts[leaf] = 0;
    }
    for (const auto& x : inputs) {
        const int leaf = sota_winner(tree, x);
        sums[leaf] += Point::distance(tree.node(leaf).profile, x);
        counts[leaf] += 1;
    }
    std::map<int, double> resources;
    for (const auto& [leaf, sum] : sums) {
        const double r = counts[leaf] == 0 ? 0.0 : sum / static_cast<double>(counts[leaf]);
        resources[leaf] = r;
        tree.node(leaf).resource = r;
    }
    return resources;
}

template <class Point>
void sota_split(SotaTree<Point>& tree, int leaf_id) {
    tree.split(leaf_id);
}

template <class Point>
struct SotaResult {
    SotaTree<Point> tree;
    std::vector<int> assignments;  // winning leaf id per input
    std::size_t cycles = 0;
};

enum class SotaEvent { Cycle, Split };

template <class Point>
using SotaObserver = std::function<void(SotaEvent, const SotaTree<Point>&)>;

// Grows the tree from the input mean: present one cycle in input
// order, compute resources, split the highest-resource leaf while the
// maximum resource stays at or above the threshold and leaf budget
// remains.
template <class Point>
SotaResult<Point> sota_train(std::span<const typename Point::value_type> inputs,
                             const SotaParams& p, const SotaObserver<Point>& observer = {}) {
    p.validate();
    if (inputs.empty()) throw Error("sota: empty input set");

    SotaTree<Point> tree(Point::mean(inputs));
    if (p.max_leaves >= 2) {
        sota_split(tree, 0);
        if (observer) observer(SotaEvent::Split, tree);
    }

    const std::uint64_t cycle_len =
        p.cycle_presentations == 0 ? inputs.size() : p.cycle_presentations;
    std::size_t cycles = 0;
    while (true) {
        for (std::uint64_t i = 0; i < cycle_len; ++i) {
            sota_present(tree, p, inputs[static_cast<std::size_t>(i % inputs.size())]);
        }
        ++cycles;
        if (observer) observer(SotaEvent::Cycle, tree);

        const std::map<int, double> resources = sota_resources(tree, inputs);
        int worst = -1;
        double worst_r = 0.0;
        for (const auto& [leaf, r] : resources) {
            if (worst < 0 || r > worst_r) {
                worst = leaf;
                worst_r = r;
            }
        }
        if (worst_r < p.resource_threshold || tree.leaf_count() >= p.max_leaves) break;
        sota_split(tree, worst);
        if (observer) observer(SotaEvent::Split, tree);
    }

    SotaResult<Point> result{std::move(tree), {}, cycles};
    result.assignments.reserve(inputs.size());
    for (const auto& x : inputs) {
        result.assignments.push_back(sota_winner(result.tree, x));
    }
    return result;
}

// Vector-mode convenience wrapper over a Dataset.
SotaResult<VectorPoint> sota_train(const Dataset& d, const SotaParams& p,
                                   const SotaObserver<VectorPoint>& observer = {});

}  // namespace sonn
