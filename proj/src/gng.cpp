#include "sonn/gng.hpp"

#include <algorithm>
#include <cmath>

namespace sonn {

std::pair<int, int> GngGraph::key(int a, int b) {
    return {std::min(a, b), std::max(a, b)};
}

int GngGraph::add_node(Vector w, double error) {
    const int id = next_id_++;
    nodes_.emplace(id, GngNode{id, std::move(w), error});
    adjacency_.emplace(id, std::set<int>{});
    return id;
}

void GngGraph::remove_node(int id) {
    node(id);
    for (int nb : neighbors(id)) remove_edge(id, nb);
    adjacency_.erase(id);
    nodes_.erase(id);
}

GngNode& GngGraph::node(int id) {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw Error("gng: unknown node id " + std::to_string(id));
    return it->second;
}

const GngNode& GngGraph::node(int id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw Error("gng: unknown node id " + std::to_string(id));
    return it->second;
}

bool GngGraph::has_edge(int a, int b) const {
    return edges_.count(key(a, b)) != 0;
}

int GngGraph::edge_age(int a, int b) const {
    auto it = edges_.find(key(a, b));
    if (it == edges_.end()) throw Error("gng: no such edge");
    return it->second;
}

void GngGraph::set_edge_age(int a, int b, int age) {
    if (a == b) throw Error("gng: self-loop rejected");
    node(a);
    node(b);
    edges_[key(a, b)] = age;
    adjacency_[a].insert(b);
    adjacency_[b].insert(a);
}

void GngGraph::remove_edge(int a, int b) {
    edges_.erase(key(a, b));
    auto ita = adjacency_.find(a);
    if (ita != adjacency_.end()) ita->second.erase(b);
    auto itb = adjacency_.find(b);
    if (itb != adjacency_.end()) itb->second.erase(a);
}

std::vector<int> GngGraph::neighbors(int id) const {
    auto it = adjacency_.find(id);
    if (it == adjacency_.end()) throw Error("gng: unknown node id " + std::to_string(id));
    return {it->second.begin(), it->second.end()};
}

std::size_t GngGraph::degree(int id) const {
    auto it = adjacency_.find(id);
    if (it == adjacency_.end()) throw Error("gng: unknown node id " + std::to_string(id));
    return it->second.size();
}

void GngGraph::validate() const {
    for (const auto& [k, age] : edges_) {
        if (k.first == k.second) throw Error("gng invariant: self-loop");
        if (nodes_.count(k.first) == 0 || nodes_.count(k.second) == 0) {
            throw Error("gng invariant: edge references a missing node");
        }
        if (age < 0) throw Error("gng invariant: negative edge age");
    }
    for (const auto& [id, n] : nodes_) {
        if (!(n.error >= 0.0) || !std::isfinite(n.error)) {
            throw Error("gng invariant: bad error on node " + std::to_string(id));
        }
        for (int nb : neighbors(id)) {
            if (edges_.count(key(id, nb)) == 0) {
                throw Error("gng invariant: adjacency and edge set disagree");
            }
        }
    }
}

void GngParams::validate() const {
    if (!(eps_b > eps_n) || !(eps_n > 0.0) || eps_b > 1.0) {
        throw Error("gng: adaptation rates must satisfy 1 >= eps_b > eps_n > 0");
    }
    if (max_age < 1) throw Error("gng: max_age must be >= 1");
    if (insert_every == 0) throw Error("gng: insert_every must be positive");
    if (!(alpha_split > 0.0 && alpha_split < 1.0)) throw Error("gng: alpha_split must lie in (0, 1)");
    if (!(beta_decay > 0.0 && beta_decay < 1.0)) throw Error("gng: beta_decay must lie in (0, 1)");
    if (max_nodes < 2) throw Error("gng: max_nodes must be >= 2");
}

namespace {

std::pair<int, int> winners(const GngGraph& g, const Vector& x) {
    if (g.node_count() < 2) throw Error("gng: adaptation needs at least 2 nodes");
    int s1 = -1, s2 = -1;
    double d1 = 0.0, d2 = 0.0;
    for (const auto& [id, n] : g.nodes()) {
        const double d = squared_distance(n.w, x);
        if (s1 < 0 || d < d1) {
            s2 = s1;
            d2 = d1;
            s1 = id;
            d1 = d;
        } else if (s2 < 0 || d < d2) {
            s2 = id;
            d2 = d;
        }
    }
    return {s1, s2};
}

}  // namespace

void gng_adapt_step(GngGraph& g, const GngParams& p, const Vector& x) {
    const auto [s1, s2] = winners(g, x);

    g.node(s1).error += squared_distance(g.node(s1).w, x);

    move_toward(g.node(s1).w, x, p.eps_b);
    const std::vector<int> nbs = g.neighbors(s1);
    for (int i : nbs) move_toward(g.node(i).w, x, p.eps_n);

    g.set_edge_age(s1, s2, 0);
    for (int i : nbs) {
        if (i != s2) g.set_edge_age(s1, i, g.edge_age(s1, i) + 1);
    }

    std::vector<std::pair<int, int>> expired;
    for (const auto& [k, age] : g.edges()) {
        if (age > p.max_age) expired.push_back(k);
    }
    for (const auto& [a, b] : expired) g.remove_edge(a, b);

    std::vector<int> isolated;
    for (const auto& [id, n] : g.nodes()) {
        if (g.degree(id) == 0) isolated.push_back(id);
    }
    for (int id : isolated) g.remove_node(id);

    const double keep = 1.0 - p.beta_decay;
    for (const auto& [id, n] : g.nodes()) {
        g.node(id).error = n.error * keep;
    }
}

void gng_insert(GngGraph& g, const GngParams& p) {
    if (g.edges().empty()) throw Error("gng: insert needs at least one edge");

    int q = -1;
    double eq = 0.0;
    for (const auto& [id, n] : g.nodes()) {
        if (q < 0 || n.error > eq) {
            q = id;
            eq = n.error;
        }
    }

    int f = -1;
    double ef = 0.0;
    for (int i : g.neighbors(q)) {
        const double e = g.node(i).error;
        if (f < 0 || e > ef) {
            f = i;
            ef = e;
        }
    }
    if (f < 0) throw Error("gng: maximum-error node has no neighbors");

    Vector mid(g.node(q).w.size());
    for (std::size_t j = 0; j < mid.size(); ++j) {
        mid[j] = 0.5 * (g.node(q).w[j] + g.node(f).w[j]);
    }

    g.node(q).error *= p.alpha_split;
    g.node(f).error *= p.alpha_split;
    const int r = g.add_node(std::move(mid), g.node(q).error);

    g.remove_edge(q, f);
    g.set_edge_age(q, r, 0);
    g.set_edge_age(r, f, 0);
}

std::size_t gng_components(const GngGraph& g) {
    std::set<int> seen;
    std::size_t components = 0;
    for (const auto& [start, n] : g.nodes()) {
        if (seen.count(start)) continue;
        ++components;
        std::vector<int> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int nb : g.neighbors(v)) {
                if (seen.insert(nb).second) stack.push_back(nb);
            }
        }
    }
    return components;
}

GngGraph gng_train(const Dataset& d, const GngParams& p, RandomStream& rs,
                   std::uint64_t presentations, const GngObserver& observer) {
    p.validate();
    const BoundingBox box = bounding_box(d);
    GngGraph g;
    g.add_node(uniform_in_box(box, rs));
    g.add_node(uniform_in_box(box, rs));
    for (std::uint64_t i = 1; i <= presentations; ++i) {
        gng_adapt_step(g, p, draw_sample(d, rs));
        if (observer) observer(GngEvent::Step, g);
        if (i % p.insert_every == 0 && g.node_count() < p.max_nodes) {
            gng_insert(g, p);
            if (observer) observer(GngEvent::Insert, g);
        }
    }
    return g;
}

}  // namespace sonn
