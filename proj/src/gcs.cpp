#include "sonn/gcs.hpp"

#include <algorithm>
#include <cmath>

namespace sonn {

GcsNetwork::GcsNetwork(int k, std::vector<Vector> vertices) : k_(k) {
    if (k < 1) throw Error("gcs: simplex dimension k must be >= 1");
    if (vertices.size() != static_cast<std::size_t>(k) + 1) {
        throw Error("gcs: initial simplex needs exactly k+1 vertices");
    }
    const std::size_t dim = vertices.front().size();
    Simplex all;
    for (Vector& v : vertices) {
        if (v.size() != dim) throw Error("gcs: initial vertices disagree on dimension");
        const int id = next_id_++;
        nodes_.emplace(id, GcsNode{id, std::move(v), 0.0});
        all.push_back(id);
    }
    simplices_.insert(all);
}

GcsNode& GcsNetwork::node(int id) {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw Error("gcs: unknown node id " + std::to_string(id));
    return it->second;
}

const GcsNode& GcsNetwork::node(int id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw Error("gcs: unknown node id " + std::to_string(id));
    return it->second;
}

std::vector<int> GcsNetwork::neighbors(int id) const {
    std::set<int> out;
    for (const Simplex& s : simplices_) {
        if (std::binary_search(s.begin(), s.end(), id)) {
            out.insert(s.begin(), s.end());
        }
    }
    out.erase(id);
    return {out.begin(), out.end()};
}

std::set<std::pair<int, int>> GcsNetwork::edges() const {
    std::set<std::pair<int, int>> out;
    for (const Simplex& s : simplices_) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                out.emplace(s[i], s[j]);
            }
        }
    }
    return out;
}

double GcsNetwork::counter_mass() const {
    double sum = 0.0;
    for (const auto& [id, n] : nodes_) sum += n.counter;
    return sum;
}

int GcsNetwork::split_edge(int q, int f, Vector w, double counter) {
    node(q);
    node(f);
    bool adjacent = false;
    for (const Simplex& s : simplices_) {
        if (std::binary_search(s.begin(), s.end(), q) &&
            std::binary_search(s.begin(), s.end(), f)) {
            adjacent = true;
            break;
        }
    }
    if (!adjacent) throw Error("gcs: split_edge on non-adjacent nodes");

    const int r = next_id_++;
    nodes_.emplace(r, GcsNode{r, std::move(w), counter});

    auto substituted = [r](const Simplex& s, int out) {
        Simplex copy = s;
        *std::find(copy.begin(), copy.end(), out) = r;
        std::sort(copy.begin(), copy.end());
        return copy;
    };

    std::set<Simplex> updated;
    for (const Simplex& s : simplices_) {
        if (std::binary_search(s.begin(), s.end(), q) &&
            std::binary_search(s.begin(), s.end(), f)) {
            updated.insert(substituted(s, f));  // keeps q
            updated.insert(substituted(s, q));  // keeps f
        } else {
            updated.insert(s);
        }
    }
    simplices_ = std::move(updated);
    return r;
}

bool GcsNetwork::remove_node_cascade(int id) {
    node(id);
    std::set<Simplex> kept;
    for (const Simplex& s : simplices_) {
        if (!std::binary_search(s.begin(), s.end(), id)) kept.insert(s);
    }
    if (kept.empty()) return false;  // deletion never destroys the last simplex

    std::set<int> used;
    for (const Simplex& s : kept) used.insert(s.begin(), s.end());
    // A node dangles iff no kept simplex references it, so one sweep
    // finds the whole cascade.
    for (auto it = nodes_.begin(); it != nodes_.end();) {
        if (used.count(it->first) == 0) {
            it = nodes_.erase(it);
        } else {
            ++it;
        }
    }
    simplices_ = std::move(kept);
    return true;
}

void GcsNetwork::validate() const {
    if (simplices_.empty()) throw Error("gcs invariant: no simplices left");
    std::set<int> used;
    for (const Simplex& s : simplices_) {
        if (s.size() != static_cast<std::size_t>(k_) + 1) {
            throw Error("gcs invariant: simplex of size " + std::to_string(s.size()));
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i > 0 && s[i] <= s[i - 1]) throw Error("gcs invariant: unsorted or duplicate simplex ids");
            if (nodes_.find(s[i]) == nodes_.end()) {
                throw Error("gcs invariant: simplex references missing node " + std::to_string(s[i]));
            }
        }
        used.insert(s.begin(), s.end());
    }
    for (const auto& [id, n] : nodes_) {
        if (used.count(id) == 0) throw Error("gcs invariant: dangling node " + std::to_string(id));
        if (!(n.counter >= 0.0) || !std::isfinite(n.counter)) {
            throw Error("gcs invariant: bad counter on node " + std::to_string(id));
        }
    }
}

void GcsParams::validate(int k) const {
    if (!(eps_b > eps_n) || !(eps_n > 0.0) || eps_b > 1.0) {
        throw Error("gcs: adaptation rates must satisfy 1 >= eps_b > eps_n > 0");
    }
    if (!(counter_decay > 0.0 && counter_decay < 1.0)) {
        throw Error("gcs: counter_decay must lie in (0, 1)");
    }
    if (insert_every == 0) throw Error("gcs: insert_every must be positive");
    if (delete_threshold < 0.0) throw Error("gcs: delete_threshold must be >= 0");
    if (max_nodes < static_cast<std::size_t>(k) + 1) {
        throw Error("gcs: max_nodes below simplex size");
    }
}

void gcs_adapt(GcsNetwork& net, const GcsParams& p, const Vector& x) {
    // Winner scan in ascending id order, strict < keeps the lowest id on ties.
    int s1 = -1;
    double best = 0.0;
    for (const auto& [id, n] : net.nodes()) {
        const double d = squared_distance(n.w, x);
        if (s1 < 0 || d < best) {
            s1 = id;
            best = d;
        }
    }
    if (s1 < 0) throw Error("gcs: empty network");

    move_toward(net.node(s1).w, x, p.eps_b);
    for (int i : net.neighbors(s1)) {
        move_toward(net.node(i).w, x, p.eps_n);
    }
    net.node(s1).counter += 1.0;
    const double keep = 1.0 - p.counter_decay;
    for (const auto& [id, n] : net.nodes()) {
        net.node(id).counter = n.counter * keep;
    }
}

void gcs_insert(GcsNetwork& net) {
    if (net.simplices().empty()) throw Error("gcs: insert on a network without simplices");

    int q = -1;
    double best_counter = 0.0;
    for (const auto& [id, n] : net.nodes()) {
        if (q < 0 || n.counter > best_counter) {
            q = id;
            best_counter = n.counter;
        }
    }

    int f = -1;
    double best_d = 0.0;
    for (int i : net.neighbors(q)) {
        const double d = squared_distance(net.node(q).w, net.node(i).w);
        if (f < 0 || d > best_d) {
            f = i;
            best_d = d;
        }
    }
    if (f < 0) throw Error("gcs: busiest node has no neighbors");

    const double cq = net.node(q).counter;
    const double cf = net.node(f).counter;
    Vector mid(net.node(q).w.size());
    for (std::size_t j = 0; j < mid.size(); ++j) {
        mid[j] = 0.5 * (net.node(q).w[j] + net.node(f).w[j]);
    }
    net.split_edge(q, f, std::move(mid), 0.5 * (cq + cf));
    net.node(q).counter = 0.5 * cq;
    net.node(f).counter = 0.5 * cf;
}

bool gcs_delete(GcsNetwork& net, const GcsParams& p) {
    int victim = -1;
    double least = 0.0;
    for (const auto& [id, n] : net.nodes()) {
        if (victim < 0 || n.counter < least) {
            victim = id;
            least = n.counter;
        }
    }
    if (victim < 0 || least >= p.delete_threshold) return false;
    return net.remove_node_cascade(victim);
}

GcsNetwork gcs_initial(int k, const Dataset& d, RandomStream& rs) {
    if (k < 1) throw Error("gcs: simplex dimension k must be >= 1");
    const BoundingBox box = bounding_box(d);
    std::vector<Vector> vertices;
    vertices.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) vertices.push_back(uniform_in_box(box, rs));
    return GcsNetwork(k, std::move(vertices));
}

GcsNetwork gcs_train(const Dataset& d, const GcsParams& p, RandomStream& rs,
                     std::uint64_t presentations, int k, const GcsObserver& observer) {
    p.validate(k);
    GcsNetwork net = gcs_initial(k, d, rs);
    for (std::uint64_t i = 1; i <= presentations; ++i) {
        gcs_adapt(net, p, draw_sample(d, rs));
        if (observer) observer(GcsEvent::Adapt, net);
        if (i % p.insert_every == 0 && net.node_count() < p.max_nodes) {
            gcs_insert(net);
            if (observer) observer(GcsEvent::Insert, net);
        }
        if (p.delete_every != 0 && i % p.delete_every == 0) {
            if (gcs_delete(net, p) && observer) observer(GcsEvent::Delete, net);
        }
    }
    return net;
}

}  // namespace sonn
