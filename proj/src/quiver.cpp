#include "qsi/quiver.hpp"

#include "qsi/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace qsi {

namespace {

// Kahn's algorithm; on failure reports one cycle found by walking
// back-pointers inside the leftover subgraph.
std::vector<std::string> topological_order(const std::vector<std::string>& vertices,
                                           const std::vector<Arrow>& arrows,
                                           const std::map<std::string, int>& index) {
    const int n = static_cast<int>(vertices.size());
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (const Arrow& a : arrows) {
        const int t = index.at(a.tail), h = index.at(a.head);
        ++indeg[h];
        out[t].push_back(h);
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<std::string> order;
    order.reserve(n);
    std::vector<bool> done(n, false);
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        done[v] = true;
        order.push_back(vertices[v]);
        for (int h : out[v])
            if (--indeg[h] == 0) ready.push(h);
    }
    if (static_cast<int>(order.size()) == n) return order;

    // find a cycle among the unfinished vertices
    std::vector<int> next(n, -1);
    for (int v = 0; v < n; ++v) {
        if (done[v]) continue;
        for (int h : out[v]) {
            if (!done[h]) {
                next[v] = h;
                break;
            }
        }
    }
    int start = 0;
    while (done[start]) ++start;
    std::vector<int> seen(n, -1);
    int v = start, step = 0;
    while (seen[v] < 0) {
        seen[v] = step++;
        v = next[v];
    }
    std::ostringstream msg;
    msg << "quiver has an oriented cycle: ";
    int c = v;
    do {
        msg << vertices[c] << " -> ";
        c = next[c];
    } while (c != v);
    msg << vertices[v];
    throw CyclicQuiver(msg.str());
}

} // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (!index_.emplace(vertices_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate vertex identifier: " + vertices_[i]);
    }
    std::set<std::string> arrow_ids;
    for (const Arrow& a : arrows_) {
        if (!arrow_ids.insert(a.id).second)
            throw std::invalid_argument("duplicate arrow identifier: " + a.id);
        if (!index_.count(a.tail))
            throw DanglingArrow("arrow " + a.id + " has undeclared tail " + a.tail);
        if (!index_.count(a.head))
            throw DanglingArrow("arrow " + a.id + " has undeclared head " + a.head);
    }
    topo_ = topological_order(vertices_, arrows_, index_);
}

int Quiver::vertex_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw VertexMismatch("unknown vertex " + name);
    return it->second;
}

void check_vertex_map(const Quiver& q, const VertexMap& fn) {
    if (fn.size() != q.vertices().size())
        throw VertexMismatch("map is defined on the wrong number of vertices");
    for (const std::string& v : q.vertices()) {
        if (!fn.count(v)) throw VertexMismatch("map is missing vertex " + v);
    }
}

void check_dimension_vector(const Quiver& q, const VertexMap& fn) {
    check_vertex_map(q, fn);
    for (const auto& [v, d] : fn) {
        if (d < 0)
            throw std::invalid_argument("dimension vector is negative at vertex " + v);
    }
}

std::vector<std::string> validate_acyclic(const Quiver& q) {
    return q.topo_order();
}

Int ringel_form(const Quiver& q, const VertexMap& a, const VertexMap& b) {
    check_vertex_map(q, a);
    check_vertex_map(q, b);
    Int total = 0;
    for (const std::string& x : q.vertices()) total += a.at(x) * b.at(x);
    for (const Arrow& ar : q.arrows()) total -= a.at(ar.tail) * b.at(ar.head);
    return total;
}

VertexMap sigma_beta(const Quiver& q, const VertexMap& beta) {
    check_vertex_map(q, beta);
    VertexMap sigma;
    for (const std::string& x : q.vertices()) sigma[x] = -beta.at(x);
    for (const Arrow& a : q.arrows()) sigma[a.tail] += beta.at(a.head);
    return sigma;
}

Int evaluate_weight(const VertexMap& sigma, const VertexMap& gamma) {
    if (sigma.size() != gamma.size())
        throw VertexMismatch("weight and argument live on different vertex sets");
    Int total = 0;
    for (const auto& [v, s] : sigma) {
        auto it = gamma.find(v);
        if (it == gamma.end())
            throw VertexMismatch("weight and argument live on different vertex sets");
        total += s * it->second;
    }
    return total;
}

VertexMap scale_map(const VertexMap& m, const Int& factor) {
    VertexMap r = m;
    for (auto& [v, val] : r) val *= factor;
    return r;
}

VertexMap add_maps(const VertexMap& a, const VertexMap& b) {
    VertexMap r = a;
    for (const auto& [v, val] : b) r[v] += val;
    return r;
}

VertexMap sub_maps(const VertexMap& a, const VertexMap& b) {
    VertexMap r = a;
    for (const auto& [v, val] : b) r[v] -= val;
    return r;
}

VertexMap zero_map(const Quiver& q) {
    VertexMap r;
    for (const std::string& v : q.vertices()) r[v] = 0;
    return r;
}

bool is_zero_map(const VertexMap& m) {
    return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second == 0; });
}

long long to_ll(const Int& v) {
    return v.convert_to<long long>();
}

} // namespace qsi
