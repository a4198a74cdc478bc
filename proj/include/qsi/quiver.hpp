#pragma once

#include "qsi/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsi {

struct Arrow {
    std::string id;
    std::string tail;
    std::string head;
    bool operator==(const Arrow&) const = default;
};

// Finite acyclic multigraph. Acyclicity and arrow endpoints are validated
// once, at construction; everything downstream relies on that.
class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    // vertex names in an order where every arrow points forward
    const std::vector<std::string>& topo_order() const { return topo_; }

    int vertex_index(const std::string& name) const;
    int n_vertices() const { return static_cast<int>(vertices_.size()); }
    int n_arrows() const { return static_cast<int>(arrows_.size()); }

    bool operator==(const Quiver& rhs) const {
        return vertices_ == rhs.vertices_ && arrows_ == rhs.arrows_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::string> topo_;
    std::map<std::string, int> index_;
};

// Integer-valued function on the vertices of a quiver, keyed by vertex
// identifier. Dimension vectors and weights share this representation.
using VertexMap = std::map<std::string, Int>;

// Throws VertexMismatch unless fn is defined on exactly q's vertex set.
void check_vertex_map(const Quiver& q, const VertexMap& fn);
// Additionally requires every value to be nonnegative.
void check_dimension_vector(const Quiver& q, const VertexMap& fn);

// Re-runs the acyclicity check and returns a topological order. The Quiver
// constructor already enforces this; kept callable for direct use.
std::vector<std::string> validate_acyclic(const Quiver& q);

// <a,b> = sum_x a(x)b(x) - sum_arrows a(tail)b(head). Bilinear, generally
// not symmetric.
Int ringel_form(const Quiver& q, const VertexMap& a, const VertexMap& b);

// sigma_beta(x) = -beta(x) + sum over arrows a with tail x of beta(head a).
VertexMap sigma_beta(const Quiver& q, const VertexMap& beta);

// sum_x sigma(x) gamma(x); both maps must share one key set.
Int evaluate_weight(const VertexMap& sigma, const VertexMap& gamma);

VertexMap scale_map(const VertexMap& m, const Int& factor);
VertexMap add_maps(const VertexMap& a, const VertexMap& b);
VertexMap sub_maps(const VertexMap& a, const VertexMap& b);
VertexMap zero_map(const Quiver& q);
bool is_zero_map(const VertexMap& m);

long long to_ll(const Int& v);

} // namespace qsi
