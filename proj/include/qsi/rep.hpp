#pragma once

#include "qsi/matrix.hpp"
#include "qsi/quiver.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace qsi {

// Concrete representation: one integer matrix per arrow, of shape
// dim(head) x dim(tail). Matrices are stored in arrow declaration order.
struct Representation {
    Quiver quiver;
    VertexMap dim;
    std::vector<ExactMatrix> matrices;
};

Representation make_representation(Quiver q, VertexMap dim, std::vector<ExactMatrix> matrices);

// Morphism of representations; blocks are stored in vertex declaration
// order, block(x): dim_source(x) -> dim_target(x). The intertwining
// equations are validated at construction.
struct RepMorphism {
    Representation source;
    Representation target;
    std::vector<ExactMatrix> blocks;
};

RepMorphism make_morphism(Representation source, Representation target,
                          std::vector<ExactMatrix> blocks);

// Matrix of the map sending a tuple of vertex-wise linear maps {phi(x)} to
// {W(a) phi(tail a) - phi(head a) V(a)}. Columns run over vertices in
// topological order, entries of each block row-major; rows run over
// arrows in declaration order, row-major.
ExactMatrix build_d_matrix(const Representation& v, const Representation& w);

int hom_dim(const Representation& v, const Representation& w); // nullity of d
int ext_dim(const Representation& v, const Representation& w); // corank of d

std::vector<RepMorphism> hom_basis(const Representation& v, const Representation& w);

// Kernel subrepresentation of a morphism together with its rank vector
// gamma(x) = rank phi(x); dim of the kernel is dim(source) - gamma.
std::pair<Representation, VertexMap> kernel_representation(const RepMorphism& phi);

// Entries uniform in [-bound, bound], deterministic for a given seed.
Representation random_representation(const Quiver& q, const VertexMap& alpha,
                                     std::uint64_t seed, int bound = 10);

// Minimum of hom_dim over `trials` random pairs: a Monte Carlo upper
// bound on the generic Hom dimension, correct with high probability.
int generic_hom(const Quiver& q, const VertexMap& alpha, const VertexMap& beta,
                int trials, std::uint64_t seed);
// generic_hom - <alpha, beta>; the difference is exact for every pair.
int generic_ext(const Quiver& q, const VertexMap& alpha, const VertexMap& beta,
                int trials, std::uint64_t seed);

// All alpha' <= alpha (componentwise) with generic_ext(alpha', alpha -
// alpha') = 0; always contains 0 and alpha.
std::vector<VertexMap> generic_subdimensions(const Quiver& q, const VertexMap& alpha,
                                             int trials, std::uint64_t seed);

// Semistability of the generic representation against the weight sigma,
// interpreted through generic subrepresentation dimensions. Requires
// sigma(alpha) = 0 (throws WeightNotOrthogonal otherwise).
bool is_generically_semistable(const Quiver& q, const VertexMap& alpha, const VertexMap& sigma,
                               int trials, std::uint64_t seed);
bool is_generically_stable(const Quiver& q, const VertexMap& alpha, const VertexMap& sigma,
                           int trials, std::uint64_t seed);

struct ExtDescentReport {
    int hom_vw = 0;
    VertexMap gamma;       // observed generic rank vector of morphisms V -> W
    int ext_vw = 0;
    int ext_sw = 0;        // S = kernel of a sampled morphism of rank gamma
    bool equal = false;
    bool trivial = false;  // hom_vw = 0, so S = V and the comparison is vacuous
    bool generic_found = true; // a sampled morphism attained gamma at every vertex
};

// Samples V, W, determines the generic rank vector of morphisms V -> W by
// random combinations of a Hom basis, takes the kernel S of one such
// morphism, and compares ext(V, W) against ext(S, W).
ExtDescentReport check_ext_descent(const Quiver& q, const VertexMap& alpha,
                                   const VertexMap& beta, int trials, std::uint64_t seed);

} // namespace qsi
