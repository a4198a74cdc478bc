#pragma once

#include "qsi/partition.hpp"
#include "qsi/quiver.hpp"

#include <cstdint>
#include <vector>

namespace qsi {

// Dimension of the sigma weight space of polynomial functions on
// Rep(Q, alpha), computed through the Cauchy decomposition of the
// coordinate ring: enumerate per-arrow partitions subject to the vertex
// balance equations, then multiply per-vertex determinant-power
// multiplicities obtained from iterated Littlewood-Richardson expansion.
// The sign convention makes a coordinate function of an arrow a carry
// weight +1 at ta and -1 at ha. Returns 0 when the balance system is
// infeasible (in particular whenever sigma(alpha) != 0).
long long si_dim_cauchy(const Quiver& q, const VertexMap& alpha, const VertexMap& sigma);

// Monte Carlo lower bound on dim SI(Q, alpha)_{sigma_beta}: the rank of
// the evaluation matrix [det d^{V_j}_{W_i}] over random V_j in
// Rep(Q, alpha) and W_i in Rep(Q, beta). The sample count starts at
// `samples` (or 8 if zero) and doubles until the rank is unchanged by two
// consecutive doublings. Requires <alpha, beta> = 0 so that d is square;
// throws NotOrthogonal otherwise. Equals the true dimension with high
// probability.
long long si_dim_eval_oracle(const Quiver& q, const VertexMap& alpha, const VertexMap& beta,
                             int samples, std::uint64_t seed);

struct StretchTable {
    VertexMap beta;
    std::vector<long long> values; // values[i] is the dimension at n = i + 1
    long long at(int n) const { return values.at(static_cast<size_t>(n) - 1); }
    int max_n() const { return static_cast<int>(values.size()); }
};

// values[n] = si_dim_cauchy(q, alpha, n * sigma_beta) for n = 1..N.
StretchTable stretch_function(const Quiver& q, const VertexMap& alpha, const VertexMap& beta,
                              int max_n);

struct StretchCrossCheck {
    StretchTable table;
    std::vector<long long> oracle_values;
    std::vector<bool> agree;
    bool all_agree = true;
};

// As stretch_function, but every value is recomputed independently by the
// evaluation oracle and compared.
StretchCrossCheck stretch_function_checked(const Quiver& q, const VertexMap& alpha,
                                           const VertexMap& beta, int max_n, std::uint64_t seed);

} // namespace qsi
