#pragma once

#include "qsi/matrix.hpp"
#include "qsi/partition.hpp"
#include "qsi/quiver.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qsi {

// Tuple of partitions cut out by a rank and a column bound. Each
// partition must have at most r-1 nonzero parts and no part exceeding
// ell.
struct FlagProblem {
    int r = 2;
    int ell = 1;
    std::vector<Partition> lambdas;
};

FlagProblem make_flag_problem(int r, int ell, std::vector<Partition> lambdas);

// r*ell equals the total size of the partitions
bool codim_condition(const FlagProblem& fp);

// Star quiver with one arm per partition feeding a sink of dimension r,
// together with the dimension vectors and weight that translate tensor
// invariants into quiver semi-invariants. Arm vertex i of arm p is named
// "v{p}_{i}", the sink "s". <alpha, beta> = 0 and sigma = sigma_beta are
// verified before returning.
struct FlagQuiverSpec {
    Quiver quiver;
    VertexMap alpha;
    VertexMap beta;
    VertexMap sigma;
};

FlagQuiverSpec build_flag_quiver(const FlagProblem& fp);

struct TranslationReport {
    long long quiver_dim = 0;
    long long tensor_dim = 0;
    bool equal = false;
};

// Compares dim SI(Q, alpha)_{n sigma_beta} on the flag quiver against the
// SL_r invariant dimension of the n-stretched tensor product.
TranslationReport verify_translation(const FlagProblem& fp, int n);

// One flag per partition: nested chains of subspaces of C^r given as
// integer matrices whose columns span, with the column counts matching
// the distinct column lengths of the partition.
using FlagChain = std::vector<ExactMatrix>;

// Evaluates the linearized semistability inequality
//   sum_p sum_i b(lambda^p)_i dim(F^p_i ∩ S) <= dim(S) * ell
// for one subspace S (given by spanning columns). Returns whether the
// inequality holds; a single failing S refutes semistability of the flag
// tuple, no single S certifies it.
bool flag_semistability_refute(const FlagProblem& fp, const std::vector<FlagChain>& flags,
                               const ExactMatrix& s);

// Randomized search for a subspace violating the inequality; tries the
// flag subspaces themselves and random ones of every dimension. Returns
// a violating S if found.
std::optional<ExactMatrix> search_refuting_subspace(const FlagProblem& fp,
                                                    const std::vector<FlagChain>& flags,
                                                    int trials, std::uint64_t seed);

} // namespace qsi
