#pragma once

#include "qsi/quiver.hpp"
#include "qsi/si.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsi {

enum class StretchBehavior { polynomial_consistent, saturation, fulton, ktt };

std::string behavior_name(StretchBehavior b);

struct StretchVerdict {
    StretchBehavior behavior;
    bool holds = true;
    // the premise on the value at n = 1 failed, so there was nothing to check
    bool vacuous = false;
    // set when holds is false: the first n whose value breaks the prediction
    std::optional<int> counterexample_n;
    long long expected = 0;
    long long actual = 0;
    // forward-difference coefficients at n = 1 when consistent:
    // P(n) = sum_k coeffs[k] * binomial(n - 1, k)
    std::vector<long long> newton_coeffs;

    std::string details() const;
};

// Checks that all forward differences of order degree_bound + 1 vanish on
// the table; consistency with polynomiality on the computed window, not
// polynomiality itself. Needs degree_bound + 2 values (InsufficientData).
StretchVerdict check_polynomial_consistency(const StretchTable& table, int degree_bound);

// value(1) = 0 forces every value to be 0 (vacuous otherwise)
StretchVerdict check_saturation(const StretchTable& table);
// value(1) = 1 forces every value to be 1
StretchVerdict check_fulton(const StretchTable& table);
// value(1) = 2 forces value(n) = n + 1
StretchVerdict check_ktt(const StretchTable& table);

struct KttWitness {
    Quiver quiver;
    VertexMap alpha;
    VertexMap beta;
    StretchTable table;
    bool ktt_holds = true;      // a false value here is a critical finding
    bool oracle_agrees = true;  // evaluation oracle confirmed the n = 1 value
};

// Enumerates acyclic quivers up to vertex_bound vertices (at most two
// parallel arrows per ordered vertex pair), canonicalized up to vertex
// relabeling, and all (alpha, beta) with entries <= dim_bound and
// <alpha, beta> = 0; keeps the instances whose table starts at 2 and
// tabulates them up to max_n. The seed feeds the oracle cross-check of
// the n = 1 value.
std::vector<KttWitness> search_ktt_witnesses(int vertex_bound, int dim_bound, int max_n,
                                             std::uint64_t seed);

} // namespace qsi
