#include "qsi/conjectures.hpp"

#include "qsi/errors.hpp"
#include "qsi/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qsi {

std::string behavior_name(StretchBehavior b) {
    switch (b) {
        case StretchBehavior::polynomial_consistent: return "polynomial-consistent";
        case StretchBehavior::saturation: return "saturation";
        case StretchBehavior::fulton: return "fulton";
        case StretchBehavior::ktt: return "ktt";
    }
    return "?";
}

std::string StretchVerdict::details() const {
    std::ostringstream out;
    out << behavior_name(behavior) << ": ";
    if (!holds) {
        out << "fails at n=" << *counterexample_n << " (expected " << expected << ", got "
            << actual << ")";
        return out.str();
    }
    if (vacuous) {
        out << "holds vacuously (premise on the n=1 value fails)";
        return out.str();
    }
    out << "holds";
    if (!newton_coeffs.empty()) {
        out << "; P(n) = ";
        for (size_t k = 0; k < newton_coeffs.size(); ++k) {
            if (k) out << " + ";
            out << newton_coeffs[k];
            if (k >= 1) out << "*C(n-1," << k << ")";
        }
    }
    return out.str();
}

StretchVerdict check_polynomial_consistency(const StretchTable& table, int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
    StretchVerdict verdict{StretchBehavior::polynomial_consistent};
    const int n = table.max_n();
    if (n < degree_bound + 2)
        throw InsufficientData("need at least degree_bound + 2 values, have " +
                               std::to_string(n));

    std::vector<long long> diffs(table.values.begin(), table.values.end());
    for (int k = 0; k < degree_bound; ++k) {
        verdict.newton_coeffs.push_back(diffs[0]);
        for (size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
        diffs.pop_back();
    }
    verdict.newton_coeffs.push_back(diffs[0]);

    // diffs now holds the order-degree_bound differences; one more step
    // must vanish everywhere
    for (size_t i = 0; i + 1 < diffs.size(); ++i) {
        const long long step = diffs[i + 1] - diffs[i];
        if (step != 0) {
            verdict.holds = false;
            verdict.counterexample_n = static_cast<int>(i) + degree_bound + 2;
            verdict.actual = table.at(*verdict.counterexample_n);
            verdict.expected = verdict.actual - step;
            verdict.newton_coeffs.clear();
            break;
        }
    }
    return verdict;
}

namespace {

StretchVerdict check_forced(StretchBehavior behavior, const StretchTable& table,
                            long long premise, long long (*predicted)(int)) {
    if (table.values.empty()) throw std::invalid_argument("stretch table is empty");
    StretchVerdict verdict{behavior};
    if (table.at(1) != premise) {
        verdict.vacuous = true;
        return verdict;
    }
    for (int n = 1; n <= table.max_n(); ++n) {
        if (table.at(n) != predicted(n)) {
            verdict.holds = false;
            verdict.counterexample_n = n;
            verdict.expected = predicted(n);
            verdict.actual = table.at(n);
            break;
        }
    }
    return verdict;
}

} // namespace

StretchVerdict check_saturation(const StretchTable& table) {
    return check_forced(StretchBehavior::saturation, table, 0, [](int) -> long long { return 0; });
}

StretchVerdict check_fulton(const StretchTable& table) {
    return check_forced(StretchBehavior::fulton, table, 1, [](int) -> long long { return 1; });
}

StretchVerdict check_ktt(const StretchTable& table) {
    return check_forced(StretchBehavior::ktt, table, 2,
                        [](int n) -> long long { return n + 1; });
}

namespace {

using ArrowCode = std::vector<std::pair<int, int>>; // (tail, head) with repeats, sorted

// lexicographically smallest relabeling of the arrow multiset, optionally
// carrying vertex data along
struct InstanceCode {
    ArrowCode arrows;
    std::vector<long long> alpha;
    std::vector<long long> beta;
    auto operator<=>(const InstanceCode&) const = default;
};

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return all;
}

ArrowCode relabel(const ArrowCode& arrows, const std::vector<int>& perm) {
    ArrowCode out;
    out.reserve(arrows.size());
    for (const auto& [t, h] : arrows) out.emplace_back(perm[t], perm[h]);
    std::sort(out.begin(), out.end());
    return out;
}

ArrowCode canonical_arrows(const ArrowCode& arrows, int nv) {
    ArrowCode best;
    bool first = true;
    for (const auto& perm : permutations_of(nv)) {
        ArrowCode candidate = relabel(arrows, perm);
        if (first || candidate < best) {
            best = std::move(candidate);
            first = false;
        }
    }
    return best;
}

InstanceCode canonical_instance(const ArrowCode& arrows, int nv, const std::vector<long long>& a,
                                const std::vector<long long>& b) {
    InstanceCode best;
    bool first = true;
    for (const auto& perm : permutations_of(nv)) {
        InstanceCode candidate;
        candidate.arrows = relabel(arrows, perm);
        candidate.alpha.resize(nv);
        candidate.beta.resize(nv);
        for (int v = 0; v < nv; ++v) {
            candidate.alpha[perm[v]] = a[v];
            candidate.beta[perm[v]] = b[v];
        }
        if (first || candidate < best) {
            best = std::move(candidate);
            first = false;
        }
    }
    return best;
}

Quiver realize(const ArrowCode& arrows, int nv) {
    std::vector<std::string> vertices;
    for (int v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v + 1));
    std::vector<Arrow> as;
    for (size_t i = 0; i < arrows.size(); ++i) {
        as.push_back(Arrow{"a" + std::to_string(i + 1), vertices[arrows[i].first],
                           vertices[arrows[i].second]});
    }
    return Quiver(std::move(vertices), std::move(as));
}

} // namespace

std::vector<KttWitness> search_ktt_witnesses(int vertex_bound, int dim_bound, int max_n,
                                             std::uint64_t seed) {
    if (vertex_bound < 1 || dim_bound < 1 || max_n < 1)
        throw std::invalid_argument("search bounds must be positive");

    std::vector<KttWitness> witnesses;
    std::set<InstanceCode> seen_instances;
    std::uint64_t oracle_stream = 0;

    for (int nv = 1; nv <= vertex_bound; ++nv) {
        // forward arrow multiplicities (0..2) on each ordered pair i < j;
        // every acyclic quiver is isomorphic to one of these
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j) pairs.emplace_back(i, j);
        std::vector<int> mult(pairs.size(), 0);

        std::set<ArrowCode> seen_quivers;
        for (;;) {
            ArrowCode arrows;
            for (size_t k = 0; k < pairs.size(); ++k)
                for (int c = 0; c < mult[k]; ++c) arrows.push_back(pairs[k]);

            if (seen_quivers.insert(canonical_arrows(arrows, nv)).second) {
                const Quiver q = realize(arrows, nv);
                // all dimension vector pairs with entries <= dim_bound
                std::vector<long long> a(nv, 0), b(nv, 0);
                for (;;) {
                    for (;;) {
                        VertexMap alpha, beta;
                        for (int v = 0; v < nv; ++v) {
                            alpha["v" + std::to_string(v + 1)] = a[v];
                            beta["v" + std::to_string(v + 1)] = b[v];
                        }
                        if (ringel_form(q, alpha, beta) == 0 &&
                            si_dim_cauchy(q, alpha, sigma_beta(q, beta)) == 2 &&
                            seen_instances.insert(canonical_instance(arrows, nv, a, b)).second) {
                            KttWitness w{q, alpha, beta,
                                         stretch_function(q, alpha, beta, max_n)};
                            w.ktt_holds = check_ktt(w.table).holds;
                            w.oracle_agrees =
                                si_dim_eval_oracle(q, alpha, beta, 0,
                                                   mix_seed(seed, oracle_stream++)) ==
                                w.table.at(1);
                            witnesses.push_back(std::move(w));
                        }
                        int i = 0;
                        while (i < nv && b[i] == dim_bound) b[i++] = 0;
                        if (i == nv) break;
                        ++b[i];
                    }
                    int i = 0;
                    while (i < nv && a[i] == dim_bound) a[i++] = 0;
                    if (i == nv) break;
                    ++a[i];
                }
            }

            size_t k = 0;
            while (k < mult.size() && mult[k] == 2) mult[k++] = 0;
            if (k == mult.size()) break;
            ++mult[k];
        }
    }
    return witnesses;
}

} // namespace qsi
