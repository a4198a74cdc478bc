#include "qsi/si.hpp"

#include "qsi/errors.hpp"
#include "qsi/rep.hpp"
#include "qsi/rng.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <tuple>

namespace qsi {

namespace {

// complement of mu inside the mu_1 x n box, read backwards; the dual
// Schur functor S_mu(C^n)* is S_complement ⊗ det^{-mu_1}
Partition box_complement(const Partition& mu, int n) {
    if (mu.empty()) return Partition();
    std::vector<int> parts(n);
    for (int i = 0; i < n; ++i) parts[i] = mu.first() - mu.part(n - 1 - i);
    return Partition(std::move(parts));
}

// complement of mu inside the m x n rectangle, read backwards; requires
// mu to fit in the rectangle
Partition rect_complement(const Partition& mu, long long m, int n) {
    std::vector<int> parts(n);
    for (int i = 0; i < n; ++i) parts[i] = static_cast<int>(m) - mu.part(n - 1 - i);
    return Partition(std::move(parts));
}

// partitions of n with at most max_parts parts, cached
const std::vector<Partition>& partitions_with_at_most(long long n, int max_parts) {
    static std::map<std::pair<long long, int>, std::vector<Partition>> cache;
    static std::mutex mutex;
    const std::pair<long long, int> key{n, max_parts};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<Partition> result;
    std::vector<int> parts;
    std::function<void(long long, int)> gen = [&](long long rem, int max_part) {
        if (rem == 0) {
            result.emplace_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_parts) return;
        const long long slots = max_parts - static_cast<int>(parts.size());
        for (int p = static_cast<int>(std::min<long long>(max_part, rem)); p >= 1; --p) {
            if (static_cast<long long>(p) * slots < rem) break;
            parts.push_back(p);
            gen(rem - p, p);
            parts.pop_back();
        }
    };
    if (n == 0) {
        result.emplace_back();
    } else if (max_parts > 0) {
        gen(n, static_cast<int>(n));
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(result)).first->second;
}

// Multiplicity of det^m in the tensor product of the covariant Schur
// functors S_f(C^n), i.e. the coefficient of the rectangle (m^n). The
// last (largest) factor is peeled off through the complementary-shape
// rule for rectangles: c^{(m^n)}_{nu, f} = 1 exactly when f is the box
// complement of nu.
long long rect_multiplicity(std::vector<Partition> factors, long long m, int n) {
    if (n == 0) return 1; // GL_0: every character is trivial
    if (m < 0) return 0;
    long long total = 0;
    for (const Partition& f : factors) {
        if (f.length() > n) return 0;
        total += f.size();
    }
    if (total != m * n) return 0;
    if (m == 0) return 1; // total size 0 forces every factor empty
    std::sort(factors.begin(), factors.end(),
              [](const Partition& a, const Partition& b) { return a.size() < b.size(); });

    static std::map<std::tuple<std::vector<Partition>, long long, int>, long long> cache;
    static std::mutex mutex;
    const std::tuple<std::vector<Partition>, long long, int> key{factors, m, n};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const size_t k = factors.size();
    long long value = 0;
    const Partition& last = factors.back();
    if (last.first() > m) {
        value = 0; // last cannot fit inside the rectangle
    } else if (k == 1) {
        value = (last.first() == m && last.length() == n) ? 1 : 0;
    } else {
        const Partition target = rect_complement(last, m, n);
        if (k == 2) {
            value = (factors[0] == target) ? 1 : 0;
        } else {
            DecompositionTable folded{{Partition(), 1}};
            for (size_t i = 0; i + 2 < k; ++i) {
                DecompositionTable next;
                for (const auto& [shape, mult] : folded)
                    for (const auto& [res, c] : schur_product(shape, factors[i], n))
                        next[res] += mult * c;
                folded = std::move(next);
            }
            for (const auto& [shape, mult] : folded)
                value += mult * lr_coefficient(shape, factors[k - 2], target);
        }
    }

    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, value);
    return value;
}

} // namespace

long long si_dim_cauchy(const Quiver& q, const VertexMap& alpha, const VertexMap& sigma) {
    check_dimension_vector(q, alpha);
    check_vertex_map(q, sigma);
    if (evaluate_weight(sigma, alpha) != 0) return 0; // balance system infeasible

    const int na = q.n_arrows();
    const int nv = q.n_vertices();

    std::vector<std::vector<int>> in_arrows(nv), out_arrows(nv);
    std::vector<int> cap(na);
    for (int a = 0; a < na; ++a) {
        const Arrow& arrow = q.arrows()[a];
        in_arrows[q.vertex_index(arrow.head)].push_back(a);
        out_arrows[q.vertex_index(arrow.tail)].push_back(a);
        cap[a] = static_cast<int>(std::min(to_ll(alpha.at(arrow.tail)), to_ll(alpha.at(arrow.head))));
    }

    // every vertex's incident arrows are fixed after this arrow index
    std::vector<int> ready_at(nv, -1);
    for (int x = 0; x < nv; ++x) {
        for (int a : in_arrows[x]) ready_at[x] = std::max(ready_at[x], a);
        for (int a : out_arrows[x]) ready_at[x] = std::max(ready_at[x], a);
    }
    std::vector<std::vector<int>> ready_vertices(na);
    for (int x = 0; x < nv; ++x)
        if (ready_at[x] >= 0) ready_vertices[ready_at[x]].push_back(x);

    // 1: all nonnegative solutions of the balance system, walking vertices
    // in topological order (boundedness: a nonnegative circulation on an
    // acyclic graph is zero)
    std::vector<std::vector<long long>> size_tuples;
    std::vector<long long> sizes(na, 0);
    std::function<void(int)> assign_vertex = [&](int ti) {
        if (ti == nv) {
            size_tuples.push_back(sizes);
            return;
        }
        const std::string& name = q.topo_order()[ti];
        const int x = q.vertex_index(name);
        long long demand = to_ll(sigma.at(name) * alpha.at(name));
        for (int a : in_arrows[x]) demand += sizes[a];
        if (demand < 0) return;
        const auto& outs = out_arrows[x];
        if (outs.empty()) {
            if (demand == 0) assign_vertex(ti + 1);
            return;
        }
        std::function<void(size_t, long long)> distribute = [&](size_t k, long long rem) {
            if (k + 1 == outs.size()) {
                if (cap[outs[k]] == 0 && rem > 0) return;
                sizes[outs[k]] = rem;
                assign_vertex(ti + 1);
                sizes[outs[k]] = 0;
                return;
            }
            const long long hi = cap[outs[k]] == 0 ? 0 : rem;
            for (long long v = 0; v <= hi; ++v) {
                sizes[outs[k]] = v;
                distribute(k + 1, rem - v);
            }
            sizes[outs[k]] = 0;
        };
        distribute(0, demand);
    };
    assign_vertex(0);

    // 2: for each size tuple, choose partition shapes arrow by arrow; a
    // vertex is scored as soon as its incident shapes are all fixed, so
    // zero factors prune early
    auto vertex_factor = [&](int x, const std::vector<Partition>& chosen) -> long long {
        const std::string& name = q.vertices()[x];
        const int n = static_cast<int>(to_ll(alpha.at(name)));
        std::vector<Partition> factors;
        long long m = to_ll(sigma.at(name));
        for (int a : out_arrows[x]) factors.push_back(chosen[a]);
        for (int a : in_arrows[x]) {
            factors.push_back(box_complement(chosen[a], n));
            m += chosen[a].first();
        }
        return rect_multiplicity(std::move(factors), m, n);
    };

    long long total = 0;
    for (const auto& tuple : size_tuples) {
        std::vector<const std::vector<Partition>*> choices(na);
        bool feasible = true;
        for (int a = 0; a < na && feasible; ++a) {
            choices[a] = &partitions_with_at_most(tuple[a], cap[a]);
            if (choices[a]->empty()) feasible = false;
        }
        if (!feasible) continue;
        std::vector<Partition> chosen(na);
        std::function<void(int, long long)> pick = [&](int ai, long long product) {
            if (ai == na) {
                total += product;
                return;
            }
            for (const Partition& p : *choices[ai]) {
                chosen[ai] = p;
                long long factor = product;
                for (int x : ready_vertices[ai]) {
                    factor *= vertex_factor(x, chosen);
                    if (factor == 0) break;
                }
                if (factor != 0) pick(ai + 1, factor);
            }
        };
        pick(0, 1);
    }
    return total;
}

long long si_dim_eval_oracle(const Quiver& q, const VertexMap& alpha, const VertexMap& beta,
                             int samples, std::uint64_t seed) {
    check_dimension_vector(q, alpha);
    check_dimension_vector(q, beta);
    const Int pairing = ringel_form(q, alpha, beta);
    if (pairing != 0)
        throw NotOrthogonal("<alpha, beta> = " + pairing.str() + ", evaluation matrix is not square");

    std::vector<Representation> vs, ws;
    std::vector<std::vector<Int>> dets; // dets[i][j] = det d^{V_j}_{W_i}
    auto grow_to = [&](int m) {
        while (static_cast<int>(vs.size()) < m) {
            const std::uint64_t idx = vs.size();
            vs.push_back(random_representation(q, alpha, mix_seed(seed, 2 * idx)));
            ws.push_back(random_representation(q, beta, mix_seed(seed, 2 * idx + 1)));
        }
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(dets.size()) == i) dets.emplace_back();
            for (int j = static_cast<int>(dets[i].size()); j < m; ++j)
                dets[i].push_back(determinant(build_d_matrix(vs[j], ws[i])));
        }
    };
    auto rank_of = [&](int m) {
        ExactMatrix e(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) e.at(i, j) = dets[i][j];
        return rank(e);
    };

    int m = samples > 0 ? samples : 8;
    grow_to(m);
    long long r = rank_of(m);
    int stable = 0;
    while (stable < 2 && m < 512) {
        m *= 2;
        grow_to(m);
        const long long next = rank_of(m);
        stable = (next == r) ? stable + 1 : 0;
        r = next;
    }
    return r;
}

StretchTable stretch_function(const Quiver& q, const VertexMap& alpha, const VertexMap& beta,
                              int max_n) {
    if (max_n < 1) throw std::invalid_argument("stretch bound must be positive");
    check_dimension_vector(q, beta);
    const Int pairing = ringel_form(q, alpha, beta);
    if (pairing != 0)
        throw NotOrthogonal("<alpha, beta> = " + pairing.str() + ", stretch table undefined");
    const VertexMap sigma = sigma_beta(q, beta);
    StretchTable table;
    table.beta = beta;
    table.values.reserve(max_n);
    for (int n = 1; n <= max_n; ++n)
        table.values.push_back(si_dim_cauchy(q, alpha, scale_map(sigma, n)));
    return table;
}

StretchCrossCheck stretch_function_checked(const Quiver& q, const VertexMap& alpha,
                                           const VertexMap& beta, int max_n, std::uint64_t seed) {
    StretchCrossCheck result;
    result.table = stretch_function(q, alpha, beta, max_n);
    for (int n = 1; n <= max_n; ++n) {
        const long long oracle =
            si_dim_eval_oracle(q, alpha, scale_map(beta, n), 0, mix_seed(seed, n));
        result.oracle_values.push_back(oracle);
        const bool ok = (oracle == result.table.at(n));
        result.agree.push_back(ok);
        result.all_agree = result.all_agree && ok;
    }
    return result;
}

} // namespace qsi
