#include "qsi/rep.hpp"

#include "qsi/errors.hpp"
#include "qsi/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsi {

namespace {

int dim_at(const VertexMap& m, const std::string& v) {
    return static_cast<int>(to_ll(m.at(v)));
}

void check_same_quiver(const Representation& v, const Representation& w) {
    if (!(v.quiver == w.quiver))
        throw QuiverMismatch("representations live over different quivers");
}

bool intertwines(const Representation& v, const Representation& w,
                 const std::vector<ExactMatrix>& blocks) {
    const Quiver& q = v.quiver;
    for (int a = 0; a < q.n_arrows(); ++a) {
        const Arrow& arrow = q.arrows()[a];
        const int ti = q.vertex_index(arrow.tail);
        const int hi = q.vertex_index(arrow.head);
        const ExactMatrix lhs = w.matrices[a] * blocks[ti];
        const ExactMatrix rhs = blocks[hi] * v.matrices[a];
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace

Representation make_representation(Quiver q, VertexMap dim, std::vector<ExactMatrix> matrices) {
    check_dimension_vector(q, dim);
    if (matrices.size() != static_cast<size_t>(q.n_arrows()))
        throw std::invalid_argument("wrong number of arrow matrices");
    for (int a = 0; a < q.n_arrows(); ++a) {
        const Arrow& arrow = q.arrows()[a];
        if (matrices[a].rows() != dim_at(dim, arrow.head) ||
            matrices[a].cols() != dim_at(dim, arrow.tail))
            throw std::invalid_argument("arrow matrix " + arrow.id + " has the wrong shape");
    }
    return Representation{std::move(q), std::move(dim), std::move(matrices)};
}

RepMorphism make_morphism(Representation source, Representation target,
                          std::vector<ExactMatrix> blocks) {
    check_same_quiver(source, target);
    const Quiver& q = source.quiver;
    if (blocks.size() != static_cast<size_t>(q.n_vertices()))
        throw std::invalid_argument("wrong number of morphism blocks");
    for (int x = 0; x < q.n_vertices(); ++x) {
        const std::string& name = q.vertices()[x];
        if (blocks[x].rows() != dim_at(target.dim, name) ||
            blocks[x].cols() != dim_at(source.dim, name))
            throw std::invalid_argument("morphism block at " + name + " has the wrong shape");
    }
    if (!intertwines(source, target, blocks))
        throw IntertwiningViolation("blocks do not commute with the arrow matrices");
    return RepMorphism{std::move(source), std::move(target), std::move(blocks)};
}

ExactMatrix build_d_matrix(const Representation& v, const Representation& w) {
    check_same_quiver(v, w);
    const Quiver& q = v.quiver;

    // column offset of each vertex block, in topological order
    std::map<std::string, int> col_base;
    int cols = 0;
    for (const std::string& x : q.topo_order()) {
        col_base[x] = cols;
        cols += dim_at(v.dim, x) * dim_at(w.dim, x);
    }
    int rows = 0;
    for (const Arrow& a : q.arrows()) rows += dim_at(v.dim, a.tail) * dim_at(w.dim, a.head);

    ExactMatrix d(rows, cols);
    int row_base = 0;
    for (int ai = 0; ai < q.n_arrows(); ++ai) {
        const Arrow& a = q.arrows()[ai];
        const int at = dim_at(v.dim, a.tail);  // alpha(tail)
        const int ah = dim_at(v.dim, a.head);  // alpha(head)
        const int bt = dim_at(w.dim, a.tail);  // beta(tail)
        const int bh = dim_at(w.dim, a.head);  // beta(head)
        const ExactMatrix& wa = w.matrices[ai];
        const ExactMatrix& va = v.matrices[ai];
        for (int p = 0; p < bh; ++p) {
            for (int qcol = 0; qcol < at; ++qcol) {
                const int row = row_base + p * at + qcol;
                // + W(a)[p][k] phi(tail)[k][qcol]
                for (int k = 0; k < bt; ++k)
                    d.at(row, col_base[a.tail] + k * at + qcol) += wa.at(p, k);
                // - phi(head)[p][k] V(a)[k][qcol]
                for (int k = 0; k < ah; ++k)
                    d.at(row, col_base[a.head] + p * ah + k) -= va.at(k, qcol);
            }
        }
        row_base += at * bh;
    }
    return d;
}

int hom_dim(const Representation& v, const Representation& w) {
    const ExactMatrix d = build_d_matrix(v, w);
    return d.cols() - rank(d);
}

int ext_dim(const Representation& v, const Representation& w) {
    const ExactMatrix d = build_d_matrix(v, w);
    return d.rows() - rank(d);
}

std::vector<RepMorphism> hom_basis(const Representation& v, const Representation& w) {
    const Quiver& q = v.quiver;
    const ExactMatrix d = build_d_matrix(v, w);
    std::vector<RepMorphism> basis;
    for (const ExactMatrix& vec : nullspace_basis(d)) {
        std::vector<ExactMatrix> blocks(q.n_vertices());
        int offset = 0;
        for (const std::string& x : q.topo_order()) {
            const int a = dim_at(v.dim, x), b = dim_at(w.dim, x);
            ExactMatrix block(b, a);
            for (int i = 0; i < b; ++i)
                for (int j = 0; j < a; ++j) block.at(i, j) = vec.at(offset + i * a + j, 0);
            blocks[q.vertex_index(x)] = std::move(block);
            offset += a * b;
        }
        basis.push_back(make_morphism(v, w, std::move(blocks)));
    }
    return basis;
}

std::pair<Representation, VertexMap> kernel_representation(const RepMorphism& phi) {
    const Quiver& q = phi.source.quiver;
    if (!intertwines(phi.source, phi.target, phi.blocks))
        throw IntertwiningViolation("morphism blocks do not commute with the arrow matrices");

    std::vector<ExactMatrix> kernels(q.n_vertices());
    VertexMap sdim, gamma;
    for (int x = 0; x < q.n_vertices(); ++x) {
        kernels[x] = kernel_lattice(phi.blocks[x]);
        const std::string& name = q.vertices()[x];
        sdim[name] = kernels[x].cols();
        gamma[name] = phi.source.dim.at(name) - kernels[x].cols();
    }
    std::vector<ExactMatrix> mats;
    mats.reserve(q.n_arrows());
    for (int a = 0; a < q.n_arrows(); ++a) {
        const Arrow& arrow = q.arrows()[a];
        const int ti = q.vertex_index(arrow.tail);
        const int hi = q.vertex_index(arrow.head);
        // V(a) maps ker phi(tail) into ker phi(head); express in the
        // kernel bases (integral because the bases are saturated lattices)
        mats.push_back(solve_exact(kernels[hi], phi.source.matrices[a] * kernels[ti]));
    }
    return {make_representation(q, std::move(sdim), std::move(mats)), std::move(gamma)};
}

Representation random_representation(const Quiver& q, const VertexMap& alpha,
                                     std::uint64_t seed, int bound) {
    check_dimension_vector(q, alpha);
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    SplitMix64 g(seed);
    std::vector<ExactMatrix> mats;
    mats.reserve(q.n_arrows());
    for (const Arrow& a : q.arrows()) {
        const int rows = dim_at(alpha, a.head), cols = dim_at(alpha, a.tail);
        ExactMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = g.in_range(-bound, bound);
        mats.push_back(std::move(m));
    }
    return make_representation(q, alpha, std::move(mats));
}

int generic_hom(const Quiver& q, const VertexMap& alpha, const VertexMap& beta,
                int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    int best = -1;
    for (int t = 0; t < trials; ++t) {
        const Representation v = random_representation(q, alpha, mix_seed(seed, 2 * t));
        const Representation w = random_representation(q, beta, mix_seed(seed, 2 * t + 1));
        const int h = hom_dim(v, w);
        if (best < 0 || h < best) best = h;
        if (best == std::max<long long>(0LL, to_ll(ringel_form(q, alpha, beta))))
            break; // cannot go lower
    }
    return best;
}

int generic_ext(const Quiver& q, const VertexMap& alpha, const VertexMap& beta,
                int trials, std::uint64_t seed) {
    return generic_hom(q, alpha, beta, trials, seed) -
           static_cast<int>(to_ll(ringel_form(q, alpha, beta)));
}

std::vector<VertexMap> generic_subdimensions(const Quiver& q, const VertexMap& alpha,
                                             int trials, std::uint64_t seed) {
    check_dimension_vector(q, alpha);
    const auto& verts = q.vertices();
    std::vector<VertexMap> result;
    VertexMap current;
    for (const std::string& v : verts) current[v] = 0;
    std::uint64_t counter = 0;
    for (;;) {
        const bool is_zero = is_zero_map(current);
        const bool is_full = current == alpha;
        if (is_zero || is_full) {
            result.push_back(current);
        } else {
            const VertexMap rest = sub_maps(alpha, current);
            if (generic_ext(q, current, rest, trials, mix_seed(seed, counter)) == 0)
                result.push_back(current);
        }
        ++counter;
        // odometer over 0..alpha(x) per vertex, declaration order
        size_t i = 0;
        for (; i < verts.size(); ++i) {
            if (current[verts[i]] < alpha.at(verts[i])) {
                ++current[verts[i]];
                break;
            }
            current[verts[i]] = 0;
        }
        if (i == verts.size()) break;
    }
    return result;
}

bool is_generically_semistable(const Quiver& q, const VertexMap& alpha, const VertexMap& sigma,
                               int trials, std::uint64_t seed) {
    check_vertex_map(q, sigma);
    if (evaluate_weight(sigma, alpha) != 0)
        throw WeightNotOrthogonal("sigma(alpha) must vanish");
    for (const VertexMap& sub : generic_subdimensions(q, alpha, trials, seed)) {
        if (is_zero_map(sub)) continue;
        if (evaluate_weight(sigma, sub) > 0) return false;
    }
    return true;
}

bool is_generically_stable(const Quiver& q, const VertexMap& alpha, const VertexMap& sigma,
                           int trials, std::uint64_t seed) {
    check_vertex_map(q, sigma);
    if (evaluate_weight(sigma, alpha) != 0)
        throw WeightNotOrthogonal("sigma(alpha) must vanish");
    for (const VertexMap& sub : generic_subdimensions(q, alpha, trials, seed)) {
        if (is_zero_map(sub) || sub == alpha) continue;
        if (evaluate_weight(sigma, sub) >= 0) return false;
    }
    return true;
}

ExtDescentReport check_ext_descent(const Quiver& q, const VertexMap& alpha,
                                   const VertexMap& beta, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    const Representation v = random_representation(q, alpha, mix_seed(seed, 0));
    const Representation w = random_representation(q, beta, mix_seed(seed, 1));

    ExtDescentReport report;
    report.hom_vw = hom_dim(v, w);
    report.ext_vw = ext_dim(v, w);
    report.gamma = zero_map(q);
    if (report.hom_vw == 0) {
        report.trivial = true;
        report.ext_sw = report.ext_vw;
        report.equal = true;
        return report;
    }

    const std::vector<RepMorphism> basis = hom_basis(v, w);
    std::vector<std::vector<ExactMatrix>> samples;
    std::vector<VertexMap> rank_vectors;
    VertexMap best = zero_map(q);
    for (int t = 0; t < trials; ++t) {
        SplitMix64 g(mix_seed(seed, 2 + static_cast<std::uint64_t>(t)));
        std::vector<ExactMatrix> blocks;
        blocks.reserve(q.n_vertices());
        for (int x = 0; x < q.n_vertices(); ++x) {
            const std::string& name = q.vertices()[x];
            blocks.emplace_back(dim_at(beta, name), dim_at(alpha, name));
        }
        for (const RepMorphism& b : basis) {
            const long long c = g.in_range(-10, 10);
            if (c == 0) continue;
            for (int x = 0; x < q.n_vertices(); ++x)
                for (int i = 0; i < blocks[x].rows(); ++i)
                    for (int j = 0; j < blocks[x].cols(); ++j)
                        blocks[x].at(i, j) += c * b.blocks[x].at(i, j);
        }
        VertexMap rv;
        for (int x = 0; x < q.n_vertices(); ++x) rv[q.vertices()[x]] = rank(blocks[x]);
        for (const auto& [name, r] : rv)
            if (r > best[name]) best[name] = r;
        samples.push_back(std::move(blocks));
        rank_vectors.push_back(std::move(rv));
    }

    int chosen = -1;
    for (size_t t = 0; t < rank_vectors.size(); ++t) {
        if (rank_vectors[t] == best) {
            chosen = static_cast<int>(t);
            break;
        }
    }
    if (chosen < 0) {
        // no sample attained the componentwise maximum; fall back to the
        // largest total rank and report the miss
        report.generic_found = false;
        long long best_total = -1;
        for (size_t t = 0; t < rank_vectors.size(); ++t) {
            long long total = 0;
            for (const auto& [name, r] : rank_vectors[t]) total += to_ll(r);
            if (total > best_total) {
                best_total = total;
                chosen = static_cast<int>(t);
            }
        }
        best = rank_vectors[chosen];
    }
    report.gamma = best;

    const RepMorphism phi = make_morphism(v, w, samples[chosen]);
    const auto [s, gamma] = kernel_representation(phi);
    report.ext_sw = ext_dim(s, w);
    report.equal = (report.ext_sw == report.ext_vw);
    return report;
}

} // namespace qsi
