#include "qsi/flag.hpp"

#include "qsi/errors.hpp"
#include "qsi/rng.hpp"
#include "qsi/si.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace qsi {

FlagProblem make_flag_problem(int r, int ell, std::vector<Partition> lambdas) {
    if (r < 2) throw std::invalid_argument("rank must be at least 2");
    if (ell < 1) throw std::invalid_argument("column bound must be at least 1");
    if (lambdas.empty()) throw std::invalid_argument("at least one partition is required");
    for (const Partition& l : lambdas) {
        if (l.length() > r - 1)
            throw std::invalid_argument("partition has more than r-1 nonzero parts");
        if (l.first() > ell)
            throw std::invalid_argument("partition part exceeds the column bound");
    }
    return FlagProblem{r, ell, std::move(lambdas)};
}

bool codim_condition(const FlagProblem& fp) {
    long long total = 0;
    for (const Partition& l : fp.lambdas) total += l.size();
    return static_cast<long long>(fp.r) * fp.ell == total;
}

FlagQuiverSpec build_flag_quiver(const FlagProblem& fp) {
    if (!codim_condition(fp)) {
        long long total = 0;
        for (const Partition& l : fp.lambdas) total += l.size();
        throw CodimFailure("r*ell = " + std::to_string(static_cast<long long>(fp.r) * fp.ell) +
                           " but the partitions have total size " + std::to_string(total));
    }

    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    VertexMap alpha, beta, sigma;
    const std::string sink = "s";

    for (size_t p = 0; p < fp.lambdas.size(); ++p) {
        const Partition::ColumnData cd = fp.lambdas[p].column_data();
        const int c = static_cast<int>(cd.lengths.size());
        long long tail_sum = 0; // sum of counts from index i to the end
        for (int i = c - 1; i >= 0; --i) tail_sum += cd.counts[i];
        for (int i = 0; i < c; ++i) {
            const std::string name = "v" + std::to_string(p + 1) + "_" + std::to_string(i + 1);
            vertices.push_back(name);
            alpha[name] = cd.lengths[i];
            sigma[name] = cd.counts[i];
            beta[name] = fp.ell - tail_sum;
            if (beta[name] < 0)
                throw NonnegativityFailure("beta is negative at " + name);
            tail_sum -= cd.counts[i];
            const std::string next = i + 1 < c
                                         ? "v" + std::to_string(p + 1) + "_" + std::to_string(i + 2)
                                         : sink;
            arrows.push_back(Arrow{"e" + std::to_string(p + 1) + "_" + std::to_string(i + 1),
                                   name, next});
        }
    }
    vertices.push_back(sink);
    alpha[sink] = fp.r;
    beta[sink] = fp.ell;
    sigma[sink] = -fp.ell;

    Quiver quiver(std::move(vertices), std::move(arrows));
    if (ringel_form(quiver, alpha, beta) != 0)
        throw std::logic_error("flag quiver construction broke <alpha, beta> = 0");
    if (!(sigma_beta(quiver, beta) == sigma))
        throw std::logic_error("flag quiver construction broke the sigma_beta identity");
    return FlagQuiverSpec{std::move(quiver), std::move(alpha), std::move(beta), std::move(sigma)};
}

TranslationReport verify_translation(const FlagProblem& fp, int n) {
    if (n < 1) throw std::invalid_argument("stretch factor must be positive");
    const FlagQuiverSpec spec = build_flag_quiver(fp);
    TranslationReport report;
    report.quiver_dim = si_dim_cauchy(spec.quiver, spec.alpha, scale_map(spec.sigma, n));
    report.tensor_dim = stretched_invariant(fp.r, fp.lambdas, n);
    report.equal = report.quiver_dim == report.tensor_dim;
    return report;
}

namespace {

int subspace_dim(const ExactMatrix& m) {
    return rank(m);
}

int intersection_dim(const ExactMatrix& a, const ExactMatrix& b) {
    return rank(a) + rank(b) - rank(a.hstack(b));
}

} // namespace

bool flag_semistability_refute(const FlagProblem& fp, const std::vector<FlagChain>& flags,
                               const ExactMatrix& s) {
    if (flags.size() != fp.lambdas.size())
        throw ShapeMismatch("one flag chain per partition is required");
    if (s.rows() != fp.r) throw ShapeMismatch("subspace matrix must have r rows");

    long long lhs = 0;
    for (size_t p = 0; p < fp.lambdas.size(); ++p) {
        const Partition::ColumnData cd = fp.lambdas[p].column_data();
        const FlagChain& chain = flags[p];
        if (chain.size() != cd.lengths.size())
            throw ShapeMismatch("flag chain length does not match the partition's column data");
        for (size_t i = 0; i < chain.size(); ++i) {
            if (chain[i].rows() != fp.r)
                throw ShapeMismatch("flag subspace must have r rows");
            if (subspace_dim(chain[i]) != cd.lengths[i])
                throw ShapeMismatch("flag subspace has the wrong dimension");
            if (i + 1 < chain.size() &&
                intersection_dim(chain[i], chain[i + 1]) != cd.lengths[i])
                throw NotNested("flag subspaces are not nested");
            lhs += static_cast<long long>(cd.counts[i]) * intersection_dim(chain[i], s);
        }
    }
    return lhs <= static_cast<long long>(subspace_dim(s)) * fp.ell;
}

std::optional<ExactMatrix> search_refuting_subspace(const FlagProblem& fp,
                                                    const std::vector<FlagChain>& flags,
                                                    int trials, std::uint64_t seed) {
    // flag members themselves are natural candidates
    for (const FlagChain& chain : flags) {
        for (const ExactMatrix& f : chain) {
            if (!flag_semistability_refute(fp, flags, f)) return f;
        }
    }
    SplitMix64 g(seed);
    for (int t = 0; t < trials; ++t) {
        const int dim = 1 + static_cast<int>(g.below(static_cast<std::uint64_t>(fp.r)));
        ExactMatrix s(fp.r, dim);
        for (int i = 0; i < fp.r; ++i)
            for (int j = 0; j < dim; ++j) s.at(i, j) = g.in_range(-3, 3);
        if (!flag_semistability_refute(fp, flags, s)) return s;
    }
    return std::nullopt;
}

} // namespace qsi
