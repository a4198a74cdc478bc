#pragma once

#include "qsi/matrix.hpp"

#include <compare>
#include <map>
#include <vector>

namespace qsi {

// Weakly decreasing tuple of positive integers. Trailing zeros are
// stripped at construction; the empty tuple is the zero partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long size() const;
    int first() const { return parts_.empty() ? 0 : parts_[0]; }
    // i-th part, 0-based, zero beyond the length
    int part(int i) const {
        return i < static_cast<int>(parts_.size()) ? parts_[i] : 0;
    }

    Partition conjugate() const;

    // distinct column lengths of the diagram, strictly increasing, with
    // the number of columns of each length
    struct ColumnData {
        std::vector<int> lengths;
        std::vector<int> counts;
    };
    ColumnData column_data() const;

    Partition stretched(int n) const;
    bool contains(const Partition& inner) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

using DecompositionTable = std::map<Partition, long long>;

// Number of semistandard skew tableaux of shape nu/lam and content mu
// whose reverse reading word is a lattice word. Zero on size mismatch or
// when lam is not contained in nu.
long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// Expansion of S_lam ⊗ S_mu into Schur functors with at most row_bound
// rows, by depth-first enumeration of horizontal-strip sequences.
// Memoized on (lam, mu, row_bound).
DecompositionTable schur_product(const Partition& lam, const Partition& mu, int row_bound);

// Left-to-right expansion of an ordered tensor product of Schur functors
// of C^r, pruning partitions with more than r rows. Throws TooManyRows if
// a factor itself has more than r rows.
DecompositionTable tensor_decompose(int r, const std::vector<Partition>& factors);

// dim S_lam(C^r) by the hook content formula; zero when lam has more than
// r rows.
Int schur_dimension(int r, const Partition& lam);

// Dimension of the SL_r-invariant subspace of the tensor product of the
// Schur functors S_{lambda^p}(C^r): the multiplicity of the rectangular
// partition with r rows. Zero when r does not divide the total size.
long long sl_invariant_dim(int r, const std::vector<Partition>& lambdas);

long long stretched_lr(const Partition& lam, const Partition& mu, const Partition& nu, int n);
long long stretched_invariant(int r, const std::vector<Partition>& lambdas, int n);

} // namespace qsi
