#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace qsi {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense matrix over arbitrary-precision integers. All algebra on it is
// exact; there is no floating point anywhere in this library.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

    static ExactMatrix identity(int n);
    static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    // Clears denominators: scales every entry by the common denominator of
    // the whole matrix (the smallest positive one).
    static ExactMatrix from_rationals(int rows, int cols, const std::vector<Rat>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    bool operator==(const ExactMatrix& rhs) const = default;

    bool is_zero() const;
    // [this | rhs] side by side; row counts must match
    ExactMatrix hstack(const ExactMatrix& rhs) const;
    ExactMatrix column(int j) const;

private:
    int rows_;
    int cols_;
    std::vector<Int> entries_;
};

// Exact rank over the rationals (fraction-free elimination).
int rank(const ExactMatrix& m);

// Rank modulo a uniformly random prime in [2^61, 2^62). Always a lower
// bound on the rational rank; two independent primes must agree or both
// are redrawn, so the result equals the rational rank with overwhelming
// probability.
int rank_mod_prime(const ExactMatrix& m, std::uint64_t seed);

// Exact determinant via Bareiss fraction-free elimination. Throws
// NonSquare on a non-square input. det of the 0x0 matrix is 1.
Int determinant(const ExactMatrix& m);

// Basis of the right kernel over the rationals: column vectors with
// integer entries (denominators cleared, content divided out, first
// nonzero entry positive). Size = cols - rank. Deterministic.
std::vector<ExactMatrix> nullspace_basis(const ExactMatrix& m);

// Basis, as matrix columns, of the lattice ker(m) ∩ Z^cols (saturated:
// every integer vector of the rational kernel is an integer combination
// of these columns). Computed by unimodular column elimination.
ExactMatrix kernel_lattice(const ExactMatrix& m);

// Solves A X = B exactly for A of full column rank. Throws
// std::invalid_argument if the system is inconsistent or the solution is
// not integral.
ExactMatrix solve_exact(const ExactMatrix& a, const ExactMatrix& b);

} // namespace qsi
