#include "qsi/matrix.hpp"

#include "qsi/errors.hpp"
#include "qsi/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qsi {

namespace {

Int exact_div(const Int& num, const Int& den) {
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("exact division failed in fraction-free elimination");
    return q;
}

// iterative extended gcd, g = ax + by with g >= 0
Int egcd(Int a, Int b, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q, r;
        boost::multiprecision::divide_qr(a, b, q, r);
        a = b;
        b = r;
        Int nx = x0 - q * x1, ny = y0 - q * y1;
        x0 = x1;
        y0 = y1;
        x1 = nx;
        y1 = ny;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

// in-place reduced row echelon form over the rationals; returns pivot columns
std::vector<int> rref(std::vector<Rat>& a, int rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (a[static_cast<size_t>(i) * cols + c] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = 0; j < cols; ++j)
                std::swap(a[static_cast<size_t>(pr) * cols + j], a[static_cast<size_t>(r) * cols + j]);
        }
        const Rat piv = a[static_cast<size_t>(r) * cols + c];
        for (int j = c; j < cols; ++j) a[static_cast<size_t>(r) * cols + j] /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rat f = a[static_cast<size_t>(i) * cols + c];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j)
                a[static_cast<size_t>(i) * cols + j] -= f * a[static_cast<size_t>(r) * cols + j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

// deterministic Miller-Rabin, valid for all n < 2^64
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t random_prime_61_62(SplitMix64& g) {
    for (;;) {
        std::uint64_t cand = (1ULL << 61) | g.below(1ULL << 61) | 1ULL;
        if (is_prime_u64(cand)) return cand;
    }
}

int rank_modp(const ExactMatrix& m, std::uint64_t p) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> a(static_cast<size_t>(rows) * cols);
    const Int P = p;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            Int r = m.at(i, j) % P;
            if (r < 0) r += P;
            a[static_cast<size_t>(i) * cols + j] = r.convert_to<std::uint64_t>();
        }
    }
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (a[static_cast<size_t>(i) * cols + c] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = c; j < cols; ++j)
                std::swap(a[static_cast<size_t>(pr) * cols + j], a[static_cast<size_t>(r) * cols + j]);
        }
        const std::uint64_t inv = powmod_u64(a[static_cast<size_t>(r) * cols + c], p - 2, p);
        for (int i = r + 1; i < rows; ++i) {
            const std::uint64_t lead = a[static_cast<size_t>(i) * cols + c];
            if (lead == 0) continue;
            const std::uint64_t f = mulmod_u64(lead, inv, p);
            for (int j = c; j < cols; ++j) {
                const std::uint64_t sub = mulmod_u64(f, a[static_cast<size_t>(r) * cols + j], p);
                std::uint64_t& e = a[static_cast<size_t>(i) * cols + j];
                e = (e >= sub) ? e - sub : e + p - sub;
            }
        }
        ++r;
    }
    return r;
}

} // namespace

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    const int nr = static_cast<int>(rows.size());
    const int nc = nr == 0 ? 0 : static_cast<int>(rows.begin()->size());
    ExactMatrix m(nr, nc);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != nc)
            throw std::invalid_argument("ragged initializer for ExactMatrix");
        int j = 0;
        for (long long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

ExactMatrix ExactMatrix::from_rationals(int rows, int cols, const std::vector<Rat>& entries) {
    if (entries.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match shape");
    Int common = 1;
    for (const Rat& q : entries)
        common = boost::multiprecision::lcm(common, Int(boost::multiprecision::denominator(q)));
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const Rat& q = entries[static_cast<size_t>(i) * cols + j];
            m.at(i, j) = boost::multiprecision::numerator(q) *
                         exact_div(common, boost::multiprecision::denominator(q));
        }
    }
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("shape mismatch in matrix product");
    ExactMatrix p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) p.at(i, j) += v * rhs.at(k, j);
        }
    }
    return p;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("shape mismatch in matrix difference");
    ExactMatrix d(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) d.entries_[k] = entries_[k] - rhs.entries_[k];
    return d;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& v) { return v == 0; });
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("row mismatch in hstack");
    ExactMatrix m(rows_, cols_ + rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < rhs.cols_; ++j) m.at(i, cols_ + j) = rhs.at(i, j);
    }
    return m;
}

ExactMatrix ExactMatrix::column(int j) const {
    ExactMatrix c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
}

int rank(const ExactMatrix& m) {
    ExactMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (a.at(i, c) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = c; j < cols; ++j) std::swap(a.at(pr, j), a.at(r, j));
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a.at(i, j) = exact_div(a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j), prev);
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        ++r;
    }
    return r;
}

int rank_mod_prime(const ExactMatrix& m, std::uint64_t seed) {
    SplitMix64 g(seed);
    int best = 0;
    for (int round = 0; round < 8; ++round) {
        const std::uint64_t p1 = random_prime_61_62(g);
        const std::uint64_t p2 = random_prime_61_62(g);
        const int r1 = rank_modp(m, p1);
        const int r2 = rank_modp(m, p2);
        best = std::max({best, r1, r2});
        if (r1 == r2) return best;
    }
    return best;
}

Int determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    ExactMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pr = -1;
        for (int i = k; i < n; ++i) {
            if (a.at(i, k) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) return 0;
        if (pr != k) {
            for (int j = k; j < n; ++j) std::swap(a.at(pr, j), a.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::vector<ExactMatrix> nullspace_basis(const ExactMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<Rat> a(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<size_t>(i) * cols + j] = Rat(m.at(i, j));
    const std::vector<int> pivots = rref(a, rows, cols);

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<ExactMatrix> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[f] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            x[pivots[k]] = -a[k * cols + f];
        Int denom = 1;
        for (const Rat& q : x)
            denom = boost::multiprecision::lcm(denom, Int(boost::multiprecision::denominator(q)));
        std::vector<Int> v(cols);
        Int content = 0;
        for (int i = 0; i < cols; ++i) {
            v[i] = boost::multiprecision::numerator(x[i]) *
                   exact_div(denom, boost::multiprecision::denominator(x[i]));
            content = boost::multiprecision::gcd(content, v[i]);
        }
        if (content > 1)
            for (Int& e : v) e = exact_div(e, content);
        for (const Int& e : v) {
            if (e == 0) continue;
            if (e < 0)
                for (Int& w : v) w = -w;
            break;
        }
        ExactMatrix col(cols, 1);
        for (int i = 0; i < cols; ++i) col.at(i, 0) = v[i];
        basis.push_back(std::move(col));
    }
    return basis;
}

ExactMatrix kernel_lattice(const ExactMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    ExactMatrix a = m;
    ExactMatrix u = ExactMatrix::identity(cols);

    auto swap_cols = [&](int p, int q) {
        for (int i = 0; i < rows; ++i) std::swap(a.at(i, p), a.at(i, q));
        for (int i = 0; i < cols; ++i) std::swap(u.at(i, p), u.at(i, q));
    };

    int pivot = 0;
    for (int i = 0; i < rows && pivot < cols; ++i) {
        int j0 = -1;
        for (int j = pivot; j < cols; ++j) {
            if (a.at(i, j) != 0) {
                j0 = j;
                break;
            }
        }
        if (j0 < 0) continue;
        if (j0 != pivot) swap_cols(pivot, j0);
        for (int j = pivot + 1; j < cols; ++j) {
            if (a.at(i, j) == 0) continue;
            Int x, y;
            const Int g = egcd(a.at(i, pivot), a.at(i, j), x, y);
            const Int pq = exact_div(a.at(i, pivot), g);
            const Int qq = exact_div(a.at(i, j), g);
            for (int k = 0; k < rows; ++k) {
                const Int ap = a.at(k, pivot), aj = a.at(k, j);
                a.at(k, pivot) = x * ap + y * aj;
                a.at(k, j) = pq * aj - qq * ap;
            }
            for (int k = 0; k < cols; ++k) {
                const Int up = u.at(k, pivot), uj = u.at(k, j);
                u.at(k, pivot) = x * up + y * uj;
                u.at(k, j) = pq * uj - qq * up;
            }
        }
        ++pivot;
    }

    ExactMatrix kernel(cols, cols - pivot);
    for (int j = pivot; j < cols; ++j) {
        int flip = 1;
        for (int i = 0; i < cols; ++i) {
            if (u.at(i, j) != 0) {
                flip = u.at(i, j) < 0 ? -1 : 1;
                break;
            }
        }
        for (int i = 0; i < cols; ++i) kernel.at(i, j - pivot) = flip * u.at(i, j);
    }
    return kernel;
}

ExactMatrix solve_exact(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("row mismatch in solve_exact");
    const int rows = a.rows(), k = a.cols(), n = b.cols();
    const int cols = k + n;
    std::vector<Rat> w(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < k; ++j) w[static_cast<size_t>(i) * cols + j] = Rat(a.at(i, j));
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i) * cols + k + j] = Rat(b.at(i, j));
    }
    const std::vector<int> pivots = rref(w, rows, cols);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= k) throw std::invalid_argument("inconsistent system in solve_exact");
    }
    if (static_cast<int>(pivots.size()) != k)
        throw std::invalid_argument("coefficient matrix lacks full column rank in solve_exact");
    ExactMatrix x(k, n);
    for (int r = 0; r < k; ++r) {
        for (int j = 0; j < n; ++j) {
            const Rat& q = w[static_cast<size_t>(r) * cols + k + j];
            if (boost::multiprecision::denominator(q) != 1)
                throw std::invalid_argument("non-integral solution in solve_exact");
            x.at(pivots[r], j) = boost::multiprecision::numerator(q);
        }
    }
    return x;
}

} // namespace qsi
