#include "qsi/partition.hpp"

#include "qsi/errors.hpp"

#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace qsi {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("not weakly decreasing");
    }
    for (int p : parts_) {
        if (p == 0) throw std::invalid_argument("not weakly decreasing");
    }
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    conj.reserve(first());
    for (int j = 0; j < first(); ++j) {
        int cnt = 0;
        for (int p : parts_)
            if (p > j) ++cnt;
        conj.push_back(cnt);
    }
    return Partition(std::move(conj));
}

Partition::ColumnData Partition::column_data() const {
    ColumnData data;
    const Partition conj = conjugate();
    // conjugate parts are the column lengths, weakly decreasing; walk them
    // backwards to list distinct lengths in increasing order
    const auto& cols = conj.parts();
    for (int j = static_cast<int>(cols.size()) - 1; j >= 0; --j) {
        if (data.lengths.empty() || cols[j] != data.lengths.back()) {
            data.lengths.push_back(cols[j]);
            data.counts.push_back(1);
        } else {
            ++data.counts.back();
        }
    }
    return data;
}

Partition Partition::stretched(int n) const {
    if (n < 0) throw std::invalid_argument("stretch factor must be nonnegative");
    std::vector<int> p = parts_;
    for (int& v : p) v *= n;
    return Partition(std::move(p));
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() + mu.size() != nu.size()) return 0;
    if (!nu.contains(lam)) return 0;
    if (mu.empty()) return 1; // sizes match and lam fits inside nu, so lam == nu

    const int nrows = nu.length();
    const int k = mu.length();

    // cells in reading order: rows top to bottom, right to left within a row
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < nrows; ++i)
        for (int j = nu.part(i) - 1; j >= lam.part(i); --j) cells.emplace_back(i, j);

    std::vector<std::vector<int>> grid(nrows);
    for (int i = 0; i < nrows; ++i) grid[i].assign(nu.part(i), 0);
    std::vector<int> counts(k + 1, 0);

    long long total = 0;
    std::function<void(size_t)> fill = [&](size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        const auto [i, j] = cells[idx];
        int hi = std::min(k, i + 1);
        if (j + 1 < nu.part(i)) hi = std::min(hi, grid[i][j + 1]);
        int lo = 1;
        if (i > 0 && j >= lam.part(i - 1)) lo = grid[i - 1][j] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (counts[v] >= mu.part(v - 1)) continue;
            if (v >= 2 && counts[v - 1] <= counts[v]) continue; // lattice prefix condition
            grid[i][j] = v;
            ++counts[v];
            fill(idx + 1);
            --counts[v];
            grid[i][j] = 0;
        }
    };
    fill(0);
    return total;
}

namespace {

using ProductKey = std::tuple<Partition, Partition, int>;
std::map<ProductKey, DecompositionTable> product_cache;
std::mutex product_cache_mutex;

// Enumerates LR tableaux of content mu on top of lam as sequences of
// horizontal strips; each completed shape is one term of the expansion.
class StripEnumerator {
public:
    StripEnumerator(const Partition& lam, const Partition& mu, int row_bound)
        : mu_(mu), bound_(row_bound), shape_(row_bound, 0),
          placed_(mu.length() + 1, std::vector<int>(row_bound, 0)) {
        for (int i = 0; i < row_bound; ++i) shape_[i] = lam.part(i);
    }

    DecompositionTable run() {
        place_value(1);
        return std::move(table_);
    }

private:
    void place_value(int v) {
        if (v > mu_.length()) {
            table_[Partition(shape_)] += 1;
            return;
        }
        place_rows(v, 0, mu_.part(v - 1), 0, 0, 0);
    }

    // cum_prev: cells of value v-1 in rows < i; cum_cur: cells of value v
    // in rows < i; old_above: shape of row i-1 before this strip was added
    // (new cells in row i may not extend past it)
    void place_rows(int v, int i, int rem, long long cum_prev, long long cum_cur, int old_above) {
        if (i == bound_) {
            if (rem == 0) place_value(v + 1);
            return;
        }
        long long max_k = rem;
        if (i > 0) max_k = std::min<long long>(max_k, old_above - shape_[i]);
        if (v >= 2) max_k = std::min(max_k, cum_prev - cum_cur);
        const int old_here = shape_[i];
        const long long next_prev = cum_prev + placed_[v - 1][i];
        for (long long kk = 0; kk <= max_k; ++kk) {
            shape_[i] = old_here + static_cast<int>(kk);
            placed_[v][i] = static_cast<int>(kk);
            place_rows(v, i + 1, rem - static_cast<int>(kk), next_prev, cum_cur + kk, old_here);
        }
        shape_[i] = old_here;
        placed_[v][i] = 0;
    }

    const Partition& mu_;
    int bound_;
    std::vector<int> shape_;
    std::vector<std::vector<int>> placed_;
    DecompositionTable table_;
};

} // namespace

DecompositionTable schur_product(const Partition& lam, const Partition& mu, int row_bound) {
    if (row_bound < 0) throw std::invalid_argument("row bound must be nonnegative");
    if (lam.length() > row_bound || mu.length() > row_bound) return {};

    // the product is symmetric; canonicalize the key
    const Partition& a = lam <= mu ? lam : mu;
    const Partition& b = lam <= mu ? mu : lam;
    const ProductKey key{a, b, row_bound};
    {
        std::lock_guard<std::mutex> lock(product_cache_mutex);
        auto it = product_cache.find(key);
        if (it != product_cache.end()) return it->second;
    }
    DecompositionTable table = StripEnumerator(a, b, row_bound).run();
    {
        std::lock_guard<std::mutex> lock(product_cache_mutex);
        product_cache.emplace(key, table);
    }
    return table;
}

DecompositionTable tensor_decompose(int r, const std::vector<Partition>& factors) {
    for (const Partition& f : factors) {
        if (f.length() > r)
            throw TooManyRows("tensor factor has more rows than the rank");
    }
    DecompositionTable acc{{Partition(), 1}};
    for (const Partition& f : factors) {
        DecompositionTable next;
        for (const auto& [shape, mult] : acc) {
            for (const auto& [res, c] : schur_product(shape, f, r)) next[res] += mult * c;
        }
        acc = std::move(next);
    }
    return acc;
}

Int schur_dimension(int r, const Partition& lam) {
    if (lam.length() > r) return 0;
    const Partition conj = lam.conjugate();
    Int num = 1, den = 1;
    for (int i = 0; i < lam.length(); ++i) {
        for (int j = 0; j < lam.part(i); ++j) {
            num *= r + j - i;
            den *= (lam.part(i) - j) + (conj.part(j) - i) - 1;
        }
    }
    Int q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem != 0) throw std::logic_error("hook content product not integral");
    return q;
}

long long sl_invariant_dim(int r, const std::vector<Partition>& lambdas) {
    if (r < 1) throw std::invalid_argument("rank must be at least 1");
    long long total = 0;
    for (const Partition& l : lambdas) total += l.size();
    if (total % r != 0) return 0;
    const long long k = total / r;
    const Partition rectangle =
        k == 0 ? Partition() : Partition(std::vector<int>(r, static_cast<int>(k)));
    const DecompositionTable table = tensor_decompose(r, lambdas);
    auto it = table.find(rectangle);
    return it == table.end() ? 0 : it->second;
}

long long stretched_lr(const Partition& lam, const Partition& mu, const Partition& nu, int n) {
    if (n < 1) throw std::invalid_argument("stretch factor must be positive");
    return lr_coefficient(lam.stretched(n), mu.stretched(n), nu.stretched(n));
}

long long stretched_invariant(int r, const std::vector<Partition>& lambdas, int n) {
    if (n < 1) throw std::invalid_argument("stretch factor must be positive");
    std::vector<Partition> scaled;
    scaled.reserve(lambdas.size());
    for (const Partition& l : lambdas) scaled.push_back(l.stretched(n));
    return sl_invariant_dim(r, scaled);
}

} // namespace qsi
