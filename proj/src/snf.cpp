#include "dht/snf.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace dht {

SparseIntMatrix SparseIntMatrix::zero(int rows, int cols_) {
    SparseIntMatrix m;
    m.n_rows = rows;
    m.n_cols = cols_;
    m.cols.resize(cols_);
    return m;
}

void SparseIntMatrix::set(int r, int c, long long v) {
    if (r < 0 || r >= n_rows || c < 0 || c >= n_cols)
        throw std::out_of_range("SparseIntMatrix::set");
    auto& col = cols[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        if (v == 0)
            col.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        col.insert(it, {r, v});
    }
}

long long SparseIntMatrix::nnz() const {
    long long t = 0;
    for (const auto& c : cols) t += static_cast<long long>(c.size());
    return t;
}

bool product_is_zero(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.n_cols != b.n_rows) throw std::invalid_argument("product_is_zero: shape mismatch");
    std::map<int, long long> acc;
    for (const auto& bcol : b.cols) {
        acc.clear();
        for (auto [k, bv] : bcol)
            for (auto [r, av] : a.cols[k]) acc[r] += av * bv;
        for (const auto& entry : acc)
            if (entry.second != 0) return false;
    }
    return true;
}

namespace {

// Mutable elimination workspace: exact column storage plus per-row
// lists of candidate columns (lazily cleaned).  Pivot rows are served
// from a min-heap on row fill, re-pushed when stale.
struct Workspace {
    int n_rows, n_cols;
    long long mod;  // 0 = integer elimination restricted to unit pivots
    std::vector<std::vector<std::pair<int, long long>>> col;
    std::vector<std::vector<int>> row_cols;
    std::vector<int> row_nnz, col_nnz;
    std::vector<char> row_alive, col_alive;

    Workspace(const SparseIntMatrix& m, long long mod_)
        : n_rows(m.n_rows), n_cols(m.n_cols), mod(mod_), col(m.cols),
          row_cols(m.n_rows), row_nnz(m.n_rows, 0), col_nnz(m.n_cols, 0),
          row_alive(m.n_rows, 1), col_alive(m.n_cols, 1) {
        if (mod) {
            for (auto& c : col) {
                std::vector<std::pair<int, long long>> kept;
                for (auto [r, v] : c) {
                    long long t = v % mod;
                    if (t < 0) t += mod;
                    if (t != 0) kept.push_back({r, t});
                }
                c = std::move(kept);
            }
        }
        for (int c = 0; c < n_cols; ++c) {
            col_nnz[c] = static_cast<int>(col[c].size());
            for (const auto& entry : col[c]) {
                ++row_nnz[entry.first];
                row_cols[entry.first].push_back(c);
            }
        }
    }

    long long value_at(int r, int c) const {
        const auto& cc = col[c];
        auto it = std::lower_bound(cc.begin(), cc.end(), r,
                                   [](const auto& e, int row) { return e.first < row; });
        return (it != cc.end() && it->first == r) ? it->second : 0;
    }

    long long inv_mod(long long a) const {
        long long t = 0, nt = 1, r = mod, nr = a % mod;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return t < 0 ? t + mod : t;
    }

    // col[dst] -= f * col[src] (mod p when set); counters maintained.
    void axpy_col(int dst, long long f, int src) {
        std::vector<std::pair<int, long long>> merged;
        merged.reserve(col[dst].size() + col[src].size());
        auto a = col[dst].begin(), ae = col[dst].end();
        auto b = col[src].begin(), be = col[src].end();
        auto combine = [&](long long x, long long y) {  // x - f*y
            long long t, out;
            if (mod) {
                t = (f * (y % mod)) % mod;
                out = ((x - t) % mod + mod) % mod;
                return out;
            }
            if (__builtin_mul_overflow(f, y, &t) || __builtin_sub_overflow(x, t, &out))
                throw std::overflow_error("snf: 64-bit overflow during elimination");
            return out;
        };
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                merged.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                long long nv = combine(0, b->second);
                if (nv != 0) {
                    merged.push_back({b->first, nv});
                    ++row_nnz[b->first];
                    row_cols[b->first].push_back(dst);
                }
                ++b;
            } else {
                long long nv = combine(a->second, b->second);
                if (nv != 0)
                    merged.push_back({a->first, nv});
                else
                    --row_nnz[a->first];
                ++a;
                ++b;
            }
        }
        col_nnz[dst] = static_cast<int>(merged.size());
        col[dst] = std::move(merged);
    }

    void kill_pivot(int r, int c) {
        for (const auto& entry : col[c])
            if (entry.first != r) --row_nnz[entry.first];
        col[c].clear();
        col_nnz[c] = 0;
        row_nnz[r] = 0;
        row_alive[r] = 0;
        col_alive[c] = 0;
    }

    // Live entries of a row, compacting the stale column list.
    std::vector<std::pair<int, long long>> row_entries(int r) {
        std::vector<int> fresh;
        std::vector<std::pair<int, long long>> out;
        std::sort(row_cols[r].begin(), row_cols[r].end());
        row_cols[r].erase(std::unique(row_cols[r].begin(), row_cols[r].end()),
                          row_cols[r].end());
        for (int c : row_cols[r]) {
            if (!col_alive[c]) continue;
            long long v = value_at(r, c);
            if (v != 0) {
                fresh.push_back(c);
                out.push_back({c, v});
            }
        }
        row_cols[r] = std::move(fresh);
        return out;
    }

    // Eliminate as far as the pivot policy allows; returns the number
    // of pivots.  Integer mode only accepts ±1 pivots, leaving the
    // rest to the caller; mod-p mode accepts any nonzero entry.
    int eliminate() {
        using Item = std::pair<int, int>;  // (nnz at push time, row)
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        std::vector<int> deferred;
        for (int r = 0; r < n_rows; ++r)
            if (row_nnz[r] > 0) heap.push({row_nnz[r], r});

        int pivots = 0;
        int progress = 1;
        while (progress) {
            progress = 0;
            while (!heap.empty()) {
                auto [key, r] = heap.top();
                heap.pop();
                if (!row_alive[r] || row_nnz[r] == 0) continue;
                if (key != row_nnz[r]) {
                    heap.push({row_nnz[r], r});
                    continue;
                }
                auto entries = row_entries(r);
                if (entries.empty()) continue;
                int best_c = -1;
                long long best_v = 0;
                for (auto [c, v] : entries) {
                    if (!mod && v != 1 && v != -1) continue;
                    if (best_c < 0 || col_nnz[c] < col_nnz[best_c]) {
                        best_c = c;
                        best_v = v;
                    }
                }
                if (best_c < 0) {
                    deferred.push_back(r);
                    continue;
                }
                long long inv = mod ? inv_mod(best_v) : best_v;  // best_v^2 = 1 over Z
                for (auto [c, v] : entries) {
                    if (c == best_c) continue;
                    long long f = mod ? (v * inv) % mod : v * inv;
                    axpy_col(c, f, best_c);
                }
                kill_pivot(r, best_c);
                ++pivots;
                ++progress;
            }
            if (progress)
                for (int r : deferred)
                    if (row_alive[r] && row_nnz[r] > 0) heap.push({row_nnz[r], r});
            deferred.clear();
        }
        return pivots;
    }
};

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m) {
    Workspace w(m, 0);
    int unit_pivots = w.eliminate();

    // Whatever survives has no ±1 entries; finish densely with big
    // integers (the core is tiny for the matrices this library meets).
    std::vector<int> rows_left, cols_left;
    for (int r = 0; r < w.n_rows; ++r)
        if (w.row_alive[r] && w.row_nnz[r] > 0) rows_left.push_back(r);
    for (int c = 0; c < w.n_cols; ++c)
        if (w.col_alive[c] && w.col_nnz[c] > 0) cols_left.push_back(c);

    SnfResult res;
    res.factors.assign(unit_pivots, 1);
    res.rank = unit_pivots;
    if (!rows_left.empty() && !cols_left.empty()) {
        std::vector<int> row_pos(w.n_rows, -1);
        for (size_t i = 0; i < rows_left.size(); ++i) row_pos[rows_left[i]] = static_cast<int>(i);
        std::vector<std::vector<BigInt>> dense(rows_left.size(),
                                               std::vector<BigInt>(cols_left.size(), 0));
        for (size_t j = 0; j < cols_left.size(); ++j)
            for (auto [r, v] : w.col[cols_left[j]]) dense[row_pos[r]][j] = v;
        DenseSnf tail = smith_normal_form_dense(dense);
        res.rank += tail.rank;
        for (const auto& f : tail.factors) {
            if (f > std::numeric_limits<long long>::max())
                throw std::overflow_error("snf: invariant factor exceeds 64 bits");
            res.factors.push_back(static_cast<long long>(f));
        }
    }
    std::sort(res.factors.begin(), res.factors.end());
    return res;
}

int rank_mod_p(const SparseIntMatrix& m, long long p) {
    if (p < 2) throw std::invalid_argument("rank_mod_p: modulus must be >= 2");
    Workspace w(m, p);
    return w.eliminate();
}

namespace {

using Mat = std::vector<std::vector<BigInt>>;

Mat identity(size_t n) {
    Mat id(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

}  // namespace

Mat matmul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    size_t n = a.size(), k = b.size(), mm = b[0].size();
    Mat out(n, std::vector<BigInt>(mm, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < mm; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

BigInt determinant(Mat m) {
    // Fraction-free Bareiss elimination.
    size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

DenseSnf smith_normal_form_dense(const Mat& input) {
    DenseSnf out;
    out.d = input;
    size_t rows = input.size();
    size_t cols = rows ? input[0].size() : 0;
    out.u = identity(rows);
    out.v = identity(cols);
    Mat& d = out.d;
    Mat& u = out.u;
    Mat& v = out.v;

    auto swap_rows = [&](size_t a, size_t b) {
        std::swap(d[a], d[b]);
        std::swap(u[a], u[b]);
    };
    auto swap_cols = [&](size_t a, size_t b) {
        for (auto& row : d) std::swap(row[a], row[b]);
        for (auto& row : v) std::swap(row[a], row[b]);
    };
    auto add_row = [&](size_t dst, size_t src, const BigInt& f) {  // row dst += f*src
        for (size_t j = 0; j < cols; ++j) d[dst][j] += f * d[src][j];
        for (size_t j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
    };
    auto add_col = [&](size_t dst, size_t src, const BigInt& f) {
        for (size_t i = 0; i < rows; ++i) d[i][dst] += f * d[i][src];
        for (size_t i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
    };
    auto negate_row = [&](size_t r) {
        for (auto& x : d[r]) x = -x;
        for (auto& x : u[r]) x = -x;
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // Entry of least nonzero magnitude in the trailing block.
        size_t pr = t, pc = t;
        BigInt best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (d[i][j] == 0) continue;
                BigInt a = abs(d[i][j]);
                if (best == 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (best == 0) break;
        swap_rows(t, pr);
        swap_cols(t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (d[i][t] == 0) continue;
                BigInt q = d[i][t] / d[t][t];
                add_row(i, t, -q);
                if (d[i][t] != 0) {
                    swap_rows(t, i);  // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (d[t][j] == 0) continue;
                BigInt q = d[t][j] / d[t][t];
                add_col(j, t, -q);
                if (d[t][j] != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility fix-up: the pivot must divide the trailing block.
            for (size_t i = t + 1; i < rows && clean; ++i)
                for (size_t j = t + 1; j < cols && clean; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        add_row(t, i, 1);
                        clean = false;
                    }
        }
        if (d[t][t] < 0) negate_row(t);
        ++t;
    }
    for (size_t i = 0; i < t; ++i) out.factors.push_back(d[i][i]);
    out.rank = static_cast<int>(t);
    return out;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace dht
