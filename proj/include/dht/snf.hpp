#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dht {

using BigInt = boost::multiprecision::cpp_int;

// Column-major sparse integer matrix.
struct SparseIntMatrix {
    int n_rows = 0;
    int n_cols = 0;
    // cols[c] sorted by row index, no explicit zeros.
    std::vector<std::vector<std::pair<int, long long>>> cols;

    static SparseIntMatrix zero(int rows, int cols_);
    void set(int r, int c, long long v);
    long long nnz() const;
    bool is_zero() const { return nnz() == 0; }
};

// Product is the zero matrix (used for the dd = 0 chain-complex check).
bool product_is_zero(const SparseIntMatrix& a, const SparseIntMatrix& b);

struct SnfResult {
    std::vector<long long> factors;  // nonzero diagonal, d1 | d2 | ...
    int rank = 0;
};

// Smith normal form via unimodular row/column operations.  Strategy:
// eliminate with ±1 pivots chosen by a minimal fill-in estimate (each
// unit pivot contributes an invariant factor 1 and splits off
// exactly), then run a classical big-integer reduction on whatever
// small core has no unit entries left.
SnfResult smith_normal_form(const SparseIntMatrix& m);

// Rank over F_p by sparse Gaussian elimination.
int rank_mod_p(const SparseIntMatrix& m, long long p);

// Dense variant with transform accumulation, for the unimodularity
// property tests: u * m * v = d with |det u| = |det v| = 1.
struct DenseSnf {
    std::vector<std::vector<BigInt>> u, d, v;
    std::vector<BigInt> factors;
    int rank = 0;
};

DenseSnf smith_normal_form_dense(const std::vector<std::vector<BigInt>>& m);

BigInt determinant(std::vector<std::vector<BigInt>> m);

std::vector<std::vector<BigInt>> matmul(const std::vector<std::vector<BigInt>>& a,
                                        const std::vector<std::vector<BigInt>>& b);

bool is_prime(long long p);

}  // namespace dht
