#include "dht/homology.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "dht/cube_maps.hpp"

namespace dht {

ChainComplex chain_complex(const Graph& g, int max_dim, int m, BoundarySign sign) {
    if (max_dim < 0) throw std::invalid_argument("chain_complex: max_dim must be >= 0");
    ChainComplex cc;
    cc.m = m;
    cc.max_dim = max_dim;
    cc.sign = sign;
    cc.total_cubes.assign(max_dim + 1, 0);
    cc.basis.resize(max_dim + 1);
    cc.boundary.resize(max_dim + 1);

    std::unordered_map<std::vector<int>, int, VecHash> prev_index;
    for (int k = 0; k <= max_dim; ++k) {
        std::unordered_map<std::vector<int>, int, VecHash> index;
        auto& basis = cc.basis[k];
        for_each_cube_map(g, k, m, [&](const std::vector<int>& f) {
            ++cc.total_cubes[k];
            if (!is_degenerate_cube_map(f, k, m)) {
                index.emplace(f, static_cast<int>(basis.size()));
                basis.push_back(f);
            }
        });

        auto& d = cc.boundary[k];
        d = SparseIntMatrix::zero(k == 0 ? 0 : static_cast<int>(cc.basis[k - 1].size()),
                                  static_cast<int>(basis.size()));
        if (k > 0) {
            std::unordered_map<int, long long> acc;
            for (size_t c = 0; c < basis.size(); ++c) {
                acc.clear();
                for (int i = 1; i <= k; ++i) {
                    // The alternative convention twists the whole
                    // dimension by (-1)^k; a bare (-1)^k without the
                    // per-index alternation is not a boundary operator.
                    long long s = (sign == BoundarySign::PerFaceIndex)
                                      ? (i % 2 ? -1 : 1)
                                      : ((i + k) % 2 ? -1 : 1);
                    for (int eps = 0; eps < 2; ++eps) {
                        auto face = cube_map_face(basis[c], k, m, i, eps);
                        auto it = prev_index.find(face);
                        if (it == prev_index.end()) continue;  // degenerate face
                        acc[it->second] += eps ? s : -s;
                    }
                }
                for (auto [r, v] : acc)
                    if (v != 0) d.set(r, static_cast<int>(c), v);
            }
        }
        prev_index = std::move(index);
    }

    for (int k = 1; k + 1 <= max_dim; ++k)
        if (!product_is_zero(cc.boundary[k], cc.boundary[k + 1]))
            throw std::logic_error("chain_complex: dd != 0");
    return cc;
}

std::string HomologyGroup::to_text() const {
    if (rank == 0 && torsion.empty()) return "0";
    std::string out;
    if (rank == 1)
        out = "Z";
    else if (rank > 1)
        out = "Z^" + std::to_string(rank);
    for (long long d : torsion) {
        if (!out.empty()) out += " (+) ";
        out += "Z/" + std::to_string(d);
    }
    return out;
}

HomologyGroup homology_of_complex(const ChainComplex& cc, int k) {
    if (k < 0 || k + 1 > cc.max_dim)
        throw std::invalid_argument("homology: need k + 1 <= max_dim");
    SnfResult low = smith_normal_form(cc.boundary[k]);  // d_0 is the zero map
    SnfResult high = smith_normal_form(cc.boundary[k + 1]);
    long long nullity = cc.basis_size(k) - low.rank;
    HomologyGroup h;
    h.rank = nullity - high.rank;
    for (long long f : high.factors)
        if (f > 1) h.torsion.push_back(f);
    return h;
}

HomologyGroup homology(const Graph& g, int k, int max_dim) {
    return homology_of_complex(chain_complex(g, max_dim), k);
}

long long homology_mod_p_of_complex(const ChainComplex& cc, int k, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("homology_mod_p: p must be prime");
    if (k < 0 || k + 1 > cc.max_dim)
        throw std::invalid_argument("homology_mod_p: need k + 1 <= max_dim");
    long long nullity = cc.basis_size(k) - rank_mod_p(cc.boundary[k], p);
    return nullity - rank_mod_p(cc.boundary[k + 1], p);
}

long long homology_mod_p(const Graph& g, int k, long long p, int max_dim) {
    return homology_mod_p_of_complex(chain_complex(g, max_dim), k, p);
}

double estimate_cube_count(const Graph& g, int dim) {
    int max_deg = 0;
    for (int v = 0; v < g.size(); ++v) max_deg = std::max(max_deg, g.degree(v));
    return static_cast<double>(g.size()) *
           std::pow(static_cast<double>(max_deg + 1), std::pow(2.0, dim) - 1);
}

}  // namespace dht
