#include "dht/fseq.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace dht {

std::vector<int> FSequence::class_members(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= n; ++j)
        if (cls[j - 1] == i) out.push_back(j);
    return out;
}

void FSequence::validate() const {
    if (m < 0 || n < 0) throw std::invalid_argument("FSequence: m, n must be >= 0");
    if (static_cast<int>(sign.size()) != n || static_cast<int>(cls.size()) != n)
        throw std::invalid_argument("FSequence: sign/partition size mismatch");
    int k = length();
    if (n == 0 && k != 0) throw std::invalid_argument("FSequence: n = 0 forces k = 0");
    if (n > 0 && k == 0) throw std::invalid_argument("FSequence: empty partition of nonempty set");
    std::vector<char> seen(k, 0);
    for (int j = 0; j < n; ++j) {
        if (sign[j] != -1 && sign[j] != 1) throw std::invalid_argument("FSequence: bad sign");
        if (cls[j] < 1 || cls[j] > k) throw std::invalid_argument("FSequence: class out of range");
        seen[cls[j] - 1] = 1;
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("FSequence: partition not surjective");
    for (int w : weight)
        if (w < 0 || w > m) throw std::invalid_argument("FSequence: weight out of range");
}

bool FSequence::operator<(const FSequence& o) const {
    return std::tie(n, weight, cls, sign) < std::tie(o.n, o.weight, o.cls, o.sign);
}

size_t FSequenceHash::operator()(const FSequence& s) const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](long long x) {
        h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(s.n);
    for (auto v : s.sign) mix(v);
    for (auto v : s.cls) mix(v);
    for (auto v : s.weight) mix(v);
    return h;
}

std::string to_string(const FSequence& s) {
    std::string out = "(";
    for (int i = 1; i <= s.length(); ++i) {
        if (i > 1) out += ",";
        out += "(" + std::to_string(s.weight[i - 1]) + ";";
        bool first = true;
        for (int j : s.class_members(i)) {
            if (!first) out += ",";
            first = false;
            out += std::to_string(j);
            out += s.sign[j - 1] > 0 ? '+' : '-';
        }
        out += ")";
    }
    out += ")";
    return out;
}

FSequence parse_fseq(const std::string& text, int m) {
    size_t p = 0;
    auto skip_ws = [&] {
        while (p < text.size() && (text[p] == ' ' || text[p] == '\t')) ++p;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (p >= text.size() || text[p] != c)
            throw FseqParseError(std::string("expected '") + c + "'", p);
        ++p;
    };
    auto parse_int = [&]() {
        skip_ws();
        size_t start = p;
        while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
        if (p == start) throw FseqParseError("expected a number", p);
        return std::stoi(text.substr(start, p - start));
    };

    expect('(');
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> classes;  // (weight, [(elem, sign)])
    skip_ws();
    if (p < text.size() && text[p] == ')') {
        ++p;
    } else {
        for (;;) {
            expect('(');
            int w = parse_int();
            expect(';');
            std::vector<std::pair<int, int>> members;
            for (;;) {
                int e = parse_int();
                skip_ws();
                if (p >= text.size() || (text[p] != '+' && text[p] != '-'))
                    throw FseqParseError("expected '+' or '-'", p);
                members.emplace_back(e, text[p] == '+' ? 1 : -1);
                ++p;
                skip_ws();
                if (p < text.size() && text[p] == ',') {
                    ++p;
                    continue;
                }
                break;
            }
            expect(')');
            classes.emplace_back(w, std::move(members));
            skip_ws();
            if (p < text.size() && text[p] == ',') {
                ++p;
                continue;
            }
            break;
        }
        expect(')');
    }
    skip_ws();
    if (p != text.size()) throw FseqParseError("trailing input", p);

    int n = 0;
    for (auto& [w, members] : classes) n += static_cast<int>(members.size());
    FSequence s;
    s.m = m;
    s.n = n;
    s.sign.assign(n, 1);
    s.cls.assign(n, 0);
    for (size_t i = 0; i < classes.size(); ++i) {
        s.weight.push_back(classes[i].first);
        for (auto [e, sg] : classes[i].second) {
            if (e < 1 || e > n) throw FseqParseError("element out of range 1..n", 0);
            if (s.cls[e - 1] != 0) throw FseqParseError("element repeated", 0);
            s.cls[e - 1] = static_cast<int>(i) + 1;
            s.sign[e - 1] = static_cast<int8_t>(sg);
        }
    }
    s.validate();
    return s;
}

FSequence fr1(const FSequence& s, int i) {
    int k = s.length();
    if (i < 2 || i > k || s.weight[i - 1] != 0)
        throw std::invalid_argument("fr1: need 2 <= i <= k and w(i) = 0");
    FSequence out = s;
    for (int j = 0; j < s.n; ++j)
        if (out.cls[j] >= i) --out.cls[j];
    out.weight.erase(out.weight.begin() + (i - 1));
    return out;
}

FSequence fr2(const FSequence& s, int i) {
    int k = s.length();
    if (i < 1 || i > k || s.weight[i - 1] != s.m)
        throw std::invalid_argument("fr2: need 1 <= i <= k and w(i) = m");
    FSequence out = s;
    for (int j = 0; j < s.n; ++j)
        if (out.cls[j] >= i) {
            out.cls[j] = i;
            out.sign[j] = 1;
        }
    out.weight.resize(i);
    return out;
}

bool is_reduced(const FSequence& s) {
    int k = s.length();
    for (int i = 2; i <= k; ++i)
        if (s.weight[i - 1] == 0) return false;
    for (int i = 1; i < k; ++i)
        if (s.weight[i - 1] == s.m) return false;
    if (k >= 1 && s.weight[k - 1] == s.m)
        for (int j = 0; j < s.n; ++j)
            if (s.cls[j] == k && s.sign[j] < 0) return false;
    return true;
}

bool is_expanded(const FSequence& s) {
    int k = s.length();
    std::vector<int> size(k, 0);
    for (int j = 0; j < s.n; ++j) ++size[s.cls[j] - 1];
    for (int c : size)
        if (c != 1) return false;
    bool seen_m = false;
    for (int i = 1; i <= k; ++i) {
        if (s.weight[i - 1] == s.m)
            seen_m = true;
        else if (seen_m)
            return false;
    }
    return true;
}

FSequence reduce(const FSequence& s) {
    FSequence out = s;
    for (int i = 1; i <= out.length(); ++i)
        if (out.weight[i - 1] == out.m) {
            out = fr2(out, i);
            break;
        }
    for (int i = 2; i <= out.length();) {
        if (out.weight[i - 1] == 0)
            out = fr1(out, i);
        else
            ++i;
    }
    return out;
}

namespace {

void permutations_of(const std::vector<int>& elems, std::vector<std::vector<int>>& out) {
    std::vector<int> p = elems;
    std::sort(p.begin(), p.end());
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

std::vector<FSequence> expanded_forms(const FSequence& s) {
    FSequence r = reduce(s);
    int k = r.length();
    if (k == 0) return {r};

    bool m_tail = r.weight[k - 1] == r.m;
    // Orderings per block; the tail block of weight m also ranges over
    // signs.
    std::vector<std::vector<std::vector<int>>> block_orders(k);
    for (int i = 1; i <= k; ++i) permutations_of(r.class_members(i), block_orders[i - 1]);

    std::vector<FSequence> out;
    std::vector<int> pick(k, 0);
    for (;;) {
        // Assemble the singleton expansion for this choice of orderings.
        std::vector<int> order;  // elements in expanded class order
        std::vector<int> weights;
        for (int i = 0; i < k; ++i) {
            const auto& blk = block_orders[i][pick[i]];
            for (size_t t = 0; t < blk.size(); ++t) {
                order.push_back(blk[t]);
                if (i == k - 1 && m_tail)
                    weights.push_back(r.m);
                else
                    weights.push_back(t == 0 ? r.weight[i] : 0);
            }
        }
        FSequence base;
        base.m = r.m;
        base.n = r.n;
        base.sign = r.sign;
        base.cls.assign(r.n, 0);
        for (size_t c = 0; c < order.size(); ++c) base.cls[order[c] - 1] = static_cast<int>(c) + 1;
        base.weight = weights;

        if (!m_tail) {
            out.push_back(std::move(base));
        } else {
            // FR2 freedom: any signs on the trailing weight-m members.
            auto tail = r.class_members(k);
            int t = static_cast<int>(tail.size());
            for (int bits = 0; bits < (1 << t); ++bits) {
                FSequence e = base;
                for (int j = 0; j < t; ++j)
                    e.sign[tail[j] - 1] = ((bits >> j) & 1) ? 1 : -1;
                out.push_back(std::move(e));
            }
        }

        int i = k - 1;
        while (i >= 0 && ++pick[i] == static_cast<int>(block_orders[i].size())) pick[i--] = 0;
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long count_expanded_forms(const FSequence& s) {
    FSequence r = reduce(s);
    int k = r.length();
    if (k == 0) return 1;
    long long count = 1;
    for (int i = 1; i <= k; ++i) {
        long long sz = static_cast<long long>(r.class_members(i).size());
        for (long long t = 2; t <= sz; ++t) count *= t;
        if (i == k && r.weight[k - 1] == r.m) count <<= sz;
    }
    return count;
}

std::vector<int> signature(const FSequence& s) {
    std::vector<int> sig(s.n);
    for (int j = 1; j <= s.n; ++j) {
        int pj = s.cls[j - 1];
        int min_m = 0;
        for (int i = 1; i <= pj; ++i)
            if (s.weight[i - 1] == s.m) {
                min_m = i;
                break;
            }
        if (min_m) {
            sig[j - 1] = min_m;
            continue;
        }
        int max_nz = 0;
        for (int i = pj; i >= 1; --i)
            if (s.weight[i - 1] != 0) {
                max_nz = i;
                break;
            }
        sig[j - 1] = max_nz ? max_nz : 1;
    }
    return sig;
}

void for_each_f_sequence(int m, int n, const std::function<void(const FSequence&)>& cb) {
    if (n == 0) {
        FSequence e;
        e.m = m;
        cb(e);
        return;
    }
    // Enumerate surjections {1..n} -> {1..k} for every k, then weights
    // and signs.
    std::vector<int> cls(n, 1);
    for (;;) {
        int k = *std::max_element(cls.begin(), cls.end());
        std::vector<char> seen(k, 0);
        for (int c : cls) seen[c - 1] = 1;
        bool surj = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
        if (surj) {
            FSequence s;
            s.m = m;
            s.n = n;
            s.cls = cls;
            s.weight.assign(k, 0);
            s.sign.assign(n, -1);
            for (;;) {
                for (int bits = 0; bits < (1 << n); ++bits) {
                    for (int j = 0; j < n; ++j) s.sign[j] = ((bits >> j) & 1) ? 1 : -1;
                    cb(s);
                }
                int i = k - 1;
                while (i >= 0 && ++s.weight[i] > m) s.weight[i--] = 0;
                if (i < 0) break;
            }
        }
        int j = n - 1;
        while (j >= 0 && ++cls[j] > n) cls[j--] = 1;
        if (j < 0) break;
    }
}

std::vector<FSequence> all_f_sequences(int m, int n) {
    std::vector<FSequence> out;
    for_each_f_sequence(m, n, [&](const FSequence& s) { out.push_back(s); });
    return out;
}

std::vector<int> FGraph::boundary_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < graph.size(); ++v)
        if (boundary[v]) out.push_back(v);
    return out;
}

std::vector<int> FGraph::interior_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < graph.size(); ++v)
        if (!boundary[v]) out.push_back(v);
    return out;
}

int FGraph::vertex_of(const FSequence& s) const {
    FSequence r = reduce(s);
    auto it = std::lower_bound(vertex_seq.begin(), vertex_seq.end(), r);
    if (it == vertex_seq.end() || !(*it == r))
        throw std::invalid_argument("FGraph::vertex_of: sequence not in this graph");
    return static_cast<int>(it - vertex_seq.begin());
}

FGraph f_graph(int m, int n) {
    // Vertices: all reduced forms, structurally sorted.
    std::vector<FSequence> reduced;
    {
        std::unordered_map<FSequence, char, FSequenceHash> seen;
        for_each_f_sequence(m, n, [&](const FSequence& s) {
            FSequence r = reduce(s);
            if (seen.emplace(r, 1).second) reduced.push_back(std::move(r));
        });
        std::sort(reduced.begin(), reduced.end());
    }

    FGraph fg;
    fg.vertex_seq = reduced;
    fg.boundary.resize(reduced.size());
    for (size_t v = 0; v < reduced.size(); ++v) {
        fg.graph.add_vertex(to_string(reduced[v]));
        fg.boundary[v] = reduced[v].length() >= 1 && reduced[v].weight[0] == 0;
    }

    // Edges: two classes are adjacent when they contain singleton-
    // partition representatives that agree except for a single weight
    // moved by one.  Enumerating every singleton-partition sequence
    // and bumping each coordinate once covers every such witness pair.
    // (This is deliberately wider than pairing strict expanded forms:
    // the witness on the higher-weight side may carry arbitrary
    // weights behind its leading m, which the cone structure of the
    // graph requires.)
    auto vertex_of_reduced = [&](const FSequence& r) {
        auto it = std::lower_bound(reduced.begin(), reduced.end(), r);
        return static_cast<int>(it - reduced.begin());
    };
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    if (n == 0) return fg;
    do {
        FSequence e;
        e.m = m;
        e.n = n;
        e.sign.assign(n, -1);
        e.cls.assign(n, 0);
        for (int pos = 0; pos < n; ++pos) e.cls[perm[pos] - 1] = pos + 1;
        e.weight.assign(n, 0);
        for (;;) {
            for (int bits = 0; bits < (1 << n); ++bits) {
                for (int j = 0; j < n; ++j) e.sign[j] = ((bits >> j) & 1) ? 1 : -1;
                int u = vertex_of_reduced(reduce(e));
                for (int i = 0; i < n; ++i) {
                    if (e.weight[i] == m) continue;
                    FSequence bumped = e;
                    ++bumped.weight[i];
                    int v = vertex_of_reduced(reduce(bumped));
                    if (u != v) fg.graph.add_edge(u, v);
                }
            }
            int i = n - 1;
            while (i >= 0 && ++e.weight[i] > m) e.weight[i--] = 0;
            if (i < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return fg;
}

Graph f_boundary_graph(const FGraph& fg) {
    return induced_subgraph(fg.graph, fg.boundary_vertices());
}

FSequence f_face(int j, int eps, const FSequence& s) {
    if (j < 1 || j > s.n + 1) throw std::invalid_argument("f_face: index out of range");
    if (eps != 0 && eps != 1) throw std::invalid_argument("f_face: eps must be 0 or 1");
    FSequence out;
    out.m = s.m;
    out.n = s.n + 1;
    out.sign.resize(out.n);
    out.cls.resize(out.n);
    for (int x = 1; x <= out.n; ++x) {
        if (x < j) {
            out.sign[x - 1] = s.sign[x - 1];
            out.cls[x - 1] = s.cls[x - 1] + 1;
        } else if (x == j) {
            out.sign[x - 1] = eps ? 1 : -1;
            out.cls[x - 1] = 1;
        } else {
            out.sign[x - 1] = s.sign[x - 2];
            out.cls[x - 1] = s.cls[x - 2] + 1;
        }
    }
    out.weight.push_back(0);
    out.weight.insert(out.weight.end(), s.weight.begin(), s.weight.end());
    return out;
}

FConeMap f_cone_map(int m, int n) {
    if (n < 1) throw std::invalid_argument("f_cone_map: n must be >= 1");
    FGraph fg = f_graph(m, n);
    auto bverts = fg.boundary_vertices();
    Graph bd = induced_subgraph(fg.graph, bverts);
    BoxProduct box = box_product(bd, interval(m));

    std::vector<int> assign(box.graph.size());
    for (int i = 0; i < box.graph.size(); ++i) {
        const FSequence& seq = fg.vertex_seq[bverts[box.pi1.apply(i)]];
        int t = box.pi2.apply(i);
        FSequence lifted = seq;  // reduced boundary form, w(1) = 0
        lifted.weight[0] = t;
        assign[i] = fg.vertex_of(lifted);
    }
    GraphMap map{box.graph, fg.graph, std::move(assign)};
    return FConeMap{std::move(fg), std::move(bd), std::move(map)};
}

}  // namespace dht
