#include "nbly/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "nbly/errors.hpp"

namespace nbly {

namespace {

void validate_component(const Component& c) {
    if (c.k > c.n) throw std::invalid_argument("component run start exceeds its end");
    int prev = c.k - 1;
    for (int a : c.cuts) {
        if (a <= prev || a > c.n)
            throw std::invalid_argument("component cuts must be strictly increasing within [k, n]");
        prev = a;
    }
    if (c.k == c.n && c.cuts.empty())
        throw std::invalid_argument("a singleton run must carry a cut");
}

int component_edge_count(const Component& c) {
    return (c.n - c.k) + static_cast<int>(c.cuts.size());
}

Coeff binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    Coeff r = 1;
    for (int i = 1; i <= b; ++i) {
        r = checked_mul(r, a - b + i);
        r /= i;  // exact: r is binomial(a-b+i, i) after this step
    }
    return r;
}

}  // namespace

std::string component_type_name(ComponentType t) {
    switch (t) {
        case ComponentType::t_aa: return "a~a";
        case ComponentType::t_ab: return "a~a+1";
        case ComponentType::t_aab: return "a~a~a+1";
        case ComponentType::t_abb: return "a~a+1~a+1";
        case ComponentType::t_abc: return "a~a+1~a+2";
        case ComponentType::t_abbc: return "a~a+1~a+1~a+2";
    }
    return "?";
}

PartitionGraph build_graph(const NeighborlyPartition& np) {
    validate(np);
    PartitionGraph g;
    auto cut = np.mu2.begin();
    for (const Run& r : runs(np)) {
        Component c{r.start, r.end, {}};
        while (cut != np.mu2.end() && *cut <= r.end) c.cuts.push_back(*cut++);
        g.total_edges += component_edge_count(c);
        g.total_vertices += (c.n - c.k + 1) + static_cast<int>(c.cuts.size());
        g.components.push_back(std::move(c));
    }
    return g;
}

std::vector<Coeff> chain_poly(int n) {
    if (n < 1) throw std::domain_error("chain length must be >= 1");
    std::vector<Coeff> coeffs(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= (n - 1) / 2; ++k)
        coeffs[static_cast<std::size_t>(n - k)] = binomial(n - k - 1, k);
    return coeffs;
}

int chain_sign(int n) {
    if (n < 1) throw std::domain_error("chain length must be >= 1");
    switch (n % 3) {
        case 1: return -1;
        case 2: return 1;
        default: return 0;
    }
}

int component_signature_bruteforce(const Component& c) {
    validate_component(c);
    /* Vertices 0..n-k are the backbone labels k..n; the remaining s are the
     * duplicate endpoints of the hanging edges. Edges are (vertex, vertex)
     * pairs; each subset is tested for covering every vertex. The component
     * is a tree (edges = vertices - 1), so every edge subset is a forest. */
    const int backbone = c.n - c.k + 1;
    const int vertices = backbone + static_cast<int>(c.cuts.size());
    std::vector<std::uint64_t> incidence;
    for (int v = 0; v + 1 < backbone; ++v)
        incidence.push_back((1ULL << v) | (1ULL << (v + 1)));
    for (std::size_t i = 0; i < c.cuts.size(); ++i) {
        const int v = c.cuts[i] - c.k;
        incidence.push_back((1ULL << v) | (1ULL << (backbone + i)));
    }
    const int m = static_cast<int>(incidence.size());
    assert(m == vertices - 1);
    if (vertices > 63)
        throw budget_error("component too large for the brute-force signature");
    const std::uint64_t full = (vertices == 64) ? ~0ULL : (1ULL << vertices) - 1;
    int signature = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::uint64_t covered = 0;
        for (int e = 0; e < m; ++e)
            if (mask & (1ULL << e)) covered |= incidence[e];
        if (covered == full)
            signature += (__builtin_popcountll(mask) % 2 == 0) ? 1 : -1;
    }
    return signature;
}

int signature_bruteforce(const PartitionGraph& g, int edge_cap) {
    if (g.total_edges > edge_cap)
        throw budget_error("graph has " + std::to_string(g.total_edges) +
                           " edges, above the brute-force cap of " + std::to_string(edge_cap));
    /* Components choose their covering subsets independently, so the signed
     * counts multiply. */
    int signature = 1;
    for (const Component& c : g.components) {
        signature *= component_signature_bruteforce(c);
        if (signature == 0) break;
    }
    return signature;
}

std::vector<int> component_sig(const Component& c) {
    validate_component(c);
    if (c.cuts.empty()) return {c.n - c.k};
    std::vector<int> lengths;
    lengths.push_back(c.cuts.front() - c.k + 1);
    for (std::size_t i = 1; i < c.cuts.size(); ++i)
        lengths.push_back(c.cuts[i] - c.cuts[i - 1] + 2);
    lengths.push_back(c.n - c.cuts.back() + 1);
    return lengths;
}

SignatureMultiset sig_multiset(const PartitionGraph& g) {
    SignatureMultiset sig;
    for (const Component& c : g.components) {
        const auto lengths = component_sig(c);
        sig.elements.insert(sig.elements.end(), lengths.begin(), lengths.end());
    }
    std::sort(sig.elements.begin(), sig.elements.end());
    return sig;
}

std::pair<int, SignDiagnostics> signature_closed(const PartitionGraph& g) {
    SignDiagnostics d;
    for (const Component& c : g.components) {
        d.s += static_cast<int>(c.cuts.size());
        for (int len : component_sig(c)) {
            if (len % 3 == 0) d.zero_flag = true;
            if (len % 3 == 1) ++d.t;
        }
    }
    const int sig = d.zero_flag ? 0 : ((d.t + d.s) % 2 == 0 ? 1 : -1);
    return {sig, d};
}

int component_signature_product(const Component& c) {
    int signature = (c.cuts.size() % 2 == 0) ? 1 : -1;
    for (int len : component_sig(c)) signature *= chain_sign(len);
    return signature;
}

bool is_admissible(const NeighborlyPartition& np) {
    return !signature_closed(build_graph(np)).second.zero_flag;
}

int sign(const NeighborlyPartition& np) {
    const auto [sig, diag] = signature_closed(build_graph(np));
    if (diag.zero_flag)
        throw std::domain_error("partition is not admissible: its signature is 0");
    return sig;
}

std::vector<int> chain_deletions(int length, PruneRule rule) {
    if (length < 1) throw std::domain_error("chain length must be >= 1");
    if (length % 3 == 0)
        throw std::domain_error("chain length " + std::to_string(length) +
                                " is divisible by 3; the partition is not admissible");
    std::vector<int> deleted;
    if (length % 3 == 2) {
        for (int e = 3; e <= length - 2; e += 3) deleted.push_back(e);
        return deleted;
    }
    if (length % 6 == 1) {  // length = 6m+1: m edges before the shift, m after
        const int m = length / 6;
        for (int i = 1; i <= m; ++i) deleted.push_back(3 * i);
        for (int i = 0; i < m; ++i) deleted.push_back(3 * m + 2 + 3 * i);
        return deleted;
    }
    const int m = (length - 4) / 6;  // length = 6m+4
    if (rule == PruneRule::literal) {
        for (int i = 1; i <= m; ++i) deleted.push_back(3 * i);
        for (int i = 0; i <= m; ++i) deleted.push_back(3 * m + 2 + 3 * i);
    } else {
        for (int i = 1; i <= m + 1; ++i) deleted.push_back(3 * i);
        for (int i = 0; i < m; ++i) deleted.push_back(3 * m + 5 + 3 * i);
    }
    return deleted;
}

namespace {

/* An edge of one component: backbone label -> label+1, or the hanging edge
 * at label. Uniquely keyed by (label, hanging) within the component. */
struct EdgeRef {
    int label;
    bool hanging;

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/* The chains cut out of a component by its hanging edges, each as an
 * ordered edge list. Consecutive chains share their boundary hanging edge. */
std::vector<std::vector<EdgeRef>> component_chains(const Component& c) {
    std::vector<std::vector<EdgeRef>> chains;
    if (c.cuts.empty()) {
        std::vector<EdgeRef> chain;
        for (int v = c.k; v < c.n; ++v) chain.push_back({v, false});
        chains.push_back(std::move(chain));
        return chains;
    }
    std::vector<EdgeRef> chain;
    for (int v = c.k; v < c.cuts.front(); ++v) chain.push_back({v, false});
    chain.push_back({c.cuts.front(), true});
    chains.push_back(std::move(chain));
    for (std::size_t i = 1; i < c.cuts.size(); ++i) {
        chain = {{c.cuts[i - 1], true}};
        for (int v = c.cuts[i - 1]; v < c.cuts[i]; ++v) chain.push_back({v, false});
        chain.push_back({c.cuts[i], true});
        chains.push_back(std::move(chain));
    }
    chain = {{c.cuts.back(), true}};
    for (int v = c.cuts.back(); v < c.n; ++v) chain.push_back({v, false});
    chains.push_back(std::move(chain));
    return chains;
}

std::string describe_component(const PrunedComponent& pc) {
    std::ostringstream os;
    os << "labels {";
    for (std::size_t i = 0; i < pc.labels.size(); ++i)
        os << (i ? "," : "") << pc.labels[i];
    os << "} edges {";
    for (std::size_t i = 0; i < pc.edges.size(); ++i)
        os << (i ? "," : "") << "(" << pc.edges[i].first << "," << pc.edges[i].second << ")";
    os << "}";
    return os.str();
}

}  // namespace

PrunedGraph prune(const PartitionGraph& g, PruneRule rule) {
    PrunedGraph pg;
    for (const Component& c : g.components) {
        validate_component(c);
        const auto lengths = component_sig(c);
        for (int len : lengths)
            if (len % 3 == 0)
                throw std::domain_error("chain length " + std::to_string(len) +
                                        " divisible by 3; cannot prune an inadmissible graph");
        std::set<EdgeRef> deleted;
        for (const auto& chain : component_chains(c)) {
            for (int idx : chain_deletions(static_cast<int>(chain.size()), rule)) {
                const EdgeRef& e = chain[static_cast<std::size_t>(idx) - 1];
                if (e.hanging)
                    throw std::logic_error("deletion rule selected a hanging edge");
                deleted.insert(e);
            }
        }

        /* Rebuild the component's kept edges on vertices (label, copy):
         * copy 0 is the backbone vertex, copy 1 the duplicate of a cut. */
        using Vertex = std::pair<int, int>;
        std::map<Vertex, std::vector<Vertex>> adj;
        for (int v = c.k; v <= c.n; ++v) adj[{v, 0}];
        for (int a : c.cuts) adj[{a, 1}];
        int kept = 0;
        auto connect = [&](Vertex u, Vertex v) {
            adj[u].push_back(v);
            adj[v].push_back(u);
            ++kept;
        };
        for (int v = c.k; v < c.n; ++v)
            if (!deleted.count({v, false})) connect({v, 0}, {v + 1, 0});
        for (int a : c.cuts) connect({a, 0}, {a, 1});  // hanging edges always survive

        std::set<Vertex> seen;
        for (const auto& entry : adj) {
            const Vertex start = entry.first;
            if (seen.count(start)) continue;
            PrunedComponent pc;
            std::vector<Vertex> stack{start};
            seen.insert(start);
            while (!stack.empty()) {
                const Vertex u = stack.back();
                stack.pop_back();
                pc.labels.push_back(u.first);
                for (const Vertex& v : adj[u]) {
                    if (u < v) pc.edges.emplace_back(u.first, v.first);
                    if (!seen.count(v)) {
                        seen.insert(v);
                        stack.push_back(v);
                    }
                }
            }
            std::sort(pc.labels.begin(), pc.labels.end());
            for (auto& e : pc.edges)
                if (e.first > e.second) std::swap(e.first, e.second);
            std::sort(pc.edges.begin(), pc.edges.end());
            pg.components.push_back(std::move(pc));
        }
        pg.edge_count += kept;
        pg.vertex_count += (c.n - c.k + 1) + static_cast<int>(c.cuts.size());
    }
    std::sort(pg.components.begin(), pg.components.end(),
              [](const PrunedComponent& a, const PrunedComponent& b) {
                  return a.labels < b.labels;
              });
    return pg;
}

std::vector<ComponentType> classify_components(const PrunedGraph& pg) {
    using Labels = std::vector<int>;
    using Edges = std::vector<std::pair<int, int>>;
    static const std::vector<std::tuple<Labels, Edges, ComponentType>> kTypes = {
        {{0, 0}, {{0, 0}}, ComponentType::t_aa},
        {{0, 1}, {{0, 1}}, ComponentType::t_ab},
        {{0, 0, 1}, {{0, 0}, {0, 1}}, ComponentType::t_aab},
        {{0, 1, 1}, {{0, 1}, {1, 1}}, ComponentType::t_abb},
        {{0, 1, 2}, {{0, 1}, {1, 2}}, ComponentType::t_abc},
        {{0, 1, 1, 2}, {{0, 1}, {1, 1}, {1, 2}}, ComponentType::t_abbc},
    };
    std::vector<ComponentType> result;
    for (const PrunedComponent& pc : pg.components) {
        if (pc.labels.empty())
            throw classify_error("empty pruned component");
        const int base = pc.labels.front();
        Labels rel_labels;
        for (int l : pc.labels) rel_labels.push_back(l - base);
        Edges rel_edges;
        for (const auto& [a, b] : pc.edges) rel_edges.emplace_back(a - base, b - base);
        std::sort(rel_edges.begin(), rel_edges.end());
        bool matched = false;
        for (const auto& [labels, edges, type] : kTypes) {
            if (rel_labels == labels && rel_edges == edges) {
                result.push_back(type);
                matched = true;
                break;
            }
        }
        if (!matched)
            throw classify_error("pruned component matches none of the six types: " +
                                 describe_component(pc));
    }
    return result;
}

int sign_via_pruned(const NeighborlyPartition& np, PruneRule rule) {
    const PrunedGraph pg = prune(build_graph(np), rule);
    return pg.edge_count % 2 == 0 ? 1 : -1;
}

}  // namespace nbly
