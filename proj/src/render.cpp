#include "nbly/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nbly {

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + item + "'");
        }
        if (pos != item.size())
            throw std::invalid_argument("not an integer: '" + item + "'");
        out.push_back(value);
    }
    return out;
}

/* Rows of the two-row layout, built against per-label column offsets. */
struct Canvas {
    std::string top, mid, bot;

    void put(std::string& row, std::size_t col, const std::string& text) {
        if (row.size() < col + text.size()) row.resize(col + text.size(), ' ');
        for (std::size_t i = 0; i < text.size(); ++i) row[col + i] = text[i];
    }
};

std::string render_rows(const NeighborlyPartition& np,
                        const std::set<std::pair<int, int>>& kept_backbone) {
    Canvas c;
    std::size_t col = 0;
    for (std::size_t i = 0; i < np.mu1.size(); ++i) {
        const int v = np.mu1[i];
        const std::string label = std::to_string(v);
        if (i > 0) {
            if (np.mu1[i - 1] + 1 == v) {
                const bool kept = kept_backbone.count({v - 1, v}) > 0;
                c.put(c.top, col, kept ? "--" : "  ");
                col += 2;
            } else {
                col += 3;  // gap between runs
            }
        }
        c.put(c.top, col, label);
        if (std::binary_search(np.mu2.begin(), np.mu2.end(), v)) {
            c.put(c.mid, col, "|");
            c.put(c.bot, col, label);
        }
        col += label.size();
    }
    std::string out = c.top;
    if (!np.mu2.empty()) out += "\n" + c.mid + "\n" + c.bot;
    return out;
}

}  // namespace

std::string format_partition(const NeighborlyPartition& np) {
    return join(np.mu1) + "/" + join(np.mu2);
}

NeighborlyPartition parse_partition(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        const auto parts = parse_int_list(text);
        return decompose(parts);
    }
    return make_neighborly(parse_int_list(text.substr(0, slash)),
                           parse_int_list(text.substr(slash + 1)));
}

std::string format_multiset(const SignatureMultiset& sig) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < sig.elements.size(); ++i)
        os << (i ? "," : "") << sig.elements[i];
    os << "}";
    return os.str();
}

std::string render_graph(const NeighborlyPartition& np) {
    std::set<std::pair<int, int>> all;
    for (std::size_t i = 1; i < np.mu1.size(); ++i)
        if (np.mu1[i - 1] + 1 == np.mu1[i]) all.insert({np.mu1[i - 1], np.mu1[i]});
    return render_rows(np, all);
}

std::string render_pruned(const NeighborlyPartition& np, const PrunedGraph& pg) {
    std::set<std::pair<int, int>> kept;
    for (const PrunedComponent& pc : pg.components)
        for (const auto& e : pc.edges)
            if (e.first != e.second) kept.insert(e);
    return render_rows(np, kept);
}

}  // namespace nbly
