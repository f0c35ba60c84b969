#include "minkorder/graph.hpp"

#include <map>
#include <vector>

#include "minkorder/errors.hpp"

namespace minkorder {

void Graph::validate() const {
    if (k < 0) throw input_error("graph with negative vertex count");
    for (const auto& [i, j] : edges)
        if (i < 0 || j >= k || i >= j)
            throw input_error("graph edge out of range or not in canonical i<j form");
}

namespace {

using GraphKey = std::pair<int, std::vector<std::pair<int, int>>>;

GraphKey key_of(const Graph& g) {
    return {g.k, {g.edges.begin(), g.edges.end()}};
}

IntPoly chrom_rec(const Graph& g, std::map<GraphKey, IntPoly>& memo) {
    if (g.edges.empty()) return IntPoly::monomial(BigInt(1), g.k);
    const GraphKey key = key_of(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const auto [u, v] = *g.edges.begin();

    Graph del = g;
    del.edges.erase(del.edges.begin());

    // Contract v into u; vertices above v shift down by one.
    Graph con;
    con.k = g.k - 1;
    auto remap = [&](int w) {
        if (w == v) return u;
        return w > v ? w - 1 : w;
    };
    for (const auto& [a, b] : g.edges) {
        int x = remap(a), y = remap(b);
        if (x == y) continue; // the contracted edge itself
        con.edges.insert({std::min(x, y), std::max(x, y)});
    }

    IntPoly result = chrom_rec(del, memo) - chrom_rec(con, memo);
    memo.emplace(key, result);
    return result;
}

} // namespace

IntPoly chromatic_polynomial(const Graph& g) {
    g.validate();
    std::map<GraphKey, IntPoly> memo;
    return chrom_rec(g, memo);
}

} // namespace minkorder
