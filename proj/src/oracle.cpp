#include "supergrid/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace supergrid {

namespace {

struct MiniGraph {
    std::vector<Coord> verts; // ascending coordinate order
    std::unordered_map<Coord, int> index;
    std::vector<std::vector<int>> nbrs; // ascending
    std::vector<std::uint32_t> adj;
    std::uint32_t full = 0;

    explicit MiniGraph(const Shape& shape) {
        verts = shape.vertices();
        std::sort(verts.begin(), verts.end());
        for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
        nbrs.resize(verts.size());
        adj.resize(verts.size(), 0);
        for (size_t i = 0; i < verts.size(); ++i) {
            for (Coord u : shape.neighborsOf(verts[i])) nbrs[i].push_back(index.at(u));
            std::sort(nbrs[i].begin(), nbrs[i].end());
            for (int j : nbrs[i]) adj[i] |= std::uint32_t(1) << j;
        }
        full = verts.size() == 32 ? ~std::uint32_t(0)
                                  : (std::uint32_t(1) << verts.size()) - 1;
    }

    int at(Coord v) const {
        auto it = index.find(v);
        if (it == index.end()) throw ShapeError("vertex outside the shape");
        return it->second;
    }

    /// Vertices reachable from the seed set walking only `avail` vertices.
    std::uint32_t closure(std::uint32_t seed, std::uint32_t avail) const {
        std::uint32_t reach = seed & avail;
        std::uint32_t frontier = reach;
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v];
            }
            next &= avail & ~reach;
            reach |= next;
            frontier = next;
        }
        return reach;
    }
};

void checkBudget(const Shape& shape, const OracleBudget& budget) {
    if (budget.maxVertices > 32)
        throw BudgetError("oracle supports at most 32 vertices");
    if (shape.size() > budget.maxVertices)
        throw BudgetError("instance exceeds the oracle vertex budget");
}

struct NodeCounter {
    long long nodes = 0;
    long long cap;

    explicit NodeCounter(long long c) : cap(c) {}
    void tick() {
        if (++nodes > cap) throw BudgetError("oracle exceeded the node-expansion budget");
    }
};

struct LongestSearch {
    const MiniGraph& g;
    int t;
    NodeCounter counter;
    int best = 0;
    std::vector<int> bestPath;
    std::vector<int> cur;

    LongestSearch(const MiniGraph& gg, int tt, long long cap) : g(gg), t(tt), counter(cap) {}

    void dfs(int u, std::uint32_t visited) {
        counter.tick();
        if (u == t) {
            if (static_cast<int>(cur.size()) > best) {
                best = static_cast<int>(cur.size());
                bestPath = cur;
            }
            return; // a simple path cannot pass beyond its endpoint
        }
        std::uint32_t avail = g.full & ~visited;
        std::uint32_t reach = g.closure(g.adj[u] & avail, avail);
        if (!(reach & (std::uint32_t(1) << t))) return;
        int bound = static_cast<int>(cur.size()) + std::popcount(reach);
        if (bound <= best) return;
        for (int w : g.nbrs[u]) {
            std::uint32_t bw = std::uint32_t(1) << w;
            if (!(avail & bw)) continue;
            cur.push_back(w);
            dfs(w, visited | bw);
            cur.pop_back();
        }
    }
};

struct HamSearch {
    const MiniGraph& g;
    int t; // -1 means cycle search back to vertex 0
    NodeCounter counter;
    std::unordered_set<std::uint64_t> dead;

    HamSearch(const MiniGraph& gg, int tt, long long cap) : g(gg), t(tt), counter(cap) {}

    bool feasible(int u, std::uint32_t avail) const {
        std::uint32_t reach = g.closure(g.adj[u] & avail, avail);
        if (reach != avail) return false;
        std::uint32_t support = avail | (std::uint32_t(1) << u);
        if (t < 0) support |= 1; // cycles may close back into vertex 0
        std::uint32_t f = avail;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            int need = (v == t) ? 1 : 2;
            if (std::popcount(g.adj[v] & support) < need) return false;
        }
        return true;
    }

    bool dfs(int u, std::uint32_t visited) {
        counter.tick();
        if (visited == g.full) {
            if (t >= 0) return u == t;
            return (g.adj[u] >> 0) & 1; // closes back to vertex 0
        }
        if (t >= 0 && u == t) return false;
        std::uint32_t avail = g.full & ~visited;
        std::uint64_t key = (std::uint64_t(visited) << 5) | std::uint64_t(u);
        if (dead.count(key)) return false;
        if (!feasible(u, avail)) {
            dead.insert(key);
            return false;
        }
        for (int w : g.nbrs[u]) {
            std::uint32_t bw = std::uint32_t(1) << w;
            if (!(avail & bw)) continue;
            if (dfs(w, visited | bw)) return true;
        }
        dead.insert(key);
        return false;
    }
};

} // namespace

LongestResult oracleLongest(const Shape& shape, Coord s, Coord t, OracleBudget budget) {
    checkBudget(shape, budget);
    if (s == t) throw ShapeError("oracle requires distinct endpoints");
    MiniGraph g(shape);
    int si = g.at(s), ti = g.at(t);
    LongestSearch search(g, ti, budget.maxNodesExpanded);
    search.cur.push_back(si);
    search.dfs(si, std::uint32_t(1) << si);
    LongestResult r;
    r.length = search.best;
    r.witness.v.reserve(search.bestPath.size());
    for (int i : search.bestPath) r.witness.v.push_back(g.verts[i]);
    return r;
}

bool oracleHpExists(const Shape& shape, Coord s, Coord t, OracleBudget budget) {
    checkBudget(shape, budget);
    if (s == t) throw ShapeError("oracle requires distinct endpoints");
    MiniGraph g(shape);
    if (g.verts.size() == 1) return false;
    int si = g.at(s), ti = g.at(t);
    HamSearch search(g, ti, budget.maxNodesExpanded);
    return search.dfs(si, std::uint32_t(1) << si);
}

bool oracleHcExists(const Shape& shape, OracleBudget budget) {
    checkBudget(shape, budget);
    MiniGraph g(shape);
    if (g.verts.size() < 3) return false;
    HamSearch search(g, -1, budget.maxNodesExpanded);
    return search.dfs(0, 1);
}

std::optional<Path> oracleHpWithEdges(const Shape& shape, Coord s, Coord t,
                                      const std::vector<Edge>& required, OracleBudget budget) {
    checkBudget(shape, budget);
    if (s == t) throw ShapeError("oracle requires distinct endpoints");
    MiniGraph g(shape);
    int si = g.at(s), ti = g.at(t);

    std::vector<std::uint32_t> req(g.verts.size(), 0);
    for (const Edge& e : required) {
        int i = g.at(e.a), j = g.at(e.b);
        if (!(g.adj[i] & (std::uint32_t(1) << j)))
            throw ShapeError("required edge endpoints are not adjacent in the shape");
        req[i] |= std::uint32_t(1) << j;
        req[j] |= std::uint32_t(1) << i;
    }
    for (size_t v = 0; v < g.verts.size(); ++v) {
        int cap = (static_cast<int>(v) == si || static_cast<int>(v) == ti) ? 1 : 2;
        if (std::popcount(req[v]) > cap) return std::nullopt;
    }

    NodeCounter counter(budget.maxNodesExpanded);
    std::vector<int> cur{si};
    std::vector<int> out;

    // leavingOk: extending u -> w finalizes u's path edges {prev(u), w}
    auto satisfied = [&](int u, std::uint32_t pathEdgesOfU) {
        return (req[u] & ~pathEdgesOfU) == 0;
    };

    std::uint32_t fullbit = g.full;
    auto dfs = [&](auto&& self, int u, std::uint32_t visited, std::uint32_t prevBit) -> bool {
        counter.tick();
        if (visited == fullbit) {
            return u == ti && satisfied(u, prevBit);
        }
        if (u == ti) return false;
        std::uint32_t avail = fullbit & ~visited;
        std::uint32_t reach = g.closure(g.adj[u] & avail, avail);
        if (reach != avail) return false;
        for (int w : g.nbrs[u]) {
            std::uint32_t bw = std::uint32_t(1) << w;
            if (!(avail & bw)) continue;
            if (!satisfied(u, prevBit | bw)) continue;
            cur.push_back(w);
            if (self(self, w, visited | bw, std::uint32_t(1) << u)) return true;
            cur.pop_back();
        }
        return false;
    };

    if (g.verts.size() >= 2 && dfs(dfs, si, std::uint32_t(1) << si, 0)) {
        Path p;
        p.v.reserve(cur.size());
        for (int i : cur) p.v.push_back(g.verts[i]);
        return p;
    }
    return std::nullopt;
}

} // namespace supergrid
