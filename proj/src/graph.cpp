// graph.cpp
#include "racklab/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace racklab {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0), count_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = Element(i);
}

Element DisjointSets::find(Element x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool DisjointSets::unite(Element x, Element y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    --count_;
    return true;
}

ColoredDigraph ColoredDigraph::from_edges(std::size_t n, std::vector<Element> colors,
                                          std::vector<ColoredEdge> edges) {
    std::sort(colors.begin(), colors.end());
    if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) {
        throw std::invalid_argument("duplicate colour");
    }
    std::set<std::pair<Element, Element>> tails, heads;
    for (const auto& e : edges) {
        if (e.from >= n || e.to >= n) throw std::invalid_argument("edge endpoint out of range");
        if (e.from == e.to) throw std::invalid_argument("loop at vertex " + std::to_string(e.from));
        if (!std::binary_search(colors.begin(), colors.end(), e.color)) {
            throw std::invalid_argument("edge uses unknown colour " + std::to_string(e.color));
        }
        if (!tails.insert({e.color, e.from}).second) {
            throw std::invalid_argument("two edges of one colour leave vertex " + std::to_string(e.from));
        }
        if (!heads.insert({e.color, e.to}).second) {
            throw std::invalid_argument("two edges of one colour enter vertex " + std::to_string(e.to));
        }
    }
    return ColoredDigraph(n, std::move(colors), std::move(edges));
}

EdgeSet ColoredDigraph::edge_set() const {
    EdgeSet out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.from, e.to);
    return out;
}

ColoredDigraph build_graph(std::size_t n, const std::map<Element, Permutation>& sigma) {
    std::vector<Element> colors;
    std::vector<ColoredEdge> edges;
    for (const auto& [c, p] : sigma) {
        if (p.size() != n || !is_bijection(p.images())) {
            throw std::invalid_argument("colour " + std::to_string(c) + " is not a permutation of size " +
                                        std::to_string(n));
        }
        colors.push_back(c);
        for (Element u = 0; u < n; ++u) {
            if (p(u) != u) edges.push_back({u, p(u), c});
        }
    }
    return ColoredDigraph(n, std::move(colors), std::move(edges));
}

ColoredDigraph rack_graph(const Rack& rack, std::span<const Element> colors) {
    std::map<Element, Permutation> sigma;
    for (Element j : colors) sigma.emplace(j, rack.map(j));
    return build_graph(rack.order(), sigma);
}

ColoredDigraph rack_graph(const Rack& rack) {
    std::vector<Element> all(rack.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = Element(i);
    return rack_graph(rack, all);
}

EdgeSet colour_edges(const Rack& rack, Element j) {
    EdgeSet out;
    const Permutation& f = rack.map(j);
    for (Element u = 0; u < rack.order(); ++u) {
        if (f(u) != u) out.emplace_back(u, f(u));
    }
    return out;
}

std::size_t SimpleDigraph::edge_count() const {
    std::size_t m = 0;
    for (const auto& o : out) m += o.size();
    return m;
}

bool SimpleDigraph::has_edge(Element u, Element v) const {
    return std::binary_search(out[u].begin(), out[u].end(), v);
}

SimpleDigraph reduced_graph(const ColoredDigraph& g) {
    SimpleDigraph s;
    s.n = g.vertex_count();
    s.out.assign(s.n, {});
    for (const auto& e : g.edges()) s.out[e.from].push_back(e.to);
    for (auto& o : s.out) {
        std::sort(o.begin(), o.end());
        o.erase(std::unique(o.begin(), o.end()), o.end());
    }
    return s;
}

ComponentStructure components(std::size_t n, const EdgeSet& edges) {
    DisjointSets dsu(n);
    for (const auto& [u, v] : edges) dsu.unite(u, v);

    ComponentStructure cs;
    cs.part_of.assign(n, 0);
    cs.eta.assign(n + 1, 0);
    std::vector<std::size_t> index_of_root(n, SIZE_MAX);
    // Vertices are visited in increasing order, so parts come out ordered by
    // their minimum vertex and each part is sorted.
    for (Element v = 0; v < n; ++v) {
        const Element r = dsu.find(v);
        if (index_of_root[r] == SIZE_MAX) {
            index_of_root[r] = cs.parts.size();
            cs.parts.emplace_back();
        }
        cs.part_of[v] = index_of_root[r];
        cs.parts[index_of_root[r]].push_back(v);
    }
    cs.cp = cs.parts.size();
    for (const auto& p : cs.parts) cs.eta[p.size()] += p.size();
    return cs;
}

ComponentStructure components(const ColoredDigraph& g) {
    return components(g.vertex_count(), g.edge_set());
}

std::size_t out_degree(const ColoredDigraph& g, Element v) {
    std::vector<Element> heads;
    for (const auto& e : g.edges()) {
        if (e.from == v) heads.push_back(e.to);
    }
    std::sort(heads.begin(), heads.end());
    return std::size_t(std::unique(heads.begin(), heads.end()) - heads.begin());
}

std::vector<std::size_t> out_degrees(const ColoredDigraph& g) {
    const SimpleDigraph s = reduced_graph(g);
    std::vector<std::size_t> d(s.n);
    for (std::size_t v = 0; v < s.n; ++v) d[v] = s.out[v].size();
    return d;
}

std::vector<std::size_t> irregular_components(const ColoredDigraph& g) {
    const ComponentStructure cs = components(g);
    const std::vector<std::size_t> d = out_degrees(g);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cs.parts.size(); ++i) {
        const VertexSet& part = cs.parts[i];
        for (Element v : part) {
            if (d[v] != d[part.front()]) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

bool directed_path_exists(const ColoredDigraph& g, Element u, Element v) {
    if (u == v) throw std::invalid_argument("directed_path_exists requires u != v");
    const SimpleDigraph s = reduced_graph(g);
    std::vector<bool> seen(s.n, false);
    std::deque<Element> queue{u};
    seen[u] = true;
    while (!queue.empty()) {
        const Element w = queue.front();
        queue.pop_front();
        for (Element x : s.out[w]) {
            if (x == v) return true;
            if (!seen[x]) {
                seen[x] = true;
                queue.push_back(x);
            }
        }
    }
    return false;
}

bool undirected_path_exists(const ColoredDigraph& g, Element u, Element v) {
    DisjointSets dsu(g.vertex_count());
    for (const auto& e : g.edges()) dsu.unite(e.from, e.to);
    return dsu.find(u) == dsu.find(v);
}

std::size_t count_components_with(std::size_t n, const EdgeSet& base, const EdgeSet& extra) {
    DisjointSets dsu(n);
    for (const auto& [u, v] : base) dsu.unite(u, v);
    for (const auto& [u, v] : extra) dsu.unite(u, v);
    return dsu.count();
}

std::size_t count_components_with(const ColoredDigraph& g, const EdgeSet& extra) {
    return count_components_with(g.vertex_count(), g.edge_set(), extra);
}

std::vector<VertexSet> merged_components(std::size_t n, const EdgeSet& base, const EdgeSet& extra) {
    const ComponentStructure cs = components(n, base);
    std::vector<bool> merged(cs.cp, false);
    for (const auto& [u, v] : extra) {
        if (cs.part_of[u] != cs.part_of[v]) {
            merged[cs.part_of[u]] = true;
            merged[cs.part_of[v]] = true;
        }
    }
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < cs.cp; ++i) {
        if (merged[i]) out.push_back(cs.parts[i]);
    }
    return out;
}

std::vector<VertexSet> merged_components(const ColoredDigraph& g, const EdgeSet& extra) {
    return merged_components(g.vertex_count(), g.edge_set(), extra);
}

std::string to_dot(const ColoredDigraph& g) {
    std::string out = "digraph G {\n";
    for (Element v = 0; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (const auto& e : g.edges()) {
        out += "  " + std::to_string(e.from) + " -> " + std::to_string(e.to) + " [label=\"" +
               std::to_string(e.color) + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace racklab
