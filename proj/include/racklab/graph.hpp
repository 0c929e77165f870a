// graph.hpp
//
// Edge-coloured loopless directed multigraphs G_Sigma built from families
// of permutations, their reduced simple graphs, weak components, and the
// component-merging calculus used by the codec.
#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "racklab/permutation.hpp"
#include "racklab/rack.hpp"

namespace racklab {

/// Sorted ascending, duplicate-free.
using VertexSet = std::vector<Element>;

/// Directed pairs (from, to), from != to. A multiset: duplicates are kept.
using EdgeSet = std::vector<std::pair<Element, Element>>;

struct ColoredEdge {
    Element from;
    Element to;
    Element color;

    friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n);

    Element find(Element x);
    /// Returns true if x and y were in different sets.
    bool unite(Element x, Element y);
    std::size_t count() const { return count_; }

private:
    std::vector<Element> parent_;
    std::vector<unsigned char> rank_;
    std::size_t count_;
};

class ColoredDigraph {
public:
    /// Validates looplessness, range, and that each colour is a partial
    /// injection with at most one edge per (from, color).
    static ColoredDigraph from_edges(std::size_t n, std::vector<Element> colors,
                                     std::vector<ColoredEdge> edges);

    std::size_t vertex_count() const { return n_; }
    const std::vector<Element>& colors() const { return colors_; }
    const std::vector<ColoredEdge>& edges() const { return edges_; }

    /// Uncoloured view of the edge multiset.
    EdgeSet edge_set() const;

private:
    friend ColoredDigraph build_graph(std::size_t n, const std::map<Element, Permutation>& sigma);
    ColoredDigraph(std::size_t n, std::vector<Element> colors, std::vector<ColoredEdge> edges)
        : n_(n), colors_(std::move(colors)), edges_(std::move(edges)) {}

    std::size_t n_ = 0;
    std::vector<Element> colors_;
    std::vector<ColoredEdge> edges_;
};

/// Edge (u, v, c) iff u != v and (u)sigma[c] = v. Throws
/// std::invalid_argument if a sigma[c] is not a permutation of size n.
ColoredDigraph build_graph(std::size_t n, const std::map<Element, Permutation>& sigma);

/// G_S: colours are the elements of `colors`, colour j uses f_j.
ColoredDigraph rack_graph(const Rack& rack, std::span<const Element> colors);
/// G_R, all n colours.
ColoredDigraph rack_graph(const Rack& rack);

/// Edges of colour j in G_R.
EdgeSet colour_edges(const Rack& rack, Element j);

/// G^0: out[u] lists the distinct heads of edges leaving u, ascending.
struct SimpleDigraph {
    std::size_t n = 0;
    std::vector<std::vector<Element>> out;

    std::size_t edge_count() const;
    bool has_edge(Element u, Element v) const;
};

SimpleDigraph reduced_graph(const ColoredDigraph& g);

struct ComponentStructure {
    /// Parts ordered by minimum vertex; each part sorted.
    std::vector<VertexSet> parts;
    /// eta[q] = number of vertices in components of size exactly q, q = 1..n
    /// (eta[0] is unused and always 0).
    std::vector<std::size_t> eta;
    std::size_t cp = 0;
    /// part_of[v] = index into parts.
    std::vector<std::size_t> part_of;
};

ComponentStructure components(const ColoredDigraph& g);
ComponentStructure components(std::size_t n, const EdgeSet& edges);

std::size_t out_degree(const ColoredDigraph& g, Element v);
std::vector<std::size_t> out_degrees(const ColoredDigraph& g);

/// Components of g on which the out-degree in the reduced graph is not
/// constant, by index into components(g).parts. Empty for every G_R.
std::vector<std::size_t> irregular_components(const ColoredDigraph& g);

/// Directed reachability; u != v required.
bool directed_path_exists(const ColoredDigraph& g, Element u, Element v);
/// Reachability in the underlying undirected graph.
bool undirected_path_exists(const ColoredDigraph& g, Element u, Element v);

/// cp(G + E), E adjoined as uncoloured edges.
std::size_t count_components_with(const ColoredDigraph& g, const EdgeSet& extra);
std::size_t count_components_with(std::size_t n, const EdgeSet& base, const EdgeSet& extra);

/// M(G, E): components of G having an E-edge to their complement,
/// ordered by minimum vertex.
std::vector<VertexSet> merged_components(const ColoredDigraph& g, const EdgeSet& extra);
std::vector<VertexSet> merged_components(std::size_t n, const EdgeSet& base, const EdgeSet& extra);

/// DOT text for debugging; edge labels are colours.
std::string to_dot(const ColoredDigraph& g);

}  // namespace racklab
