#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "face_lattice.hpp"
#include "matching.hpp"

namespace hypermorse {

// The directed Hasse diagram H(V): nodes are all faces including the empty
// face; every cover arc points towards the larger cell unless the pair is
// matched, in which case it points the other way.
class HasseDiagram {
public:
    struct Arc {
        std::int32_t from;
        std::int32_t to;
        bool matched;
    };

    HasseDiagram(std::vector<FaceLabel> nodes, std::vector<int> dims, std::vector<Arc> arcs)
        : nodes_(std::move(nodes)), dims_(std::move(dims)), arcs_(std::move(arcs)),
          out_(nodes_.size()) {
        for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);
        for (const Arc& a : arcs_) out_.at(static_cast<std::size_t>(a.from)).push_back(a.to);
        for (auto& targets : out_) std::sort(targets.begin(), targets.end());
    }

    std::size_t node_count() const { return nodes_.size(); }
    const std::vector<FaceLabel>& nodes() const { return nodes_; }
    int dim_of(std::size_t i) const { return dims_.at(i); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<std::int32_t>& out(std::size_t i) const { return out_.at(i); }
    const std::vector<std::vector<std::int32_t>>& out_adjacency() const { return out_; }

    std::optional<std::size_t> index_of(const FaceLabel& f) const {
        const auto it = index_.find(f);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Same nodes, every arc flipped. Cycle existence is unaffected.
    HasseDiagram reversed() const {
        std::vector<Arc> flipped;
        flipped.reserve(arcs_.size());
        for (const Arc& a : arcs_) flipped.push_back({a.to, a.from, a.matched});
        return HasseDiagram(nodes_, dims_, std::move(flipped));
    }

private:
    std::vector<FaceLabel> nodes_;
    std::vector<int> dims_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::int32_t>> out_;
    std::map<FaceLabel, std::size_t> index_;
};

namespace detail {

inline HasseDiagram build_hasse_impl(const HypersimplexParams& p,
                                     const MorseMatching* matching) {
    const FaceSet faces = enumerate_faces(p);
    std::vector<FaceLabel> nodes;
    std::vector<int> dims;
    nodes.reserve(faces.total_cells());
    for (int d = -1; d <= faces.top_dimension(); ++d) {
        for (const FaceLabel& f : faces.of_dim(d)) {
            nodes.push_back(f);
            dims.push_back(d);
        }
    }
    std::map<FaceLabel, std::int32_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        index.emplace(nodes[i], static_cast<std::int32_t>(i));

    if (matching) {
        for (const auto& pr : matching->pairs())
            for (const FaceLabel* f : {&pr.lower, &pr.upper})
                if (index.find(*f) == index.end())
                    throw std::invalid_argument("matching cell " + to_text(*f) +
                                                " is not a face of this hypersimplex");
    }

    std::vector<HasseDiagram::Arc> arcs;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (dims[i] < 0) continue;
        const std::int32_t upper = static_cast<std::int32_t>(i);
        for (const FaceLabel& g : facets(p, nodes[i])) {
            const std::int32_t lower = index.at(g);
            if (matching && matching->is_matched_pair(g, nodes[i]))
                arcs.push_back({upper, lower, true});
            else
                arcs.push_back({lower, upper, false});
        }
    }
    return HasseDiagram(std::move(nodes), std::move(dims), std::move(arcs));
}

}  // namespace detail

inline HasseDiagram build_hasse(const HypersimplexParams& p) {
    return detail::build_hasse_impl(p, nullptr);
}

inline HasseDiagram build_hasse(const HypersimplexParams& p, const MorseMatching& matching) {
    return detail::build_hasse_impl(p, &matching);
}

namespace detail {

// Iterative three-state depth-first search; returns a node-index cycle if
// one exists. Face counts grow combinatorially, so no recursion.
inline std::optional<std::vector<std::int32_t>> find_directed_cycle(
    std::size_t node_count, const std::vector<std::vector<std::int32_t>>& out) {
    enum : std::uint8_t { white, gray, black };
    std::vector<std::uint8_t> color(node_count, white);
    std::vector<std::int32_t> path;
    struct Frame {
        std::int32_t node;
        std::size_t next_edge;
    };
    std::vector<Frame> stack;

    for (std::size_t root = 0; root < node_count; ++root) {
        if (color[root] != white) continue;
        stack.push_back({static_cast<std::int32_t>(root), 0});
        color[root] = gray;
        path.push_back(static_cast<std::int32_t>(root));
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const auto& edges = out[static_cast<std::size_t>(fr.node)];
            if (fr.next_edge < edges.size()) {
                const std::int32_t next = edges[fr.next_edge++];
                if (color[static_cast<std::size_t>(next)] == gray) {
                    // back edge: the cycle is the path suffix starting at next
                    const auto begin =
                        std::find(path.begin(), path.end(), next);
                    return std::vector<std::int32_t>(begin, path.end());
                }
                if (color[static_cast<std::size_t>(next)] == white) {
                    color[static_cast<std::size_t>(next)] = gray;
                    stack.push_back({next, 0});
                    path.push_back(next);
                }
            } else {
                color[static_cast<std::size_t>(fr.node)] = black;
                stack.pop_back();
                path.pop_back();
            }
        }
    }
    return std::nullopt;
}

// Rotates a cycle so the smallest element comes first. Keeps the arc order.
template <typename T>
void rotate_min_first(std::vector<T>& cycle) {
    if (cycle.empty()) return;
    const auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
}

}  // namespace detail

// Searches H(V) for a directed cycle by exhaustive traversal. Returns a
// witness (faces in arc order, lexicographically smallest first) or nothing.
inline std::optional<std::vector<FaceLabel>> detect_cycle(const HasseDiagram& diagram) {
    const auto cycle =
        detail::find_directed_cycle(diagram.node_count(), diagram.out_adjacency());
    if (!cycle) return std::nullopt;

    // a directed cycle in a graded diagram alternates between two adjacent
    // dimensions; anything else means the diagram is malformed
    {
        std::set<int> dims;
        for (std::int32_t i : *cycle) dims.insert(diagram.dim_of(static_cast<std::size_t>(i)));
        if (dims.size() != 2 || *dims.rbegin() - *dims.begin() != 1)
            throw std::logic_error("cycle witness does not alternate between adjacent dimensions");
    }

    std::vector<FaceLabel> witness;
    witness.reserve(cycle->size());
    for (std::int32_t i : *cycle) witness.push_back(diagram.nodes()[static_cast<std::size_t>(i)]);
    detail::rotate_min_first(witness);
    return witness;
}

// An alternating path a0, b0, a1, ..., br, a_{r+1}: each (ai, bi) is a
// matched pair and each a_{i+1} is a facet of bi distinct from ai. Closed
// when the last cell equals the first.
struct VPath {
    std::vector<FaceLabel> cells;
};

// Independent acyclicity route: searches for a nontrivial closed path in
// the derived graph on upward-matched cells, where a steps to a' when a' is
// a facet of partner(a) other than a itself and a' is also matched upward.
inline std::optional<VPath> find_closed_vpath(const HypersimplexParams& p,
                                              const MorseMatching& matching) {
    std::vector<FaceLabel> lowers;
    for (const auto& pr : matching.pairs())
        if (!pr.lower.is_empty()) lowers.push_back(pr.lower);
    std::sort(lowers.begin(), lowers.end());
    std::map<FaceLabel, std::int32_t> index;
    for (std::size_t i = 0; i < lowers.size(); ++i)
        index.emplace(lowers[i], static_cast<std::int32_t>(i));

    std::vector<std::vector<std::int32_t>> out(lowers.size());
    for (std::size_t i = 0; i < lowers.size(); ++i) {
        const FaceLabel upper = *matching.partner_of(lowers[i]);
        for (const FaceLabel& g : facets(p, upper)) {
            if (g == lowers[i]) continue;
            const auto it = index.find(g);
            if (it != index.end()) out[i].push_back(it->second);
        }
        std::sort(out[i].begin(), out[i].end());
    }

    const auto cycle = detail::find_directed_cycle(lowers.size(), out);
    if (!cycle) return std::nullopt;

    std::vector<std::int32_t> rotated = *cycle;
    detail::rotate_min_first(rotated);
    VPath path;
    for (std::int32_t i : rotated) {
        const FaceLabel& a = lowers[static_cast<std::size_t>(i)];
        path.cells.push_back(a);
        path.cells.push_back(*matching.partner_of(a));
    }
    path.cells.push_back(lowers[static_cast<std::size_t>(rotated.front())]);
    return path;
}

// Unmatched-cell counts per dimension after removing some pairs from the
// matching. The empty cell is reported separately, never in the map.
struct MorseCensus {
    std::map<int, std::size_t> unmatched;  // dimension p >= 0 -> count
    bool empty_cell_unmatched = false;
};

inline MorseCensus unmatched_census(
    const HypersimplexParams& p, const MorseMatching& matching,
    const std::vector<std::pair<FaceLabel, FaceLabel>>& excluded_pairs) {
    for (const auto& [lo, up] : excluded_pairs)
        if (!matching.is_matched_pair(lo, up))
            throw std::invalid_argument("excluded pair (" + to_text(lo) + ", " + to_text(up) +
                                        ") is not in the matching");
    std::set<FaceLabel> excluded_cells;
    for (const auto& [lo, up] : excluded_pairs) {
        excluded_cells.insert(lo);
        excluded_cells.insert(up);
    }

    const FaceSet faces = enumerate_faces(p);
    MorseCensus census;
    for (int d = 0; d <= faces.top_dimension(); ++d) census.unmatched[d] = 0;
    for (int d = -1; d <= faces.top_dimension(); ++d) {
        for (const FaceLabel& f : faces.of_dim(d)) {
            const bool matched = matching.contains_cell(f) && excluded_cells.count(f) == 0;
            if (matched) continue;
            if (d < 0)
                census.empty_cell_unmatched = true;
            else
                ++census.unmatched[d];
        }
    }
    return census;
}

// Graphviz rendering of H(V): one node per face, rank-grouped by dimension,
// matched arcs bold. Output is deterministic.
inline std::string to_dot(const HasseDiagram& diagram) {
    std::ostringstream os;
    os << "digraph hasse {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext];\n";
    int current_dim = -2;
    bool open = false;
    for (std::size_t i = 0; i < diagram.node_count(); ++i) {
        if (diagram.dim_of(i) != current_dim) {
            if (open) os << " }\n";
            current_dim = diagram.dim_of(i);
            os << "  { rank=same;";
            open = true;
        }
        os << " \"" << to_text(diagram.nodes()[i]) << "\";";
    }
    if (open) os << " }\n";
    for (const auto& a : diagram.arcs()) {
        os << "  \"" << to_text(diagram.nodes()[static_cast<std::size_t>(a.from)]) << "\" -> \""
           << to_text(diagram.nodes()[static_cast<std::size_t>(a.to)]) << "\"";
        if (a.matched) os << " [style=bold]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace hypermorse
