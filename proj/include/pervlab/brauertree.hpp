/*
   Copyright 2026 the pervlab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PERVLAB_BRAUERTREE_HPP
#define PERVLAB_BRAUERTREE_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "perversity.hpp"

namespace pervlab {

// ===========================================================================
// The tree model
// ===========================================================================

/// Vertices are the ordinary characters of the block (one exceptional vertex
/// standing for the exceptional family); edges are the simple modules. The
/// perversity labels live on the non-exceptional vertices and transfer to
/// edges through the leaf-stripping bijection.
struct TreeVertex {
    int id = 0;
    std::string name;
    bool exceptional = false;
    std::optional<long long> pi;
};

struct BrauerTree {
    std::vector<TreeVertex> vertices;
    std::vector<std::pair<int, int>> edges;
    /// Planar embedding: neighbours in cyclic order, for vertices where the
    /// order matters; vertices not listed use edge-list order.
    std::map<int, std::vector<int>> planar;
    std::optional<long long> multiplicity;  // exceptional multiplicity; empty = symbolic
    std::string block_name;
    std::vector<std::string> tags;

    const TreeVertex& vertex(int id) const {
        for (auto& v : vertices)
            if (v.id == id) return v;
        throw std::domain_error("BrauerTree: no vertex with id " + std::to_string(id));
    }

    int exceptional_vertex() const {
        for (auto& v : vertices)
            if (v.exceptional) return v.id;
        throw std::domain_error("BrauerTree: no exceptional vertex");
    }

    std::vector<int> neighbours(int id) const {
        auto it = planar.find(id);
        if (it != planar.end()) return it->second;
        std::vector<int> out;
        for (auto& [a, b] : edges) {
            if (a == id) out.push_back(b);
            if (b == id) out.push_back(a);
        }
        return out;
    }

    int degree_of(int id) const { return static_cast<int>(neighbours(id).size()); }

    /// Structural sanity: connected, acyclic, exactly one exceptional vertex.
    void validate() const {
        int exc = 0;
        for (auto& v : vertices) exc += v.exceptional ? 1 : 0;
        if (exc != 1) throw std::domain_error("BrauerTree: expected exactly one exceptional vertex");
        if (edges.size() + 1 != vertices.size())
            throw std::domain_error("BrauerTree: edge count must be vertex count minus one");
        // connectivity
        if (vertices.empty()) return;
        std::set<int> seen{vertices.front().id};
        std::deque<int> todo{vertices.front().id};
        while (!todo.empty()) {
            int v = todo.front();
            todo.pop_front();
            for (int w : neighbours(v))
                if (seen.insert(w).second) todo.push_back(w);
        }
        if (seen.size() != vertices.size()) throw std::domain_error("BrauerTree: not connected");
    }

    /// Distance of every vertex from the exceptional one.
    std::map<int, long long> depths() const {
        std::map<int, long long> depth;
        int root = exceptional_vertex();
        depth[root] = 0;
        std::deque<int> todo{root};
        while (!todo.empty()) {
            int v = todo.front();
            todo.pop_front();
            for (int w : neighbours(v))
                if (!depth.count(w)) {
                    depth[w] = depth[v] + 1;
                    todo.push_back(w);
                }
        }
        return depth;
    }
};

// ===========================================================================
// Edge bookkeeping: leaf stripping and the canonical perversity
// ===========================================================================

/// An edge together with the character it picks up under leaf stripping and
/// its distance data. f is the depth of the endpoint closest to the
/// exceptional vertex.
struct EdgeData {
    size_t edge_index;
    int va, vb;
    std::string character;     // name of the vertex stripped with this edge
    int character_vertex;
    long long f = 0;
    std::optional<long long> pi;   // transferred from the stripped vertex
    long long pi0 = 0;
};

/// Associates each edge with a non-exceptional vertex by repeatedly removing
/// a degree-1 non-exceptional vertex together with its unique edge. Always
/// exhausts all edges for a tree with one exceptional vertex.
inline std::vector<EdgeData> leaf_strip_bijection(const BrauerTree& tree) {
    tree.validate();
    std::map<int, std::vector<std::pair<int, size_t>>> adj;  // vertex -> (other, edge index)
    for (size_t e = 0; e < tree.edges.size(); ++e) {
        adj[tree.edges[e].first].push_back({tree.edges[e].second, e});
        adj[tree.edges[e].second].push_back({tree.edges[e].first, e});
    }
    auto depth = tree.depths();
    std::vector<EdgeData> out;
    std::set<int> removed;
    while (out.size() < tree.edges.size()) {
        bool progress = false;
        for (auto& v : tree.vertices) {
            if (v.exceptional || removed.count(v.id)) continue;
            std::vector<std::pair<int, size_t>> live;
            for (auto& [w, e] : adj[v.id])
                if (!removed.count(w)) live.push_back({w, e});
            if (live.size() != 1) continue;
            EdgeData ed;
            ed.edge_index = live.front().second;
            ed.va = v.id;
            ed.vb = live.front().first;
            ed.character = v.name;
            ed.character_vertex = v.id;
            ed.pi = v.pi;
            ed.f = std::min(depth.at(ed.va), depth.at(ed.vb));
            out.push_back(ed);
            removed.insert(v.id);
            progress = true;
            break;
        }
        if (!progress) throw std::logic_error("leaf_strip_bijection: stuck before exhausting all edges");
    }
    std::sort(out.begin(), out.end(), [](const EdgeData& a, const EdgeData& b) { return a.edge_index < b.edge_index; });
    return out;
}

/// The canonical perversity on edges: pi0 = r - f + offset with offset 0 or
/// 1, r the maximal f. When the tree carries pi labels the offset is pinned
/// by parity on an edge associated to a boundary vertex; otherwise offset 0.
inline std::vector<EdgeData> canonical_pi(const BrauerTree& tree, std::optional<int> force_offset = std::nullopt) {
    auto edges = leaf_strip_bijection(tree);
    long long r = 0;
    for (auto& e : edges) r = std::max(r, e.f);
    int offset = 0;
    if (force_offset) {
        offset = *force_offset;
    } else {
        for (auto& e : edges) {
            if (!e.pi) continue;
            if (tree.degree_of(e.character_vertex) == 1) {
                offset = static_cast<int>(((*e.pi - (r - e.f)) % 2 + 2) % 2);
                break;
            }
        }
    }
    for (auto& e : edges) e.pi0 = r - e.f + offset;
    return edges;
}

// ===========================================================================
// Perversity-vs-tree conditions
// ===========================================================================

struct TreeCheckReport {
    long long checked_pairs = 0;
    long long checked_edges = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// The two conditions a perversity function must satisfy against the tree:
/// (i) along every pair of edges sharing a non-exceptional vertex, the one
/// closer to the exceptional vertex carries strictly larger pi; (ii) pi -
/// pi0 is even on every edge and non-negative on edges associated to
/// boundary vertices.
inline TreeCheckReport verify_perverse_conditions(const BrauerTree& tree) {
    TreeCheckReport rep;
    auto edges = canonical_pi(tree);
    for (auto& e : edges)
        if (!e.pi) {
            rep.violations.push_back("edge " + std::to_string(e.edge_index) + " has no pi annotation");
            return rep;
        }

    // (i) strict increase toward the exceptional vertex
    for (size_t a = 0; a < edges.size(); ++a) {
        for (size_t b = a + 1; b < edges.size(); ++b) {
            int shared = -1;
            for (int va : {edges[a].va, edges[a].vb})
                for (int vb : {edges[b].va, edges[b].vb})
                    if (va == vb) shared = va;
            if (shared < 0 || tree.vertex(shared).exceptional) continue;
            if (edges[a].f == edges[b].f) continue;  // neither edge is closer: no constraint
            ++rep.checked_pairs;
            const EdgeData& closer = edges[a].f < edges[b].f ? edges[a] : edges[b];
            const EdgeData& farther = edges[a].f < edges[b].f ? edges[b] : edges[a];
            if (*closer.pi - *farther.pi <= 0)
                rep.violations.push_back("pi does not increase toward the exceptional vertex across " +
                                         farther.character + " -> " + closer.character);
        }
    }

    // (ii) parity everywhere, non-negativity at the boundary
    for (auto& e : edges) {
        ++rep.checked_edges;
        if ((*e.pi - e.pi0) % 2 != 0)
            rep.violations.push_back("pi - pi0 is odd on edge " + e.character);
        if (tree.degree_of(e.character_vertex) == 1 && *e.pi < e.pi0)
            rep.violations.push_back("pi < pi0 on boundary edge " + e.character);
    }
    return rep;
}

// ===========================================================================
// Classical tree constructors
// ===========================================================================

namespace detail {

inline BrauerTree line_tree(const std::vector<std::pair<std::string, long long>>& chars,
                            const std::string& block_name) {
    // chars listed from the far end; exceptional vertex appended at the right
    BrauerTree t;
    t.block_name = block_name;
    for (size_t i = 0; i < chars.size(); ++i)
        t.vertices.push_back({static_cast<int>(i), chars[i].first, false, chars[i].second});
    t.vertices.push_back({static_cast<int>(chars.size()), "exc", true, std::nullopt});
    for (size_t i = 0; i + 1 <= chars.size(); ++i)
        t.edges.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
    return t;
}

/// Two branches joined at the exceptional vertex; both branches listed from
/// their far end inward, so the last entry of each sits next to the
/// exceptional vertex.
inline BrauerTree two_branch_tree(const std::vector<std::pair<std::string, long long>>& sigma,
                                  const std::vector<std::pair<std::string, long long>>& tau,
                                  const std::string& block_name) {
    BrauerTree t;
    t.block_name = block_name;
    int id = 0;
    for (auto& c : sigma) t.vertices.push_back({id++, c.first, false, c.second});
    int exc = id;
    t.vertices.push_back({id++, "exc", true, std::nullopt});
    for (auto& c : tau) t.vertices.push_back({id++, c.first, false, c.second});
    for (int i = 0; i + 1 < static_cast<int>(sigma.size()); ++i) t.edges.push_back({i, i + 1});
    if (!sigma.empty()) t.edges.push_back({static_cast<int>(sigma.size()) - 1, exc});
    for (int i = 0; i + 1 < static_cast<int>(tau.size()); ++i) t.edges.push_back({exc + 1 + i, exc + 2 + i});
    if (!tau.empty()) t.edges.push_back({exc, id - 1});
    return t;
}

}  // namespace detail

/// Brauer tree of a weight-1 linear-family block: a line with the
/// exceptional vertex at the right end and the branch order given by the
/// hookable positions of the core, largest first.
inline BrauerTree build_tree_gl(const BlockSpec& block) {
    if (block.family != Family::GL) throw std::domain_error("build_tree_gl: not a GL block");
    if (block.weight != 1) throw std::domain_error("build_tree_gl: block does not have cyclic defect");
    const Partition& core = std::get<Partition>(block.core);
    BetaSet X = BetaSet::from_partition(core, core.length()).padded_for_hooks(block.e);
    auto hooks = X.hookable_positions(block.e);
    std::vector<std::pair<std::string, long long>> chars;
    for (int j = 1; j <= block.d; ++j) {
        Partition mu = X.add_hook(hooks[static_cast<size_t>(j - 1)], block.e).canonical().to_partition();
        chars.push_back({mu.to_string(), pi_closed_gl(BetaSet::from_partition(core, core.length()), block.d, j)});
    }
    BrauerTree t = detail::line_tree(chars, "GL_" + std::to_string(block.rank) + " d=" + std::to_string(block.d) +
                                                " core=" + core.to_string());
    t.validate();
    return t;
}

/// Unitary blocks: two branches split by the parity of the hookable
/// positions (even positions on one side, odd on the other).
inline BrauerTree build_tree_gu(const BlockSpec& block) {
    if (block.family != Family::GU) throw std::domain_error("build_tree_gu: not a GU block");
    if (block.weight != 1) throw std::domain_error("build_tree_gu: block does not have cyclic defect");
    const Partition& core = std::get<Partition>(block.core);
    BetaSet base = BetaSet::from_partition(core, core.length());
    auto branch_chars = [&](bool odd_branch) {
        BetaSet X = base.padded_for_hooks(block.e);
        if (odd_branch) X = X.shifted(1);
        auto hooks = X.hookable_positions(block.e);
        std::vector<std::pair<std::string, long long>> out;
        int i = 1;
        for (long long h : hooks) {
            if (h % 2 != 0) continue;
            Partition mu = X.add_hook(h, block.e).canonical().to_partition();
            out.push_back({mu.to_string(), pi_closed_gu(base, block.d, odd_branch, i)});
            ++i;
        }
        return out;
    };
    auto sigma = branch_chars(false);
    auto tau = branch_chars(true);
    BrauerTree t = detail::two_branch_tree(sigma, tau,
                                           "GU_" + std::to_string(block.rank) + " d=" + std::to_string(block.d) +
                                               " core=" + core.to_string());
    t.validate();
    return t;
}

/// Types B/C and the even orthogonal types. For odd d the branch positions
/// are the per-row hookable beads; for even d the cross-row ones, with
/// branch lengths e + delta and e - delta. A degenerate cocore yields one
/// branch.
inline BrauerTree build_tree_symbol(const BlockSpec& block) {
    if (block.family == Family::GL || block.family == Family::GU)
        throw std::domain_error("build_tree_symbol: symbol families only");
    if (block.weight != 1) throw std::domain_error("build_tree_symbol: block does not have cyclic defect");
    const Symbol& core = std::get<Symbol>(block.core);
    const bool cocores = block.cocore_block;
    const bool bc = block.family == Family::BC;

    auto branch_chars = [&](Side side) {
        auto [row, other] = detail::pad_symbol_rows(core, block.e, cocores, side);
        std::vector<long long> branch = cocores ? detail::cross_addables(row, other, block.e)
                                                : row.hookable_positions(block.e);
        std::vector<std::pair<std::string, long long>> out;
        for (int i = 1; i <= static_cast<int>(branch.size()); ++i) {
            long long x = branch[static_cast<size_t>(i - 1)];
            Symbol added;
            if (cocores) {
                std::vector<long long> f = row.elements(), tt = other.elements();
                f.erase(std::find(f.begin(), f.end(), x));
                tt.push_back(x + block.e);
                added = Symbol(BetaSet(f), BetaSet(tt));
            } else {
                added = Symbol(row.add_hook(x, block.e), other);
            }
            long long p = bc ? pi_closed_bc(core, block.d, side, i) : pi_closed_d(core, block.d, side, i);
            out.push_back({added.to_string(), p});
        }
        return out;
    };

    auto sigma = branch_chars(Side::X);
    std::vector<std::pair<std::string, long long>> tau;
    if (!core.degenerate()) tau = branch_chars(Side::Y);
    BrauerTree t = detail::two_branch_tree(
        sigma, tau,
        family_name(block.family) + "_" + std::to_string(block.rank) + " d=" + std::to_string(block.d) +
            " core=" + core.to_string());
    t.validate();
    return t;
}

inline BrauerTree build_tree(const BlockSpec& block) {
    if (block.family == Family::GL) return build_tree_gl(block);
    if (block.family == Family::GU) return build_tree_gu(block);
    return build_tree_symbol(block);
}

// ===========================================================================
// DOT output
// ===========================================================================

/// Graphviz form; the exceptional vertex is filled, edges carry
/// "name | pi | pi0" labels from the leaf-stripping bijection.
inline std::string dot_emit(const BrauerTree& tree) {
    auto edges = canonical_pi(tree);
    std::ostringstream os;
    os << "graph brauertree {\n";
    os << "  layout=neato;\n";
    for (auto& v : tree.vertices) {
        os << "  v" << v.id << " [";
        if (v.exceptional) {
            os << "shape=circle, style=filled, fillcolor=black, label=\"\"";
        } else {
            os << "shape=circle, label=\"" << v.name;
            if (v.pi) os << "\\npi=" << *v.pi;
            os << "\"";
        }
        os << "];\n";
    }
    for (auto& e : edges) {
        os << "  v" << e.va << " -- v" << e.vb << " [label=\"" << e.character << " | ";
        if (e.pi)
            os << *e.pi;
        else
            os << "?";
        os << " | " << e.pi0 << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace pervlab

#endif
