#include "amalgam/graphalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace amalgam {

DirectedGraph graph_for_unital_pair(int j, int k) {
  if (j < 2 || k < 2) throw std::invalid_argument("graph_for_unital_pair needs j, k >= 2");
  DirectedGraph g;
  g.vertices = {"v1", "v2"};
  for (int i = 1; i <= j - 1; ++i) g.edges.push_back({"e" + std::to_string(i), "v2", "v1"});
  for (int i = 1; i <= k - 1; ++i) g.edges.push_back({"f" + std::to_string(i), "v1", "v2"});
  return g;
}

DirectedGraph extend_graph_nonunital(const DirectedGraph& g, int extra) {
  if (extra < 1) throw std::invalid_argument("extend_graph_nonunital needs extra >= 1");
  DirectedGraph out = g;
  out.vertices.push_back("v3");
  for (int i = 1; i <= extra; ++i) out.edges.push_back({"g" + std::to_string(i), "v2", "v3"});
  return out;
}

namespace {

struct GraphIndex {
  std::map<std::string, int> vertex_index;
  std::vector<std::vector<int>> out_edges;  // vertex -> edge positions

  explicit GraphIndex(const DirectedGraph& g) {
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) vertex_index[g.vertices[i]] = i;
    out_edges.resize(g.vertices.size());
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      out_edges[vertex_index.at(g.edges[e].source)].push_back(e);
    }
  }
};

void cycle_search(const DirectedGraph& g, const GraphIndex& idx, int start, int current,
                  std::vector<int>& path, std::vector<bool>& visited,
                  std::vector<std::vector<std::string>>& cycles) {
  for (int e : idx.out_edges[current]) {
    const int next = idx.vertex_index.at(g.edges[e].range);
    if (next == start) {
      path.push_back(e);
      std::vector<std::string> ids;
      for (int p : path) ids.push_back(g.edges[p].id);
      cycles.push_back(std::move(ids));
      path.pop_back();
      continue;
    }
    if (next < start || visited[next]) continue;  // keep start minimal on the cycle
    visited[next] = true;
    path.push_back(e);
    cycle_search(g, idx, start, next, path, visited, cycles);
    path.pop_back();
    visited[next] = false;
  }
}

}  // namespace

std::vector<std::vector<std::string>> simple_cycles(const DirectedGraph& g) {
  const GraphIndex idx(g);
  std::vector<std::vector<std::string>> cycles;
  for (int start = 0; start < static_cast<int>(g.vertices.size()); ++start) {
    std::vector<int> path;
    std::vector<bool> visited(g.vertices.size(), false);
    visited[start] = true;
    cycle_search(g, idx, start, start, path, visited, cycles);
  }
  return cycles;
}

bool every_cycle_has_entry(const DirectedGraph& g) {
  std::map<std::string, const GraphEdge*> by_id;
  for (const GraphEdge& e : g.edges) by_id[e.id] = &e;

  for (const auto& cycle : simple_cycles(g)) {
    std::set<std::string> cycle_edges(cycle.begin(), cycle.end());
    std::set<std::string> cycle_vertices;
    for (const auto& id : cycle) cycle_vertices.insert(by_id.at(id)->source);

    bool has_entry = false;
    for (const GraphEdge& e : g.edges) {
      if (!cycle_edges.count(e.id) && cycle_vertices.count(e.range)) {
        has_entry = true;
        break;
      }
    }
    if (!has_entry) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<bool>> reachability(const DirectedGraph& g, const GraphIndex& idx) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) {
    std::vector<int> stack{v};
    reach[v][v] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int e : idx.out_edges[u]) {
        const int w = idx.vertex_index.at(g.edges[e].range);
        if (!reach[v][w]) {
          reach[v][w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return reach;
}

}  // namespace

bool is_cofinal(const DirectedGraph& g) {
  const GraphIndex idx(g);
  const auto reach = reachability(g, idx);
  const int n = static_cast<int>(g.vertices.size());

  std::map<std::string, const GraphEdge*> by_id;
  for (const GraphEdge& e : g.edges) by_id[e.id] = &e;

  std::vector<std::set<int>> cycle_vertex_sets;
  for (const auto& cycle : simple_cycles(g)) {
    std::set<int> vs;
    for (const auto& id : cycle) vs.insert(idx.vertex_index.at(by_id.at(id)->source));
    cycle_vertex_sets.push_back(std::move(vs));
  }
  std::vector<int> sinks;
  for (int v = 0; v < n; ++v) {
    if (idx.out_edges[v].empty()) sinks.push_back(v);
  }

  for (int v = 0; v < n; ++v) {
    for (const auto& cyc : cycle_vertex_sets) {
      bool hits = false;
      for (int u : cyc) {
        if (reach[v][u]) {
          hits = true;
          break;
        }
      }
      if (!hits) return false;
    }
    for (int t : sinks) {
      if (!reach[v][t]) return false;
    }
  }
  return true;
}

bool is_simple_graph_algebra(const DirectedGraph& g) {
  return is_cofinal(g) && every_cycle_has_entry(g);
}

std::string to_dot(const DirectedGraph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const std::string& c : comments) out << "  // " << c << "\n";
  for (const std::string& v : g.vertices) out << "  " << v << ";\n";
  for (const GraphEdge& e : g.edges) {
    out << "  " << e.source << " -> " << e.range << " [label=\"" << e.id << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

// Factor-side index ranges of each column: column c occupies the half-open
// 1-based range [offset_c + 1, offset_c + blocks[c]].
std::vector<int> column_offsets(const BlockRow& row) {
  std::vector<int> offsets{0};
  for (int b : row.blocks) offsets.push_back(offsets.back() + b);
  return offsets;
}

struct SingleUnitLayout {
  int col_a = -1;  // the (1, k-1) column
  int col_b = -1;  // the (j-1, 1) column
};

std::optional<SingleUnitLayout> single_unit_layout(const AmalgamationDiagram& d) {
  const int j = d.rows[0].ambient;
  const int k = d.rows[1].ambient;
  for (int a = 0; a < 2; ++a) {
    const int b = 1 - a;
    if (d.rows[0].blocks[a] == 1 && d.rows[1].blocks[a] == k - 1 &&
        d.rows[0].blocks[b] == j - 1 && d.rows[1].blocks[b] == 1) {
      return SingleUnitLayout{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace

bool has_single_unit_ck_family(const AmalgamationDiagram& d) {
  if (d.rows.size() != 2 || d.dimension() != 2) return false;
  if (!unitality_profile(d).all_unital()) return false;
  if (min_value(d) != 2) return false;
  return single_unit_layout(d).has_value();
}

std::optional<CKAssignment> ck_assignment(const AmalgamationDiagram& d) {
  if (d.rows.size() != 2 || !unitality_profile(d).all_unital() || d.dimension() != 2 ||
      min_value(d) != 2) {
    throw std::invalid_argument("ck_assignment needs a unital two-row diagram of dimension 2 and minimum value 2");
  }
  const auto layout = single_unit_layout(d);
  if (!layout) return std::nullopt;

  const int j = d.rows[0].ambient;
  const int k = d.rows[1].ambient;
  const auto off1 = column_offsets(d.rows[0]);
  const auto off2 = column_offsets(d.rows[1]);

  CKAssignment a;
  a.diagram = d;
  a.graph = graph_for_unital_pair(j, k);

  const int q = off1[layout->col_a] + 1;  // singleton factor-1 index of column A
  const int s = off2[layout->col_b] + 1;  // singleton factor-2 index of column B

  VertexProjection v1;
  v1.factor = 0;
  for (int t = 1; t <= j - 1; ++t) v1.diagonal_indices.push_back(off1[layout->col_b] + t);
  v1.columns = {layout->col_b};
  VertexProjection v2;
  v2.factor = 0;
  v2.diagonal_indices = {q};
  v2.columns = {layout->col_a};
  a.vertex_projection["v1"] = std::move(v1);
  a.vertex_projection["v2"] = std::move(v2);

  for (int i = 1; i <= j - 1; ++i) {
    a.edge_word["e" + std::to_string(i)] = CKWord{{MatrixUnitRef{0, off1[layout->col_b] + i, q}}};
  }
  for (int i = 1; i <= k - 1; ++i) {
    a.edge_word["f" + std::to_string(i)] = CKWord{{MatrixUnitRef{1, off2[layout->col_a] + i, s}}};
  }
  return a;
}

namespace {

// Which diagram column owns a 1-based diagonal index of a factor, or -1 for
// the zero-box region.
int column_of_index(const AmalgamationDiagram& d, int factor, int index) {
  const auto offsets = column_offsets(d.rows[factor]);
  for (int c = 0; c + 1 < static_cast<int>(offsets.size()); ++c) {
    if (index > offsets[c] && index <= offsets[c + 1]) return c;
  }
  return -1;
}

// Interprets a set of factor diagonal indices as a union of full diagram
// columns; nothing when some column is only partially covered or an index
// lies in the zero box.
std::optional<std::set<int>> as_full_columns(const AmalgamationDiagram& d, int factor,
                                             const std::set<int>& indices) {
  std::map<int, int> hit_count;
  for (int i : indices) {
    const int c = column_of_index(d, factor, i);
    if (c < 0) return std::nullopt;
    ++hit_count[c];
  }
  std::set<int> columns;
  for (const auto& [c, count] : hit_count) {
    if (count != d.rows[factor].blocks[c]) return std::nullopt;
    columns.insert(c);
  }
  return columns;
}

bool diag_projections_equal(const AmalgamationDiagram& d, int factor_a, const std::set<int>& a,
                            int factor_b, const std::set<int>& b, std::string* reason) {
  if (factor_a == factor_b) {
    if (a == b) return true;
    if (reason) *reason = "same-factor diagonal index sets differ";
    return false;
  }
  const auto ca = as_full_columns(d, factor_a, a);
  const auto cb = as_full_columns(d, factor_b, b);
  if (!ca || !cb) {
    if (reason) *reason = "a cross-factor comparison does not reduce to shared-diagonal columns";
    return false;
  }
  if (*ca != *cb) {
    if (reason) *reason = "shared-diagonal column sets differ";
    return false;
  }
  return true;
}

}  // namespace

bool ck_symbolic_check(const CKAssignment& a, std::string* reason) {
  std::map<std::string, const GraphEdge*> by_id;
  for (const GraphEdge& e : a.graph.edges) by_id[e.id] = &e;

  // Source relations: S*S = P_{s(e)}.
  for (const auto& [id, word] : a.edge_word) {
    if (word.letters.size() != 1) {
      if (reason) *reason = "only single-unit words reduce symbolically";
      return false;
    }
    const MatrixUnitRef& u = word.letters.front();
    const VertexProjection& p = a.vertex_projection.at(by_id.at(id)->source);
    const std::set<int> source{u.col};
    const std::set<int> proj(p.diagonal_indices.begin(), p.diagonal_indices.end());
    if (!diag_projections_equal(a.diagram, u.factor, source, p.factor, proj, reason)) return false;
  }

  // Range relations: P_v = sum of S S* over edges with range v.
  for (const std::string& v : a.graph.vertices) {
    std::set<int> ranges;
    int range_factor = -1;
    bool receives = false;
    for (const GraphEdge& e : a.graph.edges) {
      if (e.range != v) continue;
      receives = true;
      const MatrixUnitRef& u = a.edge_word.at(e.id).letters.front();
      if (range_factor == -1) range_factor = u.factor;
      if (range_factor != u.factor) {
        if (reason) *reason = "edges into " + v + " draw from both factors";
        return false;
      }
      if (!ranges.insert(u.row).second) {
        if (reason) *reason = "range projections into " + v + " are not orthogonal";
        return false;
      }
    }
    if (!receives) continue;
    const VertexProjection& p = a.vertex_projection.at(v);
    const std::set<int> proj(p.diagonal_indices.begin(), p.diagonal_indices.end());
    if (!diag_projections_equal(a.diagram, range_factor, ranges, p.factor, proj, reason)) return false;
  }
  return true;
}

}  // namespace amalgam
