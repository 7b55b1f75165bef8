#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/diagram.hpp"

namespace amalgam {

/// Directed multigraph.  An edge runs from its source vertex to its range
/// vertex; parallel edges are distinguished by id.
struct GraphEdge {
  std::string id;
  std::string source;
  std::string range;

  bool operator==(const GraphEdge&) const = default;
};

struct DirectedGraph {
  std::vector<std::string> vertices;
  std::vector<GraphEdge> edges;

  bool operator==(const DirectedGraph&) const = default;
};

/// The two-vertex graph with j-1 edges e_i (source v2, range v1) and k-1
/// edges f_i (source v1, range v2).
DirectedGraph graph_for_unital_pair(int j, int k);

/// Appends a vertex v3 and `extra` edges g_1..g_extra from v2 to v3.  The
/// input graph is unchanged as a subgraph.  Requires extra >= 1.
DirectedGraph extend_graph_nonunital(const DirectedGraph& g, int extra);

/// All simple directed cycles (no repeated vertices), each reported once as
/// its edge-id sequence starting from the smallest vertex on the cycle.
std::vector<std::vector<std::string>> simple_cycles(const DirectedGraph& g);

/// True iff every simple cycle has an entry: an edge outside the cycle whose
/// range lies on the cycle.
bool every_cycle_has_entry(const DirectedGraph& g);

/// True iff every vertex reaches, by a directed path, every cycle and every
/// sink (a vertex emitting no edges).
bool is_cofinal(const DirectedGraph& g);

bool is_simple_graph_algebra(const DirectedGraph& g);

/// Graphviz DOT text; deterministic vertex and edge order.
std::string to_dot(const DirectedGraph& g, const std::vector<std::string>& comments = {});

/// One letter of a word in the factors' matrix units: e_{row,col} in the
/// given factor (0-based factor index, 1-based matrix indices).
struct MatrixUnitRef {
  int factor = 0;
  int row = 0;
  int col = 0;

  bool operator==(const MatrixUnitRef&) const = default;
};

struct CKWord {
  std::vector<MatrixUnitRef> letters;

  bool operator==(const CKWord&) const = default;
};

/// A sum of diagonal matrix units of one factor, together with the set of
/// diagram columns it represents inside the shared diagonal.
struct VertexProjection {
  int factor = 0;
  std::vector<int> diagonal_indices;  // 1-based indices into the factor
  std::vector<int> columns;           // 0-based diagram columns

  bool operator==(const VertexProjection&) const = default;
};

/// Cuntz-Krieger generator table for a two-row diagram: every edge of the
/// graph is sent to a word in factor matrix units and every vertex to a
/// diagonal projection of a factor.
struct CKAssignment {
  AmalgamationDiagram diagram;
  DirectedGraph graph;
  std::map<std::string, CKWord> edge_word;
  std::map<std::string, VertexProjection> vertex_projection;
};

/// True when the two columns of a dimension-2, minimum-value-2 unital
/// diagram are, in some order, (1, k-1) and (j-1, 1).  These are exactly the
/// diagrams whose graph generators can be taken to be single matrix units.
bool has_single_unit_ck_family(const AmalgamationDiagram& d);

/// Builds the single-unit generator table for a diagram in the
/// has_single_unit_ck_family class: with columns reordered so column A is
/// (1, k-1) and column B is (j-1, 1),
///   vertex v2 -> the column-A projection (e_qq in factor 1),
///   vertex v1 -> the column-B projection,
///   edge e_i  -> e_{p_i, q} in factor 1 over column B's factor-1 block,
///   edge f_i  -> e_{t_i, s} in factor 2 over column A's factor-2 block,
/// where q (factor 1) and s (factor 2) are the two singleton block indices.
/// Returns nothing for dimension-2 minimum-value-2 diagrams outside that
/// class; throws std::invalid_argument for diagrams outside the graph
/// theorem's hypotheses entirely.
std::optional<CKAssignment> ck_assignment(const AmalgamationDiagram& d);

/// Checks, by index bookkeeping through the shared diagonal, that every
/// relation of the assignment reduces exactly: S*S = P_{s(e)} and
/// P_v = sum of S S* over edges with range v.  Complete for single-unit
/// words, whose relations are identities of diagonal projections.
bool ck_symbolic_check(const CKAssignment& a, std::string* reason = nullptr);

}  // namespace amalgam
