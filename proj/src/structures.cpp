#include "amalgam/structures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace amalgam {

AlgebraExpr matrix_alg(int n) {
  if (n < 1) throw std::invalid_argument("matrix algebra size must be >= 1");
  AlgebraExpr e;
  e.op = ExprOp::MatrixAlg;
  e.n = n;
  return e;
}

AlgebraExpr matrix_over(int n, AlgebraExpr inner) {
  AlgebraExpr e;
  e.op = ExprOp::MatrixOver;
  e.n = n;
  e.args.push_back(std::move(inner));
  return e;
}

AlgebraExpr tensor(AlgebraExpr a, AlgebraExpr b) {
  AlgebraExpr e;
  e.op = ExprOp::Tensor;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

AlgebraExpr direct_sum(std::vector<AlgebraExpr> parts) {
  if (parts.size() < 2) throw std::invalid_argument("direct sum needs at least two parts");
  AlgebraExpr e;
  e.op = ExprOp::DirectSum;
  e.args = std::move(parts);
  return e;
}

AlgebraExpr free_product(AlgebraExpr a, AlgebraExpr b, AmalgamMark mark, std::string diagram_text) {
  AlgebraExpr e;
  e.op = ExprOp::FreeProduct;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  e.amalgam = mark;
  e.amalgam_diagram = std::move(diagram_text);
  return e;
}

AlgebraExpr cuntz(int n) {
  if (n < 1) throw std::invalid_argument("Cuntz index must be >= 1");
  AlgebraExpr e;
  e.op = ExprOp::Cuntz;
  e.n = n;
  return e;
}

AlgebraExpr circle_algebra() {
  AlgebraExpr e;
  e.op = ExprOp::CircleAlgebra;
  return e;
}

AlgebraExpr graph_algebra(DirectedGraph g) {
  AlgebraExpr e;
  e.op = ExprOp::GraphAlgebra;
  e.graph = std::move(g);
  return e;
}

AlgebraExpr path_algebra_c2_c2() {
  AlgebraExpr e;
  e.op = ExprOp::PathAlgebraC2C2;
  return e;
}

NuclearAttr nuclear_attr(const AlgebraExpr& e) {
  switch (e.op) {
    case ExprOp::MatrixAlg:
    case ExprOp::Cuntz:
    case ExprOp::CircleAlgebra:
    case ExprOp::GraphAlgebra:
    case ExprOp::PathAlgebraC2C2:
      return NuclearAttr::Nuclear;
    case ExprOp::MatrixOver:
      return nuclear_attr(e.args.front());
    case ExprOp::Tensor:
    case ExprOp::DirectSum: {
      bool all_nuclear = true;
      for (const AlgebraExpr& part : e.args) {
        switch (nuclear_attr(part)) {
          case NuclearAttr::NotExact: return NuclearAttr::NotExact;
          case NuclearAttr::Unknown: all_nuclear = false; break;
          case NuclearAttr::Nuclear: break;
        }
      }
      return all_nuclear ? NuclearAttr::Nuclear : NuclearAttr::Unknown;
    }
    case ExprOp::FreeProduct:
      if (e.amalgam == AmalgamMark::Scalar && e.args[0].op == ExprOp::CircleAlgebra &&
          e.args[1].op == ExprOp::CircleAlgebra) {
        return NuclearAttr::NotExact;
      }
      return NuclearAttr::Unknown;
  }
  return NuclearAttr::Unknown;
}

namespace {

void collect_tensor_factors(AlgebraExpr e, std::vector<AlgebraExpr>& out) {
  if (e.op == ExprOp::Tensor) {
    for (AlgebraExpr& a : e.args) collect_tensor_factors(std::move(a), out);
  } else {
    out.push_back(std::move(e));
  }
}

}  // namespace

AlgebraExpr normalize(const AlgebraExpr& e) {
  AlgebraExpr r = e;
  for (AlgebraExpr& a : r.args) a = normalize(a);

  switch (r.op) {
    case ExprOp::MatrixOver:
      if (r.args.front().op == ExprOp::MatrixAlg) return matrix_alg(r.n * r.args.front().n);
      return normalize(tensor(matrix_alg(r.n), std::move(r.args.front())));
    case ExprOp::Cuntz:
      return r.n == 1 ? circle_algebra() : r;
    case ExprOp::Tensor: {
      std::vector<AlgebraExpr> factors;
      collect_tensor_factors(std::move(r), factors);
      std::stable_partition(factors.begin(), factors.end(),
                            [](const AlgebraExpr& f) { return f.op == ExprOp::MatrixAlg; });
      AlgebraExpr acc = std::move(factors.front());
      for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(std::move(acc), std::move(factors[i]));
      return acc;
    }
    default:
      return r;
  }
}

namespace {

const BlockRow* find_row(const AmalgamationDiagram& d, int ambient, const std::vector<int>& blocks) {
  for (const BlockRow& row : d.rows) {
    if (row.ambient == ambient && row.blocks == blocks && !row.zero_box) return &row;
  }
  return nullptr;
}

// Example-1 pattern: [1, m-1] against [1, 1].  The m = 2 case is rendered as
// M2 (x) C(T) directly, matching how the identification gets used.
std::optional<AlgebraExpr> match_cuntz_tensor(const AmalgamationDiagram& d) {
  for (int i = 0; i < 2; ++i) {
    const BlockRow& two = d.rows[i];
    const BlockRow& other = d.rows[1 - i];
    if (two.ambient != 2 || two.blocks != std::vector<int>{1, 1}) continue;
    const int m = other.ambient;
    const bool lopsided = (other.blocks == std::vector<int>{1, m - 1}) ||
                          (other.blocks == std::vector<int>{m - 1, 1});
    if (!lopsided) continue;
    if (m == 2) return tensor(matrix_alg(2), circle_algebra());
    return tensor(matrix_alg(m), cuntz(m - 1));
  }
  return std::nullopt;
}

std::optional<AlgebraExpr> describe_two_row(const AmalgamationDiagram& d);

// Non-unital row reduced away per the deficit theorem; the structure is the
// matrix algebra over the other factor when the non-unital row carries a
// single scalar block, and the extended graph when the reduced diagram is a
// graph algebra with a single-unit generator family.
std::optional<AlgebraExpr> describe_mixed(const AmalgamationDiagram& d) {
  const UnitalityProfile profile = unitality_profile(d);
  const int nu = profile.non_unital_rows.front();
  const BlockRow& reducible = d.rows[nu];
  const BlockRow& other = d.rows[1 - nu];

  if (reducible.block_sum() == 1) {
    return matrix_over(reducible.ambient, matrix_alg(other.ambient));
  }

  const int reduced_size = reducible.block_sum();
  AmalgamationDiagram reduced_pair;  // unital factor first, matching the graph orientation
  reduced_pair.rows = {other, BlockRow{reduced_size, reducible.blocks, false}};
  if (reduced_pair.dimension() == 2 && min_value(reduced_pair) == 2 &&
      has_single_unit_ck_family(reduced_pair)) {
    DirectedGraph g = graph_for_unital_pair(other.ambient, reduced_size);
    return graph_algebra(extend_graph_nonunital(g, reduced_size));
  }
  return std::nullopt;
}

std::optional<AlgebraExpr> describe_two_row(const AmalgamationDiagram& d) {
  const UnitalityProfile profile = unitality_profile(d);

  if (profile.all_unital()) {
    const std::vector<int> ones{1, 1, 1};
    if (d.rows[0].ambient == 3 && d.rows[1].ambient == 3 && d.rows[0].blocks == ones &&
        d.rows[1].blocks == ones) {
      return tensor(matrix_alg(3),
                    free_product(circle_algebra(), circle_algebra(), AmalgamMark::Scalar));
    }
    if (d.dimension() == 2 && min_value(d) == 2) {
      if (auto e = match_cuntz_tensor(d)) return e;
      if (has_single_unit_ck_family(d)) {
        return graph_algebra(graph_for_unital_pair(d.rows[0].ambient, d.rows[1].ambient));
      }
    }
    return std::nullopt;
  }
  if (profile.mixed()) return describe_mixed(d);
  return std::nullopt;
}

}  // namespace

std::optional<AlgebraExpr> describe(const FreeProductSpec& spec) {
  if (!spec.is_diagram()) return std::nullopt;
  const AmalgamationDiagram& d = spec.diagram();

  if (d.rows.size() == 3) {
    const std::vector<int> ones{1, 1};
    const bool m2_triple = std::all_of(d.rows.begin(), d.rows.end(), [&](const BlockRow& r) {
      return r.ambient == 2 && r.blocks == ones && !r.zero_box;
    });
    if (m2_triple) {
      return matrix_over(2, free_product(circle_algebra(), circle_algebra(), AmalgamMark::Scalar));
    }
    return std::nullopt;
  }
  return describe_two_row(d);
}

namespace {

bool atomic(const AlgebraExpr& e) {
  switch (e.op) {
    case ExprOp::Tensor:
    case ExprOp::DirectSum:
    case ExprOp::FreeProduct:
      return false;
    default:
      return true;
  }
}

std::string operand_text(const AlgebraExpr& e) {
  return atomic(e) ? expr_text(e) : "(" + expr_text(e) + ")";
}

std::string join_args(const AlgebraExpr& e, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += sep;
    out += operand_text(e.args[i]);
  }
  return out;
}

}  // namespace

std::string expr_text(const AlgebraExpr& e) {
  switch (e.op) {
    case ExprOp::MatrixAlg:
      return e.n == 1 ? "C" : "M" + std::to_string(e.n);
    case ExprOp::MatrixOver:
      return "M" + std::to_string(e.n) + "(" + expr_text(e.args.front()) + ")";
    case ExprOp::Tensor:
      return join_args(e, " (x) ");
    case ExprOp::DirectSum:
      return join_args(e, " (+) ");
    case ExprOp::FreeProduct: {
      std::string sep = " * ";
      if (e.amalgam == AmalgamMark::Scalar) sep = " *_C ";
      if (e.amalgam == AmalgamMark::Diagram) sep = " *_D ";
      return join_args(e, sep);
    }
    case ExprOp::Cuntz:
      return "O" + std::to_string(e.n);
    case ExprOp::CircleAlgebra:
      return "C(T)";
    case ExprOp::GraphAlgebra: {
      std::ostringstream out;
      out << "C*(G[" << e.graph->vertices.size() << "v," << e.graph->edges.size() << "e])";
      return out.str();
    }
    case ExprOp::PathAlgebraC2C2:
      return "PathAlg(C^2 *_C C^2)";
  }
  return "?";
}

}  // namespace amalgam
