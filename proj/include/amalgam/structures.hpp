#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalgam/diagram.hpp"
#include "amalgam/graphalg.hpp"

namespace amalgam {

enum class ExprOp {
  MatrixAlg,
  MatrixOver,
  Tensor,
  DirectSum,
  FreeProduct,
  Cuntz,
  CircleAlgebra,
  GraphAlgebra,
  PathAlgebraC2C2,
};

enum class AmalgamMark { None, Scalar, Diagram };

/// Symbolic description of an identified algebra.  `n` is used by MatrixAlg,
/// MatrixOver and Cuntz; `args` holds the operands of MatrixOver (one),
/// Tensor and FreeProduct (two) and DirectSum (two or more).
struct AlgebraExpr {
  ExprOp op = ExprOp::MatrixAlg;
  int n = 0;
  std::vector<AlgebraExpr> args;
  AmalgamMark amalgam = AmalgamMark::None;
  std::string amalgam_diagram;  // canonical text when amalgam == Diagram
  std::optional<DirectedGraph> graph;

  bool operator==(const AlgebraExpr&) const = default;
};

AlgebraExpr matrix_alg(int n);
AlgebraExpr matrix_over(int n, AlgebraExpr inner);
AlgebraExpr tensor(AlgebraExpr a, AlgebraExpr b);
AlgebraExpr direct_sum(std::vector<AlgebraExpr> parts);
AlgebraExpr free_product(AlgebraExpr a, AlgebraExpr b, AmalgamMark mark,
                         std::string diagram_text = {});
AlgebraExpr cuntz(int n);
AlgebraExpr circle_algebra();
AlgebraExpr graph_algebra(DirectedGraph g);
AlgebraExpr path_algebra_c2_c2();

enum class NuclearAttr { Nuclear, NotExact, Unknown };

/// Compositional attribute: the atomic constructors are nuclear, a tensor,
/// matrix-over or direct sum of nuclear parts is nuclear and is not exact as
/// soon as one part is not; the scalar free product of two circle algebras
/// is not exact; everything else is unknown.
NuclearAttr nuclear_attr(const AlgebraExpr& e);

/// Rewrites to a fixpoint:
///   MatrixOver(n, MatrixAlg(m)) -> MatrixAlg(n m)
///   Cuntz(1)                    -> CircleAlgebra
///   MatrixOver(n, e)            -> Tensor(MatrixAlg(n), e)  otherwise
/// and reassociates tensor products left-nested with MatrixAlg factors
/// leftmost.  Idempotent.
AlgebraExpr normalize(const AlgebraExpr& e);

/// Structural description of the algebra a spec denotes, when one of the
/// identification patterns applies.  Independent of the classifier; the
/// returned description never contradicts the classification verdict.
std::optional<AlgebraExpr> describe(const FreeProductSpec& spec);

/// Human-readable rendering, e.g. "M3 (x) (C(T) *_C C(T))".
std::string expr_text(const AlgebraExpr& e);

}  // namespace amalgam
