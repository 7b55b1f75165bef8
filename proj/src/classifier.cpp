#include "amalgam/classifier.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace amalgam {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Nuclear: return "nuclear";
    case Status::NotExact: return "not_exact";
    case Status::Open: return "open";
  }
  return "?";
}

std::string_view to_string(OpenKind k) {
  return k == OpenKind::StatedOpen ? "stated" : "paper_gap";
}

namespace cite {

constexpr std::string_view r0 =
    "a universal free product of matrix algebras of size >= 2, with no amalgamation, is not exact";
constexpr std::string_view r1 =
    "a unital amalgamation whose diagram has minimum value >= 3 is not exact";
constexpr std::string_view r2 =
    "a unital diagonal amalgam of dimension >= 3 forces a non-exact free product";
constexpr std::string_view r3 =
    "a unital amalgamation with minimum value 2 over a two-dimensional diagonal is a directed "
    "graph C*-algebra, hence nuclear";
constexpr std::string_view r4 =
    "M2 *_C M2 contains a corner copy of the non-exact C(T) *_C C(T), so it is not exact";
constexpr std::string_view r5 =
    "M2 *_C Mk with k >= 3 falls outside every known rule family; left open";
constexpr std::string_view r6_reduce =
    "with exactly one non-unital row, the product is exact iff the diagram reduced to that row's "
    "block sum is exact, and it is nuclear exactly when the reduction is";
constexpr std::string_view r6_matrix_over =
    "a rank-one scalar amalgam against a full matrix factor realizes the matrix algebra over that "
    "factor, which is nuclear";
constexpr std::string_view r7 =
    "a non-unital amalgam of dimension >= 2 contains a copy of the M3:[1 1 0] / M3:[1 1 0] "
    "product, which surjects onto the non-exact M3 *_{C^3} M3";
constexpr std::string_view r8 =
    "a row deficit >= 2 yields a subalgebra whose unitization contains the non-exact C*(Z2 * Z3)";
constexpr std::string_view r9 =
    "M2:[1 0] against Mk:[k-1 0] over a one-dimensional diagonal has no known verdict; left open";
constexpr std::string_view r10 =
    "derived step: refining both zero boxes gives a unital diagonal C containing D, and the "
    "canonical surjection onto the refined product pulls its non-exactness back to the source";
constexpr std::string_view r10_open =
    "derived step: the refined unital companion is not known to be non-exact; left open";
constexpr std::string_view t1_min_pair =
    "a threefold product is invariant under reordering its factors, and some pair of rows has "
    "minimum value >= 3, embedding a non-exact twofold product";
constexpr std::string_view t1_dim2 =
    "for a two-dimensional unital diagonal, M2 *_{C^2} M2 *_{C^2} M2 embeds as a subalgebra, and "
    "that triple is isomorphic to the non-exact M2(C(T) *_C C(T))";
constexpr std::string_view t1_dim1 =
    "a scalar-amalgam triple surjects onto a triple over a two-dimensional unital diagonal, which "
    "is not exact; a non-exact quotient forbids exactness";
constexpr std::string_view t2 =
    "for every diagonal subalgebra D of M2, the triple M2 *_D M2 *_D M2 is not exact";
constexpr std::string_view t3 =
    "a twofold subproduct of the triple is not exact, and exactness passes to subalgebras";
constexpr std::string_view t3_open =
    "no twofold subproduct is known non-exact and no threefold rule applies; left open";

}  // namespace cite

const std::vector<CatalogEntry>& rule_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {"R0", cite::r0},        {"R1", cite::r1},
      {"R2", cite::r2},        {"R3", cite::r3},
      {"R4", cite::r4},        {"R5", cite::r5},
      {"R6", cite::r6_reduce}, {"R6", cite::r6_matrix_over},
      {"R7", cite::r7},        {"R8", cite::r8},
      {"R9", cite::r9},        {"R10", cite::r10},
      {"R10", cite::r10_open}, {"T1", cite::t1_min_pair},
      {"T1", cite::t1_dim2},   {"T1", cite::t1_dim1},
      {"T2", cite::t2},        {"T3", cite::t3},
      {"T3", cite::t3_open},
  };
  return catalog;
}

bool citation_in_catalog(const std::string& rule, const std::string& citation) {
  for (const CatalogEntry& entry : rule_catalog()) {
    if (entry.rule == rule && entry.citation == citation) return true;
  }
  return false;
}

namespace {

struct CoreVerdict {
  Status status = Status::Open;
  std::optional<OpenKind> open_kind;
  std::vector<RuleApplication> steps;
};

RuleApplication step(std::string_view rule, std::string_view citation, FreeProductSpec input,
                     std::optional<FreeProductSpec> derived = std::nullopt) {
  return RuleApplication{std::string(rule), std::string(citation), std::move(input),
                         std::move(derived)};
}

CoreVerdict classify_core(const FreeProductSpec& spec);

CoreVerdict terminal(Status status, RuleApplication s, std::optional<OpenKind> kind = std::nullopt) {
  CoreVerdict v;
  v.status = status;
  v.open_kind = kind;
  v.steps.push_back(std::move(s));
  return v;
}

// Prepends `head` to the chained sub-classification and propagates its
// outcome (used by the reduction and refinement rules).
CoreVerdict chain(RuleApplication head, CoreVerdict inner) {
  CoreVerdict v;
  v.status = inner.status;
  v.open_kind = inner.open_kind;
  v.steps.push_back(std::move(head));
  for (RuleApplication& s : inner.steps) v.steps.push_back(std::move(s));
  return v;
}

CoreVerdict classify_all_unital(const FreeProductSpec& spec, const AmalgamationDiagram& d) {
  const int mv = min_value(d);
  const int n = dimension(d);
  const int j = d.rows[0].ambient;
  const int k = d.rows[1].ambient;

  if (mv >= 3) {
    CoreVerdict v = terminal(Status::NotExact, step("R1", cite::r1, spec));
    if (n >= 3) v.steps.push_back(step("R2", cite::r2, spec));
    return v;
  }
  // mv is never 1, so mv == 2 here.
  if (n == 2) return terminal(Status::Nuclear, step("R3", cite::r3, spec));
  if (j == 2 && k == 2) return terminal(Status::NotExact, step("R4", cite::r4, spec));
  return terminal(Status::Open, step("R5", cite::r5, spec), OpenKind::PaperGap);
}

CoreVerdict classify_mixed(const FreeProductSpec& spec, const AmalgamationDiagram& d,
                           const UnitalityProfile& profile) {
  const int nu = profile.non_unital_rows.front();
  const BlockRow& reducible = d.rows[nu];

  if (reducible.block_sum() == 1) {
    return terminal(Status::Nuclear, step("R6", cite::r6_matrix_over, spec));
  }

  AmalgamationDiagram reduced = d;
  reduced.rows[nu] = BlockRow{reducible.block_sum(), reducible.blocks, false};
  FreeProductSpec reduced_spec{reduced};
  CoreVerdict inner = classify_core(reduced_spec);
  return chain(step("R6", cite::r6_reduce, spec, reduced_spec), std::move(inner));
}

CoreVerdict classify_none_unital(const FreeProductSpec& spec, const AmalgamationDiagram& d) {
  if (dimension(d) >= 2) return terminal(Status::NotExact, step("R7", cite::r7, spec));
  if (d.rows[0].deficit() >= 2 || d.rows[1].deficit() >= 2) {
    return terminal(Status::NotExact, step("R8", cite::r8, spec));
  }
  const int min_block = std::min(d.rows[0].blocks.front(), d.rows[1].blocks.front());
  if (min_block == 1) {
    return terminal(Status::Open, step("R9", cite::r9, spec), OpenKind::StatedOpen);
  }

  const auto refinement = refine_to_unital_common(d);
  assert(refinement.has_value());
  FreeProductSpec refined_spec{refinement->refined};
  CoreVerdict inner = classify_core(refined_spec);
  if (inner.status == Status::NotExact) {
    return chain(step("R10", cite::r10, spec, refined_spec), std::move(inner));
  }
  return terminal(Status::Open, step("R10", cite::r10_open, spec), OpenKind::PaperGap);
}

CoreVerdict classify_two_row(const FreeProductSpec& spec, const AmalgamationDiagram& d) {
  const UnitalityProfile profile = unitality_profile(d);
  if (profile.all_unital()) return classify_all_unital(spec, d);
  if (profile.mixed()) return classify_mixed(spec, d, profile);
  return classify_none_unital(spec, d);
}

CoreVerdict classify_three_row(const FreeProductSpec& spec, const AmalgamationDiagram& d) {
  const UnitalityProfile profile = unitality_profile(d);

  if (profile.all_unital()) {
    bool pair_min_three = false;
    for (int a = 0; a < 3 && !pair_min_three; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (min_value_pair(d, a, b) >= 3) {
          pair_min_three = true;
          break;
        }
      }
    }
    if (pair_min_three) return terminal(Status::NotExact, step("T1", cite::t1_min_pair, spec));
    if (dimension(d) == 2) return terminal(Status::NotExact, step("T1", cite::t1_dim2, spec));
    return terminal(Status::NotExact, step("T1", cite::t1_dim1, spec));
  }

  const bool all_m2 = std::all_of(d.rows.begin(), d.rows.end(),
                                  [](const BlockRow& r) { return r.ambient == 2; });
  if (all_m2) return terminal(Status::NotExact, step("T2", cite::t2, spec));

  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      FreeProductSpec pair_spec{pair_diagram(d, a, b)};
      CoreVerdict inner = classify_core(pair_spec);
      if (inner.status == Status::NotExact) {
        return chain(step("T3", cite::t3, spec, pair_spec), std::move(inner));
      }
    }
  }
  return terminal(Status::Open, step("T3", cite::t3_open, spec), OpenKind::PaperGap);
}

CoreVerdict classify_core(const FreeProductSpec& spec) {
  if (!spec.is_diagram()) {
    return terminal(Status::NotExact, step("R0", cite::r0, spec));
  }
  const AmalgamationDiagram& d = spec.diagram();
  return d.rows.size() == 3 ? classify_three_row(spec, d) : classify_two_row(spec, d);
}

}  // namespace

Verdict classify(const FreeProductSpec& spec) {
  CoreVerdict core = classify_core(spec);
  Verdict v;
  v.status = core.status;
  v.open_kind = core.open_kind;
  v.trace.steps = std::move(core.steps);
  v.structure = describe(spec);
  return v;
}

std::optional<DirectedGraph> graph_for_spec(const FreeProductSpec& spec, const Verdict& v) {
  if (v.status != Status::Nuclear || !spec.is_diagram()) return std::nullopt;
  if (v.structure && v.structure->op == ExprOp::GraphAlgebra) return v.structure->graph;
  if (v.terminal_rule() == "R3") {
    const AmalgamationDiagram& d = spec.diagram();
    return graph_for_unital_pair(d.rows[0].ambient, d.rows[1].ambient);
  }
  return std::nullopt;
}

}  // namespace amalgam
