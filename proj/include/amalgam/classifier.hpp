#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalgam/diagram.hpp"
#include "amalgam/graphalg.hpp"
#include "amalgam/structures.hpp"

namespace amalgam {

enum class Status { Nuclear, NotExact, Open };
enum class OpenKind { StatedOpen, PaperGap };

std::string_view to_string(Status s);
std::string_view to_string(OpenKind k);

/// One applied decision rule.  `derived`, when present, is the spec the next
/// step continues on (a reduction or refinement of `input`).
struct RuleApplication {
  std::string rule;
  std::string citation;
  FreeProductSpec input;
  std::optional<FreeProductSpec> derived;
};

struct ProofTrace {
  std::vector<RuleApplication> steps;
};

struct Verdict {
  Status status = Status::Open;
  std::optional<OpenKind> open_kind;
  std::optional<AlgebraExpr> structure;
  ProofTrace trace;

  const std::string& terminal_rule() const { return trace.steps.back().rule; }
};

/// Applies the decision rules to a validated spec.  Deterministic and total:
/// every valid spec gets exactly one of the three statuses, with a trace
/// whose first step starts at the queried spec and whose last step is the
/// terminal rule.
Verdict classify(const FreeProductSpec& spec);

/// The fixed (rule id, citation) catalog traces draw from.
struct CatalogEntry {
  std::string_view rule;
  std::string_view citation;
};
const std::vector<CatalogEntry>& rule_catalog();
bool citation_in_catalog(const std::string& rule, const std::string& citation);

/// The directed graph attached to a verdict, when the terminal
/// classification is the graph rule (the graph of the diagram) or the
/// non-unital reduction with a graph-algebra reduction (the extended graph).
std::optional<DirectedGraph> graph_for_spec(const FreeProductSpec& spec, const Verdict& v);

}  // namespace amalgam
