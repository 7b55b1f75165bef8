#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace amalgam {

enum class SpecErrorKind {
  Syntax,
  SumExceedsAmbient,
  RowArityMismatch,
  ZeroBoxRedundant,
  ZeroBoxMissing,
  AmbientTooSmall,
  RowCount,
};

std::string_view to_string(SpecErrorKind kind);

/// Error thrown by the diagram parser and the value-level validators.
/// `column()` is a 0-based offset into the input line (0 when the error is
/// not tied to a position).
class SpecError : public std::runtime_error {
 public:
  SpecError(SpecErrorKind kind, const std::string& message, std::size_t column = 0)
      : std::runtime_error(message), kind_(kind), column_(column) {}

  SpecErrorKind kind() const noexcept { return kind_; }
  std::size_t column() const noexcept { return column_; }

 private:
  SpecErrorKind kind_;
  std::size_t column_;
};

/// One factor of an amalgamation diagram: C^n embedded as a diagonal
/// subalgebra of M_ambient with the given block sizes.  A trailing zero box
/// marks a non-unital embedding; it is present exactly when the blocks do
/// not fill the ambient matrix.
struct BlockRow {
  int ambient = 0;
  std::vector<int> blocks;
  bool zero_box = false;

  int block_sum() const;
  int deficit() const { return ambient - block_sum(); }
  bool unital() const { return deficit() == 0; }

  /// Throws SpecError when an invariant fails.
  void validate() const;

  bool operator==(const BlockRow&) const = default;
};

/// Two or three rows sharing one diagonal subalgebra C^n; every row has the
/// same number of blocks.
struct AmalgamationDiagram {
  std::vector<BlockRow> rows;

  int dimension() const { return static_cast<int>(rows.front().blocks.size()); }
  void validate() const;

  bool operator==(const AmalgamationDiagram&) const = default;
};

/// Free product of 2 or 3 matrix algebras with no amalgamation.
struct NoAmalgam {
  std::vector<int> sizes;

  void validate() const;

  bool operator==(const NoAmalgam&) const = default;
};

struct FreeProductSpec {
  std::variant<NoAmalgam, AmalgamationDiagram> value;

  bool is_diagram() const { return std::holds_alternative<AmalgamationDiagram>(value); }
  const AmalgamationDiagram& diagram() const { return std::get<AmalgamationDiagram>(value); }
  const NoAmalgam& no_amalgam() const { return std::get<NoAmalgam>(value); }

  bool operator==(const FreeProductSpec&) const = default;
};

/// Parses the one-line diagram grammar:
///
///   spec      := freeprod | diagram
///   freeprod  := "M" INT " * " "M" INT { " * " "M" INT }
///   diagram   := row { " ; " row }                      (2 or 3 rows)
///   row       := "M" INT ":" INT { " " INT } [ " 0" ]   (trailing 0 = zero box)
///
/// Whitespace around tokens is insignificant.  Throws SpecError.
FreeProductSpec parse_spec(std::string_view text);

/// Canonical rendering; parse_spec(render_spec(s)) == s.
std::string render_spec(const FreeProductSpec& spec);
std::string render_row(const BlockRow& row);

/// Shared block count n = dim D.
int dimension(const AmalgamationDiagram& d);

/// Sum over the shared columns of the columnwise minimum block size.  Zero
/// boxes are not columns and contribute nothing.
int min_value(const AmalgamationDiagram& d);

/// Columnwise minimum over a chosen pair of rows (used for threefold
/// diagrams).
int min_value_pair(const AmalgamationDiagram& d, int row_a, int row_b);

int deficit(const BlockRow& row);

struct UnitalityProfile {
  int row_count = 0;
  std::vector<int> non_unital_rows;  // 0-based row indices

  bool all_unital() const { return non_unital_rows.empty(); }
  bool none_unital() const { return static_cast<int>(non_unital_rows.size()) == row_count; }
  bool mixed() const { return !all_unital() && !none_unital(); }
};

UnitalityProfile unitality_profile(const AmalgamationDiagram& d);

/// Result of refining a two-row diagram to a unital common diagonal C >= D.
/// `column_origin[i]` is the 0-based index of the source column refined
/// column i descends from, or -1 for the extra group that partitions the two
/// zero boxes.
struct UnitalRefinement {
  AmalgamationDiagram refined;
  std::vector<int> column_origin;
};

/// Splits every column (a, b) into min(a, b) subcolumns, partitioning a
/// block of size v into m parts as (v - m + 1, 1, ..., 1); when both rows
/// are non-unital one extra group of min(deficit_1, deficit_2) columns
/// partitions the leftovers the same way.  Returns nothing when exactly one
/// row is non-unital: no unital common refinement containing D exists then.
std::optional<UnitalRefinement> refine_to_unital_common(const AmalgamationDiagram& d);

/// Two-row diagram made of rows `row_a` and `row_b` of a threefold diagram.
AmalgamationDiagram pair_diagram(const AmalgamationDiagram& d, int row_a, int row_b);

}  // namespace amalgam
