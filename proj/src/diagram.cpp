#include "amalgam/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace amalgam {

std::string_view to_string(SpecErrorKind kind) {
  switch (kind) {
    case SpecErrorKind::Syntax: return "syntax";
    case SpecErrorKind::SumExceedsAmbient: return "sum-exceeds-ambient";
    case SpecErrorKind::RowArityMismatch: return "row-arity-mismatch";
    case SpecErrorKind::ZeroBoxRedundant: return "zero-box-redundant";
    case SpecErrorKind::ZeroBoxMissing: return "zero-box-missing";
    case SpecErrorKind::AmbientTooSmall: return "ambient-too-small";
    case SpecErrorKind::RowCount: return "row-count";
  }
  return "unknown";
}

int BlockRow::block_sum() const {
  return std::accumulate(blocks.begin(), blocks.end(), 0);
}

void BlockRow::validate() const {
  if (ambient < 2) {
    throw SpecError(SpecErrorKind::AmbientTooSmall,
                    "matrix factors must have size >= 2, got M" + std::to_string(ambient));
  }
  if (blocks.empty()) {
    throw SpecError(SpecErrorKind::Syntax, "a row needs at least one block");
  }
  for (int b : blocks) {
    if (b < 1) {
      throw SpecError(SpecErrorKind::Syntax, "blocks must be positive (zero only as a trailing zero box)");
    }
  }
  const int sum = block_sum();
  if (sum > ambient) {
    throw SpecError(SpecErrorKind::SumExceedsAmbient,
                    "blocks sum to " + std::to_string(sum) + " which exceeds the ambient size " +
                        std::to_string(ambient));
  }
  if (sum == ambient && zero_box) {
    throw SpecError(SpecErrorKind::ZeroBoxRedundant,
                    "blocks already fill M" + std::to_string(ambient) + "; the zero box is redundant");
  }
  if (sum < ambient && !zero_box) {
    throw SpecError(SpecErrorKind::ZeroBoxMissing,
                    "blocks sum to " + std::to_string(sum) + " < " + std::to_string(ambient) +
                        "; a non-unital row must end with a zero box");
  }
}

void AmalgamationDiagram::validate() const {
  if (rows.size() != 2 && rows.size() != 3) {
    throw SpecError(SpecErrorKind::RowCount,
                    "a diagram needs 2 or 3 rows, got " + std::to_string(rows.size()));
  }
  for (const BlockRow& row : rows) row.validate();
  const std::size_t n = rows.front().blocks.size();
  for (const BlockRow& row : rows) {
    if (row.blocks.size() != n) {
      throw SpecError(SpecErrorKind::RowArityMismatch,
                      "all rows must share the block count; got " + std::to_string(n) + " and " +
                          std::to_string(row.blocks.size()));
    }
  }
}

void NoAmalgam::validate() const {
  if (sizes.size() != 2 && sizes.size() != 3) {
    throw SpecError(SpecErrorKind::RowCount,
                    "a free product needs 2 or 3 factors, got " + std::to_string(sizes.size()));
  }
  for (int s : sizes) {
    if (s < 2) {
      throw SpecError(SpecErrorKind::AmbientTooSmall,
                      "matrix factors must have size >= 2, got M" + std::to_string(s));
    }
  }
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& message) {
    throw SpecError(SpecErrorKind::Syntax, message + " (column " + std::to_string(pos) + ")", pos);
  }
  int integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    if (pos - start > 6) fail("integer too large");
    int value = 0;
    for (std::size_t i = start; i < pos; ++i) value = value * 10 + (text[i] - '0');
    return value;
  }
  int row_id() {
    skip_ws();
    if (!accept('M')) fail("expected a factor of the form M<n>");
    return integer();
  }
};

BlockRow parse_row(Cursor& cur) {
  BlockRow row;
  row.ambient = cur.row_id();
  if (!cur.accept(':')) cur.fail("expected ':' after the factor name");
  bool saw_value = false;
  while (true) {
    const char c = cur.peek();
    if (!std::isdigit(static_cast<unsigned char>(c))) break;
    const std::size_t at = cur.pos;
    const int value = cur.integer();
    saw_value = true;
    if (value == 0) {
      if (row.zero_box) {
        throw SpecError(SpecErrorKind::Syntax, "at most one zero box (column " + std::to_string(at) + ")", at);
      }
      row.zero_box = true;
    } else {
      if (row.zero_box) {
        throw SpecError(SpecErrorKind::Syntax, "the zero box must be the last box (column " + std::to_string(at) + ")",
                        at);
      }
      row.blocks.push_back(value);
    }
  }
  if (!saw_value) cur.fail("expected at least one block size");
  return row;
}

}  // namespace

FreeProductSpec parse_spec(std::string_view text) {
  const bool has_colon = text.find(':') != std::string_view::npos;
  Cursor cur{text};
  FreeProductSpec spec;

  if (has_colon) {
    AmalgamationDiagram d;
    d.rows.push_back(parse_row(cur));
    while (cur.accept(';')) d.rows.push_back(parse_row(cur));
    if (!cur.done()) cur.fail("unexpected trailing input");
    if (d.rows.size() < 2 || d.rows.size() > 3) {
      throw SpecError(SpecErrorKind::RowCount,
                      "a diagram needs 2 or 3 rows, got " + std::to_string(d.rows.size()));
    }
    d.validate();
    spec.value = std::move(d);
  } else {
    NoAmalgam f;
    f.sizes.push_back(cur.row_id());
    while (cur.accept('*')) f.sizes.push_back(cur.row_id());
    if (!cur.done()) cur.fail("unexpected trailing input");
    f.validate();
    spec.value = std::move(f);
  }
  return spec;
}

std::string render_row(const BlockRow& row) {
  std::ostringstream out;
  out << 'M' << row.ambient << ':';
  for (int b : row.blocks) out << ' ' << b;
  if (row.zero_box) out << " 0";
  return out.str();
}

std::string render_spec(const FreeProductSpec& spec) {
  std::ostringstream out;
  if (spec.is_diagram()) {
    const auto& rows = spec.diagram().rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) out << " ; ";
      out << render_row(rows[i]);
    }
  } else {
    const auto& sizes = spec.no_amalgam().sizes;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (i) out << " * ";
      out << 'M' << sizes[i];
    }
  }
  return out.str();
}

int dimension(const AmalgamationDiagram& d) { return d.dimension(); }

int min_value(const AmalgamationDiagram& d) {
  int total = 0;
  for (int i = 0; i < d.dimension(); ++i) {
    int m = d.rows.front().blocks[i];
    for (const BlockRow& row : d.rows) m = std::min(m, row.blocks[i]);
    total += m;
  }
  return total;
}

int min_value_pair(const AmalgamationDiagram& d, int row_a, int row_b) {
  int total = 0;
  for (int i = 0; i < d.dimension(); ++i) {
    total += std::min(d.rows[row_a].blocks[i], d.rows[row_b].blocks[i]);
  }
  return total;
}

int deficit(const BlockRow& row) { return row.deficit(); }

UnitalityProfile unitality_profile(const AmalgamationDiagram& d) {
  UnitalityProfile profile;
  profile.row_count = static_cast<int>(d.rows.size());
  for (int i = 0; i < profile.row_count; ++i) {
    if (!d.rows[i].unital()) profile.non_unital_rows.push_back(i);
  }
  return profile;
}

namespace {

// Partition v into m parts: (v - m + 1, 1, ..., 1).
void append_partition(std::vector<int>& out, int v, int m) {
  out.push_back(v - m + 1);
  for (int i = 1; i < m; ++i) out.push_back(1);
}

}  // namespace

std::optional<UnitalRefinement> refine_to_unital_common(const AmalgamationDiagram& d) {
  const UnitalityProfile profile = unitality_profile(d);
  if (profile.mixed()) return std::nullopt;

  const BlockRow& top = d.rows[0];
  const BlockRow& bottom = d.rows[1];
  UnitalRefinement result;
  std::vector<int> top_blocks;
  std::vector<int> bottom_blocks;

  for (int i = 0; i < d.dimension(); ++i) {
    const int m = std::min(top.blocks[i], bottom.blocks[i]);
    append_partition(top_blocks, top.blocks[i], m);
    append_partition(bottom_blocks, bottom.blocks[i], m);
    for (int t = 0; t < m; ++t) result.column_origin.push_back(i);
  }
  if (profile.none_unital()) {
    const int m = std::min(top.deficit(), bottom.deficit());
    append_partition(top_blocks, top.deficit(), m);
    append_partition(bottom_blocks, bottom.deficit(), m);
    for (int t = 0; t < m; ++t) result.column_origin.push_back(-1);
  }

  result.refined.rows = {BlockRow{top.ambient, std::move(top_blocks), false},
                         BlockRow{bottom.ambient, std::move(bottom_blocks), false}};
  result.refined.validate();
  return result;
}

AmalgamationDiagram pair_diagram(const AmalgamationDiagram& d, int row_a, int row_b) {
  AmalgamationDiagram pair;
  pair.rows = {d.rows[row_a], d.rows[row_b]};
  return pair;
}

}  // namespace amalgam
