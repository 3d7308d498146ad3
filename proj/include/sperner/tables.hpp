#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sperner {

enum class TableId { t1, adjoints, chain4, v_small, v_big, w_big, gmin };

std::optional<TableId> parse_table_id(std::string_view name);
std::string table_id_name(TableId id);

struct TableOptions {
  std::optional<std::uint64_t> from, to;  // row range (n, or k for adjoints)
  bool csv = false;
};

/// Largest n accepted by the estimator and chain tables.
inline constexpr std::uint64_t kTableMaxN = 4096;
/// Most rows a ranged table may have.
inline constexpr std::uint64_t kTableMaxRows = 100'000;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Cells hold full decimal integers in csv mode; plain mode groups digits by
/// threes and switches to d.dddddde<exp> for values beyond 15 digits.
/// Ratios carry 9 places ("undefined" for a zero lower estimate).
/// ResourceLimit for ranges past the caps, BadInput for an empty range or
/// for overriding the fixed gmin table.
Table build_table(TableId id, const TableOptions& options);

/// csv: comma-separated with a header line. plain: space-aligned columns.
std::string render_table(const Table& t, bool csv);

}  // namespace sperner
