#include "sperner/tables.hpp"

#include <algorithm>
#include <sstream>

#include "sperner/bigcomb.hpp"
#include "sperner/errors.hpp"
#include "sperner/estimates.hpp"
#include "sperner/genset.hpp"

namespace sperner {

namespace {

constexpr int kRatioDigits = 9;

struct Range {
  std::uint64_t from, to;
};

Range resolve(const TableOptions& o, Range def, std::uint64_t min_from, std::uint64_t max_to) {
  Range r{o.from.value_or(def.from), o.to.value_or(def.to)};
  if (r.from < min_from) throw BadInput("range must start at " + std::to_string(min_from) + " or later");
  if (r.from > r.to) throw BadInput("empty range");
  if (r.to > max_to) throw ResourceLimit("range end " + std::to_string(r.to) + " exceeds the cap " + std::to_string(max_to));
  if (r.to - r.from + 1 > kTableMaxRows) throw ResourceLimit("too many rows requested");
  return r;
}

std::string cell(const BigNat& v, bool csv, int significant) {
  if (csv) return v.get_str(10);
  if (decimal_digits(v) > 15) return to_scientific(v, significant);
  return group_thousands(v);
}

Table estimate_table(Pattern p, const std::vector<std::uint64_t>& ns, bool csv) {
  Table t{{"n", "loS", "upS", "ratio"}, {}};
  for (auto n : ns) {
    const auto pair = sp_bracket(p, n);
    t.rows.push_back({std::to_string(n), cell(pair.lo, csv, 7), cell(pair.hi, csv, 7),
                      rounded_ratio(pair.hi, pair.lo, kRatioDigits)});
  }
  return t;
}

std::vector<std::uint64_t> span_of(Range r) {
  std::vector<std::uint64_t> out;
  for (auto n = r.from; n <= r.to; ++n) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> fixed_or_range(const TableOptions& o, std::vector<std::uint64_t> fixed,
                                          std::uint64_t min_from) {
  if (!o.from && !o.to) return fixed;
  return span_of(resolve(o, {fixed.front(), fixed.back()}, min_from, kTableMaxN));
}

}  // namespace

std::optional<TableId> parse_table_id(std::string_view name) {
  for (auto id : {TableId::t1, TableId::adjoints, TableId::chain4, TableId::v_small, TableId::v_big, TableId::w_big,
                  TableId::gmin})
    if (table_id_name(id) == name) return id;
  return std::nullopt;
}

std::string table_id_name(TableId id) {
  switch (id) {
    case TableId::t1: return "t1";
    case TableId::adjoints: return "adjoints";
    case TableId::chain4: return "chain4";
    case TableId::v_small: return "v-small";
    case TableId::v_big: return "v-big";
    case TableId::w_big: return "w-big";
    case TableId::gmin: return "gmin";
  }
  return "?";
}

Table build_table(TableId id, const TableOptions& o) {
  switch (id) {
    case TableId::t1:
      return estimate_table(Pattern::W, span_of(resolve(o, {3, 30}, 3, kTableMaxN)), o.csv);
    case TableId::v_small:
      return estimate_table(Pattern::V, span_of(resolve(o, {2, 15}, 2, kTableMaxN)), o.csv);
    case TableId::v_big:
      return estimate_table(Pattern::V, fixed_or_range(o, {2022, 2023}, 2), o.csv);
    case TableId::w_big:
      return estimate_table(Pattern::W, fixed_or_range(o, {2022, 2023, 2024}, 3), o.csv);
    case TableId::chain4: {
      Table t{{"n", "Sp(chain4,n)"}, {}};
      for (auto n : fixed_or_range(o, {17, 18, 2024, 2025, 2026}, 0))
        t.rows.push_back({std::to_string(n), cell(fsb(static_cast<std::int64_t>(n) - 4), o.csv, 4)});
      return t;
    }
    case TableId::adjoints: {
      const auto r = resolve(o, {1, 15}, 1, 1'000'000'000);
      Table t{{"k", "upS*(W,k)", "loS*(W,k)"}, {}};
      const auto up = upper_estimate_fn(Pattern::W), lo = lower_estimate_fn(Pattern::W);
      for (auto k = r.from; k <= r.to; ++k)
        t.rows.push_back({std::to_string(k), std::to_string(left_adjoint(up, BigNat(static_cast<unsigned long>(k)))),
                          std::to_string(left_adjoint(lo, BigNat(static_cast<unsigned long>(k))))});
      return t;
    }
    case TableId::gmin: {
      if (o.from || o.to) throw BadInput("the gmin table has fixed columns");
      const std::vector<std::string> ks = {"2022", "2023", "3e606", "5e606"};
      Table t{{"lattice"}, {}};
      for (const auto& k : ks) t.header.push_back(k);
      const std::vector<std::pair<std::string, std::string>> lattices = {
          {"chain4", "lchain:5"}, {"D(V)", "dnv"}, {"D(W)", "dnw"}};
      for (const auto& [name, spec] : lattices) {
        const auto d = lattice_from_spec(spec);
        std::vector<std::string> row{name};
        for (const auto& k : ks) {
          const auto g = gmin_power(d, parse_bignat(k));
          row.push_back(g.kind == ResultKind::exact ? std::to_string(g.value)
                                                    : std::to_string(g.lo) + ".." + std::to_string(g.hi));
        }
        t.rows.push_back(std::move(row));
      }
      return t;
    }
  }
  throw BadInput("unknown table");
}

std::string render_table(const Table& t, bool csv) {
  std::ostringstream out;
  if (csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return out.str();
  }
  std::vector<std::size_t> width(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(t.header);
  for (const auto& r : t.rows) measure(r);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += std::string(width[i] - cells[i].size(), ' ') + cells[i];
    }
    out << s << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out.str();
}

}  // namespace sperner
