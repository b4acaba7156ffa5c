#pragma once

// Rendering of census counters as CSV or aligned text tables, in the two
// standard shapes: per-class 5-variable property counts, and per-class
// preservation counts for the 9-variable extensions.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bfca/class_registry.hpp"
#include "bfca/sweep.hpp"

namespace bfca {

enum class ReportShape { five_var, preservation };
enum class ReportFormat { csv, table };

// Percentage of num/den with exactly four decimal places, floored, then
// printed with trailing zeros (and a trailing dot) removed: 62/64 gives
// "96.875", 1/2 gives "50", 68752/2^32 gives "0.0016".
inline std::string floor_percent(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return "0";
  const std::uint64_t scaled = num * 1000000ull / den; // percent * 10^4
  std::string out = std::to_string(scaled / 10000);
  std::uint64_t frac = scaled % 10000;
  if (frac == 0) return out;
  char digits[5];
  for (int i = 3; i >= 0; --i) {
    digits[i] = static_cast<char>('0' + frac % 10);
    frac /= 10;
  }
  int len = 4;
  while (len > 0 && digits[len - 1] == '0') --len;
  out += '.';
  out.append(digits, static_cast<std::size_t>(len));
  return out;
}

namespace detail {

inline std::string render_cells(const std::vector<std::vector<std::string>>& rows,
                                ReportFormat format) {
  std::string out;
  if (format == ReportFormat::csv) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += row[i];
      }
      out += '\n';
    }
    return out;
  }
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.resize(i + 1, 0);
      width[i] = std::max(width[i], row[i].size());
    }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += "  ";
      out += row[i];
      if (i + 1 < row.size())
        out.append(width[i] - row[i].size(), ' ');
    }
    out += '\n';
  }
  return out;
}

} // namespace detail

inline std::string render_report(const ClassCounters& counters,
                                 ReportShape shape, ReportFormat format,
                                 const ClassRegistry& reg =
                                     ClassRegistry::builtin(),
                                 bool include_empty = true) {
  std::vector<std::vector<std::string>> rows;
  auto n = [](std::uint64_t v) { return std::to_string(v); };

  if (shape == ReportShape::five_var) {
    rows.push_back({"class", "degree", "linear", "sac", "sac_pct", "ci1",
                    "ci1_pct", "balanced", "balanced_pct", "pc2", "pc2_pct",
                    "pc3", "pc3_pct", "pc4", "pc4_pct", "pc5", "pc5_pct"});
    auto emit = [&](const std::string& name, const std::string& degree,
                    const std::string& linear, const ClassCounters::Row& r) {
      std::vector<std::string> row{name, degree, linear};
      const std::uint64_t m = r.members;
      row.push_back(n(r.sac));
      row.push_back(floor_percent(r.sac, m));
      row.push_back(n(r.ci1));
      row.push_back(floor_percent(r.ci1, m));
      row.push_back(n(r.balanced));
      row.push_back(floor_percent(r.balanced, m));
      for (int k = 0; k < 4; ++k) {
        row.push_back(n(r.pc[k]));
        row.push_back(floor_percent(r.pc[k], m));
      }
      rows.push_back(std::move(row));
    };
    for (int i = 0; i < reg.size(); ++i) {
      const ClassCounters::Row& r = counters.rows[i];
      if (!include_empty && r.members == 0) continue;
      const ClassInfo& info = reg.info(i);
      emit(info.rep_hex, n(info.rep_degree),
           info.rep_degree <= 1 ? "yes" : "no", r);
    }
    emit("total", "-", "-", counters.total());
  } else {
    rows.push_back({"class", "sac_pres", "sac_pres_pct", "ci1_pres",
                    "ci1_pres_pct", "balanced_pres", "balanced_pres_pct",
                    "pc_pres", "pc_pres_pct", "deg_ge_pres", "deg_ge_pres_pct",
                    "nonlinear_pres", "nonlinear_pres_pct"});
    auto emit = [&](const std::string& name, const ClassCounters::Row& r) {
      std::vector<std::string> row{name};
      const std::uint64_t m = r.members;
      row.push_back(n(r.sac_pres));
      row.push_back(floor_percent(r.sac_pres, m));
      row.push_back(n(r.ci1_pres));
      row.push_back(floor_percent(r.ci1_pres, m));
      row.push_back(n(r.balanced_pres));
      row.push_back(floor_percent(r.balanced_pres, m));
      row.push_back(n(r.pc_pres[0]));
      row.push_back(floor_percent(r.pc_pres[0], m));
      row.push_back(n(r.deg_ge_pres));
      row.push_back(floor_percent(r.deg_ge_pres, m));
      row.push_back(n(r.nonlinear_pres));
      row.push_back(floor_percent(r.nonlinear_pres, m));
      rows.push_back(std::move(row));
    };
    for (int i = 0; i < reg.size(); ++i) {
      if (!include_empty && counters.rows[i].members == 0) continue;
      emit(reg.info(i).rep_hex, counters.rows[i]);
    }
    emit("total", counters.total());
  }
  return detail::render_cells(rows, format);
}

} // namespace bfca
