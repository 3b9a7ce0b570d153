#pragma once

// Text renderings of a membership curve: CSV, aligned table, polyline CSV,
// and the alpha-grid mini language used on the command line.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyqp/errors.hpp"
#include "fuzzyqp/sweep.hpp"

namespace fuzzyqp {

namespace detail {

inline double parse_real(std::string_view s, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw DomainError("cannot read " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

inline double snap(double v) { return std::round(v * 1e12) / 1e12; }

}  // namespace detail

/// "start:stop:step" (inclusive of stop), "a,b,c", or a single value.
inline std::vector<double> parse_alpha_spec(std::string_view spec) {
  std::vector<double> grid;
  if (spec.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::size_t pos = 0;
    while (true) {
      const auto next = spec.find(':', pos);
      parts.push_back(detail::parse_real(spec.substr(pos, next - pos), "alpha range bound"));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    if (parts.size() != 3) throw DomainError("alpha range must read start:stop:step");
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (!(step > 0.0)) throw DomainError("alpha step must be positive");
    if (stop < start) throw DomainError("alpha range stop is below start");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long k = 0; k <= count; ++k) grid.push_back(detail::snap(start + static_cast<double>(k) * step));
  } else {
    std::size_t pos = 0;
    while (true) {
      const auto next = spec.find(',', pos);
      grid.push_back(detail::parse_real(spec.substr(pos, next - pos), "alpha value"));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  }
  return checked_grid(std::move(grid));
}

/// Ten significant digits; negative zero prints as 0.
inline std::string format_value(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline std::vector<std::string> csv_header(std::size_t n) {
  std::vector<std::string> h{"alpha", "z_lower", "z_upper"};
  for (std::size_t j = 1; j <= n; ++j) h.push_back("x_lower_" + std::to_string(j));
  for (std::size_t j = 1; j <= n; ++j) h.push_back("x_upper_" + std::to_string(j));
  for (const char* s : {"iter_lower", "iter_upper", "converged_lower", "converged_upper"}) h.emplace_back(s);
  return h;
}

inline std::vector<std::string> csv_row(const AlphaRecord& r) {
  std::vector<std::string> row{format_value(r.alpha), format_value(r.z_lower), format_value(r.z_upper)};
  for (Eigen::Index j = 0; j < r.x_lower.size(); ++j) row.push_back(format_value(r.x_lower(j)));
  for (Eigen::Index j = 0; j < r.x_upper.size(); ++j) row.push_back(format_value(r.x_upper(j)));
  row.push_back(std::to_string(r.lower_diag.iterations));
  row.push_back(std::to_string(r.upper_diag.iterations));
  row.emplace_back(r.lower_diag.converged ? "true" : "false");
  row.emplace_back(r.upper_diag.converged ? "true" : "false");
  return row;
}

inline void write_csv_line(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) os << ',';
    os << cells[k];
  }
  os << '\n';
}

inline void write_csv(std::ostream& os, const MembershipCurve& curve) {
  const std::size_t n = curve.records.empty() ? 0 : static_cast<std::size_t>(curve.records.front().x_lower.size());
  write_csv_line(os, csv_header(n));
  for (const auto& r : curve.records) write_csv_line(os, csv_row(r));
}

inline void write_aligned(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  }
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << "  ";
      os << std::setw(static_cast<int>(width[k])) << row[k];
    }
    os << '\n';
  }
}

inline void write_table(std::ostream& os, const MembershipCurve& curve) {
  const std::size_t n = curve.records.empty() ? 0 : static_cast<std::size_t>(curve.records.front().x_lower.size());
  std::vector<std::vector<std::string>> rows{csv_header(n)};
  for (const auto& r : curve.records) rows.push_back(csv_row(r));
  write_aligned(os, rows);
  if (curve.coincided_at) {
    os << "bounds coincide at alpha = " << format_value(*curve.coincided_at) << '\n';
  } else {
    os << "bounds do not coincide on this grid\n";
  }
}

inline void write_polyline_csv(std::ostream& os, const std::vector<PolylinePoint>& line) {
  os << "z,alpha\n";
  for (const auto& p : line) os << format_value(p.z) << ',' << format_value(p.alpha) << '\n';
}

inline void write_polyline_table(std::ostream& os, const std::vector<PolylinePoint>& line) {
  std::vector<std::vector<std::string>> rows{{"z", "alpha"}};
  for (const auto& p : line) rows.push_back({format_value(p.z), format_value(p.alpha)});
  write_aligned(os, rows);
}

}  // namespace fuzzyqp
