#ifndef SYMDG_TABLES_HPP
#define SYMDG_TABLES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symdg/permutation.hpp"
#include "symdg/sigma.hpp"

namespace symdg {

/// Row x = h g_j k of the double-coset decomposition tables.
struct TableRow {
  int table; // 1..4
  std::string x, h, k;
  int j; // 1 or 2
};

/// Rows of the four tables verbatim: x ∈ S1 S3^β, S1 (S3^-1)^β (j = 1), S1 S2^β, S1^-1 S4^β (j = 2).
inline std::vector<TableRow> const &tables_fixture()
{
  static std::vector<TableRow> const rows = {
    {1, "ac^3", "su\\beta", "sv\\beta", 1},
    {1, "ad", "su^2\\beta", "s^3tv\\beta", 1},
    {1, "acd^2", "sv\\beta", "s^2v\\beta", 1},
    {1, "ac^4d^2", "suv\\beta", "tv\\beta", 1},
    {1, "a^5c^3", "u\\beta", "s\\beta", 1},
    {1, "a^5d", "u^2\\beta", "s^3t\\beta", 1},
    {1, "a^5cd^2", "v\\beta", "s^2\\beta", 1},
    {1, "a^5c^4d^2", "uv\\beta", "t\\beta", 1},
    {1, "a^6bc^3", "tu\\beta", "su^2v\\beta", 1},
    {1, "a^6bd", "tu^2\\beta", "s^3tu^2v\\beta", 1},
    {1, "a^6bcd^2", "tv\\beta", "s^2u^2v\\beta", 1},
    {1, "a^6bc^4d^2", "tuv\\beta", "tu^2v\\beta", 1},
    {1, "a^6b^2c^3", "s^3u\\beta", "su^2\\beta", 1},
    {1, "a^6b^2d", "s^3u^2\\beta", "s^3tu^2\\beta", 1},
    {1, "a^6b^2cd^2", "s^3v\\beta", "s^2u^2\\beta", 1},
    {1, "a^6b^2c^4d^2", "s^3uv\\beta", "tu^2\\beta", 1},

    {2, "ac^4", "s\\beta", "v\\beta", 1},
    {2, "ad^2", "su^2v\\beta", "s^3v\\beta", 1},
    {2, "a(cd^2)^{-1}", "su^3\\beta", "stv\\beta", 1},
    {2, "a(c^4d^2)^{-1}", "su^3v\\beta", "s^2tv\\beta", 1},
    {2, "a^5c^4", "\\beta", "\\beta", 1},
    {2, "a^5d^2", "u^2v\\beta", "s^3\\beta", 1},
    {2, "a^5(cd^2)^{-1}", "u^3\\beta", "st\\beta", 1},
    {2, "a^5(c^4d^2)^{-1}", "u^3v\\beta", "s^2t\\beta", 1},
    {2, "a^6bc^4", "t\\beta", "u^2v\\beta", 1},
    {2, "a^6bd^2", "tu^2v\\beta", "s^3u^2v\\beta", 1},
    {2, "a^6b(cd^2)^{-1}", "tu^3\\beta", "stu^2v\\beta", 1},
    {2, "a^6b(c^4d^2)^{-1}", "tu^3v\\beta", "s^2tu^2v\\beta", 1},
    {2, "a^6b^2c^4", "s^3\\beta", "u^2\\beta", 1},
    {2, "a^6b^2d^2", "s^3u^2v\\beta", "s^3u^2\\beta", 1},
    {2, "a^6b^2(cd^2)^{-1}", "s^3u^3\\beta", "stu^2\\beta", 1},
    {2, "a^6b^2(c^4d^2)^{-1}", "s^3u^3v\\beta", "s^2tu^2\\beta", 1},

    {3, "acd", "u^2\\alpha", "t\\alpha", 2},
    {3, "a(cd)^{-1}", "u^3\\alpha", "tu^3\\alpha", 2},
    {3, "a^5cd", "s^3u^2\\alpha", "s^3\\alpha", 2},
    {3, "a^5(cd)^{-1}", "s^3u^3\\alpha", "s^3u^3\\alpha", 2},
    {3, "a^6bcd", "su^2\\alpha", "\\alpha", 2},
    {3, "a^6b(cd)^{-1}", "su^3\\alpha", "u^3\\alpha", 2},
    {3, "a^6b^2cd", "s^2u^2\\alpha", "s\\alpha", 2},
    {3, "a^6b^2(cd)^{-1}", "s^2u^3\\alpha", "su^3\\alpha", 2},

    {4, "a^6c^2d", "tu", "s^3u", 2},
    {4, "a^6(c^2d)^{-1}", "t", "s^3", 2},
    {4, "a^2c^2d", "u", "u", 2},
    {4, "a^2(c^2d)^{-1}", "1", "1", 2},
    {4, "(a^6b)^{-1}c^2d", "su", "s^2u", 2},
    {4, "(a^6b)^{-1}(c^2d)^{-1}", "s", "s^2", 2},
    {4, "(a^6b^2)^{-1}c^2d", "s^2u", "su", 2},
    {4, "(a^6b^2)^-1(c^2d)^{-1}", "s^2", "s", 2},
  };
  return rows;
}

/// Located mismatch of one table row.
struct TableRowFailure {
  std::size_t index;
  TableRow row;
  std::string lhs; // x as cycles
  std::string rhs; // h g_j k as cycles
  std::string message;
};

/// nullopt when x = h g_j k holds.
inline std::optional<TableRowFailure> check_table_row(SigmaInstance const &si, TableRow const &row,
                                                      std::size_t index)
{
  auto const w = si.words();
  Permutation const x = w.evaluate(row.x);
  Permutation const g = row.j == 1 ? si.g1 : si.g2;
  Permutation const rhs = w.evaluate(row.h) * g * w.evaluate(row.k);
  if (x == rhs)
    return std::nullopt;
  std::size_t first_point = 0;
  while (first_point < 64 && x[first_point] == rhs[first_point])
    ++first_point;
  return TableRowFailure{index, row, x.to_cycle_string(), rhs.to_cycle_string(),
                         "table " + std::to_string(row.table) + " row " + std::to_string(index) + ": " +
                           row.x + " != (" + row.h + ") g" + std::to_string(row.j) + " (" + row.k +
                           "); first difference at point " + std::to_string(first_point + 1) + " (" +
                           std::to_string(x[first_point] + 1) + " vs " +
                           std::to_string(rhs[first_point] + 1) + ")"};
}

inline std::vector<TableRowFailure> check_tables(SigmaInstance const &si, std::vector<TableRow> const &rows)
{
  std::vector<TableRowFailure> failures;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (auto failure = check_table_row(si, rows[i], i))
      failures.push_back(std::move(*failure));
  }
  return failures;
}

} // namespace symdg

#endif // SYMDG_TABLES_HPP
