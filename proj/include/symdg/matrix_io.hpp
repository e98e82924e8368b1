#ifndef SYMDG_MATRIX_IO_HPP
#define SYMDG_MATRIX_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "symdg/errors.hpp"
#include "symdg/matrix.hpp"
#include "symdg/polynomial.hpp"
#include "symdg/rational.hpp"

namespace symdg {

/// Text format: "rows cols" then row-major entries, integers or "p/q".
inline RationalMatrix read_matrix(std::istream &in)
{
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols))
    throw ParseError("matrix header must be \"rows cols\"");
  if (rows <= 0 || cols <= 0)
    throw ParseError("matrix dimensions must be positive");
  RationalMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::string token;
  for (long long i = 0; i < rows; ++i) {
    for (long long j = 0; j < cols; ++j) {
      if (!(in >> token))
        throw ParseError("matrix file ends after " + std::to_string(i * cols + j) + " of " +
                         std::to_string(rows * cols) + " entries");
      m(i, j) = parse_rational(token);
    }
  }
  if (in >> token)
    throw ParseError("trailing data after matrix entries: \"" + token + "\"");
  return m;
}

inline RationalMatrix parse_matrix(std::string const &text)
{
  std::istringstream in(text);
  return read_matrix(in);
}

inline void write_matrix(std::ostream &out, RationalMatrix const &m)
{
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << m(i, j).get_str();
    out << '\n';
  }
}

inline std::string format_matrix(RationalMatrix const &m)
{
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

/// Ascending coefficient list, e.g. "[-1, 0, 1]".
inline std::string coefficient_list(RationalPolynomial const &p)
{
  std::string out = "[";
  for (std::size_t k = 0; k < p.coefficients().size(); ++k)
    out += (k ? ", " : "") + p.coefficients()[k].get_str();
  return out + "]";
}

} // namespace symdg

#endif // SYMDG_MATRIX_IO_HPP
