#ifndef SYMDG_SIGMA_REP_HPP
#define SYMDG_SIGMA_REP_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symdg/cyclotomic.hpp"
#include "symdg/matrix.hpp"
#include "symdg/sigma.hpp"

namespace symdg {

/// (k, l) exponent pair of a^k b^l in <a, b> ≅ C7 ⋊ C3.
using FrobeniusWord = std::pair<int, int>;

/**
 * φ(a^k b^l) on the basis 1, ω, ω² with ω = 2: row j holds z^{k 2^j} in
 * column j - l (mod 3). Vectors act as rows, so φ(xy) = φ(x) φ(y).
 */
inline CycloMatrix phi_matrix(int k, int l)
{
  CycloMatrix m(3, 3);
  int power_of_two = 1;
  for (int j = 0; j < 3; ++j) {
    m(j, ((j - l) % 3 + 3) % 3) = CyclotomicElement::zeta_power((k * power_of_two) % 7);
    power_of_two *= 2;
  }
  return m;
}

/// a^{k1} b^{l1} a^{k2} b^{l2} = a^{k1 + 4^{l1} k2} b^{l1 + l2}, from b a b^-1 = a^4.
inline FrobeniusWord frobenius_product(FrobeniusWord x, FrobeniusWord y)
{
  int four_power = 1;
  for (int i = 0; i < ((x.second % 3) + 3) % 3; ++i)
    four_power *= 4;
  return {((x.first + four_power * y.first) % 7 + 7) % 7, ((x.second + y.second) % 3 + 3) % 3};
}

inline CycloMatrix phi_of_set(std::vector<FrobeniusWord> const &words)
{
  CycloMatrix sum(3, 3);
  for (auto const &[k, l] : words)
    sum = sum + phi_matrix(k, l);
  return sum;
}

/// Connection subsets of <a, b> as exponent pairs.
struct FrobeniusSubsets {
  std::vector<FrobeniusWord> S1{{1, 0}, {5, 0}, {6, 1}, {6, 2}};
  std::vector<FrobeniusWord> S1_inv{{6, 0}, {2, 0}, {2, 2}, {4, 1}};
  std::vector<FrobeniusWord> S2{{1, 1}, {5, 2}};
  std::vector<FrobeniusWord> S3{{3, 0}, {0, 1}, {1, 2}, {4, 2}};
  std::vector<FrobeniusWord> S3_inv{{4, 0}, {0, 2}, {3, 1}, {5, 1}};
  std::vector<FrobeniusWord> S4{{2, 1}, {3, 2}};
};

struct PhiMatrices {
  CycloMatrix S1, S1_inv, S2, S3, S3_inv, S4;
};

inline PhiMatrices phi_matrices()
{
  FrobeniusSubsets const f;
  return {phi_of_set(f.S1), phi_of_set(f.S1_inv), phi_of_set(f.S2),
          phi_of_set(f.S3), phi_of_set(f.S3_inv), phi_of_set(f.S4)};
}

/// ρ(S) for ρ = φ ⊗ (φ ∘ β), as the six-term Kronecker sum.
inline CycloMatrix rho_S(PhiMatrices const &p)
{
  CycloMatrix const s1 = p.S1 + p.S1_inv;
  CycloMatrix const s3 = p.S3 + p.S3_inv;
  return kronecker(s1, s3) + kronecker(s3, s1) + kronecker(p.S1, p.S2) + kronecker(p.S2, p.S1) +
         kronecker(p.S1_inv, p.S4) + kronecker(p.S4, p.S1_inv);
}

/// ρ(S) summed element by element over the 160 vertices of S, read off their normal forms a^i b^j c^k d^l.
inline CycloMatrix rho_S_elementwise(SigmaInstance const &si)
{
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < si.elements.size(); ++i)
    index.emplace(si.elements[i], i);
  CycloMatrix sum(9, 9);
  for (auto const &x : si.S) {
    std::size_t const v = index.at(x);
    int const l = static_cast<int>(v % 3), k = static_cast<int>(v / 3 % 7);
    int const j = static_cast<int>(v / 21 % 3), i = static_cast<int>(v / 63);
    sum = sum + kronecker(phi_matrix(i, j), phi_matrix(k, l));
  }
  return sum;
}

/// Printed φ matrices, each sum φ(S) + φ(S^-1) given by its two summands.
struct PrintedPhiFixture {
  using Entries = std::array<std::array<char const *, 3>, 3>;
  Entries S1, S1_inv, S3, S3_inv, S2, S4;
};

inline PrintedPhiFixture const &printed_phi_fixture()
{
  static PrintedPhiFixture const f{
    {{{"z^5+z", "z^6", "z^6"}, {"z^5", "z^2+z^3", "z^5"}, {"z^3", "z^3", "z^6+z^4"}}},
    {{{"z^6+z^2", "z^2", "z^4"}, {"z", "z^5+z^4", "z^4"}, {"z", "z^2", "z^3+z"}}},
    {{{"z^3", "z^4+z", "1"}, {"1", "z^6", "z^2+z"}, {"z^4+z^2", "1", "z^5"}}},
    {{{"z^4", "1", "z^5+z^3"}, {"z^6+z^3", "z", "1"}, {"1", "z^6+z^5", "z^2"}}},
    {{{"0", "z^5", "z"}, {"z^2", "0", "z^3"}, {"z^6", "z^4", "0"}}},
    {{{"0", "z^3", "z^2"}, {"z^4", "0", "z^6"}, {"z^5", "z", "0"}}},
  };
  return f;
}

/// Change-of-basis data, transcribed as expressions in z, x1..x3 and y1..y4.
struct ChangeOfBasisFixture {
  std::map<std::string, std::string> constants;
  std::vector<std::vector<std::string>> T1, T2, T1_inv, T2_inv, T3;
  std::string T1_scale, T2_scale; // T = scale * entries
  std::vector<std::vector<long>> A, B, C, D;
};

inline ChangeOfBasisFixture const &change_of_basis_fixture()
{
  static ChangeOfBasisFixture const f{
    {
      {"x1", "z^4+z^3+z+1"},
      {"x2", "z^4-2z^3-2z^2-2z+1"},
      {"x3", "z^5+2z^4+4z^3+2z^2+z"},
      {"y1", "-93506(z^5+z^2)-152738(z^4+z^3)-147903"},
      {"y2", "-9177(z^5+z^2)-13557(z^4+z^3)-58289"},
      {"y3", "56798(z^5+z^2)+98510(z^4+z^3)-85253"},
      {"y4", "75152(z^5+z^2)+125624(z^4+z^3)+31325"},
    },
    {{"1", "-6", "-1"},
     {"z^5+z", "-2(2x3-7z^3)", "-(3x3-7z^3)"},
     {"x1", "2(x1+2z^4+z^2+2)", "x2"}},
    {{"-2", "-2", "2"},
     {"-2(z^5+z)", "-2(3x3-7z^3)", "-x3"},
     {"-2x1", "2x2", "-(2z^4+3(z^3+z^2+z)+2)"}},
    {{"-2(z^4+z^3-2)", "2(z^6-z^5-z^3+z^2)", "2(z^6+z^4-z^2-z)"},
     {"-(z^4+z^3+3)", "z^6+z^2", "z^6+z^4"},
     {"4(z^4+z^3+2)", "-2(z^6-z^4+z^2-z-1)", "-2(z^6-z^5+z^4-z^3-1)"}},
    {{"z^4+z^3-2", "-(z^6-z^5-z^3+z^2)", "-(z^6+z^4-z^2-z)"},
     {"z^4+z^3+1", "z^4+z+1", "z^5+z^3+1"},
     {"2(z^4+z^3+3)", "-2(z^6+z^2)", "-2(z^6+z^4)"}},
    {{"0", "4", "0", "0", "4", "-1"},
     {"0", "4", "2", "0", "0", "1"},
     {"0", "455836", "y1", "0", "2y1+455836", "y1+113959"},
     {"0", "8y2", "-y1", "0", "2y3", "y4"},
     {"1", "0", "0", "0", "0", "0"},
     {"1", "0", "0", "1", "0", "0"}},
    "1/14",
    "1/14",
    {{-16, 0, 0}, {0, 10, 5}, {0, 40, 10}},
    {{8, 0}, {0, 8}},
    {{-16, 24}, {0, -16}},
    {{0, -10}, {-10, 20}},
  };
  return f;
}

/// Fixture constants x1..x3, y1..y4 evaluated in Q(z).
inline std::map<std::string, CyclotomicElement> fixture_environment(ChangeOfBasisFixture const &f)
{
  std::map<std::string, CyclotomicElement> env;
  for (auto const &[name, text] : f.constants)
    env.emplace(name, parse_cyclotomic(text));
  return env;
}

inline CycloMatrix parse_cyclo_matrix(std::vector<std::vector<std::string>> const &rows,
                                      std::map<std::string, CyclotomicElement> const &env,
                                      CyclotomicElement const &scale = CyclotomicElement(1L))
{
  CycloMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw DimensionMismatch("ragged fixture matrix");
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = scale * parse_cyclotomic(rows[i][j], env);
  }
  return m;
}

inline CycloMatrix parse_cyclo_matrix(std::array<std::array<char const *, 3>, 3> const &rows)
{
  CycloMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j)
      m(i, j) = parse_cyclotomic(rows[i][j]);
  }
  return m;
}

inline CycloMatrix integer_cyclo_matrix(std::vector<std::vector<long>> const &rows)
{
  CycloMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = CyclotomicElement(rows[i][j]);
  }
  return m;
}

struct EntryMismatch {
  std::string what;
  std::size_t row, col;
  std::string expected, actual;

  std::string describe() const
  {
    return what + " (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + "): expected " +
           expected + ", got " + actual;
  }
};

inline void compare_matrices(std::string const &what, CycloMatrix const &expected, CycloMatrix const &actual,
                             std::vector<EntryMismatch> &out)
{
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
    out.push_back({what + " shape", expected.rows(), expected.cols(), std::to_string(expected.rows()) + "x" +
                   std::to_string(expected.cols()), std::to_string(actual.rows()) + "x" +
                   std::to_string(actual.cols())});
    return;
  }
  for (std::size_t i = 0; i < expected.rows(); ++i) {
    for (std::size_t j = 0; j < expected.cols(); ++j) {
      if (expected(i, j) != actual(i, j))
        out.push_back({what, i, j, expected(i, j).to_string(), actual(i, j).to_string()});
    }
  }
}

/// Comparison of φ(S_i) with the printed matrices.
inline std::vector<EntryMismatch> verify_phi_matrices(PhiMatrices const &p)
{
  std::vector<EntryMismatch> mismatches;
  auto const &f = printed_phi_fixture();
  compare_matrices("phi(S1)+phi(S1^-1)", parse_cyclo_matrix(f.S1) + parse_cyclo_matrix(f.S1_inv),
                   p.S1 + p.S1_inv, mismatches);
  compare_matrices("phi(S3)+phi(S3^-1)", parse_cyclo_matrix(f.S3) + parse_cyclo_matrix(f.S3_inv),
                   p.S3 + p.S3_inv, mismatches);
  compare_matrices("phi(S2)", parse_cyclo_matrix(f.S2), p.S2, mismatches);
  compare_matrices("phi(S4)", parse_cyclo_matrix(f.S4), p.S4, mismatches);
  compare_matrices("phi(S1)", parse_cyclo_matrix(f.S1), p.S1, mismatches);
  compare_matrices("phi(S1^-1)", parse_cyclo_matrix(f.S1_inv), p.S1_inv, mismatches);
  compare_matrices("phi(S3)", parse_cyclo_matrix(f.S3), p.S3, mismatches);
  compare_matrices("phi(S3^-1)", parse_cyclo_matrix(f.S3_inv), p.S3_inv, mismatches);
  return mismatches;
}

struct SigmaBlockResult {
  bool t1_inverse_ok = false;
  bool t2_inverse_ok = false;
  bool identity_holds = false;
  std::vector<EntryMismatch> mismatches;
  /// Blocks read off 2 L (I3 ⊕ T3)^-1, where L is the conjugated ρ(S).
  CycloMatrix A, B, C, D;
  /// Entries of 2 L (I3 ⊕ T3)^-1 outside the four diagonal blocks that are nonzero.
  std::size_t off_block_nonzero = 0;

  bool ok() const { return t1_inverse_ok && t2_inverse_ok && identity_holds && off_block_nonzero == 0; }
};

inline CycloMatrix sub_matrix(CycloMatrix const &m, std::size_t r0, std::size_t c0, std::size_t rows,
                              std::size_t cols)
{
  CycloMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j)
      out(i, j) = m(r0 + i, c0 + j);
  }
  return out;
}

/**
 * Checks T1 T1^-1 = T2 T2^-1 = I and
 * (I3 ⊕ T3) (T1 ⊗ T2)^-1 ρ(S) (T1 ⊗ T2) = 1/2 (A ⊕ B ⊕ C ⊕ D) (I3 ⊕ T3)
 * with (T1 ⊗ T2)^-1 = T1^-1 ⊗ T2^-1 taken from the fixture.
 */
inline SigmaBlockResult verify_sigma_blocks(CycloMatrix const &rho,
                                            ChangeOfBasisFixture const &f = change_of_basis_fixture())
{
  SigmaBlockResult r;
  auto const env = fixture_environment(f);
  CycloMatrix const t1 = parse_cyclo_matrix(f.T1, env, CyclotomicElement(parse_rational(f.T1_scale)));
  CycloMatrix const t2 = parse_cyclo_matrix(f.T2, env, CyclotomicElement(parse_rational(f.T2_scale)));
  CycloMatrix const t1_inv = parse_cyclo_matrix(f.T1_inv, env);
  CycloMatrix const t2_inv = parse_cyclo_matrix(f.T2_inv, env);
  CycloMatrix const t3 = parse_cyclo_matrix(f.T3, env);
  CycloMatrix const id3 = CycloMatrix::identity(3);

  std::size_t before = r.mismatches.size();
  compare_matrices("T1 T1^-1", id3, t1 * t1_inv, r.mismatches);
  r.t1_inverse_ok = r.mismatches.size() == before;
  before = r.mismatches.size();
  compare_matrices("T2 T2^-1", id3, t2 * t2_inv, r.mismatches);
  r.t2_inverse_ok = r.mismatches.size() == before;

  CycloMatrix const frame = direct_sum(std::vector<CycloMatrix>{id3, t3});
  CycloMatrix const lhs = frame * kronecker(t1_inv, t2_inv) * rho * kronecker(t1, t2);
  CycloMatrix const printed = direct_sum(std::vector<CycloMatrix>{integer_cyclo_matrix(f.A), integer_cyclo_matrix(f.B),
                                               integer_cyclo_matrix(f.C), integer_cyclo_matrix(f.D)});
  CycloMatrix const rhs = printed * frame * CyclotomicElement(Rational(1, 2));
  before = r.mismatches.size();
  compare_matrices("block identity", rhs, lhs, r.mismatches);
  r.identity_holds = r.mismatches.size() == before;

  CycloMatrix const blocks = lhs * inverse(frame) * CyclotomicElement(2L);
  std::array<std::size_t, 4> const starts{0, 3, 5, 7}, sizes{3, 2, 2, 2};
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      std::size_t bi = 0, bj = 0;
      while (bi < 3 && i >= starts[bi + 1])
        ++bi;
      while (bj < 3 && j >= starts[bj + 1])
        ++bj;
      if (bi != bj && !blocks(i, j).is_zero())
        ++r.off_block_nonzero;
    }
  }
  r.A = sub_matrix(blocks, starts[0], starts[0], sizes[0], sizes[0]);
  r.B = sub_matrix(blocks, starts[1], starts[1], sizes[1], sizes[1]);
  r.C = sub_matrix(blocks, starts[2], starts[2], sizes[2], sizes[2]);
  r.D = sub_matrix(blocks, starts[3], starts[3], sizes[3], sizes[3]);
  return r;
}

/// Rational matrix of a cyclotomic matrix with rational entries.
inline RationalMatrix to_rational(CycloMatrix const &m)
{
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_rational())
        throw DomainError("matrix entry " + m(i, j).to_string() + " is not rational");
      out(i, j) = m(i, j).coefficients()[0];
    }
  }
  return out;
}

} // namespace symdg

#endif // SYMDG_SIGMA_REP_HPP
