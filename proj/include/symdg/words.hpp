#ifndef SYMDG_WORDS_HPP
#define SYMDG_WORDS_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "symdg/errors.hpp"
#include "symdg/permutation.hpp"

namespace symdg {

/**
 * Evaluates group words written as in the tables, e.g. "a^6b(c^4d^2)^{-1}",
 * "s^3tu^2v\beta" or "1". Generators are single letters, "\alpha", "\beta",
 * "α" or "β"; exponents are "^k", "^-k" or "^{k}". Products compose left to
 * right like Permutation::operator*.
 */
class WordEvaluator {
public:
  WordEvaluator(std::size_t degree, std::map<std::string, Permutation> generators)
  : _degree(degree), _generators(std::move(generators))
  {}

  Permutation evaluate(std::string_view word) const
  {
    std::size_t pos = 0;
    Permutation result = product(word, pos);
    skip(word, pos);
    if (pos != word.size())
      fail(word, pos, "unexpected character");
    return result;
  }

private:
  Permutation product(std::string_view w, std::size_t &pos) const
  {
    Permutation result(_degree);
    for (;;) {
      skip(w, pos);
      if (pos >= w.size() || w[pos] == ')')
        return result;
      Permutation factor = atom(w, pos);
      skip(w, pos);
      if (pos < w.size() && w[pos] == '^') {
        ++pos;
        factor = factor.pow(exponent(w, pos));
      }
      result *= factor;
    }
  }

  Permutation atom(std::string_view w, std::size_t &pos) const
  {
    if (w[pos] == '(') {
      ++pos;
      Permutation inner = product(w, pos);
      if (pos >= w.size() || w[pos] != ')')
        fail(w, pos, "missing ')'");
      ++pos;
      return inner;
    }
    if (w[pos] == '1') {
      ++pos;
      return Permutation(_degree);
    }
    std::string name;
    if (w[pos] == '\\') {
      std::size_t start = ++pos;
      while (pos < w.size() && std::isalpha(static_cast<unsigned char>(w[pos])))
        ++pos;
      name = std::string(w.substr(start, pos - start));
    } else if (w.substr(pos, 2) == "\xCE\xB1") { // α
      pos += 2;
      name = "alpha";
    } else if (w.substr(pos, 2) == "\xCE\xB2") { // β
      pos += 2;
      name = "beta";
    } else if (std::isalpha(static_cast<unsigned char>(w[pos]))) {
      name = std::string(1, w[pos++]);
    } else {
      fail(w, pos, "expected a generator");
    }
    auto it = _generators.find(name);
    if (it == _generators.end())
      fail(w, pos, "unknown generator \"" + name + "\"");
    return it->second;
  }

  long long exponent(std::string_view w, std::size_t &pos) const
  {
    skip(w, pos);
    bool braced = pos < w.size() && w[pos] == '{';
    if (braced)
      ++pos;
    skip(w, pos);
    bool negative = false;
    if (pos < w.size() && (w[pos] == '-' || w[pos] == '+'))
      negative = w[pos++] == '-';
    std::size_t start = pos;
    while (pos < w.size() && std::isdigit(static_cast<unsigned char>(w[pos])))
      ++pos;
    if (start == pos)
      fail(w, pos, "expected an exponent");
    long long e = std::stoll(std::string(w.substr(start, pos - start)));
    if (braced) {
      skip(w, pos);
      if (pos >= w.size() || w[pos] != '}')
        fail(w, pos, "missing '}'");
      ++pos;
    }
    return negative ? -e : e;
  }

  static void skip(std::string_view w, std::size_t &pos)
  {
    while (pos < w.size() && std::isspace(static_cast<unsigned char>(w[pos])))
      ++pos;
  }

  [[noreturn]] static void fail(std::string_view w, std::size_t pos, std::string const &what)
  {
    throw ParseError(what + " at offset " + std::to_string(pos) + " in word \"" + std::string(w) + "\"");
  }

  std::size_t _degree;
  std::map<std::string, Permutation> _generators;
};

} // namespace symdg

#endif // SYMDG_WORDS_HPP
