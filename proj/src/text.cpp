#include <cctype>

#include "stronglie/error.hpp"
#include "stronglie/poly.hpp"

namespace stronglie {

std::string format_poly(const Poly &f, const Alphabet &alphabet) {
  if (f.is_zero())
    return "0";
  std::string out;
  for (const auto &[w, c] : f.terms()) {
    if (!out.empty())
      out += " + ";
    const std::string word = format_word(w, alphabet);
    if (word.empty()) {
      out += std::to_string(c);
    } else {
      if (c != 1)
        out += std::to_string(c) + "*";
      out += word;
    }
  }
  return out;
}

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, const Alphabet &alphabet, PrimeField field,
             std::size_t line, std::size_t column_base)
      : text_(text), alphabet_(alphabet), field_(field), line_(line), base_(column_base) {}

  Poly parse() {
    Poly f(alphabet_.size(), field_);
    skip_ws();
    if (at_end())
      fail("empty polynomial");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto [w, c] = term();
      f.add_term(w, negative ? field_.neg(c) : c);
      skip_ws();
      if (at_end())
        break;
      if (peek() == '+')
        negative = false;
      else if (peek() == '-')
        negative = true;
      else
        fail(std::string("expected '+' or '-', found '") + peek() + "'");
      ++pos_;
    }
    return f;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(what, line_, base_ + pos_ + 1);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  std::uint64_t number() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      if (v > (1ull << 40))
        fail("number too large");
      ++pos_;
    }
    return v;
  }

  Word factor() {
    skip_ws();
    if (at_end() || !std::islower(static_cast<unsigned char>(peek())))
      fail("expected a generator");
    const std::size_t start = pos_;
    while (!at_end() && (std::islower(static_cast<unsigned char>(peek())) ||
                         std::isdigit(static_cast<unsigned char>(peek()))))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const std::size_t g = alphabet_.index_of(name);
    if (g == alphabet_.size()) {
      pos_ = start;
      fail("unknown generator '" + std::string(name) + "'");
    }
    std::uint64_t e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      e = number();
      if (e > 4096)
        fail("exponent too large");
    }
    return Word::power(static_cast<Letter>(g), e);
  }

  std::pair<Word, Residue> term() {
    skip_ws();
    if (at_end())
      fail("expected a term");
    Residue c = 1;
    Word w;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = field_.reduce(static_cast<std::int64_t>(number()));
      skip_ws();
      if (at_end() || peek() != '*')
        return {w, c};
      ++pos_;
    }
    w = factor();
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*')
        break;
      ++pos_;
      w *= factor();
    }
    return {w, c};
  }

  std::string_view text_;
  const Alphabet &alphabet_;
  PrimeField field_;
  std::size_t line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, const Alphabet &alphabet, PrimeField field,
                std::size_t line, std::size_t column_base) {
  return PolyParser(text, alphabet, field, line, column_base).parse();
}

Word parse_word(std::string_view text, const Alphabet &alphabet) {
  auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos)
    return {};
  // Any prime works here; only the support matters.
  const Poly f = parse_poly(text, alphabet, PrimeField(2));
  if (f.size() != 1 || f.terms().begin()->second != 1)
    throw Error("'" + std::string(text) + "' is not a single word");
  return f.terms().begin()->first;
}

} // namespace stronglie
