#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace stronglie {

using Letter = std::uint8_t;

/// A monomial of the free associative algebra: a sequence of generator
/// indices. The empty word is the unit monomial.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  /// `g` repeated `n` times.
  static Word power(Letter g, std::size_t n) { return Word(std::vector<Letter>(n, g)); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter> &letters() const noexcept { return letters_; }

  Word operator*(const Word &rhs) const {
    std::vector<Letter> out;
    out.reserve(size() + rhs.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(out));
  }
  Word &operator*=(const Word &rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }

  Word reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

  /// Degree-lexicographic order: shorter words first, then letter by letter.
  friend std::strong_ordering operator<=>(const Word &x, const Word &y) {
    if (auto c = x.size() <=> y.size(); c != 0)
      return c;
    return x.letters_ <=> y.letters_;
  }
  friend bool operator==(const Word &, const Word &) = default;

private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word &w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Letter l : w) {
      h ^= l + 1;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

/// Occurrence count of each generator.
class Multiweight {
public:
  Multiweight() = default;
  explicit Multiweight(std::vector<unsigned> counts) : counts_(std::move(counts)) {}
  Multiweight(std::initializer_list<unsigned> counts) : counts_(counts) {}

  static Multiweight of(const Word &w, std::size_t generators);

  std::size_t generators() const noexcept { return counts_.size(); }
  unsigned operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<unsigned> &counts() const noexcept { return counts_; }
  unsigned total() const noexcept;

  /// Componentwise <=.
  bool fits_in(const Multiweight &outer) const;
  Multiweight operator+(const Multiweight &o) const;
  /// Componentwise difference; requires fits_in(*this).
  Multiweight operator-(const Multiweight &o) const;

  std::string to_string() const;

  friend auto operator<=>(const Multiweight &, const Multiweight &) = default;

private:
  std::vector<unsigned> counts_;
};

inline Multiweight multiweight_of(const Word &w, std::size_t generators) {
  return Multiweight::of(w, generators);
}

/// All words of the given multiweight in degree-lexicographic order.
std::vector<Word> words_of(const Multiweight &mw);

/// All multiweights on `generators` letters with total degree exactly `degree`,
/// in lexicographic order of the count vectors.
std::vector<Multiweight> multiweights_of_degree(std::size_t generators, unsigned degree);

/// All multiweights componentwise <= `outer`.
std::vector<Multiweight> sub_multiweights(const Multiweight &outer);

/// Generator names, index i <-> names[i]. Identifiers match [a-z][a-z0-9]*.
class Alphabet {
public:
  Alphabet() : Alphabet(2) {}
  /// Default names: a, b, c1, c2, ...
  explicit Alphabet(std::size_t generators);
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string &name(Letter i) const { return names_.at(i); }
  const std::vector<std::string> &names() const noexcept { return names_; }
  /// Returns size() when unknown.
  std::size_t index_of(std::string_view name) const;
  bool is_default() const;

  friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
  std::vector<std::string> names_;
};

/// Exponent-compressed rendering, e.g. "a^2*b*a"; the empty word renders as "".
std::string format_word(const Word &w, const Alphabet &alphabet);
/// Inverse of format_word; "" and "1" both give the empty word.
Word parse_word(std::string_view text, const Alphabet &alphabet);

} // namespace stronglie
