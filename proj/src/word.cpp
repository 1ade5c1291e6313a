#include "stronglie/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "stronglie/error.hpp"

namespace stronglie {

Multiweight Multiweight::of(const Word &w, std::size_t generators) {
  std::vector<unsigned> counts(generators, 0);
  for (Letter l : w) {
    if (l >= generators)
      throw Error("letter " + std::to_string(l) + " outside a " +
                  std::to_string(generators) + "-generator alphabet");
    ++counts[l];
  }
  return Multiweight(std::move(counts));
}

unsigned Multiweight::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), 0u);
}

bool Multiweight::fits_in(const Multiweight &outer) const {
  if (outer.generators() != generators())
    return false;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] > outer.counts_[i])
      return false;
  return true;
}

Multiweight Multiweight::operator+(const Multiweight &o) const {
  if (o.generators() != generators())
    throw Error("multiweight arity mismatch");
  std::vector<unsigned> out(counts_);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += o.counts_[i];
  return Multiweight(std::move(out));
}

Multiweight Multiweight::operator-(const Multiweight &o) const {
  if (!o.fits_in(*this))
    throw Error("multiweight " + o.to_string() + " does not fit in " + to_string());
  std::vector<unsigned> out(counts_);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] -= o.counts_[i];
  return Multiweight(std::move(out));
}

std::string Multiweight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(counts_[i]);
  }
  return s + ")";
}

std::vector<Word> words_of(const Multiweight &mw) {
  std::vector<Letter> letters;
  letters.reserve(mw.total());
  for (std::size_t g = 0; g < mw.generators(); ++g)
    letters.insert(letters.end(), mw[g], static_cast<Letter>(g));
  std::vector<Word> out;
  do {
    out.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

namespace {
void compositions(std::size_t generators, unsigned remaining, std::vector<unsigned> &prefix,
                  std::vector<Multiweight> &out) {
  if (prefix.size() + 1 == generators) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned c = remaining + 1; c-- > 0;) {
    prefix.push_back(c);
    compositions(generators, remaining - c, prefix, out);
    prefix.pop_back();
  }
}
} // namespace

std::vector<Multiweight> multiweights_of_degree(std::size_t generators, unsigned degree) {
  std::vector<Multiweight> out;
  if (generators == 0) {
    if (degree == 0)
      out.emplace_back();
    return out;
  }
  std::vector<unsigned> prefix;
  compositions(generators, degree, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multiweight> sub_multiweights(const Multiweight &outer) {
  std::vector<Multiweight> out;
  std::vector<unsigned> c(outer.generators(), 0);
  while (true) {
    out.emplace_back(c);
    std::size_t i = 0;
    for (; i < c.size(); ++i) {
      if (c[i] < outer[i]) {
        ++c[i];
        break;
      }
      c[i] = 0;
    }
    if (i == c.size())
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Alphabet::Alphabet(std::size_t generators) {
  if (generators > 255)
    throw Error("at most 255 generators are supported");
  for (std::size_t i = 0; i < generators; ++i) {
    if (i == 0)
      names_.push_back("a");
    else if (i == 1)
      names_.push_back("b");
    else
      names_.push_back("c" + std::to_string(i - 1));
  }
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 255)
    throw Error("at most 255 generators are supported");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto &n = names_[i];
    bool ok = !n.empty() && std::islower(static_cast<unsigned char>(n[0]));
    for (char ch : n)
      ok = ok && (std::islower(static_cast<unsigned char>(ch)) ||
                  std::isdigit(static_cast<unsigned char>(ch)));
    if (!ok)
      throw Error("invalid generator name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n)
        throw Error("duplicate generator name '" + n + "'");
  }
}

std::size_t Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return i;
  return names_.size();
}

bool Alphabet::is_default() const { return *this == Alphabet(names_.size()); }

std::string format_word(const Word &w, const Alphabet &alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i])
      ++j;
    if (!out.empty())
      out += '*';
    out += alphabet.name(w[i]);
    if (j - i > 1)
      out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

} // namespace stronglie
