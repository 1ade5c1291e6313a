#include "stronglie/relations.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "stronglie/error.hpp"

namespace stronglie {

std::string to_string(Provenance p) {
  switch (p) {
  case Provenance::paper_canned:
    return "paper_canned";
  case Provenance::generated:
    return "generated";
  case Provenance::file:
    return "file";
  }
  return "?";
}

std::string to_string(Which w) {
  switch (w) {
  case Which::short_eqs:
    return "short";
  case Which::long_eqs:
    return "long";
  case Which::all:
    return "all";
  }
  return "?";
}

Which which_from_string(std::string_view s) {
  if (s == "short")
    return Which::short_eqs;
  if (s == "long")
    return Which::long_eqs;
  if (s == "all")
    return Which::all;
  throw Error("unknown equation family '" + std::string(s) + "' (short|long|all)");
}

RelationSet::RelationSet(unsigned k, Alphabet alphabet, PrimeField field,
                         Provenance provenance, std::string name)
    : k_(k), alphabet_(std::move(alphabet)), field_(field), provenance_(provenance),
      name_(std::move(name)) {}

void RelationSet::add(std::string label, Poly poly, std::string origin) {
  if (label.empty())
    throw Error("empty relation label");
  if (find(label))
    throw Error("duplicate relation label '" + label + "'");
  if (poly.generator_count() != alphabet_.size())
    throw Error("relation '" + label + "' has the wrong number of generators");
  if (!(poly.field() == field_))
    throw Error("relation '" + label + "' has modulus " +
                std::to_string(poly.field().modulus()) + ", expected " +
                std::to_string(field_.modulus()));
  const auto mws = poly.multiweights();
  if (mws.empty())
    throw Error("relation '" + label + "' is zero");
  if (mws.size() > 1)
    throw Error("relation '" + label + "' mixes multiweights " + mws[0].to_string() +
                " and " + mws[1].to_string());
  relations_.push_back({std::move(label), std::move(poly), mws[0], std::move(origin)});
}

const Relation *RelationSet::find(std::string_view label) const {
  for (const auto &r : relations_)
    if (r.label == label)
      return &r;
  return nullptr;
}

std::vector<std::string> RelationSet::labels() const {
  std::vector<std::string> out;
  for (const auto &r : relations_)
    out.push_back(r.label);
  return out;
}

namespace {

// Scalar-normalized form (leading coefficient 1) used for deduplication.
Poly normalized(const Poly &f) {
  if (f.is_zero())
    return f;
  return f.scaled(f.field().inv(f.terms().begin()->second));
}

} // namespace

RelationSet RelationSet::with_swaps() const {
  RelationSet out = *this;
  std::set<std::string> seen;
  for (const auto &r : relations_)
    seen.insert(format_poly(normalized(r.poly), alphabet_));
  for (const auto &r : relations_) {
    Poly s = swap_ab(r.poly);
    auto key = format_poly(normalized(s), alphabet_);
    if (!seen.insert(key).second)
      continue;
    out.add(r.label + "'", std::move(s), r.origin.empty() ? "" : "swap of " + r.label);
  }
  return out;
}

RelationSet RelationSet::subset(const std::vector<std::string> &labels) const {
  RelationSet out(k_, alphabet_, field_, provenance_, name_);
  for (const auto &r : relations_)
    if (std::find(labels.begin(), labels.end(), r.label) != labels.end())
      out.add(r.label, r.poly, r.origin);
  for (const auto &l : labels)
    if (!find(l))
      throw Error("unknown relation label '" + l + "'");
  return out;
}

bool operator==(const RelationSet &x, const RelationSet &y) {
  if (x.k_ != y.k_ || !(x.alphabet_ == y.alphabet_) || !(x.field_ == y.field_) ||
      x.relations_.size() != y.relations_.size())
    return false;
  for (std::size_t i = 0; i < x.relations_.size(); ++i)
    if (x.relations_[i].label != y.relations_[i].label ||
        !(x.relations_[i].poly == y.relations_[i].poly))
      return false;
  return true;
}

Poly slot_pattern_sum(std::size_t n, const std::vector<std::vector<std::size_t>> &placements,
                      const std::vector<Word> &separators, PrimeField field,
                      std::size_t generators) {
  if (n == 0)
    throw Error("slot count must be positive");
  if (separators.size() != n - 1)
    throw Error("expected " + std::to_string(n - 1) + " separators, got " +
                std::to_string(separators.size()));
  Poly out(generators, field);
  for (const auto &pos : placements) {
    Word w;
    for (std::size_t i = 0; i < n; ++i) {
      const bool is_b = std::find(pos.begin(), pos.end(), i) != pos.end();
      w *= Word{static_cast<Letter>(is_b ? 1 : 0)};
      if (i + 1 < n)
        w *= separators[i];
    }
    out.add_term(w, 1);
  }
  return out;
}

Poly slot_sum_multi(const std::vector<unsigned> &counts, const std::vector<Word> &separators,
                    PrimeField field, std::size_t generators) {
  std::vector<Letter> slots;
  for (std::size_t g = 0; g < counts.size(); ++g)
    slots.insert(slots.end(), counts[g], static_cast<Letter>(g));
  const std::size_t n = slots.size();
  if (n == 0)
    throw Error("slot count must be positive");
  if (separators.size() != n - 1)
    throw Error("expected " + std::to_string(n - 1) + " separators, got " +
                std::to_string(separators.size()));
  if (counts.size() > generators)
    throw Error("more slot letters than generators");
  Poly out(generators, field);
  do {
    Word w;
    for (std::size_t i = 0; i < n; ++i) {
      w *= Word{slots[i]};
      if (i + 1 < n)
        w *= separators[i];
    }
    out.add_term(w, 1);
  } while (std::next_permutation(slots.begin(), slots.end()));
  return out;
}

Poly slot_sum(std::size_t n, std::size_t j, const std::vector<Word> &separators,
              PrimeField field, std::size_t generators) {
  if (j > n)
    throw Error("b-count exceeds slot count");
  return slot_sum_multi({static_cast<unsigned>(n - j), static_cast<unsigned>(j)}, separators,
                        field, generators);
}

namespace {

struct Recipe {
  const char *label;
  std::vector<const char *> seps; // "" is the empty word
};

std::vector<Word> seps_of(const Recipe &r) {
  std::vector<Word> out;
  for (const char *s : r.seps)
    out.push_back(parse_word(s, Alphabet(2)));
  return out;
}

std::string describe(const Recipe &r) {
  std::string s = "c=(";
  for (std::size_t i = 0; i < r.seps.size(); ++i) {
    if (i)
      s += ",";
    s += *r.seps[i] ? r.seps[i] : "1";
  }
  return s + ")";
}

// Short equations: lambda^1 component, one b among the slots.
const std::vector<Recipe> k4_short = {
    {"S1", {"", "", ""}},  {"S2", {"", "", "b"}},  {"S3", {"", "b", ""}},
    {"S4", {"b", "", ""}}, {"S5", {"", "b", "b"}}, {"S6", {"b", "", "b"}},
    {"S7", {"b", "b", ""}},
};
// Long equations: lambda^2 component.
const std::vector<Recipe> k4_long = {
    {"L1", {"", "", ""}},  {"L2", {"a", "", ""}},  {"L3", {"", "a", ""}},
    {"L4", {"", "", "a"}}, {"L5", {"a", "b", ""}}, {"L6", {"a", "", "b"}},
    {"L7", {"", "a", "b"}},
};
const std::vector<Recipe> k5_short = {
    {"S1", {"", "", "", ""}},     {"S2", {"", "", "", "b"}},    {"S3", {"", "", "b", ""}},
    {"S4", {"", "b", "", ""}},    {"S5", {"b", "", "", ""}},    {"S6", {"", "", "b", "b"}},
    {"S7", {"", "b", "", "b"}},   {"S8", {"b", "", "", "b"}},   {"S9", {"b", "", "b", ""}},
    {"S10", {"b", "b", "", ""}},  {"S11", {"", "b", "b", "b"}}, {"S12", {"b", "", "b", "b"}},
    {"S13", {"b", "b", "", "b"}}, {"S14", {"b", "b", "b", ""}},
};
const std::vector<Recipe> k5_long = {
    {"L1", {"", "", "", ""}},    {"L2", {"a", "", "", ""}},   {"L3", {"", "a", "", ""}},
    {"L4", {"", "", "a", ""}},   {"L5", {"", "", "", "a"}},   {"L6", {"b", "", "", ""}},
    {"L7", {"", "b", "", ""}},   {"L8", {"", "", "b", ""}},   {"L9", {"", "", "", "b"}},
    {"L10", {"a", "b", "", ""}}, {"L11", {"b", "a", "", ""}}, {"L12", {"a", "", "b", ""}},
    {"L13", {"b", "", "a", ""}},
};
// The k=5 long family is taken over the seven b-placements
// {4,5},{3,5},{2,5},{1,5},{1,4},{1,3},{1,2} (1-based slots) rather than all ten.
const std::vector<std::vector<std::size_t>> k5_long_placements = {
    {3, 4}, {2, 4}, {1, 4}, {0, 4}, {0, 3}, {0, 2}, {0, 1}};

} // namespace

RelationSet paper_base_relations(unsigned k, std::uint32_t p, Which which) {
  const PrimeField F(p);
  const Alphabet ab(2);
  RelationSet rs(k, ab, F, Provenance::paper_canned,
                 "k" + std::to_string(k) + "_" + to_string(which));
  const bool want_short = which != Which::long_eqs;
  const bool want_long = which != Which::short_eqs;
  switch (k) {
  case 2:
    rs.add("E1", slot_sum(2, 1, {Word{}}, F), "(a+b)^2 lambda^1");
    break;
  case 3:
    rs.add("T1", slot_sum(3, 1, {Word{}, Word{}}, F), "lambda^1 c=(1,1)");
    rs.add("T2", slot_sum(3, 1, {Word{}, Word{1}}, F), "lambda^1 c=(1,b)");
    break;
  case 4:
    if (want_short)
      for (const auto &r : k4_short)
        rs.add(r.label, slot_sum(4, 1, seps_of(r), F), "lambda^1 " + describe(r));
    if (want_long)
      for (const auto &r : k4_long)
        rs.add(r.label, slot_sum(4, 2, seps_of(r), F), "lambda^2 " + describe(r));
    break;
  case 5:
    if (want_short)
      for (const auto &r : k5_short)
        rs.add(r.label, slot_sum(5, 1, seps_of(r), F), "lambda^1 " + describe(r));
    if (want_long)
      for (const auto &r : k5_long)
        rs.add(r.label, slot_pattern_sum(5, k5_long_placements, seps_of(r), F),
               "lambda^2 (7 placements) " + describe(r));
    break;
  default:
    throw Error("no canned relation set for k=" + std::to_string(k) + " (supported: 2..5)");
  }
  return rs;
}

RelationSet paper_relation_set(unsigned k, std::uint32_t p, Which which) {
  RelationSet rs = paper_base_relations(k, p, which).with_swaps();
  rs.set_name("k" + std::to_string(k) + "_" + to_string(which));
  return rs;
}

namespace {

void arrangements(std::size_t slot_generators, unsigned n, std::vector<unsigned> &prefix,
                  std::vector<std::vector<unsigned>> &out) {
  if (prefix.size() + 1 == slot_generators) {
    prefix.push_back(n);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned c = n + 1; c-- > 0;) {
    prefix.push_back(c);
    arrangements(slot_generators, n - c, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

RelationSet generate_strong_relations(unsigned n, const std::vector<Word> &pool,
                                      unsigned max_degree, PrimeField field,
                                      const Alphabet &alphabet, std::size_t slot_generators) {
  if (n < 2)
    throw Error("strongness must be at least 2");
  if (pool.empty())
    throw Error("separator pool is empty");
  if (slot_generators < 2 || slot_generators > alphabet.size())
    throw Error("need between 2 and " + std::to_string(alphabet.size()) + " slot generators");

  // Count vectors ordered so that for two slot letters this is j = 1, ..., n-1.
  std::vector<std::vector<unsigned>> counts;
  std::vector<unsigned> prefix;
  arrangements(slot_generators, n, prefix, counts);
  std::erase_if(counts, [](const std::vector<unsigned> &c) {
    return std::count_if(c.begin(), c.end(), [](unsigned x) { return x > 0; }) < 2;
  });

  RelationSet rs(n, alphabet, field, Provenance::generated,
                 "k" + std::to_string(n) + "_generated");
  std::set<std::string> seen;
  std::vector<std::size_t> idx(n - 1, 0);
  std::size_t next_label = 1;
  for (const auto &c : counts) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Word> seps;
      std::size_t degree = n;
      for (std::size_t i : idx) {
        seps.push_back(pool[i]);
        degree += pool[i].size();
      }
      if (degree <= max_degree) {
        Poly f = slot_sum_multi(c, seps, field, alphabet.size());
        if (!f.is_zero() && seen.insert(format_poly(normalized(f), alphabet)).second) {
          std::string origin = "counts=(";
          for (std::size_t g = 0; g < c.size(); ++g)
            origin += (g ? "," : "") + std::to_string(c[g]);
          origin += ") c=(";
          for (std::size_t i = 0; i < seps.size(); ++i) {
            auto s = format_word(seps[i], alphabet);
            origin += (i ? "," : "") + (s.empty() ? std::string("1") : s);
          }
          rs.add("G" + std::to_string(next_label++), std::move(f), origin + ")");
        }
      }
      std::size_t i = 0;
      for (; i < idx.size(); ++i) {
        if (++idx[i] < pool.size())
          break;
        idx[i] = 0;
      }
      if (i == idx.size())
        break;
    }
  }
  return rs;
}

std::vector<Poly> lambda_expansion(std::size_t n, const std::vector<Word> &separators,
                                   PrimeField field, std::size_t generators) {
  std::vector<Poly> out;
  for (std::size_t j = 0; j <= n; ++j)
    out.push_back(slot_sum(n, j, separators, field, generators));
  return out;
}

VandermondeExtraction vandermonde_extract(const std::vector<Poly> &expansion,
                                          PrimeField field) {
  if (expansion.size() < 2)
    throw Error("expansion needs at least the lambda^0 and lambda^n components");
  const std::size_t n = expansion.size() - 1;
  VandermondeExtraction out{{}, static_cast<unsigned>(n), field.modulus() >= n};
  for (std::size_t j = 1; j < n; ++j)
    out.components.push_back(expansion[j]);
  return out;
}

std::vector<Poly> vandermonde_recover(const std::vector<Residue> &lambdas,
                                      const std::vector<Poly> &evaluations) {
  const std::size_t m = lambdas.size();
  if (m == 0 || evaluations.size() != m)
    throw Error("need one evaluation per scalar");
  const PrimeField F = evaluations.front().field();
  for (std::size_t i = 0; i < m; ++i) {
    if (lambdas[i] % F.modulus() == 0)
      throw Error("Vandermonde scalars must be nonzero");
    for (std::size_t j = 0; j < i; ++j)
      if (lambdas[i] % F.modulus() == lambdas[j] % F.modulus())
        throw Error("Vandermonde scalars must be distinct (field too small)");
  }
  // evaluations[i] = sum_{j=1..m} lambda_i^j X_j. Solve by Gauss-Jordan on
  // the m x m system with polynomial right-hand sides.
  std::vector<std::vector<Residue>> A(m, std::vector<Residue>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      A[i][j] = F.pow(lambdas[i] % F.modulus(), j + 1);
  std::vector<Poly> rhs = evaluations;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && A[piv][col] == 0)
      ++piv;
    if (piv == m)
      throw Error("singular Vandermonde system");
    std::swap(A[piv], A[col]);
    std::swap(rhs[piv], rhs[col]);
    const Residue inv = F.inv(A[col][col]);
    for (auto &x : A[col])
      x = F.mul(x, inv);
    rhs[col] = rhs[col].scaled(inv);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || A[r][col] == 0)
        continue;
      const Residue f = A[r][col];
      for (std::size_t c = 0; c < m; ++c)
        A[r][c] = F.sub(A[r][c], F.mul(f, A[col][c]));
      rhs[r] -= rhs[col].scaled(f);
    }
  }
  return rhs;
}

std::string serialize(const RelationSet &rs) {
  std::ostringstream os;
  os << "#k=" << rs.k() << "\n#p=" << rs.field().modulus() << "\n";
  if (!rs.alphabet().is_default() || rs.generator_count() != 2) {
    os << "#gens=";
    for (std::size_t i = 0; i < rs.generator_count(); ++i)
      os << (i ? "," : "") << rs.alphabet().names()[i];
    os << "\n";
  }
  for (const auto &r : rs.relations())
    os << r.label << ": " << format_poly(r.poly, rs.alphabet()) << "\n";
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool valid_label(std::string_view s) {
  if (s.empty())
    return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'' ||
          ch == '.' || ch == '~' || ch == '-'))
      return false;
  return true;
}

std::uint64_t header_number(std::string_view v, std::size_t line, std::size_t column) {
  if (v.empty())
    throw ParseError("expected a number", line, column);
  std::uint64_t x = 0;
  for (char ch : v) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("expected a number", line, column);
    x = x * 10 + static_cast<unsigned>(ch - '0');
    if (x > (1ull << 32))
      throw ParseError("number too large", line, column);
  }
  return x;
}

} // namespace

RelationSet parse_relation_set(std::string_view text, std::optional<std::uint32_t> default_modulus,
                               std::string name) {
  std::optional<unsigned> k;
  std::optional<std::uint32_t> p = default_modulus;
  Alphabet alphabet(2);
  std::optional<RelationSet> rs;
  std::size_t line_no = 0;

  auto ensure_set = [&](std::size_t line) -> RelationSet & {
    if (!rs) {
      if (!k)
        throw ParseError("missing '#k=' header before the first relation", line, 1);
      if (!p)
        throw ParseError("missing '#p=' header before the first relation", line, 1);
      try {
        rs.emplace(*k, alphabet, PrimeField(*p), Provenance::file, name);
      } catch (const ParseError &) {
        throw;
      } catch (const Error &e) {
        throw ParseError(e.what(), line, 1);
      }
    }
    return *rs;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r')
      raw.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty())
      continue;
    const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());
    if (line.front() == '#') {
      const auto eq = line.find('=');
      const auto key = line.substr(1, eq == std::string_view::npos ? 0 : eq - 1);
      if (eq == std::string_view::npos || key.find(' ') != std::string_view::npos)
        continue; // comment
      if (rs)
        throw ParseError("header after the first relation", line_no, indent + 1);
      const auto value = trim(line.substr(eq + 1));
      const std::size_t vcol = indent + eq + 2;
      if (key == "k") {
        k = static_cast<unsigned>(header_number(value, line_no, vcol));
      } else if (key == "p") {
        p = static_cast<std::uint32_t>(header_number(value, line_no, vcol));
        if (!is_prime(*p))
          throw ParseError("modulus " + std::to_string(*p) + " is not prime", line_no, vcol);
      } else if (key == "gens") {
        std::vector<std::string> names;
        std::size_t s = 0;
        while (s <= value.size()) {
          auto comma = value.find(',', s);
          if (comma == std::string_view::npos)
            comma = value.size();
          names.emplace_back(trim(value.substr(s, comma - s)));
          s = comma + 1;
        }
        try {
          alphabet = Alphabet(std::move(names));
        } catch (const Error &e) {
          throw ParseError(e.what(), line_no, vcol);
        }
      } else {
        throw ParseError("unknown header '" + std::string(key) + "'", line_no, indent + 2);
      }
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'LABEL: polynomial'", line_no, indent + 1);
    const auto label = trim(line.substr(0, colon));
    if (!valid_label(label))
      throw ParseError("invalid label '" + std::string(label) + "'", line_no, indent + 1);
    RelationSet &set = ensure_set(line_no);
    const std::size_t body_offset = indent + colon + 1;
    Poly f = parse_poly(line.substr(colon + 1), set.alphabet(), set.field(), line_no,
                        body_offset);
    const auto mws = f.multiweights();
    if (mws.size() > 1)
      throw ParseError("relation '" + std::string(label) + "' mixes multiweights " +
                           mws[0].to_string() + " and " + mws[1].to_string(),
                       line_no, body_offset + 1);
    try {
      set.add(std::string(label), std::move(f));
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(e.what(), line_no, indent + 1);
    }
  }
  if (!rs)
    return ensure_set(line_no);
  return std::move(*rs);
}

} // namespace stronglie
