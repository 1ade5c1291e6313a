#include "stronglie/liering.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "stronglie/error.hpp"

namespace stronglie {

FpMatrix FpMatrix::identity(PrimeField field, std::size_t n) {
  FpMatrix m(field, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1 % field.modulus();
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix &o) const {
  FpMatrix out(field_, n_);
  const std::uint64_t p = field_.modulus();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const std::uint64_t a = data_[i * n_ + k];
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < n_; ++j)
        out.data_[i * n_ + j] =
            static_cast<Residue>((out.data_[i * n_ + j] + a * o.data_[k * n_ + j]) % p);
    }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix &o) const {
  FpMatrix out(field_, n_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix &o) const {
  FpMatrix out(field_, n_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_.sub(data_[i], o.data_[i]);
  return out;
}

FpMatrix FpMatrix::scaled(Residue c) const {
  FpMatrix out(field_, n_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_.mul(c, data_[i]);
  return out;
}

FpMatrix FpMatrix::pow(unsigned e) const {
  FpMatrix out = identity(field_, n_);
  for (unsigned i = 0; i < e; ++i)
    out = out * *this;
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

LieRing::LieRing(PrimeField field, std::vector<std::string> names, std::vector<Residue> constants)
    : field_(field), d_(names.size()), names_(std::move(names)), c_(std::move(constants)) {
  if (c_.size() != d_ * d_ * d_)
    throw Error("expected " + std::to_string(d_ * d_ * d_) + " structure constants, got " +
                std::to_string(c_.size()));
  for (auto &x : c_)
    x %= field_.modulus();
  auto name = [&](std::size_t i) { return names_[i]; };
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = i; j < d_; ++j)
      for (std::size_t k = 0; k < d_; ++k)
        if (constant(i, j, k) != field_.neg(constant(j, i, k)))
          throw AxiomError(i == j ? "[" + name(i) + "," + name(i) + "] is not zero"
                                  : "[" + name(i) + "," + name(j) + "] != -[" + name(j) + "," +
                                        name(i) + "]",
                           {i + 1, j + 1, j + 1});
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = i + 1; j < d_; ++j)
      for (std::size_t k = j + 1; k < d_; ++k) {
        const Vec ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
        Vec s = bracket(bracket(ei, ej), ek);
        const Vec t = bracket(bracket(ej, ek), ei), u = bracket(bracket(ek, ei), ej);
        for (std::size_t l = 0; l < d_; ++l)
          s[l] = field_.add(s[l], field_.add(t[l], u[l]));
        if (std::any_of(s.begin(), s.end(), [](Residue x) { return x != 0; }))
          throw AxiomError("Jacobi identity fails for basis triple (" + std::to_string(i + 1) +
                               "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                               ") = (" + name(i) + "," + name(j) + "," + name(k) + ")",
                           {i + 1, j + 1, k + 1});
      }
}

Vec LieRing::basis_vector(std::size_t i) const {
  Vec v(d_, 0);
  v.at(i) = 1 % field_.modulus();
  return v;
}

Vec LieRing::bracket(const Vec &x, const Vec &y) const {
  if (x.size() != d_ || y.size() != d_)
    throw Error("vector length does not match the ring dimension");
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint64_t> acc(d_, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < d_; ++j) {
      if (y[j] == 0)
        continue;
      const std::uint64_t xy = std::uint64_t{x[i]} * y[j] % p;
      const Residue *row = &c_[(i * d_ + j) * d_];
      for (std::size_t k = 0; k < d_; ++k)
        if (row[k])
          acc[k] = (acc[k] + xy * row[k]) % p;
    }
  }
  return Vec(acc.begin(), acc.end());
}

FpMatrix LieRing::ad_matrix(const Vec &x) const {
  FpMatrix m(field_, d_);
  for (std::size_t i = 0; i < d_; ++i) {
    const Vec r = bracket(basis_vector(i), x);
    for (std::size_t k = 0; k < d_; ++k)
      m(i, k) = r[k];
  }
  return m;
}

Vec LieRing::element(std::uint64_t index) const {
  Vec v(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    v[i] = static_cast<Residue>(index % field_.modulus());
    index /= field_.modulus();
  }
  return v;
}

std::uint64_t LieRing::element_count() const noexcept {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d_; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / field_.modulus())
      return std::numeric_limits<std::uint64_t>::max();
    n *= field_.modulus();
  }
  return n;
}

bool LieRing::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](Residue x) { return x == 0; });
}

Subspace::Subspace(PrimeField field, std::size_t dim) : field_(field), n_(dim) {}

Vec Subspace::reduced(Vec v) const {
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Residue f = v[pivots_[r]];
    if (f == 0)
      continue;
    for (std::size_t c = 0; c < n_; ++c)
      v[c] = field_.sub(v[c], field_.mul(f, basis_[r][c]));
  }
  return v;
}

bool Subspace::contains(const Vec &v) const {
  if (v.size() != n_)
    throw Error("vector length does not match the subspace");
  const Vec r = reduced(v);
  return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

bool Subspace::insert(const Vec &v) {
  if (v.size() != n_)
    throw Error("vector length does not match the subspace");
  Vec r = reduced(v);
  std::size_t pc = 0;
  while (pc < n_ && r[pc] == 0)
    ++pc;
  if (pc == n_)
    return false;
  const Residue inv = field_.inv(r[pc]);
  for (auto &x : r)
    x = field_.mul(x, inv);
  for (auto &b : basis_) {
    const Residue f = b[pc];
    if (f == 0)
      continue;
    for (std::size_t c = 0; c < n_; ++c)
      b[c] = field_.sub(b[c], field_.mul(f, r[c]));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pc);
  basis_.insert(basis_.begin() + pos, std::move(r));
  return true;
}

Subspace principal_ideal(const LieRing &L, const Vec &x) {
  Subspace S(L.field(), L.dim());
  std::vector<Vec> queue;
  if (S.insert(x))
    queue.push_back(x);
  while (!queue.empty()) {
    const Vec v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t j = 0; j < L.dim(); ++j) {
      Vec w = L.bracket(v, L.basis_vector(j));
      if (S.insert(w))
        queue.push_back(std::move(w));
    }
  }
  return S;
}

bool power_vanishes(const LieRing &L, const Subspace &I, unsigned k) {
  if (k == 0)
    return false;
  Subspace cur = I;
  for (unsigned step = 1; step < k && cur.dim() > 0; ++step) {
    Subspace next(L.field(), L.dim());
    for (const Vec &u : cur.basis())
      for (const Vec &w : I.basis())
        next.insert(L.bracket(u, w));
    cur = std::move(next);
  }
  return cur.dim() == 0;
}

bool is_toastie(const LieRing &L, const Vec &x) {
  return power_vanishes(L, principal_ideal(L, x), 2);
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// Runs `check` over all tuples of the given arity (or a seeded sample) and
// reports the first failing tuple in enumeration order.
template <class Check>
OracleResult quantify(const LieRing &L, unsigned arity, const Quantification &q, Check check) {
  const std::uint64_t n = L.element_count();
  const std::uint64_t total = arity == 1 ? n : saturating_mul(n, n);
  OracleResult out;
  out.exhaustive = total <= q.exhaustive_limit;
  const std::uint64_t count = out.exhaustive ? total : q.samples;

  std::vector<Vec> samples;
  if (!out.exhaustive) {
    std::mt19937_64 rng(q.seed);
    std::uniform_int_distribution<Residue> coord(0, L.field().modulus() - 1);
    samples.resize(count * arity);
    for (auto &v : samples) {
      v.resize(L.dim());
      for (auto &x : v)
        x = coord(rng);
    }
  }
  auto tuple_at = [&](std::uint64_t idx) {
    std::vector<Vec> t;
    if (!out.exhaustive) {
      for (unsigned a = 0; a < arity; ++a)
        t.push_back(samples[idx * arity + a]);
    } else if (arity == 1) {
      t.push_back(L.element(idx));
    } else {
      t.push_back(L.element(idx / n));
      t.push_back(L.element(idx % n));
    }
    return t;
  };
  auto index_of = [&](std::uint64_t idx) {
    return out.exhaustive && arity == 2 ? std::array<std::uint64_t, 2>{idx / n, idx % n}
                                        : std::array<std::uint64_t, 2>{idx, idx};
  };

  std::uint64_t first_fail = std::numeric_limits<std::uint64_t>::max();
  if (q.exec == Exec::serial) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (!check(tuple_at(i), index_of(i), !out.exhaustive)) {
        first_fail = i;
        break;
      }
  } else {
    std::atomic<std::uint64_t> found{first_fail};
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      const auto ui = static_cast<std::uint64_t>(i);
      if (ui > found.load(std::memory_order_relaxed))
        continue;
      if (!check(tuple_at(ui), index_of(ui), !out.exhaustive)) {
        std::uint64_t cur = found.load();
        while (ui < cur && !found.compare_exchange_weak(cur, ui)) {
        }
      }
    }
    first_fail = found.load();
  }
  if (first_fail != std::numeric_limits<std::uint64_t>::max()) {
    out.holds = false;
    out.checked = first_fail + 1;
    out.witness = tuple_at(first_fail);
  } else {
    out.checked = count;
  }
  return out;
}

// ad(x)^e for every element, when the ring is small enough to tabulate.
std::vector<FpMatrix> tabulate_ad_powers(const LieRing &L, unsigned e, const Quantification &q) {
  const std::uint64_t n = L.element_count();
  if (n > q.exhaustive_limit)
    return {};
  std::vector<FpMatrix> out(n, FpMatrix(L.field(), L.dim()));
#pragma omp parallel for schedule(static) if (q.exec == Exec::parallel)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
    out[static_cast<std::size_t>(i)] =
        L.ad_matrix(L.element(static_cast<std::uint64_t>(i))).pow(e);
  return out;
}

} // namespace

OracleResult is_n_engel(const LieRing &L, unsigned n, const Quantification &q) {
  return quantify(L, 1, q, [&](const std::vector<Vec> &t, auto, bool) {
    return L.ad_matrix(t[0]).pow(n).is_zero();
  });
}

OracleResult is_k_strong(const LieRing &L, unsigned k, const Quantification &q) {
  return quantify(L, 1, q, [&](const std::vector<Vec> &t, auto, bool) {
    return power_vanishes(L, principal_ideal(L, t[0]), k);
  });
}

OracleResult is_toastie_ring(const LieRing &L, const Quantification &q) {
  return is_k_strong(L, 2, q);
}

OracleResult check_identity_I_on_ring(const LieRing &L, unsigned k, const Quantification &q) {
  if (k < 2)
    throw Error("k must be at least 2");
  const PrimeField &F = L.field();
  const Residue sign = F.sign(k - 1);
  const auto powers = tabulate_ad_powers(L, k - 1, q);
  return quantify(L, 2, q, [&](const std::vector<Vec> &t, std::array<std::uint64_t, 2> idx,
                               bool sampled) {
    if (!sampled && !powers.empty()) {
      const FpMatrix &X = powers[idx[0]], &Y = powers[idx[1]];
      return X * Y == (Y * X).scaled(sign);
    }
    const FpMatrix X = L.ad_matrix(t[0]).pow(k - 1), Y = L.ad_matrix(t[1]).pow(k - 1);
    return X * Y == (Y * X).scaled(sign);
  });
}

FpMatrix evaluate_on_ad(const Poly &f, const LieRing &L, const std::vector<Vec> &elements) {
  if (!(f.field() == L.field()))
    throw Error("polynomial and ring use different moduli");
  if (elements.size() < f.generator_count())
    throw Error("need one ring element per generator");
  std::vector<FpMatrix> ads;
  for (std::size_t g = 0; g < f.generator_count(); ++g)
    ads.push_back(L.ad_matrix(elements[g]));
  FpMatrix sum(L.field(), L.dim());
  for (const auto &[w, c] : f.terms()) {
    FpMatrix m = FpMatrix::identity(L.field(), L.dim());
    for (Letter l : w)
      m = m * ads[l];
    sum = sum + m.scaled(c);
  }
  return sum;
}

OracleResult check_poly_on_ring(const LieRing &L, const Poly &f, const Quantification &q) {
  if (f.generator_count() != 2)
    throw Error("ring checks take two-generator polynomials");
  return quantify(L, 2, q, [&](const std::vector<Vec> &t, auto, bool) {
    return evaluate_on_ad(f, L, t).is_zero();
  });
}

LieRing extend_scalars(const LieRing &L, const ExtFieldTable &F) {
  if (!(F.field() == L.field()))
    throw Error("extension field and ring have different characteristic");
  const std::size_t d = L.dim(), D = F.degree(), N = d * D;
  std::vector<Residue> c(N * N * N, 0);
  const PrimeField &P = L.field();
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t m = 0; m < d; ++m)
      for (std::size_t n = 0; n < d; ++n) {
        const Residue lmn = L.constant(l, m, n);
        if (lmn == 0)
          continue;
        for (std::size_t i = 0; i < D; ++i)
          for (std::size_t j = 0; j < D; ++j)
            for (std::size_t k = 0; k < D; ++k)
              c[((l * D + i) * N + (m * D + j)) * N + (n * D + k)] =
                  P.mul(lmn, F.lambda(i, j, k));
      }
  std::vector<std::string> names;
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t s = 0; s < D; ++s)
      names.push_back(L.names()[l] + "t" + std::to_string(s));
  return LieRing(P, std::move(names), std::move(c));
}

namespace {

LieRing from_brackets(std::uint32_t p, std::vector<std::string> names,
                      const std::vector<std::tuple<std::size_t, std::size_t, Vec>> &brackets) {
  const PrimeField F(p);
  const std::size_t d = names.size();
  std::vector<Residue> c(d * d * d, 0);
  for (const auto &[i, j, v] : brackets)
    for (std::size_t k = 0; k < d; ++k) {
      const Residue x = F.reduce(static_cast<std::int64_t>(v[k]));
      c[(i * d + j) * d + k] = x;
      c[(j * d + i) * d + k] = F.neg(x);
    }
  return LieRing(F, std::move(names), std::move(c));
}

} // namespace

LieRing heisenberg(std::uint32_t p) {
  return from_brackets(p, {"e1", "e2", "e3"}, {{0, 1, {0, 0, 1}}});
}

LieRing free_nilpotent_rank2(std::uint32_t p, unsigned cls) {
  if (cls == 2)
    return from_brackets(p, {"x", "y", "z"}, {{0, 1, {0, 0, 1}}});
  if (cls == 3)
    // [x,y] = z, [z,x] = u, [z,y] = v
    return from_brackets(p, {"x", "y", "z", "u", "v"},
                         {{0, 1, {0, 0, 1, 0, 0}}, {2, 0, {0, 0, 0, 1, 0}}, {2, 1, {0, 0, 0, 0, 1}}});
  throw Error("free nilpotent rings are built in for class 2 and 3 only");
}

LieRing abelian(std::uint32_t p, std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i)
    names.push_back("e" + std::to_string(i + 1));
  return LieRing(PrimeField(p), std::move(names), std::vector<Residue>(dim * dim * dim, 0));
}

LieRing builtin_ring(std::string_view name, std::uint32_t p) {
  if (name == "heisenberg")
    return heisenberg(p);
  if (name == "class2")
    return free_nilpotent_rank2(p, 2);
  if (name == "class3")
    return free_nilpotent_rank2(p, 3);
  if (name == "abelian")
    return abelian(p, 3);
  if (name.substr(0, 7) == "abelian" && name.size() > 7 &&
      std::all_of(name.begin() + 7, name.end(), [](char c) { return std::isdigit(c); }))
    return abelian(p, std::stoul(std::string(name.substr(7))));
  throw Error("unknown ring '" + std::string(name) +
              "' (heisenberg, class2, class3, abelian, abelianN)");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos)
      pos = s.size();
    out.emplace_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

} // namespace

LieRing parse_lie_ring(std::string_view text, std::optional<std::uint32_t> default_p) {
  std::optional<std::uint32_t> p = default_p;
  std::optional<std::size_t> dim;
  std::vector<std::string> names;
  bool header_seen = false;
  std::map<std::pair<std::size_t, std::size_t>, Vec> given;
  std::optional<Alphabet> alphabet;
  std::optional<PrimeField> field;

  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#')
      continue;
    if (!header_seen) {
      header_seen = true;
      std::istringstream in{std::string(line)};
      std::string tok;
      while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
          throw ParseError("expected key=value in the header, got '" + tok + "'", line_no, 1);
        const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
        try {
          if (key == "p")
            p = static_cast<std::uint32_t>(std::stoul(value));
          else if (key == "dim")
            dim = std::stoul(value);
          else if (key == "names")
            names = split(value, ',');
          else
            throw ParseError("unknown header key '" + key + "'", line_no, 1);
        } catch (const std::logic_error &) {
          throw ParseError("bad value for '" + key + "'", line_no, 1);
        }
      }
      if (!p)
        throw ParseError("header needs p=", line_no, 1);
      if (!dim && names.empty())
        throw ParseError("header needs dim= or names=", line_no, 1);
      if (names.empty())
        for (std::size_t i = 0; i < *dim; ++i)
          names.push_back("e" + std::to_string(i + 1));
      if (dim && *dim != names.size())
        throw ParseError("dim=" + std::to_string(*dim) + " but " + std::to_string(names.size()) +
                             " names",
                         line_no, 1);
      try {
        field.emplace(*p);
        alphabet.emplace(names);
      } catch (const Error &e) {
        throw ParseError(e.what(), line_no, 1);
      }
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("expected 'x,y -> combination'", line_no, 1);
    const auto lhs = split(trim(line.substr(0, arrow)), ',');
    if (lhs.size() != 2)
      throw ParseError("left side must name two basis elements", line_no, 1);
    const std::size_t i = alphabet->index_of(lhs[0]), j = alphabet->index_of(lhs[1]);
    if (i == alphabet->size() || j == alphabet->size())
      throw ParseError("unknown basis element on the left side", line_no, 1);
    const Poly combo = parse_poly(line.substr(arrow + 2), *alphabet, *field, line_no, arrow + 2);
    Vec v(names.size(), 0);
    for (const auto &[w, c] : combo.terms()) {
      if (w.size() != 1)
        throw ParseError("right side must be a linear combination of basis elements", line_no,
                         arrow + 3);
      v[w[0]] = c;
    }
    Vec neg(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
      neg[k] = field->neg(v[k]);
    for (auto [key, val] : {std::pair{std::pair{i, j}, v}, std::pair{std::pair{j, i}, neg}}) {
      auto it = given.find(key);
      if (it != given.end() && it->second != val)
        throw ParseError("conflicting brackets for " + lhs[0] + "," + lhs[1], line_no, 1);
      given[key] = val;
    }
  }
  if (!header_seen)
    throw ParseError("missing header line", line_no, 1);
  const std::size_t d = names.size();
  std::vector<Residue> c(d * d * d, 0);
  for (const auto &[key, v] : given)
    for (std::size_t k = 0; k < d; ++k)
      c[(key.first * d + key.second) * d + k] = v[k];
  return LieRing(*field, names, std::move(c));
}

std::string serialize(const LieRing &L) {
  std::ostringstream os;
  os << "p=" << L.field().modulus() << " dim=" << L.dim() << " names=";
  for (std::size_t i = 0; i < L.dim(); ++i)
    os << (i ? "," : "") << L.names()[i];
  os << "\n";
  const Alphabet ab(L.names());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      Poly v(L.dim(), L.field());
      for (std::size_t k = 0; k < L.dim(); ++k)
        v.add_term(Word{static_cast<Letter>(k)}, L.constant(i, j, k));
      if (!v.is_zero())
        os << L.names()[i] << "," << L.names()[j] << " -> " << format_poly(v, ab) << "\n";
    }
  return os.str();
}

} // namespace stronglie
