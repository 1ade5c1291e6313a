#include <set>

#include "stronglie/asym.hpp"
#include "stronglie/error.hpp"

namespace stronglie {

std::string to_string(SymmetryOperator op) {
  return op == SymmetryOperator::swap_negate ? "swap" : "mirror";
}

SymmetryOperator symmetry_from_string(std::string_view s) {
  if (s == "swap" || s == "swap_negate")
    return SymmetryOperator::swap_negate;
  if (s == "mirror")
    return SymmetryOperator::mirror;
  throw Error("unknown operator '" + std::string(s) + "' (swap|mirror)");
}

SigmaElem sigma_add(const PrimeField &F, SigmaElem x, SigmaElem y) {
  return {F.add(x.c0, y.c0), F.add(x.c1, y.c1)};
}

SigmaElem sigma_mul(const PrimeField &F, SigmaElem x, SigmaElem y) {
  return {F.add(F.mul(x.c0, y.c0), F.mul(x.c1, y.c1)),
          F.add(F.mul(x.c0, y.c1), F.mul(x.c1, y.c0))};
}

std::string format_sigma(SigmaElem x, std::uint32_t p) {
  auto coeff = [p](Residue c) {
    // Print p-1 as -1 and so on, whichever is shorter to read.
    return c > p / 2 ? "-" + std::to_string(p - c) : std::to_string(c);
  };
  if (x.c1 == 0)
    return coeff(x.c0);
  std::string s1 = x.c1 == 1 ? "s" : x.c1 == p - 1 && p > 2 ? "-s" : coeff(x.c1) + "s";
  if (x.c0 == 0)
    return s1;
  return coeff(x.c0) + (s1.front() == '-' ? s1 : "+" + s1);
}

std::size_t SigmaMatrix::free_column_count() const {
  std::size_t n = 0;
  for (bool f : fixed)
    n += f ? 0 : 1;
  return n;
}

SigmaMatrix SigmaMatrix::from_rows(PrimeField field, std::size_t cols,
                                   std::vector<std::vector<SigmaElem>> rows) {
  SigmaMatrix M;
  M.field = field;
  M.fixed.assign(cols, false);
  for (auto &r : rows)
    if (r.size() != cols)
      throw Error("sigma matrix row has the wrong length");
  M.rows = std::move(rows);
  for (std::size_t i = 0; i < M.rows.size(); ++i)
    M.row_labels.push_back("r" + std::to_string(i + 1));
  return M;
}

SigmaMatrix SigmaMatrix::identity(PrimeField field, std::size_t n) {
  std::vector<std::vector<SigmaElem>> rows(n, std::vector<SigmaElem>(n));
  for (std::size_t i = 0; i < n; ++i)
    rows[i][i] = {1, 0};
  return from_rows(field, n, std::move(rows));
}

namespace {

Word apply_op(SymmetryOperator op, const Word &w) {
  return op == SymmetryOperator::swap_negate ? swap_ab(w) : w.reversed();
}

Poly apply_op(SymmetryOperator op, const Poly &f) {
  return op == SymmetryOperator::swap_negate ? swap_ab(f) : mirror(f);
}

std::string scalar_key(const Poly &f, const Alphabet &ab) {
  if (f.is_zero())
    return "0";
  return format_poly(f.scaled(f.field().inv(f.terms().begin()->second)), ab);
}

} // namespace

RelationSet close_under(const RelationSet &rs, SymmetryOperator op) {
  if (op == SymmetryOperator::swap_negate)
    return rs.with_swaps();
  RelationSet out = rs;
  std::set<std::string> seen;
  for (const auto &r : rs.relations())
    seen.insert(scalar_key(r.poly, rs.alphabet()));
  for (const auto &r : rs.relations()) {
    Poly m = mirror(r.poly);
    if (seen.insert(scalar_key(m, rs.alphabet())).second)
      out.add(r.label + "~", std::move(m), "mirror of " + r.label);
  }
  out.set_name(rs.name() + "+mirror");
  return out;
}

SigmaMatrix build_sigma_matrix(const RelationSet &rs, const Multiweight &mw,
                               SymmetryOperator op) {
  if (op == SymmetryOperator::swap_negate && rs.generator_count() != 2)
    throw Error("the swap operator needs two generators");
  const PrimeField &F = rs.field();
  const Alphabet &ab = rs.alphabet();
  SigmaMatrix M;
  M.field = F;
  M.op = op;
  std::map<Word, std::size_t> column_of;
  for (const Word &w : words_of(mw)) {
    const Word img = apply_op(op, w);
    if (img < w)
      continue;
    column_of.emplace(w, M.columns.size());
    M.columns.push_back(w);
    M.fixed.push_back(img == w);
  }
  if (op == SymmetryOperator::swap_negate) {
    const Multiweight swapped{mw[1], mw[0]};
    if (!(swapped == mw))
      throw Error("the swap operator needs a multiweight (n,n)");
  }

  std::vector<Poly> polys;
  std::vector<std::string> labels;
  for (const auto &r : rs.relations()) {
    if (!r.multiweight.fits_in(mw))
      continue;
    const Multiweight rest = mw - r.multiweight;
    for (const Multiweight &mu : sub_multiweights(rest))
      for (const Word &u : words_of(mu))
        for (const Word &v : words_of(rest - mu)) {
          polys.push_back(r.poly.sandwiched(u, v));
          std::string label = r.label;
          if (!u.empty())
            label = format_word(u, ab) + "*" + label;
          if (!v.empty())
            label += "*" + format_word(v, ab);
          labels.push_back(std::move(label));
        }
  }

  std::set<std::string> keys;
  for (const Poly &f : polys)
    keys.insert(scalar_key(f, ab));
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (!keys.count(scalar_key(apply_op(op, polys[i]), ab)))
      throw Error("row " + labels[i] + " = " + format_poly(polys[i], ab) + " has no image under " +
                  to_string(op) + " among the rows at " + mw.to_string());

  const Residue image_sign = op == SymmetryOperator::swap_negate ? F.neg(1) : 1;
  std::set<std::vector<std::pair<Residue, Residue>>> seen_rows;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::vector<SigmaElem> row(M.columns.size());
    for (const auto &[w, c] : polys[i].terms()) {
      const Word img = apply_op(op, w);
      if (!(img < w)) {
        auto &e = row[column_of.at(w)];
        e.c0 = F.add(e.c0, c);
      } else {
        auto &e = row[column_of.at(img)];
        e.c1 = F.add(e.c1, F.mul(image_sign, c));
      }
    }
    std::vector<std::pair<Residue, Residue>> key;
    for (auto e : row)
      key.emplace_back(e.c0, e.c1);
    if (!seen_rows.insert(std::move(key)).second)
      continue;
    M.rows.push_back(std::move(row));
    M.row_labels.push_back(labels[i]);
  }
  return M;
}

namespace {

std::vector<std::size_t> free_columns(const SigmaMatrix &M) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < M.column_count(); ++j)
    if (!M.fixed[j])
      out.push_back(j);
  return out;
}

bool first_column_killed_at_one(const SigmaMatrix &M, std::size_t col) {
  for (const auto &r : M.rows)
    if (M.field.add(r[col].c0, r[col].c1) != 0)
      return false;
  return true;
}

} // namespace

SigmaReduction sigma_reduce(const SigmaMatrix &M) {
  const PrimeField &F = M.field;
  if (F.modulus() == 2)
    return sigma_reduce_module(M);
  SigmaReduction out;
  out.method = "split";
  const auto cols = free_columns(M);
  const std::size_t n = cols.size(), m = M.rows.size();
  if (n == 0 || m == 0)
    return out;

  // Images at sigma = -1 and sigma = +1.
  std::vector<Residue> minus(m * n), plus(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SigmaElem e = M.rows[i][cols[j]];
      minus[i * n + j] = F.sub(e.c0, e.c1);
      plus[i * n + j] = F.add(e.c0, e.c1);
    }
  kernels::Echelon em(F, n), ep(F, n);
  em.insert_rows(minus, m);
  ep.insert_rows(plus, m);

  if (em.rank() < n) {
    const auto piv = em.pivot_columns();
    std::size_t j = 0;
    while (j < piv.size() && piv[j] == j)
      ++j;
    out.obstruction = j;
    return out;
  }
  const auto ppiv = ep.pivot_columns();
  const bool first_pivot = !ppiv.empty() && ppiv.front() == 0;
  if (m <= n && first_pivot) {
    out.obstruction = 0;
    return out;
  }

  // Top block: at sigma = -1 the reduced rows scaled by 2 (the image of
  // 1 - sigma); at sigma = +1 the reduced row with pivot j + 1 sits in row j.
  const Residue two = F.reduce(2), half = F.inv(two);
  out.triangular.assign(n, std::vector<SigmaElem>(n));
  std::vector<std::vector<Residue>> top_plus(n, std::vector<Residue>(n, 0));
  for (std::size_t i = 0; i < ep.rank(); ++i) {
    const std::size_t pc = ep.pivot_column(i);
    if (pc == 0)
      continue;
    auto row = ep.row(i);
    top_plus[pc - 1].assign(row.begin(), row.end());
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto row = em.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Residue xm = F.mul(two, row[j]), xp = top_plus[i][j];
      out.triangular[i][j] = {F.mul(half, F.add(xp, xm)), F.mul(half, F.sub(xp, xm))};
    }
  }
  out.triangularized = true;
  return out;
}

SigmaReduction sigma_reduce_module(const SigmaMatrix &M) {
  const PrimeField &F = M.field;
  SigmaReduction out;
  out.method = "module";
  const auto cols = free_columns(M);
  const std::size_t n = cols.size(), m = M.rows.size();
  if (n == 0 || m == 0)
    return out;

  // F_p-spanning set of the R-module: every row and sigma times it, with
  // coordinates (c0, c1) interleaved per free column.
  const std::size_t width = 2 * n;
  std::vector<std::vector<Residue>> gens;
  for (const auto &r : M.rows) {
    std::vector<Residue> v(width), s(width);
    for (std::size_t j = 0; j < n; ++j) {
      v[2 * j] = r[cols[j]].c0;
      v[2 * j + 1] = r[cols[j]].c1;
      s[2 * j] = r[cols[j]].c1;
      s[2 * j + 1] = r[cols[j]].c0;
    }
    gens.push_back(std::move(v));
    gens.push_back(std::move(s));
  }

  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t prefix = 2 * j + 2;
    std::vector<Residue> truncated;
    truncated.reserve(gens.size() * prefix);
    for (const auto &g : gens)
      truncated.insert(truncated.end(), g.begin(), g.begin() + static_cast<std::ptrdiff_t>(prefix));
    kernels::Echelon e(F, prefix, true);
    e.insert_rows(truncated, gens.size());
    std::vector<Residue> target(prefix, 0);
    target[2 * j] = 1;
    target[2 * j + 1] = F.neg(1);
    auto mults = e.reduce(target);
    if (std::any_of(target.begin(), target.end(), [](Residue x) { return x != 0; })) {
      out.obstruction = j;
      out.triangular.clear();
      return out;
    }
    std::vector<Residue> full(width, 0);
    for (auto [i, factor] : mults)
      for (auto [input, c] : e.combination(i))
        for (std::size_t t = 0; t < width; ++t)
          full[t] = F.add(full[t], F.mul(F.mul(factor, c), gens[input][t]));
    std::vector<SigmaElem> row(n);
    for (std::size_t t = 0; t < n; ++t)
      row[t] = {full[2 * t], full[2 * t + 1]};
    out.triangular.push_back(std::move(row));
  }
  if (m <= n && !first_column_killed_at_one(M, cols[0])) {
    out.obstruction = 0;
    out.triangular.clear();
    return out;
  }
  out.triangularized = true;
  return out;
}

nlohmann::json to_json(const SigmaMatrix &M, const SigmaReduction &r, const Alphabet &alphabet) {
  nlohmann::json j;
  j["p"] = M.field.modulus();
  j["operator"] = to_string(M.op);
  auto cols = nlohmann::json::array();
  for (const Word &w : M.columns)
    cols.push_back(format_word(w, alphabet));
  j["columns"] = std::move(cols);
  j["free_columns"] = M.free_column_count();
  j["fixed_columns"] = M.column_count() - M.free_column_count();
  j["rows"] = M.rows.size();
  j["triangularized"] = r.triangularized;
  j["method"] = r.method;
  if (r.obstruction) {
    const auto free = free_columns(M);
    if (!M.columns.empty() && *r.obstruction < free.size())
      j["obstruction"] = format_word(M.columns[free[*r.obstruction]], alphabet);
    else
      j["obstruction"] = *r.obstruction;
  } else {
    j["obstruction"] = nullptr;
  }
  j["version"] = 1;
  return j;
}

} // namespace stronglie
