#include "stronglie/nilquot.hpp"

#include <algorithm>

#include "stronglie/error.hpp"

namespace stronglie {

IdealBasis::IdealBasis(const RelationSet &rs, Multiweight mw, bool track_certificates,
                       Exec exec)
    : mw_(std::move(mw)), field_(rs.field()), generators_(rs.generator_count()),
      words_(words_of(mw_)), echelon_(field_, words_.size(), track_certificates) {
  if (mw_.generators() != generators_)
    throw Error("multiweight " + mw_.to_string() + " does not match " +
                std::to_string(generators_) + " generators");
  for (std::size_t i = 0; i < words_.size(); ++i)
    column_of_.emplace(words_[i], i);

  const std::size_t cols = words_.size();
  std::vector<Residue> dense;
  for (std::size_t ri = 0; ri < rs.size(); ++ri) {
    const Relation &r = rs.relations()[ri];
    labels_.push_back(r.label);
    if (!r.poly.is_multihomogeneous())
      throw Error("relation '" + r.label + "' is not multihomogeneous");
    if (!r.multiweight.fits_in(mw_))
      continue;
    const Multiweight rest = mw_ - r.multiweight;
    for (const Multiweight &mu : sub_multiweights(rest)) {
      const auto lefts = words_of(mu);
      const auto rights = words_of(rest - mu);
      for (const Word &u : lefts)
        for (const Word &v : rights) {
          log_.push_back({u, ri, v});
          const std::size_t base = dense.size();
          dense.resize(base + cols, 0);
          for (const auto &[w, c] : r.poly.terms())
            dense[base + column_of_.at(u * w * v)] = c;
        }
    }
  }
  echelon_.insert_rows(dense, log_.size(), exec);
}

std::vector<Residue> IdealBasis::to_vector(const Poly &f) const {
  if (f.generator_count() != generators_ || !(f.field() == field_))
    throw Error("polynomial does not match the ideal's generators or modulus");
  std::vector<Residue> v(words_.size(), 0);
  for (const auto &[w, c] : f.terms()) {
    auto it = column_of_.find(w);
    if (it == column_of_.end())
      throw Error("polynomial has multiweight " + Multiweight::of(w, generators_).to_string() +
                  ", basis is for " + mw_.to_string());
    v[it->second] = c;
  }
  return v;
}

Poly IdealBasis::from_vector(std::span<const Residue> v) const {
  Poly out(generators_, field_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i])
      out.add_term(words_[i], v[i]);
  return out;
}

Poly IdealBasis::row(std::size_t i) const { return from_vector(echelon_.row(i)); }

Poly IdealBasis::reduce(const Poly &f) const {
  auto v = to_vector(f);
  echelon_.reduce(v);
  return from_vector(v);
}

std::optional<Certificate> IdealBasis::certificate(const Poly &f) const {
  if (!tracks_certificates())
    throw Error("certificates need a basis built with tracking");
  auto v = to_vector(f);
  const auto mults = echelon_.reduce(v);
  if (std::any_of(v.begin(), v.end(), [](Residue x) { return x != 0; }))
    return std::nullopt;
  // f = sum factor * row(i), row(i) = sum c * input_row.
  std::map<std::uint32_t, Residue> acc;
  for (auto [i, factor] : mults)
    for (auto [input, c] : echelon_.combination(i)) {
      auto &slot = acc[input];
      slot = field_.add(slot, field_.mul(factor, c));
    }
  Certificate out;
  for (auto [input, c] : acc) {
    if (c == 0)
      continue;
    const auto &g = log_[input];
    out.push_back({c, g.left, labels_[g.relation], g.right});
  }
  return out;
}

Membership is_member(const Poly &f, const RelationSet &rs, bool want_certificate, Exec exec) {
  Membership out{true, want_certificate ? std::optional<Certificate>(Certificate{})
                                        : std::nullopt};
  for (const auto &[mw, part] : components(f)) {
    IdealBasis basis(rs, mw, want_certificate, exec);
    if (!want_certificate) {
      if (!basis.contains(part))
        return {false, std::nullopt};
      continue;
    }
    auto cert = basis.certificate(part);
    if (!cert)
      return {false, std::nullopt};
    out.certificate->insert(out.certificate->end(), cert->begin(), cert->end());
  }
  return out;
}

Poly expand_certificate(const Certificate &c, const RelationSet &rs) {
  Poly sum(rs.generator_count(), rs.field());
  for (const auto &t : c) {
    const Relation *r = rs.find(t.rel);
    if (!r)
      throw Error("certificate refers to unknown relation '" + t.rel + "'");
    sum += r->poly.sandwiched(t.left, t.right).scaled(t.coeff % rs.field().modulus());
  }
  return sum;
}

bool verify_certificate(const Certificate &c, const Poly &f, const RelationSet &rs) {
  return expand_certificate(c, rs) == f;
}

std::map<Multiweight, std::size_t> quotient_dimensions(const RelationSet &rs,
                                                       unsigned max_degree, Exec exec) {
  std::vector<Multiweight> all;
  for (unsigned d = 0; d <= max_degree; ++d)
    for (auto &mw : multiweights_of_degree(rs.generator_count(), d))
      all.push_back(std::move(mw));
  std::vector<std::size_t> dims(all.size());
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < all.size(); ++i)
      dims[i] = IdealBasis(rs, all[i]).quotient_dimension();
  } else {
    // Larger multiweights come last; dynamic scheduling keeps threads busy.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(all.size()); ++i) {
      try {
        dims[static_cast<std::size_t>(i)] =
            IdealBasis(rs, all[static_cast<std::size_t>(i)]).quotient_dimension();
      } catch (...) {
#pragma omp critical
        failure = std::current_exception();
      }
    }
    if (failure)
      std::rethrow_exception(failure);
  }
  std::map<Multiweight, std::size_t> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    out.emplace(all[i], dims[i]);
  return out;
}

nlohmann::json to_json(const Certificate &c, const Alphabet &alphabet) {
  auto out = nlohmann::json::array();
  for (const auto &t : c)
    out.push_back({{"coeff", t.coeff},
                   {"left", format_word(t.left, alphabet)},
                   {"rel", t.rel},
                   {"right", format_word(t.right, alphabet)}});
  return out;
}

Certificate certificate_from_json(const nlohmann::json &j, const Alphabet &alphabet,
                                  const PrimeField &field) {
  if (!j.is_array())
    throw Error("certificate JSON must be an array");
  Certificate out;
  for (const auto &t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("left") || !t.contains("rel") ||
        !t.contains("right"))
      throw Error("certificate entries need coeff, left, rel and right");
    out.push_back({field.reduce(t.at("coeff").get<std::int64_t>()),
                   parse_word(t.at("left").get<std::string>(), alphabet),
                   t.at("rel").get<std::string>(),
                   parse_word(t.at("right").get<std::string>(), alphabet)});
  }
  return out;
}

} // namespace stronglie
