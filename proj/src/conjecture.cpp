#include "stronglie/conjecture.hpp"

#include <chrono>

#include "stronglie/error.hpp"

namespace stronglie {

std::string to_string(Variant v) {
  switch (v) {
  case Variant::I:
    return "I";
  case Variant::II:
    return "II";
  case Variant::III:
    return "III";
  }
  return "?";
}

Variant variant_from_string(std::string_view s) {
  if (s == "I")
    return Variant::I;
  if (s == "II")
    return Variant::II;
  if (s == "III")
    return Variant::III;
  throw Error("unknown variant '" + std::string(s) + "' (I|II|III)");
}

bool ConjectureReport::passed() const {
  for (const auto &r : results)
    if (!r.member)
      return false;
  return !results.empty();
}

nlohmann::json ConjectureReport::to_json(bool timings) const {
  nlohmann::json j;
  j["k"] = k;
  j["p"] = p;
  j["variant"] = stronglie::to_string(variant);
  j["relations"] = relations;
  j["provenance"] = stronglie::to_string(provenance);
  j["labels"] = relation_labels;
  j["proviso"] = proviso;
  j["sign"] = PrimeField(p).sign(k - 1);
  auto rs = nlohmann::json::array();
  for (const auto &r : results) {
    nlohmann::json e;
    e["identity"] = r.identity;
    e["member"] = r.member;
    if (r.reduces_to_zero)
      e["reduces_to_zero"] = *r.reduces_to_zero;
    if (r.certificate)
      e["certificate"] = stronglie::to_json(*r.certificate, alphabet);
    rs.push_back(std::move(e));
  }
  j["results"] = std::move(rs);
  j["passed"] = passed();
  if (timings)
    j["seconds"] = seconds;
  j["version"] = 1;
  return j;
}

Poly variant_I_identity(unsigned k, PrimeField field) {
  if (k < 2)
    throw Error("k must be at least 2");
  const Word xa = Word::power(0, k - 1), yb = Word::power(1, k - 1);
  Poly f = Poly::monomial(xa * yb, 2, field);
  f.add_term(yb * xa, field.neg(field.sign(k - 1)));
  return f;
}

std::vector<Word> swap_orbit_representatives(const Multiweight &mw) {
  std::vector<Word> out;
  for (const Word &w : words_of(mw)) {
    const Word s = swap_ab(w);
    if (!(s < w))
      out.push_back(w);
  }
  return out;
}

namespace {

ConjectureReport report_header(const RelationSet &rs, Variant v) {
  ConjectureReport r;
  r.k = rs.k();
  r.p = rs.field().modulus();
  r.variant = v;
  r.relations = rs.name();
  r.provenance = rs.provenance();
  r.relation_labels = rs.labels();
  r.alphabet = rs.alphabet();
  r.proviso = r.p < r.k;
  return r;
}

void check_two_generators(const RelationSet &rs) {
  if (rs.generator_count() != 2)
    throw Error("variants I and II are stated for two generators");
  if (rs.k() < 2)
    throw Error("k must be at least 2");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

ConjectureReport check_variant_I(const RelationSet &rs, const CheckOptions &opts) {
  check_two_generators(rs);
  const auto t0 = std::chrono::steady_clock::now();
  ConjectureReport report = report_header(rs, Variant::I);
  const Poly f = variant_I_identity(rs.k(), rs.field());
  IdealBasis basis(rs, Multiweight{rs.k() - 1, rs.k() - 1}, opts.certificates, opts.exec);
  IdentityResult r{format_poly(f, rs.alphabet()), f, false, std::nullopt, std::nullopt};
  if (opts.certificates) {
    r.certificate = basis.certificate(f);
    r.member = r.certificate.has_value();
  } else {
    r.member = basis.contains(f);
  }
  report.results.push_back(std::move(r));
  report.seconds = seconds_since(t0);
  return report;
}

ConjectureReport check_variant_I(unsigned k, std::uint32_t p, Which which,
                                 const CheckOptions &opts) {
  return check_variant_I(paper_relation_set(k, p, which), opts);
}

ConjectureReport check_variant_II(const RelationSet &rs, const CheckOptions &opts) {
  check_two_generators(rs);
  const auto t0 = std::chrono::steady_clock::now();
  ConjectureReport report = report_header(rs, Variant::II);
  const unsigned n = rs.k() - 1;
  const PrimeField &F = rs.field();
  const Residue minus_sign = F.neg(F.sign(n));
  const Multiweight mw{n, n};
  const IdealBasis basis(rs, mw, opts.certificates, opts.exec);

  const auto reps = swap_orbit_representatives(mw);
  std::vector<std::optional<IdentityResult>> results(reps.size());
  // Queries against one immutable basis are independent.
#pragma omp parallel for schedule(dynamic, 1) if (opts.exec == Exec::parallel)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(reps.size()); ++i) {
    const Word &m = reps[static_cast<std::size_t>(i)];
    Poly f = Poly::monomial(m, 2, F);
    f.add_term(swap_ab(m), minus_sign);
    IdentityResult r{format_poly(f, rs.alphabet()), f, false, std::nullopt, std::nullopt};
    if (opts.certificates) {
      r.certificate = basis.certificate(f);
      r.member = r.certificate.has_value();
    } else {
      r.member = basis.contains(f);
    }
    if (rs.k() >= 5)
      r.reduces_to_zero = basis.contains(Poly::monomial(m, 2, F));
    results[static_cast<std::size_t>(i)] = std::move(r);
  }
  for (auto &r : results)
    report.results.push_back(std::move(*r));
  report.seconds = seconds_since(t0);

  const bool variant_I = basis.contains(variant_I_identity(rs.k(), F));
  if (report.passed() && !variant_I)
    throw Error("internal inconsistency: variant II holds but variant I fails");
  return report;
}

ConjectureReport check_variant_II(unsigned k, std::uint32_t p, const CheckOptions &opts) {
  return check_variant_II(paper_relation_set(k, p, Which::all), opts);
}

VariantIIIResult search_variant_III(const Poly &pattern, const std::vector<Letter> &sigma,
                                    const RelationSet &rs) {
  const auto mws = pattern.multiweights();
  if (mws.size() != 1)
    throw Error("variant III pattern must be a nonzero multihomogeneous polynomial");
  const std::size_t s = rs.generator_count();
  if (pattern.generator_count() != s)
    throw Error("pattern and relations use different generator counts");
  for (std::size_t g = 0; g < s; ++g)
    if (mws[0][g] + 1 != rs.k())
      throw Error("variant III pattern must have multiweight (k-1, ..., k-1), got " +
                  mws[0].to_string());
  const Poly image = swap_generators(pattern, sigma);
  const IdealBasis basis(rs, mws[0]);
  const Poly rp = basis.reduce(pattern);
  const Poly ri = basis.reduce(image);
  VariantIIIResult out;
  if (rp.is_zero() && ri.is_zero()) {
    out.outcome = VariantIIIResult::Outcome::degenerate;
    return out;
  }
  const PrimeField &F = rs.field();
  for (Residue alpha = 0; alpha < F.modulus(); ++alpha)
    if ((rp - ri.scaled(alpha)).is_zero()) {
      out.outcome = VariantIIIResult::Outcome::scalar;
      out.alpha = alpha;
      return out;
    }
  return out;
}

VariantIIIResult search_variant_III(const Poly &pattern, const std::vector<Letter> &sigma,
                                    unsigned k, std::uint32_t p) {
  return search_variant_III(pattern, sigma, paper_relation_set(k, p, Which::all));
}

} // namespace stronglie
