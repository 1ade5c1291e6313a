#include "stronglie/asym.hpp"

#include "stronglie/conjecture.hpp"
#include "stronglie/error.hpp"

namespace stronglie {

namespace {

std::string base_label(std::string label) {
  while (!label.empty() && (label.back() == '\'' || label.back() == '~'))
    label.pop_back();
  return label;
}

} // namespace

nlohmann::json DerivationLog::to_json() const {
  nlohmann::json j;
  j["p"] = p;
  auto steps_json = nlohmann::json::array();
  for (const auto &s : steps) {
    nlohmann::json e{{"step", s.step},
                     {"kind", s.kind},
                     {"inputs", s.inputs},
                     {"output_poly", format_poly(s.output, alphabet)},
                     {"verified", s.verified}};
    if (s.certificate)
      e["certificate"] = stronglie::to_json(*s.certificate, alphabet);
    steps_json.push_back(std::move(e));
  }
  j["steps"] = std::move(steps_json);
  auto t = nlohmann::json::array();
  for (const auto &[w, name] : targets)
    t.push_back({{"monomial", format_word(w, alphabet)}, {"fact", name}});
  j["targets"] = std::move(t);
  j["axioms_used"] = axioms_used;
  j["derived_equations"] = derived_equations;
  j["failures"] = failures;
  j["version"] = 1;
  return j;
}

AsymEngine::AsymEngine(RelationSet ambient, std::optional<RelationSet> cross_check)
    : ambient_(std::move(ambient)), cross_(std::move(cross_check)) {
  if (ambient_.generator_count() != 2)
    throw Error("Asym derivations need two generators");
  if (cross_ && !(cross_->field() == ambient_.field()))
    throw Error("cross-check relations use a different modulus");
  for (const auto &r : ambient_.relations()) {
    equations_.emplace(r.label, r.poly);
    depends_[r.label] = {base_label(r.label)};
  }
  log_.p = ambient_.field().modulus();
  log_.alphabet = ambient_.alphabet();
}

Poly AsymEngine::resolve(std::string_view ref) const {
  const std::string key(ref);
  if (auto it = equations_.find(key); it != equations_.end())
    return it->second;
  if (auto it = facts_.find(key); it != facts_.end())
    return it->second.poly + swap_ab(it->second.poly);
  if (!key.empty() && key.back() == '\'')
    return swap_ab(resolve(key.substr(0, key.size() - 1)));
  throw Error("unknown equation or fact '" + key + "'");
}

const AsymFact &AsymEngine::fact(std::string_view name) const {
  auto it = facts_.find(std::string(name));
  if (it == facts_.end())
    throw Error("unknown fact '" + std::string(name) + "'");
  return it->second;
}

const IdealBasis &AsymEngine::basis(const RelationSet &rs, const Multiweight &mw,
                                    std::map<Multiweight, IdealBasis> &cache) const {
  auto it = cache.find(mw);
  if (it == cache.end())
    it = cache.emplace(mw, IdealBasis(rs, mw, true)).first;
  return it->second;
}

std::set<std::string> AsymEngine::deps_of(const std::string &ref) const {
  std::string key = ref;
  while (!depends_.count(key) && !key.empty() && key.back() == '\'')
    key.pop_back();
  auto it = depends_.find(key);
  return it == depends_.end() ? std::set<std::string>{} : it->second;
}

void AsymEngine::note_inputs(const std::vector<std::string> &refs) {
  for (const auto &r : refs) {
    const auto d = deps_of(r);
    log_.axioms_used.insert(d.begin(), d.end());
  }
}

Certificate AsymEngine::verify_equation(const std::string &name, const Poly &f) {
  Certificate total;
  for (const auto &[mw, part] : components(f)) {
    auto cert = basis(ambient_, mw, ambient_bases_).certificate(part);
    if (!cert)
      throw Error("step " + name + ": " + format_poly(part, ambient_.alphabet()) +
                  " is not in the ideal");
    total.insert(total.end(), cert->begin(), cert->end());
    if (cross_ && !basis(*cross_, mw, cross_bases_).contains(part))
      throw Error("step " + name + ": not confirmed by the cross-check relations");
  }
  if (!verify_certificate(total, f, ambient_))
    throw Error("step " + name + ": certificate does not re-expand to the equation");
  return total;
}

void AsymEngine::verify_fact(const std::string &name, const Poly &p) {
  const Poly f = p + swap_ab(p);
  for (const auto &[mw, part] : components(f)) {
    if (!basis(ambient_, mw, ambient_bases_).contains(part))
      throw Error("step " + name + ": Asym(" + format_poly(p, ambient_.alphabet()) +
                  ") is not confirmed by ideal membership");
    if (cross_ && !basis(*cross_, mw, cross_bases_).contains(part))
      throw Error("step " + name + ": Asym(" + format_poly(p, ambient_.alphabet()) +
                  ") is not confirmed by the cross-check relations");
  }
}

const Poly &AsymEngine::multiply(const std::string &name, const Word &left,
                                 const std::string &ref, const Word &right) {
  if (equations_.count(name) || facts_.count(name))
    throw Error("step " + name + ": name already in use");
  const Poly f = resolve(ref).sandwiched(left, right);
  Certificate cert;
  if (ambient_.find(ref)) {
    cert = {{1, left, ref, right}};
    if (!verify_certificate(cert, f, ambient_))
      throw Error("step " + name + ": certificate does not re-expand to the equation");
    if (cross_)
      for (const auto &[mw, part] : components(f))
        if (!basis(*cross_, mw, cross_bases_).contains(part))
          throw Error("step " + name + ": not confirmed by the cross-check relations");
  } else {
    cert = verify_equation(name, f);
  }
  note_inputs({ref});
  depends_[name] = deps_of(ref);
  log_.steps.push_back({name, "mult", {ref}, f, true, std::move(cert)});
  ++log_.derived_equations;
  return equations_.emplace(name, f).first->second;
}

const Poly &AsymEngine::combine(const std::string &name, const EquationSum &terms) {
  if (equations_.count(name) || facts_.count(name))
    throw Error("step " + name + ": name already in use");
  const PrimeField &F = ambient_.field();
  Poly f(2, F);
  std::vector<std::string> inputs;
  std::set<std::string> deps;
  for (const auto &[c, ref] : terms) {
    f += resolve(ref).scaled(F.reduce(c));
    inputs.push_back(ref);
    const auto d = deps_of(ref);
    deps.insert(d.begin(), d.end());
  }
  Certificate cert = verify_equation(name, f);
  note_inputs(inputs);
  depends_[name] = std::move(deps);
  log_.steps.push_back({name, "combine", inputs, f, true, std::move(cert)});
  ++log_.derived_equations;
  return equations_.emplace(name, f).first->second;
}

const AsymFact &AsymEngine::add_fact(AsymFact f, const std::vector<std::string> &inputs) {
  if (equations_.count(f.name) || facts_.count(f.name))
    throw Error("step " + f.name + ": name already in use");
  if (f.poly.is_zero())
    throw Error("step " + f.name + ": derived the trivial fact Asym(0)");
  verify_fact(f.name, f.poly);
  note_inputs(inputs);
  std::set<std::string> deps;
  for (const auto &r : inputs) {
    const auto d = deps_of(r);
    deps.insert(d.begin(), d.end());
  }
  depends_[f.name] = std::move(deps);
  log_.steps.push_back({f.name, f.kind, inputs, f.poly, true, std::nullopt});
  const std::string name = f.name;
  return facts_.emplace(name, std::move(f)).first->second;
}

const AsymFact &AsymEngine::from_equation(const std::string &name, const Poly &p,
                                          const EquationSum &terms) {
  const PrimeField &F = ambient_.field();
  Poly e(2, F);
  std::vector<std::string> inputs;
  for (const auto &[c, ref] : terms) {
    e += resolve(ref).scaled(F.reduce(c));
    inputs.push_back(ref);
  }
  if (!(e == p + swap_ab(p)))
    throw Error("step " + name + ": the equation " + format_poly(e, ambient_.alphabet()) +
                " is not p + swap(p) for p = " + format_poly(p, ambient_.alphabet()));
  verify_equation(name, e);
  return add_fact({name, p, "equation", inputs}, inputs);
}

const AsymFact &AsymEngine::rule1(const std::string &name, const std::string &fact_name,
                                  const Poly &q) {
  const AsymFact &parent = fact(fact_name);
  for (const auto &[w, c] : q.terms())
    if (parent.poly.coefficient(w).value() != c)
      throw Error("step " + name + ": " + format_poly(q, ambient_.alphabet()) +
                  " is not part of Asym(" + format_poly(parent.poly, ambient_.alphabet()) + ")");
  Poly out = parent.poly - q + swap_ab(q);
  return add_fact({name, std::move(out), "rule1", {fact_name}}, {fact_name});
}

const AsymFact &AsymEngine::rule2(const std::string &name, const std::string &fact_name,
                                  const std::string &equation) {
  const AsymFact &parent = fact(fact_name);
  const Poly e = resolve(equation);
  verify_equation(name, e);
  Poly q = e - parent.poly;
  return add_fact({name, std::move(q), "rule2", {fact_name, equation}}, {fact_name, equation});
}

const AsymFact &
AsymEngine::sum(const std::string &name,
                const std::vector<std::tuple<std::int64_t, std::string, bool>> &terms) {
  const PrimeField &F = ambient_.field();
  Poly out(2, F);
  std::vector<std::string> inputs;
  for (const auto &[c, ref, swapped] : terms) {
    const Poly &p = fact(ref).poly;
    out += (swapped ? swap_ab(p) : p).scaled(F.reduce(c));
    inputs.push_back(swapped ? ref + "'" : ref);
  }
  return add_fact({name, std::move(out), "sum", inputs}, inputs);
}

void AsymEngine::expect(const Poly &expected) const {
  if (log_.steps.empty())
    throw Error("no step to check");
  const auto &s = log_.steps.back();
  if (!(s.output == expected))
    throw Error("step " + s.step + ": expected " + format_poly(expected, ambient_.alphabet()) +
                ", derived " + format_poly(s.output, ambient_.alphabet()));
}

namespace {

struct Product {
  const char *name;
  const char *left;
  const char *ref;
  const char *right;
};

const std::vector<Product> products = {
    {"S8", "", "S2", "b"},   {"S9", "b^2", "S1", ""},  {"S10", "b", "S4", ""},
    {"S11", "b", "S2", ""},  {"S12", "b", "S1", "b"},  {"S13", "", "S3", "b"},
    {"S14", "", "S1", "b^2"}, {"L8", "a*b", "L1", ""}, {"L9", "", "L1", "a*b"},
    {"L10", "a", "L1", "b"},
};

RelationSet appendix_ambient(std::uint32_t p) {
  const RelationSet all = paper_relation_set(4, p, Which::all);
  const std::set<std::string> used = {"S1", "S2", "S3", "S4", "S5", "S6", "L1"};
  std::vector<std::string> labels;
  for (const auto &r : all.relations())
    if (used.count(base_label(r.label)))
      labels.push_back(r.label);
  RelationSet out = all.subset(labels);
  out.set_name("k4_S1-S6_L1");
  return out;
}

} // namespace

std::vector<std::pair<std::string, Poly>> appendix_products(std::uint32_t p) {
  const RelationSet rs = paper_relation_set(4, p, Which::all);
  std::vector<std::pair<std::string, Poly>> out;
  for (const auto &pr : products)
    out.emplace_back(pr.name, rs.find(pr.ref)->poly.sandwiched(
                                  parse_word(pr.left, rs.alphabet()),
                                  parse_word(pr.right, rs.alphabet())));
  return out;
}

DerivationLog replay_appendix(std::uint32_t p) {
  if (p == 2)
    throw Error("the appendix derivation needs p != 2 (Asym degenerates to symmetry)");
  AsymEngine E(appendix_ambient(p), paper_relation_set(4, p, Which::all));
  const Alphabet &ab = E.ambient().alphabet();
  auto P = [&](std::string_view text) { return parse_poly(text, ab, E.ambient().field()); };
  auto W = [&](std::string_view text) { return parse_word(text, ab); };

  for (const auto &pr : products)
    E.multiply(pr.name, W(pr.left), pr.ref, W(pr.right));

  E.combine("E1", {{1, "S8"}, {-1, "S5'"}});
  E.expect(P("a^3*b^3 + a^2*b^2*a*b - b^2*a*b*a^2 - b^2*a^3*b"));
  E.combine("E2", {{1, "S9"}, {1, "E1"}});
  E.from_equation("⋆1", P("a^3*b^3 + a^2*b^2*a*b"), {{1, "E2"}});

  E.rule2("⋆2a", "⋆1", "S8");
  E.expect(P("a*b*a*b*a*b + b*a^2*b*a*b"));
  E.rule1("⋆2", "⋆2a", P("b*a^2*b*a*b"));
  E.expect(P("a*b*a*b*a*b + a*b^2*a*b*a"));

  E.rule1("⋆3a", "⋆2", P("a*b*a*b*a*b"));
  E.expect(P("b*a*b*a*b*a + a*b^2*a*b*a"));
  E.rule2("⋆3", "⋆3a", "S5");
  E.expect(P("a^2*b^3*a + a^2*b*a*b^2"));

  E.combine("E3", {{1, "S8"}, {1, "S10"}, {-1, "E2"}, {-1, "⋆2"}});
  E.expect(P("b*a*b*a^2*b + b*a*b^2*a^2 - a*b^2*a*b*a - b^2*a^2*b*a"));
  E.from_equation("⋆4", P("a*b*a^2*b^2 + a*b*a*b^2*a"), {{1, "S6"}, {1, "E3"}});

  E.rule2("⋆5a", "⋆4", "S6");
  E.expect(P("a*b^2*a*b*a + b^2*a^2*b*a"));
  E.rule1("⋆5", "⋆5a", P("b^2*a^2*b*a"));
  E.expect(P("a^2*b^2*a*b + a*b^2*a*b*a"));

  E.rule1("⋆6a", "⋆5", P("a*b^2*a*b*a"));
  E.rule2("⋆6", "⋆6a", "S8");
  E.expect(P("a^3*b^3 + a*b*a*b*a*b"));

  E.combine("E4", {{1, "L8"}, {-1, "S6"}});
  E.expect(P("a*b^3*a^2 + a*b^2*a^2*b + a*b*a*b*a*b - b^2*a^2*b*a"));
  E.from_equation("🎃1", P("a^2*b^2*a*b"), {{1, "S11'"}, {-1, "E4"}});
  E.sum("🎃2", {{1, "⋆1", false}, {-1, "🎃1", false}});
  E.expect(P("a^3*b^3"));
  E.sum("🎃3", {{1, "⋆6", false}, {-1, "🎃2", false}});
  E.expect(P("a*b*a*b*a*b"));
  E.sum("🎃4", {{1, "⋆2", false}, {-1, "🎃3", false}});
  E.expect(P("a*b^2*a*b*a"));

  E.combine("E5", {{1, "S11'"}, {-1, "L9"}});
  E.expect(P("a*b^3*a^2 - b^2*a^3*b - b*a^2*b*a*b - b*a*b*a^2*b"));
  E.from_equation("🎃5", P("a*b^3*a^2"), {{1, "E5"}, {1, "S12"}});

  E.sum("🎃6a", {{1, "🎃1", true}, {1, "🎃3", true}, {1, "🎃5", true}});
  E.expect(P("b^2*a^2*b*a + b*a*b*a*b*a + b*a^3*b^2"));
  E.rule2("🎃6b", "🎃6a", "S11");
  E.expect(P("b*a^2*b^2*a"));
  E.rule1("🎃6", "🎃6b", P("b*a^2*b^2*a"));
  E.expect(P("a*b^2*a^2*b"));

  E.combine("E6", {{1, "S10'"}, {-1, "L10"}});
  E.expect(P("a*b*a*b^2*a - a*b^2*a^2*b - a^2*b^2*a*b - a^2*b*a*b^2"));
  E.from_equation("🎃7", P("a*b*a*b^2*a"), {{1, "E6"}, {1, "S13"}});
  E.sum("🎃8", {{1, "⋆4", false}, {-1, "🎃7", false}});
  E.expect(P("a*b*a^2*b^2"));

  E.sum("🎃9a", {{1, "🎃2", false}, {1, "🎃8", false}, {1, "🎃5", true}});
  E.expect(P("a^3*b^3 + a*b*a^2*b^2 + b*a^3*b^2"));
  E.rule2("🎃9", "🎃9a", "S14");
  E.expect(P("a^2*b*a*b^2"));
  E.sum("🎃10", {{1, "⋆3", false}, {-1, "🎃9", false}});
  E.expect(P("a^2*b^3*a"));

  DerivationLog log = E.log();
  const char *finals[] = {"🎃1", "🎃2", "🎃3", "🎃4", "🎃5",
                          "🎃6", "🎃7", "🎃8", "🎃9", "🎃10"};
  for (const Word &rep : swap_orbit_representatives(Multiweight{3, 3})) {
    std::string found;
    for (const char *name : finals) {
      const Poly &q = E.fact(name).poly;
      if (q.size() == 1 && (q.terms().begin()->first == rep ||
                            q.terms().begin()->first == swap_ab(rep)))
        found = name;
    }
    if (found.empty())
      throw Error("replay ended without Asym(" + format_word(rep, ab) + ")");
    log.targets.emplace_back(rep, found);
  }
  return log;
}

} // namespace stronglie
