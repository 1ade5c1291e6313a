// Command-line driver: relation sets, conjecture checks, the appendix replay,
// sigma matrices and the Lie ring oracles.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stronglie/asym.hpp"
#include "stronglie/conjecture.hpp"
#include "stronglie/liering.hpp"
#include "stronglie/nilquot.hpp"
#include "stronglie/relations.hpp"

using namespace stronglie;
using nlohmann::json;

namespace {

enum Exit { ok = 0, failed = 1, expected_failure = 2 };

struct Common {
  std::string out;
  std::string format = "json";
  bool no_timings = false;
  bool serial = false;

  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

void add_common(CLI::App *cmd, Common &c) {
  cmd->add_option("--out", c.out, "Write the report here instead of stdout");
  cmd->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--no-timings", c.no_timings, "Leave timing fields out of JSON reports");
  cmd->add_flag("--serial", c.serial, "Run the serial kernels");
}

void emit(const Common &c, const std::string &text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f)
    throw Error("cannot write " + c.out);
  f << text;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path data_dir() {
  if (const char *env = std::getenv("STRONGLIE_DATA"))
    return env;
  return STRONGLIE_DATA_DIR;
}

// "2,3,5" -> {2,3,5}; each entry must be prime.
const auto PrimeList = CLI::Validator(
    [](std::string &s) -> std::string {
      std::stringstream in(s);
      std::string item;
      bool any = false;
      while (std::getline(in, item, ',')) {
        any = true;
        try {
          std::size_t used = 0;
          const unsigned long v = std::stoul(item, &used);
          if (used != item.size() || v > (1ul << 31) || !is_prime(static_cast<std::uint32_t>(v)))
            return "'" + item + "' is not a prime";
        } catch (const std::logic_error &) {
          return "'" + item + "' is not a prime";
        }
      }
      return any ? "" : "empty list";
    },
    "PRIME[,PRIME...]");

std::vector<std::uint32_t> parse_primes(const std::string &s) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  return out;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

// ---- check ----

struct CheckArgs {
  std::string variant;
  unsigned k = 0;
  std::string p;
  std::string which = "all";
  std::string relations;
  bool certificates = false;
  bool expect_fail = false;
  std::string pattern;
  std::string sigma = "1,0";
  Common common;
};

std::string text_report(const ConjectureReport &r) {
  std::ostringstream os;
  std::size_t held = 0;
  for (const auto &x : r.results)
    held += x.member;
  os << "variant " << to_string(r.variant) << " k=" << r.k << " p=" << r.p << " relations "
     << r.relations << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << held << "/"
     << r.results.size() << ")" << (r.proviso ? " [p < k]" : "") << "\n";
  for (const auto &x : r.results) {
    os << "  " << (x.member ? "member    " : "not member") << "  " << x.identity;
    if (x.reduces_to_zero)
      os << (*x.reduces_to_zero ? "  (monomial reduces to 0)" : "");
    os << "\n";
  }
  return os.str();
}

int run_check(const CheckArgs &a) {
  if (a.relations.empty() && (a.k < 2 || a.k > 5))
    throw CLI::ValidationError("--k", "must be 2, 3, 4 or 5 unless --relations is given");
  const Which which = which_from_string(a.which);
  const Variant variant = variant_from_string(a.variant);
  std::optional<std::string> rel_text;
  if (!a.relations.empty())
    rel_text = read_file(a.relations);

  std::vector<std::uint32_t> primes = parse_primes(a.p);
  if (primes.empty()) {
    if (!rel_text)
      throw CLI::RequiredError("--p");
    primes.push_back(parse_relation_set(*rel_text, std::nullopt).field().modulus());
  }

  auto load = [&](std::uint32_t p) {
    if (rel_text)
      return parse_relation_set(*rel_text, p,
                                std::filesystem::path(a.relations).filename().string());
    return paper_relation_set(a.k, p, which);
  };

  if (variant == Variant::III) {
    if (a.pattern.empty())
      throw CLI::RequiredError("--pattern");
    json reports = json::array();
    std::string text;
    bool all = true;
    for (auto p : primes) {
      const RelationSet rs = load(p);
      const Poly pattern = parse_poly(a.pattern, rs.alphabet(), rs.field());
      std::vector<Letter> sigma;
      for (auto v : parse_primes(a.sigma))
        sigma.push_back(static_cast<Letter>(v));
      const auto res = search_variant_III(pattern, sigma, rs);
      const char *outcome = res.outcome == VariantIIIResult::Outcome::scalar ? "scalar"
                            : res.outcome == VariantIIIResult::Outcome::degenerate
                                ? "degenerate"
                                : "none";
      json j{{"k", rs.k()}, {"p", p}, {"variant", "III"}, {"relations", rs.name()},
             {"pattern", format_poly(pattern, rs.alphabet())}, {"outcome", outcome},
             {"experimental", true}, {"version", 1}};
      if (res.alpha)
        j["alpha"] = *res.alpha;
      all = all && res.outcome == VariantIIIResult::Outcome::scalar;
      text += "variant III k=" + std::to_string(rs.k()) + " p=" + std::to_string(p) + ": " +
              outcome + (res.alpha ? " alpha=" + std::to_string(*res.alpha) : "") + "\n";
      reports.push_back(std::move(j));
    }
    emit(a.common, a.common.format == "text" ? text
                                              : dump(reports.size() == 1 ? reports[0]
                                                                         : json{{"reports", reports}}));
    if (a.expect_fail)
      return all ? failed : expected_failure;
    return all ? ok : failed;
  }

  const CheckOptions opts{a.certificates, a.common.exec()};
  json reports = json::array();
  std::string text;
  bool all = true, none = true;
  for (auto p : primes) {
    const RelationSet rs = load(p);
    const ConjectureReport r =
        variant == Variant::I ? check_variant_I(rs, opts) : check_variant_II(rs, opts);
    all = all && r.passed();
    none = none && !r.passed();
    reports.push_back(r.to_json(!a.common.no_timings));
    text += text_report(r);
  }
  emit(a.common, a.common.format == "text" ? text
                                            : dump(reports.size() == 1 ? reports[0]
                                                                       : json{{"reports", reports}}));
  if (a.expect_fail)
    return none ? expected_failure : failed;
  return all ? ok : failed;
}

// ---- gen-relations ----

struct GenArgs {
  unsigned k = 0;
  std::uint32_t p = 3;
  std::string which = "all";
  std::string pool;
  unsigned max_degree = 0;
  bool with_swaps = false;
  Common common;
};

int run_gen(const GenArgs &a) {
  RelationSet rs = [&] {
    if (!a.pool.empty()) {
      const Alphabet ab(2);
      const PrimeField F(a.p);
      std::vector<Word> pool;
      std::stringstream in(a.pool);
      std::string item;
      while (std::getline(in, item, ','))
        pool.push_back(item == "1" ? Word{} : parse_word(item, ab));
      return generate_strong_relations(a.k, pool, a.max_degree ? a.max_degree : 2 * a.k - 2, F);
    }
    if (a.k < 2 || a.k > 5)
      throw CLI::ValidationError("--k", "must be 2, 3, 4 or 5");
    const Which w = which_from_string(a.which);
    return a.with_swaps ? paper_relation_set(a.k, a.p, w) : paper_base_relations(a.k, a.p, w);
  }();
  emit(a.common, serialize(rs));
  return ok;
}

// ---- replay-appendix ----

int run_replay(const std::string &p_list, const Common &c) {
  json logs = json::array();
  std::string text;
  bool all = true;
  for (auto p : parse_primes(p_list)) {
    const DerivationLog log = replay_appendix(p);
    all = all && log.failures == 0 && log.targets.size() == 10;
    logs.push_back(log.to_json());
    text += "p=" + std::to_string(p) + ": " + std::to_string(log.steps.size()) + " steps, " +
            std::to_string(log.derived_equations) + " derived equations, " +
            std::to_string(log.failures) + " failures\n";
    for (const auto &s : log.steps)
      text += "  " + s.step + " [" + s.kind + "] " + format_poly(s.output, log.alphabet) + "\n";
    text += "  axioms:";
    for (const auto &ax : log.axioms_used)
      text += " " + ax;
    text += "\n";
  }
  emit(c, c.format == "text" ? text : dump(logs.size() == 1 ? logs[0] : json{{"logs", logs}}));
  return all ? ok : failed;
}

// ---- sigma ----

struct SigmaArgs {
  unsigned k = 0;
  std::string p;
  std::string op = "swap";
  std::string which = "all";
  std::string method = "split";
  Common common;
};

int run_sigma(const SigmaArgs &a) {
  if (a.k < 2 || a.k > 5)
    throw CLI::ValidationError("--k", "must be 2, 3, 4 or 5");
  const SymmetryOperator op = symmetry_from_string(a.op);
  json out = json::array();
  std::string text;
  bool all = true;
  for (auto p : parse_primes(a.p)) {
    const RelationSet rs = close_under(paper_relation_set(a.k, p, which_from_string(a.which)), op);
    const SigmaMatrix M = build_sigma_matrix(rs, Multiweight{a.k - 1, a.k - 1}, op);
    const SigmaReduction r = a.method == "module" ? sigma_reduce_module(M) : sigma_reduce(M);
    all = all && r.triangularized;
    json j = to_json(M, r, rs.alphabet());
    j["k"] = a.k;
    j["relations"] = rs.name();
    out.push_back(std::move(j));
    text += "k=" + std::to_string(a.k) + " p=" + std::to_string(p) + " operator " + a.op + ": " +
            std::to_string(M.rows.size()) + " rows, " + std::to_string(M.column_count()) +
            " columns (" + std::to_string(M.free_column_count()) + " free): " +
            (r.triangularized ? "triangularized" : "not triangularized") + "\n";
  }
  emit(a.common, a.common.format == "text" ? text
                                            : dump(out.size() == 1 ? out[0] : json{{"reports", out}}));
  return all ? ok : failed;
}

// ---- oracle ----

struct OracleArgs {
  std::string ring = "heisenberg";
  std::string p;
  unsigned k = 2;
  unsigned extend = 1;
  std::uint64_t seed = 1;
  std::uint64_t samples = 10'000;
  std::uint64_t limit = 1'000'000;
  Common common;
};

json oracle_json(const OracleResult &r) {
  json j{{"holds", r.holds}, {"exhaustive", r.exhaustive}, {"checked", r.checked}};
  if (!r.holds) {
    json w = json::array();
    for (const auto &v : r.witness)
      w.push_back(v);
    j["witness"] = std::move(w);
  }
  return j;
}

int run_oracle(const OracleArgs &a) {
  std::vector<std::uint32_t> primes = parse_primes(a.p);
  const bool from_file = std::filesystem::exists(a.ring) && a.ring.find('.') != std::string::npos;
  std::optional<std::string> text_in;
  if (from_file)
    text_in = read_file(a.ring);
  if (primes.empty()) {
    if (!text_in)
      throw CLI::RequiredError("--p");
    primes.push_back(parse_lie_ring(*text_in).field().modulus());
  }
  const Quantification q{a.limit, a.samples, a.seed, a.common.exec()};
  json out = json::array();
  std::string text;
  bool all = true;
  for (auto p : primes) {
    LieRing L = text_in ? parse_lie_ring(*text_in, p) : builtin_ring(a.ring, p);
    if (L.field().modulus() != p)
      throw Error("ring file is over F_" + std::to_string(L.field().modulus()) +
                  " but --p asks for " + std::to_string(p));
    if (a.extend > 1)
      L = extend_scalars(L, ext_field_gf(p, a.extend, find_irreducible(PrimeField(p), a.extend)));
    const OracleResult strong = is_k_strong(L, a.k, q);
    const OracleResult engel = is_n_engel(L, a.k, q);
    const OracleResult ident = check_identity_I_on_ring(L, a.k, q);
    all = all && strong.holds && engel.holds && ident.holds;
    out.push_back(json{{"ring", a.ring},
                       {"p", p},
                       {"dim", L.dim()},
                       {"extension_degree", a.extend},
                       {"k", a.k},
                       {"seed", a.seed},
                       {"k_strong", oracle_json(strong)},
                       {"engel", oracle_json(engel)},
                       {"identity_I", oracle_json(ident)},
                       {"version", 1}});
    auto line = [](const char *what, const OracleResult &r) {
      return std::string("  ") + what + ": " + (r.holds ? "holds" : "fails") + " (" +
             (r.exhaustive ? "exhaustive, " : "sampled, ") + std::to_string(r.checked) +
             " checked)\n";
    };
    text += a.ring + " p=" + std::to_string(p) + " dim=" + std::to_string(L.dim()) +
            " k=" + std::to_string(a.k) + "\n" + line("k-strong", strong) +
            line("Engel", engel) + line("identity I", ident);
  }
  emit(a.common, a.common.format == "text" ? text
                                            : dump(out.size() == 1 ? out[0] : json{{"reports", out}}));
  return all ? ok : failed;
}

// ---- quotient-dims ----

int run_dims(unsigned k, const std::string &p_list, const std::string &which, unsigned max_degree,
             const Common &c) {
  if (k < 2 || k > 5)
    throw CLI::ValidationError("--k", "must be 2, 3, 4 or 5");
  json out = json::array();
  std::string text;
  for (auto p : parse_primes(p_list)) {
    const RelationSet rs = paper_relation_set(k, p, which_from_string(which));
    const auto dims = quotient_dimensions(rs, max_degree, c.exec());
    json d = json::array();
    for (const auto &[mw, n] : dims)
      d.push_back(json{{"multiweight", mw.counts()}, {"dim", n}});
    out.push_back(json{{"k", k}, {"p", p}, {"relations", rs.name()}, {"dims", d}, {"version", 1}});
    text += "k=" + std::to_string(k) + " p=" + std::to_string(p) + "\n";
    for (const auto &[mw, n] : dims)
      text += "  " + mw.to_string() + " " + std::to_string(n) + "\n";
  }
  emit(c, c.format == "text" ? text : dump(out.size() == 1 ? out[0] : json{{"reports", out}}));
  return ok;
}

// ---- golden ----

int run_golden(const Common &c) {
  struct Entry {
    const char *file;
    unsigned k;
    Which which;
  };
  const Entry entries[] = {{"k2.rel", 2, Which::all},          {"k3.rel", 3, Which::all},
                           {"k4_short.rel", 4, Which::short_eqs}, {"k4_long.rel", 4, Which::long_eqs},
                           {"k5_short.rel", 5, Which::short_eqs}, {"k5_long.rel", 5, Which::long_eqs}};
  const auto dir = data_dir();
  json out = json::array();
  std::string text;
  bool all = true;
  for (const auto &e : entries) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      const RelationSet file = parse_relation_set(read_file((dir / e.file).string()), p, e.file);
      const RelationSet code = paper_base_relations(e.k, p, e.which);
      std::vector<std::string> diff;
      for (const auto &r : code.relations()) {
        const Relation *f = file.find(r.label);
        if (!f || !(f->poly == r.poly))
          diff.push_back(r.label);
      }
      for (const auto &r : file.relations())
        if (!code.find(r.label))
          diff.push_back(r.label);
      const bool match = diff.empty() && file == code;
      all = all && match;
      out.push_back(json{{"file", e.file}, {"p", p}, {"match", match}, {"differs", diff}});
      text += std::string(e.file) + " p=" + std::to_string(p) + ": " +
              (match ? "match" : "MISMATCH") + "\n";
    }
  }
  {
    const RelationSet file =
        parse_relation_set(read_file((dir / "k4_appendix.rel").string()), 3, "k4_appendix.rel");
    const auto prods = appendix_products(3);
    bool match = file.size() == prods.size();
    for (std::size_t i = 0; match && i < prods.size(); ++i)
      match = file.relations()[i].label == prods[i].first &&
              file.relations()[i].poly == prods[i].second;
    all = all && match;
    out.push_back(json{{"file", "k4_appendix.rel"}, {"p", 3}, {"match", match}});
    text += std::string("k4_appendix.rel p=3: ") + (match ? "match" : "MISMATCH") + "\n";
  }
  emit(c, c.format == "text" ? text : dump(json{{"data_dir", dir.string()}, {"files", out}}));
  return all ? ok : failed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Strongness relations, nilpotent quotients and Lie ring oracles"};
  app.require_subcommand(1);

  CheckArgs check;
  auto *c_check = app.add_subcommand("check", "Check conjecture variant I, II or III");
  c_check->add_option("--variant", check.variant, "I, II or III")
      ->required()
      ->check(CLI::IsMember({"I", "II", "III"}));
  c_check->add_option("--k", check.k, "Strongness k");
  c_check->add_option("--p", check.p, "Characteristic(s), comma separated")->check(PrimeList);
  c_check->add_option("--which", check.which, "Equation list")
      ->check(CLI::IsMember({"short", "long", "all"}));
  c_check->add_option("--relations", check.relations, "Relation file instead of the canned lists")
      ->check(CLI::ExistingFile);
  c_check->add_flag("--certificates", check.certificates, "Attach membership certificates");
  c_check->add_flag("--expect-fail", check.expect_fail, "Exit 2 if every check fails");
  c_check->add_option("--pattern", check.pattern, "Variant III pattern polynomial");
  c_check->add_option("--sigma", check.sigma, "Variant III generator permutation, e.g. 1,0");
  add_common(c_check, check.common);

  GenArgs gen;
  auto *c_gen = app.add_subcommand("gen-relations", "Print a relation set");
  c_gen->add_option("--k", gen.k, "Strongness k")->required();
  c_gen->add_option("--p", gen.p, "Characteristic")->check(PrimeList);
  c_gen->add_option("--which", gen.which, "Equation list")
      ->check(CLI::IsMember({"short", "long", "all"}));
  c_gen->add_flag("--with-swaps", gen.with_swaps, "Include the a <-> b images");
  c_gen->add_option("--pool", gen.pool, "Generate from separator words, e.g. 1,b,ab");
  c_gen->add_option("--max-degree", gen.max_degree, "Degree bound for generated relations");
  add_common(c_gen, gen.common);

  std::string replay_p;
  Common replay_common;
  auto *c_replay = app.add_subcommand("replay-appendix", "Replay the k=4 Asym derivation");
  c_replay->add_option("--p", replay_p, "Odd characteristic(s)")->required()->check(PrimeList);
  add_common(c_replay, replay_common);

  SigmaArgs sigma;
  auto *c_sigma = app.add_subcommand("sigma", "Reduce the F_p[sigma] matrix at (k-1,k-1)");
  c_sigma->add_option("--k", sigma.k, "Strongness k")->required();
  c_sigma->add_option("--p", sigma.p, "Characteristic(s)")->required()->check(PrimeList);
  c_sigma->add_option("--operator", sigma.op, "swap or mirror")
      ->check(CLI::IsMember({"swap", "mirror"}));
  c_sigma->add_option("--which", sigma.which, "Equation list")
      ->check(CLI::IsMember({"short", "long", "all"}));
  c_sigma->add_option("--method", sigma.method, "split or module")
      ->check(CLI::IsMember({"split", "module"}));
  add_common(c_sigma, sigma.common);

  OracleArgs oracle;
  auto *c_oracle = app.add_subcommand("oracle", "Check strongness and identity I on a Lie ring");
  c_oracle->add_option("--ring", oracle.ring, "Built-in name or .lie file");
  c_oracle->add_option("--p", oracle.p, "Characteristic(s)")->check(PrimeList);
  c_oracle->add_option("--k", oracle.k, "Strongness k")->check(CLI::Range(2u, 64u));
  c_oracle->add_option("--extend", oracle.extend, "Extend scalars to F_{p^d}")
      ->check(CLI::Range(1u, 8u));
  c_oracle->add_option("--seed", oracle.seed, "Seed for sampled runs");
  c_oracle->add_option("--samples", oracle.samples, "Sample size when not exhaustive");
  c_oracle->add_option("--exhaustive-limit", oracle.limit, "Largest tuple count checked exhaustively");
  add_common(c_oracle, oracle.common);

  unsigned dims_k = 0, dims_deg = 0;
  std::string dims_p, dims_which = "all";
  Common dims_common;
  auto *c_dims = app.add_subcommand("quotient-dims", "Quotient dimension per multiweight");
  c_dims->add_option("--k", dims_k, "Strongness k")->required();
  c_dims->add_option("--p", dims_p, "Characteristic(s)")->required()->check(PrimeList);
  c_dims->add_option("--max-degree", dims_deg, "Largest total degree")->required();
  c_dims->add_option("--which", dims_which, "Equation list")
      ->check(CLI::IsMember({"short", "long", "all"}));
  add_common(c_dims, dims_common);

  Common golden_common;
  auto *c_golden = app.add_subcommand("golden", "Compare the canned lists with the data files");
  add_common(c_golden, golden_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return failed;
  }

  try {
    if (c_check->parsed())
      return run_check(check);
    if (c_gen->parsed())
      return run_gen(gen);
    if (c_replay->parsed())
      return run_replay(replay_p, replay_common);
    if (c_sigma->parsed())
      return run_sigma(sigma);
    if (c_oracle->parsed())
      return run_oracle(oracle);
    if (c_dims->parsed())
      return run_dims(dims_k, dims_p, dims_which, dims_deg, dims_common);
    if (c_golden->parsed())
      return run_golden(golden_common);
  } catch (const CLI::ParseError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return failed;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  }
  return failed;
}
