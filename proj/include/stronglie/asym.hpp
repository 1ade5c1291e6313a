#pragma once

// Asym(p) means p(a,b) = -p(b,a) modulo a relation ideal. The engine below
// replays derivations built from named equations and Asym facts, and checks
// every intermediate claim against ideal membership.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "stronglie/nilquot.hpp"

namespace stronglie {

struct DerivationStep {
  std::string step;
  /// mult | combine | equation | rule1 | rule2 | sum
  std::string kind;
  std::vector<std::string> inputs;
  Poly output;
  bool verified = false;
  std::optional<Certificate> certificate;
};

struct AsymFact {
  std::string name;
  Poly poly;
  std::string kind;
  std::vector<std::string> parents;
};

struct DerivationLog {
  std::uint32_t p = 0;
  std::vector<DerivationStep> steps;
  /// Names of the facts establishing Asym for each swap-orbit representative.
  std::vector<std::pair<Word, std::string>> targets;
  /// Base labels of the ambient relations the derivation depends on.
  std::set<std::string> axioms_used;
  std::size_t derived_equations = 0;
  std::size_t failures = 0;
  Alphabet alphabet;

  nlohmann::json to_json() const;
};

/// Linear combination of named equations or facts: (coefficient, reference).
using EquationSum = std::vector<std::pair<std::int64_t, std::string>>;

class AsymEngine {
public:
  /// `ambient` supplies the axioms; when given, every equation and fact is
  /// also confirmed against `cross_check` (typically a larger ideal).
  explicit AsymEngine(RelationSet ambient, std::optional<RelationSet> cross_check = {});

  /// A reference is an equation label, a fact name (standing for
  /// p + swap(p)), or either followed by ' for its a <-> b image.
  Poly resolve(std::string_view ref) const;
  bool has_fact(std::string_view name) const { return facts_.count(std::string(name)) > 0; }
  const AsymFact &fact(std::string_view name) const;

  /// left * ref * right as a new equation.
  const Poly &multiply(const std::string &name, const Word &left, const std::string &ref,
                       const Word &right);
  /// Linear combination of references as a new equation.
  const Poly &combine(const std::string &name, const EquationSum &terms);
  /// Asym(p) from a combination of equations equal to p + swap(p).
  const AsymFact &from_equation(const std::string &name, const Poly &p, const EquationSum &terms);
  /// Asym(p + q) gives Asym(p + swap(q)); q must consist of terms of the fact.
  const AsymFact &rule1(const std::string &name, const std::string &fact, const Poly &q);
  /// Asym(p) and the equation p + q = 0 give Asym(q).
  const AsymFact &rule2(const std::string &name, const std::string &fact,
                        const std::string &equation);
  /// Asym is linear and invariant under swapping: (coefficient, fact, swapped).
  const AsymFact &sum(const std::string &name,
                      const std::vector<std::tuple<std::int64_t, std::string, bool>> &terms);

  /// Requires the output of the last step to equal `expected`; throws otherwise.
  void expect(const Poly &expected) const;

  const DerivationLog &log() const noexcept { return log_; }
  DerivationLog &log() noexcept { return log_; }
  const RelationSet &ambient() const noexcept { return ambient_; }

private:
  const IdealBasis &basis(const RelationSet &rs, const Multiweight &mw,
                          std::map<Multiweight, IdealBasis> &cache) const;
  Certificate verify_equation(const std::string &name, const Poly &f);
  void verify_fact(const std::string &name, const Poly &p);
  const AsymFact &add_fact(AsymFact f, const std::vector<std::string> &inputs);
  void note_inputs(const std::vector<std::string> &refs);
  std::set<std::string> deps_of(const std::string &ref) const;

  RelationSet ambient_;
  std::optional<RelationSet> cross_;
  mutable std::map<Multiweight, IdealBasis> ambient_bases_;
  mutable std::map<Multiweight, IdealBasis> cross_bases_;
  std::map<std::string, Poly> equations_;
  std::map<std::string, AsymFact> facts_;
  // Ambient base labels each equation or fact depends on.
  std::map<std::string, std::set<std::string>> depends_;
  DerivationLog log_;
};

/// Replays the k = 4 derivation of Asym for all ten multiweight-(3,3) swap
/// orbits from S1-S6 and L1 (with their swaps) over F_p. Throws Error naming
/// the step if any side condition fails. Requires p != 2.
DerivationLog replay_appendix(std::uint32_t p);

/// The ten intermediate equations obtained by multiplying base equations
/// with words (S8-S14, L8-L10), in replay order.
std::vector<std::pair<std::string, Poly>> appendix_products(std::uint32_t p);

// ---- Matrices over R = F_p[sigma]/(sigma^2 - 1) ----

enum class SymmetryOperator { swap_negate, mirror };
std::string to_string(SymmetryOperator op);
SymmetryOperator symmetry_from_string(std::string_view s);

/// c0 + c1 * sigma.
struct SigmaElem {
  Residue c0 = 0;
  Residue c1 = 0;
  friend bool operator==(const SigmaElem &, const SigmaElem &) = default;
};

SigmaElem sigma_add(const PrimeField &F, SigmaElem x, SigmaElem y);
SigmaElem sigma_mul(const PrimeField &F, SigmaElem x, SigmaElem y);
std::string format_sigma(SigmaElem x, std::uint32_t p);

struct SigmaMatrix {
  PrimeField field{2};
  SymmetryOperator op = SymmetryOperator::swap_negate;
  /// Orbit representatives; empty when the matrix was given directly.
  std::vector<Word> columns;
  /// Columns fixed by the operator (mirror palindromes). Their coordinates
  /// satisfy the target identity automatically and take no part in the reduction.
  std::vector<bool> fixed;
  std::vector<std::vector<SigmaElem>> rows;
  std::vector<std::string> row_labels;

  std::size_t column_count() const { return fixed.size(); }
  std::size_t free_column_count() const;

  static SigmaMatrix from_rows(PrimeField field, std::size_t cols,
                               std::vector<std::vector<SigmaElem>> rows);
  static SigmaMatrix identity(PrimeField field, std::size_t n);
};

/// Adds the operator images of relations that are missing up to scalar
/// (labels suffixed ' for swap, ~ for mirror).
RelationSet close_under(const RelationSet &rs, SymmetryOperator op);

/// Rows are the products u*r*v of multiweight mw; columns are operator orbits.
/// For swap_negate, sigma acts as p -> -swap(p); for mirror, as word reversal.
/// Throws Error naming a row whose operator image is not a row up to scalar.
SigmaMatrix build_sigma_matrix(const RelationSet &rs, const Multiweight &mw,
                               SymmetryOperator op);

struct SigmaReduction {
  bool triangularized = false;
  /// Top block rows (1 - sigma on the diagonal) over the free columns, when found.
  std::vector<std::vector<SigmaElem>> triangular;
  /// First free column (index among free columns) where the target form fails.
  std::optional<std::size_t> obstruction;
  std::string method;
};

/// Decides whether invertible row operations over R bring the free-column part
/// of M to [T; B] with T square upper triangular and 1 - sigma on its
/// diagonal. For p != 2 this splits R = F_p x F_p at sigma = +1 and -1.
/// For p = 2 it uses the module criterion below.
SigmaReduction sigma_reduce(const SigmaMatrix &M);

/// Criterion without the idempotent splitting: for each free column j the
/// R-row module contains a row that vanishes before j and has 1 - sigma at j,
/// and some row has room below the triangle (more rows than free columns, or
/// sigma = 1 kills the first column).
SigmaReduction sigma_reduce_module(const SigmaMatrix &M);

nlohmann::json to_json(const SigmaMatrix &M, const SigmaReduction &r, const Alphabet &alphabet);

} // namespace stronglie
