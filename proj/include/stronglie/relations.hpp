#pragma once

// Multihomogeneous relation families satisfied by k-strong Lie algebras.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stronglie/poly.hpp"

namespace stronglie {

enum class Provenance { paper_canned, generated, file };
enum class Which { short_eqs, long_eqs, all };

std::string to_string(Provenance p);
std::string to_string(Which w);
Which which_from_string(std::string_view s);

struct Relation {
  std::string label;
  Poly poly;
  Multiweight multiweight;
  /// Free-form description of how the relation arose; not serialized.
  std::string origin;
};

/// Labeled list of multihomogeneous relations over a fixed alphabet and field.
class RelationSet {
public:
  RelationSet(unsigned k, Alphabet alphabet, PrimeField field, Provenance provenance,
              std::string name = {});

  /// Throws Error on duplicate labels, non-homogeneous or zero polynomials,
  /// and arity/modulus mismatches.
  void add(std::string label, Poly poly, std::string origin = {});

  unsigned k() const noexcept { return k_; }
  const Alphabet &alphabet() const noexcept { return alphabet_; }
  std::size_t generator_count() const noexcept { return alphabet_.size(); }
  const PrimeField &field() const noexcept { return field_; }
  Provenance provenance() const noexcept { return provenance_; }
  const std::string &name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<Relation> &relations() const noexcept { return relations_; }
  std::size_t size() const noexcept { return relations_.size(); }
  bool empty() const noexcept { return relations_.empty(); }
  const Relation *find(std::string_view label) const;
  std::vector<std::string> labels() const;

  /// Appends the a <-> b image of every relation (label suffixed with ')
  /// unless that image already occurs up to a scalar.
  RelationSet with_swaps() const;
  /// Relations whose labels are listed, in this set's order.
  RelationSet subset(const std::vector<std::string> &labels) const;

  /// Compares k, alphabet, field and the labeled relations; provenance,
  /// name and origins are metadata and ignored.
  friend bool operator==(const RelationSet &x, const RelationSet &y);

private:
  unsigned k_;
  Alphabet alphabet_;
  PrimeField field_;
  Provenance provenance_;
  std::string name_;
  std::vector<Relation> relations_;
};

/// Sum over the placements of `j` copies of b among `n` slots of the word
/// slot_1 sep_1 slot_2 ... sep_{n-1} slot_n (other slots hold a).
Poly slot_sum(std::size_t n, std::size_t j, const std::vector<Word> &separators,
              PrimeField field, std::size_t generators = 2);

/// Like slot_sum, but over an explicit list of b-placements (0-based slot sets).
Poly slot_pattern_sum(std::size_t n, const std::vector<std::vector<std::size_t>> &placements,
                      const std::vector<Word> &separators, PrimeField field,
                      std::size_t generators = 2);

/// Sum over all distinct arrangements of the slot letters with multiplicities
/// `counts` (letter i appears counts[i] times) separated by `separators`.
Poly slot_sum_multi(const std::vector<unsigned> &counts, const std::vector<Word> &separators,
                    PrimeField field, std::size_t generators);

/// The labeled equation lists for k in {2,3,4,5} plus their a <-> b images.
RelationSet paper_relation_set(unsigned k, std::uint32_t p, Which which);
/// The same lists without the a <-> b images, in their original order.
RelationSet paper_base_relations(unsigned k, std::uint32_t p, Which which);

/// All slot sums for strongness n over separator tuples from `pool`
/// (entries may be empty), restricted to total degree <= max_degree and
/// deduplicated up to scalar. The slots range over the first
/// `slot_generators` letters; every arrangement with at least two distinct
/// slot letters is produced.
RelationSet generate_strong_relations(unsigned n, const std::vector<Word> &pool,
                                      unsigned max_degree, PrimeField field,
                                      const Alphabet &alphabet = Alphabet(2),
                                      std::size_t slot_generators = 2);

/// (x + lambda*y) substituted into every slot: entry j is the lambda^j component.
std::vector<Poly> lambda_expansion(std::size_t n, const std::vector<Word> &separators,
                                   PrimeField field, std::size_t generators = 2);

struct VandermondeExtraction {
  /// lambda^1, ..., lambda^{n-1} components.
  std::vector<Poly> components;
  /// Their vanishing follows from the strongness identity only over fields
  /// with at least this many elements.
  unsigned required_field_size;
  bool field_large_enough;
};

/// Splits a lambda-expansion into its mixed components and records the
/// field-size proviso relative to `field`.
VandermondeExtraction vandermonde_extract(const std::vector<Poly> &expansion,
                                          PrimeField field);

/// Recovers the mixed components from evaluations of the mixed part at the
/// distinct nonzero scalars `lambdas` (one per component) by inverting the
/// Vandermonde system over F_p. Throws Error if the scalars are not distinct
/// and nonzero.
std::vector<Poly> vandermonde_recover(const std::vector<Residue> &lambdas,
                                      const std::vector<Poly> &evaluations);

/// Text form: header lines `#k=`, `#p=`, optional `#gens=`, then
/// `LABEL: polynomial` lines. Lines starting with "# " are comments.
std::string serialize(const RelationSet &rs);
/// Throws ParseError with line/column. When the text has no `#p=` header,
/// `default_modulus` is used (and required).
RelationSet parse_relation_set(std::string_view text,
                               std::optional<std::uint32_t> default_modulus = std::nullopt,
                               std::string name = "file");

} // namespace stronglie
