#pragma once

// Two-sided ideal membership in the free associative algebra, one
// multiweight at a time. For multihomogeneous relations the multiweight-mw
// part of the ideal is spanned by the products u*r*v of that multiweight, so
// a dense row reduction over the words of multiweight mw decides membership
// exactly.

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "stronglie/kernels/echelon.hpp"
#include "stronglie/relations.hpp"

namespace stronglie {

struct CertificateTerm {
  Residue coeff;
  Word left;
  std::string rel;
  Word right;

  friend bool operator==(const CertificateTerm &, const CertificateTerm &) = default;
};

/// f = sum coeff * left * rel * right.
using Certificate = std::vector<CertificateTerm>;

/// A spanning product u * relations[relation] * v.
struct GeneratorEntry {
  Word left;
  std::size_t relation;
  Word right;
};

class IdealBasis {
public:
  /// Throws Error if some relation is not multihomogeneous or if mw has the
  /// wrong number of generators.
  IdealBasis(const RelationSet &rs, Multiweight mw, bool track_certificates = false,
             Exec exec = Exec::serial);

  const Multiweight &multiweight() const noexcept { return mw_; }
  const PrimeField &field() const noexcept { return field_; }
  std::size_t generator_count() const noexcept { return generators_; }
  /// Column labels: the words of multiweight mw in deglex order.
  const std::vector<Word> &words() const noexcept { return words_; }
  std::size_t rank() const noexcept { return echelon_.rank(); }
  /// Dimension of the multiweight-mw component of the quotient algebra.
  std::size_t quotient_dimension() const noexcept { return words_.size() - rank(); }
  std::vector<std::size_t> pivot_columns() const { return echelon_.pivot_columns(); }
  /// i-th row of the reduced echelon form as a polynomial.
  Poly row(std::size_t i) const;
  const std::vector<GeneratorEntry> &generator_log() const noexcept { return log_; }
  bool tracks_certificates() const noexcept { return echelon_.tracks_combinations(); }

  /// Normal form modulo the row space. Throws Error unless f is zero or of
  /// multiweight mw.
  Poly reduce(const Poly &f) const;
  bool contains(const Poly &f) const { return reduce(f).is_zero(); }
  /// Certificate for a member, nullopt for a non-member. Requires tracking.
  std::optional<Certificate> certificate(const Poly &f) const;

private:
  std::vector<Residue> to_vector(const Poly &f) const;
  Poly from_vector(std::span<const Residue> v) const;

  Multiweight mw_;
  PrimeField field_;
  std::size_t generators_;
  std::vector<Word> words_;
  std::unordered_map<Word, std::size_t, WordHash> column_of_;
  std::vector<std::string> labels_;
  std::vector<GeneratorEntry> log_;
  kernels::Echelon echelon_;
};

struct Membership {
  bool member = false;
  /// Present when requested and member.
  std::optional<Certificate> certificate;
};

/// Non-homogeneous f is split into components; all must be members.
Membership is_member(const Poly &f, const RelationSet &rs, bool want_certificate = false,
                     Exec exec = Exec::serial);

/// Exact re-expansion check. Throws Error on labels not in rs.
bool verify_certificate(const Certificate &c, const Poly &f, const RelationSet &rs);

/// Expands sum coeff * left * rel * right. Throws Error on unknown labels.
Poly expand_certificate(const Certificate &c, const RelationSet &rs);

/// Quotient dimension for every multiweight of total degree <= max_degree.
/// With Exec::parallel the multiweights are processed concurrently.
std::map<Multiweight, std::size_t> quotient_dimensions(const RelationSet &rs,
                                                       unsigned max_degree,
                                                       Exec exec = Exec::serial);

nlohmann::json to_json(const Certificate &c, const Alphabet &alphabet);
Certificate certificate_from_json(const nlohmann::json &j, const Alphabet &alphabet,
                                  const PrimeField &field);

} // namespace stronglie
