#pragma once

// Checks of the three conjecture variants against relation ideals.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stronglie/nilquot.hpp"

namespace stronglie {

enum class Variant { I, II, III };
std::string to_string(Variant v);
Variant variant_from_string(std::string_view s);

struct IdentityResult {
  std::string identity;
  Poly poly;
  bool member = false;
  /// Variant II at k >= 5: whether the monomial itself lies in the ideal.
  std::optional<bool> reduces_to_zero;
  std::optional<Certificate> certificate;
};

struct ConjectureReport {
  unsigned k = 0;
  std::uint32_t p = 0;
  Variant variant = Variant::I;
  std::string relations;
  Provenance provenance = Provenance::paper_canned;
  std::vector<std::string> relation_labels;
  Alphabet alphabet;
  /// p < k: the relations follow from k-strongness only over larger fields.
  bool proviso = false;
  std::vector<IdentityResult> results;
  double seconds = 0;

  bool passed() const;
  /// Deterministic apart from the optional "seconds" field.
  nlohmann::json to_json(bool timings = true) const;
};

struct CheckOptions {
  bool certificates = false;
  Exec exec = Exec::serial;
};

/// x^{k-1} y^{k-1} - (-1)^{k-1} y^{k-1} x^{k-1}, sign taken in F_p.
Poly variant_I_identity(unsigned k, PrimeField field);

/// Lexicographically smallest word of each {w, swap(w)} orbit, in deglex order.
std::vector<Word> swap_orbit_representatives(const Multiweight &mw);

ConjectureReport check_variant_I(const RelationSet &rs, const CheckOptions &opts = {});
ConjectureReport check_variant_I(unsigned k, std::uint32_t p, Which which,
                                 const CheckOptions &opts = {});

/// One entry per swap orbit of multiweight-(k-1,k-1) monomials. Throws
/// Error if the result would contradict the variant I check it contains.
ConjectureReport check_variant_II(const RelationSet &rs, const CheckOptions &opts = {});
ConjectureReport check_variant_II(unsigned k, std::uint32_t p, const CheckOptions &opts = {});

struct VariantIIIResult {
  enum class Outcome { scalar, degenerate, none };
  Outcome outcome = Outcome::none;
  /// Set when outcome == scalar.
  std::optional<Residue> alpha;
};

/// Looks for alpha in F_p with pattern - alpha * sigma(pattern) in the ideal
/// of rs. Both sides lying in the ideal is reported as degenerate. Throws
/// Error unless the pattern is multihomogeneous of multiweight (k-1, ..., k-1).
VariantIIIResult search_variant_III(const Poly &pattern, const std::vector<Letter> &sigma,
                                    const RelationSet &rs);
/// Two-generator convenience using the canned k-strong relations.
VariantIIIResult search_variant_III(const Poly &pattern, const std::vector<Letter> &sigma,
                                    unsigned k, std::uint32_t p);

} // namespace stronglie
