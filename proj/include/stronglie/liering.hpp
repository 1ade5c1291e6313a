#pragma once

// Finite-dimensional Lie rings over F_p given by structure constants, used
// as a brute-force check on the symbolic results.
//
// Convention: elements are row vectors and ad(a) acts on the right, so
// v * ad(a) = [v, a] and v * ad(a) * ad(b) = [v, a, b]. A word g_1 ... g_n
// therefore evaluates to the matrix product ad(g_1) ... ad(g_n).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stronglie/gf.hpp"
#include "stronglie/kernels/exec.hpp"
#include "stronglie/poly.hpp"

namespace stronglie {

using Vec = std::vector<Residue>;

/// Dense square matrix over F_p.
class FpMatrix {
public:
  FpMatrix(PrimeField field, std::size_t n) : field_(field), n_(n), data_(n * n, 0) {}
  static FpMatrix identity(PrimeField field, std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const PrimeField &field() const noexcept { return field_; }
  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Residue &operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  FpMatrix operator*(const FpMatrix &o) const;
  FpMatrix operator+(const FpMatrix &o) const;
  FpMatrix operator-(const FpMatrix &o) const;
  FpMatrix scaled(Residue c) const;
  FpMatrix pow(unsigned e) const;
  bool is_zero() const;

  friend bool operator==(const FpMatrix &, const FpMatrix &) = default;

private:
  PrimeField field_;
  std::size_t n_;
  std::vector<Residue> data_;
};

/// Raised when structure constants violate alternation or the Jacobi identity.
class AxiomError : public Error {
public:
  AxiomError(const std::string &what, std::array<std::size_t, 3> triple)
      : Error(what), triple_(triple) {}
  /// 1-based basis indices; the third entry repeats the second for
  /// alternation failures.
  const std::array<std::size_t, 3> &triple() const noexcept { return triple_; }

private:
  std::array<std::size_t, 3> triple_;
};

class LieRing {
public:
  /// constants[(i*d + j)*d + k] is the coefficient of e_k in [e_i, e_j].
  /// Throws AxiomError on alternation or Jacobi failure.
  LieRing(PrimeField field, std::vector<std::string> names, std::vector<Residue> constants);

  const PrimeField &field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return d_; }
  const std::vector<std::string> &names() const noexcept { return names_; }
  Residue constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * d_ + j) * d_ + k];
  }
  const std::vector<Residue> &constants() const noexcept { return c_; }

  Vec basis_vector(std::size_t i) const;
  Vec bracket(const Vec &x, const Vec &y) const;
  /// Row i is [e_i, x].
  FpMatrix ad_matrix(const Vec &x) const;

  /// Element number `index` in base-p digits (e_1 coordinate least significant).
  Vec element(std::uint64_t index) const;
  /// p^dim, saturating at UINT64_MAX.
  std::uint64_t element_count() const noexcept;

  bool is_abelian() const;

private:
  PrimeField field_;
  std::size_t d_;
  std::vector<std::string> names_;
  std::vector<Residue> c_;
};

/// Row-reduced basis of a subspace of F_p^d.
class Subspace {
public:
  Subspace(PrimeField field, std::size_t dim);

  /// Adds v; returns false if it was already contained.
  bool insert(const Vec &v);
  bool contains(const Vec &v) const;
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t ambient_dim() const noexcept { return n_; }
  /// Reduced echelon basis, rows sorted by pivot.
  const std::vector<Vec> &basis() const noexcept { return basis_; }

private:
  Vec reduced(Vec v) const;

  PrimeField field_;
  std::size_t n_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Smallest ideal containing x.
Subspace principal_ideal(const LieRing &L, const Vec &x);
bool is_toastie(const LieRing &L, const Vec &x);
/// I^k = 0 for the subalgebra I, using gamma_1 = I, gamma_{i+1} = [gamma_i, I].
bool power_vanishes(const LieRing &L, const Subspace &I, unsigned k);

struct Quantification {
  /// Exhaustive when the number of quantified tuples is at most this.
  std::uint64_t exhaustive_limit = 1'000'000;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  Exec exec = Exec::serial;
};

struct OracleResult {
  bool holds = true;
  bool exhaustive = true;
  std::uint64_t checked = 0;
  /// First counterexample in enumeration order.
  std::vector<Vec> witness;
};

/// ad(y)^n = 0 for all y.
OracleResult is_n_engel(const LieRing &L, unsigned n, const Quantification &q = {});
/// I(x)^k = 0 for all x.
OracleResult is_k_strong(const LieRing &L, unsigned k, const Quantification &q = {});
/// Every element generates an abelian ideal.
OracleResult is_toastie_ring(const LieRing &L, const Quantification &q = {});
/// ad(x)^{k-1} ad(y)^{k-1} = (-1)^{k-1} ad(y)^{k-1} ad(x)^{k-1} for all pairs.
OracleResult check_identity_I_on_ring(const LieRing &L, unsigned k, const Quantification &q = {});
/// f(ad(x), ad(y)) = 0 for all pairs, f a two-generator polynomial.
OracleResult check_poly_on_ring(const LieRing &L, const Poly &f, const Quantification &q = {});

/// f with letter i replaced by ad(elements[i]).
FpMatrix evaluate_on_ad(const Poly &f, const LieRing &L, const std::vector<Vec> &elements);

/// L tensor F for the field extension F given by its multiplication table.
/// Basis e_l (x) t^s is numbered l*D + s.
LieRing extend_scalars(const LieRing &L, const ExtFieldTable &F);

LieRing heisenberg(std::uint32_t p);
/// Free nilpotent rank 2 of class 2 (dim 3) and class 3 (dim 5: x, y,
/// z = [x,y], u = [z,x], v = [z,y]).
LieRing free_nilpotent_rank2(std::uint32_t p, unsigned cls);
LieRing abelian(std::uint32_t p, std::size_t dim);
/// heisenberg, class2, class3, abelian, abelianN.
LieRing builtin_ring(std::string_view name, std::uint32_t p);

/// Header `p=3 dim=3 names=e1,e2,e3`, then lines `e1,e2 -> 1*e3`.
/// When the header omits p, `default_p` is used.
LieRing parse_lie_ring(std::string_view text, std::optional<std::uint32_t> default_p = {});
std::string serialize(const LieRing &L);

} // namespace stronglie
