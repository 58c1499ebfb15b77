#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hallforge/rep.hpp"
#include "hallforge/scalar.hpp"

namespace hallforge {

/// Enumeration budgets. Exceeding one raises ResourceError, never a silent
/// truncation.
struct Caps {
  std::uint64_t hom_scan = 1ull << 22;
  std::uint64_t subspace_scan = 1ull << 22;
  std::uint64_t complex_scan = 1ull << 22;
};

using IsoId = int;

struct IsoClass {
  IsoId id = -1;
  DimVec dim;
  Rep rep;        // canonical representative, first found in enumeration order
  mpz_class aut;  // |Aut|
  long end_dim = -1;
};

/// Isomorphism classes, Hom/Ext data, Euler forms, automorphism orders and
/// Hall structure constants of a finitary hereditary category of quiver
/// representations over F_q.
///
/// Immutable for readers once a window has been built; query methods fill
/// memo tables whose entries do not depend on call order.
class Provider {
 public:
  Provider(QuiverSpec spec, Caps caps);
  virtual ~Provider() = default;

  const QuiverSpec& quiver() const { return spec_; }
  int q() const { return spec_.q; }
  int vertices() const { return spec_.vertices; }
  const Caps& caps() const { return caps_; }

  /// All classes of total dimension <= bound, window extended on demand.
  /// Order: by total dimension, then dimension vector lexicographic, then
  /// discovery order.
  std::vector<IsoId> classes_up_to(int bound);
  std::vector<IsoId> classes_of_dim(const DimVec& d);
  const IsoClass& cls(IsoId id) const;
  IsoId zero_class();

  /// Certified classification of an explicit representation; extends the
  /// window when needed.
  IsoId identify(const Rep& r);

  long hom_dim(IsoId a, IsoId b);
  mpz_class hom_count(IsoId a, IsoId b);  // q^hom_dim
  const mpz_class& aut_order(IsoId a);
  long end_dim(IsoId a);

  /// Euler form exponent <a, b> = sum_i a_i b_i - sum_{arrows i->j} a_i b_j.
  long euler_exponent(const DimVec& a, const DimVec& b) const;
  /// Symmetrised form exponent (a, b) = <a, b> + <b, a>.
  long sym_exponent(const DimVec& a, const DimVec& b) const;
  /// dim Ext^1(A, B) = hom_dim(A, B) - <dim A, dim B>; throws
  /// std::logic_error when negative.
  long ext1_dim(IsoId a, IsoId b);

  /// g^M_{A,B}: subobjects of M isomorphic to B with quotient isomorphic
  /// to A, by exhaustive arrow-stable subspace enumeration. Keyed by
  /// (quotient class, subobject class).
  const std::map<std::pair<IsoId, IsoId>, mpz_class>& subobject_table(IsoId m);
  mpz_class subobject_count(IsoId m, IsoId quot, IsoId sub);

  /// |Ext^1(A,B)_M| / |Hom(A,B)| = g^M_{A,B} |Aut A| |Aut B| / |Aut M|.
  mpq_class hall_coeff_rat(IsoId a, IsoId b, IsoId m);
  Scalar hall_coeff(IsoId a, IsoId b, IsoId m);
  /// All (M, hall_coeff(A,B,M)) with nonzero coefficient.
  const std::vector<std::pair<IsoId, mpq_class>>& hall_products(IsoId a, IsoId b);

  /// Explicit short-exact-sequence pair count #{(a,b) : 0 -> B -> M -> A -> 0}
  /// by scanning Hom(B,M) x Hom(M,A); the independent oracle for the Hall
  /// coefficient (count / |Aut M|).
  mpz_class ses_pair_count(IsoId a, IsoId b, IsoId m);

  std::string name() const { return name_; }

 protected:
  /// Classify everything with total dimension <= bound into classes_.
  virtual void extend_window(int bound) = 0;
  /// Match r (valid, window already covers its dimension) to a class.
  virtual IsoId identify_impl(const Rep& r) = 0;
  /// |Aut| for a class discovered by extend_window.
  virtual mpz_class aut_order_impl(IsoId a) = 0;
  /// Defaults to solving the intertwiner system between representatives.
  virtual long hom_dim_impl(IsoId a, IsoId b);

  IsoId add_class(Rep rep);

  QuiverSpec spec_;
  Caps caps_;
  std::string name_ = "quiver";
  int window_ = -1;
  std::vector<IsoClass> classes_;
  std::map<DimVec, std::vector<IsoId>> by_dim_;

 private:
  std::map<std::vector<uint8_t>, IsoId> identify_memo_;
  std::map<std::pair<IsoId, IsoId>, long> hom_dim_memo_;
  std::map<IsoId, std::map<std::pair<IsoId, IsoId>, mpz_class>> subobject_memo_;
  std::map<std::pair<IsoId, IsoId>, std::vector<std::pair<IsoId, mpq_class>>> hall_memo_;
};

/// Searches Hom(A, B) for an invertible intertwiner: exhaustive when the
/// space is small, otherwise a seeded deterministic sample followed by an
/// exhaustive sweep under the cap. Returns false when none exists.
bool find_invertible_hom(const QuiverSpec& spec, const Rep& a, const Rep& b, std::uint64_t cap,
                         RepMap* witness = nullptr);

/// Brute-force |GL_n(F_q)|.
mpz_class gl_order(int n, int q);

std::unique_ptr<Provider> make_provider(const QuiverSpec& spec, const Caps& caps);
std::unique_ptr<Provider> make_preset_provider(const std::string& preset, int q, const Caps& caps);

}  // namespace hallforge
