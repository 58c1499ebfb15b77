#pragma once

#include <map>
#include <mutex>

#include "hallforge/complexes.hpp"
#include "hallforge/provider.hpp"

namespace hallforge {

/// Torus exponents: K_alpha * K*_beta with alpha, beta in Z^vertices.
struct TorusExp {
  DimVec alpha, beta;
  bool operator==(const TorusExp& o) const = default;
};

/// Normal-order basis monomial [C_A] * [C*_B] * K_alpha * K*_beta.
struct NFKey {
  IsoId a = -1, b = -1;
  DimVec alpha, beta;

  bool operator==(const NFKey& o) const = default;
  bool operator<(const NFKey& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    if (alpha != o.alpha) return alpha < o.alpha;
    return beta < o.beta;
  }
};

/// Finite-support linear combination of normal-order monomials with exact
/// coefficients; zero coefficients are erased.
class MRHElt {
 public:
  MRHElt() = default;

  static MRHElt monomial(const NFKey& k, const Scalar& c);

  void add_term(const NFKey& k, const Scalar& c);
  MRHElt operator+(const MRHElt& o) const;
  MRHElt operator-(const MRHElt& o) const;
  MRHElt scaled(const Scalar& c) const;
  bool operator==(const MRHElt& o) const { return terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<NFKey, Scalar>& terms() const { return terms_; }

 private:
  std::map<NFKey, Scalar> terms_;
};

/// Basis monomial of the reduced algebra: K*_beta folded into K_{-beta}.
struct RedKey {
  IsoId a = -1, b = -1;
  DimVec gamma;
  bool operator==(const RedKey& o) const = default;
  bool operator<(const RedKey& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return gamma < o.gamma;
  }
};
using ReducedElt = std::map<RedKey, Scalar>;

/// The twisted modified Hall algebra engine: rewriting multiplication on the
/// canonical basis, reduction of complexes into the basis, and the
/// brute-force oracle product. Pure functions of an immutable provider;
/// memo tables are deterministic (all writers compute identical values).
class MrhEngine {
 public:
  explicit MrhEngine(Provider& p) : p_(p) {}

  Provider& provider() { return p_; }
  int q() const { return p_.q(); }

  Scalar v_pow(long k) const { return Scalar::v_pow(k, p_.q()); }

  MRHElt unit();
  MRHElt iplus(IsoId a);
  MRHElt iminus(IsoId b);
  MRHElt torus(const TorusExp& t);
  MRHElt monomial(IsoId a, IsoId b, const TorusExp& t);

  MRHElt mul(const MRHElt& x, const MRHElt& y);

  /// Normal-basis expansion of the direct-sum class [C_X + C*_Y]; leading
  /// term (X, Y, 0, 0) with coefficient exactly 1, all others of strictly
  /// smaller total stalk dimension.
  const MRHElt& expand_pair(IsoId x, IsoId y);

  /// Image of a complex class in the twisted algebra basis.
  MRHElt reduce_complex(const ZTwoComplex& m);

  /// Twisted Hall product of two complex classes computed by exhaustive
  /// extension enumeration, each middle reduced independently.
  MRHElt oracle_mul(const ZTwoComplex& m, const ZTwoComplex& n);

  ReducedElt to_reduced(const MRHElt& x);

 private:
  MRHElt monomial_mul(const NFKey& k1, const NFKey& k2);
  const MRHElt& cross_core(IsoId a1, IsoId b1, IsoId a2, IsoId b2);
  /// [C_A]*[C_B] = sum_M v^{<A,B>} hall(A,B,M) [C_M]; same table serves the
  /// degree-0 copy.
  const std::vector<std::pair<IsoId, Scalar>>& hall_line(IsoId a, IsoId b);

  Provider& p_;
  std::mutex mu_;
  std::map<std::pair<IsoId, IsoId>, MRHElt> pair_memo_;
  std::map<std::array<IsoId, 4>, MRHElt> core_memo_;
  std::map<std::pair<IsoId, IsoId>, std::vector<std::pair<IsoId, Scalar>>> hall_memo_;
};

/// Canonical JSON line for reports and golden files.
std::string mrh_to_json_text(const Provider& p, const MRHElt& x);

}  // namespace hallforge
