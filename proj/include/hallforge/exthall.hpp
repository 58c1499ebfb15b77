#pragma once

#include "hallforge/mrh.hpp"

namespace hallforge {

/// Basis monomial [A] * k_alpha of the twisted extended Hall algebra.
struct HeKey {
  IsoId a = -1;
  DimVec alpha;
  bool operator==(const HeKey& o) const = default;
  bool operator<(const HeKey& o) const {
    if (a != o.a) return a < o.a;
    return alpha < o.alpha;
  }
};

/// Finite-support element of the twisted extended Hall algebra.
class HeElt {
 public:
  HeElt() = default;
  static HeElt monomial(const HeKey& k, const Scalar& c);
  void add_term(const HeKey& k, const Scalar& c);
  HeElt operator+(const HeElt& o) const;
  HeElt operator-(const HeElt& o) const;
  HeElt scaled(const Scalar& c) const;
  bool operator==(const HeElt& o) const { return terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<HeKey, Scalar>& terms() const { return terms_; }

 private:
  std::map<HeKey, Scalar> terms_;
};

/// Element of the tensor square, finite support.
struct He2Key {
  HeKey left, right;
  bool operator==(const He2Key& o) const = default;
  bool operator<(const He2Key& o) const {
    if (!(left == o.left)) return left < o.left;
    return right < o.right;
  }
};
using He2Elt = std::map<He2Key, Scalar>;

/// Twisted extended Hall algebra of the provider category, with Green's
/// coproduct, the Hopf pairing, the embeddings into the complex-side engine,
/// and the cross-relation verifier.
class ExtHallAlgebra {
 public:
  ExtHallAlgebra(Provider& p, MrhEngine& eng) : p_(p), eng_(eng) {}

  Provider& provider() { return p_; }
  Scalar v_pow(long k) const { return Scalar::v_pow(k, p_.q()); }

  HeElt unit();
  HeElt hall(IsoId a);              // [A]
  HeElt k_torus(const DimVec& al);  // k_alpha
  HeElt monomial(IsoId a, const DimVec& al);

  /// ([A]k_a)([B]k_b) = v^{(a,B)} sum_M v^{<A,B>} hall(A,B,M) [M] k_{a+b}.
  HeElt he_mul(const HeElt& x, const HeElt& y);

  /// Green's coproduct; finite because the category has finite length.
  He2Elt coproduct(const HeElt& x);

  Scalar counit(const HeElt& x);

  /// phi([M]k_a, [N]k_b) = v^{(a,b)} delta_{M,N} |Aut M|.
  Scalar pairing(const HeElt& x, const HeElt& y);
  Scalar pairing2(const He2Elt& x, const He2Elt& y);

  MRHElt embed_plus(const HeElt& x);   // [A] -> [C_A], k_a -> K_a
  MRHElt embed_minus(const HeElt& x);  // [A] -> [C*_A], k_a -> K*_a

  /// Cross relation between two basis monomials:
  /// sum phi(a2, b2) I+(a1) I-(b1) = sum phi(a1, b1) I-(b2) I+(a2).
  struct D3Report {
    bool equal = false;
    MRHElt lhs, rhs;
  };
  D3Report verify_d3(const HeKey& a, const HeKey& b);

  /// phi(x*y, z) = (x (x) y, Delta z).
  bool verify_hopf_pairing(const HeElt& x, const HeElt& y, const HeElt& z);

  /// #{(u,v) in Hom(A,B) x Hom(B,A) : uv = vu = 0, H0 = X, H1 = Y,
  ///   dim im v = delta} for the complex (A <-> B).
  mpz_class count_U(IsoId a_comp, IsoId b_comp, IsoId x, IsoId y, const DimVec& delta);
  /// Same with the constraint dim im u = delta_tilde.
  mpz_class count_V(IsoId a_comp, IsoId b_comp, IsoId x, IsoId y, const DimVec& delta_tilde);

  /// Requires delta + delta_tilde = dim A - dim X; checks count_U == count_V
  /// and the orbit-sum expansion of the count.
  bool verify_uv_identity(IsoId a_comp, IsoId b_comp, IsoId x, IsoId y, const DimVec& delta,
                          const DimVec& delta_tilde);

  /// The double-sum expansion of count_U over Hall coefficients and orbit
  /// counts; must agree with the direct enumeration.
  mpq_class count_U_expansion(IsoId a_comp, IsoId b_comp, IsoId x, IsoId y, const DimVec& delta);

 private:
  mpz_class count_differentials(IsoId a_comp, IsoId b_comp, IsoId x, IsoId y, const DimVec& delta,
                                bool constrain_v);

  Provider& p_;
  MrhEngine& eng_;
};

std::string he_to_json_text(const HeElt& x);

}  // namespace hallforge
