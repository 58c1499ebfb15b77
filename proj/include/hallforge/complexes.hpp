#pragma once

#include "hallforge/provider.hpp"

namespace hallforge {

/// Z/2-graded complex over the representation category: components m0, m1
/// and differentials d0: m0 -> m1, d1: m1 -> m0 with both composites zero.
struct ZTwoComplex {
  Rep m0, m1;
  RepMap d0, d1;  // per-vertex blocks

  bool operator==(const ZTwoComplex& o) const {
    return m0 == o.m0 && m1 == o.m1 && d0 == o.d0 && d1 == o.d1;
  }
};

/// Graded morphism of complexes: s0: M0 -> N0, s1: M1 -> N1.
struct GradedMap {
  RepMap s0, s1;
};

ZTwoComplex make_K(const QuiverSpec& spec, const Rep& x);      // X = X, d0 = 1
ZTwoComplex make_Kstar(const QuiverSpec& spec, const Rep& x);  // X = X, d1 = 1
ZTwoComplex make_C(const QuiverSpec& spec, const Rep& x);      // X in degree 1
ZTwoComplex make_Cstar(const QuiverSpec& spec, const Rep& x);  // X in degree 0
ZTwoComplex complex_zero(const QuiverSpec& spec);

/// Involution: swaps the degrees and negates both differentials.
ZTwoComplex shift(const QuiverSpec& spec, const ZTwoComplex& m);
ZTwoComplex complex_direct_sum(const QuiverSpec& spec, const ZTwoComplex& a, const ZTwoComplex& b);

bool complex_valid(const QuiverSpec& spec, const ZTwoComplex& m);
bool complex_is_acyclic(const QuiverSpec& spec, const ZTwoComplex& m);

/// H0 = ker d0 / im d1 and H1 = ker d1 / im d0 with their induced
/// representation structures (deterministic bases).
struct ComplexHomology {
  Rep h0, h1;
};
ComplexHomology homology(const QuiverSpec& spec, const ZTwoComplex& m);

/// (dim im d0, dim im d1) as Grothendieck classes.
std::pair<DimVec, DimVec> image_classes(const ZTwoComplex& m);

/// Data of the canonical form: [M] = q^exp [K_alpha] d [K*_beta] d
/// [C*_{H0} + C_{H1}] with exp = <alpha,beta> + <alpha,H0> + <beta,H1>.
struct NormalFormData {
  long exp;
  DimVec alpha, beta;
  IsoId h0, h1;
};
NormalFormData normal_form_data(Provider& p, const ZTwoComplex& m);

std::vector<GradedMap> complex_hom_basis(const QuiverSpec& spec, const ZTwoComplex& m, const ZTwoComplex& n);
long complex_hom_dim(const QuiverSpec& spec, const ZTwoComplex& m, const ZTwoComplex& n);
bool graded_map_invertible(const GradedMap& f);
mpz_class complex_aut_order(const QuiverSpec& spec, const ZTwoComplex& m, std::uint64_t cap);
/// Certified isomorphism test (invariants first, then an invertible graded
/// intertwiner search).
bool complex_iso(Provider& p, const ZTwoComplex& a, const ZTwoComplex& b);

/// The space of extensions 0 -> N -> X -> M -> 0 presented by block
/// upper-triangular structures on N + M: a linear cocycle space Z. Every
/// extension class is hit |B| = |C|/|Hom(M,N)| times, where C is the space
/// of all graded per-vertex linear maps M -> N.
class ComplexExtSpace {
 public:
  ComplexExtSpace(const QuiverSpec& spec, ZTwoComplex m, ZTwoComplex n);

  long cochain_dim() const { return cochain_dim_; }  // dim C
  long cocycle_dim() const { return static_cast<long>(kernel_.cols()); }
  /// dim Ext^1(M, N) = cocycle_dim - cochain_dim + hom_dim(M, N).
  long ext1_dim() const;
  mpz_class ext1_count(int q) const;

  /// Middle term of the z-th cocycle (z < q^cocycle_dim), with the
  /// canonical inclusion of N and projection onto M.
  ZTwoComplex middle(std::uint64_t z) const;
  std::uint64_t cocycle_count(std::uint64_t cap) const;

 private:
  ZTwoComplex from_coeffs(const std::vector<uint8_t>& coeffs) const;

  QuiverSpec spec_;
  ZTwoComplex m_, n_;
  long cochain_dim_;
  long hom_dim_;
  FqMatrix kernel_;  // columns span the cocycle space
  std::vector<int> var_offsets_;
};

/// #{short exact sequences 0 -> N -> X -> M -> 0 as explicit map pairs}
/// divided by |Aut X|, via subcomplex counting: g * |Aut N| * |Aut M| /
/// |Aut X| with g the number of subcomplexes of X isomorphic to N with
/// quotient isomorphic to M.
mpq_class complex_ext1_coeff(Provider& p, const ZTwoComplex& m, const ZTwoComplex& n, const ZTwoComplex& x);

/// Stable graded subspace tuples of x, as inclusion column-bases per degree.
void for_each_subcomplex(const QuiverSpec& spec, const ZTwoComplex& x,
                         std::uint64_t cap,
                         const std::function<void(const std::vector<FqMatrix>&, const std::vector<FqMatrix>&)>& fn);
ZTwoComplex sub_complex(const QuiverSpec& spec, const ZTwoComplex& x, const std::vector<FqMatrix>& incl0,
                        const std::vector<FqMatrix>& incl1);
ZTwoComplex quotient_complex(const QuiverSpec& spec, const ZTwoComplex& x, const std::vector<FqMatrix>& incl0,
                             const std::vector<FqMatrix>& incl1);

/// Acyclic-vs-stalk Euler pairing exponents: q^value = |Hom|/|Ext^1| for
/// generator pairs with at least one acyclic side.
enum class GenKind { K, Kstar, C, Cstar };
bool gen_is_acyclic(GenKind k);
ZTwoComplex make_generator(const QuiverSpec& spec, GenKind k, const Rep& x);
long pairing_exponent(const Provider& p, GenKind lhs, const DimVec& ldim, GenKind rhs, const DimVec& rdim);

/// Short exact sequence of complexes with explicit maps.
struct ComplexSes {
  ZTwoComplex sub, mid, quot;
  GradedMap incl, proj;
};
bool ses_valid(const QuiverSpec& spec, const ComplexSes& s);
/// Requires a valid ses whose sub or quotient is acyclic; true iff image
/// classes are additive in both degrees.
bool ses_image_additivity_check(const QuiverSpec& spec, const ComplexSes& s);
/// The canonical ses of an extension-space cocycle.
ComplexSes ses_from_cocycle(const QuiverSpec& spec, const ComplexExtSpace& ext, const ZTwoComplex& m,
                            const ZTwoComplex& n, std::uint64_t z);

/// Representatives of all complexes with component total dimensions at most
/// the bound, up to complex isomorphism, deterministic order.
std::vector<ZTwoComplex> enumerate_complexes(Provider& p, int comp_dim_bound);

}  // namespace hallforge
