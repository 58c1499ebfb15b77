#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hallforge/fq.hpp"
#include "hallforge/quiver.hpp"

namespace hallforge {

/// Dimension vector in N^vertices, doubling as a class in the Grothendieck
/// group Z^vertices (where entries may be negative).
using DimVec = std::vector<int>;

DimVec dim_add(const DimVec& a, const DimVec& b);
DimVec dim_sub(const DimVec& a, const DimVec& b);
DimVec dim_neg(const DimVec& a);
long dim_total(const DimVec& a);
bool dim_is_zero(const DimVec& a);

/// Quiver representation: per-arrow matrices x[a] of shape
/// dim[target(a)] x dim[source(a)], acting on column vectors.
struct Rep {
  DimVec dim;
  std::vector<FqMatrix> x;

  bool operator==(const Rep& o) const { return dim == o.dim && x == o.x; }
  std::vector<uint8_t> bytes() const;
};

/// Per-vertex matrices f[v]: A_v -> B_v of a morphism A -> B.
using RepMap = std::vector<FqMatrix>;

Rep zero_rep(const QuiverSpec& spec);
Rep simple_rep(const QuiverSpec& spec, int vertex);
RepMap zero_map(const QuiverSpec& spec, const Rep& a, const Rep& b);
RepMap identity_map(const QuiverSpec& spec, const Rep& a);

bool rep_shapes_ok(const QuiverSpec& spec, const Rep& r);
/// Shape validity plus nilpotency when the category requires it.
bool rep_valid(const QuiverSpec& spec, const Rep& r);
bool rep_is_nilpotent(const QuiverSpec& spec, const Rep& r);

bool is_intertwiner(const QuiverSpec& spec, const Rep& a, const Rep& b, const RepMap& f);
bool map_is_invertible(const RepMap& f);
RepMap compose(const RepMap& g, const RepMap& f);  // g after f
bool map_is_zero(const RepMap& f);

Rep direct_sum(const QuiverSpec& spec, const Rep& a, const Rep& b);

/// Basis of the intertwiner space Hom(A, B), solving
/// f_{t(a)} X_a = Y_a f_{s(a)} for all arrows a.
std::vector<RepMap> hom_basis(const QuiverSpec& spec, const Rep& a, const Rep& b);

/// Linear combination sum_i coeffs[i] * basis[i].
RepMap combine(const QuiverSpec& spec, const Rep& a, const Rep& b, const std::vector<RepMap>& basis,
               const std::vector<uint8_t>& coeffs);

/// Calls fn for every element of Hom(A, B) in deterministic coefficient
/// order (all-zero map first). Throws ResourceError past the cap.
void for_each_hom(const QuiverSpec& spec, const Rep& a, const Rep& b, std::uint64_t cap,
                  const std::function<bool(const RepMap&)>& fn);

/// Subrepresentation on a tuple of subspaces (given as n_v x k_v inclusion
/// matrices with independent columns); requires arrow stability.
struct SubRep {
  Rep obj;
  RepMap incl;  // inclusion into the ambient representation
};
struct QuotRep {
  Rep obj;
  RepMap proj;  // projection from the ambient representation
};

bool subspaces_stable(const QuiverSpec& spec, const Rep& r, const std::vector<FqMatrix>& incl);
SubRep sub_rep(const QuiverSpec& spec, const Rep& r, const std::vector<FqMatrix>& incl);
QuotRep quotient_rep(const QuiverSpec& spec, const Rep& r, const std::vector<FqMatrix>& incl);

SubRep kernel_obj(const QuiverSpec& spec, const Rep& a, const Rep& b, const RepMap& f);
SubRep image_obj(const QuiverSpec& spec, const Rep& a, const Rep& b, const RepMap& f);
QuotRep cokernel_obj(const QuiverSpec& spec, const Rep& a, const Rep& b, const RepMap& f);

DimVec image_dims(const RepMap& f);

}  // namespace hallforge
