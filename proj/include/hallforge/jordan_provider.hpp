#pragma once

#include "hallforge/provider.hpp"

namespace hallforge {

/// Partition of a non-negative integer, parts weakly decreasing.
using Partition = std::vector<int>;

std::vector<Partition> partitions_of(int n);
Partition conjugate_partition(const Partition& p);

/// Nilpotent Jordan matrix for a partition: blocks in part order, ones on
/// the superdiagonal.
FqMatrix jordan_canonical_matrix(const Partition& p, int q);

/// Jordan type of a nilpotent matrix together with an explicit invertible
/// base change T with T^-1 X T in canonical form (the certificate).
struct JordanForm {
  Partition type;
  FqMatrix basis;  // columns are the Jordan chain vectors
};
JordanForm jordan_decompose(const FqMatrix& x);

/// dim Hom between Jordan modules: sum_{i,j} min(lambda_i, mu_j).
long jordan_hom_dim(const Partition& a, const Partition& b);

/// |Aut| of the Jordan module of type lambda:
/// q^{sum (lambda'_j)^2} * prod_i phi_{m_i}(1/q).
mpz_class jordan_aut_order(const Partition& p, int q);

/// The nilpotent single-loop category with partitions as classes. Hom
/// dimensions and automorphism orders come from the partition formulas;
/// subobject counting runs on the canonical representatives.
class JordanProvider : public Provider {
 public:
  JordanProvider(int q, Caps caps);

  Partition partition_of(IsoId id) const { return partitions_.at(id); }
  IsoId class_of_partition(const Partition& p);

 protected:
  void extend_window(int bound) override;
  IsoId identify_impl(const Rep& r) override;
  mpz_class aut_order_impl(IsoId a) override;
  long hom_dim_impl(IsoId a, IsoId b) override;

 private:
  std::map<IsoId, Partition> partitions_;
  std::map<Partition, IsoId> by_partition_;
};

}  // namespace hallforge
