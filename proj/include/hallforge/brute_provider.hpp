#pragma once

#include "hallforge/provider.hpp"

namespace hallforge {

/// Classifies nilpotent representations of an arbitrary quiver by exhaustive
/// enumeration of all representations per dimension vector, with certified
/// merges (an explicit invertible intertwiner per merge). Automorphism
/// orders come from orbit counting, cross-checked against endomorphism scans
/// when the scan fits the cap.
class BruteProvider : public Provider {
 public:
  BruteProvider(QuiverSpec spec, Caps caps);

 protected:
  void extend_window(int bound) override;
  IsoId identify_impl(const Rep& r) override;
  mpz_class aut_order_impl(IsoId a) override;

 private:
  std::vector<long> invariant_key(const Rep& r) const;
  void classify_dim(const DimVec& d);

  std::map<IsoId, std::vector<long>> keys_;
  std::map<IsoId, mpz_class> orbit_sizes_;
  std::map<DimVec, bool> done_dims_;
};

/// |Aut| by scanning all q^end_dim endomorphisms for invertibility.
mpz_class aut_order_by_scan(const QuiverSpec& spec, const Rep& r, std::uint64_t cap);

}  // namespace hallforge
