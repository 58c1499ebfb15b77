#include "hallforge/brute_provider.hpp"

#include <algorithm>
#include <stdexcept>

namespace hallforge {

BruteProvider::BruteProvider(QuiverSpec spec, Caps caps) : Provider(std::move(spec), caps) {}

std::vector<long> BruteProvider::invariant_key(const Rep& r) const {
  // Iso-invariants: per-arrow ranks plus the rank profile of the summed
  // arrow endomorphism of the total space (conjugation-invariant). These
  // only pre-sort candidates; merges are always certified.
  std::vector<long> key;
  for (const auto& m : r.x) key.push_back(m.rank());
  long n = dim_total(r.dim);
  if (n > 0 && !spec_.arrows.empty()) {
    std::vector<long> off(spec_.vertices + 1, 0);
    for (int v = 0; v < spec_.vertices; ++v) off[v + 1] = off[v] + r.dim[v];
    FqMatrix big(static_cast<int>(n), static_cast<int>(n), spec_.q);
    PrimeField f(spec_.q);
    for (size_t a = 0; a < spec_.arrows.size(); ++a) {
      auto [s, t] = spec_.arrows[a];
      for (int i = 0; i < r.dim[t]; ++i)
        for (int j = 0; j < r.dim[s]; ++j) {
          int ri = static_cast<int>(off[t]) + i, cj = static_cast<int>(off[s]) + j;
          big.set(ri, cj, f.add(big.at(ri, cj), r.x[a].at(i, j)));
        }
    }
    FqMatrix pw = big;
    for (long k = 1; k <= n; ++k) {
      long rk = pw.rank();
      key.push_back(rk);
      if (rk == 0) break;
      pw = pw * big;
    }
  }
  return key;
}

void BruteProvider::classify_dim(const DimVec& d) {
  if (done_dims_.count(d)) return;
  done_dims_[d] = true;

  // shapes of the arrow matrices and total entry count
  std::vector<std::pair<int, int>> shapes;
  std::uint64_t entries = 0;
  for (auto [s, t] : spec_.arrows) {
    shapes.emplace_back(d[t], d[s]);
    entries += static_cast<std::uint64_t>(d[t]) * d[s];
  }
  std::uint64_t total = checked_pow(spec_.q, entries, caps_.hom_scan);

  Rep cur;
  cur.dim = d;
  for (auto [rws, cls_] : shapes) cur.x.emplace_back(rws, cls_, spec_.q);

  std::vector<IsoId> local;  // classes of this dimension vector, discovery order
  std::map<std::vector<long>, std::vector<IsoId>> buckets;

  bool check_nilp = spec_.nilpotent && spec_.has_oriented_cycle();
  for (std::uint64_t step = 0; step < total; ++step) {
    bool ok = true;
    if (check_nilp) {
      // cheap pre-filter: a loop matrix of a nilpotent representation is
      // nilpotent, hence traceless
      for (size_t a = 0; ok && a < spec_.arrows.size(); ++a) {
        if (spec_.arrows[a].first != spec_.arrows[a].second) continue;
        int tr = 0;
        for (int i = 0; i < cur.x[a].rows(); ++i) tr += cur.x[a].at(i, i);
        if (tr % spec_.q != 0) ok = false;
      }
      if (ok) ok = rep_is_nilpotent(spec_, cur);
    }
    if (ok) {
      auto key = invariant_key(cur);
      IsoId match = -1;
      for (IsoId cand : buckets[key]) {
        if (find_invertible_hom(spec_, cur, classes_[static_cast<size_t>(cand)].rep, caps_.hom_scan)) {
          match = cand;
          break;
        }
      }
      if (match >= 0) {
        orbit_sizes_[match] += 1;
      } else {
        IsoId id = add_class(cur);
        keys_[id] = key;
        orbit_sizes_[id] = 1;
        buckets[key].push_back(id);
        local.push_back(id);
      }
    }
    // odometer over all arrow entries, last entry fastest
    bool carried = false;
    for (size_t a = cur.x.size(); a-- > 0 && !carried;) {
      auto& e = cur.x[a].data();
      for (size_t i = e.size(); i-- > 0;) {
        if (++e[i] < spec_.q) {
          carried = true;
          break;
        }
        e[i] = 0;
      }
    }
    if (!carried) break;
  }
}

void BruteProvider::extend_window(int bound) {
  // dimension vectors by total, then lexicographic
  for (long total = std::max(0, window_ + 1); total <= bound; ++total) {
    DimVec d(spec_.vertices, 0);
    // enumerate all vectors with given sum in lexicographic order
    std::function<void(int, long)> rec = [&](int v, long rest) {
      if (v == spec_.vertices - 1) {
        d[v] = static_cast<int>(rest);
        classify_dim(d);
        return;
      }
      for (long k = 0; k <= rest; ++k) {
        d[v] = static_cast<int>(k);
        rec(v + 1, rest - k);
      }
    };
    rec(0, total);
  }
}

IsoId BruteProvider::identify_impl(const Rep& r) {
  auto key = invariant_key(r);
  std::vector<IsoId> same_dim = by_dim_.count(r.dim) ? by_dim_[r.dim] : std::vector<IsoId>{};
  std::vector<IsoId> ordered;
  for (IsoId c : same_dim)
    if (keys_.at(c) == key) ordered.push_back(c);
  for (IsoId c : same_dim)
    if (keys_.at(c) != key) ordered.push_back(c);
  for (IsoId c : ordered)
    if (find_invertible_hom(spec_, r, classes_[static_cast<size_t>(c)].rep, caps_.hom_scan)) return c;
  throw std::logic_error("identify: no class matched an enumerated window");
}

mpz_class BruteProvider::aut_order_impl(IsoId a) {
  const auto& c = cls(a);
  mpz_class group = 1;
  for (int v = 0; v < spec_.vertices; ++v) group *= gl_order(c.dim[v], spec_.q);
  mpz_class orbit = orbit_sizes_.at(a);
  mpz_class aut;
  mpz_divexact(aut.get_mpz_t(), group.get_mpz_t(), orbit.get_mpz_t());
  // cross-check against the endomorphism scan when it is cheap
  std::uint64_t scan_budget = std::min<std::uint64_t>(caps_.hom_scan, 1u << 20);
  bool scannable = true;
  std::uint64_t count = 1;
  for (long i = 0; i < end_dim(a); ++i) {
    count *= static_cast<std::uint64_t>(spec_.q);
    if (count > scan_budget) {
      scannable = false;
      break;
    }
  }
  if (scannable) {
    mpz_class scanned = aut_order_by_scan(spec_, c.rep, scan_budget);
    if (scanned != aut) throw std::logic_error("aut_order: orbit count disagrees with endomorphism scan");
  }
  return aut;
}

mpz_class aut_order_by_scan(const QuiverSpec& spec, const Rep& r, std::uint64_t cap) {
  mpz_class n = 0;
  for_each_hom(spec, r, r, cap, [&](const RepMap& f) {
    if (map_is_invertible(f)) n += 1;
    return true;
  });
  return n;
}

}  // namespace hallforge
