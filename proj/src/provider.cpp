#include "hallforge/provider.hpp"

#include <algorithm>
#include <stdexcept>

#include "hallforge/brute_provider.hpp"
#include "hallforge/jordan_provider.hpp"

namespace hallforge {

Provider::Provider(QuiverSpec spec, Caps caps) : spec_(std::move(spec)), caps_(caps) { spec_.validate(); }

std::vector<IsoId> Provider::classes_up_to(int bound) {
  if (bound > window_) {
    extend_window(bound);
    window_ = bound;
  }
  std::vector<IsoId> out;
  for (const auto& c : classes_)
    if (dim_total(c.dim) <= bound) out.push_back(c.id);
  return out;
}

std::vector<IsoId> Provider::classes_of_dim(const DimVec& d) {
  classes_up_to(static_cast<int>(dim_total(d)));
  auto it = by_dim_.find(d);
  if (it == by_dim_.end()) return {};
  return it->second;
}

const IsoClass& Provider::cls(IsoId id) const {
  if (id < 0 || id >= static_cast<int>(classes_.size())) throw std::out_of_range("Provider::cls: bad id");
  return classes_[static_cast<size_t>(id)];
}

IsoId Provider::zero_class() {
  classes_up_to(0);
  return by_dim_.at(DimVec(spec_.vertices, 0)).front();
}

IsoId Provider::add_class(Rep rep) {
  IsoClass c;
  c.id = static_cast<IsoId>(classes_.size());
  c.dim = rep.dim;
  c.rep = std::move(rep);
  classes_.push_back(std::move(c));
  by_dim_[classes_.back().dim].push_back(classes_.back().id);
  return classes_.back().id;
}

IsoId Provider::identify(const Rep& r) {
  if (!rep_valid(spec_, r)) throw std::invalid_argument("identify: invalid representation");
  auto key = r.bytes();
  if (auto it = identify_memo_.find(key); it != identify_memo_.end()) return it->second;
  classes_up_to(static_cast<int>(dim_total(r.dim)));
  IsoId id = identify_impl(r);
  identify_memo_.emplace(std::move(key), id);
  return id;
}

long Provider::hom_dim(IsoId a, IsoId b) {
  auto key = std::make_pair(a, b);
  if (auto it = hom_dim_memo_.find(key); it != hom_dim_memo_.end()) return it->second;
  long d = hom_dim_impl(a, b);
  hom_dim_memo_.emplace(key, d);
  return d;
}

long Provider::hom_dim_impl(IsoId a, IsoId b) {
  return static_cast<long>(hom_basis(spec_, cls(a).rep, cls(b).rep).size());
}

mpz_class Provider::hom_count(IsoId a, IsoId b) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(spec_.q), static_cast<unsigned long>(hom_dim(a, b)));
  return r;
}

const mpz_class& Provider::aut_order(IsoId a) {
  auto& c = classes_[static_cast<size_t>(a)];
  if (c.aut == 0) c.aut = aut_order_impl(a);
  return c.aut;
}

long Provider::end_dim(IsoId a) {
  auto& c = classes_[static_cast<size_t>(a)];
  if (c.end_dim < 0) c.end_dim = hom_dim(a, a);
  return c.end_dim;
}

long Provider::euler_exponent(const DimVec& a, const DimVec& b) const {
  long e = 0;
  for (int v = 0; v < spec_.vertices; ++v) e += static_cast<long>(a[v]) * b[v];
  for (auto [s, t] : spec_.arrows) e -= static_cast<long>(a[s]) * b[t];
  return e;
}

long Provider::sym_exponent(const DimVec& a, const DimVec& b) const {
  return euler_exponent(a, b) + euler_exponent(b, a);
}

long Provider::ext1_dim(IsoId a, IsoId b) {
  long d = hom_dim(a, b) - euler_exponent(cls(a).dim, cls(b).dim);
  if (d < 0) throw std::logic_error("ext1_dim negative: provider inconsistency");
  return d;
}

const std::map<std::pair<IsoId, IsoId>, mpz_class>& Provider::subobject_table(IsoId m) {
  if (auto it = subobject_memo_.find(m); it != subobject_memo_.end()) return it->second;
  const Rep& rep = cls(m).rep;
  // All subspace tuples, filtered by arrow stability.
  std::vector<std::vector<FqMatrix>> per_vertex;
  for (int v = 0; v < spec_.vertices; ++v)
    per_vertex.push_back(enumerate_subspaces(rep.dim[v], spec_.q, caps_.subspace_scan));
  std::uint64_t tuple_count = 1;
  for (const auto& s : per_vertex) {
    if (tuple_count > caps_.subspace_scan / std::max<std::uint64_t>(1, s.size()))
      throw ResourceError("subobject enumeration cap exceeded");
    tuple_count *= s.size();
  }

  std::map<std::pair<IsoId, IsoId>, mpz_class> table;
  std::vector<size_t> idx(static_cast<size_t>(spec_.vertices), 0);
  for (std::uint64_t step = 0; step < tuple_count; ++step) {
    std::vector<FqMatrix> incl;
    for (int v = 0; v < spec_.vertices; ++v) incl.push_back(per_vertex[v][idx[v]].transpose());
    if (subspaces_stable(spec_, rep, incl)) {
      SubRep sub = sub_rep(spec_, rep, incl);
      QuotRep quot = quotient_rep(spec_, rep, incl);
      IsoId sub_id = identify(sub.obj);
      IsoId quot_id = identify(quot.obj);
      table[{quot_id, sub_id}] += 1;
    }
    for (size_t v = idx.size(); v-- > 0;) {
      if (++idx[v] < per_vertex[v].size()) break;
      idx[v] = 0;
    }
  }
  return subobject_memo_.emplace(m, std::move(table)).first->second;
}

mpz_class Provider::subobject_count(IsoId m, IsoId quot, IsoId sub) {
  const auto& t = subobject_table(m);
  auto it = t.find({quot, sub});
  return it == t.end() ? mpz_class(0) : it->second;
}

mpq_class Provider::hall_coeff_rat(IsoId a, IsoId b, IsoId m) {
  if (cls(m).dim != dim_add(cls(a).dim, cls(b).dim)) return mpq_class(0);
  mpz_class g = subobject_count(m, a, b);
  if (g == 0) return mpq_class(0);
  mpq_class r(g * aut_order(a) * aut_order(b), aut_order(m));
  r.canonicalize();
  return r;
}

Scalar Provider::hall_coeff(IsoId a, IsoId b, IsoId m) { return Scalar(hall_coeff_rat(a, b, m)); }

const std::vector<std::pair<IsoId, mpq_class>>& Provider::hall_products(IsoId a, IsoId b) {
  auto key = std::make_pair(a, b);
  if (auto it = hall_memo_.find(key); it != hall_memo_.end()) return it->second;
  DimVec target = dim_add(cls(a).dim, cls(b).dim);
  std::vector<std::pair<IsoId, mpq_class>> line;
  for (IsoId m : classes_of_dim(target)) {
    mpq_class c = hall_coeff_rat(a, b, m);
    if (c != 0) line.emplace_back(m, c);
  }
  return hall_memo_.emplace(key, std::move(line)).first->second;
}

mpz_class Provider::ses_pair_count(IsoId a, IsoId b, IsoId m) {
  if (cls(m).dim != dim_add(cls(a).dim, cls(b).dim)) return 0;
  const Rep& ra = cls(a).rep;
  const Rep& rb = cls(b).rep;
  const Rep& rm = cls(m).rep;
  mpz_class count = 0;
  long da = dim_total(ra.dim), db = dim_total(rb.dim);
  for_each_hom(spec_, rb, rm, caps_.hom_scan, [&](const RepMap& inc) {
    DimVec rk = image_dims(inc);
    if (dim_total(rk) != db) return true;  // not injective
    for_each_hom(spec_, rm, ra, caps_.hom_scan, [&](const RepMap& prj) {
      if (dim_total(image_dims(prj)) != da) return true;  // not surjective
      if (!map_is_zero(compose(prj, inc))) return true;
      count += 1;  // injective + surjective + composite zero + dims add = exact
      return true;
    });
    return true;
  });
  return count;
}

bool find_invertible_hom(const QuiverSpec& spec, const Rep& a, const Rep& b, std::uint64_t cap,
                         RepMap* witness) {
  if (a.dim != b.dim) return false;
  auto basis = hom_basis(spec, a, b);
  size_t d = basis.size();
  std::uint64_t total = 1;
  bool small = true;
  for (size_t i = 0; i < d; ++i) {
    total *= static_cast<std::uint64_t>(spec.q);
    if (total > 4096) {
      small = false;
      break;
    }
  }
  auto test = [&](const std::vector<uint8_t>& coeffs) {
    RepMap f = combine(spec, a, b, basis, coeffs);
    if (!map_is_invertible(f)) return false;
    if (witness) *witness = std::move(f);
    return true;
  };
  if (small) {
    std::vector<uint8_t> coeffs(d, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
      if (test(coeffs)) return true;
      for (size_t k = d; k-- > 0;) {
        if (++coeffs[k] < spec.q) break;
        coeffs[k] = 0;
      }
    }
    return false;
  }
  // Seeded deterministic sample; the fraction of invertible elements of a
  // hom space between isomorphic objects is bounded below, so a hit comes
  // fast when one exists at all.
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (int iter = 0; iter < 4096; ++iter) {
    std::vector<uint8_t> coeffs(d);
    for (size_t i = 0; i < d; ++i) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      coeffs[i] = static_cast<uint8_t>((state >> 33) % static_cast<std::uint64_t>(spec.q));
    }
    if (test(coeffs)) return true;
  }
  // Exhaustive sweep as the decision procedure of record.
  bool found = false;
  for_each_hom(spec, a, b, cap, [&](const RepMap& f) {
    if (map_is_invertible(f)) {
      if (witness) *witness = f;
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

mpz_class gl_order(int n, int q) {
  mpz_class qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
  mpz_class r = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    r *= (qn - qi);
    qi *= q;
  }
  return r;
}

std::unique_ptr<Provider> make_provider(const QuiverSpec& spec, const Caps& caps) {
  return std::make_unique<BruteProvider>(spec, caps);
}

std::unique_ptr<Provider> make_preset_provider(const std::string& preset, int q, const Caps& caps) {
  if (preset == "jordan") return std::make_unique<JordanProvider>(q, caps);
  return make_provider(preset_quiver(preset, q), caps);
}

}  // namespace hallforge
