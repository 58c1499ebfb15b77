#include "hallforge/complexes.hpp"

#include <algorithm>
#include <stdexcept>

namespace hallforge {

namespace {

RepMap identity_like(const QuiverSpec& spec, const Rep& x) {
  RepMap f;
  for (int v = 0; v < spec.vertices; ++v) f.push_back(FqMatrix::identity(x.dim[v], spec.q));
  return f;
}

}  // namespace

ZTwoComplex make_K(const QuiverSpec& spec, const Rep& x) {
  return ZTwoComplex{x, x, identity_like(spec, x), zero_map(spec, x, x)};
}

ZTwoComplex make_Kstar(const QuiverSpec& spec, const Rep& x) {
  return ZTwoComplex{x, x, zero_map(spec, x, x), identity_like(spec, x)};
}

ZTwoComplex make_C(const QuiverSpec& spec, const Rep& x) {
  Rep zero = zero_rep(spec);
  return ZTwoComplex{zero, x, zero_map(spec, zero, x), zero_map(spec, x, zero)};
}

ZTwoComplex make_Cstar(const QuiverSpec& spec, const Rep& x) {
  Rep zero = zero_rep(spec);
  return ZTwoComplex{x, zero, zero_map(spec, x, zero), zero_map(spec, zero, x)};
}

ZTwoComplex complex_zero(const QuiverSpec& spec) { return make_C(spec, zero_rep(spec)); }

ZTwoComplex shift(const QuiverSpec& spec, const ZTwoComplex& m) {
  ZTwoComplex r;
  r.m0 = m.m1;
  r.m1 = m.m0;
  for (int v = 0; v < spec.vertices; ++v) {
    r.d0.push_back(-m.d1[v]);
    r.d1.push_back(-m.d0[v]);
  }
  return r;
}

ZTwoComplex complex_direct_sum(const QuiverSpec& spec, const ZTwoComplex& a, const ZTwoComplex& b) {
  ZTwoComplex r;
  r.m0 = direct_sum(spec, a.m0, b.m0);
  r.m1 = direct_sum(spec, a.m1, b.m1);
  for (int v = 0; v < spec.vertices; ++v) {
    FqMatrix d0(r.m1.dim[v], r.m0.dim[v], spec.q);
    for (int i = 0; i < a.m1.dim[v]; ++i)
      for (int j = 0; j < a.m0.dim[v]; ++j) d0.set(i, j, a.d0[v].at(i, j));
    for (int i = 0; i < b.m1.dim[v]; ++i)
      for (int j = 0; j < b.m0.dim[v]; ++j) d0.set(a.m1.dim[v] + i, a.m0.dim[v] + j, b.d0[v].at(i, j));
    FqMatrix d1(r.m0.dim[v], r.m1.dim[v], spec.q);
    for (int i = 0; i < a.m0.dim[v]; ++i)
      for (int j = 0; j < a.m1.dim[v]; ++j) d1.set(i, j, a.d1[v].at(i, j));
    for (int i = 0; i < b.m0.dim[v]; ++i)
      for (int j = 0; j < b.m1.dim[v]; ++j) d1.set(a.m0.dim[v] + i, a.m1.dim[v] + j, b.d1[v].at(i, j));
    r.d0.push_back(std::move(d0));
    r.d1.push_back(std::move(d1));
  }
  return r;
}

bool complex_valid(const QuiverSpec& spec, const ZTwoComplex& m) {
  if (!rep_valid(spec, m.m0) || !rep_valid(spec, m.m1)) return false;
  if (static_cast<int>(m.d0.size()) != spec.vertices || static_cast<int>(m.d1.size()) != spec.vertices) return false;
  for (int v = 0; v < spec.vertices; ++v) {
    if (m.d0[v].rows() != m.m1.dim[v] || m.d0[v].cols() != m.m0.dim[v]) return false;
    if (m.d1[v].rows() != m.m0.dim[v] || m.d1[v].cols() != m.m1.dim[v]) return false;
    if (!(m.d1[v] * m.d0[v]).is_zero()) return false;
    if (!(m.d0[v] * m.d1[v]).is_zero()) return false;
  }
  if (!is_intertwiner(spec, m.m0, m.m1, m.d0)) return false;
  if (!is_intertwiner(spec, m.m1, m.m0, m.d1)) return false;
  return true;
}

ComplexHomology homology(const QuiverSpec& spec, const ZTwoComplex& m) {
  auto subquotient = [&](const Rep& amb, const RepMap& ker_of, const RepMap& im_of) {
    // ker(ker_of) / im(im_of) inside amb
    std::vector<FqMatrix> ker_incl;
    for (int v = 0; v < spec.vertices; ++v) ker_incl.push_back(ker_of[v].kernel_basis());
    SubRep ker = sub_rep(spec, amb, ker_incl);
    // express the image in kernel coordinates
    std::vector<FqMatrix> im_in_ker;
    for (int v = 0; v < spec.vertices; ++v) {
      FqMatrix im = im_of[v].image_basis();
      FqMatrix coords(ker_incl[v].cols(), im.cols(), spec.q);
      for (int j = 0; j < im.cols(); ++j) {
        std::vector<uint8_t> col(static_cast<size_t>(im.rows()));
        for (int i = 0; i < im.rows(); ++i) col[static_cast<size_t>(i)] = im.at(i, j);
        auto sol = solve_linear(ker_incl[v], col);
        if (!sol) throw std::logic_error("homology: image not inside kernel");
        for (int i = 0; i < coords.rows(); ++i) coords.set(i, j, sol->particular[static_cast<size_t>(i)]);
      }
      im_in_ker.push_back(std::move(coords));
    }
    return quotient_rep(spec, ker.obj, im_in_ker).obj;
  };
  ComplexHomology h;
  h.h0 = subquotient(m.m0, m.d0, m.d1);
  h.h1 = subquotient(m.m1, m.d1, m.d0);
  return h;
}

bool complex_is_acyclic(const QuiverSpec& spec, const ZTwoComplex& m) {
  ComplexHomology h = homology(spec, m);
  return dim_is_zero(h.h0.dim) && dim_is_zero(h.h1.dim);
}

std::pair<DimVec, DimVec> image_classes(const ZTwoComplex& m) {
  return {image_dims(m.d0), image_dims(m.d1)};
}

NormalFormData normal_form_data(Provider& p, const ZTwoComplex& m) {
  auto [alpha, beta] = image_classes(m);
  ComplexHomology h = homology(p.quiver(), m);
  NormalFormData nf;
  nf.alpha = alpha;
  nf.beta = beta;
  nf.h0 = p.identify(h.h0);
  nf.h1 = p.identify(h.h1);
  nf.exp = p.euler_exponent(alpha, beta) + p.euler_exponent(alpha, h.h0.dim) + p.euler_exponent(beta, h.h1.dim);
  return nf;
}

std::vector<GradedMap> complex_hom_basis(const QuiverSpec& spec, const ZTwoComplex& m, const ZTwoComplex& n) {
  // unknowns: s0_v (n0_v x m0_v) then s1_v (n1_v x m1_v)
  int V = spec.vertices;
  std::vector<int> off0(V + 1, 0), off1(V + 1, 0);
  for (int v = 0; v < V; ++v) off0[v + 1] = off0[v] + n.m0.dim[v] * m.m0.dim[v];
  int base1 = off0[V];
  for (int v = 0; v < V; ++v) off1[v + 1] = off1[v] + n.m1.dim[v] * m.m1.dim[v];
  int nvars = base1 + off1[V];

  long neq = 0;
  for (auto [s, t] : spec.arrows) neq += n.m0.dim[t] * m.m0.dim[s] + n.m1.dim[t] * m.m1.dim[s];
  for (int v = 0; v < V; ++v) neq += n.m1.dim[v] * m.m0.dim[v] + n.m0.dim[v] * m.m1.dim[v];

  FqMatrix sys(static_cast<int>(neq), nvars, spec.q);
  PrimeField f(spec.q);
  int row = 0;
  auto var0 = [&](int v, int r, int c) { return off0[v] + r * m.m0.dim[v] + c; };
  auto var1 = [&](int v, int r, int c) { return base1 + off1[v] + r * m.m1.dim[v] + c; };
  auto addco = [&](int r, int var, uint8_t coef) {
    if (coef) sys.set(r, var, f.add(sys.at(r, var), coef));
  };
  auto subco = [&](int r, int var, uint8_t coef) {
    if (coef) sys.set(r, var, f.sub(sys.at(r, var), coef));
  };

  for (size_t a = 0; a < spec.arrows.size(); ++a) {
    auto [s, t] = spec.arrows[a];
    for (int r = 0; r < n.m0.dim[t]; ++r)  // s0_t M0_a - N0_a s0_s = 0
      for (int c = 0; c < m.m0.dim[s]; ++c) {
        for (int k = 0; k < m.m0.dim[t]; ++k) addco(row, var0(t, r, k), m.m0.x[a].at(k, c));
        for (int k = 0; k < n.m0.dim[s]; ++k) subco(row, var0(s, k, c), n.m0.x[a].at(r, k));
        ++row;
      }
    for (int r = 0; r < n.m1.dim[t]; ++r)  // s1_t M1_a - N1_a s1_s = 0
      for (int c = 0; c < m.m1.dim[s]; ++c) {
        for (int k = 0; k < m.m1.dim[t]; ++k) addco(row, var1(t, r, k), m.m1.x[a].at(k, c));
        for (int k = 0; k < n.m1.dim[s]; ++k) subco(row, var1(s, k, c), n.m1.x[a].at(r, k));
        ++row;
      }
  }
  for (int v = 0; v < V; ++v) {
    for (int r = 0; r < n.m1.dim[v]; ++r)  // s1_v d0M_v - d0N_v s0_v = 0
      for (int c = 0; c < m.m0.dim[v]; ++c) {
        for (int k = 0; k < m.m1.dim[v]; ++k) addco(row, var1(v, r, k), m.d0[v].at(k, c));
        for (int k = 0; k < n.m0.dim[v]; ++k) subco(row, var0(v, k, c), n.d0[v].at(r, k));
        ++row;
      }
    for (int r = 0; r < n.m0.dim[v]; ++r)  // s0_v d1M_v - d1N_v s1_v = 0
      for (int c = 0; c < m.m1.dim[v]; ++c) {
        for (int k = 0; k < m.m0.dim[v]; ++k) addco(row, var0(v, r, k), m.d1[v].at(k, c));
        for (int k = 0; k < n.m1.dim[v]; ++k) subco(row, var1(v, k, c), n.d1[v].at(r, k));
        ++row;
      }
  }

  FqMatrix kern = nvars == 0 ? FqMatrix(0, 0, spec.q) : sys.kernel_basis();
  std::vector<GradedMap> basis;
  for (int j = 0; j < kern.cols(); ++j) {
    GradedMap g;
    g.s0 = zero_map(spec, m.m0, n.m0);
    g.s1 = zero_map(spec, m.m1, n.m1);
    for (int v = 0; v < V; ++v) {
      for (int r = 0; r < n.m0.dim[v]; ++r)
        for (int c = 0; c < m.m0.dim[v]; ++c) g.s0[v].set(r, c, kern.at(var0(v, r, c), j));
      for (int r = 0; r < n.m1.dim[v]; ++r)
        for (int c = 0; c < m.m1.dim[v]; ++c) g.s1[v].set(r, c, kern.at(var1(v, r, c), j));
    }
    basis.push_back(std::move(g));
  }
  return basis;
}

long complex_hom_dim(const QuiverSpec& spec, const ZTwoComplex& m, const ZTwoComplex& n) {
  return static_cast<long>(complex_hom_basis(spec, m, n).size());
}

bool graded_map_invertible(const GradedMap& f) {
  return map_is_invertible(f.s0) && map_is_invertible(f.s1);
}

namespace {

GradedMap combine_graded(const QuiverSpec& spec, const ZTwoComplex& m, const ZTwoComplex& n,
                         const std::vector<GradedMap>& basis, const std::vector<uint8_t>& coeffs) {
  GradedMap g;
  g.s0 = zero_map(spec, m.m0, n.m0);
  g.s1 = zero_map(spec, m.m1, n.m1);
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!coeffs[i]) continue;
    for (int v = 0; v < spec.vertices; ++v) {
      g.s0[v] = g.s0[v] + basis[i].s0[v].scaled(coeffs[i]);
      g.s1[v] = g.s1[v] + basis[i].s1[v].scaled(coeffs[i]);
    }
  }
  return g;
}

bool find_invertible_graded(const QuiverSpec& spec, const ZTwoComplex& a, const ZTwoComplex& b,
                            std::uint64_t cap) {
  if (a.m0.dim != b.m0.dim || a.m1.dim != b.m1.dim) return false;
  auto basis = complex_hom_basis(spec, a, b);
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
    return graded_map_invertible(combine_graded(spec, a, b, basis, coeffs));
  };
  std::vector<uint8_t> coeffs(d, 0);
  if (small) {
    for (std::uint64_t i = 0; i < total; ++i) {
      if (test(coeffs)) return true;
      for (size_t k = d; k-- > 0;) {
        if (++coeffs[k] < spec.q) break;
        coeffs[k] = 0;
      }
    }
    return false;
  }
  std::uint64_t state = 0xc0ffee123456789ull;
  for (int iter = 0; iter < 4096; ++iter) {
    for (size_t i = 0; i < d; ++i) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      coeffs[i] = static_cast<uint8_t>((state >> 33) % static_cast<std::uint64_t>(spec.q));
    }
    if (test(coeffs)) return true;
  }
  std::uint64_t full = checked_pow(spec.q, d, cap);
  std::fill(coeffs.begin(), coeffs.end(), 0);
  for (std::uint64_t i = 0; i < full; ++i) {
    if (test(coeffs)) return true;
    for (size_t k = d; k-- > 0;) {
      if (++coeffs[k] < spec.q) break;
      coeffs[k] = 0;
    }
  }
  return false;
}

}  // namespace

mpz_class complex_aut_order(const QuiverSpec& spec, const ZTwoComplex& m, std::uint64_t cap) {
  auto basis = complex_hom_basis(spec, m, m);
  std::uint64_t total = checked_pow(spec.q, basis.size(), cap);
  std::vector<uint8_t> coeffs(basis.size(), 0);
  mpz_class count = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (graded_map_invertible(combine_graded(spec, m, m, basis, coeffs))) count += 1;
    for (size_t k = coeffs.size(); k-- > 0;) {
      if (++coeffs[k] < spec.q) break;
      coeffs[k] = 0;
    }
  }
  return count;
}

bool complex_iso(Provider& p, const ZTwoComplex& a, const ZTwoComplex& b) {
  const QuiverSpec& spec = p.quiver();
  if (a.m0.dim != b.m0.dim || a.m1.dim != b.m1.dim) return false;
  if (image_classes(a) != image_classes(b)) return false;
  ComplexHomology ha = homology(spec, a), hb = homology(spec, b);
  if (p.identify(ha.h0) != p.identify(hb.h0) || p.identify(ha.h1) != p.identify(hb.h1)) return false;
  if (p.identify(a.m0) != p.identify(b.m0) || p.identify(a.m1) != p.identify(b.m1)) return false;
  return find_invertible_graded(spec, a, b, p.caps().hom_scan);
}

ComplexExtSpace::ComplexExtSpace(const QuiverSpec& spec, ZTwoComplex m, ZTwoComplex n)
    : spec_(spec), m_(std::move(m)), n_(std::move(n)) {
  const int V = spec_.vertices;
  const auto& M0 = m_.m0;
  const auto& M1 = m_.m1;
  const auto& N0 = n_.m0;
  const auto& N1 = n_.m1;

  cochain_dim_ = 0;
  for (int v = 0; v < V; ++v)
    cochain_dim_ += static_cast<long>(M0.dim[v]) * N0.dim[v] + static_cast<long>(M1.dim[v]) * N1.dim[v];
  hom_dim_ = complex_hom_dim(spec_, m_, n_);

  // variable blocks: c0_a, c1_a per arrow; e0_v, e1_v per vertex
  std::vector<int> offs;
  int nvars = 0;
  auto push_block = [&](int r, int c) {
    offs.push_back(nvars);
    nvars += r * c;
  };
  for (auto [s, t] : spec_.arrows) push_block(N0.dim[t], M0.dim[s]);
  for (auto [s, t] : spec_.arrows) push_block(N1.dim[t], M1.dim[s]);
  for (int v = 0; v < V; ++v) push_block(N1.dim[v], M0.dim[v]);
  for (int v = 0; v < V; ++v) push_block(N0.dim[v], M1.dim[v]);
  var_offsets_ = offs;

  size_t A = spec_.arrows.size();
  auto c0var = [&](size_t a, int r, int c) { return offs[a] + r * M0.dim[spec_.arrows[a].first] + c; };
  auto c1var = [&](size_t a, int r, int c) { return offs[A + a] + r * M1.dim[spec_.arrows[a].first] + c; };
  auto e0var = [&](int v, int r, int c) { return offs[2 * A + static_cast<size_t>(v)] + r * M0.dim[v] + c; };
  auto e1var = [&](int v, int r, int c) { return offs[2 * A + static_cast<size_t>(V + v)] + r * M1.dim[v] + c; };

  long neq = 0;
  for (auto [s, t] : spec_.arrows) neq += N1.dim[t] * M0.dim[s] + N0.dim[t] * M1.dim[s];
  for (int v = 0; v < V; ++v) neq += N1.dim[v] * M1.dim[v] + N0.dim[v] * M0.dim[v];

  FqMatrix sys(static_cast<int>(neq), nvars, spec_.q);
  PrimeField f(spec_.q);
  int row = 0;
  auto addco = [&](int r, int var, uint8_t coef) {
    if (coef) sys.set(r, var, f.add(sys.at(r, var), coef));
  };
  auto subco = [&](int r, int var, uint8_t coef) {
    if (coef) sys.set(r, var, f.sub(sys.at(r, var), coef));
  };

  // per arrow: d0N_t c0_a + e0_t M0_a - N1_a e0_s - c1_a d0M_s = 0
  for (size_t a = 0; a < A; ++a) {
    auto [s, t] = spec_.arrows[a];
    for (int r = 0; r < N1.dim[t]; ++r)
      for (int c = 0; c < M0.dim[s]; ++c) {
        for (int k = 0; k < N0.dim[t]; ++k) addco(row, c0var(a, k, c), n_.d0[t].at(r, k));
        for (int k = 0; k < M0.dim[t]; ++k) addco(row, e0var(t, r, k), M0.x[a].at(k, c));
        for (int k = 0; k < N1.dim[s]; ++k) subco(row, e0var(s, k, c), N1.x[a].at(r, k));
        for (int k = 0; k < M1.dim[s]; ++k) subco(row, c1var(a, r, k), m_.d0[s].at(k, c));
        ++row;
      }
  }
  // per arrow: d1N_t c1_a + e1_t M1_a - N0_a e1_s - c0_a d1M_s = 0
  for (size_t a = 0; a < A; ++a) {
    auto [s, t] = spec_.arrows[a];
    for (int r = 0; r < N0.dim[t]; ++r)
      for (int c = 0; c < M1.dim[s]; ++c) {
        for (int k = 0; k < N1.dim[t]; ++k) addco(row, c1var(a, k, c), n_.d1[t].at(r, k));
        for (int k = 0; k < M1.dim[t]; ++k) addco(row, e1var(t, r, k), M1.x[a].at(k, c));
        for (int k = 0; k < N0.dim[s]; ++k) subco(row, e1var(s, k, c), N0.x[a].at(r, k));
        for (int k = 0; k < M0.dim[s]; ++k) subco(row, c0var(a, r, k), m_.d1[s].at(k, c));
        ++row;
      }
  }
  // per vertex: d0N_v e1_v + e0_v d1M_v = 0
  for (int v = 0; v < V; ++v)
    for (int r = 0; r < N1.dim[v]; ++r)
      for (int c = 0; c < M1.dim[v]; ++c) {
        for (int k = 0; k < N0.dim[v]; ++k) addco(row, e1var(v, k, c), n_.d0[v].at(r, k));
        for (int k = 0; k < M0.dim[v]; ++k) addco(row, e0var(v, r, k), m_.d1[v].at(k, c));
        ++row;
      }
  // per vertex: d1N_v e0_v + e1_v d0M_v = 0
  for (int v = 0; v < V; ++v)
    for (int r = 0; r < N0.dim[v]; ++r)
      for (int c = 0; c < M0.dim[v]; ++c) {
        for (int k = 0; k < N1.dim[v]; ++k) addco(row, e0var(v, k, c), n_.d1[v].at(r, k));
        for (int k = 0; k < M1.dim[v]; ++k) addco(row, e1var(v, r, k), m_.d0[v].at(k, c));
        ++row;
      }

  kernel_ = nvars == 0 ? FqMatrix(0, 0, spec_.q) : sys.kernel_basis();
}

long ComplexExtSpace::ext1_dim() const { return cocycle_dim() - cochain_dim_ + hom_dim_; }

mpz_class ComplexExtSpace::ext1_count(int q) const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(ext1_dim()));
  return r;
}

std::uint64_t ComplexExtSpace::cocycle_count(std::uint64_t cap) const {
  return checked_pow(spec_.q, static_cast<std::uint64_t>(cocycle_dim()), cap);
}

ZTwoComplex ComplexExtSpace::from_coeffs(const std::vector<uint8_t>& vals) const {
  const int V = spec_.vertices;
  size_t A = spec_.arrows.size();
  const auto& M0 = m_.m0;
  const auto& M1 = m_.m1;
  const auto& N0 = n_.m0;
  const auto& N1 = n_.m1;

  ZTwoComplex x;
  x.m0.dim = dim_add(N0.dim, M0.dim);
  x.m1.dim = dim_add(N1.dim, M1.dim);
  auto block_at = [&](size_t blk, int r, int c, int cols) {
    return vals[static_cast<size_t>(var_offsets_[blk]) + static_cast<size_t>(r) * cols + c];
  };
  for (size_t a = 0; a < A; ++a) {
    auto [s, t] = spec_.arrows[a];
    FqMatrix x0(x.m0.dim[t], x.m0.dim[s], spec_.q);
    for (int i = 0; i < N0.dim[t]; ++i)
      for (int j = 0; j < N0.dim[s]; ++j) x0.set(i, j, N0.x[a].at(i, j));
    for (int i = 0; i < M0.dim[t]; ++i)
      for (int j = 0; j < M0.dim[s]; ++j) x0.set(N0.dim[t] + i, N0.dim[s] + j, M0.x[a].at(i, j));
    for (int i = 0; i < N0.dim[t]; ++i)
      for (int j = 0; j < M0.dim[s]; ++j) x0.set(i, N0.dim[s] + j, block_at(a, i, j, M0.dim[s]));
    x.m0.x.push_back(std::move(x0));

    FqMatrix x1(x.m1.dim[t], x.m1.dim[s], spec_.q);
    for (int i = 0; i < N1.dim[t]; ++i)
      for (int j = 0; j < N1.dim[s]; ++j) x1.set(i, j, N1.x[a].at(i, j));
    for (int i = 0; i < M1.dim[t]; ++i)
      for (int j = 0; j < M1.dim[s]; ++j) x1.set(N1.dim[t] + i, N1.dim[s] + j, M1.x[a].at(i, j));
    for (int i = 0; i < N1.dim[t]; ++i)
      for (int j = 0; j < M1.dim[s]; ++j) x1.set(i, N1.dim[s] + j, block_at(A + a, i, j, M1.dim[s]));
    x.m1.x.push_back(std::move(x1));
  }
  for (int v = 0; v < V; ++v) {
    FqMatrix d0(x.m1.dim[v], x.m0.dim[v], spec_.q);
    for (int i = 0; i < N1.dim[v]; ++i)
      for (int j = 0; j < N0.dim[v]; ++j) d0.set(i, j, n_.d0[v].at(i, j));
    for (int i = 0; i < M1.dim[v]; ++i)
      for (int j = 0; j < M0.dim[v]; ++j) d0.set(N1.dim[v] + i, N0.dim[v] + j, m_.d0[v].at(i, j));
    for (int i = 0; i < N1.dim[v]; ++i)
      for (int j = 0; j < M0.dim[v]; ++j)
        d0.set(i, N0.dim[v] + j, block_at(2 * A + static_cast<size_t>(v), i, j, M0.dim[v]));
    x.d0.push_back(std::move(d0));

    FqMatrix d1(x.m0.dim[v], x.m1.dim[v], spec_.q);
    for (int i = 0; i < N0.dim[v]; ++i)
      for (int j = 0; j < N1.dim[v]; ++j) d1.set(i, j, n_.d1[v].at(i, j));
    for (int i = 0; i < M0.dim[v]; ++i)
      for (int j = 0; j < M1.dim[v]; ++j) d1.set(N0.dim[v] + i, N1.dim[v] + j, m_.d1[v].at(i, j));
    for (int i = 0; i < N0.dim[v]; ++i)
      for (int j = 0; j < M1.dim[v]; ++j)
        d1.set(i, N1.dim[v] + j, block_at(2 * A + static_cast<size_t>(V + v), i, j, M1.dim[v]));
    x.d1.push_back(std::move(d1));
  }
  return x;
}

ZTwoComplex ComplexExtSpace::middle(std::uint64_t z) const {
  int d = kernel_.cols();
  std::vector<uint8_t> coeffs(static_cast<size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    coeffs[static_cast<size_t>(i)] = static_cast<uint8_t>(z % static_cast<std::uint64_t>(spec_.q));
    z /= static_cast<std::uint64_t>(spec_.q);
  }
  int nvars = kernel_.rows();
  std::vector<uint8_t> vals(static_cast<size_t>(nvars), 0);
  PrimeField f(spec_.q);
  for (int j = 0; j < d; ++j) {
    if (!coeffs[static_cast<size_t>(j)]) continue;
    for (int i = 0; i < nvars; ++i)
      vals[static_cast<size_t>(i)] =
          f.add(vals[static_cast<size_t>(i)], f.mul(kernel_.at(i, j), coeffs[static_cast<size_t>(j)]));
  }
  return from_coeffs(vals);
}

void for_each_subcomplex(const QuiverSpec& spec, const ZTwoComplex& x, std::uint64_t cap,
                         const std::function<void(const std::vector<FqMatrix>&, const std::vector<FqMatrix>&)>& fn) {
  const int V = spec.vertices;
  std::vector<std::vector<FqMatrix>> spaces;  // first V: degree 0, next V: degree 1
  for (int v = 0; v < V; ++v) spaces.push_back(enumerate_subspaces(x.m0.dim[v], spec.q, cap));
  for (int v = 0; v < V; ++v) spaces.push_back(enumerate_subspaces(x.m1.dim[v], spec.q, cap));
  std::uint64_t total = 1;
  for (const auto& s : spaces) {
    if (total > cap / std::max<std::uint64_t>(1, s.size())) throw ResourceError("subcomplex enumeration cap exceeded");
    total *= s.size();
  }
  std::vector<size_t> idx(spaces.size(), 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    std::vector<FqMatrix> incl0, incl1;
    for (int v = 0; v < V; ++v) incl0.push_back(spaces[static_cast<size_t>(v)][idx[static_cast<size_t>(v)]].transpose());
    for (int v = 0; v < V; ++v)
      incl1.push_back(spaces[static_cast<size_t>(V + v)][idx[static_cast<size_t>(V + v)]].transpose());
    bool ok = subspaces_stable(spec, x.m0, incl0) && subspaces_stable(spec, x.m1, incl1);
    if (ok) {
      for (int v = 0; v < V && ok; ++v) {
        FqMatrix w0 = x.d0[v] * incl0[v];
        if (FqMatrix::hcat(incl1[v], w0).rank() != incl1[v].rank()) ok = false;
        if (ok) {
          FqMatrix w1 = x.d1[v] * incl1[v];
          if (FqMatrix::hcat(incl0[v], w1).rank() != incl0[v].rank()) ok = false;
        }
      }
      if (ok) fn(incl0, incl1);
    }
    for (size_t v = idx.size(); v-- > 0;) {
      if (++idx[v] < spaces[v].size()) break;
      idx[v] = 0;
    }
  }
}

namespace {

// Solves incl * Z = W columnwise.
FqMatrix coords_of(const FqMatrix& incl, const FqMatrix& w) {
  FqMatrix z(incl.cols(), w.cols(), incl.p());
  for (int j = 0; j < w.cols(); ++j) {
    std::vector<uint8_t> col(static_cast<size_t>(w.rows()));
    for (int i = 0; i < w.rows(); ++i) col[static_cast<size_t>(i)] = w.at(i, j);
    auto sol = solve_linear(incl, col);
    if (!sol) throw std::logic_error("sub_complex: differential leaves the subspace");
    for (int i = 0; i < z.rows(); ++i) z.set(i, j, sol->particular[static_cast<size_t>(i)]);
  }
  return z;
}

}  // namespace

ZTwoComplex sub_complex(const QuiverSpec& spec, const ZTwoComplex& x, const std::vector<FqMatrix>& incl0,
                        const std::vector<FqMatrix>& incl1) {
  ZTwoComplex u;
  u.m0 = sub_rep(spec, x.m0, incl0).obj;
  u.m1 = sub_rep(spec, x.m1, incl1).obj;
  for (int v = 0; v < spec.vertices; ++v) {
    u.d0.push_back(coords_of(incl1[v], x.d0[v] * incl0[v]));
    u.d1.push_back(coords_of(incl0[v], x.d1[v] * incl1[v]));
  }
  return u;
}

ZTwoComplex quotient_complex(const QuiverSpec& spec, const ZTwoComplex& x, const std::vector<FqMatrix>& incl0,
                             const std::vector<FqMatrix>& incl1) {
  QuotRep q0 = quotient_rep(spec, x.m0, incl0);
  QuotRep q1 = quotient_rep(spec, x.m1, incl1);
  ZTwoComplex w;
  w.m0 = q0.obj;
  w.m1 = q1.obj;
  for (int v = 0; v < spec.vertices; ++v) {
    FqMatrix lift0 = complement_basis(incl0[v].transpose(), x.m0.dim[v], spec.q).transpose();
    FqMatrix lift1 = complement_basis(incl1[v].transpose(), x.m1.dim[v], spec.q).transpose();
    w.d0.push_back(q1.proj[v] * (x.d0[v] * lift0));
    w.d1.push_back(q0.proj[v] * (x.d1[v] * lift1));
  }
  return w;
}

mpq_class complex_ext1_coeff(Provider& p, const ZTwoComplex& m, const ZTwoComplex& n, const ZTwoComplex& x) {
  const QuiverSpec& spec = p.quiver();
  if (dim_add(m.m0.dim, n.m0.dim) != x.m0.dim || dim_add(m.m1.dim, n.m1.dim) != x.m1.dim) return 0;
  mpz_class g = 0;
  for_each_subcomplex(spec, x, p.caps().subspace_scan, [&](const auto& i0, const auto& i1) {
    ZTwoComplex u = sub_complex(spec, x, i0, i1);
    if (u.m0.dim != n.m0.dim || u.m1.dim != n.m1.dim) return;
    if (!complex_iso(p, u, n)) return;
    ZTwoComplex w = quotient_complex(spec, x, i0, i1);
    if (complex_iso(p, w, m)) g += 1;
  });
  if (g == 0) return 0;
  mpz_class aut_n = complex_aut_order(spec, n, p.caps().hom_scan);
  mpz_class aut_m = complex_aut_order(spec, m, p.caps().hom_scan);
  mpz_class aut_x = complex_aut_order(spec, x, p.caps().hom_scan);
  mpq_class r(g * aut_n * aut_m, aut_x);
  r.canonicalize();
  return r;
}

bool gen_is_acyclic(GenKind k) { return k == GenKind::K || k == GenKind::Kstar; }

ZTwoComplex make_generator(const QuiverSpec& spec, GenKind k, const Rep& x) {
  switch (k) {
    case GenKind::K: return make_K(spec, x);
    case GenKind::Kstar: return make_Kstar(spec, x);
    case GenKind::C: return make_C(spec, x);
    case GenKind::Cstar: return make_Cstar(spec, x);
  }
  throw std::logic_error("make_generator: bad kind");
}

long pairing_exponent(const Provider& p, GenKind lhs, const DimVec& ldim, GenKind rhs, const DimVec& rdim) {
  if (!gen_is_acyclic(lhs) && !gen_is_acyclic(rhs))
    throw std::invalid_argument("pairing_exponent: needs an acyclic side");
  long e = p.euler_exponent(ldim, rdim);
  if (gen_is_acyclic(lhs) && gen_is_acyclic(rhs)) return e;
  if (lhs == GenKind::C && rhs == GenKind::K) return e;
  if (lhs == GenKind::Cstar && rhs == GenKind::Kstar) return e;
  if (lhs == GenKind::K && rhs == GenKind::Cstar) return e;
  if (lhs == GenKind::Kstar && rhs == GenKind::C) return e;
  return 0;
}

bool ses_valid(const QuiverSpec& spec, const ComplexSes& s) {
  if (!complex_valid(spec, s.sub) || !complex_valid(spec, s.mid) || !complex_valid(spec, s.quot)) return false;
  if (dim_add(s.sub.m0.dim, s.quot.m0.dim) != s.mid.m0.dim) return false;
  if (dim_add(s.sub.m1.dim, s.quot.m1.dim) != s.mid.m1.dim) return false;
  auto chain_ok = [&](const ZTwoComplex& a, const ZTwoComplex& b, const GradedMap& f) {
    if (!is_intertwiner(spec, a.m0, b.m0, f.s0) || !is_intertwiner(spec, a.m1, b.m1, f.s1)) return false;
    for (int v = 0; v < spec.vertices; ++v) {
      if (!(f.s1[v] * a.d0[v] == b.d0[v] * f.s0[v])) return false;
      if (!(f.s0[v] * a.d1[v] == b.d1[v] * f.s1[v])) return false;
    }
    return true;
  };
  if (!chain_ok(s.sub, s.mid, s.incl) || !chain_ok(s.mid, s.quot, s.proj)) return false;
  for (int v = 0; v < spec.vertices; ++v) {
    if (s.incl.s0[v].rank() != s.sub.m0.dim[v]) return false;
    if (s.incl.s1[v].rank() != s.sub.m1.dim[v]) return false;
    if (s.proj.s0[v].rank() != s.quot.m0.dim[v]) return false;
    if (s.proj.s1[v].rank() != s.quot.m1.dim[v]) return false;
    if (!(s.proj.s0[v] * s.incl.s0[v]).is_zero()) return false;
    if (!(s.proj.s1[v] * s.incl.s1[v]).is_zero()) return false;
  }
  return true;
}

bool ses_image_additivity_check(const QuiverSpec& spec, const ComplexSes& s) {
  if (!ses_valid(spec, s)) throw std::invalid_argument("ses_image_additivity_check: not a short exact sequence");
  if (!complex_is_acyclic(spec, s.sub) && !complex_is_acyclic(spec, s.quot))
    throw std::invalid_argument("ses_image_additivity_check: needs an acyclic end");
  auto [a0, a1] = image_classes(s.sub);
  auto [b0, b1] = image_classes(s.mid);
  auto [c0, c1] = image_classes(s.quot);
  return b0 == dim_add(a0, c0) && b1 == dim_add(a1, c1);
}

ComplexSes ses_from_cocycle(const QuiverSpec& spec, const ComplexExtSpace& ext, const ZTwoComplex& m,
                            const ZTwoComplex& n, std::uint64_t z) {
  ComplexSes s;
  s.sub = n;
  s.quot = m;
  s.mid = ext.middle(z);
  for (int v = 0; v < spec.vertices; ++v) {
    FqMatrix i0(s.mid.m0.dim[v], n.m0.dim[v], spec.q);
    for (int i = 0; i < n.m0.dim[v]; ++i) i0.set(i, i, 1);
    FqMatrix i1(s.mid.m1.dim[v], n.m1.dim[v], spec.q);
    for (int i = 0; i < n.m1.dim[v]; ++i) i1.set(i, i, 1);
    s.incl.s0.push_back(std::move(i0));
    s.incl.s1.push_back(std::move(i1));
    FqMatrix p0(m.m0.dim[v], s.mid.m0.dim[v], spec.q);
    for (int i = 0; i < m.m0.dim[v]; ++i) p0.set(i, n.m0.dim[v] + i, 1);
    FqMatrix p1(m.m1.dim[v], s.mid.m1.dim[v], spec.q);
    for (int i = 0; i < m.m1.dim[v]; ++i) p1.set(i, n.m1.dim[v] + i, 1);
    s.proj.s0.push_back(std::move(p0));
    s.proj.s1.push_back(std::move(p1));
  }
  return s;
}

std::vector<ZTwoComplex> enumerate_complexes(Provider& p, int comp_dim_bound) {
  const QuiverSpec& spec = p.quiver();
  std::vector<ZTwoComplex> reps;
  auto window = p.classes_up_to(comp_dim_bound);
  for (IsoId c0 : window) {
    for (IsoId c1 : window) {
      Rep r0 = p.cls(c0).rep;
      Rep r1 = p.cls(c1).rep;
      for_each_hom(spec, r0, r1, p.caps().hom_scan, [&](const RepMap& d0) {
        for_each_hom(spec, r1, r0, p.caps().hom_scan, [&](const RepMap& d1) {
          bool ok = true;
          for (int v = 0; v < spec.vertices && ok; ++v)
            if (!(d1[v] * d0[v]).is_zero() || !(d0[v] * d1[v]).is_zero()) ok = false;
          if (ok) {
            ZTwoComplex cand{r0, r1, d0, d1};
            bool fresh = true;
            for (const auto& seen : reps)
              if (complex_iso(p, seen, cand)) {
                fresh = false;
                break;
              }
            if (fresh) reps.push_back(std::move(cand));
          }
          return true;
        });
        return true;
      });
    }
  }
  return reps;
}

}  // namespace hallforge
