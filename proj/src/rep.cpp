#include "hallforge/rep.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace hallforge {

DimVec dim_add(const DimVec& a, const DimVec& b) {
  DimVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

DimVec dim_sub(const DimVec& a, const DimVec& b) {
  DimVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

DimVec dim_neg(const DimVec& a) {
  DimVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

long dim_total(const DimVec& a) { return std::accumulate(a.begin(), a.end(), 0L); }

bool dim_is_zero(const DimVec& a) {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

std::vector<uint8_t> Rep::bytes() const {
  std::vector<uint8_t> out;
  for (int d : dim) out.push_back(static_cast<uint8_t>(d));
  out.push_back(0xff);
  for (const auto& m : x) {
    out.insert(out.end(), m.data().begin(), m.data().end());
    out.push_back(0xfe);
  }
  return out;
}

Rep zero_rep(const QuiverSpec& spec) {
  Rep r;
  r.dim.assign(spec.vertices, 0);
  for (auto [s, t] : spec.arrows) r.x.emplace_back(0, 0, spec.q);
  return r;
}

Rep simple_rep(const QuiverSpec& spec, int vertex) {
  Rep r;
  r.dim.assign(spec.vertices, 0);
  r.dim[vertex] = 1;
  for (auto [s, t] : spec.arrows) r.x.emplace_back(r.dim[t], r.dim[s], spec.q);
  return r;
}

RepMap zero_map(const QuiverSpec& spec, const Rep& a, const Rep& b) {
  RepMap f;
  for (int v = 0; v < spec.vertices; ++v) f.emplace_back(b.dim[v], a.dim[v], spec.q);
  return f;
}

RepMap identity_map(const QuiverSpec& spec, const Rep& a) {
  RepMap f;
  for (int v = 0; v < spec.vertices; ++v) f.push_back(FqMatrix::identity(a.dim[v], spec.q));
  return f;
}

bool rep_shapes_ok(const QuiverSpec& spec, const Rep& r) {
  if (static_cast<int>(r.dim.size()) != spec.vertices) return false;
  if (r.x.size() != spec.arrows.size()) return false;
  for (size_t a = 0; a < spec.arrows.size(); ++a) {
    auto [s, t] = spec.arrows[a];
    if (r.x[a].rows() != r.dim[t] || r.x[a].cols() != r.dim[s]) return false;
    if (r.x[a].p() != spec.q) return false;
  }
  return true;
}

bool rep_is_nilpotent(const QuiverSpec& spec, const Rep& r) {
  // Iterate the arrow-image filtration; the representation is nilpotent
  // exactly when it reaches zero.
  std::vector<FqMatrix> u;
  for (int v = 0; v < spec.vertices; ++v) u.push_back(FqMatrix::identity(r.dim[v], spec.q));
  long total = dim_total(r.dim);
  for (long step = 0; step <= total; ++step) {
    bool all_zero = true;
    for (int v = 0; v < spec.vertices; ++v)
      if (u[v].cols() > 0) all_zero = false;
    if (all_zero) return true;
    std::vector<FqMatrix> nxt;
    bool shrank = false;
    for (int v = 0; v < spec.vertices; ++v) {
      FqMatrix acc(r.dim[v], 0, spec.q);
      for (size_t a = 0; a < spec.arrows.size(); ++a) {
        auto [s, t] = spec.arrows[a];
        if (t != v || u[s].cols() == 0) continue;
        acc = FqMatrix::hcat(acc, r.x[a] * u[s]);
      }
      FqMatrix im = acc.image_basis();
      if (im.cols() < u[v].cols()) shrank = true;
      nxt.push_back(std::move(im));
    }
    if (!shrank) return false;  // stabilized above zero
    u = std::move(nxt);
  }
  return false;
}

bool rep_valid(const QuiverSpec& spec, const Rep& r) {
  if (!rep_shapes_ok(spec, r)) return false;
  if (spec.nilpotent && !rep_is_nilpotent(spec, r)) return false;
  return true;
}

bool is_intertwiner(const QuiverSpec& spec, const Rep& a, const Rep& b, const RepMap& f) {
  for (size_t k = 0; k < spec.arrows.size(); ++k) {
    auto [s, t] = spec.arrows[k];
    if (!(f[t] * a.x[k] == b.x[k] * f[s])) return false;
  }
  return true;
}

bool map_is_invertible(const RepMap& f) {
  for (const auto& m : f)
    if (!m.invertible()) return false;
  return true;
}

RepMap compose(const RepMap& g, const RepMap& f) {
  RepMap r;
  for (size_t v = 0; v < f.size(); ++v) r.push_back(g[v] * f[v]);
  return r;
}

bool map_is_zero(const RepMap& f) {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

Rep direct_sum(const QuiverSpec& spec, const Rep& a, const Rep& b) {
  Rep r;
  r.dim = dim_add(a.dim, b.dim);
  for (size_t k = 0; k < spec.arrows.size(); ++k) {
    auto [s, t] = spec.arrows[k];
    FqMatrix m(r.dim[t], r.dim[s], spec.q);
    for (int i = 0; i < a.dim[t]; ++i)
      for (int j = 0; j < a.dim[s]; ++j) m.set(i, j, a.x[k].at(i, j));
    for (int i = 0; i < b.dim[t]; ++i)
      for (int j = 0; j < b.dim[s]; ++j) m.set(a.dim[t] + i, a.dim[s] + j, b.x[k].at(i, j));
    r.x.push_back(std::move(m));
  }
  return r;
}

std::vector<RepMap> hom_basis(const QuiverSpec& spec, const Rep& a, const Rep& b) {
  // Unknowns: entries of f_v (shape b.dim[v] x a.dim[v]), stacked by vertex.
  std::vector<int> offset(spec.vertices + 1, 0);
  for (int v = 0; v < spec.vertices; ++v) offset[v + 1] = offset[v] + b.dim[v] * a.dim[v];
  int nvars = offset[spec.vertices];

  int neq = 0;
  for (auto [s, t] : spec.arrows) neq += b.dim[t] * a.dim[s];
  FqMatrix sys(neq, nvars, spec.q);
  PrimeField f(spec.q);
  int row = 0;
  for (size_t k = 0; k < spec.arrows.size(); ++k) {
    auto [s, t] = spec.arrows[k];
    for (int r = 0; r < b.dim[t]; ++r)
      for (int c = 0; c < a.dim[s]; ++c) {
        // (f_t X_a - Y_a f_s)[r, c] = 0
        for (int j = 0; j < a.dim[t]; ++j) {
          int var = offset[t] + r * a.dim[t] + j;
          sys.set(row, var, f.add(sys.at(row, var), a.x[k].at(j, c)));
        }
        for (int m = 0; m < b.dim[s]; ++m) {
          int var = offset[s] + m * a.dim[s] + c;
          sys.set(row, var, f.sub(sys.at(row, var), b.x[k].at(r, m)));
        }
        ++row;
      }
  }

  FqMatrix kern = nvars == 0 ? FqMatrix(0, 0, spec.q) : sys.kernel_basis();
  std::vector<RepMap> basis;
  for (int j = 0; j < kern.cols(); ++j) {
    RepMap fm = zero_map(spec, a, b);
    for (int v = 0; v < spec.vertices; ++v)
      for (int r = 0; r < b.dim[v]; ++r)
        for (int c = 0; c < a.dim[v]; ++c) fm[v].set(r, c, kern.at(offset[v] + r * a.dim[v] + c, j));
    basis.push_back(std::move(fm));
  }
  return basis;
}

RepMap combine(const QuiverSpec& spec, const Rep& a, const Rep& b, const std::vector<RepMap>& basis,
               const std::vector<uint8_t>& coeffs) {
  RepMap f = zero_map(spec, a, b);
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!coeffs[i]) continue;
    for (int v = 0; v < spec.vertices; ++v) f[v] = f[v] + basis[i][v].scaled(coeffs[i]);
  }
  return f;
}

void for_each_hom(const QuiverSpec& spec, const Rep& a, const Rep& b, std::uint64_t cap,
                  const std::function<bool(const RepMap&)>& fn) {
  auto basis = hom_basis(spec, a, b);
  std::uint64_t total = checked_pow(spec.q, basis.size(), cap);
  std::vector<uint8_t> coeffs(basis.size(), 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (!fn(combine(spec, a, b, basis, coeffs))) return;
    for (size_t k = coeffs.size(); k-- > 0;) {
      if (++coeffs[k] < spec.q) break;
      coeffs[k] = 0;
    }
  }
}

namespace {

// Solves A Z = B columnwise; throws on inconsistency.
FqMatrix solve_matrix(const FqMatrix& a, const FqMatrix& b) {
  FqMatrix z(a.cols(), b.cols(), a.p());
  for (int j = 0; j < b.cols(); ++j) {
    std::vector<uint8_t> col(b.rows());
    for (int i = 0; i < b.rows(); ++i) col[i] = b.at(i, j);
    auto sol = solve_linear(a, col);
    if (!sol) throw std::logic_error("solve_matrix: inconsistent system");
    for (int i = 0; i < a.cols(); ++i) z.set(i, j, sol->particular[i]);
  }
  return z;
}

}  // namespace

bool subspaces_stable(const QuiverSpec& spec, const Rep& r, const std::vector<FqMatrix>& incl) {
  for (size_t k = 0; k < spec.arrows.size(); ++k) {
    auto [s, t] = spec.arrows[k];
    FqMatrix w = r.x[k] * incl[s];
    // each column of w must lie in span(incl[t])
    FqMatrix aug = FqMatrix::hcat(incl[t], w);
    if (aug.rank() != incl[t].rank()) return false;
  }
  return true;
}

SubRep sub_rep(const QuiverSpec& spec, const Rep& r, const std::vector<FqMatrix>& incl) {
  SubRep out;
  out.incl = incl;
  out.obj.dim.resize(spec.vertices);
  for (int v = 0; v < spec.vertices; ++v) out.obj.dim[v] = incl[v].cols();
  for (size_t k = 0; k < spec.arrows.size(); ++k) {
    auto [s, t] = spec.arrows[k];
    out.obj.x.push_back(solve_matrix(incl[t], r.x[k] * incl[s]));
  }
  return out;
}

QuotRep quotient_rep(const QuiverSpec& spec, const Rep& r, const std::vector<FqMatrix>& incl) {
  QuotRep out;
  out.obj.dim.resize(spec.vertices);
  std::vector<FqMatrix> lift;  // columns: canonical complement of the subspace
  for (int v = 0; v < spec.vertices; ++v) {
    FqMatrix comp_rows = complement_basis(incl[v].transpose(), r.dim[v], spec.q);
    FqMatrix comp = comp_rows.transpose();
    out.obj.dim[v] = comp.cols();
    FqMatrix full = FqMatrix::hcat(incl[v], comp);
    FqMatrix inv = full.inverse();
    out.proj.push_back(inv.submatrix(incl[v].cols(), 0, comp.cols(), r.dim[v]));
    lift.push_back(std::move(comp));
  }
  for (size_t k = 0; k < spec.arrows.size(); ++k) {
    auto [s, t] = spec.arrows[k];
    out.obj.x.push_back(out.proj[t] * (r.x[k] * lift[s]));
  }
  return out;
}

SubRep kernel_obj(const QuiverSpec& spec, const Rep& a, const Rep&, const RepMap& f) {
  std::vector<FqMatrix> incl;
  for (int v = 0; v < spec.vertices; ++v) incl.push_back(f[v].kernel_basis());
  return sub_rep(spec, a, incl);
}

SubRep image_obj(const QuiverSpec& spec, const Rep&, const Rep& b, const RepMap& f) {
  std::vector<FqMatrix> incl;
  for (int v = 0; v < spec.vertices; ++v) incl.push_back(f[v].image_basis());
  return sub_rep(spec, b, incl);
}

QuotRep cokernel_obj(const QuiverSpec& spec, const Rep&, const Rep& b, const RepMap& f) {
  std::vector<FqMatrix> incl;
  for (int v = 0; v < spec.vertices; ++v) incl.push_back(f[v].image_basis());
  return quotient_rep(spec, b, incl);
}

DimVec image_dims(const RepMap& f) {
  DimVec d(f.size());
  for (size_t v = 0; v < f.size(); ++v) d[v] = f[v].rank();
  return d;
}

}  // namespace hallforge
