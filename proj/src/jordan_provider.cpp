#include "hallforge/jordan_provider.hpp"

#include <algorithm>
#include <stdexcept>

namespace hallforge {

std::vector<Partition> partitions_of(int n) {
  // descending lexicographic: (n) first, (1,...,1) last
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition conjugate_partition(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 1; j <= p[0]; ++j) {
    int cnt = 0;
    for (int part : p)
      if (part >= j) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

FqMatrix jordan_canonical_matrix(const Partition& p, int q) {
  int n = 0;
  for (int part : p) n += part;
  FqMatrix m(n, n, q);
  int off = 0;
  for (int part : p) {
    for (int i = 1; i < part; ++i) m.set(off + i - 1, off + i, 1);
    off += part;
  }
  return m;
}

JordanForm jordan_decompose(const FqMatrix& x) {
  int n = x.rows();
  int q = x.p();
  if (x.cols() != n) throw std::domain_error("jordan_decompose: non-square");

  // kernels of powers
  std::vector<FqMatrix> pw{FqMatrix::identity(n, q)};
  int m = 0;
  while (pw.back().rank() > 0) {
    pw.push_back(pw.back() * x);
    ++m;
    if (m > n) throw std::domain_error("jordan_decompose: matrix is not nilpotent");
  }
  // pw[k] = x^k, x^m = 0
  auto kernel_of_power = [&](int k) { return pw[static_cast<size_t>(k)].kernel_basis(); };

  struct Chain {
    int level;
    std::vector<std::vector<uint8_t>> vecs;  // top, X top, X^2 top, ...
  };
  std::vector<Chain> chains;

  // span tracker as a growing row matrix
  FqMatrix span(0, n, q);
  auto in_span = [&](const std::vector<uint8_t>& v) {
    FqMatrix row(1, n, q);
    for (int j = 0; j < n; ++j) row.set(0, j, v[j]);
    FqMatrix aug = FqMatrix::vcat(span, row);
    return aug.rank() == span.rank();
  };
  auto add_to_span = [&](const std::vector<uint8_t>& v) {
    FqMatrix row(1, n, q);
    for (int j = 0; j < n; ++j) row.set(0, j, v[j]);
    span = FqMatrix::vcat(span, row);
  };
  auto apply = [&](const std::vector<uint8_t>& v) {
    std::vector<uint8_t> w(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      int acc = 0;
      for (int j = 0; j < n; ++j) acc += x.at(i, j) * v[j];
      w[static_cast<size_t>(i)] = static_cast<uint8_t>(acc % q);
    }
    return w;
  };

  for (int k = m; k >= 1; --k) {
    // ker x^{k-1} plus the X^{level-k} images of the tops chosen so far;
    // extending this to ker x^k yields the tops of the level-k chains
    span = FqMatrix(0, n, q);
    FqMatrix low = kernel_of_power(k - 1);
    for (int j = 0; j < low.cols(); ++j) {
      std::vector<uint8_t> v(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = low.at(i, j);
      if (!in_span(v)) add_to_span(v);
    }
    for (const auto& ch : chains) {
      int depth = ch.level - k;
      if (depth >= 1 && !in_span(ch.vecs[static_cast<size_t>(depth)]))
        add_to_span(ch.vecs[static_cast<size_t>(depth)]);
    }
    FqMatrix high = kernel_of_power(k);
    for (int j = 0; j < high.cols(); ++j) {
      std::vector<uint8_t> v(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = high.at(i, j);
      if (in_span(v)) continue;
      add_to_span(v);
      Chain ch;
      ch.level = k;
      ch.vecs.push_back(v);
      for (int s = 1; s < k; ++s) ch.vecs.push_back(apply(ch.vecs.back()));
      chains.push_back(std::move(ch));
    }
  }

  std::stable_sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) { return a.level > b.level; });
  JordanForm jf;
  FqMatrix basis(n, n, q);
  int col = 0;
  for (const auto& ch : chains) {
    jf.type.push_back(ch.level);
    for (int s = ch.level - 1; s >= 0; --s) {
      for (int i = 0; i < n; ++i) basis.set(i, col, ch.vecs[static_cast<size_t>(s)][static_cast<size_t>(i)]);
      ++col;
    }
  }
  if (col != n) throw std::logic_error("jordan_decompose: chains do not span");
  jf.basis = basis;
  if (!(basis.inverse() * x * basis == jordan_canonical_matrix(jf.type, q)))
    throw std::logic_error("jordan_decompose: certificate check failed");
  return jf;
}

long jordan_hom_dim(const Partition& a, const Partition& b) {
  long d = 0;
  for (int pa : a)
    for (int pb : b) d += std::min(pa, pb);
  return d;
}

mpz_class jordan_aut_order(const Partition& p, int q) {
  Partition c = conjugate_partition(p);
  long e = 0;
  for (int cj : c) e += static_cast<long>(cj) * cj;
  mpz_class qe;
  mpz_ui_pow_ui(qe.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  mpq_class r(qe);
  // multiplicities of each part value
  std::map<int, int> mult;
  for (int part : p) mult[part] += 1;
  mpq_class qinv(1, q);
  for (auto [part, m] : mult) {
    mpq_class t = qinv;
    for (int k = 1; k <= m; ++k) {
      r *= (1 - t);
      t *= qinv;
    }
  }
  r.canonicalize();
  if (r.get_den() != 1) throw std::logic_error("jordan_aut_order: non-integral");
  return r.get_num();
}

JordanProvider::JordanProvider(int q, Caps caps) : Provider(preset_quiver("jordan", q), caps) {
  name_ = "jordan";
}

IsoId JordanProvider::class_of_partition(const Partition& p) {
  int n = 0;
  for (int part : p) n += part;
  classes_up_to(n);
  return by_partition_.at(p);
}

void JordanProvider::extend_window(int bound) {
  for (int n = std::max(0, window_ + 1); n <= bound; ++n) {
    for (const auto& p : partitions_of(n)) {
      Rep r;
      r.dim = {n};
      r.x = {jordan_canonical_matrix(p, spec_.q)};
      IsoId id = add_class(std::move(r));
      partitions_[id] = p;
      by_partition_[p] = id;
    }
  }
}

IsoId JordanProvider::identify_impl(const Rep& r) {
  JordanForm jf = jordan_decompose(r.x[0]);
  return by_partition_.at(jf.type);
}

mpz_class JordanProvider::aut_order_impl(IsoId a) { return jordan_aut_order(partitions_.at(a), spec_.q); }

long JordanProvider::hom_dim_impl(IsoId a, IsoId b) {
  return jordan_hom_dim(partitions_.at(a), partitions_.at(b));
}

}  // namespace hallforge
