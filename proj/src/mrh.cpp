#include "hallforge/mrh.hpp"

#include <array>

#include "json.hpp"

namespace hallforge {

MRHElt MRHElt::monomial(const NFKey& k, const Scalar& c) {
  MRHElt e;
  e.add_term(k, c);
  return e;
}

void MRHElt::add_term(const NFKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MRHElt MRHElt::operator+(const MRHElt& o) const {
  MRHElt r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

MRHElt MRHElt::operator-(const MRHElt& o) const {
  MRHElt r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

MRHElt MRHElt::scaled(const Scalar& c) const {
  MRHElt r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.add_term(k, v * c);
  return r;
}

MRHElt MrhEngine::unit() {
  IsoId z = p_.zero_class();
  NFKey k{z, z, DimVec(p_.vertices(), 0), DimVec(p_.vertices(), 0)};
  return MRHElt::monomial(k, Scalar(1));
}

MRHElt MrhEngine::iplus(IsoId a) {
  IsoId z = p_.zero_class();
  return MRHElt::monomial(NFKey{a, z, DimVec(p_.vertices(), 0), DimVec(p_.vertices(), 0)}, Scalar(1));
}

MRHElt MrhEngine::iminus(IsoId b) {
  IsoId z = p_.zero_class();
  return MRHElt::monomial(NFKey{z, b, DimVec(p_.vertices(), 0), DimVec(p_.vertices(), 0)}, Scalar(1));
}

MRHElt MrhEngine::torus(const TorusExp& t) {
  IsoId z = p_.zero_class();
  return MRHElt::monomial(NFKey{z, z, t.alpha, t.beta}, Scalar(1));
}

MRHElt MrhEngine::monomial(IsoId a, IsoId b, const TorusExp& t) {
  return MRHElt::monomial(NFKey{a, b, t.alpha, t.beta}, Scalar(1));
}

const std::vector<std::pair<IsoId, Scalar>>& MrhEngine::hall_line(IsoId a, IsoId b) {
  auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (auto it = hall_memo_.find(key); it != hall_memo_.end()) return it->second;
  }
  long e = p_.euler_exponent(p_.cls(a).dim, p_.cls(b).dim);
  Scalar twist = v_pow(e);
  std::vector<std::pair<IsoId, Scalar>> line;
  for (const auto& [m, c] : p_.hall_products(a, b)) line.emplace_back(m, Scalar(c) * twist);
  std::lock_guard<std::mutex> lk(mu_);
  return hall_memo_.emplace(key, std::move(line)).first->second;
}

const MRHElt& MrhEngine::expand_pair(IsoId x, IsoId y) {
  auto key = std::make_pair(x, y);
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (auto it = pair_memo_.find(key); it != pair_memo_.end()) return it->second;
  }
  // copies: identify/hall lookups below may extend the class table
  Rep rx = p_.cls(x).rep;
  Rep ry = p_.cls(y).rep;
  DimVec zerovec(p_.vertices(), 0);
  MRHElt out = MRHElt::monomial(NFKey{x, y, zerovec, zerovec}, Scalar(1));
  const QuiverSpec& spec = p_.quiver();
  for_each_hom(spec, rx, ry, p_.caps().hom_scan, [&](const RepMap& g) {
    if (map_is_zero(g)) return true;
    SubRep ker = kernel_obj(spec, rx, ry, g);
    QuotRep cok = cokernel_obj(spec, rx, ry, g);
    DimVec im = image_dims(g);
    long eg = p_.euler_exponent(cok.obj.dim, im) - p_.euler_exponent(ker.obj.dim, im);
    IsoId kid = p_.identify(ker.obj);
    IsoId cid = p_.identify(cok.obj);
    MRHElt sub = expand_pair(kid, cid);  // copy: recursion may grow the memo
    Scalar coef = -v_pow(eg);
    for (const auto& [k, c] : sub.terms()) {
      NFKey shifted = k;
      shifted.beta = dim_add(shifted.beta, im);
      out.add_term(shifted, c * coef);
    }
    return true;
  });
  std::lock_guard<std::mutex> lk(mu_);
  return pair_memo_.emplace(key, std::move(out)).first->second;
}

const MRHElt& MrhEngine::cross_core(IsoId a1, IsoId b1, IsoId a2, IsoId b2) {
  std::array<IsoId, 4> key{a1, b1, a2, b2};
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (auto it = core_memo_.find(key); it != core_memo_.end()) return it->second;
  }
  const QuiverSpec& spec = p_.quiver();
  // copies: hall_line below may extend the class table
  Rep rb1 = p_.cls(b1).rep;
  Rep ra2 = p_.cls(a2).rep;
  DimVec b2dim = p_.cls(b2).dim;
  MRHElt out;
  for_each_hom(spec, rb1, ra2, p_.caps().hom_scan, [&](const RepMap& f) {
    SubRep ker = kernel_obj(spec, rb1, ra2, f);
    QuotRep cok = cokernel_obj(spec, rb1, ra2, f);
    DimVec delta = image_dims(f);
    long ef = p_.euler_exponent(cok.obj.dim, delta) - p_.euler_exponent(ker.obj.dim, delta);
    IsoId xf = p_.identify(cok.obj);
    IsoId yf = p_.identify(ker.obj);
    MRHElt pair = expand_pair(xf, yf);
    for (const auto& [pk, pc] : pair.terms()) {
      // move K*_{beta_j} and K_delta across [C*_{B2}]
      long move_exp = p_.sym_exponent(b2dim, pk.beta) - p_.sym_exponent(delta, b2dim);
      Scalar factor = pc * v_pow(ef + move_exp);
      for (const auto& [m, cm] : hall_line(a1, pk.a)) {
        for (const auto& [n, cn] : hall_line(pk.b, b2)) {
          NFKey res{m, n, delta, pk.beta};
          out.add_term(res, factor * cm * cn);
        }
      }
    }
    return true;
  });
  std::lock_guard<std::mutex> lk(mu_);
  return core_memo_.emplace(key, std::move(out)).first->second;
}

MRHElt MrhEngine::monomial_mul(const NFKey& k1, const NFKey& k2) {
  DimVec a2dim = p_.cls(k2.a).dim;
  DimVec b2dim = p_.cls(k2.b).dim;
  // move K_{alpha1} K*_{beta1} across [C_{A2}] [C*_{B2}]
  long pass = p_.sym_exponent(k1.alpha, a2dim) - p_.sym_exponent(k1.alpha, b2dim) -
              p_.sym_exponent(a2dim, k1.beta) + p_.sym_exponent(b2dim, k1.beta);
  DimVec alpha = dim_add(k1.alpha, k2.alpha);
  DimVec beta = dim_add(k1.beta, k2.beta);
  Scalar factor = v_pow(pass);
  MRHElt out;
  const MRHElt core = cross_core(k1.a, k1.b, k2.a, k2.b);
  for (const auto& [ck, cc] : core.terms()) {
    NFKey res{ck.a, ck.b, dim_add(ck.alpha, alpha), dim_add(ck.beta, beta)};
    out.add_term(res, cc * factor);
  }
  return out;
}

MRHElt MrhEngine::mul(const MRHElt& x, const MRHElt& y) {
  MRHElt out;
  for (const auto& [k1, c1] : x.terms())
    for (const auto& [k2, c2] : y.terms()) {
      MRHElt part = monomial_mul(k1, k2);
      Scalar c = c1 * c2;
      for (const auto& [k, v] : part.terms()) out.add_term(k, v * c);
    }
  return out;
}

MRHElt MrhEngine::reduce_complex(const ZTwoComplex& m) {
  NormalFormData nf = normal_form_data(p_, m);
  DimVec h0 = p_.cls(nf.h0).dim;
  DimVec h1 = p_.cls(nf.h1).dim;
  long vexp = p_.euler_exponent(nf.alpha, h0) - p_.euler_exponent(nf.alpha, h1) -
              p_.euler_exponent(nf.beta, h0) + p_.euler_exponent(nf.beta, h1);
  const MRHElt base = expand_pair(nf.h1, nf.h0);
  MRHElt out;
  for (const auto& [k, c] : base.terms()) {
    const DimVec& xd = p_.cls(k.a).dim;
    const DimVec& yd = p_.cls(k.b).dim;
    long pass = p_.sym_exponent(nf.alpha, xd) - p_.sym_exponent(nf.alpha, yd) -
                p_.sym_exponent(xd, nf.beta) + p_.sym_exponent(yd, nf.beta);
    NFKey res{k.a, k.b, dim_add(k.alpha, nf.alpha), dim_add(k.beta, nf.beta)};
    out.add_term(res, c * v_pow(vexp + pass));
  }
  return out;
}

MRHElt MrhEngine::oracle_mul(const ZTwoComplex& m, const ZTwoComplex& n) {
  long cw = p_.euler_exponent(m.m0.dim, n.m0.dim) + p_.euler_exponent(m.m1.dim, n.m1.dim);
  ComplexExtSpace ext(p_.quiver(), m, n);
  std::uint64_t total = ext.cocycle_count(p_.caps().complex_scan);
  MRHElt acc;
  for (std::uint64_t z = 0; z < total; ++z) {
    MRHElt red = reduce_complex(ext.middle(z));
    acc = acc + red;
  }
  // every extension class is hit |C|/|Hom(M,N)| times and the Hall
  // coefficient divides by |Hom(M,N)|, leaving q^{-dim C} overall
  return acc.scaled(v_pow(cw - 2 * ext.cochain_dim()));
}

ReducedElt MrhEngine::to_reduced(const MRHElt& x) {
  ReducedElt out;
  for (const auto& [k, c] : x.terms()) {
    RedKey rk{k.a, k.b, dim_sub(k.alpha, k.beta)};
    auto it = out.find(rk);
    if (it == out.end()) {
      if (!c.is_zero()) out.emplace(rk, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

std::string mrh_to_json_text(const Provider&, const MRHElt& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : x.terms()) {
    nlohmann::json rec;
    rec["A"] = k.a;
    rec["B"] = k.b;
    rec["alpha"] = k.alpha;
    rec["beta"] = k.beta;
    rec["coeff"] = {{"a", Scalar::rat_str(c.rat_part())}, {"b", Scalar::rat_str(c.irr_part())}};
    arr.push_back(std::move(rec));
  }
  return arr.dump();
}

}  // namespace hallforge
