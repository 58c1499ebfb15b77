#include "hallforge/provider.hpp"

#include "doctest.h"
#include "hallforge/brute_provider.hpp"
#include "hallforge/jordan_provider.hpp"

using namespace hallforge;

namespace {

Caps test_caps() {
  Caps c;
  c.hom_scan = 1ull << 24;
  c.subspace_scan = 1ull << 24;
  c.complex_scan = 1ull << 24;
  return c;
}

}  // namespace

TEST_CASE("class enumeration windows") {
  auto a1 = make_preset_provider("a1", 2, test_caps());
  CHECK(a1->classes_up_to(2).size() == 3);  // 0, k, k^2
  CHECK(a1->classes_up_to(3).size() == 4);

  auto jp = make_preset_provider("jordan", 2, test_caps());
  CHECK(jp->classes_up_to(2).size() == 4);  // {}, (1), (2), (1,1)

  auto a2 = make_preset_provider("a2", 2, test_caps());
  CHECK(a2->classes_up_to(2).size() == 7);  // 0, S1, S2, S1^2, S1+S2, P1, S2^2

  // brute provider on the Jordan quiver agrees with the partition count
  auto jb = make_provider(preset_quiver("jordan", 2), test_caps());
  CHECK(jb->classes_up_to(2).size() == 4);
  CHECK(jb->classes_up_to(3).size() == 7);  // partitions of 0..3
}

TEST_CASE("identify") {
  auto jp = make_preset_provider("jordan", 2, test_caps());
  for (IsoId c : jp->classes_up_to(3)) CHECK(jp->identify(jp->cls(c).rep) == c);

  Rep zero2;
  zero2.dim = {2};
  zero2.x = {FqMatrix(2, 2, 2)};
  IsoId z = jp->identify(zero2);
  CHECK(jp->cls(z).dim == DimVec{2});
  CHECK(dynamic_cast<JordanProvider*>(jp.get())->partition_of(z) == Partition{1, 1});

  Rep block;
  block.dim = {2};
  block.x = {FqMatrix(2, 2, 2)};
  block.x[0].set(0, 1, 1);
  CHECK(dynamic_cast<JordanProvider*>(jp.get())->partition_of(jp->identify(block)) == Partition{2});
}

TEST_CASE("hom dimensions") {
  auto jp = make_preset_provider("jordan", 3, test_caps());
  auto* J = dynamic_cast<JordanProvider*>(jp.get());
  jp->classes_up_to(3);
  IsoId s = J->class_of_partition({1});
  IsoId two = J->class_of_partition({2});
  CHECK(jp->hom_dim(s, s) == 1);
  CHECK(jp->hom_dim(two, s) == 1);
  CHECK(jp->hom_dim(s, two) == 1);
  CHECK(jp->hom_dim(two, two) == 2);

  auto a2 = make_preset_provider("a2", 2, test_caps());
  auto ids = a2->classes_of_dim({1, 0});
  REQUIRE(ids.size() == 1);
  IsoId s1 = ids[0];
  IsoId s2 = a2->classes_of_dim({0, 1})[0];
  CHECK(a2->hom_dim(s1, s1) == 1);
  CHECK(a2->hom_dim(s1, s2) == 0);
}

TEST_CASE("euler and sym exponents") {
  auto jp = make_preset_provider("jordan", 2, test_caps());
  CHECK(jp->euler_exponent({1}, {1}) == 0);
  CHECK(jp->sym_exponent({1}, {1}) == 0);
  CHECK(jp->euler_exponent({3}, {0}) == 0);

  auto a1 = make_preset_provider("a1", 2, test_caps());
  CHECK(a1->euler_exponent({1}, {1}) == 1);
  CHECK(a1->sym_exponent({1}, {1}) == 2);

  auto a2 = make_preset_provider("a2", 2, test_caps());
  CHECK(a2->euler_exponent({1, 0}, {0, 1}) == -1);
  CHECK(a2->euler_exponent({0, 1}, {1, 0}) == 0);
  CHECK(a2->sym_exponent({1, 0}, {0, 1}) == -1);
}

TEST_CASE("ext1 dimensions") {
  auto a1 = make_preset_provider("a1", 2, test_caps());
  IsoId k = a1->classes_of_dim({1})[0];
  CHECK(a1->ext1_dim(k, k) == 0);

  auto jp = make_preset_provider("jordan", 2, test_caps());
  auto* J = dynamic_cast<JordanProvider*>(jp.get());
  jp->classes_up_to(2);
  CHECK(jp->ext1_dim(J->class_of_partition({1}), J->class_of_partition({1})) == 1);

  auto a2 = make_preset_provider("a2", 2, test_caps());
  IsoId s1 = a2->classes_of_dim({1, 0})[0];
  IsoId s2 = a2->classes_of_dim({0, 1})[0];
  CHECK(a2->ext1_dim(s1, s2) == 1);
  CHECK(a2->ext1_dim(s2, s1) == 0);
}

TEST_CASE("aut orders") {
  auto jp = make_preset_provider("jordan", 2, test_caps());
  auto* J = dynamic_cast<JordanProvider*>(jp.get());
  jp->classes_up_to(2);
  CHECK(jp->aut_order(J->class_of_partition({1})) == 1);  // q - 1
  CHECK(jp->aut_order(J->class_of_partition({1, 1})) == 6);
  CHECK(jp->aut_order(J->class_of_partition({2})) == 2);

  auto a1 = make_preset_provider("a1", 3, test_caps());
  CHECK(a1->aut_order(a1->classes_of_dim({1})[0]) == 2);
  CHECK(a1->aut_order(a1->classes_of_dim({2})[0]) == 48);  // |GL_2(F_3)|
}

TEST_CASE("hall coefficients") {
  auto jp = make_preset_provider("jordan", 2, test_caps());
  auto* J = dynamic_cast<JordanProvider*>(jp.get());
  jp->classes_up_to(2);
  IsoId zero = jp->zero_class();
  IsoId s = J->class_of_partition({1});
  IsoId ss = J->class_of_partition({1, 1});
  IsoId j2 = J->class_of_partition({2});

  // unit axiom
  CHECK(jp->hall_coeff_rat(s, zero, s) == 1);
  CHECK(jp->hall_coeff_rat(zero, s, s) == 1);
  CHECK(jp->hall_coeff_rat(s, zero, j2) == 0);

  CHECK(jp->hall_coeff_rat(s, s, ss) == mpq_class(1, 2));
  CHECK(jp->hall_coeff_rat(s, s, j2) == mpq_class(1, 2));

  auto a1 = make_preset_provider("a1", 3, test_caps());
  IsoId k = a1->classes_of_dim({1})[0];
  IsoId kk = a1->classes_of_dim({2})[0];
  CHECK(a1->hall_coeff_rat(k, k, kk) == mpq_class(1, 3));
}

TEST_CASE("hall coefficient equals explicit ses count over |Aut M|") {
  for (int q : {2, 3}) {
    for (const char* preset : {"a1", "a2", "jordan"}) {
      auto p = make_preset_provider(preset, q, test_caps());
      for (IsoId m : p->classes_up_to(2)) {
        for (IsoId a : p->classes_up_to(2)) {
          for (IsoId b : p->classes_up_to(2)) {
            if (p->cls(m).dim != dim_add(p->cls(a).dim, p->cls(b).dim)) continue;
            mpq_class lhs = p->hall_coeff_rat(a, b, m);
            mpq_class rhs(p->ses_pair_count(a, b, m), p->aut_order(m));
            rhs.canonicalize();
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("euler form against the counting oracle") {
  // |Ext1(A,B)| = |Hom(A,B)| * sum_M hall_coeff(A,B,M) must equal
  // q^{hom_dim - <dim A, dim B>}
  for (int q : {2, 3}) {
    for (const char* preset : {"a1", "a2", "jordan"}) {
      auto p = make_preset_provider(preset, q, test_caps());
      auto window = p->classes_up_to(2);
      for (IsoId a : window)
        for (IsoId b : window) {
          mpq_class total = 0;
          for (const auto& [m, c] : p->hall_products(a, b)) total += c;
          mpq_class ext = total * mpq_class(p->hom_count(a, b));
          long e = p->hom_dim(a, b) - p->euler_exponent(p->cls(a).dim, p->cls(b).dim);
          mpz_class expect;
          mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
          CHECK(ext == mpq_class(expect));
          CHECK(p->ext1_dim(a, b) == e);
        }
    }
  }
}

TEST_CASE("kernel, image, cokernel of intertwiners") {
  QuiverSpec a2 = preset_quiver("a2", 2);
  auto p = make_provider(a2, test_caps());
  Rep p1;
  p1.dim = {1, 1};
  p1.x = {FqMatrix::identity(1, 2)};
  Rep s1 = simple_rep(a2, 0);

  // zero map: ker = source, im = 0, coker = target
  RepMap z = zero_map(a2, p1, s1);
  CHECK(kernel_obj(a2, p1, s1, z).obj.dim == p1.dim);
  CHECK(dim_is_zero(image_obj(a2, p1, s1, z).obj.dim));
  CHECK(cokernel_obj(a2, p1, s1, z).obj.dim == s1.dim);

  // the projection P1 -> S1 has kernel S2
  RepMap f = zero_map(a2, p1, s1);
  f[0].set(0, 0, 1);
  REQUIRE(is_intertwiner(a2, p1, s1, f));
  SubRep ker = kernel_obj(a2, p1, s1, f);
  CHECK(ker.obj.dim == DimVec{0, 1});
  CHECK(p->identify(ker.obj) == p->classes_of_dim({0, 1})[0]);

  // invertible map: ker = 0, coker = 0
  RepMap id = identity_map(a2, p1);
  CHECK(dim_is_zero(kernel_obj(a2, p1, p1, id).obj.dim));
  CHECK(dim_is_zero(cokernel_obj(a2, p1, p1, id).obj.dim));
  CHECK(p->identify(image_obj(a2, p1, p1, id).obj) == p->identify(p1));
}

TEST_CASE("direct sums") {
  QuiverSpec jq = preset_quiver("jordan", 2);
  auto p = make_preset_provider("jordan", 2, test_caps());
  Rep s = simple_rep(jq, 0);
  Rep zero = zero_rep(jq);
  CHECK(direct_sum(jq, s, zero) == s);
  Rep ss = direct_sum(jq, s, s);
  CHECK(p->aut_order(p->identify(ss)) == 6);
  for (IsoId c1 : p->classes_up_to(2))
    for (IsoId c2 : p->classes_up_to(2)) {
      Rep left = direct_sum(jq, p->cls(c1).rep, p->cls(c2).rep);
      Rep right = direct_sum(jq, p->cls(c2).rep, p->cls(c1).rep);
      CHECK(p->identify(left) == p->identify(right));
      CHECK(left.dim == dim_add(p->cls(c1).dim, p->cls(c2).dim));
    }
}

TEST_CASE("hall product rows sum to a q power (integrality)") {
  // |Hom(A,B)| * sum_M hall_coeff(A,B,M) = |Ext1(A,B)|, a power of q
  auto jp = make_preset_provider("jordan", 3, test_caps());
  auto window = jp->classes_up_to(2);
  for (IsoId a : window)
    for (IsoId b : window) {
      mpq_class acc = 0;
      for (const auto& [m, c] : jp->hall_products(a, b)) acc += c;
      acc *= mpq_class(jp->hom_count(a, b));
      acc.canonicalize();
      CHECK(acc.get_den() == 1);
      mpz_class n = acc.get_num();
      while (n % 3 == 0) n /= 3;
      CHECK(n == 1);
    }
}

TEST_CASE("jordan formulas agree with the brute-force provider") {
  for (int q : {2, 3}) {
    int bound = 4;
    Caps caps = test_caps();
    caps.hom_scan = 1ull << 27;  // the dim-4 window at q=3 scans 3^16 matrices
    JordanProvider jp(q, caps);
    BruteProvider jb(preset_quiver("jordan", q), caps);
    jp.classes_up_to(bound);
    jb.classes_up_to(bound);
    for (int n = 0; n <= bound; ++n) {
      for (const auto& pa : partitions_of(n)) {
        IsoId fa = jp.class_of_partition(pa);
        IsoId ba = jb.identify(jp.cls(fa).rep);
        CHECK(jp.aut_order(fa) == jb.aut_order(ba));
        for (int m = 0; m <= bound; ++m)
          for (const auto& pb : partitions_of(m)) {
            IsoId fb = jp.class_of_partition(pb);
            IsoId bb = jb.identify(jp.cls(fb).rep);
            CHECK(jp.hom_dim(fa, fb) == jb.hom_dim(ba, bb));
          }
      }
    }
  }
}
