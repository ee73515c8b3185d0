#include "fgl/formulas.hpp"

#include "doctest.h"
#include "fgl/lattice.hpp"
#include "fgl/oracle.hpp"

using namespace fgl;

TEST_CASE("count_elementary") {
  CHECK(count_elementary(2, 3, 0) == 1);
  CHECK(count_elementary(2, 3, 3) == 1);
  CHECK(count_elementary(2, 3, 1) == 7);
  CHECK(count_elementary(2, 3, 2) == 7);
  CHECK(count_elementary(3, 4, 2) == 130);  // Gaussian binomial [4 2]_3
  CHECK_THROWS_AS(count_elementary(2, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(count_elementary(4, 2, 1), std::invalid_argument);
}

TEST_CASE("count_maximal") {
  CHECK(count_maximal(7, 1) == 1);
  CHECK(count_maximal(2, 2) == 3);
  CHECK(count_maximal(3, 3) == 13);
}

TEST_CASE("count_rank2_by_index branches") {
  CHECK(count_rank2_by_index(2, 2, 3, 0) == 1);
  CHECK(count_rank2_by_index(2, 2, 3, 2) == 7);
  CHECK(count_rank2_by_index(2, 2, 3, 4) == 3);
  CHECK_THROWS_AS(count_rank2_by_index(2, 2, 3, 6), std::invalid_argument);

  // adjacent branches agree at a = a1 and a = a2
  for (long p : {2, 3, 5})
    for (int a1 = 0; a1 <= 4; ++a1)
      for (int a2 = a1; a2 <= 4; ++a2) {
        Int at_a1 = count_rank2_by_index(p, a1, a2, a1);
        CHECK(at_a1 == (zpow(Int(p), a1 + 1) - 1) / (p - 1));
        Int at_a2 = count_rank2_by_index(p, a1, a2, a2);
        CHECK(at_a2 == (zpow(Int(p), a1 + 1) - 1) / (p - 1));
      }
}

TEST_CASE("total_rank2 and f") {
  CHECK(total_rank2(2, 1, 2) == 8);
  CHECK(total_rank2(2, 2, 3) == 22);
  CHECK(total_rank2(2, 2, 2) == 15);
  CHECK(f(2, 0, 0) == 1);
  CHECK(f(2, 0, 1) == 2);
  CHECK(f(2, 1, 2) == 8);
  CHECK(f(2, 2, 1) == 8);  // symmetrized

  // total = sum over order classes = f
  for (long p : {2, 3, 5})
    for (int a1 = 0; a1 <= 3; ++a1)
      for (int a2 = a1; a2 <= 4; ++a2) {
        Int sum = 0;
        for (int a = 0; a <= a1 + a2; ++a)
          sum += count_rank2_by_index(p, a1, a2, a);
        CHECK(sum == total_rank2(p, a1, a2));
        CHECK(sum == f(p, a1, a2));
      }
}

TEST_CASE("quadform matrix, determinant and positivity") {
  auto m1 = build_quadform(2, 1);
  CHECK(m1.entries == std::vector<Int>{1, 2, 2, 5});
  auto m2 = build_quadform(2, 2);
  CHECK(m2.entries == std::vector<Int>{1, 2, 3, 2, 5, 8, 3, 8, 15});
  CHECK(build_quadform(7, 0).entries == std::vector<Int>{1});

  CHECK(det_quadform(2, 1).det == 1);
  CHECK(det_quadform(2, 1).matches_identity);
  CHECK(det_quadform(2, 2).det == 2);
  CHECK(det_quadform(3, 2).det == 12);

  for (long p : {2, 3, 5})
    for (int n = 1; n <= 8; ++n) {
      auto r = det_quadform(p, n);
      REQUIRE(r.matches_identity);
      REQUIRE(is_positive_definite(build_quadform(p, n)));
    }

  QuadFormMatrix bad{2, 1, {1, 2, 2, 1}};
  CHECK_FALSE(is_positive_definite(bad));  // det = -3
  QuadFormMatrix asym{2, 1, {1, 2, 3, 1}};
  CHECK_THROWS_AS(is_positive_definite(asym), std::invalid_argument);
  CHECK(is_positive_definite(QuadFormMatrix{2, 0, {Int(1)}}));
}

TEST_CASE("h piecewise form agrees with the min-product") {
  for (long p : {2, 3})
    for (std::vector<int> exps :
         {std::vector<int>{2}, {1, 3}, {2, 2, 4}, {1, 2, 3}}) {
      int k1 = static_cast<int>(exps.size());
      for (int a = 0; a <= exps.back() + 2; ++a) {
        // piecewise: for exps[j-1] <= a <= exps[j], p^((k-1-j)a + prefix_j)
        int j = 0;
        while (j < k1 && exps[j] <= a) ++j;
        int prefix = 0;
        for (int i = 0; i < j; ++i) prefix += exps[i];
        Int piecewise = zpow(Int(p), (k1 - j) * a + prefix);
        CHECK(h(p, exps, a) == piecewise);
      }
    }
  CHECK(h(2, {2}, 1) == 2);
  CHECK(h(2, {2}, 3) == 4);
  CHECK(h(5, {1, 2, 3}, 0) == 1);
}

TEST_CASE("count_cyclic_by_order") {
  CHECK(count_cyclic_by_order(2, {2, 3}, 0) == 1);
  CHECK(count_cyclic_by_order(2, {2, 3}, 2) == 6);
  CHECK(count_cyclic_by_order(2, {2, 3}, 3) == 4);
  CHECK_THROWS_AS(count_cyclic_by_order(2, {2, 3}, 4), std::invalid_argument);

  // the h-quotient reproduces the rank-2 piecewise values
  for (long p : {2, 3})
    for (int a1 = 1; a1 <= 5; ++a1)
      for (int a2 = a1; a2 <= 5; ++a2)
        for (int a = 0; a <= a2; ++a) {
          Int expected;
          if (a == 0)
            expected = 1;
          else if (a <= a1)
            expected = zpow(Int(p), a) + zpow(Int(p), a - 1);
          else
            expected = zpow(Int(p), a1);
          CHECK(count_cyclic_by_order(p, {a1, a2}, a) == expected);
        }
}

TEST_CASE("total_cyclic_rank2") {
  CHECK(total_cyclic_rank2(2, 1, 2) == 6);
  CHECK(total_cyclic_rank2(2, 2, 3) == 14);
  CHECK(total_cyclic_rank2(7, 0, 3) == 4);

  for (long p : {2, 3})
    for (int a1 = 1; a1 <= 4; ++a1)
      for (int a2 = a1; a2 <= 4; ++a2) {
        Int sum = 0;
        for (int a = 0; a <= a2; ++a)
          sum += count_cyclic_by_order(p, {a1, a2}, a);
        CHECK(sum == total_cyclic_rank2(p, a1, a2));
      }
}

TEST_CASE("count_elements_by_order_p") {
  CHECK(count_elements_by_order_p(3, {1, 2}, 0) == 1);
  CHECK(count_elements_by_order_p(2, {2, 3}, 3) == 16);
  CHECK(count_elements_by_order_p(2, {1, 1}, 1) == 3);

  // element count = cyclic count * phi(p^a); census sums to the order
  for (long p : {2, 3})
    for (std::vector<int> exps : {std::vector<int>{1, 1}, {2, 3}, {1, 2, 2}}) {
      Int sum = 0;
      for (int a = 0; a <= exps.back(); ++a) {
        Int c = count_elements_by_order_p(p, exps, a);
        sum += c;
        if (a >= 1)
          CHECK(c == count_cyclic_by_order(p, exps, a) *
                         euler_phi(zpow(Int(p), a)));
      }
      CHECK(sum == (PGroupType{p, exps}.order()));
    }
}

TEST_CASE("composite product rules") {
  GroupDescriptor g{{2, 12}};
  CHECK(count_cyclic_general(g, 1) == 1);
  CHECK(count_cyclic_general(g, 6) == 3);
  CHECK(count_cyclic_general(g, 8) == 0);
  CHECK(count_elements_general(g, 1) == 1);
  CHECK(count_elements_general(g, 6) == 6);
  // order-12 elements: 4 of order 4 in the 2-part times 2 of order 3
  CHECK(count_elements_general(g, 12) == 8);
  CHECK_THROWS_AS(count_elements_general(g, 0), std::invalid_argument);

  // Euler identity over all divisors of |G|
  for (auto gg : {GroupDescriptor{{6}}, GroupDescriptor{{2, 12}},
                  GroupDescriptor{{6, 6}}, GroupDescriptor{{}}}) {
    Int order = gg.order();
    Int sum = 0;
    for (Int d = 1; d <= order; ++d)
      if (order % d == 0) sum += count_elements_general(gg, d);
    CHECK(sum == order);
  }
}

TEST_CASE("element census matches the oracle") {
  for (auto g : {GroupDescriptor{{6}}, GroupDescriptor{{2, 12}},
                 GroupDescriptor{{6, 6}}}) {
    auto census = order_census(ExplicitGroup{g.invariant_factors});
    auto formula = count_report(g, CountKind::Elements);
    CHECK(census.by_order == formula.by_order);
  }
}

TEST_CASE("total_subgroups_general") {
  CHECK(total_subgroups_general(GroupDescriptor{{6}}).total == 4);
  CHECK(total_subgroups_general(GroupDescriptor{{2, 12}}).total == 16);
  CHECK(total_subgroups_general(GroupDescriptor{{}}).total == 1);

  // rank >= 3 falls back to enumeration and the report says so
  auto r = total_subgroups_general(normalize({2, 4, 4}));
  CHECK(r.component_source.at(2) == CountSource::Enumeration);
  CHECK(r.total == Int(enumerate(PGroupType{2, {1, 2, 2}}).size()));

  auto e = total_subgroups_general(normalize({3, 3, 3}));
  CHECK(e.component_source.at(3) == CountSource::Formula);
  CHECK(e.total == 2 + 13 + 13);  // Prop-style elementary total
}

TEST_CASE("maximal count is independent of the exponents") {
  for (long p : {2, 3})
    for (std::vector<int> exps :
         {std::vector<int>{1, 1}, {1, 5}, {3, 7}, {1, 1, 1}, {2, 3, 9}}) {
      PGroupType t{p, exps};
      int s = t.exponent_sum();
      CHECK(Int(enumerate_of_order(t, s - 1).size()) ==
            count_maximal(p, t.rank()));
    }
}

TEST_CASE("count report serialization") {
  auto rep = count_report(GroupDescriptor{{4, 8}}, CountKind::AllSubgroups);
  CHECK(rep.total() == 22);
  CHECK(rep.to_json() ==
        "{\"group\":\"4 x 8\",\"kind\":\"all\",\"source\":\"formula\","
        "\"by_order\":{\"1\":1,\"2\":3,\"4\":7,\"8\":7,\"16\":3,\"32\":1},"
        "\"total\":22}");
  CHECK(rep.to_csv() ==
        "order,count\n1,1\n2,3\n4,7\n8,7\n16,3\n32,1\n");
}
