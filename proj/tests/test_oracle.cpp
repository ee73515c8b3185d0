#include "fgl/oracle.hpp"

#include <set>

#include "doctest.h"

using namespace fgl;

TEST_CASE("element_order") {
  ExplicitGroup g{{2, 4}};
  CHECK(element_order({0, 0}, g) == 1);
  CHECK(element_order({1, 2}, g) == 2);
  CHECK(element_order({0, 1}, g) == 4);
  CHECK_THROWS_AS(element_order({1}, g), std::invalid_argument);
}

TEST_CASE("order_census") {
  auto c24 = order_census(ExplicitGroup{{2, 4}});
  CHECK(c24.by_order ==
        std::map<Int, Int>{{1, 1}, {2, 3}, {4, 4}});
  auto c7 = order_census(ExplicitGroup{{7}});
  CHECK(c7.by_order == std::map<Int, Int>{{1, 1}, {7, 6}});
  auto c48 = order_census(ExplicitGroup{{4, 8}});
  CHECK(c48.by_order ==
        std::map<Int, Int>{{1, 1}, {2, 3}, {4, 12}, {8, 16}});
  CHECK(c48.total() == 32);
  CHECK_THROWS_AS(order_census(ExplicitGroup{{100, 100}}, 4096),
                  ResourceLimitError);
}

TEST_CASE("census of a product is the convolution of censuses") {
  auto c6 = order_census(ExplicitGroup{{6}});
  auto c2 = order_census(ExplicitGroup{{2}});
  auto c3 = order_census(ExplicitGroup{{3}});
  std::map<Int, Int> conv;
  for (const auto& [o1, n1] : c2.by_order)
    for (const auto& [o2, n2] : c3.by_order) conv[o1 * o2] += n1 * n2;
  CHECK(conv == c6.by_order);
}

TEST_CASE("span") {
  ExplicitGroup g24{{2, 4}};
  CHECK(span(g24, {}).members == std::vector<Element>{{0, 0}});
  auto h = span(g24, {{1, 1}});
  CHECK(h.members ==
        std::vector<Element>{{0, 0}, {0, 2}, {1, 1}, {1, 3}});
  ExplicitGroup g22{{2, 2}};
  CHECK(span(g22, {{1, 0}, {0, 1}}).size() == 4);
}

TEST_CASE("span is monotone and idempotent") {
  ExplicitGroup g{{4, 8}};
  auto h = span(g, {{1, 2}, {0, 4}});
  auto hh = span(g, h.members);
  CHECK(h.members == hh.members);
  auto bigger = span(g, {{1, 2}, {0, 4}, {0, 1}});
  CHECK(h.subset_of(bigger));
}

TEST_CASE("all_subgroups counts") {
  CHECK(all_subgroups(ExplicitGroup{{5}}).size() == 2);
  CHECK(all_subgroups(ExplicitGroup{{2, 4}}).size() == 8);
  CHECK(all_subgroups(ExplicitGroup{{2, 2, 2}}).size() == 16);
  CHECK(all_subgroups(ExplicitGroup{{}}).size() == 1);
}

TEST_CASE("all_subgroups yields genuine distinct subgroups") {
  ExplicitGroup g{{2, 12}};
  auto subs = all_subgroups(g);
  CHECK(subs.size() == 16);
  std::set<std::vector<Element>> seen;
  for (const auto& h : subs) {
    // Lagrange and closure
    CHECK(g.order() % h.size() == 0);
    CHECK(h.contains(g.zero()));
    for (const auto& a : h.members)
      for (const auto& b : h.members) CHECK(h.contains(g.add(a, b)));
    seen.insert(h.members);
  }
  CHECK(seen.size() == subs.size());
}

TEST_CASE("parallel closure finds the same subgroup set") {
  ExplicitGroup g{{3, 9}};
  auto serial = all_subgroups(g, kDefaultOracleCap, 1);
  auto parallel = all_subgroups(g, kDefaultOracleCap, 4);
  REQUIRE(serial.size() == parallel.size());
  std::set<std::vector<Element>> a, b;
  for (const auto& h : serial) a.insert(h.members);
  for (const auto& h : parallel) b.insert(h.members);
  CHECK(a == b);
}

TEST_CASE("is_cyclic_subgroup") {
  ExplicitGroup g22{{2, 2}};
  CHECK(is_cyclic_subgroup(span(g22, {}), g22));
  CHECK_FALSE(is_cyclic_subgroup(span(g22, {{1, 0}, {0, 1}}), g22));
  ExplicitGroup g24{{2, 4}};
  CHECK(is_cyclic_subgroup(span(g24, {{1, 1}}), g24));
}

TEST_CASE("cross_check agreement") {
  for (auto g : {GroupDescriptor{{2}}, GroupDescriptor{{4, 8}},
                 GroupDescriptor{{2, 12}}, GroupDescriptor{{}}}) {
    auto rep = cross_check(g);
    CAPTURE(rep.group);
    CHECK(rep.ok());
  }
  auto rep = cross_check(GroupDescriptor{{4, 8}});
  Int total_all = 0, total_cyc = 0, total_max = 0;
  for (const auto& r : rep.rows) {
    if (r.kind == CountKind::AllSubgroups) total_all += *r.oracle;
    if (r.kind == CountKind::Cyclic) total_cyc += *r.oracle;
    if (r.kind == CountKind::Maximal) total_max += *r.oracle;
  }
  CHECK(total_all == 22);
  CHECK(total_cyc == 14);
  CHECK(total_max == 3);
}

TEST_CASE("cross_check json shape") {
  auto rep = cross_check(GroupDescriptor{{2}});
  auto js = rep.to_json();
  CHECK(js.find("\"group\":\"2\"") != std::string::npos);
  CHECK(js.find("\"mismatches\":0") != std::string::npos);
  CHECK(js.find("\"match\":true") != std::string::npos);
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(all_subgroups(ExplicitGroup{{64, 64, 2}}),
                  ResourceLimitError);
  CHECK_NOTHROW(all_subgroups(ExplicitGroup{{16, 17}}, 16 * 17));
}
