#include <doctest.h>

#include "supermac/superpartition.hpp"

using namespace supermac;

TEST_CASE("validate") {
    auto p = SuperPartition::validate({3, 1});  // (3/2, 1/2)
    CHECK(p.sigma(0) == 1);
    CHECK(p.sigma(1) == 1);
    CHECK(SuperPartition::validate({}).length() == 0);
    CHECK_THROWS(SuperPartition::validate({1, 1}));   // repeated odd part
    CHECK_THROWS(SuperPartition::validate({2, 4}));   // increasing
    CHECK_THROWS(SuperPartition::validate({2, 0}));   // zero part
}

TEST_CASE("parse and print") {
    CHECK(SuperPartition::parse("3/2,1/2") == SuperPartition::validate({3, 1}));
    CHECK(SuperPartition::parse("2,1") == SuperPartition::validate({4, 2}));
    CHECK(SuperPartition::parse("0").length() == 0);
    CHECK(SuperPartition::validate({4, 3, 1}).to_string() == "2,3/2,1/2");
}

TEST_CASE("star and circledstar") {
    auto p = SuperPartition::parse("3/2");
    CHECK(p.star() == std::vector<int>{1});
    CHECK(p.circledstar() == std::vector<int>{2});
    auto r = SuperPartition::parse("1,1/2");
    CHECK(r.star() == std::vector<int>{1});
    CHECK(r.circledstar() == (std::vector<int>{1, 1}));
    CHECK(SuperPartition().star().empty());
    CHECK(SuperPartition().circledstar().empty());
}

TEST_CASE("encoding is bijective") {
    for (int l2 = 0; l2 <= 12; ++l2) {
        for (const auto& p : enumerate_level(l2)) {
            auto st = p.star();
            auto cs = p.circledstar();
            st.resize(cs.size(), 0);
            // (star + circledstar) reconstructs the doubled parts, the
            // difference reconstructs sigma.
            for (int i = 0; i < p.length(); ++i) {
                CHECK(st[i] + cs[i] == p.part2(i));
                CHECK(cs[i] - st[i] == p.sigma(i));
            }
        }
    }
}

TEST_CASE("fermion sign prefix") {
    auto p = SuperPartition::parse("3/2,1/2");
    CHECK(p.fermion_sign_prefix(1) == 1);
    CHECK(p.fermion_sign_prefix(2) == -1);
    auto q = SuperPartition::parse("2,1");
    CHECK(q.fermion_sign_prefix(3) == 1);
    CHECK_THROWS(q.fermion_sign_prefix(4));
}

TEST_CASE("enumerate") {
    auto level2 = enumerate_level(4);
    REQUIRE(level2.size() == 3);
    CHECK(level2[0] == SuperPartition::parse("2"));
    CHECK(level2[1] == SuperPartition::parse("3/2,1/2"));
    CHECK(level2[2] == SuperPartition::parse("1,1"));
    CHECK(enumerate_level(7).size() == 7);
    CHECK(enumerate_level(0).size() == 1);
    // counts match the character series through level 10
    auto series = character_series(20);
    for (int l2 = 0; l2 <= 20; ++l2)
        CHECK((long long)enumerate_level(l2).size() == series[l2]);
}
