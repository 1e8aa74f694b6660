#include <doctest.h>

#include <algorithm>

#include "nclam/enumerate.hpp"
#include "nclam/errors.hpp"

using namespace nclam;

TEST_CASE("noncrossing partition counts follow the Catalan numbers") {
    CHECK(enumerate_ncp(1).objects.size() == 1);
    CHECK(enumerate_ncp(3).objects.size() == 5);
    auto t4 = enumerate_ncp(4);
    CHECK(t4.objects.size() == 14);
    auto present = check_noncrossing(4, {{0, 2}, {1}, {3}});
    CHECK(std::find(t4.objects.begin(), t4.objects.end(), present) != t4.objects.end());
    // the crossing diameters {{0,2},{1,3}} are filtered out
    for (const auto& p : t4.objects) CHECK(p.to_line() != "n=4; 0 2 | 1 3");

    for (int n = 1; n <= 8; ++n) {
        CHECK(enumerate_ncp(n).objects.size() == catalan(n));
        CHECK(enumerate_dyck(2 * n).objects.size() == catalan(n));
    }
}

TEST_CASE("pair partition counts") {
    CHECK(enumerate_pair(2).objects.size() == 1);
    CHECK(enumerate_pair(4).objects.size() == 2);
    CHECK(enumerate_pair(6).objects.size() == 5);
    for (int m = 2; m <= 12; m += 2)
        CHECK(enumerate_pair(m).objects.size() == catalan(m / 2));
}

TEST_CASE("catalan closed form") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(4) == 14);
    CHECK(catalan(8) == 1430);
    CHECK(catalan(10) == 16796);
    CHECK(enumerate_dyck(20).objects.size() == catalan(10));
}

TEST_CASE("tables are canonical: sorted, no duplicates") {
    auto t = enumerate_ncp(6);
    CHECK(std::is_sorted(t.objects.begin(), t.objects.end()));
    CHECK(std::adjacent_find(t.objects.begin(), t.objects.end()) == t.objects.end());
    auto d = enumerate_dyck(12);
    CHECK(std::is_sorted(d.objects.begin(), d.objects.end()));
    CHECK(std::adjacent_find(d.objects.begin(), d.objects.end()) == d.objects.end());
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_ncp(13), TooLarge);
    CHECK_THROWS_AS(enumerate_pair(18), TooLarge);
    CHECK_THROWS_AS(enumerate_pair(7), TooLarge);
    CHECK_THROWS_AS(enumerate_dyck(22), TooLarge);
    CHECK_THROWS_AS(enumerate_dyck(3), TooLarge);
}
