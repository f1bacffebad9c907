#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tl/diagram.hpp"

using namespace tl;

namespace {

// Brute-force oracle: all perfect matchings on 2n points, filtered to the
// noncrossing ones by pairwise chord interleaving.
int count_noncrossing_matchings(int n) {
    std::vector<int> mate(2 * n, -1);
    int count = 0;
    std::function<void(int)> rec = [&](int p) {
        while (p < 2 * n && mate[p] != -1) ++p;
        if (p == 2 * n) {
            std::vector<std::pair<int, int>> chords;
            for (int i = 0; i < 2 * n; ++i)
                if (mate[i] > i) chords.emplace_back(i, mate[i]);
            for (auto [a, b] : chords)
                for (auto [c, d] : chords)
                    if (a < c && c < b && b < d) return;
            ++count;
            return;
        }
        for (int q = p + 1; q < 2 * n; ++q) {
            if (mate[q] != -1) continue;
            mate[p] = q;
            mate[q] = p;
            rec(p + 1);
            mate[p] = -1;
            mate[q] = -1;
        }
    };
    rec(0);
    return count;
}

PlanarDiagram section2_x() {
    return PlanarDiagram::from_pairs(
        5, {{"L1", "L2"}, {"L4", "L5"}, {"L3", "R1"}, {"R2", "R3"}, {"R4", "R5"}});
}

PlanarDiagram section2_y() {
    return PlanarDiagram::from_pairs(
        5, {{"L2", "L3"}, {"L1", "L4"}, {"L5", "R1"}, {"R2", "R3"}, {"R4", "R5"}});
}

}  // namespace

TEST_CASE("identity and generator diagrams") {
    CHECK(PlanarDiagram::identity(0).canonical_pairs().empty());
    CHECK(PlanarDiagram::identity(1).canonical_pairs() ==
          std::vector<std::pair<std::string, std::string>>{{"L1", "R1"}});
    CHECK(PlanarDiagram::identity(3).canonical_pairs() ==
          std::vector<std::pair<std::string, std::string>>{{"L1", "R1"}, {"L2", "R2"}, {"L3", "R3"}});
    CHECK(PlanarDiagram::generator(2, 1).canonical_pairs() ==
          std::vector<std::pair<std::string, std::string>>{{"L1", "L2"}, {"R1", "R2"}});
    CHECK(PlanarDiagram::generator(3, 2).canonical_pairs() ==
          std::vector<std::pair<std::string, std::string>>{{"L1", "R1"}, {"L2", "L3"}, {"R2", "R3"}});
    auto u4 = PlanarDiagram::generator(5, 4).canonical_pairs();
    CHECK(u4 == std::vector<std::pair<std::string, std::string>>{
                    {"L1", "R1"}, {"L2", "R2"}, {"L3", "R3"}, {"L4", "L5"}, {"R4", "R5"}});
    CHECK_THROWS_AS(PlanarDiagram::generator(2, 2), invalid_input);
}

TEST_CASE("composition and loop counting") {
    auto u1 = PlanarDiagram::generator(2, 1);
    auto [sq, loops] = compose(u1, u1);
    CHECK(sq == u1);
    CHECK(loops == 1);

    // U_1 U_2 U_1 = U_1 in TL_3
    auto a = PlanarDiagram::generator(3, 1);
    auto b = PlanarDiagram::generator(3, 2);
    auto [ab, l1] = compose(a, b);
    CHECK(l1 == 0);
    auto [aba, l2] = compose(ab, a);
    CHECK(l2 == 0);
    CHECK(aba == a);

    auto [xy, l3] = compose(section2_x(), section2_y());
    CHECK(l3 == 1);
    CHECK(xy == section2_x());

    CHECK_THROWS_AS(compose(PlanarDiagram::identity(2), PlanarDiagram::identity(3)), invalid_input);
}

TEST_CASE("composition is associative with additive loop counts") {
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate_diagrams(n);
        std::mt19937_64 rng(7);
        int trials = -1;  // exhaustive through n = 5
        auto check_triple = [](const PlanarDiagram& x, const PlanarDiagram& y, const PlanarDiagram& z) {
            auto [xy, l1] = compose(x, y);
            auto [xy_z, l2] = compose(xy, z);
            auto [yz, l3] = compose(y, z);
            auto [x_yz, l4] = compose(x, yz);
            CHECK(xy_z == x_yz);
            CHECK(l1 + l2 == l3 + l4);
        };
        if (trials < 0) {
            for (const auto& x : all)
                for (const auto& y : all)
                    for (const auto& z : all) check_triple(x, y, z);
        } else {
            for (int t = 0; t < trials; ++t)
                check_triple(all[rng() % all.size()], all[rng() % all.size()], all[rng() % all.size()]);
        }
    }
}

TEST_CASE("enumeration matches Catalan and the brute-force oracle") {
    CHECK(enumerate_diagrams(0).size() == 1);
    CHECK(enumerate_diagrams(3).size() == 5);
    CHECK(enumerate_diagrams(4).size() == 14);  // frozen from the matching oracle
    for (int n = 0; n <= 5; ++n) {
        auto all = enumerate_diagrams(n);
        CHECK(all.size() == catalan(n));
        CHECK(static_cast<int>(all.size()) == count_noncrossing_matchings(n));
        std::set<std::vector<std::pair<std::string, std::string>>> distinct;
        for (const auto& d : all) distinct.insert(d.canonical_pairs());
        CHECK(distinct.size() == all.size());
    }
    for (int n = 6; n <= 8; ++n) CHECK(enumerate_diagrams(n).size() == catalan(n));
}

TEST_CASE("section 2 diagrams scan to their Jones normal forms") {
    auto wx = diagram_to_jones_word(section2_x());
    REQUIRE(wx.segments.size() == 2);
    CHECK(wx.segments[0] == JonesWord::Segment{4, 4});
    CHECK(wx.segments[1] == JonesWord::Segment{1, 2});

    auto wy = diagram_to_jones_word(section2_y());
    REQUIRE(wy.segments.size() == 2);
    CHECK(wy.segments[0] == JonesWord::Segment{2, 4});
    CHECK(wy.segments[1] == JonesWord::Segment{1, 2});

    CHECK(diagram_to_jones_word(PlanarDiagram::identity(4)).is_identity());
}

TEST_CASE("jones word to diagram") {
    JonesWord empty{4, {}};
    CHECK(jones_word_to_diagram(empty) == PlanarDiagram::identity(4));
    JonesWord wx{5, {{4, 4}, {1, 2}}};
    CHECK(jones_word_to_diagram(wx) == section2_x());
    JonesWord wy{5, {{2, 4}, {1, 2}}};
    CHECK(jones_word_to_diagram(wy) == section2_y());
    JonesWord bad{3, {{1, 1}, {2, 2}}};  // increasing a's
    CHECK_THROWS_AS(jones_word_to_diagram(bad), invalid_input);
}

TEST_CASE("diagram <-> word round trip, n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            auto w = diagram_to_jones_word(d);
            w.validate();
            CHECK(jones_word_to_diagram(w) == d);
        }
    }
}

TEST_CASE("index and terminus of Jones words") {
    JonesWord w{5, {{4, 4}, {2, 3}}};  // (U_4)(U_2 U_3)
    CHECK(word_terminus(w) == 3);
    CHECK(word_index(w) == 2);
    JonesWord id{5, {}};
    CHECK(word_terminus(id) == infinite_index);
    CHECK(word_index(id) == infinite_index);
}

TEST_CASE("catalan, fine, jacobsthal numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(4) == 14);
    CHECK(catalan(8) == 1430);
    CHECK(fine_number(2) == 1);
    CHECK(fine_number(3) == 2);
    CHECK(fine_number(4) == 6);
    for (int n = 2; n <= 10; ++n) CHECK(catalan(n) == 2 * fine_number(n) + fine_number(n - 1));
    CHECK(jacobsthal_number(4) == 5);
    for (int n = 1; n <= 8; ++n)
        CHECK(enumerate_jacobsthal_sequences(n).size() == jacobsthal_number(n));
}

TEST_CASE("jacobsthal sequence enumeration") {
    CHECK(enumerate_jacobsthal_sequences(2) == std::vector<std::vector<int>>{{1}});
    CHECK(enumerate_jacobsthal_sequences(4) ==
          std::vector<std::vector<int>>{{3}, {1}, {3, 2}, {3, 1}, {3, 2, 1}});
    CHECK(enumerate_jacobsthal_sequences(1) == std::vector<std::vector<int>>{{}});
    for (int n = 1; n <= 7; ++n) {
        for (const auto& s : enumerate_jacobsthal_sequences(n)) {
            if (s.empty()) {
                CHECK(n % 2 == 1);
                continue;
            }
            CHECK((n - s[0]) % 2 == 1);
            CHECK(std::is_sorted(s.rbegin(), s.rend()));
        }
    }
}
