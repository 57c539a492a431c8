#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hessberg/errors.hpp"
#include "hessberg/root_system.hpp"

using namespace hessberg;

namespace {

RootSystem make(const std::string& type) { return RootSystem(parse_cartan_type(type)); }

Root rt(std::vector<int> c) { return Root{std::move(c)}; }

}  // namespace

TEST_CASE("cartan type parsing") {
    CHECK(parse_cartan_type("A1").name() == "A1");
    CHECK(parse_cartan_type("G2").name() == "G2");
    CHECK(parse_cartan_type("E8").rank == 8);
    CHECK_THROWS_AS(parse_cartan_type("A0"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("B1"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("C2"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("D3"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("E9"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("F5"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("Z9"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("A"), InputError);
    CHECK_THROWS_AS(parse_cartan_type("17"), InputError);
}

TEST_CASE("cartan matrices for the rank-2 types") {
    CHECK(CartanDatum::standard('A', 2).matrix ==
          std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    // alpha_1 is the short root of B2.
    CHECK(CartanDatum::standard('B', 2).matrix ==
          std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
    CHECK(CartanDatum::standard('G', 2).matrix ==
          std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
}

TEST_CASE("cartan matrix validation") {
    CartanDatum c = CartanDatum::standard('A', 2);
    c.matrix[0][1] = 1;
    CHECK_THROWS_AS(c.check(), InputError);
    c = CartanDatum::standard('A', 2);
    c.matrix[0][0] = 1;
    CHECK_THROWS_AS(c.check(), InputError);
    c = CartanDatum::standard('C', 3);
    c.matrix[0][1] = -1;  // no longer the standard C3 table
    CHECK_THROWS_AS(c.check(), InputError);
}

TEST_CASE("positive root counts for every supported family") {
    const std::pair<const char*, int> expected[] = {
        {"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},  {"B3", 9},
        {"B4", 16}, {"C3", 9},  {"C4", 16}, {"D4", 12}, {"D5", 20}, {"E6", 36},
        {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6},
    };
    for (const auto& [type, count] : expected) {
        RootSystem rs = make(type);
        CHECK_MESSAGE(rs.num_positive() == count, type);
        CHECK(rs.num_roots() == 2 * count);
    }
}

TEST_CASE("positive roots are sorted by height then lexicographically") {
    RootSystem rs = make("A2");
    CHECK(rs.positive_root(0) == rt({0, 1}));
    CHECK(rs.positive_root(1) == rt({1, 0}));
    CHECK(rs.positive_root(2) == rt({1, 1}));

    RootSystem g2 = make("G2");
    CHECK(g2.positive_root(0) == rt({0, 1}));
    CHECK(g2.positive_root(1) == rt({1, 0}));
    CHECK(g2.positive_root(2) == rt({1, 1}));
    CHECK(g2.positive_root(3) == rt({2, 1}));
    CHECK(g2.positive_root(4) == rt({3, 1}));
    CHECK(g2.positive_root(5) == rt({3, 2}));
}

TEST_CASE("highest roots") {
    CHECK(make("A2").positive_root(make("A2").theta_id()) == rt({1, 1}));
    CHECK(make("A3").positive_root(make("A3").theta_id()) == rt({1, 1, 1}));
    CHECK(make("B2").positive_root(make("B2").theta_id()) == rt({2, 1}));
    CHECK(make("B3").positive_root(make("B3").theta_id()) == rt({2, 2, 1}));
    CHECK(make("C3").positive_root(make("C3").theta_id()) == rt({1, 2, 2}));
    CHECK(make("D4").positive_root(make("D4").theta_id()) == rt({1, 2, 1, 1}));
    CHECK(make("G2").positive_root(make("G2").theta_id()) == rt({3, 2}));
    CHECK(make("F4").positive_root(make("F4").theta_id()) == rt({2, 3, 4, 2}));
    CHECK(make("E8").positive_root(make("E8").theta_id()) == rt({2, 3, 4, 6, 5, 4, 3, 2}));
}

TEST_CASE("id arithmetic round trips") {
    RootSystem rs = make("B3");
    for (int id = 0; id < rs.num_roots(); ++id) {
        CHECK(rs.root(rs.negate_id(id)) == rs.root(id).negated());
        CHECK(rs.negate_id(rs.negate_id(id)) == id);
        CHECK(rs.id_of(rs.root(id)) == id);
    }
    for (int p = 0; p < rs.num_positive(); ++p) {
        CHECK(rs.positive_id_of(rs.positive_root(p)) == p);
        CHECK(rs.pos_index(rs.negate_id(p)) == p);
    }
    CHECK(!rs.id_of(rt({5, 5, 5})).has_value());
    CHECK(!rs.positive_id_of(rt({0, 0, -1})).has_value());
}

TEST_CASE("simple root bookkeeping") {
    RootSystem rs = make("A2");
    // ids 0,1 are the simples, but in lex order: alpha_2 before alpha_1.
    CHECK(rs.simple_pos_id(0) == 1);
    CHECK(rs.simple_pos_id(1) == 0);
    CHECK(rs.simple_index_of(0) == 1);
    CHECK(rs.simple_index_of(1) == 0);
    CHECK(!rs.simple_index_of(2).has_value());
}

TEST_CASE("simple reflections act correctly") {
    RootSystem a2 = make("A2");
    CHECK(reflect(a2, rt({0, 1}), rt({1, 0})) == rt({1, 1}));
    CHECK(reflect(a2, rt({1, 0}), rt({1, 0})) == rt({-1, 0}));
    CHECK(reflect(a2, rt({1, 1}), rt({1, 0})) == rt({0, 1}));

    RootSystem g2 = make("G2");
    CHECK(reflect(g2, rt({0, 1}), rt({1, 0})) == rt({3, 1}));
    CHECK(reflect(g2, rt({1, 0}), rt({0, 1})) == rt({1, 1}));

    CHECK_THROWS_AS(reflect(a2, rt({1, 1}), rt({1, 1})), InputError);  // not simple
    CHECK_THROWS_AS(reflect(a2, rt({2, 1}), rt({1, 0})), InputError);  // not a root
}

TEST_CASE("reflection permutations are involutions and negate their root") {
    for (const char* type : {"A3", "B3", "C3", "G2", "F4"}) {
        RootSystem rs = make(type);
        for (int p = 0; p < rs.num_positive(); ++p) {
            const RootPerm& perm = rs.reflection_perm(p);
            CHECK(perm[p] == static_cast<std::uint16_t>(rs.negate_id(p)));
            for (int id = 0; id < rs.num_roots(); ++id) {
                CHECK(perm[perm[id]] == id);
                CHECK(perm[rs.negate_id(id)] == rs.negate_id(perm[id]));
            }
        }
    }
}

TEST_CASE("pairing matches the Cartan matrix") {
    RootSystem rs = make("G2");
    CHECK(rs.pairing(rt({1, 0}), 0) == 2);
    CHECK(rs.pairing(rt({1, 0}), 1) == -1);
    CHECK(rs.pairing(rt({0, 1}), 0) == -3);
    // theta pairs nonnegatively with every simple root
    for (int i = 0; i < 2; ++i) CHECK(rs.pairing(rt({3, 2}), i) >= 0);
}

TEST_CASE("dominance order and upper sets") {
    RootSystem rs = make("A2");
    CHECK(leq(rt({1, 0}), rt({1, 1})));
    CHECK(!leq(rt({1, 1}), rt({1, 0})));
    CHECK(!leq(rt({1, 0}), rt({0, 1})));

    RootSet up = upper_set(rs, 0);  // roots >= alpha_1
    CHECK(up.count() == 2);
    CHECK(up.test(*rs.positive_id_of(rt({1, 0}))));
    CHECK(up.test(*rs.positive_id_of(rt({1, 1}))));
    CHECK(!up.test(*rs.positive_id_of(rt({0, 1}))));

    RootSystem g2 = make("G2");
    CHECK(upper_set(g2, 0).count() == 5);  // everything except alpha_2
    CHECK(upper_set(g2, 1).count() == 5);  // everything except alpha_1
}

TEST_CASE("closure detection with witness triples") {
    RootSystem rs = make("A2");
    RootSet s;
    s.set(*rs.positive_id_of(rt({1, 0})));
    s.set(*rs.positive_id_of(rt({0, 1})));
    auto v = closure_violation(rs, s);
    REQUIRE(v.has_value());
    CHECK(rs.root(v->sum) == rt({1, 1}));
    CHECK(!is_closed(rs, s));

    s.set(*rs.positive_id_of(rt({1, 1})));
    CHECK(is_closed(rs, s));

    // closure is checked over all ids, negatives included
    RootSet t;
    t.set(*rs.positive_id_of(rt({1, 1})));
    t.set(rs.negate_id(*rs.positive_id_of(rt({1, 0}))));
    CHECK(!is_closed(rs, t));  // (1,1) + (-1,0) = (0,1) missing
    t.set(*rs.positive_id_of(rt({0, 1})));
    CHECK(is_closed(rs, t));

    CHECK(is_closed(rs, std::vector<Root>{rt({1, 0}), rt({1, 1})}));
    CHECK(!is_closed(rs, std::vector<Root>{rt({1, 0}), rt({0, 1})}));
}

TEST_CASE("partial sum chains") {
    RootSystem a2 = make("A2");
    auto chain = partial_sum_chain(a2, rt({1, 1}));
    REQUIRE(chain.size() == 2);
    CHECK(chain[0] == rt({1, 0}));  // lex tie-break removes alpha_2 last
    CHECK(chain[1] == rt({0, 1}));

    RootSystem g2 = make("G2");
    auto theta_chain = partial_sum_chain(g2, rt({3, 2}));
    REQUIRE(theta_chain.size() == 5);
    CHECK(theta_chain[0] == rt({1, 0}));
    CHECK(theta_chain[1] == rt({0, 1}));
    CHECK(theta_chain[2] == rt({1, 0}));
    CHECK(theta_chain[3] == rt({1, 0}));
    CHECK(theta_chain[4] == rt({0, 1}));
    // every prefix sum is a positive root
    Root acc{std::vector<int>(2, 0)};
    for (const Root& step : theta_chain) {
        for (int i = 0; i < 2; ++i) acc.coeffs[i] += step.coeffs[i];
        CHECK(g2.positive_id_of(acc).has_value());
    }
    CHECK(acc == rt({3, 2}));

    CHECK_THROWS_AS(partial_sum_chain(a2, rt({2, 1})), InputError);
}

TEST_CASE("partial sum chains exist for every positive root, rank <= 4") {
    for (const char* type : {"A3", "B4", "C4", "D4", "F4", "G2"}) {
        RootSystem rs = make(type);
        for (int p = 0; p < rs.num_positive(); ++p) {
            auto chain = partial_sum_chain(rs, rs.positive_root(p));
            CHECK(static_cast<int>(chain.size()) == rs.positive_root(p).height());
        }
    }
}

TEST_CASE("theta is the unique maximal root") {
    for (const char* type : {"A3", "B3", "C3", "D4", "F4", "G2", "E6"}) {
        RootSystem rs = make(type);
        const Root& theta = rs.positive_root(rs.theta_id());
        for (int p = 0; p < rs.num_positive(); ++p) CHECK(leq(rs.positive_root(p), theta));
    }
}

TEST_CASE("roots come in opposite pairs and mixed-sign roots do not exist") {
    RootSystem rs = make("D4");
    std::set<std::vector<int>> seen;
    for (int id = 0; id < rs.num_roots(); ++id) {
        const Root r = rs.root(id);
        CHECK((r.is_positive() || r.is_negative()));
        CHECK(seen.insert(r.coeffs).second);
    }
}
