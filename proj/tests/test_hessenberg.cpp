#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "hessberg/errors.hpp"
#include "hessberg/hessenberg.hpp"

using namespace hessberg;

namespace {

RootSystem make(const std::string& type) { return RootSystem(parse_cartan_type(type)); }

Root rt(std::vector<int> c) { return Root{std::move(c)}; }

// every subset of the negative roots, accepted iff closure holds
int brute_force_space_count(const RootSystem& rs) {
    const int m = rs.num_positive();
    REQUIRE(m <= 10);
    int count = 0;
    for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << m); ++bits) {
        RootSet neg;
        for (int j = 0; j < m; ++j)
            if (bits >> j & 1) neg.set(j);
        if (!hessenberg_violation(rs, neg)) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("extreme spaces") {
    RootSystem rs = make("A2");
    CHECK(hessenberg_minimal().neg.none());
    CHECK(hessenberg_full(rs).neg.count() == 3);
    CHECK(!hessenberg_violation(rs, hessenberg_minimal().neg));
    CHECK(!hessenberg_violation(rs, hessenberg_full(rs).neg));
}

TEST_CASE("validation catches non-ideals with a witness triple") {
    RootSystem rs = make("A2");
    RootSet neg;
    neg.set(*rs.positive_id_of(rt({1, 1})));  // -(a1+a2) alone
    auto v = hessenberg_violation(rs, neg);
    REQUIRE(v.has_value());
    CHECK(v->beta == rt({-1, -1}));
    CHECK(v->sum.is_negative());
    try {
        validate_hessenberg(rs, neg);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("escapes the space") != std::string::npos);
    }
}

TEST_CASE("negative part must be a lower ideal of the root poset") {
    RootSystem rs = make("B2");
    RootSet neg;
    neg.set(*rs.positive_id_of(rt({1, 0})));
    neg.set(*rs.positive_id_of(rt({0, 1})));
    CHECK(!hessenberg_violation(rs, neg));

    // {-(2a1+a2), -a1}: -(2a1+a2) + a2 = -2a1 is not a root, but
    // -(2a1+a2) + a1 = -(a1+a2) is one and is missing.
    RootSet bad;
    bad.set(*rs.positive_id_of(rt({2, 1})));
    bad.set(*rs.positive_id_of(rt({1, 0})));
    auto v = hessenberg_violation(rs, bad);
    REQUIRE(v.has_value());
    CHECK(v->sum == rt({-1, -1}));
}

TEST_CASE("construction from explicit negative roots") {
    RootSystem rs = make("A2");
    HessenbergSpace h = hessenberg_from_negative_roots(rs, {rt({-1, 0}), rt({0, -1})});
    CHECK(h.neg.count() == 2);
    CHECK(in_space(rs, h, rs.negate_id(*rs.positive_id_of(rt({1, 0})))));
    CHECK(!in_space(rs, h, rs.negate_id(*rs.positive_id_of(rt({1, 1})))));
    // positives are always members
    for (int p = 0; p < rs.num_positive(); ++p) CHECK(in_space(rs, h, p));

    CHECK_THROWS_AS(hessenberg_from_negative_roots(rs, {rt({1, 0})}), InputError);
    CHECK_THROWS_AS(hessenberg_from_negative_roots(rs, {rt({-2, -1})}), InputError);
    CHECK_THROWS_AS(hessenberg_from_negative_roots(rs, {rt({-1, -1})}), InputError);
}

TEST_CASE("enumeration counts at small rank") {
    CHECK(enumerate_hessenberg(make("A1")).size() == 2);
    CHECK(enumerate_hessenberg(make("A2")).size() == 5);
    CHECK(enumerate_hessenberg(make("A3")).size() == 14);
    CHECK(enumerate_hessenberg(make("A4")).size() == 42);  // Catalan numbers for type A
    CHECK(enumerate_hessenberg(make("B2")).size() == 6);
    CHECK(enumerate_hessenberg(make("G2")).size() == 8);
}

TEST_CASE("enumeration matches the brute-force subset filter") {
    for (const char* type : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
        RootSystem rs = make(type);
        CHECK_MESSAGE(static_cast<int>(enumerate_hessenberg(rs).size()) ==
                          brute_force_space_count(rs),
                      type);
    }
}

TEST_CASE("enumeration is sorted, deduplicated, and closure-clean") {
    for (const char* type : {"A3", "B3", "D4", "F4"}) {
        RootSystem rs = make(type);
        const auto spaces = enumerate_hessenberg(rs);
        CHECK(spaces.front().neg.none());
        CHECK(spaces.back().neg == rs.positive_universe());
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            CHECK(!hessenberg_violation(rs, spaces[i].neg));
            if (i > 0) {
                const int a = spaces[i - 1].neg.count(), b = spaces[i].neg.count();
                const bool ordered =
                    a < b || (a == b && RootSet::compare_value(spaces[i - 1].neg,
                                                               spaces[i].neg) < 0);
                CHECK(ordered);
            }
        }
    }
}

TEST_CASE("enumeration is guarded above rank 4") {
    CHECK_THROWS_AS(enumerate_hessenberg(make("A5")), InputError);
    CHECK_NOTHROW(enumerate_hessenberg(make("D4")));
}

TEST_CASE("type A Hessenberg functions") {
    RootSystem rs = make("A2");
    CHECK(hessenberg_from_function(rs, {1, 2, 3}) == hessenberg_minimal());
    CHECK(hessenberg_from_function(rs, {3, 3, 3}) == hessenberg_full(rs));

    HessenbergSpace h = hessenberg_from_function(rs, {2, 3, 3});
    CHECK(h.neg.count() == 2);
    CHECK(h.neg.test(*rs.positive_id_of(rt({1, 0}))));
    CHECK(h.neg.test(*rs.positive_id_of(rt({0, 1}))));
    CHECK(!h.neg.test(*rs.positive_id_of(rt({1, 1}))));

    // h(1)=3 pulls in e3-e1 = a1+a2 as well
    CHECK(hessenberg_from_function(rs, {3, 3, 3}).neg.test(*rs.positive_id_of(rt({1, 1}))));
}

TEST_CASE("Hessenberg function validation") {
    RootSystem rs = make("A2");
    CHECK_THROWS_AS(hessenberg_from_function(rs, {1, 2}), InputError);       // wrong arity
    CHECK_THROWS_AS(hessenberg_from_function(rs, {0, 2, 3}), InputError);    // h(i) < i
    CHECK_THROWS_AS(hessenberg_from_function(rs, {1, 2, 4}), InputError);    // h(i) > n
    CHECK_THROWS_AS(hessenberg_from_function(rs, {3, 2, 3}), InputError);    // decreasing
    CHECK_THROWS_AS(hessenberg_from_function(make("B2"), {1, 2}), InputError);  // not type A
}

TEST_CASE("every nondecreasing h lands on an enumerated space, n <= 4") {
    // type A_{n-1} spaces are exactly the images of Hessenberg functions
    for (int n = 2; n <= 4; ++n) {
        RootSystem rs = make("A" + std::to_string(n - 1));
        const auto spaces = enumerate_hessenberg(rs);
        std::vector<std::vector<int>> all_h;
        std::vector<int> h(n);
        // enumerate all functions with i <= h(i) <= n, h nondecreasing
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n) {
                all_h.push_back(h);
                return;
            }
            const int lo = std::max(i + 1, i > 0 ? h[i - 1] : 1);
            for (int v = lo; v <= n; ++v) {
                h[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        CHECK(all_h.size() == spaces.size());  // bijection with ideals (Catalan)
        for (const auto& fn : all_h) {
            const HessenbergSpace sp = hessenberg_from_function(rs, fn);
            bool found = false;
            for (const auto& s : spaces) found = found || s == sp;
            CHECK(found);
        }
    }
}

TEST_CASE("negative simple membership probe") {
    RootSystem rs = make("A2");
    CHECK(contains_negative_simples(rs, hessenberg_full(rs)));
    CHECK(contains_negative_simples(rs, hessenberg_from_function(rs, {2, 3, 3})));
    CHECK(!contains_negative_simples(rs, hessenberg_minimal()));
    CHECK(!contains_negative_simples(rs, hessenberg_from_negative_roots(rs, {rt({0, -1})})));
}
