#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "transvect/ring.hpp"

using namespace transvect;

TEST_CASE("descriptor parsing and printing") {
    CHECK(Ring::parse("zmod:9").to_string() == "zmod:9");
    CHECK(Ring::parse("gf:5").to_string() == "gf:5");
    CHECK(Ring::parse("dyadic").to_string() == "dyadic");
    CHECK(Ring::parse("poly:dyadic:a,b,x").to_string() == "poly:dyadic:a,b,x");
    CHECK(Ring::parse("poly:zmod:9:x,y").vars().size() == 2);
    CHECK_THROWS(Ring::parse("zmod:8"));
    CHECK_THROWS(Ring::parse("gf:9"));
    CHECK_THROWS(Ring::parse("gf:2"));
    CHECK_THROWS(Ring::parse("poly:dyadic:x,x"));
    CHECK_THROWS(Ring::parse("poly:poly:dyadic:x:y"));
}

TEST_CASE("ideal membership") {
    Ring z9 = Ring::parse("zmod:9");
    Ideal I = Ideal::parse(z9, "ideal:3");
    CHECK(ideal_contains(I, z9.from_int(6)));
    CHECK_FALSE(ideal_contains(I, z9.from_int(1)));
    CHECK(I.additive_generator() == z9.from_int(3));

    Ring p = Ring::parse("poly:dyadic:a,x");
    Ideal J = Ideal::parse(p, "ideal:vars:x");
    CHECK(J.contains(p.parse_element("a*x + x^2")));
    CHECK_FALSE(J.contains(p.parse_element("a")));
    CHECK(J.contains(p.zero()));

    CHECK(Ideal::parse(z9, "ideal:0").contains(z9.zero()));
    CHECK_FALSE(Ideal::parse(z9, "ideal:0").contains(z9.one()));
    CHECK(Ideal::parse(z9, "ideal:2").is_full());

    Ring d = Ring::dyadic();
    Ideal D = Ideal::principal(d, d.from_int(6));
    CHECK(D.contains(d.parse_element("3/2^4")));
    CHECK_FALSE(D.contains(d.parse_element("1/2")));
    CHECK_THROWS(I.contains(Ring::parse("zmod:15").one()));
}

TEST_CASE("localization") {
    Ring z15 = Ring::parse("zmod:15");
    auto L = localize_at_prime(z15, 3);
    CHECK(L.local.to_string() == "zmod:3");
    CHECK(L.map(z15.from_int(7)) == L.local.from_int(1));

    Ring z45 = Ring::parse("zmod:45");
    auto L2 = localize_at_prime(z45, 3);
    CHECK(L2.local.modulus() == 9);
    CHECK(L2.map(z45.from_int(10)) == L2.local.one());

    Ring z9 = Ring::parse("zmod:9");
    auto L3 = localize_at_prime(z9, 3);
    for (auto& x : z9.elements()) CHECK(L3.map(x).constant_term().num == x.constant_term().num);
    CHECK_THROWS(localize_at_prime(z9, 5));
    CHECK_THROWS(localize_at_prime(z15, 2));
}

TEST_CASE("sampling is deterministic") {
    Ring z5 = Ring::parse("zmod:5");
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 50; ++i) {
        auto x = sample_element(z5, a);
        CHECK(x == sample_element(z5, b));
        CHECK(x.constant_term().num < 5);
    }
    Ring p = Ring::parse("poly:dyadic:a");
    SampleBounds bnd;
    bnd.max_degree = 0;
    std::mt19937_64 c(1);
    for (int i = 0; i < 20; ++i) CHECK(sample_element(p, c, &bnd).is_constant());
    CHECK_THROWS(sample_element(p, c));
    CHECK_THROWS(sample_element(Ring::dyadic(), c));
}

static void check_axioms(const Ring& r, const SampleBounds* bnd) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        auto x = sample_element(r, rng, bnd), y = sample_element(r, rng, bnd), z = sample_element(r, rng, bnd);
        REQUIRE((x + y) + z == x + (y + z));
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(x * y == y * x);
        REQUIRE(x + y == y + x);
        REQUIRE(x - x == r.zero());
        REQUIRE(r.parse_element(x.to_string()) == x);
    }
}

TEST_CASE("ring axioms on samples") {
    SampleBounds bnd;
    for (const char* d : {"zmod:9", "zmod:15", "gf:7"}) check_axioms(Ring::parse(d), nullptr);
    check_axioms(Ring::dyadic(), &bnd);
    check_axioms(Ring::parse("poly:dyadic:a,b,x"), &bnd);
    check_axioms(Ring::parse("poly:zmod:9:x,y"), &bnd);
}

TEST_CASE("two is a unit") {
    for (const char* d : {"zmod:3", "zmod:9", "zmod:15", "gf:5", "dyadic", "poly:dyadic:x", "poly:gf:7:y"}) {
        Ring r = Ring::parse(d);
        CHECK(r.from_int(2) * r.inverse_of_two() == r.one());
    }
    Ring d = Ring::dyadic();
    CHECK(d.inverse_of_two().to_string() == "1/2^1");
    CHECK(d.parse_element("3/2^2 + 1/2^2").to_string() == "1");
}

TEST_CASE("CRT projections") {
    Ring z45 = Ring::parse("zmod:45");
    std::vector<Localization> locs;
    for (auto p : prime_divisors(45)) locs.push_back(localize_at_prime(z45, p));
    REQUIRE(locs.size() == 2);
    std::mt19937_64 rng(3);
    std::set<std::pair<std::int64_t, std::int64_t>> images;
    for (auto& x : z45.elements()) {
        auto key = std::make_pair(locs[0].map(x).constant_term().num, locs[1].map(x).constant_term().num);
        CHECK(images.insert(key).second);
    }
    for (int i = 0; i < 1000; ++i) {
        auto x = sample_element(z45, rng), y = sample_element(z45, rng);
        for (auto& L : locs) {
            CHECK(L.map(x + y) == L.map(x) + L.map(y));
            CHECK(L.map(x * y) == L.map(x) * L.map(y));
        }
    }
}

TEST_CASE("canonical printing") {
    Ring p = Ring::parse("poly:dyadic:a,b,x");
    auto e = p.parse_element("x + a*b*2 - x + 1/2*x^2");
    CHECK(e.to_string() == "2*a*b + 1/2^1*x^2");
    CHECK(p.parse_element(e.to_string()) == e);
    auto y = p.parse_element("(a - b)^2");
    CHECK(y.to_string() == "a^2 - 2*a*b + b^2");
    CHECK(p.parse_element("-x").to_string() == "-x");
    Ring q = Ring::parse("poly:zmod:9:x");
    CHECK(q.parse_element("-x").to_string() == "8*x");
    auto s = p.parse_element("a*x^3 + x");
    CHECK(s.valuation(p.var_index("x")) == 1);
    CHECK(s.divide_by_var_power(p.var_index("x"), 1) == p.parse_element("a*x^2 + 1"));
    CHECK(s.substitute(p.var_index("x"), p.parse_element("2*b")) == p.parse_element("8*a*b^3 + 2*b"));
}
