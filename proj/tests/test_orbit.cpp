#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "transvect/orbit.hpp"

using namespace transvect;

namespace {

nlohmann::json golden() {
    const char* env = std::getenv("TRANSVECT_FIXTURES");
    std::string dir = env ? env : TRANSVECT_FIXTURES_DIR;
    std::ifstream in(dir + "/golden.json");
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

std::optional<Ideal> ideal(const Ring& r, const char* text) {
    if (!text) return std::nullopt;
    return Ideal::parse(r, text);
}

}  // namespace

TEST_CASE("unimodular rows") {
    auto g = golden();
    Ring f3 = Ring::parse("gf:3");
    CHECK(enumerate_unimodular(f3, 2).rows.size() == 8);
    Ring z9 = Ring::parse("zmod:9");
    CHECK(enumerate_unimodular(z9, 4).rows.size() == g["orbits"]["um4_zmod9_size"].get<std::size_t>());
    auto rel = enumerate_unimodular(z9, 4, Ideal::parse(z9, "3"));
    CHECK(rel.rows.size() == g["orbits"]["um4_zmod9_rel3_size"].get<std::size_t>());
    CHECK(rel.rows.front() == pack_row({1, 0, 0, 0}, 9));
    CHECK(std::is_sorted(rel.rows.begin(), rel.rows.end()));
    CHECK(unpack_row(pack_row({4, 3, 0, 6}, 9), 9, 4) == std::vector<int>{4, 3, 0, 6});
    Budget tiny;
    tiny.rows = 100;
    CHECK_THROWS_AS(enumerate_unimodular(z9, 4, std::nullopt, tiny), std::length_error);
}

TEST_CASE("generator sets") {
    Ring z9 = Ring::parse("zmod:9");
    Ideal I = Ideal::parse(z9, "3");
    CHECK(generators_for({GroupFamily::Symplectic, 4, Ring::parse("gf:3"), std::nullopt}).size() == 12);
    CHECK(generators_for({GroupFamily::SymplecticRelative, 4, z9, I}).size() == 12 * 9);
    CHECK(generators_for({GroupFamily::LinearFirstRowCol, 3, z9, I}).size() == 4);
    CHECK_THROWS(generators_for({GroupFamily::Symplectic, 3, z9, std::nullopt}));
    CHECK_THROWS(generators_for({GroupFamily::LinearRelative, 4, z9, std::nullopt}));
    CHECK(parse_family("esp-rel") == GroupFamily::SymplecticRelative);
    CHECK_THROWS(parse_family("sl"));
}

TEST_CASE("orbit partitions") {
    Ring f3 = Ring::parse("gf:3");
    auto um2 = enumerate_unimodular(f3, 2);
    auto reduced = orbit_partition(um2, generators_for({GroupFamily::Linear, 2, f3, std::nullopt}));
    auto full = orbit_partition(um2, generators_for({GroupFamily::Linear, 2, f3, std::nullopt}, true));
    CHECK(reduced.orbit_count() == 1);
    CHECK(reduced.orbit_of == full.orbit_of);
    auto um4 = enumerate_unimodular(f3, 4);
    auto sp = generators_for({GroupFamily::Symplectic, 4, f3, std::nullopt});
    auto p = orbit_partition(um4, sp);
    CHECK(p.orbit_count() == 1);
    CHECK(spot_check_closed(p, sp, 1000, 3));
    auto none = orbit_partition(um4, {});
    CHECK(none.orbit_count() == um4.rows.size());

    Ring z9 = Ring::parse("zmod:9");
    auto um = enumerate_unimodular(z9, 4);
    auto gens = generators_for({GroupFamily::LinearRelative, 4, z9, Ideal::parse(z9, "3")});
    auto a = orbit_partition(um, gens, 1);
    auto b = orbit_partition(um, gens, 4);
    std::reverse(gens.begin(), gens.end());
    auto c = orbit_partition(um, gens, 3);
    CHECK(a.orbit_of == b.orbit_of);
    CHECK(a.orbit_of == c.orbit_of);
    CHECK(a.frontier_sizes == b.frontier_sizes);
    CHECK(a.multiplications == b.multiplications);
    CHECK(spot_check_closed(a, gens, 1000, 5));

    auto rel = enumerate_unimodular(z9, 4, Ideal::parse(z9, "3"));
    CHECK_THROWS(orbit_partition(rel, generators_for({GroupFamily::Linear, 4, z9, std::nullopt})));
}

TEST_CASE("orbit equality") {
    struct Case {
        const char* ring;
        int size;
        const char* ideal;
    };
    for (auto c : {Case{"zmod:3", 4, nullptr}, Case{"zmod:9", 4, "3"}, Case{"zmod:15", 4, "5"}, Case{"zmod:3", 6, nullptr},
                   Case{"zmod:9", 4, "0"}}) {
        Ring r = Ring::parse(c.ring);
        auto rep = check_orbit_equality(r, c.size, ideal(r, c.ideal), 2);
        INFO(c.ring, " ", c.size);
        CHECK(rep.equal);
        CHECK(rep.linear_sizes == rep.symplectic_sizes);
    }
    CHECK_THROWS(check_orbit_equality(Ring::parse("zmod:3"), 3, std::nullopt));
}

TEST_CASE("dimension zero transitivity") {
    auto g = golden();
    Ring z9 = Ring::parse("zmod:9"), z15 = Ring::parse("zmod:15");
    auto a = check_dim0_transitivity(z9, 4, Ideal::parse(z9, "3"), 2);
    CHECK(a.ok());
    CHECK(a.relative_rows == 81);
    CHECK(a.orbit_count == g["orbits"]["um4_zmod9_e_rel3_orbits"].get<std::size_t>());
    auto b = check_dim0_transitivity(z15, 4, Ideal::parse(z15, "3"), 2);
    CHECK(b.ok());
    CHECK(b.relative_rows == g["orbits"]["um4_zmod15_rel3_size"].get<std::uint64_t>());
    CHECK(b.orbit_count == g["orbits"]["um4_zmod15_e_rel3_orbits"].get<std::size_t>());
    auto c = check_dim0_transitivity(z9, 4, std::nullopt);
    CHECK(c.ok());
    CHECK(c.orbit_count == 1);
    CHECK(check_dim0_transitivity(Ring::parse("gf:5"), 2, std::nullopt).orbit_count == 1);
}

TEST_CASE("closures") {
    auto g = golden();
    Ring f3 = Ring::parse("gf:3");
    auto id = subgroup_closure({SquareMatrix::identity(f3, 4)});
    CHECK(id.complete);
    CHECK(id.elements.size() == 1);
    auto sp = subgroup_closure(generators_for({GroupFamily::Symplectic, 4, f3, std::nullopt}));
    CHECK(sp.complete);
    // |Sp_4(F_q)| = q^4 (q^2 - 1)(q^4 - 1)
    CHECK(sp.elements.size() == 81u * 8u * 80u);
    CHECK(sp.elements.size() == g["closures"]["esp4_gf3"].get<std::size_t>());
    auto capped = subgroup_closure(generators_for({GroupFamily::Symplectic, 4, f3, std::nullopt}), {}, 1000);
    CHECK_FALSE(capped.complete);

    Ring z9 = Ring::parse("zmod:9");
    std::vector<SquareMatrix> small, conj;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            if (i != j) {
                small.push_back(elem_symplectic(z9, 2, i, j, z9.from_int(3)));
                conj.push_back(elem_symplectic(z9, 2, i, j, z9.one()));
            }
    auto normal = subgroup_closure(small, conj);
    CHECK(normal.elements.size() == g["closures"]["esp4_zmod9_rel3_normal"].get<std::size_t>());
    auto plain = subgroup_closure(small);
    CHECK(plain.elements.size() == g["closures"]["esp4_zmod9_ideal3_generated"].get<std::size_t>());
    for (const auto& k : plain.elements.keys()) CHECK(normal.elements.contains_key(k));
}

TEST_CASE("membership tests") {
    Ring z9 = Ring::parse("zmod:9");
    Ideal I = Ideal::parse(z9, "3");
    auto a = kernel_membership_test(z9, 4, I, 200, 7, 1);
    auto b = kernel_membership_test(z9, 4, I, 200, 7, 4);
    CHECK(a.ok());
    CHECK(a.members == 200);
    CHECK(a.members == b.members);
    CHECK(a.group_order == b.group_order);
    Ring f3 = Ring::parse("gf:3");
    CHECK(kernel_membership_test(f3, 4, Ideal::full(f3), 50, 1).ok());
    auto sq = square_ideal_inclusion_test(z9, 4, I, 100, 3);
    CHECK(sq.ok());
    CHECK(sq.factorizations_checked == 100);
    // In ℤ/15 the ideal (5) is idempotent, so the conjugated elements are nontrivial.
    Ring z15 = Ring::parse("zmod:15");
    auto idem = square_ideal_inclusion_test(z15, 4, Ideal::parse(z15, "5"), 40, 4);
    CHECK(idem.ok());
    CHECK(idem.group_order == 51840);
}
