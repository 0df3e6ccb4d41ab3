#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "transvect/normal_forms.hpp"

using namespace transvect;

namespace {

GeneratorWord random_linear(const Ring& r, int size, int len, std::mt19937_64& rng) {
    GeneratorWord w(r, size);
    for (int k = 0; k < len; ++k) {
        int i = 1 + static_cast<int>(bounded_draw(rng, size)), j = 1 + static_cast<int>(bounded_draw(rng, size - 1));
        if (j >= i) ++j;
        w.push(linear_atom(i, j, sample_element(r, rng)));
    }
    return w;
}

GeneratorWord random_relative(const Ring& r, int size, int len, const Ideal& I, std::mt19937_64& rng) {
    GeneratorWord w(r, size);
    w.tag = WordClass::Relative;
    w.ideal = I;
    RingElement g = I.additive_generator();
    for (int k = 0; k < len; ++k) {
        int i = 1 + static_cast<int>(bounded_draw(rng, size)), j = 1 + static_cast<int>(bounded_draw(rng, size - 1));
        if (j >= i) ++j;
        w.append(relative_generator(Family::Linear, size, i, j, sample_element(r, rng), g * sample_element(r, rng), I));
    }
    return w;
}

AlternatingForm form_from(const GeneratorWord& eps, int n) {
    const Ring& r = eps.ring;
    SquareMatrix E = direct_sum(SquareMatrix::identity(r, 1), eval_word(eps));
    return AlternatingForm(E.transpose() * standard_form(n, r).matrix() * E);
}

Row e1_times(const GeneratorWord& b, int n) {
    Row e(static_cast<std::size_t>(n), b.ring.zero());
    e[0] = b.ring.one();
    return row_times(e, eval_word(b));
}

}  // namespace

TEST_CASE("local ring witnesses") {
    CHECK(LocalRingWitness(Ring::parse("gf:5")).prime() == 5);
    LocalRingWitness w(Ring::parse("zmod:27"));
    CHECK(w.prime() == 3);
    CHECK(w.maximal_ideal().contains(w.ring().from_int(9)));
    CHECK_THROWS(LocalRingWitness(Ring::parse("zmod:15")));
    CHECK_THROWS(LocalRingWitness(Ring::parse("dyadic")));
}

TEST_CASE("unimodular completion") {
    Ring r = Ring::parse("gf:3");
    LocalRingWitness L(r);
    Row e = {r.one(), r.zero(), r.zero()};
    CHECK(complete_unimodular_local(e, L).atoms.empty());
    Row v = {r.zero(), r.one()};
    CHECK(e1_times(complete_unimodular_local(v, L), 2) == v);
    CHECK_THROWS(complete_unimodular_local(Row{r.zero(), r.zero()}, L));

    for (const char* desc : {"zmod:9", "zmod:27", "gf:5"}) {
        Ring s = Ring::parse(desc);
        LocalRingWitness M(s);
        std::mt19937_64 rng(17);
        for (int t = 0; t < 200; ++t) {
            int n = 2 + static_cast<int>(bounded_draw(rng, 4));
            Row u;
            for (int k = 0; k < n; ++k) u.push_back(sample_element(s, rng));
            bool unimodular = false;
            for (auto& x : u) unimodular = unimodular || x.is_unit();
            if (!unimodular) continue;
            auto b = complete_unimodular_local(u, M);
            REQUIRE(e1_times(b, n) == u);
            CHECK(static_cast<int>(b.atoms.size()) <= 2 * n);
        }
    }
}

TEST_CASE("relative unimodular completion") {
    Ring r = Ring::parse("zmod:9");
    LocalRingWitness L(r);
    Ideal I = Ideal::parse(r, "3");
    Row v = {r.from_int(4), r.from_int(3), r.zero(), r.from_int(3)};
    auto b = complete_unimodular_local(v, L, I);
    validate_tag(b);
    CHECK(b.tag == WordClass::Relative);
    CHECK(e1_times(b, 4) == v);
    auto m = eval_word(b);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(I.contains(m.at(i, j) - (i == j ? r.one() : r.zero())));
    CHECK_THROWS(complete_unimodular_local(Row{r.from_int(2), r.zero()}, L, I));
}

TEST_CASE("form reduction round trip") {
    for (const char* desc : {"gf:3", "gf:5", "zmod:9", "zmod:27"}) {
        Ring r = Ring::parse(desc);
        LocalRingWitness L(r);
        std::mt19937_64 rng(23);
        for (int n = 1; n <= 3; ++n) {
            auto psi = standard_form(n, r);
            CHECK(reduce_alternating_local(psi, L).atoms.empty());
            for (int t = 0; t < 30; ++t) {
                auto phi = form_from(n == 1 ? GeneratorWord(r, 1) : random_linear(r, 2 * n - 1, 6, rng), n);
                auto eps = reduce_alternating_local(phi, L);
                REQUIRE(verify_form_reduction(phi, eps));
            }
        }
        Ideal I = L.maximal_ideal();
        for (int t = 0; t < 30; ++t) {
            auto phi = form_from(random_relative(r, 3, 3, I, rng), 2);
            auto eps = reduce_alternating_local(phi, L, I);
            validate_tag(eps);
            CHECK(eps.tag == WordClass::Relative);
            REQUIRE(verify_form_reduction(phi, eps));
        }
    }
}

TEST_CASE("form reduction preconditions") {
    Ring r = Ring::parse("zmod:9");
    LocalRingWitness L(r);
    SquareMatrix m = standard_form(2, r).matrix();
    m.at(1, 2) = r.from_int(2);
    m.at(2, 1) = r.from_int(-2);
    CHECK_THROWS(reduce_alternating_local(AlternatingForm(m), L));
    GeneratorWord w(r, 3);
    w.push(linear_atom(1, 2, r.one()));
    CHECK_THROWS(reduce_alternating_local(form_from(w, 2), L, Ideal::parse(r, "3")));
}

TEST_CASE("semilocal reduction") {
    Ring r = Ring::parse("zmod:15");
    auto id = reduce_alternating_semilocal(standard_form(2, r));
    REQUIRE(id.size() == 2);
    for (auto& [p, f] : id) {
        CHECK(f.verified);
        CHECK(f.epsilon.atoms.empty());
    }
    Ring s = Ring::parse("zmod:45");
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        auto phi = form_from(random_linear(s, 3, 5, rng), 2);
        auto red = reduce_alternating_semilocal(phi, std::nullopt, 2);
        REQUIRE(red.size() == 2);
        CHECK(red.at(3).local.modulus() == 9);
        CHECK(red.at(3).verified);
        CHECK(red.at(5).verified);
    }
    Ring p = Ring::parse("zmod:7");
    CHECK(reduce_alternating_semilocal(standard_form(1, p)).size() == 1);
}
