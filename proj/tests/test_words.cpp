#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "transvect/words.hpp"

using namespace transvect;

namespace {

Row sample_row(const Ring& r, int n, std::mt19937_64& rng) {
    Row v;
    for (int k = 0; k < n; ++k) v.push_back(sample_element(r, rng));
    return v;
}

GeneratorWord random_word(Family f, const Ring& r, int size, int len, std::mt19937_64& rng) {
    GeneratorWord w(r, size);
    for (int k = 0; k < len; ++k) {
        int i = 1 + static_cast<int>(bounded_draw(rng, size));
        int j = 1 + static_cast<int>(bounded_draw(rng, size - 1));
        if (j >= i) ++j;
        w.push(GeneratorAtom{f, i, j, sample_element(r, rng), false});
    }
    return w;
}

}  // namespace

TEST_CASE("sigma") {
    CHECK(sigma(1) == 2);
    CHECK(sigma(4) == 3);
    for (int k = 1; k <= 12; ++k) CHECK(sigma(sigma(k)) == k);
}

TEST_CASE("linear generators") {
    Ring r = Ring::parse("zmod:9");
    auto a = elem_linear(r, 3, 1, 2, r.from_int(4)), b = elem_linear(r, 3, 1, 2, r.from_int(7));
    CHECK(a * b == elem_linear(r, 3, 1, 2, r.from_int(11)));
    auto m = elem_linear(r, 2, 2, 1, r.from_int(5));
    CHECK(m.at(1, 1).is_one());
    CHECK(m.at(2, 1) == r.from_int(5));
    CHECK(m.at(1, 2).is_zero());
    CHECK_THROWS(elem_linear(r, 3, 2, 2, r.one()));
    CHECK_THROWS(elem_linear(r, 3, 1, 4, r.one()));
    std::mt19937_64 rng(3);
    for (int s = 0; s < 100; ++s) {
        int i = 1 + static_cast<int>(bounded_draw(rng, 4)), j = 1 + static_cast<int>(bounded_draw(rng, 3));
        if (j >= i) ++j;
        CHECK(determinant(elem_linear(r, 4, i, j, sample_element(r, rng))).is_one());
    }
}

TEST_CASE("symplectic generators") {
    Ring p = Ring::parse("poly:dyadic:z");
    RingElement z = p.var("z");
    auto s12 = elem_symplectic(p, 2, 1, 2, z);
    CHECK(s12 == elem_linear(p, 4, 1, 2, z));
    auto s13 = elem_symplectic(p, 2, 1, 3, z);
    SquareMatrix want = SquareMatrix::identity(p, 4);
    want.at(1, 3) = z;
    want.at(4, 2) = -z;
    CHECK(s13 == want);
    for (int n = 1; n <= 3; ++n) {
        auto psi = standard_form(n, p);
        for (int i = 1; i <= 2 * n; ++i)
            for (int j = 1; j <= 2 * n; ++j)
                if (i != j) CHECK(is_symplectic(elem_symplectic(p, n, i, j, z), psi));
    }
    Ring r = Ring::parse("zmod:9");
    std::mt19937_64 rng(9);
    for (int n = 2; n <= 3; ++n)
        for (int i = 1; i <= 2 * n; ++i)
            for (int j = 1; j <= 2 * n; ++j)
                if (i != j)
                    for (int s = 0; s < 20; ++s)
                        CHECK(is_symplectic(elem_symplectic(r, n, i, j, sample_element(r, rng)), standard_form(n, r)));
}

TEST_CASE("additivity") {
    Ring r = Ring::parse("zmod:15");
    std::mt19937_64 rng(1);
    for (auto f : {Family::Linear, Family::Symplectic})
        for (int size : {4, 6})
            for (int s = 0; s < 100; ++s) {
                int i = 1 + static_cast<int>(bounded_draw(rng, size)), j = 1 + static_cast<int>(bounded_draw(rng, size - 1));
                if (j >= i) ++j;
                auto x = sample_element(r, rng), y = sample_element(r, rng);
                REQUIRE(atom_matrix({f, i, j, x}, size) * atom_matrix({f, i, j, y}, size) ==
                        atom_matrix({f, i, j, x + y}, size));
            }
}

TEST_CASE("word evaluation and inverses") {
    Ring r = Ring::parse("zmod:9");
    CHECK(eval_word(GeneratorWord(r, 4)).is_identity());
    GeneratorWord w(r, 4);
    w.push(symplectic_atom(2, 1, r.from_int(3))).push(symplectic_atom(2, 1, r.from_int(-3)));
    CHECK(eval_word(w).is_identity());
    std::mt19937_64 rng(5);
    for (int s = 0; s < 100; ++s) {
        auto f = (s % 2) ? Family::Linear : Family::Symplectic;
        auto word = random_word(f, r, 4, 10, rng);
        GeneratorWord both = word;
        both.append(word.inverse());
        REQUIRE(eval_word(both).is_identity());
        SquareMatrix left = SquareMatrix::identity(r, 4);
        for (auto it = word.atoms.rbegin(); it != word.atoms.rend(); ++it) apply_left(*it, left);
        REQUIRE(left == eval_word(word));
    }
}

TEST_CASE("relative generators") {
    Ring r = Ring::parse("zmod:9");
    Ideal I = Ideal::parse(r, "3");
    auto w = relative_generator(Family::Symplectic, 4, 1, 3, r.one(), r.from_int(3), I);
    validate_tag(w);
    auto m = eval_word(w);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(I.reduce(m.at(i, j)) == (i == j ? r.one() : r.zero()));
    auto w0 = relative_generator(Family::Linear, 3, 1, 2, r.zero(), r.from_int(6), I);
    CHECK(eval_word(w0) == elem_linear(r, 3, 2, 1, r.from_int(6)));
    CHECK(eval_word(relative_generator(Family::Linear, 3, 1, 2, r.from_int(4), r.zero(), I)).is_identity());
    CHECK_THROWS(relative_generator(Family::Linear, 3, 1, 2, r.one(), r.one(), I));
}

TEST_CASE("rho and mu decompositions") {
    for (int n = 1; n <= 2; ++n) {
        std::vector<std::string> names = {"al", "be"};
        for (int k = 1; k <= 2 * n; ++k) names.push_back("q" + std::to_string(k));
        Ring p = Ring::polynomial(Ring::dyadic(), names);
        Row q;
        for (int k = 1; k <= 2 * n; ++k) q.push_back(p.var("q" + std::to_string(k)));
        auto psi = standard_form(n, p);
        auto big = direct_sum(standard_form(1, p).matrix(), psi.matrix());
        auto rho = rho_matrix(q, p.var("al"), psi), mu = mu_matrix(q, p.var("be"), psi);
        CHECK(eval_word(decompose_rho(q, p.var("al"))) == rho);
        CHECK(eval_word(decompose_mu(q, p.var("be"))) == mu);
        CHECK(is_symplectic(rho, AlternatingForm(big)));
        CHECK(is_symplectic(mu, AlternatingForm(big)));
        // The displayed conventions are not symplectic and the displayed products differ.
        CHECK_FALSE(is_symplectic(rho_matrix(q, p.var("al"), psi, Convention::Printed), AlternatingForm(big)));
        CHECK_FALSE(eval_word(decompose_rho(q, p.var("al"), Convention::Printed)) ==
                    rho_matrix(q, p.var("al"), psi, Convention::Printed));
    }
    Ring r = Ring::parse("zmod:9");
    Row zero(2, r.zero());
    auto w = decompose_rho(zero, r.from_int(4));
    CHECK(w.atoms[0].to_string() == "se_2,1(4)");
    CHECK(eval_word(w) == elem_symplectic(r, 2, 2, 1, r.from_int(4)));
}

TEST_CASE("bass transvection") {
    Ring r = Ring::parse("gf:5");
    auto phi = standard_form(2, r);
    std::mt19937_64 rng(4);
    int tested = 0;
    while (tested < 100) {
        Row u = sample_row(r, 4, rng), v = sample_row(r, 4, rng);
        auto uf = row_times(u, phi.matrix());
        RingElement uv = r.zero();
        for (int k = 0; k < 4; ++k) uv += uf[k] * v[k];
        if (!uv.is_zero()) continue;
        auto alpha = sample_element(r, rng);
        auto s = bass_symplectic_transvection(u, v, alpha, phi);
        Row nv;
        for (auto& x : v) nv.push_back(-x);
        auto t = bass_symplectic_transvection(u, nv, -alpha, phi);
        REQUIRE(is_symplectic(s, phi));
        REQUIRE((s * t).is_identity());
        ++tested;
    }
    Row u(4, r.zero()), v(4, r.zero());
    CHECK(bass_symplectic_transvection(u, v, r.from_int(3), phi).is_identity());
    u[0] = r.one();
    v[1] = r.one();
    CHECK_THROWS(bass_symplectic_transvection(u, v, r.zero(), phi));
}

TEST_CASE("linear transvections") {
    Ring r = Ring::parse("zmod:9");
    Row x = {r.one(), r.from_int(2)};
    auto m = elementary_linear_transvection(LinearTransvectionKind::Ex, x);
    CHECK(m.at(1, 1).is_one());
    CHECK(m.at(1, 2).is_one());
    CHECK(m.at(1, 3) == r.from_int(2));
    CHECK(m.at(2, 1).is_zero());
    CHECK(eval_word(linear_transvection_word(LinearTransvectionKind::Ex, x)) == m);
    auto s = elementary_linear_transvection(LinearTransvectionKind::EStar, x);
    CHECK(eval_word(linear_transvection_word(LinearTransvectionKind::EStar, x)) == s);
    GeneratorWord both = linear_transvection_word(LinearTransvectionKind::Ex, x);
    both.append(linear_transvection_word(LinearTransvectionKind::EStar, x));
    CHECK(eval_word(both) == m * s);
    CHECK(elementary_linear_transvection(LinearTransvectionKind::Ex, {r.zero(), r.zero()}).is_identity());
}

TEST_CASE("word serialization") {
    Ring r = Ring::parse("zmod:9");
    auto w = parse_inline_word("S:2,1:3;S:3,1:1", r, 4);
    REQUIRE(w.atoms.size() == 2);
    CHECK(w.atoms[0].i == 2);
    CHECK(w.atoms[0].arg == r.from_int(3));
    auto j = word_to_json(w);
    CHECK(j[1]["fam"] == "S");
    auto back = word_from_json(j, r, 4);
    CHECK(eval_word(back) == eval_word(w));
    CHECK_THROWS(parse_inline_word("S:2,2:1", r, 4));
    CHECK_THROWS(parse_inline_word("Q:2,1:1", r, 4));
}

TEST_CASE("pfaffian of congruent standard forms") {
    Ring r = Ring::parse("zmod:9");
    std::mt19937_64 rng(8);
    for (int s = 0; s < 50; ++s) {
        auto eps = random_word(Family::Linear, r, 3, 6, rng);
        auto E = direct_sum(SquareMatrix::identity(r, 1), eval_word(eps));
        AlternatingForm phi(E.transpose() * standard_form(2, r).matrix() * E);
        CHECK(pfaffian(phi).is_one());
    }
}
