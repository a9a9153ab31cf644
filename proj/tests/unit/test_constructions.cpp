#include <doctest.h>

#include "slopelab/constructions.hpp"
#include "slopelab/oracles.hpp"
#include "slopelab/torusnf.hpp"
#include "support.hpp"

using namespace slopelab;

namespace {

const Alphabet xy({"x", "y"});
const Word a = Word::generator("a"), h = Word::generator("h");

// X = x^-1, Y = y^-1; (w)^k expands by repetition.
Word closed_form(int n) {
    auto rep = [](const std::string& s, int k) {
        std::string out;
        for (int i = 0; i < k; ++i) out += s;
        return out;
    };
    const std::string s = rep("YX", n) + "YYX" + "y" + rep("xy", n + 2) + "XYYX" + rep("YX", n) + "Y" + "xyy" +
                          rep("xy", n - 1) + "xyy" + "xYXyxYX";
    return testing_support::word_from_letters(s);
}

} // namespace

TEST_CASE("torus_gn matches the closed form") {
    for (int n = 1; n <= 4; ++n) CHECK(torus_gn(2, 3, n) == closed_form(n));
    CHECK(render(torus_gn(2, 3, 1)) ==
          "y^-1 x^-1 y^-2 x^-1 y x y x y x y x^-1 y^-2 x^-1 y^-1 x^-1 y^-1 x y^2 x y^2 x y^-1 x^-1 y x y^-1 x^-1");
}

TEST_CASE("torus_gn is homologically trivial but nontrivial") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(is_zero(homology_class(torus_knot(2, 3), torus_gn(2, 3, n))));
        CHECK(!is_trivial_torus(2, 3, torus_gn(2, 3, n)));
    }
    CHECK_THROWS_AS(torus_gn(2, 3, 0), Error);
}

TEST_CASE("bmt_conjugate") {
    CHECK(bmt_conjugate(a, h) == parse_word("h^-1 a^-1 h a h^-1 a h a^-2", Alphabet({"a", "h"})));
    std::mt19937_64 rng(81);
    Word g = a * h.pow(2);
    const std::size_t base = g.syllable_count();
    for (int i = 0; i < 3; ++i) {
        const Word alpha = testing_support::random_word(rng, "ah", 4);
        const Word next = bmt_conjugate(g, alpha);
        CHECK(substitute(next, {{"a", h.pow(-2)}}).is_identity());
        g = next;
    }
    CHECK(g.syllable_count() <= 729 * base);
}

TEST_CASE("separation builders") {
    const Word sigma = Word::generator("a", 3) * *figure_eight().longitude;
    CHECK(separation_commutator(Word(), fig8_persistent(), sigma) == commutator(fig8_persistent(), sigma));
    const Word g = separation_commutator(h, fig8_persistent(), sigma);
    CHECK(g == commutator(h * fig8_persistent() * h.inverse(), sigma));
    CHECK(is_zero(homology_class(figure_eight(), g)));
    CHECK(certify(fill(figure_eight(), Slope(3, 1)), g, Budget{}).kind == VerdictKind::Trivial);

    CHECK(separation_combine(a, h, 1, 1, 1) == a.pow(2) * h);
    const Presentation k = fill(figure_eight(), Slope(7, 1));
    const Word combined = separation_combine(a, a * h, 2, 2, 3);
    const BigInt expected = (13 * homology_class(k, a)[0] + 6 * homology_class(k, a * h)[0]) % 7;
    CHECK(homology_class(k, combined)[0] == expected);
    CHECK_THROWS_AS(separation_combine(a, h, 0, 1, 1), Error);
}

TEST_CASE("powered products and nonrigid alpha") {
    CHECK(powered_product(a, h, 1, 1) == a * h);
    CHECK(powered_product(a, a.inverse(), 1, 1).is_identity());
    CHECK_THROWS_AS(powered_product(a, h, 0, 1), ZeroExponent);

    const Word s = h * a;
    CHECK(nonrigid_alpha(a, s, 2, 1) == a.pow(3) * s * a.inverse() * s.inverse());
    const Presentation f = figure_eight();
    for (int p = 1; p <= 3; ++p)
        for (int m = 1; m <= 3; ++m)
            CHECK(homology_class(f, nonrigid_alpha(a * a, s, p, m)) == homology_class(f, (a * a).pow(p * m)));
}

TEST_CASE("fig8_persistent") {
    CHECK(fig8_persistent() == commutator(a, h));
    CHECK(is_zero(homology_class(figure_eight(), fig8_persistent())));
}
