#include <doctest.h>

#include "slopelab/coset_enum.hpp"
#include "slopelab/fillings.hpp"
#include "slopelab/groups.hpp"
#include "slopelab/quotients.hpp"
#include "support.hpp"

using namespace slopelab;

namespace {

Presentation triangle(int l, int m, int n) {
    const Alphabet xy({"x", "y"});
    Word x = Word::generator("x"), y = Word::generator("y");
    return {"tri", xy, {x.pow(l), y.pow(m), (x * y).pow(n)}, {}, {}};
}

// Every relator fixes every coset, and the group acts transitively.
void check_regular(const CosetTable& t, const Presentation& p) {
    for (const auto& r : p.relators) {
        auto letters = to_letters(r, p.gens);
        for (std::size_t c = 0; c < t.cosets(); ++c) CHECK(t.apply(c, letters) == c);
    }
    std::vector<bool> seen(t.cosets(), false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (Letter x = 0; x < t.columns(); ++x) {
            std::size_t d = t.act(queue[i], x);
            if (!seen[d]) {
                seen[d] = true;
                queue.push_back(d);
            }
        }
    CHECK(queue.size() == t.cosets());
}

} // namespace

TEST_CASE("orders of small finite groups") {
    const std::vector<std::pair<Presentation, std::size_t>> cases{
        {triangle(2, 3, 3), 12}, {triangle(2, 3, 4), 24}, {triangle(2, 3, 5), 60}, {triangle(2, 2, 7), 14},
        {fill(torus_knot(2, 3), Slope(5, 1)), 5},        {fill(torus_knot(2, 3), Slope(7, 1)), 7},
        {fill(figure_eight(), Slope::infinity()), 1},    {fill(torus_knot(2, 3), Slope::infinity()), 1},
        {fill(torus_knot(2, 3), Slope(1, 1)), 120},      {fill(torus_knot(3, 4), Slope::infinity()), 1},
    };
    for (const auto& [p, order] : cases) {
        auto e = todd_coxeter(p, 200000);
        REQUIRE(e.completed());
        CHECK(e.table->cosets() == order);
        check_regular(*e.table, p);
    }
}

TEST_CASE("enumeration stops at the coset bound") {
    auto e = todd_coxeter(figure_eight(), 5000);
    CHECK(!e.completed());
    CHECK(e.stats.max_alive <= 5000);
    auto f = todd_coxeter(fill(torus_knot(2, 3), Slope(6, 1)), 20000);
    CHECK(!f.completed());
}

TEST_CASE("decisions in a finite group agree with a faithful permutation image") {
    // <x,y | x^2, y^3, (xy)^4> is S4; x -> (1 2), y -> (2 3 4) is an isomorphism.
    const Presentation p = triangle(2, 3, 4);
    auto e = todd_coxeter(p, 1000);
    REQUIRE(e.completed());
    const FiniteGroup& s4 = standard_group("S4");
    const ImageTuple images{*s4.find("(1 2)"), *s4.find("(2 3 4)")};
    for (const auto& r : p.relators) REQUIRE(evaluate(s4, images, to_letters(r, p.gens)) == 0);
    std::mt19937_64 rng(41);
    int trivial = 0;
    for (int i = 0; i < 400; ++i) {
        const Word w = testing_support::random_word(rng, "xy", 14);
        const bool expected = evaluate(s4, images, to_letters(w, p.gens)) == 0;
        trivial += expected;
        CHECK(decide_in_finite(*e.table, w) == expected);
    }
    CHECK(trivial > 0);
}

TEST_CASE("word permutations compose") {
    const Presentation p = fill(torus_knot(2, 3), Slope(5, 1));
    auto e = todd_coxeter(p, 1000);
    REQUIRE(e.completed());
    const Word mu = *p.meridian;
    CHECK(decide_in_finite(*e.table, mu.pow(5)));
    CHECK(!decide_in_finite(*e.table, mu));
    CHECK(decide_in_finite(*e.table, commutator(Word::generator("x"), Word::generator("y"))));
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        Word a = testing_support::random_word(rng, "xy", 8), b = testing_support::random_word(rng, "xy", 8);
        auto pa = e.table->permutation(a), pb = e.table->permutation(b), pab = e.table->permutation(a * b);
        for (std::size_t c = 0; c < pa.size(); ++c) CHECK(pab[c] == pb[pa[c]]);
    }
}

TEST_CASE("deadline") {
    ToddCoxeterOptions opt;
    opt.max_cosets = 2000000;
    opt.deadline = std::chrono::steady_clock::now();
    auto e = todd_coxeter(figure_eight(), opt);
    CHECK(!e.completed());
    CHECK(e.stats.timed_out);
}
