#include <doctest.h>

#include "slopelab/constructions.hpp"
#include "slopelab/oracles.hpp"
#include "support.hpp"

using namespace slopelab;

namespace {
const Word x = Word::generator("x"), y = Word::generator("y");
const Word a = Word::generator("a"), h = Word::generator("h");
} // namespace

TEST_CASE("abelian test") {
    const auto cert = abelian_test(fill(figure_eight(), Slope(3, 1)), a);
    REQUIRE(cert);
    CHECK(render(cert->group) == "Z/3");
    CHECK(render(cert->homology) == "[1]");
    CHECK(!abelian_test(figure_eight(), commutator(a, h)));
    CHECK(!abelian_test(fill(figure_eight(), Slope::infinity()), a));
}

TEST_CASE("pipeline stages on the trefoil fillings") {
    const Presentation t = torus_knot(2, 3);
    const Word c = commutator(x, y);
    for (int p : {5, 7}) {
        FillingOracle o(fill(t, Slope(p, 1)), Budget{});
        const Verdict v = o.certify(c);
        CHECK(v.kind == VerdictKind::Trivial);
        CHECK(replay(o.presentation(), c, v));
        CHECK(o.coset_enumeration().table->cosets() == static_cast<std::size_t>(p));
        const StageReport r = o.run_all_stages(c);
        CHECK(!r.contradictory());
        CHECK(r.coset_trivial == true);
        CHECK(!r.quotient);
    }
    const Presentation six = fill(t, Slope(6, 1));
    const Verdict v = certify(six, c, Budget{});
    CHECK(v.kind == VerdictKind::Nontrivial);
    REQUIRE(v.certificate.type == Certificate::Type::FiniteQuotient);
    CHECK(v.certificate.quotient->target == "S3");
    CHECK(replay(six, c, v));
}

TEST_CASE("the filling relator is trivial") {
    const Presentation f = figure_eight();
    const Presentation zero = fill(f, Slope(0, 1));
    const Verdict v = certify(zero, *f.longitude, Budget{});
    CHECK(v.kind == VerdictKind::Trivial);
    CHECK(v.stage == "rewriting");
    CHECK(replay(zero, *f.longitude, v));

    auto rows = sk_scan(f, slope_element(f, Slope(2, 1)), {Slope(2, 1)}, Budget{});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].second.kind == VerdictKind::Trivial);
}

TEST_CASE("figure-eight +1 filling needs PSL(2,7)") {
    const Presentation p = fill(figure_eight(), Slope(1, 1));
    const Word g = commutator(a, h);
    const Verdict v = certify(p, g, Budget{});
    CHECK(v.kind == VerdictKind::Nontrivial);
    REQUIRE(v.certificate.type == Certificate::Type::FiniteQuotient);
    CHECK(v.certificate.quotient->target == "PSL2_7");
    CHECK(replay(p, g, v));
    // The homology sphere admits no symmetric-group detection of [a,h] up to S6.
    CHECK(!finite_quotient_search(p, g, target_ladder(6, {}), 0));
}

TEST_CASE("scan ordering and determinism") {
    const Presentation t = torus_knot(2, 3);
    const std::vector<Slope> slopes{Slope(7, 1), Slope::infinity(), Slope(5, 1), Slope(6, 1)};
    Budget b;
    b.max_cosets = 20000;
    auto rows = sk_scan(t, commutator(x, y), slopes, b, 1);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].first == Slope(5, 1));
    CHECK(rows[3].first == Slope::infinity());
    CHECK(rows[0].second.kind == VerdictKind::Trivial);
    CHECK(rows[1].second.kind == VerdictKind::Nontrivial);
    CHECK(rows[2].second.kind == VerdictKind::Trivial);
    CHECK(rows[3].second.kind == VerdictKind::Trivial);
    auto again = sk_scan(t, commutator(x, y), slopes, b, 3);
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK(certificate_json(fill(t, rows[i].first), rows[i].second) ==
              certificate_json(fill(t, again[i].first), again[i].second));
}

TEST_CASE("serial and parallel catalogues give the same certificate") {
    const Presentation p = fill(figure_eight(), Slope(-2, 1));
    Budget serial, parallel;
    serial.parallel = false;
    serial.max_cosets = parallel.max_cosets = 10000;
    const Word g = commutator(a, h);
    CHECK(certificate_json(p, certify(p, g, serial)) == certificate_json(p, certify(p, g, parallel)));
}

TEST_CASE("replay rejects forged certificates") {
    const Presentation six = fill(torus_knot(2, 3), Slope(6, 1));
    const Word c = commutator(x, y);
    const Verdict v = certify(six, c, Budget{});
    auto j = nlohmann::json(certificate_json(six, v));
    CHECK(replay_json(six, c, j));
    auto wrong_image = j;
    wrong_image["images"]["x"] = "()";
    CHECK(!replay_json(six, c, wrong_image));
    CHECK(!replay_json(six, Word(), j));
    auto flipped = j;
    flipped["kind"] = "trivial";
    CHECK(!replay_json(six, c, flipped));

    const Presentation five = fill(torus_knot(2, 3), Slope(5, 1));
    nlohmann::json coset{{"kind", "trivial"}, {"target", "coset_table"}, {"cosets", 5}, {"max_cosets", 1000}};
    CHECK(replay_json(five, c, coset));
    CHECK(!replay_json(five, x, coset));
    coset["cosets"] = 6;
    CHECK(!replay_json(five, c, coset));

    nlohmann::json hom{{"kind", "nontrivial"}, {"target", "homology"}, {"group", "Z/5"}, {"word_image", "[2]"}};
    // Coordinates are scaled so that x maps to 1; x has degree 3, so mu maps to 3^-1 = 2.
    CHECK(replay_json(five, *five.meridian, hom));
    CHECK(!replay_json(five, c, hom));
    CHECK(!replay_json(five, c, nlohmann::json{{"kind", "unknown"}}));
    CHECK(!replay_json(five, c, nlohmann::json::object()));
}

TEST_CASE("certificates transform under conjugation and inversion") {
    std::mt19937_64 rng(61);
    const Presentation six = fill(torus_knot(2, 3), Slope(6, 1));
    const Presentation three = fill(figure_eight(), Slope(3, 1));
    FillingOracle o6(six, Budget{}), o3(three, Budget{});
    for (int i = 0; i < 40; ++i) {
        const Word w = testing_support::random_word(rng, "xy", 10);
        const Word c = testing_support::random_word(rng, "xy", 6);
        const Verdict v = o6.certify(w);
        if (v.kind == VerdictKind::Unknown) continue;
        CHECK(replay(six, conjugate(w, c), transform_for_conjugate(v, c)));
        CHECK(replay(six, w.inverse(), transform_for_inverse(six, v)));
        CHECK(o6.certify(conjugate(w, c)).kind == v.kind);
        CHECK(o6.certify(w.inverse()).kind == v.kind);
    }
    for (int i = 0; i < 40; ++i) {
        const Word w = testing_support::random_word(rng, "ah", 10);
        const Word c = testing_support::random_word(rng, "ah", 6);
        const Verdict v = o3.certify(w);
        if (v.kind == VerdictKind::Unknown) continue;
        CHECK(replay(three, conjugate(w, c), transform_for_conjugate(v, c)));
        CHECK(replay(three, w.inverse(), transform_for_inverse(three, v)));
    }
}

TEST_CASE("unknown verdicts") {
    Budget tiny;
    tiny.max_cosets = 100;
    tiny.sym_max = 2;
    tiny.psl2_primes = {};
    const Presentation p = fill(figure_eight(), Slope(1, 1));
    const Verdict v = certify(p, commutator(a, h), tiny);
    CHECK(v.kind == VerdictKind::Unknown);
    CHECK(!replay(p, commutator(a, h), v));
    CHECK(certificate_json(p, v) == nlohmann::ordered_json{{"kind", "unknown"}});
}

TEST_CASE("trivial verdicts are reused as lemmas") {
    const Presentation p = fill(torus_knot(2, 3), Slope(-2, 1));
    Budget b;
    b.max_cosets = 10;
    b.sym_max = 2;
    b.psl2_primes.clear();
    FillingOracle o(p, b);
    const Word g = p.relators.back().pow(5);
    const Word c = commutator(g, y * x.inverse() * y);
    CHECK(o.certify(c).kind == VerdictKind::Unknown);
    REQUIRE(o.certify(g).kind == VerdictKind::Trivial);
    CHECK(o.lemma_count() == 1);
    o.certify(g.inverse());
    CHECK(o.lemma_count() == 1);
    const Verdict v = o.certify(c);
    CHECK(v.kind == VerdictKind::Trivial);
    CHECK(v.stage == "rewriting");
    CHECK(replay(p, c, v));
}
