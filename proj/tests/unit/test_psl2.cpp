#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "slopelab/constructions.hpp"
#include "slopelab/fillings.hpp"
#include "slopelab/psl2.hpp"
#include "support.hpp"

using namespace slopelab;

namespace {

const Word a = Word::generator("a"), h = Word::generator("h");
const double sqrt3 = std::sqrt(3.0);

Complex random_complex(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    return {d(rng), d(rng)};
}

// [[x,y],[z,u]] with det 1: pick x, y, z and solve for u (x kept away from 0).
ProjectiveMatrix random_sl2(std::mt19937_64& rng) {
    Complex x = random_complex(rng);
    if (std::abs(x) < 0.3) x += 0.5;
    const Complex y = random_complex(rng), z = random_complex(rng);
    return {x, y, z, (1.0 + y * z) / x};
}

ProjectiveMatrix power(const ProjectiveMatrix& m, int k) {
    ProjectiveMatrix out;
    const ProjectiveMatrix step = k >= 0 ? m : m.inverse();
    for (int i = 0; i < std::abs(k); ++i) out = out * step;
    return out;
}

// g^{g^h} g^-2 = (h^-1 g h)^-1 g (h^-1 g h) g^-2, multiplied out directly.
ProjectiveMatrix bmt_matrix(const ProjectiveMatrix& g, const ProjectiveMatrix& hm) {
    const ProjectiveMatrix gamma = hm.inverse() * g * hm;
    return gamma.inverse() * g * gamma * power(g, -2);
}

} // namespace

TEST_CASE("figure-eight holonomy") {
    const Representation rep = fig8_holonomy();
    CHECK(rep.validated);
    CHECK(relator_check(rep, figure_eight(), 1e-9));
    CHECK(approx_equal(evaluate(rep, a), {1, 1, 0, 1}, 1e-12));
    const ProjectiveMatrix lambda = evaluate(rep, *figure_eight().longitude);
    CHECK(approx_equal(lambda, {1, Complex(0, 2 * sqrt3), 0, 1}, 1e-9));
    CHECK(trace(evaluate(rep, a)) == Complex(2, 0));
    const Complex t = trace(evaluate(rep, commutator(a, h)));
    CHECK(std::abs(t * t - 4.0) > 1.0);
    // The peripheral pair commutes.
    const ProjectiveMatrix mu = evaluate(rep, a);
    CHECK(approx_equal(mu * lambda, lambda * mu, 1e-9));
    CHECK(approx_equal(evaluate(rep, Word()), ProjectiveMatrix::identity(), 0));
}

TEST_CASE("evaluation is a homomorphism and traces are class functions") {
    // Rounding error is bounded by eps * length * (product of letter norms);
    // both generator matrices have Frobenius norm sqrt(3).
    auto bound = [](std::uint64_t letters) {
        return 1e-15 * static_cast<double>(letters + 1) * std::pow(sqrt3, static_cast<double>(letters));
    };
    const Representation rep = fig8_holonomy();
    std::mt19937_64 rng(91);
    for (int i = 0; i < 100; ++i) {
        const Word u = testing_support::random_word(rng, "ah", 30), v = testing_support::random_word(rng, "ah", 30);
        const ProjectiveMatrix mu = evaluate(rep, u), mv = evaluate(rep, v);
        CHECK(projective_distance(evaluate(rep, u * v), mu * mv) <= bound(u.length() + v.length()));
        const Word c = testing_support::random_word(rng, "ah", 6);
        const Complex t1 = trace(mu), t2 = trace(evaluate(rep, conjugate(u, c)));
        // Compared up to sign: the canonical sign is unstable when Re(tr) ~ 0.
        CHECK(std::min(std::abs(t1 - t2), std::abs(t1 + t2)) <= bound(u.length() + 2 * c.length()));
    }
    // Short words stay at the 1e-9 level in absolute terms.
    for (int i = 0; i < 100; ++i) {
        const Word u = testing_support::random_word(rng, "ah", 8), v = testing_support::random_word(rng, "ah", 8);
        CHECK(approx_equal(evaluate(rep, u * v), evaluate(rep, u) * evaluate(rep, v), 1e-9));
    }
}

TEST_CASE("trace sign convention") {
    CHECK(trace({-1, 0, 0, -1}) == Complex(2, 0));
    CHECK(trace({Complex(0, -1), 0, 0, Complex(0, -1)}) == Complex(0, 2));
    CHECK(projective_distance({-1, 0, 0, -1}, ProjectiveMatrix::identity()) == 0);
}

TEST_CASE("relator check detects perturbations") {
    Representation rep = fig8_holonomy();
    rep.assignment["h"].c += 1e-3;
    CHECK(!relator_check(rep, figure_eight(), 1e-9));
    CHECK(!validate(rep, figure_eight()));
    Presentation empty{"free", Alphabet({"a", "h"}), {}, {}, {}};
    CHECK(relator_check(rep, empty, 1e-9));
}

TEST_CASE("peripherality") {
    const Representation rep = fig8_holonomy();
    const Presentation f = figure_eight();
    CHECK(peripheral_test(rep, Word()));
    for (int p = -5; p <= 5; ++p)
        for (int q = -5; q <= 5; ++q)
            if (std::gcd(p, q) == 1) {
                const Word s = a.pow(p) * f.longitude->pow(q);
                CHECK(peripheral_test(rep, s));
                CHECK(!peripheral_test(rep, bmt_conjugate(s, h)));
            }
    Representation loose = rep;
    loose.validated = false;
    CHECK_THROWS_AS(peripheral_test(loose, a), UnvalidatedRepresentation);
}

TEST_CASE("nonperipheral invariant against direct evaluation") {
    std::mt19937_64 rng(92);
    for (int i = 0; i < 100; ++i) {
        Complex alpha = random_complex(rng);
        if (std::abs(alpha) < 0.4) alpha += 0.7;
        const ProjectiveMatrix g{alpha, 0, 0, 1.0 / alpha};
        const ProjectiveMatrix hm = random_sl2(rng);
        const ProjectiveMatrix gamma = hm.inverse() * g * hm;
        const Complex ad = gamma.a * gamma.d;
        const Complex inv = invariant_nonperipheral(alpha, hm.a, hm.d);
        CHECK(std::abs(inv + ad) <= 1e-8 * (1 + std::abs(ad)));

        // ad determines the trace of g^{g^h} g^-2 up to sign.
        const Complex s1 = alpha + 1.0 / alpha, s3 = std::pow(alpha, 3) + std::pow(alpha, -3);
        const Complex expected = ad * (s1 - s3) + s3;
        const Complex t = bmt_matrix(g, hm).a + bmt_matrix(g, hm).d;
        CHECK(std::min(std::abs(t - expected), std::abs(t + expected)) <= 1e-8 * (1 + std::abs(t)));

        // The linear coefficient needs the square of (alpha - alpha^-1): the
        // form with a single factor disagrees with direct evaluation.
        const Complex diff = alpha - 1.0 / alpha, xu = hm.a * hm.d;
        const Complex single = -diff * diff * xu * xu + diff * xu + 1.0;
        if (std::abs(diff * xu * (diff - 1.0)) > 1e-3) CHECK(std::abs(single - ad) > 1e-8);
    }
    CHECK(invariant_nonperipheral(1.0, 0.7, 0.3) == Complex(-1, 0));
}

TEST_CASE("peripheral invariant against direct evaluation") {
    std::mt19937_64 rng(93);
    for (int i = 0; i < 100; ++i) {
        const Complex alpha = random_complex(rng);
        const ProjectiveMatrix g{1, alpha, 0, 1};
        const ProjectiveMatrix hm = random_sl2(rng);
        const Complex t = trace(bmt_matrix(g, hm));
        const Complex inv = invariant_peripheral(alpha, hm.c);
        CHECK(std::min(std::abs(t - inv), std::abs(t + inv)) <= 1e-8 * (1 + std::abs(inv)));
    }
    CHECK(invariant_peripheral(3.0, 0.0) == Complex(2, 0));
    // Figure-eight slope (1,1): alpha = 1 + 2 sqrt(3) i, z = -omega.
    const Complex omega(-0.5, sqrt3 / 2);
    const Complex v = invariant_peripheral(Complex(1, 2 * sqrt3), -omega);
    CHECK(std::abs(std::abs(v - 2.0) - 338.0) < 1e-9);
}

TEST_CASE("representation files") {
    const Representation rep = fig8_holonomy();
    const auto j = representation_json(rep);
    Representation loaded = parse_representation(nlohmann::json::parse(j.dump()));
    CHECK(!loaded.validated);
    CHECK(validate(loaded, figure_eight()));
    CHECK(approx_equal(loaded.assignment["h"], rep.assignment.at("h"), 1e-15));
    CHECK_THROWS_AS(parse_representation(nlohmann::json::parse(R"({"generators":{"a":[[1,0]]}})")), SyntaxError);
    CHECK_THROWS_AS(parse_representation(nlohmann::json::parse(R"({"tolerance":1e-9})")), SyntaxError);
}
