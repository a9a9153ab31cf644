#include "slopelab/psl2.hpp"

#include <cmath>
#include <fstream>

namespace slopelab {

ProjectiveMatrix ProjectiveMatrix::renormalized() const {
    const Complex dt = det();
    if (std::abs(dt) < 1e-300) throw Error("singular matrix cannot be normalized into SL(2,C)");
    const Complex s = std::sqrt(dt);
    return {a / s, b / s, c / s, d / s};
}

ProjectiveMatrix operator*(const ProjectiveMatrix& m, const ProjectiveMatrix& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

double projective_distance(const ProjectiveMatrix& m, const ProjectiveMatrix& n) {
    auto dist = [&](double s) {
        return std::sqrt(std::norm(m.a - s * n.a) + std::norm(m.b - s * n.b) + std::norm(m.c - s * n.c) +
                         std::norm(m.d - s * n.d));
    };
    return std::min(dist(1.0), dist(-1.0));
}

bool approx_equal(const ProjectiveMatrix& m, const ProjectiveMatrix& n, double tol) {
    return projective_distance(m, n) <= tol;
}

Complex trace(const ProjectiveMatrix& m) {
    Complex t = m.a + m.d;
    if (t.real() < 0 || (t.real() == 0 && t.imag() < 0)) t = -t;
    return t;
}

ProjectiveMatrix evaluate(const Representation& rep, const Word& w) {
    rep.gens.check(w);
    ProjectiveMatrix acc;
    for (const auto& s : w.syllables()) {
        const auto it = rep.assignment.find(s.gen);
        if (it == rep.assignment.end()) throw UnknownGenerator(s.gen);
        const ProjectiveMatrix step = s.exp > 0 ? it->second : it->second.inverse();
        const std::int64_t n = s.exp > 0 ? s.exp : -s.exp;
        for (std::int64_t i = 0; i < n; ++i) acc = acc * step;
    }
    // Generators are normalized when loaded. Renormalizing the product would
    // divide by a determinant computed with heavy cancellation.
    return acc;
}

Representation fig8_holonomy() {
    const Complex omega(-0.5, std::sqrt(3.0) / 2);
    Representation rep;
    rep.gens = Alphabet({"a", "h"});
    rep.assignment["a"] = {1, 1, 0, 1};
    rep.assignment["h"] = {1, 0, -omega, 1};
    rep.tolerance = 1e-9;
    rep.validated = relator_check(rep, figure_eight(), rep.tolerance);
    return rep;
}

bool relator_check(const Representation& rep, const Presentation& p, double tol) {
    for (const auto& r : p.relators)
        if (!approx_equal(evaluate(rep, r), ProjectiveMatrix::identity(), tol)) return false;
    return true;
}

bool validate(Representation& rep, const Presentation& p) {
    if (!(rep.gens == p.gens)) throw Error("representation and presentation use different generators");
    rep.validated = relator_check(rep, p, rep.tolerance);
    return rep.validated;
}

bool peripheral_test(const Representation& rep, const Word& w, double tol) {
    if (!rep.validated) throw UnvalidatedRepresentation("peripheral_test needs a representation that passed relator_check");
    const Complex t = trace(evaluate(rep, w));
    return std::abs(t * t - 4.0) <= tol;
}

Complex invariant_nonperipheral(Complex alpha, Complex x, Complex u) {
    const Complex diff = alpha - 1.0 / alpha;
    const Complex dd = diff * diff, xu = x * u;
    return dd * xu * xu - dd * xu - 1.0;
}

Complex invariant_peripheral(Complex alpha, Complex z) {
    const Complex z2 = z * z, a2 = alpha * alpha;
    return 2.0 * z2 * z2 * a2 * a2 + 2.0;
}

namespace {

Complex complex_from(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw SyntaxError("matrix entry must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

Representation parse_representation(const nlohmann::json& j) {
    try {
        Representation rep;
        rep.tolerance = j.value("tolerance", 1e-9);
        std::vector<std::string> names;
        for (const auto& [name, entries] : j.at("generators").items()) {
            if (!is_valid_generator_name(name)) throw SyntaxError("invalid generator name '" + name + "'");
            if (!entries.is_array() || entries.size() != 4)
                throw SyntaxError("generator '" + name + "' needs four matrix entries");
            ProjectiveMatrix m{complex_from(entries[0]), complex_from(entries[1]), complex_from(entries[2]),
                               complex_from(entries[3])};
            rep.assignment[name] = m.renormalized();
            names.push_back(name);
        }
        rep.gens = Alphabet(std::move(names));
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(std::string("representation file: ") + e.what());
    }
}

Representation load_representation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(path.string() + ": " + e.what());
    }
    return parse_representation(j);
}

nlohmann::ordered_json representation_json(const Representation& rep) {
    nlohmann::ordered_json j;
    j["tolerance"] = rep.tolerance;
    nlohmann::ordered_json gens;
    for (const auto& name : rep.gens.names()) {
        const auto& m = rep.assignment.at(name);
        gens[name] = nlohmann::ordered_json::array();
        for (Complex c : {m.a, m.b, m.c, m.d}) gens[name].push_back({c.real(), c.imag()});
    }
    j["generators"] = std::move(gens);
    return j;
}

} // namespace slopelab
