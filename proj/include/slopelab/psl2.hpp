#pragma once

// Numerical PSL(2,C): word evaluation, the figure-eight holonomy, trace-based
// peripherality and the trace invariants of g^{g^h} g^-2.
//
// Double precision throughout; every comparison takes an explicit tolerance.

#include <complex>
#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "slopelab/presentations.hpp"

namespace slopelab {

using Complex = std::complex<double>;

struct ProjectiveMatrix {
    Complex a{1}, b{0}, c{0}, d{1};

    static ProjectiveMatrix identity() { return {}; }
    Complex det() const { return a * d - b * c; }
    /// Inverse of a determinant-one matrix (the adjugate).
    ProjectiveMatrix inverse() const { return {d, -b, -c, a}; }
    /// Scales to determinant one; throws Error for a singular matrix.
    ProjectiveMatrix renormalized() const;
    friend ProjectiveMatrix operator*(const ProjectiveMatrix& m, const ProjectiveMatrix& n);
};

/// Frobenius distance modulo the global sign.
double projective_distance(const ProjectiveMatrix& m, const ProjectiveMatrix& n);
bool approx_equal(const ProjectiveMatrix& m, const ProjectiveMatrix& n, double tol);

/// a + d with the sign fixed so that Re >= 0 (Im >= 0 when Re = 0).
Complex trace(const ProjectiveMatrix& m);

struct Representation {
    Alphabet gens;
    std::map<std::string, ProjectiveMatrix> assignment;
    double tolerance = 1e-9;
    /// Set only once relator_check has passed against a presentation.
    bool validated = false;
};

ProjectiveMatrix evaluate(const Representation& rep, const Word& w);

/// rho(a) = [[1,1],[0,1]], rho(h) = [[1,0],[-omega,1]] with omega = (-1 + sqrt(3) i)/2.
Representation fig8_holonomy();

/// Every relator of p maps to +-I within tol.
bool relator_check(const Representation& rep, const Presentation& p, double tol);

/// Marks rep validated when relator_check passes at rep.tolerance.
bool validate(Representation& rep, const Presentation& p);

/// |tr^2 - 4| <= tol. Throws UnvalidatedRepresentation for unvalidated input.
bool peripheral_test(const Representation& rep, const Word& w, double tol = 1e-8);

/// With rho(g) = diag(alpha, alpha^-1) and rho(h) = [[x,y],[z,u]] (det 1):
/// D (xu)^2 - D (xu) - 1 with D = (alpha - alpha^-1)^2. This is -ad for
/// rho(h^-1 g h) = [[a,b],[c,d]], and ad determines tr rho(g^{g^h} g^-2).
Complex invariant_nonperipheral(Complex alpha, Complex x, Complex u);

/// With rho(g) = [[1,alpha],[0,1]] and rho(h) = [[x,y],[z,u]]: 2 z^4 alpha^4 + 2,
/// which is +-tr rho(g^{g^h} g^-2).
Complex invariant_peripheral(Complex alpha, Complex z);

/// {"tolerance": t, "generators": {"a": [[re,im],[re,im],[re,im],[re,im]], ...}}
/// Loaded representations start unvalidated.
Representation parse_representation(const nlohmann::json& j);
Representation load_representation(const std::filesystem::path& path);
nlohmann::ordered_json representation_json(const Representation& rep);

} // namespace slopelab
