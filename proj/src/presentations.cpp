#include "slopelab/presentations.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <tuple>

namespace slopelab {

namespace {

BigInt mod_floor(const BigInt& a, const BigInt& d) {
    BigInt r = a % d;
    if (r < 0) r += d;
    return r;
}

BigInt gcd_big(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    std::int64_t x1 = 0, y1 = 0;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

std::string render(const AbelianGroup& g) {
    if (g.is_trivial()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : g.torsion) {
        if (!first) os << " + ";
        first = false;
        os << "Z/" << d;
    }
    if (g.rank > 0) {
        if (!first) os << " + ";
        os << "Z";
        if (g.rank > 1) os << "^" << g.rank;
    }
    return os.str();
}

bool is_zero(const HomologyClass& c) {
    return std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x == 0; });
}

std::string render(const HomologyClass& c) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

Abelianizer::Abelianizer(const Presentation& p) : gens_(p.gens) {
    const std::size_t n = gens_.size();
    IntMatrix rows;
    for (const auto& r : p.relators) {
        std::vector<BigInt> row(n, 0);
        for (const auto& s : r.syllables()) {
            auto idx = gens_.index_of(s.gen);
            if (!idx) throw UnknownGenerator(s.gen);
            row[*idx] += s.exp;
        }
        rows.push_back(std::move(row));
    }
    SmithForm snf = smith_normal_form(std::move(rows), n);
    const auto& v = snf.column_transform;

    auto column = [&](std::size_t j) {
        std::vector<BigInt> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = v[i][j];
        return col;
    };
    for (std::size_t j = 0; j < snf.diagonal.size(); ++j) {
        const BigInt& d = snf.diagonal[j];
        if (d == 1) continue;
        auto col = column(j);
        for (auto& x : col) x = mod_floor(x, d);
        // Rescale by a unit so the first nonzero image becomes gcd(image, d).
        auto first = std::find_if(col.begin(), col.end(), [](const BigInt& x) { return x != 0; });
        if (first != col.end() && d <= 1000000) {
            BigInt target = gcd_big(*first, d);
            for (BigInt u = 1; u < d; ++u) {
                if (gcd_big(u, d) != 1) continue;
                if (mod_floor(u * *first, d) == target) {
                    for (auto& x : col) x = mod_floor(x * u, d);
                    break;
                }
            }
        }
        group_.torsion.push_back(d);
        modulus_.push_back(d);
        columns_.push_back(std::move(col));
    }
    for (std::size_t j = snf.diagonal.size(); j < n; ++j) {
        auto col = column(j);
        auto first = std::find_if(col.begin(), col.end(), [](const BigInt& x) { return x != 0; });
        if (first != col.end() && *first < 0)
            for (auto& x : col) x = -x;
        ++group_.rank;
        modulus_.push_back(0);
        columns_.push_back(std::move(col));
    }
}

HomologyClass Abelianizer::class_of(const Word& w) const {
    std::vector<BigInt> sums(gens_.size(), 0);
    for (const auto& s : w.syllables()) {
        auto idx = gens_.index_of(s.gen);
        if (!idx) throw UnknownGenerator(s.gen);
        sums[*idx] += s.exp;
    }
    HomologyClass out;
    out.reserve(columns_.size());
    for (std::size_t k = 0; k < columns_.size(); ++k) {
        BigInt acc = 0;
        for (std::size_t i = 0; i < sums.size(); ++i) acc += sums[i] * columns_[k][i];
        if (modulus_[k] != 0) acc = mod_floor(acc, modulus_[k]);
        out.push_back(acc);
    }
    return out;
}

AbelianGroup abelianization(const Presentation& p) { return Abelianizer(p).group(); }

HomologyClass homology_class(const Presentation& p, const Word& w) {
    return Abelianizer(p).class_of(w);
}

Presentation figure_eight() {
    Alphabet gens({"a", "h"});
    Presentation p;
    p.name = "fig8";
    // a h^-1 a^-1 h a = h a h^-1 a^-1 h, written as a single relator.
    Word lhs = parse_word("a h^-1 a^-1 h a", gens);
    Word rhs = parse_word("h a h^-1 a^-1 h", gens);
    p.relators.push_back(lhs * rhs.inverse());
    p.meridian = parse_word("a", gens);
    p.longitude = parse_word("h a^-1 h^-1 a^2 h^-1 a^-1 h", gens);
    p.gens = std::move(gens);
    return p;
}

Presentation torus_knot(std::int64_t p, std::int64_t q) {
    auto absval = [](std::int64_t v) { return v < 0 ? -v : v; };
    if (absval(p) < 2 || absval(q) < 2 || std::gcd(p, q) != 1)
        throw InvalidTorusParameters("torus knot parameters need |p|,|q| >= 2 and gcd(p,q) = 1, got (" +
                                     std::to_string(p) + "," + std::to_string(q) + ")");
    // p*s - q*r = 1; canonical choice minimizes |r|, then |s|, then prefers r >= 0.
    std::int64_t s0 = 0, t0 = 0;
    ext_gcd(p, q, s0, t0); // p*s0 + q*t0 = 1
    std::int64_t r0 = -t0;
    std::int64_t best_r = 0, best_s = 0;
    bool have = false;
    std::int64_t k0 = -r0 / p;
    for (std::int64_t k = k0 - 2; k <= k0 + 2; ++k) {
        std::int64_t r = r0 + k * p, s = s0 + k * q;
        auto key = [&](std::int64_t rr, std::int64_t ss) {
            return std::tuple(absval(rr), absval(ss), rr < 0);
        };
        if (!have || key(r, s) < key(best_r, best_s)) {
            best_r = r;
            best_s = s;
            have = true;
        }
    }
    Presentation pres;
    pres.name = "torus(" + std::to_string(p) + "," + std::to_string(q) + ")";
    pres.gens = Alphabet({"x", "y"});
    Word x = Word::generator("x"), y = Word::generator("y");
    pres.relators.push_back(x.pow(p) * y.pow(-q));
    Word mu = x.pow(-best_r) * y.pow(best_s);
    pres.meridian = mu;
    pres.longitude = x.pow(p) * mu.pow(-p * q);
    return pres;
}

Presentation parse_presentation(std::string_view text) {
    std::optional<std::string> name;
    std::optional<Alphabet> gens;
    std::vector<std::string> rel_text;
    std::optional<std::string> mer_text, lon_text;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto colon = t.find(':');
        if (colon == std::string::npos)
            throw SyntaxError("line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = trim(std::string_view(t).substr(0, colon));
        std::string value = trim(std::string_view(t).substr(colon + 1));
        if (key == "name") {
            name = value;
        } else if (key == "gens") {
            std::istringstream gs(value);
            std::vector<std::string> names;
            for (std::string g; gs >> g;) names.push_back(g);
            gens = Alphabet(std::move(names));
        } else if (key == "rel") {
            rel_text.push_back(value);
        } else if (key == "meridian") {
            mer_text = value;
        } else if (key == "longitude") {
            lon_text = value;
        } else {
            throw SyntaxError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!gens) throw SyntaxError("missing 'gens:' line");
    if (!mer_text) throw MissingPeripheral("missing 'meridian:' line");
    if (!lon_text) throw MissingPeripheral("missing 'longitude:' line");

    Presentation p;
    p.name = name.value_or("");
    p.gens = *gens;
    for (const auto& r : rel_text) p.relators.push_back(parse_word(r, p.gens));
    p.meridian = parse_word(*mer_text, p.gens);
    p.longitude = parse_word(*lon_text, p.gens);
    return p;
}

std::string render_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "name: " << p.name << '\n';
    os << "gens:";
    for (const auto& g : p.gens.names()) os << ' ' << g;
    os << '\n';
    for (const auto& r : p.relators) os << "rel: " << render(r) << '\n';
    if (p.meridian) os << "meridian: " << render(*p.meridian) << '\n';
    if (p.longitude) os << "longitude: " << render(*p.longitude) << '\n';
    return os.str();
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open presentation file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

} // namespace slopelab
