#include "slopelab/oracles.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <exception>
#include <sstream>

#ifdef SLOPELAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace slopelab {

std::string to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::Trivial: return "trivial";
    case VerdictKind::Nontrivial: return "nontrivial";
    case VerdictKind::Unknown: return "unknown";
    }
    return "unknown";
}

bool StageReport::contradictory() const {
    const bool says_trivial = rewriting.has_value() || (coset_trivial && *coset_trivial);
    const bool says_nontrivial = homology.has_value() || quotient.has_value() || (coset_trivial && !*coset_trivial);
    return says_trivial && says_nontrivial;
}

FillingOracle::FillingOracle(Presentation p, Budget budget) : p_(std::move(p)), budget_(std::move(budget)) {
    if (budget_.timeout_seconds)
        deadline_ = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(*budget_.timeout_seconds));
}

const Abelianizer& FillingOracle::abelianizer() {
    if (!abelianizer_) abelianizer_ = std::make_unique<Abelianizer>(p_);
    return *abelianizer_;
}

const CosetEnumeration& FillingOracle::coset_enumeration() {
    if (!cosets_) {
        ToddCoxeterOptions opt;
        opt.max_cosets = budget_.max_cosets;
        opt.deadline = deadline_;
        cosets_ = todd_coxeter(p_, opt);
    }
    return *cosets_;
}

namespace {
constexpr std::size_t max_lemmas = 64;
constexpr std::size_t max_lemma_length = 256;
}

std::optional<NormalClosureWitness> FillingOracle::rewriting_stage(const Word& w) const {
    if (auto plain = dehn_certify(p_, w, budget_.max_rewrite_steps)) return plain;
    if (lemmas_.empty()) return std::nullopt;
    return dehn_certify(p_, w, budget_.max_rewrite_steps, lemmas_);
}

std::optional<HomologyClass> FillingOracle::homology_stage(const Word& w) {
    HomologyClass c = abelianizer().class_of(w);
    if (is_zero(c)) return std::nullopt;
    return c;
}

std::optional<bool> FillingOracle::coset_stage(const Word& w) {
    const auto& e = coset_enumeration();
    if (!e.completed()) return std::nullopt;
    return decide_in_finite(*e.table, w);
}

std::optional<FiniteQuotient> FillingOracle::quotient_stage(const Word& w) {
    p_.gens.check(w);
    if (w.is_identity()) return std::nullopt;
    auto letters = to_letters(w, p_.gens);
    if (!catalogue_) catalogue_.emplace();
    const auto targets = budget_.targets();
    for (std::size_t k = 0; k < targets.size(); ++k) {
        if (k == catalogue_->size()) {
            const FiniteGroup& g = standard_group(targets[k]);
            RelatorSystem rels(p_);
            Catalogue c{targets[k], {}, {}};
            c.homs = budget_.parallel ? enumerate_homs_parallel(g, rels, budget_.max_hom_assignments, c.stats)
                                      : enumerate_homs_serial(g, rels, budget_.max_hom_assignments, c.stats);
            catalogue_->push_back(std::move(c));
        }
        const Catalogue& c = (*catalogue_)[k];
        const FiniteGroup& g = standard_group(c.target);
        for (const auto& t : c.homs) {
            Elem img = evaluate(g, t, letters);
            if (img != FiniteGroup::identity()) return FiniteQuotient{c.target, p_.gens.names(), t, img};
        }
    }
    return std::nullopt;
}

StageReport FillingOracle::run_all_stages(const Word& w) {
    StageReport r;
    r.rewriting = rewriting_stage(w);
    r.homology = homology_stage(w);
    r.coset_trivial = coset_stage(w);
    r.quotient = quotient_stage(w);
    return r;
}

Verdict FillingOracle::certify(const Word& w) {
    const auto start = std::chrono::steady_clock::now();
    p_.gens.check(w);
    Verdict v;
    auto finish = [&]() -> Verdict {
        if (cosets_) {
            v.spent.cosets_defined = cosets_->stats.defined;
            v.spent.max_cosets_alive = cosets_->stats.max_alive;
            v.spent.coset_enumeration_completed = cosets_->completed();
        }
        if (catalogue_)
            for (const auto& c : *catalogue_) v.spent.hom_assignments += c.stats.assignments;
        v.spent.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return v;
    };

    if (auto witness = rewriting_stage(w)) {
        v.kind = VerdictKind::Trivial;
        v.stage = "rewriting";
        v.certificate.type = Certificate::Type::NormalClosure;
        v.spent.rewrite_steps = witness->factors.size();
        const bool known = std::any_of(lemmas_.begin(), lemmas_.end(), [&](const DerivedRelator& d) {
            return d.word == w || d.word == w.inverse();
        });
        if (!known && !w.is_identity() && lemmas_.size() < max_lemmas && w.length() <= max_lemma_length)
            lemmas_.push_back({w, *witness});
        v.certificate.witness = std::move(*witness);
        return finish();
    }
    if (auto cls = homology_stage(w)) {
        v.kind = VerdictKind::Nontrivial;
        v.stage = "homology";
        v.certificate.type = Certificate::Type::Homology;
        v.certificate.homology = std::move(*cls);
        v.certificate.group = abelianizer().group();
        return finish();
    }
    if (auto decided = coset_stage(w)) {
        v.kind = *decided ? VerdictKind::Trivial : VerdictKind::Nontrivial;
        v.stage = "coset_table";
        v.certificate.type = Certificate::Type::CosetTable;
        v.certificate.cosets = coset_enumeration().table->cosets();
        v.certificate.max_cosets = budget_.max_cosets;
        return finish();
    }
    if (auto q = quotient_stage(w)) {
        v.kind = VerdictKind::Nontrivial;
        v.stage = "finite_quotient";
        v.certificate.type = Certificate::Type::FiniteQuotient;
        v.certificate.quotient = std::move(*q);
        return finish();
    }
    return finish();
}

std::optional<Certificate> abelian_test(const Presentation& p, const Word& w) {
    Abelianizer ab(p);
    HomologyClass c = ab.class_of(w);
    if (is_zero(c)) return std::nullopt;
    Certificate cert;
    cert.type = Certificate::Type::Homology;
    cert.homology = std::move(c);
    cert.group = ab.group();
    return cert;
}

Verdict certify(const Presentation& p, const Word& w, const Budget& budget) {
    return FillingOracle(p, budget).certify(w);
}

std::vector<std::pair<Slope, Verdict>> sk_scan(const Presentation& p, const Word& w,
                                               const std::vector<Slope>& slopes, const Budget& budget, int jobs) {
    p.gens.check(w);
    std::vector<Slope> sorted = slopes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Verdict> verdicts(sorted.size());
    std::vector<std::exception_ptr> errors(sorted.size());
    const auto n = static_cast<std::int64_t>(sorted.size());
#ifdef SLOPELAB_HAVE_OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#else
    (void)jobs;
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            const auto k = static_cast<std::size_t>(i);
            FillingOracle oracle(fill(p, sorted[k]), budget);
            verdicts[k] = oracle.certify(w);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<std::pair<Slope, Verdict>> out;
    out.reserve(sorted.size());
    for (std::size_t k = 0; k < sorted.size(); ++k) out.emplace_back(sorted[k], std::move(verdicts[k]));
    return out;
}

// ---------------------------------------------------------------------------
// Serialization and replay

nlohmann::ordered_json budget_json(const BudgetSpent& spent) {
    nlohmann::ordered_json j;
    j["cosets_defined"] = spent.cosets_defined;
    j["max_cosets_alive"] = spent.max_cosets_alive;
    j["coset_enumeration_completed"] = spent.coset_enumeration_completed;
    j["hom_assignments"] = spent.hom_assignments;
    j["rewrite_steps"] = spent.rewrite_steps;
    return j;
}

nlohmann::ordered_json certificate_json(const Presentation& p, const Verdict& v) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(v.kind);
    const Certificate& c = v.certificate;
    switch (c.type) {
    case Certificate::Type::None: break;
    case Certificate::Type::NormalClosure: {
        j["target"] = "normal_closure";
        auto factors = nlohmann::ordered_json::array();
        for (const auto& f : c.witness.factors) {
            nlohmann::ordered_json fj;
            fj["conjugator"] = render(f.conjugator);
            fj["relator"] = f.relator;
            fj["sign"] = f.sign;
            factors.push_back(std::move(fj));
        }
        j["factors"] = std::move(factors);
        break;
    }
    case Certificate::Type::CosetTable:
        j["target"] = "coset_table";
        j["cosets"] = c.cosets;
        j["max_cosets"] = c.max_cosets;
        break;
    case Certificate::Type::FiniteQuotient: {
        const FiniteQuotient& q = *c.quotient;
        j["target"] = q.target;
        nlohmann::ordered_json images;
        auto labels = q.image_labels();
        for (std::size_t i = 0; i < q.generators.size(); ++i) images[q.generators[i]] = labels[i];
        j["images"] = std::move(images);
        j["word_image"] = q.group().label(q.word_image);
        break;
    }
    case Certificate::Type::Homology:
        j["target"] = "homology";
        j["group"] = render(c.group);
        j["word_image"] = render(c.homology);
        break;
    }
    (void)p;
    return j;
}

namespace {

bool is_identity_perm(const Permutation& perm) {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

// Right action: apply a, then b.
Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
    return out;
}

Permutation invert_perm(const Permutation& a) {
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    return out;
}

using Mat = std::array<long long, 4>;

std::optional<Mat> parse_matrix(const std::string& s, long long p) {
    Mat m{};
    std::size_t k = 0;
    std::string digits;
    for (char ch : s) {
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
            digits.push_back(ch);
        } else if (!digits.empty()) {
            if (k >= 4) return std::nullopt;
            m[k++] = ((std::stoll(digits) % p) + p) % p;
            digits.clear();
        }
    }
    if (k != 4 || !digits.empty()) return std::nullopt;
    if (((m[0] * m[3] - m[1] * m[2]) % p + p) % p != 1) return std::nullopt;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b, long long p) {
    return {(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p, (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p};
}

Mat mat_inv(const Mat& a, long long p) { return {a[3], (p - a[1]) % p, (p - a[2]) % p, a[0]}; }

bool is_projective_identity(const Mat& m, long long p) {
    return m[1] == 0 && m[2] == 0 && ((m[0] == 1 && m[3] == 1) || (m[0] == p - 1 && m[3] == p - 1));
}

bool projective_equal(const Mat& a, const Mat& b, long long p) {
    bool same = true, neg = true;
    for (int i = 0; i < 4; ++i) {
        same = same && a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)];
        neg = neg && a[static_cast<std::size_t>(i)] == (p - b[static_cast<std::size_t>(i)]) % p;
    }
    return same || neg;
}

template <typename T, typename Mul, typename Inv>
T evaluate_word(const std::vector<Letter>& letters, const std::vector<T>& images, T identity, Mul mul, Inv inv) {
    T acc = identity;
    for (Letter x : letters) {
        const T& e = images[x / 2];
        acc = mul(acc, (x & 1u) ? inv(e) : e);
    }
    return acc;
}

bool replay_quotient(const Presentation& p, const Word& w, const nlohmann::json& cert) {
    const std::string target = cert.at("target").get<std::string>();
    const auto& images = cert.at("images");
    std::vector<std::string> labels;
    for (const auto& g : p.gens.names()) {
        if (!images.contains(g)) return false;
        labels.push_back(images.at(g).get<std::string>());
    }
    std::vector<std::vector<Letter>> rels;
    for (const auto& r : p.relators) rels.push_back(to_letters(r, p.gens));
    const auto word = to_letters(w, p.gens);
    const std::string claimed = cert.value("word_image", std::string());

    auto digits_after = [&](std::size_t pos) -> std::optional<int> {
        std::string t = target.substr(pos);
        if (t.empty() || t.size() > 3 ||
            !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return std::nullopt;
        return std::stoi(t);
    };

    if (target.size() > 1 && target[0] == 'S' && digits_after(1)) {
        const int n = *digits_after(1);
        std::vector<Permutation> imgs;
        for (const auto& l : labels) {
            auto perm = parse_cycles(l, n);
            if (!perm) return false;
            imgs.push_back(*perm);
        }
        Permutation id(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
        for (const auto& r : rels)
            if (!is_identity_perm(evaluate_word(r, imgs, id, compose, invert_perm))) return false;
        Permutation img = evaluate_word(word, imgs, id, compose, invert_perm);
        if (is_identity_perm(img)) return false;
        if (!claimed.empty()) {
            auto c = parse_cycles(claimed, n);
            if (!c || *c != img) return false;
        }
        return true;
    }
    if (target.rfind("PSL2_", 0) == 0 && digits_after(5)) {
        const long long prime = *digits_after(5);
        std::vector<Mat> imgs;
        for (const auto& l : labels) {
            auto m = parse_matrix(l, prime);
            if (!m) return false;
            imgs.push_back(*m);
        }
        const Mat id{1, 0, 0, 1};
        auto mul = [prime](const Mat& a, const Mat& b) { return mat_mul(a, b, prime); };
        auto inv = [prime](const Mat& a) { return mat_inv(a, prime); };
        for (const auto& r : rels)
            if (!is_projective_identity(evaluate_word(r, imgs, id, mul, inv), prime)) return false;
        Mat img = evaluate_word(word, imgs, id, mul, inv);
        if (is_projective_identity(img, prime)) return false;
        if (!claimed.empty()) {
            auto c = parse_matrix(claimed, prime);
            if (!c || !projective_equal(*c, img, prime)) return false;
        }
        return true;
    }
    // Explicit table registered under its name.
    const FiniteGroup& g = standard_group(target);
    ImageTuple imgs;
    for (const auto& l : labels) {
        auto e = g.find(l);
        if (!e) return false;
        imgs.push_back(*e);
    }
    for (const auto& r : rels)
        if (evaluate(g, imgs, r) != FiniteGroup::identity()) return false;
    Elem img = evaluate(g, imgs, word);
    if (img == FiniteGroup::identity()) return false;
    return claimed.empty() || g.label(img) == claimed;
}

} // namespace

bool replay_json(const Presentation& p, const Word& w, const nlohmann::json& cert) {
    try {
        p.gens.check(w);
        const std::string kind = cert.at("kind").get<std::string>();
        if (kind == "unknown") return false;
        const std::string target = cert.at("target").get<std::string>();
        if (target == "normal_closure") {
            if (kind != "trivial") return false;
            NormalClosureWitness witness;
            for (const auto& f : cert.at("factors"))
                witness.factors.push_back({parse_word(f.at("conjugator").get<std::string>(), p.gens),
                                           f.at("relator").get<std::size_t>(), f.at("sign").get<int>()});
            return check_witness(p, w, witness);
        }
        if (target == "coset_table") {
            auto e = todd_coxeter(p, cert.at("max_cosets").get<std::size_t>());
            if (!e.completed() || e.table->cosets() != cert.at("cosets").get<std::size_t>()) return false;
            return decide_in_finite(*e.table, w) == (kind == "trivial");
        }
        if (target == "homology") {
            if (kind != "nontrivial") return false;
            Abelianizer ab(p);
            HomologyClass c = ab.class_of(w);
            return !is_zero(c) && render(c) == cert.at("word_image").get<std::string>() &&
                   render(ab.group()) == cert.at("group").get<std::string>();
        }
        if (kind != "nontrivial") return false;
        return replay_quotient(p, w, cert);
    } catch (const std::exception&) {
        return false;
    }
}

bool replay(const Presentation& p, const Word& w, const Verdict& v) {
    if (v.kind == VerdictKind::Unknown) return false;
    return replay_json(p, w, certificate_json(p, v));
}

Verdict transform_for_conjugate(const Verdict& v, const Word& c) {
    Verdict out = v;
    switch (out.certificate.type) {
    case Certificate::Type::NormalClosure:
        out.certificate.witness = conjugate_witness(v.certificate.witness, c);
        break;
    case Certificate::Type::FiniteQuotient: {
        FiniteQuotient& q = *out.certificate.quotient;
        const FiniteGroup& g = q.group();
        Alphabet gens(q.generators);
        Elem ce = evaluate(g, q.images, to_letters(c, gens));
        q.word_image = g.mul(g.mul(g.inv(ce), q.word_image), ce);
        break;
    }
    default:
        // Homology classes and coset-table decisions are conjugation invariant.
        break;
    }
    return out;
}

Verdict transform_for_inverse(const Presentation& p, const Verdict& v) {
    Verdict out = v;
    switch (out.certificate.type) {
    case Certificate::Type::NormalClosure:
        out.certificate.witness = invert_witness(v.certificate.witness);
        break;
    case Certificate::Type::FiniteQuotient: {
        FiniteQuotient& q = *out.certificate.quotient;
        q.word_image = q.group().inv(q.word_image);
        break;
    }
    case Certificate::Type::Homology: {
        // Negate coordinates (mod each invariant factor).
        Abelianizer ab(p);
        const auto& torsion = ab.group().torsion;
        for (std::size_t i = 0; i < out.certificate.homology.size(); ++i) {
            BigInt& x = out.certificate.homology[i];
            x = -x;
            if (i < torsion.size()) {
                x %= torsion[i];
                if (x < 0) x += torsion[i];
            }
        }
        break;
    }
    default:
        break;
    }
    return out;
}

} // namespace slopelab
