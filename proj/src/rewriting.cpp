#include "slopelab/rewriting.hpp"

#include <algorithm>

namespace slopelab {

Word witness_product(const Presentation& p, const NormalClosureWitness& witness) {
    Word acc;
    for (const auto& f : witness.factors) {
        const Word& r = p.relators.at(f.relator);
        acc = acc * conjugate(f.sign > 0 ? r : r.inverse(), f.conjugator);
    }
    return acc;
}

bool check_witness(const Presentation& p, const Word& w, const NormalClosureWitness& witness) {
    for (const auto& f : witness.factors)
        if (f.relator >= p.relators.size() || (f.sign != 1 && f.sign != -1)) return false;
    return witness_product(p, witness) == w;
}

NormalClosureWitness conjugate_witness(const NormalClosureWitness& witness, const Word& c) {
    // c^-1 (u^-1 r u) c = (u c)^-1 r (u c)
    NormalClosureWitness out = witness;
    for (auto& f : out.factors) f.conjugator = f.conjugator * c;
    return out;
}

NormalClosureWitness invert_witness(const NormalClosureWitness& witness) {
    NormalClosureWitness out;
    for (auto it = witness.factors.rbegin(); it != witness.factors.rend(); ++it)
        out.factors.push_back({it->conjugator, it->relator, -it->sign});
    return out;
}

namespace {

using Letters = std::vector<Letter>;

Letters invert(const Letters& w) {
    Letters out(w.rbegin(), w.rend());
    for (auto& x : out) x = inverse_letter(x);
    return out;
}

Letters concat(std::initializer_list<const Letters*> parts) {
    Letters out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return reduce_letters(out);
}

// Reduced w = conj^-1 core conj with core cyclically reduced.
void cyclic_core(const Letters& w, Letters& core, Letters& conj) {
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == inverse_letter(w[hi - 1])) {
        ++lo;
        --hi;
    }
    core.assign(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
    // w = P core P^-1 with P = w[0, lo); conj = P^-1
    Letters prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(lo));
    conj = invert(prefix);
}

struct Rotation {
    Letters word;      // cyclic permutation of the core of source^sign
    Letters conj;      // word = conj^-1 source^sign conj
    std::size_t source; // relator index, or relators.size() + lemma index
    int sign;
};

std::vector<Rotation> symmetrize(const Presentation& p, std::span<const DerivedRelator> lemmas) {
    std::vector<Rotation> out;
    for (std::size_t k = 0; k < p.relators.size() + lemmas.size(); ++k) {
        const Word& source = k < p.relators.size() ? p.relators[k] : lemmas[k - p.relators.size()].word;
        for (int sign : {1, -1}) {
            Letters r = to_letters(sign > 0 ? source : source.inverse(), p.gens);
            Letters core, conj; // r = conj^-1 core conj, so core = conj r conj^-1
            cyclic_core(r, core, conj);
            if (core.empty()) continue;
            for (std::size_t t = 0; t < core.size(); ++t) {
                // rotation = x^-1 core x with x = core[0, t)
                Letters rot(core.begin() + static_cast<std::ptrdiff_t>(t), core.end());
                rot.insert(rot.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(t));
                Letters x(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(t));
                // rot = x^-1 conj r conj^-1 x = v^-1 r v with v = conj^-1 x
                Letters conj_inv = invert(conj);
                Letters v = concat({&conj_inv, &x});
                if (std::any_of(out.begin(), out.end(), [&](const Rotation& o) { return o.word == rot; }))
                    continue;
                out.push_back({std::move(rot), std::move(v), k, sign});
            }
        }
    }
    return out;
}

} // namespace

std::optional<NormalClosureWitness> dehn_certify(const Presentation& p, const Word& w, std::size_t max_steps,
                                                 std::span<const DerivedRelator> lemmas) {
    const auto rotations = symmetrize(p, lemmas);
    Letters current = to_letters(w, p.gens);
    NormalClosureWitness witness;

    for (std::size_t step = 0;; ++step) {
        if (current.empty()) return witness;
        if (step >= max_steps || rotations.empty()) return std::nullopt;

        Letters core, kconj;
        cyclic_core(current, core, kconj);
        const std::size_t n = core.size();

        std::ptrdiff_t best_gain = 0;
        std::size_t best_pos = 0, best_rot = 0, best_len = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < rotations.size(); ++k) {
                const Letters& c = rotations[k].word;
                const std::size_t limit = std::min(n, c.size());
                std::size_t len = 0;
                while (len < limit && core[(i + len) % n] == c[len]) ++len;
                const auto gain = static_cast<std::ptrdiff_t>(2 * len) - static_cast<std::ptrdiff_t>(c.size());
                if (gain > best_gain) {
                    best_gain = gain;
                    best_pos = i;
                    best_rot = k;
                    best_len = len;
                }
            }
        }
        if (best_gain <= 0) return std::nullopt;

        const Rotation& rot = rotations[best_rot];
        // core_i = P^-1 core P with P = core[0, i); current = M^-1 core_i M, M = P^-1 kconj.
        Letters prefix(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(best_pos));
        Letters prefix_inv = invert(prefix);
        Letters m = concat({&prefix_inv, &kconj});
        Letters m_inv = invert(m);
        // core_i = s B with c = s t; core_i = c t^-1 B.
        Letters rest; // t^-1 B
        Letters t(rot.word.begin() + static_cast<std::ptrdiff_t>(best_len), rot.word.end());
        rest = invert(t);
        for (std::size_t j = best_len; j < n; ++j) rest.push_back(core[(best_pos + j) % n]);
        // factor: M^-1 c M = (v M)^-1 r^sign (v M)
        const Word u = from_letters(concat({&rot.conj, &m}), p.gens);
        if (rot.source < p.relators.size()) {
            witness.factors.push_back({u, rot.source, rot.sign});
        } else {
            const NormalClosureWitness& lw = lemmas[rot.source - p.relators.size()].witness;
            const NormalClosureWitness expanded = conjugate_witness(rot.sign > 0 ? lw : invert_witness(lw), u);
            witness.factors.insert(witness.factors.end(), expanded.factors.begin(), expanded.factors.end());
        }
        current = concat({&m_inv, &rest, &m});
    }
}

} // namespace slopelab
