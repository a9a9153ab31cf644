#include "slopelab/quotients.hpp"

#include <algorithm>

#ifdef SLOPELAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace slopelab {

RelatorSystem::RelatorSystem(const Presentation& p) : generators_(p.gens.size()) {
    for (const auto& r : p.relators) {
        // Conjugates impose the same condition; the cyclic core is shorter.
        relators_.push_back(to_letters(cyclic_reduce(r).core, p.gens));
    }
    index();
}

RelatorSystem::RelatorSystem(std::size_t generators, std::vector<std::vector<Letter>> relators)
    : generators_(generators), relators_(std::move(relators)) {
    index();
}

void RelatorSystem::index() {
    checks_.assign(generators_, {});
    constant_.clear();
    for (std::size_t i = 0; i < relators_.size(); ++i) {
        const auto& r = relators_[i];
        if (r.empty()) continue;
        std::size_t depth = 0;
        for (Letter x : r) depth = std::max<std::size_t>(depth, x / 2);
        if (depth >= generators_) throw Error("relator letter outside the generator range");
        checks_[depth].push_back(i);
    }
}

Elem evaluate(const FiniteGroup& g, std::span<const Elem> images, std::span<const Letter> letters) {
    Elem acc = FiniteGroup::identity();
    for (Letter x : letters) {
        Elem e = images[x / 2];
        acc = g.mul(acc, (x & 1u) ? g.inv(e) : e);
    }
    return acc;
}

namespace {

// Depth-first search over tuples with generators [0, fixed) already assigned.
// Returns false when stopped early (visitor or limit).
class Walker {
public:
    Walker(const FiniteGroup& g, const RelatorSystem& rels, std::uint64_t limit, HomSearchStats& stats,
           const std::function<bool(const ImageTuple&)>& visit)
        : g_(g), rels_(rels), limit_(limit), stats_(stats), visit_(visit),
          images_(rels.generators(), 0) {}

    bool run_from(std::size_t depth) {
        if (depth == rels_.generators()) return visit_(images_);
        const std::size_t n = g_.order();
        for (Elem e = 0; e < n; ++e) {
            if (!assign(depth, e)) return false;
            if (passes(depth) && !run_from(depth + 1)) return false;
        }
        return true;
    }

    // Assigns one image and charges the budget.
    bool assign(std::size_t depth, Elem e) {
        if (limit_ != 0 && stats_.assignments >= limit_) {
            stats_.complete = false;
            return false;
        }
        ++stats_.assignments;
        images_[depth] = e;
        return true;
    }

    bool passes(std::size_t depth) const {
        for (std::size_t i : rels_.checks_at(depth))
            if (evaluate(g_, images_, rels_.relators()[i]) != FiniteGroup::identity()) return false;
        return true;
    }

private:
    const FiniteGroup& g_;
    const RelatorSystem& rels_;
    std::uint64_t limit_;
    HomSearchStats& stats_;
    const std::function<bool(const ImageTuple&)>& visit_;
    ImageTuple images_;
};

} // namespace

void for_each_hom(const FiniteGroup& g, const RelatorSystem& rels, std::uint64_t max_assignments,
                  HomSearchStats& stats, const std::function<bool(const ImageTuple&)>& visit) {
    Walker w(g, rels, max_assignments, stats, visit);
    w.run_from(0);
}

std::vector<ImageTuple> enumerate_homs_serial(const FiniteGroup& g, const RelatorSystem& rels,
                                              std::uint64_t max_assignments, HomSearchStats& stats) {
    std::vector<ImageTuple> out;
    for_each_hom(g, rels, max_assignments, stats, [&](const ImageTuple& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

namespace {

struct Chunk {
    std::vector<ImageTuple> homs;
    HomSearchStats stats;
};

// Subtree rooted at generator 0 = first, including the root assignment.
Chunk run_chunk(const FiniteGroup& g, const RelatorSystem& rels, Elem first, std::uint64_t limit) {
    Chunk c;
    std::function<bool(const ImageTuple&)> keep = [&](const ImageTuple& t) {
        c.homs.push_back(t);
        return true;
    };
    Walker w(g, rels, limit, c.stats, keep);
    if (w.assign(0, first) && w.passes(0)) w.run_from(1);
    return c;
}

} // namespace

std::vector<ImageTuple> enumerate_homs_parallel(const FiniteGroup& g, const RelatorSystem& rels,
                                                std::uint64_t max_assignments, HomSearchStats& stats) {
    if (rels.generators() == 0) return enumerate_homs_serial(g, rels, max_assignments, stats);

    const auto n = static_cast<std::int64_t>(g.order());
    std::int64_t block = 64;
#ifdef SLOPELAB_HAVE_OPENMP
    block = std::max<std::int64_t>(block, 8 * omp_get_max_threads());
#endif
    std::vector<ImageTuple> out;
    for (std::int64_t start = 0; start < n; start += block) {
        const std::int64_t stop = std::min(n, start + block);
        const std::uint64_t remaining =
            max_assignments == 0 ? 0 : max_assignments - std::min(max_assignments, stats.assignments);
        if (max_assignments != 0 && remaining == 0) {
            stats.complete = false;
            break;
        }
        std::vector<Chunk> chunks(static_cast<std::size_t>(stop - start));
#ifdef SLOPELAB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::int64_t e = start; e < stop; ++e)
            chunks[static_cast<std::size_t>(e - start)] = run_chunk(g, rels, static_cast<Elem>(e), remaining);

        // Merge in canonical order; the first chunk that crosses the limit is
        // replayed with the exact remaining budget, matching the serial walk.
        for (std::int64_t e = start; e < stop; ++e) {
            Chunk& c = chunks[static_cast<std::size_t>(e - start)];
            const std::uint64_t left =
                max_assignments == 0 ? 0 : max_assignments - std::min(max_assignments, stats.assignments);
            if (max_assignments != 0 && (!c.stats.complete || c.stats.assignments > left)) {
                if (left == 0) {
                    stats.complete = false;
                    return out;
                }
                Chunk exact = run_chunk(g, rels, static_cast<Elem>(e), left);
                stats.assignments += exact.stats.assignments;
                out.insert(out.end(), exact.homs.begin(), exact.homs.end());
                if (!exact.stats.complete) {
                    stats.complete = false;
                    return out;
                }
                continue;
            }
            stats.assignments += c.stats.assignments;
            out.insert(out.end(), std::make_move_iterator(c.homs.begin()), std::make_move_iterator(c.homs.end()));
        }
    }
    return out;
}

std::vector<std::string> FiniteQuotient::image_labels() const {
    const FiniteGroup& g = group();
    std::vector<std::string> out;
    for (Elem e : images) out.push_back(g.label(e));
    return out;
}

std::optional<FiniteQuotient> finite_quotient_search(const Presentation& p, const Word& w,
                                                     const std::vector<std::string>& targets,
                                                     std::uint64_t max_assignments_per_target,
                                                     HomSearchStats* stats) {
    p.gens.check(w);
    if (w.is_identity()) return std::nullopt;
    RelatorSystem rels(p);
    auto letters = to_letters(w, p.gens);
    HomSearchStats total;
    std::optional<FiniteQuotient> found;
    for (const auto& name : targets) {
        const FiniteGroup& g = standard_group(name);
        HomSearchStats s;
        for_each_hom(g, rels, max_assignments_per_target, s, [&](const ImageTuple& t) {
            Elem img = evaluate(g, t, letters);
            if (img == FiniteGroup::identity()) return true;
            found = FiniteQuotient{name, p.gens.names(), t, img};
            return false;
        });
        total.assignments += s.assignments;
        if (!found && !s.complete) total.complete = false;
        if (found) break;
    }
    if (stats) *stats = total;
    return found;
}

} // namespace slopelab
