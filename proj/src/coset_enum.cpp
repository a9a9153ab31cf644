#include "slopelab/coset_enum.hpp"

#include <algorithm>
#include <numeric>

namespace slopelab {

CosetTable::CosetTable(Alphabet gens, std::size_t cosets, std::vector<std::int32_t> action)
    : gens_(std::move(gens)), cosets_(cosets), action_(std::move(action)) {}

std::size_t CosetTable::apply(std::size_t coset, std::span<const Letter> letters) const {
    for (Letter x : letters) coset = act(coset, x);
    return coset;
}

std::vector<std::size_t> CosetTable::permutation(const Word& w) const {
    auto letters = to_letters(w, gens_);
    std::vector<std::size_t> out(cosets_);
    for (std::size_t c = 0; c < cosets_; ++c) out[c] = apply(c, letters);
    return out;
}

namespace {

class Enumerator {
public:
    Enumerator(const Presentation& p, const ToddCoxeterOptions& opt)
        : gens_(p.gens), cols_(2 * p.gens.size()), cap_(std::max<std::size_t>(opt.max_cosets, 1)),
          max_defs_(opt.max_definitions ? opt.max_definitions : 32ull * cap_), deadline_(opt.deadline) {
        for (const auto& r : p.relators) {
            auto letters = to_letters(cyclic_reduce(r).core, p.gens);
            if (!letters.empty()) relators_.push_back(std::move(letters));
        }
        reserve_ = cols_;
        for (const auto& r : relators_) reserve_ += r.size();
        table_.assign(cap_ * cols_, -1);
        parent_.resize(cap_);
        parent_[0] = 0;
        top_ = 1;
        alive_ = 1;
    }

    CosetEnumeration run() {
        CosetEnumeration result;
        if (cols_ == 0) {
            result.table = CosetTable(gens_, 1, {});
            result.stats = stats_;
            result.stats.max_alive = 1;
            return result;
        }
        bool ok = hlt();
        stats_.max_alive = std::max(stats_.max_alive, alive_);
        if (ok) ok = verify_complete();
        if (ok) result.table = standardize();
        result.stats = stats_;
        return result;
    }

private:
    std::int32_t& at(std::size_t c, Letter x) { return table_[c * cols_ + x]; }
    bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

    std::int32_t rep(std::int32_t c) {
        std::int32_t r = c;
        while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
        while (parent_[static_cast<std::size_t>(c)] != r) {
            std::int32_t next = parent_[static_cast<std::size_t>(c)];
            parent_[static_cast<std::size_t>(c)] = r;
            c = next;
        }
        return r;
    }

    void define(std::size_t c, Letter x) {
        const auto fresh = static_cast<std::int32_t>(top_++);
        parent_[static_cast<std::size_t>(fresh)] = fresh;
        std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(fresh) * cols_),
                    cols_, -1);
        at(c, x) = fresh;
        at(static_cast<std::size_t>(fresh), inverse_letter(x)) = static_cast<std::int32_t>(c);
        ++alive_;
        ++stats_.defined;
        stats_.max_alive = std::max(stats_.max_alive, alive_);
    }

    void merge(std::int32_t k, std::int32_t l) {
        k = rep(k);
        l = rep(l);
        if (k == l) return;
        if (k > l) std::swap(k, l);
        parent_[static_cast<std::size_t>(l)] = k;
        queue_.push_back(l);
        --alive_;
    }

    void coincidence(std::int32_t a, std::int32_t b) {
        queue_.clear();
        merge(a, b);
        for (std::size_t i = 0; i < queue_.size(); ++i) {
            const auto g = static_cast<std::size_t>(queue_[i]);
            for (Letter x = 0; x < cols_; ++x) {
                const std::int32_t d = at(g, x);
                if (d < 0) continue;
                const Letter xi = inverse_letter(x);
                if (at(static_cast<std::size_t>(d), xi) == static_cast<std::int32_t>(g))
                    at(static_cast<std::size_t>(d), xi) = -1;
                const std::int32_t mu = rep(static_cast<std::int32_t>(g));
                const std::int32_t nu = rep(d);
                const auto umu = static_cast<std::size_t>(mu), unu = static_cast<std::size_t>(nu);
                if (at(umu, x) >= 0) {
                    merge(nu, at(umu, x));
                } else if (at(unu, xi) >= 0) {
                    merge(mu, at(unu, xi));
                } else {
                    at(umu, x) = nu;
                    at(unu, xi) = mu;
                }
            }
        }
    }

    // Scans relator r from coset a; defines new cosets only when fill is set.
    void scan(std::size_t a, const std::vector<Letter>& r, bool fill) {
        auto f = static_cast<std::int32_t>(a), b = f;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(r.size()) - 1;
        for (;;) {
            while (i <= j && at(static_cast<std::size_t>(f), r[static_cast<std::size_t>(i)]) >= 0)
                f = at(static_cast<std::size_t>(f), r[static_cast<std::size_t>(i++)]);
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i &&
                   at(static_cast<std::size_t>(b), inverse_letter(r[static_cast<std::size_t>(j)])) >= 0)
                b = at(static_cast<std::size_t>(b), inverse_letter(r[static_cast<std::size_t>(j--)]));
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                const Letter x = r[static_cast<std::size_t>(i)];
                at(static_cast<std::size_t>(f), x) = b;
                at(static_cast<std::size_t>(b), inverse_letter(x)) = f;
                return;
            }
            if (!fill) return;
            define(static_cast<std::size_t>(f), r[static_cast<std::size_t>(i)]);
        }
    }

    // Scans every relator at every live coset without defining; then packs the
    // live cosets to the front, preserving order. Returns the new index of the
    // first live coset at or after `position`.
    std::size_t lookahead(std::size_t position) {
        ++stats_.lookaheads;
        for (std::size_t c = 0; c < top_; ++c) {
            for (const auto& r : relators_) {
                if (!alive(c)) break;
                scan(c, r, false);
            }
        }
        std::vector<std::int32_t> remap(top_, -1);
        std::size_t next = 0;
        for (std::size_t c = 0; c < top_; ++c)
            if (alive(c)) remap[c] = static_cast<std::int32_t>(next++);
        std::size_t new_position = next;
        for (std::size_t c = position; c < top_; ++c)
            if (remap[c] >= 0) {
                new_position = static_cast<std::size_t>(remap[c]);
                break;
            }
        for (std::size_t c = 0; c < top_; ++c) {
            if (remap[c] < 0) continue;
            const auto dst = static_cast<std::size_t>(remap[c]);
            for (Letter x = 0; x < cols_; ++x) {
                std::int32_t e = at(c, x);
                table_[dst * cols_ + x] = e < 0 ? -1 : remap[static_cast<std::size_t>(rep(e))];
            }
        }
        top_ = next;
        for (std::size_t c = 0; c < top_; ++c) parent_[c] = static_cast<std::int32_t>(c);
        alive_ = top_;
        return new_position;
    }

    bool out_of_time() {
        if (!deadline_) return false;
        if (std::chrono::steady_clock::now() < *deadline_) return false;
        stats_.timed_out = true;
        return true;
    }

    bool hlt() {
        std::size_t step = 0;
        for (std::size_t a = 0; a < top_; ++a) {
            if (!alive(a)) continue;
            if ((++step & 1023u) == 0 && out_of_time()) return false;
            if (stats_.defined > max_defs_) return false;
            if (top_ + reserve_ > cap_) {
                a = lookahead(a);
                if (top_ + reserve_ > cap_ || alive_ * 20 > cap_ * 19) return false;
                if (a >= top_) break;
            }
            for (const auto& r : relators_) {
                if (!alive(a)) break;
                scan(a, r, true);
            }
            if (!alive(a)) continue;
            for (Letter x = 0; x < cols_; ++x)
                if (at(a, x) < 0) define(a, x);
        }
        return true;
    }

    bool verify_complete() {
        // Pack first so that every index below top_ is live.
        lookahead(0);
        for (std::size_t c = 0; c < top_; ++c)
            for (Letter x = 0; x < cols_; ++x)
                if (at(c, x) < 0) return false;
        for (std::size_t c = 0; c < top_; ++c)
            for (const auto& r : relators_) {
                std::size_t d = c;
                for (Letter x : r) d = static_cast<std::size_t>(at(d, x));
                if (d != c) return false;
            }
        return true;
    }

    // Renumbers cosets in breadth-first order from coset 0.
    CosetTable standardize() {
        std::vector<std::int32_t> order, label(top_, -1);
        order.reserve(top_);
        order.push_back(0);
        label[0] = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const auto c = static_cast<std::size_t>(order[i]);
            for (Letter x = 0; x < cols_; ++x) {
                const auto d = static_cast<std::size_t>(at(c, x));
                if (label[d] < 0) {
                    label[d] = static_cast<std::int32_t>(order.size());
                    order.push_back(static_cast<std::int32_t>(d));
                }
            }
        }
        std::vector<std::int32_t> action(order.size() * cols_);
        for (std::size_t i = 0; i < order.size(); ++i)
            for (Letter x = 0; x < cols_; ++x)
                action[i * cols_ + x] = label[static_cast<std::size_t>(at(static_cast<std::size_t>(order[i]), x))];
        return CosetTable(gens_, order.size(), std::move(action));
    }

    Alphabet gens_;
    std::size_t cols_;
    std::size_t cap_;
    std::uint64_t max_defs_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::vector<std::vector<Letter>> relators_;
    std::size_t reserve_ = 0;
    std::vector<std::int32_t> table_;
    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> queue_;
    std::size_t top_ = 0;
    std::size_t alive_ = 0;
    CosetEnumerationStats stats_;
};

} // namespace

CosetEnumeration todd_coxeter(const Presentation& p, const ToddCoxeterOptions& options) {
    return Enumerator(p, options).run();
}

CosetEnumeration todd_coxeter(const Presentation& p, std::size_t max_cosets) {
    ToddCoxeterOptions opt;
    opt.max_cosets = max_cosets;
    return todd_coxeter(p, opt);
}

bool decide_in_finite(const CosetTable& table, const Word& w) {
    auto letters = to_letters(w, table.gens());
    for (std::size_t c = 0; c < table.cosets(); ++c)
        if (table.apply(c, letters) != c) return false;
    return true;
}

} // namespace slopelab
