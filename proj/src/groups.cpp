#include "slopelab/groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "slopelab/errors.hpp"

namespace slopelab {

std::string render_cycles(const Permutation& perm) {
    std::ostringstream os;
    std::vector<bool> seen(perm.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == static_cast<int>(i)) continue;
        any = true;
        os << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            os << (first ? "" : " ") << j + 1;
            first = false;
            j = static_cast<std::size_t>(perm[j]);
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

std::optional<Permutation> parse_cycles(std::string_view text, int degree) {
    Permutation perm(static_cast<std::size_t>(degree));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') return std::nullopt;
        ++i;
        std::vector<int> cycle;
        for (;;) {
            skip();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v < 1 || v > degree || used[static_cast<std::size_t>(v - 1)]) return std::nullopt;
            used[static_cast<std::size_t>(v - 1)] = true;
            cycle.push_back(v - 1);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            perm[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
        skip();
    }
    return perm;
}

void FiniteGroup::finish(std::vector<std::string> labels) {
    labels_ = std::move(labels);
    inverse_.assign(order_, 0);
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = 0; b < order_; ++b)
            if (mul(a, b) == 0) {
                inverse_[a] = b;
                break;
            }
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 6) throw Error("symmetric group degree must lie in 1..6");
    std::vector<Permutation> elems;
    Permutation perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        elems.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Identity is lexicographically first already; the Lehmer code gives the
    // lexicographic rank directly.
    auto rank = [n](const Permutation& q) {
        Elem r = 0;
        for (int i = 0; i < n; ++i) {
            Elem smaller = 0;
            for (int j = i + 1; j < n; ++j)
                if (q[static_cast<std::size_t>(j)] < q[static_cast<std::size_t>(i)]) ++smaller;
            r = r * static_cast<Elem>(n - i) + smaller;
        }
        return r;
    };

    FiniteGroup g;
    g.name_ = "S" + std::to_string(n);
    g.kind_ = Kind::Symmetric;
    g.parameter_ = n;
    g.order_ = elems.size();
    g.table_.resize(g.order_ * g.order_);
    Permutation prod(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < g.order_; ++a)
        for (std::size_t b = 0; b < g.order_; ++b) {
            for (int i = 0; i < n; ++i)
                prod[static_cast<std::size_t>(i)] =
                    elems[b][static_cast<std::size_t>(elems[a][static_cast<std::size_t>(i)])];
            g.table_[a * g.order_ + b] = rank(prod);
        }
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (const auto& e : elems) labels.push_back(render_cycles(e));
    g.finish(std::move(labels));
    return g;
}

namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

using Mat2 = std::array<int, 4>;

// Representative with the first nonzero entry in [1, (p-1)/2].
Mat2 normalize(Mat2 m, int p) {
    for (int& x : m) x = ((x % p) + p) % p;
    int lead = 0;
    for (int x : m)
        if (x != 0) {
            lead = x;
            break;
        }
    if (lead > (p - 1) / 2)
        for (int& x : m) x = (p - x) % p;
    return m;
}

std::string matrix_label(const Mat2& m) {
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) +
           "," + std::to_string(m[3]) + "]]";
}

} // namespace

FiniteGroup FiniteGroup::psl2(int p) {
    if (!is_odd_prime(p)) throw Error("PSL(2,p) requires an odd prime p");
    std::vector<Mat2> elems;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) {
                    if (((a * d - b * c) % p + p) % p != 1) continue;
                    Mat2 m{a, b, c, d};
                    if (normalize(m, p) == m) elems.push_back(m);
                }
    const Mat2 id{1, 0, 0, 1};
    std::sort(elems.begin(), elems.end());
    std::stable_partition(elems.begin(), elems.end(), [&](const Mat2& m) { return m == id; });

    auto key = [p](const Mat2& m) { return ((m[0] * p + m[1]) * p + m[2]) * p + m[3]; };
    std::unordered_map<int, Elem> index;
    for (Elem i = 0; i < elems.size(); ++i) index.emplace(key(elems[i]), i);

    FiniteGroup g;
    g.name_ = "PSL2_" + std::to_string(p);
    g.kind_ = Kind::PSL2;
    g.parameter_ = p;
    g.order_ = elems.size();
    g.table_.resize(g.order_ * g.order_);
    for (std::size_t i = 0; i < g.order_; ++i)
        for (std::size_t j = 0; j < g.order_; ++j) {
            const Mat2& x = elems[i];
            const Mat2& y = elems[j];
            Mat2 prod{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                      x[2] * y[1] + x[3] * y[3]};
            g.table_[i * g.order_ + j] = index.at(key(normalize(prod, p)));
        }
    std::vector<std::string> labels;
    for (const auto& m : elems) labels.push_back(matrix_label(m));
    g.finish(std::move(labels));
    return g;
}

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<Elem>>& table) {
    const std::size_t n = table.size();
    if (n == 0) throw Error("empty multiplication table");
    for (const auto& row : table) {
        if (row.size() != n) throw Error("multiplication table is not square");
        std::vector<bool> seen(n, false);
        for (Elem x : row) {
            if (x >= n || seen[x]) throw Error("multiplication table row is not a permutation");
            seen[x] = true;
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        if (table[0][a] != a || table[a][0] != a) throw Error("element 0 is not the identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error("multiplication table is not associative");
    FiniteGroup g;
    g.name_ = std::move(name);
    g.kind_ = Kind::Table;
    g.order_ = n;
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = table[a][b];
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    g.finish(std::move(labels));
    return g;
}

std::string FiniteGroup::label(Elem e) const { return labels_.at(e); }

std::optional<Elem> FiniteGroup::find(std::string_view label) const {
    std::string wanted(label);
    if (kind_ == Kind::Symmetric) {
        auto perm = parse_cycles(label, parameter_);
        if (!perm) return std::nullopt;
        wanted = render_cycles(*perm);
    }
    for (Elem i = 0; i < order_; ++i)
        if (labels_[i] == wanted) return i;
    return std::nullopt;
}

namespace {

std::mutex registry_mutex;
std::map<std::string, std::unique_ptr<FiniteGroup>, std::less<>> registry;

} // namespace

const FiniteGroup& register_group(FiniteGroup g) {
    std::lock_guard lock(registry_mutex);
    auto digits = [](std::string_view t) {
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    const std::string_view n = g.name();
    const bool reserved = (n.size() > 1 && n[0] == 'S' && digits(n.substr(1))) ||
                          (n.rfind("PSL2_", 0) == 0 && digits(n.substr(5)));
    if (reserved || registry.count(g.name()))
        throw Error("group name '" + g.name() + "' is already in use");
    std::string name = g.name();
    auto [it, _] = registry.emplace(name, std::make_unique<FiniteGroup>(std::move(g)));
    return *it->second;
}

const FiniteGroup& standard_group(std::string_view name) {
    std::lock_guard lock(registry_mutex);
    auto& cache = registry;
    if (auto it = cache.find(name); it != cache.end()) return *it->second;

    std::unique_ptr<FiniteGroup> g;
    auto number = [&](std::string_view digits) {
        if (digits.empty() || digits.size() > 3 ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw Error("unsupported target group '" + std::string(name) + "'");
        return std::stoi(std::string(digits));
    };
    if (name.size() > 1 && name[0] == 'S') {
        g = std::make_unique<FiniteGroup>(FiniteGroup::symmetric(number(name.substr(1))));
    } else if (name.rfind("PSL2_", 0) == 0) {
        int p = number(name.substr(5));
        if (p > 31) throw Error("PSL(2,p) targets are limited to p <= 31");
        g = std::make_unique<FiniteGroup>(FiniteGroup::psl2(p));
    } else {
        throw Error("unsupported target group '" + std::string(name) + "'");
    }
    auto [it, _] = cache.emplace(std::string(name), std::move(g));
    return *it->second;
}

std::vector<std::string> target_ladder(int sym_max, const std::vector<int>& psl2_primes) {
    std::vector<std::string> out;
    for (int n = 2; n <= sym_max; ++n) out.push_back("S" + std::to_string(n));
    for (int p : psl2_primes) out.push_back("PSL2_" + std::to_string(p));
    return out;
}

} // namespace slopelab
