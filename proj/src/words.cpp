#include "slopelab/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace slopelab {

Word Word::reduce(std::span<const Syllable> raw) {
    Word out;
    auto& st = out.syl_;
    st.reserve(raw.size());
    for (const auto& s : raw) {
        if (s.exp == 0) continue;
        if (!st.empty() && st.back().gen == s.gen) {
            st.back().exp += s.exp;
            if (st.back().exp == 0) st.pop_back();
        } else {
            st.push_back(s);
        }
    }
    return out;
}

Word Word::generator(std::string name, std::int64_t exp) {
    Syllable s{std::move(name), exp};
    return reduce(std::span<const Syllable>(&s, 1));
}

std::uint64_t Word::length() const {
    std::uint64_t n = 0;
    for (const auto& s : syl_) n += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
    return n;
}

std::int64_t Word::exponent_sum(std::string_view gen) const {
    std::int64_t total = 0;
    for (const auto& s : syl_)
        if (s.gen == gen) total += s.exp;
    return total;
}

Word Word::inverse() const {
    Word out;
    out.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) out.syl_.push_back({it->gen, -it->exp});
    return out;
}

Word Word::pow(std::int64_t k) const {
    if (k == 0 || is_identity()) return {};
    if (k < 0) return inverse().pow(-k);
    if (k == 1) return *this;
    auto [core, conj] = cyclic_reduce(*this);
    Word body;
    if (core.syl_.size() == 1) {
        body.syl_.push_back({core.syl_[0].gen, core.syl_[0].exp * k});
    } else {
        body.syl_.reserve(core.syl_.size() * static_cast<std::size_t>(k));
        for (std::int64_t i = 0; i < k; ++i)
            body.syl_.insert(body.syl_.end(), core.syl_.begin(), core.syl_.end());
    }
    return conj.inverse() * body * conj;
}

Word operator*(const Word& a, const Word& b) {
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;
    std::vector<Syllable> raw;
    raw.reserve(a.syl_.size() + b.syl_.size());
    raw.insert(raw.end(), a.syl_.begin(), a.syl_.end());
    raw.insert(raw.end(), b.syl_.begin(), b.syl_.end());
    return Word::reduce(raw);
}

bool operator<(const Word& a, const Word& b) {
    return std::lexicographical_compare(
        a.syl_.begin(), a.syl_.end(), b.syl_.begin(), b.syl_.end(),
        [](const Syllable& x, const Syllable& y) {
            return x.gen != y.gen ? x.gen < y.gen : x.exp < y.exp;
        });
}

Word free_reduce(std::span<const Syllable> raw) { return Word::reduce(raw); }

bool is_cyclically_reduced(const Word& w) {
    const auto& s = w.syllables();
    return s.size() <= 1 || s.front().gen != s.back().gen;
}

CyclicReduction cyclic_reduce(const Word& w) {
    std::vector<Syllable> body = w.syllables();
    // Peeled syllables, outermost first: w = s_0 ... s_k core s_k^-1 ... s_0^-1.
    std::vector<Syllable> peeled;
    std::size_t lo = 0, hi = body.size();
    while (hi - lo >= 2 && body[lo].gen == body[hi - 1].gen) {
        const auto& first = body[lo];
        const auto& last = body[hi - 1];
        if (first.exp + last.exp == 0) {
            peeled.push_back(first);
            ++lo;
            --hi;
        } else {
            // s^e1 M s^e2 = s^-e2 (s^(e1+e2) M) s^e2
            peeled.push_back({last.gen, -last.exp});
            body[lo].exp = first.exp + last.exp;
            --hi;
            break;
        }
    }
    std::vector<Syllable> core(body.begin() + static_cast<std::ptrdiff_t>(lo),
                               body.begin() + static_cast<std::ptrdiff_t>(hi));
    // conjugator = (s_0 ... s_k)^-1
    std::vector<Syllable> prefix(peeled.begin(), peeled.end());
    Word outer = Word::reduce(prefix);
    return {Word::reduce(core), outer.inverse()};
}

Word conjugate(const Word& g, const Word& b) { return b.inverse() * g * b; }

Word commutator(const Word& g, const Word& h) { return g * h * g.inverse() * h.inverse(); }

Word bmt_word(const Word& v, const Word& u) {
    Word vu = conjugate(v, u);
    return vu.inverse() * v * vu * v.pow(-2);
}

Word substitute(const Word& w, const std::map<std::string, Word>& images) {
    Word out;
    for (const auto& s : w.syllables()) {
        auto it = images.find(s.gen);
        if (it == images.end())
            out = out * Word::generator(s.gen, s.exp);
        else
            out = out * it->second.pow(s.exp);
    }
    return out;
}

std::vector<std::string> generators_in(const Word& w) {
    std::vector<std::string> out;
    for (const auto& s : w.syllables())
        if (std::find(out.begin(), out.end(), s.gen) == out.end()) out.push_back(s.gen);
    return out;
}

bool is_valid_generator_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!is_valid_generator_name(names_[i]))
            throw SyntaxError("invalid generator name '" + names_[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == names_[i])
                throw SyntaxError("duplicate generator '" + names_[i] + "'");
    }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

void Alphabet::check(const Word& w) const {
    for (const auto& s : w.syllables())
        if (!contains(s.gen)) throw UnknownGenerator(s.gen);
}

std::vector<Letter> to_letters(const Word& w, const Alphabet& alphabet) {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(w.length()));
    for (const auto& s : w.syllables()) {
        auto idx = alphabet.index_of(s.gen);
        if (!idx) throw UnknownGenerator(s.gen);
        Letter x = static_cast<Letter>(2 * *idx + (s.exp < 0 ? 1 : 0));
        std::int64_t n = s.exp < 0 ? -s.exp : s.exp;
        out.insert(out.end(), static_cast<std::size_t>(n), x);
    }
    return out;
}

Word from_letters(std::span<const Letter> letters, const Alphabet& alphabet) {
    std::vector<Syllable> raw;
    raw.reserve(letters.size());
    for (Letter x : letters)
        raw.push_back({alphabet.names().at(x / 2), (x & 1u) ? -1 : 1});
    return Word::reduce(raw);
}

std::vector<Letter> reduce_letters(std::span<const Letter> letters) {
    std::vector<Letter> st;
    st.reserve(letters.size());
    for (Letter x : letters) {
        if (!st.empty() && st.back() == inverse_letter(x))
            st.pop_back();
        else
            st.push_back(x);
    }
    return st;
}

std::string render(const Word& w) {
    std::ostringstream os;
    bool first = true;
    for (const auto& s : w.syllables()) {
        if (!first) os << ' ';
        first = false;
        os << s.gen;
        if (s.exp != 1) os << '^' << s.exp;
    }
    return os.str();
}

namespace {

std::int64_t parse_exponent(std::string_view digits, std::string_view token) {
    std::int64_t value = 0;
    auto begin = digits.data();
    auto end = digits.data() + digits.size();
    if (!digits.empty() && digits.front() == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end)
        throw SyntaxError("malformed exponent in '" + std::string(token) + "'");
    if (value == 0) throw ZeroExponent(std::string(token));
    return value;
}

} // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    std::vector<Syllable> raw;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::string_view token = text.substr(i, j - i);
        i = j;
        auto caret = token.find('^');
        std::string_view name = token.substr(0, caret);
        if (!is_valid_generator_name(name))
            throw SyntaxError("malformed syllable '" + std::string(token) + "'");
        std::int64_t exp = 1;
        if (caret != std::string_view::npos) exp = parse_exponent(token.substr(caret + 1), token);
        if (!alphabet.contains(name)) throw UnknownGenerator(std::string(name));
        raw.push_back({std::string(name), exp});
    }
    return Word::reduce(raw);
}

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const Alphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    Word parse() {
        Word w = sequence();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(what + " at offset " + std::to_string(pos_) + " in '" +
                          std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_primary() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == '(' || c == '[' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
    }

    Word sequence() {
        Word w;
        while (starts_primary()) w = w * term();
        return w;
    }

    Word term() {
        Word base = primary();
        while (at('^')) {
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() &&
                (text_[pos_] == '-' || text_[pos_] == '+' ||
                 std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
                std::size_t start = pos_;
                ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                auto tok = text_.substr(start, pos_ - start);
                base = base.pow(parse_exponent(tok, tok));
            } else if (starts_primary()) {
                base = conjugate(base, primary());
            } else {
                fail("expected exponent or conjugator");
            }
        }
        return base;
    }

    Word primary() {
        skip_ws();
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Word w = sequence();
            if (!at(')')) fail("expected ')'");
            ++pos_;
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word g = sequence();
            if (!at(',')) fail("expected ','");
            ++pos_;
            Word h = sequence();
            if (!at(']')) fail("expected ']'");
            ++pos_;
            return commutator(g, h);
        }
        if (c == '1') {
            ++pos_;
            return {};
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (alphabet_.size() > 0 && !alphabet_.contains(name)) throw UnknownGenerator(name);
        return Word::generator(name);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

Word parse_expression(std::string_view text, const Alphabet& alphabet) {
    return ExpressionParser(text, alphabet).parse();
}

} // namespace slopelab
