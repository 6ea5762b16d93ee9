#include "ietk/words.hpp"

#include <algorithm>
#include <unordered_set>

namespace ietk {

std::string_view alphabet_letters(Alphabet a) {
    return a == Alphabet::Binary ? std::string_view("01") : std::string_view("ABC");
}

bool letter_in(Alphabet a, char c) { return alphabet_letters(a).find(c) != std::string_view::npos; }

int letter_index(Alphabet a, char c) {
    size_t i = alphabet_letters(a).find(c);
    if (i == std::string_view::npos)
        fail(Errc::AlphabetMismatch, std::string("letter '") + c + "' not in alphabet");
    return static_cast<int>(i);
}

char letter_at_index(Alphabet a, int i) { return alphabet_letters(a)[static_cast<size_t>(i)]; }

namespace {

void check_letters(Alphabet a, std::string_view s) {
    for (char c : s) {
        if (!letter_in(a, c))
            fail(Errc::AlphabetMismatch, std::string("letter '") + c + "' not in alphabet");
    }
}

} // namespace

PointedWord::PointedWord(Alphabet alphabet, std::string left, std::string right)
    : alphabet_(alphabet), left_(std::move(left)), right_(std::move(right)) {
    check_letters(alphabet_, left_);
    check_letters(alphabet_, right_);
}

PointedWord PointedWord::parse(std::string_view text, Alphabet alphabet) {
    size_t bar = text.find('|');
    if (bar == std::string_view::npos)
        fail(Errc::ParseError, "pointed word needs a '|' mark");
    std::string left(text.substr(0, bar));
    std::reverse(left.begin(), left.end());
    return PointedWord(alphabet, std::move(left), std::string(text.substr(bar + 1)));
}

char PointedWord::at(long n) const {
    if (!has_index(n))
        fail(Errc::WindowTooShort, "index " + std::to_string(n) + " outside window");
    if (n >= 0)
        return right_[static_cast<size_t>(n)];
    return left_[static_cast<size_t>(-n - 1)];
}

std::string PointedWord::to_string() const {
    std::string s(left_.rbegin(), left_.rend());
    s += '|';
    s += right_;
    return s;
}

std::string PointedWord::flattened() const {
    std::string s(left_.rbegin(), left_.rend());
    s += right_;
    return s;
}

FactorSet factors(const PointedWord& w, size_t n) {
    if (n > w.size())
        fail(Errc::WindowTooShort,
             "factor length " + std::to_string(n) + " exceeds window of " + std::to_string(w.size()));
    FactorSet fs;
    fs.length = n;
    if (n == 0) {
        fs.factors.insert("");
        return fs;
    }
    std::string flat = w.flattened();
    for (size_t i = 0; i + n <= flat.size(); ++i)
        fs.factors.insert(flat.substr(i, n));
    return fs;
}

std::vector<size_t> complexity_profile(const PointedWord& w, size_t n_max) {
    if (n_max > w.size())
        fail(Errc::WindowTooShort, "profile length exceeds window");
    std::string flat = w.flattened();
    std::vector<size_t> profile;
    profile.reserve(n_max);
    std::unordered_set<std::string_view> seen;
    for (size_t n = 1; n <= n_max; ++n) {
        seen.clear();
        std::string_view sv(flat);
        for (size_t i = 0; i + n <= sv.size(); ++i)
            seen.insert(sv.substr(i, n));
        profile.push_back(seen.size());
    }
    return profile;
}

size_t balance_defect(const PointedWord& w, size_t n_max) {
    if (w.alphabet() != Alphabet::Binary)
        fail(Errc::AlphabetMismatch, "balance defect is defined for binary words");
    std::string flat = w.flattened();
    size_t defect = 0;
    for (size_t n = 1; n <= std::min(n_max, flat.size()); ++n) {
        size_t zeros = 0;
        for (size_t i = 0; i < n; ++i)
            zeros += flat[i] == '0';
        size_t lo = zeros, hi = zeros;
        for (size_t i = n; i < flat.size(); ++i) {
            zeros += flat[i] == '0';
            zeros -= flat[i - n] == '0';
            lo = std::min(lo, zeros);
            hi = std::max(hi, zeros);
        }
        defect = std::max(defect, hi - lo);
    }
    return defect;
}

std::vector<Rational> empirical_densities(const PointedWord& w) {
    if (w.size() == 0)
        fail(Errc::EmptyWord, "densities of an empty window");
    std::vector<Int> counts(static_cast<size_t>(alphabet_size(w.alphabet())), Int(0));
    std::string flat = w.flattened();
    for (char c : flat)
        counts[static_cast<size_t>(letter_index(w.alphabet(), c))] += 1;
    std::vector<Rational> out;
    out.reserve(counts.size());
    for (const Int& c : counts)
        out.push_back(make_rational(c, Int(flat.size())));
    return out;
}

Rational metric_distance(const PointedWord& u, const PointedWord& v) {
    if (u.alphabet() != v.alphabet())
        fail(Errc::AlphabetMismatch, "metric over words of different alphabets");
    long reach = std::max(std::max(u.end_index(), -u.begin_index()),
                          std::max(v.end_index(), -v.begin_index()));
    for (long j = 0; j < reach; ++j) {
        for (long n : {j, -j}) {
            if (u.has_index(n) && v.has_index(n) && u.at(n) != v.at(n))
                return make_rational(1, j + 1);
        }
    }
    return Rational(0);
}

FactorSubsetResult is_factor_subset(const PointedWord& w, std::span<const FactorSet> lang,
                                    size_t n_max) {
    for (size_t n = 1; n <= std::min(n_max, w.size()); ++n) {
        if (n > lang.size() || lang[n - 1].length != n)
            fail(Errc::IncompleteLanguage, "language lacks factors of length " + std::to_string(n));
    }
    std::string flat = w.flattened();
    std::string_view sv(flat);
    for (size_t n = 1; n <= std::min(n_max, sv.size()); ++n) {
        const auto& known = lang[n - 1].factors;
        for (size_t i = 0; i + n <= sv.size(); ++i) {
            std::string_view f = sv.substr(i, n);
            if (known.find(f) == known.end())
                return {false, std::string(f)};
        }
    }
    return {true, ""};
}

std::vector<FactorSet> language_of(const PointedWord& w, size_t n_max) {
    std::vector<FactorSet> lang;
    lang.reserve(n_max);
    std::string flat = w.flattened();
    std::string_view sv(flat);
    for (size_t n = 1; n <= n_max; ++n) {
        FactorSet fs;
        fs.length = n;
        for (size_t i = 0; i + n <= sv.size(); ++i)
            fs.factors.insert(std::string(sv.substr(i, n)));
        lang.push_back(std::move(fs));
    }
    return lang;
}

} // namespace ietk
