#ifndef IETK_WORDS_HPP
#define IETK_WORDS_HPP

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ietk/numbers.hpp"

namespace ietk {

enum class Alphabet { Binary, Ternary };

inline int alphabet_size(Alphabet a) { return a == Alphabet::Binary ? 2 : 3; }

/// The letters of an alphabet in index order ("01" or "ABC").
std::string_view alphabet_letters(Alphabet a);

bool letter_in(Alphabet a, char c);
int letter_index(Alphabet a, char c); // AlphabetMismatch for foreign letters
char letter_at_index(Alphabet a, int i);

/// Finite window of a pointed biinfinite word: letters at indices
/// [-left_size, right_size), with index 0 the first letter right of the mark.
class PointedWord {
public:
    /// `left` holds u_{-1} u_{-2} ... (nearest to the mark first),
    /// `right` holds u_0 u_1 ....
    PointedWord(Alphabet alphabet, std::string left, std::string right);

    /// Reads "LEFT|RIGHT" with LEFT in natural order, e.g. "CAB|ACBAC".
    static PointedWord parse(std::string_view text, Alphabet alphabet);

    Alphabet alphabet() const { return alphabet_; }
    long left_size() const { return static_cast<long>(left_.size()); }
    long right_size() const { return static_cast<long>(right_.size()); }
    size_t size() const { return left_.size() + right_.size(); }
    long begin_index() const { return -left_size(); }
    long end_index() const { return right_size(); }

    bool has_index(long n) const { return n >= begin_index() && n < end_index(); }
    char at(long n) const;

    const std::string& left_store() const { return left_; }
    const std::string& right_store() const { return right_; }

    /// "LEFT|RIGHT" in natural reading order.
    std::string to_string() const;
    /// The window letters in reading order, no mark.
    std::string flattened() const;

    bool operator==(const PointedWord& other) const = default;

private:
    Alphabet alphabet_;
    std::string left_;  // nearest-to-mark first
    std::string right_;
};

/// All factors of one length, drawn from a single window.
struct FactorSet {
    size_t length = 0;
    std::set<std::string, std::less<>> factors;
};

/// All length-n contiguous subwords of the window (crossing the mark counts).
FactorSet factors(const PointedWord& w, size_t n);

/// [C(1), ..., C(n_max)] for the window; a lower bound of the complexity of
/// the underlying infinite word.
std::vector<size_t> complexity_profile(const PointedWord& w, size_t n_max);

/// max over n <= n_max and factor pairs v, w of | |v|_0 - |w|_0 |.
/// Binary windows only.
size_t balance_defect(const PointedWord& w, size_t n_max);

/// Letter counts divided by window length, indexed by alphabet order.
std::vector<Rational> empirical_densities(const PointedWord& w);

/// 1/(1+j) for the minimal j with a disagreement at index j or -j; 0 when the
/// windows agree everywhere both are defined (window-relative convention).
Rational metric_distance(const PointedWord& u, const PointedWord& v);

struct FactorSubsetResult {
    bool contained = true;
    std::string offending; // first factor missing from the language
};

/// True iff every factor of w of length <= n_max occurs in lang, where
/// lang[i] must carry the factors of length i+1.
FactorSubsetResult is_factor_subset(const PointedWord& w, std::span<const FactorSet> lang,
                                    size_t n_max);

/// FactorSets of lengths 1..n_max for one window.
std::vector<FactorSet> language_of(const PointedWord& w, size_t n_max);

} // namespace ietk

#endif
