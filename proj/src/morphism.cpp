#include "ietk/morphism.hpp"

#include <algorithm>

namespace ietk {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::parse(std::string_view text) {
    std::vector<std::vector<Int>> rows;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t semi = text.find(';', pos);
        std::string_view row = text.substr(pos, semi == std::string_view::npos ? std::string_view::npos
                                                                               : semi - pos);
        std::vector<Int> entries;
        size_t rpos = 0;
        while (rpos <= row.size()) {
            size_t comma = row.find(',', rpos);
            std::string_view ent =
                row.substr(rpos, comma == std::string_view::npos ? std::string_view::npos : comma - rpos);
            Rational q = parse_rational(ent);
            if (!is_integer(q))
                fail(Errc::ParseError, "matrix entries must be integers");
            entries.push_back(Int(q.get_num()));
            if (comma == std::string_view::npos)
                break;
            rpos = comma + 1;
        }
        rows.push_back(std::move(entries));
        if (semi == std::string_view::npos)
            break;
        pos = semi + 1;
    }
    size_t n = rows.size();
    if (n != 2 && n != 3)
        fail(Errc::ParseError, "matrix must be of order 2 or 3");
    IntMatrix m(static_cast<int>(n));
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            fail(Errc::ParseError, "matrix rows must all have the same length");
        for (size_t j = 0; j < n; ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(static_cast<int>(rows.size()));
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long v : row)
            m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (n_ != rhs.n_)
        fail(Errc::AlphabetMismatch, "matrix orders differ");
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Int& a = at(i, k);
            if (sgn(a) == 0)
                continue;
            for (int j = 0; j < n_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

Int IntMatrix::det() const {
    if (n_ == 2)
        return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Int IntMatrix::trace() const {
    Int t = 0;
    for (int i = 0; i < n_; ++i)
        t += at(i, i);
    return t;
}

bool IntMatrix::nonnegative() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return sgn(v) >= 0; });
}

bool IntMatrix::positive() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return sgn(v) > 0; });
}

bool IntMatrix::lex_less(const IntMatrix& rhs) const {
    return std::lexicographical_compare(a_.begin(), a_.end(), rhs.a_.begin(), rhs.a_.end());
}

std::string IntMatrix::to_string() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        if (i)
            s += ';';
        for (int j = 0; j < n_; ++j) {
            if (j)
                s += ',';
            s += ietk::to_string(at(i, j));
        }
    }
    return s;
}

Morphism::Morphism(Alphabet alphabet, std::vector<std::string> images)
    : alphabet_(alphabet), images_(std::move(images)) {
    if (images_.size() != static_cast<size_t>(alphabet_size(alphabet_)))
        fail(Errc::AlphabetMismatch, "morphism needs one image per letter");
    for (const std::string& im : images_) {
        if (im.empty())
            fail(Errc::ParseError, "erasing morphisms are rejected");
        for (char c : im)
            if (!letter_in(alphabet_, c))
                fail(Errc::AlphabetMismatch, std::string("image letter '") + c + "' not in alphabet");
    }
}

Morphism Morphism::parse(std::string_view text) {
    // Rules look like "A->AC", separated by ';'.
    std::vector<std::pair<char, std::string>> rules;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t semi = text.find(';', pos);
        std::string_view rule =
            text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
        size_t arrow = rule.find("->");
        if (arrow == std::string_view::npos || arrow == 0)
            fail(Errc::ParseError, "morphism rule needs the form X->WORD");
        std::string_view lhs = rule.substr(0, arrow);
        std::string_view rhs = rule.substr(arrow + 2);
        while (!lhs.empty() && lhs.front() == ' ') lhs.remove_prefix(1);
        while (!lhs.empty() && lhs.back() == ' ') lhs.remove_suffix(1);
        while (!rhs.empty() && rhs.front() == ' ') rhs.remove_prefix(1);
        while (!rhs.empty() && rhs.back() == ' ') rhs.remove_suffix(1);
        if (lhs.size() != 1)
            fail(Errc::ParseError, "morphism rule must map a single letter");
        rules.emplace_back(lhs[0], std::string(rhs));
        if (semi == std::string_view::npos)
            break;
        pos = semi + 1;
    }
    Alphabet a = Alphabet::Ternary;
    for (auto& [letter, image] : rules)
        if (letter == '0' || letter == '1')
            a = Alphabet::Binary;
    std::vector<std::string> images(static_cast<size_t>(alphabet_size(a)));
    std::vector<bool> seen(images.size(), false);
    for (auto& [letter, image] : rules) {
        int idx = letter_index(a, letter);
        if (seen[static_cast<size_t>(idx)])
            fail(Errc::ParseError, std::string("duplicate rule for letter '") + letter + "'");
        seen[static_cast<size_t>(idx)] = true;
        images[static_cast<size_t>(idx)] = image;
    }
    for (size_t i = 0; i < images.size(); ++i)
        if (!seen[i])
            fail(Errc::ParseError, std::string("missing rule for letter '") +
                                       letter_at_index(a, static_cast<int>(i)) + "'");
    return Morphism(a, std::move(images));
}

Morphism Morphism::identity(Alphabet a) {
    std::vector<std::string> images;
    for (char c : alphabet_letters(a))
        images.emplace_back(1, c);
    return Morphism(a, std::move(images));
}

const std::string& Morphism::image(char letter) const {
    return images_[static_cast<size_t>(letter_index(alphabet_, letter))];
}

std::string Morphism::to_string() const {
    std::string s;
    for (size_t i = 0; i < images_.size(); ++i) {
        if (i)
            s += ';';
        s += letter_at_index(alphabet_, static_cast<int>(i));
        s += "->";
        s += images_[i];
    }
    return s;
}

IntMatrix incidence_matrix(const Morphism& m) {
    int n = alphabet_size(m.alphabet());
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (char c : m.images()[static_cast<size_t>(i)])
            out.at(i, letter_index(m.alphabet(), c)) += 1;
    return out;
}

std::string image_of(const Morphism& m, std::string_view word) {
    std::string out;
    for (char c : word)
        out += m.image(c);
    return out;
}

PointedWord apply(const Morphism& m, const PointedWord& w) {
    if (m.alphabet() != w.alphabet())
        fail(Errc::AlphabetMismatch, "morphism and word alphabets differ");
    std::string right;
    for (char c : w.right_store())
        right += m.image(c);
    std::string left;
    for (char c : w.left_store()) {
        const std::string& im = m.image(c);
        left.append(im.rbegin(), im.rend());
    }
    return PointedWord(w.alphabet(), std::move(left), std::move(right));
}

Morphism compose(const Morphism& phi, const Morphism& psi) {
    if (phi.alphabet() != psi.alphabet())
        fail(Errc::AlphabetMismatch, "composition over different alphabets");
    std::vector<std::string> images;
    for (const std::string& im : psi.images())
        images.push_back(image_of(phi, im));
    return Morphism(phi.alphabet(), std::move(images));
}

Morphism power(const Morphism& m, int p) {
    if (p < 1)
        fail(Errc::OutOfDomain, "morphism power must be >= 1");
    Morphism out = m;
    for (int i = 1; i < p; ++i)
        out = compose(out, m);
    return out;
}

PrimitivityResult is_primitive(const IntMatrix& m) {
    int n = m.order();
    int bound = 2 * n * n;
    // Saturated boolean powers; entries only signal positivity.
    IntMatrix pw = m;
    for (int k = 1; k <= bound; ++k) {
        if (pw.positive())
            return {true, k};
        IntMatrix next = pw * m;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (sgn(next.at(i, j)) > 0)
                    next.at(i, j) = 1;
        pw = next;
    }
    return {false, 0};
}

PrimitivityResult is_primitive(const Morphism& m) { return is_primitive(incidence_matrix(m)); }

std::vector<QuadReal> density_transport(const IntMatrix& m, std::span<const QuadReal> rho) {
    if (static_cast<int>(rho.size()) != m.order())
        fail(Errc::AlphabetMismatch, "density vector size does not match matrix order");
    int n = m.order();
    std::vector<QuadReal> image(static_cast<size_t>(n), QuadReal(0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            image[static_cast<size_t>(j)] += rho[static_cast<size_t>(i)] * QuadReal(Rational(m.at(i, j)));
    QuadReal total(0);
    for (const QuadReal& x : image)
        total += x;
    if (total.sign() == 0)
        fail(Errc::DegenerateTransport, "transported density vector vanishes");
    for (QuadReal& x : image)
        x /= total;
    return image;
}

PointedWord fixed_point_window(const Morphism& m, char seed_left, char seed_right,
                               size_t min_len) {
    const std::string& im_r = m.image(seed_right);
    const std::string& im_l = m.image(seed_left);
    if (im_r.front() != seed_right)
        fail(Errc::NotAFixedPointSeed,
             std::string("image of '") + seed_right + "' does not start with it");
    if (im_l.back() != seed_left)
        fail(Errc::NotAFixedPointSeed,
             std::string("image of '") + seed_left + "' does not end with it");
    std::string right(1, seed_right);
    std::string left(1, seed_left); // natural reading order for now
    constexpr int kMaxIterations = 64;
    for (int it = 0; it < kMaxIterations && (right.size() < min_len || left.size() < min_len);
         ++it) {
        if (right.size() < min_len) {
            std::string next = image_of(m, right);
            if (next == right) {
                // The side is literally fixed; its periodic repetition extends
                // the limit word.
                while (right.size() < min_len)
                    right += next;
                right.resize(min_len);
            } else {
                right = std::move(next);
            }
        }
        if (left.size() < min_len) {
            std::string next = image_of(m, left);
            if (next == left) {
                while (left.size() < min_len)
                    left = next + left;
                left.erase(0, left.size() - min_len);
            } else {
                left = std::move(next);
            }
        }
    }
    if (right.size() < min_len || left.size() < min_len)
        fail(Errc::NotAFixedPointSeed, "fixed-point sides did not reach the requested length");
    std::reverse(left.begin(), left.end());
    return PointedWord(m.alphabet(), std::move(left), std::move(right));
}

std::optional<FixedPointSeed> find_fixed_point_seed(const Morphism& m, int max_power) {
    std::string_view letters = alphabet_letters(m.alphabet());
    std::optional<FixedPointSeed> stagnant;
    Morphism pw = m;
    for (int p = 1; p <= max_power; ++p) {
        if (p > 1)
            pw = compose(pw, m);
        for (char l : letters)
            for (char r : letters) {
                if (pw.image(r).front() != r || pw.image(l).back() != l)
                    continue;
                if (pw.image(l).size() > 1 || pw.image(r).size() > 1)
                    return FixedPointSeed{p, l, r};
                if (!stagnant)
                    stagnant = FixedPointSeed{p, l, r};
            }
    }
    // Seeds whose sides never grow only yield periodic repetitions; prefer a
    // growing pair of any power before settling for one.
    return stagnant;
}

} // namespace ietk
