#include "tknot/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace tknot {

namespace detail {
void check_failed(const char* expr, const char* file, int line) {
    std::string msg = "internal invariant violated: ";
    msg += expr;
    msg += " (";
    msg += file;
    msg += ":";
    msg += std::to_string(line);
    msg += ")";
    throw internal_error(msg);
}
}  // namespace detail

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        TKNOT_CHECK(v >= 0 && v < size() && !seen[v]);
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i) {
    TKNOT_CHECK(i >= 0 && i + 1 < n);
    auto p = identity(n);
    std::swap(p.images_[i], p.images_[i + 1]);
    return p;
}

Permutation Permutation::then(const Permutation& other) const {
    TKNOT_CHECK(size() == other.size());
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[i] = other.images_[images_[i]];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
}

int Permutation::cycle_count() const {
    return static_cast<int>(cycle_type().size());
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<char> seen(images_.size(), 0);
    std::vector<int> lengths;
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

int Permutation::inversion_count() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw parse_error("strand count must be >= 1");
    for (int l : letters_) {
        if (l < 1 || l > strands_ - 1)
            throw parse_error("letter " + std::to_string(l) +
                              " out of range [1, " + std::to_string(strands_ - 1) +
                              "] for B_" + std::to_string(strands_));
    }
}

BraidWord BraidWord::rotated(int k) const {
    if (letters_.empty()) return *this;
    int p = length();
    k = ((k % p) + p) % p;
    std::vector<int> out;
    out.reserve(p);
    out.insert(out.end(), letters_.begin() + k, letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + k);
    return BraidWord(strands_, std::move(out));
}

bool BraidWord::operator<(const BraidWord& other) const {
    if (strands_ != other.strands_) return strands_ < other.strands_;
    if (length() != other.length()) return length() < other.length();
    return letters_ < other.letters_;
}

namespace {

std::vector<int> tokenize_letters(const std::string& text) {
    const bool separated =
        text.find_first_of(" \t\r\n,") != std::string::npos;
    std::vector<int> letters;
    if (!separated) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw parse_error(std::string("non-numeric character '") + c +
                                  "' in braid word");
            letters.push_back(c - '0');
        }
        return letters;
    }
    std::string token;
    std::istringstream in(text);
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream ns(normalized);
    while (ns >> token) {
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw parse_error("non-numeric token '" + token + "' in braid word");
        letters.push_back(value);
    }
    return letters;
}

}  // namespace

BraidWord parse_braid(const std::string& text, std::optional<int> strands) {
    std::vector<int> letters = tokenize_letters(text);
    int n;
    if (strands) {
        if (*strands < 1)
            throw parse_error("strand count must be >= 1, got " +
                              std::to_string(*strands));
        n = *strands;
    } else {
        n = letters.empty()
                ? 1
                : 1 + *std::max_element(letters.begin(), letters.end());
    }
    return BraidWord(n, std::move(letters));
}

std::string print_braid(const BraidWord& b) {
    std::string out;
    for (size_t i = 0; i < b.letters().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(b.letters()[i]);
    }
    return out;
}

ClosureInfo closure_info(const BraidWord& b) {
    auto perm = Permutation::identity(b.strands());
    for (int l : b.letters())
        perm = perm.then(Permutation::transposition(b.strands(), l - 1));
    ClosureInfo info;
    info.components = perm.cycle_count();
    info.is_knot = info.components == 1;
    info.permutation = std::move(perm);
    return info;
}

BraidWord canonical_rotation(const BraidWord& b) {
    if (b.empty()) return b;
    int best = 0;
    const int p = b.length();
    auto less_rotation = [&](int i, int j) {
        for (int k = 0; k < p; ++k) {
            int a = b.letters()[(i + k) % p];
            int c = b.letters()[(j + k) % p];
            if (a != c) return a < c;
        }
        return false;
    };
    for (int i = 1; i < p; ++i)
        if (less_rotation(i, best)) best = i;
    return b.rotated(best);
}

std::vector<int> positive_sort_letters(const Permutation& target) {
    std::vector<int> keys = target.images();
    std::vector<int> word;
    const int n = target.size();
    for (int k = 1; k < n; ++k) {
        for (int j = k; j > 0 && keys[j - 1] > keys[j]; --j) {
            std::swap(keys[j - 1], keys[j]);
            word.push_back(j);  // 1-based gap index
        }
    }
    return word;
}

BraidWord positive_sort_braid(const Permutation& target) {
    return BraidWord(std::max(target.size(), 1), positive_sort_letters(target));
}

std::vector<int> half_twist_letters(int q) {
    TKNOT_CHECK(q >= 1);
    std::vector<int> word;
    word.reserve(q * (q - 1) / 2);
    for (int m = 1; m < q; ++m)
        for (int j = m; j >= 1; --j) word.push_back(j);
    return word;
}

BraidWord half_twist_word(int q) {
    return BraidWord(q, half_twist_letters(q));
}

int genus_positive(const BraidWord& b) {
    auto info = closure_info(b);
    if (!info.is_knot)
        throw not_a_knot_error("closure has " + std::to_string(info.components) +
                                   " components; genus of a positive braid "
                                   "knot needs a knot",
                               info.components);
    const int defect = b.euler_defect();
    TKNOT_CHECK(defect % 2 == 0 && defect >= 0);
    return defect / 2;
}

std::vector<int> generator_counts(const BraidWord& b) {
    std::vector<int> counts(std::max(b.strands() - 1, 0), 0);
    for (int l : b.letters()) ++counts[l - 1];
    return counts;
}

}  // namespace tknot
