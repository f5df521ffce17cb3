#include "subseq/word.hpp"

#include <algorithm>
#include <set>

namespace subseq {

namespace {

bool symbol_ok(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

void require_same_alphabet(const Word& u, const Word& v) {
    if (u.alphabet() != v.alphabet())
        throw std::invalid_argument("alphabet mismatch between words");
}

}  // namespace

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty())
        throw std::invalid_argument("alphabet must be nonempty");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (!symbol_ok(symbols_[i]))
            throw std::invalid_argument(std::string("invalid alphabet symbol: ") + symbols_[i]);
        if (symbols_.find(symbols_[i], i + 1) != std::string::npos)
            throw std::invalid_argument(std::string("duplicate alphabet symbol: ") + symbols_[i]);
    }
}

std::size_t Alphabet::index_of(char c) const {
    auto pos = symbols_.find(c);
    if (pos == std::string::npos)
        throw std::invalid_argument(std::string("symbol not in alphabet: ") + c);
    return pos;
}

Word::Word(Alphabet alphabet, std::string_view letters)
    : alphabet_(std::move(alphabet)), letters_(letters) {
    for (char c : letters_)
        if (!alphabet_.contains(c))
            throw std::invalid_argument(std::string("letter not in alphabet: ") + c);
}

std::size_t Word::count(char a) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
}

bool is_subword(const Word& u, const Word& v) {
    require_same_alphabet(u, v);
    const std::string& a = u.letters();
    const std::string& b = v.letters();
    std::size_t i = 0;
    for (std::size_t j = 0; i < a.size() && j < b.size(); ++j)
        if (a[i] == b[j]) ++i;
    return i == a.size();
}

CompareResult compare(const Word& u, const Word& v) {
    bool uv = is_subword(u, v);
    bool vu = is_subword(v, u);
    if (uv && vu) return CompareResult::Equal;
    if (uv) return CompareResult::Less;
    if (vu) return CompareResult::Greater;
    return CompareResult::Incomparable;
}

Word project(std::string_view b, const Word& u) {
    for (char c : b)
        if (!u.alphabet().contains(c))
            throw std::invalid_argument(std::string("projection set contains foreign symbol: ") + c);
    std::string out;
    for (char c : u.letters())
        if (b.find(c) != std::string_view::npos) out += c;
    return Word(u.alphabet(), out);
}

bool is_factor(const Word& u, const Word& v) {
    require_same_alphabet(u, v);
    return v.letters().find(u.letters()) != std::string::npos;
}

BlockFactorization block_factorize(const Word& u) {
    BlockFactorization f;
    for (char c : u.letters()) {
        if (!f.blocks.empty() && f.blocks.back().first == c)
            ++f.blocks.back().second;
        else
            f.blocks.emplace_back(c, 1);
    }
    return f;
}

Word mirror(const Word& u) {
    std::string r(u.letters().rbegin(), u.letters().rend());
    return Word(u.alphabet(), r);
}

Word prefix(const Word& u, std::size_t k) {
    if (k > u.length())
        throw std::out_of_range("prefix length exceeds word length");
    return Word(u.alphabet(), std::string_view(u.letters()).substr(0, k));
}

bool canonical_less(const Word& u, const Word& v) {
    if (u.length() != v.length()) return u.length() < v.length();
    const Alphabet& a = u.alphabet();
    for (std::size_t i = 0; i < u.length(); ++i) {
        std::size_t iu = a.index_of(u.at(i));
        std::size_t iv = a.index_of(v.at(i));
        if (iu != iv) return iu < iv;
    }
    return false;
}

std::vector<Word> words_upto(const Alphabet& a, std::size_t max_len) {
    std::vector<Word> out;
    std::vector<std::string> layer{""};
    out.emplace_back(a, "");
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        next.reserve(layer.size() * a.size());
        for (const std::string& w : layer)
            for (char c : a.symbols())
                next.push_back(w + c);
        for (const std::string& w : next)
            out.emplace_back(a, w);
        layer = std::move(next);
    }
    return out;
}

std::vector<Word> subwords_upto(const Word& u, std::size_t n) {
    // Left-to-right subsequence closure with deduplication.
    std::set<std::string> seen{""};
    for (char c : u.letters()) {
        std::vector<std::string> grown;
        for (const std::string& s : seen)
            if (s.size() < n) grown.push_back(s + c);
        seen.insert(grown.begin(), grown.end());
    }
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const std::string& s : seen)
        out.emplace_back(u.alphabet(), s);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::optional<Word> find_distinguisher(const Word& u, const Word& v, std::size_t n) {
    require_same_alphabet(u, v);
    std::vector<Word> su = subwords_upto(u, n);
    std::vector<Word> sv = subwords_upto(v, n);
    auto in = [](const std::vector<Word>& ws, const Word& w) {
        for (const Word& x : ws)
            if (x.letters() == w.letters()) return true;
        return false;
    };
    std::optional<Word> best;
    auto consider = [&](const Word& w) {
        if (!best || canonical_less(w, *best)) best = w;
    };
    for (const Word& w : su)
        if (!in(sv, w)) { consider(w); break; }  // su is canonically sorted
    for (const Word& w : sv)
        if (!in(su, w)) { consider(w); break; }
    return best;
}

}  // namespace subseq
