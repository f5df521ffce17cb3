#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subseq {

/// Finite, ordered alphabet of single-character symbols. The symbol order is
/// fixed at construction and determines the canonical (shortlex) word order
/// used for all deterministic enumeration in this library.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbols() const { return symbols_; }
    bool contains(char c) const { return symbols_.find(c) != std::string::npos; }
    /// Position of `c` in the alphabet order; throws if absent.
    std::size_t index_of(char c) const;
    char symbol(std::size_t i) const { return symbols_.at(i); }

    bool operator==(const Alphabet&) const = default;

private:
    std::string symbols_;
};

/// A finite word over an alphabet. Immutable after construction; the empty
/// word is valid. Serializes as its plain character string.
class Word {
public:
    Word() = default;
    Word(Alphabet alphabet, std::string_view letters);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char at(std::size_t i) const { return letters_.at(i); }
    /// Number of occurrences of `a`.
    std::size_t count(char a) const;

    bool operator==(const Word& o) const { return letters_ == o.letters_ && alphabet_ == o.alphabet_; }

private:
    Alphabet alphabet_;
    std::string letters_;
};

/// Maximal runs of equal letters; adjacent blocks carry distinct symbols.
struct BlockFactorization {
    std::vector<std::pair<char, std::size_t>> blocks;

    bool operator==(const BlockFactorization&) const = default;
};

enum class CompareResult { Equal, Less, Greater, Incomparable };

/// True iff u embeds into v as a subsequence. Greedy two-pointer scan,
/// O(|u|+|v|). Throws on alphabet mismatch.
bool is_subword(const Word& u, const Word& v);

/// The unique relation from {=, <, >, incomparable} holding between u and v.
CompareResult compare(const Word& u, const Word& v);

/// Projection onto the symbol set `b`: erase all letters outside `b`,
/// keeping order. `b` must be a subset of u's alphabet.
Word project(std::string_view b, const Word& u);

/// True iff u occurs contiguously inside v.
bool is_factor(const Word& u, const Word& v);

BlockFactorization block_factorize(const Word& u);

/// Letter reversal; an involution.
Word mirror(const Word& u);

/// First k letters; 0 <= k <= |u|.
Word prefix(const Word& u, std::size_t k);

/// Canonical (shortlex by alphabet order) strict comparison.
bool canonical_less(const Word& u, const Word& v);

/// All words over `a` of length <= max_len, in canonical order.
std::vector<Word> words_upto(const Alphabet& a, std::size_t max_len);

/// All subwords of u of length <= n, deduplicated, in canonical order.
/// Memory is bounded by the number of distinct subwords; intended for desk
/// scale (|u| <= 20, n <= 6 is comfortable).
std::vector<Word> subwords_upto(const Word& u, std::size_t n);

/// Shortest word of length <= n that is a subword of exactly one of u, v;
/// ties broken canonically. Empty optional means u ~_n v (same subwords up
/// to length n).
std::optional<Word> find_distinguisher(const Word& u, const Word& v, std::size_t n);

}  // namespace subseq
