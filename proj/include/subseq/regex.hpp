#pragma once

#include <memory>
#include <string>

#include "subseq/word.hpp"

namespace subseq {

struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

/// Regular-expression AST. Kleene plus is normalized away at construction
/// (r^+ becomes r . r*), so only the five kinds below appear in trees.
struct Regex {
    enum class Kind { Empty, Epsilon, Symbol, Concat, Union, Star };

    Kind kind;
    char sym = 0;        // Symbol
    RegexPtr left, right;  // Concat/Union; Star uses left

    static RegexPtr empty();
    static RegexPtr epsilon();
    static RegexPtr symbol(char c);
    static RegexPtr concat(RegexPtr a, RegexPtr b);
    static RegexPtr union_(RegexPtr a, RegexPtr b);
    static RegexPtr star(RegexPtr a);
    static RegexPtr plus(RegexPtr a);  // normalized to a . a*

    /// Literal word as a concatenation of symbols (epsilon for "").
    static RegexPtr literal(std::string_view w);
    /// (c1 + ... + ck)* over the whole alphabet.
    static RegexPtr universal(const Alphabet& a);
    /// c1 + ... + ck over a symbol set; Empty for an empty set.
    static RegexPtr any_of(std::string_view symbols);
};

bool regex_equal(const RegexPtr& a, const RegexPtr& b);

/// Concrete syntax: `+` union, juxtaposition concatenation, `*` and `^+`
/// postfix, `()` grouping, `@` epsilon, `#` empty language. Whitespace is
/// ignored. Symbols must belong to `a`.
RegexPtr parse_regex(std::string_view text, const Alphabet& a);

/// Minimal-parenthesis form that reparses to an identical AST.
std::string print_regex(const RegexPtr& r);

}  // namespace subseq
