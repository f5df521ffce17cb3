#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subseq/regex.hpp"
#include "subseq/word.hpp"

namespace subseq {

constexpr char kEpsilon = 0;

/// Nondeterministic finite automaton with epsilon moves. States are numbered
/// 0..num_states-1. Immutable by convention: operations return new automata.
struct Nfa {
    struct Edge {
        int src;
        char label;  // kEpsilon or an alphabet symbol
        int dst;
        bool operator==(const Edge&) const = default;
    };

    Alphabet alphabet;
    int num_states = 0;
    std::vector<int> initial;
    std::vector<int> final;
    std::vector<Edge> edges;
};

enum class ClosureKind { Up, StrictUp, Down, StrictDown, Exact, Incomparable };

Nfa nfa_empty_language(const Alphabet& a);
Nfa nfa_universal(const Alphabet& a);
Nfa nfa_single_word(const Word& w);

/// Thompson construction; L(result) = L(r).
Nfa regex_to_nfa(const RegexPtr& r, const Alphabet& a);

Nfa nfa_union(const Nfa& m1, const Nfa& m2);
Nfa nfa_intersection(const Nfa& m1, const Nfa& m2);
Nfa nfa_concat(const Nfa& m1, const Nfa& m2);
Nfa nfa_star(const Nfa& m);
/// Subset construction then flipped finality; result is a minimized DFA.
Nfa nfa_complement(const Nfa& m);

Nfa remove_epsilon(const Nfa& m);
/// Complete DFA via subset construction (dead state included).
Nfa determinize(const Nfa& m);
/// Hopcroft minimization of the determinized automaton.
Nfa minimize(const Nfa& m);
/// Drop states not on an initial-to-final path.
Nfa trim(const Nfa& m);
/// BFS renumbering from the initial states for reproducible serialization.
Nfa renumber_canonical(const Nfa& m);

bool nfa_member(const Nfa& m, const Word& w);
bool nfa_is_empty(const Nfa& m);
bool nfa_is_universal(const Nfa& m);
bool nfa_equivalent(const Nfa& m1, const Nfa& m2);

/// {v : w R v} for the given closure relation; Up(w) = A* w1 A* ... wk A*.
Nfa word_closure(ClosureKind kind, const Word& w);

/// Accepted words of length <= max_len in canonical order.
std::vector<Word> enumerate_members(const Nfa& m, std::size_t max_len);

/// State-elimination conversion; L(result) == L(m).
RegexPtr nfa_to_regex(const Nfa& m);

/// Line-based text format: alphabet/states/initial/final headers then one
/// `src label dst` triple per line, `@` for epsilon.
std::string nfa_to_text(const Nfa& m);
Nfa nfa_from_text(const std::string& text);
std::string nfa_to_dot(const Nfa& m, const std::string& name = "nfa");

}  // namespace subseq
