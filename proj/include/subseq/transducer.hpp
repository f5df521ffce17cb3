#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subseq/nfa.hpp"
#include "subseq/word.hpp"

namespace subseq {

/// Asynchronous two-tape transducer over pairs of words. Tape 1 (the in
/// label) carries the left element of a pair, i.e. the relation's domain;
/// tape 2 carries the right element. `tape1_is_domain` records the
/// convention and is checked by preimage/image.
struct Transducer {
    struct Edge {
        int src;
        char in;   // kEpsilon or a symbol
        char out;  // kEpsilon or a symbol
        int dst;
        bool operator==(const Edge&) const = default;
    };

    Alphabet alphabet;
    int num_states = 0;
    std::vector<int> initial;
    std::vector<int> final;
    std::vector<Edge> edges;
    bool tape1_is_domain = true;
};

enum class RelationKind { Subword, Strict, StrictInv, Equality, Incomparable, T1, T2 };

/// The named relation over A* x A*. T1 accepts (u,v) iff u is not a subword
/// of v and |u| <= |v|; T2 is its tape swap; Incomparable = T1 union T2.
Transducer builtin_relation(RelationKind kind, const Alphabet& a);

/// Pair acceptance by reachability in the (pos-in-u, pos-in-v, state) graph.
bool rel_member(const Transducer& t, const Word& u, const Word& v);

/// {u : exists v in L(m), (u,v) in t}: product synchronized on tape 2,
/// projected to tape 1.
Nfa preimage(const Transducer& t, const Nfa& m);
/// {v : exists u in L(m), (u,v) in t}: the tape-1 dual.
Nfa image(const Transducer& t, const Nfa& m);

Transducer rel_union(const Transducer& t1, const Transducer& t2);
Transducer rel_concat(const Transducer& t1, const Transducer& t2);
Transducer rel_star(const Transducer& t);
Transducer rel_from_pairs(const Alphabet& a, const std::vector<std::pair<Word, Word>>& pairs);
Transducer rel_swap(const Transducer& t);

/// Remove (epsilon, epsilon) moves and renumber canonically.
Transducer rel_normalize(const Transducer& t);

std::string transducer_to_text(const Transducer& t);
Transducer transducer_from_text(const std::string& text);
std::string transducer_to_dot(const Transducer& t, const std::string& name = "transducer");

}  // namespace subseq
