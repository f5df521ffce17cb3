#pragma once

#include <map>
#include <optional>
#include <string>

#include "subseq/formula.hpp"
#include "subseq/nfa.hpp"

namespace subseq {

using Valuation = std::map<std::string, Word>;

/// How a bounded-universe evaluation relates to truth over A*:
/// Exact when every quantifier is subword-guarded, SoundForTrue when each
/// unguarded quantifier acts existentially at positive polarity, Heuristic
/// otherwise.
enum class BoundCertificate { Exact, SoundForTrue, Heuristic };

/// True iff the named relation holds between two concrete words.
bool rel_holds(Rel r, const Word& l, const Word& rt);

/// Tarskian evaluation over the finite structure with universe A^{<=universe_len}.
/// Free variables of f must be assigned in v (their words may be longer than
/// the universe bound).
bool bounded_eval(const FormulaPtr& f, const Valuation& v, std::size_t universe_len,
                  const Alphabet& a);

BoundCertificate guardedness_check(const FormulaPtr& f);

/// The regular language L_phi = {u : phi(u) holds over A*} for an FO^2
/// formula with at most one free variable (the named one, possibly vacuous).
/// Constants are eliminated internally.
Nfa fo2_language(const FormulaPtr& f, const std::string& free_var, const Alphabet& a);

/// Truth of a closed FO^2 sentence over (A*, subword order).
bool fo2_decide(const FormulaPtr& f, const Alphabet& a);

struct Sigma1Result {
    bool sat = false;
    Valuation witness;       // filled when sat
    std::size_t bound_used = 0;  // a SAT answer is always correct; !sat only
                                 // means no witness up to this bound
};

/// Default search bound: twice the variable count plus total constant length.
std::size_t sigma1_default_bound(const FormulaPtr& f);

/// Bounded witness search for an existential block over a quantifier-free
/// matrix. Valuations are enumerated in canonical order; the first
/// satisfying one is returned after re-verification.
Sigma1Result sigma1_search(const FormulaPtr& f, const Alphabet& a,
                           std::optional<std::size_t> max_len = std::nullopt);

}  // namespace subseq
