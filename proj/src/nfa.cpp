#include "subseq/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace subseq {

namespace {

void require_same_alphabet(const Nfa& m1, const Nfa& m2) {
    if (m1.alphabet != m2.alphabet)
        throw std::invalid_argument("alphabet mismatch between automata");
}

std::vector<std::vector<int>> eps_adjacency(const Nfa& m) {
    std::vector<std::vector<int>> adj(m.num_states);
    for (const auto& e : m.edges)
        if (e.label == kEpsilon) adj[e.src].push_back(e.dst);
    return adj;
}

// In-place epsilon closure of a state set given epsilon adjacency.
void close(std::vector<bool>& set, const std::vector<std::vector<int>>& eps) {
    std::deque<int> work;
    for (std::size_t s = 0; s < set.size(); ++s)
        if (set[s]) work.push_back(static_cast<int>(s));
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        for (int t : eps[s])
            if (!set[t]) {
                set[t] = true;
                work.push_back(t);
            }
    }
}

std::vector<bool> to_bits(const std::vector<int>& states, int n) {
    std::vector<bool> b(n, false);
    for (int s : states) b[s] = true;
    return b;
}

bool intersects(const std::vector<bool>& a, const std::vector<int>& states) {
    for (int s : states)
        if (a[s]) return true;
    return false;
}

}  // namespace

Nfa nfa_empty_language(const Alphabet& a) {
    Nfa m;
    m.alphabet = a;
    m.num_states = 1;
    m.initial = {0};
    return m;
}

Nfa nfa_universal(const Alphabet& a) {
    Nfa m;
    m.alphabet = a;
    m.num_states = 1;
    m.initial = {0};
    m.final = {0};
    for (char c : a.symbols()) m.edges.push_back({0, c, 0});
    return m;
}

Nfa nfa_single_word(const Word& w) {
    Nfa m;
    m.alphabet = w.alphabet();
    m.num_states = static_cast<int>(w.length()) + 1;
    m.initial = {0};
    m.final = {m.num_states - 1};
    for (int i = 0; i < static_cast<int>(w.length()); ++i)
        m.edges.push_back({i, w.at(i), i + 1});
    return m;
}

Nfa regex_to_nfa(const RegexPtr& r, const Alphabet& a) {
    switch (r->kind) {
        case Regex::Kind::Empty:
            return nfa_empty_language(a);
        case Regex::Kind::Epsilon: {
            Nfa m;
            m.alphabet = a;
            m.num_states = 1;
            m.initial = {0};
            m.final = {0};
            return m;
        }
        case Regex::Kind::Symbol: {
            if (!a.contains(r->sym))
                throw std::invalid_argument(std::string("regex symbol not in alphabet: ") + r->sym);
            Nfa m;
            m.alphabet = a;
            m.num_states = 2;
            m.initial = {0};
            m.final = {1};
            m.edges.push_back({0, r->sym, 1});
            return m;
        }
        case Regex::Kind::Concat:
            return nfa_concat(regex_to_nfa(r->left, a), regex_to_nfa(r->right, a));
        case Regex::Kind::Union:
            return nfa_union(regex_to_nfa(r->left, a), regex_to_nfa(r->right, a));
        case Regex::Kind::Star:
            return nfa_star(regex_to_nfa(r->left, a));
    }
    throw std::logic_error("unreachable regex kind");
}

Nfa nfa_union(const Nfa& m1, const Nfa& m2) {
    require_same_alphabet(m1, m2);
    Nfa m;
    m.alphabet = m1.alphabet;
    m.num_states = m1.num_states + m2.num_states;
    m.edges = m1.edges;
    for (const auto& e : m2.edges)
        m.edges.push_back({e.src + m1.num_states, e.label, e.dst + m1.num_states});
    m.initial = m1.initial;
    for (int s : m2.initial) m.initial.push_back(s + m1.num_states);
    m.final = m1.final;
    for (int s : m2.final) m.final.push_back(s + m1.num_states);
    return m;
}

Nfa nfa_concat(const Nfa& m1, const Nfa& m2) {
    require_same_alphabet(m1, m2);
    Nfa m;
    m.alphabet = m1.alphabet;
    m.num_states = m1.num_states + m2.num_states;
    m.edges = m1.edges;
    for (const auto& e : m2.edges)
        m.edges.push_back({e.src + m1.num_states, e.label, e.dst + m1.num_states});
    for (int f : m1.final)
        for (int i : m2.initial)
            m.edges.push_back({f, kEpsilon, i + m1.num_states});
    m.initial = m1.initial;
    for (int s : m2.final) m.final.push_back(s + m1.num_states);
    return m;
}

Nfa nfa_star(const Nfa& m0) {
    Nfa m;
    m.alphabet = m0.alphabet;
    m.num_states = m0.num_states + 1;
    int hub = m0.num_states;
    m.edges = m0.edges;
    for (int i : m0.initial) m.edges.push_back({hub, kEpsilon, i});
    for (int f : m0.final) m.edges.push_back({f, kEpsilon, hub});
    m.initial = {hub};
    m.final = {hub};
    return m;
}

Nfa nfa_intersection(const Nfa& m1in, const Nfa& m2in) {
    require_same_alphabet(m1in, m2in);
    Nfa m1 = remove_epsilon(m1in);
    Nfa m2 = remove_epsilon(m2in);
    // Lazy product over letter edges.
    std::vector<std::vector<std::pair<char, int>>> adj1(m1.num_states), adj2(m2.num_states);
    for (const auto& e : m1.edges) adj1[e.src].emplace_back(e.label, e.dst);
    for (const auto& e : m2.edges) adj2[e.src].emplace_back(e.label, e.dst);

    Nfa m;
    m.alphabet = m1.alphabet;
    std::map<std::pair<int, int>, int> id;
    std::deque<std::pair<int, int>> work;
    auto get = [&](int a, int b) {
        auto [it, inserted] = id.try_emplace({a, b}, static_cast<int>(id.size()));
        if (inserted) work.push_back({a, b});
        return it->second;
    };
    for (int a : m1.initial)
        for (int b : m2.initial)
            m.initial.push_back(get(a, b));
    std::vector<bool> f1 = to_bits(m1.final, m1.num_states);
    std::vector<bool> f2 = to_bits(m2.final, m2.num_states);
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop_front();
        int src = id.at({a, b});
        if (f1[a] && f2[b]) m.final.push_back(src);
        for (const auto& [c1, d1] : adj1[a])
            for (const auto& [c2, d2] : adj2[b])
                if (c1 == c2) m.edges.push_back({src, c1, get(d1, d2)});
    }
    m.num_states = static_cast<int>(id.size());
    if (m.num_states == 0) return nfa_empty_language(m.alphabet);
    return m;
}

Nfa remove_epsilon(const Nfa& m) {
    auto eps = eps_adjacency(m);
    std::vector<bool> fin = to_bits(m.final, m.num_states);
    Nfa out;
    out.alphabet = m.alphabet;
    out.num_states = m.num_states;
    out.initial = m.initial;
    std::vector<std::vector<std::pair<char, int>>> letters(m.num_states);
    for (const auto& e : m.edges)
        if (e.label != kEpsilon) letters[e.src].emplace_back(e.label, e.dst);
    for (int s = 0; s < m.num_states; ++s) {
        std::vector<bool> cl(m.num_states, false);
        cl[s] = true;
        close(cl, eps);
        bool is_final = false;
        std::set<std::pair<char, int>> added;
        for (int t = 0; t < m.num_states; ++t) {
            if (!cl[t]) continue;
            if (fin[t]) is_final = true;
            for (const auto& [c, d] : letters[t]) added.insert({c, d});
        }
        for (const auto& [c, d] : added) out.edges.push_back({s, c, d});
        if (is_final) out.final.push_back(s);
    }
    return out;
}

Nfa determinize(const Nfa& m) {
    auto eps = eps_adjacency(m);
    std::vector<std::vector<std::pair<char, int>>> letters(m.num_states);
    for (const auto& e : m.edges)
        if (e.label != kEpsilon) letters[e.src].emplace_back(e.label, e.dst);
    std::vector<bool> fin = to_bits(m.final, m.num_states);

    std::map<std::vector<int>, int> id;
    std::deque<std::vector<int>> work;
    auto get = [&](std::vector<bool> set) {
        close(set, eps);
        std::vector<int> key;
        for (std::size_t s = 0; s < set.size(); ++s)
            if (set[s]) key.push_back(static_cast<int>(s));
        auto [it, inserted] = id.try_emplace(key, static_cast<int>(id.size()));
        if (inserted) work.push_back(key);
        return it->second;
    };

    Nfa out;
    out.alphabet = m.alphabet;
    out.initial = {get(to_bits(m.initial, m.num_states))};
    while (!work.empty()) {
        std::vector<int> key = work.front();
        work.pop_front();
        int src = id.at(key);
        bool is_final = false;
        for (int s : key)
            if (fin[s]) is_final = true;
        if (is_final) out.final.push_back(src);
        for (char c : m.alphabet.symbols()) {
            std::vector<bool> next(m.num_states, false);
            for (int s : key)
                for (const auto& [lab, d] : letters[s])
                    if (lab == c) next[d] = true;
            out.edges.push_back({src, c, get(std::move(next))});
        }
    }
    out.num_states = static_cast<int>(id.size());
    return out;
}

Nfa minimize(const Nfa& m_in) {
    Nfa dfa = determinize(m_in);
    int n = dfa.num_states;
    int k = static_cast<int>(dfa.alphabet.size());
    // trans[s][c] on the complete DFA
    std::vector<std::vector<int>> trans(n, std::vector<int>(k, -1));
    for (const auto& e : dfa.edges)
        trans[e.src][dfa.alphabet.index_of(e.label)] = e.dst;
    std::vector<std::vector<std::vector<int>>> rev(n,
        std::vector<std::vector<int>>(k));
    for (int s = 0; s < n; ++s)
        for (int c = 0; c < k; ++c)
            rev[trans[s][c]][c].push_back(s);

    // Hopcroft partition refinement.
    std::vector<int> block_of(n, 0);
    std::vector<std::vector<int>> blocks;
    std::vector<bool> fin = to_bits(dfa.final, n);
    std::vector<int> fs, nfs;
    for (int s = 0; s < n; ++s)
        (fin[s] ? fs : nfs).push_back(s);
    if (!fs.empty()) blocks.push_back(fs);
    if (!nfs.empty()) blocks.push_back(nfs);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int s : blocks[b]) block_of[s] = static_cast<int>(b);

    std::set<std::pair<int, int>> worklist;  // (block, letter)
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int c = 0; c < k; ++c)
            worklist.insert({static_cast<int>(b), c});

    while (!worklist.empty()) {
        auto [bi, c] = *worklist.begin();
        worklist.erase(worklist.begin());
        std::vector<int> splitter = blocks[bi];
        // preimage of splitter under letter c
        std::set<int> pre;
        for (int s : splitter)
            for (int p : rev[s][c]) pre.insert(p);
        // group preimage states by their current block
        std::map<int, std::vector<int>> touched;
        for (int p : pre) touched[block_of[p]].push_back(p);
        for (auto& [b, hit] : touched) {
            if (hit.size() == blocks[b].size()) continue;  // whole block hit
            // split block b into hit and rest
            std::set<int> hitset(hit.begin(), hit.end());
            std::vector<int> rest;
            for (int s : blocks[b])
                if (!hitset.count(s)) rest.push_back(s);
            int nb = static_cast<int>(blocks.size());
            blocks[b] = hit;
            blocks.push_back(rest);
            for (int s : rest) block_of[s] = nb;
            for (int cc = 0; cc < k; ++cc) {
                if (worklist.count({b, cc})) {
                    worklist.insert({nb, cc});
                } else {
                    worklist.insert({hit.size() <= rest.size() ? b : nb, cc});
                }
            }
        }
    }

    Nfa out;
    out.alphabet = dfa.alphabet;
    out.num_states = static_cast<int>(blocks.size());
    out.initial = {block_of[dfa.initial[0]]};
    std::set<int> finals;
    for (int f : dfa.final) finals.insert(block_of[f]);
    out.final.assign(finals.begin(), finals.end());
    std::set<Nfa::Edge, bool (*)(const Nfa::Edge&, const Nfa::Edge&)> eset(
        [](const Nfa::Edge& a, const Nfa::Edge& b) {
            return std::tie(a.src, a.label, a.dst) < std::tie(b.src, b.label, b.dst);
        });
    for (int s = 0; s < n; ++s)
        for (int c = 0; c < k; ++c)
            eset.insert({block_of[s], dfa.alphabet.symbol(c), block_of[trans[s][c]]});
    out.edges.assign(eset.begin(), eset.end());
    return renumber_canonical(out);
}

Nfa nfa_complement(const Nfa& m) {
    Nfa dfa = determinize(m);
    std::vector<bool> fin = to_bits(dfa.final, dfa.num_states);
    dfa.final.clear();
    for (int s = 0; s < dfa.num_states; ++s)
        if (!fin[s]) dfa.final.push_back(s);
    return minimize(dfa);
}

Nfa trim(const Nfa& m) {
    std::vector<std::vector<int>> fwd(m.num_states), bwd(m.num_states);
    for (const auto& e : m.edges) {
        fwd[e.src].push_back(e.dst);
        bwd[e.dst].push_back(e.src);
    }
    auto reach = [&](const std::vector<int>& from, const std::vector<std::vector<int>>& adj) {
        std::vector<bool> seen(m.num_states, false);
        std::deque<int> work(from.begin(), from.end());
        for (int s : from) seen[s] = true;
        while (!work.empty()) {
            int s = work.front();
            work.pop_front();
            for (int t : adj[s])
                if (!seen[t]) {
                    seen[t] = true;
                    work.push_back(t);
                }
        }
        return seen;
    };
    std::vector<bool> from_init = reach(m.initial, fwd);
    std::vector<bool> to_final = reach(m.final, bwd);
    std::vector<int> remap(m.num_states, -1);
    int next = 0;
    for (int s = 0; s < m.num_states; ++s)
        if (from_init[s] && to_final[s]) remap[s] = next++;
    if (next == 0) return nfa_empty_language(m.alphabet);
    Nfa out;
    out.alphabet = m.alphabet;
    out.num_states = next;
    for (int s : m.initial)
        if (remap[s] >= 0) out.initial.push_back(remap[s]);
    for (int s : m.final)
        if (remap[s] >= 0) out.final.push_back(remap[s]);
    for (const auto& e : m.edges)
        if (remap[e.src] >= 0 && remap[e.dst] >= 0)
            out.edges.push_back({remap[e.src], e.label, remap[e.dst]});
    return out;
}

Nfa renumber_canonical(const Nfa& m) {
    // BFS from initial states; edges explored in (alphabet order, dst) order,
    // epsilon first. Unreachable states are appended in original order.
    std::vector<std::vector<Nfa::Edge>> adj(m.num_states);
    for (const auto& e : m.edges) adj[e.src].push_back(e);
    auto rank = [&](char c) {
        return c == kEpsilon ? -1 : static_cast<int>(m.alphabet.index_of(c));
    };
    for (auto& v : adj)
        std::sort(v.begin(), v.end(), [&](const Nfa::Edge& a, const Nfa::Edge& b) {
            return std::make_pair(rank(a.label), a.dst) < std::make_pair(rank(b.label), b.dst);
        });
    std::vector<int> order(m.num_states, -1);
    int next = 0;
    std::deque<int> work;
    std::vector<int> inits = m.initial;
    std::sort(inits.begin(), inits.end());
    for (int s : inits)
        if (order[s] < 0) {
            order[s] = next++;
            work.push_back(s);
        }
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        for (const auto& e : adj[s])
            if (order[e.dst] < 0) {
                order[e.dst] = next++;
                work.push_back(e.dst);
            }
    }
    for (int s = 0; s < m.num_states; ++s)
        if (order[s] < 0) order[s] = next++;
    Nfa out;
    out.alphabet = m.alphabet;
    out.num_states = m.num_states;
    for (int s : m.initial) out.initial.push_back(order[s]);
    for (int s : m.final) out.final.push_back(order[s]);
    std::sort(out.initial.begin(), out.initial.end());
    std::sort(out.final.begin(), out.final.end());
    for (const auto& e : m.edges) out.edges.push_back({order[e.src], e.label, order[e.dst]});
    std::sort(out.edges.begin(), out.edges.end(), [&](const Nfa::Edge& a, const Nfa::Edge& b) {
        return std::tie(a.src, a.label, a.dst) < std::tie(b.src, b.label, b.dst);
    });
    return out;
}

bool nfa_member(const Nfa& m, const Word& w) {
    if (m.alphabet != w.alphabet())
        throw std::invalid_argument("word alphabet differs from automaton alphabet");
    auto eps = eps_adjacency(m);
    std::vector<std::vector<std::pair<char, int>>> letters(m.num_states);
    for (const auto& e : m.edges)
        if (e.label != kEpsilon) letters[e.src].emplace_back(e.label, e.dst);
    std::vector<bool> cur = to_bits(m.initial, m.num_states);
    close(cur, eps);
    for (char c : w.letters()) {
        std::vector<bool> next(m.num_states, false);
        for (int s = 0; s < m.num_states; ++s)
            if (cur[s])
                for (const auto& [lab, d] : letters[s])
                    if (lab == c) next[d] = true;
        close(next, eps);
        cur = std::move(next);
    }
    return intersects(cur, m.final);
}

bool nfa_is_empty(const Nfa& m) {
    std::vector<std::vector<int>> adj(m.num_states);
    for (const auto& e : m.edges) adj[e.src].push_back(e.dst);
    std::vector<bool> seen(m.num_states, false);
    std::deque<int> work;
    for (int s : m.initial) {
        seen[s] = true;
        work.push_back(s);
    }
    std::vector<bool> fin = to_bits(m.final, m.num_states);
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        if (fin[s]) return false;
        for (int t : adj[s])
            if (!seen[t]) {
                seen[t] = true;
                work.push_back(t);
            }
    }
    return true;
}

bool nfa_is_universal(const Nfa& m) { return nfa_is_empty(nfa_complement(m)); }

bool nfa_equivalent(const Nfa& m1, const Nfa& m2) {
    require_same_alphabet(m1, m2);
    return nfa_is_empty(nfa_intersection(m1, nfa_complement(m2))) &&
           nfa_is_empty(nfa_intersection(m2, nfa_complement(m1)));
}

Nfa word_closure(ClosureKind kind, const Word& w) {
    const Alphabet& a = w.alphabet();
    int k = static_cast<int>(w.length());
    switch (kind) {
        case ClosureKind::Up: {
            // A* w1 A* w2 ... wk A*
            Nfa m;
            m.alphabet = a;
            m.num_states = k + 1;
            m.initial = {0};
            m.final = {k};
            for (int i = 0; i <= k; ++i)
                for (char c : a.symbols()) m.edges.push_back({i, c, i});
            for (int i = 0; i < k; ++i) m.edges.push_back({i, w.at(i), i + 1});
            return m;
        }
        case ClosureKind::Down: {
            Nfa m;
            m.alphabet = a;
            m.num_states = k + 1;
            m.initial = {0};
            m.final = {k};
            for (int i = 0; i < k; ++i) {
                m.edges.push_back({i, kEpsilon, i + 1});
                m.edges.push_back({i, w.at(i), i + 1});
            }
            return m;
        }
        case ClosureKind::Exact:
            return nfa_single_word(w);
        case ClosureKind::StrictUp:
            return trim(nfa_intersection(word_closure(ClosureKind::Up, w),
                                         nfa_complement(nfa_single_word(w))));
        case ClosureKind::StrictDown:
            return trim(nfa_intersection(word_closure(ClosureKind::Down, w),
                                         nfa_complement(nfa_single_word(w))));
        case ClosureKind::Incomparable:
            return nfa_complement(nfa_union(word_closure(ClosureKind::Up, w),
                                            word_closure(ClosureKind::Down, w)));
    }
    throw std::logic_error("unreachable closure kind");
}

std::vector<Word> enumerate_members(const Nfa& m, std::size_t max_len) {
    std::vector<Word> out;
    for (const Word& w : words_upto(m.alphabet, max_len))
        if (nfa_member(m, w)) out.push_back(w);
    return out;
}

RegexPtr nfa_to_regex(const Nfa& m_in) {
    Nfa m = trim(m_in);
    if (nfa_is_empty(m)) return Regex::empty();
    // GNFA with fresh initial/final states, then state elimination.
    int n = m.num_states;
    int start = n, accept = n + 1;
    std::map<std::pair<int, int>, RegexPtr> arc;
    auto add = [&](int s, int t, RegexPtr r) {
        auto it = arc.find({s, t});
        if (it == arc.end())
            arc[{s, t}] = std::move(r);
        else
            it->second = Regex::union_(it->second, std::move(r));
    };
    for (const auto& e : m.edges)
        add(e.src, e.dst, e.label == kEpsilon ? Regex::epsilon() : Regex::symbol(e.label));
    for (int s : m.initial) add(start, s, Regex::epsilon());
    for (int s : m.final) add(s, accept, Regex::epsilon());

    for (int victim = 0; victim < n; ++victim) {
        RegexPtr self = Regex::empty();
        if (auto it = arc.find({victim, victim}); it != arc.end()) {
            self = it->second;
            arc.erase(it);
        }
        RegexPtr loop = Regex::star(self);
        std::vector<std::pair<int, RegexPtr>> in, out;
        for (auto it = arc.begin(); it != arc.end();) {
            if (it->first.second == victim) {
                in.emplace_back(it->first.first, it->second);
                it = arc.erase(it);
            } else if (it->first.first == victim) {
                out.emplace_back(it->first.second, it->second);
                it = arc.erase(it);
            } else {
                ++it;
            }
        }
        for (const auto& [s, rin] : in)
            for (const auto& [t, rout] : out)
                add(s, t, Regex::concat(rin, Regex::concat(loop, rout)));
    }
    auto it = arc.find({start, accept});
    return it == arc.end() ? Regex::empty() : it->second;
}

std::string nfa_to_text(const Nfa& m_in) {
    Nfa m = renumber_canonical(m_in);
    std::ostringstream os;
    os << "alphabet: " << m.alphabet.symbols() << "\n";
    os << "states: " << m.num_states << "\n";
    os << "initial:";
    for (int s : m.initial) os << ' ' << s;
    os << "\n";
    os << "final:";
    for (int s : m.final) os << ' ' << s;
    os << "\n";
    for (const auto& e : m.edges)
        os << e.src << ' ' << (e.label == kEpsilon ? '@' : e.label) << ' ' << e.dst << "\n";
    return os.str();
}

Nfa nfa_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Nfa m;
    bool have_alpha = false, have_states = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "alphabet:") {
            std::string sym;
            ls >> sym;
            m.alphabet = Alphabet(sym);
            have_alpha = true;
        } else if (head == "states:") {
            ls >> m.num_states;
            have_states = true;
        } else if (head == "initial:") {
            int s;
            while (ls >> s) m.initial.push_back(s);
        } else if (head == "final:") {
            int s;
            while (ls >> s) m.final.push_back(s);
        } else {
            int src = std::stoi(head);
            std::string lab;
            int dst;
            if (!(ls >> lab >> dst) || lab.size() != 1)
                throw std::runtime_error("bad transition line: " + line);
            char c = lab[0] == '@' ? kEpsilon : lab[0];
            m.edges.push_back({src, c, dst});
        }
    }
    if (!have_alpha || !have_states)
        throw std::runtime_error("automaton text missing alphabet/states header");
    for (const auto& e : m.edges) {
        if (e.src < 0 || e.src >= m.num_states || e.dst < 0 || e.dst >= m.num_states)
            throw std::runtime_error("transition endpoint out of range");
        if (e.label != kEpsilon && !m.alphabet.contains(e.label))
            throw std::runtime_error("transition label not in alphabet");
    }
    for (int s : m.initial)
        if (s < 0 || s >= m.num_states) throw std::runtime_error("initial state out of range");
    for (int s : m.final)
        if (s < 0 || s >= m.num_states) throw std::runtime_error("final state out of range");
    return m;
}

std::string nfa_to_dot(const Nfa& m_in, const std::string& name) {
    Nfa m = renumber_canonical(m_in);
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n";
    std::set<int> fin(m.final.begin(), m.final.end());
    for (int s = 0; s < m.num_states; ++s)
        os << "  q" << s << " [shape=" << (fin.count(s) ? "doublecircle" : "circle") << "];\n";
    for (std::size_t i = 0; i < m.initial.size(); ++i) {
        os << "  start" << i << " [shape=point];\n";
        os << "  start" << i << " -> q" << m.initial[i] << ";\n";
    }
    for (const auto& e : m.edges)
        os << "  q" << e.src << " -> q" << e.dst << " [label=\""
           << (e.label == kEpsilon ? '@' : e.label) << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace subseq
