#include "subseq/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace subseq {

namespace {

void require_domain_convention(const Transducer& t) {
    if (!t.tape1_is_domain)
        throw std::invalid_argument("transducer tape convention violated: tape 1 must be the domain");
}

Transducer shifted_merge(const Transducer& t1, const Transducer& t2, Transducer& out) {
    out.alphabet = t1.alphabet;
    out.num_states = t1.num_states + t2.num_states;
    out.edges = t1.edges;
    for (const auto& e : t2.edges)
        out.edges.push_back({e.src + t1.num_states, e.in, e.out, e.dst + t1.num_states});
    return out;
}

}  // namespace

Transducer builtin_relation(RelationKind kind, const Alphabet& a) {
    Transducer t;
    t.alphabet = a;
    switch (kind) {
        case RelationKind::Subword: {
            // (union_a [eps/a] + [a/a])*
            t.num_states = 1;
            t.initial = {0};
            t.final = {0};
            for (char c : a.symbols()) {
                t.edges.push_back({0, kEpsilon, c, 0});
                t.edges.push_back({0, c, c, 0});
            }
            return t;
        }
        case RelationKind::Strict: {
            // subword . (union_a [eps/a]) . subword
            t.num_states = 2;
            t.initial = {0};
            t.final = {1};
            for (char c : a.symbols()) {
                t.edges.push_back({0, kEpsilon, c, 0});
                t.edges.push_back({0, c, c, 0});
                t.edges.push_back({0, kEpsilon, c, 1});
                t.edges.push_back({1, kEpsilon, c, 1});
                t.edges.push_back({1, c, c, 1});
            }
            return t;
        }
        case RelationKind::StrictInv:
            return rel_swap(builtin_relation(RelationKind::Strict, a));
        case RelationKind::Equality: {
            t.num_states = 1;
            t.initial = {0};
            t.final = {0};
            for (char c : a.symbols()) t.edges.push_back({0, c, c, 0});
            return t;
        }
        case RelationKind::T1: {
            // ( union_a [union_{b!=a} (eps,b)]* (a,a) )*
            //   . ( union_a union_{b!=a} (a,b) ) . ( union_{a,a'} (a,a') )*
            // State 0 is the block hub, one state per letter for a running
            // block, state tail after the mismatched pair.
            int n = static_cast<int>(a.size());
            int tail = n + 1;
            t.num_states = n + 2;
            t.initial = {0};
            t.final = {tail};
            for (int i = 0; i < n; ++i) {
                char ai = a.symbol(i);
                int block = i + 1;
                t.edges.push_back({0, kEpsilon, kEpsilon, block});
                for (char b : a.symbols())
                    if (b != ai) t.edges.push_back({block, kEpsilon, b, block});
                t.edges.push_back({block, ai, ai, 0});
            }
            for (char x : a.symbols())
                for (char b : a.symbols())
                    if (b != x) t.edges.push_back({0, x, b, tail});
            for (char x : a.symbols())
                for (char y : a.symbols()) t.edges.push_back({tail, x, y, tail});
            return t;
        }
        case RelationKind::T2:
            return rel_swap(builtin_relation(RelationKind::T1, a));
        case RelationKind::Incomparable:
            return rel_union(builtin_relation(RelationKind::T1, a),
                             builtin_relation(RelationKind::T2, a));
    }
    throw std::logic_error("unreachable relation kind");
}

bool rel_member(const Transducer& t, const Word& u, const Word& v) {
    if (t.alphabet != u.alphabet() || t.alphabet != v.alphabet())
        throw std::invalid_argument("alphabet mismatch in rel_member");
    int lu = static_cast<int>(u.length());
    int lv = static_cast<int>(v.length());
    auto idx = [&](int i, int j, int q) { return (i * (lv + 1) + j) * t.num_states + q; };
    std::vector<bool> seen(static_cast<std::size_t>((lu + 1) * (lv + 1)) * t.num_states, false);
    std::vector<std::vector<const Transducer::Edge*>> adj(t.num_states);
    for (const auto& e : t.edges) adj[e.src].push_back(&e);
    std::deque<std::tuple<int, int, int>> work;
    for (int q : t.initial) {
        seen[idx(0, 0, q)] = true;
        work.push_back({0, 0, q});
    }
    std::set<int> finals(t.final.begin(), t.final.end());
    while (!work.empty()) {
        auto [i, j, q] = work.front();
        work.pop_front();
        if (i == lu && j == lv && finals.count(q)) return true;
        for (const auto* e : adj[q]) {
            int ni = i, nj = j;
            if (e->in != kEpsilon) {
                if (i >= lu || u.at(i) != e->in) continue;
                ni = i + 1;
            }
            if (e->out != kEpsilon) {
                if (j >= lv || v.at(j) != e->out) continue;
                nj = j + 1;
            }
            if (!seen[idx(ni, nj, e->dst)]) {
                seen[idx(ni, nj, e->dst)] = true;
                work.push_back({ni, nj, e->dst});
            }
        }
    }
    return false;
}

namespace {

// Product of t with m synchronized on the tape selected by `on_tape2`;
// the other tape's labels become the resulting NFA labels.
Nfa apply_transducer(const Transducer& t, const Nfa& m_in, bool on_tape2) {
    require_domain_convention(t);
    if (t.alphabet != m_in.alphabet)
        throw std::invalid_argument("alphabet mismatch between transducer and automaton");
    Nfa m = remove_epsilon(m_in);
    std::vector<std::vector<std::pair<char, int>>> madj(m.num_states);
    for (const auto& e : m.edges) madj[e.src].emplace_back(e.label, e.dst);

    std::map<std::pair<int, int>, int> id;
    std::deque<std::pair<int, int>> work;
    auto get = [&](int q, int s) {
        auto [it, inserted] = id.try_emplace({q, s}, static_cast<int>(id.size()));
        if (inserted) work.push_back({q, s});
        return it->second;
    };
    Nfa out;
    out.alphabet = t.alphabet;
    for (int q : t.initial)
        for (int s : m.initial) out.initial.push_back(get(q, s));
    std::set<int> tf(t.final.begin(), t.final.end());
    std::set<int> mf(m.final.begin(), m.final.end());
    std::vector<std::vector<const Transducer::Edge*>> tadj(t.num_states);
    for (const auto& e : t.edges) tadj[e.src].push_back(&e);
    while (!work.empty()) {
        auto [q, s] = work.front();
        work.pop_front();
        int src = id.at({q, s});
        if (tf.count(q) && mf.count(s)) out.final.push_back(src);
        for (const auto* e : tadj[q]) {
            char sync = on_tape2 ? e->out : e->in;
            char keep = on_tape2 ? e->in : e->out;
            if (sync == kEpsilon) {
                out.edges.push_back({src, keep, get(e->dst, s)});
            } else {
                for (const auto& [lab, d] : madj[s])
                    if (lab == sync) out.edges.push_back({src, keep, get(e->dst, d)});
            }
        }
    }
    out.num_states = static_cast<int>(id.size());
    if (out.num_states == 0) return nfa_empty_language(out.alphabet);
    return renumber_canonical(trim(out));
}

}  // namespace

Nfa preimage(const Transducer& t, const Nfa& m) { return apply_transducer(t, m, true); }

Nfa image(const Transducer& t, const Nfa& m) { return apply_transducer(t, m, false); }

Transducer rel_union(const Transducer& t1, const Transducer& t2) {
    if (t1.alphabet != t2.alphabet)
        throw std::invalid_argument("alphabet mismatch in rel_union");
    Transducer out;
    shifted_merge(t1, t2, out);
    out.initial = t1.initial;
    for (int s : t2.initial) out.initial.push_back(s + t1.num_states);
    out.final = t1.final;
    for (int s : t2.final) out.final.push_back(s + t1.num_states);
    return rel_normalize(out);
}

Transducer rel_concat(const Transducer& t1, const Transducer& t2) {
    if (t1.alphabet != t2.alphabet)
        throw std::invalid_argument("alphabet mismatch in rel_concat");
    Transducer out;
    shifted_merge(t1, t2, out);
    for (int f : t1.final)
        for (int i : t2.initial)
            out.edges.push_back({f, kEpsilon, kEpsilon, i + t1.num_states});
    out.initial = t1.initial;
    for (int s : t2.final) out.final.push_back(s + t1.num_states);
    return rel_normalize(out);
}

Transducer rel_star(const Transducer& t) {
    Transducer out;
    out.alphabet = t.alphabet;
    out.num_states = t.num_states + 1;
    int hub = t.num_states;
    out.edges = t.edges;
    for (int i : t.initial) out.edges.push_back({hub, kEpsilon, kEpsilon, i});
    for (int f : t.final) out.edges.push_back({f, kEpsilon, kEpsilon, hub});
    out.initial = {hub};
    out.final = {hub};
    return rel_normalize(out);
}

Transducer rel_from_pairs(const Alphabet& a, const std::vector<std::pair<Word, Word>>& pairs) {
    Transducer out;
    out.alphabet = a;
    out.num_states = 1;
    out.initial = {0};
    for (const auto& [u, v] : pairs) {
        if (u.alphabet() != a || v.alphabet() != a)
            throw std::invalid_argument("pair word alphabet mismatch");
        int prev = 0;
        for (char c : u.letters()) {
            int next = out.num_states++;
            out.edges.push_back({prev, c, kEpsilon, next});
            prev = next;
        }
        for (char c : v.letters()) {
            int next = out.num_states++;
            out.edges.push_back({prev, kEpsilon, c, next});
            prev = next;
        }
        out.final.push_back(prev);
    }
    return rel_normalize(out);
}

Transducer rel_swap(const Transducer& t) {
    Transducer out = t;
    for (auto& e : out.edges) std::swap(e.in, e.out);
    return out;
}

Transducer rel_normalize(const Transducer& t) {
    // Eliminate (eps, eps) moves via closure, then renumber by BFS.
    std::vector<std::vector<int>> eps(t.num_states);
    for (const auto& e : t.edges)
        if (e.in == kEpsilon && e.out == kEpsilon) eps[e.src].push_back(e.dst);
    std::set<int> finals(t.final.begin(), t.final.end());
    Transducer mid;
    mid.alphabet = t.alphabet;
    mid.num_states = t.num_states;
    mid.initial = t.initial;
    mid.tape1_is_domain = t.tape1_is_domain;
    for (int s = 0; s < t.num_states; ++s) {
        std::vector<bool> cl(t.num_states, false);
        std::deque<int> work{s};
        cl[s] = true;
        while (!work.empty()) {
            int x = work.front();
            work.pop_front();
            for (int y : eps[x])
                if (!cl[y]) {
                    cl[y] = true;
                    work.push_back(y);
                }
        }
        bool fin = false;
        std::set<std::tuple<char, char, int>> added;
        for (int x = 0; x < t.num_states; ++x) {
            if (!cl[x]) continue;
            if (finals.count(x)) fin = true;
            for (const auto& e : t.edges)
                if (e.src == x && !(e.in == kEpsilon && e.out == kEpsilon))
                    added.insert({e.in, e.out, e.dst});
        }
        for (const auto& [in, outl, dst] : added) mid.edges.push_back({s, in, outl, dst});
        if (fin) mid.final.push_back(s);
    }
    // BFS renumbering.
    std::vector<std::vector<Transducer::Edge>> adj(mid.num_states);
    for (const auto& e : mid.edges) adj[e.src].push_back(e);
    for (auto& v : adj)
        std::sort(v.begin(), v.end(), [](const Transducer::Edge& a, const Transducer::Edge& b) {
            return std::tie(a.in, a.out, a.dst) < std::tie(b.in, b.out, b.dst);
        });
    std::vector<int> order(mid.num_states, -1);
    int next = 0;
    std::deque<int> work;
    std::vector<int> inits = mid.initial;
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
    Transducer out;
    out.alphabet = mid.alphabet;
    out.tape1_is_domain = mid.tape1_is_domain;
    out.num_states = next;
    for (int s : mid.initial)
        if (order[s] >= 0) out.initial.push_back(order[s]);
    for (int s : mid.final)
        if (order[s] >= 0) out.final.push_back(order[s]);
    std::sort(out.initial.begin(), out.initial.end());
    out.initial.erase(std::unique(out.initial.begin(), out.initial.end()), out.initial.end());
    std::sort(out.final.begin(), out.final.end());
    out.final.erase(std::unique(out.final.begin(), out.final.end()), out.final.end());
    for (const auto& e : mid.edges)
        if (order[e.src] >= 0 && order[e.dst] >= 0)
            out.edges.push_back({order[e.src], e.in, e.out, order[e.dst]});
    std::sort(out.edges.begin(), out.edges.end(),
              [](const Transducer::Edge& a, const Transducer::Edge& b) {
                  return std::tie(a.src, a.in, a.out, a.dst) <
                         std::tie(b.src, b.in, b.out, b.dst);
              });
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    if (out.num_states == 0) {
        out.num_states = 1;
        out.initial = {0};
    }
    return out;
}

std::string transducer_to_text(const Transducer& t_in) {
    Transducer t = rel_normalize(t_in);
    std::ostringstream os;
    os << "alphabet: " << t.alphabet.symbols() << "\n";
    os << "states: " << t.num_states << "\n";
    os << "initial:";
    for (int s : t.initial) os << ' ' << s;
    os << "\n";
    os << "final:";
    for (int s : t.final) os << ' ' << s;
    os << "\n";
    for (const auto& e : t.edges)
        os << e.src << ' ' << (e.in == kEpsilon ? '@' : e.in) << '/'
           << (e.out == kEpsilon ? '@' : e.out) << ' ' << e.dst << "\n";
    return os.str();
}

Transducer transducer_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Transducer t;
    bool have_alpha = false, have_states = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "alphabet:") {
            std::string sym;
            ls >> sym;
            t.alphabet = Alphabet(sym);
            have_alpha = true;
        } else if (head == "states:") {
            ls >> t.num_states;
            have_states = true;
        } else if (head == "initial:") {
            int s;
            while (ls >> s) t.initial.push_back(s);
        } else if (head == "final:") {
            int s;
            while (ls >> s) t.final.push_back(s);
        } else {
            int src = std::stoi(head);
            std::string lab;
            int dst;
            if (!(ls >> lab >> dst) || lab.size() != 3 || lab[1] != '/')
                throw std::runtime_error("bad transducer transition line: " + line);
            char in = lab[0] == '@' ? kEpsilon : lab[0];
            char out = lab[2] == '@' ? kEpsilon : lab[2];
            t.edges.push_back({src, in, out, dst});
        }
    }
    if (!have_alpha || !have_states)
        throw std::runtime_error("transducer text missing alphabet/states header");
    return t;
}

std::string transducer_to_dot(const Transducer& t_in, const std::string& name) {
    Transducer t = rel_normalize(t_in);
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n";
    std::set<int> fin(t.final.begin(), t.final.end());
    for (int s = 0; s < t.num_states; ++s)
        os << "  q" << s << " [shape=" << (fin.count(s) ? "doublecircle" : "circle") << "];\n";
    for (std::size_t i = 0; i < t.initial.size(); ++i) {
        os << "  start" << i << " [shape=point];\n";
        os << "  start" << i << " -> q" << t.initial[i] << ";\n";
    }
    for (const auto& e : t.edges)
        os << "  q" << e.src << " -> q" << e.dst << " [label=\""
           << (e.in == kEpsilon ? '@' : e.in) << "/" << (e.out == kEpsilon ? '@' : e.out)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace subseq
