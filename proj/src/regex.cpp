#include "subseq/regex.hpp"

#include <stdexcept>

namespace subseq {

namespace {

RegexPtr make(Regex::Kind k, char sym, RegexPtr a, RegexPtr b) {
    auto r = std::make_shared<Regex>();
    r->kind = k;
    r->sym = sym;
    r->left = std::move(a);
    r->right = std::move(b);
    return r;
}

}  // namespace

RegexPtr Regex::empty() { return make(Kind::Empty, 0, nullptr, nullptr); }
RegexPtr Regex::epsilon() { return make(Kind::Epsilon, 0, nullptr, nullptr); }
RegexPtr Regex::symbol(char c) { return make(Kind::Symbol, c, nullptr, nullptr); }

RegexPtr Regex::concat(RegexPtr a, RegexPtr b) {
    if (a->kind == Kind::Empty || b->kind == Kind::Empty) return empty();
    if (a->kind == Kind::Epsilon) return b;
    if (b->kind == Kind::Epsilon) return a;
    return make(Kind::Concat, 0, std::move(a), std::move(b));
}

RegexPtr Regex::union_(RegexPtr a, RegexPtr b) {
    if (a->kind == Kind::Empty) return b;
    if (b->kind == Kind::Empty) return a;
    if (regex_equal(a, b)) return a;
    return make(Kind::Union, 0, std::move(a), std::move(b));
}

RegexPtr Regex::star(RegexPtr a) {
    if (a->kind == Kind::Empty || a->kind == Kind::Epsilon) return epsilon();
    if (a->kind == Kind::Star) return a;
    return make(Kind::Star, 0, std::move(a), nullptr);
}

RegexPtr Regex::plus(RegexPtr a) { return concat(a, star(a)); }

RegexPtr Regex::literal(std::string_view w) {
    RegexPtr r = epsilon();
    for (char c : w) r = concat(r, symbol(c));
    return r;
}

RegexPtr Regex::universal(const Alphabet& a) { return star(any_of(a.symbols())); }

RegexPtr Regex::any_of(std::string_view symbols) {
    RegexPtr r = empty();
    for (char c : symbols) r = union_(r, symbol(c));
    return r;
}

bool regex_equal(const RegexPtr& a, const RegexPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case Regex::Kind::Empty:
        case Regex::Kind::Epsilon: return true;
        case Regex::Kind::Symbol: return a->sym == b->sym;
        case Regex::Kind::Star: return regex_equal(a->left, b->left);
        case Regex::Kind::Concat:
        case Regex::Kind::Union:
            return regex_equal(a->left, b->left) && regex_equal(a->right, b->right);
    }
    return false;
}

namespace {

class RegexParser {
public:
    RegexParser(std::string_view text, const Alphabet& a) : text_(text), alpha_(a) {}

    RegexPtr parse() {
        RegexPtr r = parse_union();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character");
        return r;
    }

private:
    RegexPtr parse_union() {
        RegexPtr r = parse_concat();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '+') {
                ++pos_;
                r = Regex::union_(r, parse_concat());
            } else {
                return r;
            }
        }
    }

    RegexPtr parse_concat() {
        RegexPtr r = parse_postfix();
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) return r;
            char c = text_[pos_];
            if (c == ')' || c == '+') return r;
            r = Regex::concat(r, parse_postfix());
        }
    }

    RegexPtr parse_postfix() {
        RegexPtr r = parse_primary();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                r = Regex::star(r);
            } else if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == '+') {
                pos_ += 2;
                r = Regex::plus(r);
            } else {
                return r;
            }
        }
    }

    RegexPtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of regex");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RegexPtr r = parse_union();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == '@') { ++pos_; return Regex::epsilon(); }
        if (c == '#') { ++pos_; return Regex::empty(); }
        if (alpha_.contains(c)) { ++pos_; return Regex::symbol(c); }
        fail("symbol not in alphabet");
        return nullptr;
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error("regex error at position " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view text_;
    const Alphabet& alpha_;
    std::size_t pos_ = 0;
};

// Precedence levels for printing: union 1, concat 2, postfix 3, atom 4.
int level(const RegexPtr& r) {
    switch (r->kind) {
        case Regex::Kind::Union: return 1;
        case Regex::Kind::Concat: return 2;
        case Regex::Kind::Star: return 3;
        default: return 4;
    }
}

void print_rec(const RegexPtr& r, int min_level, std::string& out) {
    bool paren = level(r) < min_level;
    if (paren) out += '(';
    switch (r->kind) {
        case Regex::Kind::Empty: out += '#'; break;
        case Regex::Kind::Epsilon: out += '@'; break;
        case Regex::Kind::Symbol: out += r->sym; break;
        case Regex::Kind::Union:
            print_rec(r->left, 1, out);
            out += '+';
            print_rec(r->right, 2, out);
            break;
        case Regex::Kind::Concat:
            print_rec(r->left, 2, out);
            print_rec(r->right, 3, out);
            break;
        case Regex::Kind::Star:
            print_rec(r->left, 4, out);
            out += '*';
            break;
    }
    if (paren) out += ')';
}

}  // namespace

RegexPtr parse_regex(std::string_view text, const Alphabet& a) {
    return RegexParser(text, a).parse();
}

std::string print_regex(const RegexPtr& r) {
    std::string out;
    print_rec(r, 0, out);
    return out;
}

}  // namespace subseq
