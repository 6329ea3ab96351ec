#pragma once

#include "zerr/channel_graph.hpp"
#include "zerr/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace zerr {

/// Regular expression over letters 0..k-1, immutable and cheap to copy.
class Regex {
public:
    enum class Kind { empty, epsilon, letter, alternation, concatenation, star };

    static Regex empty() { return Regex(make(Kind::empty)); }
    static Regex epsilon() { return Regex(make(Kind::epsilon)); }
    static Regex letter(Letter x) {
        auto n = make(Kind::letter);
        n->letter = x;
        return Regex(std::move(n));
    }
    static Regex alternation(Regex a, Regex b) { return binary(Kind::alternation, std::move(a), std::move(b)); }
    static Regex concatenation(Regex a, Regex b) { return binary(Kind::concatenation, std::move(a), std::move(b)); }
    static Regex star(Regex a) {
        auto n = make(Kind::star);
        n->left = std::move(a.node_);
        return Regex(std::move(n));
    }

    /// A word as a chain of letters; the empty word is epsilon.
    static Regex word(const Word& w) {
        if (w.empty()) return epsilon();
        Regex r = letter(w.front());
        for (std::size_t i = 1; i < w.size(); ++i) r = concatenation(r, letter(w[i]));
        return r;
    }

    Kind kind() const noexcept { return node_->kind; }
    Letter symbol() const noexcept { return node_->letter; }
    /// Operand of star, or left operand of a binary node.
    Regex left() const { return Regex(node_->left); }
    Regex right() const { return Regex(node_->right); }

    /// One past the largest letter used (0 if none).
    std::size_t alphabet_bound() const {
        switch (kind()) {
        case Kind::empty:
        case Kind::epsilon:
            return 0;
        case Kind::letter:
            return symbol() + 1;
        case Kind::star:
            return left().alphabet_bound();
        default:
            return std::max(left().alphabet_bound(), right().alphabet_bound());
        }
    }

    friend bool operator==(const Regex& a, const Regex& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind()) return false;
        switch (a.kind()) {
        case Kind::empty:
        case Kind::epsilon:
            return true;
        case Kind::letter:
            return a.symbol() == b.symbol();
        case Kind::star:
            return a.left() == b.left();
        default:
            return a.left() == b.left() && a.right() == b.right();
        }
    }

private:
    struct Node {
        Kind kind = Kind::empty;
        Letter letter = 0;
        std::shared_ptr<const Node> left, right;
    };

    explicit Regex(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static std::shared_ptr<Node> make(Kind k) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        return n;
    }
    static Regex binary(Kind k, Regex a, Regex b) {
        auto n = make(k);
        n->left = std::move(a.node_);
        n->right = std::move(b.node_);
        return Regex(std::move(n));
    }

    std::shared_ptr<const Node> node_;
};

/// Text form accepted by parse_regex: '+' union, juxtaposition concat,
/// postfix '*', '@' for epsilon, '#' for the empty language; letters >= 10
/// print as "{n}".
inline std::string to_string(const Regex& e) {
    // Precedence: union 0 < concat 1 < star 2 < atom 3. Right operands of
    // the left-associative binary operators bind one level tighter, so
    // parsing the output rebuilds the same tree.
    std::function<std::string(const Regex&, int)> go = [&](const Regex& r, int min_prec) -> std::string {
        std::string s;
        int p = 3;
        switch (r.kind()) {
        case Regex::Kind::empty:
            s = "#";
            break;
        case Regex::Kind::epsilon:
            s = "@";
            break;
        case Regex::Kind::letter:
            s = r.symbol() < 10 ? std::string(1, static_cast<char>('0' + r.symbol())) : "{" + std::to_string(r.symbol()) + "}";
            break;
        case Regex::Kind::star:
            s = go(r.left(), 2) + "*";
            p = 2;
            break;
        case Regex::Kind::alternation:
            s = go(r.left(), 0) + "+" + go(r.right(), 1);
            p = 0;
            break;
        case Regex::Kind::concatenation:
            s = go(r.left(), 1) + go(r.right(), 2);
            p = 1;
            break;
        }
        return p < min_prec ? "(" + s + ")" : s;
    };
    return go(e, 0);
}

/// Maps an identifier to a letter; used to spell letters by vertex label.
using LetterResolver = std::function<std::optional<Letter>(const std::string&)>;

/// Resolver for the labels of a channel graph.
inline LetterResolver label_resolver(const ChannelGraph& g) {
    return [labels = g.labels()](const std::string& id) -> std::optional<Letter> {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == id) return i;
        return std::nullopt;
    };
}

namespace detail {

class RegexParser {
public:
    RegexParser(std::string_view text, LetterResolver resolve) : s_(text), resolve_(std::move(resolve)) {}

    Regex parse() {
        Regex r = alternation();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw invalid_input("regex: " + what + " at offset " + std::to_string(i_));
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool starts_atom() {
        skip();
        if (i_ >= s_.size()) return false;
        char c = s_[i_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == '{' || c == '@' || c == '#';
    }

    Regex alternation() {
        Regex r = concatenation();
        while (true) {
            skip();
            if (i_ < s_.size() && s_[i_] == '+') {
                ++i_;
                r = Regex::alternation(r, concatenation());
            } else {
                return r;
            }
        }
    }

    Regex concatenation() {
        Regex r = postfix();
        while (true) {
            skip();
            if (i_ < s_.size() && s_[i_] == '.') {
                ++i_;
                r = Regex::concatenation(r, postfix());
            } else if (starts_atom()) {
                r = Regex::concatenation(r, postfix());
            } else {
                return r;
            }
        }
    }

    Regex postfix() {
        Regex r = atom();
        while (true) {
            skip();
            if (i_ < s_.size() && s_[i_] == '*') {
                ++i_;
                r = Regex::star(r);
            } else {
                return r;
            }
        }
    }

    Regex atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ++i_;
            return Regex::letter(static_cast<Letter>(c - '0'));
        }
        if (c == '@') {
            ++i_;
            return Regex::epsilon();
        }
        if (c == '#') {
            ++i_;
            return Regex::empty();
        }
        if (c == '(') {
            ++i_;
            Regex r = alternation();
            skip();
            if (i_ >= s_.size() || s_[i_] != ')') fail("missing ')'");
            ++i_;
            return r;
        }
        if (c == '{') {
            std::size_t close = s_.find('}', i_);
            if (close == std::string_view::npos || close == i_ + 1) fail("bad '{n}' letter");
            Letter v = 0;
            for (std::size_t k = i_ + 1; k < close; ++k) {
                if (!std::isdigit(static_cast<unsigned char>(s_[k]))) fail("bad '{n}' letter");
                v = v * 10 + static_cast<Letter>(s_[k] - '0');
            }
            i_ = close + 1;
            return Regex::letter(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string id(s_.substr(start, i_ - start));
            std::optional<Letter> x = resolve_ ? resolve_(id) : std::nullopt;
            if (!x) fail("unknown letter '" + id + "'");
            return Regex::letter(*x);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    LetterResolver resolve_;
    std::size_t i_ = 0;
};

} // namespace detail

/// Parses e.g. "(0+1(0)*1+2(0)*3)*". Identifiers are looked up with
/// `resolve` when given.
inline Regex parse_regex(std::string_view text, LetterResolver resolve = {}) {
    return detail::RegexParser(text, std::move(resolve)).parse();
}

} // namespace zerr
