#pragma once

#include "zerr/channel_graph.hpp"
#include "zerr/error.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace zerr {

/// Parses a word written as letter indices: each digit is one letter and
/// "{12}" spells a multi-digit index. "011" is the word (0, 1, 1).
inline Word parse_word(std::string_view text) {
    if (text.empty()) throw invalid_input("empty word");
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            w.push_back(static_cast<Letter>(ch - '0'));
        } else if (ch == '{') {
            std::size_t close = text.find('}', i);
            if (close == std::string_view::npos || close == i + 1) throw invalid_input("unterminated '{' in word");
            Letter v = 0;
            for (std::size_t k = i + 1; k < close; ++k) {
                if (!std::isdigit(static_cast<unsigned char>(text[k]))) throw invalid_input("non-digit inside '{}'");
                v = v * 10 + static_cast<Letter>(text[k] - '0');
            }
            w.push_back(v);
            i = close;
        } else {
            throw invalid_input(std::string("unexpected character '") + ch + "' in word");
        }
    }
    return w;
}

/// Comma-separated list of words, e.g. "0,11,23".
inline std::vector<Word> parse_word_list(std::string_view text) {
    std::vector<Word> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        out.push_back(parse_word(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string format_word(const Word& w) {
    if (w.empty()) return "ε";
    std::string s;
    for (Letter x : w) s += x < 10 ? std::string(1, static_cast<char>('0' + x)) : "{" + std::to_string(x) + "}";
    return s;
}

} // namespace zerr
