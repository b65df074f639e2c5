#include "interest/tokenizer.hpp"

#include <cstdint>
#include <stdexcept>

namespace interest {

namespace {

constexpr std::uint32_t kInvalid = 0xFFFFFFFFu;

// Decodes the UTF-8 sequence starting at text[pos] and advances pos.
// Malformed bytes consume one position and yield kInvalid.
std::uint32_t decode_utf8(std::string_view text, std::size_t& pos) {
    const auto byte = [&](std::size_t i) { return static_cast<std::uint8_t>(text[i]); };
    const std::uint8_t lead = byte(pos);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (lead < 0x80) {
        pos += 1;
        return lead;
    } else if ((lead >> 5) == 0x6) {
        len = 2;
        cp = lead & 0x1Fu;
    } else if ((lead >> 4) == 0xE) {
        len = 3;
        cp = lead & 0x0Fu;
    } else if ((lead >> 3) == 0x1E) {
        len = 4;
        cp = lead & 0x07u;
    } else {
        pos += 1;
        return kInvalid;
    }
    if (pos + len > text.size()) {
        pos += 1;
        return kInvalid;
    }
    for (std::size_t i = 1; i < len; ++i) {
        const std::uint8_t cont = byte(pos + i);
        if ((cont >> 6) != 0x2) {
            pos += 1;
            return kInvalid;
        }
        cp = (cp << 6) | (cont & 0x3Fu);
    }
    pos += len;
    return cp;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_word_codepoint(std::uint32_t cp) {
    if (cp == kInvalid) return false;
    if (cp < 0x80) {
        return (cp >= '0' && cp <= '9') || (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z');
    }
    return true;
}

std::uint32_t lower_codepoint(std::uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    // Latin-1 supplement uppercase letters, skipping U+00D7 (multiplication sign).
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    return cp;
}

}  // namespace

StopwordList::StopwordList(std::initializer_list<std::string> words) {
    for (const auto& word : words) insert(word);
}

void StopwordList::insert(std::string_view word) {
    words_.insert(lowercase_text(word));
}

bool StopwordList::contains(std::string_view word) const {
    return words_.count(lowercase_text(word)) != 0;
}

StopwordList StopwordList::default_english() {
    return StopwordList{
        "a",    "an",    "the",  "and",  "or",    "but",   "nor",   "so",    "yet",
        "of",   "to",    "in",   "on",   "at",    "by",    "for",   "from",  "with",
        "into", "onto",  "over", "under", "about", "after", "before", "between",
        "as",   "is",    "are",  "was",  "were",  "be",    "been",  "being", "am",
        "do",   "does",  "did",  "have", "has",   "had",   "will",  "would", "shall",
        "should", "can", "could", "may", "might", "must",  "not",   "no",
        "i",    "you",   "he",   "she",  "it",    "we",    "they",  "me",    "him",
        "her",  "us",    "them", "my",   "your",  "his",   "its",   "our",   "their",
        "this", "that",  "these", "those", "there", "here", "what",  "which", "who",
        "whom", "whose", "when", "where", "why",  "how",   "if",    "then",  "than",
    };
}

std::string lowercase_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::uint32_t cp = decode_utf8(text, pos);
        if (cp == kInvalid) continue;
        append_utf8(out, lower_codepoint(cp));
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& config,
                                  const StopwordList& stopwords) {
    if (config.min_token_len < 1) {
        throw std::invalid_argument("TokenizerConfig::min_token_len must be >= 1");
    }
    std::vector<std::string> tokens;
    std::string current;
    std::size_t current_len = 0;  // codepoints

    const auto flush = [&] {
        if (current_len >= config.min_token_len &&
            !(config.strip_stopwords && stopwords.contains(current))) {
            tokens.push_back(current);
        }
        current.clear();
        current_len = 0;
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::uint32_t cp = decode_utf8(text, pos);
        if (is_word_codepoint(cp)) {
            append_utf8(current, config.lowercase ? lower_codepoint(cp) : cp);
            ++current_len;
        } else if (!current.empty()) {
            flush();
        }
    }
    if (!current.empty()) flush();
    return tokens;
}

}  // namespace interest
