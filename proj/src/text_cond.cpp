#include "tinydiff/text_cond.hpp"

#include <sstream>
#include <stdexcept>

#include "tinydiff/errors.hpp"

namespace tinydiff {

Vocabulary Vocabulary::standard() {
    Vocabulary v;
    const char* words[] = {
        "a", "and", "on", "background",
        "solid", "outlined",
        "red", "green", "blue", "yellow", "cyan", "magenta", "white", "black",
        "circle", "square", "triangle",
    };
    int id = 0;
    for (const char* w : words) v.word_to_id[w] = id++;
    return v;
}

TokenSeq tokenize(const Vocabulary& vocab, const std::string& text) {
    TokenSeq seq;
    std::istringstream iss(text);
    std::string word;
    while (iss >> word) {
        if (static_cast<int>(seq.ids.size()) >= kMaxTokens) break;
        auto it = vocab.word_to_id.find(word);
        if (it == vocab.word_to_id.end()) throw UnknownTokenError("tokenize: unknown word '" + word + "'");
        seq.ids.push_back(it->second);
    }
    return seq;
}

TokenSeq rare_tokens(const Vocabulary& vocab, uint64_t seed) {
    const int range = vocab.rare_hi - vocab.rare_lo;
    if (range < 3) throw ConfigError("rare_tokens: reserved range must hold at least 3 ids");
    Rng rng(Rng::derive(seed, 0x7a7e));
    TokenSeq seq;
    while (seq.ids.size() < 3) {
        const int id = vocab.rare_lo + static_cast<int>(rng.uniform_int(static_cast<uint64_t>(range)));
        bool dup = false;
        for (int existing : seq.ids) dup = dup || (existing == id);
        if (!dup) seq.ids.push_back(id);
    }
    return seq;
}

TokenSeq concat_condition(const TokenSeq& c_b, const TokenSeq& c) {
    if (c_b.size() + c.size() > static_cast<size_t>(kMaxTokens))
        throw std::length_error("concat_condition: combined length " + std::to_string(c_b.size() + c.size()) +
                                " exceeds " + std::to_string(kMaxTokens));
    TokenSeq out = c_b;
    out.ids.insert(out.ids.end(), c.ids.begin(), c.ids.end());
    return out;
}

CondVector encode(const EmbeddingTable& table, const TokenSeq& seq) {
    if (seq.empty()) return null_condition(table);
    CondVector out;
    out.v.assign(static_cast<size_t>(table.dim), 0.0);
    for (int id : seq.ids) {
        if (id < 0 || id >= table.vocab_size)
            throw std::out_of_range("encode: token id " + std::to_string(id) + " outside table");
        const double* r = table.row(id);
        for (int d = 0; d < table.dim; ++d) out.v[static_cast<size_t>(d)] += r[d];
    }
    const double inv = 1.0 / static_cast<double>(seq.size());
    for (double& x : out.v) x *= inv;
    return out;
}

CondVector null_condition(const EmbeddingTable& table) {
    CondVector out;
    const double* r = table.row(table.null_id);
    out.v.assign(r, r + table.dim);
    return out;
}

}  // namespace tinydiff
