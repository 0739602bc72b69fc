#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tinydiff/rng.hpp"

namespace tinydiff {

// Token sequences are capped at this length everywhere (prompt + rare prefix).
inline constexpr int kMaxTokens = 16;

struct TokenSeq {
    std::vector<int> ids;

    bool empty() const { return ids.empty(); }
    size_t size() const { return ids.size(); }
};

// Word ids live in [0, rare_lo); the reserved rare range [rare_lo, rare_hi)
// is never produced by the corpus generator; null_id is the unconditional row.
struct Vocabulary {
    std::map<std::string, int> word_to_id;
    int rare_lo = 64;
    int rare_hi = 128;
    int null_id = 128;

    int size() const { return null_id + 1; }

    // The fixed caption vocabulary of the shipped corpus generator.
    static Vocabulary standard();
};

TokenSeq tokenize(const Vocabulary& vocab, const std::string& text);

// Three distinct ids from the reserved range, deterministic in seed.
TokenSeq rare_tokens(const Vocabulary& vocab, uint64_t seed);

// "[rare tokens] edit prompt" ordering: c_b first, then c.
TokenSeq concat_condition(const TokenSeq& c_b, const TokenSeq& c);

// Dense condition vector fed to the denoiser.
struct CondVector {
    std::vector<double> v;
};

// Learned token embeddings with mean pooling. Rows are trained during
// pretraining only; the table is frozen during fine-tuning.
struct EmbeddingTable {
    int vocab_size = 0;
    int dim = 0;
    int null_id = 0;
    std::vector<double> weights;  // vocab_size x dim, row-major

    const double* row(int id) const { return weights.data() + static_cast<size_t>(id) * dim; }
    double* row(int id) { return weights.data() + static_cast<size_t>(id) * dim; }
};

// Mean of the rows for seq; the empty sequence maps to the null row.
CondVector encode(const EmbeddingTable& table, const TokenSeq& seq);

CondVector null_condition(const EmbeddingTable& table);

}  // namespace tinydiff
