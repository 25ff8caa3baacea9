#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wicdis {

// Immutable after load; safe for concurrent reads. Coordinates are stored
// as float32, similarity math accumulates in float64.
class EmbeddingTable {
public:
    EmbeddingTable(std::size_t dimension, std::string name);

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return tokens_.size(); }
    const std::string& name() const { return name_; }

    // Token must be non-empty and whitespace-free; vector length must match
    // the table dimension and all entries must be finite. Returns false when
    // the token was already present (the vector is replaced, last wins).
    bool put(std::string token, std::span<const float> values);

    // Exact-match lookup; nullopt means absent.
    std::optional<std::span<const float>> find(std::string_view token) const;

    // Tokens in insertion order.
    const std::vector<std::string>& tokens() const { return tokens_; }

    std::span<const float> vector_at(std::size_t index) const;

private:
    std::size_t dimension_;
    std::string name_;
    std::vector<std::string> tokens_;
    std::vector<float> arena_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct LoadReport {
    std::size_t declared_count = 0;
    std::size_t loaded_count = 0;
    std::size_t duplicate_count = 0;  // lines dropped because a later line won
    bool count_mismatch = false;      // non-duplicate deviation from the header
};

struct LoadResult {
    EmbeddingTable table;
    LoadReport report;
};

// word2vec text format: header "<count> <dimension>", then one
// "<token> <d1> ... <d_dim>" line per entry, single-space separated, UTF-8.
// Coordinates are parsed as float64 and narrowed to float32 for storage.
// Throws DataError with a line number on malformed input.
LoadResult load_embeddings(std::istream& in, std::string name = "");

// Reads from a file; ".gz" paths are decompressed transparently.
LoadResult load_embeddings_file(const std::string& path, std::string name = "");

// Serializes in the same text format, entries sorted by token byte order,
// coordinates in shortest form that round-trips their float32 value.
void save_embeddings(const EmbeddingTable& table, std::ostream& out);

// Cosine similarity with float64 accumulation, clamped to [-1, 1].
// nullopt when either vector has zero norm. Throws std::invalid_argument
// on length mismatch.
std::optional<double> cosine(std::span<const float> a, std::span<const float> b);
std::optional<double> cosine(std::span<const double> a, std::span<const double> b);

}  // namespace wicdis
