#pragma once

#include "sonn/core.hpp"

#include <iosfwd>
#include <optional>

namespace sonn {

// Shortest representation that round-trips a double exactly (%.17g).
std::string format_double(double v);

// Comma-separated decimal reals, one row per line. With has_header the
// first line holds column names; a final column named `label` is read
// as integer class tags. Errors cite 1-based physical line numbers.
Dataset ingest_csv(const std::string& path, bool has_header);
Dataset parse_csv(std::istream& in, bool has_header, const std::string& name);

// Header x0..x{d-1}(,label), then one row per vector.
void write_dataset_csv(std::ostream& out, const Dataset& d);

// Exported reference vectors: header `id,w0,...,w{d-1},<aux>`, where
// the aux column carries the per-unit error, counter or resource.
struct Codebook {
    std::vector<int> ids;
    std::vector<Vector> vectors;
    std::vector<double> aux;
    std::string aux_name;
};

void write_codebook(std::ostream& out, const Codebook& cb);
Codebook read_codebook(const std::string& path);

// One `a b [tag]` line per edge; the tag is an edge age or frozen flag.
struct EdgeRecord {
    int a = 0;
    int b = 0;
    std::optional<long long> tag;
};

void write_edges(std::ostream& out, std::span<const EdgeRecord> edges);
std::vector<EdgeRecord> read_edges(const std::string& path);

// Header `row_index,unit_id`, one pair per input row.
void write_assignments(std::ostream& out, std::span<const std::pair<std::size_t, long long>> rows);
std::vector<std::pair<std::size_t, long long>> read_assignments(const std::string& path);

// Flat `key = value` lines with # comments (config and metrics files).
void write_key_values(std::ostream& out, std::span<const std::pair<std::string, std::string>> kv);
std::vector<std::pair<std::string, std::string>> read_key_values(const std::string& path);
std::vector<std::pair<std::string, std::string>> parse_key_values(std::istream& in, const std::string& name);

}  // namespace sonn
