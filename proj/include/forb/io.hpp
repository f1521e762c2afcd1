#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "forb/graph.hpp"
#include "forb/partition.hpp"

namespace forb {

// Graph text format: first line "n m", then m lines "u v" with 0-based
// endpoints. Duplicate edges (either orientation) and loops are rejected.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Weighted graph format: first line "n k", then k rows of k decimals in
// [0,1]. Symmetry is validated exactly on load.
WeightedGraph read_weighted(std::istream& in);
WeightedGraph read_weighted_file(const std::string& path);
void write_weighted(std::ostream& out, const WeightedGraph& r);
void write_weighted_file(const std::string& path, const WeightedGraph& r);

// Partition format: one line per class, space-separated 0-based labels.
Equipartition read_partition(std::istream& in, int n);
Equipartition read_partition_file(const std::string& path, int n);
void write_partition(std::ostream& out, const Equipartition& p);
void write_partition_file(const std::string& path, const Equipartition& p);

/// Family spec: comma-separated builtin names (K2..K5, P3, P4, C4, C5)
/// and/or paths to graph files.
ForbiddenFamily family_from_spec(const std::string& spec);

std::string family_spec_label(const std::string& spec);

/// Shortest decimal that round-trips (printf %.17g).
std::string format_double(double v);

/// CSV with '#' comment lines (timing and provenance) quarantined above the
/// body; bodies are byte-identical across repeated runs with fixed seeds.
class CsvDocument {
public:
    void comment(const std::string& line) { comments_.push_back(line); }
    void header(const std::string& line) { header_ = line; }
    void row(const std::string& line) { rows_.push_back(line); }

    std::string body() const;  // header + rows, no comments
    std::string full() const;  // comments + body

private:
    std::vector<std::string> comments_;
    std::string header_;
    std::vector<std::string> rows_;
};

}  // namespace forb
