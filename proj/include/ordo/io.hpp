#ifndef ORDO_IO_HPP
#define ORDO_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ordo/applications.hpp"
#include "ordo/digraph.hpp"
#include "ordo/result.hpp"

namespace ordo {

// Digraph text format (.dg): first line "n m", then m lines
// "tail head [weight]"; the weight token "inf" is allowed, '#' starts a
// comment line. Strict parse; loops rejected.
Digraph parse_digraph(std::istream& in);
Digraph read_digraph_file(const std::string& path);
void write_digraph(std::ostream& out, const Digraph& d, bool with_weights);
std::string format_digraph(const Digraph& d);

// Bounds format (.bounds.json): object with optional keys "f", "g",
// "m_delta", "m_rho" mapping vertex-id strings to numbers or "-inf"/"inf",
// plus an optional scalar "w_default" overriding the default arc weight.
// Unspecified vertices default to -inf (lower) / +inf (upper).
struct BoundsFile {
    BoundSpec fg;                 // "f" and "g"
    std::vector<int> m_delta;     // empty when absent
    std::vector<int> m_rho;
    bool has_f = false, has_g = false;
    double w_default = 1.0;
};
BoundsFile parse_bounds(const std::string& json_text, int n);
BoundsFile read_bounds_file(const std::string& path, int n);
std::string format_bounds(const BoundSpec& spec);

// rankings.csv: one line per judge, comma-separated candidate names;
// candidates are indexed in first-appearance order.
RankingProfile parse_rankings_csv(std::istream& in);
RankingProfile read_rankings_file(const std::string& path);

// thresholds JSON: {"tau": {"0": 2, ...}, "seed": [0, 3]}; missing tau
// entries default to 0.
struct ThresholdSpec {
    std::vector<double> tau;
    std::vector<Vertex> seed;
};
ThresholdSpec parse_thresholds(const std::string& json_text, int n);
ThresholdSpec read_thresholds_file(const std::string& path, int n);

// tags sidecar: JSON map id -> label
std::string format_tags(const std::vector<std::string>& tags);
std::vector<std::string> parse_tags(const std::string& json_text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ordo

#endif
