#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamsep/embedding.hpp"
#include "hamsep/witness.hpp"

namespace hamsep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitUsage = 2;

enum class InputFormat { automatic, planar_code, rotation };

InputFormat parse_format(const std::string& name);

struct Instance {
    std::string name;
    SignedEmbedding embedding;
};

// Reads every graph in a file. A rotation file may hold several graphs, each
// starting at its own "n <count>" line. Throws Error on IO or parse failure.
std::vector<Instance> load_instances(const std::string& path, InputFormat format);

// Parses "u-v,u-v,...".
std::vector<Edge> parse_edge_list(const std::string& text);

// Where command output goes. Progress lines go to `err` unless quiet.
struct Streams {
    std::ostream& out;
    std::ostream& err;
    bool quiet = false;
    bool plain = false;  // no carriage-return progress updates
};

struct ValidateOptions {
    std::string input;
    InputFormat format = InputFormat::automatic;
};
int cmd_validate(const ValidateOptions& options, Streams io);

struct CensusOptions {
    std::string input;
    InputFormat format = InputFormat::automatic;
    Rational c{1, 400};
    SeparatorMethod method = SeparatorMethod::automatic;
    int brute_force_limit = 50;
};
// Columns: graph,n,m,genus,separators,separators_minimal,separating_3_cycles,
// separating_4_cycles,c,threshold
int cmd_census(const CensusOptions& options, Streams io);

struct WitnessOptions {
    std::string input;
    InputFormat format = InputFormat::automatic;
    Rational c{1, 400};
    std::uint64_t check_f = 0;  // 0 disables the edge-choice checks
    std::uint64_t seed = 1;
    bool hamiltonicity = true;
};
int cmd_witness(const WitnessOptions& options, Streams io);

enum class MethodChoice { both, backtrack, dp };

MethodChoice parse_method(const std::string& name);

struct CountOptions {
    std::string input;
    InputFormat format = InputFormat::automatic;
    MethodChoice method = MethodChoice::both;
    std::vector<Edge> avoid;
};
// Columns: graph,n,m,avoided,backtrack,subset_dp,agree
int cmd_count(const CountOptions& options, Streams io);

struct ExperimentOptions {
    std::string name;  // conjecture | lemma7 | scaling
    std::uint64_t seed = 1;
    std::vector<int> sizes;  // empty means the experiment's default
    int instances = 0;       // 0 means the experiment's default
    std::string out_dir;     // empty writes the CSV to `out` and skips the summary
    int jobs = 1;
    Rational c{1, 400};
    std::uint64_t budget = 100000;
};
int cmd_experiment(const ExperimentOptions& options, Streams io);

struct GenerateOptions {
    std::string family;  // double_wheel | octahedron | icosahedron | k6 | random | low_separator
    int n = 0;
    std::uint64_t seed = 1;
    int flips = -1;  // -1 means 4n
    InputFormat format = InputFormat::rotation;
    std::string output;  // empty writes to `out`
};
int cmd_generate(const GenerateOptions& options, Streams io);

// Parses "12,14,16" and ranges like "12..20".
std::vector<int> parse_sizes(const std::string& text);

}  // namespace hamsep::cli
