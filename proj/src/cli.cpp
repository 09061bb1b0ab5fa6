#include "hamsep/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hamsep/connectivity.hpp"
#include "hamsep/generators.hpp"
#include "hamsep/hamilton.hpp"
#include "hamsep/report_json.hpp"

namespace hamsep::cli {

using nlohmann::json;
namespace fs = std::filesystem;

InputFormat parse_format(const std::string& name) {
    if (name == "auto")
        return InputFormat::automatic;
    if (name == "planar_code" || name == "pc")
        return InputFormat::planar_code;
    if (name == "rotation" || name == "rot")
        return InputFormat::rotation;
    throw std::invalid_argument("unknown format '" + name + "'");
}

MethodChoice parse_method(const std::string& name) {
    if (name == "both")
        return MethodChoice::both;
    if (name == "bt" || name == "backtrack")
        return MethodChoice::backtrack;
    if (name == "dp")
        return MethodChoice::dp;
    throw std::invalid_argument("unknown method '" + name + "'");
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_binary(std::string_view bytes) {
    if (bytes.starts_with(">>planar_code"))
        return true;
    for (unsigned char ch : bytes.substr(0, 64))
        if (ch < 9 || (ch > 13 && ch < 32))
            return true;
    return false;
}

// One chunk per "n <count>" line; comments before the first one go with it.
std::vector<std::string> split_rotation_text(const std::string& text) {
    std::vector<std::string> chunks;
    std::istringstream in(text);
    std::string line, current;
    bool has_header = false;
    while (std::getline(in, line)) {
        std::istringstream words(line.substr(0, line.find('#')));
        std::string first;
        words >> first;
        if (first == "n" && has_header) {
            chunks.push_back(std::move(current));
            current.clear();
        }
        if (first == "n")
            has_header = true;
        current += line;
        current += '\n';
    }
    if (has_header || chunks.empty())
        chunks.push_back(std::move(current));
    return chunks;
}

class Progress {
  public:
    explicit Progress(const Streams& io) : io_(io) {}
    ~Progress() {
        if (dirty_)
            io_.err << '\n';
    }

    void note(const std::string& text) {
        if (io_.quiet)
            return;
        if (io_.plain) {
            io_.err << text << '\n';
        } else {
            io_.err << '\r' << text << "\x1b[K" << std::flush;
            dirty_ = true;
        }
    }

  private:
    const Streams& io_;
    bool dirty_ = false;
};

std::string fixed(double x, int digits = 6) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

std::string rational_text(const Rational& c) {
    return std::to_string(c.num) + "/" + std::to_string(c.den);
}

bool within_threshold(int separators, int n, const Rational& c) {
    return static_cast<std::int64_t>(separators) * c.den <= c.num * static_cast<std::int64_t>(n);
}

// Runs a command body and maps exceptions to exit codes.
template <class F>
int guarded(const Streams& io, F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const HypothesisError& e) {
        io.err << "hypothesis failed: " << e.what() << '\n';
        return kExitVerdict;
    } catch (const BudgetError& e) {
        io.err << "budget exceeded: " << e.what() << '\n';
        return kExitVerdict;
    } catch (const OverflowError& e) {
        io.err << "overflow: " << e.what() << '\n';
        return kExitVerdict;
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

// CSV goes either to `out` or to <dir>/<name>.csv.
class CsvSink {
  public:
    CsvSink(const Streams& io, const std::string& dir, const std::string& name) {
        if (dir.empty()) {
            stream_ = &io.out;
            return;
        }
        fs::create_directories(dir);
        file_.open(fs::path(dir) / (name + ".csv"));
        if (!file_)
            throw Error("cannot write " + (fs::path(dir) / (name + ".csv")).string());
        stream_ = &file_;
    }

    std::ostream& operator*() { return *stream_; }

  private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

void write_summary(const std::string& dir, const std::string& name, const json& summary) {
    if (dir.empty())
        return;
    std::ofstream f(fs::path(dir) / (name + ".json"));
    if (!f)
        throw Error("cannot write summary for " + name);
    f << summary.dump(2) << '\n';
}

}  // namespace

std::vector<Instance> load_instances(const std::string& path, InputFormat format) {
    const std::string bytes = read_file(path);
    if (format == InputFormat::automatic)
        format = looks_binary(bytes) ? InputFormat::planar_code : InputFormat::rotation;
    std::vector<SignedEmbedding> graphs;
    if (format == InputFormat::planar_code) {
        graphs = parse_planar_code(bytes);
    } else {
        for (const std::string& chunk : split_rotation_text(bytes))
            graphs.push_back(parse_signed_rotation(chunk));
    }
    const std::string stem = fs::path(path).filename().string();
    std::vector<Instance> out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        std::string name = graphs.size() == 1 ? stem : stem + "#" + std::to_string(i + 1);
        out.push_back({std::move(name), std::move(graphs[i])});
    }
    return out;
}

std::vector<Edge> parse_edge_list(const std::string& text) {
    std::vector<Edge> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("edge '" + item + "' is not of the form u-v");
        try {
            std::size_t used_u = 0, used_v = 0;
            std::string a = item.substr(0, dash), b = item.substr(dash + 1);
            int u = std::stoi(a, &used_u), v = std::stoi(b, &used_v);
            if (used_u != a.size() || used_v != b.size() || u < 0 || v < 0)
                throw std::invalid_argument("");
            out.emplace_back(u, v);
        } catch (const std::exception&) {
            throw std::invalid_argument("edge '" + item + "' is not of the form u-v");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        if (auto dots = item.find(".."); dots != std::string::npos) {
            int lo = std::stoi(item.substr(0, dots)), hi = std::stoi(item.substr(dots + 2));
            if (lo > hi)
                throw std::invalid_argument("empty size range " + item);
            for (int n = lo; n <= hi; ++n)
                out.push_back(n);
        } else {
            out.push_back(std::stoi(item));
        }
    }
    return out;
}

// ---- validate -------------------------------------------------------------

int cmd_validate(const ValidateOptions& options, Streams io) {
    return guarded(io, [&] {
        bool all_ok = true;
        for (const Instance& inst : load_instances(options.input, options.format)) {
            ValidationReport r = validate_triangulation(inst.embedding);
            io.out << inst.name << ": n=" << r.n << " m=" << r.m << " faces=" << r.faces << " genus " << r.genus
                   << ", triangulation: " << (r.ok() ? "yes" : "no") << '\n';
            for (const std::string& v : r.violations)
                io.out << "  " << v << '\n';
            all_ok = all_ok && r.ok();
        }
        return all_ok ? kExitOk : kExitVerdict;
    });
}

// ---- census ---------------------------------------------------------------

int cmd_census(const CensusOptions& options, Streams io) {
    return guarded(io, [&] {
        auto instances = load_instances(options.input, options.format);
        io.out << "graph,n,m,genus,separators,separators_minimal,separating_3_cycles,separating_4_cycles,c,threshold\n";
        int status = kExitOk;
        for (const Instance& inst : instances) {
            const SignedEmbedding& e = inst.embedding;
            const Graph& g = e.graph();
            io.out << inst.name << ',' << g.order() << ',' << g.size() << ',' << euler_genus(e) << ',';
            try {
                SeparatorSet s = enumerate_4_separators(g, {options.method, options.brute_force_limit});
                io.out << s.total() << ',' << s.minimal << ',';
                io.out << enumerate_separating_cycles(e, 3).size() << ',' << enumerate_separating_cycles(e, 4).size()
                       << ',' << rational_text(options.c) << ','
                       << (within_threshold(s.total(), g.order(), options.c) ? "ok" : "violated") << '\n';
            } catch (const HypothesisError& err) {
                io.out << ",," << enumerate_separating_cycles(e, 3).size() << ','
                       << enumerate_separating_cycles(e, 4).size() << ',' << rational_text(options.c)
                       << ",not-4-connected\n";
                io.err << inst.name << ": " << err.what() << '\n';
                status = kExitVerdict;
            }
        }
        return status;
    });
}

// ---- witness --------------------------------------------------------------

int cmd_witness(const WitnessOptions& options, Streams io) {
    return guarded(io, [&] {
        auto instances = load_instances(options.input, options.format);
        json graphs = json::array();
        bool ok = true;
        Progress progress(io);
        for (const Instance& inst : instances) {
            progress.note("witness: " + inst.name);
            WitnessReport r = run_pipeline(inst.embedding, options.c);
            if (options.check_f > 0)
                attach_lemma7(r, inst.embedding, options.check_f, options.seed, options.hamiltonicity);
            json j = to_json(r);
            j["graph"] = inst.name;
            graphs.push_back(j);
            ok = ok && r.conditions.all_passed() && r.floors_hold() &&
                 (!r.lemma7 || r.lemma7->counterexamples.empty());
        }
        json doc = {{"schema", kJsonSchema}, {"c", rational_text(options.c)}, {"graphs", graphs}};
        if (options.check_f > 0)
            doc["seed"] = options.seed;
        io.out << doc.dump(2) << '\n';
        return ok ? kExitOk : kExitVerdict;
    });
}

// ---- count ----------------------------------------------------------------

int cmd_count(const CountOptions& options, Streams io) {
    return guarded(io, [&] {
        auto instances = load_instances(options.input, options.format);
        io.out << "graph,n,m,avoided,backtrack,subset_dp,agree\n";
        bool ok = true;
        for (const Instance& inst : instances) {
            const Graph& g = inst.embedding.graph();
            std::optional<HamCount> bt, dp;
            if (options.method != MethodChoice::dp)
                bt = count_hc_avoiding(g, options.avoid, CountMethod::backtrack);
            if (options.method != MethodChoice::backtrack)
                dp = count_hc_avoiding(g, options.avoid, CountMethod::subset_dp);
            io.out << inst.name << ',' << g.order() << ',' << g.size() << ',' << options.avoid.size() << ',';
            io.out << (bt ? std::to_string(bt->value) : "") << ',' << (dp ? std::to_string(dp->value) : "") << ',';
            if (bt && dp) {
                bool agree = bt->value == dp->value;
                ok = ok && agree;
                io.out << (agree ? "yes" : "no");
            }
            io.out << '\n';
            if (!io.quiet) {
                if (bt)
                    io.err << inst.name << ": backtrack " << fixed(bt->elapsed.count(), 3) << " s\n";
                if (dp)
                    io.err << inst.name << ": subset_dp " << fixed(dp->elapsed.count(), 3) << " s\n";
            }
        }
        return ok ? kExitOk : kExitVerdict;
    });
}

// ---- experiments ----------------------------------------------------------

namespace {

int conjecture_experiment(const ExperimentOptions& o, const Streams& io) {
    std::vector<int> sizes = o.sizes.empty() ? parse_sizes("6..11") : o.sizes;
    const int per_size = o.instances > 0 ? o.instances : 5;
    CsvSink csv(io, o.out_dir, "conjecture");
    *csv << "source,n,seed,count,bound,equality,ok\n";
    Progress progress(io);
    int rows = 0, violations = 0, equalities = 0;
    for (int n : sizes) {
        if (n < 6 || n > 11)
            throw std::invalid_argument("conjecture experiment covers 6 <= n <= 11");
        std::vector<std::pair<std::string, std::optional<std::uint64_t>>> sources;
        sources.emplace_back("double_wheel", std::nullopt);
        for (int i = 0; i < per_size; ++i)
            sources.emplace_back("random", o.seed + static_cast<std::uint64_t>(i));
        for (const auto& [source, seed] : sources) {
            progress.note("conjecture: n=" + std::to_string(n) + " " + source);
            SignedEmbedding e = seed ? random_triangulation_4c(n, *seed, 4 * n) : double_wheel(n);
            const std::uint64_t count = count_hc_backtrack(e.graph()).value;
            const std::uint64_t check = count_hc_dp(e.graph()).value;
            const std::uint64_t bound = double_wheel_cycle_count(n);
            const bool good = count >= bound && count == check;
            violations += !good;
            equalities += count == bound;
            ++rows;
            *csv << source << ',' << n << ',' << (seed ? std::to_string(*seed) : "") << ',' << count << ',' << bound
                 << ',' << (count == bound ? "yes" : "no") << ',' << (good ? "yes" : "no") << '\n';
        }
    }
    write_summary(o.out_dir, "conjecture",
                  {{"schema", kJsonSchema},
                   {"experiment", "conjecture"},
                   {"seed", o.seed},
                   {"sizes", sizes},
                   {"rows", rows},
                   {"equalities", equalities},
                   {"violations", violations}});
    return violations == 0 ? kExitOk : kExitVerdict;
}

SignedEmbedding seeded_instance(int n, std::uint64_t seed) {
    return n >= 12 ? low_separator_family(n, seed).embedding : random_triangulation_4c(n, seed, 4 * n);
}

int lemma7_experiment(const ExperimentOptions& o, const Streams& io) {
    std::vector<int> sizes = o.sizes.empty() ? parse_sizes("12..14") : o.sizes;
    const int count = o.instances > 0 ? o.instances : 50;
    CsvSink csv(io, o.out_dir, "lemma7");
    *csv << "instance,n,genus,seed,s_size,product,f_checked,exhaustive,counterexamples,hamiltonian_checked\n";
    Progress progress(io);
    std::uint64_t checked = 0;
    int counterexamples = 0, nonempty = 0, rows = 0;
    auto run = [&](const std::string& name, const SignedEmbedding& e, std::optional<std::uint64_t> seed) {
        WitnessReport r = run_pipeline(e, o.c);
        std::uint64_t product = 1;
        if (!r.final_set().empty()) {
            product = EdgeChoiceStream(e.graph(), r.final_set(), o.budget).product();
            ++nonempty;
        }
        attach_lemma7(r, e, o.budget, seed.value_or(o.seed), true);
        const Lemma7Report& l = *r.lemma7;
        checked += l.checked;
        counterexamples += static_cast<int>(l.counterexamples.size());
        ++rows;
        *csv << name << ',' << e.order() << ',' << r.genus << ',' << (seed ? std::to_string(*seed) : "") << ','
             << r.final_set().size() << ',' << product << ',' << l.checked << ','
             << (r.lemma7_exhaustive ? "yes" : "no") << ',' << l.counterexamples.size() << ','
             << l.hamiltonian_checked << '\n';
    };
    for (int i = 0; i < count; ++i) {
        const int n = sizes[static_cast<std::size_t>(i) % sizes.size()];
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
        progress.note("lemma7: instance " + std::to_string(i + 1) + "/" + std::to_string(count) + " n=" +
                      std::to_string(n));
        run("seeded", seeded_instance(n, seed), seed);
    }
    progress.note("lemma7: k6_projective");
    run("k6_projective", k6_projective(), std::nullopt);
    write_summary(o.out_dir, "lemma7",
                  {{"schema", kJsonSchema},
                   {"experiment", "lemma7"},
                   {"seed", o.seed},
                   {"sizes", sizes},
                   {"rows", rows},
                   {"nonempty_sets", nonempty},
                   {"f_checked", checked},
                   {"counterexamples", counterexamples}});
    return counterexamples == 0 ? kExitOk : kExitVerdict;
}

int scaling_experiment(const ExperimentOptions& o, const Streams& io) {
    std::vector<int> sizes = o.sizes.empty() ? parse_sizes("12..20") : o.sizes;
    std::sort(sizes.begin(), sizes.end());
    CsvSink csv(io, o.out_dir, "scaling");
    *csv << "n,seed,s_size,separators,separating_4_cycles,count,log2_count\n";
    Progress progress(io);
    bool increasing = true, floor_ok = true;
    double previous = -1;
    json log2s = json::array();
    for (int n : sizes) {
        progress.note("scaling: n=" + std::to_string(n));
        LowSeparatorResult family = low_separator_family(n, o.seed);
        const SignedEmbedding& e = family.embedding;
        WitnessReport r = run_pipeline(e, o.c);
        const std::uint64_t count = count_hc_backtrack(e.graph()).value;
        const double lg = std::log2(static_cast<double>(count));
        if (previous >= 0 && !(lg > previous))
            increasing = false;
        if (!r.final_set().empty() && count < 2)
            floor_ok = false;
        previous = lg;
        log2s.push_back(lg);
        *csv << n << ',' << o.seed << ',' << r.final_set().size() << ',' << r.separators_total << ','
             << r.separating_4_cycles << ',' << count << ',' << fixed(lg) << '\n';
    }
    write_summary(o.out_dir, "scaling",
                  {{"schema", kJsonSchema},
                   {"experiment", "scaling"},
                   {"seed", o.seed},
                   {"sizes", sizes},
                   {"log2_counts", log2s},
                   {"strictly_increasing", increasing},
                   {"count_floor_ok", floor_ok}});
    return floor_ok ? kExitOk : kExitVerdict;
}

}  // namespace

int cmd_experiment(const ExperimentOptions& options, Streams io) {
    return guarded(io, [&] {
        if (options.jobs < 1)
            throw std::invalid_argument("--jobs must be at least 1");
        if (options.name == "conjecture")
            return conjecture_experiment(options, io);
        if (options.name == "lemma7")
            return lemma7_experiment(options, io);
        if (options.name == "scaling")
            return scaling_experiment(options, io);
        throw std::invalid_argument("unknown experiment '" + options.name + "'");
    });
}

// ---- generate -------------------------------------------------------------

int cmd_generate(const GenerateOptions& o, Streams io) {
    return guarded(io, [&] {
        const int flips = o.flips >= 0 ? o.flips : 4 * o.n;
        SignedEmbedding e;
        if (o.family == "double_wheel")
            e = double_wheel(o.n);
        else if (o.family == "octahedron")
            e = octahedron();
        else if (o.family == "icosahedron")
            e = icosahedron();
        else if (o.family == "k6")
            e = k6_projective();
        else if (o.family == "random")
            e = random_triangulation_4c(o.n, o.seed, flips);
        else if (o.family == "low_separator")
            e = low_separator_family(o.n, o.seed).embedding;
        else
            throw std::invalid_argument("unknown family '" + o.family + "'");

        std::string bytes;
        if (o.format == InputFormat::planar_code) {
            std::vector<SignedEmbedding> one{e};
            bytes = serialize_planar_code(one);
        } else {
            bytes = serialize_signed_rotation(e);
        }
        if (o.output.empty()) {
            io.out << bytes;
        } else {
            std::ofstream f(o.output, std::ios::binary);
            if (!f)
                throw Error("cannot write " + o.output);
            f << bytes;
        }
        return kExitOk;
    });
}

}  // namespace hamsep::cli
