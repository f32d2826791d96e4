// Copyright 2026 The Hyperent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line surface: per-hypergraph weight and entropy reports, pairwise
// inequivalence witnesses, exhaustive small-n census tables, and the
// self-verification suites.
//
// Exit codes: 0 success (witness: certified), 1 verification failure,
// 2 malformed input, 3 infeasible method or census size, 4 witness vertex
// count mismatch, 10 witness inconclusive.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperent/entropy.hpp"
#include "hyperent/errors.hpp"
#include "hyperent/hypergraph.hpp"
#include "hyperent/state.hpp"
#include "hyperent/verification.hpp"
#include "hyperent/weight.hpp"
#include "output.hpp"

namespace {

using hyperent::EntropicProfile;
using hyperent::Hypergraph;
using hyperent::LuWitness;
using hyperent::Rational;
using hyperent::SignVector;
using hyperent::VertexClassification;
using hyperent::WeightMethod;
using hyperent::cli::decimal6;
using hyperent::cli::Format;
using hyperent::cli::fraction;
using hyperent::cli::fraction_plain;
using hyperent::cli::parse_format;
using hyperent::cli::rational_json;

// HYPERENT_MAX_N may lower (never raise) the 2^n state-table cap.
int effective_max_state_qubits() {
    const char* env = std::getenv("HYPERENT_MAX_N");
    if (env == nullptr || *env == '\0') {
        return hyperent::kMaxStateQubits;
    }
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || value < 0) {
        std::cerr << "warning: ignoring invalid HYPERENT_MAX_N value \"" << env << "\"\n";
        return hyperent::kMaxStateQubits;
    }
    return std::min<long>(value, hyperent::kMaxStateQubits);
}

// A positional input is either a path to a JSON file or a compact literal.
Hypergraph load_input(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        if (!in.good() && !in.eof()) {
            throw hyperent::ParseError("could not read file: " + arg);
        }
        return Hypergraph::from_json_text(buffer.str());
    }
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") {
        throw hyperent::ParseError("no such file: " + arg);
    }
    return Hypergraph::parse(arg);
}

WeightMethod parse_weight_method(const std::string& name) {
    if (name == "auto") {
        return WeightMethod::kAuto;
    }
    if (name == "tt") {
        return WeightMethod::kTruthTable;
    }
    if (name == "ie") {
        return WeightMethod::kInclusionExclusion;
    }
    throw std::invalid_argument("unknown method: " + name);
}

const char* method_name(WeightMethod method) {
    switch (method) {
        case WeightMethod::kTruthTable:
            return "tt";
        case WeightMethod::kInclusionExclusion:
            return "ie";
        default:
            return "auto";
    }
}

// ---------------------------------------------------------------------------
// weight

int run_weight(const std::string& input, const std::string& method, Format format) {
    const Hypergraph g = load_input(input);
    const int cap = effective_max_state_qubits();

    std::uint64_t hw = 0;
    std::string used;
    if (method == "statevector") {
        hw = hyperent::build_state(g, cap).minus_count();
        used = "statevector";
    } else {
        const WeightMethod resolved = choose_weight_method(g, parse_weight_method(method), cap);
        hw = hyperent::hamming_weight(g, resolved, cap);
        used = method_name(resolved);
    }
    const bool odd = hyperent::hw_is_odd(g);

    switch (format) {
        case Format::kText:
            std::cout << "g: " << g.to_compact() << "\n"
                      << "n: " << g.vertex_count() << "  edges: " << g.edge_count()
                      << "  rank: " << g.rank() << "\n"
                      << "hw: " << hw << "  parity: " << (odd ? "odd" : "even")
                      << "  method: " << used << "\n";
            break;
        case Format::kJson: {
            nlohmann::json j;
            j["input"] = g.to_compact();
            j["n"] = g.vertex_count();
            j["edges"] = g.edge_count();
            j["rank"] = g.rank();
            j["hw"] = hw;
            j["odd"] = odd;
            j["method"] = used;
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::kTsv:
            std::cout << "n\tedges\trank\thw\todd\tmethod\n"
                      << g.vertex_count() << "\t" << g.edge_count() << "\t" << g.rank() << "\t"
                      << hw << "\t" << (odd ? "odd" : "even") << "\t" << used << "\n";
            break;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// entropy

struct VertexRecord {
    int t = 0;
    int adjacent_rank = 0;
    std::uint64_t adjacent_hw = 0;
    Rational a;
    Rational measure;
    VertexClassification::Kind kind = VertexClassification::Kind::kUnconstrained;
};

struct EntropyReport {
    std::string echo;
    int n = 0;
    int edges = 0;
    int rank = 0;
    std::uint64_t hw = 0;
    std::string method;
    bool odd = false;
    bool lme = false;
    std::vector<VertexRecord> vertices;
};

EntropyReport build_entropy_report(const Hypergraph& g, const std::string& method, int cap) {
    EntropyReport report;
    report.echo = g.to_compact();
    report.n = g.vertex_count();
    report.edges = g.edge_count();
    report.rank = g.rank();
    report.odd = hyperent::hw_is_odd(g);

    std::optional<SignVector> sv;
    if (method == "statevector") {
        sv = hyperent::build_state(g, cap);
        report.hw = sv->minus_count();
        report.method = "statevector";
    } else {
        const WeightMethod resolved = choose_weight_method(g, parse_weight_method(method), cap);
        report.hw = hyperent::hamming_weight(g, resolved, cap);
        report.method = method_name(resolved);
    }

    bool all_max = true;
    for (int t = 1; t <= report.n; ++t) {
        VertexRecord record;
        record.t = t;
        const Hypergraph adjacent = g.t_adjacent(t);
        record.adjacent_rank = adjacent.rank();
        if (sv.has_value()) {
            const hyperent::ReducedDensity1Q rho = hyperent::reduced_density(*sv, t);
            record.a = rho.off_diagonal();
            record.measure = rho.determinant();
            record.adjacent_hw = hyperent::build_state(adjacent, cap).minus_count();
        } else {
            record.adjacent_hw =
                hyperent::hamming_weight(adjacent, parse_weight_method(method), cap);
            record.a = hyperent::off_diagonal(report.n, record.adjacent_hw);
            record.measure = Rational(1, 4) - record.a * record.a;
        }
        record.kind = hyperent::classify_vertex(g, t, cap).kind;
        all_max = all_max && record.measure == Rational(1, 4);
        report.vertices.push_back(record);
    }
    report.lme = report.n > 0 && all_max;
    return report;
}

nlohmann::json vertex_json(const VertexRecord& v) {
    nlohmann::json j;
    j["t"] = v.t;
    j["adjacent_rank"] = v.adjacent_rank;
    j["adjacent_hw"] = v.adjacent_hw;
    j["a"] = rational_json(v.a);
    j["measure"] = rational_json(v.measure);
    j["class"] = hyperent::to_string(v.kind);
    return j;
}

void print_vertex_text(const VertexRecord& v) {
    std::cout << "t=" << v.t << "  ran(g_t)=" << v.adjacent_rank << "  hw(g_t)=" << v.adjacent_hw
              << "  a=" << fraction(v.a) << "  E=" << fraction(v.measure)
              << "  class=" << hyperent::to_string(v.kind) << "\n";
}

int run_entropy(const std::string& input, const std::string& method, std::optional<int> qubit,
                Format format) {
    const Hypergraph g = load_input(input);
    const int cap = effective_max_state_qubits();
    if (qubit.has_value() && (*qubit < 1 || *qubit > g.vertex_count())) {
        throw std::out_of_range("qubit " + std::to_string(*qubit) + " out of range 1.." +
                                std::to_string(g.vertex_count()));
    }
    const EntropyReport report = build_entropy_report(g, method, cap);

    switch (format) {
        case Format::kText:
            std::cout << "g: " << report.echo << "\n"
                      << "n: " << report.n << "  edges: " << report.edges
                      << "  rank: " << report.rank << "\n"
                      << "hw: " << report.hw << "  parity: " << (report.odd ? "odd" : "even")
                      << "  method: " << report.method << "\n"
                      << "lme: " << (report.lme ? "yes" : "no") << "\n";
            if (qubit.has_value()) {
                print_vertex_text(report.vertices[*qubit - 1]);
            } else {
                for (const auto& v : report.vertices) {
                    print_vertex_text(v);
                }
            }
            break;
        case Format::kJson: {
            nlohmann::json j;
            j["input"] = report.echo;
            j["n"] = report.n;
            j["edges"] = report.edges;
            j["rank"] = report.rank;
            j["hw"] = report.hw;
            j["odd"] = report.odd;
            j["method"] = report.method;
            j["lme"] = report.lme;
            if (qubit.has_value()) {
                j["vertex"] = vertex_json(report.vertices[*qubit - 1]);
            } else {
                nlohmann::json vertices = nlohmann::json::array();
                for (const auto& v : report.vertices) {
                    vertices.push_back(vertex_json(v));
                }
                j["vertices"] = std::move(vertices);
            }
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::kTsv: {
            std::cout << "# g=" << report.echo << " n=" << report.n << " rank=" << report.rank
                      << " hw=" << report.hw << " parity=" << (report.odd ? "odd" : "even")
                      << " method=" << report.method << " lme=" << (report.lme ? "yes" : "no")
                      << "\n";
            std::cout << "t\tadjacent_rank\tadjacent_hw\ta\ta_decimal\tmeasure\tmeasure_decimal"
                         "\tclass\n";
            auto row = [](const VertexRecord& v) {
                std::cout << v.t << "\t" << v.adjacent_rank << "\t" << v.adjacent_hw << "\t"
                          << fraction_plain(v.a) << "\t" << decimal6(v.a.to_double()) << "\t"
                          << fraction_plain(v.measure) << "\t" << decimal6(v.measure.to_double())
                          << "\t" << hyperent::to_string(v.kind) << "\n";
            };
            if (qubit.has_value()) {
                row(report.vertices[*qubit - 1]);
            } else {
                for (const auto& v : report.vertices) {
                    row(v);
                }
            }
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// witness

int run_witness(const std::string& input1, const std::string& input2, bool up_to_relabeling,
                Format format) {
    const Hypergraph g1 = load_input(input1);
    const Hypergraph g2 = load_input(input2);
    if (g1.vertex_count() != g2.vertex_count()) {
        std::cerr << "error: vertex counts differ (" << g1.vertex_count() << " vs "
                  << g2.vertex_count() << ")\n";
        return 4;
    }
    const int cap = effective_max_state_qubits();
    const LuWitness witness = lu_inequivalence_witness(g1, g2, up_to_relabeling, cap);

    switch (format) {
        case Format::kText:
            std::cout << "kind: " << hyperent::to_string(witness.kind) << "\n";
            if (witness.vertex.has_value()) {
                std::cout << "vertex: " << *witness.vertex << "\n"
                          << "left:  " << fraction(witness.values->first) << "\n"
                          << "right: " << fraction(witness.values->second) << "\n";
            }
            break;
        case Format::kJson: {
            nlohmann::json j;
            j["kind"] = hyperent::to_string(witness.kind);
            if (witness.vertex.has_value()) {
                j["vertex"] = *witness.vertex;
                j["left"] = rational_json(witness.values->first);
                j["right"] = rational_json(witness.values->second);
            }
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::kTsv:
            std::cout << "kind\tvertex\tleft\tright\n";
            std::cout << hyperent::to_string(witness.kind) << "\t";
            if (witness.vertex.has_value()) {
                std::cout << *witness.vertex << "\t" << fraction_plain(witness.values->first)
                          << "\t" << fraction_plain(witness.values->second);
            } else {
                std::cout << "-\t-\t-";
            }
            std::cout << "\n";
            break;
    }
    return witness.kind == LuWitness::Kind::kInconclusive ? 10 : 0;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumFilter {
    std::optional<int> rank;
    std::optional<bool> odd;
    bool lme_only = false;
};

EnumFilter parse_filters(const std::vector<std::string>& specs) {
    EnumFilter filter;
    for (const std::string& spec : specs) {
        if (spec == "lme") {
            filter.lme_only = true;
        } else if (spec.rfind("rank=", 0) == 0) {
            filter.rank = std::stoi(spec.substr(5));
        } else if (spec == "parity=odd") {
            filter.odd = true;
        } else if (spec == "parity=even") {
            filter.odd = false;
        } else {
            throw hyperent::ParseError("unknown filter: " + spec +
                                       " (expected rank=K, parity=odd|even, or lme)");
        }
    }
    return filter;
}

int run_enumerate(int n, const std::vector<std::string>& filter_specs, std::optional<long> sample,
                  std::uint64_t seed, Format format) {
    const EnumFilter filter = parse_filters(filter_specs);
    const int cap = effective_max_state_qubits();
    if (n < 1) {
        throw hyperent::ParseError("enumerate: n must be at least 1");
    }
    if (!sample.has_value() && n > 4) {
        throw hyperent::InfeasibleError(
            "exhaustive enumeration caps at n = 4 (2^(2^n) edge sets); use --sample N for n = 5 "
            "or 6");
    }
    if (sample.has_value() && n > 6) {
        throw hyperent::InfeasibleError("sampling draws uniform edge-set masks and caps at n = 6");
    }
    if (n > cap) {
        throw hyperent::InfeasibleError("enumerate: n exceeds the state cap of " +
                                        std::to_string(cap));
    }

    std::uint64_t rows = 0;
    std::uint64_t odd_count = 0;
    std::uint64_t lme_count = 0;
    std::map<int, std::uint64_t> by_rank;
    std::map<std::string, std::uint64_t> by_class;

    auto emit = [&](std::uint64_t index, const Hypergraph& g) {
        const int rank = g.rank();
        if (filter.rank.has_value() && rank != *filter.rank) {
            return;
        }
        const bool odd = hyperent::hw_is_odd(g);
        if (filter.odd.has_value() && odd != *filter.odd) {
            return;
        }
        const EntropicProfile profile = hyperent::entropic_profile(g, cap);
        bool lme = g.vertex_count() > 0;
        for (const Rational& m : profile.measures) {
            lme = lme && m == Rational(1, 4);
        }
        if (filter.lme_only && !lme) {
            return;
        }
        const std::uint64_t hw = hyperent::hw_bruteforce(g, cap);

        ++rows;
        odd_count += odd ? 1 : 0;
        lme_count += lme ? 1 : 0;
        ++by_rank[rank];

        std::vector<std::string> classes;
        classes.reserve(g.vertex_count());
        for (int t = 1; t <= g.vertex_count(); ++t) {
            classes.push_back(hyperent::to_string(hyperent::classify_vertex(g, t, cap).kind));
            ++by_class[classes.back()];
        }

        switch (format) {
            case Format::kText: {
                std::cout << g.to_compact() << " | rank=" << rank << " hw=" << hw
                          << " parity=" << (odd ? "odd" : "even") << " lme=" << (lme ? "yes" : "no")
                          << " profile=[";
                for (std::size_t i = 0; i < profile.measures.size(); ++i) {
                    std::cout << (i ? "," : "") << fraction_plain(profile.measures[i]);
                }
                std::cout << "] classes=[";
                for (std::size_t i = 0; i < classes.size(); ++i) {
                    std::cout << (i ? "," : "") << classes[i];
                }
                std::cout << "]\n";
                break;
            }
            case Format::kJson: {
                nlohmann::json j;
                j["index"] = index;
                j["g"] = g.to_compact();
                j["n"] = g.vertex_count();
                j["rank"] = rank;
                j["hw"] = hw;
                j["odd"] = odd;
                j["lme"] = lme;
                nlohmann::json pj = nlohmann::json::array();
                for (const Rational& m : profile.measures) {
                    pj.push_back(rational_json(m));
                }
                j["profile"] = std::move(pj);
                j["classes"] = classes;
                std::cout << j.dump() << "\n";
                break;
            }
            case Format::kTsv: {
                std::cout << index << "\t" << g.to_compact() << "\t" << rank << "\t" << hw << "\t"
                          << (odd ? "odd" : "even") << "\t" << (lme ? "yes" : "no") << "\t";
                for (std::size_t i = 0; i < profile.measures.size(); ++i) {
                    std::cout << (i ? "," : "") << fraction_plain(profile.measures[i]);
                }
                std::cout << "\t";
                for (std::size_t i = 0; i < classes.size(); ++i) {
                    std::cout << (i ? "," : "") << classes[i];
                }
                std::cout << "\n";
                break;
            }
        }
    };

    if (format == Format::kTsv) {
        std::cout << "index\tg\trank\thw\tparity\tlme\tprofile\tclasses\n";
    }

    if (sample.has_value()) {
        if (*sample < 0) {
            throw hyperent::ParseError("enumerate: --sample must be nonnegative");
        }
        std::mt19937_64 rng(seed);
        const int set_bits = 1 << n;
        const std::uint64_t set_mask_all =
            set_bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << set_bits) - 1);
        for (long i = 0; i < *sample; ++i) {
            const std::uint64_t mask = rng() & set_mask_all;
            emit(mask, Hypergraph::from_edge_set_mask(n, mask));
        }
    } else {
        const std::uint64_t sets = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t mask = 0; mask < sets; ++mask) {
            emit(mask, Hypergraph::from_edge_set_mask(n, mask));
        }
    }

    switch (format) {
        case Format::kText:
        case Format::kTsv: {
            std::cout << "# rows=" << rows << " odd=" << odd_count << " lme=" << lme_count;
            for (const auto& [rank, count] : by_rank) {
                std::cout << " rank" << rank << "=" << count;
            }
            for (const auto& [cls, count] : by_class) {
                std::cout << " class:" << cls << "=" << count;
            }
            std::cout << "\n";
            break;
        }
        case Format::kJson: {
            nlohmann::json summary;
            summary["rows"] = rows;
            summary["odd"] = odd_count;
            summary["lme"] = lme_count;
            nlohmann::json ranks;
            for (const auto& [rank, count] : by_rank) {
                ranks[std::to_string(rank)] = count;
            }
            summary["by_rank"] = std::move(ranks);
            nlohmann::json classes;
            for (const auto& [cls, count] : by_class) {
                classes[cls] = count;
            }
            summary["by_class"] = std::move(classes);
            nlohmann::json j;
            j["summary"] = std::move(summary);
            std::cout << j.dump() << "\n";
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(std::uint64_t seed, int max_n, Format format) {
    const int cap = effective_max_state_qubits();
    hyperent::VerifyOptions options;
    options.seed = seed;
    options.max_n = std::clamp(max_n, 1, cap);
    const std::vector<hyperent::SuiteResult> results = hyperent::run_self_verification(options);

    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    for (const auto& suite : results) {
        checks += suite.checks;
        failures += suite.failures;
    }

    switch (format) {
        case Format::kText:
            for (const auto& suite : results) {
                std::cout << suite.name << ": " << (suite.passed() ? "PASS" : "FAIL") << " ("
                          << suite.checks << " checks)";
                if (!suite.passed()) {
                    std::cout << "; first failure: " << suite.first_failure;
                }
                std::cout << "\n";
            }
            if (failures == 0) {
                std::cout << "verification passed (" << results.size() << " suites, " << checks
                          << " checks, seed " << seed << ", max-n " << options.max_n << ")\n";
            } else {
                std::cout << "verification FAILED (" << failures << " of " << checks
                          << " checks)\n";
            }
            break;
        case Format::kJson: {
            nlohmann::json suites = nlohmann::json::array();
            for (const auto& suite : results) {
                nlohmann::json s;
                s["name"] = suite.name;
                s["checks"] = suite.checks;
                s["failures"] = suite.failures;
                if (!suite.passed()) {
                    s["first_failure"] = suite.first_failure;
                }
                suites.push_back(std::move(s));
            }
            nlohmann::json j;
            j["suites"] = std::move(suites);
            j["checks"] = checks;
            j["failures"] = failures;
            j["seed"] = seed;
            j["max_n"] = options.max_n;
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::kTsv:
            std::cout << "suite\tchecks\tfailures\tstatus\n";
            for (const auto& suite : results) {
                std::cout << suite.name << "\t" << suite.checks << "\t" << suite.failures << "\t"
                          << (suite.passed() ? "PASS" : "FAIL") << "\n";
            }
            break;
    }
    if (failures != 0) {
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperent: exact entanglement invariants of n-qubit hypergraph states"};
    app.require_subcommand(1);
    int rc = 0;

    const std::string format_help = "Output format (text, json, tsv)";
    const auto format_values = CLI::IsMember({"text", "json", "tsv"});

    // weight
    auto* weight = app.add_subcommand(
        "weight", "Hamming weight of a hypergraph (truth table or inclusion-exclusion)");
    std::string weight_input;
    std::string weight_method = "auto";
    std::string weight_format = "text";
    weight->add_option("input", weight_input, "Hypergraph literal or JSON file path")->required();
    weight->add_option("--method", weight_method, "auto, tt, ie, or statevector")
        ->check(CLI::IsMember({"auto", "tt", "ie", "statevector"}));
    weight->add_option("--format", weight_format, format_help)->check(format_values);
    weight->callback(
        [&] { rc = run_weight(weight_input, weight_method, parse_format(weight_format)); });

    // entropy
    auto* entropy = app.add_subcommand(
        "entropy", "Per-qubit local entropic measures, classifications, and the LME flag");
    std::string entropy_input;
    std::string entropy_method = "auto";
    std::string entropy_format = "text";
    int entropy_qubit = 0;
    entropy->add_option("input", entropy_input, "Hypergraph literal or JSON file path")
        ->required();
    entropy->add_option("--qubit", entropy_qubit, "Report a single qubit t (1-based)");
    entropy->add_option("--method", entropy_method, "auto, tt, ie, or statevector")
        ->check(CLI::IsMember({"auto", "tt", "ie", "statevector"}));
    entropy->add_option("--format", entropy_format, format_help)->check(format_values);
    entropy->callback([&] {
        std::optional<int> qubit;
        if (entropy->count("--qubit") > 0) {
            qubit = entropy_qubit;
        }
        rc = run_entropy(entropy_input, entropy_method, qubit, parse_format(entropy_format));
    });

    // witness
    auto* witness = app.add_subcommand(
        "witness", "Local-unitary inequivalence certificate for two hypergraph states");
    std::string witness_input1;
    std::string witness_input2;
    std::string witness_format = "text";
    bool witness_relabel = false;
    witness->add_option("input1", witness_input1, "First hypergraph")->required();
    witness->add_option("input2", witness_input2, "Second hypergraph")->required();
    witness->add_flag("--up-to-relabeling", witness_relabel,
                      "Compare sorted profiles (qubit permutations allowed)");
    witness->add_option("--format", witness_format, format_help)->check(format_values);
    witness->callback([&] {
        rc = run_witness(witness_input1, witness_input2, witness_relabel,
                         parse_format(witness_format));
    });

    // enumerate
    auto* enumerate = app.add_subcommand(
        "enumerate", "Census of all hypergraphs on n vertices (exhaustive for n <= 4)");
    int enumerate_n = 0;
    std::vector<std::string> enumerate_filters;
    long enumerate_sample = -1;
    std::uint64_t enumerate_seed = 42;
    std::string enumerate_format = "text";
    enumerate->add_option("n", enumerate_n, "Vertex count")->required();
    enumerate->add_option("--filter", enumerate_filters,
                          "rank=K, parity=odd|even, or lme (repeatable, ANDed)");
    enumerate->add_option("--sample", enumerate_sample,
                          "Draw N seeded random edge sets instead of the full census");
    enumerate->add_option("--seed", enumerate_seed, "Seed for --sample (default 42)");
    enumerate->add_option("--format", enumerate_format, format_help)->check(format_values);
    enumerate->callback([&] {
        std::optional<long> sample;
        if (enumerate->count("--sample") > 0) {
            sample = enumerate_sample;
        }
        rc = run_enumerate(enumerate_n, enumerate_filters, sample, enumerate_seed,
                           parse_format(enumerate_format));
    });

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Run the cross-module invariant suites (exhaustive small-n plus seeded random)");
    std::uint64_t verify_seed = 42;
    int verify_max_n = 8;
    std::string verify_format = "text";
    verify->add_option("--seed", verify_seed, "Random seed (default 42)");
    verify->add_option("--max-n", verify_max_n, "Largest vertex count for randomized suites");
    verify->add_option("--format", verify_format, format_help)->check(format_values);
    verify->callback([&] { rc = run_verify(verify_seed, verify_max_n, parse_format(verify_format)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const hyperent::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hyperent::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
