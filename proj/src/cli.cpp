#include "vfcomb/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vfcomb/asymptotics.hpp"
#include "vfcomb/bracketing.hpp"
#include "vfcomb/counting.hpp"
#include "vfcomb/moduli.hpp"
#include "vfcomb/render.hpp"
#include "vfcomb/verify.hpp"

namespace vfcomb::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_degree(int degree, int low, int high, const std::string& what) {
    if (degree < low || degree > high) {
        throw UsageError(what + " requires " + std::to_string(low) + " <= degree <= " +
                         std::to_string(high) + ", got " + std::to_string(degree));
    }
}

std::string one_line(std::string text) {
    for (char& ch : text) {
        if (ch == '\n' || ch == '\r') ch = ' ';
    }
    return text;
}

// count

struct CountOptions {
    int degree = 0;
    bool by_dimension = false;
    bool by_type = false;
    std::string format = "json";
};

int do_count(const CountOptions& o, std::ostream& out) {
    require_degree(o.degree, 1, kMaxCountDegree, "count");
    if (o.by_dimension) require_degree(o.degree, 1, kMaxDimensionDegree, "count --by-dimension");
    if (o.by_type) require_degree(o.degree, 1, kMaxTypeDegree, "count --by-type");
    if (o.format == "csv" && o.by_dimension && o.by_type) {
        throw UsageError("csv output takes one of --by-dimension or --by-type, not both");
    }
    const auto table = count_table(o.degree, o.by_dimension, o.by_type);

    if (o.format == "json") {
        Json doc;
        doc["degree"] = table.degree;
        doc["total"] = to_string(table.total);
        if (o.by_dimension) {
            Json arr = Json::array();
            for (const auto& c : table.by_dimension) arr.push_back(to_string(c));
            doc["by_dimension"] = arr;
        }
        if (o.by_type) {
            Json arr = Json::array();
            for (const auto& [key, count] : table.by_type) {
                arr.push_back({{"s", key.first}, {"h", key.second}, {"count", to_string(count)}});
            }
            doc["by_type"] = arr;
        }
        out << doc.dump() << '\n';
        return kExitOk;
    }

    if (o.by_dimension) {
        out << "degree,q,count\n";
        for (std::size_t q = 0; q < table.by_dimension.size(); ++q) {
            out << table.degree << ',' << q << ',' << to_string(table.by_dimension[q]) << '\n';
        }
    } else if (o.by_type) {
        out << "degree,s,h,count\n";
        for (const auto& [key, count] : table.by_type) {
            out << table.degree << ',' << key.first << ',' << key.second << ',' << to_string(count)
                << '\n';
        }
    } else {
        out << "degree,total\n" << table.degree << ',' << to_string(table.total) << '\n';
    }
    return kExitOk;
}

// enumerate

int do_enumerate(int degree, long limit, const std::string& sort, std::ostream& out) {
    require_degree(degree, 1, kMaxEnumerateDegree, "enumerate");
    if (limit < 0) throw UsageError("--limit must be non-negative");
    if (sort == "lex") {
        if (degree > 10) throw UsageError("--sort lex holds every configuration; use degree <= 10");
        auto all = enumerate_all(degree);
        sort_lexicographically(all);
        long written = 0;
        for (const auto& config : all) {
            if (limit > 0 && written == limit) break;
            out << render(config) << '\n';
            ++written;
        }
        return kExitOk;
    }
    long written = 0;
    enumerate(degree, [&](const PairingConfig& config) {
        if (limit > 0 && written == limit) return false;
        out << render(config) << '\n';
        ++written;
        return true;
    });
    return kExitOk;
}

// render

struct RenderOptions {
    int degree = 0;
    std::string config;
    std::string model = "separatrix";
    std::string out_path;
    std::string format = "svg";
};

int do_render(const RenderOptions& o, std::ostream& out, std::ostream& err) {
    require_degree(o.degree, 1, kMaxRenderDegree, "render");
    PairingConfig config;
    try {
        const auto parsed = parse_bracketing(o.config);
        if (parsed.length != 2 * o.degree - 2) {
            throw UsageError("config has " + std::to_string(parsed.length) + " elements, degree " +
                             std::to_string(o.degree) + " needs " + std::to_string(2 * o.degree - 2));
        }
        config = PairingConfig(o.degree, parsed.pairs);
    } catch (const BracketError& e) {
        const auto& first = e.issues().front();
        throw UsageError("invalid config: rule " + std::to_string(first.rule) + " at offset " +
                         std::to_string(first.position) + ": " + first.message);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid config: ") + e.what());
    }
    const DiskModel model = o.model == "transversal" ? DiskModel::Transversal : DiskModel::Separatrix;
    const std::string doc = o.format == "dot" ? render_dot(config, model) : render_svg(config, model);

    std::ofstream file(o.out_path, std::ios::binary);
    if (!file || !(file << doc) || !file.flush()) {
        err << "vfcomb: cannot write " << o.out_path << '\n';
        return kExitFailure;
    }
    const auto dim = invariants_of(config);
    out << o.out_path << ": " << o.model << " model, " << dim.h + dim.s << " chords\n";
    return kExitOk;
}

// moduli

int do_moduli(int degree, const std::string& method, const std::string& convention,
              std::ostream& out) {
    require_degree(degree, 2, kMaxPolyaDegree, "moduli");
    if (method == "burnside") require_degree(degree, 2, kMaxBurnsideDegree, "moduli --method burnside");

    const Rational polya_dm1 = polya_coefficient(degree, PolyaConvention::ZPowDMinus1);
    const Rational polya_d = polya_coefficient(degree, PolyaConvention::ZPowD);
    const Rational& polya_selected = convention == "d" ? polya_d : polya_dm1;

    Json doc;
    doc["degree"] = degree;
    doc["method"] = method;
    const bool have_burnside = degree <= kMaxBurnsideDegree;
    std::optional<BigInt> burnside;
    if (have_burnside) burnside = burnside_count(degree);
    doc["count"] = method == "burnside" ? to_string(*burnside) : to_string(polya_selected);
    doc["burnside"] = have_burnside ? Json(to_string(*burnside)) : Json(nullptr);
    doc["polya"] = {{"dm1", to_string(polya_dm1)}, {"d", to_string(polya_d)}};
    doc["convention"] = convention;
    doc["polya_experimental"] = true;
    if (have_burnside) {
        const bool differs = Rational(*burnside) != polya_dm1 && Rational(*burnside) != polya_d;
        doc["discrepancy"] = differs;
        doc["note"] = differs ? "Polya series value differs from the Burnside orbit count under "
                                "both conventions; Burnside is authoritative"
                              : "Polya series value matches the Burnside orbit count";
    } else {
        doc["discrepancy"] = nullptr;
        doc["note"] = "Burnside count not available above degree " +
                      std::to_string(kMaxBurnsideDegree) + "; Polya series is experimental";
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
}

// asymptotics

bool strictly_decreasing(const std::vector<double>& values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] < values[i - 1])) return false;
    }
    return true;
}

int do_asymptotics(std::vector<int> degrees, std::ostream& out) {
    if (degrees.empty()) throw UsageError("--degrees needs at least one degree");
    for (int d : degrees) require_degree(d, 2, kMaxAsymptoticsDegree, "asymptotics");

    const auto k = exact_constants();
    const double growth = k.growth.to_double();
    const double kappa = k.kappa.to_double();
    const double lambda = k.lambda.to_double();

    Json doc;
    doc["constants"] = {
        {"radius", {{"exact", k.radius.to_string()}, {"value", k.radius.to_double()}}},
        {"growth", {{"exact", k.growth.to_string()}, {"value", growth}}},
        {"kappa", {{"exact", k.kappa.to_string()}, {"value", kappa}}},
        {"lambda", {{"exact", k.lambda.to_string()}, {"value", lambda}}},
    };
    Json rows = Json::array();
    std::vector<double> ratio_err, mean_err, var_err, normal;
    for (int d : degrees) {
        const auto s = stats(d);
        const double r = ratio(d).get_d();
        const double mu = s.mean.get_d() / d;
        const double var = s.variance.get_d() / d;
        const double dist = normality_distance(s);
        ratio_err.push_back(std::abs(r - growth));
        mean_err.push_back(std::abs(mu - kappa));
        var_err.push_back(std::abs(var - lambda));
        normal.push_back(dist);
        rows.push_back({{"degree", d},
                        {"ratio", r},
                        {"ratio_error", ratio_err.back()},
                        {"mean", to_string(s.mean)},
                        {"mean_over_d", mu},
                        {"kappa_error", mean_err.back()},
                        {"variance_over_d", var},
                        {"lambda_error", var_err.back()},
                        {"normality_distance", dist}});
    }
    doc["degrees"] = rows;
    doc["decreasing"] = {{"ratio_error", strictly_decreasing(ratio_err)},
                         {"kappa_error", strictly_decreasing(mean_err)},
                         {"lambda_error", strictly_decreasing(var_err)},
                         {"normality_distance", strictly_decreasing(normal)}};
    out << doc.dump(2) << '\n';
    return kExitOk;
}

// verify

int do_verify(int max_degree, std::ostream& out) {
    require_degree(max_degree, 1, kMaxVerifyDegree, "verify");
    const auto results = run_verification(max_degree);
    int passed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.name << r.detail
            << '\n';
        if (r.passed) ++passed;
    }
    const int positivity_bound = std::max(max_degree, 50);
    out << "note c_{d,q} > 0 for all q, d <= " << positivity_bound << ": "
        << (dimension_positivity(positivity_bound) ? "yes" : "no") << " (empirical)\n";
    out << "verify: " << passed << '/' << results.size() << " suites passed\n";
    return passed == static_cast<int>(results.size()) ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration of combinatorial classes of polynomial vector fields", "vfcomb"};
    app.require_subcommand(1);

    CountOptions count;
    auto* count_cmd = app.add_subcommand("count", "Count combinatorial classes of a degree");
    count_cmd->add_option("--degree", count.degree, "Degree d")->required();
    count_cmd->add_flag("--by-dimension", count.by_dimension, "Split by real dimension q");
    count_cmd->add_flag("--by-type", count.by_type, "Split by (s, h)");
    count_cmd->add_option("--format", count.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    int enum_degree = 0;
    long enum_limit = 0;
    std::string enum_sort = "generation";
    auto* enum_cmd = app.add_subcommand("enumerate", "List configurations, one per line");
    enum_cmd->add_option("--degree", enum_degree, "Degree d")->required();
    enum_cmd->add_option("--limit", enum_limit, "Stop after N lines (0 = all)");
    enum_cmd->add_option("--sort", enum_sort, "generation or lex")
        ->check(CLI::IsMember({"generation", "lex"}));

    RenderOptions render_opts;
    auto* render_cmd = app.add_subcommand("render", "Draw a disk model");
    render_cmd->add_option("--degree", render_opts.degree, "Degree d")->required();
    render_cmd->add_option("--config", render_opts.config, "Bracket string")->required();
    render_cmd->add_option("--model", render_opts.model, "separatrix or transversal")
        ->check(CLI::IsMember({"separatrix", "transversal"}));
    render_cmd->add_option("--out", render_opts.out_path, "Output file")->required();
    render_cmd->add_option("--format", render_opts.format, "svg or dot")
        ->check(CLI::IsMember({"svg", "dot"}));

    int moduli_degree = 0;
    std::string moduli_method = "burnside";
    std::string moduli_convention = "dm1";
    auto* moduli_cmd = app.add_subcommand("moduli", "Count classes up to rotation");
    moduli_cmd->add_option("--degree", moduli_degree, "Degree d")->required();
    moduli_cmd->add_option("--method", moduli_method, "burnside or polya")
        ->check(CLI::IsMember({"burnside", "polya"}));
    moduli_cmd->add_option("--convention", moduli_convention, "Polya index: dm1 or d")
        ->check(CLI::IsMember({"dm1", "d"}));

    std::vector<int> asym_degrees{25, 50, 100, 200};
    auto* asym_cmd = app.add_subcommand("asymptotics", "Growth, mean, variance and normality trends");
    asym_cmd->add_option("--degrees", asym_degrees, "Comma-separated degrees")->delimiter(',');

    int verify_degree = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check");
    verify_cmd->add_option("--max-degree", verify_degree, "Largest degree checked")->required();

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("vfcomb");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "vfcomb: " << one_line(e.what()) << '\n';
        return kExitUsage;
    }

    try {
        if (*count_cmd) return do_count(count, out);
        if (*enum_cmd) return do_enumerate(enum_degree, enum_limit, enum_sort, out);
        if (*render_cmd) return do_render(render_opts, out, err);
        if (*moduli_cmd) return do_moduli(moduli_degree, moduli_method, moduli_convention, out);
        if (*asym_cmd) return do_asymptotics(asym_degrees, out);
        if (*verify_cmd) return do_verify(verify_degree, out);
    } catch (const UsageError& e) {
        err << "vfcomb: " << one_line(e.what()) << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "vfcomb: " << one_line(e.what()) << '\n';
        return kExitFailure;
    }
    err << "vfcomb: no subcommand\n";
    return kExitUsage;
}

}  // namespace vfcomb::cli
