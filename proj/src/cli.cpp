#include "emd/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "emd/compositions.hpp"
#include "emd/decimal.hpp"
#include "emd/emd_core.hpp"
#include "emd/expectation.hpp"
#include "emd/genfun.hpp"
#include "emd/graph.hpp"
#include "emd/ingest.hpp"
#include "emd/rational.hpp"
#include "emd/tpoly.hpp"

namespace emd::cli {

namespace {

using nlohmann::json;

Composition parse_parts(const std::string& text) {
    std::vector<long long> parts;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(field, &used);
        } catch (const std::exception&) {
            throw std::runtime_error("malformed part '" + field + "' in '" + text + "'");
        }
        if (used != field.size())
            throw std::runtime_error("malformed part '" + field + "' in '" + text + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::runtime_error("empty distribution '" + text + "'");
    return Composition(std::move(parts));
}

/// Round to 6 significant digits; spectral and Monte Carlo values carry no
/// more real precision than that.
double sig6(double x) {
    if (x == 0 || !std::isfinite(x)) return x;
    double mag = std::pow(10.0, 5 - std::floor(std::log10(std::fabs(x))));
    return std::round(x * mag) / mag;
}

std::string rational_str(const BigRational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Integer-valued polynomial coefficient as plain text.
std::string coeff_str(const BigRational& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return rational_str(c);
}

const DistributionRecord& record_by_id(const std::vector<DistributionRecord>& records,
                                       long long id) {
    for (const DistributionRecord& r : records)
        if (r.id == id) return r;
    throw std::runtime_error("no record with id " + std::to_string(id));
}

json graph_report(const EmdGraph& g, int iso_cap) {
    json report;
    report["labels"] = g.labels;
    report["threshold"] = rational_str(g.threshold);
    report["vertex_count"] = g.vertex_count();
    report["edge_count"] = g.edge_count();
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    report["edges"] = edges;
    report["components"] = connected_components(g);
    report["component_count"] = report["components"].size();
    report["max_degree"] = g.max_degree();

    if (g.vertex_count() >= 1) {
        Spectrum spec = spectrum(laplacian(g));
        json eigen = json::array();
        for (double ev : spec.eigenvalues) eigen.push_back(sig6(ev));
        report["spectrum"] = eigen;
        if (g.vertex_count() >= 2) {
            double lambda2 = spec.eigenvalues[1];
            report["algebraic_connectivity"] = sig6(lambda2);
            auto [clo, chi] = cheeger_bounds(std::clamp(lambda2, 0.0, 2.0 * g.max_degree()),
                                             g.max_degree());
            report["cheeger_bounds"] = json::array({sig6(clo), sig6(chi)});
            if (g.vertex_count() <= iso_cap)
                report["isoperimetric_number"] = rational_str(isoperimetric_number(g, iso_cap));
            if (report["components"].size() == 1) {
                report["mean_distance"] = rational_str(mean_distance(g));
                if (lambda2 > 0) {
                    auto [mlo, mhi] = mean_distance_bounds(lambda2, g.max_degree(),
                                                           g.vertex_count());
                    report["mean_distance_bounds"] = json::array({sig6(mlo), sig6(mhi)});
                }
            }
        }
    }
    return report;
}

struct ToolConfig {
    int digits = 6;
    std::uint64_t seed = 0;
    int iso_cap = 25;
    long long emg_cap = 20000;
};

void add_pair_command(CLI::App& app, ToolConfig& cfg, std::ostream& out) {
    auto* cmd = app.add_subcommand("pair", "EMD between two distributions");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    auto ida = std::make_shared<long long>(0);
    auto idb = std::make_shared<long long>(0);
    auto unit = std::make_shared<bool>(false);
    cmd->add_option("--a", *a, "first distribution, comma-separated counts");
    cmd->add_option("--b", *b, "second distribution, comma-separated counts");
    auto* opt_input = cmd->add_option("--input", *input, "CSV file with distribution records");
    auto* opt_ida = cmd->add_option("--ida", *ida, "record id of the first distribution");
    auto* opt_idb = cmd->add_option("--idb", *idb, "record id of the second distribution");
    opt_ida->needs(opt_input);
    opt_idb->needs(opt_input);
    cmd->add_flag("--unit", *unit, "report the unit-normalized distance");
    cmd->callback([&cfg, &out, a, b, input, ida, idb, unit, cmd]() {
        Composition mu, nu;
        if (cmd->count("--input")) {
            if (!cmd->count("--ida") || !cmd->count("--idb"))
                throw CLI::RequiredError("--ida and --idb");
            auto records = parse_distribution_csv(*input);
            mu = record_by_id(records, *ida).counts;
            nu = record_by_id(records, *idb).counts;
        } else {
            if (a->empty() || b->empty()) throw CLI::RequiredError("--a and --b");
            mu = parse_parts(*a);
            nu = parse_parts(*b);
        }
        if (*unit) {
            // Distributions of different total mass compare via exact
            // probability vectors; the diameter is then n-1.
            if (mu.sum() == nu.sum()) {
                out << render_decimal(emd_unit_normalized(mu, nu), cfg.digits) << "\n";
            } else {
                if (mu.size() != nu.size() || mu.size() < 2)
                    throw std::runtime_error("normalization undefined");
                BigRational d = emd_continuous(ProbVector::from_counts(mu),
                                               ProbVector::from_counts(nu)) /
                                BigRational(mu.size() - 1);
                out << render_decimal(d, cfg.digits) << "\n";
            }
        } else {
            out << emd_discrete(mu, nu) << "\n";
        }
    });
}

void add_mean_command(CLI::App& app, ToolConfig& cfg, std::ostream& out) {
    auto* cmd = app.add_subcommand("mean", "expected EMD, exact discrete or limiting");
    auto p = std::make_shared<int>(0);
    auto q = std::make_shared<int>(0);
    auto s = std::make_shared<long long>(0);
    auto unit = std::make_shared<bool>(false);
    cmd->add_option("--p", *p, "parts in the first composition")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--q", *q, "parts in the second composition")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--s", *s, "total mass; omit for the s -> infinity limit")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--unit", *unit, "divide by s*(n-1) (or n-1 in the limit)");
    cmd->callback([&cfg, &out, p, q, s, unit, cmd]() {
        if (*unit && *p != *q)
            throw std::runtime_error("--unit needs --p == --q");
        BigRational value;
        if (cmd->count("--s")) {
            value = *unit ? mean_emd_unit_normalized(*p, *s) : mean_emd_discrete(*p, *q, *s);
        } else {
            value = *unit ? m_tilde(*p) : m_value(*p, *q);
        }
        out << render_decimal(value, cfg.digits) << "\n";
    });
}

void add_mtable_command(CLI::App& app, ToolConfig& cfg, std::ostream& out) {
    auto* cmd = app.add_subcommand("mtable", "tables of limiting expected values");
    auto nmax = std::make_shared<int>(5);
    auto mtilde_row = std::make_shared<bool>(false);
    cmd->add_option("--nmax", *nmax, "largest index")->required()->check(CLI::PositiveNumber);
    cmd->add_flag("--mtilde", *mtilde_row,
                  "print the unit-normalized limits for n = 2..nmax as one row");
    cmd->callback([&cfg, &out, nmax, mtilde_row]() {
        if (*mtilde_row) {
            if (*nmax < 2) throw std::runtime_error("--mtilde needs --nmax >= 2");
            for (int n = 2; n <= *nmax; ++n)
                out << (n > 2 ? " " : "") << render_decimal(m_tilde(n), cfg.digits);
            out << "\n";
            return;
        }
        out << "p/q";
        for (int q = 1; q <= *nmax; ++q) out << "," << q;
        out << "\n";
        for (int p = 1; p <= *nmax; ++p) {
            out << p;
            for (int q = 1; q <= *nmax; ++q)
                out << "," << render_decimal(m_value(p, q), cfg.digits);
            out << "\n";
        }
    });
}

void add_hist_command(CLI::App& app, std::ostream& out) {
    auto* cmd = app.add_subcommand("hist", "exact EMD histogram over composition pairs");
    auto s = std::make_shared<long long>(0);
    auto n = std::make_shared<int>(0);
    cmd->add_option("--s", *s, "total mass")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--n", *n, "number of parts")->required()->check(CLI::PositiveNumber);
    cmd->callback([&out, s, n]() {
        EmdHistogram h = histogram(*s, *n);
        out << "value,count\n";
        for (std::size_t k = 0; k < h.counts.size(); ++k)
            out << k << "," << h.counts[k].get_str() << "\n";
    });
}

void add_poly_commands(CLI::App& app, std::ostream& out) {
    for (bool is_n : {true, false}) {
        auto* cmd = app.add_subcommand(is_n ? "npoly" : "wpoly",
                                       is_n ? "total-EMD numerator polynomial"
                                            : "pair-count numerator polynomial");
        auto p = std::make_shared<int>(0);
        auto q = std::make_shared<int>(0);
        cmd->add_option("--p", *p, "row count")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--q", *q, "column count")->required()->check(CLI::PositiveNumber);
        cmd->callback([&out, p, q, is_n]() {
            TPoly poly = is_n ? n_poly(*p, *q) : w_poly(*p, *q);
            out << "i,coeff\n";
            for (long i = 0; i <= poly.degree(); ++i)
                out << i << "," << coeff_str(poly.coeff(static_cast<std::size_t>(i))) << "\n";
        });
    }
}

void add_sample_command(CLI::App& app, ToolConfig& cfg, std::ostream& out) {
    auto* cmd = app.add_subcommand("sample", "Monte Carlo mean EMD on the simplex");
    auto n = std::make_shared<int>(0);
    auto trials = std::make_shared<long long>(0);
    cmd->add_option("--n", *n, "simplex dimension")->required()->check(CLI::Range(2, 1000000));
    cmd->add_option("--trials", *trials, "number of sample pairs")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->callback([&cfg, &out, n, trials]() {
        MonteCarloResult r = monte_carlo_mean_emd(*n, *trials, cfg.seed);
        out << "estimate,std_error\n" << sig6(r.estimate) << "," << sig6(r.std_error) << "\n";
    });
}

std::vector<ProbVector> to_prob_vectors(const std::vector<DistributionRecord>& records) {
    std::vector<ProbVector> dists;
    dists.reserve(records.size());
    for (const DistributionRecord& r : records) dists.push_back(r.probabilities());
    return dists;
}

std::vector<std::string> to_labels(const std::vector<DistributionRecord>& records) {
    std::vector<std::string> labels;
    labels.reserve(records.size());
    for (const DistributionRecord& r : records) labels.push_back(r.label());
    return labels;
}

void add_graph_command(CLI::App& app, ToolConfig& cfg, std::ostream& out) {
    auto* cmd = app.add_subcommand("graph", "threshold graph report for a distribution file");
    auto input = std::make_shared<std::string>();
    auto threshold = std::make_shared<std::string>();
    auto edges_path = std::make_shared<std::string>();
    cmd->add_option("--input", *input, "CSV file with distribution records")->required();
    cmd->add_option("--threshold", *threshold,
                    "unit-normalized distance threshold (decimal or a/b)")
        ->required();
    cmd->add_option("--edges", *edges_path, "also write an edge list to this file");
    cmd->callback([&cfg, &out, input, threshold, edges_path, cmd]() {
        auto records = parse_distribution_csv(*input);
        EmdGraph g = build_emd_graph(to_prob_vectors(records), parse_rational(*threshold),
                                     to_labels(records));
        json report = graph_report(g, cfg.iso_cap);
        report["meta"] = {{"command", "graph"}, {"input", *input}};
        if (cmd->count("--edges")) {
            std::ofstream f(*edges_path);
            if (!f) throw std::runtime_error("cannot write " + *edges_path);
            write_edge_list(f, g);
        }
        out << report.dump(2) << "\n";
    });
}

void add_sweep_command(CLI::App& app, ToolConfig& cfg, std::ostream& out) {
    auto* cmd = app.add_subcommand("sweep", "component counts across a threshold range");
    auto input = std::make_shared<std::string>();
    auto tmin = std::make_shared<std::string>();
    auto tmax = std::make_shared<std::string>();
    auto steps = std::make_shared<int>(0);
    cmd->add_option("--input", *input, "CSV file with distribution records")->required();
    cmd->add_option("--tmin", *tmin, "lowest threshold")->required();
    cmd->add_option("--tmax", *tmax, "highest threshold")->required();
    cmd->add_option("--steps", *steps, "number of steps between tmin and tmax")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->callback([&cfg, &out, input, tmin, tmax, steps]() {
        auto records = parse_distribution_csv(*input);
        BigRational lo = parse_rational(*tmin);
        BigRational hi = parse_rational(*tmax);
        if (hi < lo) throw std::runtime_error("tmax is below tmin");
        std::vector<BigRational> thresholds;
        for (int k = 0; k <= *steps; ++k)
            thresholds.push_back(lo + (hi - lo) * BigRational(k) / BigRational(*steps));
        auto sweep = threshold_sweep(to_prob_vectors(records), thresholds);
        out << "threshold,components\n";
        for (const auto& [t, c] : sweep)
            out << render_decimal(t, cfg.digits) << "," << c << "\n";
    });
}

void add_emg_command(CLI::App& app, ToolConfig& cfg, std::ostream& out) {
    auto* cmd = app.add_subcommand("emg", "earth mover's graph on all compositions");
    auto s = std::make_shared<long long>(0);
    auto n = std::make_shared<int>(0);
    auto json_path = std::make_shared<std::string>();
    cmd->add_option("--s", *s, "total mass")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--n", *n, "number of parts")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--json", *json_path, "also write a JSON report to this file");
    cmd->callback([&cfg, &out, s, n, json_path, cmd]() {
        EmdGraph g = earth_movers_graph(*s, *n, cfg.emg_cap);
        if (cmd->count("--json")) {
            json report = graph_report(g, cfg.iso_cap);
            report["meta"] = {{"command", "emg"}, {"s", *s}, {"n", *n}};
            std::ofstream f(*json_path);
            if (!f) throw std::runtime_error("cannot write " + *json_path);
            f << report.dump(2) << "\n";
        }
        write_edge_list(out, g);
    });
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact earth mover's distance toolkit", "emdtool"};
    app.require_subcommand(1);

    ToolConfig cfg;
    app.add_option("--digits", cfg.digits, "fractional digits for decimal output")
        ->check(CLI::Range(1, 50));
    app.add_option("--seed", cfg.seed, "seed for stochastic commands");
    app.add_option("--iso-cap", cfg.iso_cap,
                   "largest vertex count for exact isoperimetric enumeration")
        ->check(CLI::Range(2, 25));
    app.add_option("--emg-cap", cfg.emg_cap, "largest vertex count for emg")
        ->check(CLI::PositiveNumber);

    add_pair_command(app, cfg, out);
    add_mean_command(app, cfg, out);
    add_mtable_command(app, cfg, out);
    add_hist_command(app, out);
    add_poly_commands(app, out);
    add_sample_command(app, cfg, out);
    add_graph_command(app, cfg, out);
    add_sweep_command(app, cfg, out);
    add_emg_command(app, cfg, out);

    // Let --digits / --seed appear after the subcommand name too.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace emd::cli
