// betajac: beta-Jacobi spectral edge simulator.
//
// Subcommands sample the ensemble, emit rescaled soft/hard edge draws,
// sample the limiting operators, compare empirical distributions, and run
// the exact-identity self-check. All randomness is derived from a mandatory
// seed with one stream per trial, so outputs are byte-identical across
// reruns and thread counts.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "betajac/eigencore.hpp"
#include "betajac/jacobi.hpp"
#include "betajac/limitops.hpp"
#include "betajac/parallel.hpp"
#include "betajac/randkit.hpp"
#include "betajac/stats.hpp"

using json = nlohmann::ordered_json;
using namespace betajac;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParamError = 1;
constexpr int kExitNumericError = 2;
constexpr int kExitComparisonFail = 3;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParamError("cannot open output file: " + path);
    out << text;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParamError("cannot open file: " + path);
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!have_header) {
            table.columns = cells;
            have_header = true;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(c, &used));
                if (used != c.size()) throw std::invalid_argument(c);
            } catch (const std::exception&) {
                throw ParamError("parse error at " + path + ":" + std::to_string(line_no) +
                                 ": bad number '" + c + "'");
            }
        }
        if (row.size() != table.columns.size()) {
            throw ParamError("parse error at " + path + ":" + std::to_string(line_no) +
                             ": expected " + std::to_string(table.columns.size()) + " fields");
        }
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw ParamError("parse error at " + path + ":1: missing header row");
    return table;
}

std::size_t column_index(const CsvTable& table, const std::string& column) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (table.columns[i] == column) return i;
    }
    try {
        std::size_t used = 0;
        const long idx = std::stol(column, &used);
        if (used == column.size() && idx >= 1 &&
            static_cast<std::size_t>(idx) <= table.columns.size()) {
            return static_cast<std::size_t>(idx - 1);
        }
    } catch (const std::exception&) {
    }
    throw ParamError("no column '" + column + "' in file");
}

std::vector<double> extract_column(const CsvTable& table, const std::string& column) {
    const std::size_t idx = column_index(table, column);
    std::vector<double> out;
    out.reserve(table.rows.size());
    for (const auto& row : table.rows) out.push_back(row[idx]);
    if (out.empty()) throw ParamError("file has no data rows");
    return out;
}

// ---------------------------------------------------------------------------
// Shared experiment plumbing
// ---------------------------------------------------------------------------

struct CommonOptions {
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    int threads = 1;
    std::string out = "-";
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_format = true) {
    cmd->add_option("--seed", opt.seed, "RNG seed (trial t uses stream (seed, t))")->required();
    cmd->add_option("--trials", opt.trials, "number of Monte Carlo trials")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", opt.out, "output path ('-' = stdout)");
    if (with_format) {
        cmd->add_option("--format", opt.format, "csv (samples) or json (summary)")
            ->check(CLI::IsMember({"csv", "json"}));
    }
}

std::string csv_samples(const std::string& meta, const std::string& index_name,
                        const std::vector<std::string>& value_columns,
                        const std::vector<std::vector<double>>& rows) {
    std::string text = meta;
    text += index_name;
    for (const auto& c : value_columns) {
        text += ',';
        text += c;
    }
    text += '\n';
    for (std::size_t t = 0; t < rows.size(); ++t) {
        text += std::to_string(t);
        for (double v : rows[t]) {
            text += ',';
            text += fmt17(v);
        }
        text += '\n';
    }
    return text;
}

const std::vector<double> kSummaryProbs = {0.05, 0.25, 0.5, 0.75, 0.95};
const char* const kSummaryLabels[] = {"0.05", "0.25", "0.5", "0.75", "0.95"};

json quantile_block(const std::vector<double>& samples) {
    EmpiricalDistribution dist(samples);
    const auto q = quantiles(dist, kSummaryProbs);
    json out;
    for (std::size_t i = 0; i < kSummaryProbs.size(); ++i) {
        out[kSummaryLabels[i]] = q[i];
    }
    return out;
}

struct SummarySpec {
    std::optional<std::string> ref_file;
    std::string ref_column = "2";
    std::optional<double> threshold;
};

// Builds the {params, trials, quantiles, ks, pass} summary for the first
// value column of an experiment, optionally comparing against a reference
// sample file.
json make_summary(const json& params, const std::vector<std::vector<double>>& rows,
                  const SummarySpec& spec, bool& pass_out) {
    std::vector<double> first;
    first.reserve(rows.size());
    for (const auto& r : rows) first.push_back(r.at(0));
    json summary;
    summary["params"] = params;
    summary["trials"] = rows.size();
    summary["quantiles"] = quantile_block(first);
    bool pass = true;
    if (spec.ref_file) {
        const std::vector<double> ref = extract_column(read_csv(*spec.ref_file), spec.ref_column);
        const double d = ks_two_sample(EmpiricalDistribution(first), EmpiricalDistribution(ref));
        summary["ks"] = d;
        if (spec.threshold) pass = d < *spec.threshold;
    } else {
        summary["ks"] = nullptr;
    }
    summary["pass"] = pass;
    pass_out = pass;
    return summary;
}

int emit_experiment(const CommonOptions& opt, const json& params, const std::string& meta,
                    const std::string& index_name, const std::vector<std::string>& value_columns,
                    const std::vector<std::vector<double>>& rows, const SummarySpec& spec) {
    bool pass = true;
    if (opt.format == "json") {
        const json summary = make_summary(params, rows, spec, pass);
        write_text(opt.out, summary.dump(2) + "\n");
    } else {
        write_text(opt.out, csv_samples(meta, index_name, value_columns, rows));
        if (spec.ref_file) {
            const json summary = make_summary(params, rows, spec, pass);
            std::cout << summary.dump(2) << "\n";
        }
    }
    return (spec.threshold && !pass) ? kExitComparisonFail : kExitOk;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_sample(const JacobiParams& p, const CommonOptions& opt, bool emit_angles) {
    validate(p);
    std::vector<std::vector<double>> rows(opt.trials);
    run_trials(opt.trials, opt.threads, [&](std::size_t t) {
        RngStream stream(opt.seed, t);
        const JacobiAngles a = sample_angles(p, stream);
        if (emit_angles) {
            std::vector<double> row = a.C;
            row.insert(row.end(), a.Ct.begin(), a.Ct.end());
            rows[t] = std::move(row);
        } else {
            rows[t] = full_spectrum(gram(build_M(a)), 1e-12);
        }
    });

    std::vector<std::string> columns;
    if (emit_angles) {
        for (std::size_t i = 1; i <= p.n; ++i) columns.push_back("C_" + std::to_string(i));
        for (std::size_t i = 1; i < p.n; ++i) columns.push_back("Ct_" + std::to_string(i));
    } else {
        for (std::size_t i = 1; i <= p.n; ++i) columns.push_back("lambda_" + std::to_string(i));
    }
    std::string meta = "# command=sample n=" + std::to_string(p.n) + " n1=" + fmt17(p.n1) +
                       " n2=" + fmt17(p.n2) + " beta=" + fmt17(p.beta) +
                       " trials=" + std::to_string(opt.trials) +
                       " seed=" + std::to_string(opt.seed) +
                       (emit_angles ? " emit=angles" : " emit=eigenvalues") + "\n";
    write_text(opt.out, csv_samples(meta, "trial", columns, rows));
    return kExitOk;
}

int cmd_edge(const JacobiParams& p, std::size_t k, const CommonOptions& opt,
             const SummarySpec& spec, bool soft) {
    validate(p);
    if (soft) {
        const ScalingConstants sc = scaling_constants(p);
        require_soft_edge(sc);  // surfaces the denominator before launching
    }
    std::vector<std::vector<double>> rows(opt.trials);
    run_trials(opt.trials, opt.threads, [&](std::size_t t) {
        RngStream stream(opt.seed, t);
        rows[t] = soft ? soft_edge_sample(p, k, stream) : hard_edge_sample(p, k, stream);
    });

    const std::string name = soft ? "soft-edge" : "hard-edge";
    json params;
    params["command"] = name;
    params["n"] = p.n;
    params["n1"] = p.n1;
    params["n2"] = p.n2;
    params["beta"] = p.beta;
    params["k"] = k;
    params["seed"] = opt.seed;
    std::string meta = "# command=" + name + " n=" + std::to_string(p.n) + " n1=" + fmt17(p.n1) +
                       " n2=" + fmt17(p.n2) + " beta=" + fmt17(p.beta) +
                       " k=" + std::to_string(k) + " trials=" + std::to_string(opt.trials) +
                       " seed=" + std::to_string(opt.seed) + "\n";
    std::vector<std::string> columns;
    for (std::size_t l = 1; l <= k; ++l) columns.push_back("x_" + std::to_string(l));
    return emit_experiment(opt, params, meta, "trial", columns, rows, spec);
}

int cmd_operator(double beta, double a, std::size_t k, const GridSpec& grid,
                 const CommonOptions& opt, const SummarySpec& spec, bool airy) {
    validate(grid);
    std::vector<std::vector<double>> rows(opt.trials);
    run_trials(opt.trials, opt.threads, [&](std::size_t t) {
        RngStream stream(opt.seed, t);
        const BrownianPath path = sample_brownian(grid.length, grid.step, stream);
        if (airy) {
            const SymTridiagonal h = sae_discretize(beta, grid, path);
            rows[t] = extreme_eigenvalues(h, {k, SpectrumQuery::Side::smallest, 1e-10});
        } else {
            rows[t] = sbo_eigenvalues(sbo_inverse_kernel(beta, a, grid, path), k);
        }
    });

    const std::string name = airy ? "sae" : "sbo";
    json params;
    params["command"] = name;
    params["beta"] = beta;
    if (!airy) params["a"] = a;
    params["k"] = k;
    params["grid_length"] = grid.length;
    params["grid_step"] = grid.step;
    params["seed"] = opt.seed;
    std::string meta = "# command=" + name + " beta=" + fmt17(beta) +
                       (airy ? std::string() : " a=" + fmt17(a)) + " k=" + std::to_string(k) +
                       " trials=" + std::to_string(opt.trials) +
                       " seed=" + std::to_string(opt.seed) + "\n# grid_length=" +
                       fmt17(grid.length) + " grid_step=" + fmt17(grid.step) + "\n";
    std::vector<std::string> columns;
    for (std::size_t l = 0; l < k; ++l) columns.push_back("Lambda_" + std::to_string(l));
    return emit_experiment(opt, params, meta, "path", columns, rows, spec);
}

int cmd_compare(const std::string& file_a, const std::string& file_b, const std::string& column,
                std::optional<double> threshold, const std::string& out) {
    const std::vector<double> a = extract_column(read_csv(file_a), column);
    const std::vector<double> b = extract_column(read_csv(file_b), column);
    EmpiricalDistribution da(a), db(b);
    const double d = ks_two_sample(da, db);
    const bool pass = threshold ? d < *threshold : true;

    json report;
    report["params"] = {{"fileA", file_a},
                        {"fileB", file_b},
                        {"column", column},
                        {"threshold", threshold ? json(*threshold) : json(nullptr)}};
    report["trials"] = {{"a", da.count()}, {"b", db.count()}};
    report["quantiles"] = {{"a", quantile_block(a)}, {"b", quantile_block(b)}};
    report["ks"] = d;
    report["pass"] = pass;
    write_text(out, report.dump(2) + "\n");
    return pass ? kExitOk : kExitComparisonFail;
}

// ---------------------------------------------------------------------------
// Self-check
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    double worst = 0.0;
    double tolerance = 0.0;
    bool pass() const { return worst < tolerance; }
};

int cmd_selfcheck(std::uint64_t seed, int threads, bool inject_fault) {
    std::vector<CheckResult> results;

    auto random_params = [](RngStream& s, std::size_t n_max) {
        const std::size_t n = 2 + static_cast<std::size_t>(s.uniform() * (n_max - 2));
        const double n1 = static_cast<double>(n) - 0.9 + 3.0 * s.uniform() +
                          s.uniform() * static_cast<double>(n);
        const double n2 = static_cast<double>(n) + s.uniform() * 2.0 * static_cast<double>(n);
        const double beta = 0.4 + 3.6 * s.uniform();
        return JacobiParams{n, n1, n2, beta};
    };

    {
        CheckResult r{"determinant identities", 0.0, 1e-8};
        std::vector<double> worst(30, 0.0);
        run_trials(30, threads, [&](std::size_t t) {
            RngStream s(seed + 1, t);
            const JacobiParams p = random_params(s, 60);
            const JacobiAngles a = sample_angles(p, s);
            const DetIdentity id = det_identities(a.C, a.S, a.Ct, a.St);
            const auto eig = full_spectrum(gram(build_M(a)), 1e-14);
            double log_l = 0.0, log_1ml = 0.0;
            for (double v : eig) {
                log_l += std::log(v);
                log_1ml += std::log1p(-v);
            }
            worst[t] = std::max(std::abs(log_l - id.log_prod_lambda) / std::abs(log_l),
                                std::abs(log_1ml - id.log_prod_one_minus_lambda) /
                                    std::abs(log_1ml));
        });
        r.worst = *std::max_element(worst.begin(), worst.end());
        results.push_back(r);
    }
    {
        CheckResult r{"doubling-lemma symmetry", 0.0, 1e-9};
        std::vector<double> worst(30, 0.0);
        run_trials(30, threads, [&](std::size_t t) {
            RngStream s(seed + 2, t);
            const JacobiParams p = random_params(s, 16);
            const JacobiAngles a = sample_angles(p, s);
            const auto eig = full_spectrum(double_embedding(build_M(a)), 1e-13);
            double w = 0.0;
            const std::size_t m = eig.size();
            for (std::size_t i = 0; i < m / 2; ++i) {
                w = std::max(w, std::abs(eig[i] + eig[m - 1 - i]));
            }
            worst[t] = w;
        });
        r.worst = *std::max_element(worst.begin(), worst.end());
        results.push_back(r);
    }
    {
        CheckResult r{"soft-edge affine identity", 0.0, inject_fault ? 1e-30 : 1e-8};
        std::vector<double> worst(20, 0.0);
        run_trials(20, threads, [&](std::size_t t) {
            RngStream s(seed + 3, t);
            JacobiParams p = random_params(s, 50);
            ScalingConstants sc = scaling_constants(p);
            while (!sc.soft_edge_defined) {
                p = random_params(s, 50);
                sc = scaling_constants(p);
            }
            const JacobiAngles a = sample_angles(p, s);
            const auto h_eig = full_spectrum(build_Hn(a, sc), 1e-13);
            const auto z_eig = full_spectrum(gram(build_Z(a)), 1e-13);
            double w = 0.0;
            for (std::size_t i = 0; i < p.n; ++i) {
                w = std::max(w, std::abs(h_eig[i] / sc.alpha_n -
                                         (sc.lambda_plus - z_eig[p.n - 1 - i])));
            }
            worst[t] = w;
        });
        r.worst = *std::max_element(worst.begin(), worst.end());
        results.push_back(r);
    }
    {
        CheckResult r{"hard-edge inverse identity", 0.0, 1e-8};
        std::vector<double> worst(20, 0.0);
        run_trials(20, threads, [&](std::size_t t) {
            RngStream s(seed + 4, t);
            JacobiParams p = random_params(s, 40);
            p.n2 = std::max(p.n2, static_cast<double>(p.n) + 1.0);
            const JacobiAngles a = sample_angles(p, s);
            const double m = hard_edge_scale(p);
            const std::size_t k = std::min<std::size_t>(3, p.n);
            const auto edge = hard_edge_from_angles(a, m, k, 1e-14);
            const auto lam = gram_inverse_eigenvalues(discrete_inverse_kernel(build_W(a), m), k);
            double w = 0.0;
            for (std::size_t l = 0; l < k; ++l) {
                w = std::max(w, std::abs(std::log(lam[l]) - std::log(edge[l])));
            }
            worst[t] = w;
        });
        r.worst = *std::max_element(worst.begin(), worst.end());
        results.push_back(r);
    }
    {
        CheckResult r{"eigensolver oracle agreement", 0.0, 1e-10};
        std::vector<double> worst(50, 0.0);
        run_trials(50, threads, [&](std::size_t t) {
            RngStream s(seed + 5, t);
            SymTridiagonal tri;
            const std::size_t n = 2 + static_cast<std::size_t>(s.uniform() * 7);
            tri.diag.resize(n);
            tri.offdiag.resize(n - 1);
            for (double& v : tri.diag) v = 4.0 * s.uniform() - 2.0;
            for (double& v : tri.offdiag) v = 2.0 * s.uniform() - 1.0;
            const auto bisect = full_spectrum(tri, 1e-13);
            const auto dense = dense_sym_eigen(to_dense(tri));
            double w = 0.0;
            for (std::size_t i = 0; i < n; ++i) w = std::max(w, std::abs(bisect[i] - dense[i]));
            worst[t] = w;
        });
        r.worst = *std::max_element(worst.begin(), worst.end());
        results.push_back(r);
    }

    bool all_pass = true;
    std::printf("%-30s %-12s %-12s %s\n", "check", "worst", "tolerance", "status");
    for (const auto& r : results) {
        all_pass = all_pass && r.pass();
        std::printf("%-30s %-12.3e %-12.3e %s\n", r.name.c_str(), r.worst, r.tolerance,
                    r.pass() ? "ok" : "FAIL");
    }
    return all_pass ? kExitOk : kExitNumericError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"beta-Jacobi spectral edge simulator"};
    app.require_subcommand(1);

    JacobiParams params;
    std::size_t k = 1;
    bool emit_angles = false;
    CommonOptions opt_sample, opt_soft, opt_hard, opt_sae, opt_sbo;
    SummarySpec spec_soft, spec_hard, spec_sae, spec_sbo;
    double sae_beta = 2.0, sbo_beta = 2.0, sbo_a = 0.0;
    GridSpec sae_grid{20.0, 1e-2}, sbo_grid{10.0, 1e-2};
    std::size_t sae_k = 1, sbo_k = 1;

    auto add_jacobi = [&params](CLI::App* cmd) {
        cmd->add_option("--n", params.n, "matrix size")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--n1", params.n1, "first dimension parameter (real, > n-1)")->required();
        cmd->add_option("--n2", params.n2, "second dimension parameter (real, > n-1)")->required();
        cmd->add_option("--beta", params.beta, "inverse temperature")->required();
    };
    auto add_summary = [](CLI::App* cmd, SummarySpec& spec) {
        cmd->add_option("--ref", spec.ref_file, "reference CSV for a KS comparison");
        cmd->add_option("--ref-column", spec.ref_column,
                        "column (name or 1-based index) in the reference file");
        cmd->add_option("--threshold", spec.threshold, "KS pass/fail threshold");
    };

    CLI::App* c_sample = app.add_subcommand("sample", "eigenvalues (or angles) of the ensemble");
    add_jacobi(c_sample);
    add_common(c_sample, opt_sample, false);
    c_sample->add_flag("--angles", emit_angles, "emit the angle variables instead");

    CLI::App* c_soft = app.add_subcommand("soft-edge", "rescaled upper soft edge draws");
    add_jacobi(c_soft);
    c_soft->add_option("--k", k, "number of edge eigenvalues per trial");
    add_common(c_soft, opt_soft);
    add_summary(c_soft, spec_soft);

    CLI::App* c_hard = app.add_subcommand("hard-edge", "rescaled lower hard edge draws");
    add_jacobi(c_hard);
    c_hard->add_option("--k", k, "number of edge eigenvalues per trial");
    add_common(c_hard, opt_hard);
    add_summary(c_hard, spec_hard);

    CLI::App* c_sae = app.add_subcommand("sae", "stochastic Airy operator eigenvalue draws");
    c_sae->add_option("--beta", sae_beta, "inverse temperature")->required();
    c_sae->add_option("--k", sae_k, "number of bottom eigenvalues");
    c_sae->add_option("--grid-length", sae_grid.length, "domain truncation L");
    c_sae->add_option("--grid-step", sae_grid.step, "grid step h");
    add_common(c_sae, opt_sae);
    add_summary(c_sae, spec_sae);

    CLI::App* c_sbo = app.add_subcommand("sbo", "stochastic Bessel operator eigenvalue draws");
    c_sbo->add_option("--beta", sbo_beta, "inverse temperature")->required();
    c_sbo->add_option("--a", sbo_a, "hard-edge parameter a > -1");
    c_sbo->add_option("--k", sbo_k, "number of bottom eigenvalues");
    c_sbo->add_option("--grid-length", sbo_grid.length, "domain truncation L");
    c_sbo->add_option("--grid-step", sbo_grid.step, "grid step h");
    add_common(c_sbo, opt_sbo);
    add_summary(c_sbo, spec_sbo);

    std::string cmp_a, cmp_b, cmp_column, cmp_out = "-";
    std::optional<double> cmp_threshold;
    CLI::App* c_cmp = app.add_subcommand("compare", "two-sample KS report for two CSV files");
    c_cmp->add_option("fileA", cmp_a, "first CSV file")->required();
    c_cmp->add_option("fileB", cmp_b, "second CSV file")->required();
    c_cmp->add_option("--column", cmp_column, "column name or 1-based index")->required();
    c_cmp->add_option("--threshold", cmp_threshold, "KS pass/fail threshold");
    c_cmp->add_option("--out", cmp_out, "output path ('-' = stdout)");

    std::uint64_t check_seed = 1;
    int check_threads = 1;
    bool inject_fault = false;
    CLI::App* c_check = app.add_subcommand("selfcheck", "run the exact-identity suite");
    c_check->add_option("--seed", check_seed, "seed for the sampled identities");
    c_check->add_option("--threads", check_threads, "worker threads");
    c_check->add_flag("--inject-fault", inject_fault,
                      "corrupt one tolerance (exercises the failure path)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitParamError;
    }

    try {
        if (c_sample->parsed()) return cmd_sample(params, opt_sample, emit_angles);
        if (c_soft->parsed()) return cmd_edge(params, k, opt_soft, spec_soft, true);
        if (c_hard->parsed()) return cmd_edge(params, k, opt_hard, spec_hard, false);
        if (c_sae->parsed()) {
            return cmd_operator(sae_beta, 0.0, sae_k, sae_grid, opt_sae, spec_sae, true);
        }
        if (c_sbo->parsed()) {
            return cmd_operator(sbo_beta, sbo_a, sbo_k, sbo_grid, opt_sbo, spec_sbo, false);
        }
        if (c_cmp->parsed()) return cmd_compare(cmp_a, cmp_b, cmp_column, cmp_threshold, cmp_out);
        if (c_check->parsed()) return cmd_selfcheck(check_seed, check_threads, inject_fault);
    } catch (const DegenerateScalingError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParamError;
    } catch (const ParamError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParamError;
    } catch (const NumericError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericError;
    }
    return kExitParamError;
}
