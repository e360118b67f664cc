// onesided — command-line front end.
//
// Subcommands map one-to-one onto library operations:
//   eval        s_k over a k-range
//   bounds      every applicable bound with hypothesis flags
//   verify      bound vs scan for one theorem (exit 0 PASS / 3 INCONCLUSIVE
//               / 4 HYPOTHESIS-FAIL)
//   degeneracy  root-of-unity-ratio verdict
//   decompose   torsion + free-rank decomposition and frequency projection
//   continuous  continuous minimum over the line or the torus
//   witness     Kronecker witness for a target t0
//   certify     c_S = c_T certification (exit as verify)
//   extremal    emit the tightness example config
//   corpus      batch bounds over a directory of configs
//
// Identical invocations produce byte-identical output; the manifest
// (command, config, budgets, seed) is embedded in every report.

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "onesided/onesided.hpp"

namespace {

using namespace onesided;

constexpr int EXIT_OK = 0;
constexpr int EXIT_BAD_CONFIG = 2;
constexpr int EXIT_INCONCLUSIVE = 3;
constexpr int EXIT_HYPOTHESIS = 4;

struct Options {
    std::string config_path;
    std::string format = "json";
    std::int64_t budget = 1'000'000;
    double epsilon = 1e-3;
    double delta = 0.05;
    std::int64_t seed = 1;
    std::string restrict_mode = "all";
    std::string theorem = "Thm1";
    std::int64_t kmin = 1, kmax = 20;
    std::int64_t extremal_n = 4;
    double t0 = 0.0;
    double resolution = 0.0;
    double horizon = 0.0;
};

std::string fmt_double(double v) {
    char buf[64];
    auto* end = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17).ptr;
    return std::string(buf, end);
}

Json manifest_json(const std::string& command, const Options& opt) {
    Json m;
    m["command"] = command;
    m["config_path"] = opt.config_path;
    m["budgets"] = {{"budget", opt.budget}, {"epsilon", opt.epsilon}, {"delta", opt.delta}};
    m["seed"] = opt.seed;
    m["output_format"] = opt.format;
    m["restrict"] = opt.restrict_mode;
    return m;
}

void emit(const std::string& command, const Options& opt, const Json& result,
          const std::string& csv_header = "", const std::vector<std::string>& csv_rows = {}) {
    if (opt.format == "json") {
        Json out;
        out["manifest"] = manifest_json(command, opt);
        out["result"] = result;
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "# command=" << command << " config=" << opt.config_path
                  << " seed=" << opt.seed << "\n";
        if (!csv_header.empty()) std::cout << csv_header << "\n";
        for (const auto& row : csv_rows) std::cout << row << "\n";
    } else {
        std::cout << command << " (" << opt.config_path << ", seed " << opt.seed << ")\n";
        std::cout << result.dump(2) << "\n";
    }
}

LoadedConfig load(const Options& opt) {
    std::ifstream in(opt.config_path);
    if (!in) throw ConfigError("cannot open config file '" + opt.config_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    LoadedConfig cfg = load_config_string(ss.str());
    for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << "\n";
    return cfg;
}

ScanRestriction parse_restriction(const std::string& s) {
    if (s == "all") return ScanRestriction::All;
    if (s == "odd") return ScanRestriction::Odd;
    if (s == "torsion") return ScanRestriction::TorsionMultiples;
    throw ConfigError("unknown --restrict mode '" + s + "'");
}

int cmd_eval(const Options& opt) {
    LoadedConfig cfg = load(opt);
    Json rows = Json::array();
    std::vector<std::string> csv;
    for (std::int64_t k = opt.kmin; k <= opt.kmax; ++k) {
        double s = 0.0;
        if (cfg.kind == LoadedConfig::Kind::Spectrum) s = eval_power_sum(cfg.spectrum, k);
        else if (cfg.kind == LoadedConfig::Kind::Cosine) s = eval_cosine_sum(cfg.cosine, k);
        else s = cfg.poly.eval(static_cast<double>(k)).real();
        rows.push_back({{"k", k}, {"s_k", s}});
        csv.push_back(std::to_string(k) + "," + fmt_double(s));
    }
    emit("eval", opt, {{"rows", rows}}, "k,s_k", csv);
    return EXIT_OK;
}

Json all_bounds_json(const LoadedConfig& cfg, std::vector<std::string>& csv) {
    Json arr = Json::array();
    auto push = [&](const BoundReport& rep) {
        arr.push_back(bound_to_json(rep));
        csv.push_back(bound_to_csv(rep));
    };
    if (cfg.kind == LoadedConfig::Kind::Spectrum) {
        const SpectrumConfig& s = cfg.spectrum;
        ValidationReport val = validate_config(s);
        push(bound_thm1(s, val));
        push(bound_cor1(s, val));
        push(bound_thm2(s, val));
        DegeneracyVerdict verdict = s.all_exact_angles()
                                        ? detect_degeneracy(s)
                                        : DegeneracyVerdict::make_heuristic("float angles");
        bool no_minus_one = std::none_of(s.nodes.begin(), s.nodes.end(),
                                         [](const SpectrumNode& nd) { return nd.angle.is_half(); });
        push(bound_thm4(s, verdict.non_degenerate(), no_minus_one));
        if (s.n() >= 2) {
            BoundReport c3 = bound_cor3(static_cast<std::int64_t>(s.n()));
            bool all_one = std::all_of(s.nodes.begin(), s.nodes.end(), [](const SpectrumNode& nd) {
                return nd.b.exact ? *nd.b.exact == Rational(1) : nd.b.value == Complex(1.0, 0.0);
            });
            c3.hypotheses.emplace_back("all_b_equal_one_checked", all_one);
            c3.hypotheses.emplace_back("ratios_nondegenerate",
                                       verdict.kind != DegeneracyVerdict::Kind::Degenerate ||
                                           (verdict.witness && verdict.witness->kind == "z_equals_minus_one"));
            push(c3);
        }
    } else if (cfg.kind == LoadedConfig::Kind::Cosine) {
        push(bound_cor4(cfg.cosine));
        DegeneracyVerdict verdict = detect_degeneracy(cfg.cosine);
        push(bound_cor5(cfg.cosine, verdict.non_degenerate()));
    } else {
        push(bound_lemma1(cfg.poly));
        push(bound_lemma2(cfg.poly));
    }
    return arr;
}

int cmd_bounds(const Options& opt) {
    LoadedConfig cfg = load(opt);
    std::vector<std::string> csv;
    Json arr = all_bounds_json(cfg, csv);
    emit("bounds", opt, {{"bounds", arr}}, "theorem_id,value,strict,hypotheses_met", csv);
    return EXIT_OK;
}

int cmd_verify(const Options& opt) {
    LoadedConfig cfg = load(opt);
    TheoremId id = theorem_from_name(opt.theorem);
    VerifyBudgets budgets;
    budgets.scan_K = opt.budget;
    budgets.epsilon = opt.epsilon;
    VerificationRecord rec;
    if (cfg.kind == LoadedConfig::Kind::Spectrum) rec = verify_theorem(cfg.spectrum, id, budgets);
    else if (cfg.kind == LoadedConfig::Kind::Cosine) rec = verify_theorem(cfg.cosine, id, budgets);
    else rec = verify_theorem(cfg.poly, id, budgets);
    emit("verify", opt, verification_to_json(rec),
         "theorem_id,bound,min_found,k_best,budget,verdict", {verification_to_csv(rec)});
    switch (rec.verdict) {
        case VerificationRecord::Verdict::Pass: return EXIT_OK;
        case VerificationRecord::Verdict::Inconclusive: return EXIT_INCONCLUSIVE;
        case VerificationRecord::Verdict::HypothesisFail: return EXIT_HYPOTHESIS;
    }
    return EXIT_OK;
}

int cmd_degeneracy(const Options& opt) {
    LoadedConfig cfg = load(opt);
    DegeneracyVerdict verdict = cfg.kind == LoadedConfig::Kind::Cosine
                                    ? detect_degeneracy(cfg.cosine)
                                    : detect_degeneracy(cfg.spectrum);
    emit("degeneracy", opt, verdict_to_json(verdict));
    return EXIT_OK;
}

int cmd_decompose(const Options& opt) {
    LoadedConfig cfg = load(opt);
    SpectrumConfig spec =
        cfg.kind == LoadedConfig::Kind::Cosine ? to_spectrum(cfg.cosine) : cfg.spectrum;
    GroupDecomposition g = group_decompose(spec);
    Json result = decomposition_to_json(g);
    if (g.d > 0) {
        try {
            Projection proj = choose_projection(g);
            result["projection"] = projection_to_json(proj);
        } catch (const std::exception& e) {
            result["projection_error"] = e.what();
        }
    }
    emit("decompose", opt, result);
    return EXIT_OK;
}

int cmd_continuous(const Options& opt) {
    LoadedConfig cfg = load(opt);
    ContinuousMinimum m;
    if (cfg.kind == LoadedConfig::Kind::Cosine) {
        m = continuous_minimum_time(cfg.cosine, opt.resolution, opt.horizon);
    } else if (cfg.kind == LoadedConfig::Kind::TrigPoly) {
        m = trigpoly_minimum(cfg.poly);
    } else {
        GroupDecomposition g = group_decompose(cfg.spectrum);
        if (g.d == 0) {
            // pure torsion: finite exhaustive evaluation over one period
            std::int64_t period = *cfg.spectrum.rational_period();
            ScanResult s = scan_infimum(cfg.spectrum, period);
            m.value = s.value_best;
            m.minimizer = {static_cast<double>(s.k_best)};
            m.method = ContinuousMinimum::Method::GridPolish;
            m.certified_resolution = 1.0;
        } else {
            m = continuous_minimum_torus(g, cfg.spectrum, 0, 100,
                                         static_cast<std::uint64_t>(opt.seed));
        }
    }
    emit("continuous", opt, continuous_to_json(m));
    return EXIT_OK;
}

int cmd_witness(const Options& opt) {
    LoadedConfig cfg = load(opt);
    BasisDecl basis;
    std::vector<std::vector<std::int64_t>> lambda_rows;
    std::int64_t torsion = 1;
    ScanRestriction restriction = parse_restriction(opt.restrict_mode);
    if (cfg.kind == LoadedConfig::Kind::Cosine) {
        basis = cfg.cosine.basis;
        for (const auto& p : cfg.cosine.pairs) lambda_rows.push_back(p.alpha.coeffs());
    } else if (cfg.kind == LoadedConfig::Kind::Spectrum) {
        basis = cfg.spectrum.basis;
        for (const auto& nd : cfg.spectrum.nodes) lambda_rows.push_back(nd.angle.coeffs());
        if (restriction == ScanRestriction::TorsionMultiples && cfg.spectrum.all_exact_angles())
            torsion = group_decompose(cfg.spectrum).torsion_order;
    } else {
        throw ConfigError("witness requires a spectrum or cosine config");
    }
    WitnessReport w = kronecker_witness(basis, lambda_rows, opt.t0, opt.delta, opt.budget, torsion);
    if (cfg.kind == LoadedConfig::Kind::Cosine) w.sum_at_k = eval_cosine_sum(cfg.cosine, w.k);
    else w.sum_at_k = eval_power_sum(cfg.spectrum, w.k);
    emit("witness", opt, witness_to_json(w));
    return w.satisfied ? EXIT_OK : EXIT_INCONCLUSIVE;
}

int cmd_certify(const Options& opt) {
    LoadedConfig cfg = load(opt);
    if (cfg.kind != LoadedConfig::Kind::Cosine)
        throw ConfigError("certify requires a cosine config");
    CertificationReport rep = certify_cs_equals_ct(cfg.cosine, opt.epsilon, opt.budget);
    emit("certify", opt, certification_to_json(rep));
    switch (rep.verdict) {
        case CertificationReport::Verdict::Certified: return EXIT_OK;
        case CertificationReport::Verdict::EffortExhausted: return EXIT_INCONCLUSIVE;
        case CertificationReport::Verdict::HypothesisFail: return EXIT_HYPOTHESIS;
    }
    return EXIT_OK;
}

int cmd_extremal(const Options& opt) {
    SpectrumConfig cfg = extremal_example(opt.extremal_n);
    // emitted bare so the output is itself a loadable config
    std::cout << config_to_json(cfg).dump(2) << "\n";
    return EXIT_OK;
}

int cmd_corpus(const Options& opt) {
    namespace fs = std::filesystem;
    fs::path dir(opt.config_path);
    if (!fs::is_directory(dir)) throw ConfigError("corpus expects --config to name a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    Json results = Json::array();
    std::vector<std::string> csv;
    for (const auto& f : files) {
        Options sub = opt;
        sub.config_path = f.string();
        Json entry;
        entry["config"] = f.filename().string();
        try {
            LoadedConfig cfg = load(sub);
            std::vector<std::string> rows;
            entry["bounds"] = all_bounds_json(cfg, rows);
            for (const auto& r : rows) csv.push_back(f.filename().string() + "," + r);
        } catch (const std::exception& e) {
            entry["error"] = e.what();
            csv.push_back(f.filename().string() + ",error");
        }
        results.push_back(entry);
    }
    emit("corpus", opt, {{"configs", results}},
         "config,theorem_id,value,strict,hypotheses_met", csv);
    return EXIT_OK;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-sided power sum and cosine inequality toolkit"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool needs_config = true) {
        if (needs_config)
            sub->add_option("--config", opt.config_path, "config JSON path")->required();
        sub->add_option("--budget", opt.budget, "scan/effort budget K");
        sub->add_option("--epsilon", opt.epsilon, "certification epsilon");
        sub->add_option("--delta", opt.delta, "Kronecker delta");
        sub->add_option("--format", opt.format, "json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--seed", opt.seed, "seed recorded in outputs");
        sub->add_option("--restrict", opt.restrict_mode, "all|odd|torsion")
            ->check(CLI::IsMember({"all", "odd", "torsion"}));
    };

    auto* eval = app.add_subcommand("eval", "evaluate s_k over a k-range");
    add_common(eval);
    eval->add_option("--kmin", opt.kmin, "first k");
    eval->add_option("--kmax", opt.kmax, "last k");

    auto* bounds = app.add_subcommand("bounds", "compute every applicable bound");
    add_common(bounds);

    auto* verify = app.add_subcommand("verify", "check one theorem bound against a scan");
    add_common(verify);
    verify->add_option("--theorem", opt.theorem,
                       "Thm1|Cor1|Thm2|Thm4|Cor3|Cor4|Cor5|Lemma1|Lemma2")->required();

    auto* degeneracy = app.add_subcommand("degeneracy", "root-of-unity-ratio verdict");
    add_common(degeneracy);

    auto* decompose = app.add_subcommand("decompose", "group decomposition and projection");
    add_common(decompose);

    auto* continuous = app.add_subcommand("continuous", "continuous minimum (line or torus)");
    add_common(continuous);
    continuous->add_option("--resolution", opt.resolution, "grid step (0 = auto)");
    continuous->add_option("--horizon", opt.horizon, "scan horizon for irrational angles");

    auto* witness = app.add_subcommand("witness", "Kronecker witness for target t0");
    add_common(witness);
    witness->add_option("--t0", opt.t0, "target time")->required();

    auto* certify = app.add_subcommand("certify", "certify c_S = c_T one-sidedly");
    add_common(certify);

    auto* extremal = app.add_subcommand("extremal", "emit the tightness example config");
    extremal->add_option("-n,--n", opt.extremal_n, "number of nodes")->required();

    auto* corpus = app.add_subcommand("corpus", "batch bounds over a directory");
    add_common(corpus);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return cmd_eval(opt);
        if (bounds->parsed()) return cmd_bounds(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (degeneracy->parsed()) return cmd_degeneracy(opt);
        if (decompose->parsed()) return cmd_decompose(opt);
        if (continuous->parsed()) return cmd_continuous(opt);
        if (witness->parsed()) return cmd_witness(opt);
        if (certify->parsed()) return cmd_certify(opt);
        if (extremal->parsed()) return cmd_extremal(opt);
        if (corpus->parsed()) return cmd_corpus(opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return EXIT_BAD_CONFIG;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_BAD_CONFIG;
    }
    return EXIT_OK;
}
