#include "torelli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "torelli/bounds.hpp"
#include "torelli/certificate_check.hpp"
#include "torelli/curve_system.hpp"
#include "torelli/homology.hpp"
#include "torelli/penner.hpp"
#include "torelli/serialize.hpp"

namespace torelli {

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotFilling:
        case ErrorCode::FamilyOverlap:
        case ErrorCode::DisjointnessFailed:
        case ErrorCode::CapExceeded:
        case ErrorCode::NotPrimitive:
        case ErrorCode::Overflow:
            return kExitCheckFailed;
        default:
            return kExitDomain;
    }
}

Rational parse_exact_number(const std::string& text) {
    if (text.find('/') != std::string::npos) return parse_fraction(text);
    static const std::regex re(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re) || (m[2].length() == 0 && m[3].length() == 0))
        throw Error(ErrorCode::PreconditionFailed, "not a number: '" + text + "'");
    std::string digits = m[2].str() + m[3].str();
    int exponent = (m[4].matched ? std::stoi(m[4].str()) : 0) - static_cast<int>(m[3].length());
    Rational r{BigInt(digits.empty() ? "0" : digits)};
    BigInt ten = pow(BigInt(10), static_cast<unsigned>(std::abs(exponent)));
    if (exponent >= 0) r *= ten;
    else r /= ten;
    return m[1] == "-" ? Rational(-r) : r;
}

namespace {

std::string render(const std::optional<Rational>& r, bool exact) {
    if (!r) return "";
    return exact ? to_fraction(*r) : to_decimal(*r, 12);
}

std::string render(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

ScanRow scan_cell(int g, int n, int step_cap, const Rational& perron_tol) {
    ScanRow row;
    row.g = g;
    row.n = n;
    ConstructionParameters p;
    try {
        p = construction_parameters(g, n);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateParameters) throw;
        row.verdict = "DEGENERATE";
        return row;
    }
    row.k = p.k;
    row.l = p.l;
    row.N_claim = p.N_claim;
    auto fail = [&](const std::string& why) { row.failures.push_back(why); };
    try {
        auto s = build_penner_system(g, n);
        auto v = validate_system(s);
        for (const auto& f : v.failures) fail("validate: " + f);
        auto f = make_penner_class(s);
        auto sched = containment_schedule_check(s, f);
        if (!sched.passes) fail("schedule at step " + std::to_string(sched.first_violation));
        int N = largest_certified_N(s, f, step_cap);
        row.N_certified = N;
        if (N < p.N_claim) fail("N_certified below N_claim");
        if (N >= 1) {
            auto cert = certify_distance_two(s, f, N);
            row.bound = cert.bound;
            row.chain_final = cert.chain.chain_final;
            row.threshold = cert.chain.threshold;
            if (!cert.chain.all_defined_hold()) fail("bound chain");
            if (cert.chain.threshold_below_final && !*cert.chain.threshold_below_final) fail("threshold ordering");
            auto check = check_certificate(certificate_to_json(s, f, cert));
            for (const auto& m : check.mismatches) fail("checker: " + m);
        }
        auto t = transition_matrix(s, f);
        if (positive_diagonal_power(t.m, step_cap) > 2) fail("diagonal power above 2");
        if (!primitivity_exponent(t.m)) fail("transition matrix not primitive");
        else if (perron_estimate(t.m, perron_tol).lower <= 1) fail("Perron root not above 1");
    } catch (const Error& e) {
        fail(e.what());
    }
    row.verdict = row.failures.empty() ? "PASS" : "FAIL";
    return row;
}

std::vector<ScanRow> scan_grid(const ScanOptions& opt) {
    std::vector<std::pair<int, int>> cells;
    for (int g = opt.gmin; g <= opt.gmax; ++g)
        for (int n = opt.nmin; n <= opt.nmax; ++n) cells.emplace_back(g, n);
    std::vector<ScanRow> rows(cells.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next++; i < cells.size(); i = next++)
            rows[i] = scan_cell(cells[i].first, cells[i].second, opt.step_cap, opt.perron_tol);
    };
    unsigned threads = opt.threads > 0 ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<size_t>(1, cells.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "g,n,k,l,N_claim,N_certified,bound_2_over_N,bound_2_over_N_exact,chain_final_32,chain_final_32_exact,"
          "gadre_tsai_threshold,gadre_tsai_threshold_exact,verdicts,failures\n";
    for (const auto& r : rows) {
        std::string failures;
        for (const auto& f : r.failures) failures += (failures.empty() ? "" : "; ") + f;
        std::replace(failures.begin(), failures.end(), '"', '\'');
        os << r.g << ',' << r.n << ',' << render(r.k) << ',' << render(r.l) << ',' << render(r.N_claim) << ','
           << render(r.N_certified) << ',' << render(r.bound, false) << ',' << render(r.bound, true) << ','
           << render(r.chain_final, false) << ',' << render(r.chain_final, true) << ',' << render(r.threshold, false)
           << ',' << render(r.threshold, true) << ',' << r.verdict << ",\"" << failures << "\"\n";
    }
    return os.str();
}

std::string scan_json(const std::vector<ScanRow>& rows) {
    Json a = Json::array();
    auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
    auto frac = [](const std::optional<Rational>& r) { return r ? Json(to_fraction(*r)) : Json(nullptr); };
    for (const auto& r : rows)
        a.push_back({{"g", r.g},
                     {"n", r.n},
                     {"k", opt(r.k)},
                     {"l", opt(r.l)},
                     {"N_claim", opt(r.N_claim)},
                     {"N_certified", opt(r.N_certified)},
                     {"bound_2_over_N", frac(r.bound)},
                     {"chain_final_32", frac(r.chain_final)},
                     {"gadre_tsai_threshold", frac(r.threshold)},
                     {"verdicts", r.verdict},
                     {"failures", r.failures}});
    return a.dump(2) + "\n";
}

namespace {

struct RunConfig {
    std::optional<int> g, n, N;
    std::string partition;
    std::string system_path;
    std::string out;
    std::string format = "csv";
    int step_cap = 64;
    std::string perron_tol = "1e-9";
    ScanOptions scan;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::PreconditionFailed, "cannot write " + cfg.out);
    f << text;
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::MalformedCertificate, "cannot read " + path);
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedCertificate, path + ": " + e.what());
    }
}

CurveSystem load_system(const RunConfig& cfg) {
    if (!cfg.system_path.empty()) return system_from_json(read_json_file(cfg.system_path));
    if (!cfg.g || !cfg.n) throw UsageError("give --system or both --g and --n");
    return build_penner_system(*cfg.g, *cfg.n, parse_partition(cfg.partition, *cfg.n));
}

Json validation_json(const ValidationReport& v) {
    return {{"filling", v.filling},
            {"family_disjoint", v.family_disjoint},
            {"parity", v.parity},
            {"euler_balance", v.euler_balance},
            {"separating", v.separating},
            {"essential", v.essential},
            {"non_isotopic", v.non_isotopic},
            {"minimal_position", v.minimal_position},
            {"genus_matches", v.genus_matches},
            {"gamma_ok", v.gamma_ok},
            {"failures", v.failures},
            {"all", v.all()}};
}

int run_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto s = load_system(cfg);
    auto v = validate_system(s);
    Json j = system_to_json(s);
    j["validation"] = validation_json(v);
    emit(cfg, j.dump(1) + "\n", out);
    for (const auto& f : v.failures) err << "validation failure: " << f << "\n";
    return v.all() ? kExitOk : kExitCheckFailed;
}

int run_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto s = load_system(cfg);
    auto f = make_penner_class(s);
    int N = cfg.N ? *cfg.N : largest_certified_N(s, f, cfg.step_cap);
    if (N < 1)
        throw Error(ErrorCode::DisjointnessFailed, "no N up to " + std::to_string(cfg.step_cap) + " certifies");
    auto cert = certify_distance_two(s, f, N);
    Json j = certificate_to_json(s, f, cert);
    auto check = check_certificate(j);
    j["N_certified"] = N;
    j["step_cap"] = cfg.step_cap;
    j["independent_check"] = {{"ok", check.ok()}, {"comparisons", check.checked}, {"mismatches", check.mismatches}};
    emit(cfg, j.dump(1) + "\n", out);
    for (const auto& m : check.mismatches) err << "checker mismatch: " << m << "\n";
    if (!cert.chain.final_domain_ok) err << "note: |chi| <= 18, the final chain link is undefined\n";
    return check.ok() && cert.chain.all_defined_hold() ? kExitOk : kExitCheckFailed;
}

Json matrix_json(const IntMatrix& m) { return m.to_rows(); }

int run_homology(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    auto s = load_system(cfg);
    const Partition& p = s.surface.partition();
    auto f = make_penner_class(s);
    auto model = build_homology_model(s, p);
    auto a = model.act(f);
    auto c = model.capped_action(f);
    auto consistency = verify_capping_consistency(model, f);
    auto probe = verify_capping_consistency(model, MappingClass::twist(s.probe));
    bool torelli = model.acts_trivially(f);
    Json j{{"g", s.surface.genus()},
           {"n", s.surface.boundary()},
           {"partition", p.to_string()},
           {"partitioned", {{"rank", a.rank}, {"torsion", a.torsion}, {"matrix", matrix_json(a.matrix)}}},
           {"capped",
            {{"genus", capped_genus(s.surface.genus(), s.surface.boundary(), p)},
             {"rank", c.rank},
             {"matrix", matrix_json(c.matrix)},
             {"lefschetz", lefschetz_number(c)}}},
           {"verdicts",
            {{"torelli", torelli},
             {"capped_identity", consistency.capped_identity},
             {"symplectic", consistency.symplectic},
             {"consistent", consistency.agree()},
             {"probe_torelli", probe.partitioned_trivial},
             {"probe_consistent", probe.agree()}}}};
    emit(cfg, j.dump(1) + "\n", out);
    bool ok = torelli && consistency.agree() && consistency.symplectic && !probe.partitioned_trivial && probe.agree();
    return ok ? kExitOk : kExitCheckFailed;
}

int run_bounds(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (!cfg.g || !cfg.n) throw UsageError("bounds needs --g and --n");
    int N = cfg.N ? *cfg.N : construction_parameters(*cfg.g, *cfg.n).N_claim;
    auto r = bound_chain_verify(*cfg.g, *cfg.n, N);
    emit(cfg, bound_report_to_json(r).dump(1) + "\n", out);
    return r.all_defined_hold() ? kExitOk : kExitCheckFailed;
}

int run_scan(RunConfig cfg, std::ostream& out, std::ostream&) {
    if (cfg.format != "csv" && cfg.format != "json") throw UsageError("--format must be csv or json");
    cfg.scan.step_cap = cfg.step_cap;
    cfg.scan.perron_tol = parse_exact_number(cfg.perron_tol);
    if (cfg.scan.perron_tol <= 0) throw UsageError("--perron-tol must be positive");
    auto rows = scan_grid(cfg.scan);
    emit(cfg, cfg.format == "csv" ? scan_csv(rows) : scan_json(rows), out);
    for (const auto& r : rows)
        if (r.verdict == "FAIL") return kExitCheckFailed;
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact certificates for partitioned-surface Torelli Penner classes", "torelli_cert"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool system) {
        sub->add_option("--g", cfg.g, "genus");
        sub->add_option("--n", cfg.n, "number of boundary components");
        sub->add_option("--partition", cfg.partition, "boundary partition, e.g. \"1,2,3|4,5|6|7\"");
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        if (system) sub->add_option("--system", cfg.system_path, "curve system JSON written by construct");
    };
    auto* construct = app.add_subcommand("construct", "build and validate the curve system");
    common(construct, false);
    auto* certify = app.add_subcommand("certify", "emit a distance certificate");
    common(certify, true);
    certify->add_option("--step-cap", cfg.step_cap, "largest N tried")->check(CLI::PositiveNumber);
    certify->add_option("--N", cfg.N, "certify this N instead of searching")->check(CLI::PositiveNumber);
    auto* homology = app.add_subcommand("homology", "action of f on partitioned and capped homology");
    common(homology, true);
    auto* bounds = app.add_subcommand("bounds", "evaluate the upper-bound chain");
    common(bounds, false);
    bounds->add_option("--N", cfg.N, "certified N (default N_claim)")->check(CLI::PositiveNumber);
    auto* scan = app.add_subcommand("scan", "sweep a (g, n) grid");
    scan->add_option("--gmin", cfg.scan.gmin);
    scan->add_option("--gmax", cfg.scan.gmax);
    scan->add_option("--nmin", cfg.scan.nmin);
    scan->add_option("--nmax", cfg.scan.nmax);
    scan->add_option("--out", cfg.out, "output file (default stdout)");
    scan->add_option("--format", cfg.format, "csv or json")->default_str("csv");
    scan->add_option("--step-cap", cfg.step_cap, "largest N tried")->check(CLI::PositiveNumber);
    scan->add_option("--perron-tol", cfg.perron_tol, "width of the Perron interval");
    scan->add_option("--threads", cfg.scan.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (*construct) return run_construct(cfg, out, err);
        if (*certify) return run_certify(cfg, out, err);
        if (*homology) return run_homology(cfg, out, err);
        if (*bounds) return run_bounds(cfg, out, err);
        if (*scan) return run_scan(cfg, out, err);
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return kExitUsage;
}

}  // namespace torelli
