// Command-line front end: classification, witness matrix dumps, spanning
// certificates, positivity oracle runs, region sweeps and detection.
//
// Exit codes: 0 success/certified, 1 usage, 2 outside the positive cone,
// 3 evidence-only certificate, 4 data error.

#include "choiwit/faces.hpp"
#include "choiwit/json_io.hpp"
#include "choiwit/oracle.hpp"
#include "choiwit/spanning.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace choiwit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitOutside = 2;
constexpr int kExitEvidenceOnly = 3;
constexpr int kExitDataError = 4;

// shortest round-trip representation for human-readable output
std::string fmt_short(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

// 17 significant digits for CSV artifacts
std::string fmt_csv(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string yn(bool v) { return v ? "Y" : "N"; }

void print_matrix_csv(const CMat& m, std::ostream& os) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            const double re = m(i, j).real();
            const double im = m(i, j).imag();
            os << fmt_short(re) << (im < 0 ? "-" : "+") << fmt_short(std::abs(im)) << 'j';
        }
        os << '\n';
    }
}

struct ParamArgs {
    double a = 0.0, b = 0.0, c = 0.0;
    MapParams params() const { return MapParams{a, b, c}; }
};

void add_param_args(CLI::App* cmd, ParamArgs& args) {
    cmd->add_option("a", args.a, "diagonal weight a")->required()
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("b", args.b, "diagonal weight b")->required()
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("c", args.c, "diagonal weight c")->required()
        ->check(CLI::NonNegativeNumber);
}

int run_classify(const ParamArgs& args, double tol, bool as_json) {
    const auto cp = classify(args.params(), tol);
    if (as_json) {
        std::cout << classified_to_json(cp).dump(2) << '\n';
    } else {
        std::cout << "params: (" << fmt_short(args.a) << ", " << fmt_short(args.b)
                  << ", " << fmt_short(args.c) << ")\n";
        std::cout << "face: " << face_name(cp.face);
        if (cp.face.t) std::cout << "  t = " << fmt_short(*cp.face.t);
        std::cout << '\n';
        std::cout << "region: positive " << yn(cp.region.positive) << ", CP "
                  << yn(cp.region.completely_positive) << ", coCP "
                  << yn(cp.region.completely_copositive) << ", decomposable "
                  << yn(cp.region.decomposable) << '\n';
        if (cp.profile) {
            const auto& pp = *cp.profile;
            std::cout << "spanning " << yn(pp.spanning) << ", co-spanning "
                      << yn(pp.co_spanning) << ", bi-spanning " << yn(pp.bi_spanning)
                      << '\n';
            std::cout << "optimal " << yn(pp.optimal) << ", co-optimal "
                      << yn(pp.co_optimal) << ", bi-optimal " << yn(pp.bi_optimal)
                      << '\n';
        }
        if (!cp.notes.empty()) std::cout << "notes: " << cp.notes << '\n';
    }
    return cp.face.tag == FaceTag::OUTSIDE ? kExitOutside : kExitOk;
}

int run_choi(const ParamArgs& args, bool gamma, bool as_json, bool as_csv) {
    auto w = choi_matrix(args.params());
    if (gamma) {
        w.mat = partial_transpose(w.mat);
        w.params.reset();  // the transposed matrix is not of the parametric form
    }
    if (as_csv) {
        print_matrix_csv(w.mat, std::cout);
    } else if (as_json) {
        std::cout << witness_to_json(w).dump(2) << '\n';
    } else {
        for (Eigen::Index i = 0; i < 9; ++i) {
            for (Eigen::Index j = 0; j < 9; ++j)
                std::cout << (j ? " " : "") << fmt_short(w.mat(i, j).real());
            std::cout << '\n';
        }
    }
    return kExitOk;
}

int run_span(const ParamArgs& args, bool gamma, const SearchConfig& cfg, bool as_json) {
    const auto p = args.params();
    const auto w = choi_matrix(p);
    SpanningCertificate cert;
    try {
        cert = gamma ? co_spanning_certificate(w, cfg) : spanning_certificate(w, cfg);
    } catch (const NotPositiveError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    if (as_json) {
        std::cout << certificate_to_json(cert).dump(2) << '\n';
    } else {
        std::cout << "# seed: " << cfg.seed << '\n';
        std::cout << "target: "
                  << (cert.target == SpanTarget::SPANNING ? "spanning" : "co-spanning")
                  << '\n';
        std::cout << "zero vectors: " << cert.vectors.size() << ", rank " << cert.rank
                  << '\n';
        if (p.b > 0.0 && p.c > 0.0 && !gamma)
            std::cout << "|det M| = " << fmt_short(det_m(p)) << "  (closed form "
                      << fmt_short(det_m_closed_form(p)) << ")\n";
        std::cout << "verdict: "
                  << (cert.verdict == SpanVerdict::CERTIFIED ? "CERTIFIED"
                                                             : "EVIDENCE_ONLY")
                  << '\n';
    }
    return cert.verdict == SpanVerdict::CERTIFIED ? kExitOk : kExitEvidenceOnly;
}

int run_positivity(const ParamArgs& args, const SearchConfig& cfg) {
    const auto rep = positivity_cross_check(args.params(), cfg);
    std::cout << "# seed: " << cfg.seed << '\n';
    std::cout << "closed-form positive: " << yn(rep.verdict_closed) << '\n';
    std::cout << "oracle minimum: " << fmt_short(rep.min_found) << '\n';
    std::cout << "argmin xi:  ";
    for (int i = 0; i < 3; ++i)
        std::cout << '(' << fmt_short(rep.argmin.xi(i).real()) << ','
                  << fmt_short(rep.argmin.xi(i).imag()) << ") ";
    std::cout << "\nargmin eta: ";
    for (int i = 0; i < 3; ++i)
        std::cout << '(' << fmt_short(rep.argmin.eta(i).real()) << ','
                  << fmt_short(rep.argmin.eta(i).imag()) << ") ";
    std::cout << '\n';
    std::cout << "agree: " << yn(rep.agree) << '\n';
    return kExitOk;
}

struct SweepArgs {
    double a_min = 0.0, a_max = 3.0;
    double b_min = 0.0, b_max = 3.0;
    double c_min = 0.0, c_max = 3.0;
    int a_steps = 2, b_steps = 2, c_steps = 2;
    std::string out;
    double tol = 1e-9;
};

int run_sweep(const SweepArgs& s) {
    auto grid = [](double lo, double hi, int steps, int k) {
        return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
    };
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!s.out.empty() && s.out != "-") {
        file.open(s.out);
        if (!file) {
            std::cerr << "error: cannot open output path " << s.out << '\n';
            return kExitDataError;
        }
        os = &file;
    }
    *os << "a,b,c,face,t,positive,cp,ccp,decomposable,optimal,co_optimal,"
           "bi_optimal,spanning,co_spanning,bi_spanning\n";
    for (int ia = 0; ia < s.a_steps; ++ia)
        for (int ib = 0; ib < s.b_steps; ++ib)
            for (int ic = 0; ic < s.c_steps; ++ic) {
                const MapParams p{grid(s.a_min, s.a_max, s.a_steps, ia),
                                  grid(s.b_min, s.b_max, s.b_steps, ib),
                                  grid(s.c_min, s.c_max, s.c_steps, ic)};
                const auto cp = classify(p, s.tol);
                const PropertyProfile pp = cp.profile.value_or(PropertyProfile{});
                *os << fmt_csv(p.a) << ',' << fmt_csv(p.b) << ',' << fmt_csv(p.c)
                    << ',' << face_name(cp.face) << ',';
                if (cp.face.t) *os << fmt_csv(*cp.face.t);
                *os << ',' << cp.region.positive << ','
                    << cp.region.completely_positive << ','
                    << cp.region.completely_copositive << ','
                    << cp.region.decomposable << ',' << pp.optimal << ','
                    << pp.co_optimal << ',' << pp.bi_optimal << ',' << pp.spanning
                    << ',' << pp.co_spanning << ',' << pp.bi_spanning << '\n';
            }
    return kExitOk;
}

int run_detect(const ParamArgs& args, const std::string& state_path, bool search,
               const SearchConfig& cfg) {
    const auto w = choi_matrix(args.params());
    if (!state_path.empty()) {
        json j;
        CMat rho;
        try {
            std::ifstream in(state_path);
            if (!in) throw std::runtime_error("cannot open state file");
            j = json::parse(in);
            rho = matrix_from_json(j);
            validate_density(rho);
        } catch (const std::exception& e) {
            std::cerr << "data error: " << e.what() << '\n';
            return kExitDataError;
        }
        const double value = witness_expectation(w.mat, rho);
        const auto ppt = is_ppt(rho);
        std::cout << "witness expectation: " << fmt_short(value) << '\n';
        std::cout << "ppt margin: " << fmt_short(ppt.margin)
                  << (ppt.ppt ? " (PPT)" : " (NPT)") << '\n';
        if (value < 0.0)
            std::cout << (ppt.ppt ? "PPTES DETECTED\n" : "DETECTED\n");
        else
            std::cout << "not detected\n";
        return kExitOk;
    }
    std::cout << "# seed: " << cfg.seed << '\n';
    const auto rep = pptes_search(w, cfg);
    std::cout << detection_to_json(rep).dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Choi-type positive map and entanglement witness toolkit"};
    app.require_subcommand(1);

    ParamArgs pa;
    double tol = 1e-9;
    bool as_json = false, as_csv = false, gamma = false, do_search = false;
    std::string state_path;
    SearchConfig cfg;
    SweepArgs sweep_args;

    auto* classify_cmd = app.add_subcommand("classify", "face and property profile");
    add_param_args(classify_cmd, pa);
    classify_cmd->add_option("--tol", tol, "classification tolerance");
    classify_cmd->add_flag("--json", as_json, "JSON output");

    auto* choi_cmd = app.add_subcommand("choi", "dump the 9x9 witness matrix");
    add_param_args(choi_cmd, pa);
    choi_cmd->add_flag("--gamma", gamma, "dump the partial transpose");
    choi_cmd->add_flag("--json", as_json, "JSON output");
    choi_cmd->add_flag("--csv", as_csv, "CSV output");

    auto* span_cmd = app.add_subcommand("span", "spanning / co-spanning certificate");
    add_param_args(span_cmd, pa);
    span_cmd->add_flag("--gamma", gamma, "certify the co-spanning property");
    span_cmd->add_option("--restarts", cfg.restarts, "search restarts");
    span_cmd->add_option("--seed", cfg.seed, "RNG seed");
    span_cmd->add_flag("--json", as_json, "JSON output");

    auto* pos_cmd = app.add_subcommand("positivity", "closed form vs oracle minimum");
    add_param_args(pos_cmd, pa);
    pos_cmd->add_option("--restarts", cfg.restarts, "search restarts");
    pos_cmd->add_option("--seed", cfg.seed, "RNG seed");

    auto* sweep_cmd = app.add_subcommand("sweep", "grid sweep to CSV");
    sweep_cmd->add_option("--a-min", sweep_args.a_min);
    sweep_cmd->add_option("--a-max", sweep_args.a_max);
    sweep_cmd->add_option("--a-steps", sweep_args.a_steps)->check(CLI::Range(2, 100000));
    sweep_cmd->add_option("--b-min", sweep_args.b_min);
    sweep_cmd->add_option("--b-max", sweep_args.b_max);
    sweep_cmd->add_option("--b-steps", sweep_args.b_steps)->check(CLI::Range(2, 100000));
    sweep_cmd->add_option("--c-min", sweep_args.c_min);
    sweep_cmd->add_option("--c-max", sweep_args.c_max);
    sweep_cmd->add_option("--c-steps", sweep_args.c_steps)->check(CLI::Range(2, 100000));
    sweep_cmd->add_option("--out", sweep_args.out, "output CSV path (default stdout)");
    sweep_cmd->add_option("--tol", sweep_args.tol, "classification tolerance");

    auto* detect_cmd = app.add_subcommand("detect", "witness a state or search for one");
    add_param_args(detect_cmd, pa);
    auto* state_opt = detect_cmd->add_option("--state", state_path,
                                             "density matrix JSON file");
    auto* search_opt = detect_cmd->add_flag("--search", do_search,
                                            "run the PPT-entangled-state search");
    state_opt->excludes(search_opt);
    detect_cmd->add_option("--seed", cfg.seed, "RNG seed");
    detect_cmd->add_option("--restarts", cfg.restarts, "search restarts");
    detect_cmd->add_option("--iters", cfg.max_iters, "iterations per restart");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(pa, tol, as_json);
        if (choi_cmd->parsed()) return run_choi(pa, gamma, as_json, as_csv);
        if (span_cmd->parsed()) return run_span(pa, gamma, cfg, as_json);
        if (pos_cmd->parsed()) return run_positivity(pa, cfg);
        if (sweep_cmd->parsed()) return run_sweep(sweep_args);
        if (detect_cmd->parsed()) {
            if (state_path.empty() && !do_search) {
                std::cerr << "usage error: detect needs --state FILE or --search\n";
                return kExitUsage;
            }
            return run_detect(pa, state_path, do_search, cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    return kExitUsage;
}
