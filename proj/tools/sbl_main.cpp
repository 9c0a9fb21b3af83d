// Command-line front end: feasibility checks, trilinear classification,
// form evaluation, truncation sweeps, blow-up experiments, cone partitions,
// identity suites and symmetry checks.
//
// Exit codes: 0 success / feasible; 2 semantic negative (infeasible, failed
// tolerance, refused experiment); 64 usage or config error; 74 unwritable
// output path.

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sbl/analysis.hpp"
#include "sbl/errors.hpp"
#include "sbl/evaluator.hpp"
#include "sbl/mc.hpp"
#include "sbl/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 2;
constexpr int kExitUsage = 64;
constexpr int kExitCantWrite = 74;

struct InstanceFlags {
    std::string file;
    std::size_t m = 0;
    std::size_t d = 1;
    std::string a_text;
    std::string b_text;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f) {
    cmd->add_option("--instance", f.file, "instance file (key = value text form)");
    cmd->add_option("--m", f.m, "number of cube axes");
    cmd->add_option("--d", f.d, "block dimension (default 1)");
    cmd->add_option("--A", f.a_text, "matrix A as 'a b; c d' with exact rationals");
    cmd->add_option("--B", f.b_text, "matrix B (default identity)");
}

sbl::RationalMatrix parse_field(const std::string& text, const char* field) {
    try {
        return sbl::RationalMatrix::parse(text);
    } catch (const sbl::ParseError& e) {
        throw sbl::ParseError(std::string("field ") + field + ": " + e.what());
    }
}

sbl::CubicalData load_instance(const InstanceFlags& f) {
    if (!f.file.empty()) {
        std::ifstream in(f.file);
        if (!in) throw sbl::ParseError("cannot read instance file '" + f.file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return sbl::CubicalData::parse(ss.str());
    }
    if (f.a_text.empty()) throw sbl::ParseError("missing field A (give --A or --instance)");
    const sbl::RationalMatrix a = parse_field(f.a_text, "A");
    const std::size_t m = f.m ? f.m : a.rows();
    const sbl::RationalMatrix b =
        f.b_text.empty() ? sbl::RationalMatrix::identity(m) : parse_field(f.b_text, "B");
    return sbl::CubicalData::make(m, f.d, b, a);
}

sbl::KernelSpec parse_kernel(const std::string& text, const sbl::CubicalData& data) {
    if (text == "dirac") return sbl::DiracKernel{};
    if (text.rfind("heat:", 0) == 0) return sbl::HeatDifferenceKernel{std::stod(text.substr(5))};
    if (text.rfind("derivgauss:", 0) == 0) {
        std::stringstream ss(text.substr(11));
        std::string tok;
        std::vector<double> vals;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
        if (vals.size() != 5) throw sbl::ParseError("kernel derivgauss:i,k1,k2,tmin,tmax");
        sbl::DerivGaussScaleKernel k;
        k.i = static_cast<std::size_t>(vals[0]);
        k.k1 = static_cast<std::size_t>(vals[1]);
        k.k2 = static_cast<std::size_t>(vals[2]);
        k.t_min = vals[3];
        k.t_max = vals[4];
        k.u = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(data.d * data.m));
        return k;
    }
    throw sbl::ParseError("unknown kernel '" + text + "' (dirac | heat:T | derivgauss:...)");
}

std::string kernel_name(const sbl::KernelSpec& k) {
    if (std::holds_alternative<sbl::DiracKernel>(k)) return "dirac";
    if (const auto* h = std::get_if<sbl::HeatDifferenceKernel>(&k))
        return "heat:" + sbl::format_double(h->T);
    const auto& g = std::get<sbl::DerivGaussScaleKernel>(k);
    return "derivgauss:" + std::to_string(g.i) + "," + std::to_string(g.k1) + "," +
           std::to_string(g.k2) + "," + sbl::format_double(g.t_min) + "," + sbl::format_double(g.t_max);
}

sbl::FunctionAssignment parse_tuple(const std::string& text, const sbl::CubicalData& data,
                                    std::uint64_t seed) {
    const Eigen::Index n = static_cast<Eigen::Index>(data.d * data.m);
    if (text == "g")
        return sbl::FunctionAssignment::uniform(data.m, data.d, sbl::GaussianMixture::standard(n));
    if (text == "g-normalized") {
        sbl::FunctionAssignment tuple;
        tuple.m = data.m;
        tuple.d = data.d;
        tuple.symmetry_level = data.m;
        const sbl::GaussianMixture g = sbl::GaussianMixture::standard(n);
        for (const auto& j : sbl::all_corners(data.m)) {
            const long p = sbl::even_integer_exponent(data.exponent(j));
            tuple.functions.emplace(j, g.scaled(1.0 / sbl::lp_norm(g, p)));
        }
        return tuple;
    }
    if (text.rfind("mix2", 0) == 0) {
        // two-term random mixtures, deterministic in the seed
        sbl::FunctionAssignment tuple;
        tuple.m = data.m;
        tuple.d = data.d;
        std::uint64_t stream = 1;
        for (const auto& j : sbl::all_corners(data.m)) {
            sbl::GaussianMixture f(n);
            for (int term = 0; term < 2; ++term) {
                Eigen::VectorXd center(n);
                for (Eigen::Index k = 0; k < n; ++k)
                    center(k) = 0.4 * sbl::counter_normal(seed, stream, 16 * term + k);
                const double spread = 0.6 + 0.8 * sbl::counter_uniform01(seed, stream, 100 + term);
                f.add_term(term == 0 ? 1.0 : 0.5, center,
                           Eigen::MatrixXd::Identity(n, n) * spread);
            }
            tuple.functions.emplace(j, f);
            ++stream;
        }
        return tuple;
    }
    throw sbl::ParseError("unknown tuple '" + text + "' (g | g-normalized | mix2)");
}

// writes to path, or stdout when path is empty
void emit(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot write to '" + path + "'");
    out << payload;
    if (!out) throw std::ios_base::failure("short write to '" + path + "'");
}

void emit_sidecar(const std::string& path, const nlohmann::ordered_json& config) {
    if (path.empty()) return;
    std::ofstream out(path + ".meta.json", std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot write to '" + path + ".meta.json'");
    out << config.dump(2) << "\n";
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw sbl::ParseError("empty list");
    return out;
}

void require_unit_b(const sbl::CubicalData& data) {
    if (!(data.B == sbl::RationalMatrix::identity(data.m)))
        throw sbl::PreconditionError(
            "field B: evaluation commands need the normal form B = I (run 'check' or normalize)");
}

} // namespace

int main(int argc, char** argv) {
    if (const char* workers = std::getenv("SBL_WORKERS")) {
        const int n = std::atoi(workers);
        if (n > 0) omp_set_num_threads(n);
    }

    CLI::App app{"cubical singular Brascamp-Lieb toolkit"};
    app.require_subcommand(1);

    // shared flags
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 0;
    double tolerance = 1e-7;
    app.add_option("--format", format, "text | json | csv")->capture_default_str();
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--seed", seed, "random seed (default 0)")->capture_default_str();
    app.add_option("--tolerance", tolerance, "tolerance for identity/symmetry checks")
        ->capture_default_str();

    InstanceFlags inst;
    std::string kernel_text = "dirac";
    std::string tuple_text = "g";
    std::string t_list_text, r_list_text;
    std::uint64_t samples = 1'000'000;
    std::string method = "exact";

    auto* cmd_check = app.add_subcommand("check", "decide feasibility exactly");
    cmd_check->fallthrough();
    add_instance_flags(cmd_check, inst);

    auto* cmd_classify = app.add_subcommand("classify", "classify a trilinear normal form");
    cmd_classify->fallthrough();
    std::string a3_text;
    bool degenerate_columns = false;
    cmd_classify->add_option("--A", a3_text, "the 2x2 matrix A3")->required();
    cmd_classify->add_flag("--degenerate-columns", degenerate_columns,
                           "first columns of all three matrices vanish");

    auto* cmd_eval = app.add_subcommand("eval", "evaluate the form for one kernel");
    cmd_eval->fallthrough();
    add_instance_flags(cmd_eval, inst);
    cmd_eval->add_option("--kernel", kernel_text, "dirac | heat:T | derivgauss:i,k1,k2,tmin,tmax")
        ->capture_default_str();
    cmd_eval->add_option("--tuple", tuple_text, "g | g-normalized | mix2")->capture_default_str();
    cmd_eval->add_option("--method", method, "exact | mc")->capture_default_str();
    cmd_eval->add_option("--samples", samples, "Monte Carlo sample pairs")->capture_default_str();

    auto* cmd_sweep = app.add_subcommand("sweep", "truncation sweep over heat-difference kernels");
    cmd_sweep->fallthrough();
    add_instance_flags(cmd_sweep, inst);
    cmd_sweep->add_option("--T-list", t_list_text, "comma-separated T values")->required();
    cmd_sweep->add_option("--tuple", tuple_text, "g | g-normalized | mix2")->capture_default_str();

    auto* cmd_blowup = app.add_subcommand("blowup", "witness blow-up experiment at V = ker Pi");
    cmd_blowup->fallthrough();
    add_instance_flags(cmd_blowup, inst);
    cmd_blowup->add_option("--R-list", r_list_text, "comma-separated witness scales")->required();

    auto* cmd_cone = app.add_subcommand("cone", "cone partition packing/covering report");
    cmd_cone->fallthrough();
    std::size_t cone_dim = 2;
    double cone_delta = 0.05;
    std::size_t audit = 10000;
    cmd_cone->add_option("--dim", cone_dim, "ambient dimension")->capture_default_str();
    cmd_cone->add_option("--delta", cone_delta, "cone width")->capture_default_str();
    cmd_cone->add_option("--audit", audit, "covering audit sample count")->capture_default_str();

    auto* cmd_ident = app.add_subcommand("identities", "run an identity residual suite");
    cmd_ident->fallthrough();
    std::string suite = "all";
    std::size_t trials = 50;
    cmd_ident->add_option("--suite", suite, "heat | heat-vector | convolution | telescoping | annular | all")
        ->capture_default_str();
    cmd_ident->add_option("--trials", trials, "random trials per identity")->capture_default_str();

    auto* cmd_mult = app.add_subcommand("multiplier", "sample a multiplier on a frequency grid (CSV)");
    cmd_mult->fallthrough();
    std::string mult_kernel = "heat:4";
    std::size_t mult_m = 1, mult_d = 1;
    std::string mult_a_text;
    double r_min = 0.5, r_max = 8.0;
    std::size_t radii = 8, directions = 8;
    cmd_mult->add_option("--kernel", mult_kernel, "dirac | heat:T | ksigma:l | derivgauss:i,k1,k2")
        ->capture_default_str();
    cmd_mult->add_option("--m", mult_m, "number of cube axes")->capture_default_str();
    cmd_mult->add_option("--d", mult_d, "block dimension")->capture_default_str();
    cmd_mult->add_option("--A", mult_a_text, "matrix A (needed for ksigma/derivgauss)");
    cmd_mult->add_option("--r-min", r_min)->capture_default_str();
    cmd_mult->add_option("--r-max", r_max)->capture_default_str();
    cmd_mult->add_option("--radii", radii)->capture_default_str();
    cmd_mult->add_option("--directions", directions)->capture_default_str();

    auto* cmd_sym = app.add_subcommand("symmetry", "check a scaling/permutation symmetry");
    cmd_sym->fallthrough();
    add_instance_flags(cmd_sym, inst);
    std::string scale_text, permute_text;
    cmd_sym->add_option("--scale", scale_text, "diagonal of D, e.g. '2 1'");
    cmd_sym->add_option("--permute", permute_text, "permutation sigma(1..m), e.g. '2 1'");
    cmd_sym->add_option("--kernel", kernel_text, "dirac | heat:T")->capture_default_str();
    cmd_sym->add_option("--tuple", tuple_text, "g | g-normalized | mix2")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_check->parsed()) {
            const sbl::CubicalData data = load_instance(inst);
            const sbl::FeasibilityReport rep = sbl::check_conditions(data);
            std::string payload = sbl::parse_format(format) == sbl::ReportFormat::Json
                                      ? sbl::feasibility_to_json(rep).dump(2) + "\n"
                                      : sbl::feasibility_to_text(rep);
            emit(out_path, payload);
            return rep.feasible() ? kExitOk : kExitSemantic;
        }

        if (cmd_classify->parsed()) {
            const sbl::TrilinearCase c =
                sbl::classify_trilinear(sbl::RationalMatrix::parse(a3_text), degenerate_columns);
            if (sbl::parse_format(format) == sbl::ReportFormat::Json) {
                nlohmann::ordered_json j;
                j["A3"] = sbl::RationalMatrix::parse(a3_text).str();
                j["label"] = sbl::to_string(c);
                emit(out_path, j.dump(2) + "\n");
            } else {
                emit(out_path, sbl::to_string(c) + "\n");
            }
            return kExitOk;
        }

        if (cmd_eval->parsed()) {
            const sbl::CubicalData data = load_instance(inst);
            require_unit_b(data);
            const sbl::KernelSpec kernel = parse_kernel(kernel_text, data);
            const sbl::FunctionAssignment tuple = parse_tuple(tuple_text, data, seed);
            sbl::FormResult res;
            if (method == "mc") {
                if (!std::holds_alternative<sbl::DiracKernel>(kernel))
                    throw sbl::RouteError("the Monte Carlo route handles the dirac kernel");
                sbl::McOptions opts;
                opts.samples = samples;
                opts.seed = seed;
                res = sbl::eval_delta_form_mc(data.A, data.d, tuple, opts);
            } else if (method == "exact") {
                res = sbl::eval_form(kernel, data.A, data.d, tuple);
            } else {
                throw sbl::ParseError("unknown method '" + method + "'");
            }
            nlohmann::ordered_json j = sbl::form_result_to_json(res);
            j["kernel"] = kernel_name(kernel);
            if (sbl::parse_format(format) == sbl::ReportFormat::Json) {
                emit(out_path, j.dump(2) + "\n");
            } else {
                std::ostringstream os;
                os << "kernel: " << kernel_name(kernel) << "\n";
                os << "value: " << sbl::format_double(res.value) << "\n";
                os << "method: " << (res.method == sbl::EvalMethod::ExactGaussian ? "exact-gaussian" : "monte-carlo") << "\n";
                os << "std_error: " << sbl::format_double(res.std_error) << "\n";
                emit(out_path, os.str());
            }
            return kExitOk;
        }

        if (cmd_sweep->parsed()) {
            const sbl::CubicalData data = load_instance(inst);
            require_unit_b(data);
            const sbl::FunctionAssignment tuple = parse_tuple(tuple_text, data, seed);
            const sbl::SweepResult sw = sbl::sweep_truncation(data, tuple, parse_list(t_list_text));
            const sbl::ReportFormat fmt = sbl::parse_format(format);
            std::string payload;
            if (fmt == sbl::ReportFormat::Csv)
                payload = sbl::sweep_to_csv(sw);
            else if (fmt == sbl::ReportFormat::Json)
                payload = sbl::sweep_to_json(sw).dump(2) + "\n";
            else {
                std::ostringstream os;
                os << "feasible: " << (sw.feasible ? "yes" : "no (ratios stay finite for a fixed tuple; blow-up needs witness scaling)") << "\n";
                os << "dirac ratio: " << sbl::format_double(sw.dirac_ratio) << "\n";
                for (const auto& p : sw.points)
                    os << "T = " << sbl::format_double(p.T) << "  ratio = " << sbl::format_double(p.ratio) << "\n";
                payload = os.str();
            }
            emit(out_path, payload);
            nlohmann::ordered_json cfg;
            cfg["command"] = "sweep";
            cfg["instance"] = data.serialize();
            cfg["tuple"] = tuple_text;
            cfg["T_list"] = parse_list(t_list_text);
            cfg["seed"] = seed;
            emit_sidecar(out_path, cfg);
            return kExitOk;
        }

        if (cmd_blowup->parsed()) {
            const sbl::CubicalData data = load_instance(inst);
            const auto v_basis = data.pi_scalar().kernel_basis();
            sbl::BlowupResult res;
            try {
                res = sbl::blowup_experiment(data, v_basis, parse_list(r_list_text));
            } catch (const sbl::PreconditionError& e) {
                std::cerr << "refused: " << e.what() << "\n";
                return kExitSemantic;
            }
            const sbl::ReportFormat fmt = sbl::parse_format(format);
            std::string payload;
            if (fmt == sbl::ReportFormat::Csv)
                payload = sbl::blowup_to_csv(res);
            else if (fmt == sbl::ReportFormat::Json)
                payload = sbl::blowup_to_json(res).dump(2) + "\n";
            else {
                std::ostringstream os;
                os << "predicted gap: " << res.predicted_gap.str() << "\n";
                os << "fitted slope: " << sbl::format_double(res.slope) << "\n";
                for (const auto& p : res.points)
                    os << "R = " << sbl::format_double(p.R) << "  ratio = " << sbl::format_double(p.ratio) << "\n";
                payload = os.str();
            }
            emit(out_path, payload);
            nlohmann::ordered_json cfg;
            cfg["command"] = "blowup";
            cfg["instance"] = data.serialize();
            cfg["R_list"] = parse_list(r_list_text);
            cfg["seed"] = seed;
            emit_sidecar(out_path, cfg);
            return kExitOk;
        }

        if (cmd_cone->parsed()) {
            const sbl::ConePartition cp(cone_dim, cone_delta);
            double worst_cover = 0.0, worst_sum = 0.0;
            for (std::size_t s = 0; s < audit; ++s) {
                Eigen::VectorXd v(static_cast<Eigen::Index>(cone_dim));
                for (std::size_t k = 0; k < cone_dim; ++k)
                    v(static_cast<Eigen::Index>(k)) = sbl::counter_normal(seed + 1, s + 1, k);
                if (v.norm() < 1e-9) continue;
                worst_cover = std::max(worst_cover, cp.nearest_center_distance(v));
                const auto w = cp.weights(v);
                double sum = 0.0;
                for (double x : w) sum += x;
                worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
            }
            nlohmann::ordered_json j;
            j["dim"] = cone_dim;
            j["delta"] = cone_delta;
            j["centers"] = cp.size();
            j["min_pairwise_separation"] = cp.min_pairwise_separation();
            j["required_separation"] = cone_delta / 6.0;
            j["sampled_covering_radius"] = worst_cover;
            j["covering_bound"] = cone_delta / 2.0;
            j["max_weight_sum_error"] = worst_sum;
            if (sbl::parse_format(format) == sbl::ReportFormat::Json) {
                emit(out_path, j.dump(2) + "\n");
            } else {
                std::ostringstream os;
                os << "centers: " << cp.size() << "\n";
                os << "min separation: " << sbl::format_double(cp.min_pairwise_separation())
                   << " (required " << sbl::format_double(cone_delta / 6.0) << ")\n";
                os << "sampled covering radius: " << sbl::format_double(worst_cover) << " (bound "
                   << sbl::format_double(cone_delta / 2.0) << ")\n";
                os << "max weight-sum error: " << sbl::format_double(worst_sum) << "\n";
                emit(out_path, os.str());
            }
            const bool ok = cp.min_pairwise_separation() >= cone_delta / 6.0 &&
                            worst_cover <= cone_delta / 2.0 && worst_sum <= 1e-12;
            return ok ? kExitOk : kExitSemantic;
        }

        if (cmd_ident->parsed()) {
            struct Line {
                std::string name;
                double residual;
            };
            std::vector<Line> lines;
            const bool all = suite == "all";
            if (all || suite == "heat") {
                double worst = 0.0;
                for (std::size_t s = 0; s < trials; ++s) {
                    const double eta = 0.2 + 2.0 * sbl::counter_uniform01(seed, s, 0);
                    const double t = 0.2 + 2.0 * sbl::counter_uniform01(seed, s, 1);
                    worst = std::max(worst, sbl::heat_identity_residual(eta, t));
                }
                lines.push_back({"heat", worst});
            }
            if (all || suite == "heat-vector") {
                double worst = 0.0;
                for (std::size_t s = 0; s < trials; ++s) {
                    Eigen::VectorXd xi(2);
                    xi << 0.3 + sbl::counter_uniform01(seed, s, 2), 0.3 + sbl::counter_uniform01(seed, s, 3);
                    const double t = 0.3 + sbl::counter_uniform01(seed, s, 4);
                    worst = std::max(worst, sbl::heat_vector_identity_residual(xi, t));
                }
                lines.push_back({"heat-vector", worst});
            }
            if (all || suite == "convolution") {
                double worst = 0.0;
                for (std::size_t s = 0; s < trials; ++s) {
                    const double s1 = 2.0 * sbl::counter_uniform01(seed, s, 5) - 1.0;
                    const double s0 = 2.0 * sbl::counter_uniform01(seed, s, 6) - 1.0;
                    const double t = 0.3 + 1.5 * sbl::counter_uniform01(seed, s, 7);
                    worst = std::max(worst, sbl::convolution_identity_residual(s1, s0, t));
                }
                lines.push_back({"convolution", worst});
            }
            if (all || suite == "telescoping") {
                double worst = 0.0;
                for (std::size_t s = 0; s < trials; ++s) {
                    const std::size_t d = 1 + s % 2, l = s % 3;
                    Eigen::VectorXd xi(static_cast<Eigen::Index>(d * (l + 1)));
                    for (Eigen::Index k = 0; k < xi.size(); ++k)
                        xi(k) = sbl::counter_normal(seed, s + 1, static_cast<std::uint64_t>(k));
                    xi *= (0.05 + 0.15 * sbl::counter_uniform01(seed, s, 8)) / xi.norm();
                    worst = std::max(worst, std::abs(sbl::telescoping_integral(xi, d, 1e-3, 1e3) -
                                                     std::numbers::pi));
                }
                lines.push_back({"telescoping", worst});
            }
            if (all || suite == "annular") {
                double worst = 0.0;
                for (std::size_t s = 0; s < trials; ++s) {
                    const double v = std::pow(10.0, 3.0 * sbl::counter_uniform01(seed, s, 9) - 2.0);
                    worst = std::max(worst, std::abs(sbl::annular_profile_check(v) - 1.0));
                }
                lines.push_back({"annular", worst});
            }
            if (lines.empty()) throw sbl::ParseError("unknown suite '" + suite + "'");

            bool pass = true;
            std::ostringstream os;
            for (const auto& l : lines) {
                const bool ok = l.residual <= tolerance;
                pass = pass && ok;
                os << (ok ? "[pass] " : "[FAIL] ") << l.name
                   << "  worst residual = " << sbl::format_double(l.residual) << "\n";
            }
            emit(out_path, os.str());
            return pass ? kExitOk : kExitSemantic;
        }

        if (cmd_mult->parsed()) {
            const Eigen::Index dim = static_cast<Eigen::Index>(mult_d * mult_m);
            sbl::Multiplier fn;
            if (mult_kernel == "dirac") {
                fn = sbl::dirac_multiplier();
            } else if (mult_kernel.rfind("heat:", 0) == 0) {
                fn = sbl::heat_difference_multiplier(std::stod(mult_kernel.substr(5)));
            } else if (mult_kernel.rfind("ksigma:", 0) == 0) {
                if (mult_a_text.empty()) throw sbl::ParseError("ksigma needs --A");
                fn = sbl::ksigma_multiplier(parse_field(mult_a_text, "A"), mult_d,
                                            static_cast<std::size_t>(std::stoul(mult_kernel.substr(7))));
            } else if (mult_kernel.rfind("derivgauss:", 0) == 0) {
                if (mult_a_text.empty()) throw sbl::ParseError("derivgauss needs --A");
                std::stringstream ss(mult_kernel.substr(11));
                std::string tok;
                std::vector<std::size_t> idx;
                while (std::getline(ss, tok, ',')) idx.push_back(std::stoul(tok));
                if (idx.size() != 3) throw sbl::ParseError("kernel derivgauss:i,k1,k2");
                const sbl::RationalMatrix a = parse_field(mult_a_text, "A");
                fn = [a, idx, mult_d](const Eigen::VectorXd& xi) {
                    return sbl::deriv_gauss_multiplier(idx[0], idx[1], idx[2], a, mult_d, xi).real();
                };
            } else {
                throw sbl::ParseError("unknown multiplier '" + mult_kernel + "'");
            }

            std::ostringstream os;
            for (Eigen::Index k = 0; k < dim; ++k) os << "xi" << (k + 1) << ",";
            os << "value\n";
            for (std::size_t dir = 0; dir < directions; ++dir) {
                Eigen::VectorXd u(dim);
                for (Eigen::Index k = 0; k < dim; ++k)
                    u(k) = sbl::counter_normal(seed, dir + 1, static_cast<std::uint64_t>(k));
                if (u.norm() < 1e-12) continue;
                u.normalize();
                for (std::size_t ri = 0; ri < radii; ++ri) {
                    const double r =
                        r_min * std::pow(r_max / r_min,
                                         radii == 1 ? 0.0 : static_cast<double>(ri) / (radii - 1));
                    const Eigen::VectorXd xi = r * u;
                    for (Eigen::Index k = 0; k < dim; ++k) os << sbl::format_double(xi(k)) << ",";
                    os << sbl::format_double(fn(xi)) << "\n";
                }
            }
            emit(out_path, os.str());
            return kExitOk;
        }

        if (cmd_sym->parsed()) {
            const sbl::CubicalData data = load_instance(inst);
            require_unit_b(data);
            if (scale_text.empty() == permute_text.empty())
                throw sbl::ParseError("give exactly one of --scale or --permute");
            const sbl::FunctionAssignment tuple = parse_tuple(tuple_text, data, seed);
            const sbl::KernelSpec kernel = parse_kernel(kernel_text, data);

            sbl::SymmetryOp op;
            if (!scale_text.empty()) {
                sbl::ScaleSymmetry sc;
                std::stringstream ss(scale_text);
                std::string tok;
                while (ss >> tok) sc.diag.push_back(sbl::Rational::from_string(tok));
                op = std::move(sc);
            } else {
                sbl::PermuteSymmetry pm;
                std::stringstream ss(permute_text);
                std::size_t v;
                while (ss >> v) pm.perm.push_back(v);
                op = std::move(pm);
            }
            const sbl::SymmetryCheck chk = sbl::apply_symmetry(op, data, tuple, kernel);
            const double rel =
                std::abs(chk.lhs - chk.rhs) / std::max(1e-300, std::abs(chk.lhs));
            std::ostringstream os;
            os << "lhs: " << sbl::format_double(chk.lhs) << "\n";
            os << "rhs: " << sbl::format_double(chk.rhs) << "\n";
            os << "relative error: " << sbl::format_double(rel) << "\n";
            os << "transformed A: " << chk.transformed_data.A.str() << "\n";
            emit(out_path, os.str());
            return rel <= tolerance ? kExitOk : kExitSemantic;
        }
    } catch (const sbl::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sbl::ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sbl::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sbl::RouteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCantWrite;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
