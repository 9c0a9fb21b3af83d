#include "sbl/report.hpp"

#include <cstdio>
#include <sstream>

#include "sbl/errors.hpp"

namespace sbl {

ReportFormat parse_format(const std::string& s) {
    if (s == "text") return ReportFormat::Text;
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    throw ParseError("unknown format '" + s + "' (expected text, json or csv)");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::ordered_json feasibility_to_json(const FeasibilityReport& rep) {
    nlohmann::ordered_json j;
    j["m"] = rep.m;
    j["d"] = rep.d;
    j["feasible"] = rep.feasible();
    j["condition1"] = rep.condition1;
    j["condition2"] = rep.condition2;
    nlohmann::ordered_json dets;
    for (const auto& [c, det] : rep.corner_dets) dets[c.str()] = det.str();
    j["corner_dets"] = std::move(dets);
    nlohmann::ordered_json ranks;
    for (const auto& [c, r] : rep.kernel_ranks) ranks[c.str()] = r;
    j["kernel_ranks"] = std::move(ranks);
    j["epsilon_star"] = rep.epsilon_star;
    j["bcct_equality_at_kernel"] = rep.bcct_equality_at_kernel;
    if (rep.witness_corner)
        j["witness_corner"] = rep.witness_corner->str();
    else
        j["witness_corner"] = nullptr;
    return j;
}

std::string feasibility_to_text(const FeasibilityReport& rep) {
    std::ostringstream os;
    os << "instance m=" << rep.m << " d=" << rep.d << "\n";
    os << "verdict: " << (rep.feasible() ? "feasible" : "infeasible") << "\n";
    os << "condition1 (injective on kernel): " << (rep.condition1 ? "yes" : "no") << "\n";
    os << "condition2 (corner determinants): " << (rep.condition2 ? "yes" : "no") << "\n";
    for (const auto& [c, det] : rep.corner_dets) {
        os << "  corner " << c.str() << ": det = " << det.str()
           << ", rank on kernel = " << rep.kernel_ranks.at(c) << "\n";
    }
    os << "epsilon_star: " << format_double(rep.epsilon_star) << "\n";
    os << "equality at V = ker Pi: " << (rep.bcct_equality_at_kernel ? "yes" : "no") << "\n";
    if (rep.witness_corner) os << "witness corner: " << rep.witness_corner->str() << "\n";
    return os.str();
}

nlohmann::ordered_json form_result_to_json(const FormResult& r) {
    nlohmann::ordered_json j;
    j["value"] = r.value;
    j["method"] = r.method == EvalMethod::ExactGaussian ? "exact-gaussian" : "monte-carlo";
    j["std_error"] = r.std_error;
    j["evaluations"] = r.evaluations;
    if (r.method == EvalMethod::MonteCarlo) j["seed"] = r.seed;
    return j;
}

std::string sweep_to_csv(const SweepResult& r) {
    std::ostringstream os;
    os << "T,value,ratio\n";
    for (const auto& p : r.points)
        os << format_double(p.T) << "," << format_double(p.result.value) << ","
           << format_double(p.ratio) << "\n";
    return os.str();
}

nlohmann::ordered_json sweep_to_json(const SweepResult& r) {
    nlohmann::ordered_json j;
    j["feasible"] = r.feasible;
    j["norm_product"] = r.norm_product;
    j["dirac_value"] = r.dirac_value;
    j["dirac_ratio"] = r.dirac_ratio;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& p : r.points) {
        nlohmann::ordered_json e;
        e["T"] = p.T;
        e["value"] = p.result.value;
        e["ratio"] = p.ratio;
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    return j;
}

std::string blowup_to_csv(const BlowupResult& r) {
    std::ostringstream os;
    os << "parameter,value,std_error,ratio\n";
    for (const auto& p : r.points)
        os << format_double(p.R) << "," << format_double(p.form.value) << ","
           << format_double(p.form.std_error) << "," << format_double(p.ratio) << "\n";
    return os.str();
}

nlohmann::ordered_json blowup_to_json(const BlowupResult& r) {
    nlohmann::ordered_json j;
    j["slope"] = r.slope;
    j["predicted_gap"] = r.predicted_gap.str();
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& p : r.points) {
        nlohmann::ordered_json e;
        e["R"] = p.R;
        e["ratio"] = p.ratio;
        e["value"] = p.form.value;
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    return j;
}

} // namespace sbl
