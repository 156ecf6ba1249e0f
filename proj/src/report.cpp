#include "morava/report.hpp"

#include <sstream>

namespace morava {

ReportJson element_json(const CoeffElem& x) {
    ReportJson out;
    out["text"] = x.to_string();
    out["residues"] = x.coefficients();
    return out;
}

ReportJson row_json(const RowVector& v) {
    ReportJson out = ReportJson::array();
    for (const auto& c : v) out.push_back(c.to_string());
    return out;
}

ReportJson sigma_json(const SigmaElem& x) {
    ReportJson out;
    out["text"] = x.to_string();
    ReportJson coeffs = ReportJson::array();
    for (const auto& c : x.coefficients()) coeffs.push_back(c.to_string());
    out["z_coefficients"] = coeffs;
    return out;
}

ReportJson saturation_json(const SaturationReport& report) {
    ReportJson out;
    out["ring"] = report.spec.describe();
    out["modulus"] = report.spec.modulus().describe();
    out["loop_level"] = report.loop_level;
    out["mode"] = report.exhaustive ? "exhaustive" : "generators";

    ReportJson initial = ReportJson::array();
    for (const auto& g : report.initial) initial.push_back(g.to_string());
    out["initial"] = initial;

    ReportJson gens = ReportJson::array();
    for (const auto& g : report.ideal.minimal_generators()) gens.push_back(g.to_string());
    out["generators"] = gens;
    out["ideal"] = report.ideal.to_string();
    out["trivial"] = report.trivial;
    out["fixpoint"] = report.fixpoint;
    out["passes"] = report.passes;
    out["rule_applications"] = report.rule_applications;
    out["stop_reason"] = report.stop_reason;

    ReportJson trace = ReportJson::array();
    for (std::size_t i = 0; i < report.trace.size(); ++i) {
        const auto& t = report.trace[i];
        ReportJson step;
        step["step"] = i + 1;
        step["pass"] = t.pass;
        step["x"] = t.input.to_string();
        step["loop_level"] = t.loop_level;
        step["syzygy"] = row_json(t.syzygy);
        step["relation"] = t.relation.to_string();
        step["added"] = t.reduced.to_string();
        trace.push_back(step);
    }
    out["trace"] = trace;
    return out;
}

ReportJson presentation_check_json(const PresentationReport& report) {
    ReportJson checks = ReportJson::array();
    for (const auto& c : report.checks) {
        ReportJson item;
        item["check"] = c.name;
        item["passed"] = c.passed;
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(item);
    }
    ReportJson out;
    out["checks"] = checks;
    out["passed"] = report.passed();
    return out;
}

namespace {

std::string scalar_text(const ReportJson& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_flat(const ReportJson& v) {
    std::size_t width = 0;
    for (const auto& e : v) {
        if (!e.is_primitive()) return false;
        width += scalar_text(e).size() + 2;
    }
    return width <= 72;
}

void render(std::ostringstream& os, const ReportJson& value, int indent);

void render_entry(std::ostringstream& os, const std::string& label, const ReportJson& value, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (value.is_primitive()) {
        os << pad << label << ": " << scalar_text(value) << "\n";
    } else if (value.is_array() && is_flat(value)) {
        os << pad << label << ": [";
        bool first = true;
        for (const auto& e : value) {
            os << (first ? "" : ", ") << scalar_text(e);
            first = false;
        }
        os << "]\n";
    } else {
        os << pad << label << ":\n";
        render(os, value, indent + 2);
    }
}

void render(std::ostringstream& os, const ReportJson& value, int indent) {
    if (value.is_object()) {
        for (const auto& [key, v] : value.items()) render_entry(os, key, v, indent);
    } else if (value.is_array()) {
        std::size_t i = 0;
        for (const auto& e : value) render_entry(os, "- " + std::to_string(++i), e, indent);
    } else {
        os << std::string(static_cast<std::size_t>(indent), ' ') << scalar_text(value) << "\n";
    }
}

}  // namespace

std::string render_text(const ReportJson& report) {
    std::ostringstream os;
    render(os, report, 0);
    return os.str();
}

}  // namespace morava
