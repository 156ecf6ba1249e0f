#include "morava/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "morava/derive.hpp"
#include "morava/expr.hpp"
#include "morava/padic.hpp"
#include "morava/powerops.hpp"
#include "morava/presentation_io.hpp"
#include "morava/report.hpp"

namespace morava {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string residue_text(std::uint64_t residue, const PrimePowerModulus& m) {
    return std::to_string(residue) + " (mod " + m.describe() + ")";
}

void require_odd_prime(std::uint64_t p, const char* command) {
    if (!is_prime(p)) throw UsageError(std::string(command) + ": -p must be prime");
    if (p == 2) throw UsageError(std::string(command) + ": only odd primes are supported");
}

struct LogCheckArgs {
    std::uint64_t prime = 3;
    int n = 1;
    int precision = kDefaultPAdicPrecision;
};

int log_check(const LogCheckArgs& args, ReportJson& out) {
    require_odd_prime(args.prime, "log-check");
    if (args.n < 1) throw UsageError("log-check: -n must be at least 1");
    if (args.precision <= args.n) throw UsageError("log-check: --precision must exceed n");
    checked_prime_power(args.prime, args.precision);

    const std::uint64_t p = args.prime;
    const PAdicInt x(p, static_cast<std::int64_t>(checked_prime_power(p, args.n)) + 1, args.precision);
    const auto series = rezk_log_series(x);
    const auto val = valuation(series.value);
    const int expected = args.n - 1;

    const PrimePowerModulus mod_pn(p, args.n);
    const std::uint64_t r = series.value.residue() % mod_pn.value();
    const std::uint64_t p_nm1 = checked_prime_power(p, args.n - 1) % mod_pn.value();
    std::string sign = "neither";
    if (r == p_nm1) sign = "+p^(n-1)";
    else if (r == mod_pn.neg(p_nm1)) sign = "-p^(n-1)";

    const bool pass = val && *val == expected;
    out["scenario"] = "log-check";
    out["prime"] = p;
    out["n"] = args.n;
    out["precision"] = args.precision;
    out["x"] = x.to_string();
    out["log"] = series.value.to_string();
    out["series_terms"] = series.terms;
    out["valuation"] = val ? ReportJson(*val) : ReportJson("infinite");
    out["expected_valuation"] = expected;
    out["log_mod_p^n"] = residue_text(r, mod_pn);
    out["sign"] = sign;
    out["status"] = pass ? "pass" : "fail";
    return pass ? kExitPass : kExitFail;
}

struct HenselArgs {
    std::uint64_t prime = 3;
    int k = 2;
    std::int64_t b = 1;
    int precision = 10;
};

int hensel(const HenselArgs& args, ReportJson& out) {
    require_odd_prime(args.prime, "hensel");
    if (args.k < 1) throw UsageError("hensel: -k must be at least 1");
    if (args.precision < 1) throw UsageError("hensel: --precision must be positive");
    const std::uint64_t p = args.prime;
    const int digits = args.precision + args.k;
    checked_prime_power(p, digits);
    const PAdicInt b(p, args.b, args.precision);
    if (!b.is_unit()) throw UsageError("hensel: b must be prime to p");

    const PAdicInt c = hensel_unit_root(p, args.k, b, args.precision);
    // Independent check: raise 1 + p c to p^(k-1) and compare with 1 + b p^k.
    const PAdicInt lhs = unit_root_power(c, args.k, digits);
    const PrimePowerModulus wide(p, digits);
    const std::uint64_t rhs = wide.add(1, wide.mul(wide.reduce(args.b), checked_prime_power(p, args.k)));
    const bool verified = lhs.residue() == rhs;

    out["scenario"] = "hensel";
    out["prime"] = p;
    out["k"] = args.k;
    out["b"] = b.to_string();
    out["precision"] = args.precision;
    out["c"] = c.to_string();
    out["lhs"] = lhs.to_string();
    out["rhs"] = residue_text(rhs, wide);
    out["verified"] = verified;
    out["status"] = verified ? "pass" : "fail";
    return verified ? kExitPass : kExitFail;
}

struct PresentationArgs {
    std::string file;
    std::optional<int> precision;
    std::optional<int> truncation;
};

ETheoryPresentation load(const PresentationArgs& args) {
    std::filesystem::path path;
    try {
        path = resolve_presentation_path(args.file);
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
    return instantiate(load_presentation_file(path), args.precision, args.truncation);
}

struct CollapseArgs {
    PresentationArgs pres;
    std::string relations;
    int loop_level = 2;
    int max_passes = SaturationLimits{}.max_passes;
    std::size_t max_basis_rows = SaturationLimits{}.max_basis_rows;
    bool exhaustive = false;
    std::string expect = "any";
};

int collapse(const CollapseArgs& args, ReportJson& out) {
    if (args.loop_level < 2) throw UsageError("collapse: --loop-level must be at least 2");
    const auto pres = load(args.pres);
    std::vector<CoeffElem> initial;
    try {
        initial = parse_relation_list(pres.spec(), args.relations);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("collapse: ") + e.what());
    }
    for (const auto& g : initial)
        if (!g.in_maximal_ideal()) throw UsageError("collapse: relation " + g.to_string() + " is a unit");

    SaturationLimits limits;
    limits.max_passes = args.max_passes;
    limits.max_basis_rows = args.max_basis_rows;
    limits.exhaustive = args.exhaustive;
    const auto report = saturate(pres, args.loop_level, initial, limits);

    const bool fixpoint_ok = verify_fixpoint(pres, report);
    const bool trace_ok = verify_trace(pres, report);
    bool expectation_ok = true;
    if (args.expect == "trivial") expectation_ok = report.trivial;
    if (args.expect == "nontrivial") expectation_ok = !report.trivial;
    const bool pass = report.fixpoint && fixpoint_ok && trace_ok && expectation_ok;

    out["scenario"] = "collapse";
    out["presentation"] = pres.source.name;
    const ReportJson body = saturation_json(report);
    for (const auto& [key, value] : body.items()) out[key] = value;
    out["fixpoint_verified"] = fixpoint_ok;
    out["trace_verified"] = trace_ok;
    out["expect"] = args.expect;
    out["status"] = pass ? "pass" : (report.fixpoint ? "fail" : "incomplete");
    return pass ? kExitPass : kExitFail;
}

int check_presentation_cmd(const PresentationArgs& args, ReportJson& out) {
    const auto pres = load(args);
    const auto report = check_presentation(pres);
    out["scenario"] = "check-presentation";
    out["presentation"] = pres.source.name;
    out["ring"] = pres.spec().describe();
    out["height"] = pres.height;
    const ReportJson checks = presentation_check_json(report);
    for (const auto& [key, value] : checks.items()) out[key] = value;
    out["status"] = report.passed() ? "pass" : "fail";
    return report.passed() ? kExitPass : kExitFail;
}

struct TablesArgs {
    PresentationArgs pres;
    int max_power = 9;
    std::vector<int> shifts;
    std::string elements;
};

int tables(const TablesArgs& args, ReportJson& out) {
    const auto pres = load(args.pres);
    if (args.max_power < 1) throw UsageError("tables: --max-power must be positive");
    out["scenario"] = "tables";
    out["presentation"] = pres.source.name;
    out["ring"] = pres.spec().describe();
    out["f"] = format_z_polynomial(pres.printed_f);

    ReportJson powers;
    for (int k = 1; k <= args.max_power; ++k) powers["z^" + std::to_string(k)] = reduce_z_power(pres, k).to_string();
    out["z_powers"] = powers;

    std::vector<int> shifts = args.shifts;
    if (shifts.empty()) shifts = {1, 2, 3};
    ReportJson windows;
    for (int m : shifts) {
        if (m < 0) throw UsageError("tables: shifts must be non-negative");
        const auto matrix = window_matrix(pres, m);
        ReportJson rows = ReportJson::array();
        for (int i = 1; i <= matrix.rank(); ++i) {
            ReportJson row = ReportJson::array();
            for (int j = 1; j <= matrix.rank(); ++j) row.push_back(matrix(i, j).to_string());
            rows.push_back(row);
        }
        ReportJson entry;
        entry["rows"] = rows;
        ReportJson dual = ReportJson::array();
        std::istringstream lines(matrix.describe_dual_map());
        for (std::string line; std::getline(lines, line);) dual.push_back(line);
        entry["dual_map"] = dual;
        windows["shift " + std::to_string(m)] = entry;
    }
    out["windows"] = windows;

    if (!args.elements.empty()) {
        std::vector<CoeffElem> xs;
        try {
            xs = parse_relation_list(pres.spec(), args.elements);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("tables: ") + e.what());
        }
        const PowerOperation power(pres);
        ReportJson ops = ReportJson::array();
        for (const auto& x : xs) {
            ReportJson item;
            item["x"] = x.to_string();
            item["P(x)"] = power(x).to_string();
            item["tr(x)"] = power.transfer(x).to_string();
            if (x.in_maximal_ideal()) {
                ReportJson pbar = ReportJson::array();
                for (const auto& c : power.pbar_coeffs(x)) pbar.push_back(c.to_string());
                item["pbar"] = pbar;
            }
            ops.push_back(item);
        }
        out["power_operations"] = ops;
    }
    out["status"] = "pass";
    return kExitPass;
}

void add_presentation_options(CLI::App* cmd, PresentationArgs& args) {
    cmd->add_option("--precision", args.precision, "work modulo p^N (default: from file)")->check(CLI::Range(1, 62));
    cmd->add_option("--truncation", args.truncation, "work modulo a^K (default: from file)")->check(CLI::Range(1, 64));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Power-operation relation calculator", "morava"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "print the report as JSON");
    app.fallthrough();

    LogCheckArgs log_args;
    auto* log_cmd = app.add_subcommand("log-check", "valuation of the Rezk logarithm of 1 + p^n");
    log_cmd->add_option("-p,--prime", log_args.prime, "odd prime")->required();
    log_cmd->add_option("-n", log_args.n, "exponent n")->required();
    log_cmd->add_option("--precision", log_args.precision, "p-adic digits")->capture_default_str();

    HenselArgs hensel_args;
    auto* hensel_cmd = app.add_subcommand("hensel", "solve (1 + p c)^(p^(k-1)) = 1 + b p^k");
    hensel_cmd->add_option("-p,--prime", hensel_args.prime, "odd prime")->required();
    hensel_cmd->add_option("-k", hensel_args.k, "level k")->required();
    hensel_cmd->add_option("-b", hensel_args.b, "unit b")->required();
    hensel_cmd->add_option("--precision", hensel_args.precision, "p-adic digits of c")->capture_default_str();

    CollapseArgs collapse_args;
    auto* collapse_cmd = app.add_subcommand("collapse", "saturate relations under the power-operation rule");
    collapse_cmd->add_option("--etheory", collapse_args.pres.file, "presentation file")->required();
    collapse_cmd->add_option("--relations", collapse_args.relations, "comma-separated initial relations")->required();
    collapse_cmd->add_option("--loop-level", collapse_args.loop_level, "loop level n")->required();
    add_presentation_options(collapse_cmd, collapse_args.pres);
    collapse_cmd->add_option("--max-passes", collapse_args.max_passes)->check(CLI::PositiveNumber)->capture_default_str();
    collapse_cmd->add_option("--max-basis-rows", collapse_args.max_basis_rows)->check(CLI::PositiveNumber)->capture_default_str();
    collapse_cmd->add_flag("--exhaustive", collapse_args.exhaustive, "also feed every basis element to the rule");
    collapse_cmd->add_option("--expect", collapse_args.expect, "claim to assert")
        ->check(CLI::IsMember({"any", "trivial", "nontrivial"}))
        ->capture_default_str();

    PresentationArgs check_args;
    auto* check_cmd = app.add_subcommand("check-presentation", "validate a presentation file");
    check_cmd->add_option("file", check_args.file, "presentation file")->required();
    add_presentation_options(check_cmd, check_args);

    TablesArgs table_args;
    auto* tables_cmd = app.add_subcommand("tables", "z-power reductions and window matrices");
    tables_cmd->add_option("--etheory", table_args.pres.file, "presentation file")->required();
    add_presentation_options(tables_cmd, table_args.pres);
    tables_cmd->add_option("--max-power", table_args.max_power)->capture_default_str();
    tables_cmd->add_option("--shift", table_args.shifts, "window shifts (default 1 2 3)");
    tables_cmd->add_option("--power-of", table_args.elements, "comma-separated elements to apply P to");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    ReportJson report;
    int status = kExitPass;
    try {
        if (*log_cmd) status = log_check(log_args, report);
        else if (*hensel_cmd) status = hensel(hensel_args, report);
        else if (*collapse_cmd) status = collapse(collapse_args, report);
        else if (*check_cmd) status = check_presentation_cmd(check_args, report);
        else if (*tables_cmd) status = tables(table_args, report);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << "\n";
        return kExitFail;
    }

    out << (json ? report.dump(2) + "\n" : render_text(report));
    return status;
}

}  // namespace morava
