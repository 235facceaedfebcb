#include "radialop/report.hpp"

#include "radialop/derivation.hpp"
#include "radialop/parser.hpp"
#include "radialop/render.hpp"
#include "radialop/verifier.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace radialop::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

ordered_json operator_json(const RadialOperator& op) {
    ordered_json terms = ordered_json::object();
    for (const auto& [order, coeff] : op.terms()) {
        ordered_json by_exponent = ordered_json::object();
        for (const auto& [exponent, poly] : coeff.terms()) {
            std::vector<std::string> dense(static_cast<size_t>(poly.degree()) + 1, "0");
            for (const auto& [degree, q] : poly.terms())
                dense[static_cast<size_t>(degree)] = q.str();
            by_exponent[std::to_string(exponent)] = dense;
        }
        terms[std::to_string(order)] = std::move(by_exponent);
    }
    return {{"ascii", render(op)},
            {"latex", render(op, RenderStyle::latex)},
            {"terms", std::move(terms)}};
}

ordered_json record_json(const num::VerificationRecord& rec) {
    return {{"check", rec.check_name},
            {"n", rec.dimension},
            {"samples", rec.sample_count},
            {"max_abs_error", rec.max_abs_error},
            {"max_rel_error", rec.max_rel_error},
            {"tolerance", rec.tolerance},
            {"pass", rec.pass}};
}

// Metric diagonal and determinant as display strings, e.g. for n = 4:
// ["1", "r^2", "r^2*sin^2(theta_2)", "r^2*sin^2(theta_2)*sin^2(theta_1)"].
std::vector<std::string> metric_diagonal_strings(int n) {
    std::vector<std::string> diag = {"1"};
    std::string entry = "r^2";
    for (int j = 2; j <= n; ++j) {
        if (j >= 3)
            entry += "*sin^2(theta_" + std::to_string(n - j + 1) + ")";
        diag.push_back(entry);
    }
    return diag;
}

std::string metric_determinant_string(int n) {
    if (n == 1)
        return "1";
    std::string det = "r^" + std::to_string(2 * (n - 1));
    for (int i = n - 2; i >= 1; --i)
        det += "*sin^" + std::to_string(2 * i) + "(theta_" + std::to_string(i) + ")";
    return det;
}

std::string correction_term_string(const DerivationReport& report) {
    if (report.discrepancy.is_zero())
        return "0";
    const DimPoly& poly = report.correction_coefficient;
    if (!poly.is_constant()) {
        const Rational lead = poly.leading_coeff();
        if (lead == Rational(1, 4)) {
            if (auto factored = render_factored(poly * Rational(4)))
                return "hbar^2*" + *factored + "/(2*m*4*r^2)";
        }
        return "(" + report.correction_prefactor.str() + ") * (" + render(poly) + ") * r^-2";
    }
    const Prefactor combined = report.correction_prefactor * poly.coeff(0);
    return combined.str() + "*r^-2";
}

ordered_json derive_json(const DerivationReport& report) {
    const std::string dim_str =
        report.dimension ? report.dimension->str() : std::string("symbolic");
    const int metric_n = report.dimension
        ? static_cast<int>(report.dimension->num().convert_to<long long>())
        : 4;  // representative structure for the symbolic report

    ordered_json metric = {{"coordinates", "u = (r, theta_{n-2}, ..., theta_1, phi)"},
                           {"diagonal_structure",
                            "diag(1, r^2, r^2*sin^2(theta_{n-2}), ..., "
                            "r^2*sin^2(theta_{n-2})*...*sin^2(theta_1))"},
                           {"determinant_structure",
                            "r^(2*(n-1)) * sin^(2*(n-2))(theta_{n-2}) * ... * "
                            "sin^2(theta_1)"}};
    if (report.dimension) {
        metric["diagonal"] = metric_diagonal_strings(metric_n);
        metric["determinant"] = metric_determinant_string(metric_n);
    }

    const auto& steps = report.momentum_squared_steps;
    ordered_json sections = ordered_json::array();
    sections.push_back({{"name", "dimension"}, {"value", dim_str}});
    sections.push_back({{"name", "metric"}, {"summary", std::move(metric)}});
    sections.push_back(
        {{"name", "operators"},
         {"radial_laplacian", operator_json(report.radial_laplacian)},
         {"reduced_momentum", operator_json(report.reduced_momentum)},
         {"momentum_squared", operator_json(report.momentum_squared)},
         {"momentum_squared_intermediate",
          {{"second_derivative", operator_json(steps.second_derivative)},
           {"double_cross_term", operator_json(steps.double_cross_term)},
           {"commutator_term", operator_json(steps.commutator_term)},
           {"square_term", operator_json(steps.square_term)}}},
         {"discrepancy", operator_json(report.discrepancy)}});
    sections.push_back(
        {{"name", "physical_forms"},
         {"hamiltonian",
          "H = (" + report.hamiltonian_prefactor.str() + ") * ["
              + render(report.radial_laplacian) + "] + " + report.angular_term},
         {"radial_momentum",
          "P_r = (" + report.momentum_prefactor.str() + ") * ["
              + render(report.reduced_momentum) + "]"},
         {"momentum_squared",
          "P_r^2/(2*m) = (" + report.hamiltonian_prefactor.str() + ") * ["
              + render(report.momentum_squared) + "]"},
         {"correction_term", correction_term_string(report)},
         {"correction_prefactor", report.correction_prefactor.str()},
         {"correction_coefficient",
          {{"ascii", render(report.correction_coefficient)},
           {"factored",
            render_factored(report.correction_coefficient).value_or("")}}},
         {"angular_term", report.angular_term}});
    sections.push_back({{"name", "checks"},
                        {"momentum_adjoint_skew", report.momentum_adjoint_skew},
                        {"laplacian_self_adjoint", report.laplacian_self_adjoint},
                        {"discrepancy_vanishes", report.discrepancy_vanishes}});
    sections.push_back({{"name", "notes"}, {"lines", report.notes}});

    return {{"version", "1"},
            {"command", "derive"},
            {"inputs", {{"n", dim_str}}},
            {"sections", std::move(sections)},
            {"records", ordered_json::array()}};
}

void derive_text(const DerivationReport& report, std::ostream& out) {
    const std::string dim_str =
        report.dimension ? report.dimension->str() : std::string("symbolic");
    const auto& steps = report.momentum_squared_steps;
    out << "derivation report (n = " << dim_str << ")\n\n";
    out << "metric (coordinates u = (r, theta_{n-2}, ..., theta_1, phi)):\n";
    if (report.dimension) {
        const int n = static_cast<int>(report.dimension->num().convert_to<long long>());
        out << "  diagonal:    ";
        const auto diag = metric_diagonal_strings(n);
        for (size_t i = 0; i < diag.size(); ++i)
            out << (i ? ", " : "") << diag[i];
        out << "\n  determinant: " << metric_determinant_string(n) << "\n";
    } else {
        out << "  diagonal:    diag(1, r^2, r^2*sin^2(theta_{n-2}), ..., "
               "r^2*sin^2(theta_{n-2})*...*sin^2(theta_1))\n"
            << "  determinant: r^(2*(n-1)) * sin^(2*(n-2))(theta_{n-2}) * ... * "
               "sin^2(theta_1)\n";
    }
    out << "\noperators (reduced; prefactors carried separately):\n"
        << "  radial laplacian  (Delta)_r = " << render(report.radial_laplacian) << "\n"
        << "  reduced momentum  D_r       = " << render(report.reduced_momentum) << "\n"
        << "  momentum squared  D_r^2     = " << render(report.momentum_squared) << "\n"
        << "    intermediate:   [" << render(steps.second_derivative) << "] + ["
        << render(steps.double_cross_term) << "] + [" << render(steps.commutator_term)
        << "] + [" << render(steps.square_term) << "]\n"
        << "  discrepancy       (Delta)_r - D_r^2 = " << render(report.discrepancy)
        << "\n";
    out << "\nphysical forms:\n"
        << "  H = (" << report.hamiltonian_prefactor.str() << ") * ["
        << render(report.radial_laplacian) << "] + " << report.angular_term << "\n"
        << "  P_r = (" << report.momentum_prefactor.str() << ") * ["
        << render(report.reduced_momentum) << "]\n"
        << "  P_r^2/(2*m) = (" << report.hamiltonian_prefactor.str() << ") * ["
        << render(report.momentum_squared) << "]\n"
        << "  correction term: " << correction_term_string(report) << "\n";
    out << "\nchecks:\n"
        << "  adjoint(D_r) = -D_r:                 "
        << (report.momentum_adjoint_skew ? "yes" : "NO") << "\n"
        << "  adjoint((Delta)_r) = (Delta)_r:      "
        << (report.laplacian_self_adjoint ? "yes" : "NO") << "\n"
        << "  discrepancy vanishes:                "
        << (report.discrepancy_vanishes ? "yes" : "no") << "\n";
    out << "\nnotes:\n";
    for (const auto& note : report.notes)
        out << "  - " << note << "\n";
}

bool parse_range(const std::string& flag, int& n_min, int& n_max) {
    const auto parse_int = [](const std::string& s, int& value) {
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        if (s.size() > 3)
            return false;
        value = std::stoi(s);
        return true;
    };
    const auto dots = flag.find("..");
    if (dots == std::string::npos) {
        if (!parse_int(flag, n_min))
            return false;
        n_max = n_min;
    } else {
        if (!parse_int(flag.substr(0, dots), n_min)
            || !parse_int(flag.substr(dots + 2), n_max))
            return false;
    }
    return 1 <= n_min && n_min <= n_max && n_max <= 10;
}

}  // namespace

int cmd_derive(const std::string& dimension_flag, const std::string& format,
               std::ostream& out, std::ostream& err) {
    if (format != "text" && format != "json") {
        err << "error: --format must be 'text' or 'json'\n";
        return kExitUsage;
    }

    std::optional<Rational> dimension;
    if (dimension_flag != "symbolic") {
        // Positive integer only.
        bool ok = !dimension_flag.empty();
        for (char c : dimension_flag)
            ok = ok && std::isdigit(static_cast<unsigned char>(c));
        ok = ok && dimension_flag.size() <= 6;
        if (!ok || std::stoll(dimension_flag) < 1) {
            err << "error: --n must be 'symbolic' or a positive integer, got '"
                << dimension_flag << "'\n";
            return kExitUsage;
        }
        dimension = Rational(std::stoll(dimension_flag));
    }

    const DerivationReport report = run_derivation(dimension);
    if (format == "json")
        out << derive_json(report).dump(2) << "\n";
    else
        derive_text(report, out);
    return kExitOk;
}

int cmd_verify(const std::string& range_flag, const std::string& suite_flag,
               std::uint64_t seed, std::optional<double> tolerance_override,
               const std::string& format, std::ostream& out, std::ostream& err) {
    if (format != "text" && format != "json") {
        err << "error: --format must be 'text' or 'json'\n";
        return kExitUsage;
    }
    num::SuiteConfig config;
    if (!parse_range(range_flag, config.n_min, config.n_max)) {
        err << "error: --n must be an integer or range a..b with 1 <= a <= b <= 10, got '"
            << range_flag << "'\n";
        return kExitUsage;
    }
    if (tolerance_override && !(*tolerance_override > 0.0)) {
        err << "error: --tol must be positive\n";
        return kExitUsage;
    }
    config.seed = seed;
    config.tolerance_override = tolerance_override;

    std::vector<num::VerificationRecord> records;
    if (suite_flag == "laplacian")
        records = num::run_laplacian_suite(config);
    else if (suite_flag == "divergence")
        records = num::run_divergence_suite(config);
    else if (suite_flag == "directional")
        records = num::run_directional_suite(config);
    else if (suite_flag == "adjoint")
        records = num::run_adjoint_suite(config);
    else if (suite_flag == "metric")
        records = num::run_metric_suite(config);
    else if (suite_flag == "all")
        records = num::run_all_suites(config);
    else {
        err << "error: --suite must be one of laplacian, divergence, directional, "
               "adjoint, metric, all; got '"
            << suite_flag << "'\n";
        return kExitUsage;
    }

    bool all_pass = true;
    for (const auto& rec : records)
        all_pass = all_pass && rec.pass;

    if (format == "json") {
        ordered_json doc = {
            {"version", "1"},
            {"command", "verify"},
            {"inputs",
             {{"n", range_flag},
              {"suite", suite_flag},
              {"seed", seed},
              {"tolerance_override",
               tolerance_override ? ordered_json(*tolerance_override) : ordered_json()}}},
            {"sections", ordered_json::array()},
            {"records", ordered_json::array()}};
        for (const auto& rec : records)
            doc["records"].push_back(record_json(rec));
        doc["sections"].push_back(
            {{"name", "summary"},
             {"total", records.size()},
             {"passed", static_cast<size_t>(
                            std::count_if(records.begin(), records.end(),
                                          [](const auto& r) { return r.pass; }))},
             {"all_pass", all_pass}});
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& rec : records) {
            out << (rec.pass ? "[PASS] " : "[FAIL] ") << "n=" << rec.dimension << " "
                << rec.check_name << " samples=" << rec.sample_count
                << " max_abs=" << sci(rec.max_abs_error)
                << " max_rel=" << sci(rec.max_rel_error) << " tol=" << sci(rec.tolerance)
                << "\n";
        }
        out << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << " ("
            << records.size() << " records)\n";
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_eval(const std::string& expression, const std::optional<long long>& dimension,
             const std::string& format, std::ostream& out, std::ostream& err) {
    if (format != "text" && format != "json") {
        err << "error: --format must be 'text' or 'json'\n";
        return kExitUsage;
    }
    if (dimension && *dimension < 1) {
        err << "error: --n must be a positive integer\n";
        return kExitUsage;
    }

    RadialOperator op;
    try {
        op = lower(parse(expression));
    } catch (const ParseError& e) {
        err << format_parse_error(e, expression) << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::optional<RadialOperator> specialized;
    if (dimension)
        specialized = substitute_n(op, Rational(*dimension));

    if (format == "json") {
        ordered_json section = {{"name", "result"},
                                {"input", expression},
                                {"canonical", operator_json(op)}};
        if (specialized)
            section["specialized"] = operator_json(*specialized);
        ordered_json doc = {
            {"version", "1"},
            {"command", "eval"},
            {"inputs",
             {{"expression", expression},
              {"n", dimension ? ordered_json(*dimension) : ordered_json("symbolic")}}},
            {"sections", ordered_json::array({std::move(section)})},
            {"records", ordered_json::array()}};
        out << doc.dump(2) << "\n";
    } else {
        out << render(specialized ? *specialized : op) << "\n";
    }
    return kExitOk;
}

}  // namespace radialop::cli
