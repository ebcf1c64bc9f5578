/*
   Copyright 2026 The layerpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "layerpoly/cli.hpp"

#include "layerpoly/dirichlet.hpp"
#include "layerpoly/error.hpp"
#include "layerpoly/format.hpp"
#include "layerpoly/mixed.hpp"
#include "layerpoly/numcheck.hpp"
#include "layerpoly/parse.hpp"
#include "layerpoly/problem_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace layerpoly::cli {

namespace {

enum class Format { Plain, Latex, Json };

Format parse_format(const std::string& s) {
    if (s == "plain") return Format::Plain;
    if (s == "latex") return Format::Latex;
    if (s == "json") return Format::Json;
    throw std::invalid_argument("unknown output format '" + s + "' (expected plain, latex or json)");
}

std::string default_format() {
    const char* env = std::getenv(kOutputEnv);
    return env != nullptr && *env != '\0' ? std::string(env) : std::string("plain");
}

struct ProblemArgs {
    std::string file;
    ProblemSpec spec;
};

void add_problem_options(CLI::App& cmd, ProblemArgs& args) {
    cmd.add_option("--problem", args.file, "JSON problem file");
    cmd.add_option("--dim", args.spec.n, "spatial dimension n");
    cmd.add_option("--width", args.spec.width, "layer width a (rational literal)");
    cmd.add_option("--kind", args.spec.kind, "dirichlet | mixed");
    cmd.add_option("--rhs", args.spec.rhs, "right-hand side P(x, y)");
    cmd.add_option("--lower", args.spec.lower, "value at y = 0");
    cmd.add_option("--upper", args.spec.upper, "value (dirichlet) or normal derivative (mixed) at y = a");
}

LayerProblem load_problem(const ProblemArgs& args) {
    if (args.file.empty()) return to_problem(args.spec);
    std::ifstream in(args.file);
    if (!in) throw std::invalid_argument("cannot open problem file '" + args.file + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("problem file '" + args.file + "' is not valid JSON: " + e.what());
    }
    return to_problem(problem_spec_from_json(j));
}

int print_report(const SolutionReport& report, const LayerProblem& problem, Format format, std::ostream& out) {
    const Vars vars = problem.vars();
    switch (format) {
    case Format::Plain:
        out << "u = " << to_text(report.u, vars) << '\n'
            << "residual_pde = " << to_text(report.residual_pde, vars) << '\n'
            << "residual_lower = " << to_text(report.residual_lower, vars) << '\n'
            << "residual_upper = " << to_text(report.residual_upper, vars) << '\n'
            << "verified = " << (report.verified ? "true" : "false") << '\n';
        break;
    case Format::Latex:
        out << "u(x,y) = " << to_latex(report.u, vars) << '\n'
            << "% verified: " << (report.verified ? "true" : "false") << '\n';
        break;
    case Format::Json:
        out << report_to_json(report, problem).dump(2) << '\n';
        break;
    }
    return report.verified ? kOk : kFailed;
}

struct TableArgs {
    std::string family = "f";
    std::size_t max_m = 5;
    std::string width;  // empty: formal symbol a
};

struct TableRow {
    std::string label;
    Poly poly;
};

int print_tables(const TableArgs& args, Format format, std::ostream& out) {
    const Width width = args.width.empty() ? Width::formal() : Width::value(Rational::parse(args.width));
    std::vector<TableRow> rows;
    Vars vars;
    const auto& f = args.family;
    const bool series = f == "c" || f == "f" || f == "p" || f == "q";
    if (series) {
        vars = width.layout(0);
        const CoeffTable c = f == "c" ? c_coeffs(args.max_m, width) : CoeffTable{width, {}};
        for (std::size_t m = 0; m <= args.max_m; ++m) {
            const std::string idx = std::to_string(2 * m);
            if (f == "c") rows.push_back({"c_" + idx, c.entries[m]});
            if (f == "f") rows.push_back({"f_" + idx, f_poly(m, width)});
            if (f == "p") rows.push_back({"p_" + idx, p_poly(m, width)});
            if (f == "q") rows.push_back({"q_" + idx, q_poly(m, width)});
        }
    } else if (f == "u" || f == "v" || f == "mixed-u" || f == "mixed-v") {
        vars = width.layout(1);
        for (std::size_t k = 0; k <= args.max_m; ++k) {
            const MultiIndex idx{static_cast<int>(k)};
            const std::string name = (f == "u" || f == "mixed-u" ? "u_" : "v_") + std::to_string(k);
            if (f == "u") rows.push_back({name, basis_u(idx, 1, width)});
            if (f == "v") rows.push_back({name, basis_v(idx, 1, width)});
            if (f == "mixed-u") rows.push_back({name, mixed_basis_u(idx, 1, width)});
            if (f == "mixed-v") rows.push_back({name, mixed_basis_v(idx, 1, width)});
        }
    } else {
        throw std::invalid_argument("unknown family '" + f + "' (expected c, f, p, q, u, v, mixed-u, mixed-v)");
    }

    const std::string args_list = series ? "(y)" : "(x,y)";
    switch (format) {
    case Format::Plain:
        for (const auto& r : rows) out << r.label << args_list << " = " << to_text(r.poly, vars) << '\n';
        break;
    case Format::Latex:
        for (const auto& r : rows) {
            const auto us = r.label.find('_');
            out << r.label.substr(0, us) << "_{" << r.label.substr(us + 1) << "}" << args_list << " = "
                << to_latex(r.poly, vars) << " \\\\\n";
        }
        break;
    case Format::Json: {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& r : rows) {
            entries.push_back({{"name", r.label}, {"text", to_text(r.poly, vars)}, {"latex", to_latex(r.poly, vars)},
                               {"terms", to_json(r.poly, vars)}});
        }
        out << nlohmann::json{{"family", f},
                              {"width", width.is_formal() ? std::string("a") : width.rational().to_string()},
                              {"entries", entries}}
                   .dump(2)
            << '\n';
        break;
    }
    }
    return kOk;
}

int print_numcheck(Format format, std::ostream& out) {
    const auto results = numcheck::run_all();
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    if (format == Format::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : results) {
            rows.push_back({{"name", r.name},
                            {"samples", r.samples},
                            {"max_error", r.max_error},
                            {"tolerance", r.tolerance},
                            {"relative", r.relative},
                            {"passed", r.passed}});
        }
        out << nlohmann::json{{"checks", rows}, {"passed", all}}.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            std::ostringstream line;
            line << (r.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(44) << r.name << " n=" << std::setw(3)
                 << r.samples << " err=" << std::scientific << std::setprecision(2) << r.max_error
                 << (r.relative ? " (rel)" : " (abs)") << " tol=" << r.tolerance;
            out << line.str() << '\n';
        }
        out << (all ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all ? kOk : kFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact polynomial solutions of the Poisson equation in a layer", "layerpoly"};
    app.require_subcommand(1);
    std::string format_name = default_format();
    app.add_option("--output", format_name, "plain | latex | json")->envname(kOutputEnv);

    ProblemArgs solve_args;
    std::string particular = "y";
    auto* solve_cmd = app.add_subcommand("solve", "solve a layer problem and certify the result");
    add_problem_options(*solve_cmd, solve_args);
    solve_cmd->add_option("--particular", particular, "y (general) | x (n = 1 only): particular-solution formula");
    solve_cmd->add_option("--output", format_name, "plain | latex | json");

    ProblemArgs verify_args;
    std::string solution;
    auto* verify_cmd = app.add_subcommand("verify", "check a candidate solution exactly");
    add_problem_options(*verify_cmd, verify_args);
    verify_cmd->add_option("--solution", solution, "candidate u(x, y)")->required();
    verify_cmd->add_option("--output", format_name, "plain | latex | json");

    TableArgs table_args;
    auto* tables_cmd = app.add_subcommand("tables", "print generated polynomial families");
    tables_cmd->add_option("--family", table_args.family, "c | f | p | q | u | v | mixed-u | mixed-v");
    tables_cmd->add_option("--max-m", table_args.max_m, "largest index m (or k for basis families)");
    tables_cmd->add_option("--width", table_args.width, "concrete width; default keeps the symbol a");
    tables_cmd->add_option("--output", format_name, "plain | latex | json");

    auto* numcheck_cmd = app.add_subcommand("numcheck", "floating-point cross-checks against kernel integrals");
    numcheck_cmd->add_option("--output", format_name, "plain | json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        const Format format = parse_format(format_name);
        if (solve_cmd->parsed()) {
            const LayerProblem problem = load_problem(solve_args);
            ParticularForm form = ParticularForm::IntegrateY;
            if (particular == "x") {
                form = ParticularForm::IntegrateX;
            } else if (particular != "y") {
                throw std::invalid_argument("--particular must be x or y");
            }
            const SolutionReport report = solve(problem, form);
            const int status = print_report(report, problem, format, out);
            if (status != kOk) err << "layerpoly: internal error: solution failed exact verification\n";
            return status;
        }
        if (verify_cmd->parsed()) {
            const LayerProblem problem = load_problem(verify_args);
            const Poly u = parse_poly(solution, problem.vars());
            return print_report(verify(u, problem), problem, format, out);
        }
        if (tables_cmd->parsed()) return print_tables(table_args, format, out);
        if (numcheck_cmd->parsed()) {
            if (format == Format::Latex) throw std::invalid_argument("numcheck supports plain and json output");
            return print_numcheck(format, out);
        }
    } catch (const QuadratureError& e) {
        err << "layerpoly: " << e.what() << '\n';
        return kFailed;
    } catch (const std::exception& e) {
        err << "layerpoly: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace layerpoly::cli
