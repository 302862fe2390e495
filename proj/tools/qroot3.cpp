// qroot3: evaluate expressions, print tables, run verification suites, export JSON.
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qroot3/expr.hpp"
#include "qroot3/json_io.hpp"
#include "qroot3/rmatrix.hpp"
#include "qroot3/suites.hpp"
#include "qroot3/tables.hpp"

using namespace qroot3;

namespace {

constexpr int kUsage = 2;

int cmd_eval(const std::string& algebra, const std::string& src, const std::string& in, bool json) {
    expr::Context ctx = expr::Context::M;
    CycVector v;
    if (!in.empty()) {
        std::ifstream f(in);
        if (!f) {
            std::cerr << "cannot read " << in << "\n";
            return kUsage;
        }
        v = json_io::element_from_json(json_io::Json::parse(f), &ctx);
    } else {
        if (src.empty()) {
            std::cerr << "eval needs an expression or --import FILE\n";
            return kUsage;
        }
        ctx = expr::context_from_name(algebra);
        v = expr::parse(src, ctx);
    }
    if (json)
        std::cout << json_io::element_to_json(v, ctx).dump(2) << "\n";
    else
        std::cout << expr::format(v, ctx) << "\n";
    return 0;
}

int cmd_table(const std::string& name, bool json) {
    tables::Table t = tables::build(name);
    if (json)
        std::cout << tables::render_json(t).dump(2) << "\n";
    else
        std::cout << tables::render_text(t);
    return t.all_match() ? 0 : 1;
}

int cmd_verify(const std::string& suite, bool quiet) {
    if (suite == "rmatrix" && !quiet) std::cout << "R = " << rmatrix::format_hh(rmatrix::universal_r()) << "\n\n";
    std::vector<Report> reports = suites::run(suite);
    int checks = 0, failures = 0, xfail = 0;
    for (const auto& r : reports) {
        if (!quiet) std::cout << format_report(r) << "\n";
        checks += static_cast<int>(r.checks.size());
        failures += r.failures();
        for (const auto& c : r.checks) xfail += c.xfail ? 1 : 0;
    }
    std::cout << (failures == 0 ? "PASS" : "FAIL") << " " << suite << ": " << checks << " checks, " << failures
              << " failures, " << xfail << " expected failures\n";
    return failures == 0 ? 0 : 1;
}

int cmd_export(const std::string& what, const std::string& out) {
    json_io::Json j;
    if (what.rfind("table:", 0) == 0) {
        j = tables::render_json(tables::build(what.substr(6)));
    } else if (what.rfind("element:", 0) == 0) {
        // element:ALG:expression
        const std::string rest = what.substr(8);
        const size_t colon = rest.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("expected element:ALG:expression");
        const expr::Context ctx = expr::context_from_name(rest.substr(0, colon));
        j = json_io::element_to_json(expr::parse(rest.substr(colon + 1), ctx), ctx);
    } else if (what == "rmatrix") {
        const rmatrix::TensorHH R = rmatrix::universal_r();
        j["algebra"] = "H(x)H";
        json_io::Json coeffs = json_io::Json::array();
        for (Eigen::Index i = 0; i < R.size(); ++i) coeffs.push_back(json_io::to_json(R(i)));
        j["coeffs"] = coeffs;
    } else {
        throw std::invalid_argument("unknown export '" + what + "' (table:NAME, element:ALG:EXPR or rmatrix)");
    }
    const std::string text = j.dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out);
    if (!f || !(f << text)) {
        std::cerr << "cannot write " << out << "\n";
        return kUsage;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on the reduced quantum plane at a cube root of unity"};
    app.require_subcommand(1);

    std::string algebra = "M", src, in;
    bool eval_json = false;
    auto* eval = app.add_subcommand("eval", "evaluate an expression to normal form");
    eval->add_option("--algebra,-a", algebra, "M, F, H or WZ")->check(CLI::IsMember({"M", "F", "H", "WZ"}));
    eval->add_option("expression", src, "e.g. \"y x\"");
    eval->add_option("--import", in, "read an element from a JSON file instead");
    eval->add_flag("--json", eval_json, "print the element as JSON");

    std::string table_name;
    bool table_json = false;
    auto* table = app.add_subcommand("table", "reproduce a table");
    table->add_option("name", table_name)->required()->check(CLI::IsMember(tables::names()));
    table->add_flag("--json", table_json);

    std::string suite;
    bool quiet = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites::names()));
    verify->add_flag("--quiet,-q", quiet, "only print the summary line");

    std::string what, out;
    auto* exp = app.add_subcommand("export", "write JSON");
    exp->add_option("--what", what, "table:NAME, element:ALG:EXPR or rmatrix")->required();
    exp->add_option("--out", out, "output file, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*eval) return cmd_eval(algebra, src, in, eval_json);
        if (*table) return cmd_table(table_name, table_json);
        if (*verify) return cmd_verify(suite, quiet);
        if (*exp) return cmd_export(what, out);
    } catch (const expr::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad JSON: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
