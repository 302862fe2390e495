#include "qroot3/suites.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qroot3/diffops.hpp"
#include "qroot3/gauge.hpp"
#include "qroot3/repmod.hpp"
#include "qroot3/rmatrix.hpp"

namespace qroot3::suites {

namespace {

bool has(const std::string& s, const std::string& sub) { return s.find(sub) != std::string::npos; }

bool is_hopf(const std::string& n) {
    return n.rfind("F: ", 0) == 0 || n.rfind("H: ", 0) == 0 || has(n, "corrupted") || has(n, "pairing");
}

bool is_star(const std::string& n) { return has(n, "star") || has(n, "*"); }

Report filtered(const Report& r, const std::function<bool(const std::string&)>& keep) {
    Report out;
    out.title = r.title;
    for (const auto& c : r.checks)
        if (keep(c.name)) out.checks.push_back(c);
    return out;
}

// the algebra-level modules, each computed once
const std::vector<Report>& core() {
    static const std::vector<Report> r = {qplane::verify(), fun_f::verify(), env_h::verify()};
    return r;
}

std::vector<Report> view(const std::function<bool(const std::string&)>& keep) {
    std::vector<Report> out;
    for (const auto& r : core()) {
        Report f = filtered(r, keep);
        if (!f.checks.empty()) out.push_back(f);
    }
    return out;
}

}  // namespace

const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {"hopf", "actions", "stars", "metrics", "wz",
                                               "gauge", "diffops", "rmatrix", "all"};
    return n;
}

std::vector<Report> run(const std::string& suite) {
    if (suite == "hopf") return view(is_hopf);
    if (suite == "actions") return view([](const std::string& n) { return !is_hopf(n) && !is_star(n); });
    if (suite == "stars") {
        std::vector<Report> out = view(is_star);
        out.push_back(wz_forms::star_checks());
        return out;
    }
    if (suite == "metrics") return {repmod::verify()};
    if (suite == "wz") return {wz_forms::verify()};
    if (suite == "gauge") return {gauge::verify()};
    if (suite == "diffops") return {diffops::verify()};
    if (suite == "rmatrix") return {rmatrix::verify()};
    if (suite == "all") {
        std::vector<Report> out = core();
        for (auto* f : {&repmod::verify, &wz_forms::verify, &gauge::verify, &diffops::verify, &rmatrix::verify})
            out.push_back(f());
        return out;
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

bool all_ok(const std::vector<Report>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
}

}  // namespace qroot3::suites
