// One line per acceptance criterion. Exit status is nonzero on any failure that is not
// one of the documented deviations, and on a documented deviation that unexpectedly passes.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "qroot3/diffops.hpp"
#include "qroot3/expr.hpp"
#include "qroot3/gauge.hpp"
#include "qroot3/repmod.hpp"
#include "qroot3/rmatrix.hpp"
#include "qroot3/suites.hpp"
#include "qroot3/tables.hpp"

using namespace qroot3;

namespace {

const Check* find(const Report& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool holds(const Report& r, const std::string& name) {
    const Check* c = find(r, name);
    return c && c->pass;
}

std::string first_failure(const std::vector<Report>& rs) {
    for (const auto& r : rs)
        for (const auto& c : r.checks)
            if (!c.ok()) return c.name + (c.witness.empty() ? "" : " [" + c.witness + "]");
    return {};
}

bool ok(const std::vector<Report>& rs) { return suites::all_ok(rs); }

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

struct Line {
    int id;
    std::string text;
    bool pass;
    std::string note;
};

}  // namespace

int main(int argc, char** argv) {
    const std::string golden = argc > 1 ? argv[1] : "tests/golden";
    const auto t0 = std::chrono::steady_clock::now();

    // each module report is computed once
    const Report qp = qplane::verify(), ff = fun_f::verify(), eh = env_h::verify();
    const Report reps = repmod::verify_reps(), metrics = repmod::verify_metrics(), lattice = repmod::verify_lattice(),
                 tensor = repmod::verify_tensor(), mrep = repmod::verify_m();
    const Report manin = wz_forms::manin_check(), wzs = wz_forms::structure_checks(),
                 wza = wz_forms::action_tables(), wzd = wz_forms::d_tables(), wzstar = wz_forms::star_checks(),
                 wzh = wz_forms::h_decomposition_of_forms(), wzp = wz_forms::rep_product_tables();
    const Report gg = gauge::verify(), dops = diffops::verify(), rm = rmatrix::verify();
    const std::vector<Report> all = {qp, ff, eh, reps, metrics, lattice, tensor, mrep, manin, wzs,
                                     wza, wzd, wzstar, wzh, wzp, gg, dops, rm};
    const double verify_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::vector<Line> lines;
    auto add = [&](int id, const std::string& text, bool pass, const std::string& note = {}) {
        lines.push_back({id, text, pass, note});
    };

    {
        std::vector<Report> h = suites::run("hopf");
        add(1, "Hopf axioms for F and H; corrupted coproduct rejected with a witness",
            ok(h) && holds(ff, "corrupted Delta(a) = a(x)a is rejected with a witness"), first_failure(h));
    }
    {
        tables::Table p = tables::build("pairing");
        add(2, "pairing matrix has rank 27; generator pairing table",
            holds(eh, "pairing matrix has rank 27") && p.all_match() && p.rows.size() == 12);
    }
    {
        tables::Table a = tables::build("actions");
        std::vector<Report> act = suites::run("actions");
        bool rel = true;
        for (const auto& c : eh.checks)
            if (c.name.rfind("H^L on M", 0) == 0 || c.name.rfind("H^R on M", 0) == 0) rel = rel && c.ok();
        for (const auto& c : ff.checks)
            if (c.name.find("coaction: ") != std::string::npos) rel = rel && c.ok();
        add(3, "54 action entries; module-algebra and comodule-algebra axioms; operator relations on M",
            a.rows.size() == 54 && a.all_match() && ok(act) && rel && env_h::commutation_with_coordinates().ok(),
            first_failure(act));
    }
    {
        std::vector<Report> st = suites::run("stars");
        add(4, "stars on M, F, H: involution, antimultiplicativity, coproduct, S*S* = id, duality, covariance",
            ok(st), first_failure(st));
    }
    add(5, "invariant form on M: entries, block form, trace formula, inertia (5,4)", mrep.ok(),
        first_failure({mrep}));
    add(6, "invariant metrics: parameter counts, shapes and signatures of the nine representations", metrics.ok(),
        first_failure({metrics}));
    add(7, "form complex: dimensions, d^2 = 0, Leibniz, closed-form dm, cohomology, Euler characteristic, d*",
        wzs.ok() && wzd.ok() && wzstar.ok() && manin.ok(), first_failure({wzs, wzd, wzstar, manin}));
    add(8, "H on one-forms: the three decompositions with the printed bases; dx dy invariant",
        wzh.ok() && wza.ok() && wzp.ok(), first_failure({wzh, wza, wzp}));
    add(9, "gauge: hermitian 3e curvature, covariance for 20 random u, the five classification statements", gg.ok(),
        first_failure({gg}));
    add(10, "radicals 4 and 5, PIM quotients 3, 2, 1, twelve tensor products with the separation certificate",
        lattice.ok() && tensor.ok() && reps.ok(), first_failure({lattice, tensor, reps}));
    add(11, "differential operators: relations, rank 81, X+, X-, K, K- as polynomial and scaling forms", dops.ok(),
        first_failure({dops}));
    {
        const rmatrix::Normalization& n = rmatrix::normalization();
        std::string note;
        if (n.found && !(n.scale == Cyc(1)))
            note = "hexagons and counit identities hold for " + to_string(n.scale) +
                   " times the printed R; the printed prefactor fails them";
        add(12, "R: almost cocommutative, hexagons, Yang-Baxter; R-hat projectors and recovered relations", rm.ok(),
            rm.ok() ? note : first_failure({rm}));
    }
    {
        const bool gm = holds(qp, "Gell-Mann expansions match classical matrices");
        const bool tr = holds(ff, "Tr lambda'_i = 0 for all i");
        const bool orth = holds(ff, "Tr(lambda'_i lambda'_j) = 2 delta_ij for all i, j");
        const bool og = holds(ff, "Ogievetsky representation is multiplicative (27^2 pairs)") &&
                        holds(ff, "Ogievetsky representation has rank 27");
        std::string note;
        if (!tr) note += "Tr lambda'_i != 0 for off-diagonal i; ";
        if (!orth) note += "Tr(lambda'_i lambda'_j) != 2 delta_ij; ";
        if (!gm) note += "Gell-Mann expansions; ";
        if (!og) note += "Ogievetsky representation; ";
        add(13, "Gell-Mann expansions; lambda' traces; Ogievetsky representation multiplicative with rank 27",
            gm && tr && orth && og, note);
    }
    {
        bool round = true;
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> n(-5, 5), d(1, 6);
        for (auto c : {expr::Context::M, expr::Context::F, expr::Context::H, expr::Context::WZ}) {
            const int dim = expr::context_algebra(c).dim;
            for (int k = 0; k < 25; ++k) {
                CycVector v(dim);
                for (int i = 0; i < dim; ++i) v(i) = Cyc::frac(n(rng), d(rng)) + Cyc::frac(n(rng), d(rng)) * Cyc::q();
                round = round && expr::parse(expr::format(v, c), c) == v;
            }
        }
        bool gold = true;
        std::string which;
        for (const auto& name : tables::names()) {
            tables::Table t = tables::build(name);
            const std::string txt = tables::render_text(t), js = tables::render_json(t).dump(2) + "\n";
            const bool same = txt == tables::render_text(tables::build(name)) && txt == slurp(golden + "/" + name + ".txt") &&
                              js == slurp(golden + "/" + name + ".json");
            if (!same) which += name + " ";
            gold = gold && same;
        }
        std::ostringstream note;
        note.precision(1);
        note << std::fixed << "all suites in " << verify_seconds << " s";
        if (!which.empty()) note << "; golden mismatch: " << which;
        add(14, "eval round-trips print/parse; verify all passes; five golden tables byte-identical",
            round && ok(all) && gold && verify_seconds < 60.0, note.str());
    }

    // documented deviations: the criterion as stated does not hold
    const std::set<int> known = {13};
    int unexpected = 0;
    for (const auto& l : lines) {
        const bool is_known = known.count(l.id) > 0;
        std::cout << (l.pass ? "PASS" : "FAIL") << " [" << l.id << "] " << l.text;
        if (!l.note.empty()) std::cout << "  (" << l.note << ")";
        if (!l.pass && is_known) std::cout << "  known deviation";
        if (l.pass && is_known) std::cout << "  UNEXPECTED PASS";
        std::cout << "\n";
        if (l.pass == is_known) ++unexpected;
    }
    std::cout << (unexpected == 0 ? "acceptance: as expected" : "acceptance: unexpected results") << "\n";
    return unexpected == 0 ? 0 : 1;
}
