#include "qroot3/tables.hpp"

#include <algorithm>
#include <sstream>

#include "qroot3/env_h.hpp"
#include "qroot3/repmod.hpp"
#include "qroot3/wz_forms.hpp"

namespace qroot3::tables {

namespace {

const char* yes(bool b) { return b ? "yes" : "NO"; }

std::string short_rep(const std::string& n) { return n == "2_eve" ? "2" : n; }

Table actions() {
    Table t{"actions", "generators of H acting on M from the left (L) and right (R)",
            {"side", "generator", "on", "printed", "computed", "match"}, {}};
    const AlgebraTable& M = qplane::algebra();
    for (const auto& e : env_h::action_table()) {
        const env_h::HElem h = env_h::generator(e.gen);
        const qplane::MElem z = M.basis(e.basis);
        const qplane::MElem got = e.side == 'L' ? env_h::act_left_on_M(h, z) : env_h::act_right_on_M(h, z);
        t.rows.push_back({std::string(1, e.side), e.gen, M.labels[e.basis], format_element(M, e.expected),
                          format_element(M, got), yes(got == e.expected)});
    }
    return t;
}

Table tensor() {
    Table t{"tensor", "tensor products of indecomposable representations",
            {"a", "b", "printed", "computed", "match"}, {}};
    for (const auto& e : repmod::tensor_table()) {
        auto found = repmod::decompose_tensor(repmod::builtin_rep(e.a), repmod::builtin_rep(e.b));
        std::string got = found.empty() ? "none" : repmod::format_multiset(found[0]);
        if (found.size() > 1) got += " (ambiguous)";
        t.rows.push_back({short_rep(e.a), short_rep(e.b), repmod::format_multiset(e.expected), got,
                          yes(found.size() == 1 && found[0] == e.expected)});
    }
    return t;
}

Table metrics() {
    Table t{"metrics", "invariant hermitian metrics",
            {"rep", "printed parameters", "solved parameters", "printed signature", "computed signature", "match"},
            {}};
    for (const auto& f : repmod::printed_metrics()) {
        repmod::MetricSummary s = repmod::metric_summary(f);
        t.rows.push_back({f.rep, std::to_string(f.real_params), std::to_string(s.solved_dim), f.claimed, s.generic,
                          yes(s.solved_dim == f.real_params && s.generic == f.claimed)});
    }
    return t;
}

Table cohomology() {
    Table t{"cohomology", "cohomology of the form complex", {"degree", "Z", "B", "H", "printed", "match"}, {}};
    const int printed[3][3] = {{1, 0, 1}, {10, 8, 2}, {9, 8, 1}};
    auto c = wz_forms::cohomology();
    for (int p = 0; p < 3; ++p) {
        std::ostringstream pr;
        pr << "(" << printed[p][0] << "," << printed[p][1] << "," << printed[p][2] << ")";
        t.rows.push_back({std::to_string(p), std::to_string(c[p].z), std::to_string(c[p].b), std::to_string(c[p].h),
                          pr.str(),
                          yes(c[p].z == printed[p][0] && c[p].b == printed[p][1] && c[p].h == printed[p][2])});
    }
    return t;
}

Table pairing() {
    Table t{"pairing", "pairing of the generators of H and F", {"h", "u", "printed", "computed", "match"}, {}};
    const Cyc one(1), zero(0);
    struct Row {
        const char* h;
        const char* u;
        Cyc printed;
    };
    const std::vector<Row> rows = {
        {"X+", "a", zero}, {"X+", "b", one},  {"X+", "c", zero}, {"X+", "d", zero},
        {"X-", "a", zero}, {"X-", "b", zero}, {"X-", "c", one},  {"X-", "d", zero},
        {"K", "a", Cyc::q()}, {"K", "b", zero}, {"K", "c", zero}, {"K", "d", Cyc::q2()},
    };
    for (const auto& r : rows) {
        fun_f::FElem u = r.u[0] == 'a' ? fun_f::a() : r.u[0] == 'b' ? fun_f::b() : r.u[0] == 'c' ? fun_f::c() : fun_f::d();
        Cyc v = env_h::pairing(env_h::generator(r.h), u);
        t.rows.push_back({r.h, r.u, to_string(r.printed), to_string(v), yes(v == r.printed)});
    }
    return t;
}

}  // namespace

bool Table::all_match() const {
    auto it = std::find(columns.begin(), columns.end(), "match");
    if (it == columns.end()) return true;
    const size_t k = it - columns.begin();
    return std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return r[k] == "yes"; });
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {"actions", "tensor", "metrics", "cohomology", "pairing"};
    return n;
}

Table build(const std::string& name) {
    if (name == "actions") return actions();
    if (name == "tensor") return tensor();
    if (name == "metrics") return metrics();
    if (name == "cohomology") return cohomology();
    if (name == "pairing") return pairing();
    throw std::invalid_argument("unknown table '" + name + "' (expected actions, tensor, metrics, cohomology or pairing)");
}

std::string render_text(const Table& t) {
    std::vector<size_t> w(t.columns.size());
    for (size_t c = 0; c < w.size(); ++c) {
        w[c] = t.columns[c].size();
        for (const auto& r : t.rows) w[c] = std::max(w[c], r[c].size());
    }
    std::ostringstream os;
    os << "# " << t.title << "\n";
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (size_t c = 0; c < cells.size(); ++c) {
            s += cells[c];
            if (c + 1 < cells.size()) s += std::string(w[c] - cells[c].size() + 2, ' ');
        }
        os << s << "\n";
    };
    line(t.columns);
    std::vector<std::string> rule;
    for (size_t c = 0; c < w.size(); ++c) rule.push_back(std::string(w[c], '-'));
    line(rule);
    for (const auto& r : t.rows) line(r);
    return os.str();
}

json_io::Json render_json(const Table& t) {
    json_io::Json arr = json_io::Json::array();
    for (const auto& r : t.rows) {
        json_io::Json rec;
        for (size_t c = 0; c < t.columns.size(); ++c) rec[t.columns[c]] = r[c];
        arr.push_back(rec);
    }
    return arr;
}

}  // namespace qroot3::tables
