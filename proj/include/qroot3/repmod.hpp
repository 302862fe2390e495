#pragma once

#include <map>
#include <string>
#include <vector>

#include "qroot3/env_h.hpp"

// Finite-dimensional representations of H, invariant hermitian metrics, submodules,
// tensor products and the decomposition of M.
namespace qroot3::repmod {

struct HRep {
    std::string name;
    int dim = 0;
    CycMatrix Xp, Xm, K;
    std::vector<Cyc> params;
};

// 1, 2_eve, 3_irr, 3_eve, 3_odd, 4_eve, 5_odd, 6_eve, 6_odd
const std::vector<std::string>& catalogue();
bool needs_params(const std::string& name);
// Default parameters for the 3_eve / 3_odd families.
std::vector<Cyc> default_params();
HRep builtin_rep(const std::string& name, const std::vector<Cyc>& params = {});

Report check_relations(const HRep& r);
CycMatrix rho(const HRep& r, const env_h::HElem& h);
CycMatrix casimir(const HRep& r);
HRep tensor(const HRep& a, const HRep& b);
HRep direct_sum(const std::vector<HRep>& reps);
HRep from_module(const std::string& name, const ModuleAction& act);  // left action of H

// Subspaces are given by column bases.
bool is_stable(const HRep& r, const CycMatrix& basis);
HRep restrict(const HRep& r, const CycMatrix& basis);
HRep quotient(const HRep& r, const CycMatrix& sub);
CycMatrix cyclic_submodule(const HRep& r, const CycMatrix& vectors);

// Jacobson radical of H: elements realized with nilpotent entries only (columns in H coordinates).
const CycMatrix& jacobson_radical();
CycMatrix radical_of_module(const HRep& r);

// Column modules of the structural realization: "3_irr" (block 1), "6_eve", "6_odd" (block 2).
HRep column_module(const std::string& name);
// Basis of the submodule of the 6_odd / 6_eve column module parametrized by theta_l = l1 t1 + l2 t2.
CycMatrix family_subspace(const std::string& which, const Cyc& l1, const Cyc& l2);

// Hermitian metrics G with rho(h)^dagger G = G rho(h*).
bool is_invariant_metric(const HRep& r, const CycMatrix& g);
std::vector<CycMatrix> invariant_metric_space(const HRep& r);
Inertia signature(const CycMatrix& g);
std::string signature_string(const Inertia& s);

// Printed metric families, scaled by sqrt(3) where the entries carry i.
struct MetricFamily {
    std::string rep;
    std::vector<std::string> params;  // real parameters
    std::vector<CycMatrix> basis;     // G = sum p_k basis_k
    int real_params = 0;
    std::string claimed;              // e.g. "++-", "parameter-dependent", "rank-1"
};
const std::vector<MetricFamily>& printed_metrics();
struct MetricSummary {
    std::string rep;
    int solved_dim = 0;
    std::map<std::string, int> histogram;  // signature -> grid count
    std::string generic;                  // most frequent signature, or "parameter-dependent"
};
MetricSummary metric_summary(const MetricFamily& f);

// Additive module invariants used to identify tensor products.
using Fingerprint = std::vector<int>;
Fingerprint fingerprint(const HRep& r);
Report fingerprint_certificate();
struct TensorEntry {
    std::string a, b;
    std::map<std::string, int> expected;
};
const std::vector<TensorEntry>& tensor_table();
std::vector<std::map<std::string, int>> decompose_tensor(const HRep& a, const HRep& b);
std::string format_multiset(const std::map<std::string, int>& m);

// M as a representation and its identification with 3_irr + 3_eve + 3_odd.
HRep m_as_rep();
const std::vector<int>& adapted_order();  // M indices of x^2, xy, y^2, x, y, x^2y^2, 1, x^2y, xy^2
struct Identification {
    std::vector<env_h::Structural> targets;  // in adapted order
    std::vector<Cyc> scalars;                // z -> scalar * target
    CycMatrix intertwiner;                   // M coords -> target coords
    HRep target;
};
Identification identification();

// (z, z') on M, antilinear in the first slot.
Cyc form_formula(int p, int t, int r, int s);
CycMatrix invariant_form_on_M();
CycMatrix solved_form_on_M();  // from the *-representation conditions with (xy, xy) = 1
Cyc form_trace(const qplane::MElem& a, const qplane::MElem& b);
Cyc form(const qplane::MElem& a, const qplane::MElem& b);

Report check_invariance_conditions();
Report verify_reps();
Report verify_metrics();
Report verify_lattice();
Report verify_tensor();
Report verify_m();
Report verify();

}  // namespace qroot3::repmod
