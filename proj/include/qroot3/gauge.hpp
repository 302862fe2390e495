#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qroot3/poly.hpp"
#include "qroot3/wz_forms.hpp"

// Connections on M viewed as a module over itself: omega in Omega^1, rho = d omega + omega^2.
namespace qroot3::gauge {

using wz_forms::WZForm;
using PolyForm = PolyVector;  // 36 polynomial coordinates in the WZ basis

// Parameters a_i1..a_i3, b_i1..b_i3, a_e1..a_e3, b_o1..b_o3, c1..c6.
constexpr int kParams = 18;
const std::vector<std::string>& param_names();
// Symbolic parameter k is var(k) + sqrt(-3) var(kParams + k), both variables real.
Poly symbolic_param(int k);
const std::vector<std::string>& variable_names();

enum class Block { Irr3, IrrPrime3, Eve3, Odd3, Eve6 };
const std::vector<Block>& blocks();
std::string block_name(Block b);  // "3i", "3i'", "3e", "3o", "6e"
std::vector<int> block_params(Block b);
// The one-form multiplying each parameter.
const std::vector<WZForm>& param_forms();

struct Connection {
    PolyForm omega;
    std::optional<std::vector<Poly>> params;
};

Connection from_form(const WZForm& w);
Connection from_params(const std::vector<Poly>& params);
Connection from_values(const std::vector<Cyc>& values);
// Symbolic connection supported on the given blocks.
Connection symbolic(const std::vector<Block>& support);

PolyForm poly_mul(const PolyForm& u, const PolyForm& v);
PolyForm poly_d(const PolyForm& u);
PolyForm poly_star(const PolyForm& u);

WZForm curvature(const WZForm& omega);
PolyForm curvature(const Connection& c);

// omega' = u^-1 omega u + u^-1 du; throws std::domain_error when u is not invertible.
WZForm gauge_transform(const WZForm& omega, const qplane::MElem& u);
Connection gauge_transform(const Connection& c, const qplane::MElem& u);

// "0", "3_irr", "3_eve", "3_odd" for two-forms inside one sector of Omega^2, "mixed" otherwise.
std::string sector_label(const PolyForm& two_form);
// Submodules of Omega^2: "1" = span{dx dy}, "2" = span{x dx dy, y dx dy}.
bool in_submodule(const PolyForm& two_form, const std::string& which);

struct Classification {
    Block block;
    bool dphi_zero = false, phi2_zero = false;
    std::string dphi, phi2, rho;  // sector labels
};
// Throws std::invalid_argument unless the parameters live in exactly one block.
Classification classify_curvature(const Connection& c);

Connection hermitian_projection(const Connection& c);
bool is_hermitian(const Connection& c);

std::string format_poly_form(const PolyForm& u);

Report verify();

}  // namespace qroot3::gauge
