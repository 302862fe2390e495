#pragma once

#include "qroot3/algebra.hpp"
#include "qroot3/fun_f.hpp"
#include "qroot3/grassmann.hpp"
#include "qroot3/qplane.hpp"

// The 27-dimensional quantum group H with basis X+^al K^be X-^ga at index 9al + 3be + ga.
// K^-1 is stored as K^2.
namespace qroot3::env_h {

using HElem = CycVector;

constexpr int kDim = 27;
constexpr int index(int al, int be, int ga) { return 9 * al + 3 * (be % 3) + ga; }

const AlgebraTable& algebra();
const HopfDescriptor& hopf();

HElem mono(int al, int be, int ga, const Cyc& c = Cyc(1));
HElem one();
HElem xp();
HElem xm();
HElem k();
HElem kinv();
HElem mul(const HElem& g, const HElem& h);
HElem pow(const HElem& g, int n);
HElem casimir();

CycVector coproduct(const HElem& h);
HElem antipode(const HElem& h);
Cyc counit(const HElem& h);
HElem star(const HElem& h);

// <h, u>; row i of pairing_matrix() holds <e_i, f_j>.
Cyc pairing(const HElem& h, const fun_f::FElem& u);
const CycMatrix& pairing_matrix();

// Left action on F: h[u] = u_1 <h, u_2>.
fun_f::FElem act_on_F(const HElem& h, const fun_f::FElem& u);
CycMatrix action_on_F_matrix(const HElem& h);

// X^L[z] = (id (x) <X,.>) Delta_R z is a left action; X^R[z] = (<X,.> (x) id) Delta_L z a right one.
CycMatrix left_action_matrix(const HElem& h);
CycMatrix right_action_matrix(const HElem& h);
qplane::MElem act_left_on_M(const HElem& h, const qplane::MElem& z);
qplane::MElem act_right_on_M(const HElem& h, const qplane::MElem& z);
ModuleAction left_action_on_M();
ModuleAction right_action_on_M();

// One row of the table of generator actions on M.
struct ActionEntry {
    char side;        // 'L' or 'R'
    std::string gen;  // "K", "X+", "X-"
    int basis;        // M basis index
    qplane::MElem expected;
};
const std::vector<ActionEntry>& action_table();
HElem generator(const std::string& name);

// M_3 (+) (M_{2|1}(Lambda^2))_0
struct Structural {
    CycMatrix b1;
    G4Matrix b2;
};
Structural structural_zero();
Structural structural_identity();
Structural smul(const Structural& a, const Structural& b);
Structural sadd(const Structural& a, const Structural& b);
Structural sscale(const Cyc& c, const Structural& a);
bool operator==(const Structural& a, const Structural& b);
Structural structural_rep(const HElem& h);
// 45 coordinates: 9 for block1, then 4 per entry of block2.
CycVector structural_coords(const Structural& s);
Structural elementary_E(int i, int j);                           // 1-based
Structural elementary_F(int i, int j, const Grass4& g = Grass4(1));  // 1-based

enum class Regular { L, R, Lp, Rp };
HElem regular_action(Regular kind, const HElem& x, const HElem& y);
ModuleAction regular_module(Regular kind);

Report commutation_with_coordinates();
Report verify();

}  // namespace qroot3::env_h
