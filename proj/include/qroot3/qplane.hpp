#pragma once

#include <vector>

#include "qroot3/algebra.hpp"

// The reduced quantum plane M: xy = q yx, x^3 = y^3 = 1.
// Basis x^r y^s at index 3r + s, so 1 comes first.
namespace qroot3::qplane {

using MElem = CycVector;

constexpr int kDim = 9;
constexpr int index(int r, int s) { return 3 * (r % 3) + (s % 3); }

const AlgebraTable& algebra();

MElem mono(int r, int s, const Cyc& c = Cyc(1));
MElem one();
MElem x();
MElem y();
MElem mul(const MElem& a, const MElem& b);
MElem pow(const MElem& a, int k);

CycMatrix x_matrix();
CycMatrix y_matrix();
CycMatrix elementary(int i, int j);  // 1-based E_ij
MElem elementary_expansion(int i, int j);
CycMatrix to_matrix(const MElem& z);
MElem from_matrix(const CycMatrix& m);

// Gell-Mann matrices. Entries carrying i or 1/sqrt(3) are returned multiplied by sqrt(3),
// which keeps everything inside Q(q) since sqrt(3) i = 2q + 1.
struct GellMann {
    MElem elem;
    bool sqrt3_scaled = false;
};
GellMann gell_mann(int i);
CycMatrix classical_gell_mann(int i);  // same scaling as gell_mann(i)

CycMatrix charge_conjugation();
MElem star(const MElem& z);
CycMatrix star_matrix(const CycMatrix& m);  // (C m C^-1)^dagger
std::vector<MElem> real_basis();

enum class Sector { Zero, Irr, Eve, Odd, Mixed };
struct Split {
    MElem irr, eve, odd;
};
Split decompose(const MElem& z);
Sector sector(const MElem& z);
bool in_irr(const MElem& z);
bool in_eve(const MElem& z);
bool in_odd(const MElem& z);

Cyc D3(const Cyc& a, const Cyc& b, const Cyc& c);
Cyc T3(const Cyc& a, const Cyc& b, const Cyc& c);
// Closed formulas on a single sector, exact matrix inversion otherwise.
MElem invert(const MElem& z);

// C0 = sum t^k/k! over k = 0 mod 3, C1 = C0', C2 = C1'.
struct TriadicSeries {
    int order = 0;
    std::vector<Rat> c0, c1, c2;
};
TriadicSeries triadic(int order);
std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b);
std::vector<Rat> triadic_D(const TriadicSeries& s);

// Power series in a real variable t with coefficients in M (x) Q(i).
struct ISeries {
    std::vector<MElem> re, im;
};
ISeries iseries_mul(const ISeries& a, const ISeries& b);
ISeries iseries_star(const ISeries& a);
ISeries exp_series(const MElem& w, int order);  // exp(i t w)
ISeries triadic_unitary(const TriadicSeries& s, const MElem& w, const MElem& w2);  // C0 + C2 w + C1 w^2 at i t
bool is_one(const ISeries& s);
bool equal(const ISeries& a, const ISeries& b);

Report triadic_report(int order);
Report verify();

}  // namespace qroot3::qplane
