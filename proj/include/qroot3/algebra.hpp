#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qroot3/linalg.hpp"

namespace qroot3 {

using Term = std::pair<int, Cyc>;
using SparseVec = std::vector<Term>;

SparseVec to_sparse(const CycVector& v);
CycVector to_dense(const SparseVec& s, int dim);

struct Check {
    std::string name;
    bool pass = true;
    std::string witness;
    // A documented claim known not to hold. It fails without failing the report;
    // an unexpected pass does fail it.
    bool xfail = false;
    bool ok() const { return xfail ? !pass : pass; }
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string witness = {});
    void add_xfail(std::string name, bool pass, std::string witness = {});
    void merge(const Report& other, const std::string& prefix = {});
    bool ok() const;
    int failures() const;
};

std::string format_report(const Report& r);

// Finite-dimensional unital algebra given by structure constants.
struct AlgebraTable {
    std::string name;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<SparseVec> mult;  // mult[i * dim + j] = e_i e_j
    CycVector unit;

    const SparseVec& product(int i, int j) const { return mult[static_cast<size_t>(i) * dim + j]; }
    CycVector basis(int i) const { return unit_vector(dim, i); }
};

CycVector multiply(const AlgebraTable& a, const CycVector& u, const CycVector& v);
CycVector power(const AlgebraTable& a, const CycVector& u, int k);
CycMatrix left_mult_matrix(const AlgebraTable& a, const CycVector& u);
CycMatrix right_mult_matrix(const AlgebraTable& a, const CycVector& u);
// Kronecker-style structure constants, basis index i * dim(b) + j.
AlgebraTable tensor(const AlgebraTable& a, const AlgebraTable& b);
// Product in A (x) B without materializing the table.
CycVector tensor_multiply(const AlgebraTable& a, const AlgebraTable& b, const CycVector& u, const CycVector& v);
CycVector tensor_elem(const CycVector& u, const CycVector& v);
// Swap factors of an element of V (x) W.
CycVector flip(const CycVector& t, int dimV, int dimW);
std::string format_element(const AlgebraTable& a, const CycVector& v);
std::string format_tensor(const std::vector<const AlgebraTable*>& factors, const CycVector& v);

struct HopfDescriptor {
    AlgebraTable alg;
    std::vector<SparseVec> comult;  // Delta(e_i) on basis index j * dim + k
    CycVector counit;
    CycMatrix antipode;  // column i is S(e_i)
};

CycVector coproduct(const HopfDescriptor& h, const CycVector& u);
Cyc counit(const HopfDescriptor& h, const CycVector& u);
CycVector antipode(const HopfDescriptor& h, const CycVector& u);
// (Delta (x) id) and (id (x) Delta) on an element of H (x) H.
CycVector coproduct_left(const HopfDescriptor& h, const CycVector& t);
CycVector coproduct_right(const HopfDescriptor& h, const CycVector& t);

Report check_hopf(const HopfDescriptor& h);

// Action of the Hopf algebra on a module algebra V: rho[i] is the matrix of e_i.
// A right action satisfies rho(gh) = rho(h) rho(g).
struct ModuleAction {
    std::vector<CycMatrix> rho;
    bool right = false;
};

Report check_module(const HopfDescriptor& h, const ModuleAction& act);
Report check_module_algebra(const HopfDescriptor& h, const ModuleAction& act, const AlgebraTable& v);

// Coaction: image[z] lies in V (x) H for a right coaction, H (x) V for a left one.
struct Coaction {
    std::vector<CycVector> image;
    bool right = true;
};

Report check_comodule_algebra(const HopfDescriptor& h, const Coaction& co, const AlgebraTable& v);

// Sparse elements of multiple tensor products, keyed by flattened basis index.
class TensorSpace {
public:
    explicit TensorSpace(std::vector<const AlgebraTable*> factors);
    using Elem = std::map<long, Cyc>;

    int rank() const { return static_cast<int>(factors_.size()); }
    long dim() const { return total_; }
    long index(const std::vector<int>& ids) const;
    std::vector<int> split(long idx) const;

    Elem multiply(const Elem& u, const Elem& v) const;
    Elem basis_product(long i, long j) const;
    static void add_to(Elem& acc, const Elem& u, const Cyc& s = Cyc(1));
    static Elem scaled(const Elem& u, const Cyc& s);
    static bool is_zero(const Elem& u);
    static Elem difference(const Elem& u, const Elem& v);
    Elem one() const;
    Elem from_dense(const CycVector& v) const;
    CycVector to_dense(const Elem& e) const;
    // Embed a two-factor element into slots (s1, s2), other slots hold the unit.
    Elem embed(const Elem& two, const TensorSpace& pair, int s1, int s2) const;

private:
    std::vector<const AlgebraTable*> factors_;
    std::vector<long> stride_;
    long total_ = 1;
    std::vector<int> unitIndex_;
};

}  // namespace qroot3
