#pragma once

#include "cliffop.hpp"

#include <vector>

namespace halfpot {

struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficients of the logarithmic boundary family a_{odd} (m=2) resp.
// a_{even} (m=3), computed by the defining recursion and checked against the
// closed forms on construction.
struct AlphaBeta {
    int k = 0;  // the index 2k
    int m = 2;
    Coefficient alpha;
    Coefficient beta;
};

AlphaBeta alpha_beta(int k, int m);

// Regular part of the catalogued boundary value a_j, j >= 1.
RadialDensity upstream_boundary(int j, int m);

// Full catalogued boundary distributions at any chain level.
BoundaryDensity boundary_a(int level, int m);
BoundaryDensity boundary_b(int level, int m);

// Fundamental-solution label of a boundary entry (the E_k / F_k bookkeeping,
// including the sign), e.g. "E_0" for a_{-1} = delta or "-F_3" for a_2.
std::string boundary_label_a(int level);
std::string boundary_label_b(int level);

struct ChainRecord {
    int m = 2;
    int level = 0;
    PotentialPair pair;
    BoundaryDensity a;
    BoundaryDensity b;
};

// The doubly infinite chain C_k = A_k/2 + e0bar B_k/2, k in [lo, hi]:
// downstream levels from the Gegenbauer closed forms cross-checked against
// repeated Dbar, the logarithmic pivot C_0, and upstream levels from the
// level-by-level coefficient solver seeded with the exact A_1, A_2.
class Chain {
public:
    static Chain build(int m, int lo, int hi);

    int m() const { return m_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool has(int level) const;
    const ChainRecord& at(int level) const;

    // Copy with one level's pair replaced; for fault-injection testing.
    Chain with_pair(int level, PotentialPair p) const;

private:
    int m_ = 2;
    int lo_ = 0;
    int hi_ = 0;
    std::map<int, ChainRecord> records_;
};

struct VerifyItem {
    std::string identity;
    int level = 0;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    int m = 2;
    std::vector<VerifyItem> items;
    bool all_pass() const;
};

// Symbolic identity suite over every stored level: monogenicity,
// harmonicity, the four step identities and the Dbar step, boundary limits
// against the catalogue, the boundary Dirac relations on regular parts,
// two-route equality on downstream levels, and the alpha/beta recursion
// against its closed form.
VerifyReport verify_chain(const Chain& chain);

// Internals shared with the tests: the upstream polynomial shapes.
namespace upstream {

// Bivariate polynomial in (x0, r), map (x0 power, r power) -> coefficient.
using Poly = std::map<std::pair<int, int>, Coefficient>;

struct Form {
    // m=2: 2pi A_j = P log(x0+s) + Q s + S
    // m=3: 2pi A_j = U (1/r) arctan(r/x0) + V ln(s) + W
    Poly P, Q, S;
};

Form seed(int j, int m);                    // exact A_1, A_2
Form solve(const Form& prev, int j, int m); // level j from level j-1, j >= 2
AxialExpr assemble(const Form& f, int m);   // the potential A_j itself

}  // namespace upstream

}  // namespace halfpot
