#include "cliffop.hpp"

namespace halfpot {

AxialExpr dirac_scalar(const AxialExpr& f) { return diff_r(f); }

AxialExpr dirac_vector(const AxialExpr& g, int m) {
    return -(diff_r(g) + g.mul_monomial(Coefficient::integer(m - 1), 0, -1, 0));
}

PotentialPair apply_D(const PotentialPair& p) {
    const Coefficient half = Coefficient::rational(1, 2);
    PotentialPair out;
    out.m = p.m;
    out.A = (diff_x0(p.A) + dirac_vector(p.B, p.m)).scaled(half);
    out.B = (diff_x0(p.B) + dirac_scalar(p.A)).scaled(half);
    return out;
}

PotentialPair apply_Dbar(const PotentialPair& p) {
    const Coefficient half = Coefficient::rational(1, 2);
    PotentialPair out;
    out.m = p.m;
    out.A = (diff_x0(p.A) - dirac_vector(p.B, p.m)).scaled(half);
    out.B = (diff_x0(p.B) - dirac_scalar(p.A)).scaled(half);
    return out;
}

AxialExpr laplacian_scalar(const AxialExpr& f, int m) {
    AxialExpr fr = diff_r(f);
    return diff_x0(diff_x0(f)) + diff_r(fr) +
           fr.mul_monomial(Coefficient::integer(m - 1), 0, -1, 0);
}

AxialExpr laplacian_vector(const AxialExpr& g, int m) {
    AxialExpr gr = diff_r(g);
    const Coefficient mm1 = Coefficient::integer(m - 1);
    return diff_x0(diff_x0(g)) + diff_r(gr) + gr.mul_monomial(mm1, 0, -1, 0) -
           g.mul_monomial(mm1, 0, -2, 0);
}

}  // namespace halfpot
