#pragma once

#include "chain.hpp"
#include "numeric.hpp"

namespace halfpot {

// Chain dump: all levels with term lists and boundary catalogue entries.
std::string chain_json(const Chain& chain);
std::string chain_text(const Chain& chain);
std::string chain_latex(const Chain& chain);

// Formula tables only (the A_{-k}/B_{-k} rows and the 2pi A_j lines).
std::string formulas_latex(const Chain& chain);
std::string formulas_text(const Chain& chain);
std::string formulas_json(const Chain& chain);

// Boundary catalogue with fundamental-solution labels and the Hilbert /
// convolution bookkeeping notes.
std::string boundary_json(const Chain& chain);
std::string boundary_text(const Chain& chain);

// Verification report; numeric entries optional.
std::string report_json(const VerifyReport& symbolic,
                        const std::vector<ResidualReport>& numeric);

// Building blocks, exposed for the fixture tests.
std::string latex_coefficient(const Coefficient& c);
std::string latex_axial(const AxialExpr& e, int m);
std::string latex_downstream_row(int depth, int m, bool vector_part);
std::string latex_upstream_row(const AxialExpr& a_j, int j, int m);
std::string text_axial(const AxialExpr& e);

}  // namespace halfpot
