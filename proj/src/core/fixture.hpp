#pragma once

#include "core/io.hpp"

namespace ybgeo {

// Built-in three-dimensional example family: the non-unitary r-matrix on
// X = C^3 with its eps-deformation (eps = 1 the non-unitary case, eps -> 0
// the unitarized limit), plus the closed forms its quantization must match.
namespace example5 {

// the shipped r-matrix file, symbolic eps
extern const char *kRMatrixJson;
GeomRMatrix rmatrix(); // parsed from kRMatrixJson

// the same tuple in the Heisenberg / upper-triangular presentation
CBCST presentation_cbcst();

// basis change from from_rmatrix's g basis {p(delta_c)} into the
// upper-triangular basis of the presentation
FMatrix presentation_basis_change();

// closed forms for the quantization, expression strings over x/y blocks
ClosedForms closed_forms_eps1();
ClosedForms closed_forms_eps0();

// closed forms for the inverse group cocycle, over coefficient variables
// x1,x2,x3 (the log is h*(x1 X + x2 Y + x3 C)); q is returned as a series
// because its literal form divides by a series of positive valuation
std::string p_closed_form();
std::string r_closed_form();
HSeries q_closed_form(int order);
// the defining identity pieces: q * q_denominator() == q_numerator()
std::string q_denominator();
std::string q_numerator();

// single-term rack-type r-matrix (x3, A2); CYBE-exact
GeomRMatrix rack_rmatrix();

} // namespace example5

} // namespace ybgeo
