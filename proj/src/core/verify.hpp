#pragma once

#include "core/fixture.hpp"
#include <optional>

namespace ybgeo {

// GroupLog component as a plain series (coefficients of one basis element)
HSeries grouplog_component(const GroupLog &u, int basis_index);

// compare a quantum R-matrix against closed-form expressions coefficientwise
Report match_closed_forms(const RMatrixQ &R, const ClosedForms &cf);

// the full built-in example suite: CYBE, structure recovery, inverse group
// cocycle, closed forms, braid, classical limit, unitarity dichotomy, round
// trips. eps = nullopt runs the symbolic family with both endpoints.
Report verify_example5(int order, const std::optional<Rat> &eps, bool corrupt);

} // namespace ybgeo
