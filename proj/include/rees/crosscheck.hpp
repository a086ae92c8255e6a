#pragma once

#include "rees/deadline.hpp"
#include "rees/verify.hpp"

// Closed forms against the independent oracle.
namespace rees::crosscheck {

using euclid::Int;
using euclid::PairData;

// Elimination and saturation kernels against F0, and syzygies computed from
// scratch against F1 and F2.
families::TheoremReport oracle_report(const PairData& pd, const Deadline& deadline = {});

// For d/2 < u < d: the kernel of the (d,u) map equals F0(d, d-u) with
// T0 <-> T1 and X0 <-> X2 exchanged.
bool swap_symmetric(Int d, Int u, const Deadline& deadline = {});

}  // namespace rees::crosscheck
