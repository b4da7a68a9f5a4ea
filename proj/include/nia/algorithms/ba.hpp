#pragma once

#include <cstdint>

#include "nia/algorithms/params.hpp"
#include "nia/core/problem.hpp"
#include "nia/core/run_record.hpp"

namespace nia::algo {

/// Bat algorithm with the standard frequency / velocity / loudness /
/// pulse-rate dynamics. Per bat i at iteration t (1-based):
///
///   f_i  = f_min + (f_max - f_min) * U(0,1)
///   v_i += (x_i - x_best) * f_i
///   y    = x_i + v_i
///   if U(0,1) > r_i:  y = x_best + eps * mean(A),  eps_d ~ U(-1,1) per dimension
///   y    = clamp(y, box)
///   if f(y) strictly better than f(x_i) and U(0,1) < A_i:
///       x_i = y,  A_i *= alpha_loudness,  r_i = r0 * (1 - exp(-gamma_rate * t))
///   if f(y) strictly better than f(x_best):  x_best = y
///
/// Velocities start at zero; positions start at `problem.initial` then
/// uniform points of the box. Throws EncodingMismatch for non-real encodings.
RunRecord ba_run(const Problem& problem, const BaParams& params, const Budget& budget, std::uint64_t seed);

}  // namespace nia::algo
