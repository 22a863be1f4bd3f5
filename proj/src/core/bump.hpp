#pragma once

namespace kdv5 {

/// Smooth time cutoff eta: identically 1 on [-1/2, 1/2], supported in [-1, 1],
/// C-infinity, monotone on each transition interval. Built from the standard
/// exp(-1/x) transition; the exact shape is pinned by a golden test
/// (eta(3/4) = 1/2 by the symmetry of the transition).
double bump(double t);

/// eta(t / scale): 1 on |t| <= scale/2, 0 on |t| >= scale.
double bump_eval(double t, double scale);

} // namespace kdv5
