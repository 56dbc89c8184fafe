#pragma once

// Central list of default tolerances and slack factors. Certification slacks
// scale with the grid spacing h; everything else is an absolute or relative
// floating-point tolerance.

namespace smse::defaults {

// --- geometry ---
inline constexpr double kProjectionTolFactor = 1e-10;  // * diameter
inline constexpr int kProjectionMaxIter = 100;
inline constexpr double kLevelSetFdFactor = 1e-5;      // * diameter, FD step for F
inline constexpr double kCutTol = 1e-10;               // |F| at refined cut points
inline constexpr double kThetaMin = 1e-3;              // cut fraction snap threshold
inline constexpr int kBoundarySamples = 2048;          // dense boundary polyline
inline constexpr double kMeanConvexTol = -1e-10;       // curvature >= this => convex

// --- radial ODE ---
inline constexpr double kOdeTolDefault = 1e-10;
inline constexpr double kOdeTolMin = 1e-12;
inline constexpr double kOdeTolMax = 1e-4;
inline constexpr double kUStopFactor = 1e-6;           // * u0
inline constexpr double kThetaStopDelta = 1e-6;        // stop at -pi/2 + delta
inline constexpr double kFitTol = 1e-10;               // relative tol on lambda
inline constexpr double kFitOdeTol = 1e-12;            // canonical profile accuracy

// --- solver ---
inline constexpr double kNewtonTol = 1e-10;            // ||Q||_inf
inline constexpr int kNewtonMaxIter = 30;
inline constexpr int kMaxBacktracks = 20;
inline constexpr double kPositivityFloor = 0.1;        // min(u + lam*d) >= floor*min(u)
inline constexpr double kLinearSolveTol = 1e-12;       // relative residual
inline constexpr double kContinuationStep0 = 0.25;
inline constexpr double kContinuationStepMax = 0.5;
inline constexpr double kContinuationGrow = 1.5;
inline constexpr double kContinuationStepMin = 1e-6;
inline constexpr int kEasyNewtonIters = 4;             // grow step below this

// --- certification slacks (scale with h) ---
inline constexpr double kOrderingSlack = 1e-8;         // monotonicity / comparison
inline constexpr double kHeightSlackFactor = 5.0;      // max u <= C1 + 5h
inline constexpr double kGradientSlackFactor = 5.0;    // interior <= ring + 5h*max
inline constexpr double kC2SlackFactor = 5.0;          // ring |Du| <= C2 + 5h*max(1,.)

// --- barrier ladder ---
inline constexpr double kBarrierBMin = 10.0;           // b in {10,10^2,...,10^8}
inline constexpr int kBarrierBDecades = 8;
inline constexpr int kBarrierEpsHalvings = 12;         // eps in {d_max/2, d_max/4, ...}
inline constexpr int kBarrierMajorantSamples = 1024;

}  // namespace smse::defaults
