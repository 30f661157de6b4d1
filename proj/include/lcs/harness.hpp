#pragma once

#include <cstdint>
#include <vector>

#include "lcs/decomposition.hpp"
#include "lcs/system.hpp"

namespace lcs {

// Continuous control signal, evaluable per channel for t >= 0. Floating point
// lives only in this module; nothing here feeds back into any decision.
struct ControlSignal {
    enum class Kind { zero, step, polynomial, piecewise_linear };

    Kind kind = Kind::zero;
    int channels = 0;
    std::vector<double> heights;                   // step
    std::vector<std::vector<double>> coefficients; // polynomial, ascending, per channel
    std::vector<double> knot_times;                // piecewise_linear, increasing
    std::vector<std::vector<double>> knot_values;  // per channel, same length as knot_times

    static ControlSignal zero_signal(int channels);
    static ControlSignal step_signal(std::vector<double> heights);
    static ControlSignal polynomial_signal(std::vector<std::vector<double>> coefficients);
    static ControlSignal piecewise_linear_signal(std::vector<double> knot_times,
                                                 std::vector<std::vector<double>> knot_values);

    double eval(int channel, double t) const;

    // Times where the signal is not C^2 (piecewise-linear knots); the dynamic
    // check excludes finite-difference samples next to these.
    const std::vector<double>& breakpoints() const { return knot_times; }
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    std::vector<std::vector<double>> controls;
};

// Classical fixed-step RK4 for xdot = A x + B u(t). Throws NonFiniteError
// when any state magnitude exceeds overflow_bound or stops being finite.
Trajectory simulate(const ControlSystem& sys, const std::vector<double>& x0,
                    const ControlSignal& u, double t_final, int steps,
                    double overflow_bound = 1e12);

struct DynamicCheck {
    double max_residual = 0.0;
    bool pass = false;
};

// Simulates sys1, maps the trajectory through the witness (y = O^-1 x,
// v = Q^-1 u - Q^-1 L O^-1 x) and measures the central-difference residual of
// ydot - A2 y - B2 v over interior samples. Throws SingularWitnessError when
// O or Q fails the exact invertibility check.
DynamicCheck verify_witness_dynamically(const ControlSystem& sys1, const ControlSystem& sys2,
                                        const FeedbackWitness& w, const ControlSignal& u,
                                        const std::vector<double>& x0, double t_final, int steps,
                                        double tol);

// The fixed five-signal battery used by the simcheck command: zero, step, two
// polynomials, piecewise linear; all deterministic in the seed.
std::vector<ControlSignal> standard_battery(int channels, double t_final, std::uint64_t seed);

// Deterministic nonzero initial state with entries in [-1, 1].
std::vector<double> seeded_initial_state(int n, std::uint64_t seed);

}  // namespace lcs
