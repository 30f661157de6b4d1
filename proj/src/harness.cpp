#include "lcs/harness.hpp"

#include <cmath>

#include "lcs/errors.hpp"
#include "lcs/linalg.hpp"

namespace lcs {

namespace {

struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // in [-1, 1], quantized to 1/8 so values print exactly
    double unit() { return static_cast<double>(static_cast<long>(next() % 17) - 8) / 8.0; }
};

std::vector<std::vector<double>> to_double(const RationalMatrix& m) {
    std::vector<std::vector<double>> d(static_cast<std::size_t>(m.rows()),
                                       std::vector<double>(static_cast<std::size_t>(m.cols()), 0.0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j).to_double();
    return d;
}

void mat_vec(const std::vector<std::vector<double>>& a, const std::vector<double>& x,
             std::vector<double>& out) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) acc += a[i][j] * x[j];
        out[i] = acc;
    }
}

}  // namespace

ControlSignal ControlSignal::zero_signal(int channels) {
    ControlSignal s;
    s.kind = Kind::zero;
    s.channels = channels;
    return s;
}

ControlSignal ControlSignal::step_signal(std::vector<double> heights) {
    ControlSignal s;
    s.kind = Kind::step;
    s.channels = static_cast<int>(heights.size());
    s.heights = std::move(heights);
    return s;
}

ControlSignal ControlSignal::polynomial_signal(std::vector<std::vector<double>> coefficients) {
    ControlSignal s;
    s.kind = Kind::polynomial;
    s.channels = static_cast<int>(coefficients.size());
    s.coefficients = std::move(coefficients);
    return s;
}

ControlSignal ControlSignal::piecewise_linear_signal(std::vector<double> knot_times,
                                                     std::vector<std::vector<double>> knot_values) {
    ControlSignal s;
    s.kind = Kind::piecewise_linear;
    s.channels = static_cast<int>(knot_values.size());
    s.knot_times = std::move(knot_times);
    s.knot_values = std::move(knot_values);
    return s;
}

double ControlSignal::eval(int channel, double t) const {
    switch (kind) {
        case Kind::zero:
            return 0.0;
        case Kind::step:
            return heights[static_cast<std::size_t>(channel)];
        case Kind::polynomial: {
            const auto& c = coefficients[static_cast<std::size_t>(channel)];
            double acc = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
            return acc;
        }
        case Kind::piecewise_linear: {
            const auto& v = knot_values[static_cast<std::size_t>(channel)];
            if (knot_times.empty()) return 0.0;
            if (t <= knot_times.front()) return v.front();
            if (t >= knot_times.back()) return v.back();
            std::size_t hi = 1;
            while (knot_times[hi] < t) ++hi;
            double t0 = knot_times[hi - 1], t1 = knot_times[hi];
            double a = (t - t0) / (t1 - t0);
            return v[hi - 1] * (1.0 - a) + v[hi] * a;
        }
    }
    return 0.0;
}

Trajectory simulate(const ControlSystem& sys, const std::vector<double>& x0,
                    const ControlSignal& u, double t_final, int steps, double overflow_bound) {
    if (t_final <= 0.0 || steps < 1) throw Error("simulate: need t_final > 0 and steps >= 1");
    if (static_cast<int>(x0.size()) != sys.n) throw Error("simulate: bad initial state size");
    if (u.channels != sys.m) throw Error("simulate: control channel mismatch");

    auto a = to_double(sys.A);
    auto b = to_double(sys.B);
    std::size_t n = static_cast<std::size_t>(sys.n);
    std::size_t m = static_cast<std::size_t>(sys.m);

    auto deriv = [&](const std::vector<double>& x, double t, std::vector<double>& out) {
        mat_vec(a, x, out);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                out[i] += b[i][j] * u.eval(static_cast<int>(j), t);
    };

    Trajectory tr;
    tr.times.reserve(static_cast<std::size_t>(steps) + 1);
    tr.states.reserve(static_cast<std::size_t>(steps) + 1);
    tr.controls.reserve(static_cast<std::size_t>(steps) + 1);

    double h = t_final / steps;
    std::vector<double> x = x0;
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

    auto record = [&](double t, const std::vector<double>& state) {
        std::vector<double> uc(m);
        for (std::size_t j = 0; j < m; ++j) uc[j] = u.eval(static_cast<int>(j), t);
        tr.times.push_back(t);
        tr.states.push_back(state);
        tr.controls.push_back(std::move(uc));
        for (double v : state)
            if (!std::isfinite(v) || std::fabs(v) > overflow_bound) throw NonFiniteError();
    };

    record(0.0, x);
    for (int s = 0; s < steps; ++s) {
        double t = s * h;
        deriv(x, t, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
        deriv(tmp, t + 0.5 * h, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
        deriv(tmp, t + 0.5 * h, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
        deriv(tmp, t + h, k4);
        for (std::size_t i = 0; i < n; ++i)
            x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        record((s + 1) * h, x);
    }
    return tr;
}

DynamicCheck verify_witness_dynamically(const ControlSystem& sys1, const ControlSystem& sys2,
                                        const FeedbackWitness& w, const ControlSignal& u,
                                        const std::vector<double>& x0, double t_final, int steps,
                                        double tol) {
    if (tol <= 0.0) throw Error("verify: tol must be positive");
    if (sys1.n != sys2.n || sys1.m != sys2.m) throw Error("verify: system dimension mismatch");
    if (!is_invertible(w.O) || !is_invertible(w.Q)) throw SingularWitnessError();

    auto o_inv = to_double(inverse(w.O));
    RationalMatrix q_inv_exact = inverse(w.Q);
    auto q_inv = to_double(q_inv_exact);
    auto qlo = to_double(q_inv_exact * w.L * inverse(w.O));
    auto a2 = to_double(sys2.A);
    auto b2 = to_double(sys2.B);

    Trajectory tr = simulate(sys1, x0, u, t_final, steps);
    std::size_t n = static_cast<std::size_t>(sys1.n);
    std::size_t m = static_cast<std::size_t>(sys1.m);
    std::size_t samples = tr.times.size();

    std::vector<std::vector<double>> y(samples, std::vector<double>(n));
    std::vector<std::vector<double>> v(samples, std::vector<double>(m));
    std::vector<double> qu(m);
    for (std::size_t s = 0; s < samples; ++s) {
        mat_vec(o_inv, tr.states[s], y[s]);
        mat_vec(q_inv, tr.controls[s], qu);
        for (std::size_t i = 0; i < m; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += qlo[i][j] * tr.states[s][j];
            v[s][i] = qu[i] - acc;
        }
    }

    double h = t_final / steps;
    double max_residual = 0.0;
    std::vector<double> rhs(n);
    auto near_breakpoint = [&](double t) {
        for (double bp : u.breakpoints())
            if (std::fabs(t - bp) <= h * 1.5) return true;
        return false;
    };
    for (std::size_t s = 1; s + 1 < samples; ++s) {
        if (near_breakpoint(tr.times[s])) continue;
        mat_vec(a2, y[s], rhs);
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < m; ++j) acc += b2[i][j] * v[s][j];
            double dydt = (y[s + 1][i] - y[s - 1][i]) / (2.0 * h);
            double res = std::fabs(dydt - rhs[i] - acc);
            if (res > max_residual) max_residual = res;
        }
    }
    return {max_residual, max_residual <= tol};
}

std::vector<ControlSignal> standard_battery(int channels, double t_final, std::uint64_t seed) {
    Rng rng{seed ^ 0xb5297a4d3f84d5b5ULL};
    std::vector<ControlSignal> battery;
    battery.push_back(ControlSignal::zero_signal(channels));

    std::vector<double> heights(static_cast<std::size_t>(channels));
    for (auto& hgt : heights) {
        hgt = rng.unit();
        if (hgt == 0.0) hgt = 1.0;
    }
    battery.push_back(ControlSignal::step_signal(std::move(heights)));

    for (int deg : {2, 3}) {
        std::vector<std::vector<double>> coeffs(static_cast<std::size_t>(channels));
        for (auto& c : coeffs) {
            c.resize(static_cast<std::size_t>(deg) + 1);
            for (auto& x : c) x = rng.unit();
        }
        battery.push_back(ControlSignal::polynomial_signal(std::move(coeffs)));
    }

    std::vector<double> knots{0.0, 0.25 * t_final, 0.5 * t_final, 0.75 * t_final, t_final};
    std::vector<std::vector<double>> values(static_cast<std::size_t>(channels));
    for (auto& v : values) {
        v.resize(knots.size());
        for (auto& x : v) x = rng.unit();
    }
    battery.push_back(ControlSignal::piecewise_linear_signal(std::move(knots), std::move(values)));
    return battery;
}

std::vector<double> seeded_initial_state(int n, std::uint64_t seed) {
    Rng rng{seed ^ 0x94d049bb133111ebULL};
    std::vector<double> x0(static_cast<std::size_t>(n));
    for (auto& x : x0) {
        x = rng.unit();
        if (x == 0.0) x = 0.5;
    }
    return x0;
}

}  // namespace lcs
