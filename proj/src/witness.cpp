#include "flipstiefel/witness.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

namespace flipstiefel {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Eigen::MatrixXd gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd m(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) m(r, c) = normal(rng);
    return m;
}

/// Thin Q factor with positive R diagonal; returns false when the input
/// is numerically rank-deficient.
bool thin_qr(const Eigen::MatrixXd& a, Eigen::MatrixXd& q_out) {
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    const Eigen::MatrixXd r = qr.matrixQR().topRows(a.cols()).triangularView<Eigen::Upper>();
    for (int i = 0; i < a.cols(); ++i)
        if (std::abs(r(i, i)) < 1e-12) return false;
    q_out = qr.householderQ() * Eigen::MatrixXd::Identity(a.rows(), a.cols());
    for (int i = 0; i < a.cols(); ++i)
        if (r(i, i) < 0) q_out.col(i) = -q_out.col(i);
    return true;
}

}  // namespace

double StiefelFrame::orthonormality_error() const {
    const Eigen::MatrixXd gram = matrix.transpose() * matrix;
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
    return (gram - eye).cwiseAbs().maxCoeff();
}

Eigen::VectorXd SmoothMap::eval(const Eigen::VectorXd& v) const {
    Eigen::VectorXd out = c + a * v;
    for (std::size_t j = 0; j < q.size(); ++j) out(static_cast<Eigen::Index>(j)) += v.dot(q[j] * v);
    return out;
}

Eigen::MatrixXd SmoothMap::jacobian(const Eigen::VectorXd& v) const {
    Eigen::MatrixXd out = a;
    for (std::size_t j = 0; j < q.size(); ++j)
        out.row(static_cast<Eigen::Index>(j)) += (2.0 * (q[j] * v)).transpose();
    return out;
}

SmoothMap SmoothMap::random(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    SmoothMap map;
    map.c = gaussian_matrix(m, 1, rng);
    map.a = gaussian_matrix(m, n, rng);
    map.q.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Eigen::MatrixXd raw = gaussian_matrix(n, n, rng);
        map.q.push_back(0.25 * (raw + raw.transpose()));
    }
    return map;
}

SmoothMap SmoothMap::constant(int n, int m, double value) {
    SmoothMap map;
    map.c = Eigen::VectorXd::Constant(m, value);
    map.a = Eigen::MatrixXd::Zero(m, n);
    map.q.assign(static_cast<std::size_t>(m), Eigen::MatrixXd::Zero(n, n));
    return map;
}

WitnessProblem WitnessProblem::make(int n, int k, int m, SmoothMap map) {
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("WitnessProblem: requires 1 < 2k <= n");
    if (m < 1) throw std::invalid_argument("WitnessProblem: requires m >= 1");
    auto shared = std::make_shared<SmoothMap>(std::move(map));
    WitnessProblem p;
    p.n = n;
    p.k = k;
    p.m = m;
    p.f = [shared](const Eigen::VectorXd& v) { return shared->eval(v); };
    p.jac = [shared](const Eigen::VectorXd& v) { return shared->jacobian(v); };
    return p;
}

double WitnessProblem::objective(const Eigen::MatrixXd& frame) const {
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
        const Eigen::VectorXd diff = f(frame.col(2 * i)) - f(frame.col(2 * i + 1));
        total += diff.squaredNorm();
    }
    if (!std::isfinite(total))
        throw std::runtime_error("witness objective: test function produced non-finite values");
    return total;
}

Eigen::MatrixXd WitnessProblem::euclidean_gradient(const Eigen::MatrixXd& frame) const {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(frame.rows(), frame.cols());
    for (int i = 0; i < k; ++i) {
        const Eigen::VectorXd va = frame.col(2 * i);
        const Eigen::VectorXd vb = frame.col(2 * i + 1);
        const Eigen::VectorXd diff = f(va) - f(vb);
        g.col(2 * i) = 2.0 * jac(va).transpose() * diff;
        g.col(2 * i + 1) = -2.0 * jac(vb).transpose() * diff;
    }
    return g;
}

Eigen::MatrixXd riemannian_gradient(const WitnessProblem& p, const StiefelFrame& v) {
    const Eigen::MatrixXd g = p.euclidean_gradient(v.matrix);
    const Eigen::MatrixXd vtg = v.matrix.transpose() * g;
    return g - v.matrix * (0.5 * (vtg + vtg.transpose()));
}

StiefelFrame retract(const StiefelFrame& v, const Eigen::MatrixXd& step) {
    Eigen::MatrixXd q;
    if (thin_qr(v.matrix + step, q)) return StiefelFrame{std::move(q)};
    // Rank-deficient sum: jitter the step deterministically and retry.
    std::mt19937_64 rng(splitmix64(0x5745u));
    for (int attempt = 0; attempt < 8; ++attempt) {
        const Eigen::MatrixXd jitter =
            1e-8 * (1 << attempt) *
            gaussian_matrix(static_cast<int>(v.matrix.rows()), static_cast<int>(v.matrix.cols()), rng);
        if (thin_qr(v.matrix + step + jitter, q)) return StiefelFrame{std::move(q)};
    }
    throw std::runtime_error("retract: could not restore full column rank");
}

namespace {

struct RestartOutcome {
    Eigen::MatrixXd frame;
    double residual = std::numeric_limits<double>::infinity();
    long long iterations = 0;
    bool converged = false;
};

RestartOutcome run_restart(const WitnessProblem& p, const SolveBudget& budget,
                           std::uint64_t seed, int restart) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(restart) + 1)));
    StiefelFrame v;
    for (int draw = 0;; ++draw) {
        if (thin_qr(gaussian_matrix(p.n, 2 * p.k, rng), v.matrix)) break;
        if (draw == 16) throw std::runtime_error("solve: could not draw a full-rank start frame");
    }

    constexpr double kArmijo = 1e-4;
    constexpr double kGradTol = 1e-13;

    RestartOutcome out;
    double obj = p.objective(v.matrix);
    for (int iter = 0; iter < budget.max_iters; ++iter) {
        if (obj <= budget.residual_target) break;
        const Eigen::MatrixXd grad = riemannian_gradient(p, v);
        const double grad_norm2 = grad.squaredNorm();
        if (grad_norm2 < kGradTol * kGradTol) break;  // stationary, give up here

        double alpha = 1.0;
        bool accepted = false;
        for (int halvings = 0; halvings < 60; ++halvings) {
            const StiefelFrame trial = retract(v, -alpha * grad);
            const double trial_obj = p.objective(trial.matrix);
            if (trial_obj <= obj - kArmijo * alpha * grad_norm2) {
                v = trial;
                obj = trial_obj;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;  // line search stalled at a stationary point
        ++out.iterations;
    }
    out.frame = v.matrix;
    out.residual = obj;
    out.converged = obj <= budget.residual_target;
    return out;
}

WitnessResult solve_impl(const WitnessProblem& p, const SolveBudget& budget, std::uint64_t seed,
                         bool parallel) {
    if (budget.max_restarts < 1)
        throw std::invalid_argument("solve: max_restarts must be positive");

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(budget.max_restarts));
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int r = 0; r < budget.max_restarts; ++r) {
        try {
            outcomes[static_cast<std::size_t>(r)] = run_restart(p, budget, seed, r);
        } catch (...) {
#pragma omp critical
            {
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);

    int best = 0;
    for (int r = 1; r < budget.max_restarts; ++r) {
        if (outcomes[static_cast<std::size_t>(r)].residual <
            outcomes[static_cast<std::size_t>(best)].residual)
            best = r;
    }

    WitnessResult result;
    // One final projection so the reported frame is orthonormal to working
    // precision even after many retractions; residual and the converged
    // flag refer to the frame actually returned.
    StiefelFrame raw{outcomes[static_cast<std::size_t>(best)].frame};
    result.frame = retract(raw, Eigen::MatrixXd::Zero(p.n, 2 * p.k));
    result.residual = p.objective(result.frame.matrix);
    for (const auto& o : outcomes) result.iterations += o.iterations;
    result.restarts_used = budget.max_restarts;
    result.converged = result.residual <= budget.residual_target;
    result.seed = seed;
    return result;
}

}  // namespace

WitnessResult solve(const WitnessProblem& p, const SolveBudget& budget, std::uint64_t seed) {
    return solve_impl(p, budget, seed, true);
}

WitnessResult solve_serial(const WitnessProblem& p, const SolveBudget& budget, std::uint64_t seed) {
    return solve_impl(p, budget, seed, false);
}

}  // namespace flipstiefel
