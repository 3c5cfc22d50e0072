#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

namespace flipstiefel {

/// An n x 2k matrix with (approximately) orthonormal columns.
struct StiefelFrame {
    Eigen::MatrixXd matrix;

    /// max |V^T V - I|.
    double orthonormality_error() const;
};

/// Smooth test map R^n -> R^m of the form f(v) = c + A v + (v^T Q_j v)_j,
/// with all coefficients drawn from a seeded generator. Affine plus
/// quadratic keeps Jacobians cheap while behaving generically.
struct SmoothMap {
    Eigen::VectorXd c;               // m
    Eigen::MatrixXd a;               // m x n
    std::vector<Eigen::MatrixXd> q;  // m symmetric n x n forms

    Eigen::VectorXd eval(const Eigen::VectorXd& v) const;
    Eigen::MatrixXd jacobian(const Eigen::VectorXd& v) const;  // m x n

    static SmoothMap random(int n, int m, std::uint64_t seed);
    static SmoothMap constant(int n, int m, double value);
};

/// Search problem: find an orthonormal 2k-frame whose consecutive column
/// pairs are coincident under f. The objective is
///   sum_i |f(v_{2i-1}) - f(v_{2i})|^2,
/// which vanishes exactly at the frames the existence theorems promise.
struct WitnessProblem {
    int n;
    int k;
    int m;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> f;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jac;

    static WitnessProblem make(int n, int k, int m, SmoothMap map);

    /// Throws std::runtime_error when f produces non-finite values.
    double objective(const Eigen::MatrixXd& frame) const;
    Eigen::MatrixXd euclidean_gradient(const Eigen::MatrixXd& frame) const;
};

/// Projection of the Euclidean gradient to the tangent space at V:
/// G - V sym(V^T G).
Eigen::MatrixXd riemannian_gradient(const WitnessProblem& p, const StiefelFrame& v);

/// QR-based retraction: the Q factor of V + step with the R diagonal made
/// positive. A rank-deficient sum is retried with a deterministic jitter.
StiefelFrame retract(const StiefelFrame& v, const Eigen::MatrixXd& step);

struct SolveBudget {
    int max_restarts = 32;
    int max_iters = 1000;
    double residual_target = 1e-9;
};

struct WitnessResult {
    StiefelFrame frame;
    double residual = 0.0;
    long long iterations = 0;  // accepted descent steps over all restarts
    int restarts_used = 0;
    bool converged = false;
    std::uint64_t seed = 0;
};

/// Multi-start projected gradient descent with Armijo backtracking and QR
/// retraction. Every restart runs to its own stopping point (its RNG stream
/// depends only on (seed, restart index)), and the best frame is the one
/// with minimum residual, ties broken by restart index; results are
/// therefore identical no matter how restarts are scheduled. Restarts run
/// in parallel.
WitnessResult solve(const WitnessProblem& p, const SolveBudget& budget, std::uint64_t seed);

/// Single-threaded reference path; bit-identical to solve().
WitnessResult solve_serial(const WitnessProblem& p, const SolveBudget& budget, std::uint64_t seed);

}  // namespace flipstiefel
