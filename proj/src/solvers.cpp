#include "structkit/solvers.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "structkit/assembly.hpp"
#include "structkit/errors.hpp"

namespace structkit {

namespace {

using Index = Eigen::Index;

std::string num(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::vector<Index> as_index(const std::vector<std::size_t>& v) {
    return {v.begin(), v.end()};
}

void check_partition(const DofPartition& p, Index ndof) {
    std::vector<int> seen(static_cast<std::size_t>(ndof), 0);
    for (const auto* set : {&p.free, &p.fixed}) {
        for (std::size_t i = 0; i < set->size(); ++i) {
            const std::size_t d = (*set)[i];
            if (d >= seen.size()) {
                throw Error(ErrorKind::InvalidArgument,
                            "partition index " + std::to_string(d) + " out of range");
            }
            if (i > 0 && (*set)[i - 1] >= d) {
                throw Error(ErrorKind::InvalidArgument, "partition indices must be ascending");
            }
            ++seen[d];
        }
    }
    for (int count : seen) {
        if (count != 1) {
            throw Error(ErrorKind::InvalidArgument,
                        "free and fixed sets must cover every DOF exactly once");
        }
    }
}

void check_square(const Eigen::MatrixXd& m, Index n, const char* what) {
    if (m.rows() != n || m.cols() != n) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string(what) + " must be " + std::to_string(n) + "x" +
                        std::to_string(n));
    }
}

} // namespace

void check_settings(const SolverSettings& s) {
    if (!(s.condition_limit > 0.0) || !(s.eig_positivity_floor > 0.0) ||
        !(s.complex_tolerance > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "solver thresholds must be positive");
    }
}

double condition_number(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return 1.0;
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) return std::numeric_limits<double>::infinity();

    double largest = 0.0;
    double smallest = 0.0;
    if ((m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale) {
        const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
        const Eigen::VectorXd mags = es.eigenvalues().cwiseAbs();
        largest = mags.maxCoeff();
        smallest = mags.minCoeff();
    } else {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
        const Eigen::VectorXd& sv = svd.singularValues();
        largest = sv(0);
        smallest = sv(sv.size() - 1);
    }
    if (smallest == 0.0) return std::numeric_limits<double>::infinity();
    return largest / smallest;
}

StaticSolution solve_partitioned_linear(const Eigen::MatrixXd& K, const Eigen::VectorXd& F,
                                        const DofPartition& partition,
                                        const Eigen::VectorXd& prescribed,
                                        const SolverSettings& settings) {
    check_settings(settings);
    const Index n = K.rows();
    check_square(K, n, "stiffness matrix");
    if (F.size() != n) throw Error(ErrorKind::InvalidArgument, "load vector size mismatch");
    check_partition(partition, n);
    if (partition.fixed.empty()) {
        throw Error(ErrorKind::SingularSystem,
                    "no constrained DOFs: rigid-body motion makes the system singular");
    }
    if (prescribed.size() != static_cast<Index>(partition.fixed.size())) {
        throw Error(ErrorKind::InvalidArgument,
                    "prescribed values must match the number of fixed DOFs");
    }

    const auto f = as_index(partition.free);
    const auto c = as_index(partition.fixed);

    StaticSolution sol;
    sol.displacements = Eigen::VectorXd::Zero(n);
    sol.displacements(c) = prescribed;

    if (!f.empty()) {
        const Eigen::MatrixXd K_ff = K(f, f);
        const double cond = condition_number(K_ff);
        if (!(cond < settings.condition_limit)) {
            throw Error(ErrorKind::IllConditioned,
                        "reduced stiffness condition number " + num(cond) +
                            " reaches the limit " + num(settings.condition_limit));
        }
        const Eigen::VectorXd rhs = F(f) - K(f, c) * prescribed;
        const Eigen::PartialPivLU<Eigen::MatrixXd> lu(K_ff);
        Eigen::VectorXd u_f = lu.solve(rhs);
        u_f += lu.solve(rhs - K_ff * u_f);  // one step of iterative refinement
        sol.displacements(f) = u_f;
    }

    sol.reactions = Eigen::VectorXd::Zero(n);
    sol.reactions(c) = K(c, Eigen::all) * sol.displacements - F(c);
    return sol;
}

BucklingSolution solve_buckling_eigen(const Eigen::MatrixXd& K_elastic,
                                      const Eigen::MatrixXd& K_geometric,
                                      const DofPartition& partition,
                                      const SolverSettings& settings) {
    check_settings(settings);
    const Index n = K_elastic.rows();
    check_square(K_elastic, n, "elastic stiffness");
    check_square(K_geometric, n, "geometric stiffness");
    check_partition(partition, n);
    if (partition.free.empty()) {
        throw Error(ErrorKind::InvalidArgument, "buckling analysis needs at least one free DOF");
    }

    const auto f = as_index(partition.free);
    const Eigen::MatrixXd A = K_elastic(f, f);
    const Eigen::MatrixXd B = -K_geometric(f, f);

    Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges(A, B, /*computeEigenvectors=*/true);
    if (ges.info() != Eigen::Success) {
        throw Error(ErrorKind::ComplexSpectrum, "generalized eigenvalue iteration did not converge");
    }

    const Eigen::VectorXcd& alphas = ges.alphas();
    const Eigen::VectorXd& betas = ges.betas();
    int finite_count = 0;
    int real_count = 0;
    Index best = -1;
    double best_lambda = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < alphas.size(); ++i) {
        if (betas(i) == 0.0) continue;  // infinite eigenvalue: -K_g is singular there
        const std::complex<double> lambda = alphas(i) / betas(i);
        if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) continue;
        ++finite_count;
        if (std::abs(lambda.imag()) > settings.complex_tolerance * std::abs(lambda)) continue;
        ++real_count;
        if (lambda.real() > settings.eig_positivity_floor && lambda.real() < best_lambda) {
            best_lambda = lambda.real();
            best = i;
        }
    }
    if (finite_count > 0 && real_count == 0) {
        throw Error(ErrorKind::ComplexSpectrum,
                    "every finite eigenvalue has a significant imaginary part");
    }
    if (best < 0) {
        throw Error(ErrorKind::NoBucklingMode,
                    "no eigenvalue exceeds the positivity floor " +
                        num(settings.eig_positivity_floor));
    }

    // Remove any arbitrary complex phase before dropping the imaginary part.
    Eigen::VectorXcd v = ges.eigenvectors().col(best);
    Index k = 0;
    v.cwiseAbs().maxCoeff(&k);
    v *= std::conj(v(k)) / std::abs(v(k));
    Eigen::VectorXd phi = v.real();
    phi.cwiseAbs().maxCoeff(&k);
    phi /= phi(k);

    BucklingSolution out;
    out.lambda_cr = best_lambda;
    out.mode = Eigen::VectorXd::Zero(n);
    out.mode(f) = phi;
    return out;
}

StaticSolution solve_linear_elastic_frame(const FrameModel& model,
                                          const SolverSettings& settings) {
    require_valid(model, /*allow_unconstrained=*/true);
    const Eigen::MatrixXd K = assemble_global_elastic_stiffness(model);
    const Eigen::VectorXd F = assemble_global_loads(model);
    const DofPartition partition = partition_dofs(model);
    return solve_partitioned_linear(K, F, partition, prescribed_values(model, partition),
                                    settings);
}

BucklingSolution elastic_critical_load(const FrameModel& model, const SolverSettings& settings) {
    const StaticSolution reference = solve_linear_elastic_frame(model, settings);
    const Eigen::MatrixXd K_e = assemble_global_elastic_stiffness(model);
    const Eigen::MatrixXd K_g = assemble_global_geometric_stiffness(model, reference.displacements);
    return solve_buckling_eigen(K_e, K_g, partition_dofs(model), settings);
}

} // namespace structkit
