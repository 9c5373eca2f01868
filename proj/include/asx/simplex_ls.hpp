#ifndef ASX_SIMPLEX_LS_HPP
#define ASX_SIMPLEX_LS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "types.hpp"

// Least squares over the scaled probability simplex:
//
//     minimize |y - X b|^2   subject to  b >= 0,  sum(b) = r
//
// solved with a primal active-set method. The working set is the support;
// on each working set the equality-constrained minimizer is found by a
// least-squares solve in the null space of the sum constraint.

namespace asx {

struct SolverConfig {
	double kkt_tolerance = 1e-9;
	/// Add/remove steps allowed; unset means 10 * (number of columns).
	std::optional<int> max_iterations;
	double activation_threshold = tolerance::activation;
};

inline void validate(const SolverConfig& cfg)
{
	if (!(cfg.kkt_tolerance > 0.0) || !(cfg.activation_threshold > 0.0))
		throw Error(ErrorKind::Configuration, "solver: tolerances must be positive");
	if (cfg.max_iterations && *cfg.max_iterations < 1)
		throw Error(ErrorKind::Configuration, "solver: max_iterations must be >= 1");
}

struct SimplexLsResult {
	CoefficientVector coefficients;
	double objective = 0.0;    // squared residual |y - X b|^2
	double kkt_residual = 0.0; // max violation of the stationarity / dual-feasibility conditions
	int iterations = 0;
};

namespace detail {

/// g = 2 X^T (X b - y). Multiplier mu is the mean of g over the support.
inline double kkt_residual(const VectorXd& grad, const std::vector<int>& working)
{
	double mu = 0.0;
	for (int i : working)
		mu += grad[i];
	mu /= static_cast<double>(working.size());
	double res = 0.0;
	std::vector<char> in(static_cast<std::size_t>(grad.size()), 0);
	for (int i : working) {
		in[static_cast<std::size_t>(i)] = 1;
		res = std::max(res, std::abs(grad[i] - mu));
	}
	for (Index j = 0; j < grad.size(); ++j)
		if (!in[static_cast<std::size_t>(j)])
			res = std::max(res, mu - grad[j]);
	return res;
}

/// Minimizer of |y - X_W z|^2 subject to sum(z) = sum(b_W), returned as the
/// full-length vector. Parametrizes z = b_W + [u; -sum(u)], which turns the
/// problem into an unconstrained least squares on column differences. Rank
/// deficiency (affinely dependent columns) yields the minimum-norm step.
inline VectorXd working_set_minimizer(const MatrixXd& design, const VectorXd& target, const VectorXd& beta,
				      const std::vector<int>& working)
{
	VectorXd z = beta;
	const Index k = static_cast<Index>(working.size());
	if (k <= 1)
		return z;
	const int last = working.back();
	MatrixXd diff(design.rows(), k - 1);
	for (Index i = 0; i + 1 < k; ++i)
		diff.col(i) = design.col(working[static_cast<std::size_t>(i)]) - design.col(last);
	const VectorXd residual = target - design * beta;
	const VectorXd u = diff.completeOrthogonalDecomposition().solve(residual);
	for (Index i = 0; i + 1 < k; ++i)
		z[working[static_cast<std::size_t>(i)]] += u[i];
	z[last] -= u.sum();
	return z;
}

} // namespace detail

/// Solves the simplex-constrained least-squares problem for one target.
/// Starts from all mass on the column with the largest inner product with
/// the target, then alternates equality-constrained solves with blocking
/// steps (drop) and most-negative-reduced-gradient additions (add).
inline SimplexLsResult solve_simplex_ls(const MatrixXd& design, const VectorXd& target, double radius,
					const SolverConfig& cfg = {})
{
	const Index k = design.cols();
	if (k < 1)
		throw Error(ErrorKind::Validation, "solve_simplex_ls: design has no columns");
	if (design.rows() != target.size())
		throw Error(ErrorKind::Validation, "solve_simplex_ls: design has " + std::to_string(design.rows()) +
							   " rows, target has length " + std::to_string(target.size()));
	if (!(radius > 0.0 && radius <= 1.0))
		throw Error(ErrorKind::Validation, "solve_simplex_ls: radius must lie in (0, 1]");
	if (!design.allFinite() || !target.allFinite())
		throw Error(ErrorKind::Validation, "solve_simplex_ls: non-finite input");

	const int max_iter = cfg.max_iterations.value_or(10 * static_cast<int>(k));
	const VectorXd corr = design.transpose() * target;

	Index start = 0;
	for (Index i = 1; i < k; ++i)
		if (corr[i] > corr[start])
			start = i;

	VectorXd beta = VectorXd::Zero(k);
	beta[start] = radius;
	std::vector<int> working{static_cast<int>(start)};

	auto objective_of = [&](const VectorXd& b) { return (target - design * b).squaredNorm(); };
	auto gradient_of = [&](const VectorXd& b) -> VectorXd {
		return 2.0 * (design.transpose() * (design * b - target));
	};

	VectorXd best = beta;
	double best_obj = objective_of(beta);
	double best_kkt = std::numeric_limits<double>::infinity();
	int last_added = -1;

	for (int iter = 0; iter < max_iter; ++iter) {
		const VectorXd z = detail::working_set_minimizer(design, target, beta, working);

		bool feasible = true;
		for (int i : working)
			if (z[i] < 0.0) {
				feasible = false;
				break;
			}

		if (feasible) {
			beta = z;
			const VectorXd grad = gradient_of(beta);
			double mu = 0.0;
			for (int i : working)
				mu += grad[i];
			mu /= static_cast<double>(working.size());

			const double kkt = detail::kkt_residual(grad, working);
			const double obj = objective_of(beta);
			if (obj <= best_obj) {
				best = beta;
				best_obj = obj;
				best_kkt = kkt;
			}

			int enter = -1;
			double most = mu - cfg.kkt_tolerance;
			for (Index j = 0; j < k; ++j) {
				if (std::binary_search(working.begin(), working.end(), static_cast<int>(j)))
					continue;
				if (grad[j] < most) {
					most = grad[j];
					enter = static_cast<int>(j);
				}
			}
			if (enter < 0) {
				for (Index i = 0; i < k; ++i)
					beta[i] = std::max(beta[i], 0.0);
				beta *= radius / beta.sum();

				SimplexLsResult out;
				out.coefficients.values = beta;
				out.coefficients.support = support_of(beta, radius, cfg.activation_threshold);
				out.objective = objective_of(beta);
				out.kkt_residual = detail::kkt_residual(gradient_of(beta), working);
				out.iterations = iter + 1;
				return out;
			}
			working.insert(std::lower_bound(working.begin(), working.end(), enter), enter);
			last_added = enter;
			continue;
		}

		// Step toward z until the first working coordinate hits zero.
		double step = 1.0;
		int blocking = -1;
		for (int i : working) {
			if (z[i] < 0.0) {
				const double ratio = beta[i] / (beta[i] - z[i]);
				if (ratio < step || blocking < 0) {
					step = ratio;
					blocking = i;
				}
			}
		}
		beta += step * (z - beta);
		beta[blocking] = 0.0;
		std::vector<int> kept;
		kept.reserve(working.size());
		for (int i : working) {
			if (i != blocking && beta[i] > 0.0)
				kept.push_back(i);
			else
				beta[i] = 0.0;
		}
		if (kept.empty()) {
			// Only possible through rounding; fall back to the entering column.
			const int keep = last_added >= 0 ? last_added : working.front();
			kept.push_back(keep);
			beta.setZero();
			beta[keep] = radius;
		}
		working = std::move(kept);
		// Removal can leave the mass slightly off r through rounding.
		beta *= radius / beta.sum();
	}

	throw SolverError("solve_simplex_ls: no convergence within " + std::to_string(max_iter) + " iterations", best,
			  best_kkt);
}

struct SimplexProjection {
	VectorXd coefficients; // one entry per simplex vertex, summing to r
	double error = 0.0;    // Euclidean distance, not squared
};

/// Closest point to `point` in the simplex (scaled by the basis radius).
inline SimplexProjection project_onto_simplex(const Simplex& simplex, const BasisSet& basis, const VectorXd& point,
					      const SolverConfig& cfg = {})
{
	if (point.size() != basis.dim())
		throw Error(ErrorKind::Validation, "project_onto_simplex: point has length " + std::to_string(point.size()) +
							   ", basis has d = " + std::to_string(basis.dim()));
	const MatrixXd v = vertex_matrix(simplex, basis);
	SimplexLsResult r = solve_simplex_ls(v, point, basis.radius, cfg);
	SimplexProjection out;
	out.coefficients = std::move(r.coefficients.values);
	out.error = (point - v * out.coefficients).norm();
	return out;
}

struct ModelProjection {
	std::size_t simplex = 0;
	VectorXd coefficients;
	double error = 0.0;
};

/// Nearest simplex of the model. Ties go to the lowest simplex index.
inline ModelProjection project_onto_model(const SimplicialModel& model, const VectorXd& point,
					  const SolverConfig& cfg = {})
{
	if (model.simplices.empty())
		throw Error(ErrorKind::EmptyModel, "project_onto_model: model has no simplices");
	ModelProjection best;
	best.error = std::numeric_limits<double>::infinity();
	for (std::size_t t = 0; t < model.simplices.size(); ++t) {
		SimplexProjection p = project_onto_simplex(model.simplices[t], model.basis, point, cfg);
		if (p.error < best.error) {
			best.simplex = t;
			best.coefficients = std::move(p.coefficients);
			best.error = p.error;
		}
	}
	return best;
}

/// project_onto_model for every row, in parallel.
inline std::vector<ModelProjection> project_dataset(const SimplicialModel& model, const MatrixXd& points,
						    const SolverConfig& cfg = {})
{
	std::vector<ModelProjection> out(static_cast<std::size_t>(points.rows()));
	parallel_for(out.size(), [&](std::size_t i) {
		out[i] = project_onto_model(model, points.row(static_cast<Index>(i)).transpose(), cfg);
	});
	return out;
}

/// Mean Euclidean distance from the rows to their nearest simplex.
inline double mean_projection_error(const SimplicialModel& model, const MatrixXd& points,
				    const SolverConfig& cfg = {})
{
	const auto proj = project_dataset(model, points, cfg);
	double total = 0.0;
	for (const auto& p : proj)
		total += p.error;
	return proj.empty() ? 0.0 : total / static_cast<double>(proj.size());
}

} // namespace asx

#endif
