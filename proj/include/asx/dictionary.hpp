#ifndef ASX_DICTIONARY_HPP
#define ASX_DICTIONARY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "random.hpp"
#include "simplex_ls.hpp"
#include "types.hpp"

// Online alternating minimization of
//
//     (1/N) sum_j |y_j - X b_j|^2,   b_j >= 0, sum(b_j) = r, |x_i| <= 1
//
// Coefficients come from the active-set solver; the bases are updated by one
// sweep of projected block coordinate descent on the accumulated sufficient
// statistics A = sum b b^T and B = sum y b^T. Each training point contributes
// only its most recent code, so with batch_size = N an epoch is one exact
// alternation step and the objective cannot increase.

namespace asx {

struct TrainConfig {
	int bases = 0;
	double radius = 1.0;
	int epochs = 50;
	int batch_size = 1;
	std::uint64_t seed = 0;
	double tol_rel_objective = 1e-6;
	/// Scale accumulated statistics by (1 - 1/t) before each batch.
	bool forget = false;
	SolverConfig solver;
};

inline void validate(const TrainConfig& cfg)
{
	if (cfg.bases < 2)
		throw Error(ErrorKind::Configuration, "train: requires p >= 2, got " + std::to_string(cfg.bases));
	if (!(cfg.radius > 0.0 && cfg.radius <= 1.0))
		throw Error(ErrorKind::Configuration, "train: radius must lie in (0, 1]");
	if (cfg.epochs < 1)
		throw Error(ErrorKind::Configuration, "train: epochs must be >= 1");
	if (cfg.batch_size < 1)
		throw Error(ErrorKind::Configuration, "train: batch size must be >= 1");
	if (!(cfg.tol_rel_objective >= 0.0))
		throw Error(ErrorKind::Configuration, "train: tolerance must be nonnegative");
	validate(cfg.solver);
}

struct SufficientStats {
	MatrixXd A; // p x p, sum of b b^T
	MatrixXd B; // d x p, sum of y b^T
	std::size_t count = 0;

	SufficientStats() = default;
	SufficientStats(Index d, Index p) : A(MatrixXd::Zero(p, p)), B(MatrixXd::Zero(d, p)) {}

	/// Adds (weight = 1) or retracts (weight = -1) one point's contribution.
	void accumulate(const VectorXd& y, const CoefficientVector& code, double weight = 1.0)
	{
		const auto& s = code.support;
		const auto& b = code.values;
		for (int i : s) {
			B.col(i) += weight * b[i] * y;
			for (int j : s)
				A(i, j) += weight * b[i] * b[j];
		}
		if (weight > 0)
			++count;
		else if (count > 0)
			--count;
	}

	void scale(double factor)
	{
		A *= factor;
		B *= factor;
	}
};

inline constexpr double unused_column_cutoff = 1e-12;

/// One sweep of projected block coordinate descent over the columns:
/// x_j <- P(x_j + (b_j - X a_j) / A_jj), P projecting onto the unit ball.
/// Columns with A_jj <= 1e-12 are left as they are.
inline BasisSet update_bases(const SufficientStats& stats, const BasisSet& basis)
{
	if (stats.count < 1)
		throw Error(ErrorKind::Configuration, "update_bases: statistics are empty");
	BasisSet out = basis;
	MatrixXd& x = out.bases;
	for (Index j = 0; j < x.cols(); ++j) {
		const double ajj = stats.A(j, j);
		if (!(ajj > unused_column_cutoff))
			continue;
		VectorXd u = x.col(j) + (stats.B.col(j) - x * stats.A.col(j)) / ajj;
		const double n = u.norm();
		if (n > 1.0)
			u /= n;
		x.col(j) = u;
	}
	return out;
}

/// The quadratic surrogate (1/2) tr(X^T X A) - tr(X^T B); equal to the
/// training objective up to a constant and a factor when A and B hold the
/// current codes of every point.
inline double surrogate_objective(const SufficientStats& stats, const MatrixXd& bases)
{
	return 0.5 * (bases.transpose() * bases * stats.A).trace() - (bases.transpose() * stats.B).trace();
}

struct TrainResult {
	BasisSet basis;
	std::vector<CoefficientVector> activations; // final pass, one per training point
	std::vector<double> objective_trace;        // (1/N) sum |y - X b|^2 after each epoch
	int epochs_run = 0;
	std::vector<std::string> warnings;
};

namespace detail {

inline MatrixXd initial_bases(const DataSet& data, int p, Rng& rng, std::vector<std::string>& warnings)
{
	const Index n = data.size();
	const Index d = data.dim();
	MatrixXd x(d, p);
	const auto order = random_permutation(static_cast<std::size_t>(n), rng);
	const Index from_data = std::min<Index>(n, p);
	for (Index j = 0; j < from_data; ++j)
		x.col(j) = data.points.row(static_cast<Index>(order[static_cast<std::size_t>(j)])).transpose();
	if (from_data < p) {
		warnings.push_back("train: N = " + std::to_string(n) + " < p = " + std::to_string(p) +
				   "; remaining bases start at random unit vectors");
		boost::random::normal_distribution<double> g;
		for (Index j = from_data; j < p; ++j) {
			for (Index r = 0; r < d; ++r)
				x(r, j) = g(rng);
			x.col(j).normalize();
		}
	}
	return x;
}

inline CoefficientVector code_point(const MatrixXd& bases, const VectorXd& y, double radius, const SolverConfig& cfg,
				    int epoch, std::size_t point)
{
	try {
		return solve_simplex_ls(bases, y, radius, cfg).coefficients;
	} catch (const SolverError& e) {
		throw Error(ErrorKind::Training, "train: epoch " + std::to_string(epoch) + ", point " +
							 std::to_string(point) + ": " + e.what());
	}
}

} // namespace detail

/// Learns the basis set. Deterministic for a given seed, config and data,
/// independent of the worker count.
inline TrainResult train(const DataSet& data, const TrainConfig& cfg)
{
	validate(cfg);
	validate(data, true);

	const Index n = data.size();
	const Index d = data.dim();
	const int p = cfg.bases;
	const auto un = static_cast<std::size_t>(n);

	TrainResult result;
	Rng rng(cfg.seed);

	BasisSet basis{detail::initial_bases(data, p, rng, result.warnings), cfg.radius};

	std::vector<CoefficientVector> codes(un);
	std::vector<char> coded(un, 0);
	const std::size_t batch = static_cast<std::size_t>(cfg.batch_size);
	double previous = std::numeric_limits<double>::infinity();
	std::size_t step = 0;

	for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
		// Rebuilding each epoch keeps rounding drift out of the running sums.
		SufficientStats stats(d, p);
		for (std::size_t i = 0; i < un; ++i)
			if (coded[i])
				stats.accumulate(data.points.row(static_cast<Index>(i)).transpose(), codes[i]);

		std::vector<char> used(static_cast<std::size_t>(p), 0);
		const auto order = random_permutation(un, rng);
		for (std::size_t start = 0; start < un; start += batch) {
			const std::size_t stop = std::min(un, start + batch);
			std::vector<CoefficientVector> fresh(stop - start);
			parallel_for(fresh.size(), [&](std::size_t k) {
				const std::size_t i = order[start + k];
				fresh[k] = detail::code_point(basis.bases, data.points.row(static_cast<Index>(i)).transpose(),
							      cfg.radius, cfg.solver, epoch, i);
			});
			++step;
			if (cfg.forget && step > 1)
				stats.scale(1.0 - 1.0 / static_cast<double>(step));
			for (std::size_t k = 0; k < fresh.size(); ++k) {
				const std::size_t i = order[start + k];
				const VectorXd y = data.points.row(static_cast<Index>(i)).transpose();
				if (coded[i] && !cfg.forget)
					stats.accumulate(y, codes[i], -1.0);
				stats.accumulate(y, fresh[k]);
				for (int s : fresh[k].support)
					used[static_cast<std::size_t>(s)] = 1;
				codes[i] = std::move(fresh[k]);
				coded[i] = 1;
			}
			basis = update_bases(stats, basis);
		}

		std::vector<double> err(un);
		parallel_for(un, [&](std::size_t i) {
			err[i] = (data.points.row(static_cast<Index>(i)).transpose() - basis.bases * codes[i].values)
					 .squaredNorm();
		});
		const double objective = std::accumulate(err.begin(), err.end(), 0.0) / static_cast<double>(n);

		// Dead atoms move to the worst-reconstructed points. Their codes are
		// zero everywhere, so the recorded objective is unaffected.
		std::vector<std::size_t> worst(un);
		std::iota(worst.begin(), worst.end(), std::size_t{0});
		std::stable_sort(worst.begin(), worst.end(), [&](std::size_t a, std::size_t b) { return err[a] > err[b]; });
		std::size_t next = 0;
		for (int j = 0; j < p; ++j) {
			if (used[static_cast<std::size_t>(j)])
				continue;
			if (next >= un || err[worst[next]] <= 1e-12)
				break;
			basis.bases.col(j) = data.points.row(static_cast<Index>(worst[next++])).transpose();
		}

		result.objective_trace.push_back(objective);
		result.epochs_run = epoch;
		if (objective == 0.0)
			break;
		if (std::isfinite(previous) && std::abs(previous - objective) < cfg.tol_rel_objective * previous)
			break;
		previous = objective;
	}

	result.activations.resize(un);
	parallel_for(un, [&](std::size_t i) {
		result.activations[i] = detail::code_point(basis.bases, data.points.row(static_cast<Index>(i)).transpose(),
							   cfg.radius, cfg.solver, result.epochs_run + 1, i);
	});
	result.basis = std::move(basis);
	return result;
}

} // namespace asx

#endif
