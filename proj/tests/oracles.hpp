#ifndef ASX_TESTS_ORACLES_HPP
#define ASX_TESTS_ORACLES_HPP

// Independent reference computations used to freeze expected values. None
// of these call into the library's solver path.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace asx_test {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Euclidean projection onto { b >= 0, sum(b) = r } by sorting.
inline VectorXd project_to_simplex(const VectorXd& v, double r)
{
	std::vector<double> u(v.data(), v.data() + v.size());
	std::sort(u.begin(), u.end(), std::greater<>());
	double cumsum = 0.0;
	double theta = 0.0;
	for (std::size_t i = 0; i < u.size(); ++i) {
		cumsum += u[i];
		const double t = (cumsum - r) / static_cast<double>(i + 1);
		if (u[i] - t > 0.0)
			theta = t;
	}
	VectorXd out(v.size());
	for (Eigen::Index i = 0; i < v.size(); ++i)
		out[i] = std::max(v[i] - theta, 0.0);
	return out;
}

/// Projected gradient on |y - X b|^2 over the scaled simplex with step
/// 1 / (2 sigma_max^2). Returns the final objective.
inline double projected_gradient_objective(const MatrixXd& x, const VectorXd& y, double r, int iterations,
					   VectorXd* argmin = nullptr)
{
	const Eigen::JacobiSVD<MatrixXd> svd(x);
	const double smax = svd.singularValues()(0);
	const double step = 1.0 / (2.0 * smax * smax);
	VectorXd b = VectorXd::Constant(x.cols(), r / static_cast<double>(x.cols()));
	for (int it = 0; it < iterations; ++it) {
		const VectorXd g = 2.0 * x.transpose() * (x * b - y);
		b = project_to_simplex(b - step * g, r);
	}
	if (argmin)
		*argmin = b;
	return (y - x * b).squaredNorm();
}

/// Two-column problem on a 1-D grid over b0 in [0, r]: returns the best b0.
inline double grid_search_two_columns(const MatrixXd& x, const VectorXd& y, double r, double step,
				      double* best_objective = nullptr)
{
	double best = 0.0;
	double best_obj = std::numeric_limits<double>::infinity();
	const long n = static_cast<long>(std::llround(r / step));
	for (long i = 0; i <= n; ++i) {
		const double b0 = std::min(r, static_cast<double>(i) * step);
		const VectorXd rec = b0 * x.col(0) + (r - b0) * x.col(1);
		const double obj = (y - rec).squaredNorm();
		if (obj < best_obj) {
			best_obj = obj;
			best = b0;
		}
	}
	if (best_objective)
		*best_objective = best_obj;
	return best;
}

/// Distance from y to the segment [a, b] in closed form.
inline double segment_distance(const VectorXd& a, const VectorXd& b, const VectorXd& y)
{
	const VectorXd ab = b - a;
	const double len2 = ab.squaredNorm();
	double t = len2 > 0.0 ? (y - a).dot(ab) / len2 : 0.0;
	t = std::clamp(t, 0.0, 1.0);
	return (y - (a + t * ab)).norm();
}

} // namespace asx_test

#endif
