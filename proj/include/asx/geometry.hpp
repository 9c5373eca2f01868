#ifndef ASX_GEOMETRY_HPP
#define ASX_GEOMETRY_HPP

#include <string>
#include <utility>

#include "types.hpp"

// Maps raw data onto the unit sphere and back. The north pole used by the
// stereographic maps is (0, ..., 0, 1).

namespace asx {

inline constexpr double zero_row_cutoff = 1e-12;
inline constexpr double pole_cutoff = 1e-12;

/// Scales every row to unit l2 norm.
inline DataSet normalize(const MatrixXd& points)
{
	DataSet out;
	out.points = points;
	for (Index i = 0; i < points.rows(); ++i) {
		const double n = points.row(i).norm();
		if (!(n > zero_row_cutoff))
			throw Error(ErrorKind::DegenerateInput, "normalize: row " + std::to_string(i) + " has zero norm");
		out.points.row(i) /= n;
	}
	return out;
}

/// Subtracts a given mean and normalizes. Used to map new data into the
/// frame of a model trained with center_normalize.
inline DataSet center_normalize_with(const MatrixXd& points, const VectorXd& mean)
{
	if (mean.size() != points.cols())
		throw Error(ErrorKind::Validation, "center_normalize: mean has length " + std::to_string(mean.size()) +
							   ", data has d = " + std::to_string(points.cols()));
	DataSet out;
	out.points = points.rowwise() - mean.transpose();
	for (Index i = 0; i < points.rows(); ++i) {
		const double n = out.points.row(i).norm();
		if (!(n > zero_row_cutoff))
			throw Error(ErrorKind::DegenerateInput,
				    "center_normalize: row " + std::to_string(i) + " coincides with the mean");
		out.points.row(i) /= n;
	}
	return out;
}

/// Rows become (y - mean) / |y - mean|. The mean is returned so synthesized
/// points can be mapped back to the original frame.
inline std::pair<DataSet, VectorXd> center_normalize(const MatrixXd& points)
{
	if (points.rows() < 1)
		throw Error(ErrorKind::DegenerateInput, "center_normalize: empty input");
	VectorXd mean = points.colwise().mean().transpose();
	DataSet out = center_normalize_with(points, mean);
	return {std::move(out), std::move(mean)};
}

/// Stereographic projection from R^d onto the unit d-sphere in R^(d+1):
/// Q = N + 2 / (1 + |P|^2) (P - N).
inline DataSet stereographic_lift(const MatrixXd& points)
{
	const Index d = points.cols();
	DataSet out;
	out.points.resize(points.rows(), d + 1);
	for (Index i = 0; i < points.rows(); ++i) {
		const double sq = points.row(i).squaredNorm();
		const double s = 2.0 / (1.0 + sq);
		out.points.row(i).head(d) = s * points.row(i);
		out.points(i, d) = 1.0 - s;
	}
	return out;
}

/// Inverse stereographic projection: P = N + (Q - N) / (1 - Q_{d+1}).
inline MatrixXd stereographic_drop(const MatrixXd& points)
{
	if (points.cols() < 2)
		throw Error(ErrorKind::Validation, "stereographic_drop: need at least 2 columns");
	const Index d = points.cols() - 1;
	MatrixXd out(points.rows(), d);
	for (Index i = 0; i < points.rows(); ++i) {
		const double last = points(i, d);
		if (!(last < 1.0 - pole_cutoff))
			throw Error(ErrorKind::Singularity,
				    "stereographic_drop: row " + std::to_string(i) + " lies at the north pole");
		out.row(i) = points.row(i).head(d) / (1.0 - last);
	}
	return out;
}

} // namespace asx

#endif
