#ifndef ASX_TYPES_HPP
#define ASX_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "error.hpp"

namespace asx {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Shared tolerances. Everything that decides "is this a unit vector" or
/// "is this coefficient active" reads from here.
namespace tolerance {
inline constexpr double unit_norm = 1e-9;
inline constexpr double basis_norm = 1e-9;
inline constexpr double coefficient_mass = 1e-8;
inline constexpr double activation = 1e-6;
} // namespace tolerance

/// N points of dimension d, one per row.
struct DataSet {
	MatrixXd points;
	std::optional<std::vector<std::string>> labels;
	nlohmann::json meta = nlohmann::json::object();

	Index size() const { return points.rows(); }
	Index dim() const { return points.cols(); }
};

/// Checks shape, finiteness and label length; with `require_unit` also that
/// every row has unit norm.
inline void validate(const DataSet& data, bool require_unit = true)
{
	if (data.size() < 1 || data.dim() < 1)
		throw Error(ErrorKind::Validation, "dataset: requires N >= 1 and d >= 1");
	if (!data.points.allFinite())
		throw Error(ErrorKind::Validation, "dataset: non-finite coordinate");
	if (data.labels && static_cast<Index>(data.labels->size()) != data.size())
		throw Error(ErrorKind::Validation, "dataset: label count " + std::to_string(data.labels->size()) +
							   " does not match N = " + std::to_string(data.size()));
	if (require_unit) {
		for (Index i = 0; i < data.size(); ++i) {
			const double n = data.points.row(i).norm();
			if (std::abs(n - 1.0) > tolerance::unit_norm)
				throw Error(ErrorKind::Validation,
					    "dataset: row " + std::to_string(i) + " has norm " + std::to_string(n) + ", expected 1");
		}
	}
}

/// p basis vectors stored as the columns of a d x p matrix, plus the hull
/// radius r. The convex hull of the columns, scaled by r, is the model's
/// reconstruction set.
struct BasisSet {
	MatrixXd bases;
	double radius = 1.0;

	Index dim() const { return bases.rows(); }
	Index count() const { return bases.cols(); }
};

inline void validate(const BasisSet& basis)
{
	if (basis.count() < 2)
		throw Error(ErrorKind::Validation, "basis: requires p >= 2, got " + std::to_string(basis.count()));
	if (basis.dim() < 1)
		throw Error(ErrorKind::Validation, "basis: requires d >= 1");
	if (!(basis.radius > 0.0 && basis.radius <= 1.0))
		throw Error(ErrorKind::Validation, "basis: radius must lie in (0, 1], got " + std::to_string(basis.radius));
	if (!basis.bases.allFinite())
		throw Error(ErrorKind::Validation, "basis: non-finite entry");
	for (Index j = 0; j < basis.count(); ++j) {
		const double n = basis.bases.col(j).norm();
		if (n > 1.0 + tolerance::basis_norm)
			throw Error(ErrorKind::Validation,
				    "basis: column " + std::to_string(j) + " has norm " + std::to_string(n) + " > 1");
	}
}

/// Nonnegative coefficients with l1 mass r. `support` lists the indices whose
/// value exceeds the activation threshold (relative to r), ascending.
struct CoefficientVector {
	VectorXd values;
	std::vector<int> support;
};

inline std::vector<int> support_of(const VectorXd& values, double radius,
				   double threshold = tolerance::activation)
{
	std::vector<int> s;
	const double cut = threshold * radius;
	for (Index i = 0; i < values.size(); ++i)
		if (values[i] > cut)
			s.push_back(static_cast<int>(i));
	return s;
}

struct DirichletParams {
	VectorXd alpha;
};

/// A face of the basis hull, identified by its sorted vertex indices.
struct Simplex {
	std::vector<int> vertices;
	std::size_t count = 0;
	std::optional<DirichletParams> dirichlet;

	int dimension() const { return static_cast<int>(vertices.size()) - 1; }
};

struct SimplicialModel {
	BasisSet basis;
	std::vector<Simplex> simplices;
	bool pruned = false;
	std::vector<double> objective_trace;
	nlohmann::json meta = nlohmann::json::object();

	Index dim() const { return basis.dim(); }
};

inline void validate(const Simplex& s, Index p, Index d)
{
	if (s.vertices.empty())
		throw Error(ErrorKind::Validation, "simplex: empty vertex set");
	for (std::size_t i = 0; i < s.vertices.size(); ++i) {
		if (s.vertices[i] < 0 || s.vertices[i] >= p)
			throw Error(ErrorKind::Validation, "simplex: vertex index " + std::to_string(s.vertices[i]) +
								   " out of range for p = " + std::to_string(p));
		if (i > 0 && s.vertices[i] <= s.vertices[i - 1])
			throw Error(ErrorKind::Validation, "simplex: vertex indices must be strictly increasing");
	}
	if (s.dimension() > p - 1 || s.dimension() > d)
		throw Error(ErrorKind::Validation, "simplex: dimension " + std::to_string(s.dimension()) +
							   " exceeds min(p - 1, d)");
	if (s.dirichlet) {
		const auto& a = s.dirichlet->alpha;
		if (a.size() != static_cast<Index>(s.vertices.size()))
			throw Error(ErrorKind::Validation, "simplex: dirichlet alpha length does not match vertex count");
		for (Index i = 0; i < a.size(); ++i)
			if (!(a[i] > 0.0) || !std::isfinite(a[i]))
				throw Error(ErrorKind::Validation, "simplex: dirichlet alpha must be positive and finite");
	}
}

inline void validate(const SimplicialModel& model)
{
	validate(model.basis);
	std::vector<std::vector<int>> seen;
	seen.reserve(model.simplices.size());
	for (const auto& s : model.simplices) {
		validate(s, model.basis.count(), model.basis.dim());
		seen.push_back(s.vertices);
	}
	std::sort(seen.begin(), seen.end());
	if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
		throw Error(ErrorKind::Validation, "model: duplicate simplex vertex sets");
}

/// d x k matrix whose columns are the simplex vertices.
inline MatrixXd vertex_matrix(const Simplex& s, const BasisSet& basis)
{
	MatrixXd v(basis.dim(), static_cast<Index>(s.vertices.size()));
	for (std::size_t i = 0; i < s.vertices.size(); ++i)
		v.col(static_cast<Index>(i)) = basis.bases.col(s.vertices[i]);
	return v;
}

} // namespace asx

#endif
