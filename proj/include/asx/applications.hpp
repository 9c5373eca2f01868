#ifndef ASX_APPLICATIONS_HPP
#define ASX_APPLICATIONS_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <boost/random/discrete_distribution.hpp>
#include <boost/random/gamma_distribution.hpp>

#include "dictionary.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "simplex_ls.hpp"
#include "simplices.hpp"
#include "types.hpp"

namespace asx {

// ---------------------------------------------------------------------------
// Classification by nearest reconstruction

/// One simplicial model per class label.
struct ClassModel {
	std::map<std::string, SimplicialModel> classes;
};

inline void validate(const ClassModel& cm)
{
	if (cm.classes.size() < 2)
		throw Error(ErrorKind::Configuration, "class model: requires at least 2 classes");
	const Index d = cm.classes.begin()->second.dim();
	for (const auto& [label, model] : cm.classes) {
		if (model.simplices.empty())
			throw Error(ErrorKind::Configuration, "class model: class '" + label + "' has no simplices");
		if (model.dim() != d)
			throw Error(ErrorKind::Configuration, "class model: class '" + label + "' has a different dimension");
	}
}

struct Classification {
	std::string label;
	std::map<std::string, double> errors; // reconstruction error per class
};

/// Label of the class whose model reconstructs `point` best. Equal errors
/// resolve to the lexicographically smallest label.
inline Classification classify(const ClassModel& cm, const VectorXd& point, const SolverConfig& cfg = {})
{
	validate(cm);
	Classification out;
	double best = std::numeric_limits<double>::infinity();
	for (const auto& [label, model] : cm.classes) {
		const double e = project_onto_model(model, point, cfg).error;
		out.errors[label] = e;
		if (e < best) {
			best = e;
			out.label = label;
		}
	}
	return out;
}

/// The K labels with the smallest errors, best first (ties by label).
inline std::vector<std::string> top_k(const Classification& c, std::size_t k)
{
	std::vector<std::pair<double, std::string>> v;
	for (const auto& [label, e] : c.errors)
		v.emplace_back(e, label);
	std::sort(v.begin(), v.end());
	std::vector<std::string> out;
	for (std::size_t i = 0; i < std::min(k, v.size()); ++i)
		out.push_back(v[i].second);
	return out;
}

/// Trains one model per label with the same configuration. With
/// `prune_cfg` set, each class model is pruned on its own training data.
inline ClassModel train_class_model(const DataSet& data, const TrainConfig& cfg,
				    const std::optional<PruneConfig>& prune_cfg = std::nullopt)
{
	if (!data.labels)
		throw Error(ErrorKind::Configuration, "train_class_model: dataset has no labels");
	std::map<std::string, std::vector<Index>> rows;
	for (Index i = 0; i < data.size(); ++i)
		rows[(*data.labels)[static_cast<std::size_t>(i)]].push_back(i);

	ClassModel cm;
	for (const auto& [label, idx] : rows) {
		DataSet part;
		part.points.resize(static_cast<Index>(idx.size()), data.dim());
		for (std::size_t k = 0; k < idx.size(); ++k)
			part.points.row(static_cast<Index>(k)) = data.points.row(idx[k]);
		const TrainResult tr = train(part, cfg);
		SimplicialModel m = build_model(tr.basis, tr.activations);
		if (prune_cfg)
			m = prune(m.simplices, part, m.basis, *prune_cfg);
		m.objective_trace = tr.objective_trace;
		cm.classes.emplace(label, std::move(m));
	}
	validate(cm);
	return cm;
}

/// Concatenates each frame with the following window - 1 frames. Sequence
/// data become N - window + 1 stacked rows of dimension window * d.
inline MatrixXd stack_snippets(const MatrixXd& frames, int window)
{
	if (window < 1)
		throw Error(ErrorKind::Configuration, "stack_snippets: window must be >= 1");
	const Index n = frames.rows() - window + 1;
	if (n < 1)
		throw Error(ErrorKind::Configuration, "stack_snippets: sequence shorter than the window");
	const Index d = frames.cols();
	MatrixXd out(n, d * window);
	for (Index i = 0; i < n; ++i)
		for (Index w = 0; w < window; ++w)
			out.block(i, w * d, 1, d) = frames.row(i + w);
	return out;
}

// ---------------------------------------------------------------------------
// Dirichlet models on simplices

inline constexpr double dirichlet_smoothing = 1e-6;
inline constexpr int dirichlet_max_iterations = 1000;
inline constexpr double dirichlet_tolerance = 1e-10;

namespace detail {

/// Solves digamma(x) = y with Newton's method from Minka's initial guess.
inline double inverse_digamma(double y)
{
	const double euler = 0.57721566490153286061;
	double x = y >= -2.22 ? std::exp(y) + 0.5 : -1.0 / (y + euler);
	for (int i = 0; i < 8; ++i)
		x -= (boost::math::digamma(x) - y) / boost::math::trigamma(x);
	return x;
}

} // namespace detail

/// Maximum-likelihood Dirichlet fit by the fixed-point iteration
/// digamma(a_i) = digamma(sum a) + mean log b_i, started from moment
/// matching. Samples are smoothed by 1e-6 and renormalized first. Fewer than
/// `min_samples` samples give the uniform distribution (all ones).
inline DirichletParams fit_dirichlet(const std::vector<VectorXd>& samples, std::size_t min_samples = 5)
{
	if (samples.empty())
		throw Error(ErrorKind::Validation, "fit_dirichlet: no samples");
	const Index k = samples.front().size();
	for (std::size_t s = 0; s < samples.size(); ++s) {
		const auto& b = samples[s];
		if (b.size() != k)
			throw Error(ErrorKind::Validation, "fit_dirichlet: sample " + std::to_string(s) + " has length " +
								   std::to_string(b.size()) + ", expected " + std::to_string(k));
		if (b.minCoeff() < 0.0 || std::abs(b.sum() - 1.0) > tolerance::coefficient_mass)
			throw Error(ErrorKind::Validation,
				    "fit_dirichlet: sample " + std::to_string(s) + " is not a probability vector");
	}
	if (samples.size() < min_samples || k == 1)
		return DirichletParams{VectorXd::Ones(k)};

	const double n = static_cast<double>(samples.size());
	VectorXd mean_log = VectorXd::Zero(k);
	VectorXd mean = VectorXd::Zero(k);
	VectorXd mean_sq = VectorXd::Zero(k);
	for (const auto& b : samples) {
		const VectorXd s = (b.array() + dirichlet_smoothing) / (1.0 + static_cast<double>(k) * dirichlet_smoothing);
		mean_log += s.array().log().matrix();
		mean += s;
		mean_sq += s.cwiseAbs2();
	}
	mean_log /= n;
	mean /= n;
	mean_sq /= n;

	// Moment matching on the first coordinate gives the precision.
	double precision = (mean[0] - mean_sq[0]) / (mean_sq[0] - mean[0] * mean[0]);
	if (!std::isfinite(precision) || precision <= 0.0)
		precision = static_cast<double>(k);
	VectorXd alpha = precision * mean;

	for (int it = 0; it < dirichlet_max_iterations; ++it) {
		const double base = boost::math::digamma(alpha.sum());
		VectorXd next(k);
		for (Index i = 0; i < k; ++i)
			next[i] = detail::inverse_digamma(base + mean_log[i]);
		const double change = (next - alpha).cwiseAbs().maxCoeff();
		alpha = next;
		if (change < dirichlet_tolerance)
			break;
	}
	return DirichletParams{alpha};
}

/// Draws one sample from Dirichlet(alpha) via normalized Gamma variates.
inline VectorXd sample_dirichlet(const VectorXd& alpha, Rng& rng)
{
	VectorXd g(alpha.size());
	for (Index i = 0; i < alpha.size(); ++i) {
		boost::random::gamma_distribution<double> gamma(alpha[i], 1.0);
		g[i] = gamma(rng);
	}
	const double s = g.sum();
	if (!(s > 0.0)) {
		// Every gamma underflowed (tiny alphas); fall back to the largest alpha.
		Index arg = 0;
		alpha.maxCoeff(&arg);
		g.setZero();
		g[arg] = 1.0;
		return g;
	}
	return g / s;
}

/// Fits a Dirichlet on every simplex from the barycentric coordinates of the
/// points that project onto it.
inline void fit_model_dirichlets(SimplicialModel& model, const MatrixXd& points, const SolverConfig& cfg = {},
				 std::size_t min_samples = 5)
{
	const auto proj = project_dataset(model, points, cfg);
	std::vector<std::vector<VectorXd>> groups(model.simplices.size());
	for (const auto& p : proj) {
		VectorXd b = p.coefficients / model.basis.radius;
		b /= b.sum();
		groups[p.simplex].push_back(std::move(b));
	}
	for (std::size_t t = 0; t < model.simplices.size(); ++t) {
		auto& s = model.simplices[t];
		s.dirichlet = groups[t].empty() ? DirichletParams{VectorXd::Ones(static_cast<Index>(s.vertices.size()))}
						: fit_dirichlet(groups[t], min_samples);
	}
}

struct Synthesis {
	MatrixXd points;               // count x d
	std::vector<std::size_t> simplex; // source simplex of each row
};

/// Samples a simplex with probability proportional to its activation count,
/// then barycentric coordinates from its Dirichlet, scaled to mass r.
inline Synthesis synthesize(const SimplicialModel& model, Index count, std::uint64_t seed)
{
	if (model.simplices.empty())
		throw Error(ErrorKind::Synthesis, "synthesize: model has no simplices");
	std::vector<double> weights;
	double total = 0.0;
	for (std::size_t t = 0; t < model.simplices.size(); ++t) {
		const auto& s = model.simplices[t];
		if (!s.dirichlet)
			throw Error(ErrorKind::Synthesis,
				    "synthesize: simplex " + std::to_string(t) + " has no Dirichlet parameters");
		weights.push_back(static_cast<double>(s.count));
		total += static_cast<double>(s.count);
	}
	if (!(total > 0.0))
		throw Error(ErrorKind::Synthesis, "synthesize: all activation counts are zero");

	Rng rng(seed);
	boost::random::discrete_distribution<std::size_t, double> pick(weights.begin(), weights.end());
	Synthesis out;
	out.points.resize(count, model.dim());
	out.simplex.resize(static_cast<std::size_t>(count));
	for (Index i = 0; i < count; ++i) {
		const std::size_t t = pick(rng);
		const auto& s = model.simplices[t];
		const VectorXd b = model.basis.radius * sample_dirichlet(s.dirichlet->alpha, rng);
		out.points.row(i) = (vertex_matrix(s, model.basis) * b).transpose();
		out.simplex[static_cast<std::size_t>(i)] = t;
	}
	return out;
}

// ---------------------------------------------------------------------------
// 3D pose from 2D joints
//
// A pose of n joints is a 3 x n matrix flattened column-major into a vector
// of length 3n: (x1, y1, z1, x2, y2, z2, ...). 2D observations use the same
// convention with 2 rows: (u1, v1, u2, v2, ...).

using Camera = Eigen::Matrix<double, 2, 3>;

/// Weak-perspective camera; rows are m1^T and m2^T.
struct CameraMatrix {
	Camera m = Camera::Zero();
};

inline void validate(const CameraMatrix& cam)
{
	if (!cam.m.allFinite())
		throw Error(ErrorKind::Validation, "camera: non-finite entry");
	if (cam.m.isZero(0.0))
		throw Error(ErrorKind::Validation, "camera: zero matrix");
}

/// Returns a warning when the camera is numerically rank deficient.
inline std::optional<std::string> camera_warning(const CameraMatrix& cam)
{
	const Eigen::JacobiSVD<Camera> svd(cam.m);
	const auto& sv = svd.singularValues();
	if (sv[1] < 1e-6 * sv[0])
		return "camera: nearly rank 1 (sigma2 / sigma1 = " + std::to_string(sv[1] / sv[0]) + ")";
	return std::nullopt;
}

inline VectorXd flatten_pose(const Eigen::Matrix3Xd& joints)
{
	return Eigen::Map<const VectorXd>(joints.data(), joints.size());
}

inline Eigen::Matrix3Xd unflatten_pose(const VectorXd& pose)
{
	if (pose.size() % 3 != 0)
		throw Error(ErrorKind::Validation, "pose: length " + std::to_string(pose.size()) + " is not a multiple of 3");
	return Eigen::Map<const Eigen::Matrix3Xd>(pose.data(), 3, pose.size() / 3);
}

/// Applies the camera to every joint; returns the flattened 2n vector.
inline VectorXd project_pose(const CameraMatrix& cam, const VectorXd& pose)
{
	const Eigen::Matrix2Xd o = cam.m * unflatten_pose(pose);
	return Eigen::Map<const VectorXd>(o.data(), o.size());
}

/// Mean over joints of the Euclidean distance between two poses.
inline double mean_joint_error(const VectorXd& a, const VectorXd& b)
{
	const Eigen::Matrix3Xd ja = unflatten_pose(a);
	const Eigen::Matrix3Xd jb = unflatten_pose(b);
	if (ja.cols() != jb.cols())
		throw Error(ErrorKind::Validation, "mean_joint_error: joint counts differ");
	return (ja - jb).colwise().norm().mean();
}

/// Centers each pose row on its joint centroid and scales it to unit norm.
inline DataSet normalize_poses(const MatrixXd& poses)
{
	if (poses.cols() % 3 != 0)
		throw Error(ErrorKind::Validation, "normalize_poses: row length is not a multiple of 3");
	DataSet out;
	out.points.resize(poses.rows(), poses.cols());
	for (Index i = 0; i < poses.rows(); ++i) {
		Eigen::Matrix3Xd j = unflatten_pose(poses.row(i).transpose());
		j.colwise() -= j.rowwise().mean();
		const double n = j.norm();
		if (!(n > 1e-12))
			throw Error(ErrorKind::DegenerateInput, "normalize_poses: row " + std::to_string(i) + " is degenerate");
		out.points.row(i) = flatten_pose(j / n).transpose();
	}
	return out;
}

struct PoseEstimate {
	VectorXd pose; // 3n, S* b*
	std::size_t simplex = 0;
	VectorXd coefficients;
	double residual = 0.0; // |M S b - O|^2
};

/// Lifts 2D joints to 3D: for every simplex, solves the simplex-constrained
/// least squares on the camera-projected vertices and keeps the simplex with
/// the smallest residual (ties to the lowest index).
inline PoseEstimate estimate_pose(const SimplicialModel& model, const CameraMatrix& camera,
				  const Eigen::Matrix2Xd& observed, const SolverConfig& cfg = {})
{
	validate(camera);
	if (model.simplices.empty())
		throw Error(ErrorKind::EmptyModel, "estimate_pose: model has no simplices");
	const Index joints = observed.cols();
	if (model.dim() != 3 * joints)
		throw Error(ErrorKind::Validation, "estimate_pose: model dimension " + std::to_string(model.dim()) +
							   " does not match 3 x " + std::to_string(joints) + " joints");
	const VectorXd target = Eigen::Map<const VectorXd>(observed.data(), observed.size());

	struct Candidate {
		bool ok = false;
		VectorXd coefficients;
		double residual = std::numeric_limits<double>::infinity();
	};
	std::vector<Candidate> results(model.simplices.size());
	parallel_for(results.size(), [&](std::size_t t) {
		const MatrixXd v = vertex_matrix(model.simplices[t], model.basis);
		MatrixXd projected(2 * joints, v.cols());
		for (Index c = 0; c < v.cols(); ++c)
			projected.col(c) = project_pose(camera, v.col(c));
		try {
			auto r = solve_simplex_ls(projected, target, model.basis.radius, cfg);
			results[t].ok = true;
			results[t].residual = (target - projected * r.coefficients.values).squaredNorm();
			results[t].coefficients = std::move(r.coefficients.values);
		} catch (const SolverError&) {
		}
	});

	std::optional<std::size_t> best;
	for (std::size_t t = 0; t < results.size(); ++t)
		if (results[t].ok && (!best || results[t].residual < results[*best].residual))
			best = t;
	if (!best)
		throw Error(ErrorKind::Estimation, "estimate_pose: solver failed on every simplex");

	PoseEstimate out;
	out.simplex = *best;
	out.coefficients = results[*best].coefficients;
	out.residual = results[*best].residual;
	out.pose = vertex_matrix(model.simplices[*best], model.basis) * out.coefficients;
	return out;
}

} // namespace asx

#endif
