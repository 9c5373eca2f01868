#ifndef ASX_SYNTHETIC_HPP
#define ASX_SYNTHETIC_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "random.hpp"
#include "types.hpp"

// Desk-scale manifolds. Parameters are drawn uniformly, then isotropic
// Gaussian noise of standard deviation `noise` is added per coordinate.
//
//   circle          unit circle in R^2
//   torus           radii (R, rho) = (2, 0.5) in R^3
//   hemisphere      upper unit hemisphere (z >= 0), area-uniform
//   swissroll_plane a swiss-roll ribbon plus a planar square crossing it, R^3
//   ribbon_circle   unit circle in the z = 0 plane and a ribbon in the x = 0
//                   plane threading through it, R^3
//   arm             four-joint arm (shoulder, elbow, wrist, hand) whose elbow
//                   sweeps 0..120 degrees; poses flattened to R^12

namespace asx {

enum class Shape { Circle, Torus, Hemisphere, SwissrollPlane, RibbonCircle, Arm };

inline constexpr std::array<std::string_view, 6> shape_names{"circle",          "torus",         "hemisphere",
							      "swissroll_plane", "ribbon_circle", "arm"};

inline std::optional<Shape> parse_shape(std::string_view name)
{
	for (std::size_t i = 0; i < shape_names.size(); ++i)
		if (shape_names[i] == name)
			return static_cast<Shape>(i);
	return std::nullopt;
}

inline constexpr double torus_major = 2.0;
inline constexpr double torus_minor = 0.5;
inline constexpr int arm_joints = 4;
inline constexpr double arm_max_bend = 2.0 * std::numbers::pi / 3.0;

/// Arm pose for elbow bend angle theta, as a 3 x 4 joint matrix. Upper arm
/// along +x; the forearm bends in a plane tilted out of xy so the curve
/// spans all three coordinates; the hand continues the forearm.
inline Eigen::Matrix<double, 3, arm_joints> arm_pose(double theta)
{
	Eigen::Matrix<double, 3, arm_joints> j;
	const Eigen::Vector3d shoulder(0, 0, 0);
	const Eigen::Vector3d elbow(1, 0, 0);
	const Eigen::Vector3d dir(std::cos(theta), 0.8 * std::sin(theta), 0.6 * std::sin(theta));
	const Eigen::Vector3d wrist = elbow + 0.9 * dir;
	const Eigen::Vector3d hand = wrist + 0.3 * dir;
	j << shoulder, elbow, wrist, hand;
	return j;
}

/// `ambient` > 0 pads the samples with zero coordinates up to that
/// dimension before noise is added (e.g. a circle in R^3).
inline MatrixXd generate(Shape shape, Index n, double noise, std::uint64_t seed, Index ambient = 0)
{
	if (n < 1)
		throw Error(ErrorKind::Usage, "generate: n must be >= 1");
	if (!(noise >= 0.0))
		throw Error(ErrorKind::Usage, "generate: noise must be >= 0");

	constexpr double two_pi = 2.0 * std::numbers::pi;
	Rng rng(seed);
	boost::random::uniform_real_distribution<double> unit(0.0, 1.0);

	MatrixXd out;
	switch (shape) {
	case Shape::Circle:
		out.resize(n, 2);
		for (Index i = 0; i < n; ++i) {
			const double t = two_pi * unit(rng);
			out.row(i) << std::cos(t), std::sin(t);
		}
		break;
	case Shape::Torus:
		out.resize(n, 3);
		for (Index i = 0; i < n; ++i) {
			const double u = two_pi * unit(rng);
			const double v = two_pi * unit(rng);
			const double w = torus_major + torus_minor * std::cos(v);
			out.row(i) << w * std::cos(u), w * std::sin(u), torus_minor * std::sin(v);
		}
		break;
	case Shape::Hemisphere:
		out.resize(n, 3);
		for (Index i = 0; i < n; ++i) {
			const double phi = two_pi * unit(rng);
			const double z = unit(rng);
			const double s = std::sqrt(1.0 - z * z);
			out.row(i) << s * std::cos(phi), s * std::sin(phi), z;
		}
		break;
	case Shape::SwissrollPlane: {
		out.resize(n, 3);
		constexpr double t0 = 1.5 * std::numbers::pi;
		constexpr double t1 = 4.5 * std::numbers::pi;
		for (Index i = 0; i < n; ++i) {
			if (i % 2 == 0) {
				const double t = t0 + (t1 - t0) * unit(rng);
				const double h = unit(rng) - 0.5;
				out.row(i) << t * std::cos(t) / t1, h, t * std::sin(t) / t1;
			} else {
				out.row(i) << 2.0 * unit(rng) - 1.0, 0.0, 2.0 * unit(rng) - 1.0;
			}
		}
		break;
	}
	case Shape::RibbonCircle:
		out.resize(n, 3);
		for (Index i = 0; i < n; ++i) {
			if (i % 2 == 0) {
				const double t = two_pi * unit(rng);
				out.row(i) << std::cos(t), std::sin(t), 0.0;
			} else {
				out.row(i) << 0.0, 0.5 * unit(rng) - 0.25, 3.0 * unit(rng) - 1.5;
			}
		}
		break;
	case Shape::Arm:
		out.resize(n, 3 * arm_joints);
		for (Index i = 0; i < n; ++i) {
			const auto pose = arm_pose(arm_max_bend * unit(rng));
			out.row(i) = Eigen::Map<const Eigen::Matrix<double, 1, 3 * arm_joints>>(pose.data());
		}
		break;
	}

	if (ambient > out.cols()) {
		MatrixXd padded = MatrixXd::Zero(out.rows(), ambient);
		padded.leftCols(out.cols()) = out;
		out = std::move(padded);
	}

	if (noise > 0.0) {
		boost::random::normal_distribution<double> g(0.0, noise);
		for (Index i = 0; i < out.rows(); ++i)
			for (Index j = 0; j < out.cols(); ++j)
				out(i, j) += g(rng);
	}
	return out;
}

inline MatrixXd generate(std::string_view shape, Index n, double noise, std::uint64_t seed, Index ambient = 0)
{
	const auto s = parse_shape(shape);
	if (!s)
		throw Error(ErrorKind::Usage, "generate: unknown shape '" + std::string(shape) + "'");
	return generate(*s, n, noise, seed, ambient);
}

} // namespace asx

#endif
