#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "asx/applications.hpp"
#include "asx/geometry.hpp"
#include "asx/synthetic.hpp"

using namespace asx;

namespace {

VectorXd vec(std::initializer_list<double> v) { return Eigen::Map<const VectorXd>(v.begin(), static_cast<Index>(v.size())); }

SimplicialModel vertex_model(const MatrixXd& bases)
{
	SimplicialModel m;
	m.basis.bases = bases;
	for (int i = 0; i < bases.cols(); ++i)
		m.simplices.push_back(Simplex{{i}, 1, std::nullopt});
	return m;
}

/// Points on an arc of the unit circle, angles uniform in [a, b].
DataSet arc(double a, double b, Index n, std::uint64_t seed, const std::string& label)
{
	Rng rng(seed);
	boost::random::uniform_real_distribution<double> u(a, b);
	DataSet d;
	d.points.resize(n, 2);
	for (Index i = 0; i < n; ++i) {
		const double t = u(rng);
		d.points.row(i) << std::cos(t), std::sin(t);
	}
	d.labels = std::vector<std::string>(static_cast<std::size_t>(n), label);
	return d;
}

DataSet concat(const DataSet& a, const DataSet& b)
{
	DataSet out;
	out.points.resize(a.size() + b.size(), a.dim());
	out.points << a.points, b.points;
	out.labels = *a.labels;
	out.labels->insert(out.labels->end(), b.labels->begin(), b.labels->end());
	return out;
}

} // namespace

TEST(Classify, VertexOfOneClass)
{
	MatrixXd a(2, 2), b(2, 2);
	a << 1, 0, 0, 1;
	b << -1, 0, 0, -1;
	ClassModel cm;
	cm.classes.emplace("A", vertex_model(a));
	cm.classes.emplace("B", vertex_model(b));
	const auto c = classify(cm, vec({0, 1}));
	EXPECT_EQ(c.label, "A");
	EXPECT_NEAR(c.errors.at("A"), 0.0, 1e-15);
	EXPECT_GT(c.errors.at("B"), 1.0);
	EXPECT_EQ(top_k(c, 1), (std::vector<std::string>{"A"}));
}

TEST(Classify, IdenticalModelsTieToSmallestLabel)
{
	const MatrixXd a = MatrixXd::Identity(2, 2);
	ClassModel cm;
	cm.classes.emplace("zeta", vertex_model(a));
	cm.classes.emplace("alpha", vertex_model(a));
	EXPECT_EQ(classify(cm, vec({0.6, 0.8})).label, "alpha");
}

TEST(Classify, InvalidClassModels)
{
	ClassModel one;
	one.classes.emplace("A", vertex_model(MatrixXd::Identity(2, 2)));
	EXPECT_THROW(classify(one, vec({1, 0})), Error);
	ClassModel empty_class = one;
	SimplicialModel m;
	m.basis.bases = MatrixXd::Identity(2, 2);
	empty_class.classes.emplace("B", m);
	try {
		classify(empty_class, vec({1, 0}));
		FAIL();
	} catch (const Error& e) {
		EXPECT_EQ(e.kind(), ErrorKind::Configuration);
	}
}

TEST(Classify, SeparatedArcs)
{
	const double pi = std::numbers::pi;
	const DataSet train_set = concat(arc(0.0, pi / 2, 100, 1, "east"), arc(pi, 1.5 * pi, 100, 2, "west"));
	const DataSet test_set = concat(arc(0.0, pi / 2, 100, 3, "east"), arc(pi, 1.5 * pi, 100, 4, "west"));
	TrainConfig cfg;
	cfg.bases = 4;
	cfg.seed = 9;
	const ClassModel cm = train_class_model(train_set, cfg);
	int correct = 0;
	for (Index i = 0; i < test_set.size(); ++i)
		correct += classify(cm, test_set.points.row(i).transpose()).label ==
			   (*test_set.labels)[static_cast<std::size_t>(i)];
	EXPECT_GE(correct, 190);
}

// Property: relabeling classes in a different insertion order keeps the result.
TEST(ClassifyProperty, OrderInvariant)
{
	MatrixXd a(2, 2), b(2, 2), c(2, 2);
	a << 1, 0, 0, 1;
	b << -1, 0, 0, 1;
	c << 0, -1, -1, 0;
	ClassModel x, y;
	x.classes.emplace("a", vertex_model(a));
	x.classes.emplace("b", vertex_model(b));
	x.classes.emplace("c", vertex_model(c));
	y.classes.emplace("c", vertex_model(c));
	y.classes.emplace("a", vertex_model(a));
	y.classes.emplace("b", vertex_model(b));
	for (int k = 0; k < 36; ++k) {
		const double t = 2 * std::numbers::pi * k / 36.0;
		const VectorXd q = vec({std::cos(t), std::sin(t)});
		EXPECT_EQ(classify(x, q).label, classify(y, q).label);
	}
}

TEST(StackSnippets, ConcatenatesWindows)
{
	MatrixXd f(4, 2);
	f << 1, 2, 3, 4, 5, 6, 7, 8;
	const MatrixXd s = stack_snippets(f, 3);
	ASSERT_EQ(s.rows(), 2);
	ASSERT_EQ(s.cols(), 6);
	EXPECT_EQ(s.row(1), (Eigen::RowVectorXd(6) << 3, 4, 5, 6, 7, 8).finished());
	EXPECT_THROW(stack_snippets(f, 5), Error);
}

TEST(FitDirichlet, FewSamplesFallBackToUniform)
{
	const std::vector<VectorXd> s(4, vec({0.2, 0.3, 0.5}));
	EXPECT_EQ(fit_dirichlet(s).alpha, VectorXd::Ones(3));
}

TEST(FitDirichlet, RecoversKnownParameters)
{
	Rng rng(2023);
	const VectorXd alpha = vec({2, 5, 3});
	std::vector<VectorXd> s;
	for (int i = 0; i < 10000; ++i)
		s.push_back(sample_dirichlet(alpha, rng));
	const VectorXd hat = fit_dirichlet(s).alpha;
	for (Index i = 0; i < 3; ++i)
		EXPECT_LT(std::abs(hat[i] - alpha[i]) / alpha[i], 0.05) << i;
}

// Property: round trip over a spread of parameters in [0.5, 10].
TEST(FitDirichletProperty, FitSampleRoundTrip)
{
	Rng rng(77);
	boost::random::uniform_real_distribution<double> u(0.5, 10.0);
	for (int trial = 0; trial < 6; ++trial) {
		VectorXd alpha(2 + trial % 3);
		for (Index i = 0; i < alpha.size(); ++i)
			alpha[i] = u(rng);
		std::vector<VectorXd> s;
		for (int i = 0; i < 10000; ++i)
			s.push_back(sample_dirichlet(alpha, rng));
		const VectorXd hat = fit_dirichlet(s).alpha;
		for (Index i = 0; i < alpha.size(); ++i)
			EXPECT_LT(std::abs(hat[i] - alpha[i]) / alpha[i], 0.05) << "trial " << trial << " i " << i;
	}
}

TEST(FitDirichlet, PointMassConcentrates)
{
	const std::vector<VectorXd> s(50, vec({0, 1, 0}));
	const VectorXd hat = fit_dirichlet(s).alpha;
	EXPECT_TRUE(hat.allFinite());
	EXPECT_GT(hat[1] / hat.sum(), 0.9);
}

TEST(FitDirichlet, DimensionMismatch)
{
	std::vector<VectorXd> s(6, vec({0.5, 0.5}));
	s.push_back(vec({0.2, 0.3, 0.5}));
	try {
		fit_dirichlet(s);
		FAIL();
	} catch (const Error& e) {
		EXPECT_EQ(e.kind(), ErrorKind::Validation);
	}
}

TEST(Synthesize, ZeroSimplexRepeatsVertex)
{
	SimplicialModel m;
	m.basis.bases = MatrixXd::Identity(3, 3);
	m.basis.radius = 0.8;
	m.simplices = {Simplex{{1}, 4, DirichletParams{VectorXd::Ones(1)}}};
	const auto s = synthesize(m, 20, 1);
	for (Index i = 0; i < 20; ++i)
		EXPECT_LE((s.points.row(i).transpose() - 0.8 * m.basis.bases.col(1)).norm(), 1e-15);
}

TEST(Synthesize, SegmentMeanIsMidpoint)
{
	SimplicialModel m;
	m.basis.bases = MatrixXd::Identity(2, 2);
	m.simplices = {Simplex{{0, 1}, 1, DirichletParams{VectorXd::Ones(2)}}};
	const auto s = synthesize(m, 100000, 5);
	const VectorXd mean = s.points.colwise().mean().transpose();
	EXPECT_LE((mean - vec({0.5, 0.5})).cwiseAbs().maxCoeff(), 1e-2);
}

TEST(Synthesize, RequiresDirichletAndCounts)
{
	SimplicialModel m;
	m.basis.bases = MatrixXd::Identity(2, 2);
	m.simplices = {Simplex{{0, 1}, 1, std::nullopt}};
	EXPECT_THROW(synthesize(m, 1, 1), Error);
	m.simplices[0].dirichlet = DirichletParams{VectorXd::Ones(2)};
	m.simplices[0].count = 0;
	try {
		synthesize(m, 1, 1);
		FAIL();
	} catch (const Error& e) {
		EXPECT_EQ(e.kind(), ErrorKind::Synthesis);
	}
}

TEST(Synthesize, DeterministicPerSeedAndInsideHull)
{
	const DataSet data = normalize(generate(Shape::Hemisphere, 300, 0.0, 2));
	TrainConfig cfg;
	cfg.bases = 12;
	cfg.seed = 2;
	const TrainResult tr = train(data, cfg);
	SimplicialModel m = build_model(tr.basis, tr.activations);
	fit_model_dirichlets(m, data.points);
	const auto a = synthesize(m, 500, 8);
	const auto b = synthesize(m, 500, 8);
	EXPECT_EQ(a.points, b.points);
	SolverConfig tight;
	tight.kkt_tolerance = 1e-14;
	for (Index i = 0; i < 500; ++i) {
		const auto& s = m.simplices[a.simplex[static_cast<std::size_t>(i)]];
		EXPECT_LE(project_onto_simplex(s, m.basis, a.points.row(i).transpose(), tight).error, 1e-10);
	}
}

TEST(Pose, FlattenIsColumnMajor)
{
	Eigen::Matrix3Xd j(3, 2);
	j << 1, 4, 2, 5, 3, 6;
	EXPECT_EQ(flatten_pose(j), vec({1, 2, 3, 4, 5, 6}));
	EXPECT_EQ(unflatten_pose(flatten_pose(j)), j);
	EXPECT_THROW(unflatten_pose(vec({1, 2})), Error);
}

TEST(Pose, MeanJointError)
{
	EXPECT_NEAR(mean_joint_error(vec({0, 0, 0, 1, 1, 1}), vec({3, 4, 0, 1, 1, 1})), 2.5, 1e-15);
}

TEST(Pose, CameraWarnings)
{
	CameraMatrix cam;
	cam.m << 1, 0, 0, 0, 1, 0;
	EXPECT_FALSE(camera_warning(cam));
	cam.m << 1, 0, 0, 2, 0, 0;
	EXPECT_TRUE(camera_warning(cam));
	CameraMatrix zero;
	EXPECT_THROW(validate(zero), Error);
}

TEST(EstimatePose, VertexRecoveredExactly)
{
	const MatrixXd poses = generate(Shape::Arm, 3, 0.0, 1);
	const DataSet norm = normalize_poses(poses);
	SimplicialModel m = vertex_model(norm.points.transpose());
	CameraMatrix cam;
	cam.m << 0.9, 0.1, 0.3, -0.2, 0.8, 0.4;
	const VectorXd target = norm.points.row(1).transpose();
	const VectorXd o = project_pose(cam, target);
	const auto est = estimate_pose(m, cam, Eigen::Map<const Eigen::Matrix2Xd>(o.data(), 2, o.size() / 2));
	EXPECT_EQ(est.simplex, 1u);
	EXPECT_NEAR(est.residual, 0.0, 1e-20);
	EXPECT_LE((est.pose - target).norm(), 1e-12);
}

TEST(EstimatePose, SegmentMidpoint)
{
	const DataSet norm = normalize_poses(generate(Shape::Arm, 2, 0.0, 4));
	SimplicialModel m;
	m.basis.bases = norm.points.transpose();
	m.simplices = {Simplex{{0, 1}, 1, std::nullopt}};
	CameraMatrix cam;
	cam.m << 1, 0, 0.2, 0, 1, -0.1;
	const VectorXd mid = 0.5 * (m.basis.bases.col(0) + m.basis.bases.col(1));
	const VectorXd o = project_pose(cam, mid);
	const auto est = estimate_pose(m, cam, Eigen::Map<const Eigen::Matrix2Xd>(o.data(), 2, o.size() / 2));
	EXPECT_NEAR(est.coefficients[0], 0.5, 1e-8);
	EXPECT_NEAR(est.coefficients[1], 0.5, 1e-8);
	// The 3D error is bounded by the component of the error in M's null space,
	// which here is zero because the segment's image is injective.
	EXPECT_LE(mean_joint_error(est.pose, mid), 1e-8);
}

TEST(EstimatePose, DimensionMismatch)
{
	SimplicialModel m = vertex_model(MatrixXd::Identity(6, 2).leftCols(2));
	CameraMatrix cam;
	cam.m << 1, 0, 0, 0, 1, 0;
	Eigen::Matrix2Xd o = Eigen::Matrix2Xd::Zero(2, 3);
	EXPECT_THROW(estimate_pose(m, cam, o), Error);
}

TEST(NormalizePoses, CenteredUnitRows)
{
	const DataSet d = normalize_poses(generate(Shape::Arm, 10, 0.0, 3));
	for (Index i = 0; i < d.size(); ++i) {
		EXPECT_NEAR(d.points.row(i).norm(), 1.0, 1e-14);
		const Eigen::Matrix3Xd j = unflatten_pose(d.points.row(i).transpose());
		EXPECT_LE(j.rowwise().mean().norm(), 1e-14);
	}
}
