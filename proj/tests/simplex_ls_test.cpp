#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "asx/simplex_ls.hpp"
#include "oracles.hpp"

using namespace asx;

namespace {

MatrixXd identity2() { return MatrixXd::Identity(2, 2); }

VectorXd vec2(double a, double b)
{
	VectorXd v(2);
	v << a, b;
	return v;
}

MatrixXd random_matrix(std::mt19937_64& rng, Index rows, Index cols)
{
	std::normal_distribution<double> g;
	MatrixXd m(rows, cols);
	for (Index i = 0; i < m.size(); ++i)
		m.data()[i] = g(rng);
	return m;
}

} // namespace

TEST(SolveSimplexLs, VertexAttainedExactly)
{
	const auto r = solve_simplex_ls(identity2(), vec2(1, 0), 1.0);
	EXPECT_DOUBLE_EQ(r.coefficients.values[0], 1.0);
	EXPECT_DOUBLE_EQ(r.coefficients.values[1], 0.0);
	EXPECT_DOUBLE_EQ(r.objective, 0.0);
	EXPECT_EQ(r.coefficients.support, (std::vector<int>{0}));
}

TEST(SolveSimplexLs, SegmentInteriorMatchesGridOracle)
{
	double grid_obj = 0.0;
	const double grid_b0 = asx_test::grid_search_two_columns(identity2(), vec2(0.6, 0.8), 1.0, 1e-6, &grid_obj);
	EXPECT_NEAR(grid_b0, 0.4, 1e-6);
	EXPECT_NEAR(grid_obj, 0.08, 1e-10);

	const auto r = solve_simplex_ls(identity2(), vec2(0.6, 0.8), 1.0);
	EXPECT_NEAR(r.coefficients.values[0], 0.4, 1e-12);
	EXPECT_NEAR(r.coefficients.values[1], 0.6, 1e-12);
	EXPECT_NEAR(r.objective, 0.08, 1e-12);
	EXPECT_EQ(r.coefficients.support, (std::vector<int>{0, 1}));
}

TEST(SolveSimplexLs, ReducedRadius)
{
	double grid_obj = 0.0;
	const double grid_b0 = asx_test::grid_search_two_columns(identity2(), vec2(1, 0), 0.5, 1e-6, &grid_obj);
	EXPECT_NEAR(grid_b0, 0.5, 1e-6);
	EXPECT_NEAR(grid_obj, 0.25, 1e-10);

	const auto r = solve_simplex_ls(identity2(), vec2(1, 0), 0.5);
	EXPECT_NEAR(r.coefficients.values[0], 0.5, 1e-12);
	EXPECT_NEAR(r.coefficients.values[1], 0.0, 1e-12);
	EXPECT_NEAR(r.objective, 0.25, 1e-12);
}

TEST(SolveSimplexLs, RejectsBadInput)
{
	EXPECT_THROW(solve_simplex_ls(MatrixXd(2, 0), vec2(1, 0), 1.0), Error);
	EXPECT_THROW(solve_simplex_ls(identity2(), vec2(1, 0), 0.0), Error);
	EXPECT_THROW(solve_simplex_ls(identity2(), vec2(1, 0), 1.5), Error);
	EXPECT_THROW(solve_simplex_ls(identity2(), VectorXd::Ones(3), 1.0), Error);
}

TEST(SolveSimplexLs, IterationBudgetExhaustionCarriesBestIterate)
{
	std::mt19937_64 rng(17);
	const MatrixXd x = random_matrix(rng, 4, 6);
	const VectorXd y = random_matrix(rng, 4, 1);
	SolverConfig cfg;
	cfg.max_iterations = 1;
	try {
		// One iteration is never enough unless the starting vertex is optimal.
		const auto r = solve_simplex_ls(x, y, 1.0, cfg);
		EXPECT_EQ(r.coefficients.support.size(), 1u);
	} catch (const SolverError& e) {
		EXPECT_EQ(e.kind(), ErrorKind::Solver);
		EXPECT_EQ(e.best_iterate().size(), 6);
		EXPECT_NEAR(e.best_iterate().sum(), 1.0, 1e-12);
	}
}

TEST(SolveSimplexLs, DuplicateColumnsAreDeterministic)
{
	MatrixXd x(2, 3);
	x << 1, 1, 0, 0, 0, 1;
	const auto a = solve_simplex_ls(x, vec2(1, 0), 1.0);
	const auto b = solve_simplex_ls(x, vec2(1, 0), 1.0);
	EXPECT_EQ(a.coefficients.values, b.coefficients.values);
	EXPECT_NEAR(a.objective, 0.0, 1e-15);
	EXPECT_DOUBLE_EQ(a.coefficients.values[0], 1.0);
}

// Property: constraints hold exactly, KKT holds, and the objective matches a
// projected-gradient oracle.
TEST(SolveSimplexLsProperty, MatchesProjectedGradientOracle)
{
	std::mt19937_64 rng(2024);
	std::uniform_int_distribution<int> dim(1, 5);
	std::uniform_int_distribution<int> cols(1, 6);
	for (int trial = 0; trial < 60; ++trial) {
		const Index d = dim(rng);
		const Index k = cols(rng);
		const double r = (trial % 2 == 0) ? 1.0 : 0.5;
		const MatrixXd x = random_matrix(rng, d, k);
		const VectorXd y = random_matrix(rng, d, 1);

		const auto res = solve_simplex_ls(x, y, r);
		const VectorXd& b = res.coefficients.values;
		EXPECT_GE(b.minCoeff(), 0.0);
		EXPECT_LE(std::abs(b.sum() - r), 1e-8);
		EXPECT_LE(res.kkt_residual, 1e-9 * std::max(1.0, x.squaredNorm()));

		const double oracle = asx_test::projected_gradient_objective(x, y, r, 100000);
		EXPECT_NEAR(res.objective, oracle, 1e-6) << "trial " << trial;
		EXPECT_LE(res.objective, oracle + 1e-12);
	}
}

TEST(SolveSimplexLsProperty, SupportIsSmallInGenericPosition)
{
	std::mt19937_64 rng(99);
	int within = 0;
	const int trials = 200;
	for (int t = 0; t < trials; ++t) {
		const Index d = 3;
		const Index k = 12;
		MatrixXd x = random_matrix(rng, d, k);
		for (Index j = 0; j < k; ++j)
			x.col(j).normalize();
		VectorXd y = random_matrix(rng, d, 1);
		y.normalize();
		const auto res = solve_simplex_ls(x, y, 1.0);
		if (res.coefficients.support.size() <= static_cast<std::size_t>(d + 1))
			++within;
	}
	EXPECT_EQ(within, trials);
}

TEST(ProjectOntoSimplex, SingleVertex)
{
	BasisSet basis{identity2(), 0.7};
	const Simplex s{{0}, 1, std::nullopt};
	const auto p = project_onto_simplex(s, basis, vec2(0.3, 0.4));
	ASSERT_EQ(p.coefficients.size(), 1);
	EXPECT_DOUBLE_EQ(p.coefficients[0], 0.7);
	EXPECT_NEAR(p.error, (vec2(0.3, 0.4) - vec2(0.7, 0)).norm(), 1e-15);
}

TEST(ProjectOntoSimplex, SegmentError)
{
	BasisSet basis{identity2(), 1.0};
	const Simplex s{{0, 1}, 1, std::nullopt};
	const auto p = project_onto_simplex(s, basis, vec2(0.6, 0.8));
	EXPECT_NEAR(p.error, std::sqrt(0.08), 1e-12);
	EXPECT_NEAR(p.error, 0.2828427, 1e-7);
}

TEST(ProjectOntoSimplex, PointAtVertex)
{
	BasisSet basis{identity2(), 1.0};
	const Simplex s{{0, 1}, 1, std::nullopt};
	EXPECT_NEAR(project_onto_simplex(s, basis, vec2(0, 1)).error, 0.0, 1e-15);
}

TEST(ProjectOntoModel, EmptyModelErrors)
{
	SimplicialModel m;
	m.basis = BasisSet{identity2(), 1.0};
	try {
		project_onto_model(m, vec2(1, 0));
		FAIL();
	} catch (const Error& e) {
		EXPECT_EQ(e.kind(), ErrorKind::EmptyModel);
	}
}

TEST(ProjectOntoModel, ExactVertexHit)
{
	SimplicialModel m;
	MatrixXd x(2, 3);
	x << 1, 0, -1, 0, 1, 0;
	m.basis = BasisSet{x, 1.0};
	m.simplices = {Simplex{{0, 1}, 3, {}}, Simplex{{2}, 1, {}}};
	const auto p = project_onto_model(m, vec2(-1, 0));
	EXPECT_EQ(p.simplex, 1u);
	EXPECT_NEAR(p.error, 0.0, 1e-15);
}

TEST(ProjectOntoModel, TieGoesToLowerIndex)
{
	SimplicialModel m;
	MatrixXd x(2, 2);
	x << 1, -1, 0, 0;
	m.basis = BasisSet{x, 1.0};
	m.simplices = {Simplex{{1}, 1, {}}, Simplex{{0}, 1, {}}};
	const auto p = project_onto_model(m, vec2(0, 1));
	EXPECT_EQ(p.simplex, 0u);
}

TEST(ProjectOntoModel, InscribedOctagonSagittaBound)
{
	const double pi = std::numbers::pi;
	MatrixXd x(2, 8);
	for (int i = 0; i < 8; ++i) {
		x(0, i) = std::cos(2 * pi * i / 8);
		x(1, i) = std::sin(2 * pi * i / 8);
	}
	SimplicialModel m;
	m.basis = BasisSet{x, 1.0};
	for (int i = 0; i < 8; ++i) {
		int a = i, b = (i + 1) % 8;
		m.simplices.push_back(Simplex{{std::min(a, b), std::max(a, b)}, 1, {}});
	}
	const double bound = 1.0 - std::cos(pi / 8);
	EXPECT_NEAR(bound, 0.0761, 1e-4);
	for (int q = 0; q < 97; ++q) {
		const double t = 2 * pi * q / 97.0;
		const VectorXd y = vec2(std::cos(t), std::sin(t));
		double brute = 1e9;
		for (int i = 0; i < 8; ++i)
			brute = std::min(brute, asx_test::segment_distance(x.col(i), x.col((i + 1) % 8), y));
		const auto p = project_onto_model(m, y);
		EXPECT_NEAR(p.error, brute, 1e-12);
		EXPECT_LE(p.error, bound + 1e-12);
	}
}
