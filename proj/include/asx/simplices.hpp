#ifndef ASX_SIMPLICES_HPP
#define ASX_SIMPLICES_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "simplex_ls.hpp"
#include "types.hpp"

namespace asx {

/// One simplex per distinct support, with its multiplicity. Sorted by
/// descending count, then lexicographically by vertices.
inline std::vector<Simplex> extract_simplices(const std::vector<CoefficientVector>& activations)
{
	if (activations.empty())
		throw Error(ErrorKind::Extraction, "extract_simplices: no activations");
	std::map<std::vector<int>, std::size_t> counts;
	for (std::size_t j = 0; j < activations.size(); ++j) {
		if (activations[j].support.empty())
			throw Error(ErrorKind::Extraction,
				    "extract_simplices: point " + std::to_string(j) + " has an empty support");
		++counts[activations[j].support];
	}
	std::vector<Simplex> out;
	out.reserve(counts.size());
	for (auto& [verts, count] : counts)
		out.push_back(Simplex{verts, count, std::nullopt});
	std::stable_sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) { return a.count > b.count; });
	return out;
}

/// Unpruned model: every activated simplex of a training run.
inline SimplicialModel build_model(const BasisSet& basis, const std::vector<CoefficientVector>& activations)
{
	SimplicialModel m;
	m.basis = basis;
	m.simplices = extract_simplices(activations);
	validate(m);
	return m;
}

struct PruneConfig {
	/// Unset values default to 0.001 / T and 0.01 / T, T = candidate count.
	std::optional<double> lambda1;
	std::optional<double> lambda2;
	SolverConfig solver;
};

struct PruneStep {
	std::size_t candidate = 0; // index into the candidate list
	std::size_t selected = 0;  // selection size after this step
	double loss = 0.0;         // mean projection distance
	double objective = 0.0;    // loss + penalties
};

struct PruneResult {
	SimplicialModel model;
	std::vector<PruneStep> trace;
	double lambda1 = 0.0;
	double lambda2 = 0.0;
	double empty_loss = 0.0;
	double unpruned_loss = 0.0; // loss with every candidate selected
};

/// Per-candidate, per-point projection distances (candidates x N).
inline MatrixXd projection_error_table(const std::vector<Simplex>& candidates, const MatrixXd& points,
				       const BasisSet& basis, const SolverConfig& cfg = {})
{
	const Index n = points.rows();
	MatrixXd table(static_cast<Index>(candidates.size()), n);
	const std::size_t cells = candidates.size() * static_cast<std::size_t>(n);
	parallel_for(cells, [&](std::size_t cell) {
		const std::size_t c = cell / static_cast<std::size_t>(n);
		const Index j = static_cast<Index>(cell % static_cast<std::size_t>(n));
		table(static_cast<Index>(c), j) =
			project_onto_simplex(candidates[c], basis, points.row(j).transpose(), cfg).error;
	});
	return table;
}

/// Greedy forward selection on
///
///     L(Y, F) + lambda1 * |F| + lambda2 * sum dim(F_i)
///
/// with L the mean distance from each point to its nearest selected simplex,
/// and L(empty) the mean point norm. Each step adds the candidate giving the
/// lowest objective; selection stops when no candidate lowers it.
inline PruneResult greedy_prune(const std::vector<Simplex>& candidates, const DataSet& data, const BasisSet& basis,
				const PruneConfig& cfg = {})
{
	if (candidates.empty())
		throw Error(ErrorKind::Configuration, "prune: no candidate simplices");
	if (data.dim() != basis.dim())
		throw Error(ErrorKind::Validation, "prune: data dimension does not match the basis");

	const std::size_t t = candidates.size();
	const Index n = data.size();
	const double inv_n = 1.0 / static_cast<double>(n);

	PruneResult out;
	out.lambda1 = cfg.lambda1.value_or(0.001 / static_cast<double>(t));
	out.lambda2 = cfg.lambda2.value_or(0.01 / static_cast<double>(t));
	if (out.lambda1 < 0.0 || out.lambda2 < 0.0)
		throw Error(ErrorKind::Configuration, "prune: penalties must be nonnegative");

	const MatrixXd table = projection_error_table(candidates, data.points, basis, cfg.solver);

	VectorXd current = data.points.rowwise().norm();
	out.empty_loss = current.sum() * inv_n;
	out.unpruned_loss = table.colwise().minCoeff().sum() * inv_n;

	double objective = out.empty_loss;
	std::size_t dims = 0;
	std::vector<char> chosen(t, 0);
	std::vector<std::size_t> order;

	while (order.size() < t) {
		std::size_t best = t;
		double best_obj = std::numeric_limits<double>::infinity();
		double best_loss = 0.0;
		for (std::size_t c = 0; c < t; ++c) {
			if (chosen[c])
				continue;
			const double loss = current.cwiseMin(table.row(static_cast<Index>(c)).transpose()).sum() * inv_n;
			const double obj = loss + out.lambda1 * static_cast<double>(order.size() + 1) +
					   out.lambda2 * static_cast<double>(dims + static_cast<std::size_t>(
										     candidates[c].dimension()));
			if (obj < best_obj) {
				best_obj = obj;
				best = c;
				best_loss = loss;
			}
		}
		if (best == t || !(best_obj < objective))
			break;
		chosen[best] = 1;
		order.push_back(best);
		dims += static_cast<std::size_t>(candidates[best].dimension());
		current = current.cwiseMin(table.row(static_cast<Index>(best)).transpose());
		objective = best_obj;
		out.trace.push_back(PruneStep{best, order.size(), best_loss, best_obj});
	}

	out.model.basis = basis;
	out.model.pruned = true;
	for (std::size_t c : order)
		out.model.simplices.push_back(candidates[c]);
	return out;
}

inline SimplicialModel prune(const std::vector<Simplex>& candidates, const DataSet& data, const BasisSet& basis,
			     const PruneConfig& cfg = {})
{
	return greedy_prune(candidates, data, basis, cfg).model;
}

namespace detail {
inline bool strict_subset(const std::vector<int>& a, const std::vector<int>& b)
{
	return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}
} // namespace detail

/// Indices of simplices not strictly contained in another simplex.
inline std::vector<std::size_t> maximal_simplices(const SimplicialModel& model)
{
	if (model.simplices.empty())
		throw Error(ErrorKind::EmptyModel, "maximal_simplices: model has no simplices");
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i < model.simplices.size(); ++i) {
		bool maximal = true;
		for (std::size_t j = 0; j < model.simplices.size() && maximal; ++j)
			if (i != j && detail::strict_subset(model.simplices[i].vertices, model.simplices[j].vertices))
				maximal = false;
		if (maximal)
			out.push_back(i);
	}
	return out;
}

/// Codimension-1 faces of maximal simplices that belong to exactly one
/// maximal simplex, sorted lexicographically.
inline std::vector<std::vector<int>> boundary_simplices(const SimplicialModel& model)
{
	std::map<std::vector<int>, int> faces;
	for (std::size_t idx : maximal_simplices(model)) {
		const auto& v = model.simplices[idx].vertices;
		if (v.size() < 2)
			continue;
		for (std::size_t drop = 0; drop < v.size(); ++drop) {
			std::vector<int> face;
			face.reserve(v.size() - 1);
			for (std::size_t k = 0; k < v.size(); ++k)
				if (k != drop)
					face.push_back(v[k]);
			++faces[face];
		}
	}
	std::vector<std::vector<int>> out;
	for (auto& [face, n] : faces)
		if (n == 1)
			out.push_back(face);
	return out;
}

} // namespace asx

#endif
