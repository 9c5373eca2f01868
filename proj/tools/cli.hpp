#pragma once

// Command-line front end. `run` is kept separate from main() so tests can
// drive the CLI in-process.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asx/asx.hpp"

namespace asx::cli {

namespace detail {

using nlohmann::json;

inline const std::vector<std::string> norm_modes{"unit", "center-unit", "stereographic", "pose"};

/// How raw rows were mapped onto the unit sphere, kept in model meta so
/// later commands can map new data the same way.
struct Normalization {
	std::string mode = "center-unit";
	VectorXd mean;
	double scale = 1.0;
};

inline json to_json(const Normalization& n)
{
	json j;
	j["mode"] = n.mode;
	j["mean"] = std::vector<double>(n.mean.data(), n.mean.data() + n.mean.size());
	j["scale"] = n.scale;
	return j;
}

inline Normalization normalization_of(const SimplicialModel& m)
{
	Normalization n;
	n.mode = "unit";
	if (!m.meta.is_object() || !m.meta.contains("normalization"))
		return n;
	const json& j = m.meta.at("normalization");
	n.mode = j.value("mode", "unit");
	const auto mean = j.value("mean", std::vector<double>{});
	n.mean = Eigen::Map<const VectorXd>(mean.data(), static_cast<Index>(mean.size()));
	n.scale = j.value("scale", 1.0);
	return n;
}

/// Fits the normalization on `raw` and returns the normalized data.
inline DataSet fit_normalize(const DataSet& raw, Normalization& n)
{
	DataSet out;
	if (n.mode == "unit") {
		out = normalize(raw.points);
		n.mean = VectorXd::Zero(raw.dim());
	} else if (n.mode == "center-unit") {
		auto [data, mean] = center_normalize(raw.points);
		out = std::move(data);
		n.mean = mean;
		n.scale = (raw.points.rowwise() - mean.transpose()).rowwise().norm().mean();
	} else if (n.mode == "stereographic") {
		out = stereographic_lift(raw.points);
		n.mean = VectorXd::Zero(raw.dim());
	} else {
		out = normalize_poses(raw.points);
		n.mean = VectorXd::Zero(raw.dim());
	}
	out.labels = raw.labels;
	return out;
}

/// Applies a stored normalization to new raw data.
inline DataSet apply_normalize(const DataSet& raw, const Normalization& n)
{
	DataSet out;
	if (n.mode == "unit")
		out = normalize(raw.points);
	else if (n.mode == "center-unit")
		out = center_normalize_with(raw.points, n.mean);
	else if (n.mode == "stereographic")
		out = stereographic_lift(raw.points);
	else if (n.mode == "pose")
		out = normalize_poses(raw.points);
	else
		throw Error(ErrorKind::Validation, "unknown normalization mode '" + n.mode + "' in model meta");
	out.labels = raw.labels;
	return out;
}

/// Maps normalized rows back to the input frame where the mode allows it.
/// Center-unit uses the mean row norm as a single scale since per-row norms
/// are not recoverable.
inline MatrixXd denormalize(const MatrixXd& points, const Normalization& n)
{
	if (n.mode == "center-unit")
		return (n.scale * points).rowwise() + n.mean.transpose();
	if (n.mode == "stereographic")
		return stereographic_drop(points);
	return points;
}

inline std::string utc_timestamp()
{
	const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
	std::tm tm{};
	gmtime_r(&t, &tm);
	std::ostringstream s;
	s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
	return s.str();
}

/// Writes to `path` or, when it is empty, to `out`.
inline void emit(const std::string& text, const std::string& path, std::ostream& out)
{
	if (path.empty()) {
		out << text;
		return;
	}
	std::ofstream f(path, std::ios::binary | std::ios::trunc);
	if (!f)
		throw Error(ErrorKind::Persistence, "cannot open '" + path + "' for writing");
	f << text;
	if (!f.flush())
		throw Error(ErrorKind::Persistence, "write failed for '" + path + "'");
}

inline std::string csv_text(const MatrixXd& points, const std::vector<std::string>* labels = nullptr)
{
	std::ostringstream s;
	write_csv(s, points, labels);
	return s.str();
}

struct SolverFlags {
	double kkt_tolerance = 1e-9;
	int max_iterations = 0;
	double activation_threshold = 1e-6;

	void add(CLI::App* app)
	{
		app->add_option("--kkt-tolerance", kkt_tolerance, "Solver KKT tolerance")->capture_default_str();
		app->add_option("--max-iterations", max_iterations, "Solver iteration cap (0: 10 x columns)");
		app->add_option("--activation-threshold", activation_threshold, "Support threshold")
			->capture_default_str();
	}

	SolverConfig config() const
	{
		SolverConfig c;
		c.kkt_tolerance = kkt_tolerance;
		if (max_iterations > 0)
			c.max_iterations = max_iterations;
		c.activation_threshold = activation_threshold;
		return c;
	}
};

struct TrainFlags {
	int bases = 10;
	double radius = 1.0;
	int epochs = 50;
	int batch = 1;
	std::uint64_t seed = 1;
	double tol = 1e-6;
	std::string norm = "center-unit";

	void add(CLI::App* app, bool with_bases = true)
	{
		if (with_bases)
			app->add_option("--bases,-p", bases, "Number of bases")->capture_default_str();
		if (with_bases)
			app->add_option("--radius,-r", radius, "Hull radius in (0, 1]")->capture_default_str();
		app->add_option("--epochs", epochs, "Training epochs")->capture_default_str();
		app->add_option("--batch", batch, "Mini-batch size")->capture_default_str();
		app->add_option("--seed", seed, "RNG seed")->capture_default_str();
		app->add_option("--tol", tol, "Relative objective change for early stop")->capture_default_str();
		app->add_option("--norm", norm, "Normalization mode")
			->check(CLI::IsMember(norm_modes))
			->capture_default_str();
	}

	TrainConfig config(const SolverConfig& solver) const
	{
		TrainConfig c;
		c.bases = bases;
		c.radius = radius;
		c.epochs = epochs;
		c.batch_size = batch;
		c.seed = seed;
		c.tol_rel_objective = tol;
		c.solver = solver;
		return c;
	}

	json to_json() const
	{
		return json{{"bases", bases}, {"radius", radius}, {"epochs", epochs},
			    {"batch", batch}, {"seed", seed},     {"tol", tol}};
	}
};

inline void stamp(SimplicialModel& m, bool timestamp)
{
	if (!m.meta.is_object())
		m.meta = json::object();
	m.meta["rng"] = rng_name;
	m.meta["format"] = "asx-model";
	if (timestamp)
		m.meta["created"] = utc_timestamp();
	else
		m.meta.erase("created");
}

inline void print_warnings(const std::vector<std::string>& warnings, std::ostream& err)
{
	for (const auto& w : warnings)
		err << "warning: " << w << '\n';
}

/// Stacks consecutive frames within runs of equal labels.
inline DataSet stack_labeled(const DataSet& data, int window)
{
	if (window <= 1)
		return data;
	if (!data.labels)
		throw Error(ErrorKind::Usage, "--snippet requires labeled data");
	const auto& labels = *data.labels;
	DataSet out;
	out.labels.emplace();
	std::vector<MatrixXd> blocks;
	Index rows = 0;
	for (Index start = 0; start < data.size();) {
		Index end = start;
		while (end < data.size() && labels[static_cast<std::size_t>(end)] == labels[static_cast<std::size_t>(start)])
			++end;
		if (end - start >= window) {
			blocks.push_back(stack_snippets(data.points.middleRows(start, end - start), window));
			rows += blocks.back().rows();
			out.labels->insert(out.labels->end(), static_cast<std::size_t>(blocks.back().rows()),
					   labels[static_cast<std::size_t>(start)]);
		}
		start = end;
	}
	if (rows == 0)
		throw Error(ErrorKind::Validation, "no label run is as long as the snippet window");
	out.points.resize(rows, data.dim() * window);
	Index at = 0;
	for (const auto& b : blocks) {
		out.points.middleRows(at, b.rows()) = b;
		at += b.rows();
	}
	return out;
}

inline std::vector<double> parse_doubles(const std::string& text, const char* what)
{
	std::vector<double> out;
	for (const auto& field : asx::detail::split_csv_record(text, 1))
		out.push_back(asx::detail::parse_number(asx::detail::trim(field), 1, out.size() + 1));
	if (out.empty())
		throw Error(ErrorKind::Usage, std::string(what) + " is empty");
	return out;
}

} // namespace detail

/// Runs the CLI. Returns 0 on success, 2 on usage errors and 1 on data errors.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
	using namespace detail;

	CLI::App app{"Learn and apply activated-simplex models of unit-normalized data"};
	app.require_subcommand(1);
	unsigned threads = 0;
	app.add_option("--threads", threads, "Worker thread cap (0: hardware)")->envname("ASX_THREADS");

	std::string out_path;
	bool no_timestamp = false;
	SolverFlags solver;
	TrainFlags tf;

	// gen
	auto* gen = app.add_subcommand("gen", "Generate a synthetic dataset as CSV");
	std::string shape;
	Index n = 1000;
	double noise = 0.0;
	std::uint64_t gen_seed = 1;
	Index ambient = 0;
	gen->add_option("shape", shape, "Shape name")->required();
	gen->add_option("--n", n, "Number of points")->capture_default_str();
	gen->add_option("--noise", noise, "Gaussian noise scale")->capture_default_str();
	gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
	gen->add_option("--ambient", ambient, "Pad points with zeros to this dimension");
	gen->add_option("--out,-o", out_path, "Output file (default stdout)");

	// train
	auto* trn = app.add_subcommand("train", "Learn bases and activated simplices");
	std::string data_path, model_path, second_path, out_model;
	tf.add(trn);
	solver.add(trn);
	bool labels = false;
	trn->add_flag("--labels", labels, "Input has a trailing label column (ignored)");
	trn->add_flag("--no-timestamp", no_timestamp, "Omit the creation time from the model meta");
	trn->add_option("data", data_path, "Input CSV")->required();
	trn->add_option("model", model_path, "Output model file")->required();

	// prune
	auto* prn = app.add_subcommand("prune", "Greedily select a compact set of simplices");
	std::optional<double> lambda1, lambda2;
	prn->add_option("--lambda1", lambda1, "Per-simplex penalty (default 0.001 / candidates)");
	prn->add_option("--lambda2", lambda2, "Dimension penalty (default 0.01 / candidates)");
	prn->add_flag("--no-timestamp", no_timestamp, "Omit the creation time from the model meta");
	solver.add(prn);
	prn->add_option("model", model_path, "Input model")->required();
	prn->add_option("data", data_path, "Data CSV in the raw frame")->required();
	prn->add_option("out", out_model, "Output model file")->required();

	// prune-curve
	auto* pcv = app.add_subcommand("prune-curve", "Emit the greedy selection trace as CSV");
	pcv->add_option("--lambda1", lambda1, "Per-simplex penalty");
	pcv->add_option("--lambda2", lambda2, "Dimension penalty");
	solver.add(pcv);
	pcv->add_option("model", model_path, "Input model")->required();
	pcv->add_option("data", data_path, "Data CSV")->required();
	pcv->add_option("--out,-o", out_path, "Output file (default stdout)");

	// project
	auto* prj = app.add_subcommand("project", "Project points onto the nearest simplex");
	solver.add(prj);
	prj->add_option("model", model_path, "Model file")->required();
	prj->add_option("data", data_path, "Data CSV")->required();
	prj->add_option("--out,-o", out_path, "Output file (default stdout)");

	// classify
	auto* cls = app.add_subcommand("classify", "Train one model per label and classify a test set");
	tf.add(cls);
	solver.add(cls);
	int snippet = 1;
	bool prune_classes = false;
	cls->add_option("--snippet", snippet, "Stack this many consecutive frames per sample")->capture_default_str();
	cls->add_flag("--prune", prune_classes, "Prune each class model on its training data");
	cls->add_option("train", data_path, "Labeled training CSV")->required();
	cls->add_option("test", second_path, "Labeled or unlabeled test CSV")->required();
	bool test_labels = true;
	cls->add_option("--test-labels", test_labels, "Whether the test CSV has labels")->capture_default_str();
	cls->add_option("--out,-o", out_path, "Output file (default stdout)");

	// fit-dirichlet
	auto* fdr = app.add_subcommand("fit-dirichlet", "Fit a Dirichlet per simplex from data coefficients");
	std::size_t min_samples = 5;
	fdr->add_option("--min-samples", min_samples, "Below this, alpha stays at ones")->capture_default_str();
	fdr->add_flag("--no-timestamp", no_timestamp, "Omit the creation time from the model meta");
	solver.add(fdr);
	fdr->add_option("model", model_path, "Input model")->required();
	fdr->add_option("data", data_path, "Data CSV")->required();
	fdr->add_option("out", out_model, "Output model file")->required();

	// synthesize
	auto* syn = app.add_subcommand("synthesize", "Sample new points from a model with Dirichlet parameters");
	Index count = 100;
	std::uint64_t syn_seed = 1;
	bool raw_frame = false, with_simplex = false;
	syn->add_option("--count", count, "Number of points")->capture_default_str();
	syn->add_option("--seed", syn_seed, "RNG seed")->capture_default_str();
	syn->add_flag("--denormalize", raw_frame, "Map points back to the training frame");
	syn->add_flag("--with-simplex", with_simplex, "Append the sampled simplex index as a final column");
	syn->add_option("model", model_path, "Model file")->required();
	syn->add_option("--out,-o", out_path, "Output file (default stdout)");

	// pose-estimate
	auto* pse = app.add_subcommand("pose-estimate", "Lift 2D joint observations to 3D poses");
	std::string camera_text, truth_path;
	pse->add_option("--camera", camera_text, "Weak-perspective camera as six row-major values")->required();
	pse->add_option("--truth", truth_path, "Raw 3D poses for a per-joint error column");
	solver.add(pse);
	pse->add_option("model", model_path, "Pose model")->required();
	pse->add_option("observed", data_path, "CSV of 2D joints, one pose per row (u1,v1,u2,v2,...)")->required();
	pse->add_option("--out,-o", out_path, "Output file (default stdout)");

	// boundary
	auto* bnd = app.add_subcommand("boundary", "List boundary faces of the model's maximal simplices");
	bnd->add_option("model", model_path, "Model file")->required();
	bnd->add_option("--out,-o", out_path, "Output file (default stdout)");

	// eval
	auto* evl = app.add_subcommand("eval", "Reconstruction error over a grid of basis counts and radii");
	std::vector<int> grid_p{10};
	std::vector<double> grid_r{1.0};
	bool eval_prune = false;
	tf.add(evl, false);
	solver.add(evl);
	evl->add_option("--bases,-p", grid_p, "Basis counts")->delimiter(',')->capture_default_str();
	evl->add_option("--radii,-r", grid_r, "Radii")->delimiter(',')->capture_default_str();
	evl->add_flag("--prune", eval_prune, "Evaluate pruned models");
	evl->add_option("data", data_path, "Training CSV")->required();
	evl->add_option("--test", second_path, "Held-out CSV (default: training data)");
	evl->add_option("--out,-o", out_path, "Output file (default stdout)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? 0 : 2;
	}

	try {
		set_thread_limit(threads);
		const SolverConfig scfg = solver.config();
		validate(scfg);

		if (*gen) {
			const MatrixXd p = generate(shape, n, noise, gen_seed, ambient);
			emit(csv_text(p), out_path, out);
		} else if (*trn) {
			const DataSet raw = read_csv(data_path, labels);
			Normalization norm;
			norm.mode = tf.norm;
			const DataSet data = fit_normalize(raw, norm);
			const TrainResult tr = train(data, tf.config(scfg));
			print_warnings(tr.warnings, err);
			SimplicialModel m = build_model(tr.basis, tr.activations);
			m.objective_trace = tr.objective_trace;
			m.meta["normalization"] = to_json(norm);
			m.meta["train"] = tf.to_json();
			m.meta["epochs_run"] = tr.epochs_run;
			m.meta["mean_error"] = mean_projection_error(m, data.points, scfg);
			stamp(m, !no_timestamp);
			save_model(m, model_path);
		} else if (*prn) {
			SimplicialModel m = load_model(model_path);
			const DataSet data = apply_normalize(read_csv(data_path), normalization_of(m));
			PruneConfig pc;
			pc.lambda1 = lambda1;
			pc.lambda2 = lambda2;
			pc.solver = scfg;
			const PruneResult res = greedy_prune(m.simplices, data, m.basis, pc);
			SimplicialModel pruned = res.model;
			pruned.meta = m.meta;
			pruned.objective_trace = m.objective_trace;
			pruned.meta["prune"] = json{{"lambda1", res.lambda1},
						    {"lambda2", res.lambda2},
						    {"candidates", m.simplices.size()},
						    {"unpruned_loss", res.unpruned_loss},
						    {"loss", res.trace.empty() ? res.empty_loss : res.trace.back().loss}};
			stamp(pruned, !no_timestamp);
			save_model(pruned, out_model);
		} else if (*pcv) {
			const SimplicialModel m = load_model(model_path);
			const DataSet data = apply_normalize(read_csv(data_path), normalization_of(m));
			PruneConfig pc;
			pc.lambda1 = lambda1;
			pc.lambda2 = lambda2;
			pc.solver = scfg;
			const PruneResult res = greedy_prune(m.simplices, data, m.basis, pc);
			std::ostringstream s;
			s << "step,candidate,simplexCount,loss,objective\n";
			s << "0,,0," << format_number(res.empty_loss) << ',' << format_number(res.empty_loss) << '\n';
			for (std::size_t k = 0; k < res.trace.size(); ++k)
				s << k + 1 << ',' << res.trace[k].candidate << ',' << k + 1 << ','
				  << format_number(res.trace[k].loss) << ',' << format_number(res.trace[k].objective) << '\n';
			emit(s.str(), out_path, out);
		} else if (*prj) {
			const SimplicialModel m = load_model(model_path);
			const DataSet data = apply_normalize(read_csv(data_path), normalization_of(m));
			const auto proj = project_dataset(m, data.points, scfg);
			std::ostringstream s;
			s << "row,simplex,error\n";
			for (std::size_t i = 0; i < proj.size(); ++i)
				s << i << ',' << proj[i].simplex << ',' << format_number(proj[i].error) << '\n';
			emit(s.str(), out_path, out);
		} else if (*cls) {
			DataSet train_raw = stack_labeled(read_csv(data_path, true), snippet);
			DataSet test_raw = read_csv(second_path, test_labels);
			if (snippet > 1) {
				if (!test_labels)
					throw Error(ErrorKind::Usage, "--snippet requires a labeled test set");
				test_raw = stack_labeled(test_raw, snippet);
			}
			Normalization norm;
			norm.mode = tf.norm;
			const DataSet train_set = fit_normalize(train_raw, norm);
			const DataSet test_set = apply_normalize(test_raw, norm);
			std::optional<PruneConfig> pc;
			if (prune_classes) {
				pc.emplace();
				pc->solver = scfg;
			}
			const ClassModel cm = train_class_model(train_set, tf.config(scfg), pc);
			std::ostringstream s;
			s << (test_labels ? "row,predicted,truth\n" : "row,predicted\n");
			std::size_t correct = 0;
			for (Index i = 0; i < test_set.size(); ++i) {
				const auto c = classify(cm, test_set.points.row(i).transpose(), scfg);
				s << i << ',' << quote_field(c.label);
				if (test_labels) {
					const auto& truth = (*test_set.labels)[static_cast<std::size_t>(i)];
					s << ',' << quote_field(truth);
					correct += c.label == truth;
				}
				s << '\n';
			}
			emit(s.str(), out_path, out);
			if (test_labels)
				err << "accuracy: " << format_number(static_cast<double>(correct) / static_cast<double>(test_set.size()))
				    << '\n';
		} else if (*fdr) {
			SimplicialModel m = load_model(model_path);
			const DataSet data = apply_normalize(read_csv(data_path), normalization_of(m));
			fit_model_dirichlets(m, data.points, scfg, min_samples);
			stamp(m, !no_timestamp);
			save_model(m, out_model);
		} else if (*syn) {
			const SimplicialModel m = load_model(model_path);
			const Synthesis s = synthesize(m, count, syn_seed);
			MatrixXd pts = raw_frame ? denormalize(s.points, normalization_of(m)) : s.points;
			if (with_simplex) {
				pts.conservativeResize(pts.rows(), pts.cols() + 1);
				for (Index i = 0; i < pts.rows(); ++i)
					pts(i, pts.cols() - 1) = static_cast<double>(s.simplex[static_cast<std::size_t>(i)]);
			}
			emit(csv_text(pts), out_path, out);
		} else if (*pse) {
			const SimplicialModel m = load_model(model_path);
			const auto cam_values = parse_doubles(camera_text, "--camera");
			if (cam_values.size() != 6)
				throw Error(ErrorKind::Usage, "--camera needs six values, got " + std::to_string(cam_values.size()));
			CameraMatrix cam;
			cam.m << cam_values[0], cam_values[1], cam_values[2], cam_values[3], cam_values[4], cam_values[5];
			if (auto w = camera_warning(cam))
				err << "warning: " << *w << '\n';
			const DataSet obs = read_csv(data_path);
			if (obs.dim() % 2 != 0)
				throw Error(ErrorKind::Validation, "observation rows need an even number of values");
			std::optional<DataSet> truth;
			if (!truth_path.empty()) {
				truth = apply_normalize(read_csv(truth_path), normalization_of(m));
				if (truth->size() != obs.size())
					throw Error(ErrorKind::Validation, "--truth row count does not match observations");
			}
			std::ostringstream s;
			const Index joints = obs.dim() / 2;
			for (Index j = 0; j < joints; ++j)
				s << 'x' << j + 1 << ",y" << j + 1 << ",z" << j + 1 << ',';
			s << "simplex,residual" << (truth ? ",jointError" : "") << '\n';
			for (Index i = 0; i < obs.size(); ++i) {
				const VectorXd o = obs.points.row(i).transpose();
				const auto est = estimate_pose(m, cam, Eigen::Map<const Eigen::Matrix2Xd>(o.data(), 2, joints), scfg);
				for (Index k = 0; k < est.pose.size(); ++k)
					s << format_number(est.pose[k]) << ',';
				s << est.simplex << ',' << format_number(est.residual);
				if (truth)
					s << ',' << format_number(mean_joint_error(est.pose, truth->points.row(i).transpose()));
				s << '\n';
			}
			emit(s.str(), out_path, out);
		} else if (*bnd) {
			const SimplicialModel m = load_model(model_path);
			std::ostringstream s;
			for (const auto& face : boundary_simplices(m)) {
				for (std::size_t k = 0; k < face.size(); ++k)
					s << (k ? "," : "") << face[k];
				s << '\n';
			}
			emit(s.str(), out_path, out);
		} else if (*evl) {
			const DataSet raw = read_csv(data_path);
			Normalization norm;
			norm.mode = tf.norm;
			const DataSet data = fit_normalize(raw, norm);
			const DataSet test = second_path.empty() ? data : apply_normalize(read_csv(second_path), norm);
			std::ostringstream s;
			s << "p,r,meanError,simplexCount,meanDim\n";
			for (int p : grid_p) {
				for (double r : grid_r) {
					TrainFlags f = tf;
					f.bases = p;
					f.radius = r;
					const TrainResult tr = train(data, f.config(scfg));
					print_warnings(tr.warnings, err);
					SimplicialModel m = build_model(tr.basis, tr.activations);
					if (eval_prune) {
						PruneConfig pc;
						pc.solver = scfg;
						m = prune(m.simplices, data, m.basis, pc);
					}
					double dims = 0.0;
					for (const auto& sx : m.simplices)
						dims += sx.dimension();
					s << p << ',' << format_number(r) << ','
					  << format_number(mean_projection_error(m, test.points, scfg)) << ',' << m.simplices.size()
					  << ',' << format_number(dims / static_cast<double>(m.simplices.size())) << '\n';
				}
			}
			emit(s.str(), out_path, out);
		}
	} catch (const Error& e) {
		err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
		return e.kind() == ErrorKind::Usage || e.kind() == ErrorKind::Configuration ? 2 : 1;
	} catch (const std::exception& e) {
		err << "error[internal]: " << e.what() << '\n';
		return 1;
	}
	return 0;
}

} // namespace asx::cli
