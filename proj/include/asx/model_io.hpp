#ifndef ASX_MODEL_IO_HPP
#define ASX_MODEL_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "types.hpp"

// Model files are JSON documents:
//
//   {
//     "version": 1,
//     "d": <int>, "p": <int>, "radius": <number>,
//     "bases": [[d numbers], ... p arrays, one per column],
//     "simplices": [{"vertices": [...], "count": <int>, "alpha": [...]?}, ...],
//     "pruned": <bool>,
//     "meta": {...}   // free-form; "objective_trace" holds the training trace
//   }
//
// Doubles are written in shortest round-trip form, so reading a file back
// reproduces every scalar exactly.

namespace asx {

inline constexpr int model_format_version = 1;

inline nlohmann::json model_to_json(const SimplicialModel& model)
{
	using nlohmann::json;
	json j;
	j["version"] = model_format_version;
	j["d"] = model.basis.dim();
	j["p"] = model.basis.count();
	j["radius"] = model.basis.radius;
	json bases = json::array();
	for (Index c = 0; c < model.basis.count(); ++c) {
		json col = json::array();
		for (Index r = 0; r < model.basis.dim(); ++r)
			col.push_back(model.basis.bases(r, c));
		bases.push_back(std::move(col));
	}
	j["bases"] = std::move(bases);
	json simplices = json::array();
	for (const auto& s : model.simplices) {
		json e;
		e["vertices"] = s.vertices;
		e["count"] = s.count;
		if (s.dirichlet)
			e["alpha"] = std::vector<double>(s.dirichlet->alpha.data(),
							 s.dirichlet->alpha.data() + s.dirichlet->alpha.size());
		simplices.push_back(std::move(e));
	}
	j["simplices"] = std::move(simplices);
	j["pruned"] = model.pruned;
	json meta = model.meta.is_object() ? model.meta : json::object();
	meta["objective_trace"] = model.objective_trace;
	j["meta"] = std::move(meta);
	return j;
}

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* key, const std::string& where)
{
	if (!j.is_object() || !j.contains(key))
		throw Error(ErrorKind::Parse, where + ": missing field '" + key + "'");
	return j.at(key);
}

} // namespace detail

/// Decodes and validates a model document. `where` prefixes error messages.
inline SimplicialModel model_from_json(const nlohmann::json& j, const std::string& where = "model")
{
	using detail::require_field;
	SimplicialModel m;
	try {
		const int version = require_field(j, "version", where).get<int>();
		if (version != model_format_version)
			throw Error(ErrorKind::Parse, where + ": unsupported version " + std::to_string(version));
		const Index d = require_field(j, "d", where).get<Index>();
		const Index p = require_field(j, "p", where).get<Index>();
		if (d < 1 || p < 1)
			throw Error(ErrorKind::Validation, where + ": d and p must be positive");
		m.basis.radius = require_field(j, "radius", where).get<double>();
		const auto& bases = require_field(j, "bases", where);
		if (!bases.is_array() || static_cast<Index>(bases.size()) != p)
			throw Error(ErrorKind::Parse, where + ": field 'bases' must hold p = " + std::to_string(p) + " arrays");
		m.basis.bases.resize(d, p);
		for (Index c = 0; c < p; ++c) {
			const auto& col = bases[static_cast<std::size_t>(c)];
			if (!col.is_array() || static_cast<Index>(col.size()) != d)
				throw Error(ErrorKind::Parse, where + ": bases[" + std::to_string(c) + "] must hold d = " +
								      std::to_string(d) + " numbers");
			for (Index r = 0; r < d; ++r)
				m.basis.bases(r, c) = col[static_cast<std::size_t>(r)].get<double>();
		}
		const auto& simplices = require_field(j, "simplices", where);
		if (!simplices.is_array())
			throw Error(ErrorKind::Parse, where + ": field 'simplices' must be an array");
		for (std::size_t t = 0; t < simplices.size(); ++t) {
			const auto& e = simplices[t];
			const std::string at = where + ": simplices[" + std::to_string(t) + "]";
			Simplex s;
			s.vertices = require_field(e, "vertices", at).get<std::vector<int>>();
			const auto& count = require_field(e, "count", at);
			if (!count.is_number_unsigned() && !(count.is_number_integer() && count.get<long long>() >= 0))
				throw Error(ErrorKind::Validation, at + ": count must be a nonnegative integer");
			s.count = count.get<std::size_t>();
			if (e.contains("alpha")) {
				const auto a = e.at("alpha").get<std::vector<double>>();
				s.dirichlet = DirichletParams{Eigen::Map<const VectorXd>(a.data(), static_cast<Index>(a.size()))};
			}
			m.simplices.push_back(std::move(s));
		}
		m.pruned = require_field(j, "pruned", where).get<bool>();
		if (j.contains("meta") && j.at("meta").is_object()) {
			m.meta = j.at("meta");
			if (m.meta.contains("objective_trace")) {
				m.objective_trace = m.meta.at("objective_trace").get<std::vector<double>>();
				m.meta.erase("objective_trace");
			}
		}
	} catch (const nlohmann::json::exception& e) {
		throw Error(ErrorKind::Parse, where + ": " + e.what());
	}
	try {
		validate(m);
	} catch (const Error& e) {
		throw Error(ErrorKind::Validation, where + ": " + e.what());
	}
	return m;
}

inline void save_model(const SimplicialModel& model, const std::string& path)
{
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out)
		throw Error(ErrorKind::Persistence, "cannot open '" + path + "' for writing");
	out << model_to_json(model).dump(1, '\t') << '\n';
	out.flush();
	if (!out)
		throw Error(ErrorKind::Persistence, "write failed for '" + path + "'");
}

inline SimplicialModel load_model(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw Error(ErrorKind::Persistence, "cannot open '" + path + "' for reading");
	nlohmann::json j;
	try {
		j = nlohmann::json::parse(in);
	} catch (const nlohmann::json::parse_error& e) {
		// e.byte is the offset of the failure; report the line for humans.
		in.clear();
		in.seekg(0);
		std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
		std::size_t line = 1;
		for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
			if (text[i] == '\n')
				++line;
		throw ParseError(path + ":" + std::to_string(line) + ": " + e.what(), line, 0);
	}
	return model_from_json(j, path);
}

} // namespace asx

#endif
