#ifndef ASX_CSV_HPP
#define ASX_CSV_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "types.hpp"

// Comma-separated numeric tables. '.' decimal point regardless of locale;
// fields may be double-quoted (RFC 4180). Numbers are written in shortest
// round-trip form.

namespace asx {

namespace detail {

/// Splits one record into fields, honoring double quotes.
inline std::vector<std::string> split_csv_record(std::string_view line, std::size_t line_no)
{
	std::vector<std::string> fields;
	std::string cur;
	bool quoted = false;
	for (std::size_t i = 0; i < line.size(); ++i) {
		const char c = line[i];
		if (quoted) {
			if (c == '"') {
				if (i + 1 < line.size() && line[i + 1] == '"') {
					cur.push_back('"');
					++i;
				} else {
					quoted = false;
				}
			} else {
				cur.push_back(c);
			}
		} else if (c == '"') {
			quoted = true;
		} else if (c == ',') {
			fields.push_back(std::move(cur));
			cur.clear();
		} else {
			cur.push_back(c);
		}
	}
	if (quoted)
		throw ParseError("csv: unterminated quote on line " + std::to_string(line_no), line_no, 0);
	fields.push_back(std::move(cur));
	return fields;
}

inline std::string_view trim(std::string_view s)
{
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
		s.remove_prefix(1);
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
		s.remove_suffix(1);
	return s;
}

inline double parse_number(std::string_view text, std::size_t row, std::size_t col)
{
	const std::string_view t = trim(text);
	double v = 0.0;
	const char* first = t.data();
	const char* last = t.data() + t.size();
	if (!t.empty() && *first == '+')
		++first;
	const auto [ptr, ec] = std::from_chars(first, last, v);
	if (t.empty() || ec != std::errc() || ptr != last)
		throw ParseError("csv: non-numeric value '" + std::string(t) + "' at row " + std::to_string(row) +
					 " column " + std::to_string(col),
				 row, col);
	if (!std::isfinite(v))
		throw ParseError("csv: non-finite value at row " + std::to_string(row) + " column " + std::to_string(col),
				 row, col);
	return v;
}

} // namespace detail

/// Reads a rectangular numeric table. With `has_labels`, the last column is
/// split off as the label list. Blank lines are skipped; row numbers in
/// errors count physical lines from 1.
inline DataSet read_csv(std::istream& in, bool has_labels = false)
{
	std::vector<std::vector<double>> rows;
	std::vector<std::string> labels;
	std::string line;
	std::size_t line_no = 0;
	std::size_t width = 0;
	while (std::getline(in, line)) {
		++line_no;
		if (detail::trim(line).empty())
			continue;
		auto fields = detail::split_csv_record(line, line_no);
		if (has_labels) {
			if (fields.size() < 2)
				throw ParseError("csv: row " + std::to_string(line_no) + " needs at least one value and a label",
						 line_no, 0);
			labels.emplace_back(detail::trim(fields.back()));
			fields.pop_back();
		}
		if (rows.empty())
			width = fields.size();
		else if (fields.size() != width)
			throw ParseError("csv: row " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
						 " values, expected " + std::to_string(width),
					 line_no, 0);
		std::vector<double> r;
		r.reserve(fields.size());
		for (std::size_t c = 0; c < fields.size(); ++c)
			r.push_back(detail::parse_number(fields[c], line_no, c + 1));
		rows.push_back(std::move(r));
	}
	if (rows.empty())
		throw ParseError("csv: no data rows", line_no, 0);

	DataSet out;
	out.points.resize(static_cast<Index>(rows.size()), static_cast<Index>(width));
	for (std::size_t i = 0; i < rows.size(); ++i)
		for (std::size_t j = 0; j < width; ++j)
			out.points(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
	if (has_labels)
		out.labels = std::move(labels);
	return out;
}

inline DataSet read_csv(const std::string& path, bool has_labels = false)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw Error(ErrorKind::Persistence, "cannot open '" + path + "' for reading");
	try {
		return read_csv(in, has_labels);
	} catch (const ParseError& e) {
		throw ParseError(path + ": " + e.what(), e.line(), e.column());
	}
}

inline std::string format_number(double v)
{
	char buf[32];
	const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
	return std::string(buf, ptr);
}

inline std::string quote_field(const std::string& s)
{
	if (s.find_first_of(",\"\n\r") == std::string::npos)
		return s;
	std::string q = "\"";
	for (char c : s) {
		if (c == '"')
			q.push_back('"');
		q.push_back(c);
	}
	q.push_back('"');
	return q;
}

inline void write_csv(std::ostream& out, const MatrixXd& points, const std::vector<std::string>* labels = nullptr)
{
	for (Index i = 0; i < points.rows(); ++i) {
		for (Index j = 0; j < points.cols(); ++j) {
			if (j > 0)
				out << ',';
			out << format_number(points(i, j));
		}
		if (labels)
			out << ',' << quote_field((*labels)[static_cast<std::size_t>(i)]);
		out << '\n';
	}
}

inline void write_csv(const std::string& path, const MatrixXd& points,
		      const std::vector<std::string>* labels = nullptr)
{
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out)
		throw Error(ErrorKind::Persistence, "cannot open '" + path + "' for writing");
	write_csv(out, points, labels);
	if (!out)
		throw Error(ErrorKind::Persistence, "write failed for '" + path + "'");
}

} // namespace asx

#endif
