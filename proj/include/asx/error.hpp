#ifndef ASX_ERROR_HPP
#define ASX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace asx {

enum class ErrorKind {
	DegenerateInput,
	Singularity,
	Solver,
	Persistence,
	Parse,
	Validation,
	EmptyModel,
	Extraction,
	Training,
	Synthesis,
	Estimation,
	Configuration,
	Usage,
};

inline std::string_view to_string(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::DegenerateInput: return "degenerate-input";
	case ErrorKind::Singularity: return "singularity";
	case ErrorKind::Solver: return "solver-failure";
	case ErrorKind::Persistence: return "persistence";
	case ErrorKind::Parse: return "parse";
	case ErrorKind::Validation: return "validation";
	case ErrorKind::EmptyModel: return "empty-model";
	case ErrorKind::Extraction: return "extraction";
	case ErrorKind::Training: return "training";
	case ErrorKind::Synthesis: return "synthesis";
	case ErrorKind::Estimation: return "estimation";
	case ErrorKind::Configuration: return "configuration";
	case ErrorKind::Usage: return "usage";
	}
	return "unknown";
}

/// Base class of every error raised by the library. The kind is stable and
/// machine-readable; the message is for humans.
class Error : public std::runtime_error {
public:
	Error(ErrorKind kind, const std::string& message)
		: std::runtime_error(message), m_kind(kind)
	{
	}

	ErrorKind kind() const noexcept { return m_kind; }

private:
	ErrorKind m_kind;
};

/// Raised when the active-set solver exhausts its iteration budget. Carries
/// the best feasible iterate seen and its KKT residual.
class SolverError : public Error {
public:
	SolverError(const std::string& message, Eigen::VectorXd best, double kkt_residual)
		: Error(ErrorKind::Solver, message), m_best(std::move(best)), m_kkt(kkt_residual)
	{
	}

	const Eigen::VectorXd& best_iterate() const noexcept { return m_best; }
	double kkt_residual() const noexcept { return m_kkt; }

private:
	Eigen::VectorXd m_best;
	double m_kkt;
};

/// Text-input error with 1-based position. A column of 0 means "whole line".
class ParseError : public Error {
public:
	ParseError(const std::string& message, std::size_t line, std::size_t column)
		: Error(ErrorKind::Parse, message), m_line(line), m_column(column)
	{
	}

	std::size_t line() const noexcept { return m_line; }
	std::size_t column() const noexcept { return m_column; }

private:
	std::size_t m_line;
	std::size_t m_column;
};

} // namespace asx

#endif
