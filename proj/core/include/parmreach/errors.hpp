#pragma once

#include <stdexcept>
#include <string>

namespace parmreach {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// polycore
class MissingAssignment : public Error { using Error::Error; };
class NotDivisible : public Error { using Error::Error; };

// factorizations
class InsufficientRefinement : public Error { using Error::Error; };

// ratfun
class DivisionByZeroFunction : public Error { using Error::Error; };
class EvalDenominatorZero : public Error { using Error::Error; };

// model
class ModelError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public ModelError {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& what)
        : ModelError(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnknownState : public ModelError { using ModelError::ModelError; };
class RowSumNotOne : public ModelError { using ModelError::ModelError; };
class TargetNotAbsorbing : public ModelError { using ModelError::ModelError; };
class NotWellDefined : public ModelError { using ModelError::ModelError; };

// scc_mc
class AbsorbingSubset : public ModelError { using ModelError::ModelError; };
class NoTargets : public ModelError { using ModelError::ModelError; };

// elimination
class SelfLoopProbabilityOne : public ModelError { using ModelError::ModelError; };

// oracle
class SingularSystem : public ModelError { using ModelError::ModelError; };

// benchgen
class SizeCapExceeded : public Error { using Error::Error; };

}  // namespace parmreach
