#pragma once

#include <stdexcept>
#include <string>

namespace axial {

/// Failure categories. Each maps onto a process exit code of the CLI.
enum class ErrorKind {
    Parse,         ///< malformed germ description (exit 2)
    Precondition,  ///< wrong corank/class, mismatched orders, bad arguments (exit 3)
    Degenerate,    ///< numerically degenerate data, e.g. a vanishing denominator (exit 4)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(ErrorKind::Parse, what + " (line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ")"),
          line_(line), column_(column) {}
    explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_ = 0;
    int column_ = 0;
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

class DegeneracyError : public Error {
public:
    explicit DegeneracyError(const std::string& what) : Error(ErrorKind::Degenerate, what) {}
};

inline int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return 2;
        case ErrorKind::Precondition: return 3;
        case ErrorKind::Degenerate: return 4;
    }
    return 1;
}

}  // namespace axial
