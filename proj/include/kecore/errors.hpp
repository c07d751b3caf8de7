#ifndef KECORE_ERRORS_HPP
#define KECORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kecore {

/// Input text does not follow the edge-list format. `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Base for violated operation preconditions (CLI exit code 3).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotKEError : public PreconditionError {
public:
    explicit NotKEError(const std::string& what = "graph is not Konig-Egervary")
        : PreconditionError(what) {}
};

class NotBipartiteError : public PreconditionError {
public:
    explicit NotBipartiteError(const std::string& what = "graph is not bipartite")
        : PreconditionError(what) {}
};

class NoPerfectMatchingError : public PreconditionError {
public:
    explicit NoPerfectMatchingError(const std::string& what = "graph has no perfect matching")
        : PreconditionError(what) {}
};

/// Instance exceeds a brute-force guard (CLI exit code 4).
class TooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace kecore

#endif
