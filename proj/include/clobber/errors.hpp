#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clobber {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IllegalMove : Error {
    using Error::Error;
};

struct InvalidSize : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line), column(column) {}
    int line;
    int column;
};

struct ReplayError : Error {
    ReplayError(std::size_t index, const std::string& what)
        : Error("move " + std::to_string(index) + ": " + what), index(index) {}
    std::size_t index;
};

struct NoConnectingSequence : Error {
    using Error::Error;
};

struct LimitExceeded : Error {
    using Error::Error;
};

struct EmptyConfiguration : Error {
    using Error::Error;
};

struct EmptyGraph : Error {
    using Error::Error;
};

struct AnchorMissing : Error {
    using Error::Error;
};

struct InvalidCircuit : Error {
    using Error::Error;
};

struct NotAOneReduction : Error {
    using Error::Error;
};

struct BombLeftGraph : Error {
    using Error::Error;
};

}  // namespace clobber
