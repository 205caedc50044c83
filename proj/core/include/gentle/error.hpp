#pragma once

#include <stdexcept>
#include <string>

namespace gentle {

// Base of every error the library raises on bad input.  Internal
// falsification events (formula vs. oracle) use FalsificationError instead,
// so callers can map the two to different exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class InfiniteDimension : public Error {
public:
    using Error::Error;
};

class NotAString : public Error {
public:
    using Error::Error;
};

class NotABand : public Error {
public:
    using Error::Error;
};

class UnsupportedShape : public Error {
public:
    using Error::Error;
};

class Inconclusive : public Error {
public:
    using Error::Error;
};

class FalsificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gentle
