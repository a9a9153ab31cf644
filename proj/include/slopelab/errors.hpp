#pragma once

#include <stdexcept>
#include <string>

namespace slopelab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownGenerator : public Error {
public:
    explicit UnknownGenerator(const std::string& name)
        : Error("unknown generator '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class SyntaxError : public Error {
public:
    using Error::Error;
};

class ZeroExponent : public Error {
public:
    explicit ZeroExponent(const std::string& where)
        : Error("zero exponent in '" + where + "'") {}
};

class MissingPeripheral : public Error {
public:
    using Error::Error;
};

class InvalidTorusParameters : public Error {
public:
    using Error::Error;
};

class InvalidSlope : public Error {
public:
    using Error::Error;
};

class NonpositiveDefect : public Error {
public:
    using Error::Error;
};

class EmptyPattern : public Error {
public:
    using Error::Error;
};

class UnvalidatedRepresentation : public Error {
public:
    using Error::Error;
};

} // namespace slopelab
