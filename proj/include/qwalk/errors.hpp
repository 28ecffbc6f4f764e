#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Initial coin amplitudes do not satisfy |a|^2 + |b|^2 = 1.
class NotNormalized : public Error {
public:
    using Error::Error;
};

class NotUnitary : public Error {
public:
    using Error::Error;
};

// Dense oracle asked to evolve past the edge of its truncated lattice.
class TruncationViolation : public Error {
public:
    using Error::Error;
};

class NonPositiveData : public Error {
public:
    using Error::Error;
};

class EmptyCounts : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace qwalk
