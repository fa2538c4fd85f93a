#ifndef JETPVA_ERRORS_HPP
#define JETPVA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jetpva {

// Budget overflow in the Groebner engine. Signals desk-scale overflow,
// not mathematical failure.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// A mode/derivation application would be corrupted by the jet-level truncation.
class HeadroomExceeded : public std::runtime_error {
public:
    explicit HeadroomExceeded(const std::string& what) : std::runtime_error(what) {}
};

class MissingAssignment : public std::runtime_error {
public:
    explicit MissingAssignment(const std::string& what) : std::runtime_error(what) {}
};

class PointNotOnVariety : public std::runtime_error {
public:
    explicit PointNotOnVariety(const std::string& what) : std::runtime_error(what) {}
};

// rank M_n(x) not divisible by n+1; this would contradict the block
// structure of the rank matrix, so it is treated as an internal error.
class DivisibilityViolation : public std::logic_error {
public:
    explicit DivisibilityViolation(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace jetpva

#endif
