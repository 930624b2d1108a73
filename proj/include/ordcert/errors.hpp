#ifndef ORDCERT_ERRORS_HPP
#define ORDCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordcert {

// Caller handed us something outside a documented precondition.
// The CLI maps these to exit code 2.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionTooLow : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct InsufficientPrecision : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct EmptySpace : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct OutOfRange : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct BadPrime : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct ZeroConstantTerm : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct WeightTooSmall : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Malformed or inconsistent certificate bytes. Carries the byte offset
// where the problem was noticed (0 when it has no useful position).
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos = 0)
        : std::runtime_error(what), position(pos) {}
};

}  // namespace ordcert

#endif
