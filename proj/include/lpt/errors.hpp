#ifndef LPT_ERRORS_HPP
#define LPT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace lpt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// An exact oracle refused to run because the instance exceeds its size cap.
class OracleInfeasible : public Error {
public:
    using Error::Error;
};

// A construction produced something its own invariants rule out.
class InternalError : public Error {
public:
    using Error::Error;
};

// A bound or certificate check failed. Carries the serialized witness.
class CheckFailure : public Error {
public:
    CheckFailure(std::string id, std::string witness)
        : Error("check '" + id + "' failed: " + witness),
          id_(std::move(id)),
          witness_(std::move(witness)) {}

    const std::string& check_id() const noexcept { return id_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string id_;
    std::string witness_;
};

}  // namespace lpt

#endif  // LPT_ERRORS_HPP
