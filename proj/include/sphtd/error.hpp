#pragma once

#include <stdexcept>
#include <string>

namespace sphtd {

enum class ErrorCode {
    BadArguments,
    DegreeZeroNotZ,
    TopNotZ,
    InadmissibleEuler,
    InadmissibleDualEuler,
    InvalidBase,
    TopDegreeMismatch,
    TorsionBase,
    NotTerminal,
    NoClosingSign,
    BadTruncation,
    ContainsEta,
};

const char* to_string(ErrorCode code);

/* Every failure in the library is reported through this one exception type;
 * the code lets the command-line front end pick an exit status. */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sphtd
