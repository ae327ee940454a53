#pragma once

#include <stdexcept>
#include <string>

namespace ratbound {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RATBOUND_DEFINE_ERROR(Name)            \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

RATBOUND_DEFINE_ERROR(InvalidArgument);
RATBOUND_DEFINE_ERROR(NearPole);
RATBOUND_DEFINE_ERROR(OffCircle);
RATBOUND_DEFINE_ERROR(NonConvergence);
RATBOUND_DEFINE_ERROR(PoleOnCircle);
RATBOUND_DEFINE_ERROR(ZeroOnContour);
RATBOUND_DEFINE_ERROR(NearZeroOfR);
RATBOUND_DEFINE_ERROR(HypothesisViolated);
RATBOUND_DEFINE_ERROR(Degenerate);
RATBOUND_DEFINE_ERROR(ParameterOutOfRange);
RATBOUND_DEFINE_ERROR(SpecInvalid);
RATBOUND_DEFINE_ERROR(HypothesisMismatch);
RATBOUND_DEFINE_ERROR(ParseError);

#undef RATBOUND_DEFINE_ERROR

}  // namespace ratbound
