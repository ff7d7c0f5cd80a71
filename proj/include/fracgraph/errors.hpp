#ifndef FRACGRAPH_ERRORS_HPP
#define FRACGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracgraph {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define FRACGRAPH_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& msg) : Error(msg) {}        \
    }

// graph construction / queries
FRACGRAPH_DEFINE_ERROR(NonPositiveMeasure);
FRACGRAPH_DEFINE_ERROR(NonPositiveWeight);
FRACGRAPH_DEFINE_ERROR(UnknownEndpoint);
FRACGRAPH_DEFINE_ERROR(DuplicateEdge);
FRACGRAPH_DEFINE_ERROR(SelfLoop);
FRACGRAPH_DEFINE_ERROR(UnknownVertex);
FRACGRAPH_DEFINE_ERROR(Disconnected);
FRACGRAPH_DEFINE_ERROR(InvalidParams);
FRACGRAPH_DEFINE_ERROR(IoError);
FRACGRAPH_DEFINE_ERROR(ParseError);

// spectral
FRACGRAPH_DEFINE_ERROR(TooLarge);
FRACGRAPH_DEFINE_ERROR(EigenFailure);
FRACGRAPH_DEFINE_ERROR(NegativeTime);
FRACGRAPH_DEFINE_ERROR(DimensionMismatch);

// fractional kernel
FRACGRAPH_DEFINE_ERROR(InvalidS);
FRACGRAPH_DEFINE_ERROR(QuadratureNotConverged);
FRACGRAPH_DEFINE_ERROR(NonPositiveArgument);

// fractional calculus
FRACGRAPH_DEFINE_ERROR(LayoutMismatch);
FRACGRAPH_DEFINE_ERROR(NonPositivePotential);

// schrodinger solvers
FRACGRAPH_DEFINE_ERROR(UnknownName);
FRACGRAPH_DEFINE_ERROR(InvalidParam);
FRACGRAPH_DEFINE_ERROR(WrongSignPart);
FRACGRAPH_DEFINE_ERROR(BracketFailure);
FRACGRAPH_DEFINE_ERROR(HypothesisViolation);

// cli / config
FRACGRAPH_DEFINE_ERROR(SchemaError);
FRACGRAPH_DEFINE_ERROR(RangeError);

#undef FRACGRAPH_DEFINE_ERROR

} // namespace fracgraph

#endif
