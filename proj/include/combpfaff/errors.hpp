#pragma once

#include <stdexcept>
#include <string>

namespace combpfaff {

// Base of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define COMBPFAFF_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                      \
    public:                                                           \
        explicit Name(const std::string& what) : Error(what) {}       \
    }

COMBPFAFF_DEFINE_ERROR(DivisionByZero);
COMBPFAFF_DEFINE_ERROR(NonUnitConstantTerm);
COMBPFAFF_DEFINE_ERROR(NotSquare);
COMBPFAFF_DEFINE_ERROR(MatrixTooLarge);
COMBPFAFF_DEFINE_ERROR(Singular);
COMBPFAFF_DEFINE_ERROR(UnknownVertex);
COMBPFAFF_DEFINE_ERROR(NotAcyclic);
COMBPFAFF_DEFINE_ERROR(IndexOutOfFamily);
COMBPFAFF_DEFINE_ERROR(NotBoundaryVertex);
COMBPFAFF_DEFINE_ERROR(OverlappingTuples);
COMBPFAFF_DEFINE_ERROR(SourceSinkMismatch);
COMBPFAFF_DEFINE_ERROR(ParseError);
COMBPFAFF_DEFINE_ERROR(ValidationError);
COMBPFAFF_DEFINE_ERROR(WrongGraphKind);

#undef COMBPFAFF_DEFINE_ERROR

}  // namespace combpfaff
