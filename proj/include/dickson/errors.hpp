#pragma once

#include <stdexcept>
#include <string>

namespace dickson {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// field layer
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg = "operands belong to different fields") : Error(msg) {}
};
struct ZeroArgument : Error {
    explicit ZeroArgument(const std::string& msg = "argument must be nonzero") : Error(msg) {}
};

// linear algebra layer
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg = "dimension mismatch") : Error(msg) {}
};

// algebra layer
struct AlgebraMismatch : Error {
    explicit AlgebraMismatch(const std::string& msg = "elements belong to different algebras") : Error(msg) {}
};
struct NoInvolution : Error {
    NoInvolution() : Error("algebra carries no involution") {}
};
struct NonScalarInvolution : Error {
    NonScalarInvolution() : Error("x*sigma(x) does not lie in F*1; involution is not scalar") {}
};

// constructors
struct CharTwoField : Error {
    CharTwoField() : Error("characteristic 2: use the [a,b) constructor") {}
};
struct WrongCharacteristic : Error {
    explicit WrongCharacteristic(const std::string& msg = "wrong field characteristic") : Error(msg) {}
};
struct ZeroParameter : Error {
    ZeroParameter() : Error("structure parameter must be nonzero") {}
};
struct NotSeparable : Error {
    NotSeparable() : Error("extension is not separable") {}
};
struct ParameterIsSquare : Error {
    explicit ParameterIsSquare(const std::string& msg = "parameter yields a split or non-etale algebra") : Error(msg) {}
};
struct PlacementNeedsNonassociativeBase : Error {
    PlacementNeedsNonassociativeBase() : Error("starred placements require a nonassociative base") {}
};
struct ScalarNotInvertible : Error {
    ScalarNotInvertible() : Error("doubling scalar is not invertible") {}
};

// maps
struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg = "element is not invertible") : Error(msg) {}
};
struct BaseMapNotHomomorphism : Error {
    BaseMapNotHomomorphism() : Error("base map is not an algebra homomorphism") {}
};

// structure
struct ClosureFailure : Error {
    ClosureFailure() : Error("derivation space not closed under bracket (implementation bug)") {}
};
struct UnsupportedBase : Error {
    explicit UnsupportedBase(const std::string& msg) : Error(msg) {}
};

// DSL
struct SyntaxError : Error {
    int line, column;
    SyntaxError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};
struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown name: " + name) {}
};

}  // namespace dickson
