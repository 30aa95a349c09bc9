#pragma once

#include <stdexcept>
#include <string>

namespace twistedlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// scalar layer
struct ConductorMismatch : Error {
    ConductorMismatch(int a, int b)
        : Error("conductor mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// matrix / vector layer
struct ShapeMismatch : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is not invertible") {}
};

// group layer
struct GroupError : Error {
    enum class Kind { NotAssociative, NoIdentity, NoInverse, BadTable, OrderCapExceeded };
    Kind kind;
    int x = -1, y = -1, z = -1;
    GroupError(Kind k, std::string msg, int x_ = -1, int y_ = -1, int z_ = -1)
        : Error(std::move(msg)), kind(k), x(x_), y(y_), z(z_) {}
};

// twisted action layer
struct AutomorphismError : Error {
    enum class Kind { NotMultiplicative, NotStarPreserving, NotUnital, NotInvertible };
    Kind kind;
    int i = -1, j = -1;
    AutomorphismError(Kind k, std::string msg, int i_ = -1, int j_ = -1)
        : Error(std::move(msg)), kind(k), i(i_), j(j_) {}
};
struct ConductorIncompatible : Error {
    using Error::Error;
};

// convolution algebra layer
struct SystemMismatch : Error {
    SystemMismatch() : Error("elements belong to different twisted systems") {}
};
struct NotUnitary : Error {
    using Error::Error;
};

// ideal / proof layer
struct NotAnIdeal : Error {
    using Error::Error;
};
struct NotInvariant : Error {
    using Error::Error;
};
struct CapExceeded : Error {
    std::size_t cap;
    explicit CapExceeded(std::size_t c)
        : Error("operator group closure exceeded cap " + std::to_string(c) +
                "; pass a smaller generating set or raise --cap"),
          cap(c) {}
};

// io layer
struct ParseError : Error {
    using Error::Error;
};

}  // namespace twistedlab
