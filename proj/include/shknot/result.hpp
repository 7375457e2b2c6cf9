#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace shknot {

enum class ErrCode {
    ParseSyntax,
    IllegalDirection,
    NonMaximal,
    InvalidPolygon,
    ZSticksPresent,
    EmbeddingCollision,
    ObstructedTriangle,
    NoXYCorner,
    CornerSelectionFailed,
    NotAdjacent,
    NotPerpendicular,
    RectangleObstructed,
    NotAZStick,
    OtherZInSquare,
    PCaseUnresolvable,
    NoApplicableMove,
    DegeneracyUnresolved,
    InconsistentDiagram,
    ConfigInvalid,
    IoError,
};

struct Error {
    ErrCode code;
    std::string message;
};

const char* err_name(ErrCode c);

// Minimal value-or-error carrier. Moves and parsers report failures through
// this instead of throwing; drivers treat errors as "not applicable".
template <class T>
class Result {
public:
    Result(T value) : v_(std::move(value)) {}
    Result(Error err) : v_(std::move(err)) {}
    Result(ErrCode code, std::string msg) : v_(Error{code, std::move(msg)}) {}

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    T& value() {
        assert(ok());
        return std::get<T>(v_);
    }
    const T& value() const {
        assert(ok());
        return std::get<T>(v_);
    }
    T& operator*() { return value(); }
    const T& operator*() const { return value(); }
    T* operator->() { return &value(); }
    const T* operator->() const { return &value(); }

    const Error& error() const {
        assert(!ok());
        return std::get<Error>(v_);
    }
    ErrCode code() const { return error().code; }

private:
    std::variant<T, Error> v_;
};

}  // namespace shknot
