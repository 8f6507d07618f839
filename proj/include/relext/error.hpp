#pragma once

#include <stdexcept>
#include <string>

namespace relext {

// Every failure the library reports deliberately. `Internal` marks a broken
// invariant inside the library itself and maps to its own CLI exit code.
enum class ErrorKind {
    Syntax,
    UnknownName,
    CompositionMismatch,
    ZeroRelation,
    NonAdmissibleIdeal,
    DuplicateName,
    InfiniteDimensional,
    CyclicQuiver,
    GlobalDimensionTooHigh,
    ZeroModule,
    NotAModuleMap,
    ActionMismatch,
    RepresentativeChoiceFailed,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message, int line = -1, int col = -1)
        : std::runtime_error(std::move(message)), kind(kind), line(line), col(col) {}

    ErrorKind kind;
    int line; // 1-based source position when raised by the parser, -1 otherwise
    int col;
};

const char* error_kind_name(ErrorKind k);

// Exit-code classes used by the CLI: 1 = input error, 2 = mathematical
// precondition violation, 3 = internal invariant failure.
int error_exit_code(ErrorKind k);

[[noreturn]] inline void internal_error(const std::string& what) {
    throw Error(ErrorKind::Internal, "internal invariant failed: " + what);
}

inline void check_internal(bool cond, const char* what) {
    if (!cond)
        internal_error(what);
}

} // namespace relext
