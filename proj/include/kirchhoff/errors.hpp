#pragma once

#include <stdexcept>
#include <string>

namespace kirchhoff {

/// Base class for every error raised by this library.
class KirchhoffError : public std::runtime_error {
public:
    explicit KirchhoffError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input data (rejected at ingestion).
class InputError : public KirchhoffError {
public:
    using KirchhoffError::KirchhoffError;
};

/// Edge list contains the same unordered pair more than once.
class DuplicateEdge : public InputError {
public:
    DuplicateEdge(int u, int v)
        : InputError("DuplicateEdge: edge (" + std::to_string(u) + ", " +
                     std::to_string(v) + ") appears more than once") {}
};

/// Edge joins a vertex to itself.
class SelfLoop : public InputError {
public:
    explicit SelfLoop(int v)
        : InputError("SelfLoop: edge (" + std::to_string(v) + ", " +
                     std::to_string(v) + ") is not allowed") {}
};

/// Graph has more than one connected component.
class Disconnected : public InputError {
public:
    Disconnected(int unreachable, int root)
        : InputError("Disconnected: vertex " + std::to_string(unreachable) +
                     " is unreachable from vertex " + std::to_string(root)) {}
};

/// Fewer than two vertices.
class TooFewVertices : public InputError {
public:
    explicit TooFewVertices(long long n)
        : InputError("TooFewVertices: vertex count " + std::to_string(n) +
                     " is below the minimum of 2") {}
};

/// Text input that does not follow the edge-list format.
class ParseError : public InputError {
public:
    ParseError(const std::string& source, long long line, const std::string& detail)
        : InputError("ParseError: " + source + ":" + std::to_string(line) + ": " + detail) {}
};

/// A size computation exceeded the configured cap or the integer range.
class SizeOverflow : public KirchhoffError {
public:
    explicit SizeOverflow(const std::string& detail)
        : KirchhoffError("SizeOverflow: " + detail) {}
};

/// Two objects that must share a dimension do not.
class DimensionMismatch : public KirchhoffError {
public:
    DimensionMismatch(const std::string& what, long long got, long long expected)
        : KirchhoffError("DimensionMismatch: " + what + ": got " + std::to_string(got) +
                         ", expected " + std::to_string(expected)) {}
};

/// A matrix factorization hit a non-positive pivot.
class SingularSystem : public KirchhoffError {
public:
    explicit SingularSystem(int pivot_index)
        : KirchhoffError("SingularSystem: non-positive pivot at index " +
                         std::to_string(pivot_index)) {}
};

/// A linear recurrence was given a zero multiplier.
class ZeroMultiplier : public KirchhoffError {
public:
    explicit ZeroMultiplier(int index)
        : KirchhoffError("ZeroMultiplier: multiplier f_" + std::to_string(index) +
                         " is zero") {}
};

/// CLI process exit codes. Input problems and resource caps are
/// distinguished from verification failures so scripts can react.
enum class ExitCode : int {
    Ok = 0,
    VerificationFailure = 1,
    InputError = 2,
    ResourceCap = 3,
};

/// Maps an exception to the exit code its category mandates.
inline int exit_code_for(const KirchhoffError& e) {
    if (dynamic_cast<const InputError*>(&e) != nullptr)
        return static_cast<int>(ExitCode::InputError);
    if (dynamic_cast<const SizeOverflow*>(&e) != nullptr)
        return static_cast<int>(ExitCode::ResourceCap);
    return static_cast<int>(ExitCode::VerificationFailure);
}

}  // namespace kirchhoff
