#pragma once

#include <stdexcept>
#include <string>

namespace dtg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct SelfLoop : Error {
    explicit SelfLoop(int v) : Error("self loop at vertex " + std::to_string(v)) {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct EmptySeed : Error {
    EmptySeed() : Error("bfs seed set is empty") {}
};

struct EmptySequence : Error {
    EmptySequence() : Error("creation sequence is empty") {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

struct InvalidParameters : Error {
    explicit InvalidParameters(const std::string& what) : Error(what) {}
};

struct NotThreshold : Error {
    explicit NotThreshold(const std::string& what) : Error(what) {}
};

struct DegenerateWeights : Error {
    explicit DegenerateWeights(const std::string& what) : Error(what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

struct SynthesisFailed : Error {
    explicit SynthesisFailed(const std::string& what) : Error(what) {}
};

struct Unreachable : Error {
    explicit Unreachable(int v) : Error("vertex " + std::to_string(v) + " unreachable from the seed layer") {}
};

struct NotRealizing : Error {
    explicit NotRealizing(const std::string& what) : Error(what) {}
};

struct NoTriplets : Error {
    NoTriplets() : Error("graph has no connected triples; clustering coefficient undefined") {}
};

struct Disconnected : Error {
    explicit Disconnected(const std::string& what) : Error(what) {}
};

struct BoundViolated : Error {
    explicit BoundViolated(const std::string& what) : Error(what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown fixture name: " + name) {}
};

struct UnsupportedDisconnected : Error {
    explicit UnsupportedDisconnected(const std::string& what) : Error(what) {}
};

}  // namespace dtg
