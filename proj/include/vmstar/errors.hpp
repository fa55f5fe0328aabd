#pragma once

#include <stdexcept>
#include <string>

namespace vmstar {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownVertex : Error {
    explicit UnknownVertex(const std::string& msg) : Error(msg) {}
};

struct NotAnEdge : Error {
    explicit NotAnEdge(const std::string& msg) : Error(msg) {}
};

struct InvalidPartner : Error {
    explicit InvalidPartner(const std::string& msg) : Error(msg) {}
};

// Carries the index of the first offending move when a plan replay fails.
struct InvalidPlan : Error {
    int move_index;
    InvalidPlan(int index, const std::string& msg) : Error(msg), move_index(index) {}
};

struct InvalidTarget : Error {
    explicit InvalidTarget(const std::string& msg) : Error(msg) {}
};

struct NotConnected : Error {
    explicit NotConnected(const std::string& msg) : Error(msg) {}
};

struct SizeCapExceeded : Error {
    explicit SizeCapExceeded(const std::string& msg) : Error(msg) {}
};

// Resource exhaustion. Typed apart from a negative answer so a caller can
// never mistake running out of budget for a certificate of non-existence.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct MalformedWord : Error {
    explicit MalformedWord(const std::string& msg) : Error(msg) {}
};

struct UnknownLetter : Error {
    explicit UnknownLetter(const std::string& msg) : Error(msg) {}
};

struct NotEulerian : Error {
    explicit NotEulerian(const std::string& msg) : Error(msg) {}
};

struct NotFourRegular : Error {
    explicit NotFourRegular(const std::string& msg) : Error(msg) {}
};

struct NotCubic : Error {
    explicit NotCubic(const std::string& msg) : Error(msg) {}
};

struct NotHamiltonianCycle : Error {
    explicit NotHamiltonianCycle(const std::string& msg) : Error(msg) {}
};

struct NotATriangularExpansion : Error {
    explicit NotATriangularExpansion(const std::string& msg) : Error(msg) {}
};

struct MalformedWitness : Error {
    explicit MalformedWitness(const std::string& msg) : Error(msg) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

struct InvalidOutcomeRequest : Error {
    explicit InvalidOutcomeRequest(const std::string& msg) : Error(msg) {}
};

struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

}  // namespace vmstar
