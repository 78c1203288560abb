#pragma once

#include <stdexcept>
#include <string>

namespace mpsym {

// Domain error with a stable machine-readable name. The CLI prints the name
// on stderr and exits 1; library users can branch on name().
class domain_error : public std::runtime_error {
public:
    domain_error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& msg) {
    throw domain_error(name, msg);
}

// Error names used across the library:
//   SizeTooSmall, NegativeEntry, MalformedCharge, InternalCutoff, ZeroR,
//   WrongLevel, OnWall, BadDivisor, NotCeStable, ConstancyViolation,
//   NonEquivariant, PreorderNotOrder, UnknownSuite

}  // namespace mpsym
