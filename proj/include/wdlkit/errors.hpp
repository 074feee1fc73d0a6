#pragma once

#include <stdexcept>
#include <string>

namespace wdlkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input files, unknown keywords, bad references. CLI exit code 2.
struct ParseError : Error {
    using Error::Error;
};

struct CycleDetected : Error {
    CycleDetected(std::string a, std::string b)
        : Error("cover relation is cyclic: " + a + " and " + b + " lie on a common cycle"),
          first(std::move(a)), second(std::move(b)) {}
    std::string first, second;
};

struct NotALattice : Error {
    NotALattice(std::string x_, std::string y_, std::string reason_)
        : Error("not a lattice: pair (" + x_ + "," + y_ + "): " + reason_),
          x(std::move(x_)), y(std::move(y_)), reason(std::move(reason_)) {}
    std::string x, y, reason;
};

struct NotBounded : Error {
    explicit NotBounded(const std::string& what) : Error("not bounded: " + what) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error("unknown element: " + what) {}
};

struct GeneratorSetTooSmall : Error {
    GeneratorSetTooSmall(std::string missing_, bool join_side_)
        : Error(std::string("generator set too small: ") +
                (join_side_ ? "join-irreducible " : "meet-irreducible ") + missing_ +
                " is not in the generator set"),
          missing(std::move(missing_)), join_side(join_side_) {}
    std::string missing;
    bool join_side;
};

struct NotBoolean : Error {
    explicit NotBoolean(const std::string& what) : Error("not a Boolean lattice: " + what) {}
};

/// `detail` is a self-contained description naming the axiom and witness.
struct AxiomViolation : Error {
    AxiomViolation(std::string check_, const std::string& detail)
        : Error("axiom violation: " + detail), check(std::move(check_)) {}
    std::string check;
};

struct NotAnIsomorphism : Error {
    NotAnIsomorphism(std::string a_, std::string b_)
        : Error("pairing is not an order isomorphism: witness pair (" + a_ + "," + b_ + ")"),
          a(std::move(a_)), b(std::move(b_)) {}
    std::string a, b;
};

struct NotWithNegation : Error {
    explicit NotWithNegation(const std::string& witness)
        : Error("structure is not with negation: up and down differ at " + witness) {}
};

/// Exhaustive search contradicted a statement that holds on every verified
/// structure. Firing means the input was not verified or the build is broken.
struct TheoremViolation : Error {
    using Error::Error;
};

struct InternalContradiction : Error {
    using Error::Error;
};

struct SizeCapExceeded : Error {
    explicit SizeCapExceeded(const std::string& what) : Error("size cap exceeded: " + what) {}
};

struct UnknownProperty : Error {
    explicit UnknownProperty(const std::string& name)
        : Error("unknown property name: " + name) {}
};

} // namespace wdlkit
