#pragma once

#include <stdexcept>
#include <string>

namespace pproot {

// A bounded search ran past its configured cap. Signals a bug or a bad cap,
// not a mathematical nonexistence.
struct SearchCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A floating-point quantity that must be (near-)integral or real drifted
// beyond tolerance.
struct NumericalDrift : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The two evaluation routes of a finite-sum identity disagree.
struct DecompositionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pproot
