#pragma once

#include <string>

#include "arena/algorithms.hpp"

namespace arena {

// Guest-side fixtures: bare solve functions in the task wire formats, used by
// limit calibration and as known-good/known-slow submissions in tests.
struct GuestProgram {
    std::string reference;  // matches the reference complexity class
    std::string foil;       // strictly worse class; must exceed tau at max size
};

const GuestProgram& guest_program(AlgorithmId algo);

// The submission running context the solve function is spliced into.
std::string guest_scaffold(AlgorithmId algo);

}  // namespace arena
