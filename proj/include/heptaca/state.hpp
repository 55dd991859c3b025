#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace heptaca {

// Cell states. W is the quiescent state: a W cell whose whole neighbourhood
// is W stays W. B marks milestones (and some structural cells), R is the
// locomotive (and some structural marks).
enum class State : std::uint8_t { W = 0, B = 1, R = 2 };

using Neighbourhood = std::array<State, 7>;

inline char to_char(State s) {
    switch (s) {
        case State::B: return 'B';
        case State::R: return 'R';
        default: return 'W';
    }
}

inline std::optional<State> state_from_char(char c) {
    switch (c) {
        case 'W': return State::W;
        case 'B': return State::B;
        case 'R': return State::R;
        default: return std::nullopt;
    }
}

inline std::string to_string(const Neighbourhood& n) {
    std::string s;
    s.reserve(7);
    for (State st : n) s.push_back(to_char(st));
    return s;
}

}  // namespace heptaca
