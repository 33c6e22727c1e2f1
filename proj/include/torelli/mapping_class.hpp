#pragma once

#include <string>
#include <vector>

namespace torelli {

struct Letter {
    int curve = 0;
    int power = 1;  // signed twist exponent
};

// A word of twists in written order; as a map the rightmost letter acts first.
struct MappingClass {
    std::vector<Letter> word;

    MappingClass inverse() const;
    MappingClass then(const MappingClass& after) const;  // after o this
    static MappingClass twist(int curve, int power = 1) { return {{{curve, power}}}; }
};

}  // namespace torelli
