#pragma once

#include <gmpxx.h>

#include <string>

#include "rgw/error.hpp"

namespace rgw {

// All areas, energies and matrix entries are exact rationals.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
    try {
        Rat q(s);
        if (q.get_den() == 0) throw Error("BadRational", "zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("BadRational", "cannot parse '" + s + "'");
    }
}

// "num/den" with the denominator omitted when it is 1.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

} // namespace rgw
