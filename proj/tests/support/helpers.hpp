#pragma once

#include "sheafcx/io.hpp"

#include <string>

namespace helpers {

/// Ideal from a ring line ("x y z") and a generator list ("x^2, x*y").
inline sheafcx::MonomialIdeal ideal_of(const std::string& vars, const std::string& gens) {
    return sheafcx::parse_ideal_document("ring " + vars + "\nideal I\n" + gens + "\nend\n")
        .ideals.front()
        .ideal;
}

inline std::string gens(const sheafcx::MonomialIdeal& ideal) { return ideal.to_string(); }

}  // namespace helpers
