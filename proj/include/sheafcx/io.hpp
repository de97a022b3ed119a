#pragma once

// Text formats.
//
// Ideal files:
//
//     # comment
//     ring x y z
//     ideal J
//       @label quadrics through a point
//       @expect reg 2
//       x^2, x*y
//       y^2
//     end
//
// Lattice files:
//
//     rank 3
//     gram
//       0 1 1
//       1 0 1
//       1 1 0
//     ample 1 1 1
//     class H 1 2 0
//     class C 1 1 1
//
// Parse errors carry 1-based line and column.

#include "sheafcx/ideal.hpp"
#include "sheafcx/surface.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sheafcx {

struct IdealEntry {
    std::string name;
    MonomialIdeal ideal;
    std::vector<std::string> labels;
    std::map<std::string, std::string> expected;

    friend bool operator==(const IdealEntry&, const IdealEntry&) = default;
};

struct IdealDocument {
    Ring ring;
    std::vector<IdealEntry> ideals;

    /// Throws DomainError if absent.
    const IdealEntry& find(std::string_view name) const;

    friend bool operator==(const IdealDocument&, const IdealDocument&) = default;
};

IdealDocument parse_ideal_document(std::string_view text);
std::string print_ideal_document(const IdealDocument& doc);

/// A single monomial such as `x^2*y` or `1`.
Monomial parse_monomial(std::string_view text, const Ring& ring);

struct NamedClass {
    std::string name;
    DivisorClass divisor;
};

struct LatticeDocument {
    NSLattice lattice;
    std::vector<NamedClass> classes;

    /// Throws DomainError if absent.
    const DivisorClass& find(std::string_view name) const;
};

LatticeDocument parse_lattice_document(std::string_view text);
std::string print_lattice_document(const LatticeDocument& doc);

/// Whole file contents; throws DomainError if unreadable.
std::string read_text_file(const std::string& path);

}  // namespace sheafcx
