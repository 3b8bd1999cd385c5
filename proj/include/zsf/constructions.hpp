#pragma once

#include <cstdint>
#include <string>

#include "zsf/vector_set.hpp"

namespace zsf {

/// Exact rational in [0, 1], reduced. Used for densities so 1/2 prints as
/// "0.5" and not as a rounded double.
struct Density {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }

    /// Exact decimal when the reduced denominator is 2^a * 5^b, otherwise
    /// six significant digits.
    std::string str() const;

    friend bool operator==(const Density& a, const Density& b) {
        return a.numerator == b.numerator && a.denominator == b.denominator;
    }
};

Density make_density(std::uint64_t numerator, std::uint64_t denominator);

/// All vectors whose first coordinate is odd. Requires even m; attains
/// (m/2) * m^(n-1) members, i.e. half the group.
VectorSet build_first_coord_odd(const GroupParams& params);

/// All vectors whose coordinate sum is odd mod 2. Requires even m; for m = 4
/// this matches the first-coordinate family in size and freeness.
VectorSet build_odd_weight(const GroupParams& params);

/// All vectors with every coordinate in {1, 3}. Defined for m = 4 only;
/// size 2^n, far below the m^n/2 families.
VectorSet build_odd_box(const GroupParams& params);

/// |H| / m^n as an exact rational.
Density density(const VectorSet& set);

enum class ConstructionMethod { first_coord_odd, odd_weight, odd_box };

ConstructionMethod parse_construction_method(const std::string& name);
std::string construction_method_name(ConstructionMethod method);
VectorSet build_construction(ConstructionMethod method, const GroupParams& params);

} // namespace zsf
