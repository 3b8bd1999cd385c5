#include "zsf/constructions.hpp"

#include <cstdio>
#include <numeric>

namespace zsf {

Density make_density(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0 || numerator > denominator) {
        throw InvalidInput("density must be a rational in [0, 1]");
    }
    const std::uint64_t g = std::gcd(numerator == 0 ? denominator : numerator, denominator);
    return Density{numerator / g, denominator / g};
}

std::string Density::str() const {
    if (numerator == 0) return "0";
    if (numerator == denominator) return "1";
    std::uint64_t den = denominator;
    std::uint32_t twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", value());
        return buf;
    }
    const std::uint32_t digits = twos > fives ? twos : fives;
    // numerator * 10^digits / denominator is exact by construction.
    std::uint64_t scaled = numerator;
    for (std::uint32_t i = 0; i < digits; ++i) scaled *= 10;
    scaled /= denominator;
    std::string frac = std::to_string(scaled);
    if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    return "0." + frac;
}

namespace {

void require_even_modulus(const GroupParams& params, const char* what) {
    if (params.modulus() % 2 != 0) {
        throw UnsupportedConstruction(std::string(what) + " requires an even modulus, got " +
                                      std::to_string(params.modulus()));
    }
}

} // namespace

VectorSet build_first_coord_odd(const GroupParams& params) {
    require_even_modulus(params, "first-coord-odd");
    VectorSet set(params);
    const std::uint64_t m = params.modulus();
    for (PackedVector v : enumerate_group(params)) {
        if ((v.code % m) & 1) set.insert(v);
    }
    return set;
}

VectorSet build_odd_weight(const GroupParams& params) {
    require_even_modulus(params, "odd-weight");
    VectorSet set(params);
    for (PackedVector v : enumerate_group(params)) {
        if (weight_parity(v, params) == 1) set.insert(v);
    }
    return set;
}

VectorSet build_odd_box(const GroupParams& params) {
    if (params.modulus() != 4) {
        throw UnsupportedConstruction("odd-box is defined for modulus 4 only, got " +
                                      std::to_string(params.modulus()));
    }
    VectorSet set(params);
    const std::uint32_t n = params.dimension();
    // Choice bit b_i = 0 picks coordinate 1, b_i = 1 picks 3; walking the
    // choice counter ascending emits codes ascending.
    for (std::uint64_t choice = 0; choice < (1ull << n); ++choice) {
        std::uint64_t code = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            const std::uint64_t digit = ((choice >> i) & 1) ? 3 : 1;
            code |= digit << (2 * i);
        }
        set.insert(PackedVector{code});
    }
    return set;
}

Density density(const VectorSet& set) {
    return make_density(set.size(), set.params().order());
}

ConstructionMethod parse_construction_method(const std::string& name) {
    if (name == "first-coord-odd") return ConstructionMethod::first_coord_odd;
    if (name == "odd-weight") return ConstructionMethod::odd_weight;
    if (name == "odd-box") return ConstructionMethod::odd_box;
    throw InvalidInput("unknown construction method: " + name);
}

std::string construction_method_name(ConstructionMethod method) {
    switch (method) {
        case ConstructionMethod::first_coord_odd: return "first-coord-odd";
        case ConstructionMethod::odd_weight: return "odd-weight";
        case ConstructionMethod::odd_box: return "odd-box";
    }
    return "?";
}

VectorSet build_construction(ConstructionMethod method, const GroupParams& params) {
    switch (method) {
        case ConstructionMethod::first_coord_odd: return build_first_coord_odd(params);
        case ConstructionMethod::odd_weight: return build_odd_weight(params);
        case ConstructionMethod::odd_box: return build_odd_box(params);
    }
    throw InvalidInput("unknown construction method");
}

} // namespace zsf
