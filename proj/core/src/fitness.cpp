#include "umda/fitness.hpp"

#include <stdexcept>

namespace umda {

long long onemax(const BitString& x) {
    long long s = 0;
    for (auto b : x) s += b;
    return s;
}

long long leadingones(const BitString& x) {
    long long s = 0;
    for (auto b : x) {
        if (!b) break;
        ++s;
    }
    return s;
}

long long binval(const BitString& x) {
    if (x.size() > 62)
        throw std::invalid_argument("binval: n > 62 overflows 64-bit value");
    long long v = 0;
    for (auto b : x) v = (v << 1) | b;
    return v;
}

FitnessFunction fitness_by_name(const std::string& name) {
    if (name == "onemax")
        return {name, onemax,
                [](std::size_t n) { return static_cast<long long>(n); }};
    if (name == "leadingones")
        return {name, leadingones,
                [](std::size_t n) { return static_cast<long long>(n); }};
    if (name == "binval")
        return {name, binval, [](std::size_t n) {
                    if (n > 62)
                        throw std::invalid_argument("binval: n > 62");
                    return static_cast<long long>((1ULL << n) - 1);
                }};
    throw std::invalid_argument("unknown fitness function: " + name);
}

}  // namespace umda
