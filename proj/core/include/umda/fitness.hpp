#pragma once

#include <functional>
#include <string>

#include "umda/model.hpp"

namespace umda {

long long onemax(const BitString& x);

/// Length of the longest all-ones prefix.
long long leadingones(const BitString& x);

/// Binary value, most significant bit first. Requires n <= 62; throws
/// std::invalid_argument on longer strings.
long long binval(const BitString& x);

struct FitnessFunction {
    std::string name;
    std::function<long long(const BitString&)> evaluator;
    /// Optimum value for strings of length n.
    std::function<long long(std::size_t)> optimum;
};

/// Lookup by name: "onemax", "leadingones", "binval". Throws
/// std::invalid_argument on unknown names.
FitnessFunction fitness_by_name(const std::string& name);

}  // namespace umda
