#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gdom {

enum class Exactness { exact, lower_bound, upper_bound, conjectured };

std::string_view to_string(Exactness e);

struct FormulaValue {
    std::int64_t value = 0;
    Exactness exactness = Exactness::exact;
};

struct FormulaEntry {
    std::string id;
    std::string signature;
    std::string conditions;
    Exactness exactness = Exactness::exact;
    /// Throws ParameterError naming the violated condition.
    std::function<std::int64_t(std::span<const std::int64_t>)> evaluate;
};

const std::vector<FormulaEntry>& formula_catalog();

/// Closed-form value for a catalog id. Unknown ids and out-of-range
/// parameters raise ParameterError; nothing is extrapolated.
FormulaValue formula_value(std::string_view id, std::span<const std::int64_t> params);

inline FormulaValue formula_value(std::string_view id, std::initializer_list<std::int64_t> params) {
    return formula_value(id, std::span<const std::int64_t>(params.begin(), params.size()));
}

} // namespace gdom
