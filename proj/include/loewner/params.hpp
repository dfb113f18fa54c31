#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loewner {

class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Named exponent tuple shared by every inequality and equation family.
/// Constraint validity is checked per family, never at construction, so a
/// ParamSet violating a theorem's hypotheses is still a usable value.
struct ParamSet {
    std::optional<double> p;
    std::optional<double> q;
    std::optional<double> r;
    std::optional<double> s;
    std::optional<double> t;
    std::optional<double> p0;
    std::optional<int> n;
    std::optional<double> alpha;

    /// Parses "p=2,q=1.5,r=0" (whitespace tolerated, fractions "1/3" accepted).
    static ParamSet parse(std::string_view text);

    /// Value of a field; throws ParamError naming `context` when absent.
    [[nodiscard]] double get(std::string_view field, std::string_view context) const;
    [[nodiscard]] int get_n(std::string_view context) const;
    [[nodiscard]] bool has(std::string_view field) const;
    /// Sets a field by name; "n" must be integral.
    void set(std::string_view field, double value);
    void clear(std::string_view field);

    /// Canonical "p=..,q=.." rendering in fixed field order, %.17g values.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

}  // namespace loewner
