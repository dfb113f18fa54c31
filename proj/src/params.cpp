#include "loewner/params.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace loewner {
namespace {

constexpr std::array<std::string_view, 8> kFields = {"p", "q", "r", "s", "t", "p0", "n", "alpha"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const double num = parse_number(text.substr(0, slash));
        const double den = parse_number(text.substr(slash + 1));
        if (den == 0.0) throw ParamError("ParamSet: zero denominator in '" + std::string(text) + "'");
        return num / den;
    }
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw ParamError("ParamSet: cannot parse number '" + std::string(text) + "'");
    }
    return value;
}

std::optional<double> ParamSet::*double_field(std::string_view field) {
    if (field == "p") return &ParamSet::p;
    if (field == "q") return &ParamSet::q;
    if (field == "r") return &ParamSet::r;
    if (field == "s") return &ParamSet::s;
    if (field == "t") return &ParamSet::t;
    if (field == "p0") return &ParamSet::p0;
    if (field == "alpha") return &ParamSet::alpha;
    return nullptr;
}

}  // namespace

ParamSet ParamSet::parse(std::string_view text) {
    ParamSet out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw ParamError("ParamSet: expected name=value, got '" + std::string(item) + "'");
        }
        const std::string_view name = trim(item.substr(0, eq));
        if (out.has(name)) {
            throw ParamError("ParamSet: field '" + std::string(name) + "' given twice");
        }
        out.set(name, parse_number(item.substr(eq + 1)));
    }
    return out;
}

bool ParamSet::has(std::string_view field) const {
    if (field == "n") return n.has_value();
    if (auto member = double_field(field)) return (this->*member).has_value();
    throw ParamError("ParamSet: unknown field '" + std::string(field) + "'");
}

double ParamSet::get(std::string_view field, std::string_view context) const {
    if (field == "n") return static_cast<double>(get_n(context));
    auto member = double_field(field);
    if (!member) throw ParamError("ParamSet: unknown field '" + std::string(field) + "'");
    const auto& value = this->*member;
    if (!value) {
        throw ParamError(std::string(context) + ": missing required parameter '" +
                         std::string(field) + "'");
    }
    return *value;
}

int ParamSet::get_n(std::string_view context) const {
    if (!n) throw ParamError(std::string(context) + ": missing required parameter 'n'");
    return *n;
}

void ParamSet::set(std::string_view field, double value) {
    if (!std::isfinite(value)) {
        throw ParamError("ParamSet: non-finite value for '" + std::string(field) + "'");
    }
    if (field == "n") {
        if (std::floor(value) != value || value < 0.0 || value > 1e6) {
            throw ParamError("ParamSet: n must be a nonnegative integer");
        }
        n = static_cast<int>(value);
        return;
    }
    auto member = double_field(field);
    if (!member) throw ParamError("ParamSet: unknown field '" + std::string(field) + "'");
    this->*member = value;
}

void ParamSet::clear(std::string_view field) {
    if (field == "n") {
        n.reset();
        return;
    }
    auto member = double_field(field);
    if (!member) throw ParamError("ParamSet: unknown field '" + std::string(field) + "'");
    (this->*member).reset();
}

std::string ParamSet::to_string() const {
    std::string out;
    char buf[64];
    for (auto field : kFields) {
        if (!has(field)) continue;
        if (!out.empty()) out += ',';
        if (field == "n") {
            std::snprintf(buf, sizeof buf, "%d", *n);
        } else {
            std::snprintf(buf, sizeof buf, "%.17g", get(field, "to_string"));
        }
        out += field;
        out += '=';
        out += buf;
    }
    return out;
}

}  // namespace loewner
