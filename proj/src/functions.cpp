#include "pb/functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "pb/numeric_core.hpp"

namespace pb {

namespace {

constexpr std::array kBuiltins{Builtin::constant, Builtin::linear,   Builtin::square, Builtin::abs_mid,
                               Builtin::sin_pi,   Builtin::sawtooth, Builtin::sqrt};

// 0 -> 1 -> 0 -> 1 on thirds of [0,1].
double sawtooth(double t) {
    if (t <= 1.0 / 3.0) return 3.0 * t;
    if (t <= 2.0 / 3.0) return 2.0 - 3.0 * t;
    return 3.0 * t - 2.0;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& text, std::size_t line) {
    std::istringstream in(text);
    in.imbue(std::locale::classic());
    double value = 0.0;
    if (!(in >> value) || !(in >> std::ws).eof())
        throw DomainError("csv", "line " + std::to_string(line) + ": cannot parse number '" + text + "'");
    return value;
}

} // namespace

std::span<const Builtin> all_builtins() { return kBuiltins; }

std::string_view builtin_name(Builtin which) {
    switch (which) {
        case Builtin::constant: return "constant";
        case Builtin::linear: return "linear";
        case Builtin::square: return "square";
        case Builtin::abs_mid: return "abs-mid";
        case Builtin::sin_pi: return "sin-pi";
        case Builtin::sawtooth: return "sawtooth";
        case Builtin::sqrt: return "sqrt";
    }
    return "unknown";
}

FunctionSpec FunctionSpec::builtin(Builtin which) {
    FunctionSpec f;
    f.builtin_ = which;
    f.name_ = std::string(builtin_name(which));
    return f;
}

FunctionSpec FunctionSpec::named(std::string_view name) {
    for (Builtin b : kBuiltins)
        if (builtin_name(b) == name) return builtin(b);
    throw DomainError("fn", "unknown built-in function '" + std::string(name) + "'");
}

FunctionSpec FunctionSpec::sampled(std::vector<double> xs, std::vector<double> values) {
    if (xs.size() != values.size()) throw DomainError("fn", "sampled table: x and f(x) lengths differ");
    if (xs.size() < 2) throw DomainError("fn", "sampled table needs at least two rows");
    if (xs.front() != 0.0 || xs.back() != 1.0)
        throw DomainError("fn", "sampled table must start at x=0 and end at x=1");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw DomainError("fn", "sampled table x values must be strictly increasing");
    for (double v : values)
        if (!std::isfinite(v)) throw DomainError("fn", "sampled table values must be finite");

    FunctionSpec f;
    f.sampled_ = true;
    f.name_ = "table";
    f.xs_ = std::move(xs);
    f.values_ = std::move(values);
    return f;
}

FunctionSpec FunctionSpec::from_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (!line.empty()) break;
    }
    if (line != "x,fx") throw DomainError("csv", "expected header 'x,fx'");

    std::vector<double> xs, values;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw DomainError("csv", "line " + std::to_string(line_no) + ": expected two columns");
        xs.push_back(parse_double(trim(line.substr(0, comma)), line_no));
        values.push_back(parse_double(trim(line.substr(comma + 1)), line_no));
    }
    return sampled(std::move(xs), std::move(values));
}

FunctionSpec FunctionSpec::load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("fn-csv", "cannot open '" + path + "'");
    FunctionSpec f = from_csv(in);
    f.name_ = path;
    return f;
}

double FunctionSpec::operator()(double t) const {
    if (sampled_) {
        if (t <= 0.0) return values_.front();
        if (t >= 1.0) return values_.back();
        const auto hi = std::upper_bound(xs_.begin(), xs_.end(), t);
        const auto i = static_cast<std::size_t>(hi - xs_.begin());
        const double x0 = xs_[i - 1], x1 = xs_[i];
        const double w = (t - x0) / (x1 - x0);
        return values_[i - 1] + w * (values_[i] - values_[i - 1]);
    }
    switch (builtin_) {
        case Builtin::constant: return 1.0;
        case Builtin::linear: return t;
        case Builtin::square: return t * t;
        case Builtin::abs_mid: return std::abs(t - 0.5);
        case Builtin::sin_pi: return std::sin(std::numbers::pi * t);
        case Builtin::sawtooth: return sawtooth(t);
        case Builtin::sqrt: return std::sqrt(t);
    }
    return 0.0;
}

bool FunctionSpec::is_constant() const noexcept {
    if (!sampled_) return builtin_ == Builtin::constant;
    return std::all_of(values_.begin(), values_.end(), [&](double v) { return v == values_.front(); });
}

} // namespace pb
