#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pb {

enum class Builtin { constant, linear, square, abs_mid, sin_pi, sawtooth, sqrt };

/// A real function on [0,1]: one of the built-ins, or a sampled table that is
/// interpolated linearly between strictly increasing nodes 0 = x_0 < ... < x_m = 1.
class FunctionSpec {
public:
    static FunctionSpec builtin(Builtin which);
    /// Accepts the CLI names: constant, linear, square, abs-mid, sin-pi, sawtooth, sqrt.
    static FunctionSpec named(std::string_view name);
    static FunctionSpec sampled(std::vector<double> xs, std::vector<double> values);
    /// CSV with header `x,fx`.
    static FunctionSpec from_csv(std::istream& in);
    static FunctionSpec load_csv(const std::string& path);

    double operator()(double t) const;

    const std::string& name() const noexcept { return name_; }
    bool is_constant() const noexcept;

private:
    FunctionSpec() = default;

    bool sampled_ = false;
    Builtin builtin_ = Builtin::constant;
    std::string name_;
    std::vector<double> xs_;
    std::vector<double> values_;
};

/// Every built-in, in declaration order.
std::span<const Builtin> all_builtins();
std::string_view builtin_name(Builtin which);

} // namespace pb
