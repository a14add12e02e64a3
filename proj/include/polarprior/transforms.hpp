#pragma once

#include <string>
#include <vector>

#include "polarprior/stiefel.hpp"

namespace polarprior {

struct Constraint {
    enum class Kind { None, Interval, Positive };
    Kind kind = Kind::None;
    double lower = 0.0;
    double upper = 0.0;

    static Constraint none() { return {}; }
    static Constraint positive() { return {Kind::Positive, 0.0, 0.0}; }
    static Constraint interval(double a, double b);
};

struct UnconstrainedValue {
    double u;
    double log_jacobian;  // log |d value / d u|
};

struct ConstrainedValue {
    double value;
    double log_jacobian;
    double dvalue_du;
    double dlogjac_du;
};

UnconstrainedValue to_unconstrained(double value, const Constraint& c);
ConstrainedValue to_constrained(double u, const Constraint& c);

/// A named array of parameters sharing one constraint. Shape is rows x cols
/// (cols = 1 for vectors, 1 x 1 for scalars); storage is column-major.
struct ParameterBlock {
    std::string name;
    Eigen::Index rows = 1;
    Eigen::Index cols = 1;
    Constraint constraint;

    Eigen::Index size() const noexcept { return rows * cols; }
};

/// Ordered blocks laid out contiguously in one unconstrained vector.
class ParameterLayout {
public:
    ParameterLayout() = default;
    explicit ParameterLayout(std::vector<ParameterBlock> blocks);

    const std::vector<ParameterBlock>& blocks() const noexcept { return blocks_; }
    Eigen::Index dim() const noexcept { return dim_; }
    Eigen::Index offset(const std::string& name) const;
    const ParameterBlock& block(const std::string& name) const;

    /// "name" for scalars, "name[i]" for vectors, "name[i,j]" for matrices (1-based).
    std::vector<std::string> flat_names() const;
    Vector constrain(const Vector& u) const;
    Vector unconstrain(const Vector& value) const;

private:
    std::vector<ParameterBlock> blocks_;
    std::vector<Eigen::Index> offsets_;
    Eigen::Index dim_ = 0;
};

}  // namespace polarprior
