#pragma once

#include <vector>

#include "hamqaoa/statevector.hpp"

namespace hamqaoa {

struct WeightedDirection {
    Vec3 dir{1.0, 0.0, 0.0};
    double weight = 1.0;
};

// Weighted directions on the unit sphere, e.g. a spherical design supplied as
// data.  Weights are a probability distribution.
struct PointSet {
    std::vector<WeightedDirection> points;

    // unit directions and weight normalization within 1e-12
    void validate() const;
};

// Joint per-vertex law of (initial Bloch vector m, drive axis n).  The
// simplified circuit corresponds to m = n = +-x with equal weight.
class AnsatzDistribution {
  public:
    struct Component {
        Vec3 m;
        Vec3 n;
        double weight;
    };

    static AnsatzDistribution signed_x();
    static AnsatzDistribution fixed(const Vec3& m, const Vec3& n);  // deterministic pair
    static AnsatzDistribution coupled(const PointSet& ps);          // n = m ~ ps
    static AnsatzDistribution product(const PointSet& init, const PointSet& drive);

    const std::vector<Component>& components() const { return comps_; }
    void validate() const;
    bool x_axis_only() const;  // support within {+x, -x} up to 1e-12

  private:
    std::vector<Component> comps_;
};

}  // namespace hamqaoa
