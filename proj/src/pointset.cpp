#include "hamqaoa/pointset.hpp"

#include <cmath>
#include <stdexcept>

namespace hamqaoa {

namespace {

constexpr double kUnitTol = 1e-12;

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

}  // namespace

void PointSet::validate() const {
    if (points.empty()) throw std::invalid_argument("point set is empty");
    double total = 0.0;
    for (const auto& pt : points) {
        if (std::abs(norm3(pt.dir) - 1.0) > kUnitTol)
            throw std::invalid_argument("point set direction is not a unit vector");
        if (!(pt.weight >= 0.0) || !std::isfinite(pt.weight))
            throw std::invalid_argument("point set weight must be a finite nonnegative real");
        total += pt.weight;
    }
    if (std::abs(total - 1.0) > kUnitTol)
        throw std::invalid_argument("point set weights must sum to 1");
}

AnsatzDistribution AnsatzDistribution::signed_x() {
    AnsatzDistribution d;
    d.comps_.push_back({{+1.0, 0.0, 0.0}, {+1.0, 0.0, 0.0}, 0.5});
    d.comps_.push_back({{-1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0}, 0.5});
    return d;
}

AnsatzDistribution AnsatzDistribution::fixed(const Vec3& m, const Vec3& n) {
    AnsatzDistribution d;
    d.comps_.push_back({m, n, 1.0});
    d.validate();
    return d;
}

AnsatzDistribution AnsatzDistribution::coupled(const PointSet& ps) {
    ps.validate();
    AnsatzDistribution d;
    for (const auto& pt : ps.points) d.comps_.push_back({pt.dir, pt.dir, pt.weight});
    return d;
}

AnsatzDistribution AnsatzDistribution::product(const PointSet& init, const PointSet& drive) {
    init.validate();
    drive.validate();
    AnsatzDistribution d;
    for (const auto& mi : init.points)
        for (const auto& ni : drive.points)
            d.comps_.push_back({mi.dir, ni.dir, mi.weight * ni.weight});
    return d;
}

void AnsatzDistribution::validate() const {
    if (comps_.empty()) throw std::invalid_argument("ansatz distribution is empty");
    double total = 0.0;
    for (const auto& c : comps_) {
        if (std::abs(norm3(c.m) - 1.0) > kUnitTol || std::abs(norm3(c.n) - 1.0) > kUnitTol)
            throw std::invalid_argument("ansatz distribution direction is not a unit vector");
        if (!(c.weight >= 0.0) || !std::isfinite(c.weight))
            throw std::invalid_argument("ansatz distribution weight must be nonnegative");
        total += c.weight;
    }
    if (std::abs(total - 1.0) > kUnitTol)
        throw std::invalid_argument("ansatz distribution weights must sum to 1");
}

bool AnsatzDistribution::x_axis_only() const {
    for (const auto& c : comps_)
        for (const Vec3* v : {&c.m, &c.n})
            if (std::abs(std::abs((*v)[0]) - 1.0) > kUnitTol || std::abs((*v)[1]) > kUnitTol ||
                std::abs((*v)[2]) > kUnitTol)
                return false;
    return true;
}

}  // namespace hamqaoa
