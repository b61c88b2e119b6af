#include "hamqaoa/bitpath.hpp"

#include <stdexcept>

namespace hamqaoa {

PathSpace::PathSpace(int depth) : p_(depth) {
    if (depth < 1 || depth > 12)
        throw std::invalid_argument("path space supports depth 1..12");
    pair_mask_.assign(p_ + 2, 0);
    for (int j = 1; j <= p_ + 1; ++j)
        pair_mask_[j] = (std::uint32_t{1} << slot(j)) | (std::uint32_t{1} << slot(-j));
    tail_mask_.assign(p_ + 2, 0);
    for (int t = p_; t >= 0; --t) tail_mask_[t] = tail_mask_[t + 1] | pair_mask_[t + 1];
}

int PathSpace::slot(int index) const {
    if (index >= 1 && index <= p_ + 1) return index - 1;
    if (index <= -1 && index >= -(p_ + 1)) return 2 * p_ + 2 + index;
    throw std::out_of_range("path index outside 1..p+1, -(p+1)..-1");
}

int PathSpace::turning_point(std::uint32_t path) const {
    for (int j = p_ + 1; j >= 1; --j)
        if (path & pair_mask_[j]) {
            const std::uint32_t pair = path & pair_mask_[j];
            if (pair != pair_mask_[j]) return j;  // exactly one of the two bits set
        }
    return 0;
}

std::uint32_t PathSpace::primed(std::uint32_t path) const {
    const int t = turning_point(path);
    if (t == 0) throw std::domain_error("primed path undefined on mirror-symmetric paths");
    return path ^ tail_mask_[t];
}

}  // namespace hamqaoa
