#pragma once

#include <cstdint>
#include <vector>

namespace hamqaoa {

// Spin configuration on the doubled layer line, indexed 1..p+1 then
// -(p+1)..-1, packed into the low 2p+2 bits of a word.  Slot k for k <= p
// holds index k+1; slot p+1+r holds index r-p-1, so the last slot 2p+1 holds
// index -1.  A clear bit is spin +1, matching the statevector convention.
class PathSpace {
  public:
    explicit PathSpace(int depth);

    int depth() const { return p_; }
    int bits() const { return 2 * p_ + 2; }
    std::uint32_t count() const { return std::uint32_t{1} << bits(); }

    // index in {1..p+1} or {-(p+1)..-1}
    int slot(int index) const;

    static int spin_at_slot(std::uint32_t path, int s) {
        return (path >> s) & 1u ? -1 : +1;
    }
    int spin(std::uint32_t path, int index) const {
        return spin_at_slot(path, slot(index));
    }

    // T(a): largest j with a_j != a_{-j}, or 0 when the two halves mirror.
    int turning_point(std::uint32_t path) const;
    bool is_mirror_symmetric(std::uint32_t path) const { return turning_point(path) == 0; }

    // Flips a_{+-j} for every j above the turning point.  Pairs paths with
    // opposite identity weight; undefined (throws) on mirror-symmetric paths.
    std::uint32_t primed(std::uint32_t path) const;

  private:
    int p_;
    std::vector<std::uint32_t> pair_mask_;  // pair_mask_[j] covers slots of +-j
    std::vector<std::uint32_t> tail_mask_;  // tail_mask_[t] = OR of pairs j > t
};

}  // namespace hamqaoa
