#pragma once

#include <cstdint>
#include <vector>

#include "skewpencil/pencil.hpp"

namespace skewpencil {

// Recipe for a reproducible test instance: a block list conjugated by a
// seeded change of basis.
struct InstanceSpec {
    FieldDescriptor field;
    std::vector<Block> blocks;
    std::uint64_t transform_seed = 0;
    bool identity_transform = false;
    long entry_bound = 3;  // magnitude of triangular-factor entries over Q
};

// Unit lower-triangular times unit upper-triangular times a permutation, so
// the determinant is +-1 and invertibility never needs a retry. The same
// (field, n, seed, bound) always yields the same matrix.
Mat random_invertible(const FieldDescriptor& f, std::size_t n, std::uint64_t seed,
                      long entry_bound = 3);

struct GeneratedInstance {
    Pencil pencil;               // S^t (canonical assembly) S
    Mat transform;               // the S used
    std::vector<Block> blocks;   // spec blocks in canonical order
};

GeneratedInstance generate(const InstanceSpec& spec);

}  // namespace skewpencil
