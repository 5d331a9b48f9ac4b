#include "skewpencil/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "skewpencil/errors.hpp"

namespace skewpencil {

namespace {

// mt19937_64 plus rejection sampling: identical draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t bounded(std::uint64_t m) {
        if (m == 0) fail("DivisionByZero", "bounded draw with empty range");
        std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % m;
        std::uint64_t x;
        do {
            x = g_();
        } while (x >= limit);
        return x % m;
    }

private:
    std::mt19937_64 g_;
};

Scalar random_entry(Rng& rng, const FieldDescriptor& f, long bound) {
    if (f.is_prime_field()) return Scalar::residue(f, rng.bounded(f.prime()));
    std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    return Scalar::from_int(f, static_cast<long>(rng.bounded(span)) - bound);
}

}  // namespace

Mat random_invertible(const FieldDescriptor& f, std::size_t n, std::uint64_t seed,
                      long entry_bound) {
    if (entry_bound < 0) fail("Parse", "entry bound must be nonnegative");
    Rng rng(seed);
    Mat l = Mat::identity(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) l.at(i, j) = random_entry(rng, f, entry_bound);
    Mat u = Mat::identity(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) u.at(i, j) = random_entry(rng, f, entry_bound);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.bounded(i)]);
    Mat pm(f, n, n);
    for (std::size_t q = 0; q < n; ++q) pm.at(perm[q], q) = Scalar::one(f);
    return l * u * pm;
}

GeneratedInstance generate(const InstanceSpec& spec) {
    // Assemble in canonical order so the returned transform maps the returned
    // block list onto the instance, not the order the caller happened to use.
    std::vector<Block> sorted = spec.blocks;
    std::stable_sort(sorted.begin(), sorted.end(), block_less);
    Pencil canon = assemble(spec.field, sorted, BasisOrdering::Split);
    Mat s = spec.identity_transform
                ? Mat::identity(spec.field, canon.n)
                : random_invertible(spec.field, canon.n, spec.transform_seed,
                                    spec.entry_bound);
    Pencil inst{spec.field, canon.n, congruence(s, canon.A), congruence(s, canon.B)};
    return GeneratedInstance{std::move(inst), std::move(s), std::move(sorted)};
}

}  // namespace skewpencil
