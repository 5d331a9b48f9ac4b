#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "skewpencil/decompose.hpp"
#include "skewpencil/generate.hpp"

using namespace skewpencil;
using testutil::FP;
using testutil::im;
using testutil::QQ;

namespace {

Mat nilpotent_pattern(const FieldDescriptor& f, std::size_t m) {
    // e_i -> e_{i+1}, f_i -> f_{i-1} on a (e_1..e_m, f_1..f_m) basis
    Mat j(f, 2 * m, 2 * m);
    for (std::size_t i = 1; i < m; ++i) {
        j.at(i, i - 1) = Scalar::one(f);
        j.at(m + i - 1, m + i) = Scalar::one(f);
    }
    return j;
}

Mat symplectic_form(const FieldDescriptor& f, std::size_t m) {
    Mat b(f, 2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        b.at(i, m + i) = Scalar::one(f);
        b.at(m + i, i) = -Scalar::one(f);
    }
    return b;
}

void check_chains(const Mat& n_op, const Mat& b_form, const NilpotentChains& nc) {
    const FieldDescriptor f = n_op.field();
    std::size_t total = 0;
    for (const auto& c : nc.chains) {
        REQUIRE(c.cols() % 2 == 0);
        std::size_t m = c.cols() / 2;
        total += 2 * m;
        CHECK(congruence(c, b_form) == symplectic_form(f, m));
        CHECK(n_op * c == c * nilpotent_pattern(f, m));
    }
    CHECK(total == n_op.rows());
    // distinct chains pair to zero
    for (std::size_t i = 0; i < nc.chains.size(); ++i)
        for (std::size_t j = i + 1; j < nc.chains.size(); ++j)
            CHECK((nc.chains[i].transpose() * b_form * nc.chains[j]).is_zero());
}

}  // namespace

TEST_CASE("single canonical blocks decompose to themselves") {
    auto f = QQ();
    std::vector<Block> menu = {Block::kronecker(f, 0), Block::kronecker(f, 2),
                               Block::jordan_inf(f, 1), Block::jordan_inf(f, 3),
                               Block::jordan(Scalar::from_int(f, 2), 1),
                               Block::jordan(Scalar::parse(f, "1/2"), 2),
                               Block::jordan(Scalar::zero(f), 2)};
    for (const Block& blk : menu) {
        Pencil p = assemble(f, {blk}, BasisOrdering::Split);
        DecomposeResult res = decompose(p.A, p.B);
        REQUIRE(res.decomposition.blocks.size() == 1);
        CHECK(res.decomposition.blocks[0] == blk);
        CHECK(verify(p.A, p.B, res.decomposition).ok);
    }
}

TEST_CASE("zero pencil is a pile of width-1 blocks") {
    auto f = QQ();
    Mat z(f, 3, 3);
    DecomposeResult res = decompose(z, z);
    REQUIRE(res.decomposition.blocks.size() == 3);
    for (const auto& b : res.decomposition.blocks) {
        CHECK(b.type == BlockType::Kronecker);
        CHECK(b.k == 0);
    }
    CHECK(verify(z, z, res.decomposition).ok);
    DecomposeResult empty = decompose(Mat(f, 0, 0), Mat(f, 0, 0));
    CHECK(empty.decomposition.blocks.empty());
    CHECK(verify(Mat(f, 0, 0), Mat(f, 0, 0), empty.decomposition).ok);
}

TEST_CASE("pivot-greedy step check failure falls back and still answers") {
    // On this input the greedy chain extension collapses the working space;
    // the per-step dimension check must catch it and the fallback must
    // produce the true blocks.
    auto f = QQ();
    Mat a = im(f, {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    Mat b = im(f, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 1}, {0, 0, -1, 0}});
    DecomposeResult res = decompose(a, b);
    REQUIRE(res.decomposition.blocks.size() == 2);
    CHECK(res.decomposition.blocks[0] == Block::jordan_inf(f, 1));
    CHECK(res.decomposition.blocks[1] == Block::jordan(Scalar::zero(f), 1));
    CHECK(verify(a, b, res.decomposition).ok);
    REQUIRE(!res.traces.empty());
    CHECK(res.traces[0].used_fallback);
}

TEST_CASE("greedy succeeds without fallback on canonical coordinates") {
    auto f = QQ();
    Pencil p = assemble(f, {Block::kronecker(f, 1)}, BasisOrdering::Split);
    DecomposeResult res = decompose(p.A, p.B);
    REQUIRE(res.traces.size() == 1);
    CHECK(!res.traces[0].used_fallback);
    CHECK(res.decomposition.T == Mat::identity(f, 3));
}

TEST_CASE("extract_degenerate_block postconditions") {
    auto f = FP(13);
    InstanceSpec spec{f,
                      {Block::kronecker(f, 1), Block::jordan_inf(f, 2),
                       Block::jordan(Scalar::residue(f, 3), 1)},
                      99,
                      false,
                      3};
    GeneratedInstance gi = generate(spec);
    Pencil p = validate_pencil(gi.pencil.A, gi.pencil.B);
    Extraction ex = extract_degenerate_block(p);
    auto [ca, cb] = materialize_block(f, ex.block, BasisOrdering::Split);
    CHECK(congruence(ex.chain, p.A) == ca);
    CHECK(congruence(ex.chain, p.B) == cb);
    CHECK(ex.complement.cols() == p.n - ex.block.dim());
    CHECK((ex.complement.transpose() * p.A * ex.chain).is_zero());
    CHECK((ex.complement.transpose() * p.B * ex.chain).is_zero());
    CHECK(rank_of(Mat::hcat(ex.chain, ex.complement)) == p.n);
}

TEST_CASE("extract_degenerate_block requires a singular B") {
    auto f = QQ();
    Pencil p = assemble(f, {Block::jordan(Scalar::one(f), 1)}, BasisOrdering::Split);
    try {
        extract_degenerate_block(p);
        FAIL("extracted from a nondegenerate pencil");
    } catch (const Error& e) {
        CHECK(e.kind() == "PreconditionBNondegenerate");
    }
}

TEST_CASE("nilpotent chains on conjugated shift pairs") {
    for (auto f : {QQ(), FP(101)}) {
        for (std::size_t m : {1, 2, 3}) {
            Mat n0 = nilpotent_pattern(f, m);
            Mat b0 = symplectic_form(f, m);
            for (std::uint64_t seed = 1; seed <= 4; ++seed) {
                Mat s = random_invertible(f, 2 * m, seed);
                Mat n = inverse(s) * n0 * s;
                Mat b = congruence(s, b0);
                NilpotentChains nc = nilpotent_jordan_block(n, b);
                check_chains(n, b, nc);
            }
        }
    }
}

TEST_CASE("nilpotent chains with mixed chain lengths") {
    auto f = QQ();
    // J(2) + J(1) structure: 6-dim, chains of width 4 and 2
    Mat n0(f, 6, 6), b0(f, 6, 6);
    // (e1 e2 f1 f2) block
    n0.at(1, 0) = Scalar::one(f);
    n0.at(2, 3) = Scalar::one(f);
    b0.at(0, 2) = Scalar::one(f);
    b0.at(2, 0) = -Scalar::one(f);
    b0.at(1, 3) = Scalar::one(f);
    b0.at(3, 1) = -Scalar::one(f);
    // (e f) trivial block
    b0.at(4, 5) = Scalar::one(f);
    b0.at(5, 4) = -Scalar::one(f);
    Mat s = random_invertible(f, 6, 7);
    Mat n = inverse(s) * n0 * s;
    Mat b = congruence(s, b0);
    NilpotentChains nc = nilpotent_jordan_block(n, b);
    REQUIRE(nc.chains.size() == 2);
    CHECK(nc.chains[0].cols() + nc.chains[1].cols() == 6);
    check_chains(n, b, nc);
}

TEST_CASE("nilpotent chain rejections") {
    auto f = QQ();
    Mat b = symplectic_form(f, 1);
    try {
        nilpotent_jordan_block(Mat(f, 2, 2), Mat(f, 2, 2));
        FAIL("degenerate form accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == "Singular");
    }
    try {
        nilpotent_jordan_block(Mat::identity(f, 2), b);
        FAIL("non-nilpotent operator accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == "NotNilpotent");
    }
    try {
        nilpotent_jordan_block(im(f, {{0, 0}, {1, 0}}), im(f, {{0, 1}, {-1, 1}}));
        FAIL("non-skew form accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == "NotSkew");
    }
    try {
        // shift operator is not self-adjoint for this symplectic form
        Mat n(f, 4, 4);
        n.at(1, 0) = Scalar::one(f);
        nilpotent_jordan_block(n, symplectic_form(f, 2));
        FAIL("non-self-adjoint operator accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == "NotSelfAdjoint");
    }
    CHECK_THROWS_AS(nilpotent_jordan_block(Mat(f, 2, 3), b), Error);
    CHECK_THROWS_AS(nilpotent_jordan_block(Mat(FP(7), 2, 2), b), Error);
}

TEST_CASE("regular eigensplit separates eigenvalues with B-orthogonal spaces") {
    auto f = QQ();
    InstanceSpec spec{f,
                      {Block::jordan(Scalar::one(f), 1),
                       Block::jordan(Scalar::from_int(f, 2), 2),
                       Block::jordan(Scalar::from_int(f, -3), 1)},
                      5,
                      false,
                      2};
    GeneratedInstance gi = generate(spec);
    Pencil p = validate_pencil(gi.pencil.A, gi.pencil.B);
    auto split = regular_eigensplit(p);
    REQUIRE(split.size() == 3);
    CHECK(split[0].first.str() == "-3");
    CHECK(split[1].first.str() == "1");
    CHECK(split[2].first.str() == "2");
    CHECK(split[0].second.cols() == 2);
    CHECK(split[1].second.cols() == 2);
    CHECK(split[2].second.cols() == 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            CHECK((split[i].second.transpose() * p.B * split[j].second).is_zero());
}

TEST_CASE("split failure reports the square-free core") {
    auto f = QQ();
    // A = [[0, C^t], [-C, 0]], B symplectic: B^-1 A has char poly (t^2-2)^2
    Mat a = im(f, {{0, 0, 0, 1}, {0, 0, 2, 0}, {0, -2, 0, 0}, {-1, 0, 0, 0}});
    Mat b = im(f, {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
    try {
        decompose(a, b);
        FAIL("decomposed an irrational-eigenvalue pencil");
    } catch (const SplitFailureError& e) {
        CHECK(e.remainder == Poly::from_int_coeffs(f, {-2, 0, 1}));
        CHECK(e.degree_hints == std::vector<std::size_t>{2, 2});
        CHECK(e.has_partial);
        CHECK(e.partial_blocks.empty());
        REQUIRE(e.residual.size() == 3);
        CHECK(e.residual[0].cols() == 4);  // nothing was split off
    }
}

TEST_CASE("split failure after partial extraction keeps the partial data") {
    auto f7 = FP(7);
    // kron:1 in canonical position plus a regular part whose char poly is
    // (t^2 - t - 1)^2; over F_7 that quadratic has no roots.
    Mat a(f7, 7, 7), b(f7, 7, 7);
    auto set = [&](Mat& m, std::size_t i, std::size_t j, long v) {
        m.at(i, j) = Scalar::from_int(f7, v);
        m.at(j, i) = Scalar::from_int(f7, -v);
    };
    set(a, 0, 1, 1);
    set(b, 0, 2, 1);
    // C = companion(t^2 - t - 1) = [[0,1],[1,1]]; upper-right block C^t
    set(a, 3, 5, 0);
    set(a, 3, 6, 1);
    set(a, 4, 5, 1);
    set(a, 4, 6, 1);
    set(b, 3, 5, 1);
    set(b, 4, 6, 1);
    Mat s = random_invertible(f7, 7, 12);
    Mat ca = congruence(s, a), cb = congruence(s, b);
    try {
        decompose(ca, cb);
        FAIL("decomposed through an irreducible factor");
    } catch (const SplitFailureError& e) {
        CHECK(e.remainder == Poly::from_int_coeffs(f7, {6, 6, 1}));
        CHECK(e.has_partial);
        REQUIRE(e.partial_blocks.size() == 1);
        CHECK(e.partial_blocks[0] == Block::kronecker(f7, 1));
        REQUIRE(e.partial_chains.size() == 1);
        REQUIRE(e.residual.size() == 3);
        const Mat& res_basis = e.residual[0];
        const Mat& res_a = e.residual[1];
        const Mat& res_b = e.residual[2];
        CHECK(res_basis.cols() == 4);
        // the partial chain and the residual basis split both forms
        Mat t = Mat::hcat(e.partial_chains[0], res_basis);
        auto [ka, kb] = materialize_block(f7, e.partial_blocks[0], BasisOrdering::Split);
        Mat expect_a(f7, 7, 7), expect_b(f7, 7, 7);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                expect_a.at(i, j) = ka.at(i, j);
                expect_b.at(i, j) = kb.at(i, j);
            }
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                expect_a.at(3 + i, 3 + j) = res_a.at(i, j);
                expect_b.at(3 + i, 3 + j) = res_b.at(i, j);
            }
        CHECK(congruence(t, ca) == expect_a);
        CHECK(congruence(t, cb) == expect_b);
    }
}

TEST_CASE("decompose full runs over both fields") {
    for (auto f : {QQ(), FP(13)}) {
        std::vector<std::vector<Block>> specs = {
            {Block::kronecker(f, 1), Block::jordan_inf(f, 1),
             Block::jordan(Scalar::from_int(f, 2), 1)},
            {Block::kronecker(f, 0), Block::kronecker(f, 0), Block::jordan_inf(f, 2)},
            {Block::jordan(Scalar::from_int(f, 1), 2),
             Block::jordan(Scalar::from_int(f, 2), 1), Block::jordan_inf(f, 1)},
            {Block::kronecker(f, 2), Block::jordan(Scalar::zero(f), 1)},
        };
        for (std::size_t si = 0; si < specs.size(); ++si) {
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                InstanceSpec spec{f, specs[si], seed * 7 + si, false, 2};
                GeneratedInstance gi = generate(spec);
                DecomposeResult res = decompose(gi.pencil.A, gi.pencil.B);
                CHECK(res.decomposition.blocks == gi.blocks);
                CHECK(verify(gi.pencil.A, gi.pencil.B, res.decomposition).ok);
            }
        }
    }
}

TEST_CASE("verify rejects tampered results") {
    auto f = QQ();
    InstanceSpec spec{f, {Block::jordan_inf(f, 1), Block::jordan(Scalar::one(f), 1)},
                      3, false, 2};
    GeneratedInstance gi = generate(spec);
    DecomposeResult res = decompose(gi.pencil.A, gi.pencil.B);
    REQUIRE(verify(gi.pencil.A, gi.pencil.B, res.decomposition).ok);

    Decomposition bad_t = res.decomposition;
    bad_t.T.at(0, 0) = bad_t.T.at(0, 0) + Scalar::one(f);
    VerifyReport r1 = verify(gi.pencil.A, gi.pencil.B, bad_t);
    bool t_rejected = !r1.ok;
    CHECK(t_rejected);

    Decomposition bad_blocks = res.decomposition;
    bad_blocks.blocks[1].lambda = Scalar::from_int(f, 5);
    VerifyReport r2 = verify(gi.pencil.A, gi.pencil.B, bad_blocks);
    CHECK(!r2.ok);
    CHECK(!r2.failures.empty());

    Decomposition unsorted = res.decomposition;
    std::swap(unsorted.blocks[0], unsorted.blocks[1]);
    std::swap(unsorted.ranges[0], unsorted.ranges[1]);
    VerifyReport r3 = verify(gi.pencil.A, gi.pencil.B, unsorted);
    CHECK(!r3.ok);
}

TEST_CASE("interleaved reorder verifies in its own ordering") {
    auto f = QQ();
    InstanceSpec spec{f,
                      {Block::kronecker(f, 1), Block::jordan_inf(f, 2),
                       Block::jordan(Scalar::from_int(f, 2), 1)},
                      21, false, 2};
    GeneratedInstance gi = generate(spec);
    DecomposeResult res = decompose(gi.pencil.A, gi.pencil.B);
    Decomposition inter = reorder_basis(res.decomposition, BasisOrdering::Interleaved);
    CHECK(verify(gi.pencil.A, gi.pencil.B, inter, BasisOrdering::Interleaved).ok);
    CHECK(!verify(gi.pencil.A, gi.pencil.B, inter, BasisOrdering::Split).ok);
    CHECK(reorder_basis(res.decomposition, BasisOrdering::Split).T ==
          res.decomposition.T);
}

TEST_CASE("canonical_sort is the block order") {
    auto f = QQ();
    std::vector<Block> blocks = {Block::jordan(Scalar::one(f), 1),
                                 Block::kronecker(f, 1), Block::jordan_inf(f, 1),
                                 Block::jordan(Scalar::zero(f), 2)};
    canonical_sort(blocks);
    CHECK(blocks[0] == Block::kronecker(f, 1));
    CHECK(blocks[1] == Block::jordan_inf(f, 1));
    CHECK(blocks[2] == Block::jordan(Scalar::zero(f), 2));
    CHECK(blocks[3] == Block::jordan(Scalar::one(f), 1));
}
