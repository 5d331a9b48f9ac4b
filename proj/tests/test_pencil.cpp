#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "skewpencil/pencil.hpp"

using namespace skewpencil;
using testutil::FP;
using testutil::im;
using testutil::QQ;

TEST_CASE("canonical block displays, split layout") {
    auto f = QQ();
    auto [ka, kb] = materialize_block(f, Block::kronecker(f, 1), BasisOrdering::Split);
    CHECK(ka == im(f, {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
    CHECK(kb == im(f, {{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}));

    auto [ja, jb] = materialize_block(f, Block::jordan(Scalar::from_int(f, 2), 1),
                                      BasisOrdering::Split);
    CHECK(ja == im(f, {{0, 2}, {-2, 0}}));
    CHECK(jb == im(f, {{0, 1}, {-1, 0}}));

    auto [ia, ib] = materialize_block(f, Block::jordan_inf(f, 1), BasisOrdering::Split);
    CHECK(ia == im(f, {{0, 1}, {-1, 0}}));
    CHECK(ib == Mat(f, 2, 2));

    auto [i2a, i2b] = materialize_block(f, Block::jordan_inf(f, 2), BasisOrdering::Split);
    CHECK(i2a == im(f, {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}));
    CHECK(i2b == im(f, {{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}}));

    auto [za, zb] = materialize_block(f, Block::kronecker(f, 0), BasisOrdering::Split);
    CHECK(za == Mat(f, 1, 1));
    CHECK(zb == Mat(f, 1, 1));

    auto [j2a, j2b] = materialize_block(f, Block::jordan(Scalar::from_int(f, -1), 2),
                                        BasisOrdering::Split);
    CHECK(j2a == im(f, {{0, 0, -1, 1}, {0, 0, 0, -1}, {1, 0, 0, 0}, {-1, 1, 0, 0}}));
    CHECK(j2b == im(f, {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}));
}

TEST_CASE("interleaved layout is the expected pairwise display") {
    auto f = QQ();
    auto [a, b] = materialize_block(f, Block::jordan_inf(f, 2), BasisOrdering::Interleaved);
    CHECK(a == im(f, {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}));
    CHECK(b == im(f, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}}));

    auto [ka, kb] = materialize_block(f, Block::kronecker(f, 1), BasisOrdering::Interleaved);
    CHECK(ka == im(f, {{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}));
    CHECK(kb == im(f, {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}));
}

TEST_CASE("both layouts of one block are congruent by the permutation") {
    auto f = QQ();
    for (const Block& blk :
         {Block::kronecker(f, 2), Block::jordan_inf(f, 3),
          Block::jordan(Scalar::parse(f, "1/2"), 2), Block::jordan(Scalar::zero(f), 3)}) {
        auto [sa, sb] = materialize_block(f, blk, BasisOrdering::Split);
        auto [ia, ib] = materialize_block(f, blk, BasisOrdering::Interleaved);
        auto perm = block_basis_permutation(blk, BasisOrdering::Interleaved);
        Mat p(f, blk.dim(), blk.dim());
        for (std::size_t q = 0; q < perm.size(); ++q)
            p.at(perm[q], q) = Scalar::one(f);
        CHECK(congruence(p, sa) == ia);
        CHECK(congruence(p, sb) == ib);
        auto id = block_basis_permutation(blk, BasisOrdering::Split);
        for (std::size_t q = 0; q < id.size(); ++q) CHECK(id[q] == q);
    }
}

TEST_CASE("materialized blocks are skew and jordan blocks need k >= 1") {
    auto f = FP(11);
    for (const Block& blk : {Block::kronecker(f, 3), Block::jordan_inf(f, 2),
                             Block::jordan(Scalar::residue(f, 5), 3)}) {
        for (auto ord : {BasisOrdering::Split, BasisOrdering::Interleaved}) {
            auto [a, b] = materialize_block(f, blk, ord);
            CHECK_NOTHROW(validate_pencil(a, b));
        }
    }
    try {
        materialize_block(f, Block::jordan(Scalar::zero(f), 0), BasisOrdering::Split);
        FAIL("jordan block of size 0 accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == "InvalidK");
    }
    CHECK_THROWS_AS(
        materialize_block(f, Block::jordan_inf(f, 0), BasisOrdering::Split), Error);
}

TEST_CASE("validate_pencil rejections carry exact kinds") {
    auto f = QQ();
    try {
        validate_pencil(Mat(f, 2, 3), Mat(f, 2, 2));
        FAIL("non-square accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == "NotSquare");
    }
    try {
        validate_pencil(Mat(f, 2, 2), Mat(f, 3, 3));
        FAIL("size mismatch accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == "DimensionMismatch");
    }
    try {
        validate_pencil(Mat(f, 2, 2), Mat(FP(7), 2, 2));
        FAIL("mixed fields accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == "MixedFields");
    }
    try {
        validate_pencil(im(f, {{0, 1}, {1, 0}}), Mat(f, 2, 2));
        FAIL("non-skew accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == "NotSkew");
        CHECK(e.detail().find("A") != std::string::npos);
    }
    try {
        validate_pencil(Mat(f, 1, 1), im(f, {{1}}));
        FAIL("nonzero diagonal accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == "NotSkew");
        CHECK(e.detail().find("B") != std::string::npos);
    }
}

TEST_CASE("assemble is the block diagonal stack") {
    auto f = QQ();
    std::vector<Block> blocks = {Block::kronecker(f, 1),
                                 Block::jordan(Scalar::from_int(f, 2), 1)};
    Pencil p = assemble(f, blocks, BasisOrdering::Split);
    CHECK(p.n == 5);
    Mat ea(f, 5, 5), eb(f, 5, 5);
    auto put = [&](Mat& m, std::size_t off, const Mat& blk) {
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j)
                m.at(off + i, off + j) = blk.at(i, j);
    };
    auto [ka, kb] = materialize_block(f, blocks[0], BasisOrdering::Split);
    auto [ja, jb] = materialize_block(f, blocks[1], BasisOrdering::Split);
    put(ea, 0, ka);
    put(ea, 3, ja);
    put(eb, 0, kb);
    put(eb, 3, jb);
    CHECK(p.A == ea);
    CHECK(p.B == eb);
}

TEST_CASE("restrict_pencil pulls both forms back") {
    auto f = QQ();
    Pencil p = assemble(f, {Block::jordan_inf(f, 2)}, BasisOrdering::Split);
    Mat c = im(f, {{1, 0}, {0, 1}, {0, 0}, {0, 0}});
    Pencil r = restrict_pencil(p, c);
    CHECK(r.n == 2);
    CHECK(r.A == congruence(c, p.A));
    try {
        restrict_pencil(p, im(f, {{1, 2}, {1, 2}, {0, 0}, {0, 0}}));
        FAIL("dependent columns accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == "DependentColumns");
    }
}

TEST_CASE("biorthogonal complement") {
    auto f = QQ();
    Pencil p = assemble(f, {Block::jordan(Scalar::one(f), 1),
                            Block::jordan(Scalar::from_int(f, 2), 1)},
                        BasisOrdering::Split);
    Mat s = im(f, {{1}, {0}, {0}, {0}});
    Mat c = biorthogonal_complement(p, s);
    CHECK((s.transpose() * p.A * c).is_zero());
    CHECK((s.transpose() * p.B * c).is_zero());
    CHECK(c.cols() == 3);
}

TEST_CASE("canonical block order") {
    auto f = QQ();
    Block k0 = Block::kronecker(f, 0), k1 = Block::kronecker(f, 1);
    Block i1 = Block::jordan_inf(f, 1), i2 = Block::jordan_inf(f, 2);
    Block jm1 = Block::jordan(Scalar::from_int(f, -1), 2);
    Block j0 = Block::jordan(Scalar::zero(f), 1);
    Block jh = Block::jordan(Scalar::parse(f, "1/2"), 1);
    Block j2 = Block::jordan(Scalar::from_int(f, 2), 1);
    std::vector<Block> order = {k0, k1, i1, i2, jm1, j0, jh, j2};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j) {
            CHECK(block_less(order[i], order[j]) == (i < j));
        }
    CHECK(k1.str() == "kron:1");
    CHECK(i2.str() == "jinf:2");
    CHECK(jh.str() == "jordan:1/2:1");
    CHECK(k1.dim() == 3);
    CHECK(i2.dim() == 4);
    CHECK(jm1.dim() == 4);
}
