#include "skewpencil/decompose.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "skewpencil/errors.hpp"

namespace skewpencil {

namespace {

Mat mat_pow(const Mat& m, std::size_t e) {
    Mat acc = Mat::identity(m.field(), m.rows());
    for (std::size_t i = 0; i < e; ++i) acc = acc * m;
    return acc;
}

// Independent subset of the columns spanning the column space, chosen as the
// pivot columns of the rref, so the selection is deterministic.
Mat colspace_basis(const Mat& m) {
    RrefResult rr = rref(m);
    Mat out(m.field(), m.rows(), rr.pivot_cols.size());
    for (std::size_t j = 0; j < rr.pivot_cols.size(); ++j)
        out.set_col(j, m.col(rr.pivot_cols[j]));
    return out;
}

Mat cols_to_mat(const FieldDescriptor& f, std::size_t n, const std::vector<Mat>& cols) {
    Mat m(f, n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

// Construction order alternates f_0, e_1, f_1, e_2, ...; Split order lists
// the e family first, then the f family.
Mat construction_to_split(const FieldDescriptor& f, std::size_t n,
                          const std::vector<Mat>& chain) {
    std::vector<Mat> split;
    for (std::size_t i = 1; i < chain.size(); i += 2) split.push_back(chain[i]);
    for (std::size_t i = 0; i < chain.size(); i += 2) split.push_back(chain[i]);
    return cols_to_mat(f, n, split);
}

struct GreedyOutcome {
    Mat chain_split;
    Block block;
    Mat complement;
};

// Pivot-greedy chain growth. Each admissible-space update is followed by the
// dimension bookkeeping check; a miss returns nullopt and the caller falls
// back to the kernel-chain construction.
std::optional<GreedyOutcome> try_greedy(const Pencil& p, ExtractionTrace& trace) {
    const FieldDescriptor f = p.field;
    std::size_t n = p.n;
    auto note = [&](const std::string& stage, const std::string& msg,
                    std::size_t clen, std::size_t wdim) {
        trace.steps.push_back({stage, msg, clen, wdim});
    };

    Mat f0 = kernel_basis(p.B).col(0);
    std::vector<Mat> chain{f0};

    std::size_t pivot = 0;
    while (pivot < n && f0.at(pivot, 0).is_zero()) ++pivot;
    Mat w(f, n, n - 1);
    {
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == pivot) continue;
            w.at(j, c++) = Scalar::one(f);
        }
    }
    note("f0", "kernel vector with pivot coordinate " + std::to_string(pivot), 1, w.cols());

    auto chain_mat = [&]() { return cols_to_mat(f, n, chain); };
    auto first_nonzero = [&](const Mat& row) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < row.cols(); ++j)
            if (!row.at(0, j).is_zero()) return j;
        return std::nullopt;
    };

    while (chain.size() <= n) {
        std::size_t k = chain.size() / 2;  // completed (e, f) pairs

        // Seek e_{k+1} with A(e, f_k) = 1.
        Mat row = chain.back().transpose() * p.A * w;  // A(f_k, w_j)
        auto cand = first_nonzero(row);
        if (!cand) {
            note("terminate", "no admissible vector pairs with f_" + std::to_string(k) +
                                  " under A; kronecker block, k = " + std::to_string(k),
                 chain.size(), w.cols());
            return GreedyOutcome{construction_to_split(f, n, chain),
                                 Block::kronecker(f, k), w};
        }
        Scalar c = row.at(0, *cand);
        chain.push_back(w.col(*cand).scaled((Scalar::zero(f) - c).inverse()));
        note("e", "admissible column " + std::to_string(*cand), chain.size(), w.cols());
        if (chain.size() == 2) {
            w = kernel_basis(chain_mat().transpose() * p.A);
        } else {
            w = w * kernel_basis(chain_mat().transpose() * p.A * w);
        }
        if (chain.size() + w.cols() != n) {
            note("check", "dim V + dim W drifted after A-orthogonal update",
                 chain.size(), w.cols());
            return std::nullopt;
        }

        // Seek f_{k+1} with B(e_{k+1}, f) = 1.
        row = chain.back().transpose() * p.B * w;  // B(e_{k+1}, w_j)
        cand = first_nonzero(row);
        if (!cand) {
            note("terminate", "no admissible vector pairs with e_" + std::to_string(k + 1) +
                                  " under B; jordan_inf block, k = " + std::to_string(k + 1),
                 chain.size(), w.cols());
            return GreedyOutcome{construction_to_split(f, n, chain),
                                 Block::jordan_inf(f, k + 1), w};
        }
        Scalar cb = row.at(0, *cand);
        chain.push_back(w.col(*cand).scaled(cb.inverse()));
        note("f", "admissible column " + std::to_string(*cand), chain.size(), w.cols());
        w = w * kernel_basis(chain_mat().transpose() * p.B * w);
        if (chain.size() + w.cols() != n) {
            note("check", "dim V + dim W drifted after B-orthogonal update",
                 chain.size(), w.cols());
            return std::nullopt;
        }
    }
    note("check", "chain exceeded the ambient dimension", chain.size(), w.cols());
    return std::nullopt;
}

bool extraction_checks(const Pencil& p, const Mat& chain, const Block& block,
                       const Mat& complement, std::string* why) {
    std::size_t d = block.dim();
    if (chain.cols() != d) {
        *why = "chain width does not match the block dimension";
        return false;
    }
    auto [ca, cb] = materialize_block(p.field, block, BasisOrdering::Split);
    if (congruence(chain, p.A) != ca || congruence(chain, p.B) != cb) {
        *why = "chain pairing table differs from the canonical block";
        return false;
    }
    if (complement.cols() != p.n - d) {
        *why = "complement width is not n - block dimension";
        return false;
    }
    if (!(complement.transpose() * p.A * chain).is_zero() ||
        !(complement.transpose() * p.B * chain).is_zero()) {
        *why = "complement is not biorthogonal to the chain";
        return false;
    }
    if (rank_of(Mat::hcat(chain, complement)) != p.n) {
        *why = "chain plus complement do not span";
        return false;
    }
    return true;
}

// Solutions of B f_0 = 0, B f_i = A f_{i-1}, A f_k = 0 as one stacked kernel.
std::optional<std::vector<Mat>> kron_chain_at(const Pencil& p, std::size_t k) {
    const FieldDescriptor f = p.field;
    std::size_t n = p.n;
    Mat s(f, (k + 2) * n, (k + 1) * n);
    auto place = [&](std::size_t bi, std::size_t bj, const Mat& m, bool negate) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s.at(bi * n + i, bj * n + j) =
                    negate ? Scalar::zero(f) - m.at(i, j) : m.at(i, j);
    };
    place(0, 0, p.B, false);
    for (std::size_t i = 1; i <= k; ++i) {
        place(i, i - 1, p.A, true);
        place(i, i, p.B, false);
    }
    place(k + 1, k, p.A, false);
    Mat kb = kernel_basis(s);
    if (kb.cols() == 0) return std::nullopt;
    std::vector<Mat> fs;
    for (std::size_t i = 0; i <= k; ++i) {
        Mat fi(f, n, 1);
        for (std::size_t r = 0; r < n; ++r) fi.at(r, 0) = kb.at(i * n + r, 0);
        fs.push_back(fi);
    }
    return fs;
}

// Complement of an extracted chain: the joint biorthogonal kernel, thinned to
// a spanning-completion subset when chain vectors lie in both radical parts.
Mat complement_for(const Pencil& p, const Mat& chain) {
    Mat raw = biorthogonal_complement(p, chain);
    std::size_t want = p.n - chain.cols();
    if (raw.cols() < want)
        fail("InternalInvariantViolation", "biorthogonal kernel too small");
    if (raw.cols() == want) {
        if (rank_of(Mat::hcat(chain, raw)) != p.n)
            fail("InternalInvariantViolation", "chain and complement do not span");
        return raw;
    }
    Mat acc = chain;
    std::size_t r = rank_of(acc);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < raw.cols() && keep.size() < want; ++j) {
        Mat cand = Mat::hcat(acc, raw.col(j));
        if (rank_of(cand) > r) {
            keep.push_back(j);
            acc = cand;
            ++r;
        }
    }
    if (keep.size() != want)
        fail("InternalInvariantViolation", "could not complete chain to a basis");
    Mat out(p.field, p.n, want);
    for (std::size_t j = 0; j < want; ++j) out.set_col(j, raw.col(keep[j]));
    return out;
}

// Completes a terminating f-chain to a full Kronecker block basis: e_i solve
// A(e_i, f_j) = delta_{j, i-1}; the B pairings then hold identically because
// B f_j = A f_{j-1} as vectors, and a final f-span correction clears the e-e
// pairings.
Mat kron_basis_from_fchain(const Pencil& p, const std::vector<Mat>& fs) {
    const FieldDescriptor f = p.field;
    std::size_t n = p.n;
    std::size_t k = fs.size() - 1;
    Mat fmat = cols_to_mat(f, n, fs);
    if (!(congruence(fmat, p.A)).is_zero() || !(congruence(fmat, p.B)).is_zero())
        fail("InternalInvariantViolation", "f-chain span is not isotropic");
    if (k == 0) return fmat;

    // Joint system on the stacked e_1..e_k: the pairing rows A(e_i, f_j) =
    // delta_{j,i-1} plus the vector identities A e_{i+1} = B e_i. The latter
    // collapse the pairing covectors of the e's to k+1 classes, which is what
    // makes the chain span a direct summand; solving the pairings alone lets
    // the free components of the e's pair with the rest of the space and the
    // biorthogonal complement comes out short.
    std::size_t nrows = k * k + (k - 1) * n;
    Mat sys(f, nrows, k * n);
    Mat rhs(f, nrows, 1);
    std::size_t r = 0;
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 0; j < k; ++j, ++r) {
            Mat af = p.A * fs[j];
            for (std::size_t c = 0; c < n; ++c) sys.at(r, (i - 1) * n + c) = af.at(c, 0);
            if (j == i - 1) rhs.at(r, 0) = Scalar::one(f);
        }
    for (std::size_t i = 1; i + 1 <= k; ++i)
        for (std::size_t rr = 0; rr < n; ++rr, ++r)
            for (std::size_t c = 0; c < n; ++c) {
                sys.at(r, i * n + c) = p.A.at(rr, c);
                sys.at(r, (i - 1) * n + c) = Scalar::zero(f) - p.B.at(rr, c);
            }
    auto sol = solve(sys, rhs);
    if (!sol) fail("InternalInvariantViolation", "e-system inconsistent");
    std::vector<Mat> es;
    for (std::size_t i = 0; i < k; ++i) {
        Mat ei(f, n, 1);
        for (std::size_t rr = 0; rr < n; ++rr) ei.at(rr, 0) = sol->at(i * n + rr, 0);
        es.push_back(ei);
    }

    // Correction e_i += sum_m c_{i,m} f_m with c solving the pairwise
    // isotropy equations; the system is always consistent.
    std::size_t nvars = k * (k + 1);
    auto var = [&](std::size_t i, std::size_t m) { return (i - 1) * (k + 1) + m; };
    std::vector<std::vector<Scalar>> sys_rows;
    std::vector<Scalar> rhs_vals;
    Mat emat = cols_to_mat(f, n, es);
    Mat gram_a = congruence(emat, p.A);
    Mat gram_b = congruence(emat, p.B);
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j) {
            std::vector<Scalar> ra(nvars, Scalar::zero(f));
            ra[var(j, i - 1)] = Scalar::one(f);
            ra[var(i, j - 1)] = Scalar::zero(f) - Scalar::one(f);
            sys_rows.push_back(std::move(ra));
            rhs_vals.push_back(Scalar::zero(f) - gram_a.at(i - 1, j - 1));
            std::vector<Scalar> rb(nvars, Scalar::zero(f));
            rb[var(j, i)] = Scalar::one(f);
            rb[var(i, j)] = Scalar::zero(f) - Scalar::one(f);
            sys_rows.push_back(std::move(rb));
            rhs_vals.push_back(Scalar::zero(f) - gram_b.at(i - 1, j - 1));
        }
    if (!sys_rows.empty()) {
        Mat sys = Mat::from_rows(f, sys_rows);
        Mat rhs(f, rhs_vals.size(), 1);
        for (std::size_t i = 0; i < rhs_vals.size(); ++i) rhs.at(i, 0) = rhs_vals[i];
        auto c_opt = solve(sys, rhs);
        if (!c_opt) fail("InternalInvariantViolation", "e-e correction inconsistent");
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t m = 0; m <= k; ++m) {
                Scalar cim = c_opt->at(var(i, m), 0);
                if (!cim.is_zero()) es[i - 1] = es[i - 1] + fs[m].scaled(cim);
            }
    }
    std::vector<Mat> split = es;
    for (const auto& fv : fs) split.push_back(fv);
    return cols_to_mat(f, n, split);
}

// Stable limit of U_1 = Ker B, U_{j+1} = { v : B v in span(A U_j) }. With no
// Kronecker blocks left this is the span of the jordan_inf part, where A is
// nondegenerate and A^{-1} B is nilpotent.
Mat wong_limit(const Pencil& p) {
    Mat u = kernel_basis(p.B);
    for (;;) {
        Mat stacked = Mat::hcat(p.B, p.A * u);
        Mat kb = kernel_basis(stacked);
        Mat vpart(p.field, p.n, kb.cols());
        for (std::size_t i = 0; i < p.n; ++i)
            for (std::size_t j = 0; j < kb.cols(); ++j) vpart.at(i, j) = kb.at(i, j);
        Mat next = colspace_basis(vpart);
        if (next.cols() == u.cols()) return next;
        u = next;
    }
}

}  // namespace

NilpotentChains nilpotent_jordan_block(const Mat& n_op, const Mat& b_form) {
    if (!n_op.is_square() || !b_form.is_square() || n_op.rows() != b_form.rows())
        fail("DimensionMismatch", "operator and form sizes differ");
    if (n_op.field() != b_form.field())
        fail("MixedFields", "operator and form over different fields");
    const FieldDescriptor f = n_op.field();
    std::size_t d = n_op.rows();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            if (b_form.at(i, j) + b_form.at(j, i) != Scalar::zero(f) ||
                (i == j && !b_form.at(i, i).is_zero()))
                throw NotSkewError('B', i, j);
    if (rank_of(b_form) != d) fail("Singular", "form must be nondegenerate");
    if (n_op.transpose() * b_form != b_form * n_op)
        fail("NotSelfAdjoint", "operator is not self-adjoint for the form");
    {
        Mat power = Mat::identity(f, d);
        std::size_t e = 0;
        while (e < d && !(power = power * n_op).is_zero()) ++e;
        if (e == d && d > 0 && !power.is_zero())
            fail("NotNilpotent", "operator power did not vanish");
    }

    NilpotentChains out;
    Mat s = Mat::identity(f, d);
    while (s.cols() > 0) {
        std::size_t u = s.cols();
        auto x_opt = solve(s, n_op * s);
        if (!x_opt) fail("InternalInvariantViolation", "subspace not operator-invariant");
        Mat x = *x_opt;
        Mat bw = congruence(s, b_form);

        std::vector<Mat> powers{Mat::identity(f, u)};
        while (!powers.back().is_zero()) powers.push_back(powers.back() * x);
        std::size_t m = powers.size() - 1;  // minimal with x^m == 0

        std::size_t lead = u;
        for (std::size_t j = 0; j < u && lead == u; ++j) {
            for (std::size_t i = 0; i < u; ++i)
                if (!powers[m - 1].at(i, j).is_zero()) {
                    lead = j;
                    break;
                }
        }
        if (lead == u) fail("InternalInvariantViolation", "no vector of maximal height");

        std::vector<Mat> chain_cols;
        for (std::size_t i = 0; i < m; ++i) chain_cols.push_back(powers[i].col(lead));
        Mat rows(f, m, u);
        for (std::size_t i = 0; i < m; ++i) {
            Mat r = chain_cols[i].transpose() * bw;
            for (std::size_t c = 0; c < u; ++c) rows.at(i, c) = r.at(0, c);
        }
        Mat rhs(f, m, 1);
        rhs.at(m - 1, 0) = Scalar::one(f);
        auto fm_opt = solve(rows, rhs);
        if (!fm_opt) fail("InternalInvariantViolation", "dual vector system inconsistent");
        for (std::size_t i = 0; i < m; ++i)
            chain_cols.push_back(powers[m - 1 - i] * *fm_opt);

        Mat chain_u = cols_to_mat(f, u, chain_cols);
        Mat gram = congruence(chain_u, bw);
        Mat expect(f, 2 * m, 2 * m);
        for (std::size_t i = 0; i < m; ++i) {
            expect.at(i, m + i) = Scalar::one(f);
            expect.at(m + i, i) = Scalar::zero(f) - Scalar::one(f);
        }
        if (gram != expect)
            fail("InternalInvariantViolation", "chain pairing table not symplectic");
        out.chains.push_back(s * chain_u);

        Mat w = kernel_basis(chain_u.transpose() * bw);
        if (w.cols() != u - 2 * m)
            fail("InternalInvariantViolation", "orthogonal complement has wrong width");
        s = s * w;
    }
    return out;
}

std::vector<std::pair<Scalar, Mat>> regular_eigensplit(const Pencil& p) {
    const FieldDescriptor f = p.field;
    Mat pm = inverse(p.B) * p.A;
    Poly cp = char_poly(pm);
    RootReport rr = roots_in_field(cp);
    if (rr.remainder.degree() > 0)
        throw SplitFailureError(squarefree_part(rr.remainder),
                                squarefree_degree_hints(rr.remainder));
    std::vector<std::pair<Scalar, Mat>> out;
    std::size_t total = 0;
    for (const auto& [lam, mult] : rr.roots) {
        Mat shifted = pm - Mat::identity(f, p.n).scaled(lam);
        Mat e = kernel_basis(mat_pow(shifted, mult));
        if (e.cols() != mult)
            fail("InternalInvariantViolation", "eigenspace width differs from multiplicity");
        if (mult % 2 != 0)
            fail("InternalInvariantViolation", "odd eigenvalue multiplicity");
        total += mult;
        out.emplace_back(lam, e);
    }
    if (total != p.n)
        fail("InternalInvariantViolation", "eigenspace widths do not sum to n");
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!(out[i].second.transpose() * p.B * out[j].second).is_zero())
                fail("InternalInvariantViolation", "eigenspaces are not B-orthogonal");
    return out;
}

Extraction extract_degenerate_block(const Pencil& p) {
    if (kernel_basis(p.B).cols() == 0)
        fail("PreconditionBNondegenerate", "B is nondegenerate; nothing to extract");
    ExtractionTrace trace;
    auto greedy = try_greedy(p, trace);
    if (greedy) {
        std::string why;
        if (extraction_checks(p, greedy->chain_split, greedy->block,
                              greedy->complement, &why))
            return Extraction{greedy->chain_split, greedy->block, greedy->complement,
                              std::move(trace)};
        trace.steps.push_back({"check", why, greedy->chain_split.cols(),
                               greedy->complement.cols()});
    }
    trace.used_fallback = true;

    // Kernel-chain fallback: smallest terminating f-chain gives the smallest
    // Kronecker block present; if none exists, the degeneracy of B comes from
    // jordan_inf blocks, reachable through the stabilized kernel sequence.
    for (std::size_t k = 0; p.n >= 1 && 2 * k + 1 <= p.n; ++k) {
        auto fs = kron_chain_at(p, k);
        if (!fs) continue;
        trace.steps.push_back({"fallback", "terminating f-chain found, k = " +
                                               std::to_string(k),
                               k + 1, 0});
        Mat chain = kron_basis_from_fchain(p, *fs);
        Block block = Block::kronecker(p.field, k);
        Mat comp = complement_for(p, chain);
        std::string why;
        if (!extraction_checks(p, chain, block, comp, &why))
            fail("InternalInvariantViolation", "fallback kronecker: " + why);
        return Extraction{std::move(chain), block, std::move(comp), std::move(trace)};
    }

    Mat vinf = wong_limit(p);
    trace.steps.push_back({"fallback", "no terminating f-chain; stabilized kernel "
                                       "sequence has width " +
                                           std::to_string(vinf.cols()),
                           0, vinf.cols()});
    Mat a_inf = congruence(vinf, p.A);
    if (rank_of(a_inf) != a_inf.rows())
        fail("InternalInvariantViolation", "A degenerate on the stabilized subspace");
    Mat b_inf = congruence(vinf, p.B);
    Mat n_op = inverse(a_inf) * b_inf;
    NilpotentChains chains = nilpotent_jordan_block(n_op, a_inf);
    if (chains.chains.empty())
        fail("InternalInvariantViolation", "no chain on a nonzero subspace");
    Mat chain = vinf * chains.chains[0];
    Block block = Block::jordan_inf(p.field, chain.cols() / 2);
    Mat comp = complement_for(p, chain);
    std::string why;
    if (!extraction_checks(p, chain, block, comp, &why))
        fail("InternalInvariantViolation", "fallback jordan_inf: " + why);
    return Extraction{std::move(chain), block, std::move(comp), std::move(trace)};
}

DecomposeResult decompose(const Mat& a, const Mat& b) {
    Pencil p0 = validate_pencil(a, b);
    const FieldDescriptor f = p0.field;
    std::size_t n = p0.n;

    struct Rec {
        Block block;
        Mat cols;
    };
    std::vector<Rec> recs;
    std::vector<ExtractionTrace> traces;

    Mat c = Mat::identity(f, n);
    Pencil cur = p0;
    while (cur.n > 0 && kernel_basis(cur.B).cols() > 0) {
        Extraction ex = extract_degenerate_block(cur);
        recs.push_back({ex.block, c * ex.chain});
        traces.push_back(ex.trace);
        c = c * ex.complement;
        cur = restrict_pencil(p0, c);
    }

    if (cur.n > 0) {
        try {
            auto eig = regular_eigensplit(cur);
            Mat pm = inverse(cur.B) * cur.A;
            for (const auto& [lam, e] : eig) {
                Mat shifted_e = (pm - Mat::identity(f, cur.n).scaled(lam)) * e;
                auto x_opt = solve(e, shifted_e);
                if (!x_opt)
                    fail("InternalInvariantViolation", "eigenspace not invariant");
                Mat bw = congruence(e, cur.B);
                NilpotentChains chains = nilpotent_jordan_block(*x_opt, bw);
                for (const auto& ch : chains.chains)
                    recs.push_back({Block::jordan(lam, ch.cols() / 2), c * (e * ch)});
            }
        } catch (SplitFailureError& err) {
            err.has_partial = true;
            for (const auto& rec : recs) {
                err.partial_blocks.push_back(rec.block);
                err.partial_chains.push_back(rec.cols);
            }
            err.residual = {c, cur.A, cur.B};
            throw;
        }
    }

    std::stable_sort(recs.begin(), recs.end(),
                     [](const Rec& x, const Rec& y) { return block_less(x.block, y.block); });
    std::size_t total = 0;
    for (const auto& rec : recs) total += rec.block.dim();
    if (total != n) fail("InternalInvariantViolation", "block dimensions do not sum to n");

    Mat t(f, n, 0);
    std::vector<Block> blocks;
    std::vector<BlockRange> ranges;
    std::size_t off = 0;
    for (const auto& rec : recs) {
        t = Mat::hcat(t, rec.cols);
        blocks.push_back(rec.block);
        ranges.push_back({off, off + rec.block.dim()});
        off += rec.block.dim();
    }
    if (rank_of(t) != n) fail("InternalInvariantViolation", "basis is singular");
    Pencil canon = assemble(f, blocks, BasisOrdering::Split);
    if (congruence(t, a) != canon.A || congruence(t, b) != canon.B)
        fail("InternalInvariantViolation", "congruence does not reproduce the canonical form");
    return DecomposeResult{Decomposition{f, n, std::move(t), std::move(blocks),
                                         std::move(ranges)},
                           std::move(traces)};
}

VerifyReport verify(const Mat& a, const Mat& b, const Decomposition& d,
                    BasisOrdering ordering) {
    VerifyReport rep;
    auto flag = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };
    try {
        validate_pencil(a, b);
    } catch (const Error& e) {
        flag(std::string("pencil: ") + e.kind());
        return rep;
    }
    if (d.field != a.field()) {
        flag("field mismatch between pencil and decomposition");
        return rep;
    }
    if (d.n != a.rows()) {
        flag("dimension mismatch between pencil and decomposition");
        return rep;
    }
    if (d.T.rows() != d.n || d.T.cols() != d.n) {
        flag("basis matrix is not n x n");
        return rep;
    }
    if (rank_of(d.T) != d.n) flag("basis matrix is singular");
    if (d.blocks.size() != d.ranges.size()) {
        flag("block and range counts differ");
        return rep;
    }
    std::size_t off = 0;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        if (d.ranges[i].begin != off || d.ranges[i].end != off + d.blocks[i].dim())
            flag("range " + std::to_string(i) + " is not contiguous with block sizes");
        off = d.ranges[i].begin + d.blocks[i].dim();
    }
    if (off != d.n) flag("ranges do not cover the basis columns");
    for (std::size_t i = 0; i + 1 < d.blocks.size(); ++i)
        if (block_less(d.blocks[i + 1], d.blocks[i]))
            flag("blocks are not in canonical order at index " + std::to_string(i));
    Pencil canon = assemble(d.field, d.blocks, ordering);
    if (canon.n == d.n && d.T.rows() == d.n && d.T.cols() == d.n) {
        if (congruence(d.T, a) != canon.A) flag("A congruence identity fails");
        if (congruence(d.T, b) != canon.B) flag("B congruence identity fails");
    }
    return rep;
}

void canonical_sort(std::vector<Block>& blocks) {
    std::stable_sort(blocks.begin(), blocks.end(), block_less);
}

Decomposition reorder_basis(const Decomposition& d, BasisOrdering ordering) {
    if (ordering == BasisOrdering::Split) return d;
    Decomposition out = d;
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        auto perm = block_basis_permutation(d.blocks[bi], ordering);
        std::size_t base = d.ranges[bi].begin;
        for (std::size_t q = 0; q < perm.size(); ++q)
            out.T.set_col(base + q, d.T.col(base + perm[q]));
    }
    return out;
}

}  // namespace skewpencil
