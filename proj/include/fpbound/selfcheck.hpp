#pragma once
/*
 *  Invariant checks over the corpus and randomized algebra suites.
 */

#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fpbound/bounds.hpp"
#include "fpbound/corpus.hpp"
#include "fpbound/exactalg.hpp"
#include "fpbound/floer.hpp"

namespace fpbound::selfcheck {

struct InstanceResult
{
    bool flagged = false; // faces a rotated pseudo-Anosov boundary; excluded from the oracle comparison
    int A = 0;
    int B = 0;
    bool order_reversed = false; // theorem2 > theorem1, possible only through fixed annuli
    std::vector<std::string> violations;
};

namespace detail {

inline int abs_int(int x) { return x < 0 ? -x : x; }

} // namespace detail

/// Every per-description invariant; violations are returned as messages.
inline InstanceResult check_instance(desc::Description const& d)
{
    InstanceResult out;
    auto fail = [&](std::string msg) { out.violations.push_back(std::move(msg)); };

    desc::Description const e = desc::expand_twists(d);
    if (!(desc::expand_twists(e) == e))
        fail("expansion is not idempotent");
    if (!desc::validate(e).ok())
        fail("expanded description does not validate");
    if (e.euler_characteristic() != d.euler_characteristic())
        fail("expansion changed the Euler characteristic");

    Context const ctx(d);
    auto const& topo = ctx.topology();
    auto const& graph = ctx.homology.graph();
    int const g = graph.genus();
    int const b = static_cast<int>(graph.free_boundary.size());
    if (graph.euler_characteristic() != d.euler_characteristic())
        fail("shell Euler characteristics do not add up");
    if (static_cast<int>(ctx.homology.rank()) != 2 * g + std::max(0, b - 1))
        fail("H1 rank " + std::to_string(ctx.homology.rank()) + " differs from 2g + max(0, b-1) = " +
             std::to_string(2 * g + std::max(0, b - 1)));
    if (static_cast<int>(ctx.homology.relative_rank()) != 2 * g)
        fail("relative H1 image rank differs from 2g");

    // index bookkeeping
    int record_total = 0, class_total = 0;
    for (auto const& r : ctx.records)
        record_total += r.total_index();
    for (auto const& c : ctx.classes) {
        class_total += c.index;
        using nielsen::FixedPointKind;
        using nielsen::Provenance;
        switch (c.provenance) {
        case Provenance::FixedComponent: {
            auto const& s = topo.component(c.host);
            if (c.index != s.euler_characteristic() - c.abutting_prongs())
                fail(c.id + ": component class index is not chi(S) minus abutting prongs");
            break;
        }
        case Provenance::FixedAnnulus:
            if (c.index != 0)
                fail(c.id + ": fixed annulus class has nonzero index");
            break;
        case Provenance::SingularityCluster:
            if (c.members.size() != 1 || c.index != -(c.members[0].prongs - 1))
                fail(c.id + ": unrotated singularity class index is not -(p-1)");
            break;
        case Provenance::BoundaryCluster:
            if (c.index != -c.abutting_prongs())
                fail(c.id + ": prong boundary cluster index is not minus the total prongs");
            break;
        case Provenance::Isolated:
            if (c.members.size() != 1 || detail::abs_int(c.index) != 1)
                fail(c.id + ": isolated class index is not +-1");
            break;
        }
    }
    if (record_total != class_total)
        fail("grouping changed the total index");

    bounds::BoundsReport const r = bounds::analyze(ctx);
    out.A = r.A;
    out.flagged = r.flagged("pa_abutment_without_iiid");
    int abs_sum = 0, essential = 0;
    for (auto const& c : ctx.classes) {
        abs_sum += detail::abs_int(c.index);
        essential += c.index != 0;
    }
    if (r.theorem1 - abs_sum != 2 * r.A)
        fail("theorem1 - sum|ind| != 2A");
    if (r.theorem2 != essential + r.A + r.B)
        fail("theorem2 != essential + A + B");
    out.B = r.B;
    out.order_reversed = r.theorem2 > r.theorem1;
    if (r.theorem2 - r.B > r.theorem1)
        fail("theorem2 exceeds theorem1 without fixed annuli to account for it");
    if (essential > static_cast<int>(ctx.classes.size()) || r.reidemeister < detail::abs_int(class_total))
        fail("essential count or trace out of range");

    int witness_points = 0;
    for (auto const& cr : r.classes) {
        int sum = 0;
        for (auto const& p : cr.witness)
            sum += p.index;
        if (sum != cr.index)
            fail(cr.id + ": witness index sum " + std::to_string(sum) + " != class index " + std::to_string(cr.index));
        witness_points += static_cast<int>(cr.witness.size());
        if ((cr.floer_rank - detail::abs_int(cr.index)) % 2 != 0)
            fail(cr.id + ": Floer rank parity differs from |ind|");
    }
    if (witness_points != r.theorem2)
        fail("witness point count " + std::to_string(witness_points) + " != theorem2 " + std::to_string(r.theorem2));

    for (std::size_t i = 0; i < ctx.classes.size(); ++i) {
        auto const& c = ctx.classes[i];
        if (c.provenance != nielsen::Provenance::FixedComponent)
            continue;
        int const expect = detail::abs_int(c.index) + (bounds::floer_jump_predicate(ctx, c) ? 2 : 0);
        if (r.classes[i].floer_rank != expect)
            fail(c.id + ": summand rank " + std::to_string(r.classes[i].floer_rank) + " != rank-jump prediction " +
                 std::to_string(expect));
    }

    if (!out.flagged && r.floer_total != r.theorem1)
        fail("Floer total " + std::to_string(r.floer_total) + " != theorem1 " + std::to_string(r.theorem1));

    if (r.classification == bounds::Classification::Periodic && d.components.front().is_periodic())
        for (auto const& c : ctx.classes)
            if (c.index != 1)
                fail(c.id + ": periodic map with a class of index != 1");

    bool const all_identity = e.annuli.empty() && e.components.size() == 1 && e.components.front().is_identity();
    if (all_identity && (ctx.classes.size() != 1 || ctx.classes.front().index != d.euler_characteristic()))
        fail("identity map does not give a single class of index chi");
    return out;
}

struct SweepSummary
{
    corpus::CorpusStats stats;
    std::size_t checked = 0;
    std::size_t flagged = 0;
    std::size_t plus_two_branch = 0; // instances with A > 0
    std::size_t plain_branch = 0;    // instances with A == 0
    std::size_t order_reversed = 0; // theorem2 > theorem1 (every one has B > 0)
    std::string first_order_reversed;
    std::size_t violations = 0;
    std::vector<std::string> first_violations;
    double seconds = 0;
};

inline SweepSummary sweep(corpus::CorpusConfig const& cfg, std::size_t keep = 10)
{
    SweepSummary s;
    auto const t0 = std::chrono::steady_clock::now();
    s.stats = corpus::for_each_instance(cfg, [&](std::string const& name, desc::Description const& d) {
        ++s.checked;
        InstanceResult r;
        try {
            r = check_instance(d);
        } catch (std::exception const& ex) {
            r.violations.push_back(std::string("exception: ") + ex.what());
        }
        if (r.order_reversed && s.order_reversed++ == 0)
            s.first_order_reversed = name;
        if (r.flagged)
            ++s.flagged;
        else if (r.A > 0)
            ++s.plus_two_branch;
        else
            ++s.plain_branch;
        if (!r.violations.empty()) {
            ++s.violations;
            for (auto const& v : r.violations)
                if (s.first_violations.size() < keep)
                    s.first_violations.push_back(name + ": " + v);
        }
    });
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

/// Randomized algebra checks.
struct AlgebraSummary
{
    std::size_t specialization_trials = 0;
    std::size_t smith_trials = 0;
    std::size_t rank_trials = 0;
    std::vector<std::string> failures;
    double seconds = 0;
    bool ok() const { return failures.empty(); }
};

inline exact::LaurentPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int max_terms, int lo, int hi)
{
    std::uniform_int_distribution<int> nterms(0, max_terms), ex(lo, hi);
    std::vector<exact::Exponent> terms;
    int const n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        exact::Exponent e(nvars);
        for (auto& x : e)
            x = ex(rng);
        terms.push_back(e);
    }
    return exact::LaurentPoly(nvars, terms);
}

inline exact::LaurentMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t nvars,
                                          int max_terms = 4)
{
    exact::LaurentMatrix m(rows, cols, nvars);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, random_poly(rng, nvars, max_terms, -1, 1));
    return m;
}

/// Specialization never raises matrix rank nor lowers homology rank of the
/// two-term complex F^cols -> F^rows.
inline void specialization_suite(std::mt19937_64& rng, std::size_t trials, AlgebraSummary& out)
{
    std::uniform_int_distribution<std::size_t> dim(1, 6), nv(1, 3);
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t const rows = dim(rng), cols = dim(rng), nvars = nv(rng);
        exact::LaurentMatrix m = random_matrix(rng, rows, cols, nvars);
        if (t % 3 == 0 && rows > 1) {
            // plant a dependency that specialization must respect
            auto f = random_poly(rng, nvars, 2, -1, 1);
            for (std::size_t j = 0; j < cols; ++j)
                m.set(rows - 1, j, m(0, j) * f);
        }
        std::set<std::size_t> kill;
        for (std::size_t v = 0; v < nvars; ++v)
            if (rng() & 1)
                kill.insert(v);
        if (kill.empty())
            kill.insert(rng() % nvars);
        std::size_t const before = exact::rank_fraction_field(m);
        std::size_t const after = exact::rank_fraction_field(exact::specialize(m, kill));
        std::size_t const dim_total = rows + cols;
        if (after > before || dim_total - 2 * after < dim_total - 2 * before) {
            std::ostringstream os;
            os << "specialization raised rank " << before << " -> " << after << " on " << m;
            out.failures.push_back(os.str());
        }
        if (exact::rank_bareiss(m) != before)
            out.failures.push_back("evaluation and elimination ranks disagree");
        ++out.specialization_trials;
    }
}

inline exact::Int det(exact::IntMatrix const& m)
{
    std::size_t const n = m.rows();
    if (n == 0)
        return 1;
    exact::Int s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        exact::IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(i - 1, cc++) = m(i, c);
        s += (j % 2 ? -1 : 1) * m(0, j) * det(minor);
    }
    return s;
}

/// Smith invariants against gcds of k x k minors.
inline void smith_suite(std::mt19937_64& rng, std::size_t trials, AlgebraSummary& out)
{
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    std::uniform_int_distribution<exact::Int> entry(-3, 3);
    for (std::size_t t = 0; t < trials; ++t) {
        exact::IntMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = entry(rng);
        auto const snf = exact::smith_normal_form(m);
        if (!(snf.U * m * snf.V == snf.D))
            out.failures.push_back("Smith transforms do not reproduce D");
        exact::Int prefix = 1;
        std::size_t const kmax = std::min(m.rows(), m.cols());
        for (std::size_t k = 1; k <= kmax; ++k) {
            exact::Int gk = 0;
            std::vector<bool> rs(m.rows(), false), cs(m.cols(), false);
            std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(k), true);
            do {
                std::fill(cs.begin(), cs.end(), false);
                std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k), true);
                do {
                    exact::IntMatrix sub(k, k);
                    for (std::size_t i = 0, si = 0; i < m.rows(); ++i) {
                        if (!rs[i])
                            continue;
                        for (std::size_t j = 0, sj = 0; j < m.cols(); ++j)
                            if (cs[j])
                                sub(si, sj++) = m(i, j);
                        ++si;
                    }
                    gk = std::gcd(gk, det(sub));
                } while (std::prev_permutation(cs.begin(), cs.end()));
            } while (std::prev_permutation(rs.begin(), rs.end()));
            exact::Int const expect = k <= snf.rank() ? prefix * snf.invariants[k - 1] : 0;
            if (gk != expect) {
                std::ostringstream os;
                os << "Smith invariants disagree with minor gcds on " << m;
                out.failures.push_back(os.str());
                break;
            }
            if (k <= snf.rank())
                prefix *= snf.invariants[k - 1];
        }
        ++out.smith_trials;
    }
}

/// Rank invariance under permutations and monomial row scaling.
inline void rank_suite(std::mt19937_64& rng, std::size_t trials, AlgebraSummary& out)
{
    std::uniform_int_distribution<std::size_t> dim(1, 5), nv(1, 3);
    std::uniform_int_distribution<int> shift(-3, 3);
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t const rows = dim(rng), cols = dim(rng), nvars = nv(rng);
        auto m = random_matrix(rng, rows, cols, nvars, 3);
        std::size_t const r = exact::rank_fraction_field(m);
        auto p = m;
        p.swap_rows(0, rng() % rows);
        p.swap_cols(0, rng() % cols);
        exact::Exponent by(nvars);
        for (auto& x : by)
            x = shift(rng);
        p.shift_row(rng() % rows, by);
        if (r > std::min(rows, cols) || exact::rank_fraction_field(p) != r)
            out.failures.push_back("rank changed under permutation or monomial scaling");
        ++out.rank_trials;
    }
}

inline AlgebraSummary algebra(std::uint64_t seed, std::size_t trials = 1000)
{
    AlgebraSummary out;
    auto const t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(seed);
    specialization_suite(rng, trials, out);
    smith_suite(rng, trials / 2, out);
    rank_suite(rng, trials / 2, out);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace fpbound::selfcheck
