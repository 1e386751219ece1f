#include "nbly/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nbly/errors.hpp"
#include "nbly/graph.hpp"
#include "nbly/render.hpp"

namespace nbly::harness {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

/* Captures the first exception thrown inside a parallel loop body so it can
 * be rethrown after the region instead of escaping an OpenMP thread. */
class FirstException {
public:
    template <class F>
    void run(F&& body) noexcept {
        if (failed_.load(std::memory_order_relaxed)) return;
        try {
            body();
        } catch (...) {
            bool expected = false;
            if (failed_.compare_exchange_strong(expected, true))
                eptr_ = std::current_exception();
        }
    }

    void rethrow() const {
        if (failed_.load() && eptr_) std::rethrow_exception(eptr_);
    }

private:
    std::atomic<bool> failed_{false};
    std::exception_ptr eptr_;
};

std::string signed_str(long long v) {
    return (v >= 0 ? "+" : "") + std::to_string(v);
}

/* Index-tagged mismatches collected by worker threads; merging and sorting
 * by enumeration index keeps reports deterministic under any schedule. */
using TaggedMismatches = std::vector<std::pair<long long, Mismatch>>;

void finalize_mismatches(TaggedMismatches& tagged, Report& r) {
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [idx, m] : tagged) r.mismatches.push_back(std::move(m));
    r.pass = r.mismatches.empty();
}

void add_series_mismatches(Report& r, const std::string& tag, const Series& lhs,
                           const Series& rhs) {
    const SeriesDiff d = compare(lhs, rhs);
    if (!d.match) {
        r.mismatches.push_back({tag + " q^" + std::to_string(d.exponent),
                                std::to_string(d.lhs), std::to_string(d.rhs)});
        r.pass = false;
    }
}

void accumulate_signed(Series& acc, const NeighborlyPartition& np, int min_part,
                       int n_parts_filter) {
    if (!np.mu1.empty() && np.mu1.front() < min_part) return;
    if (n_parts_filter >= 0 && part_count(np) != n_parts_filter) return;
    const auto [sig, diag] = signature_closed(build_graph(np));
    if (sig != 0) acc.add_coeff(static_cast<int>(weight(np)), sig);
}

}  // namespace

namespace reference {

Series signed_sum(int max_weight, int min_part, long long count_cap) {
    Series acc(max_weight);
    for_each_neighborly(
        max_weight,
        [&](const NeighborlyPartition& np) { accumulate_signed(acc, np, min_part, -1); },
        count_cap);
    return acc;
}

Series gf_by_parts(int n_parts, int max_weight, long long count_cap) {
    if (n_parts < 0) throw std::invalid_argument("n_parts must be >= 0");
    Series acc(max_weight);
    for_each_neighborly(
        max_weight,
        [&](const NeighborlyPartition& np) { accumulate_signed(acc, np, 1, n_parts); },
        count_cap);
    return acc;
}

std::map<std::pair<int, int>, Series> edgevertex_buckets(int max_weight,
                                                         long long count_cap) {
    std::map<std::pair<int, int>, Series> buckets;
    for_each_neighborly(
        max_weight,
        [&](const NeighborlyPartition& np) {
            const auto g = build_graph(np);
            const auto [sig, diag] = signature_closed(g);
            if (sig == 0) return;
            const int edges = prune(g).edge_count;
            auto [it, inserted] =
                buckets.try_emplace({part_count(np), edges}, Series(max_weight));
            it->second.add_coeff(static_cast<int>(weight(np)), sig);
        },
        count_cap);
    return buckets;
}

}  // namespace reference

Series signed_sum(int max_weight, int min_part, long long count_cap) {
#ifndef _OPENMP
    return reference::signed_sum(max_weight, min_part, count_cap);
#else
    const auto all = enumerate_neighborly(max_weight, count_cap);
    Series acc(max_weight);
    FirstException guard;
#pragma omp parallel
    {
        Series local(max_weight);
#pragma omp for schedule(static) nowait
        for (long long i = 0; i < static_cast<long long>(all.size()); ++i)
            guard.run([&] { accumulate_signed(local, all[i], min_part, -1); });
#pragma omp critical(nbly_signed_sum)
        acc += local;
    }
    guard.rethrow();
    return acc;
#endif
}

Series gf_by_parts(int n_parts, int max_weight, long long count_cap) {
    if (n_parts < 0) throw std::invalid_argument("n_parts must be >= 0");
#ifndef _OPENMP
    return reference::gf_by_parts(n_parts, max_weight, count_cap);
#else
    const auto all = enumerate_neighborly(max_weight, count_cap);
    Series acc(max_weight);
    FirstException guard;
#pragma omp parallel
    {
        Series local(max_weight);
#pragma omp for schedule(static) nowait
        for (long long i = 0; i < static_cast<long long>(all.size()); ++i)
            guard.run([&] { accumulate_signed(local, all[i], 1, n_parts); });
#pragma omp critical(nbly_gf_by_parts)
        acc += local;
    }
    guard.rethrow();
    return acc;
#endif
}

std::map<std::pair<int, int>, Series> edgevertex_buckets(int max_weight,
                                                         long long count_cap) {
#ifndef _OPENMP
    return reference::edgevertex_buckets(max_weight, count_cap);
#else
    const auto all = enumerate_neighborly(max_weight, count_cap);
    std::map<std::pair<int, int>, Series> buckets;
    FirstException guard;
#pragma omp parallel
    {
        std::map<std::pair<int, int>, Series> local;
#pragma omp for schedule(static) nowait
        for (long long i = 0; i < static_cast<long long>(all.size()); ++i) {
            guard.run([&] {
                const auto& np = all[i];
                const auto g = build_graph(np);
                const auto [sig, diag] = signature_closed(g);
                if (sig == 0) return;
                const int edges = prune(g).edge_count;
                auto [it, inserted] =
                    local.try_emplace({part_count(np), edges}, Series(max_weight));
                it->second.add_coeff(static_cast<int>(weight(np)), sig);
            });
        }
#pragma omp critical(nbly_edgevertex_buckets)
        for (auto& [key, series] : local) {
            auto [it, inserted] = buckets.try_emplace(key, Series(max_weight));
            it->second += series;
        }
    }
    guard.rethrow();
    return buckets;
#endif
}

Report check_chain_signs(int nmax) {
    Timer timer;
    Report r;
    r.check = "chain-signs";
    r.params = {{"nmax", nmax}};
    for (int n = 1; n <= nmax; ++n) {
        const auto poly = chain_poly(n);
        Coeff at_minus_one = 0;
        for (std::size_t i = 0; i < poly.size(); ++i)
            at_minus_one += (i % 2 == 0) ? poly[i] : -poly[i];
        const int expected[] = {0, -1, 1};  // indexed by n mod 3
        if (chain_sign(n) != expected[n % 3] || at_minus_one != chain_sign(n)) {
            r.mismatches.push_back({"n=" + std::to_string(n),
                                    std::to_string(at_minus_one),
                                    std::to_string(chain_sign(n))});
        }
    }
    /* B_5(x) = x^3 + 3x^4 + x^5: forest counts (1,3,1) and B_5 = 1. */
    if (nmax >= 5 && chain_poly(5) != std::vector<Coeff>{0, 0, 0, 1, 3, 1})
        r.mismatches.push_back({"B_5 coefficients", "(1,3,1)", "other"});
    r.pass = r.mismatches.empty();
    r.counts["lengths"] = nmax;
    r.seconds = timer.elapsed();
    return r;
}

Report check_signature_consistency(int max_weight, bool perturb_closed_form, Exec exec,
                                   long long count_cap) {
    Timer timer;
    Report r;
    r.check = "signatures";
    r.params = {{"max_weight", max_weight}, {"perturbed", perturb_closed_form}};
    const auto all = enumerate_neighborly(max_weight, count_cap);
    TaggedMismatches tagged;
    FirstException guard;

    auto body = [&](long long i, TaggedMismatches& out) {
        const auto& np = all[i];
        const auto g = build_graph(np);
        const int brute = signature_bruteforce(g);
        int closed = signature_closed(g).first;
        if (perturb_closed_form) closed = -closed;
        int product = 1;
        for (const auto& c : g.components) product *= component_signature_product(c);
        if (brute != closed || brute != product) {
            out.push_back({i,
                           {format_partition(np), "bruteforce " + signed_str(brute),
                            "closed " + signed_str(closed) + ", product " +
                                signed_str(product)}});
        }
    };

    if (exec == Exec::serial) {
        for (long long i = 0; i < static_cast<long long>(all.size()); ++i)
            body(i, tagged);
    } else {
#ifdef _OPENMP
#pragma omp parallel
        {
            TaggedMismatches local;
#pragma omp for schedule(dynamic, 64) nowait
            for (long long i = 0; i < static_cast<long long>(all.size()); ++i)
                guard.run([&] { body(i, local); });
#pragma omp critical(nbly_sig_consistency)
            tagged.insert(tagged.end(), local.begin(), local.end());
        }
        guard.rethrow();
#else
        for (long long i = 0; i < static_cast<long long>(all.size()); ++i)
            body(i, tagged);
#endif
    }
    finalize_mismatches(tagged, r);
    r.counts["partitions"] = static_cast<long long>(all.size());
    r.seconds = timer.elapsed();
    return r;
}

Report check_prune_consistency(int max_weight, Exec exec, long long count_cap) {
    Timer timer;
    Report r;
    r.check = "prune";
    r.params = {{"max_weight", max_weight}};
    const auto all = enumerate_neighborly(max_weight, count_cap);
    TaggedMismatches tagged;
    std::atomic<long long> admissible{0};
    FirstException guard;

    auto body = [&](long long i, TaggedMismatches& out) {
        const auto& np = all[i];
        const auto g = build_graph(np);
        if (signature_closed(g).second.zero_flag) return;
        admissible.fetch_add(1, std::memory_order_relaxed);
        const int expected = sign(np);
        const std::string where = format_partition(np);

        for (const PruneRule rule : {PruneRule::literal, PruneRule::example_consistent}) {
            const char* tag =
                rule == PruneRule::literal ? " [literal]" : " [example-consistent]";
            const auto pg = prune(g, rule);
            const int parity = pg.edge_count % 2 == 0 ? 1 : -1;
            if (parity != expected) {
                out.push_back({i,
                               {where + tag, "sign " + signed_str(expected),
                                "edge parity " + signed_str(parity)}});
            }
            try {
                classify_components(pg);
            } catch (const classify_error& e) {
                out.push_back({i, {where + tag, "six component types", e.what()}});
            }
        }

        /* Both deletion-rule variants remove the same number of edges from
         * every chain, and the kept-edge parity follows the length mod 3. */
        for (const auto& c : g.components) {
            for (int len : component_sig(c)) {
                const auto lit = chain_deletions(len, PruneRule::literal);
                const auto ex = chain_deletions(len, PruneRule::example_consistent);
                if (lit.size() != ex.size()) {
                    out.push_back({i,
                                   {where + " chain length " + std::to_string(len),
                                    std::to_string(lit.size()) + " deletions",
                                    std::to_string(ex.size()) + " deletions"}});
                }
                const int kept = len - static_cast<int>(lit.size());
                const bool want_odd = len % 3 == 1;
                if ((kept % 2 == 1) != want_odd) {
                    out.push_back({i,
                                   {where + " chain length " + std::to_string(len),
                                    want_odd ? "odd kept edges" : "even kept edges",
                                    std::to_string(kept) + " kept"}});
                }
            }
        }
    };

    if (exec == Exec::serial) {
        for (long long i = 0; i < static_cast<long long>(all.size()); ++i)
            body(i, tagged);
    } else {
#ifdef _OPENMP
#pragma omp parallel
        {
            TaggedMismatches local;
#pragma omp for schedule(dynamic, 64) nowait
            for (long long i = 0; i < static_cast<long long>(all.size()); ++i)
                guard.run([&] { body(i, local); });
#pragma omp critical(nbly_prune_consistency)
            tagged.insert(tagged.end(), local.begin(), local.end());
        }
        guard.rethrow();
#else
        for (long long i = 0; i < static_cast<long long>(all.size()); ++i)
            body(i, tagged);
#endif
    }
    finalize_mismatches(tagged, r);
    r.counts["partitions"] = static_cast<long long>(all.size());
    r.counts["admissible"] = admissible.load();
    r.seconds = timer.elapsed();
    return r;
}

namespace {

Report check_rr_common(const std::string& name, int max_weight, int min_part,
                       const Series& product_form, const Series& sum_form,
                       const std::string& sum_label, long long count_cap) {
    Timer timer;
    Report r;
    r.check = name;
    r.params = {{"max_weight", max_weight}, {"min_part", min_part}};
    const Series enumerated = signed_sum(max_weight, min_part, count_cap);
    add_series_mismatches(r, "enumeration vs product:", enumerated, product_form);
    add_series_mismatches(r, "enumeration vs " + sum_label + ":", enumerated, sum_form);
    add_series_mismatches(r, "product vs " + sum_label + ":", product_form, sum_form);
    r.series = enumerated;
    r.seconds = timer.elapsed();
    return r;
}

}  // namespace

Report check_rr1(int max_weight, long long count_cap) {
    Report r = check_rr_common("rr1", max_weight, 1, rr1_product(max_weight),
                               rr1_bilateral(max_weight), "bilateral sum", count_cap);
    /* The weight-8 coefficient vanishes through a 2+2 cancellation. */
    if (max_weight >= 8) {
        long long pos = 0, neg = 0;
        for_each_neighborly(8, [&](const NeighborlyPartition& np) {
            if (weight(np) != 8 || !is_admissible(np)) return;
            (sign(np) > 0 ? pos : neg) += 1;
        });
        r.counts["q8_positive"] = pos;
        r.counts["q8_negative"] = neg;
        if (pos != 2 || neg != 2) {
            r.mismatches.push_back({"weight-8 cancellation", "2 positive, 2 negative",
                                    std::to_string(pos) + " positive, " +
                                        std::to_string(neg) + " negative"});
            r.pass = false;
        }
    }
    return r;
}

Report check_rr2(int max_weight, long long count_cap) {
    return check_rr_common("rr2", max_weight, 2, rr2_product(max_weight),
                           rr2_sum(max_weight), "sum form", count_cap);
}

Report check_gf(int nmax, int order, long long count_cap) {
    Timer timer;
    Report r;
    r.check = "gf";
    r.params = {{"nmax", nmax}, {"order", order}};

    /* One sweep fills every stratum: each admissible partition lands in
     * exactly one part-count bucket. */
    std::vector<Series> strata(static_cast<std::size_t>(nmax) + 1, Series(order));
    long long seen = 0;
    for_each_neighborly(
        order,
        [&](const NeighborlyPartition& np) {
            ++seen;
            const int parts = part_count(np);
            if (parts > nmax) return;
            const auto [sig, diag] = signature_closed(build_graph(np));
            if (sig != 0) strata[parts].add_coeff(static_cast<int>(weight(np)), sig);
        },
        count_cap);

    const auto gf = gf_sequence(nmax, order);
    const auto h = h_recurrence_sequence(nmax, order);
    const auto rhs = main_theorem_rhs(nmax, order);
    for (int n = 0; n <= nmax; ++n) {
        const std::string tag = "n=" + std::to_string(n);
        add_series_mismatches(r, tag + " enumeration vs recurrence:", strata[n], gf[n]);
        add_series_mismatches(r, tag + " recurrence vs H-recurrence:", gf[n], h[n]);
        add_series_mismatches(r, tag + " recurrence vs closed form:", gf[n], rhs.coeff_x(n));
    }
    r.counts["partitions"] = seen;
    r.seconds = timer.elapsed();
    return r;
}

namespace {

struct NonzeroCoeff {
    int x_degree;
    int q_degree;
    Coeff value;
};

std::optional<NonzeroCoeff> first_nonzero(const BivariateSeries& b) {
    for (int n = 0; n <= b.x_order(); ++n)
        for (int e = 0; e <= b.q_order(); ++e)
            if (b.coeff(n, e) != 0) return NonzeroCoeff{n, e, b.coeff(n, e)};
    return std::nullopt;
}

}  // namespace

Report check_functional(int x_order, int q_order, bool drop_qx_term) {
    Timer timer;
    Report r;
    r.check = "functional";
    r.params = {{"x_order", x_order}, {"q_order", q_order}, {"dropped_term", drop_qx_term}};
    const auto residual = functional_equation_residual(x_order, q_order, drop_qx_term);
    if (const auto nz = first_nonzero(residual)) {
        r.mismatches.push_back(
            {"residual x^" + std::to_string(nz->x_degree) + " q^" +
                 std::to_string(nz->q_degree),
             "0", std::to_string(nz->value)});
        r.pass = false;
    }
    r.seconds = timer.elapsed();
    return r;
}

Report check_classical(int x_order, int q_order) {
    Timer timer;
    Report r;
    r.check = "classical";
    r.params = {{"x_order", x_order}, {"q_order", q_order}};
    const auto lhs = classical_lhs(x_order, q_order);
    const auto rhs = main_theorem_rhs(x_order, q_order);
    const auto check = check_identity("classical-vs-closed", lhs, rhs);
    if (!check.match) {
        r.mismatches.push_back({"classical vs closed form " + check.first_mismatch, "", ""});
        r.pass = false;
    }
    /* x = 1 specialization: the slice sum collapses to the first
     * Rogers-Ramanujan numerator. */
    Series at_one(q_order);
    for (int n = 0; n <= rhs.x_order(); ++n) at_one += rhs.coeff_x(n);
    add_series_mismatches(r, "x=1 specialization vs rr1 product:", at_one,
                          rr1_product(q_order));
    r.seconds = timer.elapsed();
    return r;
}

Report check_edgevertex(int max_weight, int max_vertices, OddSign convention,
                        long long count_cap) {
    Timer timer;
    Report r;
    r.check = "edgevertex";
    r.params = {{"max_weight", max_weight},
                {"max_vertices", max_vertices},
                {"convention", odd_sign_name(convention)}};
    const auto buckets = edgevertex_buckets(max_weight, count_cap);

    auto bucket_or_zero = [&](int vertices, int edges) {
        const auto it = buckets.find({vertices, edges});
        return it == buckets.end() ? Series(max_weight) : it->second;
    };

    std::set<std::pair<int, int>> covered;
    int odd_mismatches[2] = {0, 0};  // by OddSign
    for (int vertices = 0; vertices <= max_vertices; ++vertices) {
        if (vertices % 2 == 0) {
            const int n = vertices / 2;
            for (int j = 0; 2 * j <= n; ++j) {
                covered.insert({vertices, n + j});
                add_series_mismatches(
                    r,
                    "bucket (" + std::to_string(vertices) + "," + std::to_string(n + j) +
                        ") vs even formula:",
                    bucket_or_zero(vertices, n + j), edgevertex_even(n, j, max_weight));
            }
        } else {
            const int n = (vertices - 1) / 2;
            for (int j = 0; 2 * j + 1 <= n; ++j) {
                covered.insert({vertices, n + j + 1});
                const Series bucket = bucket_or_zero(vertices, n + j + 1);
                for (const OddSign s : {OddSign::printed, OddSign::empirical}) {
                    if (!compare(bucket, edgevertex_odd(n, j, max_weight, s)).match)
                        ++odd_mismatches[s == OddSign::empirical ? 1 : 0];
                }
                add_series_mismatches(
                    r,
                    "bucket (" + std::to_string(vertices) + "," +
                        std::to_string(n + j + 1) + ") vs odd formula:",
                    bucket, edgevertex_odd(n, j, max_weight, convention));
            }
        }
    }
    for (const auto& [key, series] : buckets) {
        if (key.first > max_vertices || covered.count(key)) continue;
        if (series.valuation()) {
            r.mismatches.push_back({"bucket (" + std::to_string(key.first) + "," +
                                        std::to_string(key.second) + ")",
                                    "no formula stratum", "nonzero bucket"});
            r.pass = false;
        }
    }

    const std::string matched = odd_mismatches[1] == 0 && odd_mismatches[0] > 0
                                    ? odd_sign_name(OddSign::empirical)
                                    : odd_mismatches[0] == 0 && odd_mismatches[1] > 0
                                          ? odd_sign_name(OddSign::printed)
                                          : "ambiguous";
    r.params["matched_convention"] = matched;
    r.note = "odd-case sign convention matching the enumeration: " + matched;
    r.counts["buckets"] = static_cast<long long>(buckets.size());
    r.seconds = timer.elapsed();
    return r;
}

namespace {

Report negative_control(const std::string& name, Report inner) {
    Report r;
    r.check = name;
    r.params = std::move(inner.params);
    r.counts = std::move(inner.counts);
    r.seconds = inner.seconds;
    if (!inner.pass && !inner.mismatches.empty()) {
        r.pass = true;
        r.note = "perturbed run failed as required; first witness: " +
                 inner.mismatches.front().location;
    } else {
        r.pass = false;
        r.note = "perturbed run unexpectedly passed";
        r.mismatches.push_back({"perturbed " + inner.check, "FAIL with witnesses", "PASS"});
    }
    return r;
}

}  // namespace

std::vector<std::string> all_check_names() {
    return {"chain-signs", "signatures",          "prune",
            "rr1",         "rr2",                 "gf",
            "functional",  "classical",           "edgevertex",
            "negative-control-signature",         "negative-control-functional"};
}

std::vector<Report> run_all(const RunConfig& config) {
    std::vector<Report> reports;
    for (const std::string& name : config.checks) {
        if (name == "chain-signs") {
            reports.push_back(check_chain_signs());
        } else if (name == "signatures") {
            reports.push_back(check_signature_consistency(config.sig_weight, false,
                                                          Exec::parallel, config.enum_cap));
        } else if (name == "prune") {
            reports.push_back(
                check_prune_consistency(config.prune_weight, Exec::parallel, config.enum_cap));
        } else if (name == "rr1") {
            reports.push_back(check_rr1(config.rr_weight, config.enum_cap));
        } else if (name == "rr2") {
            reports.push_back(check_rr2(config.rr_weight, config.enum_cap));
        } else if (name == "gf") {
            reports.push_back(check_gf(config.gf_nmax, config.gf_order, config.enum_cap));
        } else if (name == "functional") {
            reports.push_back(check_functional(config.x_order, config.q_order));
        } else if (name == "classical") {
            reports.push_back(check_classical(config.x_order, config.q_order));
        } else if (name == "edgevertex") {
            reports.push_back(check_edgevertex(config.ev_weight, config.ev_vertices,
                                               config.odd_sign, config.enum_cap));
        } else if (name == "negative-control-signature") {
            reports.push_back(negative_control(
                name, check_signature_consistency(std::min(config.sig_weight, 12), true,
                                                  Exec::parallel, config.enum_cap)));
        } else if (name == "negative-control-functional") {
            reports.push_back(negative_control(
                name, check_functional(config.x_order, config.q_order, true)));
        } else {
            throw std::invalid_argument("unknown check: " + name);
        }
    }
    return reports;
}

}  // namespace nbly::harness
