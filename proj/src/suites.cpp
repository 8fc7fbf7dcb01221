#include "cychb/suites.hpp"

#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cychb/clifford.hpp"
#include "cychb/correspond.hpp"

namespace cychb {

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

class Timer {
  public:
    Timer() : start_(now_ms()) {}
    double elapsed() const { return now_ms() - start_; }

  private:
    double start_;
};

std::vector<FieldElem> constant_coeff_vector(const PathElem& z, int m, int N) {
    std::vector<FieldElem> v(static_cast<std::size_t>(N + 1) * static_cast<std::size_t>(m), FieldElem::zero(z.field()));
    for (const auto& [p, c] : z.terms()) {
        if (c.degree() > 0) throw std::logic_error("constant_coeff_vector: nonconstant coefficient");
        v[static_cast<std::size_t>(p.len) * static_cast<std::size_t>(m) + static_cast<std::size_t>(p.src)] = c.coeff(0);
    }
    return v;
}

std::uint64_t instance_seed(std::uint64_t base, int index) {
    return base + 1000003ULL * static_cast<std::uint64_t>(index);
}

} // namespace

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::add(std::string name, bool ok, ojson witness) {
    checks.push_back(CheckResult{std::move(name), ok, std::move(witness), 0.0});
}

ojson Report::to_json(bool with_timings) const {
    ojson j;
    j["suite"] = suite;
    j["field"] = field;
    j["pass"] = pass();
    ojson cs = ojson::array();
    double total = 0.0;
    for (const auto& c : checks) {
        ojson e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.witness.is_null()) e["witness"] = c.witness;
        if (with_timings) e["ms"] = c.ms;
        total += c.ms;
        cs.push_back(std::move(e));
    }
    j["checks"] = std::move(cs);
    if (with_timings) j["total_ms"] = total;
    return j;
}

Report run_center_suite(Field f, int m, int N) {
    Report rep{"center", f.name(), {}};
    Timer t;
    const auto basis = truncated_center(f, m, N);
    const int expected = N / m + 1;
    rep.add("dimension", static_cast<int>(basis.size()) == expected,
            ojson{{"m", m}, {"N", N}, {"computed", basis.size()}, {"expected", expected}});

    std::vector<std::vector<FieldElem>> got, want;
    for (const auto& z : basis) got.push_back(constant_coeff_vector(z, m, N));
    for (int l = 0; m * l <= N; ++l)
        want.push_back(constant_coeff_vector(diagonal_embed(f, m, l, Poly::from_ints(f, Var::x, {1})), m, N));
    rep.add("matches_diagonal_embeds", spans_equal(f, got, want));

    bool commutes = true;
    for (const auto& z : basis)
        for (int len = 0; len <= 2 && commutes; ++len)
            for (int s = 0; s < m && commutes; ++s) {
                const PathElem p = PathElem::path(f, m, Path{s, len}, Poly::from_ints(f, Var::x, {1}));
                if (z * p != p * z) commutes = false;
            }
    rep.add("commutes_with_short_paths", commutes);

    const int pf_N = std::max(m, std::min(N, 2 * m));
    rep.add("pushforward_kernel", pushforward_kernel_check(f, m, pf_N), ojson{{"N", pf_N}});
    for (auto& c : rep.checks) c.ms = t.elapsed() / rep.checks.size();
    return rep;
}

Report run_fiber_suite(Field f, int m, const FieldElem& x0, const FieldElem& t0) {
    Report rep{"fiber", f.name(), {}};
    Timer timer;
    const TableAlgebra fib = fiber_at(f, m, x0, t0);
    if (m <= 3) rep.add("associative", fib.is_associative());
    rep.add("unit_law", fib.unit_law_holds(fiber_unit(f, m)));
    const bool simple = simplicity_check(fib);
    rep.add("simplicity_matches_zero_section", simple == (m == 1 || !t0.is_zero()),
            ojson{{"simple", simple}, {"t0", t0.str()}});
    if (!t0.is_zero() && !f.is_rational()) {
        if (auto s0 = find_mth_root(f, t0, m)) {
            const MatrixIso iso = matrix_iso(f, m, t0, *s0);
            rep.add("matrix_iso", iso.verified, ojson{{"s0", s0->str()}});
        } else {
            rep.add("matrix_iso_skipped_no_root", true);
        }
    }
    for (auto& c : rep.checks) c.ms = timer.elapsed() / rep.checks.size();
    return rep;
}

Report run_reduce_suite(Field f, int m, std::optional<std::pair<FieldElem, FieldElem>> at) {
    Report rep{"reduce", f.name(), {}};
    Timer timer;
    rep.add("rank", rank_check(m) == m * m, ojson{{"m", m}, {"rank", rank_check(m)}});

    std::vector<ReducedElem> basis;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) basis.push_back(ReducedElem::basis(f, m, i, j));

    bool assoc = true;
    for (const auto& a : basis)
        for (const auto& b : basis)
            for (const auto& c : basis)
                if ((a * b) * c != a * (b * c)) assoc = false;
    rep.add("associative", assoc);

    const ReducedElem unit = ReducedElem::unit(f, m);
    bool unit_ok = true;
    for (const auto& b : basis)
        if (unit * b != b || b * unit != b) unit_ok = false;
    rep.add("unit_law", unit_ok);

    bool loops = true;
    const TPoly t = TPoly::t(f);
    for (int i = 0; i < m; ++i) {
        ReducedElem acc = ReducedElem::unit(f, m);
        for (int step = 0; step < m; ++step) acc = ReducedElem::arrow_class(f, m, (i + step) % m) * acc;
        if (acc != ReducedElem::basis(f, m, i, i) * t) loops = false;
    }
    rep.add("loop_identity", loops);

    rep.add("center_is_Rt_unit", reduced_center_check(f, m));

    if (at) {
        const Report fib = run_fiber_suite(f, m, at->first, at->second);
        for (const auto& c : fib.checks) {
            CheckResult renamed = c;
            renamed.name = "fiber_" + renamed.name;
            rep.checks.push_back(std::move(renamed));
        }
    }
    for (auto& c : rep.checks) c.ms = timer.elapsed() / rep.checks.size();
    return rep;
}

Report run_spectral_report(const CyclicHiggsData& H) {
    Report rep{"spectral", H.field.name(), {}};
    Timer timer;
    H.validate();
    const SpectralQuiverData S = to_spectral_module(H);
    rep.add("loop_relation", verify_loop_relation(S));
    rep.add("support", verify_support(S));
    rep.add("round_trip_exact", from_spectral_module(S) == H);
    const auto common = common_component_check(H);
    ojson w{{"strict", common.strict}, {"squarefree", common.squarefree}, {"q", common.q}};
    bool equal_dims = true;
    for (int i = 1; i < H.m; ++i)
        if (H.dims[i] != H.dims[0]) equal_dims = false;
    bool constraint_ok = common.squarefree;
    if (equal_dims) {
        constraint_ok = common.strict;
        for (int qi : common.q) constraint_ok = constraint_ok && qi == 0;
    }
    rep.add("constraint_shape", constraint_ok, std::move(w));
    for (auto& c : rep.checks) c.ms = timer.elapsed() / rep.checks.size();
    return rep;
}

Report run_spectral_suite(Field f, std::uint64_t seed, int count, int threads) {
    Report rep{"spectral", f.name(), {}};
    std::vector<CheckResult> results(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (int i = 0; i < count; ++i) {
        Timer timer;
        CheckResult r;
        r.name = "instance_" + std::to_string(i);
        try {
            Rng shape(instance_seed(seed, i));
            InstanceSpec spec;
            spec.field = f;
            spec.m = 1 + static_cast<int>(shape.next(4));
            for (int v = 0; v < spec.m; ++v) spec.dims.push_back(1 + static_cast<int>(shape.next(3)));
            spec.deg_cap = 2;
            spec.seed = instance_seed(seed, i) ^ 0x5bd1e995ULL;
            const CyclicHiggsData H = random_instance(spec);
            const SpectralQuiverData S = to_spectral_module(H);
            const auto common = common_component_check(H);
            bool equal_dims = true;
            for (int v = 1; v < spec.m; ++v)
                if (spec.dims[v] != spec.dims[0]) equal_dims = false;
            bool ok = verify_loop_relation(S) && verify_support(S) && from_spectral_module(S) == H &&
                      common.squarefree;
            if (equal_dims) {
                ok = ok && common.strict;
                for (int qi : common.q) ok = ok && qi == 0;
            }
            r.pass = ok;
            r.witness = ojson{{"m", spec.m}, {"dims", spec.dims}, {"strict", common.strict}, {"q", common.q}};
        } catch (const std::exception& e) {
            r.pass = false;
            r.witness = ojson{{"error", e.what()}};
        }
        r.ms = timer.elapsed();
        results[static_cast<std::size_t>(i)] = std::move(r);
    }
    rep.checks = std::move(results);
    return rep;
}

Report run_correspond_suite(Field f, std::uint64_t seed, int count, int threads) {
    Report rep{"correspond", f.name(), {}};
    std::vector<CheckResult> results(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (int i = 0; i < count; ++i) {
        Timer timer;
        CheckResult r;
        r.name = "instance_" + std::to_string(i);
        try {
            Rng shape(instance_seed(seed, i));
            InstanceSpec spec;
            spec.field = f;
            spec.m = 1 + static_cast<int>(shape.next(3));
            const int p = 1 + static_cast<int>(shape.next(2));
            spec.dims.assign(static_cast<std::size_t>(spec.m), p);
            spec.deg_cap = 2;
            spec.seed = instance_seed(seed, i) ^ 0x9e3779b9ULL;
            const auto H = random_instance_filtered(spec, InstanceFilter::SmoothIrreducible, 500);
            if (!H) {
                r.pass = false;
                r.witness = ojson{{"error", "filter budget exhausted"}, {"m", spec.m}, {"p", p}};
            } else {
                const SpectralData SD = forward_spectral_data(*H);
                const CurveRing ring = make_curve_ring(SD.c);
                int total_len = 0;
                for (const auto& d : SD.divisors) total_len += d.length;
                const bool relation = check_divisor_relation(ring, SD.divisors);
                const int divt_len = divisor_of_function(ring, TPoly::t(f)).length;
                const RoundTripReport rt = round_trip(*H);
                bool ok = relation && total_len == divt_len && rt.spectral_invariants_equal;
                if (p == 1) ok = ok && rt.intertwiner_found;
                r.pass = ok;
                r.witness = ojson{{"m", spec.m},
                                  {"p", p},
                                  {"lengths_sum", total_len},
                                  {"div_t_length", divt_len},
                                  {"invariants_equal", rt.spectral_invariants_equal},
                                  {"intertwiner_found", rt.intertwiner_found}};
            }
        } catch (const std::exception& e) {
            r.pass = false;
            r.witness = ojson{{"error", e.what()}};
        }
        r.ms = timer.elapsed();
        results[static_cast<std::size_t>(i)] = std::move(r);
    }
    rep.checks = std::move(results);
    return rep;
}

Report run_clifford_suite(Field f, std::optional<FieldElem> fiber_t0) {
    Report rep{"clifford", f.name(), {}};
    Timer timer;

    const ReducedElem unit = ReducedElem::unit(f, 2);
    const TPoly two = TPoly::constant(FieldElem::of(f, 2));
    rep.add("trace_unit", trace_map(unit) == two);
    rep.add("trace_offdiagonal", trace_map(ReducedElem::basis(f, 2, 0, 1)).is_zero());
    {
        ReducedElem a(f, 2);
        a.coeff(0, 0) = TPoly::t(f);
        a.coeff(1, 1) = -TPoly::t(f);
        rep.add("trace_t_e0_minus_t_e1", trace_map(a).is_zero());
    }
    rep.add("commutator_traces", commutator_trace_check(f));
    {
        const auto dec = traceless_decompose(ReducedElem::basis(f, 2, 0, 0));
        ReducedElem reassembled = dec.traceless;
        const TPoly half = dec.scalar * FieldElem::ratio(f, 1, 2);
        reassembled.coeff(0, 0) += half;
        reassembled.coeff(1, 1) += half;
        rep.add("traceless_reassembly", reassembled == ReducedElem::basis(f, 2, 0, 0) &&
                                            trace_map(dec.traceless).is_zero());
    }

    const TernaryQuadraticForm q = build_quadratic_form(f);
    const TPoly disc = q.discriminant();
    const bool disc_ok = disc.deg_t() == 1 && disc.tcoeff(0).is_zero() && disc.tcoeff(1).degree() == 0;
    rep.add("discriminant_unit_times_t", disc_ok, ojson{{"disc", disc.str()}});

    const EvenCliffordAlgebra cl = even_clifford(q);
    rep.add("even_clifford_associative", cl.is_associative());

    const auto iso = clifford_iso_check(f);
    rep.add("iso_16_products", iso.ok,
            iso.ok ? ojson()
                   : ojson{{"failure", iso.failure},
                           {"pair", iso.failing_pair},
                           {"lhs", iso.lhs},
                           {"rhs", iso.rhs}});
    rep.add("iso_unique_up_to_units", iso.unique_up_to_units);

    if (fiber_t0) {
        rep.add("fiber_at_t0", fiber_clifford_check(f, *fiber_t0), ojson{{"t0", fiber_t0->str()}});
    } else {
        rep.add("fiber_t0_zero", fiber_clifford_check(f, FieldElem::zero(f)));
        rep.add("fiber_t0_one", fiber_clifford_check(f, FieldElem::one(f)));
        // exhaustive scan over a small prime field, independent of f
        const Field f7 = Field::prime(7);
        bool all = true;
        for (int t0 = 0; t0 < 7; ++t0)
            if (!fiber_clifford_check(f7, FieldElem::of(f7, t0))) all = false;
        rep.add("fibers_exhaustive_F7", all);
    }
    for (auto& c : rep.checks) c.ms = timer.elapsed() / rep.checks.size();
    return rep;
}

} // namespace cychb
