#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cychb/clifford.hpp"
#include "cychb/suites.hpp"

using namespace cychb;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupportedRegime = 3;

struct GlobalOpts {
    std::string field = "F10007";
    std::uint64_t seed = 1;
    std::string out;
    bool json = false;
    bool timings = false;
    int threads = 1;
};

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return j;
}

void emit(const GlobalOpts& g, const ojson& j) {
    if (!g.out.empty()) {
        std::ofstream out(g.out);
        if (!out) throw std::invalid_argument("cannot open output file: " + g.out);
        out << j.dump(2) << "\n";
        return;
    }
    std::cout << j.dump(2) << "\n";
}

int finish_report(const GlobalOpts& g, const Report& rep) {
    if (g.json || !g.out.empty()) {
        emit(g, rep.to_json(g.timings));
    } else {
        for (const auto& c : rep.checks)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << rep.suite << "." << c.name
                      << (c.pass || c.witness.is_null() ? "" : "  " + c.witness.dump()) << "\n";
        std::cout << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.checks.size() << " checks)\n";
    }
    return rep.pass() ? kExitPass : kExitCheckFailure;
}

std::pair<FieldElem, FieldElem> parse_point(Field f, const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected \"x0,t0\", got \"" + s + "\"");
    return {FieldElem::from_string(f, s.substr(0, comma)), FieldElem::from_string(f, s.substr(comma + 1))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral correspondence for cyclic Higgs bundles (affine local model)"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--field", g.field, "ground field: Q or F<p> (default F10007)");
    app.add_option("--seed", g.seed, "seed for randomized batteries");
    app.add_option("--out", g.out, "write the JSON report/object to a file");
    app.add_flag("--json", g.json, "print reports as JSON");
    app.add_flag("--timings", g.timings, "include timings in reports (breaks byte-identity)");
    app.add_option("--threads", g.threads, "worker threads for batch suites (0 = all)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random cyclic Higgs instance");
    gen->fallthrough();
    int gen_m = 2, gen_cap = 2;
    std::vector<int> gen_dims;
    gen->add_option("--m", gen_m, "number of vertices");
    gen->add_option("--dims", gen_dims, "dimension vector (default all 1)")->delimiter(',');
    gen->add_option("--cap", gen_cap, "x-degree cap for the arrow entries");
    bool gen_filter = false;
    gen->add_flag("--smooth-irreducible", gen_filter, "retry until the common curve is smooth and irreducible");

    // center
    auto* center = app.add_subcommand("center", "truncated center of the path algebra A(m)");
    center->fallthrough();
    int center_m = 2, center_N = 4;
    center->add_option("--m", center_m, "number of vertices");
    center->add_option("--N", center_N, "path-length truncation");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "central reduction A^(m) battery");
    reduce->fallthrough();
    int reduce_m = 2;
    std::string reduce_at;
    reduce->add_option("--m", reduce_m, "number of vertices");
    reduce->add_option("--at", reduce_at, "evaluate the fiber at \"x0,t0\" and export its table");

    // fiber
    auto* fiber = app.add_subcommand("fiber", "fiber algebra checks at a point");
    fiber->fallthrough();
    int fiber_m = 2;
    std::string fiber_at_s = "0,1";
    fiber->add_option("--m", fiber_m, "number of vertices");
    fiber->add_option("--at", fiber_at_s, "evaluation point \"x0,t0\"");

    // spectral
    auto* spectral = app.add_subcommand("spectral", "spectral-module checks (single instance or seeded batch)");
    spectral->fallthrough();
    std::string spectral_in;
    int spectral_count = 0;
    std::string spectral_report;
    spectral->add_option("--in", spectral_in, "cyclic Higgs data JSON");
    spectral->add_option("--count", spectral_count, "run a seeded batch of this size instead");
    spectral->add_option("--report", spectral_report, "write the report JSON here");

    // correspond
    auto* correspond = app.add_subcommand("correspond", "divisor-level spectral correspondence");
    correspond->fallthrough();
    correspond->require_subcommand(1);
    auto* fwd = correspond->add_subcommand("forward", "Higgs data -> (c, L0, divisors)");
    fwd->fallthrough();
    std::string fwd_in;
    fwd->add_option("--in", fwd_in, "cyclic Higgs data JSON")->required();
    auto* rev = correspond->add_subcommand("reverse", "(c, L0, divisors) -> Higgs data");
    rev->fallthrough();
    std::string rev_in;
    rev->add_option("--in", rev_in, "spectral data JSON")->required();
    auto* rt = correspond->add_subcommand("roundtrip", "forward then reverse, compare invariants");
    rt->fallthrough();
    std::string rt_in;
    int rt_count = 0;
    int rt_cap = 2;
    rt->add_option("--in", rt_in, "cyclic Higgs data JSON");
    rt->add_option("--count", rt_count, "run a seeded batch of this size instead");
    rt->add_option("--cap", rt_cap, "x-degree cap for the intertwiner ansatz");

    // clifford
    auto* clifford = app.add_subcommand("clifford", "m=2 even Clifford identification");
    clifford->fallthrough();
    auto* clifford_check = clifford->add_subcommand("check", "run the full verification");
    std::string clifford_fiber;
    clifford->add_option("--fiber", clifford_fiber, "also specialize at t0");
    clifford_check->add_option("--fiber", clifford_fiber, "also specialize at t0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const Field f = Field::parse(g.field);

        if (*gen) {
            if (gen_dims.empty()) gen_dims.assign(static_cast<std::size_t>(gen_m), 1);
            InstanceSpec spec{gen_m, gen_dims, f, gen_cap, g.seed};
            if (gen_filter) {
                const auto H = random_instance_filtered(spec, InstanceFilter::SmoothIrreducible, 500);
                if (!H) throw regime_error("gen: filter budget exhausted");
                emit(g, higgs_to_json(*H));
            } else {
                emit(g, higgs_to_json(random_instance(spec)));
            }
            return kExitPass;
        }
        if (*center) return finish_report(g, run_center_suite(f, center_m, center_N));
        if (*reduce) {
            std::optional<std::pair<FieldElem, FieldElem>> at;
            if (!reduce_at.empty()) at = parse_point(f, reduce_at);
            const Report rep = run_reduce_suite(f, reduce_m, at);
            if (at && !g.out.empty()) emit(g, table_algebra_to_json(fiber_at(f, reduce_m, at->first, at->second)));
            return finish_report(at && !g.out.empty() ? GlobalOpts{g.field, g.seed, "", g.json, g.timings, g.threads} : g,
                                 rep);
        }
        if (*fiber) {
            const auto at = parse_point(f, fiber_at_s);
            return finish_report(g, run_fiber_suite(f, fiber_m, at.first, at.second));
        }
        if (*spectral) {
            Report rep = spectral_in.empty()
                             ? run_spectral_suite(f, g.seed, spectral_count > 0 ? spectral_count : 20, g.threads)
                             : run_spectral_report(higgs_from_json(load_json(spectral_in)));
            if (!spectral_report.empty()) {
                std::ofstream out(spectral_report);
                if (!out) throw std::invalid_argument("cannot open report file: " + spectral_report);
                out << rep.to_json(g.timings).dump(2) << "\n";
            }
            return finish_report(g, rep);
        }
        if (*correspond) {
            if (*fwd) {
                const auto H = higgs_from_json(load_json(fwd_in));
                emit(g, spectral_data_to_json(forward_spectral_data(H)));
                return kExitPass;
            }
            if (*rev) {
                const auto SD = spectral_data_from_json(load_json(rev_in));
                emit(g, higgs_to_json(reverse_construct(SD)));
                return kExitPass;
            }
            if (*rt) {
                if (!rt_in.empty()) {
                    const auto H = higgs_from_json(load_json(rt_in));
                    const RoundTripReport r = round_trip(H, rt_cap);
                    Report rep{"roundtrip", f.name(), {}};
                    rep.add("spectral_invariants_equal", r.spectral_invariants_equal);
                    // provably sufficient only in rank one; best effort above
                    if (H.dims[0] == 1)
                        rep.add("intertwiner_found", r.intertwiner_found);
                    else
                        rep.add("intertwiner_best_effort", true,
                                ojson{{"found", r.intertwiner_found}, {"cap", rt_cap}});
                    return finish_report(g, rep);
                }
                return finish_report(g, run_correspond_suite(f, g.seed, rt_count > 0 ? rt_count : 20, g.threads));
            }
        }
        if (*clifford) {
            std::optional<FieldElem> t0;
            if (!clifford_fiber.empty()) t0 = FieldElem::from_string(f, clifford_fiber);
            return finish_report(g, run_clifford_suite(f, t0));
        }
        return kExitUsage;
    } catch (const regime_error& e) {
        std::cerr << "unsupported regime: " << e.what() << "\n";
        return kExitUnsupportedRegime;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
