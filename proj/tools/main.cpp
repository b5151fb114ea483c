// Command-line front end: every module as a subcommand with JSON input and a
// JSON report on stdout.  Exit code 0 on pass, 1 on computation failure or a
// failed check, 2 on input errors.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "acceptance.hpp"
#include "crosscaps/errors.hpp"
#include "crosscaps/report.hpp"
#include "crosscaps/serialize.hpp"

namespace cc = crosscaps;
using cc::Json;

namespace {

struct Options {
    std::uint64_t seed = 0;
    double tol = 1e-9;
};

Json load_json(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw cc::InputError("cannot open file: " + arg);
    Json j;
    in >> j;
    return j;
}

cc::ShSurface parse_surface(const std::string& arg) {
    if (arg == "disk") return cc::ShSurface(0, {cc::BoundaryKind::Standard});
    if (arg == "disk-crosscap") return cc::ShSurface(0, {cc::BoundaryKind::Crosscap});
    if (arg == "annulus")
        return cc::ShSurface(0, {cc::BoundaryKind::Standard, cc::BoundaryKind::Standard});
    return load_json(arg).get<cc::ShSurface>();
}

std::vector<cc::Bit> parse_bits(const std::string& csv) {
    std::vector<cc::Bit> bits;
    if (csv.empty()) return bits;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        bits.push_back(static_cast<cc::Bit>(std::stoi(item) & 1));
    return bits;
}

std::vector<cc::OneClass> parse_classes(const std::string& arg) {
    std::vector<cc::OneClass> out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(parse_bits(item));
    return out;
}

// Report plumbing: echo the command, fingerprint the canonical inputs, time
// the computation.
class Run {
public:
    Run(int argc, char** argv, const Json& inputs) {
        std::ostringstream cmd;
        for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
        report_.command = cmd.str();
        report_.inputs_digest = cc::digest(inputs.dump());
        start_ = std::chrono::steady_clock::now();
    }

    void output(const std::string& key, Json value) { report_.outputs[key] = std::move(value); }
    void check(const std::string& name, bool pass) { report_.checks.emplace_back(name, pass); }

    int finish() {
        report_.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start_)
                              .count();
        std::cout << cc::to_json(report_).dump(2) << "\n";
        return report_.all_passed() ? 0 : 1;
    }

private:
    cc::Report report_;
    std::chrono::steady_clock::time_point start_;
};

int run_app(int argc, char** argv) {
    CLI::App app{"orientability computations for surfaces with crosscaps"};
    app.require_subcommand(1);
    app.fallthrough();  // lets subcommands reach the global --seed
    Options opt;
    app.add_option("--seed", opt.seed, "seed for all randomized checks")->capture_default_str();

    int exit_code = 0;
    auto finish = [&](Run& run) { exit_code = run.finish(); };

    // ---- surface ----------------------------------------------------------
    auto* surface = app.add_subcommand("surface", "doubles, quotients, Euler numbers");
    surface->require_subcommand(1);
    static std::string surf_arg;
    for (const char* name : {"double", "quotient", "euler"}) {
        auto* sub = surface->add_subcommand(name);
        sub->add_option("--surface", surf_arg,
                        "named surface (disk, disk-crosscap, annulus), file, or inline JSON")
            ->required();
        sub->callback([&, name] {
            const cc::ShSurface s = parse_surface(surf_arg);
            Run run(argc, argv, Json(s));
            if (std::string(name) == "double")
                run.output("double", Json(cc::doubled(s)));
            else if (std::string(name) == "quotient")
                run.output("quotient", Json(cc::quotient(s)));
            else
                run.output("euler_char", cc::euler_char(s));
            finish(run);
        });
    }

    // ---- cohomology --------------------------------------------------------
    auto* coh = app.add_subcommand("cohomology", "mod-2 surface cohomology arithmetic");
    coh->require_subcommand(1);
    static int closed_genus = -1, crosscaps_n = -1;
    static std::string kappa_arg, lambda_arg, lines_arg, torsion_arg;
    static long free_rank = 0;

    auto add_ring_opts = [&](CLI::App* sub) {
        sub->add_option("--closed-genus", closed_genus, "orientable closed surface of this genus");
        sub->add_option("--crosscaps", crosscaps_n, "nonorientable closed surface, k crosscaps");
    };
    auto parse_ring = [&]() {
        if (closed_genus >= 0 && crosscaps_n >= 0)
            throw cc::InputError("give either --closed-genus or --crosscaps, not both");
        if (closed_genus >= 0)
            return cc::ring_of(cc::ClosedSurfaceInfo{true, closed_genus, 0});
        if (crosscaps_n >= 1)
            return cc::ring_of(cc::ClosedSurfaceInfo{false, crosscaps_n, 0});
        throw cc::InputError("need --closed-genus or --crosscaps");
    };

    {
        auto* sub = coh->add_subcommand("ring", "cohomology ring of a closed surface");
        add_ring_opts(sub);
        sub->callback([&] {
            const auto ring = parse_ring();
            Run run(argc, argv, Json(ring));
            run.output("ring", Json(ring));
            finish(run);
        });
    }
    {
        auto* sub = coh->add_subcommand("cup", "<kappa cup lambda, [Sigma]>");
        add_ring_opts(sub);
        sub->add_option("--kappa", kappa_arg)->required();
        sub->add_option("--lambda", lambda_arg)->required();
        sub->callback([&] {
            const auto ring = parse_ring();
            const auto kappa = parse_bits(kappa_arg), lambda = parse_bits(lambda_arg);
            Run run(argc, argv, Json{{"ring", ring}, {"kappa", kappa}, {"lambda", lambda}});
            run.output("pairing", static_cast<int>(cc::cup_pair(kappa, lambda, ring)));
            finish(run);
        });
    }
    {
        auto* sub = coh->add_subcommand("square", "<kappa^2, [Sigma]> with the torsion identity");
        add_ring_opts(sub);
        sub->add_option("--kappa", kappa_arg)->required();
        sub->callback([&] {
            const auto ring = parse_ring();
            const auto kappa = parse_bits(kappa_arg);
            Run run(argc, argv, Json{{"ring", ring}, {"kappa", kappa}});
            run.output("pairing", static_cast<int>(cc::square_pairing(kappa, ring)));
            finish(run);
        });
    }
    {
        auto* sub = coh->add_subcommand("cokernel", "square classes missing from Ext");
        sub->add_option("--free", free_rank, "free rank")->capture_default_str();
        sub->add_option("--torsion", torsion_arg, "torsion as m:r,m:r (orders:multiplicities)");
        sub->callback([&] {
            cc::H1Presentation h;
            h.free_rank = free_rank;
            if (!torsion_arg.empty()) {
                std::stringstream ss(torsion_arg);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    const auto colon = item.find(':');
                    if (colon == std::string::npos)
                        throw cc::InputError("torsion entries look like m:r");
                    h.torsion_orders.emplace_back(std::stol(item.substr(0, colon)),
                                                  std::stol(item.substr(colon + 1)));
                }
            }
            Run run(argc, argv, Json(h));
            run.output("cokernel_rank", cc::square_class_cokernel(h));
            finish(run);
        });
    }
    {
        auto* sub = coh->add_subcommand("w2", "<w2 of a sum of line bundles, [Sigma]>");
        add_ring_opts(sub);
        sub->add_option("--lines", lines_arg, "w1 classes, e.g. 1,0;0,1;1,1")->required();
        sub->callback([&] {
            const auto ring = parse_ring();
            const auto lines = parse_classes(lines_arg);
            Run run(argc, argv, Json{{"ring", ring}, {"lines", lines}});
            run.output("pairing", static_cast<int>(cc::whitney_sum_w2(lines, ring)));
            finish(run);
        });
    }

    // ---- bundle -------------------------------------------------------------
    auto* bundle = app.add_subcommand("bundle", "real bundle pair arithmetic");
    bundle->require_subcommand(1);
    static int rank = 1, maslov = 0, twist_a = 0, twist_b = 0;
    static std::string std_w1_arg, pair_a, pair_b;
    {
        auto* sub = bundle->add_subcommand("index", "Fredholm index over a base surface");
        sub->add_option("--rank", rank)->required();
        sub->add_option("--maslov", maslov)->required();
        sub->add_option("--std-w1", std_w1_arg, "bits, one per standard boundary circle");
        sub->add_option("--surface", surf_arg, "base surface (name, file, or inline JSON)")
            ->required();
        sub->callback([&] {
            const cc::RealBundlePair p(rank, maslov, parse_bits(std_w1_arg));
            const cc::ShSurface base = parse_surface(surf_arg);
            Run run(argc, argv, Json{{"pair", p}, {"surface", base}});
            run.output("index", cc::fredholm_index(p, base));
            finish(run);
        });
    }
    {
        auto* sub = bundle->add_subcommand("sum", "direct sum of two pairs (JSON)");
        sub->add_option("--a", pair_a)->required();
        sub->add_option("--b", pair_b)->required();
        sub->callback([&] {
            const auto p = cc::real_bundle_pair_from_json(load_json(pair_a));
            const auto q = cc::real_bundle_pair_from_json(load_json(pair_b));
            Run run(argc, argv, Json{{"a", p}, {"b", q}});
            run.output("sum", Json(cc::direct_sum(p, q)));
            finish(run);
        });
    }
    {
        auto* sub = bundle->add_subcommand("top", "top exterior power (JSON pair)");
        sub->add_option("--a", pair_a)->required();
        sub->callback([&] {
            const auto p = cc::real_bundle_pair_from_json(load_json(pair_a));
            Run run(argc, argv, Json(p));
            run.output("top", Json(cc::top_exterior(p)));
            finish(run);
        });
    }
    {
        auto* sub = bundle->add_subcommand("klein-w2", "equivariant w2 of a Klein-torus pair");
        sub->add_option("--rank", rank)->required();
        sub->add_option("--twist", twist_a)->required();
        sub->callback([&] {
            const cc::KleinTorusPair k{rank, static_cast<cc::Bit>(twist_a & 1)};
            Run run(argc, argv, Json(k));
            run.output("eq_w2", static_cast<int>(cc::eq_w2(k)));
            finish(run);
        });
    }
    {
        auto* sub = bundle->add_subcommand("klein-top", "top exterior of a Klein-torus pair");
        sub->add_option("--rank", rank)->required();
        sub->add_option("--twist", twist_a)->required();
        sub->callback([&] {
            const cc::KleinTorusPair k{rank, static_cast<cc::Bit>(twist_a & 1)};
            Run run(argc, argv, Json(k));
            run.output("top", Json(cc::top_exterior(k)));
            finish(run);
        });
    }
    {
        auto* sub = bundle->add_subcommand("klein-tensor", "tensor of rank-1 Klein pairs");
        sub->add_option("--twist-a", twist_a)->required();
        sub->add_option("--twist-b", twist_b)->required();
        sub->callback([&] {
            const cc::KleinTorusPair a{1, static_cast<cc::Bit>(twist_a & 1)};
            const cc::KleinTorusPair b{1, static_cast<cc::Bit>(twist_b & 1)};
            Run run(argc, argv, Json{{"a", a}, {"b", b}});
            run.output("tensor", Json(cc::tensor(a, b)));
            finish(run);
        });
    }

    // ---- holonomy -----------------------------------------------------------
    auto* hol = app.add_subcommand("holonomy", "determinant-line holonomy and signs");
    static std::string loop_arg, sign_arg, degrees_arg;
    static bool decompose_flag = false;
    static int flag_no_std = 0, flag_pi1 = 0, flag_c1 = 0, flag_sqrt = 0, proj_n = 1;
    hol->add_option("--loop", loop_arg, "operator loop (file or inline JSON)");
    hol->add_flag("--decompose", decompose_flag, "also report the crosscap split");
    hol->callback([&] {
        if (!hol->get_subcommands().empty()) return;
        if (loop_arg.empty()) throw cc::InputError("holonomy: need --loop");
        const auto loop = load_json(loop_arg).get<cc::OperatorLoop>();
        Run run(argc, argv, Json(loop));
        run.output("w1_det", static_cast<int>(cc::holonomy(loop)));
        if (decompose_flag) {
            const auto dec = cc::decompose(loop);
            cc::Bit cc_xor = 0;
            for (cc::Bit b : dec.crosscap_bits) cc_xor ^= b;
            run.output("standard_part", Json(dec.standard_part));
            run.output("crosscap_bits", dec.crosscap_bits);
            run.check("decomposition xor identity",
                      cc::holonomy(loop) ==
                          (cc::holonomy(dec.standard_part) ^ cc_xor));
        }
        finish(run);
    });
    {
        auto* sub = hol->add_subcommand("sign", "trivialization-change sign");
        sub->add_option("--in", sign_arg, "change maps + boundary data (file or JSON)")
            ->required();
        sub->callback([&] {
            const auto in = load_json(sign_arg).get<cc::TrivializationSignInput>();
            Run run(argc, argv, load_json(sign_arg));
            run.output("sign", cc::trivialization_sign(in.change, in.boundary));
            finish(run);
        });
    }
    {
        auto* sub = hol->add_subcommand("verdict", "orientability criterion for crosscap-only families");
        sub->add_option("--no-std", flag_no_std)->required();
        sub->add_option("--pi1-trivial", flag_pi1)->required();
        sub->add_option("--c1-even", flag_c1)->required();
        sub->add_option("--square-root", flag_sqrt)->required();
        sub->callback([&] {
            const cc::OrientabilityFlags flags{flag_no_std != 0, flag_pi1 != 0,
                                               flag_c1 != 0, flag_sqrt != 0};
            Run run(argc, argv,
                    Json{{"no_std", flag_no_std},
                         {"pi1_trivial", flag_pi1},
                         {"c1_even", flag_c1},
                         {"square_root", flag_sqrt}});
            run.output("verdict", cc::orientability_verdict(flags) ==
                                          cc::Verdict::OrientableGuaranteed
                                      ? "OrientableGuaranteed"
                                      : "NoConclusion");
            finish(run);
        });
    }
    {
        auto* sub = hol->add_subcommand("parity", "complete-intersection sign bookkeeping");
        sub->add_option("--n", proj_n, "projective dimension")->required();
        sub->add_option("--a", degrees_arg, "degrees, comma separated");
        sub->callback([&] {
            std::vector<int> degrees;
            if (!degrees_arg.empty()) {
                std::stringstream ss(degrees_arg);
                std::string item;
                while (std::getline(ss, item, ',')) degrees.push_back(std::stoi(item));
            }
            const auto out = cc::complete_intersection_sign(proj_n, degrees);
            Run run(argc, argv, Json{{"n", proj_n}, {"a", degrees}});
            run.output("applies", out.applies);
            run.output("sign_product", out.sign_product);
            run.check("applies iff sign is +1", out.applies == (out.sign_product == 1));
            finish(run);
        });
    }

    // ---- clutch -------------------------------------------------------------
    auto* clutch = app.add_subcommand("clutch", "sampled clutching loops");
    clutch->require_subcommand(1);
    static std::string out_path, kind_arg = "disk";
    static int loop_n = 1, loop_d = 0, loop_samples = 256;
    clutch->add_option("--tol", opt.tol, "reality tolerance")->capture_default_str();
    {
        auto* sub = clutch->add_subcommand("reality", "check the reality condition");
        sub->add_option("--loop", loop_arg)->required();
        sub->callback([&] {
            const auto loop = load_json(loop_arg).get<cc::SampledLoop>();
            Run run(argc, argv, Json(loop));
            run.output("reality", static_cast<int>(cc::check_reality(loop, opt.tol)));
            finish(run);
        });
    }
    {
        auto* sub = clutch->add_subcommand("winding", "determinant winding number");
        sub->add_option("--loop", loop_arg)->required();
        sub->callback([&] {
            const auto loop = load_json(loop_arg).get<cc::SampledLoop>();
            Run run(argc, argv, Json(loop));
            run.output("winding", cc::det_winding(loop));
            finish(run);
        });
    }
    {
        auto* sub = clutch->add_subcommand("classify", "disk clutching class and Maslov index");
        sub->add_option("--loop", loop_arg)->required();
        sub->callback([&] {
            const auto loop = load_json(loop_arg).get<cc::SampledLoop>();
            Run run(argc, argv, Json(loop));
            const auto cls = cc::classify_disk(loop, opt.tol);
            run.output("d", cls.d);
            run.output("maslov", cls.maslov);
            finish(run);
        });
    }
    {
        auto* sub = clutch->add_subcommand("klein", "two-class mapping-torus invariant");
        sub->add_option("--loop", loop_arg)->required();
        sub->callback([&] {
            const auto loop = load_json(loop_arg).get<cc::SampledLoop>();
            Run run(argc, argv, Json(loop));
            run.output("class", static_cast<int>(cc::klein_class(loop, opt.tol)));
            finish(run);
        });
    }
    {
        auto* sub = clutch->add_subcommand("make", "emit a canonical loop as JSON");
        sub->add_option("--kind", kind_arg, "disk | klein-trivial | klein-twisted | klein-smooth")
            ->capture_default_str();
        sub->add_option("--n", loop_n)->capture_default_str();
        sub->add_option("--d", loop_d, "class (disk loops only)")->capture_default_str();
        sub->add_option("--samples", loop_samples)->capture_default_str();
        sub->add_option("--out", out_path, "write the loop JSON here instead of the report");
        sub->callback([&] {
            cc::SampledLoop loop;
            if (kind_arg == "disk")
                loop = cc::make_disk_loop(loop_n, loop_d, loop_samples);
            else if (kind_arg == "klein-trivial")
                loop = cc::make_klein_loop(cc::KleinLoopKind::Trivial, loop_n, loop_samples);
            else if (kind_arg == "klein-twisted")
                loop = cc::make_klein_loop(cc::KleinLoopKind::Twisted, loop_n, loop_samples);
            else if (kind_arg == "klein-smooth")
                loop = cc::make_klein_loop(cc::KleinLoopKind::TwistedSmooth, loop_n, loop_samples);
            else
                throw cc::InputError("unknown loop kind: " + kind_arg);
            Run run(argc, argv,
                    Json{{"kind", kind_arg}, {"n", loop_n}, {"d", loop_d},
                         {"samples", loop_samples}});
            if (out_path.empty()) {
                run.output("loop", Json(loop));
            } else {
                std::ofstream out(out_path);
                if (!out) throw cc::InputError("cannot write: " + out_path);
                out << Json(loop).dump();
                run.output("written", out_path);
                run.output("loop_digest", cc::digest(Json(loop).dump()));
            }
            finish(run);
        });
    }

    // ---- spectral -----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("spectral", "collocation kernel of the twisted disk problem");
        static cc::DiskProblem prob;
        sub->add_option("--d", prob.twist, "boundary twist")->required();
        sub->add_option("--trunc", prob.truncation, "monomial truncation K")->required();
        sub->add_option("--colloc", prob.collocation, "collocation points M")->required();
        sub->add_option("--tol", prob.tolerance, "singular value tolerance")
            ->capture_default_str();
        sub->callback([&] {
            Run run(argc, argv, Json(prob));
            const int dim = cc::numerical_kernel_dim(prob);
            const int expected = cc::recurrence_kernel(prob.twist).dim;
            run.output("dim", dim);
            run.output("expected", expected);
            run.output("pass", dim == expected);
            run.check("collocation kernel matches the recurrence", dim == expected);
            finish(run);
        });
    }

    // ---- quadrature -----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("quadrature", "contour derivative of the boundary completion");
        static int qk = 1, qm = 2, qpoints = 64;
        sub->add_option("--k", qk)->required();
        sub->add_option("--m", qm)->required();
        sub->add_option("--points", qpoints)->capture_default_str();
        sub->callback([&] {
            Run run(argc, argv, Json{{"k", qk}, {"m", qm}, {"points", qpoints}});
            const double value = cc::cauchy_derivative(qk, qm, qpoints);
            double expected = 0.0;
            if (qm == 2 * qk) {
                expected = -0.5;
                for (int i = 2; i <= 2 * qk; ++i) expected *= i;
            }
            run.output("value", value);
            run.output("expected", expected);
            run.output("pass", std::abs(value - expected) <= 1e-12);
            run.check("matches the closed form to 1e-12",
                      std::abs(value - expected) <= 1e-12);
            finish(run);
        });
    }

    // ---- realcurve -----------------------------------------------------------
    auto* curve = app.add_subcommand("realcurve", "equivariant rational curves");
    curve->require_subcommand(1);
    static std::string params_arg;
    static int curve_samples = 200;
    curve->add_option("--tol", opt.tol, "equivariance tolerance")->capture_default_str();
    {
        auto* sub = curve->add_subcommand("build", "expand the coordinate polynomials");
        sub->add_option("--params", params_arg)->required();
        sub->callback([&] {
            const auto p = load_json(params_arg).get<cc::RealMapParams>();
            Run run(argc, argv, Json(p));
            run.output("tuple", Json(cc::build_map(p)));
            finish(run);
        });
    }
    {
        auto* sub = curve->add_subcommand("check", "sampled equivariance deviation");
        sub->add_option("--params", params_arg)->required();
        sub->add_option("--samples", curve_samples)->capture_default_str();
        sub->callback([&] {
            const auto p = load_json(params_arg).get<cc::RealMapParams>();
            Run run(argc, argv, Json(p));
            std::mt19937_64 rng(opt.seed);
            const double dev =
                cc::check_equivariance(cc::build_map(p), curve_samples, opt.tol, rng);
            run.output("max_deviation", dev);
            run.check("deviation within tolerance", dev <= opt.tol);
            finish(run);
        });
    }
    {
        auto* sub = curve->add_subcommand("delta", "common root-orbit test");
        sub->add_option("--params", params_arg)->required();
        sub->callback([&] {
            const auto p = load_json(params_arg).get<cc::RealMapParams>();
            Run run(argc, argv, Json(p));
            run.output("in_delta", cc::in_degenerate_locus(p, 1e-8) ? 1 : 0);
            finish(run);
        });
    }

    // ---- verify-all -----------------------------------------------------------
    {
        auto* sub = app.add_subcommand("verify-all", "run the full acceptance suite");
        sub->callback([&] {
            Run run(argc, argv, Json{{"seed", opt.seed}});
            std::ostringstream lines;
            const auto results = cc::acceptance::run_all(opt.seed, lines);
            std::cerr << lines.str();
            for (const auto& r : results) run.check(r.name, r.pass);
            run.output("criteria", results.size());
            run.output("all_passed", cc::acceptance::all_passed(results));
            finish(run);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const cc::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const cc::ComputeError& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
