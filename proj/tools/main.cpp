#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bcspec/io.hpp"
#include "bcspec/pair_spectrum.hpp"
#include "bcspec/spectra.hpp"
#include "bcspec/verify.hpp"

namespace {

using bcspec::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitProperty = 4;

struct Options {
    std::string input;
    double p = 2.0;
    bcspec::Tolerances tol;
    uint64_t seed = 42;
    int trials = 100;
    std::string format = "text";

    bool machine() const { return format == "machine"; }
};

json complex_json(const bcspec::Complex& z) { return json::array({z.real(), z.imag()}); }

json tuple_json(const std::vector<bcspec::Complex>& t) {
    json a = json::array();
    for (const auto& z : t) a.push_back(complex_json(z));
    return a;
}

json finite_part_json(const std::vector<std::vector<bcspec::Complex>>& fin) {
    json a = json::array();
    for (const auto& t : fin) a.push_back(tuple_json(t));
    return a;
}

json point_json(const std::vector<bcspec::BiComplex>& pt) {
    json a = json::array();
    for (const auto& z : pt) a.push_back(bcspec::to_json(z));
    return a;
}

json pair_finite_json(const std::vector<std::array<bcspec::Complex, 2>>& fin) {
    json a = json::array();
    for (const auto& p : fin) a.push_back(json::array({complex_json(p[0]), complex_json(p[1])}));
    return a;
}

json complex_matrix_json(const bcspec::ComplexMatrix& m) {
    json entries = json::array();
    for (bcspec::Index i = 0; i < m.rows(); ++i)
        for (bcspec::Index j = 0; j < m.cols(); ++j) entries.push_back(complex_json(m(i, j)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

const char* side_name(bcspec::Side s) {
    switch (s) {
        case bcspec::Side::e1: return "e1";
        case bcspec::Side::e2: return "e2";
        default: return "none";
    }
}

void emit(const Options& opt, const json& machine_report, const std::string& text) {
    if (opt.machine())
        std::cout << machine_report.dump() << "\n";
    else
        std::cout << text;
}

int cmd_decompose(const Options& opt) {
    const json in = bcspec::load_json_file(opt.input);
    if (in.is_object() && in.contains("z1") && in.contains("z2")) {
        const bcspec::BiComplex z = bcspec::bicomplex_from_json(in);
        const bcspec::IdempotentPair p = bcspec::to_idempotent(z);
        const bcspec::BiComplex back = bcspec::from_idempotent(p);
        const double resid = bcspec::euclid_norm(back - z);
        const bcspec::Hyperbolic hn = bcspec::hyper_norm(z);
        json rep{{"kind", "scalar"},
                 {"beta1", complex_json(p.beta1)},
                 {"beta2", complex_json(p.beta2)},
                 {"euclid_norm", bcspec::euclid_norm(z)},
                 {"hyper_norm", bcspec::to_json(hn)},
                 {"reconstruction_residual", resid}};
        std::string text = "Z  = " + bcspec::format_rect(z) + "\n   = " +
                           bcspec::format_idem(z) + "\n|Z| = " +
                           std::to_string(bcspec::euclid_norm(z)) + ", |Z|_k = " +
                           std::to_string(hn.h1()) + " + " + std::to_string(hn.h2()) + "k" +
                           "\nreconstruction residual: " + std::to_string(resid) + "\n";
        emit(opt, rep, text);
        return kExitOk;
    }
    if (in.is_object() && in.contains("entries")) {
        const bcspec::BCMatrix m = bcspec::matrix_from_json(in);
        const auto [left, right] = m.split();
        const double resid = (bcspec::BCMatrix::join(left, right) - m).frobenius_norm();
        json rep{{"kind", "matrix"},
                 {"left", complex_matrix_json(left)},
                 {"right", complex_matrix_json(right)},
                 {"reconstruction_residual", resid}};
        std::string text = "matrix " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                           ", split components:\n";
        for (bcspec::Index i = 0; i < m.rows(); ++i) {
            text += "  row " + std::to_string(i) + ":";
            for (bcspec::Index j = 0; j < m.cols(); ++j)
                text += "  " + bcspec::format_idem(m(i, j));
            text += "\n";
        }
        text += "reconstruction residual: " + std::to_string(resid) + "\n";
        emit(opt, rep, text);
        return kExitOk;
    }
    throw bcspec::ParseError("decompose expects a bicomplex scalar or matrix file");
}

int cmd_spectrum(const Options& opt) {
    const json in = bcspec::load_json_file(opt.input);
    const std::vector<bcspec::BCMatrix> mats = bcspec::tuple_from_json(in);
    if (mats.empty()) throw bcspec::ParseError("tuple file contains no matrices");

    const bcspec::SpectrumSet s = bcspec::bc_joint_point_spectrum(mats, opt.tol);
    const bcspec::RestrictedSpectrum rs = bcspec::restricted_spectrum(mats, opt.tol);
    const bcspec::RadiusBoundReport bound = bcspec::check_radius_bound(mats, opt.p, opt.tol);

    json restricted = json::array();
    for (const auto& pt : rs.points) restricted.push_back(point_json(pt));
    const json rep{{"left_finite", finite_part_json(s.left_finite)},
                   {"right_finite", finite_part_json(s.right_finite)},
                   {"restricted", restricted},
                   {"r_p", bound.r_p},
                   {"norm_p", bound.norm_p},
                   {"bound_holds", bound.holds}};

    std::string text;
    text += "joint point spectrum (finite parts), m = " + std::to_string(s.tuple_len) + ":\n";
    text += "  e1 side (" + std::to_string(s.left_finite.size()) + " tuples):\n";
    for (const auto& t : s.left_finite) {
        text += "   ";
        for (const auto& z : t) text += " (" + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") +
                                        std::to_string(z.imag()) + "i)";
        text += "\n";
    }
    text += "  e2 side (" + std::to_string(s.right_finite.size()) + " tuples):\n";
    for (const auto& t : s.right_finite) {
        text += "   ";
        for (const auto& z : t) text += " (" + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") +
                                        std::to_string(z.imag()) + "i)";
        text += "\n";
    }
    text += "restricted spectrum (" + std::to_string(rs.points.size()) + " points):\n";
    for (const auto& pt : rs.points) {
        text += "   ";
        for (const auto& z : pt) text += " [" + bcspec::format_idem(z) + "]";
        text += "\n";
    }
    std::ostringstream pfmt;
    pfmt << opt.p;
    text += "r_" + pfmt.str() + " = " + std::to_string(bound.r_p) + "\n";
    text += "||T||_" + pfmt.str() + " = " + std::to_string(bound.norm_p) + "\n";
    text += std::string("bound r_p <= ||T||_p: ") + (bound.holds ? "holds" : "VIOLATED") + "\n";
    emit(opt, rep, text);
    return bound.holds ? kExitOk : kExitProperty;
}

int cmd_pair(const Options& opt) {
    const json in = bcspec::load_json_file(opt.input);
    bcspec::PairQueryFile file;
    if (in.is_object() && in.contains("matrices")) {
        const auto mats = bcspec::tuple_from_json(in);
        if (mats.size() != 2)
            throw bcspec::ParseError("pair command needs exactly two matrices, got " +
                                     std::to_string(mats.size()));
        file.t1 = mats[0];
        file.t2 = mats[1];
        json with_pair = in;
        with_pair["T1"] = bcspec::to_json(mats[0]);
        with_pair["T2"] = bcspec::to_json(mats[1]);
        with_pair.erase("matrices");
        file = bcspec::pair_query_from_json(with_pair);
    } else {
        file = bcspec::pair_query_from_json(in);
    }

    const bcspec::PairSpectrumSet sp = bcspec::pair_point_spectrum(file.t1, file.t2, opt.tol);
    const bcspec::PairSpectrumSet sr = bcspec::pair_residual_spectrum(file.t1, file.t2, opt.tol);

    json queries = json::array();
    std::string qtext;
    for (const auto& [z1, z2] : file.queries) {
        const bcspec::MembershipReport joint =
            bcspec::in_joint_spectrum(z1, z2, file.t1, file.t2, opt.tol);
        const bcspec::MembershipReport ap =
            bcspec::in_approximate_point_spectrum(z1, z2, file.t1, file.t2, opt.tol);
        const double smin = joint.side == bcspec::Side::e2
                                ? joint.smin_e2
                                : (joint.side == bcspec::Side::e1
                                       ? joint.smin_e1
                                       : std::min(joint.smin_e1, joint.smin_e2));
        queries.push_back(json{{"joint", joint.member},
                               {"ap", ap.member},
                               {"side", side_name(joint.side)},
                               {"smin", smin}});
        qtext += "  query z1 = " + bcspec::format_idem(z1) + ", z2 = " + bcspec::format_idem(z2) +
                 "\n    joint: " + (joint.member ? "yes" : "no") +
                 ", approximate-point: " + (ap.member ? "yes" : "no") +
                 ", side: " + side_name(joint.side) + ", smin = " + std::to_string(smin) + "\n";
    }

    const json rep{{"point_spectrum",
                    json{{"left_finite", pair_finite_json(sp.left_finite)},
                         {"right_finite", pair_finite_json(sp.right_finite)}}},
                   {"residual_spectrum",
                    json{{"left_finite", pair_finite_json(sr.left_finite)},
                         {"right_finite", pair_finite_json(sr.right_finite)}}},
                   {"queries", queries}};

    std::string text = "pair point spectrum: " + std::to_string(sp.left_finite.size()) +
                       " e1 pairs, " + std::to_string(sp.right_finite.size()) + " e2 pairs\n" +
                       "pair residual spectrum: " + std::to_string(sr.left_finite.size()) +
                       " e1 pairs, " + std::to_string(sr.right_finite.size()) + " e2 pairs\n" +
                       (file.queries.empty() ? std::string() :
                        "queries (" + std::to_string(file.queries.size()) + "):\n" + qtext);
    emit(opt, rep, text);
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    if (opt.trials < 1) {
        std::cerr << "error: --trials must be at least 1\n";
        return kExitInput;
    }
    const bcspec::VerifyReport rep = bcspec::run_property_suite(opt.seed, opt.trials, opt.tol);

    json props = json::array();
    std::string text;
    for (const auto& p : rep.properties) {
        props.push_back(json{{"name", p.name},
                             {"trials", p.trials},
                             {"failures", p.failures},
                             {"worst", p.worst}});
        text += (p.failures == 0 ? "PASS " : "FAIL ") + p.name + ": " +
                std::to_string(p.trials - p.failures) + "/" + std::to_string(p.trials) +
                " checks\n";
    }
    const json machine{{"seed", rep.seed},
                       {"trials", rep.trials},
                       {"properties", props},
                       {"all_passed", rep.all_passed}};
    text += rep.all_passed ? "all properties hold\n" : "PROPERTY FAILURE\n";
    emit(opt, machine, text);
    return rep.all_passed ? kExitOk : kExitProperty;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"spectral computations for commuting matrix tuples over the bicomplex ring"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input", opt.input, "input JSON file");
        if (needs_input) in->required();
        sub->add_option("--p", opt.p, "norm exponent p >= 1")->check(CLI::Range(1.0, 1e9));
        sub->add_option("--tol-sing", opt.tol.sing, "singularity tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--tol-eig", opt.tol.eig, "eigenpair residual tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--tol-match", opt.tol.match, "spectrum matching tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--tol-commute", opt.tol.commute, "commutator tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", opt.seed, "seed for randomized checks");
        sub->add_option("--trials", opt.trials, "trial count for randomized checks");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "machine"}));
    };

    CLI::App* decompose =
        app.add_subcommand("decompose", "idempotent split of a scalar or matrix");
    add_common(decompose, true);
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "joint point and restricted spectrum, r_p, ||T||_p, bound check");
    add_common(spectrum, true);
    CLI::App* pair = app.add_subcommand(
        "pair", "block-matrix membership, approximate point, point and residual spectra");
    add_common(pair, true);
    CLI::App* verify = app.add_subcommand("verify", "randomized property suite");
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (decompose->parsed()) return cmd_decompose(opt);
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (pair->parsed()) return cmd_pair(opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const bcspec::NotCommuting& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const bcspec::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const bcspec::BadExponent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
