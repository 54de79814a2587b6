// mpd: batch front end for multiparameter persistence duality pipelines.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "mpd/cone.hpp"
#include "mpd/gen.hpp"
#include "mpd/io.hpp"
#include "mpd/resolve.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw mpd::ParseError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out.good()) throw mpd::ParseError("cannot open '" + out_path + "' for writing");
    out << data;
}

mpd::Grade parse_grade_list(const std::string& s, int n) {
    std::vector<int32_t> c;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) c.push_back(static_cast<int32_t>(std::stol(tok)));
    if (static_cast<int>(c.size()) != n)
        throw mpd::DomainError("expected " + std::to_string(n) + " comma-separated grades in '" +
                               s + "'");
    return mpd::Grade{std::move(c)};
}

mpd::GridBox parse_box(const std::string& s, int n) {
    size_t semi = s.find(';');
    if (semi == std::string::npos)
        throw mpd::DomainError("expected '--box lo1,...;hi1,...', got '" + s + "'");
    return mpd::GridBox(parse_grade_list(s.substr(0, semi), n),
                        parse_grade_list(s.substr(semi + 1), n));
}

mpd::FreeComplex load_complex(const std::string& path) {
    return mpd::parse_complex(read_file(path));
}

mpd::GridBox default_window(const mpd::FreeComplex& c) {
    return mpd::default_box(c, mpd::default_zeta(c));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiparameter persistence duality toolkit"};
    app.require_subcommand(1);

    std::string filtration_path, complex_path, out_path, zeta_str, box_str, via = "direct";
    int deg = 0;
    bool unreduced = false, relative = false;

    auto* cmd_complex = app.add_subcommand("complex", "filtered chain complex of a filtration");
    cmd_complex->add_option("--filtration", filtration_path, "input .mpfil file")->required();
    cmd_complex->add_flag("--unreduced", unreduced, "skip the augmentation");
    cmd_complex->add_option("-o", out_path, "output .fcc file (stdout if absent)");

    auto* cmd_dagger = app.add_subcommand("dagger", "global dual of a complex");
    cmd_dagger->add_option("--complex", complex_path, "input .fcc file")->required();
    cmd_dagger->add_option("-o", out_path, "output file");

    auto* cmd_cone = app.add_subcommand("cone", "eventually-acyclic replacement");
    cmd_cone->add_option("--complex", complex_path, "input .fcc file")->required();
    cmd_cone->add_option("--zeta", zeta_str, "threshold g1,...,gN (default: join of grades)");
    cmd_cone->add_option("-o", out_path, "output file");

    auto* cmd_restrict = app.add_subcommand("restrict", "delete generators above a threshold");
    cmd_restrict->add_option("--complex", complex_path, "input .fcc file")->required();
    cmd_restrict->add_option("--zeta", zeta_str, "threshold g1,...,gN (default: join of grades)");
    cmd_restrict->add_option("-o", out_path, "output file");

    auto* cmd_hilbert = app.add_subcommand("hilbert", "pointwise homology dimensions on a box");
    cmd_hilbert->add_option("--complex", complex_path, "input .fcc file")->required();
    cmd_hilbert->add_option("--deg", deg, "homology degree")->required();
    cmd_hilbert->add_option("--box", box_str, "grid box lo1,...;hi1,... (default: cone window)");
    cmd_hilbert->add_option("-o", out_path, "output CSV");

    auto* cmd_betti = app.add_subcommand("betti", "graded Betti numbers of homology");
    cmd_betti->add_option("--complex", complex_path, "input .fcc file")->required();
    cmd_betti->add_option("--deg", deg, "homology degree");
    cmd_betti->add_option("--via", via, "direct | cohomological")
        ->check(CLI::IsMember({"direct", "cohomological"}));
    cmd_betti->add_option("-o", out_path, "output CSV");
    bool betti_whole = false;
    cmd_betti->add_flag("--resolution", betti_whole,
                        "treat the input as a resolution and tabulate its ranks");

    auto* cmd_resolve = app.add_subcommand("resolve", "minimal free resolution of homology");
    cmd_resolve->add_option("--complex", complex_path, "input .fcc file")->required();
    cmd_resolve->add_option("--deg", deg, "homology degree")->required();
    cmd_resolve->add_option("--via", via, "direct | cohomological")
        ->check(CLI::IsMember({"direct", "cohomological"}));
    cmd_resolve->add_option("-o", out_path, "output .fcc file");

    auto* cmd_barcode = app.add_subcommand("barcode", "one-parameter barcode");
    cmd_barcode->add_option("--filtration", filtration_path, "input .mpfil file")->required();
    cmd_barcode->add_option("--deg", deg, "homology degree")->required();
    cmd_barcode->add_flag("--relative", relative,
                          "barcode of relative cohomology of (union, K) instead");
    cmd_barcode->add_option("-o", out_path, "output CSV");

    auto* cmd_verify = app.add_subcommand("verify-duality",
                                          "cone, dualize and compare Hilbert functions");
    cmd_verify->add_option("--complex", complex_path, "input .fcc file")->required();
    cmd_verify->add_option("--deg", deg, "homology degree")->required();

    uint64_t seed = 0;
    int gen_params = 2, gen_size = 40;
    int32_t gen_gmax = 6;
    uint32_t gen_p = 2;
    std::string gen_kind = "complex";
    auto* cmd_gen = app.add_subcommand("gen", "random test instance");
    cmd_gen->add_option("--seed", seed, "random seed")->required();
    cmd_gen->add_option("--kind", gen_kind, "complex | filtration")
        ->check(CLI::IsMember({"complex", "filtration"}));
    cmd_gen->add_option("--params", gen_params, "number of parameters");
    cmd_gen->add_option("--size", gen_size, "rank / simplex budget");
    cmd_gen->add_option("--gmax", gen_gmax, "largest grade coordinate");
    cmd_gen->add_option("-p", gen_p, "field order");
    cmd_gen->add_option("-o", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_complex) {
            uint32_t p = 2;
            mpd::Multifiltration k = mpd::parse_filtration(read_file(filtration_path), &p);
            write_output(out_path, mpd::serialize_complex(mpd::chain_complex(k, p, !unreduced)));
        } else if (*cmd_dagger) {
            write_output(out_path, mpd::serialize_complex(mpd::dagger(load_complex(complex_path))));
        } else if (*cmd_cone || *cmd_restrict) {
            mpd::FreeComplex c = load_complex(complex_path);
            mpd::ConeThreshold t = zeta_str.empty()
                                       ? mpd::default_zeta(c)
                                       : mpd::ConeThreshold{parse_grade_list(zeta_str, c.params())};
            mpd::FreeComplex out = *cmd_cone ? mpd::cone_complex(c, t) : mpd::restrict(c, t);
            write_output(out_path, mpd::serialize_complex(out));
        } else if (*cmd_hilbert) {
            mpd::FreeComplex c = load_complex(complex_path);
            mpd::GridBox box = box_str.empty() ? default_window(c) : parse_box(box_str, c.params());
            write_output(out_path, mpd::emit_hilbert(mpd::hilbert_homology(c, box, deg)));
        } else if (*cmd_betti) {
            mpd::FreeComplex c = load_complex(complex_path);
            mpd::FreeComplex g = betti_whole ? c
                                 : via == "direct" ? mpd::mfr_direct(c, deg)
                                                   : mpd::mfr_cohomological(c, deg);
            write_output(out_path, mpd::emit_betti(mpd::betti_table(g), c.params()));
        } else if (*cmd_resolve) {
            mpd::FreeComplex c = load_complex(complex_path);
            mpd::FreeComplex g =
                via == "direct" ? mpd::mfr_direct(c, deg) : mpd::mfr_cohomological(c, deg);
            write_output(out_path, mpd::serialize_complex(g));
        } else if (*cmd_barcode) {
            uint32_t p = 2;
            mpd::Multifiltration k = mpd::parse_filtration(read_file(filtration_path), &p);
            if (k.params != 1)
                throw mpd::UnsupportedParameterError("barcodes need a one-parameter filtration");
            mpd::Barcode b = relative ? mpd::relative_barcode_1d(k, deg, p)
                                      : mpd::barcode_1d(mpd::chain_complex(k, p, true), deg);
            b.normalize();
            write_output(out_path, mpd::emit_barcode(b, deg));
        } else if (*cmd_verify) {
            mpd::FreeComplex c = load_complex(complex_path);
            int n = c.params();
            mpd::ConeThreshold t = mpd::default_zeta(c);
            mpd::FreeComplex hat = mpd::cone_complex(c, t);
            mpd::FreeComplex dual = mpd::dagger(hat);
            mpd::GridBox box = mpd::default_box(hat, t);
            mpd::HilbertFunction lhs = mpd::hilbert_homology(hat, box, deg);
            mpd::HilbertFunction rhs = mpd::hilbert_homology(dual, box.negated(), -(deg + n));
            bool all_ok = true;
            for (int64_t i = 0; i < box.size(); ++i) {
                mpd::Grade z = box.at(i);
                bool ok = lhs.at(deg, z) == rhs.at(-(deg + n), -z);
                all_ok = all_ok && ok;
                std::cout << z.str() << (ok ? " PASS" : " FAIL") << '\n';
            }
            return all_ok ? 0 : 1;
        } else if (*cmd_gen) {
            std::mt19937_64 rng(seed);
            if (gen_kind == "complex") {
                write_output(out_path, mpd::serialize_complex(mpd::random_complex(
                                           rng, gen_params, gen_p, gen_size, gen_gmax)));
            } else {
                write_output(out_path, mpd::serialize_filtration(
                                           mpd::random_filtration(rng, gen_params, gen_size,
                                                                  gen_gmax),
                                           gen_p));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
