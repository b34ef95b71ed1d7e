// Command-line front end: one subcommand per library operation, plus the
// composed `campaign` pipeline with hex-line checkpoint files between
// stages. Results go to stdout, progress and statistics to stderr.

#include <filesystem>
#include <iostream>
#include <map>
#include <set>

#include "CLI11.hpp"
#include "bnt/bent.hpp"
#include "bnt/equiv.hpp"
#include "bnt/expand.hpp"
#include "bnt/io.hpp"
#include "bnt/normality.hpp"
#include "bnt/parallel.hpp"
#include "bnt/sieve.hpp"

using namespace bnt;

namespace {

const char* kind_name(NormKind k) {
    switch (k) {
        case NormKind::Normal: return "normal";
        case NormKind::WeaklyNormal: return "weakly-normal";
        default: return "abnormal";
    }
}

const char* spec_name(SpecKind k) {
    switch (k) {
        case SpecKind::Bent: return "bent";
        case SpecKind::NearBent: return "near-bent";
        default: return "other";
    }
}

void cmd_analyze(const std::string& in) {
    FunctionFile ff = read_function_file(in);
    for (size_t i = 0; i < ff.functions.size(); ++i) {
        const BoolFun& f = ff.functions[i];
        FunStats s = stats(f);
        NormalityClass nc = classify_normality(f);
        std::cout << "function " << i << ": " << format_hex(f) << "\n"
                  << "  deg=" << s.deg << " wt=" << s.wt << " class="
                  << spec_name(spectral_class(f).kind) << "\n"
                  << "  normality=" << kind_name(nc.kind)
                  << " half_degree=" << nc.half_degree;
        if (nc.witness) std::cout << " witness=" << format_flat(*nc.witness);
        std::cout << "\n";
    }
}

void cmd_spectrum(const std::string& in) {
    FunctionFile ff = read_function_file(in);
    for (const BoolFun& f : ff.functions) {
        WalshSpectrum w = walsh(f);
        for (size_t a = 0; a < w.values.size(); ++a)
            std::cout << (a ? " " : "") << w.values[a];
        std::cout << "\n";
    }
}

void cmd_rdegree(const std::string& in, int r) {
    FunctionFile ff = read_function_file(in);
    for (const BoolFun& f : ff.functions) {
        RDegree d = r_degree(f, r);
        std::cout << "deg_" << r << "=" << d.value << " witness=" << format_flat(d.witness)
                  << "\n";
    }
}

void cmd_abnormal(const std::string& in) {
    FunctionFile ff = read_function_file(in);
    for (const BoolFun& f : ff.functions) {
        NormalityClass nc = classify_normality(f);
        std::cout << kind_name(nc.kind);
        if (nc.witness) std::cout << " witness=" << format_flat(*nc.witness);
        std::cout << "\n";
    }
}

void cmd_sieve(const std::string& in, const std::string& out, int workers, bool emit_abnormal) {
    FunctionFile ff = read_function_file(in);
    std::vector<BoolFun> emitted;
    for (size_t i = 0; i < ff.functions.size(); ++i) {
        const BoolFun& f = ff.functions[i];
        QSet q = sieving(f, workers);
        std::cout << "function " << i << ": |Q(f)|=" << q.count() << "\n";
        for (uint32_t idx : q.members()) {
            BoolFun qf = quad_to_fun({ff.m, idx});
            std::cout << "  q: " << format_anf(qf) << "\n";
            if (emit_abnormal) emitted.push_back(add(f, qf));
        }
        std::cerr << "sieve: " << (i + 1) << "/" << ff.functions.size() << " done\n";
    }
    if (!out.empty()) write_function_file(out, ff.m, emitted);
}

void cmd_expand(const std::string& in, const std::string& out, int budget, bool verify) {
    FunctionFile ff = read_function_file(in);
    std::vector<BoolFun> all;
    for (size_t i = 0; i < ff.functions.size(); ++i) {
        auto exps = expansion(ff.functions[i], ExpandOptions{budget, verify});
        std::cout << "function " << i << ": " << exps.size() << " bent expansions\n";
        for (const BoolFun& f : exps) {
            std::cout << "  " << format_hex(f) << "\n";
            all.push_back(f);
        }
    }
    if (!out.empty()) write_function_file(out, ff.m + 1, all);
}

int cmd_verify_ea(const std::string& in, const std::string& cert_text) {
    FunctionFile ff = read_function_file(in);
    if (ff.functions.size() != 2)
        throw std::runtime_error("verify-ea: input file must contain exactly two functions");
    EACertificate cert = parse_certificate(cert_text, ff.m);
    uint32_t cx = 0;
    if (verify_ea_certificate(ff.functions[0], ff.functions[1], cert, &cx)) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid at x=" << cx << "\n";
    return 1;
}

int cmd_campaign(const std::string& in, const std::string& stage, const std::string& outdir,
                 int workers, int budget) {
    std::filesystem::create_directories(outdir);
    FunctionFile ff = read_function_file(in);
    if (stage == "sieve") {
        // abnormal quadratic perturbations that are near-bent: the inputs
        // of the expansion stage
        std::vector<BoolFun> found;
        for (size_t i = 0; i < ff.functions.size(); ++i) {
            QSet q = sieving(ff.functions[i], workers);
            for (uint32_t idx : q.members()) {
                BoolFun g = add(ff.functions[i], quad_to_fun({ff.m, idx}));
                if (is_near_bent(g)) found.push_back(g);
            }
            std::cerr << "campaign sieve: " << (i + 1) << "/" << ff.functions.size()
                      << ", near-bent survivors so far: " << found.size() << "\n";
        }
        write_function_file(outdir + "/sieve.hex", ff.m, found);
        std::cout << "sieve: " << found.size() << " abnormal near-bent functions\n";
    } else if (stage == "dedup") {
        std::map<std::vector<uint8_t>, size_t> orbit;  // fingerprint blob -> representative
        std::vector<Fingerprint> fps(ff.functions.size());
        parallel_chunks(ff.functions.size(), workers, [&](int, uint64_t b, uint64_t e) {
            for (uint64_t i = b; i < e; ++i) fps[i] = fingerprint(ff.functions[i]);
        });
        std::vector<BoolFun> reps;
        std::vector<Fingerprint> seen;
        for (size_t i = 0; i < ff.functions.size(); ++i) {
            bool dup = false;
            for (const Fingerprint& s : seen)
                if (s == fps[i]) {
                    dup = true;
                    break;
                }
            if (!dup) {
                seen.push_back(fps[i]);
                reps.push_back(ff.functions[i]);
            }
        }
        write_function_file(outdir + "/dedup.hex", ff.m, reps);
        std::cout << "dedup: " << reps.size() << " fingerprint buckets from "
                  << ff.functions.size() << " functions\n";
    } else if (stage == "expand") {
        std::vector<BoolFun> all;
        for (size_t i = 0; i < ff.functions.size(); ++i) {
            auto exps = expansion(ff.functions[i], ExpandOptions{budget, true});
            all.insert(all.end(), exps.begin(), exps.end());
            std::cerr << "campaign expand: " << (i + 1) << "/" << ff.functions.size()
                      << ", expansions so far: " << all.size() << "\n";
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        write_function_file(outdir + "/expand.hex", ff.m + 1, all);
        std::cout << "expand: " << all.size() << " bent expansions\n";
    } else if (stage == "check") {
        uint64_t normal = 0, weakly = 0, abnormal = 0;
        std::vector<uint64_t> per(std::max(1, workers), 0), perw(std::max(1, workers), 0),
            pera(std::max(1, workers), 0);
        for (size_t i = 0; i < ff.functions.size(); ++i)
            if (!is_bent(ff.functions[i]))
                throw std::runtime_error("check: input " + std::to_string(i) + " is not bent");
        parallel_chunks(ff.functions.size(), workers, [&](int w, uint64_t b, uint64_t e) {
            for (uint64_t i = b; i < e; ++i) {
                switch (classify_normality(ff.functions[i]).kind) {
                    case NormKind::Normal: ++per[w]; break;
                    case NormKind::WeaklyNormal: ++perw[w]; break;
                    default: ++pera[w]; break;
                }
            }
        });
        for (size_t w = 0; w < per.size(); ++w) {
            normal += per[w];
            weakly += perw[w];
            abnormal += pera[w];
        }
        std::cout << "check: normal=" << normal << " weakly-normal=" << weakly
                  << " abnormal=" << abnormal << "\n";
        return abnormal == 0 ? 0 : 2;
    } else {
        throw std::runtime_error("campaign: unknown stage " + stage);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normality analysis of Boolean functions"};
    app.require_subcommand(1);

    std::string in, out, cert_text, stage;
    int r = 1;
    int workers = default_workers();
    int budget = 24;
    bool verify = false, emit_abnormal = false;

    auto add_in = [&](CLI::App* c) {
        c->add_option("--in", in, "input function file (m=<int> header, hex lines)")->required();
    };

    add_in(app.add_subcommand("analyze", "degree, weight, spectrum class, normality"));
    add_in(app.add_subcommand("spectrum", "full Walsh spectrum, one row per function"));
    CLI::App* c_rdeg = app.add_subcommand("rdegree", "minimum relative degree over r-flats");
    add_in(c_rdeg);
    c_rdeg->add_option("--r", r, "flat dimension")->required();
    add_in(app.add_subcommand("abnormal", "normal / weakly-normal / abnormal with witness"));

    CLI::App* c_sieve = app.add_subcommand("sieve", "quadratic perturbations q with f+q abnormal");
    add_in(c_sieve);
    c_sieve->add_option("--out", out, "write f+q functions to this file");
    c_sieve->add_option("--workers", workers, "worker threads");
    c_sieve->add_flag("--emit-abnormal", emit_abnormal, "collect f+q into --out");

    CLI::App* c_expand = app.add_subcommand("expand", "all bent expansions of near-bent inputs");
    add_in(c_expand);
    c_expand->add_option("--out", out, "write expansions to this file");
    c_expand->add_option("--budget", budget, "free-position enumeration budget (bits)");
    c_expand->add_flag("--verify", verify, "re-check every output");

    CLI::App* c_vea = app.add_subcommand("verify-ea", "check an explicit equivalence certificate");
    add_in(c_vea);
    c_vea->add_option("--cert", cert_text, "A=<hex rows>;b=<hex>;a=<ANF>")->required();

    CLI::App* c_camp = app.add_subcommand("campaign", "sieve | dedup | expand | check pipeline stage");
    add_in(c_camp);
    c_camp->add_option("--stage", stage, "pipeline stage")->required();
    c_camp->add_option("--out", out, "checkpoint directory")->required();
    c_camp->add_option("--workers", workers, "worker threads");
    c_camp->add_option("--budget", budget, "expansion budget (bits)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("analyze")) cmd_analyze(in);
        else if (app.got_subcommand("spectrum")) cmd_spectrum(in);
        else if (app.got_subcommand("rdegree")) cmd_rdegree(in, r);
        else if (app.got_subcommand("abnormal")) cmd_abnormal(in);
        else if (app.got_subcommand("sieve")) cmd_sieve(in, out, workers, emit_abnormal);
        else if (app.got_subcommand("expand")) cmd_expand(in, out, budget, verify);
        else if (app.got_subcommand("verify-ea")) return cmd_verify_ea(in, cert_text);
        else if (app.got_subcommand("campaign")) return cmd_campaign(in, stage, out, workers, budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
