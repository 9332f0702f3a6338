#include "runbits/cli.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "runbits/errors.hpp"
#include "runbits/records.hpp"
#include "runbits/seqio.hpp"
#include "runbits/transforms.hpp"

namespace runbits {

namespace {

struct PadOptions {
    std::string mode = "append";
    std::string d0;
    std::string d1;

    void attach(CLI::App& app) {
        app.add_option("--mode", mode, "append | prepend")->capture_default_str();
        app.add_option("--d0", d0, "pad for 0-runs, e.g. 0, 01, or \"\" for empty")->required();
        app.add_option("--d1", d1, "pad for 1-runs, e.g. 1, 10, or \"\" for empty")->required();
    }

    TransformSpec spec() const { return {Bitstring(d0), Bitstring(d1), parse_pad_mode(mode)}; }
};

Nat parse_positive(const std::string& text, const char* flag) {
    Nat n = Nat::from_decimal(text);
    if (n.is_zero()) throw DomainError(std::string(flag) + " must be >= 1");
    return n;
}

void require_positive(std::uint64_t v, const char* flag) {
    if (v == 0) throw DomainError(std::string(flag) + " must be >= 1");
}

BFile read_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LookupError("cannot open " + path);
    return parse_bfile(in);
}

void write_bfile_to(const std::string& path, const BFile& file) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw LookupError("cannot write " + path);
    write_bfile(os, file);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Run-padding transforms on binary representations and their record values."};
    app.require_subcommand(1);

    // transform
    auto* transform = app.add_subcommand("transform", "f(n,d0,d1) (append) or g(n,d0,d1) (prepend)");
    std::string n_text;
    PadOptions tpads;
    bool show_bits = false;
    transform->add_option("--n", n_text, "natural number >= 1")->required();
    tpads.attach(*transform);
    transform->add_flag("--show-bits", show_bits, "also print the raw expanded bitstring");

    // inverse
    auto* inverse = app.add_subcommand("inverse", "delete one bit from every run of n; prints EMPTY if nothing is left");
    std::string inv_text;
    inverse->add_option("--n", inv_text, "natural number >= 1")->required();

    // records
    auto* records = app.add_subcommand(
        "records",
        "brute-force record scan; prints one \"index value\" line per record "
        "(with --report: index value value_bits value_bitstring)");
    PadOptions rpads;
    std::uint64_t limit = 0, chunk = 4096;
    std::string bfile_path;
    bool human = false;
    rpads.attach(*records);
    records->add_option("--limit", limit, "scan n in [1, limit]")->required();
    records->add_option("--chunk", chunk, "parallel chunk width")->capture_default_str();
    records->add_option("--bfile", bfile_path, "also write record values as a b-file (index = record ordinal)");
    records->add_flag("--report", human, "human-readable listing");

    // enumerate-t
    auto* enum_t = app.add_subcommand("enumerate-t", "first members of T (1010... with at most one 0 doubled)");
    std::uint64_t t_count = 0;
    enum_t->add_option("--count", t_count, "number of members")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check a claim; last line is RESULT: PASS|FAIL");
    verify->require_subcommand(1);
    auto* theorem = verify->add_subcommand("theorem", "record indices equal T for nonempty equal-length pads");
    PadOptions vpads;
    std::uint64_t theorem_max = 0, theorem_chunk = 4096;
    vpads.attach(*theorem);
    theorem->add_option("--max-n", theorem_max, "scan n in [1, max-n]")->required();
    theorem->add_option("--chunk", theorem_chunk, "parallel chunk width")->capture_default_str();
    auto* bound = verify->add_subcommand("bound", "5 f(n,0,1) <= 9n^2+12n, equality exactly at (2/3)(4^k-1)");
    std::uint64_t bound_max = 0;
    bound->add_option("--max-n", bound_max, "check n in [1, max-n]")->required();
    auto* identities = verify->add_subcommand("identities", "length formulas, string identity, left inverse");
    std::uint64_t ident_max = 0;
    identities->add_option("--max-n", ident_max, "check n in [1, max-n]")->required();

    // emit
    std::string keys_help = "registry key:";
    for (const auto& k : SequenceRegistry::standard().keys()) keys_help += " " + k;
    auto* emit = app.add_subcommand("emit", "write a b-file (\"index value\" per line)");
    std::string emit_key, emit_out;
    std::uint64_t emit_count = 0;
    emit->add_option("--key", emit_key, keys_help)->required();
    emit->add_option("--count", emit_count, "number of terms")->required();
    emit->add_option("--out", emit_out, "output path (default: stdout)");

    // diff
    auto* diff = app.add_subcommand("diff", "compare two b-files; exit 1 on divergence or offset mismatch");
    std::string diff_a, diff_b;
    diff->add_option("--a", diff_a, "first b-file")->required();
    diff->add_option("--b", diff_b, "second b-file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*transform) {
            Nat n = parse_positive(n_text, "--n");
            TransformSpec spec = tpads.spec();
            out << apply_transform(n, spec) << '\n';
            if (show_bits) out << "bits: " << expand_str(to_bitstring(n), spec).str() << '\n';
            return kExitOk;
        }
        if (*inverse) {
            auto v = shrink_runs(parse_positive(inv_text, "--n"));
            if (v)
                out << *v << '\n';
            else
                out << "EMPTY\n";
            return kExitOk;
        }
        if (*records) {
            require_positive(limit, "--limit");
            require_positive(chunk, "--chunk");
            ScanConfig cfg{rpads.spec(), limit, chunk};
            auto entries = scan_records(cfg);
            if (human) {
                write_records_text(out, cfg, entries);
            } else {
                write_records_structured(out, entries);
                if (!cfg.spec.satisfies_record_hypothesis())
                    err << "note: pads are empty or of unequal length; no theorem guarantee\n";
            }
            if (!bfile_path.empty()) {
                BFile file;
                std::uint64_t ordinal = 1;
                for (auto& e : entries) file.entries.emplace_back(ordinal++, e.value);
                write_bfile_to(bfile_path, file);
            }
            return kExitOk;
        }
        if (*enum_t) {
            require_positive(t_count, "--count");
            for (const Nat& v : enumerate_t(t_count)) out << v << '\n';
            return kExitOk;
        }
        if (*theorem) {
            require_positive(theorem_max, "--max-n");
            require_positive(theorem_chunk, "--chunk");
            TheoremReport report = check_theorem({vpads.spec(), theorem_max, theorem_chunk});
            write_report(out, report);
            return report.verdict ? kExitOk : kExitFail;
        }
        if (*bound) {
            require_positive(bound_max, "--max-n");
            BoundReport report = check_bound(bound_max);
            write_report(out, report);
            return report.passed() ? kExitOk : kExitFail;
        }
        if (*identities) {
            require_positive(ident_max, "--max-n");
            auto results = check_identities(ident_max);
            write_report(out, results);
            for (const auto& r : results)
                if (!r.passed()) return kExitFail;
            return kExitOk;
        }
        if (*emit) {
            require_positive(emit_count, "--count");
            BFile file = emit_bfile(emit_key, emit_count);
            if (emit_out.empty())
                write_bfile(out, file);
            else
                write_bfile_to(emit_out, file);
            return kExitOk;
        }
        if (*diff) {
            BFileDiff d = diff_bfiles(read_bfile(diff_a), read_bfile(diff_b));
            out << describe(d) << '\n';
            return (d.offset_mismatch || d.first_divergence) ? kExitFail : kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace runbits
