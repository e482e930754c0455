// Batch front end: chi2 / delta / polytope pipelines over presentation
// files, the Seifert and JSJ closed forms, norm comparison, and the
// self-test suite.
//
// Exit codes: 0 success, 1 mathematical non-acyclicity, 2 input or parse
// error, 3 size-guard abort.
#include "l2euler/acceptance.hpp"
#include "l2euler/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>

namespace {

using namespace l2euler;
using nlohmann::json;
namespace fs = std::filesystem;

enum ExitCode { kOk = 0, kNonAcyclic = 1, kInputError = 2, kSizeGuard = 3 };

struct Options {
    bool all_columns = false;
    long long scaling_sweep = 0;
    std::string format = "table";
    std::size_t limit_bytes = std::size_t(1) << 26;
};

// Directories expand to their *.json files, sorted by name.
std::vector<std::string> expand_inputs(const std::vector<std::string>& paths)
{
    std::vector<std::string> files;
    for (const std::string& p : paths) {
        if (fs::is_directory(p)) {
            std::vector<std::string> inner;
            for (const auto& entry : fs::directory_iterator(p))
                if (entry.is_regular_file() && entry.path().extension() == ".json")
                    inner.push_back(entry.path().string());
            std::sort(inner.begin(), inner.end());
            files.insert(files.end(), inner.begin(), inner.end());
        } else {
            files.push_back(p);
        }
    }
    return files;
}

int record_exit_code(const RunRecord& r)
{
    if (r.ok) return kOk;
    if (r.error_kind == "non_acyclic") return kNonAcyclic;
    if (r.error_kind == "size_guard") return kSizeGuard;
    return kInputError;
}

void classify(RunRecord& rec, const std::exception& e)
{
    rec.ok = false;
    rec.error_message = e.what();
    if (dynamic_cast<const NonAcyclicError*>(&e))
        rec.error_kind = "non_acyclic";
    else if (dynamic_cast<const SizeGuardError*>(&e))
        rec.error_kind = "size_guard";
    else
        rec.error_kind = "input";
}

void print_record(const RunRecord& rec, const Options& opt)
{
    if (opt.format == "records") {
        std::cout << record_to_json(rec) << "\n";
        return;
    }
    std::cout << rec.input << "  [" << rec.command << "]  ";
    if (rec.ok && rec.result) {
        std::cout << "chi2 = " << rec.result->chi2
                  << "  thurston_lower_bound = " << rec.result->thurston_lower_bound;
        if (rec.result->diag.trivial_phi_branch) std::cout << "  (trivial phi)";
    } else if (rec.ok) {
        std::cout << rec.extra;
    } else {
        std::cout << "error(" << rec.error_kind << "): " << rec.error_message;
    }
    std::cout << "\n";
}

RunRecord run_file(const std::string& path, const std::string& command, const Options& opt)
{
    RunRecord rec;
    rec.input = path;
    rec.command = command;
    const auto start = std::chrono::steady_clock::now();
    try {
        PresentationFile f = load_presentation_file(path);
        PipelineOptions popts;
        popts.all_columns = opt.all_columns;
        popts.diagonalize.size_guard_bytes = opt.limit_bytes;

        EulerResult r = f.closed()
                            ? chi2_closed(f.presentation, *f.dual_generators, f.quotient,
                                          f.phi, popts)
                            : chi2_boundary(f.presentation, f.quotient, f.phi, popts);
        if (opt.scaling_sweep > 1) {
            for (long long k = 2; k <= opt.scaling_sweep; ++k) {
                PhiSpec scaled = f.phi;
                for (auto& c : scaled.covector) c *= k;
                scaled.c *= k;
                EulerResult rk = f.closed()
                                     ? chi2_closed(f.presentation, *f.dual_generators,
                                                   f.quotient, scaled, popts)
                                     : chi2_boundary(f.presentation, f.quotient, scaled, popts);
                if (rk.chi2 != k * r.chi2)
                    throw std::logic_error("scaling sweep mismatch at k = " + std::to_string(k));
            }
        }
        if (command == "delta") {
            // delta is minus chi2; reuse the diagnostics.
            json extra;
            extra["delta"] = -r.chi2;
            rec.extra = extra.dump();
        }
        if (f.expected_norm && r.thurston_lower_bound > *f.expected_norm)
            throw std::logic_error("lower bound exceeds the recorded norm metadata");
        rec.result = std::move(r);
        rec.ok = true;
    } catch (const std::exception& e) {
        classify(rec, e);
    }
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rec;
}

RunRecord run_polytope(const std::string& path, const Options& opt)
{
    RunRecord rec;
    rec.input = path;
    rec.command = "polytope";
    const auto start = std::chrono::steady_clock::now();
    try {
        PresentationFile f = load_presentation_file(path);
        std::optional<IVec> phi;
        if (f.quotient.kind == QuotientKind::Abelian) phi = f.phi.covector;
        FoxPolytopeResult r = fox_determinant_polytope(f.presentation, f.quotient, phi);
        json extra;
        extra["deleted_column"] = r.deleted_column;
        json verts = json::array();
        for (const auto& v : r.polytope.vertices()) verts.push_back(v);
        extra["vertices"] = verts;
        if (r.seminorm) extra["seminorm"] = r.seminorm->str();
        rec.extra = extra.dump();
        rec.ok = true;
    } catch (const std::exception& e) {
        classify(rec, e);
    }
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rec;
}

int run_batch(const std::vector<std::string>& inputs, const std::string& command,
              const Options& opt)
{
    int exit_code = kOk;
    for (const std::string& path : expand_inputs(inputs)) {
        RunRecord rec =
            command == "polytope" ? run_polytope(path, opt) : run_file(path, command, opt);
        print_record(rec, opt);
        exit_code = std::max(exit_code, record_exit_code(rec));
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact twisted L2-Euler characteristics and Thurston norm bounds"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--all-columns", opt.all_columns,
                 "verify independence of the deleted column/row choice");
    app.add_option("--scaling-sweep", opt.scaling_sweep,
                   "check chi2(k*phi) = k*chi2(phi) for k up to K");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "records"}));
    app.add_option("--limit-bytes", opt.limit_bytes, "size guard for matrix reduction");

    std::vector<std::string> inputs;
    auto* chi2 = app.add_subcommand("chi2", "twisted L2-Euler characteristic of presentations");
    chi2->add_option("files", inputs, "presentation files or directories")->required();

    auto* delta = app.add_subcommand("delta", "higher-order Alexander degree (= -chi2)");
    delta->add_option("files", inputs, "presentation files or directories")->required();

    auto* polytope =
        app.add_subcommand("polytope", "Newton polytope of the deleted Fox determinant");
    polytope->add_option("files", inputs, "presentation files or directories")->required();

    auto* seifert = app.add_subcommand("seifert", "chi2 of a Seifert piece from orbifold data");
    long long genus = 0, boundary = 0, index = 1;
    std::vector<long long> cones;
    seifert->add_option("--genus", genus, "base orbifold genus")->required();
    seifert->add_option("--boundary", boundary, "number of boundary components")->required();
    seifert->add_option("--cone", cones, "cone orders");
    seifert->add_option("--index", index, "fiber index [Z : im(eta)]")->required();

    auto* jsj = app.add_subcommand("jsj-sum", "sum chi2 over decomposition pieces");
    jsj->add_option("files", inputs, "presentation files or directories")->required();

    auto* compare = app.add_subcommand("compare", "compare Thurston bounds of two inputs");
    std::string file_m, file_n;
    compare->add_option("file_M", file_m, "domain manifold presentation")->required();
    compare->add_option("file_N", file_n, "target manifold presentation")->required();

    app.add_subcommand("selftest", "run the acceptance criteria");

    CLI11_PARSE(app, argc, argv);

    try {
        if (chi2->parsed()) return run_batch(inputs, "chi2", opt);
        if (delta->parsed()) return run_batch(inputs, "delta", opt);
        if (polytope->parsed()) return run_batch(inputs, "polytope", opt);

        if (seifert->parsed()) {
            try {
                Rational chi = seifert_chi2(genus, boundary, cones, index);
                json extra;
                extra["chi2"] = chi.str();
                RunRecord rec;
                rec.input = "(seifert)";
                rec.command = "seifert";
                rec.ok = true;
                rec.extra = extra.dump();
                if (opt.format == "records")
                    std::cout << record_to_json(rec) << "\n";
                else
                    std::cout << "seifert chi2 = " << chi.str() << "\n";
                return kOk;
            } catch (const InputError& e) {
                std::cerr << "error(input): " << e.what() << "\n";
                return kInputError;
            }
        }

        if (jsj->parsed()) {
            std::vector<EulerResult> pieces;
            int exit_code = kOk;
            for (const std::string& path : expand_inputs(inputs)) {
                RunRecord rec = run_file(path, "chi2", opt);
                print_record(rec, opt);
                exit_code = std::max(exit_code, record_exit_code(rec));
                if (rec.ok) pieces.push_back(*rec.result);
            }
            if (exit_code == kOk) {
                EulerResult total = jsj_sum(pieces);
                RunRecord rec;
                rec.input = "(sum)";
                rec.command = "jsj-sum";
                rec.ok = true;
                rec.result = total;
                print_record(rec, opt);
            }
            return exit_code;
        }

        if (compare->parsed()) {
            RunRecord rm = run_file(file_m, "chi2", opt);
            RunRecord rn = run_file(file_n, "chi2", opt);
            print_record(rm, opt);
            print_record(rn, opt);
            int exit_code = std::max(record_exit_code(rm), record_exit_code(rn));
            if (exit_code == kOk) {
                const long long bm = rm.result->thurston_lower_bound;
                const long long bn = rn.result->thurston_lower_bound;
                std::cout << "bound(M) = " << bm << ", bound(N) = " << bn << ": "
                          << (bm >= bn ? "bound(M) >= bound(N) holds"
                                       : "WARNING: bound(M) < bound(N); with a genuine "
                                         "pi_1-epimorphism and rational homology equivalence "
                                         "this cannot happen for the norms themselves")
                          << "\n";
                std::cout << "note: bounds are lower bounds for the norms; the solid torus "
                             "S1 x D2 has bound below zero while its norm is 0\n";
            }
            return exit_code;
        }

        // selftest
        bool all = true;
        run_acceptance([&](const CriterionResult& r) {
            std::printf("%s  criterion %2d: %s (%.1f ms)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                        r.description.c_str(), r.ms, r.detail.empty() ? "" : " -- ",
                        r.detail.c_str());
            all = all && r.pass;
        });
        return all ? kOk : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
