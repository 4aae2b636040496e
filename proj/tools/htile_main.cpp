// Command-line front end. Talks to the library exclusively through the
// public C interface in htile/htile.h.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "htile/htile.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitInputError = 2;

struct ComplexDeleter {
    void operator()(htile_complex* c) const { htile_complex_free(c); }
};
struct TilingDeleter {
    void operator()(htile_tiling* t) const { htile_tiling_free(t); }
};
struct ShellingDeleter {
    void operator()(htile_shelling* r) const { htile_shelling_free(r); }
};
using ComplexPtr = std::unique_ptr<htile_complex, ComplexDeleter>;
using TilingPtr = std::unique_ptr<htile_tiling, TilingDeleter>;
using ShellingPtr = std::unique_ptr<htile_shelling, ShellingDeleter>;

struct StringOut {
    char* s = nullptr;
    ~StringOut() { htile_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

[[noreturn]] void fail(htile_status) {
    std::fprintf(stderr, "error: %s\n", htile_last_error());
    std::exit(kExitInputError);
}

void check(htile_status status) {
    if (status != HTILE_OK) fail(status);
}

std::vector<int> parse_face(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    if (out.empty()) {
        std::fprintf(stderr, "error: empty face\n");
        std::exit(kExitInputError);
    }
    return out;
}

void guard_overwrite(const std::string& path, bool force) {
    if (!force && std::filesystem::exists(path)) {
        std::fprintf(stderr, "error: %s exists (use --force to overwrite)\n", path.c_str());
        std::exit(kExitInputError);
    }
}

ComplexPtr load_complex(const std::string& path) {
    htile_complex* c = nullptr;
    check(htile_complex_read(path.c_str(), &c));
    return ComplexPtr(c);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tilings and shellings of finite relative simplicial complexes"};
    app.require_subcommand(1);
    bool force = false;
    app.add_flag("--force,-f", force, "overwrite existing output files");

    // generate
    auto* gen = app.add_subcommand("generate", "write a generated complex");
    std::string gen_name, gen_out, gen_input, gen_input2;
    int gen_n = 0, gen_count = 2;
    gen->add_option("--name", gen_name,
                    "simplex|boundary|wedge_two_simplices|disjoint_simplices|cone|join")
        ->required();
    gen->add_option("--n", gen_n, "dimension parameter");
    gen->add_option("--count", gen_count, "copies for disjoint_simplices");
    gen->add_option("--input", gen_input, "base complex for cone/join");
    gen->add_option("--input2", gen_input2, "second complex for join");
    gen->add_option("--output,-o", gen_out, "output complex file")->required();

    // subdivide
    auto* sub = app.add_subcommand("subdivide", "apply one stellar subdivision");
    std::string sub_at, sub_in, sub_out;
    bool sub_tiling = false;
    sub->add_option("--at", sub_at, "face vertices, e.g. \"0 1 2\"")->required();
    sub->add_option("--input,-i", sub_in, "input file")->required();
    sub->add_option("--output,-o", sub_out, "output file")->required();
    sub->add_flag("--tiling", sub_tiling, "input/output are tiling files");

    // shell
    auto* shell = app.add_subcommand("shell", "compute a shelled tiling");
    std::string shell_mode = "facets", shell_in, shell_out;
    bool shell_pm = false;
    shell->add_option("--mode", shell_mode, "barycentric|facets|ridges|mixed");
    shell->add_option("--input,-i", shell_in, "input complex file")->required();
    shell->add_option("--output,-o", shell_out, "output prefix")->required();
    shell->add_flag("--pseudomanifold", shell_pm, "use the pseudomanifold filtration");

    // verify
    auto* verify = app.add_subcommand("verify", "validate a tiling file");
    std::string verify_in;
    bool verify_shelling = false, verify_verbose = false;
    verify->add_option("--input,-i", verify_in, "tiling file")->required();
    verify->add_flag("--shelling", verify_shelling, "also check the shelling order");
    verify->add_flag("--verbose,-v", verify_verbose, "print every witness");

    // vectors
    auto* vectors = app.add_subcommand("vectors", "tile-count vectors and identity checks");
    std::string vectors_in;
    bool vectors_manifold = false;
    vectors->add_option("--input,-i", vectors_in, "tiling file")->required();
    vectors->add_flag("--manifold", vectors_manifold,
                      "target is a closed homology manifold (caller-asserted)");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "exhaustive tiling search (guardrailed)");
    std::string enum_in, enum_emit;
    std::size_t enum_limit = static_cast<std::size_t>(-1);
    bool enum_min = false, enum_shellable = false;
    enumerate->add_option("--input,-i", enum_in, "complex file")->required();
    enumerate->add_option("--limit", enum_limit, "cap on reported tilings");
    enumerate->add_option("--emit", enum_emit, "write tiling files with this prefix");
    enumerate->add_flag("--min-critical", enum_min, "report the minimal critical count");
    enumerate->add_flag("--shellable", enum_shellable, "restrict to shellable tilings");

    // cross-check
    auto* cross = app.add_subcommand("cross-check", "compare construction against enumeration");
    std::string cross_in;
    cross->add_option("--input,-i", cross_in, "complex file")->required();

    CLI11_PARSE(app, argc, argv);

    if (*gen) {
        htile_complex* c = nullptr;
        if (gen_name == "cone") {
            ComplexPtr base = load_complex(gen_input);
            check(htile_complex_cone(base.get(), &c));
        } else if (gen_name == "join") {
            ComplexPtr a = load_complex(gen_input);
            ComplexPtr b = load_complex(gen_input2);
            check(htile_complex_join(a.get(), b.get(), &c));
        } else {
            check(htile_complex_generate(gen_name.c_str(), gen_n, gen_count, &c));
        }
        ComplexPtr holder(c);
        guard_overwrite(gen_out, force);
        check(htile_complex_write(c, gen_out.c_str()));
        return kExitOk;
    }

    if (*sub) {
        std::vector<int> face = parse_face(sub_at);
        guard_overwrite(sub_out, force);
        if (sub_tiling) {
            htile_tiling* t = nullptr;
            check(htile_tiling_read(sub_in.c_str(), &t));
            TilingPtr holder(t);
            htile_tiling* next = nullptr;
            check(htile_tiling_subdivide(t, face.data(), face.size(), &next));
            TilingPtr next_holder(next);
            std::string cx_path = sub_out + ".cx";
            guard_overwrite(cx_path, force);
            htile_complex* target = nullptr;
            check(htile_tiling_target(next, &target));
            ComplexPtr target_holder(target);
            check(htile_complex_write(target, cx_path.c_str()));
            check(htile_tiling_write(next, sub_out.c_str(),
                                     std::filesystem::path(cx_path).filename().string().c_str()));
        } else {
            ComplexPtr c = load_complex(sub_in);
            htile_complex* next = nullptr;
            int apex = -1;
            check(htile_complex_stellar_subdivide(c.get(), face.data(), face.size(), &next,
                                                  &apex));
            ComplexPtr next_holder(next);
            check(htile_complex_write(next, sub_out.c_str()));
            std::printf("apex = %d\n", apex);
        }
        return kExitOk;
    }

    if (*shell) {
        ComplexPtr c = load_complex(shell_in);
        htile_shelling* r = nullptr;
        check(shell_pm ? htile_shell_pseudomanifold(c.get(), shell_mode.c_str(), &r)
                       : htile_shell(c.get(), shell_mode.c_str(), &r));
        ShellingPtr holder(r);

        std::string cx_path = shell_out + ".target.cx";
        std::string tiling_path = shell_out + ".tiling";
        std::string log_path = shell_out + ".log";
        std::string stats_path = shell_out + ".stats";
        for (const std::string& p : {cx_path, tiling_path, log_path, stats_path})
            guard_overwrite(p, force);

        htile_tiling* t = nullptr;
        check(htile_shelling_tiling(r, &t));
        TilingPtr tiling_holder(t);
        htile_complex* target = nullptr;
        check(htile_tiling_target(t, &target));
        ComplexPtr target_holder(target);
        check(htile_complex_write(target, cx_path.c_str()));
        check(htile_tiling_write(t, tiling_path.c_str(),
                                 std::filesystem::path(cx_path).filename().string().c_str()));
        StringOut log, stats;
        check(htile_shelling_log(r, &log.s));
        check(htile_shelling_stats(r, &stats.s));
        std::FILE* lf = std::fopen(log_path.c_str(), "wb");
        if (!lf) {
            std::fprintf(stderr, "error: cannot write %s\n", log_path.c_str());
            return kExitInputError;
        }
        std::fputs(log.str().c_str(), lf);
        std::fclose(lf);
        std::FILE* sf = std::fopen(stats_path.c_str(), "wb");
        if (!sf) {
            std::fprintf(stderr, "error: cannot write %s\n", stats_path.c_str());
            return kExitInputError;
        }
        std::fputs(stats.str().c_str(), sf);
        std::fclose(sf);

        // The produced tiling must verify; on pure targets it must also
        // satisfy the counting identity.
        int ok = 0;
        StringOut report;
        check(htile_tiling_validate(t, /*check_shelling=*/1, /*verbose=*/0, &ok, &report.s));
        int identity_ok = 1;
        int pure = 0, connected = 0, pm = 0;
        check(htile_complex_predicates(target, &pure, &connected, &pm));
        std::printf("%s", stats.str().c_str());
        if (pure) {
            StringOut vreport;
            check(htile_tiling_vectors_report(t, /*manifold=*/0, &identity_ok, &vreport.s));
            std::printf("%s", vreport.str().c_str());
        }
        if (!ok || !identity_ok) {
            std::printf("%s", report.str().c_str());
            return kExitValidationFailure;
        }
        return kExitOk;
    }

    if (*verify) {
        htile_tiling* t = nullptr;
        check(htile_tiling_read(verify_in.c_str(), &t));
        TilingPtr holder(t);
        int ok = 0;
        StringOut report;
        check(htile_tiling_validate(t, verify_shelling ? 1 : 0, verify_verbose ? 1 : 0, &ok,
                                    &report.s));
        std::printf("%s", report.str().c_str());
        return ok ? kExitOk : kExitValidationFailure;
    }

    if (*vectors) {
        htile_tiling* t = nullptr;
        check(htile_tiling_read(vectors_in.c_str(), &t));
        TilingPtr holder(t);
        int all_ok = 0;
        StringOut report;
        check(htile_tiling_vectors_report(t, vectors_manifold ? 1 : 0, &all_ok, &report.s));
        std::printf("%s", report.str().c_str());
        return all_ok ? kExitOk : kExitValidationFailure;
    }

    if (*enumerate) {
        ComplexPtr c = load_complex(enum_in);
        if (enum_min) {
            int present = 0;
            long long value = -1;
            check(htile_min_critical(c.get(), enum_shellable ? 1 : 0, &present, &value));
            if (present)
                std::printf("min_critical = %lld\n", value);
            else
                std::printf("min_critical = none\n");
            return kExitOk;
        }
        size_t count = 0;
        if (!enum_emit.empty())
            check(htile_enumerate_emit(c.get(), enum_limit, enum_emit.c_str(), &count));
        else
            check(htile_enumerate(c.get(), enum_limit, &count));
        std::printf("count = %zu\n", count);
        return kExitOk;
    }

    if (*cross) {
        ComplexPtr c = load_complex(cross_in);
        int ok = 0;
        StringOut report;
        check(htile_cross_check(c.get(), &ok, &report.s));
        std::printf("%s", report.str().c_str());
        return ok ? kExitOk : kExitValidationFailure;
    }

    return kExitInputError;
}
