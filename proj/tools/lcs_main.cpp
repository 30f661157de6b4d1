#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "lcs/harness.hpp"
#include "lcs/io.hpp"

namespace {

// 0 success / equivalent, 1 not equivalent or check failed, 2 parse error,
// 3 dimension mismatch, 4 singular witness.
enum ExitCode { kOk = 0, kNo = 1, kParse = 2, kDimension = 3, kSingular = 4 };

std::uint64_t env_seed() {
    const char* s = std::getenv("LCS_SEED");
    if (!s || !*s) return lcs::kDefaultSeed;
    return std::strtoull(s, nullptr, 10);
}

struct CommonOpts {
    std::optional<long> rationalize;
    lcs::ParseOptions parse_options() const { return {rationalize}; }
};

lcs::ControlSystem load_system(const std::string& path, const CommonOpts& opts) {
    return lcs::parse_system(lcs::read_file(path), opts.parse_options());
}

int cmd_classify(const std::string& path, const CommonOpts& opts) {
    lcs::ControlSystem sys = load_system(path, opts);
    std::cout << lcs::classify_report(lcs::classify(sys));
    return kOk;
}

int cmd_compare(const std::string& path1, const std::string& path2, const std::string& relation,
                const std::string& witness_out, bool strict, const CommonOpts& opts) {
    lcs::ControlSystem s1 = load_system(path1, opts);
    lcs::ControlSystem s2 = load_system(path2, opts);
    if (strict && (s1.n != s2.n || s1.m != s2.m))
        throw lcs::DimensionError("systems have different dimensions");

    std::uint64_t seed = env_seed();
    std::vector<lcs::EquivalenceVerdict> verdicts;
    if (relation == "linear" || relation == "all")
        verdicts.push_back(lcs::decide_linear(s1, s2, seed));
    if (relation == "differential" || relation == "all")
        verdicts.push_back(lcs::decide_differential(s1, s2, seed));
    if (relation == "topological" || relation == "all")
        verdicts.push_back(lcs::decide_topological(s1, s2));

    bool all_equivalent = true;
    for (const auto& v : verdicts) {
        std::cout << lcs::verdict_line(v) << "\n";
        all_equivalent &= v.equivalent;
        if (!witness_out.empty() && v.witness &&
            (v.relation == lcs::Relation::linear || v.relation == lcs::Relation::differential)) {
            lcs::write_file(witness_out, lcs::serialize_witness(*v.witness));
        }
    }
    return all_equivalent ? kOk : kNo;
}

int cmd_canon(const std::string& path, const std::string& out, const CommonOpts& opts) {
    lcs::ControlSystem sys = load_system(path, opts);
    lcs::CanonicalForm cf = lcs::canonical_form(sys);
    std::cout << "k: " << cf.k << "\n";
    std::cout << "p: " << lcs::format_int_seq(cf.p) << "\n";
    lcs::write_file(out, lcs::serialize_canonical(cf, sys.n, sys.m));
    return kOk;
}

int cmd_simcheck(const std::string& path1, const std::string& path2, const std::string& wpath,
                 double t_final, int steps, double tol, const CommonOpts& opts) {
    lcs::ControlSystem s1 = load_system(path1, opts);
    lcs::ControlSystem s2 = load_system(path2, opts);
    lcs::FeedbackWitness w = lcs::parse_witness(lcs::read_file(wpath), opts.parse_options());
    if (s1.n != s2.n || s1.m != s2.m)
        throw lcs::DimensionError("systems have different dimensions");
    if (w.O.rows() != s1.n || w.Q.rows() != s1.m)
        throw lcs::DimensionError("witness dimensions do not match the systems");

    std::uint64_t seed = env_seed();
    std::vector<double> x0 = lcs::seeded_initial_state(s1.n, seed);
    auto battery = lcs::standard_battery(s1.m, t_final, seed);
    bool all_pass = true;
    for (std::size_t i = 0; i < battery.size(); ++i) {
        lcs::DynamicCheck res =
            lcs::verify_witness_dynamically(s1, s2, w, battery[i], x0, t_final, steps, tol);
        std::printf("signal %zu: max-residual %.6e %s\n", i + 1, res.max_residual,
                    res.pass ? "pass" : "FAIL");
        all_pass &= res.pass;
    }
    std::cout << "result: " << (all_pass ? "pass" : "fail") << "\n";
    return all_pass ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of linear controlled systems xdot = Ax + Bu"};
    app.require_subcommand(1);

    CommonOpts common;

    auto add_rationalize = [&common](CLI::App* cmd) {
        cmd->add_option("--rationalize", common.rationalize,
                        "accept decimal literals exactly, up to this denominator");
    };

    std::string path1, path2, witness_path, out_path;
    std::string relation = "all";
    bool strict = false;
    double t_final = 2.0, tol = 1e-4;
    int steps = 2000;

    CLI::App* classify = app.add_subcommand("classify", "print the invariant record of a system");
    classify->add_option("path", path1, "system file")->required();
    add_rationalize(classify);

    CLI::App* compare = app.add_subcommand("compare", "decide equivalence of two systems");
    compare->add_option("path1", path1, "first system file")->required();
    compare->add_option("path2", path2, "second system file")->required();
    compare->add_option("--relation", relation, "linear|differential|topological|all")
        ->check(CLI::IsMember({"linear", "differential", "topological", "all"}));
    compare->add_option("--witness", out_path, "write the feedback witness here when linear");
    compare->add_flag("--strict", strict, "exit 3 on dimension mismatch instead of verdict no");
    add_rationalize(compare);

    CLI::App* canon = app.add_subcommand("canon", "write the canonical form and witness");
    canon->add_option("path", path1, "system file")->required();
    canon->add_option("--out", witness_path, "output file")->required();
    add_rationalize(canon);

    CLI::App* simcheck = app.add_subcommand("simcheck", "dynamic witness verification");
    simcheck->add_option("path1", path1, "first system file")->required();
    simcheck->add_option("path2", path2, "second system file")->required();
    simcheck->add_option("witness", witness_path, "witness file")->required();
    simcheck->add_option("--t-final", t_final, "simulation horizon");
    simcheck->add_option("--steps", steps, "integration steps");
    simcheck->add_option("--tol", tol, "residual tolerance");
    add_rationalize(simcheck);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(classify)) return cmd_classify(path1, common);
        if (app.got_subcommand(compare))
            return cmd_compare(path1, path2, relation, out_path, strict, common);
        if (app.got_subcommand(canon)) return cmd_canon(path1, witness_path, common);
        if (app.got_subcommand(simcheck))
            return cmd_simcheck(path1, path2, witness_path, t_final, steps, tol, common);
    } catch (const lcs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const lcs::DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return kDimension;
    } catch (const lcs::SingularWitnessError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSingular;
    } catch (const lcs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNo;
    }
    return kOk;
}
