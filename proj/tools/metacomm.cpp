// metacomm: factorization, metacommutation and cycle-structure reports as JSON.
//
// Exit status: 0 ok, 2 malformed input, 3 precondition violated,
// 4 internal consistency failure (including a failed verify suite).

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "metacomm/cyclelaw.hpp"
#include "metacomm/errors.hpp"
#include "metacomm/fq.hpp"
#include "metacomm/fqmat.hpp"
#include "metacomm/hurwitz.hpp"
#include "metacomm/io.hpp"
#include "metacomm/projperm.hpp"
#include "metacomm/verify.hpp"
#include "metacomm/zmat.hpp"

using namespace metacomm;
using io::json;

namespace {

enum Exit { ok = 0, parse_failure = 2, precondition = 3, consistency = 4 };

std::string read_arg(const std::string& text) {
    if (text != "-") return text;
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int fail(Exit code, const std::string& kind, const std::string& message) {
    json err = json::object();
    err["error"] = message;
    err["kind"] = kind;
    emit(err);
    return code;
}

Field field_of_order(std::uint64_t q) {
    if (q < 2) throw domain_error("q must be a prime power >= 2");
    return Field::of_order(q);
}

std::string point_json(const Field& f, const ProjPoint& v) { return point_to_string(f, v); }

json cmd_cycles(std::uint64_t q, const std::string& matrix) {
    const Field f = field_of_order(q);
    return io::to_json(cycle_structure(io::parse_fq_matrix(f, read_arg(matrix)), true));
}

json cmd_fixed_points(std::uint64_t q, const std::string& matrix) {
    const Field f = field_of_order(q);
    const MatFq m = io::parse_fq_matrix(f, read_arg(matrix));
    json eig = json::array();
    std::uint64_t total = 0;
    for (const auto& c : fixed_point_breakdown(m)) {
        json e = json::object();
        e["algebraic"] = c.algebraic;
        e["geometric"] = c.geometric;
        e["lambda"] = io::to_json(f, c.lambda);
        e["points"] = c.points;
        eig.push_back(std::move(e));
        total += c.points;
    }
    json out = json::object();
    out["eigenvalues"] = std::move(eig);
    out["fixed"] = total;
    return out;
}

json cmd_factor_matrix(const std::string& matrix, const std::string& primes) {
    const MatZ alpha = io::parse_int_matrix(read_arg(matrix));
    const auto ps = io::parse_primes(primes);
    json dets = json::array(), factors = json::array();
    for (const auto& f : prime_chain_factor(alpha, ps)) {
        dets.push_back(io::to_json(det(f)));
        factors.push_back(io::to_json(f));
    }
    json out = json::object();
    out["determinants"] = std::move(dets);
    out["factors"] = std::move(factors);
    return out;
}

json cmd_metacommute_matrix(std::uint64_t p, const std::string& matrix, const std::string& omega) {
    const MatZ p_mat = io::parse_int_matrix(read_arg(matrix));
    const MatZ w = io::parse_int_matrix(omega);
    const auto d = diagram_z(p_mat, w, p);
    if (!d.commutes) throw consistency_error("diagram does not commute: tau predicts " + point_to_string(Field::make(static_cast<std::uint32_t>(p)), d.predicted));
    const Field fp = Field::make(static_cast<std::uint32_t>(p));
    json out = json::object();
    out["P_prime"] = io::to_json(d.mc.p_prime);
    out["kernel_after"] = point_json(fp, d.kernel_after);
    out["kernel_before"] = point_json(fp, d.kernel_before);
    out["omega_prime"] = io::to_json(d.mc.omega_prime);
    return out;
}

json cmd_factor_quaternion(const std::string& quat, const std::string& primes) {
    const HQuat alpha = io::parse_quat(quat);
    const auto ps = io::parse_primes(primes);
    json factors = json::array(), norms = json::array();
    for (const auto& f : factor_hurwitz(alpha, ps)) {
        factors.push_back(io::to_json(f));
        norms.push_back(nrd(f));
    }
    json out = json::object();
    out["factors"] = std::move(factors);
    out["norms"] = std::move(norms);
    return out;
}

json cmd_metacommute_quaternion(std::uint64_t p, const std::string& pi_text, const std::string& omega_text) {
    const HQuat pi = io::parse_quat(pi_text);
    const HQuat omega = io::parse_quat(omega_text);
    if (nrd(pi) != static_cast<std::int64_t>(p)) throw domain_error("nrd(pi) = " + std::to_string(nrd(pi)) + " is not " + std::to_string(p));
    const auto mc = metacommute_h(pi, omega);
    const auto classes = primes_of_norm(p);
    const auto it = std::lower_bound(classes.begin(), classes.end(), mc.pi_prime);
    if (it == classes.end() || *it != mc.pi_prime) throw consistency_error("metacommuted class is not listed");
    const SplitMap rho(p);
    const Field& f = rho.field();
    const ProjPoint before = kernel_point(rho(pi));
    const ProjPoint after = kernel_point(rho(mc.pi_prime));
    if (tau_apply(rho(omega), before) != after) throw consistency_error("diagram does not commute for pi=" + pi.to_string());
    json out = json::object();
    out["class_index"] = static_cast<std::size_t>(it - classes.begin());
    out["kernel_after"] = point_json(f, after);
    out["kernel_before"] = point_json(f, before);
    out["omega_prime"] = io::to_json(mc.omega_prime);
    out["pi_prime"] = io::to_json(mc.pi_prime);
    return out;
}

json cmd_primes(std::uint64_t p) {
    const auto classes = primes_of_norm(p);
    const SplitMap rho(p);
    json list = json::array();
    for (const auto& c : classes) {
        json e = json::object();
        e["kernel"] = point_json(rho.field(), kernel_point(rho(c)));
        e["quat"] = io::to_json(c);
        list.push_back(std::move(e));
    }
    json out = json::object();
    out["classes"] = std::move(list);
    out["count"] = classes.size();
    out["p"] = p;
    return out;
}

json report_json(const verify::Result& r, std::uint64_t seed) {
    json out = json::object();
    out["cases"] = r.cases;
    out["failed"] = r.failed;
    out["notes"] = r.notes;
    out["passed"] = r.passed();
    out["seed"] = seed;
    out["suite"] = r.suite;
    out["witnesses"] = r.witnesses;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metacommutation of primes in M_n(Z) and the Hurwitz order"};
    app.require_subcommand(1);

    std::uint64_t q = 0, p = 0;
    std::string matrix, omega, primes, quat, pi, suite;
    verify::Options vopt;

    auto* cycles = app.add_subcommand("cycles", "cycle structure of tau_Q on projective space");
    cycles->add_option("--q", q, "field order")->required();
    cycles->add_option("--matrix", matrix, "Q as nested lists, or - for stdin")->required();

    auto* fixed = app.add_subcommand("fixed-points", "fixed points of tau_Q with per-eigenvalue breakdown");
    fixed->add_option("--q", q, "field order")->required();
    fixed->add_option("--matrix", matrix, "Q as nested lists, or - for stdin")->required();

    auto* fmat = app.add_subcommand("factor-matrix", "factor an integer matrix into prime-determinant factors");
    fmat->add_option("--matrix", matrix, "alpha as nested lists, or - for stdin")->required();
    fmat->add_option("--primes", primes, "comma-separated primes; the first is peeled first (rightmost)")->required();

    auto* mmat = app.add_subcommand("metacommute-matrix", "rewrite P omega = omega' P'");
    mmat->add_option("--p", p, "prime")->required();
    mmat->add_option("--matrix", matrix, "P as nested lists, or - for stdin")->required();
    mmat->add_option("--omega", omega, "omega as nested lists")->required();

    auto* fquat = app.add_subcommand("factor-quaternion", "factor a Hurwitz quaternion into prime-norm factors");
    fquat->add_option("--quat", quat, "[a,b,c,d] in the {1,i,j,w0} basis, or [..]/1, [..]/2")->required();
    fquat->add_option("--primes", primes, "comma-separated norms of the factors, left to right")->required();

    auto* mquat = app.add_subcommand("metacommute-quaternion", "rewrite pi omega = omega' pi'");
    mquat->add_option("--p", p, "odd prime, nrd(pi)")->required();
    mquat->add_option("--pi", pi, "pi")->required();
    mquat->add_option("--omega", omega, "omega")->required();

    auto* prim = app.add_subcommand("primes", "the p+1 classes of Hurwitz primes of norm p");
    prim->add_option("--p", p, "odd prime")->required();

    auto* ver = app.add_subcommand("verify", "run a verification sweep");
    ver->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(verify::cli_suites()));
    ver->add_option("--seed", vopt.seed, "random seed")->default_val(0);
    ver->add_option("--max-q", vopt.max_q, "skip field orders above this");
    ver->add_option("--max-p", vopt.max_p, "skip primes above this");
    ver->add_option("--jobs", vopt.jobs, "worker threads")->default_val(1)->check(CLI::Range(1u, 256u));
    ver->add_flag("--inject-fault", vopt.mutation.active, "perturb the closed forms under test; the suite must fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help();
        return fail(parse_failure, "parse", e.what());
    }

    try {
        if (*cycles) emit(cmd_cycles(q, matrix));
        else if (*fixed) emit(cmd_fixed_points(q, matrix));
        else if (*fmat) emit(cmd_factor_matrix(matrix, primes));
        else if (*mmat) emit(cmd_metacommute_matrix(p, matrix, omega));
        else if (*fquat) emit(cmd_factor_quaternion(quat, primes));
        else if (*mquat) emit(cmd_metacommute_quaternion(p, pi, omega));
        else if (*prim) emit(cmd_primes(p));
        else if (*ver) {
            const auto r = verify::run_suite(suite, vopt);
            emit(report_json(r, vopt.seed));
            return r.passed() ? ok : consistency;
        }
    } catch (const input_error& e) {
        std::cerr << app.help();
        return fail(parse_failure, "parse", e.what());
    } catch (const consistency_error& e) {
        return fail(consistency, "consistency", e.what());
    } catch (const domain_error& e) {
        return fail(precondition, "precondition", e.what());
    } catch (const capacity_error& e) {
        return fail(precondition, "capacity", e.what());
    } catch (const std::exception& e) {
        return fail(consistency, "internal", e.what());
    }
    return ok;
}
