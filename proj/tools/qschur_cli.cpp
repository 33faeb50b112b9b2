#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qschur/diagram.hpp"
#include "qschur/kostant.hpp"
#include "qschur/lattice.hpp"
#include "qschur/suites.hpp"

using json = nlohmann::json;
using namespace qschur;

namespace {

SchurVariant parse_variant(const std::string& s) {
    if (s == "s" || s == "standard") return SchurVariant::standard;
    if (s == "m" || s == "seminilpotent") return SchurVariant::seminilpotent;
    if (s == "n" || s == "nilpotent") return SchurVariant::nilpotent;
    throw Error("unknown variant " + s + " (use s, m or n)");
}

DimVec parse_weight(const std::string& s) {
    auto v = parse_dimvec_block(s);
    if (!v) throw Error("cannot parse weight '" + s + "' (expected e.g. 2d, a0+2d)");
    return *v;
}

// Accepts both `(a1,a0+d)` and the nested pair form `((1,1),(1,0))`.
IComposition parse_icomposition(std::string s) {
    if (!s.empty() && s.front() == '(') s = s.substr(1);
    if (!s.empty() && s.back() == ')') s.pop_back();
    IComposition out;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(') ++depth;
        if (i < s.size() && s[i] == ')') --depth;
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            std::string tok = s.substr(start, i - start);
            std::optional<DimVec> v;
            if (!tok.empty() && tok.front() == '(') {
                size_t comma = tok.find(',');
                if (comma != std::string::npos && tok.back() == ')')
                    v = DimVec{std::stoi(tok.substr(1, comma - 1)),
                               std::stoi(tok.substr(comma + 1, tok.size() - comma - 2))};
            } else {
                v = parse_dimvec_block(tok);
            }
            if (!v || v->is_zero()) throw Error("cannot parse block '" + tok + "'");
            out.push_back(*v);
            start = i + 1;
        }
    }
    return out;
}

int emit(const std::vector<CheckResult>& results, const std::string& json_path) {
    std::map<std::string, std::pair<int, int>> per_suite;
    for (const auto& r : results) {
        auto& [pass, total] = per_suite[r.suite];
        ++total;
        if (r.pass) ++pass;
        if (!r.pass)
            std::cout << "FAIL  [" << r.suite << "] " << r.name
                      << (r.detail.empty() ? "" : "\n      " + r.detail) << "\n";
        else if (!r.detail.empty())
            std::cout << "pass  [" << r.suite << "] " << r.name << ": " << r.detail << "\n";
    }
    for (const auto& [suite, pt] : per_suite)
        std::cout << suite << ": " << pt.first << "/" << pt.second << " passed\n";
    if (!json_path.empty()) {
        json doc;
        doc["cases"] = json::array();
        for (const auto& r : results)
            doc["cases"].push_back(
                {{"suite", r.suite}, {"case", r.name}, {"verdict", r.pass ? "pass" : "fail"},
                 {"counterexample", r.detail}});
        doc["pass"] = all_pass(results);
        std::ofstream(json_path) << doc.dump(2) << "\n";
    }
    return all_pass(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Diagrammatic quiver Schur algebras of the Kronecker quiver and the extended "
                 "curve Schur algebra of P^1, through their polynomial representations"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a diagram on a polynomial");
    std::string diagram_text, input_poly, variant_str_ = "m";
    bool conjectural = false;
    eval_cmd->add_option("diagram", diagram_text, "diagram expression")->required();
    eval_cmd->add_option("-i,--input", input_poly, "input polynomial (default 1)");
    eval_cmd->add_option("-v,--variant", variant_str_, "Schur variant: s, m or n");
    eval_cmd->add_flag("--conjectural", conjectural, "enable thick multicoloured crossings");

    // check
    auto* check_cmd = app.add_subcommand("check", "run named relation suites");
    std::string suite = "all", json_path;
    int opt_n = 3, opt_D = 10, opt_total = 4;
    uint64_t seed = 12345;
    int trials = 1000;
    check_cmd->add_option("--suite", suite,
                          "assoc | color-past-split | colour-change | thick-thin | colour-slide | "
                          "mc-cross | wreath | demazure | cosets | cohomology | zigzag | all");
    check_cmd->add_option("-n", opt_n, "maximal thickness for curve suites");
    check_cmd->add_option("-D", opt_D, "degree bound");
    check_cmd->add_option("--max-weight", opt_total, "maximal |alpha| for assoc");
    check_cmd->add_option("--seed", seed, "random seed");
    check_cmd->add_option("--trials", trials, "random trials for property suites");
    uint32_t modulus = 0;
    check_cmd->add_option("--ring", modulus,
                          "coefficient ring for random trials: 0 for exact integers, p for F_p");
    check_cmd->add_option("--json", json_path, "write a machine-readable report");

    // basis
    auto* basis_cmd = app.add_subcommand("basis", "independence report for psi elements");
    std::string alpha_str = "d", beta_str, gamma_str;
    int basis_D = 8;
    basis_cmd->add_option("alpha", alpha_str, "weight, e.g. d, 2d, a0+2a1")->required();
    basis_cmd->add_option("--beta", beta_str, "restrict to one source composition");
    basis_cmd->add_option("--gamma", gamma_str, "restrict to one target composition");
    basis_cmd->add_option("-D", basis_D, "coupon degree bound");
    basis_cmd->add_option("-v,--variant", variant_str_, "Schur variant");
    basis_cmd->add_option("--json", json_path, "write a machine-readable report");

    // order
    auto* order_cmd = app.add_subcommand("order", "polyheredity idempotent chain");
    std::string weight_str;
    bool imaginary = false;
    order_cmd->add_option("weight", weight_str, "e.g. 2d")->required();
    order_cmd->add_flag("--imaginary", imaginary, "restrict to the imaginary-support chain");
    order_cmd->add_option("--json", json_path, "write a machine-readable report");

    // cusp
    auto* cusp_cmd = app.add_subcommand("cusp", "noncuspidality of a composition");
    std::string comp_str_;
    cusp_cmd->add_option("composition", comp_str_, "e.g. (a1,a0) or (d,d)")->required();

    // cohomology
    auto* coh_cmd = app.add_subcommand("cohomology", "integer cohomology lattice of T_n(P^1)");
    int coh_n = 2, coh_D = 8;
    std::string probe;
    coh_cmd->add_option("-n", coh_n, "number of points");
    coh_cmd->add_option("-D", coh_D, "degree bound");
    coh_cmd->add_option("--probe", probe, "test membership of a polynomial in x_i, c_i");
    coh_cmd->add_option("--json", json_path, "write a machine-readable report");

    // zigzag
    auto* zig_cmd = app.add_subcommand("zigzag", "extended zigzag algebra dimensions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) {
            Diagram dg = parse_diagram(diagram_text);
            Operator op = eval_diagram(dg, parse_variant(variant_str_), conjectural);
            SigPtr sig = boundary_sig(dg.source);
            Poly in = input_poly.empty() ? Poly::constant(sig, Scalar(1))
                                         : parse_poly(sig, input_poly);
            if (!in_boundary_space(dg.source, in)) {
                std::cerr << "error: input is not in the model space of "
                          << boundary_str(dg.source) << "\n";
                return 2;
            }
            Poly out = apply(op, in);
            std::cout << boundary_str(dg.source) << " -> " << boundary_str(dg.target)
                      << "  (degree shift " << op.degshift << ")\n";
            std::cout << out.str() << "\n";
            return 0;
        }
        if (check_cmd->parsed()) {
            std::vector<CheckResult> results;
            auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
            if (want("assoc")) {
                auto r = suite_assoc(opt_total, std::max(opt_D, 12));
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("color-past-split")) {
                auto r = suite_color_past_split(opt_n, opt_D);
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("colour-change")) {
                auto r = suite_colour_change(opt_n, opt_D);
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("thick-thin")) {
                auto r = suite_thick_thin(opt_n, opt_D);
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("colour-slide")) {
                auto r = suite_colour_slide(opt_D);
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("mc-cross")) {
                auto r = suite_mc_cross(std::min(opt_D, 8));
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("wreath")) {
                auto r = suite_wreath(opt_n, opt_D);
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("demazure")) {
                auto r = suite_demazure(6, trials, seed, modulus);
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("cosets")) {
                auto r = suite_cosets(std::min(opt_n + 2, 5));
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("cohomology")) {
                auto r = suite_cohomology(opt_n, opt_D);
                results.insert(results.end(), r.begin(), r.end());
            }
            if (want("zigzag")) {
                auto r = suite_zigzag();
                results.insert(results.end(), r.begin(), r.end());
            }
            if (results.empty()) {
                std::cerr << "unknown suite '" << suite << "'\n";
                return 2;
            }
            return emit(results, json_path);
        }
        if (basis_cmd->parsed()) {
            SchurVariant v = parse_variant(variant_str_);
            DimVec alpha = parse_weight(alpha_str);
            if (!beta_str.empty() || !gamma_str.empty()) {
                IComposition beta = parse_icomposition(beta_str.empty() ? gamma_str : beta_str);
                IComposition gamma = parse_icomposition(gamma_str.empty() ? beta_str : gamma_str);
                std::vector<Diagram> elems;
                for (const auto& datum : coloured_cosets(beta, gamma))
                    for (const auto& P : boundary_basis(Boundary(datum.beta_p), basis_D))
                        elems.push_back(psi_element(datum, P, beta, gamma));
                auto rep = independence_report(elems, v, basis_D);
                std::cout << "elements: " << rep.elements.size() << "\nrank: " << rep.rank
                          << "\nverdict: " << rep.verdict << "\n";
                if (!json_path.empty()) {
                    json doc{{"elements", rep.elements},
                             {"degree_bound", rep.degree_bound},
                             {"rank", rep.rank},
                             {"verdict", rep.verdict}};
                    std::ofstream(json_path) << doc.dump(2) << "\n";
                }
                return rep.independent ? 0 : 1;
            }
            BasisCount bc = basis_independence(v, alpha, basis_D);
            std::cout << "weight " << alpha.str() << ", coupon degree <= " << basis_D << "\n"
                      << "psi elements: " << bc.elements << "\nrank: " << bc.rank << "\nverdict: "
                      << (bc.independent ? "independent (certified at degree " +
                                               std::to_string(basis_D) + ")"
                                         : "not separated at " + std::to_string(basis_D))
                      << "\n";
            if (!json_path.empty()) {
                json doc{{"elements", bc.elements},
                         {"degree_bound", basis_D},
                         {"rank", bc.rank},
                         {"verdict", bc.independent ? "independent" : "not separated"}};
                std::ofstream(json_path) << doc.dump(2) << "\n";
            }
            return bc.independent ? 0 : 1;
        }
        if (order_cmd->parsed()) {
            DimVec v = parse_weight(weight_str);
            auto rows = order_table(v, imaginary);
            for (const auto& r : rows) std::cout << r << "\n";
            if (!json_path.empty()) {
                json doc;
                doc["weight"] = v.str();
                doc["rows"] = rows;
                std::ofstream(json_path) << doc.dump(2) << "\n";
            }
            return 0;
        }
        if (cusp_cmd->parsed()) {
            IComposition beta = parse_icomposition(comp_str_);
            bool nc = is_noncuspidal(beta);
            std::cout << icomp_str(beta) << " is " << (nc ? "noncuspidal" : "cuspidal-admissible")
                      << "\n";
            return 0;
        }
        if (coh_cmd->parsed()) {
            auto rows = compare_phi_image(coh_n, coh_D);
            std::cout << "degree | rank(lattice) | rank(invariants) | divisors | phi-image equal\n";
            for (const auto& r : rows) {
                std::cout << r.degree << " | " << r.rank_lattice << " | " << r.rank_invariants
                          << " | ";
                if (r.divisors.empty()) std::cout << "-";
                for (const auto& d : r.divisors) std::cout << d.get_str() << " ";
                std::cout << " | " << (r.equal ? "yes" : "NO") << "\n";
            }
            int status = 0;
            if (!probe.empty()) {
                GradedLattice L = torsion_lattice(coh_n, coh_D);
                SigPtr sig = boundary_sig(Boundary(ColouredComposition{{coh_n, Colour::tau}}));
                Poly P = parse_poly(sig, probe);
                bool m = L.member(P);
                std::cout << "probe " << P.str() << ": " << (m ? "member" : "not a member") << "\n";
                status = m ? 0 : 1;
            }
            if (!json_path.empty()) {
                json doc = json::array();
                for (const auto& r : rows) {
                    json divs = json::array();
                    for (const auto& d : r.divisors) divs.push_back(d.get_str());
                    doc.push_back({{"degree", r.degree},
                                   {"rank_lattice", r.rank_lattice},
                                   {"rank_invariants", r.rank_invariants},
                                   {"divisors", divs},
                                   {"equal", r.equal}});
                }
                std::ofstream(json_path) << doc.dump(2) << "\n";
            }
            return status;
        }
        if (zig_cmd->parsed()) {
            auto d = zigzag_dims();
            std::cout << "graded dimensions of the extended zigzag algebra of P^1: (" << d[0]
                      << ", " << d[1] << ", " << d[2] << ") in degrees 0, 1, 2\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
