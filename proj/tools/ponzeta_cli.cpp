#include "ponzeta/errors.hpp"
#include "ponzeta/fock.hpp"
#include "ponzeta/normal_form.hpp"
#include "ponzeta/pon.hpp"
#include "ponzeta/statmech.hpp"
#include "ponzeta/verify.hpp"
#include "ponzeta/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using nlohmann::json;
using namespace ponzeta;

namespace {

// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain
// error, 4 convergence/parameter error.
enum ExitCode { kOk = 0, kVerifyFail = 1, kParseError = 2, kDomainError = 3, kParamError = 4 };

struct GlobalOpts {
    unsigned precision = 128;
    std::uint64_t cutoff = 64;
    std::uint64_t prime_bound = 0;
    unsigned depth = 64;
    std::string format = "text";
    double tolerance = 0.0;
};

void emit(const GlobalOpts& g, const json& j, const std::string& text) {
    if (g.format == "json")
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

json zeta_json(const ZetaResult& r) {
    return {{"value_re", to_string(r.value.re, 30)},
            {"value_im", to_string(r.value.im, 30)},
            {"tail_bound", to_string(r.tail_bound, 12)},
            {"terms_used", r.terms_used},
            {"method", r.method}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operator calculus on the harmonic oscillator: normal ordering, "
                 "p-on endomorphisms and operator representations of zeta and L functions"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("PONZETA_PRECISION")) g.precision = std::atoi(env);
    app.add_option("--precision", g.precision, "working precision in bits")
        ->check(CLI::PositiveNumber);
    app.add_option("--cutoff", g.cutoff, "Fock space truncation N")->check(CLI::PositiveNumber);
    app.add_option("--prime-bound", g.prime_bound, "prime bound P");
    app.add_option("--depth", g.depth, "geometric series depth K")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--tolerance", g.tolerance, "quadrature/series tolerance override");

    // normal-order
    std::string no_expr;
    bool no_require_diag = false;
    auto* no_cmd = app.add_subcommand("normal-order", "rewrite an expression to PBW form");
    no_cmd->add_option("expr", no_expr, "operator expression")->required();
    no_cmd->add_flag("--diagonal", no_require_diag, "fail unless the result is diagonal in n");

    // commutator
    std::string comm_x, comm_y;
    auto* comm_cmd = app.add_subcommand("commutator", "normal-ordered [x, y]");
    comm_cmd->add_option("x", comm_x)->required();
    comm_cmd->add_option("y", comm_y)->required();

    // zeta
    std::string zeta_s, zeta_method = "state-sum";
    auto* zeta_cmd = app.add_subcommand("zeta", "evaluate zeta(s) by operator methods");
    zeta_cmd->add_option("s", zeta_s, "exponent, e.g. 2 or 2+0.5i")->required();
    zeta_cmd->add_option("--method", zeta_method)
        ->check(CLI::IsMember({"state-sum", "euler", "quantum"}));

    // euler-factor
    std::uint64_t ef_p = 2;
    std::string ef_s;
    auto* ef_cmd = app.add_subcommand("euler-factor", "zeta_p(s) for one prime");
    ef_cmd->add_option("p", ef_p)->required();
    ef_cmd->add_option("s", ef_s)->required();

    // pon
    std::string pon_flavor = "create";
    std::uint64_t pon_m = 1, pon_state = 1;
    std::vector<std::uint64_t> pon_compose;
    auto* pon_cmd = app.add_subcommand("pon", "quantum p-on endomorphisms on e_n");
    pon_cmd->add_option("--flavor", pon_flavor)->check(CLI::IsMember({"create", "annihilate"}));
    pon_cmd->add_option("-m,--index", pon_m, "endomorphism index");
    pon_cmd->add_option("--state", pon_state, "divided-power index n of e_n");
    pon_cmd->add_option("--compose", pon_compose, "reduce a product of indices");

    // lfunction
    std::string lf_s;
    std::uint64_t lf_terms = 100000;
    auto* lf_cmd = app.add_subcommand("lfunction", "L(s, chi) for the mod-8 character");
    lf_cmd->add_option("s", lf_s)->required();
    lf_cmd->add_option("-N,--terms", lf_terms);

    // mellin
    std::string mel_s;
    std::uint64_t mel_n = 1;
    auto* mel_cmd = app.add_subcommand("mellin", "raw Mellin integral Gamma(s) n^{-s}");
    mel_cmd->add_option("s", mel_s)->required();
    mel_cmd->add_option("n", mel_n)->required();

    // gauss
    std::uint64_t gauss_p = 3;
    auto* gauss_cmd = app.add_subcommand("gauss", "quadratic Gauss sum for an odd prime");
    gauss_cmd->add_option("p", gauss_p)->required();

    // absder
    std::uint64_t ad_p = 2, ad_n = 1;
    auto* ad_cmd = app.add_subcommand("absder", "absolute derivation d/dp of n");
    ad_cmd->add_option("p", ad_p)->required();
    ad_cmd->add_option("n", ad_n)->required();

    // verify
    std::string suite = "all";
    auto* ver_cmd = app.add_subcommand("verify", "run an invariant suite");
    ver_cmd->add_option("suite", suite)
        ->check(CLI::IsMember({"weyl", "pon", "zeta", "appendix", "all"}));

    // Let global flags appear after the subcommand name as well.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    set_precision_bits(g.precision);

    try {
        if (*no_cmd) {
            NormalForm nf = normal_order(parse(no_expr));
            json j{{"normal_form", nf.str()}};
            std::string text = nf.str();
            if (nf.is_diagonal()) {
                std::string diag = diagonal_poly(nf).str();
                j["diagonal"] = diag;
                text += "\ndiagonal: " + diag;
            } else if (no_require_diag) {
                throw NotDiagonal("result has unbalanced monomials");
            }
            emit(g, j, text);
        } else if (*comm_cmd) {
            NormalForm nf = commutator(parse(comm_x), parse(comm_y));
            json j{{"normal_form", nf.str()}};
            std::string text = nf.str();
            if (nf.is_diagonal() && !nf.is_zero()) {
                std::string diag = diagonal_poly(nf).str();
                j["diagonal"] = diag;
                text += "\ndiagonal: " + diag;
            }
            emit(g, j, text);
        } else if (*zeta_cmd) {
            Cplx s = parse_complex(zeta_s);
            SpectralParams params{s, g.cutoff, g.depth, g.prime_bound};
            ZetaResult r;
            if (zeta_method == "state-sum") {
                r = zeta_via_states(params);
            } else if (zeta_method == "euler") {
                r = euler_product(s, g.prime_bound ? g.prime_bound : 1000, g.depth);
            } else {
                r = zeta_quantum(params);
            }
            emit(g, zeta_json(r),
                 "zeta(" + zeta_s + ") ~ " + to_string(r.value, 20) + "  [" + r.method +
                     ", terms " + std::to_string(r.terms_used) + ", tail <= " +
                     to_string(r.tail_bound, 6) + "]");
        } else if (*ef_cmd) {
            Cplx s = parse_complex(ef_s);
            auto r = euler_factor(ef_p, s, g.depth);
            json j{{"value_re", to_string(r.value.re, 30)},
                   {"value_im", to_string(r.value.im, 30)},
                   {"tail_bound", to_string(r.tail_bound, 12)},
                   {"terms_used", r.terms_used},
                   {"method", "euler-factor"}};
            emit(g, j,
                 "zeta_" + std::to_string(ef_p) + "(" + ef_s + ") ~ " + to_string(r.value, 20) +
                     "  [tail <= " + to_string(r.tail_bound, 6) + "]");
        } else if (*pon_cmd) {
            if (!pon_compose.empty()) {
                std::vector<PonOp> ops;
                auto flavor = pon_flavor == "create" ? PonOp::Flavor::Create
                                                     : PonOp::Flavor::Annihilate;
                for (auto m : pon_compose) ops.push_back({flavor, m});
                PonOp r = compose_pons(ops);
                std::string name = (r.flavor == PonOp::Flavor::Create ? "A+_" : "A_") +
                                   std::to_string(r.index);
                emit(g, json{{"op", name}, {"index", r.index}}, name);
            } else {
                auto flavor = pon_flavor == "create" ? PonOp::Flavor::Create
                                                     : PonOp::Flavor::Annihilate;
                std::uint64_t cutoff = std::max(g.cutoff, pon_state * pon_m);
                FockVec v = FockVec::basis_state(pon_state, cutoff, Basis::DividedPower);
                FockVec r = apply_pon({flavor, pon_m}, v);
                if (r.is_zero()) {
                    emit(g, json{{"result", "0"}}, "0");
                } else {
                    std::uint64_t n = r.amps().begin()->first;
                    emit(g, json{{"result", "e_" + std::to_string(n)}, {"index", n}},
                         "e_" + std::to_string(n));
                }
            }
        } else if (*lf_cmd) {
            Cplx s = parse_complex(lf_s);
            auto r = l_function(s, DirichletCharacter::mod8(), lf_terms);
            json j{{"value_re", to_string(r.value.re, 30)},
                   {"value_im", to_string(r.value.im, 30)},
                   {"tail_bound", to_string(r.tail_bound, 12)},
                   {"terms_used", lf_terms},
                   {"method", "l-function"}};
            emit(g, j,
                 "L(" + lf_s + ", chi_8) ~ " + to_string(r.value, 20) + "  [tail <= " +
                     to_string(r.tail_bound, 6) + "]");
        } else if (*mel_cmd) {
            Cplx s = parse_complex(mel_s);
            Real tol = g.tolerance > 0 ? Real(g.tolerance) : Real("1e-12");
            auto r = mellin_kernel(s, mel_n, tol);
            json j{{"value_re", to_string(r.value.re, 30)},
                   {"value_im", to_string(r.value.im, 30)},
                   {"error_estimate", to_string(r.error_estimate, 6)},
                   {"method", "mellin"}};
            emit(g, j,
                 "integral = " + to_string(r.value, 20) + "  [err ~ " +
                     to_string(r.error_estimate, 4) + "]");
        } else if (*gauss_cmd) {
            Cplx gsum = gauss_sum(gauss_p);
            json j{{"value_re", to_string(gsum.re, 30)}, {"value_im", to_string(gsum.im, 30)}};
            emit(g, j, "g(" + std::to_string(gauss_p) + ") = " + to_string(gsum, 20));
        } else if (*ad_cmd) {
            std::uint64_t r = absolute_derivation(ad_p, ad_n);
            emit(g, json{{"value", r}},
                 "d/d" + std::to_string(ad_p) + " (" + std::to_string(ad_n) + ") = " +
                     std::to_string(r));
        } else if (*ver_cmd) {
            std::vector<CheckResult> results;
            if (suite == "weyl") results = verify_weyl();
            else if (suite == "pon") results = verify_pon();
            else if (suite == "zeta") results = verify_zeta();
            else if (suite == "appendix") results = verify_appendix();
            else results = verify_all();
            bool all_pass = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
                if (!r.pass && !r.detail.empty()) std::cout << "  (" << r.detail << ")";
                std::cout << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? kOk : kVerifyFail;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const NotDiagonal& e) {
        std::cerr << "not diagonal: " << e.what() << "\n";
        return kDomainError;
    } catch (const NotPrime& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const DivergentParameters& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kParamError;
    } catch (const PrimeBoundTooSmall& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kParamError;
    } catch (const CutoffOverflow& e) {
        std::cerr << "cutoff overflow: " << e.what() << "\n";
        return kParamError;
    } catch (const QuadratureError& e) {
        std::cerr << "quadrature error: " << e.what() << "\n";
        return kParamError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParamError;
    }
    return kOk;
}
