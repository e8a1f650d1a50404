// Command-line front end: lattice invariants, dimensions, generator-degree
// polynomials, singular forms, catalog q-expansions and the verification
// suites, with optional JSON output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <latjac/catalog.hpp>
#include <latjac/dimension.hpp>
#include <latjac/json_io.hpp>
#include <latjac/lattice_expr.hpp>
#include <latjac/theta_rep.hpp>
#include <latjac/verify.hpp>

using namespace latjac;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weights: rationals like "7/2", decimals like "3.5" or integers, all
// required to be half-integral.
Rat parse_weight(const std::string& s) {
    try {
        Rat v;
        auto slash = s.find('/');
        auto dot = s.find('.');
        if (slash != std::string::npos) {
            v = ratio(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } else if (dot != std::string::npos) {
            std::string fracpart = s.substr(dot + 1);
            Int den = 1;
            for (std::size_t i = 0; i < fracpart.size(); ++i) den *= 10;
            std::string intpart = s.substr(0, dot);
            bool neg = !intpart.empty() && intpart[0] == '-';
            Int whole = intpart.empty() || intpart == "-" ? Int(0)
                                                          : Int(intpart);
            Rat f = ratio(Int(fracpart.empty() ? "0" : fracpart), den);
            v = Rat(whole) + (neg ? -f : f);
        } else {
            v = Rat(Int(s));
        }
        if (!is_integer(v * 2))
            throw UsageError("weight must be half-integral: " + s);
        return v;
    } catch (const std::invalid_argument&) {
        throw UsageError("cannot parse weight: " + s);
    }
}

std::string rat_str(const Rat& v) {
    return v.get_den() == 1 ? v.get_num().get_str()
                            : v.get_num().get_str() + "/" +
                                  v.get_den().get_str();
}

json ratvec_json(const RatVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_str(x));
    return a;
}

long default_prec() {
    const char* env = std::getenv("LATJAC_DEFAULT_PREC");
    return env ? std::atol(env) : 10;
}

const char* exactness_str(Exactness e) {
    switch (e) {
        case Exactness::Exact: return "exact";
        case Exactness::FormulaMinusSkewCusp: return "formula-minus-skew-cusp";
        default: return "unknown";
    }
}

const char* method_str(DimMethod m) {
    switch (m) {
        case DimMethod::formula: return "formula";
        case DimMethod::singular: return "singular";
        case DimMethod::zero_propagation: return "zero-propagation";
        default: return "user-override";
    }
}

void cmd_info(const std::string& expr, bool as_json) {
    Lattice L = lattice_from_expr(expr);
    LatticeInfo info = invariants_of(L);
    auto cosets = shadow_reps(L);
    if (as_json) {
        json j;
        j["expr"] = print_lattice_expr(parse_lattice_expr(expr));
        j["gram"] = gram_to_json(L.gram);
        j["rank"] = L.rank();
        j["det"] = info.det.get_str();
        j["even"] = info.even;
        j["level"] = info.level;
        j["n2"] = info.n2;
        json div = json::array();
        for (const Int& d : info.elementary_divisors) div.push_back(d.get_str());
        j["elementary_divisors"] = div;
        json sh = json::array();
        for (const auto& c : cosets) {
            json e;
            e["rep"] = ratvec_json(c.rep);
            e["beta_mod1"] = rat_str(c.beta_mod1);
            e["order2"] = c.order2;
            sh.push_back(e);
        }
        j["shadow"] = sh;
        std::cout << j.dump(1) << "\n";
        return;
    }
    std::cout << "rank    " << L.rank() << "\n"
              << "det     " << info.det.get_str() << "\n"
              << "even    " << (info.even ? "yes" : "no") << "\n"
              << "level   " << info.level << "\n"
              << "n2      " << info.n2 << "\n";
    std::cout << "divisors";
    for (const Int& d : info.elementary_divisors) std::cout << " " << d.get_str();
    std::cout << "\nshadow cosets (rep | beta mod 1 | 2x in L):\n";
    for (const auto& c : cosets) {
        std::cout << "  (";
        for (std::size_t i = 0; i < c.rep.size(); ++i)
            std::cout << (i ? "," : "") << rat_str(c.rep[i]);
        std::cout << ") | " << rat_str(c.beta_mod1) << " | "
                  << (c.order2 ? "yes" : "no") << "\n";
    }
}

void cmd_dim(const std::string& expr, const std::string& kstr, long h,
             long lb, bool as_json) {
    Lattice L = lattice_from_expr(expr);
    Rat k = parse_weight(kstr);
    DimResult r = dim_jacobi(L, k, h, lb);
    if (as_json) {
        json j;
        j["value"] = rat_str(r.value);
        j["exactness"] = exactness_str(r.exactness);
        j["method"] = method_str(r.method);
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << "dim = " << rat_str(r.value) << " ("
                  << exactness_str(r.exactness) << ", " << method_str(r.method)
                  << ")\n";
    }
}

std::string hp_term_str(const HPTerm& t) {
    std::string e = t.exp2k % 2 == 0 ? std::to_string(t.exp2k / 2)
                                     : "(" + std::to_string(t.exp2k) + "/2)";
    std::string c = t.coeff == 1 ? "" : std::to_string(t.coeff) + "*";
    return c + "t^" + e;
}

void cmd_hp(const std::string& expr, long h, const std::string& parity,
            const std::string& overrides, bool as_json) {
    Lattice L = lattice_from_expr(expr);
    if (parity != "even" && parity != "odd")
        throw UsageError("parity must be 'even' or 'odd'");
    std::map<Rat, long> ov;
    std::string rest = overrides;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string item = rest.substr(0, comma);
        rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("override must look like k=v: " + item);
        ov[parse_weight(item.substr(0, eq))] =
            std::atol(item.substr(eq + 1).c_str());
    }
    HPResult hp = hp_polynomial(
        L, h, parity == "even" ? Parity::even : Parity::odd, ov);
    if (as_json) {
        json j;
        j["parity"] = parity;
        j["complete"] = hp.complete();
        json terms = json::array();
        for (const auto& t : hp.terms) {
            json e;
            e["twok"] = t.exp2k;
            if (t.unknown)
                e["coeff"] = nullptr;
            else
                e["coeff"] = t.coeff;
            terms.push_back(e);
        }
        j["terms"] = terms;
        std::cout << j.dump(1) << "\n";
        return;
    }
    if (hp.terms.empty()) {
        std::cout << "Q = 0\n";
        return;
    }
    std::cout << "Q =";
    for (std::size_t i = 0; i < hp.terms.size(); ++i) {
        std::cout << (i ? " + " : " ");
        if (hp.terms[i].unknown)
            std::cout << "?*t^" << hp.terms[i].exp2k << "/2";
        else
            std::cout << hp_term_str(hp.terms[i]);
    }
    std::cout << "   over (1-t^4)(1-t^6)"
              << (hp.complete() ? "" : "   [incomplete]") << "\n";
}

json cyclo_json(const CycloNum& v) {
    json j;
    j["modulus"] = v.modulus();
    json c = json::array();
    for (const Rat& x : v.coeffs()) c.push_back(rat_str(x));
    j["coeffs"] = c;
    return j;
}

void cmd_singular(const std::string& expr, long h, bool all, bool basis,
                  bool as_json) {
    Lattice L = lattice_from_expr(expr);
    std::vector<long> hs;
    if (all)
        for (long x = 0; x < 24; ++x) hs.push_back(x);
    else
        hs.push_back(((h % 24) + 24) % 24);
    json out = json::array();
    for (long x : hs) {
        if (basis) {
            auto b = singular_basis(L, x);
            if (as_json) {
                json e;
                e["h"] = x;
                e["dim"] = b.size();
                json vecs = json::array();
                for (const auto& v : b) {
                    json vec = json::array();
                    for (const auto& c : v) vec.push_back(cyclo_json(c));
                    vecs.push_back(vec);
                }
                e["basis"] = vecs;
                out.push_back(e);
            } else {
                std::cout << "h=" << x << "  dim=" << b.size() << "\n";
                for (const auto& v : b) {
                    std::cout << "  [";
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        if (i) std::cout << ", ";
                        std::cout << "(";
                        const auto& cs = v[i].coeffs();
                        for (std::size_t l = 0; l < cs.size(); ++l)
                            std::cout << (l ? "," : "") << rat_str(cs[l]);
                        std::cout << ")_" << v[i].modulus();
                    }
                    std::cout << "]\n";
                }
            }
        } else {
            long d = singular_dimension(L, x);
            if (as_json) {
                json e;
                e["h"] = x;
                e["dim"] = d;
                out.push_back(e);
            } else {
                std::cout << "h=" << x << "  dim=" << d << "\n";
            }
        }
    }
    if (as_json) std::cout << out.dump(1) << "\n";
}

JacobiQExp catalog_form(const std::string& name, long N) {
    if (name == "theta") return form_theta(N);
    if (name == "theta_tilde") return form_theta_tilde(N);
    if (name.rfind("distjac_Z", 0) == 0 && name.size() > 9)
        return distjac_Zn(std::atol(name.c_str() + 9), N);
    if (name == "distjac_E8") return distjac_E8(N);
    if (name == "distjac_A2") return distjac_A2(N);
    if (name == "distjac_A2A2_8") return distjac_A2A2_8(N);
    if (name == "eis_2_A2_8") return eis_2_A2_8(N);
    if (name == "eis_4_A2_8") return eis_4_A2_8(N);
    if (name == "eis_4_A2_0") return eis_4_A2_0(N);
    if (name == "eis_6_A2_0") return eis_6_A2_0(N);
    if (name == "iota1_pullback") return iota1_pullback(N);
    if (name == "iota2_pullback") return iota2_pullback(N);
    if (name == "d3_gen_odd") return d3_gen_odd(N);
    if (name == "d3_gen_even8") return d3_gen_even8(N);
    if (name == "eis_4_D3_0") return eis_4_D3_0(N);
    if (name == "eis_6_D3_0") return eis_6_D3_0(N);
    throw UsageError("unknown catalog form: " + name);
}

void cmd_qexp(const std::string& name, long prec, bool as_json) {
    JacobiQExp phi = catalog_form(name, prec);
    if (as_json) {
        std::cout << jacobi_to_json(phi).dump(1) << "\n";
        return;
    }
    std::cout << "weight " << rat_str(phi.k);
    if (phi.has_h) std::cout << ", character " << phi.h;
    std::cout << ", precision q^" << phi.prec24 << "/24\n";
    for (const auto& [key, v] : phi.c) {
        std::cout << "  c(" << key.first << "/24, (";
        RatVec r = phi.vec_of(key.second);
        for (std::size_t i = 0; i < r.size(); ++i)
            std::cout << (i ? "," : "") << rat_str(r[i]);
        std::cout << ")) = " << rat_str(v) << "\n";
    }
}

int cmd_verify(const std::string& suite, bool as_json) {
    auto results = verify::run_suite(suite);
    if (results.empty()) throw UsageError("unknown suite: " + suite);
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        if (as_json) {
            json e;
            e["id"] = r.id;
            e["name"] = r.name;
            e["pass"] = r.pass;
            e["detail"] = r.detail;
            arr.push_back(e);
        } else {
            std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id
                      << " (" << r.name << "): " << r.detail << "\n";
        }
    }
    if (as_json) std::cout << arr.dump(1) << "\n";
    return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with Jacobi forms of lattice index"};
    app.require_subcommand(1);

    std::string expr, kstr, parity = "even", overrides, name;
    std::string suite = "all";
    long h = 0, lb = 0, prec = default_prec();
    bool as_json = false, all_h = false, basis = false;

    auto* info = app.add_subcommand("info", "lattice invariants and shadow");
    info->add_option("expr", expr)->required();
    info->add_flag("--json", as_json);

    auto* dim = app.add_subcommand("dim", "dimension of a space of forms");
    dim->set_help_flag("--help");
    dim->add_option("expr", expr)->required();
    dim->add_option("--k", kstr)->required();
    dim->add_option("--h", h)->required();
    dim->add_option("--lb", lb);
    dim->add_flag("--json", as_json);

    auto* hp = app.add_subcommand("hp", "generator-degree polynomial");
    hp->set_help_flag("--help");
    hp->add_option("expr", expr)->required();
    hp->add_option("--h", h)->required();
    hp->add_option("--parity", parity)->required();
    hp->add_option("--override", overrides);
    hp->add_flag("--json", as_json);

    auto* sing = app.add_subcommand("singular", "singular-weight dimensions");
    sing->set_help_flag("--help");
    sing->add_option("expr", expr)->required();
    sing->add_option("--h", h);
    sing->add_flag("--all", all_h);
    sing->add_flag("--basis", basis);
    sing->add_flag("--json", as_json);

    auto* qexp = app.add_subcommand("qexp", "catalog q-expansions");
    qexp->add_option("name", name)->required();
    qexp->add_option("--prec", prec);
    qexp->add_flag("--json", as_json);

    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"tables", "identities", "representation",
                               "all"}));
    verify_cmd->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
        if (info->parsed()) cmd_info(expr, as_json);
        if (dim->parsed()) cmd_dim(expr, kstr, h, lb, as_json);
        if (hp->parsed()) cmd_hp(expr, h, parity, overrides, as_json);
        if (sing->parsed()) cmd_singular(expr, h, all_h, basis, as_json);
        if (qexp->parsed()) cmd_qexp(name, prec, as_json);
        if (verify_cmd->parsed()) return cmd_verify(suite, as_json);
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 1;
    } catch (const UnknownLatticeError& e) {
        std::cerr << "unknown lattice: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
