#include <CLI11.hpp>
#include <json.hpp>
#include <toml.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qsheaf/verify.hpp"

using json = nlohmann::json;
using namespace qs;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raw settings as strings; parsed once the datum is known.
struct Settings {
    std::string cartan, weight, weights, nu, ext = "shriek", suite = "all", out, config;
    int l = 0, k = 1, max_depth = -1;
    bool skew = false, with_m = false;
};

std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t\"");
    auto e = s.find_last_not_of(" \t\"");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    return out;
}

// "[[a,b],[c,d]]" -> "a,b;c,d" and "[a,b]" -> "a,b"
std::string flatten_brackets(const std::string& s) {
    std::string o;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '[') continue;
        if (s[i] == ']') {
            size_t j = i + 1;
            while (j < s.size() && s[j] == ' ') ++j;
            if (j < s.size() && s[j] == ',') {
                o += ';';
                i = j;
            }
            continue;
        }
        o += s[i];
    }
    return o;
}

mpq_class parse_rational(const std::string& s) {
    try {
        mpq_class q(trim(s));
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw UsageError("not a rational number: '" + s + "'");
    }
}

int parse_int(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(trim(s), &pos);
        if (pos != trim(s).size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
}

CartanDatum parse_cartan(const std::string& s) {
    if (s.empty()) throw UsageError("--cartan is required");
    if (s.find(',') == std::string::npos) return CartanDatum::preset(trim(s));
    std::vector<std::vector<int>> dot;
    for (auto& row : split(flatten_brackets(s), ';')) {
        std::vector<int> r;
        for (auto& x : split(row, ',')) r.push_back(parse_int(x));
        dot.push_back(std::move(r));
    }
    return CartanDatum(dot);
}

Weight parse_weight(const std::string& s, int rank) {
    Weight w;
    for (auto& x : split(flatten_brackets(s), ',')) w.push_back(parse_rational(x));
    if (static_cast<int>(w.size()) != rank)
        throw UsageError("weight '" + s + "' needs " + std::to_string(rank) + " coordinates");
    return w;
}

// "a;b;c" or a flat comma list chunked by the rank
std::vector<Weight> parse_weights(const std::string& s, int rank) {
    std::string f = flatten_brackets(s);
    std::vector<Weight> out;
    if (f.find(';') != std::string::npos) {
        for (auto& part : split(f, ';')) out.push_back(parse_weight(part, rank));
        return out;
    }
    auto xs = split(f, ',');
    if (xs.size() % rank) throw UsageError("weights '" + s + "' is not a list of rank-" + std::to_string(rank) + " weights");
    for (size_t i = 0; i < xs.size(); i += rank) {
        Weight w;
        for (int j = 0; j < rank; ++j) w.push_back(parse_rational(xs[i + j]));
        out.push_back(w);
    }
    return out;
}

RootVec parse_nu(const std::string& s, int rank) {
    if (s.empty()) throw UsageError("--nu is required");
    RootVec nu;
    for (auto& x : split(flatten_brackets(s), ',')) {
        int v = parse_int(x);
        if (v < 0) throw UsageError("nu must be nonnegative");
        nu.push_back(v);
    }
    if (static_cast<int>(nu.size()) != rank) throw UsageError("nu needs " + std::to_string(rank) + " coordinates");
    return nu;
}

std::string value_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array() || v.is_number()) return v.dump();
    throw UsageError("unsupported config value " + v.dump());
}

json toml_to_json(const toml::node& n) {
    if (auto t = n.as_table()) {
        json o = json::object();
        for (auto& [k, v] : *t) o[std::string(k.str())] = toml_to_json(v);
        return o;
    }
    if (auto a = n.as_array()) {
        json o = json::array();
        for (auto& v : *a) o.push_back(toml_to_json(v));
        return o;
    }
    if (auto v = n.as_string()) return v->get();
    if (auto v = n.as_integer()) return v->get();
    if (auto v = n.as_boolean()) return v->get();
    if (auto v = n.as_floating_point()) return v->get();
    throw UsageError("unsupported TOML value");
}

json read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return json::parse(text);
        } catch (const json::exception& e) {
            throw UsageError("bad JSON config: " + std::string(e.what()));
        }
    }
    try {
        return toml_to_json(toml::parse(text, path));
    } catch (const toml::parse_error& e) {
        throw UsageError("bad TOML config: " + std::string(e.description()));
    }
}

// file values fill in whatever was not given as a flag
void merge_config(Settings& s, const json& cfg, const CLI::App& sub) {
    auto given = [&](const char* flag) { return sub.count(flag) > 0; };
    for (auto& [key, v] : cfg.items()) {
        std::string k = key;
        std::replace(k.begin(), k.end(), '_', '-');
        if (k == "cartan" && !given("--cartan")) s.cartan = value_text(v);
        else if (k == "l" && !given("--l")) s.l = v.is_number_integer() ? v.get<int>() : parse_int(value_text(v));
        else if (k == "k" && !given("--k")) s.k = v.is_number_integer() ? v.get<int>() : parse_int(value_text(v));
        else if (k == "weight" && !given("--weight")) s.weight = value_text(v);
        else if (k == "weights" && !given("--weights")) s.weights = value_text(v);
        else if (k == "nu" && !given("--nu")) s.nu = value_text(v);
        else if (k == "max-depth" && !given("--max-depth"))
            s.max_depth = v.is_number_integer() ? v.get<int>() : parse_int(value_text(v));
        else if (k == "ext" && !given("--ext")) s.ext = value_text(v);
        else if (k == "skew" && !given("--skew")) s.skew = v.get<bool>();
        else if (k == "with-m" && !given("--with-m")) s.with_m = v.get<bool>();
        else if (k == "suite" && !given("--suite")) s.suite = value_text(v);
        else if (k == "out" && !given("--out")) s.out = value_text(v);
        else if (k == "command") continue;
        else if (k != "cartan" && k != "l" && k != "k" && k != "weight" && k != "weights" && k != "nu" &&
                 k != "max-depth" && k != "ext" && k != "skew" && k != "with-m" && k != "suite" && k != "out")
            throw UsageError("unknown config key '" + key + "'");
    }
}

json cyc_json(const CycNum& x, const CycField* F) {
    json a = json::array();
    if (x.is_zero()) {
        for (int i = 0; i < F->phi(); ++i) a.push_back("0");
        return a;
    }
    for (auto& c : x.coeffs()) a.push_back(c.get_str());
    return a;
}

json matrix_json(const Matrix& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows(); ++i) {
        json r = json::array();
        for (int j = 0; j < M.cols(); ++j) r.push_back(cyc_json(M(i, j), M.field()));
        rows.push_back(r);
    }
    return rows;
}

json weight_json(const Weight& w) {
    json a = json::array();
    for (auto& x : w) a.push_back(x.get_str());
    return a;
}

json field_json(const CycField* F) {
    json phi = json::array();
    for (long c : F->cyclotomic_poly()) phi.push_back(c);
    return {{"N", F->N()},
            {"phi_N", phi},
            {"coefficients", "rational coefficients of x^0 .. x^(deg phi_N - 1) modulo phi_N, low degree first"},
            {"zeta", "x^" + std::to_string((F->k() * 2L * F->varpi()) % F->N())},
            {"l", F->l()},
            {"k", F->k()},
            {"varpi", F->varpi()}};
}

struct Run {
    std::string command;
    Settings s;
    CartanDatum D;
    const CycField* F = nullptr;
    json config;
};

json words_json(const std::vector<Word>& ws) {
    json a = json::array();
    for (auto& w : ws) a.push_back(w);
    return a;
}

std::vector<int> sorted_unfolding(const RootVec& nu) {
    std::vector<int> pi;
    for (size_t i = 0; i < nu.size(); ++i) pi.insert(pi.end(), nu[i], static_cast<int>(i));
    return pi;
}

int default_depth(const Run& r, int fallback) { return r.s.max_depth >= 0 ? r.s.max_depth : fallback; }

json cmd_dims(Run& r) {
    int dmax = default_depth(r, 4);
    FreeAlgebra A(Colors::of(r.D, r.F));
    std::optional<Verma> V;
    if (!r.s.weight.empty()) V.emplace(Verma::of(r.D, r.F, parse_weight(r.s.weight, r.D.rank())));
    std::vector<RootVec> nus{RootVec(r.D.rank(), 0)};
    for (auto& nu : weights_up_to(r.D.rank(), dmax)) nus.push_back(nu);
    json f = json::array(), L = json::array();
    std::vector<int> fd(dmax + 1, 0), ld(dmax + 1, 0);
    for (auto& nu : nus) {
        int dpt = depth(nu);
        const Matrix& G = A.gram_S(nu);
        int dim = A.dim_f(nu);
        fd[dpt] += dim;
        f.push_back({{"nu", nu}, {"dim", dim}, {"gram_det", cyc_json(determinant(G), r.F)}});
        if (V) {
            int dl = V->dim_L(nu);
            ld[dpt] += dl;
            L.push_back({{"nu", nu}, {"dim", dl}, {"gram_det", cyc_json(determinant(V->gram(nu)), r.F)}});
        }
    }
    json out{{"f", f}, {"f_dims_by_depth", fd}};
    if (V) {
        out["L"] = L;
        out["L_dims_by_depth"] = ld;
    }
    return out;
}

json cmd_gram(Run& r) {
    RootVec nu = parse_nu(r.s.nu, r.D.rank());
    Colors C = Colors::of(r.D, r.F);
    json out;
    if (r.s.weight.empty()) {
        FreeAlgebra A(C);
        const Matrix& G = A.gram_S(nu);
        out = {{"form", "S"}, {"basis", words_json(A.basis(nu))}, {"matrix", matrix_json(G)}, {"rank", rank(G)},
               {"det", cyc_json(determinant(G), r.F)}};
    } else {
        Verma V = Verma::of(r.D, r.F, parse_weight(r.s.weight, r.D.rank()));
        const Matrix& G = V.gram(nu);
        out = {{"form", "S_Lambda"}, {"basis", words_json(V.basis(nu))}, {"matrix", matrix_json(G)},
               {"rank", rank(G)}, {"det", cyc_json(determinant(G), r.F)}};
    }
    out["nu"] = nu;
    return out;
}

json cmd_verma(Run& r) {
    if (r.s.weight.empty()) throw UsageError("verma needs --weight");
    Verma V = Verma::of(r.D, r.F, parse_weight(r.s.weight, r.D.rank()));
    int dmax = default_depth(r, 4);
    std::vector<RootVec> nus{RootVec(r.D.rank(), 0)};
    for (auto& nu : weights_up_to(r.D.rank(), dmax)) nus.push_back(nu);
    json graded = json::array();
    std::vector<int> ld(dmax + 1, 0), vd(dmax + 1, 0);
    for (auto& nu : nus) {
        const Matrix& G = V.gram(nu);
        int dl = rank(G);
        ld[depth(nu)] += dl;
        vd[depth(nu)] += G.rows();
        graded.push_back({{"nu", nu}, {"dim_V", G.rows()}, {"dim_L", dl}, {"gram_det", cyc_json(determinant(G), r.F)}});
    }
    json out{{"graded", graded}, {"L_dims_by_depth", ld}, {"V_dims_by_depth", vd}};
    if (!r.s.nu.empty()) {
        RootVec nu = parse_nu(r.s.nu, r.D.rank());
        out["gram"] = {{"nu", nu}, {"basis", words_json(V.basis(nu))}, {"matrix", matrix_json(V.gram(nu))}};
    }
    return out;
}

std::vector<long> lam_of(const CartanDatum& D, const Weight& W) {
    std::vector<long> lam;
    for (int i = 0; i < D.rank(); ++i) {
        mpq_class v = W[i] * D.d(i);
        if (v.get_den() != 1) throw UsageError("d_i <i,Lambda> must be integral");
        lam.push_back(v.get_num().get_si());
    }
    return lam;
}

json degrees_json(int lo, const std::vector<int>& dims) {
    json a = json::array();
    for (size_t i = 0; i < dims.size(); ++i) a.push_back(lo + static_cast<int>(i));
    return a;
}

json cmd_tor(Run& r) {
    std::string ws = r.s.weights.empty() ? r.s.weight : r.s.weights;
    if (ws.empty()) throw UsageError("tor needs --weights");
    auto Ws = parse_weights(ws, r.D.rank());
    HochData H{Colors::of(r.D, r.F), {}, parse_nu(r.s.nu, r.D.rank())};
    for (auto& W : Ws) H.lams.push_back(lam_of(r.D, W));
    HochComplex X = build_complex(H), Y = build_dual_complex(H);
    ChainComplex I = build_complex_f(H);
    return {{"degrees", degrees_json(X.cx.lo, X.cx.dims)},
            {"complex_dims", X.cx.dims},
            {"tor", cohomology_dims(X.cx)},
            {"dual_cohomology", cohomology_dims(Y.cx)},
            {"image_of_S_cohomology", cohomology_dims(I)},
            {"nu", H.nu}};
}

json cmd_arrcoh(Run& r) {
    if (r.s.weight.empty()) throw UsageError("arrcoh needs --weight");
    Extension ext;
    if (r.s.ext == "shriek" || r.s.ext == "!") ext = Extension::shriek;
    else if (r.s.ext == "star" || r.s.ext == "*") ext = Extension::star;
    else if (r.s.ext == "ic") ext = Extension::ic;
    else throw UsageError("--ext must be shriek, star or ic");
    RootVec nu = parse_nu(r.s.nu, r.D.rank());
    auto pi = sorted_unfolding(nu);
    if (pi.empty()) throw UsageError("nu must be nonzero");
    auto A = ConfigArrangement::make(r.D, r.F, pi, parse_weight(r.s.weight, r.D.rank()));
    ChainComplex X = arrangement_complex(A, ext, r.s.skew);
    json out{{"nu", nu},
             {"unfolding", pi},
             {"cells", ext == Extension::shriek ? "positive" : "all facets"},
             {"degrees", degrees_json(X.lo, X.dims)},
             {"dims", X.dims},
             {"cohomology", cohomology_dims(X)}};
    if (r.s.with_m) {
        ArrComplex S = full_complex(A, Extension::shriek), T = full_complex(A, Extension::star);
        ChainMap m = m_map(A, S, T);
        json ms = json::array();
        for (size_t k = 0; k < m.f.size(); ++k) {
            json labels = json::array();
            for (auto& c : S.cells[k]) labels.push_back(blocks_str(c.facet) + "<" + blocks_str(c.chamber));
            ms.push_back({{"degree", S.cx.lo + static_cast<int>(k)}, {"cells", labels}, {"matrix", matrix_json(m.f[k])}});
        }
        out["m"] = ms;
    }
    return out;
}

json cmd_blocks(Run& r, int& exit_code) {
    if (r.s.weights.empty()) throw UsageError("blocks needs --weights");
    auto Ws = parse_weights(r.s.weights, r.D.rank());
    EllData E = make_ell_data(r.D, r.s.l);
    bool ok = true;
    for (auto& w : Ws) ok = ok && in_first_alcove(r.D, E, w);
    json ws = json::array();
    for (auto& w : Ws) ws.push_back(weight_json(w));
    json out{{"alcove_ok", ok}, {"ell", E.ell}, {"weights", ws}};
    if (!ok) {
        out["dim"] = nullptr;
        out["error"] = "weight outside the first alcove";
        exit_code = 2;
        return out;
    }
    out["dim"] = conformal_blocks(r.D, r.F, E, Ws);
    return out;
}

json cmd_verify(Run& r, int& exit_code) {
    const auto& names = verify_suites();
    if (r.s.suite != "all" && std::find(names.begin(), names.end(), r.s.suite) == names.end())
        throw UsageError("unknown suite '" + r.s.suite + "'");
    VerifyConfig cfg;
    cfg.D = r.D;
    cfg.l = r.s.l;
    cfg.k = r.s.k;
    cfg.max_depth = r.s.max_depth;
    if (!r.s.weights.empty()) cfg.weights = parse_weights(r.s.weights, r.D.rank());
    else if (!r.s.weight.empty()) cfg.weights = {parse_weight(r.s.weight, r.D.rank())};
    json res = json::array();
    bool all = true;
    for (auto& c : run_verify(cfg, r.s.suite)) {
        all = all && c.pass;
        res.push_back({{"suite", c.suite}, {"tag", c.tag}, {"pass", c.pass}, {"cases", c.cases}, {"detail", c.detail}});
    }
    if (!all) exit_code = 1;
    return {{"results", res}, {"pass", all}};
}

json echo_config(const Run& r) {
    const Settings& s = r.s;
    json c{{"command", r.command},
           {"cartan", {{"name", r.D.name()}, {"dot", r.D.dot_matrix()}}},
           {"l", s.l},
           {"k", s.k}};
    if (s.max_depth >= 0) c["max_depth"] = s.max_depth;
    if (!s.weight.empty()) c["weight"] = weight_json(parse_weight(s.weight, r.D.rank()));
    if (!s.weights.empty()) {
        json ws = json::array();
        for (auto& w : parse_weights(s.weights, r.D.rank())) ws.push_back(weight_json(w));
        c["weights"] = ws;
    }
    if (!s.nu.empty()) c["nu"] = parse_nu(s.nu, r.D.rank());
    if (r.command == "arrcoh") {
        c["ext"] = s.ext;
        c["skew"] = s.skew;
        c["with_m"] = s.with_m;
    }
    if (r.command == "verify") c["suite"] = s.suite;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with quantum-group forms, Hochschild complexes and configuration arrangements"};
    app.require_subcommand(1);
    Settings s;
    const char* cmds[][2] = {{"dims", "graded dims of f and L(Lambda) with Gram determinants"},
                             {"gram", "Gram matrix of S (or S_Lambda with --weight) at weight nu"},
                             {"verma", "graded dims and Gram determinants of V(Lambda)"},
                             {"tor", "Hochschild complex of Verma modules: Tor and its companions"},
                             {"arrcoh", "cochain complexes of the principal configuration arrangement"},
                             {"blocks", "dimension of conformal blocks"},
                             {"verify", "run cross-check suites"}};
    std::vector<CLI::App*> subs;
    for (auto& c : cmds) {
        CLI::App* sub = app.add_subcommand(c[0], c[1]);
        sub->add_option("--cartan", s.cartan, "preset (A1, A2, B2, G2, ...) or symmetric matrix of i.j, e.g. '2,-1;-1,2'");
        sub->add_option("--l", s.l, "order parameter l")->check(CLI::Range(2, 1000));
        sub->add_option("--k", s.k, "exponent of the root of unity, coprime to l");
        sub->add_option("--weight", s.weight, "Lambda, comma separated coordinates <i,Lambda>");
        sub->add_option("--weights", s.weights, "list of weights, ';' separated or flat chunked by the rank");
        sub->add_option("--nu", s.nu, "root lattice element, comma separated");
        sub->add_option("--max-depth", s.max_depth, "depth bound")->check(CLI::Range(0, 12));
        sub->add_option("--ext", s.ext, "shriek, star or ic");
        sub->add_flag("--skew", s.skew, "restrict to the sign-isotypic part");
        sub->add_flag("--with-m", s.with_m, "attach the matrices of m (arrcoh)");
        sub->add_option("--suite", s.suite, "forms, coaction, hochschild, arrangement, comparison, blocks or all");
        sub->add_option("--out", s.out, "write JSON here instead of stdout");
        sub->add_option("--config", s.config, "JSON or TOML file with the same keys; flags win");
        subs.push_back(sub);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Run r;
    CLI::App* sub = nullptr;
    for (auto* x : subs)
        if (x->parsed()) sub = x;
    r.command = sub->get_name();
    int exit_code = 0;
    json out;
    try {
        if (!s.config.empty()) merge_config(s, read_config(s.config), *sub);
        r.s = s;
        if (s.l == 0) throw UsageError("--l is required");
        r.D = parse_cartan(s.cartan);
        r.F = field_for(r.D, s.l, s.k);
        json body;
        if (r.command == "dims") body = cmd_dims(r);
        else if (r.command == "gram") body = cmd_gram(r);
        else if (r.command == "verma") body = cmd_verma(r);
        else if (r.command == "tor") body = cmd_tor(r);
        else if (r.command == "arrcoh") body = cmd_arrcoh(r);
        else if (r.command == "blocks") body = cmd_blocks(r, exit_code);
        else body = cmd_verify(r, exit_code);
        out = {{"config", echo_config(r)}, {"field", field_json(r.F)}, {"result", body}};
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParameterError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ContractViolation& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::string text = out.dump(1) + "\n";
    if (s.out.empty())
        std::cout << text;
    else {
        std::ofstream f(s.out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << s.out << "\n";
            return 2;
        }
        f << text;
    }
    return exit_code;
}
