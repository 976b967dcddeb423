#include "ppv/classify.hpp"
#include "ppv/groups.hpp"
#include "ppv/integrability.hpp"
#include "ppv/monodromy.hpp"
#include "ppv/ore.hpp"
#include "ppv/parser.hpp"
#include "ppv/rank1.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ppv;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------- input helpers ----------

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct SystemInput {
    std::string path;
    std::string inline_json;

    void add_to(CLI::App* cmd) {
        auto* p = cmd->add_option("system", path, "SystemSpec JSON file ('-' for stdin)");
        auto* i = cmd->add_option("--inline", inline_json, "SystemSpec JSON given inline");
        p->excludes(i);
        i->excludes(p);
    }
    SystemSpec load() const {
        if (path.empty() && inline_json.empty()) throw UsageError("a system file or --inline JSON is required");
        return parse_system(path.empty() ? inline_json : read_file(path));
    }
};

// Exact rational from "3", "-1/2" or "0.25".
mpq_class parse_number(const std::string& s) {
    auto bad = [&] { return UsageError("invalid number '" + s + "'"); };
    if (s.empty()) throw bad();
    std::string body = s;
    bool neg = false;
    if (body[0] == '-' || body[0] == '+') {
        neg = body[0] == '-';
        body.erase(0, 1);
    }
    auto digits = [](const std::string& d) {
        return !d.empty() && d.find_first_not_of("0123456789") == std::string::npos;
    };
    mpq_class q;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string a = body.substr(0, slash), b = body.substr(slash + 1);
        if (!digits(a) || !digits(b) || mpz_class(b) == 0) throw bad();
        q = mpq_class(mpz_class(a), mpz_class(b));
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string a = body.substr(0, dot), b = body.substr(dot + 1);
        if ((!a.empty() && !digits(a)) || (!b.empty() && !digits(b)) || (a.empty() && b.empty())) throw bad();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, b.size());
        q = mpq_class(mpz_class(a.empty() ? "0" : a) * scale + mpz_class(b.empty() ? "0" : b), scale);
    } else {
        if (!digits(body)) throw bad();
        q = mpq_class(mpz_class(body));
    }
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("invalid number '" + s + "'");
}

std::vector<std::pair<std::string, std::string>> key_values(const std::string& s, const std::string& what) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError(what + ": expected key=value, got '" + item + "'");
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

// "center=0,radius=1,segments=64" plus optional center_im, orientation, clearance.
LoopSpec parse_circle(const std::string& s) {
    LoopSpec loop;
    double re = 0.0, im = 0.0;
    for (const auto& [k, v] : key_values(s, "--loop")) {
        if (k == "center") re = parse_double(v);
        else if (k == "center_im") im = parse_double(v);
        else if (k == "radius") loop.radius = parse_double(v);
        else if (k == "segments") loop.segments = static_cast<int>(parse_double(v));
        else if (k == "orientation") loop.orientation = static_cast<int>(parse_double(v));
        else if (k == "clearance") loop.clearance = parse_double(v);
        else throw UsageError("--loop: unknown key '" + k + "'");
    }
    loop.center = cd(re, im);
    return loop;
}

// "re:im;re:im;..." vertices of a closed polygon.
LoopSpec parse_polyline(const std::string& s) {
    std::vector<cd> pts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) pts.emplace_back(parse_double(item), 0.0);
        else pts.emplace_back(parse_double(item.substr(0, colon)), parse_double(item.substr(colon + 1)));
    }
    if (pts.size() < 2) throw UsageError("--polyline needs at least two vertices");
    return LoopSpec::polyline(std::move(pts));
}

// "t=a:b:n" (n evenly spaced values), "t=v1,v2,..." or "t=v".
std::pair<std::string, std::vector<mpq_class>> parse_grid_axis(const std::string& s) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("--grid: expected name=values, got '" + s + "'");
    std::string name = s.substr(0, eq), rest = s.substr(eq + 1);
    std::vector<mpq_class> values;
    if (std::count(rest.begin(), rest.end(), ':') == 2) {
        auto c1 = rest.find(':'), c2 = rest.rfind(':');
        mpq_class a = parse_number(rest.substr(0, c1)), b = parse_number(rest.substr(c1 + 1, c2 - c1 - 1));
        mpq_class n = parse_number(rest.substr(c2 + 1));
        if (n.get_den() != 1 || n < 1) throw UsageError("--grid: point count must be a positive integer");
        long count = n.get_num().get_si();
        if (count == 1) values.push_back(a);
        for (long k = 0; count > 1 && k < count; ++k) values.push_back(a + (b - a) * k / (count - 1));
    } else {
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) values.push_back(parse_number(item));
    }
    if (values.empty()) throw UsageError("--grid: no values for '" + name + "'");
    return {name, values};
}

std::vector<ParamPoint> build_grid(const RingPtr& ring, const std::vector<std::string>& axes) {
    std::vector<std::vector<mpq_class>> per_param(ring->param_count());
    for (const auto& a : axes) {
        auto [name, values] = parse_grid_axis(a);
        auto idx = ring->index_of(name);
        if (!idx || *idx == 0) throw UsageError("--grid: '" + name + "' is not a parameter");
        per_param[*idx - 1] = values;
    }
    const std::vector<mpq_class> fallback = {mpq_class(3, 10), mpq_class(3, 5), mpq_class(9, 10)};
    std::vector<ParamPoint> grid{ParamPoint{}};
    for (auto& values : per_param) {
        if (values.empty()) values = fallback;
        std::vector<ParamPoint> next;
        for (const auto& g : grid)
            for (const auto& v : values) {
                ParamPoint q = g;
                q.push_back(v);
                next.push_back(std::move(q));
            }
        grid = std::move(next);
    }
    return grid;
}

// ---------- output helpers ----------

json matrix_json(const RatMatrix& m) { return to_strings(m); }

json witnesses_json(const RingPtr& ring, const std::vector<std::pair<std::size_t, RatMatrix>>& ws) {
    json out = json::object();
    for (const auto& [p, b] : ws) out[ring->name(p)] = matrix_json(b);
    return out;
}

json report_json(const RingPtr& ring, const IntegrabilityReport& rep) {
    json out;
    out["verdict"] = to_string(rep.verdict);
    if (!rep.witnesses.empty()) out["witnesses"] = witnesses_json(ring, rep.witnesses);
    if (!rep.violations.empty()) {
        json vs = json::array();
        for (const auto& v : rep.violations)
            vs.push_back({{"i", ring->name(v.i)}, {"j", ring->name(v.j)}, {"residual", matrix_json(v.residual)}});
        out["violations"] = vs;
    }
    if (!rep.note.empty()) out["note"] = rep.note;
    return out;
}

std::string closure_kind(ClosureTag::Kind k) {
    switch (k) {
    case ClosureTag::Kind::TrivialGroup: return "TrivialGroup";
    case ClosureTag::Kind::FiniteCyclic: return "FiniteCyclic";
    case ClosureTag::Kind::FullGa: return "FullGa";
    case ClosureTag::Kind::FullGm: return "FullGm";
    }
    return "";
}

std::string group_kind(const Rank1Answer& a) {
    if (auto* g = std::get_if<GaSubgroup>(&a.group)) return g->is_full() ? "Full" : "Kernel";
    switch (std::get<GmSubgroup>(a.group).kind()) {
    case GmSubgroup::Kind::Full: return "Full";
    case GmSubgroup::Kind::FiniteCyclic: return "FiniteCyclic";
    case GmSubgroup::Kind::LogKernel: return "LogKernel";
    }
    return "";
}

json cmatrix_json(const CMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

json monodromy_json(const RingPtr& ring, const MonodromyReport& rep) {
    json out;
    out["verdict"] = to_string(rep.verdict);
    out["spread"] = rep.spread;
    out["eps"] = rep.eps;
    json grid = json::array();
    for (const auto& g : rep.grid) {
        json pt;
        json tau = json::object();
        for (std::size_t p = 0; p < g.tau.size(); ++p) tau[ring->name(p + 1)] = g.tau[p].get_str();
        pt["tau"] = tau;
        if (g.monodromy) {
            pt["monodromy"] = cmatrix_json(*g.monodromy);
            json inv = json::array();
            for (auto c : g.invariants) inv.push_back({c.real(), c.imag()});
            pt["invariants"] = inv;
        } else {
            pt["error"] = g.error;
        }
        grid.push_back(pt);
    }
    out["grid"] = grid;
    return out;
}

void print_human(std::ostream& os, const json& j, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [](const json& v) {
        if (!v.is_array()) return false;
        for (const auto& e : v)
            if (e.is_object() || (e.is_array() && !e.empty() && e[0].is_array())) return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !flat(v))) {
                os << pad << k << ":\n";
                print_human(os, v, indent + 2);
            } else if (v.is_array()) {
                os << pad << k << ": " << v.dump() << "\n";
            } else {
                os << pad << k << ": " << scalar(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                os << pad << "-\n";
                print_human(os, v, indent + 2);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

json error_json(const std::exception& e) {
    json err;
    if (auto* p = dynamic_cast<const ParseError*>(&e)) {
        err = {{"kind", "ParseError"}, {"message", p->detail()}, {"position", p->position()}};
    } else if (auto* s = dynamic_cast<const SchemaError*>(&e)) {
        static const char* kinds[] = {"Json", "Schema", "DimensionMismatch", "DuplicateDerivation", "Expression"};
        err = {{"kind", "SchemaError"}, {"detail", kinds[static_cast<int>(s->kind())]}, {"message", e.what()}};
    } else if (dynamic_cast<const PathTooClose*>(&e)) {
        err = {{"kind", "PathTooClose"}, {"message", e.what()}};
    } else if (dynamic_cast<const EvalError*>(&e)) {
        err = {{"kind", "EvalError"}, {"message", e.what()}};
    } else if (dynamic_cast<const DivisionByZero*>(&e)) {
        err = {{"kind", "DivisionByZero"}, {"message", e.what()}};
    } else if (dynamic_cast<const std::invalid_argument*>(&e)) {
        err = {{"kind", "InvalidArgument"}, {"message", e.what()}};
    } else {
        err = {{"kind", "Error"}, {"message", e.what()}};
    }
    return {{"error", err}};
}

// ---------- subcommands ----------

struct OreArgs {
    std::vector<std::string> params{"t"};
    std::string derivation;
    std::vector<std::string> operands;

    std::pair<RingPtr, std::size_t> ring() const {
        auto r = make_ring(params);
        if (r->param_count() == 0) throw UsageError("operators need at least one parameter");
        std::size_t d = derivation.empty() ? 1 : r->require(derivation);
        if (d == 0) throw UsageError("the derivation must be a parameter");
        return {r, d};
    }
};

json run_ore(const std::string& op, const OreArgs& args) {
    auto [ring, d] = args.ring();
    if (op == "annihilator") {
        std::vector<Rat> gens;
        for (const auto& s : args.operands) gens.push_back(parse_expr(s, ring));
        auto ann = annihilator_of_span(ring, d, gens);
        json basis = json::array();
        for (const auto& b : ann.basis) basis.push_back(b.to_string());
        return {{"operator", ann.op.to_string()}, {"order", ann.op.order()}, {"basis", basis}};
    }
    if (args.operands.size() != 2) throw UsageError("ore " + op + " takes exactly two operators");
    auto l = parse_operator(args.operands[0], ring, d);
    auto m = parse_operator(args.operands[1], ring, d);
    if (op == "mul") return {{"result", ore_mul(l, m).to_string()}};
    if (op == "div") {
        auto qr = right_divide(l, m);
        return {{"quotient", qr.quotient.to_string()}, {"remainder", qr.remainder.to_string()}};
    }
    if (op == "gcrd") return {{"result", gcrd(l, m).to_string()}};
    return {{"result", lclm(l, m).to_string()}};
}

json run_group(const std::string& kind, const std::string& expr, const std::vector<std::string>& params,
               bool closure) {
    auto ring = make_ring(params);
    Rat a = parse_expr(expr, ring);
    Rank1Answer ans = kind == "add" ? additive_group(a) : multiplicative_group(a);
    json out;
    out["group"] = ans.render_group();
    out["kind"] = group_kind(ans);
    json trace;
    trace["integrated"] = ans.integrated.to_string();
    json res = json::array();
    for (const auto& r : ans.residues)
        res.push_back({{"pole", r.root.to_string()}, {"order", r.order}, {"coefficient", r.coeff.to_string()}});
    trace["residues"] = res;
    trace["exponential_part"] = ans.exponential_part;
    out["trace"] = trace;
    json flags = json::array();
    for (auto c : ans.caveats) flags.push_back(to_string(c));
    out["flags"] = flags;
    if (closure) {
        auto tag = classical_pv_group(ans);
        json c = {{"kind", closure_kind(tag.kind)}, {"group", tag.render()}};
        if (tag.kind == ClosureTag::Kind::FiniteCyclic) c["n"] = tag.n;
        out["closure"] = c;
    }
    return out;
}

json run_table(const std::string& param, long n) {
    auto ring = make_ring({param});
    auto rows = gm_del_subgroup_table(ring, 1, n);
    json out = json::array();
    for (const auto& r : rows) out.push_back({{"group", r.group.render()}, {"fixed_field", r.fixed_field}});
    bool chain = true;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) chain = chain && gm_contains(rows[i + 1].group, rows[i].group);
    return {{"rows", out}, {"chain_verified", chain}};
}

AnsatzBounds bounds_from(int headroom, int poly_degree) {
    AnsatzBounds b;
    if (headroom < 0) throw UsageError("--pole-headroom must be non-negative");
    b.pole_headroom = headroom;
    if (poly_degree >= 0) b.poly_degree = poly_degree;
    return b;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parameterized Picard-Vessiot toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format;
    if (const char* env = std::getenv("PPVKIT_FORMAT")) format = env;
    if (format != "json") format = "human";
    app.add_option("--format", format, "Output format (default from PPVKIT_FORMAT)")
        ->check(CLI::IsMember({"human", "json"}));

    json result;
    std::function<json()> action;

    // ore
    auto* ore = app.add_subcommand("ore", "Operations on differential operators in D");
    ore->require_subcommand(1);
    OreArgs ore_args;
    for (std::string op : {"mul", "div", "gcrd", "lclm", "annihilator"}) {
        auto* sub = ore->add_subcommand(op, op == "annihilator" ? "Monic operator killing the span of the inputs"
                                                                : "Binary operation on two operators");
        sub->add_option("operands", ore_args.operands, op == "annihilator" ? "Generators" : "Two operators")
            ->required();
        sub->add_option("--params", ore_args.params, "Parameter names")->delimiter(',');
        sub->add_option("--derivation", ore_args.derivation, "Parameter differentiated by D");
        sub->callback([&, op] { action = [&, op] { return run_ore(op, ore_args); }; });
    }

    // group
    auto* group = app.add_subcommand("group", "Differential Galois group of a rank-one equation");
    group->require_subcommand(1);
    std::string group_expr;
    std::vector<std::string> group_params{"t"};
    bool group_closure = false;
    for (std::string kind : {"add", "mult"}) {
        auto* sub = group->add_subcommand(kind, kind == "add" ? "y' = a (additive)" : "y' = a y (multiplicative)");
        sub->add_option("expr", group_expr, "Coefficient a in x and the parameter")->required();
        sub->add_option("--params", group_params, "Parameter names")->delimiter(',');
        sub->add_flag("--closure", group_closure, "Also print the classical group");
        sub->callback([&, kind] {
            action = [&, kind] { return run_group(kind, group_expr, group_params, group_closure); };
        });
    }

    SystemInput input;
    int headroom = 1, poly_degree = -1, degree_cap = 5;
    auto add_bounds = [&](CLI::App* cmd) {
        cmd->add_option("--pole-headroom", headroom, "Extra pole order in the ansatz");
        cmd->add_option("--poly-degree", poly_degree, "Polynomial degree in the ansatz");
    };

    auto* check = app.add_subcommand("check-integrable", "Check the integrability conditions of a full system");
    input.add_to(check);
    check->callback([&] {
        action = [&] {
            auto spec = input.load();
            auto sys = ParamLinearSystem::from_spec(spec);
            return report_json(sys.ring, check_integrability(sys));
        };
    });

    auto* solve = app.add_subcommand("solve-integrable", "Search for a completion making the system integrable");
    input.add_to(solve);
    add_bounds(solve);
    solve->callback([&] {
        action = [&] {
            auto sys = ParamLinearSystem::from_spec(input.load());
            auto rep = solve_complete_integrability(sys.ring, sys.main_matrix(), sys.param_indices(),
                                                    bounds_from(headroom, poly_degree));
            return report_json(sys.ring, rep);
        };
    });

    auto* iso = app.add_subcommand("isomonodromy", "Symbolic isomonodromy verdict");
    input.add_to(iso);
    add_bounds(iso);
    iso->callback([&] {
        action = [&] {
            auto sys = ParamLinearSystem::from_spec(input.load());
            auto v = isomonodromy_verdict(sys.ring, sys.main_matrix(), bounds_from(headroom, poly_degree));
            json out = {{"verdict", to_string(v.kind)}};
            out["report"] = report_json(sys.ring, v.report);
            return out;
        };
    });

    auto* cls = app.add_subcommand("classify-2x2", "Classify a 2x2 system");
    input.add_to(cls);
    add_bounds(cls);
    cls->add_option("--degree-cap", degree_cap, "Degree cap for the eigen-line search");
    cls->callback([&] {
        action = [&] {
            auto sys = ParamLinearSystem::from_spec(input.load());
            const auto& a = sys.main_matrix();
            auto v = classify_2x2(sys.ring, a, bounds_from(headroom, poly_degree), degree_cap);
            json out = {{"verdict", to_string(v.kind)}};
            if (!v.witnesses.empty()) out["witnesses"] = witnesses_json(sys.ring, v.witnesses);
            if (!v.eigen_line.empty()) {
                json line = json::array();
                for (const auto& c : v.eigen_line) line.push_back(c.to_string());
                out["eigen_line"] = line;
                out["exponent"] = v.exponent.to_string();
            }
            if (!v.reasons.empty()) out["reasons"] = v.reasons;
            out["verified"] = verify_verdict(sys.ring, a, v);
            out["interpretation"] = interpret_verdict(v);
            return out;
        };
    });

    std::string loop_text = "center=0,radius=1,segments=64", polyline_text;
    std::vector<std::string> grid_axes;
    double tol = 1e-9, eps = 1e-6;
    auto add_numeric = [&](CLI::App* cmd) {
        auto* l = cmd->add_option("--loop", loop_text, "Circle: center=RE[,center_im=IM],radius=R,segments=N");
        auto* p = cmd->add_option("--polyline", polyline_text, "Closed polygon: RE:IM;RE:IM;...");
        l->excludes(p);
        cmd->add_option("--grid", grid_axes, "Parameter values: t=a:b:n or t=v1,v2,...");
        cmd->add_option("--tol", tol, "Integrator tolerance");
        cmd->add_option("--eps", eps, "Relative spread accepted as constant");
    };
    auto loop_of = [&] { return polyline_text.empty() ? parse_circle(loop_text) : parse_polyline(polyline_text); };

    auto* mono = app.add_subcommand("monodromy", "Numeric monodromy scan over a parameter grid");
    input.add_to(mono);
    add_numeric(mono);
    mono->callback([&] {
        action = [&] {
            auto sys = ParamLinearSystem::from_spec(input.load());
            auto rep = monodromy_scan(sys.ring, sys.main_matrix(), loop_of(), build_grid(sys.ring, grid_axes), tol, eps);
            return monodromy_json(sys.ring, rep);
        };
    });

    auto* cross = app.add_subcommand("cross-check", "Compare symbolic and numeric isomonodromy verdicts");
    input.add_to(cross);
    add_bounds(cross);
    add_numeric(cross);
    cross->callback([&] {
        action = [&] {
            auto sys = ParamLinearSystem::from_spec(input.load());
            auto cc = cross_check(sys.ring, sys.main_matrix(), bounds_from(headroom, poly_degree), loop_of(),
                                  build_grid(sys.ring, grid_axes), tol, eps);
            return json{{"agreement", to_string(cc.agreement)},
                        {"symbolic", to_string(cc.symbolic.kind)},
                        {"numeric", to_string(cc.numeric.verdict)},
                        {"spread", cc.numeric.spread}};
        };
    });

    auto* table = app.add_subcommand("table", "Subgroups of Gm^D and their fixed fields");
    std::string table_param = "t";
    long table_n = 1;
    table->add_option("--param", table_param, "Parameter name");
    table->add_option("-n", table_n, "Order of the finite cyclic row")->check(CLI::PositiveNumber);
    table->callback([&] { action = [&] { return run_table(table_param, table_n); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        result = action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        if (format == "json") {
            std::cout << error_json(e).dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 1;
    }
    if (format == "json") std::cout << result.dump(2) << "\n";
    else print_human(std::cout, result);
    return 0;
}
