#include "hk/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hk/algebraic.hpp"
#include "hk/error.hpp"
#include "hk/expr.hpp"
#include "hk/hensel.hpp"
#include "hk/implicit.hpp"
#include "hk/limits.hpp"
#include "hk/puiseux.hpp"
#include "hk/series_poly.hpp"

namespace hk::cli {

using json = nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    const size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

const std::vector<std::string> kKeys = {"command", "vars", "order", "tprec", "poly", "y",
                                        "r",       "seed", "root",  "branch", "ks"};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

int parse_int(const Entry& e) {
    const std::string v = trim(e.value);
    size_t used = 0;
    int out = 0;
    try {
        out = std::stoi(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size())
        throw UsageError("line " + std::to_string(e.line) + ": expected an integer for '" + e.key + "'");
    return out;
}

// Parse with locations relative to the file.
expr::Expr parse_at(const std::string& text, int line, int column) {
    try {
        return expr::parse(text, line);
    } catch (const expr::ParseError& e) {
        std::string msg = e.what();
        const size_t cut = msg.find(": ", msg.find("column"));
        throw expr::ParseError(e.code(), line, e.column() + column - 1,
                               cut == std::string::npos ? msg : msg.substr(cut + 2));
    }
}

struct Context {
    std::string command;
    ProblemFile file;
    int order = kDefaultOrder;
    int tprec = kDefaultTprec;
    json inputs = json::object();

    std::vector<expr::Expr> exprs(const std::string& key) {
        std::vector<expr::Expr> out;
        json echo = json::array();
        for (const auto& e : file.all(key)) {
            out.push_back(parse_at(e.value, e.line, e.column));
            echo.push_back(expr::print(out.back()));
        }
        if (!echo.empty()) inputs[key == "poly" ? "polys" : key] = echo;
        return out;
    }

    // comma-separated expressions on one line
    std::vector<expr::Expr> list(const std::string& key) {
        std::vector<expr::Expr> out;
        auto e = file.first(key);
        if (!e) return out;
        json echo = json::array();
        int offset = 0;
        for (const auto& part : split_commas(e->value)) {
            const size_t at = e->value.find(part, static_cast<size_t>(offset));
            out.push_back(parse_at(part, e->line, e->column + static_cast<int>(at == std::string::npos ? 0 : at)));
            offset = static_cast<int>(at == std::string::npos ? offset : at + part.size());
            echo.push_back(expr::print(out.back()));
        }
        inputs[key] = echo;
        return out;
    }

    std::optional<int> integer(const std::string& key) {
        auto e = file.first(key);
        if (!e) return std::nullopt;
        const int v = parse_int(*e);
        inputs[key] = v;
        return v;
    }

    int required_integer(const std::string& key) {
        auto v = integer(key);
        if (!v) throw UsageError("missing '" + key + ":' entry");
        return *v;
    }

    expr::Expr single_poly() {
        auto ps = exprs("poly");
        if (ps.size() != 1) throw UsageError("expected exactly one polynomial, found " + std::to_string(ps.size()));
        return ps[0];
    }

    // Declared X variables, or X1..Xn for the largest index used.
    std::vector<std::string> x_names(const std::vector<expr::Expr>& es, int at_least = 0) {
        if (auto v = file.first("vars")) {
            std::vector<std::string> names;
            for (const auto& part : split_commas(v->value)) {
                const std::string c = expr::canonical_variable(part);
                if (expr::x_index(c) < 0)
                    throw expr::ParseError(ErrorCode::UnknownVariable, v->line, v->column,
                                           "'" + part + "' is not an X variable");
                names.push_back(c);
            }
            inputs["vars"] = names;
            return names;
        }
        int n = at_least;
        for (const auto& e : es) n = std::max(n, expr::max_x_index(e) + 1);
        return default_names(n);
    }
};

bool uses_t(const std::vector<expr::Expr>& es) {
    return std::any_of(es.begin(), es.end(), [](const expr::Expr& e) { return expr::mentions(e, "t"); });
}

std::vector<std::string> with_t_var(std::vector<std::string> names) {
    names.push_back("T");
    return names;
}

template <class S>
std::string show(const MultiSeries<S>& s, const std::vector<std::string>& names) {
    return s.to_string(names);
}

std::string show_rational(const Rational& q) { return q.to_string(); }

json point_json(const hensel::Point& p) {
    json a = json::array();
    for (const auto& x : p) a.push_back(x.to_string());
    return a;
}

hensel::PolySystem polysystem(Context& c) {
    const auto es = c.exprs("poly");
    if (es.empty()) throw UsageError("no polynomials given");
    const auto names = c.x_names(es, static_cast<int>(es.size()));
    if (names.size() != es.size())
        throw UsageError("a square system needs as many polynomials as variables");
    std::vector<MultiSeries<LaurentSeries>> ps;
    for (const auto& e : es) ps.push_back(expr::to_polynomial(e, names));
    return hensel::PolySystem(std::move(ps));
}

hensel::Point target(Context& c, int n, bool required) {
    const auto ys = c.list("y");
    if (ys.empty()) {
        if (required) throw UsageError("missing 'y:' entry");
        return hensel::Point(static_cast<size_t>(n), LaurentSeries());
    }
    if (static_cast<int>(ys.size()) != n) throw UsageError("'y:' needs one value per polynomial");
    hensel::Point y;
    for (const auto& e : ys) y.push_back(expr::to_laurent(e));
    return y;
}

json cmd_hensel(Context& c) {
    const auto f = polysystem(c);
    const auto y = target(c, f.size(), false);
    const auto res = hensel::hensel_solve(f, y, c.tprec);
    const auto fx = f.evaluate(res.solution);
    bool residual_zero = true, in_ideal = true;
    for (int i = 0; i < f.size(); ++i) {
        residual_zero = residual_zero && (fx[static_cast<size_t>(i)] - y[static_cast<size_t>(i)]).is_zero();
        in_ideal = in_ideal && res.solution[static_cast<size_t>(i)].effective_valuation() > 0;
    }
    return {{"solution", point_json(res.solution)},
            {"iterations", res.iterations},
            {"t_precision", res.precision},
            {"uniqueness_certified", res.uniqueness_certified},
            {"residual_zero", residual_zero},
            {"in_maximal_ideal", in_ideal}};
}

json cmd_inverse(Context& c) {
    const auto f = polysystem(c);
    const auto y = target(c, f.size(), true);
    const auto res = hensel::inverse_map(f, y, c.tprec);
    const auto fx = f.evaluate(res.x);
    bool residual_zero = true, above_e = true;
    for (int i = 0; i < f.size(); ++i) {
        residual_zero = residual_zero && (fx[static_cast<size_t>(i)] - y[static_cast<size_t>(i)]).is_zero();
        above_e = above_e && res.x[static_cast<size_t>(i)].effective_valuation() > res.e.valuation();
    }
    return {{"x", point_json(res.x)},
            {"e", res.e.to_string()},
            {"t_precision", res.precision},
            {"residual_zero", residual_zero},
            {"valuations_above_e", above_e}};
}

template <class S>
json implicit_result(const implicit::ImplicitProblem<S>& pb, int order) {
    const auto sol = implicit::implicit_series(pb, order);
    const auto names = default_names(pb.r);
    json phis = json::array();
    bool integral = true;
    for (const auto& p : sol.phis) {
        phis.push_back(show(p, names));
        integral = integral && implicit::integrality_form(p, sol.e).integral;
    }
    bool zero = true;
    for (const auto& r : implicit::residuals(pb, sol.phis)) zero = zero && r.is_zero();
    return {{"phis", phis},
            {"e", ScalarTraits<S>::to_string(sol.e)},
            {"order", sol.order},
            {"residual_zero", zero},
            {"integral", integral}};
}

int free_count(Context& c, int n) {
    const int r = c.required_integer("r");
    if (r < 1 || r >= n) throw UsageError("'r:' must lie between 1 and the number of variables minus 1");
    return r;
}

json cmd_implicit(Context& c) {
    const auto es = c.exprs("poly");
    if (es.empty()) throw UsageError("no polynomials given");
    const auto names = c.x_names(es);
    const int n = static_cast<int>(names.size());
    const int r = free_count(c, n);
    if (n - r != static_cast<int>(es.size())) throw UsageError("need one polynomial per unknown X_{r+1}..X_n");
    if (uses_t(es)) {
        implicit::ImplicitProblem<LaurentSeries> pb{n, r, {}};
        for (const auto& e : es) pb.polys.push_back(expr::to_polynomial(e, names));
        return implicit_result(pb, c.order);
    }
    implicit::ImplicitProblem<Rational> pb{n, r, {}};
    for (const auto& e : es) pb.polys.push_back(expr::to_rational_polynomial(e, names));
    return implicit_result(pb, c.order);
}

json cmd_expand(Context& c) {
    const auto p = c.single_poly();
    const auto seeds = c.exprs("seed");
    std::vector<expr::Expr> all = {p};
    all.insert(all.end(), seeds.begin(), seeds.end());
    const auto names = c.x_names(all, 1);
    algebraic::AlgebraicSeries a;
    a.minpoly = expr::to_rational_polynomial(p, with_t_var(names));
    a.seed = seeds.empty() ? MultiSeries<Rational>(static_cast<int>(names.size()))
                           : expr::to_rational_polynomial(seeds.front(), names);
    const auto phi = algebraic::expand_algebraic(a, c.order);
    return {{"series", show(phi, names)}, {"order", c.order}};
}

json cmd_artin_mazur(Context& c) {
    const auto es = c.exprs("poly");
    if (es.empty()) throw UsageError("no polynomials given");
    const auto names = c.x_names(es);
    const int n = static_cast<int>(names.size());
    const int r = free_count(c, n);
    if (n - r != static_cast<int>(es.size())) throw UsageError("need one polynomial per unknown X_{r+1}..X_n");
    implicit::ImplicitProblem<Rational> pb{n, r, {}};
    for (const auto& e : es) pb.polys.push_back(expr::to_rational_polynomial(e, names));
    const auto sol = implicit::implicit_series(pb, c.order);
    const auto rep = algebraic::verify_artin_mazur(pb.polys, sol.phis, c.order);
    json phis = json::array(), zero = json::array();
    for (const auto& p : sol.phis) phis.push_back(show(p, default_names(r)));
    for (bool z : rep.residual_zero) zero.push_back(z);
    return {{"phis", phis},
            {"jacobian", show_rational(rep.jacobian)},
            {"jacobian_nonzero", rep.jacobian_nonzero},
            {"residual_zero", zero},
            {"order", rep.order},
            {"holds", rep.holds()}};
}

// Univariate-in-X polynomial in T.
expr::Expr univariate(Context& c) {
    const auto p = c.single_poly();
    if (expr::max_x_index(p) > 0) throw expr::ParseError(ErrorCode::UnknownVariable, 1, 1, "only X (= X1) and T are allowed");
    return p;
}

json polygon_json(const puiseux::NewtonPolygon& p) {
    json pts = json::array(), verts = json::array(), edges = json::array();
    for (const auto& [i, o] : p.points) pts.push_back({i, o});
    for (const auto& [i, o] : p.vertices()) verts.push_back({i, o});
    for (const auto& e : p.edges)
        edges.push_back({{"start", {e.i0, e.o0}}, {"end", {e.i1, e.o1}}, {"slope", e.slope.to_string()}, {"length", e.length}});
    return {{"points", pts}, {"vertices", verts}, {"edges", edges}, {"zero_roots", p.zero_roots}};
}

json cmd_polygon(Context& c) {
    const auto p = univariate(c);
    const auto f = split_last_variable(expr::to_polynomial(p, {"X1", "T"}));
    return polygon_json(puiseux::newton_polygon(f));
}

long factorial(int s) {
    long f = 1;
    for (int i = 2; i <= s; ++i) f *= i;
    return f;
}

template <class S>
json roots_json(const SeriesPoly<S>& f, const std::vector<puiseux::PuiseuxRoot<S>>& roots) {
    json rs = json::array();
    bool bound = true;
    for (const auto& r : roots) {
        rs.push_back({{"series", r.series.to_string()},
                      {"ramification", r.series.ramification},
                      {"multiplicity", r.multiplicity},
                      {"conjugates", r.conjugates}});
        bound = bound && factorial(f.degree()) % r.series.ramification == 0;
    }
    const auto rec = puiseux::reconstruct(f, roots);
    return {{"roots", rs},
            {"common_ramification", rec.ramification},
            {"ramification_divides_s_factorial", bound},
            {"reconstruction", {{"matches", rec.matches}, {"z_precision", rec.precision}}}};
}

json cmd_puiseux(Context& c) {
    const auto p = univariate(c);
    if (uses_t({p})) {
        const auto f = split_last_variable(expr::to_polynomial(p, {"X1", "T"}));
        return roots_json(f, puiseux::puiseux_roots(f, c.order, false, c.tprec));
    }
    const auto f = puiseux::to_algebraic(split_last_variable(expr::to_rational_polynomial(p, {"X1", "T"})));
    return roots_json(f, puiseux::puiseux_roots(f, c.order, false, c.tprec));
}

json cmd_split(Context& c) {
    const auto p = univariate(c);
    const auto f = puiseux::to_algebraic(split_last_variable(expr::to_rational_polynomial(p, {"X1", "T"})));
    const auto s = puiseux::split_irreducible(f, c.order);
    json factors = json::array();
    for (const auto& fa : s.factors) factors.push_back(fa.to_string({"X"}));
    return {{"s", s.s},
            {"phi", s.phi.to_string({"X"})},
            {"epsilon", s.epsilon.to_string()},
            {"factors", factors},
            {"verified", s.verified}};
}

json cmd_qordinary(Context& c) {
    const auto p = c.single_poly();
    const auto names = c.x_names({p}, 1);
    const auto f = split_last_variable(expr::to_rational_polynomial(p, with_t_var(names)));
    const auto rep = puiseux::quasiordinary_check(f);
    return {{"discriminant", rep.discriminant.to_string(names)},
            {"alpha", rep.alpha},
            {"unit", rep.unit ? json(rep.unit->to_string(names)) : json(nullptr)},
            {"is_quasiordinary", rep.is_quasiordinary}};
}

json cmd_verify_roots(Context& c) {
    const auto p = c.single_poly();
    const auto roots = c.exprs("root");
    std::vector<expr::Expr> all = {p};
    all.insert(all.end(), roots.begin(), roots.end());
    const auto names = c.x_names(all, 1);
    const int r = c.required_integer("r");
    if (r < 1) throw UsageError("'r:' must be positive");
    const auto f = split_last_variable(expr::to_rational_polynomial(p, with_t_var(names)));
    std::vector<MultiSeries<Rational>> rs;
    for (const auto& e : roots) rs.push_back(expr::to_rational_polynomial(e, names));
    const auto rep = puiseux::verify_fractional_roots(f, rs, r);
    return {{"pass", rep.pass},
            {"first_failing", rep.first_failing < 0 ? json(nullptr) : json(rep.first_failing)},
            {"precision", rep.precision >= kExactPrecision ? json("exact") : json(rep.precision)}};
}

std::string rational_text(long p, long q) { return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q); }

json branch_json(const limits::LimitBranch& b) {
    json out = {{"branch", b.branch.to_string()},
                {"ramification", b.branch.ramification},
                {"multiplicity", b.multiplicity},
                {"vertical", b.vertical}};
    if (b.vertical) {
        out["limit"] = "0";
        out["line"] = "vertical (valuation infinite)";
        return out;
    }
    out["limit"] = b.infinite ? "INFINITY" : b.limit.to_string();
    out["slope"] = rational_text(b.p, b.q);
    out["beta"] = b.beta.to_string();
    out["line"] = "l = (" + rational_text(b.p, b.q) + ")k + " + b.beta.to_string();
    return out;
}

SeriesPoly<LaurentSeries> limit_poly(Context& c) {
    return split_last_variable(expr::to_polynomial(univariate(c), {"X1", "T"}));
}

json cmd_limit(Context& c) {
    const auto part = limits::branch_limits(limit_poly(c), c.order, c.tprec);
    json bs = json::array();
    for (const auto& b : part.branches) bs.push_back(branch_json(b));
    return {{"branches", bs}};
}

json cmd_slope_check(Context& c) {
    const auto q = limit_poly(c);
    const int j = c.integer("branch").value_or(0);
    std::vector<int> ks;
    if (auto e = c.file.first("ks")) {
        for (const auto& part : split_commas(e->value)) ks.push_back(parse_int(Entry{"ks", part, e->line, e->column}));
        c.inputs["ks"] = ks;
    }
    const auto rep = limits::slope_line_check(q, j, ks.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6} : ks, c.order, c.tprec);
    json samples = json::array();
    for (const auto& s : rep.samples) {
        json o = {{"k", s.k}, {"admissible", s.admissible}};
        if (s.admissible) {
            o["valuation"] = s.infinite ? json("infinity") : json(s.valuation);
            o["on_line"] = s.on_line;
        }
        samples.push_back(o);
    }
    return {{"branch", branch_json(rep.branch)}, {"samples", samples}, {"pass", rep.pass}};
}

const std::map<std::string, std::function<json(Context&)>>& table() {
    static const std::map<std::string, std::function<json(Context&)>> t = {
        {"hensel", cmd_hensel},        {"inverse", cmd_inverse},
        {"implicit", cmd_implicit},    {"expand", cmd_expand},
        {"artin-mazur-check", cmd_artin_mazur},
        {"polygon", cmd_polygon},      {"puiseux", cmd_puiseux},
        {"split", cmd_split},          {"qordinary", cmd_qordinary},
        {"verify-roots", cmd_verify_roots},
        {"limit", cmd_limit},          {"slope-check", cmd_slope_check},
    };
    return t;
}

}  // namespace

std::vector<Entry> ProblemFile::all(const std::string& key) const {
    std::vector<Entry> out;
    for (const auto& e : entries)
        if (e.key == key) out.push_back(e);
    return out;
}

std::optional<Entry> ProblemFile::first(const std::string& key) const {
    for (const auto& e : entries)
        if (e.key == key) return e;
    return std::nullopt;
}

ProblemFile parse_problem(const std::string& text) {
    ProblemFile out;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const size_t hash = raw.find('#');
        const std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
        if (trim(body).empty()) continue;
        const size_t colon = body.find(':');
        Entry e;
        e.line = line;
        if (colon == std::string::npos) {
            e.key = "poly";
            e.value = body;
            e.column = 1;
        } else {
            e.key = trim(body.substr(0, colon));
            if (std::find(kKeys.begin(), kKeys.end(), e.key) == kKeys.end())
                throw UsageError("line " + std::to_string(line) + ": unknown key '" + e.key + "'");
            e.value = body.substr(colon + 1);
            e.column = static_cast<int>(colon) + 2;
        }
        // columns count from the first character of the value as written
        const size_t lead = e.value.find_first_not_of(" \t");
        if (lead != std::string::npos) {
            e.column += static_cast<int>(lead);
            e.value = e.value.substr(lead);
        }
        while (!e.value.empty() && (e.value.back() == ' ' || e.value.back() == '\t' || e.value.back() == '\r'))
            e.value.pop_back();
        out.entries.push_back(e);
    }
    return out;
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, f] : table()) v.push_back(k);
        return v;
    }();
    return names;
}

Outcome run(const std::string& command, const std::string& text, const Options& options) {
    Outcome out;
    json& rep = out.report;
    rep["command"] = command;
    rep["inputs"] = json::object();
    rep["precision"] = {{"order", options.order.value_or(kDefaultOrder)}, {"tprec", options.tprec.value_or(kDefaultTprec)}};
    rep["result"] = nullptr;
    rep["diagnostics"] = json::array();
    auto fail = [&](int code, const std::string& kind, const std::string& message, json where = nullptr) {
        json d = {{"level", "error"}, {"code", kind}, {"message", message}};
        if (!where.is_null()) d["location"] = where;
        rep["diagnostics"].push_back(d);
        rep["status"] = "error";
        out.exit_code = code;
    };
    Context ctx;
    try {
        auto it = table().find(command);
        if (it == table().end()) throw UsageError("unknown command '" + command + "'");
        ctx.command = command;
        ctx.file = parse_problem(text);
        if (auto e = ctx.file.first("command"); e && e->value != command)
            throw UsageError("file is for command '" + e->value + "', not '" + command + "'");
        if (auto v = ctx.integer("order")) ctx.order = *v;
        if (auto v = ctx.integer("tprec")) ctx.tprec = *v;
        if (options.order) ctx.order = *options.order;
        if (options.tprec) ctx.tprec = *options.tprec;
        if (ctx.order < 1 || ctx.tprec < 1) throw UsageError("precisions must be positive");
        rep["precision"] = {{"order", ctx.order}, {"tprec", ctx.tprec}};
        rep["result"] = it->second(ctx);
        rep["status"] = "ok";
    } catch (const expr::ParseError& e) {
        fail(1, std::string(to_string(e.code())), e.what(), {{"line", e.line()}, {"column", e.column()}});
    } catch (const MathError& e) {
        const bool parse = e.code() == ErrorCode::SyntaxError || e.code() == ErrorCode::UnknownVariable;
        fail(parse ? 1 : 2, std::string(to_string(e.code())), e.what());
    } catch (const UsageError& e) {
        fail(1, "UsageError", e.what());
    }
    rep["inputs"] = ctx.inputs;
    return out;
}

namespace {

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_array()) {
        std::string s = "(";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
        return s + ")";
    }
    return v.dump();
}

bool flat(const json& v) {
    if (v.is_object()) return false;
    if (v.is_array())
        for (const auto& x : v)
            if (x.is_object() || (x.is_array() && !flat(x)) || (x.is_string() && x.get<std::string>().size() > 40))
                return false;
    return true;
}

void render(std::ostringstream& os, const json& v, int indent) {
    const std::string pad(static_cast<size_t>(indent), ' ');
    size_t width = 0;
    for (auto it = v.begin(); it != v.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = v.begin(); it != v.end(); ++it) {
        const json& x = it.value();
        os << pad << it.key() << std::string(width - it.key().size(), ' ') << " : ";
        if (flat(x)) {
            os << scalar_text(x) << "\n";
        } else if (x.is_object()) {
            os << "\n";
            render(os, x, indent + 2);
        } else {
            os << "\n";
            for (size_t i = 0; i < x.size(); ++i) {
                if (x[i].is_object()) {
                    os << pad << "  [" << i << "]\n";
                    render(os, x[i], indent + 4);
                } else {
                    os << pad << "  [" << i << "] " << scalar_text(x[i]) << "\n";
                }
            }
        }
    }
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    json head = json::object();
    head["command"] = report.value("command", "");
    head["status"] = report.value("status", "");
    const auto& p = report["precision"];
    head["precision"] = "order " + p.value("order", json(0)).dump() + ", tprec " + p.value("tprec", json(0)).dump();
    render(os, head, 0);
    if (!report["inputs"].empty()) {
        os << "inputs\n";
        render(os, report["inputs"], 2);
    }
    if (!report["result"].is_null()) {
        os << "result\n";
        render(os, report["result"], 2);
    }
    return os.str();
}

}  // namespace hk::cli
