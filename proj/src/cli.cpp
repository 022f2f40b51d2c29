#include "glmn/cli.hpp"

#include "glmn/dimension.hpp"
#include "glmn/ehrhart.hpp"
#include "glmn/errors.hpp"
#include "glmn/gl11.hpp"
#include "glmn/invariants.hpp"
#include "glmn/module.hpp"
#include "glmn/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace glmn::cli {

using nlohmann::json;

namespace {

std::int64_t parse_int(const std::string& s)
{
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ParameterError("malformed integer '" + s + "'");
    }
    if (pos != s.size())
        throw ParameterError("malformed integer '" + s + "'");
    return v;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

std::vector<std::vector<std::int64_t>> parse_weight_spec(const std::string& spec)
{
    std::vector<std::vector<std::int64_t>> choices;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ParameterError("empty coefficient in weight '" + spec + "'");
        const auto dots = item.find("..");
        std::vector<std::int64_t> vals;
        if (dots == std::string::npos) {
            vals.push_back(parse_int(item));
        } else {
            const std::int64_t lo = parse_int(item.substr(0, dots));
            const std::int64_t hi = parse_int(item.substr(dots + 2));
            if (lo > hi)
                throw ParameterError("empty range '" + item + "'");
            for (std::int64_t v = lo; v <= hi; ++v)
                vals.push_back(v);
        }
        choices.push_back(std::move(vals));
    }
    if (choices.empty())
        throw ParameterError("empty weight specification");
    std::vector<std::vector<std::int64_t>> grid{{}};
    for (const auto& vals : choices) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& prefix : grid)
            for (auto v : vals) {
                auto w = prefix;
                w.push_back(v);
                next.push_back(std::move(w));
            }
        grid = std::move(next);
        if (grid.size() > 100000)
            throw ParameterError("weight grid too large");
    }
    return grid;
}

namespace {

struct Common {
    int m = 1;
    int n = 1;
    std::string format = "json";
    std::uint64_t seed = 0;
};

struct WeightSource {
    std::string weight;
    std::string file;
    int sample = 0;
};

std::vector<Weight> collect_weights(const Common& c, const WeightSource& src)
{
    const SuperParams p(c.m, c.n);
    std::vector<std::vector<std::int64_t>> raw;
    if (!src.weight.empty()) {
        auto g = parse_weight_spec(src.weight);
        raw.insert(raw.end(), g.begin(), g.end());
    }
    if (!src.file.empty()) {
        std::ifstream in(src.file);
        if (!in)
            throw ParameterError("cannot open weights file '" + src.file + "'");
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#')
                continue;
            auto g = parse_weight_spec(line);
            raw.insert(raw.end(), g.begin(), g.end());
        }
    }
    if (src.sample > 0) {
        // Dominant samples: sorted draws within each factor.
        std::mt19937_64 rng(c.seed);
        std::uniform_int_distribution<std::int64_t> dist(-4, 4);
        for (int s = 0; s < src.sample; ++s) {
            std::vector<std::int64_t> left(static_cast<std::size_t>(c.m)),
                right(static_cast<std::size_t>(c.n));
            for (auto& v : left)
                v = dist(rng);
            for (auto& v : right)
                v = dist(rng);
            std::sort(left.begin(), left.end(), std::greater<>());
            std::sort(right.begin(), right.end(), std::greater<>());
            left.insert(left.end(), right.begin(), right.end());
            raw.push_back(std::move(left));
        }
    }
    if (raw.empty())
        throw ParameterError("no weights given (use --weight, --weights-file or --sample)");
    std::vector<Weight> out;
    for (auto& r : raw)
        out.emplace_back(p, std::move(r));
    return out;
}

std::string join(const std::vector<std::int64_t>& v, char sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << sep;
        os << v[i];
    }
    return os.str();
}

std::string omega_string(const std::vector<Root>& omega)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (i)
            os << ';';
        os << omega[i].to_string();
    }
    return os.str();
}

// ---------------------------------------------------------------------------

int cmd_classify(const Common& c, const WeightSource& src, std::ostream& out, std::ostream& err)
{
    const auto weights = collect_weights(c, src);
    int code = kExitOk;
    json records = json::array();
    if (c.format == "csv") {
        out << "# glmn-classify v1\n";
        out << "weight,dominant,k,omega,core_left,core_right,naive_length,length\n";
    }
    for (const Weight& w : weights) {
        const bool dom = is_dominant(w);
        if (!dom) {
            err << "error: weight " << w.to_string() << " is not dominant\n";
            code = kExitDomain;
            if (c.format == "csv")
                out << join(w.coeffs(), ';') << ",false,,,,,,\n";
            else
                records.push_back({{"weight", to_json(w)}, {"dominant", false},
                                   {"error", "weight is not dominant"}});
            continue;
        }
        const BlockDescriptor b = atypicality(w);
        const std::int64_t nl = naive_length(w);
        const std::int64_t l = length(w);
        if (c.format == "csv") {
            out << join(w.coeffs(), ';') << ",true," << b.atypicality << ','
                << omega_string(b.omega) << ',' << join(b.core_left, ';') << ','
                << join(b.core_right, ';') << ',' << nl << ',' << l << '\n';
        } else {
            records.push_back({{"weight", to_json(w)},
                               {"dominant", true},
                               {"block", to_json(b)},
                               {"naive_length", nl},
                               {"length", l}});
        }
    }
    if (c.format == "json")
        out << (records.size() == 1 ? records[0] : records).dump(2) << '\n';
    return code;
}

// ---------------------------------------------------------------------------

struct Check {
    std::string name;
    std::int64_t formula = 0;
    std::int64_t measured = 0;
    std::string status; // AGREE, DISAGREE, SKIPPED
    std::string note;
};

json to_json(const Check& ch)
{
    json j = {{"check", ch.name}, {"status", ch.status}};
    if (ch.status != "SKIPPED") {
        j["formula"] = ch.formula;
        j["measured"] = ch.measured;
    }
    if (!ch.note.empty())
        j["note"] = ch.note;
    return j;
}

Check compare(std::string name, std::int64_t formula, std::int64_t measured, std::string note = {})
{
    return {std::move(name), formula, measured, formula == measured ? "AGREE" : "DISAGREE",
            std::move(note)};
}

Check skipped(std::string name, std::string why)
{
    return {std::move(name), 0, 0, "SKIPPED", std::move(why)};
}

bool gl11_principal(const Weight& w)
{
    return w.params().m() == 1 && w.params().n() == 1 && w.coeff(1) + w.coeff(2) == 0;
}

std::vector<Check> verify(ModuleKind kind, const Weight& w, const InvariantReport& r)
{
    std::vector<Check> checks;
    if (kind == ModuleKind::Simple) {
        if (atypicality(w).atypicality == 0) {
            // Typical simple modules are Kac modules, hence projective.
            try {
                const MatrixModule k = kac_module(w);
                const int rp = rank_variety(k, 1), rm = rank_variety(k, -1);
                checks.push_back(compare("rank_variety_plus_dim", r.dim_rank_plus,
                                         rank_orbit_closure_dim(w.params(), rp)));
                checks.push_back(compare("rank_variety_minus_dim", r.dim_rank_minus,
                                         rank_orbit_closure_dim(w.params(), rm)));
            } catch (const ResourceError& e) {
                checks.push_back(skipped("rank_variety", e.what()));
            }
        } else if (gl11_principal(w)) {
            const auto trace = gl11_minimal_resolution({Gl11Target::Kind::Simple, w.coeff(1)}, 15);
            checks.push_back(compare("complexity", r.complexity,
                                     measured_growth(trace, GrowthWeighting::ByProjectiveDim).rate,
                                     "minimal resolution, depth 15"));
            checks.push_back(compare("z_invariant", r.z_invariant,
                                     measured_growth(trace, GrowthWeighting::Unit).rate,
                                     "minimal resolution, depth 15"));
        } else {
            checks.push_back(skipped("simple_module",
                                     "atypical simple modules are realized only for gl(1|1)"));
        }
        return checks;
    }
    try {
        const MatrixModule mod = kind == ModuleKind::Kac ? kac_module(w) : dual_kac_module(w);
        const int rp = rank_variety(mod, 1), rm = rank_variety(mod, -1);
        const std::int64_t dp = rank_orbit_closure_dim(w.params(), rp);
        const std::int64_t dm = rank_orbit_closure_dim(w.params(), rm);
        checks.push_back(compare("rank_variety_plus_dim", r.dim_rank_plus, dp));
        checks.push_back(compare("rank_variety_minus_dim", r.dim_rank_minus, dm));
        checks.push_back(compare("dim_X", r.dim_X, std::max(dp, dm)));
        const int fp = f_rank_variety(mod, 1), fm = f_rank_variety(mod, -1);
        checks.push_back(compare("dim_V_f_f0", r.dim_V_f_f0, fp + fm));
    } catch (const ResourceError& e) {
        checks.push_back(skipped("rank_variety", e.what()));
    }
    if (kind == ModuleKind::Kac && gl11_principal(w)) {
        const auto trace = gl11_minimal_resolution({Gl11Target::Kind::Kac, w.coeff(1)}, 15);
        checks.push_back(compare("complexity", r.complexity,
                                 measured_growth(trace, GrowthWeighting::ByProjectiveDim).rate,
                                 "minimal resolution, depth 15"));
        checks.push_back(compare("z_invariant", r.z_invariant,
                                 measured_growth(trace, GrowthWeighting::Unit).rate,
                                 "minimal resolution, depth 15"));
    }
    return checks;
}

int cmd_invariants(const Common& c, const WeightSource& src, const std::string& kind_name,
                   bool do_verify, std::ostream& out, std::ostream& err)
{
    const ModuleKind kind = parse_module_kind(kind_name);
    const auto weights = collect_weights(c, src);
    int code = kExitOk;
    json records = json::array();
    if (c.format == "csv") {
        out << "# glmn-invariants v1\n";
        out << "weight,kind,complexity,z_invariant,dim_X,dim_V_g_g0,dim_V_f_f0,dim_rank_plus,"
               "dim_rank_minus,verify\n";
    }
    for (const Weight& w : weights) {
        if (!is_dominant(w)) {
            err << "error: weight " << w.to_string() << " is not dominant\n";
            code = std::max(code, kExitDomain);
            continue;
        }
        const InvariantReport r = variety_dims(kind, w);
        std::vector<Check> checks;
        if (do_verify)
            checks = verify(kind, w, r);
        std::string summary = do_verify ? "AGREE" : "";
        for (const auto& ch : checks) {
            if (ch.status == "DISAGREE") {
                summary = "DISAGREE";
                code = kExitInternal;
            } else if (ch.status == "SKIPPED" && summary == "AGREE") {
                summary = "PARTIAL";
            }
        }
        if (c.format == "csv") {
            out << join(w.coeffs(), ';') << ',' << to_string(kind) << ',' << r.complexity << ','
                << r.z_invariant << ',' << r.dim_X << ',' << r.dim_V_g_g0 << ',' << r.dim_V_f_f0
                << ',' << r.dim_rank_plus << ',' << r.dim_rank_minus << ',' << summary << '\n';
        } else {
            json rec = {{"weight", to_json(w)}, {"kind", to_string(kind)}, {"report", to_json(r)}};
            if (do_verify) {
                json v = json::array();
                for (const auto& ch : checks)
                    v.push_back(to_json(ch));
                rec["verify"] = v;
                rec["verdict"] = summary;
            }
            records.push_back(rec);
        }
    }
    if (c.format == "json")
        out << (records.size() == 1 ? records[0] : records).dump(2) << '\n';
    return code;
}

// ---------------------------------------------------------------------------

int cmd_ehrhart(const Common& c, int k, std::int64_t dmin, std::int64_t dmax, std::ostream& out,
                std::ostream& err)
{
    if (k < 1)
        throw ParameterError("--k must be positive");
    if (k == 1) {
        const auto [b, a] = k1_degenerate_point();
        if (c.format == "csv")
            out << "# glmn-ehrhart v1\nb1,a1\n" << b << ',' << a << '\n';
        else
            out << json{{"k", 1}, {"point", {b, a}}}.dump(2) << '\n';
        return kExitOk;
    }
    if (dmin < 1 || dmax < dmin)
        throw ParameterError("need 1 <= dmin <= dmax");
    const std::int64_t limit = enumeration_limit(k);
    if (limit == 0)
        throw ResourceError("ehrhart: k = " + std::to_string(k) + " exceeds the enumeration bound");
    std::int64_t top = dmax;
    bool truncated = false;
    if (top > limit) {
        top = limit;
        truncated = true;
    }
    const RationalPolytope poly = build_polytope(k);
    const std::int64_t period_bound = vertex_denominator_lcm(poly);
    // The fit needs 2k nodes plus held-out values in every residue class.
    const std::int64_t fit_top =
        std::min(limit, std::max(top, period_bound * static_cast<std::int64_t>(2 * k + 2)));
    std::map<std::int64_t, Integer> counts;
    for (std::int64_t d = 1; d <= fit_top; ++d)
        counts[d] = count_lattice_points(k, d);

    std::optional<QuasiPolynomial> q;
    std::string fit_error;
    try {
        q = fit_quasipolynomial(counts, k, period_bound);
    } catch (const FitError& e) {
        fit_error = e.what();
    }
    std::optional<Polynomial> lower;
    if (q)
        lower = lower_bound_poly(*q);

    if (c.format == "csv") {
        out << "# glmn-ehrhart v1\n";
        out << "d,count,Q,count_ge_Q\n";
    }
    json rows = json::array();
    for (std::int64_t d = dmin; d <= top; ++d) {
        const Integer& cnt = counts.at(d);
        std::string qs, ok;
        if (lower) {
            const Rational qv = evaluate(*lower, d);
            qs = to_string(qv);
            ok = Rational(cnt) >= qv ? "true" : "false";
        }
        if (c.format == "csv")
            out << d << ',' << cnt.str() << ',' << qs << ',' << ok << '\n';
        else
            rows.push_back({{"d", d}, {"count", cnt.str()}, {"Q", qs}, {"count_ge_Q", ok == "true"}});
    }
    if (truncated) {
        err << "warning: table truncated at d = " << top << " (enumeration bound)\n";
        if (c.format == "csv")
            out << "# warning: truncated at d=" << top << '\n';
    }
    if (c.format == "csv") {
        if (q)
            out << "# quasipolynomial: " << glmn::to_json(*q).dump() << '\n';
        else
            out << "# fit_error: " << fit_error << '\n';
    } else {
        json doc = {{"k", k}, {"rows", rows}, {"period_bound", period_bound}};
        if (truncated)
            doc["warning"] = "truncated at d=" + std::to_string(top);
        if (q) {
            doc["quasipolynomial"] = glmn::to_json(*q);
            doc["degree"] = q->degree();
            doc["volume"] = glmn::to_json(q->polys.front().back());
            json lb = json::array();
            for (const auto& v : *lower)
                lb.push_back(glmn::to_json(v));
            doc["lower_bound"] = lb;
        } else {
            doc["fit_error"] = fit_error;
        }
        out << doc.dump(2) << '\n';
    }
    return q ? kExitOk : kExitInternal;
}

// ---------------------------------------------------------------------------

int cmd_resolve(const Common& c, const std::string& weight, const std::string& kind_name, int depth,
                int kl_window, std::ostream& out)
{
    if (depth < 10 || depth > kMaxResolutionDepth)
        throw ParameterError("--depth must lie in [10, " + std::to_string(kMaxResolutionDepth) + "]");
    if (c.m != 1 || c.n != 1)
        throw ParameterError("resolve supports gl(1|1) only");
    const ModuleKind kind = parse_module_kind(kind_name);
    if (kind == ModuleKind::DualKac)
        throw ParameterError("resolve supports --kind kac or simple");
    const auto grid = parse_weight_spec(weight);
    if (grid.size() != 1)
        throw ParameterError("resolve takes a single weight");
    const Weight w(SuperParams(1, 1), grid.front());
    if (!gl11_principal(w))
        throw DomainError("resolve: weight " + w.to_string() +
                          " is not in the principal block of gl(1|1)");
    const Gl11Target target{kind == ModuleKind::Kac ? Gl11Target::Kind::Kac
                                                    : Gl11Target::Kind::Simple,
                            w.coeff(1)};
    const ResolutionTrace trace = gl11_minimal_resolution(target, depth);
    const GrowthFit cfit = measured_growth(trace, GrowthWeighting::ByProjectiveDim);
    const GrowthFit zfit = measured_growth(trace, GrowthWeighting::Unit);
    const std::int64_t cform = complexity(kind, w);
    const std::int64_t zform = z_invariant(kind, w);
    auto verdict = [](std::int64_t a, std::int64_t b) { return a == b ? "AGREE" : "DISAGREE"; };

    struct KLRow {
        std::int64_t lambda, mu;
        std::vector<Integer> poly;
    };
    std::vector<KLRow> kl;
    for (std::int64_t l = -kl_window; l <= kl_window && kl_window > 0; ++l)
        for (std::int64_t m = -kl_window; m <= kl_window; ++m)
            kl.push_back({l, m, kl_poly_gl11(l, m)});

    auto poly_str = [](const std::vector<Integer>& p) {
        if (p.empty())
            return std::string("0");
        std::string s;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] == 0)
                continue;
            if (!s.empty())
                s += "+";
            s += p[j].str();
            if (j > 0)
                s += j == 1 ? "q" : "q^" + std::to_string(j);
        }
        return s;
    };

    if (c.format == "csv") {
        out << "# glmn-resolve v1\n";
        out << "degree,summands,total_dim\n";
        for (int d = 0; d <= trace.depth(); ++d) {
            std::string s;
            for (const auto& [mu, mult] : trace.degrees[static_cast<std::size_t>(d)]) {
                if (!s.empty())
                    s += ';';
                s += "P(" + std::to_string(mu) + ")^" + std::to_string(mult);
            }
            out << d << ',' << s << ',' << trace.total_dim(d) << '\n';
        }
        out << "# growth\nquantity,formula,measured,slope,verdict\n";
        out << std::setprecision(6) << "complexity," << cform << ',' << cfit.rate << ','
            << cfit.slope << ',' << verdict(cform, cfit.rate) << '\n';
        out << "z_invariant," << zform << ',' << zfit.rate << ',' << zfit.slope << ','
            << verdict(zform, zfit.rate) << '\n';
        if (!kl.empty()) {
            out << "# kl\nlambda,mu,p,constant_term_one,degree_le_1,p1_le_1\n";
            for (const auto& row : kl) {
                const bool nz = !row.poly.empty();
                Integer at1 = 0;
                for (const auto& v : row.poly)
                    at1 += v;
                out << row.lambda << ',' << row.mu << ',' << poly_str(row.poly) << ','
                    << (nz ? (row.poly[0] == 1 ? "true" : "false") : "n/a") << ','
                    << (row.poly.size() <= 2 ? "true" : "false") << ','
                    << (at1 <= 1 ? "true" : "false") << '\n';
            }
        }
    } else {
        json doc = {{"target", {{"kind", to_string(kind)}, {"weight", to_json(w)}}},
                    {"trace", to_json(trace)},
                    {"complexity",
                     {{"formula", cform}, {"measured", cfit.rate}, {"slope", cfit.slope},
                      {"verdict", verdict(cform, cfit.rate)}}},
                    {"z_invariant",
                     {{"formula", zform}, {"measured", zfit.rate}, {"slope", zfit.slope},
                      {"verdict", verdict(zform, zfit.rate)}}}};
        if (!kl.empty()) {
            json rows = json::array();
            for (const auto& row : kl) {
                json coeffs = json::array();
                for (const auto& v : row.poly)
                    coeffs.push_back(v.str());
                rows.push_back({{"lambda", row.lambda}, {"mu", row.mu}, {"p", coeffs}});
            }
            doc["kl"] = rows;
        }
        out << doc.dump(2) << '\n';
    }
    return cform == cfit.rate && zform == zfit.rate ? kExitOk : kExitInternal;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations for gl(m|n) weights, invariants, polytopes and resolutions"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--m", common.m, "rank of the even gl(m) factor")->default_val(1);
        sub->add_option("--n", common.n, "rank of the odd gl(n) factor")->default_val(1);
        sub->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->default_val("json");
        sub->add_option("--seed", common.seed, "seed for --sample")->default_val(0);
    };
    WeightSource src;
    auto add_weights = [&](CLI::App* sub) {
        sub->add_option("--weight", src.weight, "comma separated coefficients; a..b ranges");
        sub->add_option("--weights-file", src.file, "file of weight specs, one per line");
        sub->add_option("--sample", src.sample, "number of random dominant weights");
    };

    auto* classify = app.add_subcommand("classify", "atypicality, block and lengths of weights");
    add_common(classify);
    add_weights(classify);

    std::string kind = "kac";
    bool do_verify = false;
    auto* invariants = app.add_subcommand("invariants", "closed-form invariant report");
    add_common(invariants);
    add_weights(invariants);
    invariants->add_option("--kind", kind, "kac, dualkac or simple")->default_val("kac");
    invariants->add_flag("--verify", do_verify, "cross-check against explicit modules");

    int k = 2;
    std::int64_t dmin = 1, dmax = 60;
    auto* ehrhart = app.add_subcommand("ehrhart", "lattice counts and quasipolynomial fit");
    add_common(ehrhart);
    ehrhart->add_option("--k", k, "atypicality")->default_val(2);
    ehrhart->add_option("--dmin", dmin, "first dilation")->default_val(1);
    ehrhart->add_option("--dmax", dmax, "last dilation")->default_val(60);

    int depth = 15;
    int kl_window = 0;
    std::string rkind = "simple";
    std::string rweight = "0,0";
    auto* resolve = app.add_subcommand("resolve", "minimal projective resolution in gl(1|1)");
    add_common(resolve);
    resolve->add_option("--weight", rweight, "weight t,-t")->default_val("0,0");
    resolve->add_option("--kind", rkind, "kac or simple")->default_val("simple");
    resolve->add_option("--depth", depth, "resolution depth")->default_val(15);
    resolve->add_option("--kl-window", kl_window, "emit KL polynomials for |lambda|,|mu| <= W")
        ->default_val(0);

    std::vector<char*> argv;
    std::string prog = "glmn";
    std::vector<std::string> storage = args;
    argv.push_back(prog.data());
    for (auto& a : storage)
        argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (classify->parsed())
            return cmd_classify(common, src, out, err);
        if (invariants->parsed())
            return cmd_invariants(common, src, kind, do_verify, out, err);
        if (ehrhart->parsed())
            return cmd_ehrhart(common, k, dmin, dmax, out, err);
        if (resolve->parsed())
            return cmd_resolve(common, rweight, rkind, depth, kl_window, out);
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

} // namespace glmn::cli
