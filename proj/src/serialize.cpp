#include "glmn/serialize.hpp"

#include "glmn/errors.hpp"

#include <sstream>

namespace glmn {

using nlohmann::json;

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return make_rational(j.get<std::int64_t>());
    if (!j.is_string())
        throw ParameterError("expected a rational string");
    const std::string s = j.get<std::string>();
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ParameterError("malformed rational '" + s + "'");
    }
}

json to_json(const Weight& w)
{
    return {{"m", w.params().m()}, {"n", w.params().n()}, {"coeffs", w.coeffs()}};
}

Weight weight_from_json(const json& j)
{
    try {
        return Weight(SuperParams(j.at("m").get<int>(), j.at("n").get<int>()),
                      j.at("coeffs").get<std::vector<std::int64_t>>());
    } catch (const json::exception& e) {
        throw ParameterError(std::string("weight JSON: ") + e.what());
    }
}

json to_json(const Root& r) { return json::array({r.i, r.j}); }

json to_json(const BlockDescriptor& b)
{
    json omega = json::array();
    for (const Root& r : b.omega)
        omega.push_back(to_json(r));
    return {{"k", b.atypicality},
            {"core_left", b.core_left},
            {"core_right", b.core_right},
            {"omega", omega}};
}

BlockDescriptor block_from_json(const json& j)
{
    try {
        BlockDescriptor b;
        b.atypicality = j.at("k").get<int>();
        b.core_left = j.at("core_left").get<std::vector<std::int64_t>>();
        b.core_right = j.at("core_right").get<std::vector<std::int64_t>>();
        for (const auto& r : j.at("omega"))
            b.omega.push_back({r.at(0).get<int>(), r.at(1).get<int>()});
        return b;
    } catch (const json::exception& e) {
        throw ParameterError(std::string("block JSON: ") + e.what());
    }
}

json to_json(const InvariantReport& r)
{
    return {{"complexity", r.complexity},       {"z_invariant", r.z_invariant},
            {"dim_X", r.dim_X},                 {"dim_V_g_g0", r.dim_V_g_g0},
            {"dim_V_f_f0", r.dim_V_f_f0},       {"dim_rank_plus", r.dim_rank_plus},
            {"dim_rank_minus", r.dim_rank_minus}};
}

InvariantReport report_from_json(const json& j)
{
    try {
        InvariantReport r;
        r.complexity = j.at("complexity").get<std::int64_t>();
        r.z_invariant = j.at("z_invariant").get<std::int64_t>();
        r.dim_X = j.at("dim_X").get<std::int64_t>();
        r.dim_V_g_g0 = j.at("dim_V_g_g0").get<std::int64_t>();
        r.dim_V_f_f0 = j.at("dim_V_f_f0").get<std::int64_t>();
        r.dim_rank_plus = j.at("dim_rank_plus").get<std::int64_t>();
        r.dim_rank_minus = j.at("dim_rank_minus").get<std::int64_t>();
        return r;
    } catch (const json::exception& e) {
        throw ParameterError(std::string("report JSON: ") + e.what());
    }
}

json to_json(const QuasiPolynomial& q)
{
    json coeffs = json::array();
    for (const auto& p : q.polys) {
        json row = json::array();
        for (const auto& c : p)
            row.push_back(to_json(c));
        coeffs.push_back(row);
    }
    return {{"period", q.period}, {"coefficients", coeffs}};
}

QuasiPolynomial quasipolynomial_from_json(const json& j)
{
    try {
        QuasiPolynomial q;
        q.period = j.at("period").get<std::int64_t>();
        for (const auto& row : j.at("coefficients")) {
            Polynomial p;
            for (const auto& c : row)
                p.push_back(rational_from_json(c));
            q.polys.push_back(std::move(p));
        }
        if (q.period < 1 || q.polys.size() != static_cast<std::size_t>(q.period))
            throw ParameterError("quasipolynomial JSON: period does not match constituents");
        return q;
    } catch (const json::exception& e) {
        throw ParameterError(std::string("quasipolynomial JSON: ") + e.what());
    }
}

json to_json(const WeightPairSet& s)
{
    json pairs = json::array();
    for (const auto& [mu, sigma] : s.pairs)
        pairs.push_back({{"mu", to_json(mu)}, {"sigma", to_json(sigma)}});
    return {{"d", s.d}, {"k", s.k}, {"block", to_json(s.block)}, {"pairs", pairs}};
}

json to_json(const ResolutionTrace& t)
{
    const SuperParams p(1, 1);
    json out = json::array();
    for (int d = 0; d <= t.depth(); ++d) {
        json summands = json::array();
        for (const auto& [mu, mult] : t.degrees[static_cast<std::size_t>(d)])
            summands.push_back({{"weight", to_json(Weight(p, {mu, -mu}))}, {"multiplicity", mult}});
        out.push_back({{"degree", d}, {"summands", summands}, {"total_dim", t.total_dim(d)}});
    }
    return out;
}

std::string to_csv(const Matrix& m)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                os << ',';
            os << to_string(m.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

} // namespace glmn
