#include "sphtd/commands.hpp"

#include "sphtd/gysin.hpp"
#include "sphtd/json_util.hpp"
#include "sphtd/tduality.hpp"

#include <iomanip>
#include <sstream>

namespace sphtd {

using nlohmann::json;

/****************************************************
 *                JSON primitives
 ***************************************************/

json integer_to_json(const Integer& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

Integer integer_from_json(const json& v)
{
    if (v.is_number_integer())
        return Integer(v.get<long>());
    if (v.is_string()) {
        Integer x;
        if (x.set_str(v.get<std::string>(), 10) != 0)
            throw Error(ErrorCode::BadArguments, "json: malformed integer string");
        return x;
    }
    throw Error(ErrorCode::BadArguments, "json: expected an integer");
}

json group_to_json(const AbelianGroup& g)
{
    json torsion = json::array();
    for (const Integer& d : g.torsion())
        torsion.push_back(integer_to_json(d));
    return {{"rank", g.rank()}, {"torsion", torsion}};
}

AbelianGroup group_from_json(const json& v)
{
    if (!v.is_object() || !v.contains("rank") || !v["rank"].is_number_unsigned())
        throw Error(ErrorCode::BadArguments, "json: group needs a non-negative 'rank'");
    std::vector<Integer> torsion;
    for (const auto& t : v.value("torsion", json::array()))
        torsion.push_back(integer_from_json(t));
    return AbelianGroup(v["rank"].get<std::size_t>(), std::move(torsion));
}

namespace {

json rational_to_json(const Rational& q)
{
    return q.get_str();
}

Rational rational_from_json(const json& v)
{
    if (!v.is_string())
        throw Error(ErrorCode::BadArguments, "json: rationals are encoded as \"p/q\" strings");
    Rational q;
    if (q.set_str(v.get<std::string>(), 10) != 0)
        throw Error(ErrorCode::BadArguments, "json: malformed rational");
    q.canonicalize();
    return q;
}

json pair_to_json(const ParityParts& p)
{
    return {{"even", group_to_json(p.even)}, {"odd", group_to_json(p.odd)}};
}

ParityParts pair_from_json(const json& v)
{
    return {group_from_json(v.at("even")), group_from_json(v.at("odd"))};
}

json bundle_inputs_to_json(const BundleInputs& in, bool with_flux)
{
    json j = {{"base", in.base}, {"n", in.n}, {"e", integer_to_json(in.e)}};
    if (with_flux)
        j["h"] = integer_to_json(in.h);
    return j;
}

BundleInputs bundle_inputs_from_json(const json& v)
{
    BundleInputs in;
    in.base = v.at("base").get<std::string>();
    in.n = v.at("n").get<int>();
    in.e = integer_from_json(v.at("e"));
    in.h = v.contains("h") ? integer_from_json(v["h"]) : Integer(0);
    return in;
}

template <class T>
json optional_to_json(const std::optional<T>& x)
{
    return x ? json(*x) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& v)
{
    if (v.is_null())
        return std::nullopt;
    return v.get<T>();
}

json rationals_to_json(const std::vector<Rational>& xs)
{
    json arr = json::array();
    for (const Rational& q : xs)
        arr.push_back(rational_to_json(q));
    return arr;
}

std::vector<Rational> rationals_from_json(const json& v)
{
    std::vector<Rational> xs;
    for (const auto& q : v)
        xs.push_back(rational_from_json(q));
    return xs;
}

BundleInputs inputs_for(const BaseManifold& base, const Integer& e, const Integer& h)
{
    return {base.name, base.half_dim, e, h};
}

}  // namespace

/****************************************************
 *                   Pipelines
 ***************************************************/

CohomologyReport run_bundle_cohomology(const BaseManifold& base, const Integer& e)
{
    const BundleWithFlux bundle(base, e, 0);
    const GysinResult gysin = gysin_sequence(bundle);
    return {inputs_for(base, e, 0), gysin.cohomology.groups(), gysin.split_by_convention};
}

TwistedReport run_twisted(const BaseManifold& base, const Integer& e, const Integer& h)
{
    const BundleWithFlux bundle(base, e, h);
    TwistedReport report;
    report.inputs = inputs_for(base, e, h);
    report.cohomology = twisted_cohomology(bundle);
    if (base.torsion_free()) {
        report.k = twisted_k(bundle);
        report.agree = report.k->k0 == report.cohomology.even && report.k->k1 == report.cohomology.odd;
    } else {
        report.notice = "base has torsion; twisted K-theory is not computed";
    }
    return report;
}

TDualReport run_tdual(const BaseManifold& base, const Integer& e, const Integer& h)
{
    const BundleWithFlux bundle(base, e, h);
    const DualityReport coh = verify_cohomology_duality(bundle);
    TDualReport report;
    report.inputs = inputs_for(base, e, h);
    report.dual_e = coh.dual.euler();
    report.dual_h = coh.dual.flux();
    report.cohomology_lhs = coh.lhs;
    report.cohomology_rhs = coh.rhs;
    report.cohomology_ok = coh.holds();
    if (base.torsion_free()) {
        const DualityReport kd = verify_k_duality(bundle);
        report.k_lhs = kd.lhs;
        report.k_rhs = kd.rhs;
        report.ktheory_ok = kd.holds();
    } else {
        report.notice = "base has torsion; K-theory duality is not decided";
    }
    return report;
}

ChernReport run_chern_verify(int k, int N)
{
    if (k < 1)
        throw Error(ErrorCode::BadArguments, "chern-verify: k must be >= 1");
    const ChernContext ctx{k, N, 0};
    ChernReport report;
    report.k = k;
    report.N = N;
    report.closure_sign = twisted_closure_sign(ctx);
    report.published_sign_agrees = report.closure_sign == kPublishedClosureSign;
    report.d_squared_zero = d_squared_check(ctx);

    std::vector<Rational> seeds;
    Rational f = 1;
    for (int m = 1; m <= k; ++m) {
        f /= m;
        seeds.push_back(f);
    }
    const OddSeriesSolution odd = odd_series_coefficients(ctx, report.closure_sign, seeds);
    report.odd_coefficients = odd.coefficients;
    report.odd_closes = odd.closes;
    report.published_odd_coefficients = odd.published_coefficients;
    report.published_odd_closes = odd.published_closes;
    report.published_odd_first_failure = odd.published_first_failure;
    return report;
}

/****************************************************
 *                   Documents
 ***************************************************/

const char* command_name(const CommandResult& result)
{
    struct Visitor {
        const char* operator()(const CohomologyReport&) const { return "bundle-cohomology"; }
        const char* operator()(const TwistedReport&) const { return "twisted"; }
        const char* operator()(const TDualReport&) const { return "tdual"; }
        const char* operator()(const ChernReport&) const { return "chern-verify"; }
    };
    return std::visit(Visitor{}, result);
}

json to_document(const CommandResult& result)
{
    struct Visitor {
        json operator()(const CohomologyReport& r) const
        {
            json degrees = json::array();
            for (std::size_t j = 0; j < r.degrees.size(); ++j) {
                json g = group_to_json(r.degrees[j]);
                g["degree"] = j;
                degrees.push_back(std::move(g));
            }
            return {{"inputs", bundle_inputs_to_json(r.inputs, false)},
                    {"results", {{"degrees", degrees}, {"split_by_convention", r.split_by_convention}}}};
        }
        json operator()(const TwistedReport& r) const
        {
            json res = {{"twisted_cohomology", pair_to_json(r.cohomology)},
                        {"twisted_k", r.k ? json{{"k0", group_to_json(r.k->k0)}, {"k1", group_to_json(r.k->k1)}}
                                          : json(nullptr)},
                        {"agree", optional_to_json(r.agree)},
                        {"notice", r.notice}};
            return {{"inputs", bundle_inputs_to_json(r.inputs, true)}, {"results", res}};
        }
        json operator()(const TDualReport& r) const
        {
            json res = {{"dual", {{"e", integer_to_json(r.dual_e)}, {"h", integer_to_json(r.dual_h)}}},
                        {"cohomology", {{"lhs", pair_to_json(r.cohomology_lhs)}, {"rhs", pair_to_json(r.cohomology_rhs)}}},
                        {"cohomology_ok", r.cohomology_ok},
                        {"ktheory", r.k_lhs && r.k_rhs
                                        ? json{{"lhs", pair_to_json(*r.k_lhs)}, {"rhs", pair_to_json(*r.k_rhs)}}
                                        : json(nullptr)},
                        {"ktheory_ok", optional_to_json(r.ktheory_ok)},
                        {"notice", r.notice}};
            return {{"inputs", bundle_inputs_to_json(r.inputs, true)}, {"results", res}};
        }
        json operator()(const ChernReport& r) const
        {
            json res = {{"d_squared_zero", r.d_squared_zero},
                        {"closure_sign", r.closure_sign},
                        {"published_sign_agrees", r.published_sign_agrees},
                        {"odd_coefficients", rationals_to_json(r.odd_coefficients)},
                        {"odd_closes", r.odd_closes},
                        {"published_odd_coefficients", rationals_to_json(r.published_odd_coefficients)},
                        {"published_odd_closes", r.published_odd_closes},
                        {"published_odd_first_failure", optional_to_json(r.published_odd_first_failure)}};
            return {{"inputs", {{"k", r.k}, {"N", r.N}}}, {"results", res}};
        }
    };
    json doc = std::visit(Visitor{}, result);
    doc["command"] = command_name(result);
    return doc;
}

CommandResult from_document(const json& doc)
{
    try {
        const std::string command = doc.at("command").get<std::string>();
        const json& in = doc.at("inputs");
        const json& res = doc.at("results");
        if (command == "bundle-cohomology") {
            CohomologyReport r;
            r.inputs = bundle_inputs_from_json(in);
            for (const auto& g : res.at("degrees"))
                r.degrees.push_back(group_from_json(g));
            r.split_by_convention = res.at("split_by_convention").get<bool>();
            return r;
        }
        if (command == "twisted") {
            TwistedReport r;
            r.inputs = bundle_inputs_from_json(in);
            r.cohomology = pair_from_json(res.at("twisted_cohomology"));
            if (!res.at("twisted_k").is_null())
                r.k = KGroups{group_from_json(res["twisted_k"].at("k0")), group_from_json(res["twisted_k"].at("k1"))};
            r.agree = optional_from_json<bool>(res.at("agree"));
            r.notice = res.at("notice").get<std::string>();
            return r;
        }
        if (command == "tdual") {
            TDualReport r;
            r.inputs = bundle_inputs_from_json(in);
            r.dual_e = integer_from_json(res.at("dual").at("e"));
            r.dual_h = integer_from_json(res.at("dual").at("h"));
            r.cohomology_lhs = pair_from_json(res.at("cohomology").at("lhs"));
            r.cohomology_rhs = pair_from_json(res.at("cohomology").at("rhs"));
            r.cohomology_ok = res.at("cohomology_ok").get<bool>();
            if (!res.at("ktheory").is_null()) {
                r.k_lhs = pair_from_json(res["ktheory"].at("lhs"));
                r.k_rhs = pair_from_json(res["ktheory"].at("rhs"));
            }
            r.ktheory_ok = optional_from_json<bool>(res.at("ktheory_ok"));
            r.notice = res.at("notice").get<std::string>();
            return r;
        }
        if (command == "chern-verify") {
            ChernReport r;
            r.k = in.at("k").get<int>();
            r.N = in.at("N").get<int>();
            r.d_squared_zero = res.at("d_squared_zero").get<bool>();
            r.closure_sign = res.at("closure_sign").get<int>();
            r.published_sign_agrees = res.at("published_sign_agrees").get<bool>();
            r.odd_coefficients = rationals_from_json(res.at("odd_coefficients"));
            r.odd_closes = res.at("odd_closes").get<bool>();
            r.published_odd_coefficients = rationals_from_json(res.at("published_odd_coefficients"));
            r.published_odd_closes = res.at("published_odd_closes").get<bool>();
            r.published_odd_first_failure = optional_from_json<int>(res.at("published_odd_first_failure"));
            return r;
        }
        throw Error(ErrorCode::BadArguments, "json: unknown command '" + command + "'");
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::BadArguments, std::string("json: malformed result document: ") + ex.what());
    }
}

/****************************************************
 *                 Text rendering
 ***************************************************/

namespace {

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

void bundle_header(std::ostream& os, const BundleInputs& in, bool with_flux)
{
    os << "base " << in.base << " (dim " << 2 * in.n << "), S^" << 2 * in.n - 1 << "-bundle, e = " << in.e;
    if (with_flux)
        os << ", h = " << in.h;
    os << '\n';
}

void row(std::ostream& os, const std::string& label, const std::string& value)
{
    os << "  " << std::left << std::setw(24) << label << value << '\n';
}

}  // namespace

std::string render_text(const CommandResult& result)
{
    std::ostringstream os;
    struct Visitor {
        std::ostream& os;
        void operator()(const CohomologyReport& r) const
        {
            bundle_header(os, r.inputs, false);
            os << "  " << std::left << std::setw(8) << "degree" << "H^j(Z;Z)\n";
            for (std::size_t j = 0; j < r.degrees.size(); ++j)
                os << "  " << std::left << std::setw(8) << j << r.degrees[j] << '\n';
            if (r.split_by_convention)
                os << "  note: H^1 of the base has torsion; the degree-" << 2 * r.inputs.n
                   << " extension was taken split\n";
        }
        void operator()(const TwistedReport& r) const
        {
            bundle_header(os, r.inputs, true);
            row(os, "H^even_H(Z)", r.cohomology.even.to_string());
            row(os, "H^odd_H(Z)", r.cohomology.odd.to_string());
            if (r.k) {
                row(os, "K^0_H(Z)", r.k->k0.to_string());
                row(os, "K^1_H(Z)", r.k->k1.to_string());
                row(os, "agree", yes_no(r.agree.value_or(false)));
            }
            if (!r.notice.empty())
                os << "  notice: " << r.notice << '\n';
        }
        void operator()(const TDualReport& r) const
        {
            bundle_header(os, r.inputs, true);
            os << "  dual: e = " << r.dual_e << ", h = " << r.dual_h << '\n';
            row(os, "H^even_H(Z)", r.cohomology_lhs.even.to_string());
            row(os, "H^odd_H(Z)", r.cohomology_lhs.odd.to_string());
            row(os, "H^even_H^(Z^)", r.cohomology_rhs.even.to_string());
            row(os, "H^odd_H^(Z^)", r.cohomology_rhs.odd.to_string());
            row(os, "cohomology duality", r.cohomology_ok ? "ok" : "FAIL");
            if (r.k_lhs && r.k_rhs) {
                row(os, "K^0_H(Z)", r.k_lhs->even.to_string());
                row(os, "K^1_H(Z)", r.k_lhs->odd.to_string());
                row(os, "K^0_H^(Z^)", r.k_rhs->even.to_string());
                row(os, "K^1_H^(Z^)", r.k_rhs->odd.to_string());
                row(os, "K-theory duality", r.ktheory_ok.value_or(false) ? "ok" : "FAIL");
            }
            if (!r.notice.empty())
                os << "  notice: " << r.notice << '\n';
        }
        void operator()(const ChernReport& r) const
        {
            os << "formal Chern character, twist degree 2k+1 = " << 2 * r.k + 1 << ", truncation N = " << r.N << '\n';
            row(os, "d^2 = 0", yes_no(r.d_squared_zero));
            row(os, "closure sign", (r.closure_sign > 0 ? "+1" : "-1") + std::string("  ((d - sign*eta) Ch^0 = 0)"));
            row(os, "published sign (+1)", r.published_sign_agrees ? "agrees" : "DISAGREES");
            std::ostringstream odd, published;
            for (std::size_t i = 0; i < r.odd_coefficients.size(); ++i)
                odd << (i ? ", " : "") << r.odd_coefficients[i].get_str();
            for (std::size_t i = 0; i < r.published_odd_coefficients.size(); ++i)
                published << (i ? ", " : "") << r.published_odd_coefficients[i].get_str();
            row(os, "odd coefficients", odd.str());
            row(os, "odd series closes", yes_no(r.odd_closes));
            row(os, "lambda(n,k)/n!", published.str());
            std::string verdict = r.published_odd_closes ? "closes" : "does NOT close";
            if (r.published_odd_first_failure)
                verdict += " (recursion fails at m = " + std::to_string(*r.published_odd_first_failure) + ")";
            row(os, "published odd series", verdict);
        }
    };
    std::visit(Visitor{os}, result);
    return os.str();
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InadmissibleEuler:
    case ErrorCode::InadmissibleDualEuler:
        return 2;
    case ErrorCode::InvalidBase:
    case ErrorCode::TorsionBase:
    case ErrorCode::DegreeZeroNotZ:
    case ErrorCode::TopNotZ:
        return 3;
    default:
        return 4;
    }
}

int exit_code_for(const CommandResult& result)
{
    if (const auto* tdual = std::get_if<TDualReport>(&result)) {
        if (!tdual->cohomology_ok)
            return 1;
        if (!tdual->ktheory_ok)
            return 3;  // torsion base: K-theory verdict unavailable
        return *tdual->ktheory_ok ? 0 : 1;
    }
    return 0;
}

}  // namespace sphtd
