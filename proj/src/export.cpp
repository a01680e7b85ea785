#include "deltafock/export.hpp"

#include "deltafock/fock.hpp"
#include "deltafock/hermite.hpp"
#include "deltafock/lattice.hpp"

#include <json.hpp>

#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace deltafock {

using nlohmann::json;

std::string format_double(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

json rational_json(const Rational& q)
{
    return {{"num", boost::multiprecision::numerator(q).str()}, {"den", boost::multiprecision::denominator(q).str()}};
}

std::string num(const Rational& q) { return boost::multiprecision::numerator(q).str(); }
std::string den(const Rational& q) { return boost::multiprecision::denominator(q).str(); }

json params_json(const DeformationParam& params)
{
    return {{"s_max", params.s_max()}, {"delta_sq", "1/" + std::to_string(params.s_max())}};
}

json document(const std::string& command, json params, json data)
{
    json doc;
    doc["command"] = command;
    doc["params"] = std::move(params);
    doc["data"] = std::move(data);
    return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void require_structured(Format format)
{
    if (format == Format::text)
        throw std::invalid_argument("plain text output is only available for verify");
}

} // namespace

// --- hermite ---------------------------------------------------------------

std::string export_hermite(const DeformationParam& params, int s, Format format)
{
    require_structured(format);
    if (s < 0 || s > params.s_max())
        throw std::out_of_range("hermite: need 0 <= s <= s_max, got s = " + std::to_string(s));
    const Poly rec = hermite_delta_rec(params, s);
    const Poly closed = hermite_delta_closed(params, s);
    const Poly classical = hermite_classical(s);

    if (format == Format::json) {
        json data = json::array();
        for (int k = 0; k <= s; ++k) {
            const auto p = static_cast<std::size_t>(k);
            data.push_back({{"power", k},
                            {"recurrence", rational_json(rec.coefficient(p))},
                            {"closed", rational_json(closed.coefficient(p))},
                            {"classical", rational_json(classical.coefficient(p))}});
        }
        json pj = params_json(params);
        pj["s"] = s;
        return dump(document("hermite", std::move(pj), std::move(data)));
    }
    std::ostringstream os;
    os << "power,rec_num,rec_den,closed_num,closed_den,classical\n";
    for (int k = 0; k <= s; ++k) {
        const auto p = static_cast<std::size_t>(k);
        os << k << ',' << num(rec.coefficient(p)) << ',' << den(rec.coefficient(p)) << ','
           << num(closed.coefficient(p)) << ',' << den(closed.coefficient(p)) << ','
           << classical.coefficient(p).str() << '\n';
    }
    return os.str();
}

// --- gram ------------------------------------------------------------------

std::string export_gram(const DeformationParam& params, GramChoice choice, Format format, bool* all_match)
{
    require_structured(format);
    const int n = params.s_max();
    std::optional<GramMatrix> exact;
    std::optional<GramMatrix> rec;
    if (choice != GramChoice::recurrence)
        exact = gram_exact(params);
    if (choice != GramChoice::exact)
        rec = gram_recurrence(params, vacuum_norm_closed(params));
    const GramMatrix& shown = exact ? *exact : *rec;
    const bool both = choice == GramChoice::both;

    bool every = true;
    auto match = [&](int s, int sp) {
        const bool m = (*exact)(s, sp) == (*rec)(s, sp);
        every = every && m;
        return m;
    };

    std::string out;
    if (format == Format::json) {
        json data = json::array();
        for (int s = 0; s <= n; ++s)
            for (int sp = 0; sp <= n; ++sp) {
                const auto [c, r] = shown(s, sp).coefficient().split();
                json entry{{"s", s},
                           {"s_prime", sp},
                           {"coefficient", rational_json(c)},
                           {"radicand", rational_json(r)},
                           {"value", shown(s, sp).to_double()}};
                if (both)
                    entry["match"] = match(s, sp);
                data.push_back(std::move(entry));
            }
        json pj = params_json(params);
        pj["method"] = choice == GramChoice::exact ? "exact" : choice == GramChoice::recurrence ? "recurrence" : "both";
        json doc = document("gram", std::move(pj), std::move(data));
        doc["scale"] = "sqrt(s_max/pi)";
        out = dump(doc);
    } else {
        std::ostringstream os;
        os << "# scale=sqrt(s_max/pi)\n";
        os << "s,s_prime,coeff_num,coeff_den,radicand_num,radicand_den" << (both ? ",match" : "") << '\n';
        for (int s = 0; s <= n; ++s)
            for (int sp = 0; sp <= n; ++sp) {
                const auto [c, r] = shown(s, sp).coefficient().split();
                os << s << ',' << sp << ',' << num(c) << ',' << den(c) << ',' << num(r) << ',' << den(r);
                if (both)
                    os << ',' << (match(s, sp) ? "true" : "false");
                os << '\n';
            }
        out = os.str();
    }
    if (all_match)
        *all_match = both ? every : true;
    return out;
}

// --- states ----------------------------------------------------------------

std::string export_states(const DeformationParam& params, int sample_count, Format format)
{
    require_structured(format);
    if (sample_count < 16)
        throw std::invalid_argument("states: sample count must be at least 16");
    const auto states = build_states(params);
    const double half = std::numbers::pi / params.delta();
    auto phi_at = [&](int m) {
        if (m == sample_count - 1)
            return half;
        return -half + 2.0 * half * m / (sample_count - 1);
    };

    if (format == Format::json) {
        json data = json::array();
        for (int m = 0; m < sample_count; ++m) {
            const double phi = phi_at(m);
            json values = json::array();
            for (const FockState& f : states)
                values.push_back(f.evaluate_real(phi, params));
            data.push_back({{"phi", phi}, {"f", std::move(values)}});
        }
        json pj = params_json(params);
        pj["sample_count"] = sample_count;
        json doc = document("states", std::move(pj), std::move(data));
        doc["phase"] = "f_s is listed with the factor (-i)^s divided out";
        return dump(doc);
    }
    std::ostringstream os;
    os << "# f_s(phi) with the factor (-i)^s divided out\n";
    os << "phi";
    for (std::size_t s = 0; s < states.size(); ++s)
        os << ",f_" << s;
    os << '\n';
    for (int m = 0; m < sample_count; ++m) {
        const double phi = phi_at(m);
        os << format_double(phi);
        for (const FockState& f : states)
            os << ',' << format_double(f.evaluate_real(phi, params));
        os << '\n';
    }
    return os.str();
}

// --- limit -----------------------------------------------------------------

std::string export_limit(LimitQuantity quantity, std::span<const int> s_max_list, Format format, int hermite_power)
{
    require_structured(format);
    if (s_max_list.empty())
        throw std::invalid_argument("limit: the s_max list is empty");
    for (int s_max : s_max_list)
        if (s_max < 1)
            throw std::invalid_argument("limit: s_max must be positive, got " + std::to_string(s_max));

    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    std::string name;
    switch (quantity) {
    case LimitQuantity::hermite: {
        name = "hermite";
        columns = {"s_max", "s", "max_relative_error"};
        for (const auto& row : hermite_limit_table(hermite_power, s_max_list))
            rows.push_back({row.s_max, hermite_power, row.error});
        break;
    }
    case LimitQuantity::kernel: {
        name = "kernel";
        columns = {"s_max", "x", "x_prime", "index_separation", "value"};
        const std::vector<std::pair<double, double>> positions{{0.0, 0.0}, {0.0, 0.5}, {0.0, 1.0}};
        for (const KernelRow& row : continuum_limit_study(positions, s_max_list))
            rows.push_back({row.s_max, row.x, row.x_prime, row.index_separation, row.value});
        break;
    }
    case LimitQuantity::vacuum_norm: {
        name = "vacuum_norm";
        columns = {"s_max", "ratio_num", "ratio_den", "pi_vacuum_norm"};
        for (int s_max : s_max_list) {
            const ScaledRational v = vacuum_norm_closed(DeformationParam(s_max));
            const Rational ratio = v.coefficient().rational_value();
            rows.push_back({s_max, num(ratio), den(ratio), std::numbers::pi * v.to_double()});
        }
        break;
    }
    case LimitQuantity::gaussian: {
        name = "gaussian";
        columns = {"s_max", "max_deviation"};
        for (int s_max : s_max_list)
            rows.push_back({s_max, vacuum_gaussian_deviation(DeformationParam(s_max))});
        break;
    }
    }

    if (format == Format::json) {
        json data = json::array();
        for (const auto& row : rows) {
            json entry;
            for (std::size_t c = 0; c < columns.size(); ++c)
                entry[columns[c]] = row[c];
            data.push_back(std::move(entry));
        }
        json s_max_json = json::array();
        json delta_sq_json = json::array();
        for (int s_max : s_max_list) {
            s_max_json.push_back(s_max);
            delta_sq_json.push_back("1/" + std::to_string(s_max));
        }
        json pj{{"quantity", name}, {"s_max", s_max_json}, {"delta_sq", delta_sq_json}};
        if (quantity == LimitQuantity::hermite)
            pj["s"] = hermite_power;
        json doc = document("limit", std::move(pj), std::move(data));
        if (quantity == LimitQuantity::vacuum_norm)
            doc["scale"] = "sqrt(s_max/pi)";
        return dump(doc);
    }
    std::ostringstream os;
    if (quantity == LimitQuantity::vacuum_norm)
        os << "# <0|0> = ratio * scale, scale=sqrt(s_max/pi)\n";
    for (std::size_t c = 0; c < columns.size(); ++c)
        os << (c ? "," : "") << columns[c];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                os << ',';
            const json& v = row[c];
            if (v.is_number_float())
                os << format_double(v.get<double>());
            else if (v.is_string())
                os << v.get<std::string>();
            else
                os << v.dump();
        }
        os << '\n';
    }
    return os.str();
}

// --- verify ----------------------------------------------------------------

std::string export_report(const RunReport& report, Format format)
{
    if (format == Format::json) {
        json data = json::array();
        for (const Check& c : report.checks)
            data.push_back({{"label", c.label},
                            {"reference", c.reference},
                            {"status", status_word(c)},
                            {"detail", c.detail}});
        json pj{{"s_max", report.s_max}, {"delta_sq", "1/" + std::to_string(report.s_max)}, {"suite", report.suite}};
        json doc = document("verify", std::move(pj), std::move(data));
        doc["passed"] = report.passed();
        doc["milliseconds"] = report.milliseconds;
        return dump(doc);
    }
    std::ostringstream os;
    if (format == Format::csv) {
        os << "reference,label,status,detail\n";
        for (const Check& c : report.checks)
            os << csv_field(c.reference) << ',' << csv_field(c.label) << ',' << status_word(c) << ','
               << csv_field(c.detail) << '\n';
        return os.str();
    }
    for (const Check& c : report.checks)
        os << format_line(c) << '\n';
    std::size_t failed = 0;
    std::size_t reported = 0;
    for (const Check& c : report.checks) {
        failed += c.status == CheckStatus::fail;
        reported += c.status == CheckStatus::reported;
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1f", report.milliseconds);
    os << report.suite << " suite, s_max = " << report.s_max << ": " << report.checks.size() << " checks, " << failed
       << " failed, " << reported << " reported (" << timing << " ms)\n";
    return os.str();
}

} // namespace deltafock
