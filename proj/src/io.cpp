#include "mspoly/io.hpp"

#include <sstream>

#include <json.hpp>

namespace mspoly {

using nlohmann::json;

std::string default_var_name(int var) {
    if (var == kTVar) return "t";
    return "X" + std::to_string(var);
}

namespace {

std::string coeff_text(const Rational& c) {
    return c.get_str();
}

std::string monomial_text(const Monomial& m, const std::function<std::string(int)>& var_name) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [var, e] : m.exps()) {
        if (!first) os << "*";
        first = false;
        os << var_name(var);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::string latex_var(int var, const std::function<std::string(int)>& var_name) {
    if (var == kTVar) return var_name(var);
    std::string idx = std::to_string(var);
    return idx.size() == 1 ? "X_" + idx : "X_{" + idx + "}";
}

std::string monomial_latex(const Monomial& m, const std::function<std::string(int)>& var_name) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [var, e] : m.exps()) {
        if (!first) os << " ";
        first = false;
        os << latex_var(var, var_name);
        if (e != 1) {
            if (e >= 0 && e <= 9) {
                os << "^" << e;
            } else {
                os << "^{" << e << "}";
            }
        }
    }
    return os.str();
}

std::string latex_coeff(const Rational& c) {
    if (is_integer(c)) return c.get_num().get_str();
    return "\\tfrac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

std::string emit_sum(const MultiPoly& p, bool latex,
                     const std::function<std::string(int)>& var_name) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono = latex ? monomial_latex(m, var_name) : monomial_text(m, var_name);
        if (mono.empty()) {
            os << (latex ? latex_coeff(mag) : coeff_text(mag));
        } else if (mag == 1) {
            os << mono;
        } else {
            os << (latex ? latex_coeff(mag) + " " : coeff_text(mag) + "*") << mono;
        }
    }
    return os.str();
}

} // namespace

std::string emit_poly(const MultiPoly& p, EmitFormat format,
                      const std::function<std::string(int)>& var_name) {
    switch (format) {
        case EmitFormat::Text:
            return emit_sum(p, false, var_name);
        case EmitFormat::Latex:
            return emit_sum(p, true, var_name);
        case EmitFormat::Json: {
            json arr = json::array();
            for (const auto& [m, c] : p.terms()) {
                json term;
                term["coeff"] = {{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
                json exps = json::object();
                for (const auto& [var, e] : m.exps()) exps[std::to_string(var)] = e;
                term["exps"] = std::move(exps);
                arr.push_back(std::move(term));
            }
            return arr.dump();
        }
    }
    throw Error("unknown format");
}

MultiPoly parse_poly_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad polynomial JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("polynomial JSON must be an array of terms");
    MultiPoly out;
    for (const auto& term : arr) {
        if (!term.contains("coeff") || !term.contains("exps")) {
            throw ParseError("term needs coeff and exps");
        }
        Rational num = rational_from_string(term["coeff"]["num"].get<std::string>());
        Rational den = rational_from_string(term["coeff"]["den"].get<std::string>());
        if (den == 0) throw ZeroDenominator("zero denominator in polynomial JSON");
        Monomial::Exps exps;
        for (const auto& [key, val] : term["exps"].items()) {
            int var = std::stoi(key);
            int e = val.get<int>();
            if (e != 0) exps.emplace_back(var, e);
        }
        std::sort(exps.begin(), exps.end());
        out += MultiPoly::term(num / den, Monomial::from_sorted(std::move(exps)));
    }
    return out;
}

std::string emit_series_json(const PowerSeries& f) {
    json obj;
    obj["order"] = f.order();
    json arr = json::array();
    for (long n = 0; n <= f.order(); ++n) arr.push_back(to_string(f.taylor(n)));
    obj["taylor"] = std::move(arr);
    return obj.dump();
}

PowerSeries parse_series_json(const std::string& text) {
    json obj;
    try {
        obj = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad series JSON: ") + e.what());
    }
    if (!obj.contains("order") || !obj.contains("taylor")) {
        throw ParseError("series JSON needs order and taylor");
    }
    long order = obj["order"].get<long>();
    const auto& arr = obj["taylor"];
    if (!arr.is_array() || static_cast<long>(arr.size()) != order + 1) {
        throw ParseError("taylor array must have order+1 entries");
    }
    std::vector<Rational> taylor;
    taylor.reserve(arr.size());
    for (const auto& v : arr) taylor.push_back(rational_from_string(v.get<std::string>()));
    return PowerSeries::from_taylor(taylor);
}

} // namespace mspoly
