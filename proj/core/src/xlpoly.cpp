#include "changhee/xlpoly.hpp"

#include <sstream>
#include <utility>

namespace changhee {

void XLPoly::add_term(const XLMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XLPoly XLPoly::monomial(int xdeg, int ldeg, const Rational& c) {
    if (xdeg < 0) throw OutOfDomain("negative x degree in monomial");
    XLPoly p;
    p.add_term({xdeg, ldeg}, c);
    return p;
}

bool XLPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == XLMonomial{0, 0} &&
           terms_.begin()->second.is_one();
}

bool XLPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == XLMonomial{0, 0});
}

Rational XLPoly::coeff(int xdeg, int ldeg) const {
    auto it = terms_.find({xdeg, ldeg});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational XLPoly::constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw OutOfDomain("polynomial is not a scalar: " + str());
    return terms_.begin()->second;
}

int XLPoly::x_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
}

int XLPoly::lambda_degree_min() const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        d = first ? m.l : std::min(d, m.l);
        first = false;
    }
    return d;
}

int XLPoly::lambda_degree_max() const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        d = first ? m.l : std::max(d, m.l);
        first = false;
    }
    return d;
}

XLPoly XLPoly::operator-() const {
    XLPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

XLPoly& XLPoly::operator+=(const XLPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

XLPoly& XLPoly::operator-=(const XLPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

XLPoly& XLPoly::operator*=(const XLPoly& o) {
    XLPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            r.add_term({ma.x + mb.x, ma.l + mb.l}, ca * cb);
        }
    }
    terms_ = std::move(r.terms_);
    return *this;
}

XLPoly& XLPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

XLPoly XLPoly::invert_monomial() const {
    if (terms_.size() != 1) {
        throw NotAUnit("not a single-term polynomial: " + str());
    }
    const auto& [m, c] = *terms_.begin();
    if (m.x != 0) throw NotAUnit("x powers are not invertible: " + str());
    return monomial(0, -m.l, c.inverse());
}

XLPoly XLPoly::pow(int e) const {
    if (e == 0) return XLPoly(1);
    XLPoly base = e < 0 ? invert_monomial() : *this;
    int n = e < 0 ? -e : e;
    XLPoly acc(1);
    for (int i = 0; i < n; ++i) acc *= base;
    return acc;
}

XLPoly XLPoly::substitute(const std::optional<Rational>& xval,
                          const std::optional<Rational>& lval) const {
    XLPoly r;
    for (const auto& [m, c] : terms_) {
        Rational factor = c;
        int xd = m.x, ld = m.l;
        if (xval) {
            factor *= xval->pow(m.x);  // x degrees are >= 0, safe for xval = 0
            xd = 0;
        }
        if (lval) {
            if (lval->is_zero()) {
                if (m.l < 0) {
                    throw NegativeLaurentAtZero(
                        "lambda = 0 substituted into lambda^" + std::to_string(m.l));
                }
                if (m.l > 0) continue;
            } else {
                factor *= lval->pow(m.l);
            }
            ld = 0;
        }
        r.add_term({xd, ld}, factor);
    }
    return r;
}

nlohmann::ordered_json XLPoly::to_json() const {
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : terms_) {  // map order: ascending (x, l)
        nlohmann::ordered_json t;
        t["x"] = m.x;
        t["l"] = m.l;
        t["n"] = c.numerator().get_str();
        t["d"] = c.denominator().get_str();
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json j;
    j["terms"] = std::move(terms);
    return j;
}

namespace {

Integer integer_from_json_string(const nlohmann::json& v, const char* field) {
    if (!v.is_string()) throw ParseError(std::string("field '") + field + "' must be a decimal string");
    try {
        return Integer(v.get<std::string>());
    } catch (const std::invalid_argument&) {
        throw ParseError(std::string("field '") + field + "' is not a decimal integer: " +
                         v.get<std::string>());
    }
}

}  // namespace

XLPoly XLPoly::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw ParseError("polynomial JSON must be an object with a 'terms' array");
    }
    XLPoly p;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("x") || !t.contains("l") || !t.contains("n") ||
            !t.contains("d")) {
            throw ParseError("polynomial term must carry x, l, n, d");
        }
        if (!t["x"].is_number_integer() || !t["l"].is_number_integer()) {
            throw ParseError("term exponents x, l must be integers");
        }
        int xd = t["x"].get<int>();
        int ld = t["l"].get<int>();
        if (xd < 0) throw ParseError("negative x degree in polynomial JSON");
        Integer num = integer_from_json_string(t["n"], "n");
        Integer den = integer_from_json_string(t["d"], "d");
        if (sgn(den) <= 0) throw ParseError("term denominator must be positive");
        p.add_term({xd, ld}, Rational(num, den));
    }
    return p;
}

std::string XLPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending (x, l): reverse map order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_vars = m.x != 0 || m.l != 0;
        bool coeff_shown = !a.is_one() || !has_vars;
        if (coeff_shown) out << a.str();
        if (m.x != 0) {
            out << (coeff_shown ? "*" : "") << "x";
            if (m.x != 1) out << "^" << m.x;
            coeff_shown = true;
        }
        if (m.l != 0) {
            out << (coeff_shown ? "*" : "") << "l";
            if (m.l != 1) out << "^" << m.l;
        }
    }
    return out.str();
}

}  // namespace changhee
