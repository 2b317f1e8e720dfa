#include "axial/io/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "axial/errors.hpp"

namespace axial::io {

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, int order) : text_(text), order_(order) {}

    MapGerm parse() {
        std::vector<TruncatedPoly2> comps;
        comps.push_back(expression());
        while (peek() == ';') {
            advance();
            comps.push_back(expression());
        }
        skip_space();
        if (!at_end()) fail(fmt::format("unexpected character '{}'", printable(peek())));
        if (comps.size() != 3) {
            fail(fmt::format("expected three ';'-separated components, found {}", comps.size()));
        }
        return MapGerm(std::move(comps[0]), std::move(comps[1]), std::move(comps[2]));
    }

private:
    TruncatedPoly2 expression() {
        TruncatedPoly2 p(order_);
        skip_space();
        double sign = 1.0;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1.0 : 1.0;
            advance();
        }
        term(p, sign);
        for (;;) {
            skip_space();
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1.0 : 1.0;
                advance();
                term(p, sign);
            } else {
                return p;
            }
        }
    }

    void term(TruncatedPoly2& p, double sign) {
        skip_space();
        const int line = line_, col = col_;
        bool any = false;
        double coeff = 1.0;
        if (is_number_start(peek())) {
            coeff = number();
            any = true;
            skip_space();
            if (peek() == '/') {
                advance();
                coeff /= divisor();
            }
        }
        skip_space();
        if (any && peek() == '*') {
            advance();
            skip_space();
            if (peek() != 'u' && peek() != 'v') fail("expected 'u' or 'v' after '*'");
        }
        int i = 0, j = 0;
        bool mono = false;
        while (peek() == 'u' || peek() == 'v') {
            const char var = peek();
            advance();
            int e = 1;
            skip_space();
            if (peek() == '^') {
                advance();
                skip_space();
                e = integer();
            }
            (var == 'u' ? i : j) += e;
            mono = true;
            skip_space();
            if (peek() == '*') {
                advance();
                skip_space();
                if (peek() != 'u' && peek() != 'v') fail("expected 'u' or 'v' after '*'");
            }
        }
        if (mono) {
            any = true;
            if (peek() == '/') {
                advance();
                coeff /= divisor();
            }
        }
        if (!any) {
            if (at_end()) fail("expected a term, found end of input");
            fail(fmt::format("expected a term, found '{}'", printable(peek())));
        }
        if (i + j == 0 && coeff != 0.0) {
            throw ParseError("constant term not allowed: germs are based at the origin", line, col);
        }
        if (i + j > order_) {
            throw ParseError(fmt::format("monomial u^{} v^{} exceeds the jet order {}", i, j, order_), line, col);
        }
        if (i + j > 0) p.add_coeff(i, j, sign * coeff);
    }

    double divisor() {
        skip_space();
        if (!is_number_start(peek())) fail("expected a number after '/'");
        const double q = number();
        if (q == 0.0) fail("division by zero");
        return q;
    }

    double number() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) advance();
        if (!at_end() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t k = pos_ + 1;
            if (k < text_.size() && (text_[k] == '+' || text_[k] == '-')) ++k;
            if (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]))) {
                while (pos_ < k) advance();
                while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
            }
        }
        double value = 0.0;
        const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc() || res.ptr != text_.data() + pos_) fail("malformed number");
        return value;
    }

    int integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        int value = 0;
        const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (start == pos_ || res.ec != std::errc()) fail("expected an integer exponent");
        return value;
    }

    static bool is_number_start(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.'; }

    static std::string printable(char c) {
        if (static_cast<unsigned char>(c) >= 0x80) return "non-ASCII byte";
        return std::string(1, c);
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    int order_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

double document_coefficient(const nlohmann::json& c) {
    if (c.is_number()) return c.get<double>();
    if (!c.is_string()) throw ParseError("coefficient must be a number or a \"p/q\" string");
    const std::string s = c.get<std::string>();
    const auto slash = s.find('/');
    double p = 0.0, q = 1.0;
    const auto read = [&](std::string_view part, double& out) {
        const auto res = std::from_chars(part.data(), part.data() + part.size(), out);
        if (res.ec != std::errc() || res.ptr != part.data() + part.size()) {
            throw ParseError("malformed coefficient \"" + s + "\"");
        }
    };
    const std::string_view sv(s);
    read(sv.substr(0, slash), p);
    if (slash != std::string::npos) read(sv.substr(slash + 1), q);
    if (q == 0.0) throw ParseError("division by zero in coefficient \"" + s + "\"");
    return p / q;
}

}  // namespace

MapGerm parse_expression(std::string_view text, int order) {
    if (order < 1) throw PreconditionError("jet order must be at least 1");
    return ExpressionParser(text, order).parse();
}

MapGerm parse_document(std::string_view json_text, std::optional<int> order_override) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("components")) throw ParseError("document needs a \"components\" field");
    int order = kDefaultOrder;
    if (doc.contains("order")) {
        if (!doc["order"].is_number_integer()) throw ParseError("\"order\" must be an integer");
        order = doc["order"].get<int>();
    }
    if (order_override) order = *order_override;
    if (order < 1) throw PreconditionError("jet order must be at least 1");

    const auto& comps = doc["components"];
    if (!comps.is_array() || comps.size() != 3) throw ParseError("\"components\" must hold three term lists");
    std::vector<TruncatedPoly2> polys;
    for (const auto& list : comps) {
        if (!list.is_array()) throw ParseError("each component must be a list of terms");
        TruncatedPoly2 p(order);
        for (const auto& t : list) {
            if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("c")) {
                throw ParseError("each term needs fields i, j, c");
            }
            if (!t["i"].is_number_integer() || !t["j"].is_number_integer()) {
                throw ParseError("exponents i, j must be integers");
            }
            const int i = t["i"].get<int>(), j = t["j"].get<int>();
            if (i < 0 || j < 0) throw ParseError("exponents must be non-negative");
            const double c = document_coefficient(t["c"]);
            if (i + j == 0) {
                if (c != 0.0) throw ParseError("constant term not allowed: germs are based at the origin");
                continue;
            }
            if (i + j > order) {
                throw ParseError(fmt::format("monomial u^{} v^{} exceeds the jet order {}", i, j, order));
            }
            p.add_coeff(i, j, c);
        }
        polys.push_back(std::move(p));
    }
    return MapGerm(std::move(polys[0]), std::move(polys[1]), std::move(polys[2]));
}

MapGerm parse_germ(std::string_view src, std::optional<int> order_override) {
    const auto first = src.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && src[first] == '{') return parse_document(src, order_override);
    return parse_expression(src, order_override.value_or(kDefaultOrder));
}

std::string serialize_expression(const MapGerm& f) {
    std::string out;
    for (int k = 0; k < 3; ++k) {
        if (k > 0) out += "; ";
        std::string comp;
        for (int d = 1; d <= f.order(); ++d) {
            for (int j = 0; j <= d; ++j) {
                const int i = d - j;
                const double c = f[k].coeff(i, j);
                if (c == 0.0) continue;
                comp += comp.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
                comp += fmt::format("{:.17g}", std::abs(c));
                if (i > 0) comp += fmt::format(" u^{}", i);
                if (j > 0) comp += fmt::format(" v^{}", j);
            }
        }
        out += comp.empty() ? "0" : comp;
    }
    return out;
}

std::string serialize_document(const MapGerm& f) {
    nlohmann::ordered_json doc;
    doc["components"] = nlohmann::ordered_json::array();
    for (int k = 0; k < 3; ++k) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (int d = 1; d <= f.order(); ++d)
            for (int j = 0; j <= d; ++j) {
                const double c = f[k].coeff(d - j, j);
                if (c != 0.0) list.push_back({{"i", d - j}, {"j", j}, {"c", c}});
            }
        doc["components"].push_back(std::move(list));
    }
    doc["order"] = f.order();
    return doc.dump();
}

}  // namespace axial::io
