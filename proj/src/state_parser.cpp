// Readers for the two state document formats.
//
// Line format (UTF-8, '#' starts a comment, ';' also ends a line):
//
//   dims 2 2 2
//   1 |001>
//   1/2-3/4i |010>
//   -a |100>
//   2 |0,1,1>
//
// JSON format:
//
//   {"dims": [2, 2], "terms": [{"coeff": "1", "ket": [0, 0]}, ...]}
//
// where "ket" is an index array or a ket string and "coeff" a coefficient
// string or an integer.

#include <cctype>
#include <optional>

#include <json.hpp>

#include "multirank/error.hpp"
#include "multirank/state.hpp"

namespace multirank {
namespace {

struct Segment {
    std::size_t line;
    std::size_t column;
    std::string text;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

std::vector<Segment> split_segments(std::string_view text) {
    std::vector<Segment> out;
    std::size_t line = 1, column = 1;
    Segment cur{1, 1, {}};
    bool in_comment = false;
    auto flush = [&] {
        out.push_back(std::move(cur));
        cur = Segment{line, column, {}};
    };
    for (char c : text) {
        if (c == '\n') {
            ++line;
            column = 1;
            in_comment = false;
            flush();
            continue;
        }
        ++column;
        if (in_comment) continue;
        if (c == '#') {
            in_comment = true;
        } else if (c == ';') {
            flush();
        } else {
            cur.text += c;
        }
    }
    flush();
    return out;
}

// Recursive-descent reader for one coefficient. Offsets are reported
// relative to the start of the text, which callers translate to columns.
class CoefficientReader {
public:
    CoefficientReader(std::string_view text, std::size_t line, std::size_t column)
        : text_(text), line_(line), column_(column) {}

    Amplitude read() {
        skip_ws();
        if (at_end()) fail("missing coefficient");
        Amplitude value = sum();
        skip_ws();
        if (!at_end()) fail(std::string("unexpected character '") + peek() + "' in coefficient");
        return value;
    }

private:
    Amplitude sum() {
        Amplitude acc;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = get() == '-';
        while (true) {
            Amplitude t = term();
            if (negative) acc -= t;
            else acc += t;
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
            negative = get() == '-';
        }
        return acc;
    }

    Amplitude term() {
        skip_ws();
        if (at_end()) fail("expected a number, 'i' or a parameter name");
        const char c = peek();
        GaussianRational factor;
        if (c == '(') {
            get();
            Amplitude inner = sum();
            skip_ws();
            if (get() != ')') fail("expected ')'");
            if (!inner.is_gaussian()) {
                if (trailing_parameter()) fail("parameter products are not linear");
                return inner;
            }
            factor = inner.constant();
        } else if (is_digit(c)) {
            factor = rational();
            skip_ws();
            if (imaginary_unit_ahead()) {
                get();
                factor *= GaussianRational::imaginary_unit();
            }
        } else if (imaginary_unit_ahead()) {
            get();
            factor = GaussianRational::imaginary_unit();
        } else if (is_ident_start(c)) {
            return Amplitude::parameter(identifier());
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
        if (auto name = trailing_parameter()) return Amplitude::parameter(*name, factor);
        return Amplitude(factor);
    }

    // Optional "* name" or "name" after a numeric factor.
    std::optional<std::string> trailing_parameter() {
        skip_ws();
        if (peek() == '*') {
            get();
            skip_ws();
            if (!is_ident_start(peek()) || imaginary_unit_ahead()) fail("expected a parameter name after '*'");
            return identifier();
        }
        if (is_ident_start(peek()) && !imaginary_unit_ahead()) return identifier();
        return std::nullopt;
    }

    mpq_class rational() {
        const mpz_class num = integer();
        skip_ws();
        if (peek() != '/') return mpq_class(num);
        get();
        skip_ws();
        if (!is_digit(peek())) fail("expected a denominator after '/'");
        const std::size_t at = pos_;
        const mpz_class den = integer();
        if (sgn(den) == 0) fail_at(at, "zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    mpz_class integer() {
        const std::size_t start = pos_;
        while (is_digit(peek())) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::string identifier() {
        const std::size_t start = pos_;
        while (is_ident_char(peek())) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    bool imaginary_unit_ahead() const {
        return peek() == 'i' && !is_ident_char(peek(1));
    }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char get() { return at_end() ? '\0' : text_[pos_++]; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (is_space(peek())) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
        throw ParseError(line_, column_ + at, message);
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t column_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, std::size_t* leading = nullptr) {
    std::size_t b = 0;
    while (b < s.size() && is_space(s[b])) ++b;
    std::size_t e = s.size();
    while (e > b && is_space(s[e - 1])) --e;
    if (leading) *leading = b;
    return s.substr(b, e - b);
}

void check_index(const MultiIndex& idx, const QuditDims& dims, std::size_t line, std::size_t column);

// Either a digit string (every d_j <= 10) or comma-separated indices.
MultiIndex read_ket(std::string_view ket, const QuditDims& dims, std::size_t line, std::size_t column) {
    auto fail = [&](std::size_t offset, const std::string& message) -> void {
        throw ParseError(line, column + offset, message);
    };
    MultiIndex idx;
    if (ket.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = std::min(ket.find(',', start), ket.size());
            std::size_t lead = 0;
            const std::string_view part = trim(ket.substr(start, comma - start), &lead);
            if (part.empty()) fail(start, "empty index in ket");
            for (char c : part)
                if (!is_digit(c)) fail(start + lead, "ket index must be a nonnegative integer");
            if (part.size() > 9) fail(start + lead, "ket index too large");
            idx.push_back(static_cast<std::uint32_t>(std::stoul(std::string(part))));
            if (comma == ket.size()) break;
            start = comma + 1;
        }
    } else {
        std::size_t lead = 0;
        const std::string_view digits = trim(ket, &lead);
        if (digits.empty()) fail(0, "empty ket");
        if (dims.max_dim() > 10) fail(lead, "digit kets need every dimension <= 10; use comma-separated indices");
        for (std::size_t k = 0; k < digits.size(); ++k) {
            if (!is_digit(digits[k])) fail(lead + k, "ket digit expected");
            idx.push_back(static_cast<std::uint32_t>(digits[k] - '0'));
        }
    }
    check_index(idx, dims, line, column);
    return idx;
}

void check_index(const MultiIndex& idx, const QuditDims& dims, std::size_t line, std::size_t column) {
    auto fail = [&](const std::string& message) -> void { throw ParseError(line, column, message); };
    if (idx.size() != dims.parties()) {
        fail("ket has " + std::to_string(idx.size()) + " components, expected " + std::to_string(dims.parties()));
    }
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= dims[j]) {
            fail("index " + std::to_string(idx[j]) + " out of range for party " + std::to_string(j + 1) +
                 " of dimension " + std::to_string(dims[j]));
        }
    }
}

QuditDims read_dims_line(std::string_view body, std::size_t line, std::size_t column) {
    std::vector<std::uint32_t> dims;
    std::size_t pos = 0;
    while (true) {
        while (pos < body.size() && is_space(body[pos])) ++pos;
        if (pos == body.size()) break;
        const std::size_t start = pos;
        while (pos < body.size() && !is_space(body[pos])) ++pos;
        const std::string_view tok = body.substr(start, pos - start);
        for (char c : tok)
            if (!is_digit(c)) throw ParseError(line, column + start, "dimension must be a positive integer");
        if (tok.size() > 9) throw ParseError(line, column + start, "dimension too large");
        dims.push_back(static_cast<std::uint32_t>(std::stoul(std::string(tok))));
    }
    try {
        return QuditDims(std::move(dims));
    } catch (const DomainError& e) {
        throw ParseError(line, column, e.what());
    }
}

StateTensor parse_line_format(std::string_view text) {
    std::optional<QuditDims> dims;
    std::vector<Term> terms;
    std::size_t last_line = 1;
    for (const Segment& seg : split_segments(text)) {
        last_line = seg.line;
        std::size_t lead = 0;
        const std::string_view body = trim(seg.text, &lead);
        if (body.empty()) continue;
        const std::size_t column = seg.column + lead;
        const bool is_dims = body.substr(0, 4) == "dims" && (body.size() == 4 || is_space(body[4]));
        if (!dims) {
            if (!is_dims) throw ParseError(seg.line, column, "expected 'dims d1 d2 ... dn' as the first line");
            dims = read_dims_line(body.substr(4), seg.line, column + 4);
            continue;
        }
        if (is_dims) throw ParseError(seg.line, column, "duplicate 'dims' line");
        const std::size_t bar = body.find('|');
        if (bar == std::string_view::npos) throw ParseError(seg.line, column, "expected '<coeff> |<ket>>'");
        const std::size_t close = body.find('>', bar);
        if (close == std::string_view::npos) throw ParseError(seg.line, column + bar, "unterminated ket, expected '>'");
        const std::string_view rest = trim(body.substr(close + 1));
        if (!rest.empty()) {
            throw ParseError(seg.line, column + body.find(rest, close + 1), "unexpected text after ket");
        }
        Amplitude amp = CoefficientReader(body.substr(0, bar), seg.line, column).read();
        MultiIndex idx = read_ket(body.substr(bar + 1, close - bar - 1), *dims, seg.line, column + bar + 1);
        terms.emplace_back(std::move(idx), std::move(amp));
    }
    if (!dims) throw ParseError(last_line, 1, "empty document: expected 'dims d1 d2 ... dn'");
    if (terms.empty()) throw ParseError(last_line, 1, "no terms: expected at least one '<coeff> |<ket>>' line");
    return build_state(*dims, terms);
}

std::pair<std::size_t, std::size_t> line_column_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

StateTensor parse_json_format(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column_of(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(line, column, "malformed JSON document");
    }
    auto fail = [](const std::string& message) -> void { throw ParseError(0, 0, message); };
    if (!doc.is_object()) fail("JSON state must be an object");
    if (!doc.contains("dims") || !doc["dims"].is_array()) fail("JSON state needs a \"dims\" array");
    std::vector<std::uint32_t> dv;
    for (const auto& d : doc["dims"]) {
        if (!d.is_number_integer() || d.get<long long>() < 0 || d.get<long long>() > 1'000'000'000)
            fail("\"dims\" entries must be positive integers");
        dv.push_back(d.get<std::uint32_t>());
    }
    std::optional<QuditDims> dims;
    try {
        dims.emplace(std::move(dv));
    } catch (const DomainError& e) {
        fail(e.what());
    }
    if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty())
        fail("JSON state needs a nonempty \"terms\" array");
    std::vector<Term> terms;
    std::size_t k = 0;
    for (const auto& t : doc["terms"]) {
        const std::string where = "term " + std::to_string(k++) + ": ";
        if (!t.is_object() || !t.contains("coeff") || !t.contains("ket"))
            fail(where + "expected {\"coeff\": ..., \"ket\": ...}");
        std::string coeff;
        if (t["coeff"].is_string()) coeff = t["coeff"].get<std::string>();
        else if (t["coeff"].is_number_integer()) coeff = std::to_string(t["coeff"].get<long long>());
        else fail(where + "\"coeff\" must be a string or an integer");
        Amplitude amp;
        MultiIndex idx;
        try {
            amp = CoefficientReader(coeff, 0, 0).read();
            if (t["ket"].is_string()) {
                idx = read_ket(t["ket"].get<std::string>(), *dims, 0, 0);
            } else if (t["ket"].is_array()) {
                for (const auto& v : t["ket"]) {
                    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1'000'000'000)
                        fail(where + "ket entries must be nonnegative integers");
                    idx.push_back(v.get<std::uint32_t>());
                }
                check_index(idx, *dims, 0, 0);
            } else {
                fail(where + "\"ket\" must be an array or a string");
            }
        } catch (const ParseError& e) {
            fail(where + e.what());
        }
        terms.emplace_back(std::move(idx), std::move(amp));
    }
    return build_state(*dims, terms);
}

}  // namespace

StateTensor parse_state(std::string_view text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n\f\v");
    if (first != std::string_view::npos && text[first] == '{') return parse_json_format(text);
    return parse_line_format(text);
}

}  // namespace multirank
