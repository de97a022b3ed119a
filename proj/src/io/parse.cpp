#include "sheafcx/errors.hpp"
#include "sheafcx/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace sheafcx {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// One line with its number, comments stripped.
struct Line {
    int number;
    std::string text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        lines.push_back({number++, std::move(line)});
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> words(const Line& line) {
    std::vector<Token> out;
    const auto& s = line.text;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) break;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        out.push_back({s.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !is_ident_start(s[0])) return false;
    for (char c : s)
        if (!is_ident_char(c)) return false;
    return true;
}

std::string rest_after(const Line& line, const Token& keyword) {
    std::size_t pos = static_cast<std::size_t>(keyword.column - 1) + keyword.text.size();
    std::string rest = line.text.substr(std::min(pos, line.text.size()));
    const auto first = rest.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    const auto last = rest.find_last_not_of(" \t");
    return rest.substr(first, last - first + 1);
}

class MonomialLexer {
public:
    MonomialLexer(const std::string& text, int line, std::size_t offset, const Ring& ring)
        : s_(text), line_(line), i_(offset), ring_(ring) {}

    bool at_end() {
        skip_space();
        return i_ >= s_.size();
    }
    char peek() {
        skip_space();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    void advance() { ++i_; }
    int column() const { return static_cast<int>(i_) + 1; }

    Monomial monomial() {
        std::vector<std::int32_t> e(ring_.num_variables(), 0);
        bool sawFactor = false;
        while (true) {
            skip_space();
            if (i_ >= s_.size()) fail(sawFactor ? "expected a factor after '*'" : "expected a monomial");
            const int col = column();
            if (s_[i_] == '1' && (i_ + 1 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
                ++i_;
            } else if (is_ident_start(s_[i_])) {
                std::size_t j = i_;
                while (j < s_.size() && is_ident_char(s_[j])) ++j;
                const std::string name = s_.substr(i_, j - i_);
                const auto idx = ring_.index_of(name);
                if (!idx) throw ParseError("unknown variable '" + name + "'", line_, col);
                i_ = j;
                std::int64_t power = 1;
                if (peek() == '^') {
                    ++i_;
                    skip_space();
                    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
                        fail("expected an exponent after '^'");
                    power = 0;
                    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                        power = power * 10 + (s_[i_] - '0');
                        if (power > 1'000'000) fail("exponent too large");
                        ++i_;
                    }
                }
                e[*idx] += static_cast<std::int32_t>(power);
            } else {
                fail(std::string("unexpected character '") + s_[i_] + "'");
            }
            sawFactor = true;
            if (peek() != '*') break;
            ++i_;
        }
        return Monomial(std::move(e));
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }

private:
    void skip_space() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    const std::string& s_;
    int line_;
    std::size_t i_;
    const Ring& ring_;
};

}  // namespace

// ---------------------------------------------------------------- ideals

const IdealEntry& IdealDocument::find(std::string_view name) const {
    for (const auto& e : ideals)
        if (e.name == name) return e;
    throw DomainError("no ideal named '" + std::string(name) + "'");
}

Monomial parse_monomial(std::string_view text, const Ring& ring) {
    const std::string s(text);
    MonomialLexer lex(s, 1, 0, ring);
    Monomial m = lex.monomial();
    if (!lex.at_end()) lex.fail("trailing input after monomial");
    return m;
}

IdealDocument parse_ideal_document(std::string_view text) {
    const auto lines = split_lines(text);
    std::optional<Ring> ring;
    std::vector<IdealEntry> ideals;
    std::set<std::string> names;

    struct Open {
        IdealEntry entry;
        std::vector<Monomial> gens;
    };
    std::optional<Open> open;

    for (const auto& line : lines) {
        const auto toks = words(line);
        if (toks.empty()) continue;
        const auto& head = toks[0];

        if (open) {
            if (head.text == "end") {
                if (toks.size() > 1) throw ParseError("unexpected text after 'end'", line.number, toks[1].column);
                open->entry.ideal = MonomialIdeal::from_generators(*ring, std::move(open->gens));
                ideals.push_back(std::move(open->entry));
                open.reset();
                continue;
            }
            if (head.text == "@label") {
                open->entry.labels.push_back(rest_after(line, head));
                continue;
            }
            if (head.text == "@expect") {
                if (toks.size() < 3) throw ParseError("@expect needs a key and a value", line.number, head.column);
                if (open->entry.expected.count(toks[1].text))
                    throw ParseError("duplicate expectation '" + toks[1].text + "'", line.number, toks[1].column);
                open->entry.expected[toks[1].text] = rest_after(line, toks[1]);
                continue;
            }
            if (head.text[0] == '@')
                throw ParseError("unknown metadata '" + head.text + "'", line.number, head.column);
            MonomialLexer lex(line.text, line.number, 0, *ring);
            while (!lex.at_end()) {
                if (lex.peek() == ',') lex.fail("empty monomial");
                open->gens.push_back(lex.monomial());
                if (lex.at_end()) break;
                if (lex.peek() != ',') lex.fail("expected ',' between monomials");
                lex.advance();
            }
            continue;
        }

        if (head.text == "ring") {
            if (ring) throw ParseError("duplicate ring declaration", line.number, head.column);
            std::vector<std::string> vars;
            std::set<std::string> seen;
            for (std::size_t k = 1; k < toks.size(); ++k) {
                if (!is_identifier(toks[k].text))
                    throw ParseError("invalid variable name '" + toks[k].text + "'", line.number, toks[k].column);
                if (!seen.insert(toks[k].text).second)
                    throw ParseError("duplicate variable '" + toks[k].text + "'", line.number, toks[k].column);
                vars.push_back(toks[k].text);
            }
            if (vars.empty()) throw ParseError("ring needs at least one variable", line.number, head.column);
            ring.emplace(std::move(vars));
            continue;
        }
        if (head.text == "ideal") {
            if (!ring) throw ParseError("ideal before ring declaration", line.number, head.column);
            if (toks.size() != 2) throw ParseError("expected 'ideal <name>'", line.number, head.column);
            if (!is_identifier(toks[1].text))
                throw ParseError("invalid ideal name '" + toks[1].text + "'", line.number, toks[1].column);
            if (!names.insert(toks[1].text).second)
                throw ParseError("duplicate ideal name '" + toks[1].text + "'", line.number, toks[1].column);
            open.emplace(Open{IdealEntry{toks[1].text, MonomialIdeal(*ring), {}, {}}, {}});
            continue;
        }
        throw ParseError("unexpected '" + head.text + "'", line.number, head.column);
    }
    const int lastLine = lines.empty() ? 1 : lines.back().number;
    if (open) throw ParseError("missing 'end' for ideal '" + open->entry.name + "'", lastLine, 1);
    if (!ring) throw ParseError("missing ring declaration", lastLine, 1);
    return IdealDocument{*ring, std::move(ideals)};
}

std::string print_ideal_document(const IdealDocument& doc) {
    std::ostringstream out;
    out << "ring";
    for (const auto& v : doc.ring.variable_names()) out << ' ' << v;
    out << '\n';
    for (const auto& e : doc.ideals) {
        out << "ideal " << e.name << '\n';
        for (const auto& l : e.labels) out << "  @label " << l << '\n';
        for (const auto& [k, v] : e.expected) out << "  @expect " << k << ' ' << v << '\n';
        if (!e.ideal.is_zero()) {
            out << "  ";
            const auto& gens = e.ideal.generators();
            for (std::size_t i = 0; i < gens.size(); ++i)
                out << (i ? ", " : "") << to_string(gens[i], doc.ring);
            out << '\n';
        }
        out << "end\n";
    }
    return out.str();
}

// ---------------------------------------------------------------- lattices

const DivisorClass& LatticeDocument::find(std::string_view name) const {
    for (const auto& c : classes)
        if (c.name == name) return c.divisor;
    throw DomainError("no divisor class named '" + std::string(name) + "'");
}

namespace {

BigInt parse_integer(const Token& t, int line) {
    const auto& s = t.text;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i >= s.size()) throw ParseError("expected an integer", line, t.column);
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw ParseError("expected an integer, got '" + s + "'", line, t.column);
    BigInt v(s.substr(i));
    return s[0] == '-' ? BigInt(-v) : v;
}

Rational parse_coord(const Token& t, int line) {
    try {
        return parse_rational(t.text);
    } catch (const ParseError&) {
        throw ParseError("expected a rational, got '" + t.text + "'", line, t.column);
    }
}

}  // namespace

LatticeDocument parse_lattice_document(std::string_view text) {
    const auto lines = split_lines(text);
    std::optional<std::size_t> rank;
    std::vector<std::vector<BigInt>> gram;
    std::optional<std::vector<BigInt>> ample;
    std::vector<NamedClass> classes;
    std::set<std::string> names;
    bool readingGram = false;
    int gramLine = 0;

    for (const auto& line : lines) {
        const auto toks = words(line);
        if (toks.empty()) continue;
        const auto& head = toks[0];

        if (readingGram) {
            if (toks.size() != *rank)
                throw ParseError("gram row must have " + std::to_string(*rank) + " entries",
                                 line.number, head.column);
            std::vector<BigInt> row;
            for (const auto& t : toks) row.push_back(parse_integer(t, line.number));
            gram.push_back(std::move(row));
            readingGram = gram.size() < *rank;
            continue;
        }
        if (head.text == "rank") {
            if (rank) throw ParseError("duplicate rank", line.number, head.column);
            if (toks.size() != 2) throw ParseError("expected 'rank <n>'", line.number, head.column);
            const BigInt r = parse_integer(toks[1], line.number);
            if (r < 1 || r > 64) throw ParseError("rank must be in 1..64", line.number, toks[1].column);
            rank = r.convert_to<std::size_t>();
            continue;
        }
        if (!rank) throw ParseError("'" + head.text + "' before rank", line.number, head.column);
        if (head.text == "gram") {
            if (!gram.empty() || gramLine) throw ParseError("duplicate gram", line.number, head.column);
            if (toks.size() != 1) throw ParseError("gram rows go on the following lines", line.number, toks[1].column);
            readingGram = true;
            gramLine = line.number;
            continue;
        }
        if (head.text == "ample") {
            if (ample) throw ParseError("duplicate ample", line.number, head.column);
            if (toks.size() != *rank + 1)
                throw ParseError("ample needs " + std::to_string(*rank) + " entries", line.number, head.column);
            ample.emplace();
            for (std::size_t k = 1; k < toks.size(); ++k) ample->push_back(parse_integer(toks[k], line.number));
            continue;
        }
        if (head.text == "class") {
            if (toks.size() != *rank + 2)
                throw ParseError("class needs a name and " + std::to_string(*rank) + " entries",
                                 line.number, head.column);
            if (!is_identifier(toks[1].text))
                throw ParseError("invalid class name '" + toks[1].text + "'", line.number, toks[1].column);
            if (!names.insert(toks[1].text).second)
                throw ParseError("duplicate class '" + toks[1].text + "'", line.number, toks[1].column);
            NamedClass c{toks[1].text, {}};
            for (std::size_t k = 2; k < toks.size(); ++k)
                c.divisor.coords.push_back(parse_coord(toks[k], line.number));
            classes.push_back(std::move(c));
            continue;
        }
        throw ParseError("unexpected '" + head.text + "'", line.number, head.column);
    }
    const int lastLine = lines.empty() ? 1 : lines.back().number;
    if (!rank) throw ParseError("missing rank", lastLine, 1);
    if (readingGram) throw ParseError("gram has too few rows", gramLine, 1);
    if (gram.empty()) throw ParseError("missing gram", lastLine, 1);
    if (!ample) throw ParseError("missing ample", lastLine, 1);
    return LatticeDocument{NSLattice(std::move(gram), std::move(*ample)), std::move(classes)};
}

std::string print_lattice_document(const LatticeDocument& doc) {
    std::ostringstream out;
    const auto& lat = doc.lattice;
    out << "rank " << lat.rank() << "\ngram\n";
    for (const auto& row : lat.gram()) {
        out << ' ';
        for (const auto& x : row) out << ' ' << x;
        out << '\n';
    }
    out << "ample";
    for (const auto& x : lat.ample()) out << ' ' << x;
    out << '\n';
    for (const auto& c : doc.classes) {
        out << "class " << c.name;
        for (const auto& x : c.divisor.coords) out << ' ' << to_exact_string(x);
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace sheafcx
