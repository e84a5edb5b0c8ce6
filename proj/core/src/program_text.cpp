#include "qce/program_text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qce {

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line), column_(column)
{
}

namespace {

constexpr double kPi = std::numbers::pi;

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    bool done() const { return i_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[i_]; }
    char get()
    {
        char c = s_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    int line() const { return line_; }
    int col() const { return col_; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    // skip spaces, tabs, carriage returns and comments; stops at newlines
    void skip_blank()
    {
        while (!done()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r') {
                get();
            } else if (c == '#') {
                while (!done() && peek() != '\n')
                    get();
            } else {
                break;
            }
        }
    }

    void expect(char c)
    {
        skip_blank();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        get();
    }

    std::string word()
    {
        std::string w;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-' ||
                           peek() == '\'' || peek() == '.' || peek() == ':'))
            w += get();
        return w;
    }

    int integer()
    {
        skip_blank();
        bool neg = false;
        if (peek() == '-' || peek() == '+')
            neg = get() == '-';
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a qubit number");
        int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (get() - '0');
        return neg ? -v : v;
    }

    std::string until(char c)
    {
        std::string out;
        while (!done() && peek() != c && peek() != '\n')
            out += get();
        return out;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

bool parse_number(std::string_view s, double& v)
{
    if (s.empty())
        return false;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    return r.ec == std::errc() && r.ptr == s.data() + s.size();
}

}  // namespace

double parse_angle(std::string_view in)
{
    std::string s;
    for (char c : in)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty angle");
    double sign = 1.0;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        sign = s[0] == '-' ? -1.0 : 1.0;
        i = 1;
    }
    std::string body = s.substr(i);
    double den = 1.0;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        if (!parse_number(body.substr(slash + 1), den) || den == 0.0)
            throw std::invalid_argument("bad angle denominator in '" + std::string(in) + "'");
        body = body.substr(0, slash);
    }
    double num = 1.0;
    if (auto p = body.find("pi"); p != std::string::npos) {
        if (p + 2 != body.size())
            throw std::invalid_argument("bad angle '" + std::string(in) + "'");
        std::string coef = body.substr(0, p);
        if (!coef.empty() && coef.back() == '*')
            coef.pop_back();
        if (!coef.empty() && !parse_number(coef, num))
            throw std::invalid_argument("bad angle coefficient in '" + std::string(in) + "'");
        num *= kPi;
    } else if (!parse_number(body, num)) {
        throw std::invalid_argument("bad angle '" + std::string(in) + "'");
    }
    return sign * num / den;
}

std::string format_angle(double a)
{
    if (a == 0.0)
        return "0";
    for (int den : {1, 2, 3, 4, 6, 8, 12, 16}) {
        const double k = a / kPi * den;
        const double r = std::round(k);
        if (std::abs(r) >= 1 && std::abs(r) < 1000 && r * kPi / den == a) {
            std::string out = r < 0 ? "-" : "";
            const long ar = static_cast<long>(std::abs(r));
            if (ar != 1)
                out += std::to_string(ar) + "*";
            out += "pi";
            if (den != 1)
                out += "/" + std::to_string(den);
            return out;
        }
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

std::string emit_gate(const Gate& g)
{
    auto pair_suffix = [&](std::string s) {
        if (!(g.qubits[0] == 1 && g.qubits[1] == 2))
            s += "[" + std::to_string(g.qubits[0]) + "," + std::to_string(g.qubits[1]) + "]";
        return s + "(" + format_angle(g.angle) + ")";
    };
    switch (g.kind) {
    case GateKind::zz_phase:
        return pair_suffix("I");
    case GateKind::xy_exchange:
        return pair_suffix("Ixy");
    case GateKind::rotation:
        break;
    }
    const std::string ax(1, static_cast<char>(std::toupper(axis_letter(g.axis))));
    const bool single = g.qubits.size() == 1 && g.signs[0] == 1;
    if (single && std::abs(g.angle) == kPi / 2)
        return (g.angle < 0 ? "-" : "") + ax + std::to_string(g.qubits[0]);
    std::string out = ax;
    if (single) {
        out += std::to_string(g.qubits[0]);
    } else {
        out += "[";
        for (std::size_t i = 0; i < g.qubits.size(); ++i) {
            if (i)
                out += ",";
            out += (g.signs[i] < 0 ? "-" : "") + std::to_string(g.qubits[i]);
        }
        out += "]";
    }
    return out + "(" + format_angle(g.angle) + ")";
}

std::string emit_program(const QuantumProgram& p)
{
    std::string out;
    if (!p.name.empty())
        out += "program " + p.name + "\n";
    for (const auto& mi : p.body) {
        if (const auto* g = std::get_if<Gate>(&mi))
            out += emit_gate(*g) + "\n";
        else if (const auto* c = std::get_if<Call>(&mi))
            out += "call " + c->name + "\n";
        else
            throw std::invalid_argument("pulse instructions have no text form");
    }
    return out;
}

QuantumProgram parse_program(std::string_view text)
{
    QuantumProgram p;
    Lexer lx(text);
    bool first = true;
    auto angle_in_parens = [&]() {
        lx.expect('(');
        const int l = lx.line(), c = lx.col();
        std::string a = lx.until(')');
        if (lx.peek() != ')')
            lx.fail("missing ')'");
        lx.get();
        try {
            return parse_angle(a);
        } catch (const std::invalid_argument& e) {
            throw ParseError(l, c, e.what());
        }
    };
    while (true) {
        lx.skip_blank();
        if (lx.done())
            break;
        if (lx.peek() == '\n' || lx.peek() == ';') {
            lx.get();
            continue;
        }
        const int l = lx.line(), c = lx.col();
        bool neg = false;
        if (lx.peek() == '-') {
            lx.get();
            neg = true;
        }
        std::string head;
        while (std::isalpha(static_cast<unsigned char>(lx.peek())))
            head += lx.get();
        if (head.empty())
            throw ParseError(l, c, "expected an instruction");

        if (head == "program" || head == "call") {
            if (neg)
                throw ParseError(l, c, "'-' cannot prefix '" + head + "'");
            lx.skip_blank();
            std::string name = lx.word();
            if (name.empty())
                lx.fail("expected a name after '" + head + "'");
            if (head == "program") {
                if (!first)
                    throw ParseError(l, c, "'program' must be the first statement");
                p.name = name;
            } else {
                p.body.push_back(Call{name});
            }
        } else if (head == "I" || head == "Ixy") {
            if (neg)
                throw ParseError(l, c, "'-' cannot prefix '" + head + "'; negate the angle instead");
            int j = 1, k = 2;
            lx.skip_blank();
            if (lx.peek() == '[') {
                lx.get();
                j = lx.integer();
                lx.expect(',');
                k = lx.integer();
                lx.expect(']');
            }
            const double a = angle_in_parens();
            if (j < 1 || k < 1 || j == k)
                throw ParseError(l, c, "bad qubit pair");
            p.body.push_back(head == "I" ? I_phase(j, k, a) : I_xy(j, k, a));
        } else if (head == "X" || head == "Y" || head == "Z") {
            std::vector<int> qs, signs;
            if (lx.peek() == '[') {
                lx.get();
                while (true) {
                    int q = lx.integer();
                    qs.push_back(std::abs(q));
                    signs.push_back(q < 0 ? -1 : 1);
                    lx.skip_blank();
                    if (lx.peek() == ',') {
                        lx.get();
                        continue;
                    }
                    lx.expect(']');
                    break;
                }
            } else if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
                qs.push_back(lx.integer());
                signs.push_back(1);
            } else {
                throw ParseError(l, c, "expected a qubit number after '" + head + "'");
            }
            for (int q : qs)
                if (q < 1)
                    throw ParseError(l, c, "qubit numbers start at 1");
            double a = std::numbers::pi / 2;
            lx.skip_blank();
            if (lx.peek() == '(')
                a = angle_in_parens();
            try {
                p.body.push_back(rot(axis_from_letter(head[0]), qs, signs, neg ? -a : a));
            } catch (const std::invalid_argument& e) {
                throw ParseError(l, c, e.what());
            }
        } else {
            throw ParseError(l, c, "unknown instruction '" + head + "'");
        }
        first = false;
        lx.skip_blank();
        if (!lx.done() && lx.peek() != '\n' && lx.peek() != ';')
            lx.fail("expected ';' or end of line");
    }
    return p;
}

QuantumProgram load_program(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open program file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    QuantumProgram p = parse_program(ss.str());
    if (p.name.empty())
        p.name = path.stem().string();
    return p;
}

}  // namespace qce
