#include "dimsub/parser.hpp"

#include <cctype>
#include <sstream>
#include <variant>

namespace dimsub::cli {

using freeassoc::GroupExpr;
using Kind = ast::Node::Kind;

ParseError::ParseError(const std::string& message, int line, int column)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 message),
      message_(message),
      line_(line),
      column_(column)
{
}

// ---------------------------------------------------------------- lexer

namespace {

struct Token {
    enum class Type { Ident, Integer, Punct, End };
    Type type = Type::End;
    std::string text;
    int line = 1;
    int column = 1;
};

std::vector<Token> tokenize(const std::string& s)
{
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            t.type = Token::Type::Ident;
            t.text = s.substr(i, j - i);
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            t.type = Token::Type::Integer;
            t.text = s.substr(i, j - i);
            advance(j - i);
        } else if (std::string(",;:=+-*^()[]").find(c) != std::string::npos) {
            t.type = Token::Type::Punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

bool is_keyword(const std::string& s)
{
    return s == "lie" || s == "group" || s == "element";
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ast::File file()
    {
        ast::File f;
        if (peek_ident("lie") || peek_ident("group")) {
            if (peek(1).type == Token::Type::Ident && peek_punct(":", 2)) {
                f.flavor = next().text == "lie" ? Flavor::Lie : Flavor::Group;
                f.name = next().text;
                expect(":");
            }
        }
        do {
            const Token& t = peek();
            if (t.type != Token::Type::Ident) error("expected a generator name");
            if (is_keyword(t.text)) error("reserved word used as a generator name");
            ast::GenDecl g{t.text, std::nullopt, t.line, t.column};
            next();
            if (peek_punct("^")) {
                next();
                expect("(");
                const Token& d = peek();
                if (d.type != Token::Type::Integer) error("expected a degree");
                g.degree = std::stoi(next().text);
                if (*g.degree < 1) error("degree must be positive");
                expect(")");
            }
            f.generators.push_back(std::move(g));
        } while (accept(","));
        expect(";");
        while (peek().type != Token::Type::End) {
            f.statements.push_back(statement());
            if (peek().type == Token::Type::End) break;
            expect(";");
        }
        return f;
    }

    ast::NodePtr whole_expression()
    {
        auto e = expr();
        if (peek().type != Token::Type::End) error("unexpected input after expression");
        return e;
    }

private:
    const Token& peek(std::size_t k = 0) const
    {
        return toks_[std::min(pos_ + k, toks_.size() - 1)];
    }
    Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    bool peek_punct(const char* p, std::size_t k = 0) const
    {
        return peek(k).type == Token::Type::Punct && peek(k).text == p;
    }
    bool peek_ident(const char* p) const
    {
        return peek().type == Token::Type::Ident && peek().text == p;
    }
    bool accept(const char* p)
    {
        if (!peek_punct(p)) return false;
        ++pos_;
        return true;
    }
    void expect(const char* p)
    {
        if (!accept(p)) error(std::string("expected '") + p + "'");
    }
    [[noreturn]] void error(const std::string& msg) const
    {
        const Token& t = peek();
        std::string found = t.type == Token::Type::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(msg + ", found " + found, t.line, t.column);
    }

    ast::Statement statement()
    {
        ast::Statement s;
        s.line = peek().line;
        s.column = peek().column;
        if (peek_ident("element")) {
            next();
            if (peek().type != Token::Type::Ident || is_keyword(peek().text))
                error("expected an element name");
            s.kind = ast::Statement::Kind::Element;
            s.name = next().text;
            expect("=");
            s.sides.push_back(expr());
            return s;
        }
        s.kind = ast::Statement::Kind::Relation;
        s.sides.push_back(expr());
        if (!peek_punct("=")) error("expected '=' in relation");
        while (accept("=")) s.sides.push_back(expr());
        return s;
    }

    static ast::NodePtr make(Kind k, const Token& at, std::vector<ast::NodePtr> kids = {})
    {
        auto n = std::make_shared<ast::Node>();
        n->kind = k;
        n->kids = std::move(kids);
        n->line = at.line;
        n->column = at.column;
        return n;
    }

    ast::NodePtr expr()
    {
        const Token start = peek();
        ast::NodePtr lhs;
        if (accept("-"))
            lhs = make(Kind::Neg, start, {term()});
        else
            lhs = term();
        while (peek_punct("+") || peek_punct("-")) {
            const Token op = next();
            lhs = make(op.text == "+" ? Kind::Add : Kind::Sub, op, {lhs, term()});
        }
        return lhs;
    }

    bool starts_factor() const
    {
        const Token& t = peek();
        if (t.type == Token::Type::Ident) return !is_keyword(t.text);
        if (t.type == Token::Type::Integer) return true;
        return peek_punct("(") || peek_punct("[");
    }

    ast::NodePtr term()
    {
        ast::NodePtr lhs = factor();
        while (true) {
            const Token at = peek();
            if (accept("*")) {
                lhs = make(Kind::Mul, at, {lhs, factor()});
            } else if (starts_factor()) {
                lhs = make(Kind::Mul, at, {lhs, factor()});
            } else {
                return lhs;
            }
        }
    }

    ast::NodePtr factor()
    {
        ast::NodePtr base = primary();
        while (peek_punct("^")) {
            const Token op = next();
            base = make(Kind::Pow, op, {base, power_argument()});
        }
        return base;
    }

    ast::NodePtr power_argument()
    {
        const Token t = peek();
        if (accept("-")) {
            if (peek().type != Token::Type::Integer) error("expected an integer exponent");
            auto n = std::make_shared<ast::Node>();
            n->kind = Kind::Integer;
            n->value = -Int(next().text);
            n->line = t.line;
            n->column = t.column;
            return n;
        }
        return primary();
    }

    ast::NodePtr primary()
    {
        const Token t = peek();
        if (t.type == Token::Type::Integer) {
            next();
            auto n = std::make_shared<ast::Node>();
            n->kind = Kind::Integer;
            n->value = Int(t.text);
            n->line = t.line;
            n->column = t.column;
            return n;
        }
        if (t.type == Token::Type::Ident) {
            if (is_keyword(t.text)) error("unexpected reserved word");
            next();
            auto n = std::make_shared<ast::Node>();
            n->kind = Kind::Ident;
            n->name = t.text;
            n->line = t.line;
            n->column = t.column;
            return n;
        }
        if (accept("(")) {
            auto e = expr();
            expect(")");
            return e;
        }
        if (accept("[")) {
            std::vector<ast::NodePtr> kids;
            kids.push_back(expr());
            if (!peek_punct(",")) error("expected ',' in bracket");
            while (accept(",")) kids.push_back(expr());
            expect("]");
            return make(Kind::Bracket, t, std::move(kids));
        }
        error("expected an expression");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

ast::File parse_file(const std::string& text)
{
    return Parser(tokenize(text)).file();
}

ast::NodePtr parse_expression(const std::string& text)
{
    return Parser(tokenize(text)).whole_expression();
}

// ---------------------------------------------------------------- AST utilities

namespace ast {

bool equal(const NodePtr& a, const NodePtr& b)
{
    if (a->kind != b->kind || a->kids.size() != b->kids.size()) return false;
    if (a->kind == Kind::Integer && a->value != b->value) return false;
    if (a->kind == Kind::Ident && a->name != b->name) return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!equal(a->kids[i], b->kids[i])) return false;
    return true;
}

bool equal(const File& a, const File& b)
{
    if (a.flavor != b.flavor || a.name != b.name) return false;
    if (a.generators.size() != b.generators.size() || a.statements.size() != b.statements.size())
        return false;
    for (std::size_t i = 0; i < a.generators.size(); ++i)
        if (a.generators[i].name != b.generators[i].name ||
            a.generators[i].degree != b.generators[i].degree)
            return false;
    for (std::size_t i = 0; i < a.statements.size(); ++i) {
        const auto& x = a.statements[i];
        const auto& y = b.statements[i];
        if (x.kind != y.kind || x.name != y.name || x.sides.size() != y.sides.size()) return false;
        for (std::size_t k = 0; k < x.sides.size(); ++k)
            if (!equal(x.sides[k], y.sides[k])) return false;
    }
    return true;
}

namespace {

int level(const NodePtr& n)
{
    switch (n->kind) {
    case Kind::Add:
    case Kind::Sub:
        return 1;
    case Kind::Neg:
        return 2;
    case Kind::Mul:
        return 3;
    case Kind::Pow:
        return 4;
    default:
        return 5;
    }
}

std::string wrap(const NodePtr& n, bool parens)
{
    return parens ? "(" + print(n) + ")" : print(n);
}

}  // namespace

std::string print(const NodePtr& n)
{
    switch (n->kind) {
    case Kind::Integer:
        return n->value.get_str();
    case Kind::Ident:
        return n->name;
    case Kind::Neg:
        return "-" + wrap(n->kids[0], level(n->kids[0]) < 3);
    case Kind::Add:
    case Kind::Sub:
        return print(n->kids[0]) + (n->kind == Kind::Add ? " + " : " - ") +
               wrap(n->kids[1], level(n->kids[1]) < 3);
    case Kind::Mul:
        return wrap(n->kids[0], level(n->kids[0]) < 3) + " " +
               wrap(n->kids[1], level(n->kids[1]) < 4);
    case Kind::Pow: {
        const NodePtr& e = n->kids[1];
        const bool bare = e->kind == Kind::Integer || e->kind == Kind::Ident || e->kind == Kind::Bracket;
        return wrap(n->kids[0], level(n->kids[0]) < 4) + "^" + wrap(e, !bare);
    }
    case Kind::Bracket: {
        std::string s = "[";
        for (std::size_t i = 0; i < n->kids.size(); ++i) s += (i ? ", " : "") + print(n->kids[i]);
        return s + "]";
    }
    }
    return {};
}

std::string print(const File& f)
{
    std::ostringstream os;
    if (f.flavor) os << (*f.flavor == Flavor::Lie ? "lie " : "group ") << f.name << ":\n";
    os << "  ";
    for (std::size_t i = 0; i < f.generators.size(); ++i) {
        if (i) os << ", ";
        os << f.generators[i].name;
        if (f.generators[i].degree) os << "^(" << *f.generators[i].degree << ")";
    }
    os << ";\n";
    for (const auto& s : f.statements) {
        os << "  ";
        if (s.kind == Statement::Kind::Element) {
            os << "element " << s.name << " = " << print(s.sides[0]);
        } else {
            for (std::size_t k = 0; k < s.sides.size(); ++k) os << (k ? " = " : "") << print(s.sides[k]);
        }
        os << ";\n";
    }
    return os.str();
}

}  // namespace ast

// ---------------------------------------------------------------- elaboration

namespace {

[[noreturn]] void fail(const ast::NodePtr& n, const std::string& msg)
{
    throw ParseError(msg, n->line, n->column);
}

int lookup(const ast::NodePtr& n, const std::vector<std::string>& names)
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n->name) return static_cast<int>(i);
    fail(n, "unknown identifier '" + n->name + "'");
}

Int scalar_power(const ast::NodePtr& n, const Int& base, const Int& exp)
{
    if (exp < 0) fail(n, "negative exponent on an integer");
    if (exp > 1 << 20) fail(n, "exponent too large");
    return ipow(base, exp.get_ui());
}

using LieValue = std::variant<Int, LieExpr>;

LieExpr as_lie(const ast::NodePtr& n, const LieValue& v)
{
    if (const auto* e = std::get_if<LieExpr>(&v)) return *e;
    if (std::get<Int>(v) == 0) return LieExpr::zero();
    fail(n, "a nonzero integer cannot stand for a Lie element");
}

LieValue eval_lie(const ast::NodePtr& n, const std::vector<std::string>& names)
{
    switch (n->kind) {
    case Kind::Integer:
        return n->value;
    case Kind::Ident:
        return LieExpr::generator(lookup(n, names));
    case Kind::Neg: {
        LieValue v = eval_lie(n->kids[0], names);
        if (auto* c = std::get_if<Int>(&v)) return Int(-*c);
        return Int(-1) * std::get<LieExpr>(v);
    }
    case Kind::Add:
    case Kind::Sub: {
        LieValue a = eval_lie(n->kids[0], names);
        LieValue b = eval_lie(n->kids[1], names);
        const bool add = n->kind == Kind::Add;
        if (std::holds_alternative<Int>(a) && std::holds_alternative<Int>(b))
            return add ? Int(std::get<Int>(a) + std::get<Int>(b))
                       : Int(std::get<Int>(a) - std::get<Int>(b));
        LieExpr x = as_lie(n->kids[0], a);
        LieExpr y = as_lie(n->kids[1], b);
        return add ? x + y : x - y;
    }
    case Kind::Mul: {
        LieValue a = eval_lie(n->kids[0], names);
        LieValue b = eval_lie(n->kids[1], names);
        const bool ia = std::holds_alternative<Int>(a);
        const bool ib = std::holds_alternative<Int>(b);
        if (ia && ib) return Int(std::get<Int>(a) * std::get<Int>(b));
        if (ia) return std::get<Int>(a) * std::get<LieExpr>(b);
        if (ib) return std::get<Int>(b) * std::get<LieExpr>(a);
        fail(n, "product of two Lie elements; use a bracket");
    }
    case Kind::Pow: {
        LieValue a = eval_lie(n->kids[0], names);
        LieValue b = eval_lie(n->kids[1], names);
        if (!std::holds_alternative<Int>(a) || !std::holds_alternative<Int>(b))
            fail(n, "powers are only defined on integers in a Lie presentation");
        return scalar_power(n, std::get<Int>(a), std::get<Int>(b));
    }
    case Kind::Bracket: {
        std::vector<LieExpr> xs;
        for (const auto& k : n->kids) xs.push_back(as_lie(k, eval_lie(k, names)));
        return LieExpr::left_normed(xs);
    }
    }
    fail(n, "unsupported expression");
}

using GroupValue = std::variant<Int, GroupExpr>;

GroupExpr as_group(const ast::NodePtr& n, const GroupValue& v)
{
    if (const auto* e = std::get_if<GroupExpr>(&v)) return *e;
    if (std::get<Int>(v) == 1) return GroupExpr::identity();
    fail(n, "an integer other than 1 cannot stand for a group element");
}

GroupValue eval_group(const ast::NodePtr& n, const std::vector<std::string>& names)
{
    switch (n->kind) {
    case Kind::Integer:
        return n->value;
    case Kind::Ident:
        return GroupExpr::letter(lookup(n, names));
    case Kind::Neg: {
        GroupValue v = eval_group(n->kids[0], names);
        if (auto* c = std::get_if<Int>(&v)) return Int(-*c);
        fail(n, "negation of a group element; use ^-1");
    }
    case Kind::Add:
    case Kind::Sub: {
        GroupValue a = eval_group(n->kids[0], names);
        GroupValue b = eval_group(n->kids[1], names);
        if (!std::holds_alternative<Int>(a) || !std::holds_alternative<Int>(b))
            fail(n, "sums are only defined on integers in a group presentation");
        return n->kind == Kind::Add ? Int(std::get<Int>(a) + std::get<Int>(b))
                                    : Int(std::get<Int>(a) - std::get<Int>(b));
    }
    case Kind::Mul: {
        GroupValue a = eval_group(n->kids[0], names);
        GroupValue b = eval_group(n->kids[1], names);
        if (std::holds_alternative<Int>(a) && std::holds_alternative<Int>(b))
            return Int(std::get<Int>(a) * std::get<Int>(b));
        GroupExpr x = as_group(n->kids[0], a);
        GroupExpr y = as_group(n->kids[1], b);
        std::vector<GroupExpr> fs;
        for (const GroupExpr* g : {&x, &y}) {
            if (g->kind() == GroupExpr::Kind::Product)
                fs.insert(fs.end(), g->children().begin(), g->children().end());
            else
                fs.push_back(*g);
        }
        return GroupExpr::product(std::move(fs));
    }
    case Kind::Pow: {
        GroupValue a = eval_group(n->kids[0], names);
        GroupValue b = eval_group(n->kids[1], names);
        if (std::holds_alternative<Int>(a)) {
            if (!std::holds_alternative<Int>(b)) fail(n, "integer raised to a group element");
            return scalar_power(n, std::get<Int>(a), std::get<Int>(b));
        }
        if (const auto* k = std::get_if<Int>(&b)) {
            if (*k == -1) return GroupExpr::inverse(std::get<GroupExpr>(a));
            return GroupExpr::power(std::get<GroupExpr>(a), *k);
        }
        return GroupExpr::conjugate(std::get<GroupExpr>(a), std::get<GroupExpr>(b));
    }
    case Kind::Bracket: {
        GroupExpr acc = as_group(n->kids[0], eval_group(n->kids[0], names));
        for (std::size_t i = 1; i < n->kids.size(); ++i)
            acc = GroupExpr::commutator(acc, as_group(n->kids[i], eval_group(n->kids[i], names)));
        return acc;
    }
    }
    fail(n, "unsupported expression");
}

}  // namespace

Presentation elaborate(const ast::File& file)
{
    Presentation p;
    p.flavor = file.flavor.value_or(Flavor::Lie);
    p.name = file.name;
    for (const auto& g : file.generators) {
        if (p.generator_index(g.name) >= 0)
            throw ParseError("duplicate generator '" + g.name + "'", g.line, g.column);
        p.generators.push_back({g.name, g.degree.value_or(1)});
    }
    const auto names = p.generator_names();
    for (const auto& s : file.statements) {
        if (s.kind == ast::Statement::Kind::Element) {
            for (const auto& [n, e] : p.lie_elements)
                if (n == s.name) throw ParseError("duplicate element '" + s.name + "'", s.line, s.column);
            for (const auto& [n, e] : p.group_elements)
                if (n == s.name) throw ParseError("duplicate element '" + s.name + "'", s.line, s.column);
            if (p.generator_index(s.name) >= 0)
                throw ParseError("element name clashes with a generator", s.line, s.column);
            if (p.flavor == Flavor::Lie)
                p.lie_elements.emplace_back(s.name, as_lie(s.sides[0], eval_lie(s.sides[0], names)));
            else
                p.group_elements.emplace_back(s.name,
                                              as_group(s.sides[0], eval_group(s.sides[0], names)));
            continue;
        }
        for (std::size_t k = 0; k + 1 < s.sides.size(); ++k) {
            if (p.flavor == Flavor::Lie) {
                LieExpr a = as_lie(s.sides[k], eval_lie(s.sides[k], names));
                LieExpr b = as_lie(s.sides[k + 1], eval_lie(s.sides[k + 1], names));
                p.lie_relators.push_back(a - b);
            } else {
                p.group_relations.push_back({as_group(s.sides[k], eval_group(s.sides[k], names)),
                                             as_group(s.sides[k + 1], eval_group(s.sides[k + 1], names))});
            }
        }
    }
    return p;
}

Presentation parse_presentation(const std::string& text)
{
    return elaborate(parse_file(text));
}

LieExpr parse_lie_expression(const std::string& text, const std::vector<std::string>& names)
{
    auto n = parse_expression(text);
    return as_lie(n, eval_lie(n, names));
}

GroupExpr parse_group_expression(const std::string& text, const std::vector<std::string>& names)
{
    auto n = parse_expression(text);
    return as_group(n, eval_group(n, names));
}

}  // namespace dimsub::cli
