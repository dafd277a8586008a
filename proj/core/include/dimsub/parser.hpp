#pragma once

#include "dimsub/bigint.hpp"
#include "dimsub/errors.hpp"
#include "dimsub/presentation.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dimsub::cli {

class ParseError : public InputError {
public:
    ParseError(const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    int line_;
    int column_;
};

namespace ast {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { Integer, Ident, Neg, Add, Sub, Mul, Pow, Bracket };
    Kind kind;
    Int value;         // Integer
    std::string name;  // Ident
    std::vector<NodePtr> kids;
    int line = 0;
    int column = 0;
};

struct GenDecl {
    std::string name;
    std::optional<int> degree;
    int line = 0;
    int column = 0;
};

struct Statement {
    enum class Kind { Relation, Element };
    Kind kind = Kind::Relation;
    std::string name;            // element name
    std::vector<NodePtr> sides;  // relation sides, or the single element expression
    int line = 0;
    int column = 0;
};

struct File {
    std::optional<Flavor> flavor;
    std::string name;
    std::vector<GenDecl> generators;
    std::vector<Statement> statements;
};

bool equal(const NodePtr& a, const NodePtr& b);
bool equal(const File& a, const File& b);
std::string print(const NodePtr& n);
std::string print(const File& f);

}  // namespace ast

ast::File parse_file(const std::string& text);
ast::NodePtr parse_expression(const std::string& text);

Presentation elaborate(const ast::File& file);
Presentation parse_presentation(const std::string& text);

// Expressions over a fixed list of generator names.
LieExpr parse_lie_expression(const std::string& text, const std::vector<std::string>& names);
freeassoc::GroupExpr parse_group_expression(const std::string& text,
                                            const std::vector<std::string>& names);

}  // namespace dimsub::cli
