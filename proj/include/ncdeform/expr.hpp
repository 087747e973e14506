#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "ncdeform/twist.hpp"

namespace ncdeform {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct ScalarLit {
    Coeff value;
};

struct GenRef {
    std::string name;
    bool starred = false;
};

struct Neg {
    ExprPtr child;
};

struct BinOp {
    enum Kind { Add, Sub, DeformedMul, PlainMul };
    Kind kind;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct PowOp {
    ExprPtr base;
    long long exponent;
};

/// Expression tree over the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'.') factor)*
///   factor := '-' factor | primary ('^' int)*
///   primary:= scalar | genref | '(' expr ')'
/// with '*' the deformed product and '.' the undeformed one. Scalars are
/// integers, fractions p/q, decimals, 'i', or pairs "(re,im)". A '*' glued
/// to a generator name counts as its star when no operand follows it.
struct Expr {
    std::variant<ScalarLit, GenRef, Neg, BinOp, PowOp> node;
};

/// Parses the whole input; throws ParseError with a byte offset.
ExprPtr parse_expression(std::string_view text);

/// Grammar-faithful rendering; parse_expression(to_string(e)) is
/// structurally equal to e.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

/// Bottom-up evaluation. Deformed product nodes dispatch to twist_product,
/// plain ones to element_mul; '^' is the undeformed integer power, with
/// negative exponents restricted to invertible single monomials.
Element eval(const Expr& e, const TablePtr& table, const DeformationParams& p);

inline Element eval_string(std::string_view text, const TablePtr& table,
                           const DeformationParams& p) {
    return eval(*parse_expression(text), table, p);
}

}  // namespace ncdeform
