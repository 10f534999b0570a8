#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addsys/systems.hpp"

namespace addsys {

// Set-expression AST; kept unnormalized so that print/parse round-trips are
// structurally exact. Nodes map one-to-one onto StructuredSet constructors.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { FiniteLit, IntervalLit, Tail, Scale, Sum };

    Kind kind;
    std::vector<Int> elems;         // FiniteLit
    Int value;                      // IntervalLit upper / Scale factor
    std::vector<ExprPtr> children;  // Scale: [inner]; Sum: summands
};

bool exprs_equal(const ExprPtr& a, const ExprPtr& b);

struct Declaration {
    std::string label;
    ExprPtr expr;
};

struct SystemDocument {
    std::optional<std::string> name;
    std::vector<Declaration> decls;
};

bool documents_equal(const SystemDocument& a, const SystemDocument& b);

// Grammar:
//   document := "system" IDENT? "{" decl* "}"
//   decl     := "set" IDENT "=" expr
//   expr     := term ("+" term)*
//   term     := INT "*" term | atom
//   atom     := "{" INT ("," INT)* "}" | "[0," INT ")" | "N0" | "(" expr ")"
// "#" comments to end of line; INT is decimal, unbounded.
// Throws SyntaxError, DuplicateLabel, NonZeroBase (finite literal lacking 0).
SystemDocument parse_system(std::string_view text);

std::string print_system(const SystemDocument& doc);

// Direct sums in the expression are verified at b during construction.
StructuredSet to_structured_set(const ExprPtr& e, const Bound& b);
AdditiveSystem to_system(const SystemDocument& doc, const Bound& b);

// Render a system back into document form (normalized sets).
SystemDocument to_document(const AdditiveSystem& sys, const std::optional<std::string>& name = {});

}  // namespace addsys
