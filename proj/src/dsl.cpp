#include "addsys/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace addsys {

namespace {

struct Token {
    enum class Kind {
        KwSystem, KwSet, Ident, Integer,
        LBrace, RBrace, LBracket, LParen, RParen,
        Eq, Comma, Star, Plus, End,
    };
    Kind kind;
    std::string text;
    int line = 1, column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_ws();
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            current_.text = "<end of input>";
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                bump();
            }
            current_.kind = Token::Kind::Integer;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                bump();
            }
            current_.text = std::string(text_.substr(start, pos_ - start));
            current_.kind = current_.text == "system" ? Token::Kind::KwSystem
                          : current_.text == "set"    ? Token::Kind::KwSet
                                                      : Token::Kind::Ident;
            return;
        }
        current_.text = std::string(1, c);
        switch (c) {
            case '{': current_.kind = Token::Kind::LBrace; break;
            case '}': current_.kind = Token::Kind::RBrace; break;
            case '[': current_.kind = Token::Kind::LBracket; break;
            case '(': current_.kind = Token::Kind::LParen; break;
            case ')': current_.kind = Token::Kind::RParen; break;
            case '=': current_.kind = Token::Kind::Eq; break;
            case ',': current_.kind = Token::Kind::Comma; break;
            case '*': current_.kind = Token::Kind::Star; break;
            case '+': current_.kind = Token::Kind::Plus; break;
            default:
                throw SyntaxError(line_, column_, "a token, not '" + current_.text + "'");
        }
        bump();
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1, column_ = 1;
    Token current_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    SystemDocument document() {
        expect(Token::Kind::KwSystem, "\"system\"");
        SystemDocument doc;
        if (lex_.peek().kind == Token::Kind::Ident) {
            doc.name = lex_.take().text;
        }
        expect(Token::Kind::LBrace, "\"{\"");
        std::set<std::string> labels;
        while (lex_.peek().kind == Token::Kind::KwSet) {
            lex_.take();
            Token name = expect(Token::Kind::Ident, "a set label");
            if (!labels.insert(name.text).second) throw DuplicateLabel(name.text);
            expect(Token::Kind::Eq, "\"=\"");
            doc.decls.push_back({name.text, expr()});
        }
        expect(Token::Kind::RBrace, "\"}\" or \"set\"");
        expect(Token::Kind::End, "end of input");
        return doc;
    }

private:
    Token expect(Token::Kind kind, const std::string& what) {
        if (lex_.peek().kind != kind) {
            throw SyntaxError(lex_.peek().line, lex_.peek().column, what);
        }
        return lex_.take();
    }

    ExprPtr expr() {
        std::vector<ExprPtr> terms{term()};
        while (lex_.peek().kind == Token::Kind::Plus) {
            lex_.take();
            terms.push_back(term());
        }
        if (terms.size() == 1) return terms.front();
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Sum;
        e->children = std::move(terms);
        return e;
    }

    ExprPtr term() {
        if (lex_.peek().kind == Token::Kind::Integer) {
            Token n = lex_.take();
            expect(Token::Kind::Star, "\"*\"");
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Scale;
            e->value = Int(n.text);
            e->children.push_back(term());
            return e;
        }
        return atom();
    }

    ExprPtr atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::LBrace: {
                Token open = lex_.take();
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::FiniteLit;
                e->elems.push_back(Int(expect(Token::Kind::Integer, "an integer").text));
                while (lex_.peek().kind == Token::Kind::Comma) {
                    lex_.take();
                    e->elems.push_back(Int(expect(Token::Kind::Integer, "an integer").text));
                }
                expect(Token::Kind::RBrace, "\"}\" or \",\"");
                if (std::find(e->elems.begin(), e->elems.end(), Int(0)) == e->elems.end()) {
                    throw NonZeroBase("finite set literal at " + std::to_string(open.line) +
                                      ":" + std::to_string(open.column) +
                                      " does not contain 0");
                }
                return e;
            }
            case Token::Kind::LBracket: {
                lex_.take();
                Token zero = expect(Token::Kind::Integer, "\"0\"");
                if (zero.text != "0") {
                    throw SyntaxError(zero.line, zero.column, "\"0\" (intervals start at 0)");
                }
                expect(Token::Kind::Comma, "\",\"");
                Token hi = expect(Token::Kind::Integer, "an integer");
                expect(Token::Kind::RParen, "\")\"");
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::IntervalLit;
                e->value = Int(hi.text);
                return e;
            }
            case Token::Kind::Ident:
                if (t.text == "N0") {
                    lex_.take();
                    auto e = std::make_shared<Expr>();
                    e->kind = Expr::Kind::Tail;
                    return e;
                }
                throw SyntaxError(t.line, t.column, "\"N0\" or a set expression");
            case Token::Kind::LParen: {
                lex_.take();
                ExprPtr e = expr();
                expect(Token::Kind::RParen, "\")\"");
                return e;
            }
            default:
                throw SyntaxError(t.line, t.column, "a set expression");
        }
    }

    Lexer lex_;
};

void print_expr(std::ostringstream& os, const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::FiniteLit: {
            os << "{";
            for (std::size_t i = 0; i < e->elems.size(); ++i) {
                if (i) os << ",";
                os << e->elems[i];
            }
            os << "}";
            break;
        }
        case Expr::Kind::IntervalLit:
            os << "[0," << e->value << ")";
            break;
        case Expr::Kind::Tail:
            os << "N0";
            break;
        case Expr::Kind::Scale: {
            os << e->value << " * ";
            const ExprPtr& inner = e->children.front();
            if (inner->kind == Expr::Kind::Sum) {
                os << "(";
                print_expr(os, inner);
                os << ")";
            } else {
                print_expr(os, inner);
            }
            break;
        }
        case Expr::Kind::Sum: {
            for (std::size_t i = 0; i < e->children.size(); ++i) {
                if (i) os << " + ";
                const ExprPtr& c = e->children[i];
                if (c->kind == Expr::Kind::Sum) {
                    os << "(";
                    print_expr(os, c);
                    os << ")";
                } else {
                    print_expr(os, c);
                }
            }
            break;
        }
    }
}

}  // namespace

bool exprs_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    if (a->elems != b->elems || a->value != b->value) return false;
    if (a->children.size() != b->children.size()) return false;
    for (std::size_t i = 0; i < a->children.size(); ++i) {
        if (!exprs_equal(a->children[i], b->children[i])) return false;
    }
    return true;
}

bool documents_equal(const SystemDocument& a, const SystemDocument& b) {
    if (a.name != b.name || a.decls.size() != b.decls.size()) return false;
    for (std::size_t i = 0; i < a.decls.size(); ++i) {
        if (a.decls[i].label != b.decls[i].label) return false;
        if (!exprs_equal(a.decls[i].expr, b.decls[i].expr)) return false;
    }
    return true;
}

SystemDocument parse_system(std::string_view text) {
    return Parser(text).document();
}

std::string print_system(const SystemDocument& doc) {
    std::ostringstream os;
    os << "system";
    if (doc.name) os << " " << *doc.name;
    os << " {\n";
    for (const auto& d : doc.decls) {
        os << "  set " << d.label << " = ";
        print_expr(os, d.expr);
        os << "\n";
    }
    os << "}\n";
    return os.str();
}

StructuredSet to_structured_set(const ExprPtr& e, const Bound& b) {
    switch (e->kind) {
        case Expr::Kind::FiniteLit:
            return StructuredSet::finite(e->elems);
        case Expr::Kind::IntervalLit:
            return StructuredSet::interval(e->value);
        case Expr::Kind::Tail:
            return StructuredSet::tail();
        case Expr::Kind::Scale:
            return StructuredSet::dilated(e->value, to_structured_set(e->children.front(), b));
        case Expr::Kind::Sum: {
            std::vector<StructuredSet> parts;
            for (const auto& c : e->children) parts.push_back(to_structured_set(c, b));
            return direct_sum(std::move(parts), b);
        }
    }
    throw Error("to_structured_set: unreachable");
}

AdditiveSystem to_system(const SystemDocument& doc, const Bound& b) {
    std::vector<Member> members;
    for (const auto& d : doc.decls) {
        members.push_back({d.label, to_structured_set(d.expr, b)});
    }
    return AdditiveSystem(std::move(members));
}

namespace {

ExprPtr set_to_expr(const StructuredSet& s) {
    auto e = std::make_shared<Expr>();
    switch (s.kind()) {
        case StructuredSet::Kind::Finite:
            e->kind = Expr::Kind::FiniteLit;
            e->elems = s.elements();
            break;
        case StructuredSet::Kind::Interval:
            e->kind = Expr::Kind::IntervalLit;
            e->value = s.upper();
            break;
        case StructuredSet::Kind::Tail:
            e->kind = Expr::Kind::Tail;
            break;
        case StructuredSet::Kind::Dilated:
            e->kind = Expr::Kind::Scale;
            e->value = s.scale();
            e->children.push_back(set_to_expr(s.inner()));
            break;
        case StructuredSet::Kind::DirectSum:
            e->kind = Expr::Kind::Sum;
            for (const auto& p : s.parts()) e->children.push_back(set_to_expr(p));
            break;
    }
    return e;
}

}  // namespace

SystemDocument to_document(const AdditiveSystem& sys, const std::optional<std::string>& name) {
    SystemDocument doc;
    doc.name = name;
    for (const auto& m : sys.members()) {
        doc.decls.push_back({m.label, set_to_expr(m.set)});
    }
    return doc;
}

}  // namespace addsys
