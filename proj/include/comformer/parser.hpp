#pragma once

// Recursive-descent parser for a Java method subset. Node labels follow the
// javalang naming style so the linearized AST sequences read like the usual
// code-summarization corpora.
//
// Supported: method/constructor declarations with modifiers, bare
// annotations, generic types, arrays, varargs; statements {block, local var
// decl, expression stmt, if/else, while, do, basic/enhanced for, switch,
// try/catch/finally, return, throw, break, continue, synchronized, empty};
// expressions {assignment incl. compound, ternary, binary (incl.
// instanceof), unary, cast, method call, field access, array access, object
// creation, literals, parenthesized}.
//
// Out of subset -> UnsupportedConstruct: lambdas, method references,
// anonymous class bodies, annotations with arguments, try-with-resources,
// labeled statements, assert, local class declarations, switch arrows,
// generic method invocation.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "comformer/lexer.hpp"

namespace comformer {

struct AstNode {
    std::string label;
    std::vector<AstNode> children;
    int span_first = 0;  // inclusive token indices covered by this node
    int span_last = 0;

    bool is_leaf() const { return children.empty(); }
};

inline size_t node_count(const AstNode& n) {
    size_t total = 1;
    for (const AstNode& c : n.children) total += node_count(c);
    return total;
}

class ParseError : public std::runtime_error {
public:
    ParseError(size_t token_index, const std::string& expected)
        : std::runtime_error("parse error at token " + std::to_string(token_index) +
                             ": expected " + expected),
          token_index(token_index),
          expected(expected) {}
    size_t token_index;
    std::string expected;
};

class UnsupportedConstruct : public std::runtime_error {
public:
    UnsupportedConstruct(std::string name, size_t token_index)
        : std::runtime_error("unsupported construct " + name + " at token " +
                             std::to_string(token_index)),
          name(std::move(name)),
          token_index(token_index) {}
    std::string name;
    size_t token_index;
};

// The fixed node-label vocabulary. Registered with the BPE model as atomic
// tokens so AST sequences are one id per node.
inline const std::vector<std::string>& ast_label_vocabulary() {
    static const std::vector<std::string> labels = {
        "MethodDeclaration", "Annotation", "Modifier", "TypeParameter", "Type",
        "FormalParameter", "BlockStatement", "LocalVariableDeclaration",
        "VariableDeclarator", "ArrayInitializer", "StatementExpression",
        "IfStatement", "WhileStatement", "DoStatement", "ForStatement",
        "ForControl", "EnhancedForControl", "SwitchStatement", "SwitchCase",
        "TryStatement", "CatchClause", "ReturnStatement", "ThrowStatement",
        "BreakStatement", "ContinueStatement", "SynchronizedStatement",
        "EmptyStatement", "Assignment", "TernaryExpression", "BinaryOperation",
        "UnaryOperation", "Cast", "MethodInvocation", "MemberReference",
        "ArraySelector", "ClassCreator", "ArrayCreator", "Literal", "This",
        "ClassReference",
    };
    return labels;
}

namespace detail {

class MethodParser {
public:
    explicit MethodParser(const std::vector<Token>& tokens) : toks_(tokens) {}

    AstNode parse() {
        AstNode root = method_declaration();
        if (!at_end()) throw ParseError(pos_, "end of method");
        return root;
    }

private:
    const std::vector<Token>& toks_;
    size_t pos_ = 0;
    int gt_hold_ = 0;  // '>'s still unconsumed from a '>>'/'>>>' token

    struct Mark {
        size_t pos;
        int gt_hold;
    };
    Mark mark() const { return {pos_, gt_hold_}; }
    void rewind(Mark m) {
        pos_ = m.pos;
        gt_hold_ = m.gt_hold;
    }

    bool at_end() const { return pos_ >= toks_.size(); }
    const Token& peek(size_t ahead = 0) const {
        static const Token eof{TokenKind::Separator, "", 0, 0};
        return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : eof;
    }
    bool is(const char* text, size_t ahead = 0) const { return peek(ahead).text == text; }
    bool is_kind(TokenKind k, size_t ahead = 0) const {
        return pos_ + ahead < toks_.size() && toks_[pos_ + ahead].kind == k;
    }
    size_t advance() {
        if (at_end()) throw ParseError(pos_, "more input");
        if (gt_hold_ != 0) throw ParseError(pos_, "full token (inside '>>')");
        return pos_++;
    }
    size_t expect(const char* text) {
        if (!is(text) || gt_hold_ != 0) throw ParseError(pos_, std::string("'") + text + "'");
        return pos_++;
    }
    size_t expect_identifier() {
        if (!is_kind(TokenKind::Identifier) || gt_hold_ != 0)
            throw ParseError(pos_, "identifier");
        return pos_++;
    }
    // Index of the most recently consumed token; a held '>>' counts as
    // partially consumed, so spans ending there use the current index.
    int last_consumed() const {
        return gt_hold_ != 0 ? static_cast<int>(pos_) : static_cast<int>(pos_) - 1;
    }

    AstNode make(std::string label, int first, std::vector<AstNode> children = {}) {
        AstNode n;
        n.label = std::move(label);
        n.children = std::move(children);
        n.span_first = first;
        n.span_last = last_consumed();
        return n;
    }

    // ---- generics-aware '>' handling -------------------------------------

    bool peek_is_gt() const {
        if (at_end()) return false;
        const std::string& t = peek().text;
        if (gt_hold_ != 0) return true;
        return t == ">" || t == ">>" || t == ">>>";
    }
    void consume_gt() {
        if (!peek_is_gt()) throw ParseError(pos_, "'>'");
        if (gt_hold_ == 0) gt_hold_ = static_cast<int>(peek().text.size());
        if (--gt_hold_ == 0) ++pos_;
    }

    // ---- modifiers / annotations -----------------------------------------

    bool is_modifier() const {
        static const std::unordered_set<std::string> mods = {
            "public", "private", "protected", "static",   "final",
            "abstract", "synchronized", "native", "transient", "volatile",
            "strictfp", "default",
        };
        return is_kind(TokenKind::Keyword) && mods.count(peek().text) != 0;
    }

    AstNode annotation() {
        int first = static_cast<int>(expect("@"));
        expect_identifier();
        while (is(".")) {
            advance();
            expect_identifier();
        }
        if (is("(")) throw UnsupportedConstruct("AnnotationWithArguments", pos_);
        return make("Annotation", first);
    }

    // ---- types ------------------------------------------------------------

    bool is_primitive_type() const {
        static const std::unordered_set<std::string> prim = {
            "byte", "short", "int", "long", "char", "float", "double", "boolean",
        };
        return is_kind(TokenKind::Keyword) && prim.count(peek().text) != 0;
    }
    bool starts_type() const {
        return is_primitive_type() || is("void") || is_kind(TokenKind::Identifier);
    }

    void array_dims() {
        while (is("[") && is("]", 1)) {
            advance();
            advance();
        }
    }

    AstNode type() {
        int first = static_cast<int>(pos_);
        std::vector<AstNode> args;
        if (is_primitive_type() || is("void")) {
            advance();
        } else {
            expect_identifier();
            if (is("<")) args = type_arguments();
            while (is(".") && is_kind(TokenKind::Identifier, 1)) {
                advance();
                advance();
                if (is("<")) {
                    auto more = type_arguments();
                    for (auto& a : more) args.push_back(std::move(a));
                }
            }
        }
        array_dims();
        return make("Type", first, std::move(args));
    }

    std::vector<AstNode> type_arguments() {
        expect("<");
        std::vector<AstNode> args;
        if (peek_is_gt()) {  // diamond <>
            consume_gt();
            return args;
        }
        while (true) {
            args.push_back(type_argument());
            if (is(",")) {
                advance();
                continue;
            }
            consume_gt();
            break;
        }
        return args;
    }

    AstNode type_argument() {
        if (is("?")) {
            int first = static_cast<int>(advance());
            std::vector<AstNode> bound;
            if (is("extends") || is("super")) {
                advance();
                bound.push_back(type());
            }
            return make("Type", first, std::move(bound));
        }
        return type();
    }

    // ---- method declaration ------------------------------------------------

    AstNode method_declaration() {
        int first = static_cast<int>(pos_);
        std::vector<AstNode> children;
        while (true) {
            if (is("@")) children.push_back(annotation());
            else if (is_modifier()) {
                int f = static_cast<int>(advance());
                children.push_back(make("Modifier", f));
            } else break;
        }
        if (is("<")) {
            advance();
            while (true) {
                children.push_back(type_parameter());
                if (is(",")) {
                    advance();
                    continue;
                }
                consume_gt();
                break;
            }
        }
        // Constructor: identifier immediately followed by '('.
        bool ctor = is_kind(TokenKind::Identifier) && is("(", 1);
        if (!ctor) {
            children.push_back(type());
            expect_identifier();
        } else {
            expect_identifier();
        }
        expect("(");
        if (!is(")")) {
            while (true) {
                children.push_back(formal_parameter());
                if (is(",")) {
                    advance();
                    continue;
                }
                break;
            }
        }
        expect(")");
        array_dims();
        if (is("throws")) {
            advance();
            while (true) {
                children.push_back(type());
                if (is(",")) {
                    advance();
                    continue;
                }
                break;
            }
        }
        if (is(";")) {
            advance();  // abstract/native method: no body
        } else {
            children.push_back(block());
        }
        return make("MethodDeclaration", first, std::move(children));
    }

    AstNode type_parameter() {
        int first = static_cast<int>(expect_identifier());
        std::vector<AstNode> bounds;
        if (is("extends")) {
            advance();
            bounds.push_back(type());
            while (is("&")) {
                advance();
                bounds.push_back(type());
            }
        }
        return make("TypeParameter", first, std::move(bounds));
    }

    AstNode formal_parameter() {
        int first = static_cast<int>(pos_);
        std::vector<AstNode> children;
        while (is("@")) children.push_back(annotation());
        if (is("final")) {
            int f = static_cast<int>(advance());
            children.push_back(make("Modifier", f));
        }
        children.push_back(type());
        if (is("...")) advance();
        expect_identifier();
        array_dims();
        return make("FormalParameter", first, std::move(children));
    }

    // ---- statements ---------------------------------------------------------

    AstNode block() {
        int first = static_cast<int>(expect("{"));
        std::vector<AstNode> stmts;
        while (!is("}")) {
            if (at_end()) throw ParseError(pos_, "'}'");
            stmts.push_back(statement());
        }
        expect("}");
        return make("BlockStatement", first, std::move(stmts));
    }

    AstNode statement() {
        if (is("{")) return block();
        if (is(";")) {
            int f = static_cast<int>(advance());
            return make("EmptyStatement", f);
        }
        if (is("if")) return if_statement();
        if (is("while")) return while_statement();
        if (is("do")) return do_statement();
        if (is("for")) return for_statement();
        if (is("switch")) return switch_statement();
        if (is("try")) return try_statement();
        if (is("return")) return return_statement();
        if (is("throw")) return throw_statement();
        if (is("break") || is("continue")) return break_continue();
        if (is("synchronized") && is("(", 1)) return synchronized_statement();
        if (is("assert")) throw UnsupportedConstruct("AssertStatement", pos_);
        if (is("class") || is("interface") || is("enum"))
            throw UnsupportedConstruct("LocalClassDeclaration", pos_);
        if (is_kind(TokenKind::Identifier) && is(":", 1))
            throw UnsupportedConstruct("LabeledStatement", pos_);

        // Local variable declaration vs expression statement: speculate on the
        // declaration and fall back on ParseError (UnsupportedConstruct is real
        // and propagates).
        if (is("final") || is("@") || is_primitive_type() || is_kind(TokenKind::Identifier)) {
            Mark m = mark();
            try {
                return local_var_declaration(/*need_semicolon=*/true);
            } catch (const ParseError&) {
                rewind(m);
            }
        }
        return expression_statement();
    }

    AstNode local_var_declaration(bool need_semicolon) {
        int first = static_cast<int>(pos_);
        std::vector<AstNode> children;
        while (is("@")) children.push_back(annotation());
        if (is("final")) {
            int f = static_cast<int>(advance());
            children.push_back(make("Modifier", f));
        }
        children.push_back(type());
        while (true) {
            children.push_back(variable_declarator());
            if (is(",")) {
                advance();
                continue;
            }
            break;
        }
        if (need_semicolon) expect(";");
        return make("LocalVariableDeclaration", first, std::move(children));
    }

    AstNode variable_declarator() {
        int first = static_cast<int>(expect_identifier());
        array_dims();
        std::vector<AstNode> init;
        if (is("=")) {
            advance();
            if (is("{")) init.push_back(array_initializer());
            else init.push_back(expression());
        }
        return make("VariableDeclarator", first, std::move(init));
    }

    AstNode array_initializer() {
        int first = static_cast<int>(expect("{"));
        std::vector<AstNode> elems;
        while (!is("}")) {
            if (is("{")) elems.push_back(array_initializer());
            else elems.push_back(expression());
            if (is(",")) {
                advance();
                continue;
            }
            break;
        }
        expect("}");
        return make("ArrayInitializer", first, std::move(elems));
    }

    AstNode expression_statement() {
        int first = static_cast<int>(pos_);
        AstNode e = expression();
        expect(";");
        return make("StatementExpression", first, {std::move(e)});
    }

    AstNode if_statement() {
        int first = static_cast<int>(expect("if"));
        expect("(");
        std::vector<AstNode> children;
        children.push_back(expression());
        expect(")");
        children.push_back(statement());
        if (is("else")) {
            advance();
            children.push_back(statement());
        }
        return make("IfStatement", first, std::move(children));
    }

    AstNode while_statement() {
        int first = static_cast<int>(expect("while"));
        expect("(");
        std::vector<AstNode> children;
        children.push_back(expression());
        expect(")");
        children.push_back(statement());
        return make("WhileStatement", first, std::move(children));
    }

    AstNode do_statement() {
        int first = static_cast<int>(expect("do"));
        std::vector<AstNode> children;
        children.push_back(statement());
        expect("while");
        expect("(");
        children.push_back(expression());
        expect(")");
        expect(";");
        return make("DoStatement", first, std::move(children));
    }

    AstNode for_statement() {
        int first = static_cast<int>(expect("for"));
        expect("(");
        // Enhanced for: [final] Type name ':' expr
        {
            Mark m = mark();
            try {
                int cfirst = static_cast<int>(pos_);
                std::vector<AstNode> cchildren;
                if (is("final")) {
                    int f = static_cast<int>(advance());
                    cchildren.push_back(make("Modifier", f));
                }
                cchildren.push_back(type());
                expect_identifier();
                array_dims();
                expect(":");
                cchildren.push_back(expression());
                AstNode control = make("EnhancedForControl", cfirst, std::move(cchildren));
                expect(")");
                AstNode body = statement();
                return make("ForStatement", first,
                            {std::move(control), std::move(body)});
            } catch (const ParseError&) {
                rewind(m);
            }
        }
        int cfirst = static_cast<int>(pos_);
        std::vector<AstNode> cchildren;
        if (!is(";")) {
            Mark m = mark();
            try {
                cchildren.push_back(local_var_declaration(/*need_semicolon=*/false));
            } catch (const ParseError&) {
                rewind(m);
                cchildren.push_back(expression());
                while (is(",")) {
                    advance();
                    cchildren.push_back(expression());
                }
            }
        }
        expect(";");
        if (!is(";")) cchildren.push_back(expression());
        expect(";");
        if (!is(")")) {
            cchildren.push_back(expression());
            while (is(",")) {
                advance();
                cchildren.push_back(expression());
            }
        }
        AstNode control = make("ForControl", cfirst, std::move(cchildren));
        expect(")");
        AstNode body = statement();
        return make("ForStatement", first, {std::move(control), std::move(body)});
    }

    AstNode switch_statement() {
        int first = static_cast<int>(expect("switch"));
        expect("(");
        std::vector<AstNode> children;
        children.push_back(expression());
        expect(")");
        expect("{");
        while (!is("}")) {
            if (at_end()) throw ParseError(pos_, "'}'");
            children.push_back(switch_case());
        }
        expect("}");
        return make("SwitchStatement", first, std::move(children));
    }

    AstNode switch_case() {
        int first = static_cast<int>(pos_);
        std::vector<AstNode> children;
        bool any_label = false;
        while (is("case") || is("default")) {
            bool has_expr = is("case");
            advance();
            if (has_expr) children.push_back(binary_expression(0));  // no ternary in labels
            if (is("->")) throw UnsupportedConstruct("SwitchArrow", pos_);
            expect(":");
            any_label = true;
        }
        if (!any_label) throw ParseError(pos_, "'case' or 'default'");
        while (!is("case") && !is("default") && !is("}")) {
            if (at_end()) throw ParseError(pos_, "'}'");
            children.push_back(statement());
        }
        return make("SwitchCase", first, std::move(children));
    }

    AstNode try_statement() {
        int first = static_cast<int>(expect("try"));
        if (is("(")) throw UnsupportedConstruct("TryWithResources", pos_);
        std::vector<AstNode> children;
        children.push_back(block());
        bool any_handler = false;
        while (is("catch")) {
            children.push_back(catch_clause());
            any_handler = true;
        }
        if (is("finally")) {
            advance();
            children.push_back(block());
            any_handler = true;
        }
        if (!any_handler) throw ParseError(pos_, "'catch' or 'finally'");
        return make("TryStatement", first, std::move(children));
    }

    AstNode catch_clause() {
        int first = static_cast<int>(expect("catch"));
        expect("(");
        std::vector<AstNode> children;
        if (is("final")) {
            int f = static_cast<int>(advance());
            children.push_back(make("Modifier", f));
        }
        children.push_back(type());
        while (is("|")) {  // multi-catch
            advance();
            children.push_back(type());
        }
        expect_identifier();
        expect(")");
        children.push_back(block());
        return make("CatchClause", first, std::move(children));
    }

    AstNode return_statement() {
        int first = static_cast<int>(expect("return"));
        std::vector<AstNode> children;
        if (!is(";")) children.push_back(expression());
        expect(";");
        return make("ReturnStatement", first, std::move(children));
    }

    AstNode throw_statement() {
        int first = static_cast<int>(expect("throw"));
        std::vector<AstNode> children = {expression()};
        expect(";");
        return make("ThrowStatement", first, std::move(children));
    }

    AstNode break_continue() {
        bool is_break = is("break");
        int first = static_cast<int>(advance());
        if (is_kind(TokenKind::Identifier)) advance();  // label
        expect(";");
        return make(is_break ? "BreakStatement" : "ContinueStatement", first);
    }

    AstNode synchronized_statement() {
        int first = static_cast<int>(expect("synchronized"));
        expect("(");
        std::vector<AstNode> children;
        children.push_back(expression());
        expect(")");
        children.push_back(block());
        return make("SynchronizedStatement", first, std::move(children));
    }

    // ---- expressions ----------------------------------------------------------

    AstNode expression() { return assignment(); }

    bool is_assign_op() const {
        static const std::unordered_set<std::string> ops = {
            "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>=",
        };
        return is_kind(TokenKind::Operator) && ops.count(peek().text) != 0;
    }

    AstNode assignment() {
        int first = static_cast<int>(pos_);
        AstNode lhs = ternary();
        if (is_assign_op()) {
            advance();
            AstNode rhs = assignment();
            return make("Assignment", first, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    AstNode ternary() {
        int first = static_cast<int>(pos_);
        AstNode cond = binary_expression(0);
        if (is("?")) {
            advance();
            AstNode then_e = expression();
            expect(":");
            AstNode else_e = ternary();
            return make("TernaryExpression", first,
                        {std::move(cond), std::move(then_e), std::move(else_e)});
        }
        return cond;
    }

    // Precedence-ordered binary operator tiers, loosest first.
    static const std::vector<std::vector<std::string>>& binary_tiers() {
        static const std::vector<std::vector<std::string>> tiers = {
            {"||"}, {"&&"}, {"|"}, {"^"}, {"&"},
            {"==", "!="},
            {"<", ">", "<=", ">=", "instanceof"},
            {"<<", ">>", ">>>"},
            {"+", "-"},
            {"*", "/", "%"},
        };
        return tiers;
    }

    AstNode binary_expression(size_t tier) {
        if (tier >= binary_tiers().size()) return unary();
        int first = static_cast<int>(pos_);
        AstNode left = binary_expression(tier + 1);
        while (true) {
            const auto& ops = binary_tiers()[tier];
            bool hit = false;
            for (const auto& op : ops) {
                if (peek().text == op && gt_hold_ == 0) {
                    hit = true;
                    break;
                }
            }
            if (!hit) break;
            bool inst = is("instanceof");
            advance();
            AstNode right = inst ? type() : binary_expression(tier + 1);
            left = make("BinaryOperation", first, {std::move(left), std::move(right)});
        }
        return left;
    }

    AstNode unary() {
        if (is("+") || is("-") || is("!") || is("~") || is("++") || is("--")) {
            int first = static_cast<int>(advance());
            AstNode operand = unary();
            return make("UnaryOperation", first, {std::move(operand)});
        }
        if (is("(")) {
            if (auto cast = try_cast()) return std::move(*cast);
        }
        return postfix(primary());
    }

    // '(' Type ')' followed by something a cast operand can start with.
    std::optional<AstNode> try_cast() {
        Mark m = mark();
        int first = static_cast<int>(pos_);
        try {
            expect("(");
            bool prim = is_primitive_type();
            AstNode t = type();
            expect(")");
            bool ok;
            if (is_kind(TokenKind::Identifier) || is_kind(TokenKind::NumberLiteral) ||
                is_kind(TokenKind::StringLiteral) || is_kind(TokenKind::CharLiteral) ||
                is_kind(TokenKind::BooleanLiteral) || is_kind(TokenKind::NullLiteral) ||
                is("(") || is("!") || is("~") || is("this") || is("super") || is("new")) {
                ok = true;
            } else if (prim && (is("+") || is("-"))) {
                ok = true;  // (int) -x
            } else {
                ok = false;
            }
            if (!ok) {
                rewind(m);
                return std::nullopt;
            }
            AstNode operand = unary();
            return make("Cast", first, {std::move(t), std::move(operand)});
        } catch (const ParseError&) {
            rewind(m);
            return std::nullopt;
        }
    }

    std::vector<AstNode> call_arguments() {
        expect("(");
        std::vector<AstNode> args;
        if (!is(")")) {
            while (true) {
                args.push_back(expression());
                if (is(",")) {
                    advance();
                    continue;
                }
                break;
            }
        }
        expect(")");
        return args;
    }

    AstNode postfix(AstNode base) {
        int first = base.span_first;
        while (true) {
            if (is("::")) throw UnsupportedConstruct("MethodReference", pos_);
            if (is("->")) throw UnsupportedConstruct("Lambda", pos_);
            if (is(".")) {
                if (is("<", 1)) throw UnsupportedConstruct("GenericMethodInvocation", pos_);
                if (is("new", 1)) throw UnsupportedConstruct("QualifiedNew", pos_);
                if (is("super", 1)) throw UnsupportedConstruct("QualifiedSuper", pos_);
                if (is("class", 1)) {
                    advance();
                    advance();
                    base = make("ClassReference", first, {std::move(base)});
                    continue;
                }
                if (is("this", 1)) {
                    advance();
                    advance();
                    base = make("This", first, {std::move(base)});
                    continue;
                }
                advance();
                expect_identifier();
                if (is("(")) {
                    std::vector<AstNode> children;
                    children.push_back(std::move(base));
                    for (auto& a : call_arguments()) children.push_back(std::move(a));
                    base = make("MethodInvocation", first, std::move(children));
                } else {
                    base = make("MemberReference", first, {std::move(base)});
                }
                continue;
            }
            if (is("[")) {
                advance();
                AstNode idx = expression();
                expect("]");
                base = make("ArraySelector", first, {std::move(base), std::move(idx)});
                continue;
            }
            if (is("++") || is("--")) {
                advance();
                base = make("UnaryOperation", first, {std::move(base)});
                continue;
            }
            break;
        }
        return base;
    }

    // Scan from a '(' to its matching ')' and report whether '->' follows;
    // used to reject lambdas with a useful name before general parsing trips.
    bool paren_starts_lambda() const {
        size_t depth = 0;
        for (size_t j = pos_; j < toks_.size(); ++j) {
            const std::string& t = toks_[j].text;
            if (t == "(") ++depth;
            else if (t == ")") {
                if (--depth == 0) return j + 1 < toks_.size() && toks_[j + 1].text == "->";
            }
        }
        return false;
    }

    AstNode primary() {
        if (is("(")) {
            if (paren_starts_lambda()) throw UnsupportedConstruct("Lambda", pos_);
            advance();
            AstNode inner = expression();
            expect(")");
            return inner;  // parenthesization is transparent
        }
        if (is_kind(TokenKind::NumberLiteral) || is_kind(TokenKind::StringLiteral) ||
            is_kind(TokenKind::CharLiteral) || is_kind(TokenKind::BooleanLiteral) ||
            is_kind(TokenKind::NullLiteral)) {
            int first = static_cast<int>(advance());
            return make("Literal", first);
        }
        if (is("this")) {
            int first = static_cast<int>(advance());
            if (is("(")) {
                std::vector<AstNode> args = call_arguments();
                return make("MethodInvocation", first, std::move(args));
            }
            return make("This", first);
        }
        if (is("super")) {
            int first = static_cast<int>(advance());
            if (is("(")) {
                std::vector<AstNode> args = call_arguments();
                return make("MethodInvocation", first, std::move(args));
            }
            // super.member / super.call() continue through postfix
            return make("MemberReference", first);
        }
        if (is("new")) return creator();
        if (is_kind(TokenKind::Identifier)) {
            int first = static_cast<int>(advance());
            if (is("(")) {
                std::vector<AstNode> args = call_arguments();
                return make("MethodInvocation", first, std::move(args));
            }
            return make("MemberReference", first);
        }
        if (is_primitive_type() || is("void")) {
            // primitive class literal: int.class
            int first = static_cast<int>(advance());
            if (is(".") && is("class", 1)) {
                advance();
                advance();
                return make("ClassReference", first);
            }
            throw ParseError(pos_, "'.class' after primitive type");
        }
        throw ParseError(pos_, "expression");
    }

    AstNode creator() {
        int first = static_cast<int>(expect("new"));
        AstNode t;
        {
            // Type name without trailing array dims: creators own their '['.
            int tfirst = static_cast<int>(pos_);
            std::vector<AstNode> args;
            if (is_primitive_type()) {
                advance();
            } else {
                expect_identifier();
                if (is("<")) args = type_arguments();
                while (is(".") && is_kind(TokenKind::Identifier, 1)) {
                    advance();
                    advance();
                    if (is("<")) {
                        auto more = type_arguments();
                        for (auto& a : more) args.push_back(std::move(a));
                    }
                }
            }
            t = make("Type", tfirst, std::move(args));
        }
        if (is("[")) {
            std::vector<AstNode> children;
            children.push_back(std::move(t));
            bool saw_empty = false;
            while (is("[")) {
                advance();
                if (is("]")) {
                    advance();
                    saw_empty = true;
                    continue;
                }
                if (saw_empty) throw ParseError(pos_, "']'");
                children.push_back(expression());
                expect("]");
            }
            if (is("{")) children.push_back(array_initializer());
            return make("ArrayCreator", first, std::move(children));
        }
        std::vector<AstNode> children;
        children.push_back(std::move(t));
        for (auto& a : call_arguments()) children.push_back(std::move(a));
        if (is("{")) throw UnsupportedConstruct("AnonymousClass", pos_);
        return make("ClassCreator", first, std::move(children));
    }
};

} // namespace detail

// Parse a single Java method (or constructor) declaration.
inline AstNode parse_method(const std::vector<Token>& tokens) {
    if (tokens.empty()) throw ParseError(0, "method declaration");
    return detail::MethodParser(tokens).parse();
}

inline AstNode parse_method(std::string_view source) { return parse_method(lex(source)); }

} // namespace comformer
