#pragma once

// Shared test fixtures: a deterministic toy (method, comment) corpus and a
// seeded random generator of Java methods that stay inside the parser's
// subset grammar.

#include <string>
#include <utility>
#include <vector>

#include "comformer/rng.hpp"

namespace comformer::testing {

struct ToyPair {
    std::string code;
    std::string comment;
};

// 64 small getter/setter/util methods with natural-language comments.
inline std::vector<ToyPair> toy_corpus() {
    const std::vector<std::string> fields = {
        "count",  "size",   "name",   "index", "total", "limit", "offset", "value",
        "weight", "height", "length", "depth", "score", "rank",  "level",  "age",
    };
    std::vector<ToyPair> pairs;
    for (const std::string& f : fields) {
        std::string cap = f;
        cap[0] = static_cast<char>(cap[0] - 'a' + 'A');
        pairs.push_back({"public int get" + cap + "() { return " + f + "; }",
                         "returns the " + f + " of this object"});
        pairs.push_back({"public void set" + cap + "(int value) { this." + f + " = value; }",
                         "sets the " + f + " to the given value"});
        pairs.push_back({"public int add" + cap + "(int delta) { " + f + " += delta; return " +
                             f + "; }",
                         "adds a delta to the " + f + " and returns it"});
        pairs.push_back({"public boolean has" + cap + "() { return " + f + " > 0; }",
                         "checks whether the " + f + " is positive"});
    }
    return pairs;
}

// Random method source generator. Every construct it emits is in the subset
// grammar, so parse failures in tests are real bugs.
class MethodGenerator {
public:
    explicit MethodGenerator(uint64_t seed) : rng_(seed) {}

    std::string next() {
        std::string name = ident();
        std::string src = "public " + type() + " " + name + "(" + params() + ") {\n";
        int stmts = 1 + static_cast<int>(rng_.below(5));
        for (int i = 0; i < stmts; ++i) src += "    " + statement(2) + "\n";
        src += "    return " + expr(1) + ";\n}";
        return src;
    }

private:
    comformer::Rng rng_;

    std::string pick(const std::vector<std::string>& v) {
        return v[static_cast<size_t>(rng_.below(v.size()))];
    }
    std::string ident() {
        static const std::vector<std::string> names = {
            "value",  "count", "items",  "name",  "index",  "data",
            "total",  "size",  "flag",   "result", "buffer", "key",
            "node",   "limit", "offset", "cache",
        };
        return pick(names);
    }
    std::string type() {
        static const std::vector<std::string> types = {
            "int", "long", "double", "boolean", "String", "Object",
        };
        return pick(types);
    }
    std::string params() {
        int n = static_cast<int>(rng_.below(3));
        std::string out;
        for (int i = 0; i < n; ++i) {
            if (i) out += ", ";
            out += type() + " arg" + std::to_string(i);
        }
        return out;
    }
    std::string literal() {
        switch (rng_.below(4)) {
            case 0: return std::to_string(rng_.below(100));
            case 1: return "\"" + ident() + "\"";
            case 2: return "true";
            default: return "null";
        }
    }
    std::string expr(int depth) {
        if (depth <= 0) return rng_.below(2) ? ident() : literal();
        switch (rng_.below(8)) {
            case 0: return ident();
            case 1: return literal();
            case 2: return expr(depth - 1) + " " + pick({"+", "-", "*", "<", ">=", "==", "&&"}) +
                           " " + expr(depth - 1);
            case 3: return ident() + "(" + expr(depth - 1) + ")";
            case 4: return ident() + "." + ident();
            case 5: return ident() + "[" + expr(depth - 1) + "]";
            case 6: return "(" + expr(depth - 1) + ")";
            default: return "new " + type() + "(" + expr(depth - 1) + ")";
        }
    }
    std::string statement(int depth) {
        if (depth <= 0) return ident() + " = " + expr(0) + ";";
        switch (rng_.below(9)) {
            case 0: return type() + " " + ident() + " = " + expr(depth - 1) + ";";
            case 1: return ident() + " = " + expr(depth - 1) + ";";
            case 2: return ident() + "." + ident() + "(" + expr(depth - 1) + ");";
            case 3: return "if (" + expr(depth - 1) + ") { " + statement(depth - 1) + " } else { " +
                           statement(depth - 1) + " }";
            case 4: return "while (" + expr(depth - 1) + ") { " + statement(depth - 1) + " }";
            case 5: return "for (int i = 0; i < " + ident() + "; i++) { " + statement(depth - 1) +
                           " }";
            case 6: return "try { " + statement(depth - 1) + " } catch (Exception e) { " +
                           statement(depth - 1) + " }";
            case 7: return "for (String item : " + ident() + ") { " + statement(depth - 1) + " }";
            default: return ident() + "++;";
        }
    }
};

} // namespace comformer::testing
