#pragma once

// AST linearization: the bracketed structure-based traversal (SBT) and its
// plain pre-order simplification (Sim_SBT). Both emit node-type labels only,
// so len(sbt) == 4 * node_count and len(sim_sbt) == node_count exactly.

#include <stdexcept>
#include <string>
#include <vector>

#include "comformer/normalize.hpp"
#include "comformer/parser.hpp"

namespace comformer {

using AstSeq = std::vector<std::string>;

class LengthMismatch : public std::runtime_error {
public:
    explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

class EmptyInput : public std::runtime_error {
public:
    explicit EmptyInput(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void sbt_append(const AstNode& n, AstSeq& out) {
    out.push_back("(");
    out.push_back(n.label);
    for (const AstNode& c : n.children) sbt_append(c, out);
    out.push_back(")");
    out.push_back(n.label);
}

inline void preorder_append(const AstNode& n, AstSeq& out) {
    out.push_back(n.label);
    for (const AstNode& c : n.children) preorder_append(c, out);
}

} // namespace detail

// SBT(n) = "(" label(n) SBT(children...) ")" label(n)
inline AstSeq sbt(const AstNode& root) {
    AstSeq out;
    out.reserve(4 * node_count(root));
    detail::sbt_append(root, out);
    return out;
}

// Pre-order label listing.
inline AstSeq sim_sbt(const AstNode& root) {
    AstSeq out;
    out.reserve(node_count(root));
    detail::preorder_append(root, out);
    return out;
}

struct CompressionStats {
    double mean_sbt_len = 0.0;
    double mean_sim_sbt_len = 0.0;
    double mean_code_len = 0.0;
};

// Mean sequence lengths over parallel (ast, code) lists; feeds pipeline
// reports about the Sim_SBT length reduction.
inline CompressionStats compression_stats(const std::vector<AstNode>& asts,
                                          const std::vector<NormTokenSeq>& code_seqs) {
    if (asts.size() != code_seqs.size())
        throw LengthMismatch("compression_stats: " + std::to_string(asts.size()) +
                             " asts vs " + std::to_string(code_seqs.size()) + " code seqs");
    if (asts.empty()) throw EmptyInput("compression_stats: empty input");
    double sbt_total = 0.0, sim_total = 0.0, code_total = 0.0;
    for (size_t i = 0; i < asts.size(); ++i) {
        const double nodes = static_cast<double>(node_count(asts[i]));
        sbt_total += 4.0 * nodes;
        sim_total += nodes;
        code_total += static_cast<double>(code_seqs[i].size());
    }
    const double n = static_cast<double>(asts.size());
    return {sbt_total / n, sim_total / n, code_total / n};
}

} // namespace comformer
