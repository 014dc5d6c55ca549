// Construction DSL for graphs built from named families and operators:
//   expr    := term ('+' term)*          Zykov sum, left-assoc
//   term    := factor ('|' factor)*      disjoint union, left-assoc
//   factor  := INT '*' factor            disjoint union of INT copies
//            | INT '#' factor            Zykov sum of INT copies
//            | atom postfix*
//   postfix := '^*'                      pendant construction
//   atom    := K INT | P INT | C INT | E INT | K INT ',' INT | '(' expr ')'
//            | 'addedge(' expr ',' INT ',' INT ')'
//            | 'deledge(' expr ',' INT ',' INT ')'
// Whitespace-insensitive. Example: "K24 + (K3 | K3 | K4)".
#pragma once

#include <cctype>
#include <charconv>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace indpoly {

struct GraphExpr;
using ExprPtr = std::shared_ptr<const GraphExpr>;

struct GraphExpr {
    enum class Kind {
        Complete,
        Path,
        Cycle,
        Edgeless,
        CompleteBipartite,
        ZykovSum,
        DisjointUnion,
        RepeatUnion,
        RepeatZykov,
        Star,
        AddEdge,
        DelEdge,
    };

    Kind kind;
    int a = 0;  // family order, repetition count, bipartite part, or edge endpoint u
    int b = 0;  // second bipartite part or edge endpoint v
    ExprPtr left;
    ExprPtr right;
};

inline bool expr_equal(const GraphExpr& x, const GraphExpr& y) {
    if (x.kind != y.kind || x.a != y.a || x.b != y.b) return false;
    if (static_cast<bool>(x.left) != static_cast<bool>(y.left)) return false;
    if (static_cast<bool>(x.right) != static_cast<bool>(y.right)) return false;
    if (x.left && !expr_equal(*x.left, *y.left)) return false;
    if (x.right && !expr_equal(*x.right, *y.right)) return false;
    return true;
}

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("expression, position " + std::to_string(pos_ + 1) + ": " +
                                    msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool lookahead_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 6) fail("integer too large");
        int value = 0;
        std::from_chars(s_.data() + start, s_.data() + pos_, value);
        return value;
    }

    bool eat_keyword(std::string_view kw) {
        skip_ws();
        if (s_.substr(pos_, kw.size()) == kw) {
            pos_ += kw.size();
            return true;
        }
        return false;
    }

    static ExprPtr node(GraphExpr::Kind kind, int a = 0, int b = 0, ExprPtr left = nullptr,
                        ExprPtr right = nullptr) {
        auto e = std::make_shared<GraphExpr>();
        e->kind = kind;
        e->a = a;
        e->b = b;
        e->left = std::move(left);
        e->right = std::move(right);
        return e;
    }

    ExprPtr parse_sum() {
        ExprPtr l = parse_term();
        while (eat('+')) l = node(GraphExpr::Kind::ZykovSum, 0, 0, l, parse_term());
        return l;
    }

    ExprPtr parse_term() {
        ExprPtr l = parse_factor();
        while (eat('|')) l = node(GraphExpr::Kind::DisjointUnion, 0, 0, l, parse_factor());
        return l;
    }

    ExprPtr parse_factor() {
        if (lookahead_digit()) {
            int count = parse_int();
            if (count < 1) fail("repetition count must be at least 1");
            if (eat('*')) return node(GraphExpr::Kind::RepeatUnion, count, 0, parse_factor());
            if (eat('#')) return node(GraphExpr::Kind::RepeatZykov, count, 0, parse_factor());
            fail("expected '*' or '#' after repetition count");
        }
        ExprPtr e = parse_atom();
        for (;;) {
            skip_ws();
            if (pos_ + 1 < s_.size() && s_[pos_] == '^' && s_[pos_ + 1] == '*') {
                pos_ += 2;
                e = node(GraphExpr::Kind::Star, 0, 0, e);
            } else {
                break;
            }
        }
        return e;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input, expected a graph atom");
        if (eat('(')) {
            ExprPtr e = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (eat_keyword("addedge")) return parse_edge_edit(GraphExpr::Kind::AddEdge);
        if (eat_keyword("deledge")) return parse_edge_edit(GraphExpr::Kind::DelEdge);

        char c = s_[pos_];
        if (c == 'K' || c == 'P' || c == 'C' || c == 'E') {
            ++pos_;
            int n = parse_int();
            if (c == 'K' && eat(',')) {
                int b = parse_int();
                if (n < 1 || b < 1) fail("complete bipartite parts must be at least 1");
                return node(GraphExpr::Kind::CompleteBipartite, n, b);
            }
            switch (c) {
                case 'K':
                    if (n < 1) fail("K requires order >= 1");
                    return node(GraphExpr::Kind::Complete, n);
                case 'P':
                    if (n < 1) fail("P requires order >= 1");
                    return node(GraphExpr::Kind::Path, n);
                case 'C':
                    if (n < 3) fail("C requires order >= 3");
                    return node(GraphExpr::Kind::Cycle, n);
                default:
                    if (n < 1) fail("E requires order >= 1");
                    return node(GraphExpr::Kind::Edgeless, n);
            }
        }
        fail(std::string("expected a graph atom, found '") + c + "'");
    }

    // The argument list is split on top-level commas from the right: the
    // last two segments are the edge endpoints, the rest re-joined is the
    // subexpression (so bipartite atoms like K1,3 stay intact).
    ExprPtr parse_edge_edit(GraphExpr::Kind kind) {
        if (!eat('(')) fail("expected '(' after edge edit");
        std::size_t start = pos_;
        int depth = 1;
        std::vector<std::string> segments;
        std::size_t seg_start = pos_;
        while (pos_ < s_.size() && depth > 0) {
            char c = s_[pos_];
            if (c == '(') ++depth;
            if (c == ')') {
                --depth;
                if (depth == 0) break;
            }
            if (c == ',' && depth == 1) {
                segments.emplace_back(s_.substr(seg_start, pos_ - seg_start));
                seg_start = pos_ + 1;
            }
            ++pos_;
        }
        if (depth != 0) fail("expected ')' closing the edge edit");
        segments.emplace_back(s_.substr(seg_start, pos_ - seg_start));
        ++pos_;  // consume ')'
        if (segments.size() < 3) fail("edge edit needs an expression and two vertex labels");

        auto parse_label = [&](const std::string& seg) {
            std::size_t a = seg.find_first_not_of(" \t");
            std::size_t b = seg.find_last_not_of(" \t");
            if (a == std::string::npos) fail("empty vertex label in edge edit");
            int value = -1;
            auto res = std::from_chars(seg.data() + a, seg.data() + b + 1, value);
            if (res.ec != std::errc{} || res.ptr != seg.data() + b + 1 || value < 0)
                fail("expected a nonnegative vertex label, found '" + seg + "'");
            return value;
        };
        int v = parse_label(segments.back());
        segments.pop_back();
        int u = parse_label(segments.back());
        segments.pop_back();
        std::string sub;
        for (std::size_t i = 0; i < segments.size(); ++i) {
            if (i) sub += ",";
            sub += segments[i];
        }
        std::size_t save = pos_;
        ExprPtr child;
        try {
            child = ExprParser(sub).parse();
        } catch (const std::invalid_argument& e) {
            pos_ = start;
            fail(std::string("inside edge edit: ") + e.what());
        }
        pos_ = save;
        return node(kind, u, v, child);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline Graph eval_expr(const GraphExpr& e) {
    using Kind = GraphExpr::Kind;
    switch (e.kind) {
        case Kind::Complete: return complete_graph(e.a);
        case Kind::Path: return path_graph(e.a);
        case Kind::Cycle: return cycle_graph(e.a);
        case Kind::Edgeless: return edgeless_graph(e.a);
        case Kind::CompleteBipartite: return complete_bipartite(e.a, e.b);
        case Kind::ZykovSum: return zykov_sum(eval_expr(*e.left), eval_expr(*e.right));
        case Kind::DisjointUnion: return disjoint_union(eval_expr(*e.left), eval_expr(*e.right));
        case Kind::RepeatUnion: {
            Graph copy = eval_expr(*e.left);
            Graph acc = copy;
            for (int i = 1; i < e.a; ++i) acc = disjoint_union(acc, copy);
            return acc;
        }
        case Kind::RepeatZykov: {
            Graph copy = eval_expr(*e.left);
            Graph acc = copy;
            for (int i = 1; i < e.a; ++i) acc = zykov_sum(acc, copy);
            return acc;
        }
        case Kind::Star: return star_graph(eval_expr(*e.left));
        case Kind::AddEdge: {
            Graph g = eval_expr(*e.left);
            if (e.a >= g.order() || e.b >= g.order())
                throw std::invalid_argument("addedge: vertex label out of range for a graph on " +
                                            std::to_string(g.order()) + " vertices");
            return add_edge(g, e.a, e.b);
        }
        case Kind::DelEdge: {
            Graph g = eval_expr(*e.left);
            if (e.a >= g.order() || e.b >= g.order())
                throw std::invalid_argument("deledge: vertex label out of range for a graph on " +
                                            std::to_string(g.order()) + " vertices");
            return delete_edge(g, e.a, e.b);
        }
    }
    throw std::logic_error("eval_expr: unhandled node kind");
}

inline Graph eval_expr(const ExprPtr& e) { return eval_expr(*e); }

namespace detail {

// Precedence: '+' < '|' < repetition < postfix < atom.
inline int expr_level(const GraphExpr& e) {
    using Kind = GraphExpr::Kind;
    switch (e.kind) {
        case Kind::ZykovSum: return 1;
        case Kind::DisjointUnion: return 2;
        case Kind::RepeatUnion:
        case Kind::RepeatZykov: return 3;
        case Kind::Star: return 4;
        default: return 5;
    }
}

inline void render_expr_to(const GraphExpr& e, int min_level, std::string& out) {
    using Kind = GraphExpr::Kind;
    const int level = expr_level(e);
    const bool parens = level < min_level;
    if (parens) out += "(";
    switch (e.kind) {
        case Kind::Complete: out += "K" + std::to_string(e.a); break;
        case Kind::Path: out += "P" + std::to_string(e.a); break;
        case Kind::Cycle: out += "C" + std::to_string(e.a); break;
        case Kind::Edgeless: out += "E" + std::to_string(e.a); break;
        case Kind::CompleteBipartite:
            out += "K" + std::to_string(e.a) + "," + std::to_string(e.b);
            break;
        case Kind::ZykovSum:
            render_expr_to(*e.left, 1, out);
            out += " + ";
            render_expr_to(*e.right, 2, out);
            break;
        case Kind::DisjointUnion:
            render_expr_to(*e.left, 2, out);
            out += " | ";
            render_expr_to(*e.right, 3, out);
            break;
        case Kind::RepeatUnion:
        case Kind::RepeatZykov:
            out += std::to_string(e.a);
            out += e.kind == Kind::RepeatUnion ? "*" : "#";
            render_expr_to(*e.left, 3, out);
            break;
        case Kind::Star:
            render_expr_to(*e.left, 4, out);
            out += "^*";
            break;
        case Kind::AddEdge:
        case Kind::DelEdge:
            out += e.kind == Kind::AddEdge ? "addedge(" : "deledge(";
            render_expr_to(*e.left, 1, out);
            out += ", " + std::to_string(e.a) + ", " + std::to_string(e.b) + ")";
            break;
    }
    if (parens) out += ")";
}

}  // namespace detail

inline std::string render_expr(const GraphExpr& e) {
    std::string out;
    detail::render_expr_to(e, 1, out);
    return out;
}

inline std::string render_expr(const ExprPtr& e) { return render_expr(*e); }

// Parse-and-evaluate convenience.
inline Graph graph_from_expr(std::string_view text) { return eval_expr(parse_expr(text)); }

}  // namespace indpoly
