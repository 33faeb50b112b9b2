#include "qschur/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace qschur {

namespace {

// ---- boundary text forms ----

struct BlockTok {
    bool coloured = false;
    DimVec dv;
    ColouredBlock cb;
};

struct NodeParser {
    const std::string& s;
    size_t pos;
    size_t base; // offset of this statement in the full text

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_str(const std::string& t) {
        skip_ws();
        if (s.compare(pos, t.size(), t) == 0) {
            pos += t.size();
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, base + pos); }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stoi(s.substr(start, pos - start));
    }

    BlockTok parse_block() {
        skip_ws();
        BlockTok b;
        if (peek() == '(') {
            ++pos;
            int n0 = parse_int();
            if (!eat(',')) fail("expected ','");
            int n1 = parse_int();
            if (!eat(')')) fail("expected ')'");
            b.coloured = false;
            b.dv = {n0, n1};
            return b;
        }
        int mult = std::isdigit(static_cast<unsigned char>(peek())) ? parse_int() : 1;
        char c = peek();
        if (c == 'd') {
            ++pos;
            b.coloured = false;
            b.dv = delta() * mult;
        } else if (c == 'a') {
            ++pos;
            char w = peek();
            if (w != '0' && w != '1') fail("expected a0 or a1");
            ++pos;
            b.coloured = false;
            b.dv = (w == '0' ? alpha0() : alpha1()) * mult;
        } else if (c == 't') {
            ++pos;
            b.coloured = true;
            b.cb = {mult, Colour::tau};
        } else if (c == 'e') {
            ++pos;
            b.coloured = true;
            b.cb = {mult, Colour::eps};
        } else {
            fail("expected a block (2d, 1a0, 3a1, 2t, 1e or (n0,n1))");
        }
        return b;
    }

    Boundary parse_comp() {
        std::vector<BlockTok> blocks{parse_block()};
        while (eat('+')) blocks.push_back(parse_block());
        bool coloured = blocks[0].coloured;
        for (const auto& b : blocks)
            if (b.coloured != coloured) fail("mixed coloured and quiver blocks");
        if (coloured) {
            ColouredComposition c;
            for (const auto& b : blocks) c.push_back(b.cb);
            return Boundary(c);
        }
        IComposition c;
        for (const auto& b : blocks) c.push_back(b.dv);
        return Boundary(c);
    }
};

size_t boundary_len(const Boundary& b) {
    if (std::holds_alternative<IComposition>(b)) return std::get<IComposition>(b).size();
    return std::get<ColouredComposition>(b).size();
}

bool block_matches(const Boundary& b, size_t idx, const BlockTok& tok) {
    if (std::holds_alternative<IComposition>(b))
        return !tok.coloured && std::get<IComposition>(b)[idx] == tok.dv;
    return tok.coloured && std::get<ColouredComposition>(b)[idx] == tok.cb;
}

// ---- statement parsing into raw nodes ----

struct RawNode {
    DiagramNode node;
    std::optional<BlockTok> parent, left, right; // split/merge block tokens
    std::optional<Boundary> declared;            // idem boundary
};

RawNode parse_statement(const std::string& stmt, size_t base) {
    NodeParser p{stmt, 0, base};
    RawNode out;
    DiagramNode& n = out.node;
    n.src_pos = base;
    p.skip_ws();
    size_t start = p.pos;
    while (p.pos < stmt.size() && std::isalpha(static_cast<unsigned char>(stmt[p.pos]))) ++p.pos;
    std::string name = stmt.substr(start, p.pos - start);
    if (!p.eat('[')) p.fail("expected '['");

    auto parse_at_pos = [&]() {
        if (p.eat('@')) n.pos = p.parse_int();
    };

    if (name == "id") {
        n.kind = DiagramNode::Kind::idem;
        out.declared = p.parse_comp();
    } else if (name == "split") {
        n.kind = DiagramNode::Kind::split;
        out.parent = p.parse_block();
        if (!p.eat_str("->")) p.fail("expected '->'");
        out.left = p.parse_block();
        if (!p.eat('|')) p.fail("expected '|'");
        out.right = p.parse_block();
        parse_at_pos();
    } else if (name == "merge") {
        n.kind = DiagramNode::Kind::merge;
        out.left = p.parse_block();
        if (!p.eat('|')) p.fail("expected '|'");
        out.right = p.parse_block();
        if (!p.eat_str("->")) p.fail("expected '->'");
        out.parent = p.parse_block();
        parse_at_pos();
    } else if (name == "cross") {
        n.kind = DiagramNode::Kind::cross;
        parse_at_pos();
        if (n.pos == 0) p.fail("cross needs @pos");
    } else if (name == "coupon") {
        n.kind = DiagramNode::Kind::coupon;
        // everything up to a trailing @range or the closing bracket
        size_t depth = 0;
        size_t expr_start = p.pos;
        size_t at = std::string::npos;
        while (p.pos < stmt.size()) {
            char c = stmt[p.pos];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == '@' && depth == 0) at = p.pos;
            if (c == ']' && depth == 0) break;
            ++p.pos;
        }
        n.coupon_text = stmt.substr(expr_start, (at == std::string::npos ? p.pos : at) - expr_start);
    } else if (name == "cc") {
        n.kind = DiagramNode::Kind::colour_change;
        char from = p.peek();
        if (from != 't' && from != 'e') p.fail("expected t or e");
        ++p.pos;
        if (!p.eat_str("->")) p.fail("expected '->'");
        char to = p.peek();
        if (to != 't' && to != 'e') p.fail("expected t or e");
        ++p.pos;
        if (from == to) p.fail("colour change must change the colour");
        n.cc_to = to == 't' ? Colour::tau : Colour::eps;
        parse_at_pos();
    } else if (name == "mx") {
        n.kind = DiagramNode::Kind::mc_cross;
        parse_at_pos();
        if (n.pos == 0) p.fail("mx needs @pos");
        if (p.eat(',')) {
            // direction annotation, validated against the boundary later
            if (!p.eat_str("te") && !p.eat_str("et")) p.fail("expected te or et");
        }
    } else {
        throw ParseError("unknown node '" + name + "'", base + start);
    }
    if (!p.eat(']')) p.fail("expected ']'");
    p.skip_ws();
    if (p.pos != stmt.size()) p.fail("trailing input in statement");
    return out;
}

// Unique position where (parent -> left|right) applies; for merges, where
// (left,right -> parent) applies.
int locate(const Boundary& b, const RawNode& rn, bool split) {
    if (rn.node.pos != 0) return rn.node.pos;
    int found = 0, count = 0;
    size_t len = boundary_len(b);
    for (size_t i = 0; i < len; ++i) {
        bool ok = split ? block_matches(b, i, *rn.parent)
                        : (i + 1 < len && block_matches(b, i, *rn.left) &&
                           block_matches(b, i + 1, *rn.right));
        if (ok) {
            found = static_cast<int>(i) + 1;
            ++count;
        }
    }
    if (count == 0)
        throw ParseError("no matching block in " + boundary_str(b), rn.node.src_pos);
    if (count > 1)
        throw ParseError("ambiguous block position in " + boundary_str(b) + "; use @pos",
                         rn.node.src_pos);
    return found;
}

Boundary step_boundary(const Boundary& below, DiagramNode& n, const RawNode& rn) {
    auto check_range = [&](int pos, int span) {
        if (pos < 1 || pos + span - 1 > static_cast<int>(boundary_len(below)))
            throw ParseError("position out of range in " + boundary_str(below), n.src_pos);
    };
    switch (n.kind) {
        case DiagramNode::Kind::idem: {
            if (!boundary_eq(below, *rn.declared))
                throw ParseError("idempotent boundary " + boundary_str(*rn.declared) +
                                     " does not match " + boundary_str(below),
                                 n.src_pos);
            return below;
        }
        case DiagramNode::Kind::split: {
            n.pos = locate(below, rn, true);
            check_range(n.pos, 1);
            if (!block_matches(below, n.pos - 1, *rn.parent))
                throw ParseError("split parent does not match " + boundary_str(below), n.src_pos);
            if (std::holds_alternative<IComposition>(below)) {
                if (rn.left->coloured || rn.right->coloured)
                    throw ParseError("coloured parts in a quiver split", n.src_pos);
                auto c = std::get<IComposition>(below);
                if (c[n.pos - 1] != rn.left->dv + rn.right->dv)
                    throw ParseError("split parts do not sum to the parent", n.src_pos);
                n.ileft = rn.left->dv;
                n.iright = rn.right->dv;
                c[n.pos - 1] = rn.left->dv;
                c.insert(c.begin() + n.pos, rn.right->dv);
                return Boundary(c);
            }
            auto c = std::get<ColouredComposition>(below);
            const auto& blk = c[n.pos - 1];
            if (!rn.left->coloured || !rn.right->coloured ||
                rn.left->cb.colour != blk.colour || rn.right->cb.colour != blk.colour ||
                rn.left->cb.size + rn.right->cb.size != blk.size)
                throw ParseError("split parts do not match the coloured block", n.src_pos);
            n.cleft = rn.left->cb.size;
            n.cright = rn.right->cb.size;
            c[n.pos - 1] = rn.left->cb;
            c.insert(c.begin() + n.pos, rn.right->cb);
            return Boundary(c);
        }
        case DiagramNode::Kind::merge: {
            n.pos = locate(below, rn, false);
            check_range(n.pos, 2);
            if (!block_matches(below, n.pos - 1, *rn.left) ||
                !block_matches(below, n.pos, *rn.right))
                throw ParseError("merge children do not match " + boundary_str(below), n.src_pos);
            if (std::holds_alternative<IComposition>(below)) {
                auto c = std::get<IComposition>(below);
                DimVec sum = c[n.pos - 1] + c[n.pos];
                if (!rn.parent->coloured && rn.parent->dv != sum)
                    throw ParseError("merge parent does not match the sum", n.src_pos);
                c[n.pos - 1] = sum;
                c.erase(c.begin() + n.pos);
                return Boundary(c);
            }
            auto c = std::get<ColouredComposition>(below);
            if (c[n.pos - 1].colour != c[n.pos].colour)
                throw ParseError("merging blocks of different colours", n.src_pos);
            ColouredBlock sum{c[n.pos - 1].size + c[n.pos].size, c[n.pos - 1].colour};
            if (rn.parent->coloured && !(rn.parent->cb == sum))
                throw ParseError("merge parent does not match the sum", n.src_pos);
            c[n.pos - 1] = sum;
            c.erase(c.begin() + n.pos);
            return Boundary(c);
        }
        case DiagramNode::Kind::cross: {
            check_range(n.pos, 2);
            if (std::holds_alternative<IComposition>(below)) {
                auto c = std::get<IComposition>(below);
                std::swap(c[n.pos - 1], c[n.pos]);
                return Boundary(c);
            }
            auto c = std::get<ColouredComposition>(below);
            if (c[n.pos - 1].colour != c[n.pos].colour)
                throw ParseError("cross needs equal colours; use mx", n.src_pos);
            std::swap(c[n.pos - 1], c[n.pos]);
            return Boundary(c);
        }
        case DiagramNode::Kind::coupon: {
            // validated against the ring here; evaluated later
            parse_poly(boundary_sig(below), n.coupon_text);
            return below;
        }
        case DiagramNode::Kind::colour_change: {
            if (!std::holds_alternative<ColouredComposition>(below))
                throw ParseError("colour change on a quiver boundary", n.src_pos);
            auto c = std::get<ColouredComposition>(below);
            if (n.pos == 0) {
                int count = 0;
                for (size_t i = 0; i < c.size(); ++i)
                    if (c[i].colour != n.cc_to) {
                        n.pos = static_cast<int>(i) + 1;
                        ++count;
                    }
                if (count != 1)
                    throw ParseError("ambiguous colour change; use @pos", n.src_pos);
            }
            check_range(n.pos, 1);
            if (c[n.pos - 1].colour == n.cc_to)
                throw ParseError("block already has the target colour", n.src_pos);
            c[n.pos - 1].colour = n.cc_to;
            return Boundary(c);
        }
        case DiagramNode::Kind::mc_cross: {
            if (!std::holds_alternative<ColouredComposition>(below))
                throw ParseError("mx on a quiver boundary", n.src_pos);
            check_range(n.pos, 2);
            auto c = std::get<ColouredComposition>(below);
            if (c[n.pos - 1].colour == c[n.pos].colour)
                throw ParseError("mx needs mixed colours", n.src_pos);
            std::swap(c[n.pos - 1], c[n.pos]);
            return Boundary(c);
        }
    }
    throw Error("unreachable");
}

} // namespace

Diagram parse_diagram(const std::string& text) {
    // split into statements on ';'
    std::vector<std::pair<std::string, size_t>> stmts;
    size_t start = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ';') {
            std::string part = text.substr(start, i - start);
            bool blank = true;
            for (char ch : part)
                if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
            if (!blank) stmts.emplace_back(part, start);
            start = i + 1;
        }
    }
    if (stmts.empty()) throw ParseError("empty diagram", 0);

    std::vector<RawNode> raw;
    for (const auto& [s, off] : stmts) raw.push_back(parse_statement(s, off));

    // bottom boundary
    Boundary below;
    if (raw[0].node.kind == DiagramNode::Kind::idem) {
        below = *raw[0].declared;
    } else if (raw[0].node.kind == DiagramNode::Kind::split && raw[0].node.pos == 0) {
        const BlockTok& par = *raw[0].parent;
        below = par.coloured ? Boundary(ColouredComposition{par.cb}) : Boundary(IComposition{par.dv});
    } else if (raw[0].node.kind == DiagramNode::Kind::merge && raw[0].node.pos == 0) {
        const BlockTok &l = *raw[0].left, &r = *raw[0].right;
        if (l.coloured != r.coloured) throw ParseError("mixed block kinds", raw[0].node.src_pos);
        below = l.coloured ? Boundary(ColouredComposition{l.cb, r.cb})
                           : Boundary(IComposition{l.dv, r.dv});
    } else {
        throw ParseError("diagram must start with id[..] or a whole-boundary split/merge",
                         raw[0].node.src_pos);
    }

    Diagram dg;
    dg.source = below;
    for (auto& rn : raw) {
        rn.node.below = below;
        below = step_boundary(below, rn.node, rn);
        rn.node.above = below;
        dg.nodes.push_back(rn.node);
    }
    dg.target = below;
    return dg;
}

Operator eval_diagram(const Diagram& dg, SchurVariant variant, bool allow_conjectural) {
    Operator op = identity_op(dg.source);
    for (const auto& n : dg.nodes) {
        Operator gen;
        if (std::holds_alternative<IComposition>(n.below)) {
            const auto& c = std::get<IComposition>(n.below);
            switch (n.kind) {
                case DiagramNode::Kind::idem: gen = kron_idem(variant, c); break;
                case DiagramNode::Kind::split:
                    gen = kron_split(variant, c, n.pos, *n.ileft, *n.iright);
                    break;
                case DiagramNode::Kind::merge: gen = kron_merge(variant, c, n.pos); break;
                case DiagramNode::Kind::cross: gen = kron_crossing(variant, c, n.pos); break;
                case DiagramNode::Kind::coupon:
                    gen = kron_coupon(variant, c, parse_poly(boundary_sig(n.below), n.coupon_text));
                    break;
                default: throw Error("node not available on quiver boundaries");
            }
        } else {
            const auto& c = std::get<ColouredComposition>(n.below);
            switch (n.kind) {
                case DiagramNode::Kind::idem: gen = curve_idem(c); break;
                case DiagramNode::Kind::split:
                    gen = curve_split(c, n.pos, n.cleft, n.cright);
                    break;
                case DiagramNode::Kind::merge: gen = curve_merge(c, n.pos); break;
                case DiagramNode::Kind::cross: gen = curve_crossing(c, n.pos); break;
                case DiagramNode::Kind::coupon:
                    gen = curve_coupon(c, parse_poly(boundary_sig(n.below), n.coupon_text));
                    break;
                case DiagramNode::Kind::colour_change: gen = colour_change(c, n.pos, n.cc_to); break;
                case DiagramNode::Kind::mc_cross:
                    if (c[n.pos - 1].size == 1 && c[n.pos].size == 1)
                        gen = mc_cross_thin(c, n.pos);
                    else
                        gen = mc_cross_thick(c, n.pos, allow_conjectural);
                    break;
            }
        }
        op = compose(gen, op);
    }
    return op;
}

// ---- psi elements ----

namespace {

void append_isplit_chain(std::vector<DiagramNode>& nodes, IComposition& cur,
                         const IComposition& fine) {
    size_t gi = 0;
    IComposition coarse = cur;
    for (size_t bi = 0; bi < coarse.size(); ++bi) {
        DimVec remaining = coarse[bi];
        size_t pos = gi;
        while (fine[gi] != remaining) {
            DimVec first = fine[gi];
            DiagramNode n;
            n.kind = DiagramNode::Kind::split;
            n.pos = static_cast<int>(pos) + 1;
            n.ileft = first;
            n.iright = remaining - first;
            n.below = cur;
            cur[pos] = first;
            cur.insert(cur.begin() + pos + 1, remaining - first);
            n.above = cur;
            nodes.push_back(std::move(n));
            remaining = remaining - first;
            ++gi;
            ++pos;
        }
        ++gi;
    }
}

void append_imerge_chain(std::vector<DiagramNode>& nodes, IComposition& cur,
                         const IComposition& coarse) {
    size_t pos = 0;
    for (size_t bi = 0; bi < coarse.size(); ++bi) {
        DimVec acc = cur[pos];
        while (acc != coarse[bi]) {
            DiagramNode n;
            n.kind = DiagramNode::Kind::merge;
            n.pos = static_cast<int>(pos) + 1;
            n.below = cur;
            acc = acc + cur[pos + 1];
            cur[pos] = acc;
            cur.erase(cur.begin() + pos + 1);
            n.above = cur;
            nodes.push_back(std::move(n));
        }
        ++pos;
    }
}

} // namespace

IComposition psi_coupon_boundary(const ColouredCosetDatum& datum) { return datum.beta_p; }

Diagram psi_element(const ColouredCosetDatum& datum, const Poly& P, const IComposition& beta,
                    const IComposition& gamma) {
    Diagram dg;
    dg.source = Boundary(beta);
    IComposition cur = beta;
    append_isplit_chain(dg.nodes, cur, datum.beta_p);
    if (!(cur == datum.beta_p)) throw Error("psi: split chain mismatch");

    DiagramNode coupon;
    coupon.kind = DiagramNode::Kind::coupon;
    coupon.coupon_text = P.str();
    coupon.below = Boundary(cur);
    coupon.above = Boundary(cur);
    dg.nodes.push_back(std::move(coupon));

    const auto& word = datum.word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        DiagramNode n;
        n.kind = DiagramNode::Kind::cross;
        n.pos = *it;
        n.below = Boundary(cur);
        std::swap(cur[*it - 1], cur[*it]);
        n.above = Boundary(cur);
        dg.nodes.push_back(std::move(n));
    }
    if (!(cur == datum.gamma_p)) throw Error("psi: crossing chain does not reach gamma'");

    append_imerge_chain(dg.nodes, cur, gamma);
    if (!(cur == gamma)) throw Error("psi: merge chain mismatch");
    dg.target = Boundary(gamma);
    return dg;
}

ColouredComposition psi_coupon_colouring(const CosetDatum& datum, const ColouredComposition& cla,
                                         const ColouredComposition& cmu) {
    ColouredComposition out;
    for (size_t i = 0; i < datum.cells.size(); ++i)
        for (size_t j = 0; j < datum.cells[i].size(); ++j) {
            int sz = datum.cells[i][j];
            if (sz == 0) continue;
            bool both_tau =
                cla[i].colour == Colour::tau && cmu[j].colour == Colour::tau;
            out.push_back({sz, both_tau ? Colour::tau : Colour::eps});
        }
    return out;
}

Diagram psi_element_curve(const CosetDatum& datum, const Poly& P, const ColouredComposition& cla,
                          const ColouredComposition& cmu) {
    Diagram dg;
    dg.source = Boundary(cla);

    // Cells in row-major order with their two end colours.
    struct Cell {
        int size;
        Colour bottom, top;
    };
    std::vector<Cell> cells;
    for (size_t i = 0; i < datum.cells.size(); ++i)
        for (size_t j = 0; j < datum.cells[i].size(); ++j)
            if (datum.cells[i][j] > 0)
                cells.push_back({datum.cells[i][j], cla[i].colour, cmu[j].colour});

    // Bottom splits cla -> cla' (row colours).
    ColouredComposition cur = cla;
    {
        ColouredComposition fine;
        for (const auto& c : cells) fine.push_back({c.size, c.bottom});
        size_t gi = 0;
        ColouredComposition coarse = cur;
        for (size_t bi = 0; bi < coarse.size(); ++bi) {
            int remaining = coarse[bi].size;
            size_t pos = gi;
            while (fine[gi].size != remaining) {
                DiagramNode n;
                n.kind = DiagramNode::Kind::split;
                n.pos = static_cast<int>(pos) + 1;
                n.cleft = fine[gi].size;
                n.cright = remaining - fine[gi].size;
                n.below = Boundary(cur);
                cur[pos].size = fine[gi].size;
                cur.insert(cur.begin() + pos + 1, {remaining - fine[gi].size, coarse[bi].colour});
                n.above = Boundary(cur);
                dg.nodes.push_back(std::move(n));
                remaining -= fine[gi].size;
                ++gi;
                ++pos;
            }
            ++gi;
        }
    }

    // Bottom-side colour changes: cells with an epsilon bottom end and a tau
    // top end turn tau before the coupon.
    std::vector<Colour> region(cells.size());
    for (size_t t = 0; t < cells.size(); ++t) {
        region[t] = (cells[t].bottom == Colour::eps && cells[t].top == Colour::eps)
                        ? Colour::eps
                        : Colour::tau;
        if (cells[t].bottom == Colour::eps && region[t] == Colour::tau) {
            DiagramNode n;
            n.kind = DiagramNode::Kind::colour_change;
            n.pos = static_cast<int>(t) + 1;
            n.cc_to = Colour::tau;
            n.below = Boundary(cur);
            cur[t].colour = Colour::tau;
            n.above = Boundary(cur);
            dg.nodes.push_back(std::move(n));
        }
    }

    // Coupon between the changes and the crossings.
    DiagramNode coupon;
    coupon.kind = DiagramNode::Kind::coupon;
    coupon.coupon_text = P.str();
    coupon.below = Boundary(cur);
    coupon.above = Boundary(cur);
    dg.nodes.push_back(std::move(coupon));

    // Crossings along the block word.
    std::vector<size_t> order(cells.size()); // order[t] = cell at position t
    for (size_t t = 0; t < cells.size(); ++t) order[t] = t;
    const auto& word = datum.word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int p = *it;
        DiagramNode n;
        n.kind = cur[p - 1].colour == cur[p].colour ? DiagramNode::Kind::cross
                                                    : DiagramNode::Kind::mc_cross;
        n.pos = p;
        n.below = Boundary(cur);
        std::swap(cur[p - 1], cur[p]);
        std::swap(order[p - 1], order[p]);
        n.above = Boundary(cur);
        dg.nodes.push_back(std::move(n));
    }

    // Top-side colour changes: cells with a tau bottom and an epsilon top.
    for (size_t t = 0; t < cells.size(); ++t) {
        size_t cell = order[t];
        if (cells[cell].top == Colour::eps && region[cell] == Colour::tau) {
            DiagramNode n;
            n.kind = DiagramNode::Kind::colour_change;
            n.pos = static_cast<int>(t) + 1;
            n.cc_to = Colour::eps;
            n.below = Boundary(cur);
            cur[t].colour = Colour::eps;
            n.above = Boundary(cur);
            dg.nodes.push_back(std::move(n));
        }
    }

    // Merge cmu' -> cmu.
    {
        size_t pos = 0;
        for (size_t bi = 0; bi < cmu.size(); ++bi) {
            int acc = cur[pos].size;
            while (acc != cmu[bi].size) {
                DiagramNode n;
                n.kind = DiagramNode::Kind::merge;
                n.pos = static_cast<int>(pos) + 1;
                n.below = Boundary(cur);
                acc += cur[pos + 1].size;
                cur[pos].size = acc;
                cur.erase(cur.begin() + pos + 1);
                n.above = Boundary(cur);
                dg.nodes.push_back(std::move(n));
            }
            if (cur[pos].colour != cmu[bi].colour) throw Error("psi: colour mismatch at the top");
            ++pos;
        }
    }
    dg.target = Boundary(cmu);
    return dg;
}

// ---- rank certification ----

namespace {

constexpr long kRankPrime = 2147483647; // 2^31 - 1

long mod_of(const Scalar& s) {
    Int num = s.numerator() % kRankPrime;
    Int den = s.denominator() % kRankPrime;
    if (den == 0) throw Error("rank: denominator divisible by the certification prime");
    Int inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Int(kRankPrime).get_mpz_t());
    Int r = (num * inv) % kRankPrime;
    if (r < 0) r += kRankPrime;
    return r.get_si();
}

long mulmod(long a, long b) { return static_cast<long>((__int128)a * b % kRankPrime); }

// Incremental kernel tracking: relations among the operators that survive
// every evaluation seen so far.
struct RelationSpace {
    size_t n;
    std::vector<std::vector<long>> basis; // rows: candidate relations mod p

    explicit RelationSpace(size_t n_) : n(n_) {
        basis.assign(n, std::vector<long>(n, 0));
        for (size_t i = 0; i < n; ++i) basis[i][i] = 1;
    }

    bool empty() const { return basis.empty(); }

    // Constrain by the evaluation images[i] (sparse coefficient maps).
    void constrain(const std::vector<std::map<Monomial, long>>& images) {
        if (basis.empty()) return;
        // w_r = sum_i r_i * images[i]; keep the kernel of r -> w_r.
        std::map<Monomial, size_t> colidx;
        for (const auto& im : images)
            for (const auto& [m, v] : im)
                if (v != 0) colidx.try_emplace(m, colidx.size());
        size_t cols = colidx.size();
        if (cols == 0) return;
        std::vector<std::vector<long>> w(basis.size(), std::vector<long>(cols, 0));
        for (size_t r = 0; r < basis.size(); ++r)
            for (size_t i = 0; i < n; ++i) {
                long ci = basis[r][i];
                if (ci == 0) continue;
                for (const auto& [m, v] : images[i]) {
                    size_t j = colidx[m];
                    w[r][j] = (w[r][j] + mulmod(ci, v)) % kRankPrime;
                }
            }
        // Eliminate (w | basis); rows with zero w-part span the new kernel.
        std::vector<std::vector<long>>& rel = basis;
        size_t rows = rel.size();
        size_t rank = 0;
        for (size_t col = 0; col < cols && rank < rows; ++col) {
            size_t piv = rank;
            while (piv < rows && w[piv][col] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(w[piv], w[rank]);
            std::swap(rel[piv], rel[rank]);
            Int inv;
            mpz_invert(inv.get_mpz_t(), Int(w[rank][col]).get_mpz_t(), Int(kRankPrime).get_mpz_t());
            long invl = inv.get_si();
            for (size_t i = 0; i < rows; ++i) {
                if (i == rank || w[i][col] == 0) continue;
                long f = mulmod(w[i][col], invl);
                for (size_t j = col; j < cols; ++j)
                    w[i][j] = ((w[i][j] - mulmod(f, w[rank][j])) % kRankPrime + kRankPrime) %
                              kRankPrime;
                for (size_t j = 0; j < n; ++j)
                    rel[i][j] = ((rel[i][j] - mulmod(f, rel[rank][j])) % kRankPrime + kRankPrime) %
                                kRankPrime;
            }
            ++rank;
        }
        rel.erase(rel.begin(), rel.begin() + static_cast<long>(rank));
    }
};

std::map<Monomial, long> to_mod(const Poly& p) {
    std::map<Monomial, long> out;
    for (const auto& [m, c] : p.terms()) {
        long v = mod_of(c);
        if (v != 0) out.emplace(m, v);
    }
    return out;
}

// Exact rank over Q of the full evaluation matrix of a group, used only when
// the mod-p pass is deficient.
long exact_group_rank(const std::vector<const Operator*>& ops, const std::vector<Poly>& basis) {
    std::map<std::pair<size_t, Monomial>, size_t> colidx;
    std::vector<std::map<size_t, Rat>> rows(ops.size());
    for (size_t b = 0; b < basis.size(); ++b)
        for (size_t i = 0; i < ops.size(); ++i) {
            Poly img = ops[i]->action(basis[b]);
            for (const auto& [m, c] : img.terms()) {
                auto [it, fresh] = colidx.try_emplace({b, m}, colidx.size());
                rows[i][it->second] = c.value();
            }
        }
    long rank = 0;
    std::vector<bool> used(rows.size(), false);
    for (size_t col = 0; col < colidx.size(); ++col) {
        size_t piv = rows.size();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i]) continue;
            auto it = rows[i].find(col);
            if (it != rows[i].end() && it->second != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows.size()) continue;
        used[piv] = true;
        ++rank;
        Rat pv = rows[piv][col];
        for (size_t i = 0; i < rows.size(); ++i) {
            if (used[i]) continue;
            auto it = rows[i].find(col);
            if (it == rows[i].end() || it->second == 0) continue;
            Rat f = it->second / pv;
            for (const auto& [j, v] : rows[piv]) {
                Rat& tgt = rows[i][j];
                tgt -= f * v;
            }
        }
    }
    return rank;
}

} // namespace

RankResult operator_rank(const std::vector<Operator>& ops, int D) {
    RankResult res;
    res.rows = static_cast<long>(ops.size());
    if (ops.empty()) {
        res.full = true;
        return res;
    }
    // Group by degree shift: operators of different shifts are independent
    // as soon as each group is, since evaluations on homogeneous inputs land
    // in disjoint degrees.
    std::map<int, std::vector<size_t>> groups;
    for (size_t i = 0; i < ops.size(); ++i) groups[ops[i].degshift].push_back(i);

    auto basis = boundary_basis(ops[0].source, D);
    long rank = 0;
    bool all_full = true;
    for (const auto& [shift, idxs] : groups) {
        RelationSpace rel(idxs.size());
        for (const auto& P : basis) {
            std::vector<std::map<Monomial, long>> images;
            images.reserve(idxs.size());
            for (size_t i : idxs) images.push_back(to_mod(ops[i].action(P)));
            rel.constrain(images);
            if (rel.empty()) break;
        }
        if (rel.empty()) {
            rank += static_cast<long>(idxs.size());
        } else {
            // The modular pass only bounds the rank from below; settle the
            // deficient group exactly.
            std::vector<const Operator*> group;
            for (size_t i : idxs) group.push_back(&ops[i]);
            long r = exact_group_rank(group, basis);
            rank += r;
            if (r < static_cast<long>(idxs.size())) all_full = false;
        }
    }
    res.rank = rank;
    res.full = all_full;
    return res;
}

IndependenceReport independence_report(const std::vector<Diagram>& elems, SchurVariant variant,
                                       int D) {
    IndependenceReport rep;
    rep.degree_bound = D;
    if (elems.empty()) {
        rep.verdict = "independent (empty set)";
        rep.independent = true;
        return rep;
    }
    std::vector<Operator> ops;
    for (const auto& dg : elems) {
        if (!boundary_eq(dg.source, elems[0].source) || !boundary_eq(dg.target, elems[0].target))
            throw BoundaryMismatch("independence report needs a common boundary pair");
        ops.push_back(eval_diagram(dg, variant));
        std::ostringstream name;
        name << "psi[" << boundary_str(dg.source) << "->" << boundary_str(dg.target)
             << ", shift " << ops.back().degshift << "]";
        rep.elements.push_back(name.str());
    }
    RankResult rk = operator_rank(ops, D);
    rep.rank = rk.rank;
    rep.independent = rk.full;
    std::ostringstream v;
    if (rk.full)
        v << "independent (certified at degree " << D << ")";
    else
        v << "not separated at " << D;
    rep.verdict = v.str();
    return rep;
}

} // namespace qschur
