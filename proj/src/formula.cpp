#include "mcube/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

#include "mcube/errors.hpp"

namespace mcube {

struct Formula::Node {
    Connective kind;
    std::string name;
    std::vector<Formula> children;
    std::size_t size;
    std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::atom(std::string name) {
    std::size_t h = mix(1, std::hash<std::string>{}(name));
    return Formula(std::make_shared<const Node>(Node{Connective::atom, std::move(name), {}, 1, h}));
}

Formula Formula::falsum() {
    static const Formula bot(std::make_shared<const Node>(Node{Connective::falsum, {}, {}, 1, 2}));
    return bot;
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    std::size_t size = 1 + lhs.size() + rhs.size();
    std::size_t h = mix(mix(3, lhs.hash()), rhs.hash());
    return Formula(std::make_shared<const Node>(
        Node{Connective::implies, {}, {std::move(lhs), std::move(rhs)}, size, h}));
}

Formula Formula::box(Formula operand) {
    std::size_t size = 1 + operand.size();
    std::size_t h = mix(4, operand.hash());
    return Formula(
        std::make_shared<const Node>(Node{Connective::box, {}, {std::move(operand)}, size, h}));
}

Connective Formula::kind() const noexcept { return node_->kind; }
std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

const std::string& Formula::name() const {
    if (!is_atom()) throw std::logic_error("name() on a non-atom formula");
    return node_->name;
}

const Formula& Formula::lhs() const {
    if (!is_implies()) throw std::logic_error("lhs() on a non-implication");
    return node_->children[0];
}

const Formula& Formula::rhs() const {
    if (!is_implies()) throw std::logic_error("rhs() on a non-implication");
    return node_->children[1];
}

const Formula& Formula::operand() const {
    if (!is_box()) throw std::logic_error("operand() on a non-box formula");
    return node_->children[0];
}

bool operator==(const Formula& a, const Formula& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size ||
        a.node_->kind != b.node_->kind)
        return false;
    if (a.node_->kind == Connective::atom) return a.node_->name == b.node_->name;
    const auto& ca = a.node_->children;
    const auto& cb = b.node_->children;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (!(ca[i] == cb[i])) return false;
    return true;
}

Formula neg(const Formula& a) { return Formula::implies(a, Formula::falsum()); }
Formula dia(const Formula& a) { return neg(Formula::box(neg(a))); }
Formula conj(const Formula& a, const Formula& b) { return neg(Formula::implies(a, neg(b))); }
Formula disj(const Formula& a, const Formula& b) { return Formula::implies(neg(a), b); }

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { lparen, rparen, bang, box, diamond, amp, bar, arrow, bot, ident, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view s, bool allow_metavariables) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        auto two = [&](char next) { return i + 1 < s.size() && s[i + 1] == next; };
        if (c == '(') {
            out.push_back({Tok::lparen, "(", start});
            ++i;
        } else if (c == ')') {
            out.push_back({Tok::rparen, ")", start});
            ++i;
        } else if (c == '!') {
            out.push_back({Tok::bang, "!", start});
            ++i;
        } else if (c == '&') {
            out.push_back({Tok::amp, "&", start});
            ++i;
        } else if (c == '|') {
            out.push_back({Tok::bar, "|", start});
            ++i;
        } else if (c == '[' && two(']')) {
            out.push_back({Tok::box, "[]", start});
            i += 2;
        } else if (c == '<' && two('>')) {
            out.push_back({Tok::diamond, "<>", start});
            i += 2;
        } else if (c == '-' && two('>')) {
            out.push_back({Tok::arrow, "->", start});
            i += 2;
        } else if (std::islower(static_cast<unsigned char>(c)) ||
                   (allow_metavariables && std::isupper(static_cast<unsigned char>(c)))) {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string word(s.substr(start, i - start));
            out.push_back({word == "bot" ? Tok::bot : Tok::ident, word, start});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Formula parse_all() {
        Formula f = imp();
        if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    Formula imp() {
        Formula left = disjunction();
        if (peek().kind == Tok::arrow) {
            next();
            return Formula::implies(left, imp());
        }
        return left;
    }

    Formula disjunction() {
        Formula left = conjunction();
        while (peek().kind == Tok::bar) {
            next();
            left = disj(left, conjunction());
        }
        return left;
    }

    Formula conjunction() {
        Formula left = unary();
        while (peek().kind == Tok::amp) {
            next();
            left = conj(left, unary());
        }
        return left;
    }

    Formula unary() {
        const Token& t = next();
        switch (t.kind) {
            case Tok::bang: return neg(unary());
            case Tok::box: return Formula::box(unary());
            case Tok::diamond: return dia(unary());
            case Tok::bot: return Formula::falsum();
            case Tok::ident: return Formula::atom(t.text);
            case Tok::lparen: {
                Formula inner = imp();
                if (peek().kind != Tok::rparen) throw ParseError("expected ')'", peek().pos);
                next();
                return inner;
            }
            case Tok::end: throw ParseError("unexpected end of input", t.pos);
            default: throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text, bool allow_metavariables) {
    return Parser(lex(text, allow_metavariables)).parse_all();
}

// --------------------------------------------------------------- printing

namespace {

// Binding strength: prefix 4, & 3, | 2, -> 1.
struct Printed {
    std::string text;
    int prec;
};

std::string wrap(const Printed& p, int min_prec) {
    return p.prec >= min_prec ? p.text : "(" + p.text + ")";
}

Printed print_core(const Formula& f) {
    switch (f.kind()) {
        case Connective::atom: return {f.name(), 5};
        case Connective::falsum: return {"bot", 5};
        case Connective::box: return {"[]" + wrap(print_core(f.operand()), 4), 4};
        case Connective::implies:
            return {wrap(print_core(f.lhs()), 2) + " -> " + wrap(print_core(f.rhs()), 1), 1};
    }
    return {"", 0};
}

bool is_neg(const Formula& f) { return f.is_implies() && f.rhs().is_falsum(); }

Printed print_sugar(const Formula& f) {
    switch (f.kind()) {
        case Connective::atom: return {f.name(), 5};
        case Connective::falsum: return {"bot", 5};
        case Connective::box: return {"[]" + wrap(print_sugar(f.operand()), 4), 4};
        case Connective::implies: break;
    }
    const Formula& a = f.lhs();
    const Formula& b = f.rhs();
    if (b.is_falsum()) {
        if (a.is_box() && is_neg(a.operand()))
            return {"<>" + wrap(print_sugar(a.operand().lhs()), 4), 4};
        if (a.is_implies() && is_neg(a.rhs()))
            return {wrap(print_sugar(a.lhs()), 3) + " & " + wrap(print_sugar(a.rhs().lhs()), 4),
                    3};
        return {"!" + wrap(print_sugar(a), 4), 4};
    }
    bool diamond_lhs = is_neg(a) && a.lhs().is_box() && is_neg(a.lhs().operand());
    if (is_neg(a) && !diamond_lhs)
        return {wrap(print_sugar(a.lhs()), 2) + " | " + wrap(print_sugar(b), 3), 2};
    return {wrap(print_sugar(a), 2) + " -> " + wrap(print_sugar(b), 1), 1};
}

}  // namespace

std::string print(const Formula& f, bool resugar) {
    return resugar ? print_sugar(f).text : print_core(f).text;
}

// ------------------------------------------------------------ utilities

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case Connective::atom: out.insert(f.name()); break;
        case Connective::falsum: break;
        case Connective::box: collect_atoms(f.operand(), out); break;
        case Connective::implies:
            collect_atoms(f.lhs(), out);
            collect_atoms(f.rhs(), out);
            break;
    }
}

}  // namespace

std::vector<std::string> atoms(const Formula& f) {
    std::set<std::string> names;
    collect_atoms(f, names);
    return {names.begin(), names.end()};
}

Formula instantiate(const Formula& schema, const std::map<std::string, Formula>& binding) {
    switch (schema.kind()) {
        case Connective::atom: {
            auto it = binding.find(schema.name());
            if (it == binding.end())
                throw UnboundMetavariable("no binding for metavariable '" + schema.name() + "'");
            return it->second;
        }
        case Connective::falsum: return schema;
        case Connective::box: return Formula::box(instantiate(schema.operand(), binding));
        case Connective::implies:
            return Formula::implies(instantiate(schema.lhs(), binding),
                                    instantiate(schema.rhs(), binding));
    }
    return schema;
}

bool closure_less(const Formula& a, const Formula& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    return print(a) < print(b);
}

// --------------------------------------------------------------- closure

Closure::Closure(std::vector<Formula> ordered) : formulas_(std::move(ordered)) {
    links_.reserve(formulas_.size());
    for (std::size_t i = 0; i < formulas_.size(); ++i) {
        const Formula& f = formulas_[i];
        if (!index_.emplace(f, i).second)
            throw std::invalid_argument("duplicate closure member " + print(f));
        auto position = [&](const Formula& child) {
            auto it = index_.find(child);
            if (it == index_.end() || it->second >= i)
                throw MissingSubformula("subformula " + print(child) + " of " + print(f) +
                                        " does not precede it in the closure");
            return static_cast<int>(it->second);
        };
        if (f.is_implies())
            links_.emplace_back(position(f.lhs()), position(f.rhs()));
        else if (f.is_box())
            links_.emplace_back(position(f.operand()), -1);
        else
            links_.emplace_back(-1, -1);
    }
}

std::optional<std::size_t> Closure::index_of(const Formula& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Closure Closure::with(const Formula& f) const {
    std::vector<Formula> next = formulas_;
    next.push_back(f);
    return Closure(std::move(next));
}

Closure Closure::without_last() const {
    std::vector<Formula> next = formulas_;
    if (!next.empty()) next.pop_back();
    return Closure(std::move(next));
}

std::vector<std::string> Closure::atom_names() const {
    std::vector<std::string> out;
    for (const Formula& f : formulas_)
        if (f.is_atom()) out.push_back(f.name());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void collect(const Formula& f, std::unordered_map<Formula, bool, FormulaHash>& seen,
             std::vector<Formula>& out) {
    if (!seen.emplace(f, true).second) return;
    out.push_back(f);
    if (f.is_implies()) {
        collect(f.lhs(), seen, out);
        collect(f.rhs(), seen, out);
    } else if (f.is_box()) {
        collect(f.operand(), seen, out);
    }
}

}  // namespace

Closure closure(std::span<const Formula> roots) {
    std::unordered_map<Formula, bool, FormulaHash> seen;
    std::vector<Formula> all;
    for (const Formula& r : roots) collect(r, seen, all);
    std::vector<std::size_t> order(all.size());
    std::vector<std::string> printed(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        order[i] = i;
        printed[i] = print(all[i]);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (all[a].size() != all[b].size()) return all[a].size() < all[b].size();
        if (all[a].kind() != all[b].kind()) return all[a].kind() < all[b].kind();
        return printed[a] < printed[b];
    });
    std::vector<Formula> sorted;
    sorted.reserve(all.size());
    for (std::size_t i : order) sorted.push_back(all[i]);
    return Closure(std::move(sorted));
}

Closure closure(std::initializer_list<Formula> roots) {
    std::vector<Formula> v(roots);
    return closure(std::span<const Formula>(v));
}

}  // namespace mcube
