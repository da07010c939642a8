#include "grammar.hpp"

#include <cctype>

namespace wh {

std::string print_bar_word(const BarWord& w)
{
    std::string s;
    for (int i : w.idx)
        s += "bQ^" + std::to_string(i) + " ";
    s += "i";
    return s;
}

std::string print_bar_sum(const BarSum& sum)
{
    if (sum.empty())
        return "0";
    std::string s;
    for (const BarWord& w : sum) {
        if (!s.empty())
            s += " + ";
        s += print_bar_word(w);
    }
    return s;
}

std::string print_wreath_word(const WreathWord& w)
{
    std::string s;
    for (size_t p = 0; p < w.idx.size(); ++p) {
        s += "Q^" + std::to_string(w.idx[p]) + " ";
        s += p + 1 < w.idx.size() ? "w " : "";
    }
    s += "i";
    return s;
}

std::string print_wreath_sum(const WreathSum& sum)
{
    if (sum.empty())
        return "0";
    std::string s;
    for (const WreathWord& w : sum) {
        if (!s.empty())
            s += " + ";
        s += print_wreath_word(w);
    }
    return s;
}

static std::string print_gen(const GenClass& g)
{
    std::string s;
    if (g.k > 0)
        s += "s^" + std::to_string(g.k) + " ";
    for (int i : g.bars.idx)
        s += "bQ^" + std::to_string(i) + " ";
    s += "i";
    return s;
}

std::string print_monomial(const DLMonomial& m)
{
    std::string s;
    for (int j : m.ops)
        s += "Q^" + std::to_string(j) + " ";
    s += print_gen(m.base);
    return s;
}

std::string print_element(const AlgebraElement& x)
{
    if (x.is_zero())
        return "0";
    std::string s;
    for (const Product& p : x.terms) {
        if (!s.empty())
            s += " + ";
        if (p.factors.empty()) {
            s += "1";
            continue;
        }
        for (size_t f = 0; f < p.factors.size(); ++f) {
            if (f > 0)
                s += " * ";
            s += print_monomial(p.factors[f]);
        }
    }
    return s;
}

std::string print_gen_sum(const GenSum& sum)
{
    if (sum.empty())
        return "0";
    std::string s;
    for (const GenClass& g : sum) {
        if (!s.empty())
            s += " + ";
        s += print_gen(g);
    }
    return s;
}

namespace {

enum class Tok { Plus, Star, Q, BQ, Sus, Iota, Wr, One, Zero, End };

struct Token {
    Tok kind;
    int value = 0;
    size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take()
    {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance()
    {
        while (p_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[p_])))
            ++p_;
        tok_.pos = p_ + 1;
        if (p_ >= text_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        char c = text_[p_];
        if (c == '+') {
            tok_.kind = Tok::Plus;
            ++p_;
        } else if (c == '*') {
            tok_.kind = Tok::Star;
            ++p_;
        } else if (c == '0' && !more_alnum(p_ + 1)) {
            tok_.kind = Tok::Zero;
            ++p_;
        } else if (c == '1' && !more_alnum(p_ + 1)) {
            tok_.kind = Tok::One;
            ++p_;
        } else if (c == 'i' && !more_alnum(p_ + 1)) {
            tok_.kind = Tok::Iota;
            ++p_;
        } else if (c == 'w' && !more_alnum(p_ + 1)) {
            tok_.kind = Tok::Wr;
            ++p_;
        } else if (text_.compare(p_, 3, "bQ^") == 0) {
            p_ += 3;
            tok_.kind = Tok::BQ;
            tok_.value = integer();
        } else if (text_.compare(p_, 2, "Q^") == 0) {
            p_ += 2;
            tok_.kind = Tok::Q;
            tok_.value = integer();
        } else if (text_.compare(p_, 2, "s^") == 0) {
            p_ += 2;
            tok_.kind = Tok::Sus;
            tok_.value = integer();
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'",
                             p_ + 1);
        }
    }

    bool more_alnum(size_t q) const
    {
        return q < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[q])) || text_[q] == '^');
    }

    int integer()
    {
        size_t start = p_;
        if (p_ < text_.size() && text_[p_] == '-')
            ++p_;
        size_t digits = p_;
        while (p_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p_])))
            ++p_;
        if (p_ == digits)
            throw ParseError("expected an integer index", start + 1);
        return std::stoi(text_.substr(start, p_ - start));
    }

    const std::string& text_;
    size_t p_ = 0;
    Token tok_;
};

/* ops, suspension count, bar indices of one monomial (not yet normalized) */
struct RawMonomial {
    std::vector<int> ops;
    int k = 0;
    std::vector<int> bars;
    bool unit = false;
};

RawMonomial parse_raw_monomial(Lexer& lex)
{
    RawMonomial m;
    if (lex.peek().kind == Tok::One) {
        lex.take();
        m.unit = true;
        return m;
    }
    while (lex.peek().kind == Tok::Q)
        m.ops.push_back(lex.take().value);
    bool saw_sus = false;
    if (lex.peek().kind == Tok::Sus) {
        Token t = lex.take();
        if (t.value < 0)
            throw ParseError("suspension count must be nonnegative", t.pos);
        m.k = t.value;
        saw_sus = true;
    }
    while (lex.peek().kind == Tok::BQ)
        m.bars.push_back(lex.take().value);
    Token t = lex.take();
    if (t.kind != Tok::Iota)
        throw ParseError("expected 'i' to close the monomial", t.pos);
    if (!saw_sus && !m.bars.empty())
        throw ParseError("bar operations need a suspension block 's^k'", t.pos);
    if (saw_sus && static_cast<int>(m.bars.size()) != m.k)
        throw ParseError("suspension count " + std::to_string(m.k) + " needs exactly " +
                             std::to_string(m.k) + " bar operations",
                         t.pos);
    return m;
}

/* Normalizing interpretation: bar block to the admissible basis, then the
** Q prefix through instability/Adem/squares. */
AlgebraElement interpret(const RawMonomial& m, const BarOptions& opt)
{
    if (m.unit)
        return AlgebraElement::unit();
    AlgebraElement base;
    for (const BarWord& I : normalize_bar(BarWord{m.bars}, opt))
        base += AlgebraElement::from(GenClass{m.k, I});
    return apply_q_seq(m.ops, base);
}

}  // namespace

AlgebraElement parse_element(const std::string& text, const BarOptions& opt)
{
    Lexer lex(text);
    AlgebraElement out;
    if (lex.peek().kind == Tok::Zero) {
        lex.take();
        Token t = lex.take();
        if (t.kind != Tok::End)
            throw ParseError("trailing input after '0'", t.pos);
        return out;
    }
    for (;;) {
        AlgebraElement term = interpret(parse_raw_monomial(lex), opt);
        while (lex.peek().kind == Tok::Star) {
            lex.take();
            term = algebra_product(term, interpret(parse_raw_monomial(lex), opt));
        }
        out += term;
        Token t = lex.take();
        if (t.kind == Tok::End)
            break;
        if (t.kind != Tok::Plus)
            throw ParseError("expected '+', '*' or end of input", t.pos);
    }
    return out;
}

BarWord parse_bar_word(const std::string& text)
{
    Lexer lex(text);
    BarWord w;
    while (lex.peek().kind == Tok::BQ)
        w.idx.push_back(lex.take().value);
    Token t = lex.take();
    if (t.kind != Tok::Iota)
        throw ParseError("expected 'i' to close the bar word", t.pos);
    t = lex.take();
    if (t.kind != Tok::End)
        throw ParseError("trailing input after bar word", t.pos);
    return w;
}

WreathWord parse_wreath_word(const std::string& text)
{
    Lexer lex(text);
    WreathWord w;
    bool expect_q = lex.peek().kind == Tok::Q;
    while (expect_q) {
        Token t = lex.take();
        if (t.kind != Tok::Q)
            throw ParseError("expected 'Q^i' after wreath separator", t.pos);
        w.idx.push_back(t.value);
        if (lex.peek().kind == Tok::Wr) {
            lex.take();
            expect_q = true;
        } else
            expect_q = false;
    }
    Token t = lex.take();
    if (t.kind != Tok::Iota)
        throw ParseError("expected 'i' to close the wreath word", t.pos);
    t = lex.take();
    if (t.kind != Tok::End)
        throw ParseError("trailing input after wreath word", t.pos);
    return w;
}

}  // namespace wh
