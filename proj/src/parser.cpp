#include <sgx/parser.hpp>

#include <algorithm>
#include <cctype>
#include <optional>

namespace sgx {
namespace {

enum class Tok { Ident, Colon, If, Dot, Comma, Or, LBrace, RBrace, False, End };

struct Token {
    Tok         kind;
    std::string text;
    SourceSpan  span;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        SourceSpan at{line_, col_};
        if (pos_ >= text_.size()) {
            return {Tok::End, "", at};
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                advance();
            }
            return {Tok::Ident, std::string(text_.substr(start, pos_ - start)), at};
        }
        if (c == '#') {
            if (text_.substr(pos_, 6) == "#false") {
                for (int i = 0; i < 6; ++i) {
                    advance();
                }
                return {Tok::False, "#false", at};
            }
            throw SyntaxError(at, "unknown directive");
        }
        advance();
        switch (c) {
            case ':':
                if (pos_ < text_.size() && text_[pos_] == '-') {
                    advance();
                    return {Tok::If, ":-", at};
                }
                return {Tok::Colon, ":", at};
            case '.': return {Tok::Dot, ".", at};
            case ',': return {Tok::Comma, ",", at};
            case ';':
            case '|': return {Tok::Or, std::string(1, c), at};
            case '{': return {Tok::LBrace, "{", at};
            case '}': return {Tok::RBrace, "}", at};
            default: throw SyntaxError(at, std::string("unexpected character '") + c + "'");
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        }
        else {
            ++col_;
        }
        ++pos_;
    }
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            }
            else {
                break;
            }
        }
    }

    std::string_view text_;
    size_t           pos_  = 0;
    size_t           line_ = 1;
    size_t           col_  = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { shift(); }

    bool at_end() const { return cur_.kind == Tok::End; }

    Rule statement() {
        size_t                     line = cur_.span.line;
        std::optional<std::string> label;
        AtomList                   head;
        std::optional<Atom>        choice;
        bool                       explicit_false = false;

        // A leading identifier is a label if a ':' follows it.
        if (cur_.kind == Tok::Ident) {
            Token first = cur_;
            shift();
            if (cur_.kind == Tok::Colon) {
                label = token(first, "label");
                shift();
            }
            else {
                head.push_back(atom(first));
                head_tail(head);
            }
        }
        if (label.has_value() || (head.empty() && !choice)) {
            switch (cur_.kind) {
                case Tok::Ident:
                    head.push_back(atom(cur_));
                    shift();
                    head_tail(head);
                    break;
                case Tok::LBrace: choice = choice_head(); break;
                case Tok::False:
                    explicit_false = true;
                    shift();
                    break;
                default: break;
            }
        }

        AtomList pos;
        AtomList neg;
        AtomList dneg;
        bool     has_body = false;
        if (cur_.kind == Tok::If) {
            has_body = true;
            shift();
            body(pos, neg, dneg);
        }
        if (head.empty() && !choice && !explicit_false && !has_body) {
            fail(cur_.kind == Tok::Dot ? "empty statement" : "expected a rule head");
        }
        expect(Tok::Dot, "expected '.' at end of statement");

        Label lbl(label ? *label : "r_" + std::to_string(line));
        if (choice) {
            return expand_choice(std::move(lbl), *choice, std::move(pos), std::move(neg), std::move(dneg));
        }
        return Rule(std::move(lbl), std::move(head), std::move(pos), std::move(neg), std::move(dneg));
    }

private:
    void shift() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(cur_.span, msg); }

    void expect(Tok kind, const char* msg) {
        if (cur_.kind != kind) {
            fail(msg);
        }
        shift();
    }

    static std::string token(const Token& t, const char* what) {
        if (!is_token(t.text)) {
            throw SyntaxError(t.span, std::string("invalid ") + what + " '" + t.text + "'");
        }
        return t.text;
    }
    static Atom atom(const Token& t) { return Atom(token(t, "atom")); }

    void head_tail(AtomList& head) {
        while (cur_.kind == Tok::Or) {
            shift();
            if (cur_.kind != Tok::Ident) {
                fail("expected an atom after disjunction");
            }
            head.push_back(atom(cur_));
            shift();
        }
    }

    Atom choice_head() {
        shift(); // '{'
        if (cur_.kind != Tok::Ident) {
            fail("choice must contain exactly one atom");
        }
        Atom a = atom(cur_);
        shift();
        if (cur_.kind != Tok::RBrace) {
            fail("choice must contain exactly one atom");
        }
        shift();
        return a;
    }

    void body(AtomList& pos, AtomList& neg, AtomList& dneg) {
        for (;;) {
            if (cur_.kind != Tok::Ident) {
                fail("expected a body literal");
            }
            int negations = 0;
            while (cur_.kind == Tok::Ident && cur_.text == "not" && negations < 2) {
                ++negations;
                shift();
            }
            if (cur_.kind != Tok::Ident) {
                fail("expected an atom");
            }
            Atom a = atom(cur_);
            shift();
            (negations == 0 ? pos : negations == 1 ? neg : dneg).push_back(std::move(a));
            if (cur_.kind != Tok::Comma) {
                break;
            }
            shift();
        }
    }

    Lexer lex_;
    Token cur_{Tok::End, "", SourceSpan{1, 1}};
};

void join(std::string& out, const AtomList& atoms, const char* prefix, bool& first) {
    for (const Atom& a : atoms) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += prefix;
        out += a.name();
    }
}

} // namespace

Program parse_program(std::string_view text) {
    Parser            p(text);
    std::vector<Rule> rules;
    while (!p.at_end()) {
        rules.push_back(p.statement());
    }
    return validate_program(std::move(rules));
}

Rule parse_rule(std::string_view statement) {
    Parser p(statement);
    Rule   r = p.statement();
    if (!p.at_end()) {
        throw SyntaxError(SourceSpan{1, 1}, "expected a single statement");
    }
    return r;
}

Rule expand_choice(Label label, const Atom& choice, AtomList pos_body, AtomList neg_body, AtomList dneg_body) {
    if (std::find(dneg_body.begin(), dneg_body.end(), choice) == dneg_body.end()) {
        dneg_body.push_back(choice);
    }
    return Rule(std::move(label), AtomList{choice}, std::move(pos_body), std::move(neg_body), std::move(dneg_body));
}

std::string render_rule(const Rule& rule) {
    std::string out = rule.label().id() + ": ";
    if (rule.head().empty()) {
        out += "#false";
    }
    for (size_t i = 0; i < rule.head().size(); ++i) {
        out += (i ? " ; " : "") + rule.head()[i].name();
    }
    if (!rule.pos_body().empty() || !rule.neg_body().empty() || !rule.dneg_body().empty()) {
        out += " :- ";
        bool first = true;
        join(out, rule.pos_body(), "", first);
        join(out, rule.neg_body(), "not ", first);
        join(out, rule.dneg_body(), "not not ", first);
    }
    out += '.';
    return out;
}

std::string render_program(const Program& program) {
    std::string out;
    for (const Rule& r : program.rules()) {
        out += render_rule(r);
        out += '\n';
    }
    return out;
}

} // namespace sgx
