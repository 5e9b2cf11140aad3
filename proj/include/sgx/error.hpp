// Exception hierarchy. Every sgx error derives from sgx::Error.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgx {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidToken : public Error {
public:
    explicit InvalidToken(const std::string& text) : Error("invalid token '" + text + "'"), text_(text) {}
    [[nodiscard]] const std::string& text() const noexcept { return text_; }

private:
    std::string text_;
};

class DuplicateLabel : public Error {
public:
    explicit DuplicateLabel(const std::string& label) : Error("duplicate label '" + label + "'"), label_(label) {}
    [[nodiscard]] const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

class DuplicateAtomInField : public Error {
public:
    DuplicateAtomInField(const std::string& rule, const std::string& atom)
        : Error("rule '" + rule + "' repeats atom '" + atom + "' within one field"), rule_(rule), atom_(atom) {}
    [[nodiscard]] const std::string& rule() const noexcept { return rule_; }
    [[nodiscard]] const std::string& atom() const noexcept { return atom_; }

private:
    std::string rule_;
    std::string atom_;
};

class UnknownLabel : public Error {
public:
    explicit UnknownLabel(const std::string& label) : Error("no rule labelled '" + label + "'") {}
};

struct SourceSpan {
    SourceSpan(std::size_t l, std::size_t c) : line(l < 1 ? 1 : l), column(c < 1 ? 1 : c) {}
    std::size_t line;   // 1-based
    std::size_t column; // 1-based
    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class SyntaxError : public Error {
public:
    SyntaxError(SourceSpan span, const std::string& message)
        : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message), span_(span) {}
    [[nodiscard]] const SourceSpan& span() const noexcept { return span_; }

private:
    SourceSpan span_;
};

class SignatureTooLarge : public Error {
public:
    SignatureTooLarge(std::size_t size, std::size_t cap)
        : Error("signature has " + std::to_string(size) + " atoms, exceeding the cap of " + std::to_string(cap))
        , size_(size)
        , cap_(cap) {}
    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t size_;
    std::size_t cap_;
};

class NotNonDisjunctive : public Error {
public:
    NotNonDisjunctive() : Error("program has a disjunctive rule") {}
};

class NotHorn : public Error {
public:
    NotHorn() : Error("program is not Horn") {}
};

class NotAModel : public Error {
public:
    NotAModel() : Error("interpretation is not a classical model of the program") {}
};

class ModelMismatch : public Error {
public:
    ModelMismatch() : Error("graph vertices differ from the interpretation") {}
};

class NotStable : public Error {
public:
    NotStable() : Error("interpretation is not a stable model of the program") {}
};

class AtomNotInModel : public Error {
public:
    explicit AtomNotInModel(const std::string& atom) : Error("atom '" + atom + "' is not in the model") {}
};

} // namespace sgx
