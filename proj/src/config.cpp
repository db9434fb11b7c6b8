/*
   Copyright 2026 the springer-lab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "springerlab/config.hpp"

#include <fstream>
#include <sstream>

#include "springerlab/errors.hpp"

namespace sl {

namespace {

struct Token {
    enum Kind { IDENT, INT, LBRACE, RBRACE, LBRACK, RBRACK, COMMA, EQUALS, END };
    Kind kind;
    std::string text;
    long long value = 0;
    int line = 0, col = 0;
};

class Lexer {
  public:
    Lexer(const std::string& text, const std::string& name)
        : text_(text), name_(name) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) {
            t.kind = Token::END;
            return t;
        }
        char c = text_[pos_];
        if (c == '{') return simple(Token::LBRACE);
        if (c == '}') return simple(Token::RBRACE);
        if (c == '[') return simple(Token::LBRACK);
        if (c == ']') return simple(Token::RBRACK);
        if (c == ',') return simple(Token::COMMA);
        if (c == '=') return simple(Token::EQUALS);
        if (c == '-' || (c >= '0' && c <= '9')) {
            std::size_t start = pos_;
            advance();
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
                advance();
            t.kind = Token::INT;
            t.text = text_.substr(start, pos_ - start);
            if (t.text == "-") fail(t, "stray '-'");
            t.value = std::stoll(t.text);
            return t;
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                advance();
            t.kind = Token::IDENT;
            t.text = text_.substr(start, pos_ - start);
            return t;
        }
        fail(t, std::string("unexpected character '") + c + "'");
        return t;  // unreachable
    }

    [[noreturn]] void fail(const Token& at, const std::string& msg) const {
        throw ConfigError(name_ + ":" + std::to_string(at.line) + ":" +
                          std::to_string(at.col) + ": " + msg);
    }

  private:
    Token simple(Token::Kind k) {
        Token t;
        t.kind = k;
        t.line = line_;
        t.col = col_;
        advance();
        return t;
    }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::string name_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
  public:
    Parser(const std::string& text, const std::string& name)
        : lex_(text, name), name_(name) {
        cur_ = lex_.next();
    }

    ExperimentConfig parse() {
        ExperimentConfig cfg;
        cfg.name = name_;
        bool field_seen = false;
        while (cur_.kind != Token::END) {
            Token key = expect(Token::IDENT, "a key");
            if (key.text == "field") {
                parse_field(cfg);
                field_seen = true;
            } else if (key.text == "branch") {
                parse_branch(cfg);
            } else if (key.text == "partition") {
                parse_partition(cfg);
            } else if (key.text == "window") {
                parse_window(cfg);
            } else if (key.text == "hermitian") {
                cfg.hermitian = parse_bool();
            } else if (key.text == "precision_ceiling") {
                cfg.precision_ceiling = parse_int(key);
            } else if (key.text == "budget") {
                cfg.budget = parse_int(key);
            } else if (key.text == "seed") {
                cfg.seed = static_cast<unsigned long long>(parse_int(key));
            } else {
                lex_.fail(key, "unknown key '" + key.text + "'");
            }
        }
        if (!field_seen) throw ConfigError(name_ + ": missing 'field' block");
        if (cfg.branches.empty())
            throw ConfigError(name_ + ": at least one 'branch' block is required");
        return cfg;
    }

  private:
    Token expect(Token::Kind k, const std::string& what) {
        if (cur_.kind != k) lex_.fail(cur_, "expected " + what);
        Token t = cur_;
        cur_ = lex_.next();
        return t;
    }
    bool accept(Token::Kind k) {
        if (cur_.kind == k) {
            cur_ = lex_.next();
            return true;
        }
        return false;
    }
    long parse_int(const Token& key) {
        expect(Token::EQUALS, "'=' after '" + key.text + "'");
        Token v = expect(Token::INT, "an integer");
        return static_cast<long>(v.value);
    }
    bool parse_bool() {
        expect(Token::EQUALS, "'='");
        Token v = expect(Token::IDENT, "'true' or 'false'");
        if (v.text == "true") return true;
        if (v.text == "false") return false;
        lex_.fail(v, "expected 'true' or 'false'");
    }
    std::vector<long> parse_list() {
        expect(Token::LBRACK, "'['");
        std::vector<long> out;
        if (accept(Token::RBRACK)) return out;
        for (;;) {
            Token v = expect(Token::INT, "an integer");
            out.push_back(static_cast<long>(v.value));
            if (accept(Token::RBRACK)) break;
            expect(Token::COMMA, "',' or ']'");
        }
        return out;
    }

    void parse_field(ExperimentConfig& cfg) {
        expect(Token::LBRACE, "'{'");
        while (!accept(Token::RBRACE)) {
            Token key = expect(Token::IDENT, "'p' or 'e'");
            if (key.text == "p")
                cfg.p = static_cast<unsigned>(parse_int(key));
            else if (key.text == "e")
                cfg.e = static_cast<unsigned>(parse_int(key));
            else
                lex_.fail(key, "unknown field key '" + key.text + "'");
        }
    }

    void parse_branch(ExperimentConfig& cfg) {
        expect(Token::LBRACE, "'{'");
        BranchConfig b;
        bool gamma_seen = false;
        while (!accept(Token::RBRACE)) {
            Token key = expect(Token::IDENT, "'n' or 'gamma'");
            if (key.text == "n") {
                b.n = parse_int(key);
            } else if (key.text == "gamma") {
                expect(Token::LBRACE, "'{'");
                while (!accept(Token::RBRACE)) {
                    Token gk = expect(Token::IDENT, "'plain' or 'eps'");
                    expect(Token::EQUALS, "'='");
                    if (gk.text == "plain")
                        b.plain = parse_list();
                    else if (gk.text == "eps")
                        b.eps = parse_list();
                    else
                        lex_.fail(gk, "unknown gamma key '" + gk.text + "'");
                }
                gamma_seen = true;
            } else {
                lex_.fail(key, "unknown branch key '" + key.text + "'");
            }
        }
        if (!gamma_seen)
            throw ConfigError(name_ + ": branch without a gamma block");
        cfg.branches.push_back(std::move(b));
    }

    void parse_partition(ExperimentConfig& cfg) {
        expect(Token::LBRACE, "'{'");
        std::vector<long> left, right;
        while (!accept(Token::RBRACE)) {
            Token key = expect(Token::IDENT, "'left' or 'right'");
            expect(Token::EQUALS, "'='");
            if (key.text == "left")
                left = parse_list();
            else if (key.text == "right")
                right = parse_list();
            else
                lex_.fail(key, "unknown partition key '" + key.text + "'");
        }
        auto fix = [&](const std::vector<long>& ids) {
            std::vector<std::size_t> out;
            for (long v : ids) {
                if (v < 1)
                    throw ConfigError(name_ + ": partition ids are 1-based");
                out.push_back(static_cast<std::size_t>(v - 1));
            }
            return out;
        };
        cfg.partitions.emplace_back(fix(left), fix(right));
    }

    void parse_window(ExperimentConfig& cfg) {
        expect(Token::LBRACE, "'{'");
        while (!accept(Token::RBRACE)) {
            Token key = expect(Token::IDENT, "'n' or 'extra'");
            if (key.text == "n")
                cfg.window_n = parse_int(key);
            else if (key.text == "extra")
                cfg.window_extra = parse_int(key);
            else
                lex_.fail(key, "unknown window key '" + key.text + "'");
        }
    }

    Lexer lex_;
    std::string name_;
    Token cur_;
};

}  // namespace

ExperimentConfig parse_config_text(const std::string& text, const std::string& name) {
    Parser p(text, name);
    return p.parse();
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

BuiltDatum build_datum(const ExperimentConfig& cfg) {
    if (cfg.p == 0) throw ConfigError(cfg.name + ": field p is missing");
    if (cfg.p % 2 == 0)
        throw ConfigError(cfg.name + ": even characteristic is rejected");

    BuiltDatum out;
    out.base_field = std::make_shared<Field>(cfg.p, cfg.e);

    const Field* k = nullptr;
    if (cfg.hermitian) {
        out.ext = std::make_shared<QuadExt>(out.base_field);
        k = &out.ext->ext();
    } else {
        k = out.base_field.get();
    }

    std::vector<Branch> branches;
    for (std::size_t i = 0; i < cfg.branches.size(); ++i) {
        const BranchConfig& bc = cfg.branches[i];
        if (bc.n < 1)
            throw ConfigError(cfg.name + ": branch " + std::to_string(i + 1) +
                              " has n < 1");
        std::size_t len = std::max(bc.plain.size(), bc.eps.size());
        std::vector<Field::Elt> coeffs(len, 0);
        for (std::size_t e = 0; e < len; ++e) {
            long pl = e < bc.plain.size() ? bc.plain[e] : 0;
            long ep = e < bc.eps.size() ? bc.eps[e] : 0;
            if (cfg.hermitian) {
                if (pl % static_cast<long>(cfg.p) != 0)
                    throw ConfigError(cfg.name + ": branch " + std::to_string(i + 1) +
                                      " violates the trace-zero hypothesis: plain "
                                      "part of a hermitian gamma must vanish");
                Field::Elt b = out.ext->embed(out.base_field->from_int(ep));
                coeffs[e] = k->mul(out.ext->epsilon(), b);
            } else {
                if (ep != 0)
                    throw ConfigError(cfg.name + ": eps coefficients need "
                                      "hermitian = true");
                coeffs[e] = k->from_int(pl);
            }
        }
        Branch b;
        b.n = static_cast<unsigned>(bc.n);
        b.gamma = Series(k, static_cast<int>(i), 0, std::move(coeffs));
        branches.push_back(std::move(b));
    }

    std::shared_ptr<const Field> field_for_datum =
        cfg.hermitian ? out.ext->ext_ptr() : out.base_field;
    out.datum = std::make_shared<SpectralDatum>(field_for_datum, std::move(branches),
                                                cfg.precision_ceiling);

    for (const auto& [l, rgt] : cfg.partitions) {
        for (auto i : l)
            if (i >= cfg.branches.size())
                throw ConfigError(cfg.name + ": partition id out of range");
        for (auto i : rgt)
            if (i >= cfg.branches.size())
                throw ConfigError(cfg.name + ": partition id out of range");
    }
    return out;
}

}  // namespace sl
