#include "coheyt/term.hpp"

#include <cctype>

namespace coheyt {

namespace {

struct parser {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        raise(errc::parse_error, what + " at offset " + std::to_string(pos));
    }

    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
    }

    term_ptr atom() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of term");
        char c = src[pos];
        if (c == '0') {
            ++pos;
            return std::make_shared<term>(term{term::kind::zero, "", nullptr, nullptr});
        }
        if (c == '1') {
            ++pos;
            return std::make_shared<term>(term{term::kind::one, "", nullptr, nullptr});
        }
        if (c == '(') {
            ++pos;
            term_ptr t = or_level();
            if (!eat(')')) fail("expected ')'");
            return t;
        }
        if (ident_start(c)) {
            std::size_t start = pos;
            while (pos < src.size() && ident_char(src[pos])) ++pos;
            return std::make_shared<term>(
                term{term::kind::var, std::string(src.substr(start, pos - start)), nullptr, nullptr});
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    // the right operand is built before the node: throwing inside a braced
    // temporary leaks the copied left subtree under gcc 11 (PR 66139)
    term_ptr sub_level() {
        term_ptr t = atom();
        while (eat('-')) {
            term_ptr rhs = atom();
            t = std::make_shared<term>(term{term::kind::diff, "", std::move(t), std::move(rhs)});
        }
        return t;
    }

    term_ptr and_level() {
        term_ptr t = sub_level();
        while (eat('&')) {
            term_ptr rhs = sub_level();
            t = std::make_shared<term>(term{term::kind::meet, "", std::move(t), std::move(rhs)});
        }
        return t;
    }

    term_ptr or_level() {
        term_ptr t = and_level();
        while (eat('|')) {
            term_ptr rhs = and_level();
            t = std::make_shared<term>(term{term::kind::join, "", std::move(t), std::move(rhs)});
        }
        return t;
    }
};

}

term_ptr parse_term(std::string_view src) {
    parser p{src};
    term_ptr t = p.or_level();
    p.skip_ws();
    if (p.pos != src.size()) p.fail("trailing input");
    return t;
}

downset eval_term(const algebra& L, const term& t, const term_env& env) {
    switch (t.k) {
    case term::kind::zero: return L.bot();
    case term::kind::one: return L.top();
    case term::kind::var: {
        auto it = env.find(t.name);
        if (it == env.end()) raise(errc::unbound_variable, t.name);
        if (it->second.parent.get() != L.pos().get())
            raise(errc::parent_mismatch, "binding for " + t.name + " lives in another algebra");
        return it->second;
    }
    case term::kind::join: return join(eval_term(L, *t.lhs, env), eval_term(L, *t.rhs, env));
    case term::kind::meet: return meet(eval_term(L, *t.lhs, env), eval_term(L, *t.rhs, env));
    case term::kind::diff: return diff(eval_term(L, *t.lhs, env), eval_term(L, *t.rhs, env));
    }
    raise(errc::parse_error, "corrupt term");
}

downset eval_term(const algebra& L, std::string_view src, const term_env& env) {
    return eval_term(L, *parse_term(src), env);
}

}
