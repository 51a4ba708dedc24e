#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "coheyt/algebra.hpp"

namespace coheyt {

// term := or ; or := and {'|' and} ; and := sub {'&' sub} ;
// sub := atom {'-' atom} ; atom := '0' | '1' | ident | '(' term ')'
// all operators left associative; '-' binds tightest, then '&', then '|'
struct term {
    enum class kind { zero, one, var, join, meet, diff };
    kind k;
    std::string name;                  // var
    std::shared_ptr<const term> lhs, rhs;
};

using term_ptr = std::shared_ptr<const term>;

term_ptr parse_term(std::string_view src);   // throws parse_error

using term_env = std::map<std::string, downset>;

downset eval_term(const algebra& L, const term& t, const term_env& env);
downset eval_term(const algebra& L, std::string_view src, const term_env& env);

}
