#pragma once

#include <stdexcept>
#include <string>

#include "qroot3/algebra.hpp"

// Small parser for algebra elements.
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' digits)?
//   atom   := generator | integer ('/' integer)? | 'q' | '(' expr ')'
namespace qroot3::expr {

enum class Context { M, F, H, WZ };

Context context_from_name(const std::string& name);  // throws std::invalid_argument
std::string context_name(Context c);
const AlgebraTable& context_algebra(Context c);
const std::vector<std::string>& generator_names(Context c);

struct ParseError : std::runtime_error {
    ParseError(size_t pos, const std::string& msg);
    size_t pos;
};

CycVector parse(const std::string& src, Context ctx);
// Normal form; parse(format(v)) == v.
std::string format(const CycVector& v, Context ctx);

}  // namespace qroot3::expr
