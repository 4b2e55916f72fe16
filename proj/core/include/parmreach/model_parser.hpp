#pragma once

#include <string>
#include <string_view>

#include "parmreach/pdtmc.hpp"

namespace parmreach {

/// Parses the line-oriented model format:
///
///     # comment
///     @params p q
///     @state s1
///     @init s1 : 1
///     @trans s1 -> s2 : 0.4*p
///     @target s2
///
/// Expressions use + - * / ^, parentheses, integers, exact decimals and the
/// declared parameters. Parameters are interned into the current session.
/// States without outgoing transitions are absorbing. Repeated transitions
/// between the same pair of states are summed.
///
/// Throws SyntaxError, UnknownState, RowSumNotOne (with the residual 1 - sum)
/// and TargetNotAbsorbing.
Pdtmc parse_model(std::string_view text);

/// Reads and parses a file. I/O failures surface as std::runtime_error.
Pdtmc load_model(const std::string& path);

/// Inverse of parse_model for any model built in the current session.
std::string write_model(const Pdtmc& m);

/// Parses a single expression over the given parameter names.
RationalFunction parse_expression(std::string_view text);

}  // namespace parmreach
