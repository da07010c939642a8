#pragma once

#include <stdexcept>
#include <string>

#include "freedl.hpp"

namespace wh {

/* Reported with the 1-based character position of the offending token. */
struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos)
    {
    }
};

/* Shared element grammar:
**   element  := term (' + ' term)*
**   term     := monomial (' * ' monomial)*
**   monomial := ('Q^j')* ('s^k')? ('bQ^i')* 'i'  |  '1'  |  '0'
** Bar words use 'bQ^i ... i'; wreath words use 'Q^i w Q^i ... i'. */
std::string print_element(const AlgebraElement& x);
std::string print_monomial(const DLMonomial& m);
std::string print_bar_word(const BarWord& w);
std::string print_bar_sum(const BarSum& s);
std::string print_wreath_word(const WreathWord& w);
std::string print_wreath_sum(const WreathSum& s);
std::string print_gen_sum(const GenSum& s);

/* Parsing normalizes as it reads: bar blocks go to the admissible basis
** and Q prefixes through instability/Adem/squares, under opt's fuel. */
AlgebraElement parse_element(const std::string& text, const BarOptions& opt = {});
BarWord parse_bar_word(const std::string& text);
WreathWord parse_wreath_word(const std::string& text);

}  // namespace wh
