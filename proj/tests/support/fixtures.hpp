#pragma once

#include <string>

#include "redos/nfa.hpp"

namespace fixture {

using redos::Label;
using redos::Nfa;

/// q0 -a-> q, q -a-> q, q -a-> q0, q0 -b-> qr, q -b-> qr; q accepting.
/// States: q0 = 0, q = 1, qr = 2.
inline Nfa hyper_vulnerable() {
    Nfa a(3);
    a.set_accepting(1);
    a.add_transition(0, Label::single('a'), 1);
    a.add_transition(1, Label::single('a'), 1);
    a.add_transition(1, Label::single('a'), 0);
    a.add_transition(0, Label::single('b'), 2);
    a.add_transition(1, Label::single('b'), 2);
    a.set_initial(0);
    return a;
}

/// q0 -c-> q, q -a-> q1, q1 -b-> q, q -a-> q2, q2 -b-> q', q' -a-> q2; q2 accepting.
/// States: q0 = 0, q = 1, q1 = 2, q2 = 3, q' = 4.
inline Nfa vulnerable() {
    Nfa a(5);
    a.set_accepting(3);
    a.add_transition(0, Label::single('c'), 1);
    a.add_transition(1, Label::single('a'), 2);
    a.add_transition(2, Label::single('b'), 1);
    a.add_transition(1, Label::single('a'), 3);
    a.add_transition(3, Label::single('b'), 4);
    a.add_transition(4, Label::single('a'), 3);
    a.set_initial(0);
    return a;
}

inline std::u32string repeat(std::u32string_view unit, std::size_t k) {
    std::u32string s;
    for (std::size_t i = 0; i < k; ++i) s += unit;
    return s;
}

/// a·(aa)^k·b
inline std::u32string hyper_attack(std::size_t k) { return U"a" + repeat(U"aa", k) + U"b"; }

/// c·(ab)^k
inline std::u32string vulnerable_attack(std::size_t k) {
    return U"c" + repeat(U"ab", k);
}

}  // namespace fixture
