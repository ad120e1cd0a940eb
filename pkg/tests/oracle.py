"""Independent straightening oracle used to cross-check the main engine.

Elements are represented as maps word -> coefficient, where a word is a
plain tuple of generator positions (no exponents).  Normalization scans for
the leftmost out-of-order or repeated-odd adjacent pair and rewrites it with
the bracket table:

    x y -> (-1)^(p(x)p(y)) y x + [x, y]      (positions x > y)
    g g -> [g, g] / 2                        (g odd)

No memoization, no exponent arithmetic, no prefix sharing: this is a
deliberately naive, separate code path from queerw.pbw.
"""

from __future__ import annotations

from fractions import Fraction

from queerw.core import ODD


def word_multiply(order, u, v):
    """Concatenation product of word-elements (dicts word -> coeff)."""
    out = {}
    for wu, cu in u.items():
        for wv, cv in v.items():
            w = wu + wv
            c = out.get(w, 0) + cu * cv
            if c:
                out[w] = c
            elif w in out:
                del out[w]
    return out


def normalize(order, elem):
    """Rewrite until every word is strictly sorted (odd squares removed)."""
    parity = order.parity
    pending = dict(elem)
    done = {}
    while pending:
        word, coeff = pending.popitem()
        spot = None
        for k in range(len(word) - 1):
            if word[k] > word[k + 1] or (word[k] == word[k + 1]
                                         and parity[word[k]] == ODD):
                spot = k
                break
        if spot is None:
            c = done.get(word, 0) + coeff
            if c:
                done[word] = c
            elif word in done:
                del done[word]
            continue
        x, y = word[spot], word[spot + 1]
        head, tail = word[:spot], word[spot + 2:]
        if x == y:
            for c, s in order.bracket_pos(x, x):
                w2 = head + (c,) + tail
                add = coeff * Fraction(s, 2)
                cur = pending.get(w2, 0) + add
                if cur:
                    pending[w2] = cur
                elif w2 in pending:
                    del pending[w2]
            continue
        sign = -1 if (parity[x] == ODD and parity[y] == ODD) else 1
        w2 = head + (y, x) + tail
        cur = pending.get(w2, 0) + sign * coeff
        if cur:
            pending[w2] = cur
        elif w2 in pending:
            del pending[w2]
        for c, s in order.bracket_pos(x, y):
            w3 = head + (c,) + tail
            cur = pending.get(w3, 0) + s * coeff
            if cur:
                pending[w3] = cur
            elif w3 in pending:
                del pending[w3]
    return done


def to_element_terms(normalized):
    """Convert sorted words to the engine's flat run-length monomials."""
    out = {}
    for word, coeff in normalized.items():
        mono = []
        for p in word:
            if mono and mono[-2] == p:
                mono[-1] += 1
            else:
                mono.extend((p, 1))
        key = tuple(mono)
        c = out.get(key, 0) + coeff
        if c:
            out[key] = c
        elif key in out:
            del out[key]
    return out


def straighten_word(order, word, coeff=1):
    """Canonical engine-format terms of a single product word."""
    return to_element_terms(normalize(order, {tuple(word): coeff}))
