"""
Word rewriting over Q(q) for algebras presented by quadratic-type rules
    x y  ->  sum of coeff * word.

Used as an independent route to the PBW normal forms (which the algebra
modules compute by direct monomial multiplication) and for the diamond-lemma
overlap analysis.
"""

from __future__ import annotations

import random
from collections import defaultdict

from .scalar_field import ONE, as_qrational

Word = tuple


class Rewriter:
    """
    rules: {(x, y): [(coeff, word), ...]}.  Words are tuples of generator
    names; the empty tuple is the unit.
    """

    def __init__(self, rules: dict):
        self.rules = {lhs: [(as_qrational(c), tuple(w)) for c, w in rhs]
                      for lhs, rhs in rules.items()}

    def redex_positions(self, word: Word):
        return [i for i in range(len(word) - 1) if (word[i], word[i + 1]) in self.rules]

    def rewrite_at(self, word: Word, i: int):
        rhs = self.rules[(word[i], word[i + 1])]
        return [(c, word[:i] + w + word[i + 2:]) for c, w in rhs]

    def reduce(self, element, strategy: str = "leftmost", rng=None, max_steps=200000):
        """
        Fully reduce a combination {word: coeff}.  strategy is 'leftmost',
        'rightmost' or 'random'.
        """
        if strategy == "random" and rng is None:
            rng = random.Random(0)
        todo = defaultdict(lambda: as_qrational(0))
        for w, c in element.items():
            todo[tuple(w)] = todo[tuple(w)] + as_qrational(c)
        done = defaultdict(lambda: as_qrational(0))
        steps = 0
        while todo:
            w, c = todo.popitem()
            if not c:
                continue
            pos = self.redex_positions(w)
            if not pos:
                done[w] = done[w] + c
                continue
            steps += 1
            if steps > max_steps:
                raise RuntimeError("rewriting did not terminate")
            if strategy == "leftmost":
                i = pos[0]
            elif strategy == "rightmost":
                i = pos[-1]
            else:
                i = rng.choice(pos)
            for c2, w2 in self.rewrite_at(w, i):
                todo[w2] = todo[w2] + c * c2
        return {w: c for w, c in done.items() if c}

    def normal_form(self, word, strategy="leftmost"):
        return self.reduce({tuple(word): ONE}, strategy)

    def overlaps(self):
        """Overlap ambiguities x y z with (x,y) and (y,z) both rule heads."""
        out = []
        for (x, y) in self.rules:
            for (y2, z) in self.rules:
                if y == y2:
                    out.append((x, y, z))
        return out

    def check_overlaps(self):
        """
        Resolve every overlap both ways; returns a list of
        (ambiguity, difference) for the ones that do not resolve.
        """
        bad = []
        for amb in self.overlaps():
            left = self._combine(self.rewrite_at(amb, 0))
            right = self._combine(self.rewrite_at(amb, 1))
            nl = self.reduce(left)
            nr = self.reduce(right)
            diff = dict(nl)
            for w, c in nr.items():
                diff[w] = diff.get(w, as_qrational(0)) - c
            diff = {w: c for w, c in diff.items() if c}
            if diff:
                bad.append((amb, diff))
        return bad

    @staticmethod
    def _combine(terms):
        out = defaultdict(lambda: as_qrational(0))
        for c, w in terms:
            out[w] = out[w] + c
        return dict(out)
