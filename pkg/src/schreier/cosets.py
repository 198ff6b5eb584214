"""Coset tables and Schreier transversals for basepoint stabilizers.

The cosets of H = Stab(basepoint) are realized as the basepoint orbit.
A breadth-first scan in shortlex letter order yields the transversal:
each representative is the shortlex-least word reaching its coset, and
the set is closed under taking prefixes.
"""

from dataclasses import dataclass
from functools import cached_property

from . import words
from .actions import FiniteAction
from .words import Letter, Word

__all__ = [
    "CosetTable",
    "SchreierTransversal",
    "build_table",
    "coset_of",
    "rep",
]


@dataclass(frozen=True)
class CosetTable:
    """Basepoint orbit with per-generator transitions between cosets.

    ``points[c]`` is the orbit point of coset c (coset 0 is H itself);
    ``transitions[c][g]`` is the coset reached from c by generator g.
    """

    action: FiniteAction
    basepoint: int
    points: tuple[int, ...]
    transitions: tuple[tuple[int, ...], ...]

    @property
    def num_cosets(self) -> int:
        return len(self.points)

    @cached_property
    def _inverse_transitions(self) -> tuple[tuple[int, ...], ...]:
        n = len(self.action.alphabet)
        inv = [[0] * n for _ in range(self.num_cosets)]
        for c, row in enumerate(self.transitions):
            for g, c2 in enumerate(row):
                inv[c2][g] = c
        return tuple(tuple(r) for r in inv)

    def step(self, c: int, letter: Letter) -> int:
        table = self.transitions if letter.sign > 0 else self._inverse_transitions
        return table[c][letter.gen]

    def trace(self, c: int, w: Word) -> int:
        """Coset reached from c by the letters of w."""
        for lt in w.letters:
            c = self.step(c, lt)
        return c


@dataclass(frozen=True)
class SchreierTransversal:
    """One representative word per coset; reps[0] is the empty word."""

    reps: tuple[Word, ...]


def build_table(act: FiniteAction, basepoint: int) -> tuple[CosetTable, SchreierTransversal]:
    """Scan the basepoint orbit breadth-first and record representatives.

    Letters are tried in shortlex order (per generator, positive before
    negative), so each coset is first reached by its shortlex-least
    reduced word and every representative's parent word is already a
    representative.  Points outside the orbit are ignored.
    """
    if not 0 <= basepoint < act.degree:
        raise ValueError(f"basepoint {basepoint} out of range for degree {act.degree}")
    n = len(act.alphabet)
    points = [basepoint]
    index = {basepoint: 0}
    reps = [words.identity(act.alphabet)]
    pos = 0
    while pos < len(points):
        p = points[pos]
        for g in range(n):
            for sign in (1, -1):
                q = act.step(p, Letter(g, sign))
                if q not in index:
                    index[q] = len(points)
                    points.append(q)
                    reps.append(words.concat(reps[pos], words.single(act.alphabet, g, sign)))
        pos += 1
    transitions = tuple(
        tuple(index[act.gen_perms[g](p)] for g in range(n)) for p in points
    )
    table = CosetTable(act, basepoint, tuple(points), transitions)
    return table, SchreierTransversal(tuple(reps))


def coset_of(table: CosetTable, w: Word) -> int:
    """Index of the coset Hw."""
    if w.alphabet != table.action.alphabet:
        raise ValueError("alphabet mismatch")
    return table.trace(0, w)


def rep(table: CosetTable, transversal: SchreierTransversal, w: Word) -> Word:
    """The transversal word representing the coset of w (the bar map)."""
    return transversal.reps[coset_of(table, w)]
