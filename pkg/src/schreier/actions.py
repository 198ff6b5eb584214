"""Finite right actions of a free group: one permutation per generator.

A word acts by applying its letters left to right; a negative letter
acts by the inverse permutation.  This is the unique extension of the
generator assignment to the whole group.
"""

from dataclasses import dataclass
from functools import cached_property

from .words import Alphabet, Letter, Word

__all__ = [
    "ActionParseError",
    "FiniteAction",
    "Permutation",
    "evaluate",
    "format_action_text",
    "is_transitive",
    "orbit",
    "parse_action_text",
    "perm_of_word",
    "read_action_file",
    "write_action_file",
]


class ActionParseError(ValueError):
    """Raised when an action file does not match the file format."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0..m-1}; ``images[i]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if not images or sorted(images) != list(range(len(images))):
            raise ValueError(
                f"invalid permutation: {list(images)} is not a bijection of 0..{len(images) - 1}"
            )

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    @cached_property
    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def then(self, other: "Permutation") -> "Permutation":
        """Composite: apply self first, then other."""
        return Permutation(tuple(other.images[j] for j in self.images))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))


@dataclass(frozen=True)
class FiniteAction:
    """A right action on {0..degree-1} given by one permutation per generator."""

    alphabet: Alphabet
    degree: int
    gen_perms: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "gen_perms", tuple(self.gen_perms))
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if len(self.gen_perms) != len(self.alphabet):
            raise ValueError(
                f"expected {len(self.alphabet)} permutations, got {len(self.gen_perms)}"
            )
        for name, perm in zip(self.alphabet.names, self.gen_perms):
            if perm.degree != self.degree:
                raise ValueError(
                    f"permutation for {name!r} has degree {perm.degree}, expected {self.degree}"
                )

    @cached_property
    def _inverse_perms(self) -> tuple[Permutation, ...]:
        return tuple(p.inverse for p in self.gen_perms)

    def step(self, point: int, letter: Letter) -> int:
        """Image of a point under a single signed letter."""
        perm = self.gen_perms[letter.gen] if letter.sign > 0 else self._inverse_perms[letter.gen]
        return perm(point)


def _check_word(act: FiniteAction, w: Word) -> None:
    if w.alphabet != act.alphabet:
        raise ValueError("alphabet mismatch")


def _check_point(act: FiniteAction, point: int) -> None:
    if not 0 <= point < act.degree:
        raise ValueError(f"point {point} out of range for degree {act.degree}")


def evaluate(act: FiniteAction, point: int, w: Word) -> int:
    """Apply a word to a point, letters left to right."""
    _check_word(act, w)
    _check_point(act, point)
    for lt in w.letters:
        point = act.step(point, lt)
    return point


def perm_of_word(act: FiniteAction, w: Word) -> Permutation:
    """The permutation a word induces on all points at once."""
    _check_word(act, w)
    images = list(range(act.degree))
    for lt in w.letters:
        perm = act.gen_perms[lt.gen] if lt.sign > 0 else act._inverse_perms[lt.gen]
        images = [perm(p) for p in images]
    return Permutation(tuple(images))


def orbit(act: FiniteAction, base: int) -> list[int]:
    """Points reachable from base, in BFS discovery order.

    Edges are tried per generator in alphabet order, the positive letter
    before the negative one, so the order is deterministic.
    """
    _check_point(act, base)
    seen = {base}
    out = [base]
    pos = 0
    while pos < len(out):
        p = out[pos]
        pos += 1
        for g in range(len(act.alphabet)):
            for sign in (1, -1):
                q = act.step(p, Letter(g, sign))
                if q not in seen:
                    seen.add(q)
                    out.append(q)
    return out


def is_transitive(act: FiniteAction) -> bool:
    return len(orbit(act, 0)) == act.degree


def parse_action_text(text: str) -> FiniteAction:
    """Parse the line-oriented action format.

    ``degree m``, then ``generators name1 name2 ...``, then one
    ``perm name i0 i1 ... i(m-1)`` line per generator.  Blank lines and
    ``#`` comments are ignored.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ActionParseError("empty action file")

    lineno, fields = rows[0]
    if len(fields) != 2 or fields[0] != "degree":
        raise ActionParseError(f"line {lineno}: expected 'degree m'")
    try:
        degree = int(fields[1])
    except ValueError:
        raise ActionParseError(f"line {lineno}: bad degree {fields[1]!r}") from None
    if degree < 1:
        raise ActionParseError(f"line {lineno}: degree must be at least 1")

    if len(rows) < 2 or rows[1][1][0] != "generators":
        raise ActionParseError("expected a 'generators' line after the degree")
    lineno, fields = rows[1]
    try:
        alphabet = Alphabet(tuple(fields[1:]))
    except ValueError as exc:
        raise ActionParseError(f"line {lineno}: {exc}") from None

    perms: dict[str, Permutation] = {}
    for lineno, fields in rows[2:]:
        if fields[0] != "perm":
            raise ActionParseError(f"line {lineno}: expected a 'perm' line, got {fields[0]!r}")
        if len(fields) < 2:
            raise ActionParseError(f"line {lineno}: missing generator name")
        name = fields[1]
        if name not in alphabet.names:
            raise ActionParseError(f"line {lineno}: unknown generator {name!r}")
        if name in perms:
            raise ActionParseError(f"line {lineno}: duplicate perm line for {name!r}")
        if len(fields) - 2 != degree:
            raise ActionParseError(
                f"line {lineno}: expected {degree} images, got {len(fields) - 2}"
            )
        try:
            images = tuple(int(f) for f in fields[2:])
        except ValueError:
            raise ActionParseError(f"line {lineno}: images must be integers") from None
        try:
            perms[name] = Permutation(images)
        except ValueError as exc:
            raise ActionParseError(f"line {lineno}: {exc}") from None

    missing = [name for name in alphabet.names if name not in perms]
    if missing:
        raise ActionParseError(f"missing perm line for generator {missing[0]!r}")
    return FiniteAction(alphabet, degree, tuple(perms[name] for name in alphabet.names))


def format_action_text(act: FiniteAction) -> str:
    """Render an action in the file format, one perm line per generator."""
    lines = [f"degree {act.degree}", " ".join(["generators", *act.alphabet.names])]
    for name, perm in zip(act.alphabet.names, act.gen_perms):
        lines.append(" ".join(["perm", name, *map(str, perm.images)]))
    return "\n".join(lines) + "\n"


def read_action_file(path) -> FiniteAction:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_action_text(fh.read())


def write_action_file(path, act: FiniteAction) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_action_text(act))
