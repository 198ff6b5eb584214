"""Reduced words over a finite generating alphabet.

Free-group elements are kept in their unique reduced form: no adjacent
pair of a generator and its inverse.  The empty word is the group
identity and prints as ``1``.  All values here are immutable and safe to
share between threads.
"""

import re
from dataclasses import dataclass
from functools import cached_property, total_ordering
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Alphabet",
    "Letter",
    "Word",
    "WordParseError",
    "concat",
    "format_word",
    "identity",
    "invert",
    "iter_reduced_words",
    "parse",
    "prefixes",
    "reduce",
    "single",
]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_NAME_SCAN_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT_SCAN_RE = re.compile(r"[+-]?[0-9]+")


class WordParseError(ValueError):
    """Raised when a word string does not match the word grammar."""


class Letter(NamedTuple):
    """One signed generator: ``sign`` +1 for x, -1 for x^-1."""

    gen: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)

    def key(self) -> int:
        # Letter order x0 < x0^-1 < x1 < x1^-1 < ... used by shortlex.
        return 2 * self.gen + (1 if self.sign < 0 else 0)


@dataclass(frozen=True)
class Alphabet:
    """Ordered, distinct generator names; the order fixes shortlex."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid generator name: {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")

    def __len__(self) -> int:
        return len(self.names)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise WordParseError(f"unknown generator {name!r}") from None

    def word(self, text: str) -> "Word":
        """Shorthand for :func:`parse` against this alphabet."""
        return parse(text, self)


@total_ordering
@dataclass(frozen=True)
class Word:
    """A reduced word, the normal form of a free-group element.

    The constructor insists on reduced input; use :func:`reduce` to
    build a word from an arbitrary letter sequence.
    """

    alphabet: Alphabet
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(Letter(g, s) for g, s in self.letters)
        object.__setattr__(self, "letters", letters)
        n = len(self.alphabet)
        prev = None
        for lt in letters:
            _check_letter(lt, n)
            if prev is not None and prev.gen == lt.gen and prev.sign == -lt.sign:
                raise ValueError("word is not reduced")
            prev = lt

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def shortlex_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.letters), tuple(lt.key() for lt in self.letters))

    def __lt__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        return self.shortlex_key() < other.shortlex_key()

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


def _check_letter(lt: Letter, n: int) -> None:
    if not 0 <= lt.gen < n:
        raise ValueError(f"invalid letter: generator index {lt.gen} out of range for {n} generators")
    if lt.sign not in (1, -1):
        raise ValueError(f"invalid letter: sign must be +1 or -1, got {lt.sign}")


def identity(alphabet: Alphabet) -> Word:
    """The empty word."""
    return Word(alphabet, ())


def single(alphabet: Alphabet, gen: int, sign: int = 1) -> Word:
    """The one-letter word for a generator or its inverse."""
    return Word(alphabet, (Letter(gen, sign),))


def reduce(alphabet: Alphabet, raw: Iterable[tuple[int, int]]) -> Word:
    """Cancel adjacent inverse pairs until none remain.

    The result is the unique reduced form of the input sequence; feeding
    a reduced word back in is a no-op.
    """
    n = len(alphabet)
    stack: list[Letter] = []
    for g, s in raw:
        lt = Letter(g, s)
        _check_letter(lt, n)
        if stack and stack[-1].gen == lt.gen and stack[-1].sign == -lt.sign:
            stack.pop()
        else:
            stack.append(lt)
    return Word(alphabet, tuple(stack))


def concat(w: Word, v: Word) -> Word:
    """Group multiplication: reduce w followed by v."""
    if w.alphabet != v.alphabet:
        raise ValueError("alphabet mismatch")
    stack = list(w.letters)
    for lt in v.letters:
        if stack and stack[-1].gen == lt.gen and stack[-1].sign == -lt.sign:
            stack.pop()
        else:
            stack.append(lt)
    return Word(w.alphabet, tuple(stack))


def invert(w: Word) -> Word:
    """Group inverse: reverse the letters and flip every sign."""
    return Word(w.alphabet, tuple(lt.inverse() for lt in reversed(w.letters)))


def prefixes(w: Word) -> list[Word]:
    """All prefixes of w, shortest first, ending with w itself."""
    return [Word(w.alphabet, w.letters[:i]) for i in range(len(w.letters) + 1)]


def parse(text: str, alphabet: Alphabet) -> Word:
    """Parse the text grammar: ``1`` or factors ``name`` / ``name^k``.

    Factors are separated by whitespace, an optional ``*``, or both.
    Exponents are nonzero integers.  The result is reduced.
    """
    if text.strip() == "1":
        return identity(alphabet)
    raw: list[tuple[int, int]] = []
    pos = _skip_ws(text, 0)
    end = len(text)
    if pos == end:
        raise WordParseError("empty word (write '1' for the identity)")
    while True:
        m = _NAME_SCAN_RE.match(text, pos)
        if not m:
            raise WordParseError(f"expected a generator name at position {pos}")
        gen = alphabet.index(m.group())
        pos = m.end()
        k = 1
        if pos < end and text[pos] == "^":
            m2 = _INT_SCAN_RE.match(text, pos + 1)
            if not m2:
                raise WordParseError(f"malformed exponent at position {pos + 1}")
            k = int(m2.group())
            if k == 0:
                raise WordParseError("malformed exponent: must be nonzero")
            pos = m2.end()
        sign = 1 if k > 0 else -1
        raw.extend((gen, sign) for _ in range(abs(k)))
        sep_start = pos
        pos = _skip_ws(text, pos)
        if pos == end:
            break
        if text[pos] == "*":
            pos = _skip_ws(text, pos + 1)
            if pos == end:
                raise WordParseError("empty factor after '*'")
        elif pos == sep_start:
            raise WordParseError(f"missing separator at position {pos}")
    return reduce(alphabet, raw)


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def format_word(w: Word) -> str:
    """Canonical text: run-length factors joined by single spaces."""
    if not w.letters:
        return "1"
    parts = []
    letters = w.letters
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        k = (j - i) * letters[i].sign
        name = w.alphabet.names[letters[i].gen]
        parts.append(name if k == 1 else f"{name}^{k}")
        i = j
    return " ".join(parts)


def iter_reduced_words(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """Yield every reduced word of length <= max_len in shortlex order."""
    layer = [identity(alphabet)]
    yield layer[0]
    n = len(alphabet)
    for _ in range(max_len):
        grown: list[Word] = []
        for w in layer:
            last = w.letters[-1] if w.letters else None
            for g in range(n):
                for sign in (1, -1):
                    if last is not None and last.gen == g and last.sign == -sign:
                        continue
                    grown.append(Word(alphabet, w.letters + (Letter(g, sign),)))
        if not grown:
            return
        yield from grown
        layer = grown
