"""Independent oracles for the test suite.

Everything here works on raw (generator index, sign) pairs and plain
permutation image lists, on purpose: these functions re-derive expected
values by slower, structurally different algorithms than the package
(repeated-scan cancellation instead of a stack, word-equality lookups
instead of (coset, generator) indexing, exhaustive search instead of a
single deterministic scan).
"""

import itertools
import random

from schreier import Alphabet, FiniteAction, Letter, Permutation, Word

Pairs = tuple[tuple[int, int], ...]


def brute_reduce(pairs) -> Pairs:
    """Free reduction by repeated full scans until nothing cancels."""
    out = list(pairs)
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            (g1, s1), (g2, s2) = out[i], out[i + 1]
            if g1 == g2 and s1 == -s2:
                del out[i:i + 2]
                changed = True
                break
    return tuple(out)


def brute_factor_reduce(factors) -> Pairs:
    # Same scheme, one level up: factors are (basis index, sign) pairs.
    return brute_reduce(factors)


def shortlex_key(pairs) -> tuple:
    return (len(pairs), tuple(2 * g + (1 if s < 0 else 0) for g, s in pairs))


def all_reduced_words(n: int, max_len: int):
    """All reduced letter tuples up to max_len, in shortlex order."""
    letters = [(g, s) for g in range(n) for s in (1, -1)]
    found = [()]
    for length in range(1, max_len + 1):
        for combo in itertools.product(letters, repeat=length):
            if any(a[0] == b[0] and a[1] == -b[1] for a, b in zip(combo, combo[1:])):
                continue
            found.append(combo)
    found.sort(key=shortlex_key)
    return found


def ev_pairs(perms, point: int, pairs) -> int:
    """Evaluate raw letters against raw image lists; list.index inverts."""
    for g, s in pairs:
        point = perms[g][point] if s > 0 else perms[g].index(point)
    return point


def rewrite_by_words(perms, basepoint: int, reps, basis_words, pairs) -> Pairs:
    """Reidemeister-Schreier scan using only word equality.

    reps and basis_words are letter tuples; no (coset, generator) index
    is consulted.  Raises ValueError when the word leaves the stabilizer.
    """
    rep_of_point = {ev_pairs(perms, basepoint, r): tuple(r) for r in reps}

    def schreier_word(t, g):
        u = rep_of_point[ev_pairs(perms, basepoint, t + ((g, 1),))]
        return brute_reduce(t + ((g, 1),) + tuple((gg, -ss) for gg, ss in reversed(u)))

    out = []
    prefix: list = []
    for g, s in pairs:
        if s > 0:
            t = rep_of_point[ev_pairs(perms, basepoint, tuple(prefix))]
        else:
            t = rep_of_point[ev_pairs(perms, basepoint, tuple(prefix) + ((g, -1),))]
        b = schreier_word(t, g)
        if b:
            out.append((list(basis_words).index(b), s))
        prefix.append((g, s))
    if ev_pairs(perms, basepoint, tuple(prefix)) != basepoint:
        raise ValueError("not in the stabilizer")
    return brute_factor_reduce(out)


def expand_pairs(basis_words, factors) -> Pairs:
    flat: list = []
    for k, s in factors:
        b = basis_words[k]
        flat.extend(b if s > 0 else tuple((g, -ss) for g, ss in reversed(b)))
    return brute_reduce(flat)


def bword_search(basis_words, target, max_factors: int):
    """All reduced factor sequences over the basis expanding to target.

    Exhaustive up to max_factors; the caller asserts there is exactly
    one hit (freeness at small scale) and that it matches rewrite().
    """
    target = brute_reduce(target)
    symbols = [(k, s) for k in range(len(basis_words)) for s in (1, -1)]
    hits = []
    for length in range(max_factors + 1):
        for combo in itertools.product(symbols, repeat=length):
            if any(a[0] == b[0] and a[1] == -b[1] for a, b in zip(combo, combo[1:])):
                continue
            if expand_pairs(basis_words, combo) == target:
                hits.append(combo)
    return hits


def random_word_pairs(rng: random.Random, n: int, max_len: int) -> Pairs:
    """Random reduced letters; rejection keeps adjacent pairs legal."""
    out: list = []
    for _ in range(rng.randint(0, max_len)):
        options = [(g, s) for g in range(n) for s in (1, -1)
                   if not (out and out[-1] == (g, -s))]
        out.append(rng.choice(options))
    return tuple(out)


def random_perm_images(rng: random.Random, m: int) -> list:
    images = list(range(m))
    rng.shuffle(images)
    return images


def orbit_of(perms, base: int) -> set:
    seen = {base}
    frontier = [base]
    while frontier:
        p = frontier.pop()
        for images in perms:
            for q in (images[p], images.index(p)):
                if q not in seen:
                    seen.add(q)
                    frontier.append(q)
    return seen


def random_transitive_perms(rng: random.Random, n: int, m: int) -> list:
    """Image lists for n generators acting transitively on m points."""
    for _ in range(20):
        perms = [random_perm_images(rng, m) for _ in range(n)]
        if len(orbit_of(perms, 0)) == m:
            return perms
    # Rare at large m with one generator: force a full cycle.
    perms = [random_perm_images(rng, m) for _ in range(n)]
    perms[0] = [(i + 1) % m for i in range(m)]
    return perms


def make_action(names, image_lists) -> FiniteAction:
    alphabet = Alphabet(tuple(names))
    degree = len(image_lists[0])
    return FiniteAction(alphabet, degree,
                        tuple(Permutation(tuple(im)) for im in image_lists))


def word_from_pairs(alphabet: Alphabet, pairs) -> Word:
    # Pairs are already reduced in every oracle that produces them.
    return Word(alphabet, tuple(Letter(g, s) for g, s in pairs))


def pairs_of_word(w: Word) -> Pairs:
    return tuple((lt.gen, lt.sign) for lt in w.letters)
