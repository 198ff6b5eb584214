"""Invariant suite behind the ``check`` subcommand.

Runs every module's contract against one action: group laws on words,
action axioms, transversal properties, basis counting, rewriting round
trips, and the induced-action obligations.  Deterministic for a fixed
seed.
"""

import random
from dataclasses import dataclass

from . import words
from .actions import FiniteAction, Permutation, evaluate, perm_of_word
from .basis import compute_basis, degenerate_count, degenerate_pair_of_rep, schreier_formula_check
from .cosets import build_table, coset_of, rep
from .induce import HAction, check_claim, induce, restrict_to_h, tensor_action_generic
from .rewrite import NotInSubgroupError, contains, expand, rewrite
from .words import Letter, Word

__all__ = ["CheckResult", "run_checks"]

# Exhaustive scans are skipped above this many reduced words.
_ENUMERATION_CAP = 300_000


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


class _CheckFailure(Exception):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise _CheckFailure(message)


def _random_perm(rng: random.Random, degree: int) -> Permutation:
    images = list(range(degree))
    rng.shuffle(images)
    return Permutation(tuple(images))


def _random_word(rng: random.Random, alphabet, max_len: int) -> Word:
    length = rng.randint(0, max_len)
    letters: list[Letter] = []
    for _ in range(length):
        options = [Letter(g, s) for g in range(len(alphabet)) for s in (1, -1)]
        if letters:
            last = letters[-1]
            options = [lt for lt in options if not (lt.gen == last.gen and lt.sign == -last.sign)]
        if not options:
            break
        letters.append(rng.choice(options))
    return Word(alphabet, tuple(letters))


def _random_raw(rng: random.Random, alphabet, max_len: int) -> list[tuple[int, int]]:
    # Unreduced on purpose: cancellations are likely.
    n = len(alphabet)
    if n == 0:
        return []
    return [(rng.randrange(n), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len))]


def _reduced_word_count(n: int, max_len: int) -> int:
    total, layer = 1, 1
    for depth in range(max_len):
        layer *= 2 * n if depth == 0 else 2 * n - 1
        total += layer
        if total > _ENUMERATION_CAP:
            break
    return total


def _bconcat(left: tuple[tuple[int, int], ...], right: tuple[tuple[int, int], ...]):
    stack = list(left)
    for k, s in right:
        if stack and stack[-1] == (k, -s):
            stack.pop()
        else:
            stack.append((k, s))
    return tuple(stack)


def run_checks(act: FiniteAction, basepoint: int = 0, max_len: int = 5, seed: int = 0,
               trials: int = 200) -> list[CheckResult]:
    """Run the whole invariant suite; returns one result per invariant."""
    rng = random.Random(seed)
    alphabet = act.alphabet
    n = len(alphabet)
    table, transversal = build_table(act, basepoint)
    basis = compute_basis(table, transversal)
    m = table.num_cosets
    h_degree = 3
    sigma = HAction(h_degree, tuple(_random_perm(rng, h_degree) for _ in basis.elements))
    ind = induce(sigma, table, transversal, basis)

    results: list[CheckResult] = []

    def check(name, fn):
        try:
            detail = fn() or ""
            results.append(CheckResult(name, True, detail))
        except (_CheckFailure, AssertionError) as exc:
            results.append(CheckResult(name, False, str(exc)))

    def rand_word():
        return _random_word(rng, alphabet, max_len)

    def rand_h():
        u = rand_word()
        return words.concat(u, words.invert(rep(table, transversal, u)))

    # words -----------------------------------------------------------------
    def words_reduce_idempotent():
        for _ in range(trials):
            raw = _random_raw(rng, alphabet, 2 * max_len)
            w = words.reduce(alphabet, raw)
            for a, b in zip(w.letters, w.letters[1:]):
                _require(not (a.gen == b.gen and a.sign == -b.sign), "cancelling pair survived")
            _require(words.reduce(alphabet, w.letters) == w, "reduce is not idempotent")

    check("words-reduce-idempotent", words_reduce_idempotent)

    def words_group_laws():
        for _ in range(trials):
            w, v, u = rand_word(), rand_word(), rand_word()
            _require(
                words.concat(words.concat(w, v), u) == words.concat(w, words.concat(v, u)),
                "concat is not associative",
            )
            e = words.identity(alphabet)
            _require(words.concat(w, e) == w == words.concat(e, w), "identity law failed")
            _require(words.concat(w, words.invert(w)) == e, "inverse law failed")
            _require(words.invert(words.invert(w)) == w, "invert is not an involution")

    check("words-group-laws", words_group_laws)

    def words_parse_roundtrip():
        for _ in range(trials):
            w = rand_word()
            _require(words.parse(words.format_word(w), alphabet) == w, "parse(format(w)) != w")

    check("words-parse-roundtrip", words_parse_roundtrip)

    # actions ---------------------------------------------------------------
    def action_axioms():
        e = words.identity(alphabet)
        for _ in range(trials):
            v, w = rand_word(), rand_word()
            vw = words.concat(v, w)
            for p in range(act.degree):
                _require(evaluate(act, p, e) == p, "identity word moved a point")
                _require(
                    evaluate(act, p, vw) == evaluate(act, evaluate(act, p, v), w),
                    "compatibility axiom failed",
                )

    check("action-axioms", action_axioms)

    def action_homomorphism():
        for _ in range(trials):
            v, w = rand_word(), rand_word()
            _require(
                perm_of_word(act, words.concat(v, w)) == perm_of_word(act, v).then(perm_of_word(act, w)),
                "word permutations are not multiplicative",
            )

    check("action-homomorphism", action_homomorphism)

    def action_respects_reduction():
        for _ in range(trials):
            raw = _random_raw(rng, alphabet, 2 * max_len)
            p = rng.randrange(act.degree)
            folded = p
            for g, s in raw:
                folded = act.step(folded, Letter(g, s))
            _require(
                evaluate(act, p, words.reduce(alphabet, raw)) == folded,
                "reduction changed the action of a letter sequence",
            )

    check("action-respects-reduction", action_respects_reduction)

    # cosets ----------------------------------------------------------------
    def transversal_identity_first():
        _require(transversal.reps[0].is_identity(), "reps[0] is not the empty word")

    check("transversal-identity-first", transversal_identity_first)

    def transversal_prefix_closed():
        have = set(transversal.reps)
        for r in transversal.reps:
            for pfx in words.prefixes(r):
                _require(pfx in have, f"prefix {pfx} of {r} is not a representative")

    check("transversal-prefix-closed", transversal_prefix_closed)

    def transversal_consistent():
        _require(len(set(transversal.reps)) == m, "representatives are not distinct")
        for c, r in enumerate(transversal.reps):
            _require(
                evaluate(act, basepoint, r) == table.points[c],
                f"rep {r} does not reach its coset point",
            )

    check("transversal-consistent", transversal_consistent)

    def transversal_shortlex_minimal():
        longest = max(len(r) for r in transversal.reps)
        if _reduced_word_count(n, longest) <= _ENUMERATION_CAP:
            first: dict[int, Word] = {}
            for w in words.iter_reduced_words(alphabet, longest):
                c = coset_of(table, w)
                if c not in first:
                    first[c] = w
            for c, r in enumerate(transversal.reps):
                _require(first[c] == r, f"coset {c}: {first[c]} is smaller than rep {r}")
            return f"exhaustive up to length {longest}"
        for _ in range(trials):
            w = rand_word()
            r = rep(table, transversal, w)
            _require(r.shortlex_key() <= w.shortlex_key(), f"rep {r} is not minimal against {w}")
        return "sampled (instance too large for an exhaustive scan)"

    check("transversal-shortlex-minimal", transversal_shortlex_minimal)

    def barmap_laws():
        for _ in range(trials):
            w, v = rand_word(), rand_word()
            r = rep(table, transversal, w)
            _require(rep(table, transversal, r) == r, "bar map is not idempotent")
            _require(
                coset_of(table, words.concat(w, v)) == table.trace(coset_of(table, w), v),
                "coset of wv does not factor through the coset of w",
            )

    check("barmap-laws", barmap_laws)

    # basis -----------------------------------------------------------------
    def basis_count():
        _require(schreier_formula_check(basis, m, n), "basis size is not 1 + m(n-1)")
        _require(degenerate_count(basis) == m - 1, "degenerate pair count is not m - 1")
        return f"|B| = {len(basis.elements)}, degenerate = {degenerate_count(basis)}"

    check("basis-count", basis_count)

    def basis_words_distinct():
        seen = {e.word for e in basis.elements}
        _require(len(seen) == len(basis.elements), "basis words are not pairwise distinct")
        _require(all(not e.word.is_identity() for e in basis.elements), "identity crept into the basis")

    check("basis-words-distinct", basis_words_distinct)

    def basis_membership():
        for e in basis.elements:
            _require(
                evaluate(act, basepoint, e.word) == basepoint,
                f"basis word {e.word} does not fix the basepoint",
            )

    check("basis-membership", basis_membership)

    def basis_degenerate_bijection():
        degenerate = {pair for pair, k in basis.index.items() if k is None}
        assigned = {degenerate_pair_of_rep(table, transversal, c) for c in range(1, m)}
        _require(len(assigned) == m - 1, "rep-to-pair map is not injective")
        _require(assigned == degenerate, "rep-to-pair map misses a degenerate pair")

    check("basis-degenerate-bijection", basis_degenerate_bijection)

    # rewrite ---------------------------------------------------------------
    def rewrite_roundtrip():
        for _ in range(trials):
            h = rand_h()
            _require(expand(basis, rewrite(table, transversal, basis, h)) == h,
                     f"round trip failed for {h}")

    check("rewrite-roundtrip", rewrite_roundtrip)

    def rewrite_homomorphism():
        for _ in range(trials):
            h1, h2 = rand_h(), rand_h()
            joint = rewrite(table, transversal, basis, words.concat(h1, h2)).factors
            split = _bconcat(
                rewrite(table, transversal, basis, h1).factors,
                rewrite(table, transversal, basis, h2).factors,
            )
            _require(joint == split, "rewriting is not a homomorphism")

    check("rewrite-homomorphism", rewrite_homomorphism)

    def rewrite_basis_fidelity():
        for k, e in enumerate(basis.elements):
            _require(
                rewrite(table, transversal, basis, e.word).factors == ((k, 1),),
                f"basis word {k} does not rewrite to itself",
            )

    check("rewrite-basis-fidelity", rewrite_basis_fidelity)

    def rewrite_empty_iff_identity():
        bound = max_len if _reduced_word_count(n, max_len) <= _ENUMERATION_CAP else 3
        count = 0
        for w in words.iter_reduced_words(alphabet, bound):
            if not contains(table, w):
                continue
            count += 1
            bw = rewrite(table, transversal, basis, w)
            _require((len(bw) == 0) == w.is_identity(), f"empty rewrite for nonidentity {w}")
            _require(expand(basis, bw) == w, f"round trip failed for {w}")
        return f"{count} stabilizer elements up to length {bound}"

    check("rewrite-empty-iff-identity", rewrite_empty_iff_identity)

    def membership_final_state():
        for _ in range(trials):
            w = rand_word()
            inside = evaluate(act, basepoint, w) == basepoint
            _require(contains(table, w) == inside, "contains disagrees with the action")
            try:
                rewrite(table, transversal, basis, w)
                ended_at_zero = True
            except NotInSubgroupError as exc:
                ended_at_zero = False
                _require(exc.final_coset == coset_of(table, w), "reported final coset is wrong")
            _require(ended_at_zero == inside, "rewrite accepts exactly the stabilizer")

    check("membership-final-state", membership_final_state)

    # induce ----------------------------------------------------------------
    def induce_restriction_identity():
        restricted = restrict_to_h(ind, basis)
        _require(restricted == sigma.perms, "restriction does not recover the H-action")

    check("induce-restriction-identity", induce_restriction_identity)

    def induce_claim():
        _require(check_claim(ind, transversal), "a representative moved the A-coordinate")

    check("induce-claim", induce_claim)

    def induce_action_axioms():
        e = words.identity(alphabet)
        for _ in range(trials):
            v, w = rand_word(), rand_word()
            vw = words.concat(v, w)
            for p in range(ind.base.degree):
                _require(evaluate(ind.base, p, e) == p, "identity word moved an induced point")
                _require(
                    evaluate(ind.base, p, vw) == evaluate(ind.base, evaluate(ind.base, p, v), w),
                    "induced compatibility axiom failed",
                )

    check("induce-action-axioms", induce_action_axioms)

    def induce_coset_equivariance():
        for _ in range(trials):
            w = rand_word()
            for c in range(m):
                for a in range(h_degree):
                    _, c2 = ind.decode(evaluate(ind.base, ind.encode(a, c), w))
                    _require(c2 == table.trace(c, w), "coset coordinate strayed from the table")

    check("induce-coset-equivariance", induce_coset_equivariance)

    def induce_tensor_generic():
        for _ in range(trials):
            a = rng.randrange(h_degree)
            w_prior, g = rand_word(), rand_word()
            got = tensor_action_generic(sigma, table, transversal, basis, a, w_prior, g)
            start = ind.encode(a, coset_of(table, w_prior))
            _require(got == ind.decode(evaluate(ind.base, start, g)),
                     "transfer formula disagrees with the induced action")

    check("induce-tensor-generic", induce_tensor_generic)

    return results
