"""Battery of reference checks, runnable from the CLI as ``reproduce``.

Each check returns ``(passed, detail)``; exceptions are reported as
failures so one broken module does not hide the others.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction as F
from typing import Callable, FrozenSet, List, Optional, Sequence, Tuple

from .classify import (PairClass, centralizer_is_cyclic, classify_pair, legendre_symbol,
                       n_invariant, norm_form_search, power_commute_scan)
from .cosets import todd_coxeter
from .gensets import enumerate_Xq, is_prime
from .membership import factor_to_word
from .padic import det_mod, matmul_mod, psi_matrix_mod_pk, solve_cd
from .quat import imul, inorm, reduce_canonical
from .relations import (LONG_RELATION_5_17, SHORT_RELATION_3_5, commutator_word,
                        parse_exponent_word, verify_relation, word_length)
from .so3 import RotationMatrix, is_special_orthogonal, relation_transfer_check, theta
from .square_complex import Presentation, build_squares, check_link, fixed_points, normalize_square, rho_v
from .words import Word, evaluate_word, free_reduce, normalize_ab, normalize_ba

Builder = Callable[[int, int], Presentation]

RELATORS_3_5 = ("a1 b1 a2 b2", "a1 b2 a2 b1^-1", "a1 b3 a2^-1 b1",
                "a1 b3^-1 a1 b2^-1", "a1 b1^-1 a2^-1 b3", "a2 b3 a2 b2^-1")

THETA_REFERENCE = {
    (1, 2, 0, 0): [[1, 0, 0], [0, F(-3, 5), F(-4, 5)], [0, F(4, 5), F(-3, 5)]],
    (1, 0, 1, 1): [[F(-1, 3), F(-2, 3), F(2, 3)], [F(2, 3), F(1, 3), F(2, 3)],
                   [F(-2, 3), F(2, 3), F(1, 3)]],
    (1, 0, 0, 4): [[F(-15, 17), F(-8, 17), 0], [F(8, 17), F(-15, 17), 0], [0, 0, 1]],
}


@dataclass
class CheckResult:
    name: str
    tags: FrozenSet[str]
    passed: bool
    detail: str
    seconds: float = 0.0


@dataclass
class _Check:
    name: str
    tags: Tuple[str, ...]
    run: Callable[["_Context"], Tuple[bool, str]]


@dataclass
class _Context:
    builder: Builder
    rng: random.Random
    samples: int


def _jacobi(ctx):
    bad = [q for q in range(3, 100) if is_prime(q) and len(enumerate_Xq(q).elements) != 2 * (q + 1)]
    return not bad, "all odd primes q < 100" if not bad else f"wrong count for {bad}"


def _shape(ctx):
    expected = {(3, 5): (2, 3, 6), (5, 17): (3, 9, 27), (5, 7): (3, 4, 12), (13, 17): (7, 9, 63)}
    notes = []
    ok = True
    for (p, l), (m, n, s) in expected.items():
        pres = ctx.builder(p, l)
        link = check_link(pres, strict=False)
        good = (pres.m, pres.n, len(pres.squares)) == (m, n, s) and link.is_complete_bipartite()
        ok &= good
        notes.append(f"({p},{l}): {pres.m}+{pres.n} gens, {len(pres.squares)} squares, "
                     f"link {'ok' if link.is_complete_bipartite() else 'FAILS'}")
    return ok, "; ".join(notes)


def _relators_3_5(ctx):
    pres = ctx.builder(3, 5)
    ours = set(pres.squares)
    for text in RELATORS_3_5:
        w = Word.parse(pres, text)
        if not evaluate_word(w).is_identity():
            return False, f"{text} is not central"
        if normalize_square(w.letters) not in ours:
            return False, f"{text} is not one of the constructed squares"
    return True, "six relators central and matched"


def _indices(ctx):
    cases = [
        ((5, 17), [(1, 2, 0, 0), (1, 0, 0, 4)], 32),
        ((3, 5), ["a1", "b1"], 4),
        ((3, 5), ["a1^2", "b1^2"], 896),
    ]
    got = []
    for (p, l), subgens, want in cases:
        table = todd_coxeter(ctx.builder(p, l), subgens)
        got.append(table.index)
        if table.index != want:
            return False, f"index {table.index} (status {table.status}) instead of {want}"
    return True, "indices " + ", ".join(map(str, got))


def _long_relation(ctx):
    word = parse_exponent_word(LONG_RELATION_5_17)
    x, y = (1, 2, 0, 0), (1, 0, 0, 4)
    central = verify_relation((5, 17), word, x, y)
    rotation = relation_transfer_check(word, x, y)
    return central and rotation and word_length(word) == 106, \
        f"length {word_length(word)}, central={central}, rotation identity={rotation}"


def _short_relation(ctx):
    x, y = (1, 0, 1, 1), (1, 2, 0, 0)
    central = verify_relation((3, 5), SHORT_RELATION_3_5, x, y)
    rotation = relation_transfer_check(SHORT_RELATION_3_5, x, y)
    control = verify_relation(None, commutator_word(), (1, 2, 0, 0), (1, 0, 0, 4))
    return central and rotation and not control, \
        f"central={central}, rotation identity={rotation}, commutator central={control}"


def _anti_torus(ctx):
    a, b = reduce_canonical((1, 2, 0, 0)), reduce_canonical((1, 0, 0, 4))
    checks = [
        classify_pair(a, b, 5, 17) == PairClass.ANTI_TORUS,
        power_commute_scan(a, b, 5) is None,
        classify_pair(a, reduce_canonical((1, 4, 0, 0)), 5, 17) == PairClass.Z_CROSS_Z,
    ]
    pres = ctx.builder(5, 7)
    prod = reduce_canonical(imul((1, 0, 2, 0), (1, 0, 0, 2)))
    checks.append(classify_pair(prod, (1, 2, 1, 1), 5, 7) == PairClass.Z_CROSS_Z)
    singles = [classify_pair(pres.lift(2 * g), pres.lift(2 * h), 5, 7)
               for g in range(pres.m) for h in range(pres.m, pres.m + pres.n)]
    checks.append(all(c == PairClass.ANTI_TORUS for c in singles))
    return all(checks), f"{len(singles)} single-letter pairs classified"


def _centralizer(ctx):
    pres = ctx.builder(5, 17)
    b = reduce_canonical((3, 2, 2, 0))
    report = centralizer_is_cyclic(pres, b)
    letter = pres.letter_of_rep[b.rep]
    free = not fixed_points(rho_v(pres, [letter]))
    ok = (free and report.rho_fixpoint_free and n_invariant(b) == 2
          and legendre_symbol(-2, 5) == -1 and legendre_symbol(-2, 17) == 1)
    return ok, f"{report.status}, n={report.n}, symbols ({report.symbol_p}, {report.symbol_l})"


def _norm_search(ctx):
    found = norm_form_search(2, 5, 17, 10 ** 4, 10 ** 4, 12)
    return not found, "no solutions in the searched box" if not found else f"found {found[:3]}"


def _theta(ctx):
    for x, rows in THETA_REFERENCE.items():
        m = theta(x)
        if m != RotationMatrix.of(rows) or not is_special_orthogonal(m):
            return False, f"theta{x} differs"
    return True, "three matrices exact"


def _random_word(rng: random.Random, pres: Presentation, length: int) -> Word:
    return Word(tuple(rng.randrange(pres.num_letters) for _ in range(length)), pres)


def _normal_forms(ctx):
    pres = ctx.builder(3, 5)
    for _ in range(ctx.samples):
        w = _random_word(ctx.rng, pres, ctx.rng.randint(0, 12))
        g = evaluate_word(w)
        nf = normalize_ab(w)
        if evaluate_word(nf.word(pres)) != g or evaluate_word(normalize_ba(w).word(pres)) != g:
            return False, f"normal form of {w} changes the element"
        if free_reduce(nf.letters) != nf.letters or len(nf) > len(w):
            return False, f"normal form of {w} is not reduced"
        if len(nf) != sum(g.exponents(3, 5)):
            return False, f"normal form of {w} has the wrong length"
    return True, f"{ctx.samples} random words"


def _factor_round_trip(ctx):
    pres = ctx.builder(5, 7)
    for _ in range(ctx.samples):
        w = _random_word(ctx.rng, pres, ctx.rng.randint(1, 8))
        g = evaluate_word(w)
        if g.is_identity():
            continue
        if evaluate_word(factor_to_word(g.rep, pres)) != g:
            return False, f"factorization of {g} failed"
    return True, f"{ctx.samples} random words"


def _theta_properties(ctx):
    rng = ctx.rng
    for _ in range(ctx.samples):
        x = tuple(rng.randint(-20, 20) for _ in range(4))
        y = tuple(rng.randint(-20, 20) for _ in range(4))
        if inorm(x) == 0 or inorm(y) == 0:
            continue
        if theta(imul(x, y)) != theta(x) @ theta(y):
            return False, f"homomorphism fails at {x}, {y}"
        lam = rng.randint(1, 9) * rng.choice((-1, 1))
        if theta(tuple(lam * c for c in x)) != theta(x):
            return False, f"scaling fails at {x}"
    return True, f"{ctx.samples} random pairs"


def _padic(ctx):
    rng = ctx.rng
    for p in (3, 5, 7, 13, 17):
        for k in range(1, 7):
            params = solve_cd(p, k)
            mod = params.modulus
            for _ in range(max(1, ctx.samples // 30)):
                x = tuple(rng.randint(-50, 50) for _ in range(4))
                y = tuple(rng.randint(-50, 50) for _ in range(4))
                mx, my = psi_matrix_mod_pk(x, params), psi_matrix_mod_pk(y, params)
                if det_mod(mx, mod) != inorm(x) % mod:
                    return False, f"determinant fails for {x} mod {p}^{k}"
                if psi_matrix_mod_pk(imul(x, y), params) != matmul_mod(mx, my, mod):
                    return False, f"homomorphism fails for {x}, {y} mod {p}^{k}"
    return True, "p in {3,5,7,13,17}, k <= 6"


CHECKS: List[_Check] = [
    _Check("jacobi-counts", ("gensets",), _jacobi),
    _Check("presentation-shape", ("complex", "link"), _shape),
    _Check("relators-3-5", ("complex",), _relators_3_5),
    _Check("coset-indices", ("cosets",), _indices),
    _Check("long-relation", ("relations", "so3"), _long_relation),
    _Check("short-relation", ("relations", "so3"), _short_relation),
    _Check("anti-torus", ("classify",), _anti_torus),
    _Check("centralizer", ("classify",), _centralizer),
    _Check("norm-form-search", ("classify",), _norm_search),
    _Check("theta-matrices", ("so3",), _theta),
    _Check("normal-forms", ("properties", "rewrite"), _normal_forms),
    _Check("factor-round-trip", ("properties", "membership"), _factor_round_trip),
    _Check("theta-properties", ("properties", "so3"), _theta_properties),
    _Check("padic-congruences", ("properties", "padic"), _padic),
]


def run_reference_checks(only: Optional[Sequence[str]] = None, seed: int = 0,
                          samples: int = 200, builder: Builder = build_squares) -> List[CheckResult]:
    """Run the reference checks; ``only`` filters by check name or tag."""
    wanted = set(only or ())
    results = []
    for check in CHECKS:
        if wanted and check.name not in wanted and not wanted.intersection(check.tags):
            continue
        ctx = _Context(builder, random.Random(f"{seed}:{check.name}"), samples)
        start = time.perf_counter()
        try:
            passed, detail = check.run(ctx)
        except Exception as exc:  # reported, never raised
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(check.name, frozenset(check.tags), bool(passed), detail,
                                   time.perf_counter() - start))
    return results


def format_report(results: Sequence[CheckResult]) -> str:
    width = max((len(r.name) for r in results), default=0)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name.ljust(width)}  {r.detail}" for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"
