"""Command-line front end.  Exit codes: 0 ok, 1 domain or parse error, 2 coset overflow."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import classify, cosets, gensets, membership, padic, relations, so3
from .errors import DomainError, ParseError, QuatLatticeError
from .quat import format_quaternion, parse_quaternion
from .reproduce import format_report, run_reference_checks
from .square_complex import build_squares, export_presentation
from .words import Word, evaluate_word, normalize_ab, normalize_ba

EXIT_OK, EXIT_ERROR, EXIT_OVERFLOW = 0, 1, 2


def _prime(text: str) -> int:
    try:
        q = int(text)
    except ValueError:
        raise DomainError(f"{text!r} is not an integer") from None
    if q < 3 or not gensets.is_prime(q):
        raise DomainError(f"{q} is not an odd prime")
    return q


def _pair(args):
    p, l = _prime(args.p), _prime(args.l)
    if p == l:
        raise DomainError("p and l must be distinct")
    return p, l


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _quat(text: str):
    return parse_quaternion(text)


def cmd_genset(args) -> int:
    q = _prime(args.q)
    gs = gensets.generator_set(q)
    letters = [
        {"letter": gs.letter_name(i), "rep": format_quaternion(rep),
         "inverse": format_quaternion(gs.lift(i, -1))}
        for i, rep in enumerate(gs.letters)
    ]
    payload = {"q": q, "size": len(gs.elements),
               "elements": [format_quaternion(x) for x in gs.elements], "letters": letters}
    lines = [f"X_{q}: {len(gs.elements)} elements"]
    lines += [" ".join(format_quaternion(x) for x in gs.elements)]
    lines += [f"{e['letter']} = {e['rep']}  (inverse {e['inverse']})" for e in letters]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_present(args) -> int:
    p, l = _pair(args)
    pres = build_squares(p, l)
    sys.stdout.write(export_presentation(pres, "json" if args.json else "text"))
    return EXIT_OK


def cmd_classify(args) -> int:
    p, l = _pair(args)
    a, b = _quat(args.a), _quat(args.b)
    result = classify.classify_pair(a, b, p, l)
    payload = {"class": str(result)}
    text = str(result)
    if args.scan:
        hit = classify.power_commute_scan(a, b, args.scan)
        payload["commuting_powers"] = list(hit) if hit else None
        text += f"\ncommuting powers up to {args.scan}: {hit if hit else 'none'}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_centralizer(args) -> int:
    p, l = _pair(args)
    pres = build_squares(p, l)
    report = classify.centralizer_is_cyclic(pres, _quat(args.b))
    payload = {"status": str(report.status), "rho_fixpoint_free": report.rho_fixpoint_free,
               "legendre_criterion": report.legendre_criterion, "n": report.n,
               "symbol_p": report.symbol_p, "symbol_l": report.symbol_l}
    rho = {None: "n/a", True: "yes", False: "no"}[report.rho_fixpoint_free]
    text = (f"{report.status}\nrho_v fixpoint-free: {rho}\n"
            f"n = {report.n}, (-n/{p}) = {report.symbol_p}, (-n/{l}) = {report.symbol_l}")
    _emit(args, payload, text)
    return EXIT_OK


def _subgroup_word(pres, token: str) -> Word:
    token = token.strip()
    try:
        return membership.factor_to_word(parse_quaternion(token), pres)
    except ParseError:
        return Word.parse(pres, token)


def cmd_index(args) -> int:
    p, l = _pair(args)
    pres = build_squares(p, l)
    words = [_subgroup_word(pres, t) for t in args.subgens.split(";") if t.strip()]
    if not words:
        raise ParseError("no subgroup generators given")
    table = cosets.todd_coxeter(pres, words, max_cosets=args.max_cosets,
                                strategy=args.strategy, backend=args.backend)
    payload = {"status": table.status, "index": table.index,
               "subgroup": [str(w) for w in words], "max_cosets": args.max_cosets}
    if not table.is_closed:
        _emit(args, payload, f"overflow at {args.max_cosets} cosets; index unknown")
        return EXIT_OVERFLOW
    if args.table:
        with open(args.table, "w") as fh:
            fh.write(table.to_json())
    _emit(args, payload, f"index {table.index}")
    return EXIT_OK


def cmd_verify_relation(args) -> int:
    p, l = _pair(args)
    word = relations.parse_exponent_word(args.word)
    x, y = _quat(args.x), _quat(args.y)
    central = relations.verify_relation((p, l), word, x, y)
    rotation = so3.relation_transfer_check(word, x, y)
    payload = {"length": relations.word_length(word), "holds": central, "holds_in_so3": rotation}
    text = (f"relation of length {relations.word_length(word)}: "
            f"{'holds' if central else 'does not hold'}"
            f"\nrotation product: {'identity' if rotation else 'not identity'}")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_normform(args) -> int:
    p, l = _pair(args)
    pres = build_squares(p, l)
    w = Word.parse(pres, args.word)
    nf = normalize_ab(w) if args.order == "ab" else normalize_ba(w)
    word = nf.word(pres)
    element = evaluate_word(w)
    payload = {"normal_form": str(word), "length": len(word), "element": format_quaternion(element.rep)}
    _emit(args, payload, f"{word}\nelement {format_quaternion(element.rep)}")
    return EXIT_OK


def cmd_norm_search(args) -> int:
    p, l = _pair(args)
    found = classify.norm_form_search(args.n, p, l, args.t_max, args.u_max, args.exp_max,
                                      include_zero=args.include_zero)
    payload = {"solutions": [w._asdict() for w in found]}
    if found:
        text = "\n".join(f"t={w.t} u={w.u} r={w.r} s={w.s}" for w in found)
    else:
        text = "no solutions in the searched range"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_factor(args) -> int:
    p, l = _pair(args)
    pres = build_squares(p, l)
    word = membership.factor_to_word(_quat(args.x), pres)
    payload = {"word": str(word), "length": len(word)}
    _emit(args, payload, str(word))
    return EXIT_OK


def cmd_so3(args) -> int:
    x = _quat(args.x)
    m = so3.theta(x)
    payload = {"matrix": m.to_strings()}
    text = str(m)
    if args.axis_angle:
        aa = so3.rotation_axis_angle(x)
        payload.update(axis=list(aa.axis), cos_omega=str(aa.cos_omega),
                       cos_half_squared=str(aa.cos_half_sq), cos_half_sign=aa.cos_half_sign)
        text += (f"\naxis {aa.axis}\ncos omega = {aa.cos_omega}"
                 f"\ncos^2(omega/2) = {aa.cos_half_sq}, sign {aa.cos_half_sign:+d}")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_padic_embed(args) -> int:
    p, l = _pair(args)
    x = _quat(args.x)
    if args.precision < 1:
        raise DomainError("precision must be at least 1")
    payload = {}
    lines = []
    for q in (p, l):
        params = padic.solve_cd(q, args.precision)
        m = padic.psi_matrix_mod_pk(x, params)
        payload[str(q)] = {"c": params.c, "d": params.d, "modulus": params.modulus,
                           "matrix": [list(r) for r in m]}
        lines.append(f"mod {q}^{args.precision}: c={params.c} d={params.d} "
                     f"matrix {[list(r) for r in m]}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_reproduce(args) -> int:
    only = [t for item in (args.only or []) for t in item.split(",") if t]
    results = run_reference_checks(only=only, seed=args.seed, samples=args.samples)
    if args.json:
        payload = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(format_report(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quatlattice", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, pair=True, **kw):
        sp = sub.add_parser(name, **kw)
        if pair:
            sp.add_argument("p")
            sp.add_argument("l")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("genset", cmd_genset, pair=False, help="list X_q and its letters")
    sp.add_argument("q")
    add("present", cmd_present, help="square presentation of Gamma_{p,l}")
    sp = add("classify", cmd_classify, help="anti-torus or Z x Z")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--scan", type=int, default=0, help="also scan powers up to this bound")
    sp = add("centralizer", cmd_centralizer, help="cyclic-centralizer certificates")
    sp.add_argument("--b", required=True)
    sp = add("index", cmd_index, help="subgroup index by coset enumeration")
    sp.add_argument("--subgens", required=True, help='";"-separated quaternions or words')
    sp.add_argument("--max-cosets", type=int, default=cosets.DEFAULT_MAX_COSETS)
    sp.add_argument("--table", help="write the closed coset table as JSON")
    sp.add_argument("--strategy", choices=("felsch", "hlt"), default="felsch")
    sp.add_argument("--backend", choices=sorted(cosets.KERNELS), default=None)
    sp = add("verify-relation", cmd_verify_relation, help="check a relation in x, y")
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp.add_argument("--word", required=True)
    sp = add("normform", cmd_normform, help="ab or ba normal form of a word")
    sp.add_argument("--word", required=True)
    sp.add_argument("--order", choices=("ab", "ba"), default="ab")
    sp = add("norm-search", cmd_norm_search, help="bounded search for t^2+4nu^2 = p^r l^s")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t-max", type=int, default=10 ** 4)
    sp.add_argument("--u-max", type=int, default=10 ** 4)
    sp.add_argument("--exp-max", type=int, default=12)
    sp.add_argument("--include-zero", action="store_true", help="allow r = 0 or s = 0")
    sp = add("factor", cmd_factor, help="write an admissible quaternion as a word")
    sp.add_argument("--x", required=True)
    sp = add("so3", cmd_so3, pair=False, help="rotation matrix of a quaternion")
    sp.add_argument("--x", required=True)
    sp.add_argument("--axis-angle", action="store_true")
    sp = add("padic-embed", cmd_padic_embed, help="2x2 matrices mod p^k and l^k")
    sp.add_argument("--x", required=True)
    sp.add_argument("--precision", type=int, default=1)
    sp = add("reproduce", cmd_reproduce, pair=False, help="run the reference checks")
    sp.add_argument("--only", action="append", help="check name or tag (repeatable)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=200)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QuatLatticeError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
