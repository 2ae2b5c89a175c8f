"""Command-line surface: enumeration, polynomials, ideals, lattice queries,
and the verification harness, with text or JSON output.

Exit codes: 0 success, 1 at least one verification case failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import asm as asm_mod
from . import bpd as bpd_mod
from . import perms
from . import transition as tr
from .groebner import asm_generators, buchberger, fulton_generators, initial_ideal
from .monomial import MonomialIdeal, grading_images, prime_names
from .rings import lex_ring, matrix_ring, parse_poly
from .schubert import (
    double_ring,
    grothendieck_poly,
    grothendieck_ring,
    schubert_poly,
    set_beta,
    single_schubert_poly,
    x_ring,
)

SCHEMA = "bumpless-report/1"


def _perm(text: str):
    return perms.perm_from_text(text)


def _asm(text: str):
    return asm_mod.asm_from_text(text.replace(";", "\n").replace("/", "\n"))


def _perm_or_asm(text: str):
    """Permutations are digit words; ASM rows carry separators or signs."""
    try:
        return asm_mod.from_permutation(_perm(text))
    except ValueError:
        return _asm(text)


def _cell(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*[,x]\s*(\d+)\s*", text)
    if not m:
        raise ValueError(f"expected a cell like 3,2 — got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _monomial_ideal(text: str, order: str):
    cells = re.findall(r"z\[(\d+),(\d+)\]", text)
    if not cells:
        raise ValueError("no z[i,j] variables found in the ideal text")
    n = max(int(v) for pair in cells for v in pair)
    ring = matrix_ring(n, order)
    pieces = re.split(r",(?![^\[]*\])", text)
    return MonomialIdeal.from_polys(
        [parse_poly(ring, p) for p in pieces if p.strip()]
    )


def _emit(args, lines, payload) -> None:
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, indent=1, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_bpd(args) -> int:
    w = _perm(args.word)
    grids = sorted(bpd_mod.enumerate_bpds(w))
    if args.action == "count":
        _emit(args, [str(len(grids))], {"count": len(grids)})
    else:
        blocks = [bpd_mod.bpd_to_text(B) for B in grids]
        _emit(args, ["\n\n".join(blocks)], {"bpds": [bpd_mod.bpd_to_json(B) for B in grids]})
    return 0


def cmd_poly(args) -> int:
    w = _perm(args.word)
    n = len(w)
    if args.kind == "schubert":
        f = single_schubert_poly(w, x_ring(n))
    elif args.kind == "dschubert":
        f = schubert_poly(w, double_ring(n))
    else:
        f = grothendieck_poly(w, grothendieck_ring(n))
        if args.beta is not None:
            f = set_beta(f, args.beta)
    _emit(args, [f.to_text()], {"poly": f.term_map()})
    return 0


def cmd_ideal(args) -> int:
    if args.kind == "fulton":
        w = _perm(args.input)
        ring = matrix_ring(len(w), args.order)
        gens = fulton_generators(w, ring)
    else:
        A = _perm_or_asm(args.input)
        ring = matrix_ring(len(A), args.order)
        gens = asm_generators(A, ring)
    if args.kind == "gb":
        gens = buchberger(gens)
    elif args.kind == "init":
        ms = initial_ideal(gens)
        texts = [ring.monomial_text(m) for m in ms]
        _emit(args, texts, {"generators": texts})
        return 0
    texts = [g.to_text() for g in gens]
    _emit(args, texts, {"generators": texts})
    return 0


def cmd_mono(args) -> int:
    J = _monomial_ideal(args.ideal, args.order)
    ring = J.ring
    if args.action == "decompose":
        comps = [
            [ring.monomial_text(m) for m in Q.gens]
            for Q in J.irreducible_components()
        ]
        lines = [" , ".join(c) for c in comps]
        _emit(args, lines, {"components": comps})
    elif args.action == "ass":
        names = [list(prime_names(ring, P)) for P in J.associated_primes()]
        _emit(args, [" , ".join(p) for p in names], {"primes": names})
    else:
        n = max(int(v) for nm in ring.names for v in re.findall(r"\d+", nm))
        if args.grading == "standard":
            target = lex_ring(("q",))
        elif args.grading == "rows":
            target = x_ring(n)
        else:
            target = double_ring(n)
        images = grading_images(ring, target, args.grading)
        grade = J.multidegree if args.action == "multidegree" else J.k_polynomial
        f = grade(target, images)
        _emit(args, [f.to_text()], {"poly": f.term_map()})
    return 0


def cmd_lattice(args) -> int:
    if args.action in ("join", "meet"):
        asms = [_perm_or_asm(t) for t in args.inputs]
        out = asm_mod.join(asms) if args.action == "join" else asm_mod.meet(asms)
        _emit(args, [asm_mod.asm_to_text(out)], {"asm": [list(r) for r in out]})
        return 0
    A = _perm_or_asm(args.inputs[0])
    if args.action == "perm":
        words = sorted(perms.perm_to_text(w) for w in asm_mod.perm_set(A))
    else:
        words = sorted(
            perms.perm_to_text(w)
            for w in asm_mod.bigrassmannian_join_decomposition(A)
        )
    _emit(args, words, {"permutations": words})
    return 0


def _corner_cases(n):
    for w in perms.all_perms(n):
        for corner in sorted(perms.lower_outside_corners(w)):
            yield w, corner


def _verify_cases(args) -> list[tuple]:
    kind = args.target
    n = args.all_sn
    if n is not None:
        if kind == "main":
            return [("main", [w], args.order) for w in perms.all_perms(n)]
        if kind == "theoremB":
            return [("theoremB", w) for w in perms.all_perms(n)]
        if kind == "asm":
            return [("asm", A) for A in asm_mod.all_asms(n)]
        if kind == "ycompat":
            out = []
            for w in perms.all_perms(n):
                cell = tr.maximal_accessible_cell([w])
                if cell is not None:
                    out.append(("ycompat", [w], cell, args.order))
            return out
        if kind == "hilbert":
            return [("hilbert", w, c, args.order) for w, c in _corner_cases(n)]
        return [(kind, w, c) for w, c in _corner_cases(n)]

    if not args.inputs:
        raise ValueError("give case inputs or --all-sn N")
    if kind == "asm":
        return [("asm", _perm_or_asm(t)) for t in args.inputs]
    words = [_perm(t) for t in args.inputs]
    if kind == "main":
        return [("main", words, args.order)]
    if kind == "theoremB":
        return [("theoremB", w) for w in words]
    if kind == "ycompat":
        cell = _cell(args.corner) if args.corner else tr.maximal_accessible_cell(words)
        if cell is None:
            raise ValueError("no accessible cell; pass --corner")
        return [("ycompat", words, cell, args.order)]
    out = []
    for w in words:
        corners = (
            [_cell(args.corner)]
            if args.corner
            else sorted(perms.lower_outside_corners(w))
        )
        if kind == "hilbert":
            out.extend(("hilbert", w, c, args.order) for c in corners)
        else:
            out.extend((kind, w, c) for c in corners)
    return out


def run_verify_case(case: tuple) -> dict:
    kind = case[0]
    if kind == "main":
        return tr.verify_main_theorem(case[1], order=case[2])
    if kind == "transition":
        return tr.verify_schubert_transition(case[1], case[2])
    if kind == "groth-transition":
        return tr.verify_grothendieck_transition(case[1], case[2])
    if kind == "theoremB":
        return tr.verify_theorem_B(case[1])
    if kind == "linkdecomp":
        return tr.verify_link_decomposition(case[1], case[2])
    if kind == "asm":
        return tr.verify_asm_lattice(case[1])
    if kind == "ycompat":
        return tr.verify_ycompat(case[1], case[2], order=case[3])
    if kind == "hilbert":
        return tr.verify_hilbert_transition(case[1], case[2], order=case[3])
    raise ValueError(f"unknown verify target {kind!r}")


def cmd_verify(args) -> int:
    cases = _verify_cases(args)
    if args.workers > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            reports = list(pool.map(run_verify_case, cases))
    else:
        reports = [run_verify_case(c) for c in cases]
    failed = [r for r in reports if r["status"] != "pass"]
    lines = [
        f"{r['status'].upper():4} {r['case']}  {r['statement']}" for r in reports
    ]
    lines.append(f"{len(reports) - len(failed)} passed, {len(failed)} failed")
    _emit(args, lines, {"reports": reports, "failed": len(failed)})
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="bumpless",
        description="Pipe tilings, determinantal ideals, and their degenerations.",
    )
    top.add_argument("--format", choices=("text", "json"), default="text")
    top.add_argument(
        "--workers",
        type=int,
        default=int(os.environ.get("BUMPLESS_WORKERS", os.cpu_count() or 1)),
        help="parallel verification cases (default: available cores)",
    )
    top.add_argument("--cache-dir", help="basis cache directory override")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bpd", help="enumerate or count pipe tilings")
    p.add_argument("action", choices=("enum", "count"))
    p.add_argument("word")
    p.set_defaults(fn=cmd_bpd)

    p = sub.add_parser("poly", help="Schubert and Grothendieck polynomials")
    p.add_argument("kind", choices=("schubert", "dschubert", "groth"))
    p.add_argument("word")
    p.add_argument("--beta", type=int, default=None, help="substitute beta")
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("ideal", help="determinantal generators and bases")
    p.add_argument("kind", choices=("fulton", "asm", "gb", "init"))
    p.add_argument("input", help="permutation word, or ASM rows split by ;")
    p.add_argument("--order", default="antidiag", help="diag | antidiag | col-lex | tau:a,b | yref:a,b:BASE")
    p.set_defaults(fn=cmd_ideal)

    p = sub.add_parser("mono", help="monomial-ideal decompositions and gradings")
    p.add_argument("action", choices=("decompose", "ass", "kpoly", "multidegree"))
    p.add_argument("ideal", help="comma-separated monomials in z[i,j]")
    p.add_argument("--order", default="antidiag")
    p.add_argument(
        "--grading",
        choices=("standard", "rows", "rows-columns"),
        default="rows-columns",
    )
    p.set_defaults(fn=cmd_mono)

    p = sub.add_parser("lattice", help="ASM lattice operations")
    p.add_argument("action", choices=("join", "meet", "perm", "decompose"))
    p.add_argument("inputs", nargs="+", help="permutations or ASMs")
    p.set_defaults(fn=cmd_lattice)

    p = sub.add_parser("verify", help="run verification cases")
    p.add_argument(
        "target",
        choices=(
            "main",
            "transition",
            "groth-transition",
            "theoremB",
            "linkdecomp",
            "asm",
            "ycompat",
            "hilbert",
        ),
    )
    p.add_argument("inputs", nargs="*", help="permutations (or ASMs for asm)")
    p.add_argument("--all-sn", type=int, default=None, metavar="N",
                   help="sweep every case at matrix size N")
    p.add_argument("--corner", default=None, help="cell a,b")
    p.add_argument("--order", default="diag")
    p.set_defaults(fn=cmd_verify)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cache_dir:
        os.environ["BUMPLESS_CACHE_DIR"] = args.cache_dir
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
