"""Command line front end.

    lecture-hall basis --family modk --k 2 --n 3 --format json
    lecture-hall verify --seq 2,3,4,5 --bound 10
    lecture-hall ehrhart --polytope P --seq 1,2,3 --t 2

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
budget errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from typing import Optional

from .closed_form import (
    Custom,
    Dim2,
    Dim3,
    Dim4,
    LSeq,
    ModK,
    basis_for,
    detect_family,
    dim4_case,
)
from .core import Grading, HilbertBasis, InvalidSequenceError, Sequence, degree
from .ehrhart import cardinality_formula, count_P, count_R, ehrhart_modk
from .gorenstein import (
    detect_u_generated,
    geometric_gorenstein_point,
    gorenstein_point,
    gorenstein_recurrence,
)
from .oracle import (
    DEFAULT_MAX_VOLUME,
    BudgetExceededError,
    generates_up_to,
    hilbert_basis_oracle,
    verify_gorenstein_shift,
)


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _int_range(text: str) -> list[int]:
    """``"3"``, ``"1-4"`` or ``"1,2,5"``."""
    out = []
    for part in text.split(","):
        lo, sep, hi = part.partition("-")
        try:
            out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
        except ValueError:
            raise UsageError(f"bad range {text!r}")
    return out


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--family {args.family} needs " + ", ".join("--" + m for m in missing))


def family_from_args(args) -> Optional[object]:
    f = args.family
    if f == "modk":
        _need(args, "k", "n")
        return ModK(int(args.k), int(args.n))
    if f == "lseq":
        _need(args, "l", "n")
        return LSeq(int(args.l), int(args.n))
    if f == "dim2":
        _need(args, "s", "k")
        return Dim2(int(args.s), int(args.k))
    if f == "dim3":
        _need(args, "s", "k", "l")
        return Dim3(int(args.s), int(args.k), int(args.l))
    if f == "dim4":
        _need(args, "s", "u")
        u = _int_list(args.u)
        if len(u) != 3:
            raise UsageError("--u needs three entries for dim4")
        s1 = int(args.s)
        return Dim4(s1, *u, dim4_case(s1, u[0]))
    return None


def resolve(args):
    """Sequence and family descriptor from ``--seq`` or ``--family``."""
    if args.seq is not None and args.family is not None:
        raise UsageError("give either --seq or --family, not both")
    if args.family is not None:
        fam = family_from_args(args)
        return fam.sequence(), fam
    if args.seq is None:
        raise UsageError("a sequence is required (--seq or --family)")
    s = Sequence(tuple(_int_list(args.seq)))
    return s, detect_family(s)


def _basis(s, fam, max_volume, notices) -> HilbertBasis:
    if isinstance(fam, Custom):
        notices.append(f"no closed form for {s}; computed by oracle")
        return hilbert_basis_oracle(s, max_volume)
    return basis_for(fam)


def _last_diff(basis: HilbertBasis):
    if basis.sequence.n < 2:
        return None
    return [degree(b, Grading.LAST_DIFF) for b in basis.elements]


def make_report(s, fam, basis, gorenstein=None, verification=None) -> dict:
    return {
        "sequence": list(s.entries),
        "family": None if isinstance(fam, Custom) else str(fam),
        "method": basis.method,
        "basis": [list(b) for b in basis.elements],
        "cardinality": len(basis),
        "degrees": {"last_diff": _last_diff(basis)},
        "gorenstein": gorenstein,
        "verification": verification,
    }


def _fmt_point(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def render_plain(report: dict) -> str:
    lines = [
        f"sequence: {_fmt_point(report['sequence'])}",
        f"family: {report['family'] or '-'}",
        f"method: {report['method']}",
        f"cardinality: {report['cardinality']}",
        "basis:",
    ]
    lines += ["  " + _fmt_point(b) for b in report["basis"]]
    g = report["gorenstein"]
    if g is not None:
        lines.append("gorenstein:")
        lines.append(f"  u: {_fmt_point(g['u']) if g['u'] is not None else '-'}")
        lines.append(f"  c: {_fmt_point(g['c']) if g['c'] is not None else '-'}")
        lines.append(f"  method: {g.get('method') or '-'}")
        lines.append(f"  verified_bound: {g['verified_bound']}")
    v = report["verification"]
    if v is not None:
        lines.append(f"verification: {'passed' if v['passed'] else 'FAILED'}")
        lines += ["  note: " + n for n in v["notes"]]
        lines += ["  witness: " + _fmt_point(w) for w in v["witnesses"]]
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["element"] + [f"x{i + 1}" for i in range(len(report["sequence"]))])
        for i, b in enumerate(report["basis"]):
            w.writerow([i] + b)
        return buf.getvalue()
    return render_plain(report)


def verify_basis(s, fam, basis_oracle, bound) -> dict:
    """Closed form against oracle, generation, minimality and cardinality."""
    notes, witnesses = [], []
    passed = True
    candidate = basis_oracle
    if not isinstance(fam, Custom):
        closed = basis_for(fam)
        candidate = closed
        extra = sorted(closed.as_set() - basis_oracle.as_set())
        missing = sorted(basis_oracle.as_set() - closed.as_set())
        if extra or missing:
            passed = False
            witnesses += extra + missing
            notes.append(f"closed form {fam} differs from oracle: extra {extra}, missing {missing}")
        else:
            notes.append(f"closed form {fam} equals oracle ({len(closed)} elements)")
        if closed.pruned:
            notes.append(f"listed elements dropped as reducible: {[list(p) for p in closed.pruned]}")
        formula = cardinality_formula(fam)
        actual = len(basis_oracle)
        line = f"cardinality formula {formula.value} ({formula.flag}) vs oracle {actual}"
        if formula.note:
            line += f"; {formula.note}"
        notes.append(line)
        if formula.value != actual and formula.authoritative:
            passed = False
    gen = generates_up_to(s, candidate.elements, bound)
    notes.append(f"generation up to last coordinate {bound}: {'pass' if gen.passed else 'FAIL'}")
    if not gen.passed:
        passed = False
        witnesses += gen.witnesses
    redundant = []
    elements = list(candidate.elements)
    for b in elements:
        rest = [x for x in elements if x != b]
        rep = generates_up_to(s, rest, b[-1], max_witnesses=None)
        if b not in rep.witnesses:
            redundant.append(b)
    notes.append(f"minimality: {'pass' if not redundant else 'FAIL'}")
    if redundant:
        passed = False
        witnesses += redundant
    return {"passed": passed, "witnesses": [list(w) for w in witnesses], "notes": notes}


def gorenstein_section(s, bound) -> tuple[dict, bool]:
    u = detect_u_generated(s)
    cert = gorenstein_point(s, u) if u is not None else gorenstein_recurrence(s)
    if cert is None:
        geo = geometric_gorenstein_point(s, max(bound, s.n * s[-1]))
        if geo is None:
            return {"u": None, "c": None, "method": None, "verified_bound": bound}, True
        cert = geo
    ok = verify_gorenstein_shift(s, cert.c, bound).passed
    section = {
        "u": list(cert.u) if cert.u is not None else None,
        "c": list(cert.c),
        "method": cert.method,
        "verified_bound": bound if ok else 0,
    }
    return section, ok


def cmd_basis(args, out, notices) -> int:
    s, fam = resolve(args)
    basis = _basis(s, fam, args.max_volume, notices)
    out.write(render(make_report(s, fam, basis), args.format))
    return 0


def cmd_oracle(args, out, notices) -> int:
    s, fam = resolve(args)
    basis = hilbert_basis_oracle(s, args.max_volume)
    out.write(render(make_report(s, fam, basis), args.format))
    return 0


def cmd_verify(args, out, notices) -> int:
    s, fam = resolve(args)
    oracle_basis = hilbert_basis_oracle(s, args.max_volume)
    bound = args.bound if args.bound is not None else 2 * s[-1]
    verification = verify_basis(s, fam, oracle_basis, bound)
    basis = oracle_basis if isinstance(fam, Custom) else basis_for(fam)
    out.write(render(make_report(s, fam, basis, verification=verification), args.format))
    return 0 if verification["passed"] else 1


def cmd_gorenstein(args, out, notices) -> int:
    s, fam = resolve(args)
    bound = args.bound if args.bound is not None else 3 * s[-1]
    section, ok = gorenstein_section(s, bound)
    basis = _basis(s, fam, args.max_volume, notices)
    verification = None
    if not ok:
        verification = {
            "passed": False,
            "witnesses": [],
            "notes": [f"certificate {section['c']} fails the shift check up to {bound}"],
        }
    out.write(render(make_report(s, fam, basis, gorenstein=section, verification=verification), args.format))
    return 0 if ok else 1


def cmd_ehrhart(args, out, notices) -> int:
    s, fam = resolve(args)
    if args.t is None or args.t < 0:
        raise UsageError("--t must be a nonnegative integer")
    if args.use_formula:
        if not isinstance(fam, ModK):
            raise UsageError("--use-formula needs a 1 mod k sequence")
        if args.polytope != "P":
            raise UsageError("--use-formula evaluates the polytope P only")
        value = ehrhart_modk(fam.k, fam.n, args.t)
    else:
        value = count_P(s, args.t) if args.polytope == "P" else count_R(s, args.t)
    if args.format == "json":
        out.write(json.dumps({"sequence": list(s.entries), "polytope": args.polytope, "t": args.t, "count": value}, indent=2) + "\n")
    elif args.format == "csv":
        out.write(f"polytope,t,count\n{args.polytope},{args.t},{value}\n")
    else:
        out.write(f"{value}\n")
    return 0


SWEEP_PARAMS = {
    "modk": ("k", "n"),
    "lseq": ("l", "n"),
    "dim2": ("s", "k"),
    "dim3": ("s", "k", "l"),
    "dim4": ("s", "u1", "u2", "u3"),
}


def _sweep_families(args):
    name = args.family
    if name is None:
        raise UsageError("sweep needs --family")
    grids = {}
    for p in SWEEP_PARAMS[name]:
        attr = "u" if p.startswith("u") else p
        raw = getattr(args, attr)
        if raw is None:
            raise UsageError(f"sweep --family {name} needs --{attr} (a range like 1-4)")
        grids[p] = _int_range(raw)
    for values in itertools.product(*grids.values()):
        params = dict(zip(grids, values))
        try:
            if name == "modk":
                fam = ModK(params["k"], params["n"])
            elif name == "lseq":
                fam = LSeq(params["l"], params["n"])
            elif name == "dim2":
                fam = Dim2(params["s"], params["k"])
            elif name == "dim3":
                fam = Dim3(params["s"], params["k"], params["l"])
            else:
                s1, u1 = params["s"], params["u1"]
                fam = Dim4(s1, u1, params["u2"], params["u3"], dim4_case(s1, u1))
            s = fam.sequence()
            if isinstance(fam, (ModK, LSeq)) and s.n < 2:
                continue
        except InvalidSequenceError:
            continue
        yield params, fam, s


def cmd_sweep(args, out, notices) -> int:
    rows = []
    for params, fam, s in _sweep_families(args):
        oracle_count = len(hilbert_basis_oracle(s, args.max_volume))
        closed_count = len(basis_for(fam))
        formula = cardinality_formula(fam)
        row = dict(params)
        row.update(
            family=str(fam),
            sequence=" ".join(map(str, s.entries)),
            cardinality=oracle_count,
            closed_form=closed_count,
            formula=formula.value,
            flag=formula.flag,
            match=formula.value == oracle_count,
        )
        rows.append(row)
    status = 0
    if any(r["closed_form"] != r["cardinality"] for r in rows):
        status = 1
    if any(not r["match"] and r["flag"] == "authoritative" for r in rows):
        status = 1
    if args.format == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        header = ["family", "sequence", *SWEEP_PARAMS[args.family], "cardinality", "closed_form", "formula", "flag", "match"]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([str(r[h]).lower() if isinstance(r[h], bool) else r[h] for h in header])
        out.write(buf.getvalue())
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seq", help="comma-separated sequence, e.g. 1,3,5")
    common.add_argument("--family", choices=sorted(SWEEP_PARAMS))
    common.add_argument("--k")
    common.add_argument("--l")
    common.add_argument("--n")
    common.add_argument("--s")
    common.add_argument("--u", help="comma-separated u vector (dim4) or range (sweep)")
    common.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--bound", type=int)
    common.add_argument("--max-volume", type=int, default=DEFAULT_MAX_VOLUME)

    parser = argparse.ArgumentParser(prog="lecture-hall", description="Hilbert bases of lecture hall cones")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("basis", parents=[common], help="closed-form basis (oracle fallback)")
    sub.add_parser("oracle", parents=[common], help="brute-force basis")
    sub.add_parser("verify", parents=[common], help="closed form vs oracle, generation, minimality")
    eh = sub.add_parser("ehrhart", parents=[common], help="lattice points in t*P or t*R")
    eh.add_argument("--polytope", choices=("P", "R"), default="P")
    eh.add_argument("--t", type=int)
    eh.add_argument("--use-formula", action="store_true", help="closed formula (1 mod k, polytope P)")
    sub.add_parser("gorenstein", parents=[common], help="Gorenstein point and shift check")
    sub.add_parser("sweep", parents=[common], help="cardinalities over a parameter grid")
    return parser


COMMANDS = {
    "basis": cmd_basis,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "ehrhart": cmd_ehrhart,
    "gorenstein": cmd_gorenstein,
    "sweep": cmd_sweep,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "sweep" and args.format == "plain":
        args.format = "csv"
    buf = io.StringIO()
    notices: list[str] = []
    try:
        status = COMMANDS[args.command](args, buf, notices)
    except (UsageError, InvalidSequenceError) as exc:
        print(f"lecture-hall: error: {exc}", file=stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"lecture-hall: error: {exc} (raise --max-volume to allow it)", file=stderr)
        return 2
    for note in notices:
        print(f"lecture-hall: {note}", file=stderr)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(buf.getvalue())
    else:
        stdout.write(buf.getvalue())
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
