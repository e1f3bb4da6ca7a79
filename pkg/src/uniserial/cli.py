"""Command line entry point: ``uniserial <command> --input FILE ...``."""

from __future__ import annotations

import argparse
import sys

from . import analysis, linalg, rep
from .detours import build_mast_context
from .dsl import ParseError, parse_path, parse_point, parse_presentation, parse_sequence
from .fields import ScalarField
from .report import Report, digest
from .variety import EMPTY, UniserialPoint, build_variety, count_points, sample_point

COMMANDS = ("parse", "masts", "detours", "variety", "fiber", "endo", "isomorphic",
            "uniserdim", "quotient-check", "finite-type", "count-points")


class DomainError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="uniserial", description=__doc__)
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--input", required=True, help="presentation file")
    ap.add_argument("--sequence", help='vertex word, e.g. "1 2 1 2 3 2 4"')
    ap.add_argument("--path", help='path, right to left, e.g. "a2*a1"')
    ap.add_argument("--point", help='coordinates "arrow,m,i=value;..."')
    ap.add_argument("--other-point", help="second point for `isomorphic`")
    ap.add_argument("--field", default="Q", help="Q or a prime q")
    ap.add_argument("--samples", type=int, default=16)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-len", type=int)
    return ap


def _need(args, name):
    val = getattr(args, name.replace("-", "_"))
    if val is None:
        raise ParseError(f"--{name} is required for {args.command}")
    return val


def _point(model, text, args):
    if text is None:
        k = sample_point(model, args.seed)
        if k is None:
            raise DomainError(f"no point found on V_p ({model.status})")
        return k
    vals = parse_point(text, model.context)
    try:
        return UniserialPoint(model, vals)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def _model(pres, args):
    p = parse_path(_need(args, "path"), pres.quiver)
    if not 1 <= p.length < pres.loewy_bound:
        raise ParseError("path length must be positive and below the loewy bound")
    return build_variety(pres, p)


def _matrix(m):
    return [[x for x in row] for row in m]


def execute(args, pres) -> dict:
    cmd = args.command
    if cmd == "parse":
        return {"vertices": pres.quiver.vertices,
                "arrows": [{"name": a.name, "source": a.source, "target": a.target}
                           for a in pres.quiver.arrows],
                "loewy_bound": pres.loewy_bound,
                "relations": [str(r) for r in pres.relations]}
    if cmd == "masts":
        max_len = pres.loewy_bound - 1 if args.max_len is None else args.max_len
        return {"max_len": max_len, "masts": [
            {"path": str(e.path), "sequence": list(e.path.vertices), "status": e.status,
             "dimension": e.model.dimension, "possibly_empty": e.possibly_empty}
            for e in analysis.survey_masts(pres, max_len, args.seed)]}
    if cmd == "detours":
        p = parse_path(_need(args, "path"), pres.quiver)
        if p.length < 1:
            raise ParseError("a mast must have positive length")
        ctx = build_mast_context(p, pres.quiver)
        return {"path": str(p), "l": ctx.l, "sequence": list(ctx.sequence), "t": ctx.t,
                "mu": ctx.mu, "N": ctx.N,
                "detours": [{"arrow": d.arrow, "m": d.m, "indices": list(d.indices)} for d in ctx.detours],
                "dead_ends": [{"arrow": a, "m": m} for a, m in ctx.dead_ends],
                "variables": [str(v) for v in ctx.variables]}
    if cmd == "variety":
        model = _model(pres, args)
        cls = model.classification
        out = {"status": cls.status, "N": model.context.N,
               "polynomials": [str(f) for f in model.polynomials],
               "solved_variables": [f"{v} = {e}" for v, e in cls.solved.items()],
               "provenance": model.provenance}
        if cls.status != EMPTY:
            out["free_variables"] = [str(v) for v in cls.free]
        if cls.dimension is not None:
            out["dimension"] = cls.dimension
        if cls.residual:
            out["residual"] = [str(f) for f in cls.residual]
        return out
    if cmd == "count-points":
        field = ScalarField.parse(args.field)
        if field.is_rational:
            raise ParseError("count-points needs --field <prime>")
        model = _model(pres, args)
        try:
            n = count_points(model, field.q)
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        return {"q": field.q, "count": n, "status": model.status, "dimension": model.dimension}
    if cmd in ("fiber", "endo", "isomorphic"):
        model = _model(pres, args)
        if model.status == EMPTY:
            raise DomainError(f"V_p is empty for {model.context.p}")
        k = _point(model, args.point, args)
        x = rep.realize(k, model.context)
        ok, diags = rep.verify(x, pres)
        if not ok:
            raise DomainError("; ".join(diags))
        point = {str(v): c for v, c in k.items()}
        if cmd == "fiber":
            fr = rep.fiber_report(x)
            return dict(fr.as_dict(), point=point)
        if cmd == "endo":
            basis = rep.endo_basis_oracle(x)
            fr = rep.fiber_report(x)
            commutative = all(linalg.is_zero(rep.commutator(a, b)) for a in basis for b in basis)
            return {"dimension": len(basis), "delta": fr.delta, "commutative": commutative,
                    "basis": [_matrix(b) for b in basis], "point": point}
        k2 = _point(model, _need(args, "other-point"), args)
        return {"isomorphic": rep.same_fiber(k, k2), "point": point,
                "other_point": {str(v): c for v, c in k2.items()}}
    seq_cmds = ("uniserdim", "quotient-check")
    if cmd in seq_cmds:
        seq = parse_sequence(_need(args, "sequence"), pres.quiver)
        if cmd == "uniserdim":
            r = analysis.uniserdim(pres, seq, args.samples, args.seed)
            return {"sequence": list(seq.vertices), "value": r.value,
                    "per_path": [e.as_dict() for e in r.entries]}
        q = analysis.quotient_check(pres, seq, args.samples, args.seed)
        return {"sequence": list(seq.vertices), "answer": q.answer, "witness": q.witness,
                "details": q.details}
    if cmd == "finite-type":
        max_len = pres.loewy_bound - 1 if args.max_len is None else args.max_len
        if not max_len < pres.loewy_bound:
            raise ParseError("--max-len must be below the loewy bound")
        return analysis.finite_type_report(pres, max_len, args.samples, args.seed).as_dict()
    raise ParseError(f"unknown command {cmd}")


def run_cli(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = Report(args.command, digest(text), {})
    code = 0
    try:
        pres = parse_presentation(text)
        report.result = execute(args, pres)
    except (ParseError, KeyError) as exc:
        report.diagnostics.append(f"parse error: {exc}")
        code = 2
    except DomainError as exc:
        report.diagnostics.append(f"domain error: {exc}")
        code = 1
    print(report.to_json(), file=stdout)
    return code


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
