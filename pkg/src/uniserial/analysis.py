"""Per-sequence and whole-algebra invariants assembled from the mast patches."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .detours import SimpleSequence, condition_N, paths_through
from .presentation import AlgebraPresentation
from .quiver import Path, extensions
from .rep import build_A, fiber_report, realize
from .variety import AFFINE_SPACE, EMPTY, RESIDUAL, VarietyModel, build_variety, sample_point

UNKNOWN = "unknown"


@dataclass
class MastEntry:
    path: Path
    model: VarietyModel
    possibly_empty: bool = False

    @property
    def status(self) -> str:
        return self.model.status


def survey_masts(presentation: AlgebraPresentation, max_len: int, seed: int = 0) -> list[MastEntry]:
    """Every path of length 1..max_len with nonempty (or undecided) V_p.

    Subpaths of masts are masts, so only masts are extended.
    """
    if not 1 <= max_len < presentation.loewy_bound:
        raise ValueError("need 1 <= max_len < loewy bound")
    quiver = presentation.quiver
    layer = sorted((quiver.path([a.name]) for a in quiver.arrows), key=Path.sort_key)
    out: list[MastEntry] = []
    for length in range(1, max_len + 1):
        kept = []
        for p in layer:
            model = build_variety(presentation, p)
            if model.status == EMPTY:
                continue
            entry = MastEntry(p, model)
            if model.status == RESIDUAL:
                entry.possibly_empty = sample_point(model, seed) is None
            kept.append(entry)
        out.extend(kept)
        if length < max_len:
            layer = sorted((q for e in kept for q in extensions(quiver, e.path)), key=Path.sort_key)
    return out


def enumerate_masts(presentation: AlgebraPresentation, max_len: int) -> list[Path]:
    return [e.path for e in survey_masts(presentation, max_len)]


def generic_fiber_dim(model: VarietyModel, samples: int = 16, seed: int = 0) -> int | None:
    """Largest rank of A(k) over sampled points; ``None`` if no point was found.

    Stops early once the rank reaches min(t, dim V_p), which no point can exceed.
    """
    ctx = model.context
    cap = ctx.t
    if model.dimension is not None:
        cap = min(cap, model.dimension)
    best = None
    for s in range(samples):
        k = sample_point(model, seed + s)
        if k is None:
            if model.status != AFFINE_SPACE:
                break
            continue
        r = fiber_report(k).fiber_dim
        best = r if best is None else max(best, r)
        if best >= cap:
            break
    return best


@dataclass
class PatchEntry:
    path: Path
    status: str
    dimension: int | None
    generic_fiber_dim: int | None
    contribution: int | None

    def as_dict(self) -> dict:
        return {"path": str(self.path), "status": self.status, "dimension": self.dimension,
                "generic_fiber_dim": self.generic_fiber_dim, "contribution": self.contribution}


@dataclass
class SequenceReport:
    sequence: SimpleSequence
    entries: list[PatchEntry]
    value: int | str


def uniserdim(presentation: AlgebraPresentation, seq: SimpleSequence,
              samples: int = 16, seed: int = 0) -> SequenceReport:
    l = seq.length
    if l == 0:
        # the simple module itself: a single point, a single fibre
        return SequenceReport(seq, [PatchEntry(Path.trivial(seq.top), AFFINE_SPACE, 0, 0, 0)], 0)
    if l >= presentation.loewy_bound:
        return SequenceReport(seq, [], -1)
    entries = []
    unknown = False
    for p in paths_through(seq, presentation.quiver):
        model = build_variety(presentation, p)
        if model.status == EMPTY:
            entries.append(PatchEntry(p, EMPTY, None, None, None))
            continue
        if model.status == RESIDUAL:
            unknown = True
            entries.append(PatchEntry(p, RESIDUAL, None, generic_fiber_dim(model, samples, seed), None))
            continue
        g = generic_fiber_dim(model, samples, seed)
        entries.append(PatchEntry(p, AFFINE_SPACE, model.dimension, g, model.dimension - g))
    nonempty = [e for e in entries if e.status != EMPTY]
    if not nonempty:
        return SequenceReport(seq, entries, -1)
    if unknown:
        return SequenceReport(seq, entries, UNKNOWN)
    return SequenceReport(seq, entries, max(e.contribution for e in nonempty))


@dataclass
class QuotientResult:
    answer: str
    witness: dict | None = None
    details: list = field(default_factory=list)


def quotient_check(presentation: AlgebraPresentation, seq: SimpleSequence,
                   samples: int = 16, seed: int = 0, max_tries: int = 256) -> QuotientResult:
    """Whether rank A(k) vanishes at every point of every patch over ``seq``
    (equivalently, the endomorphism ring of every such uniserial has dimension mu)."""
    if seq.mu == 1 or seq.length == 0 or seq.length >= presentation.loewy_bound:
        return QuotientResult("yes", details=["vacuous: t = 0 or no paths"])
    undecided = False
    details = []
    for p in paths_through(seq, presentation.quiver):
        model = build_variety(presentation, p)
        if model.status == EMPTY:
            details.append(f"{p}: empty")
            continue
        if model.status == AFFINE_SPACE:
            sym = build_A(realize(model.parametrization(), model.context))
            if linalg.is_zero(sym):
                details.append(f"{p}: A vanishes identically")
                continue
        # look for a point with rank A > 0
        witness = None
        tries = samples if model.status == RESIDUAL else max_tries
        for s in range(tries):
            k = sample_point(model, seed + s)
            if k is None:
                break
            rep = fiber_report(k)
            if rep.rank_A > 0:
                witness = {"path": str(p), "point": {str(v): str(x) for v, x in k.items()},
                           "rank_A": rep.rank_A}
                break
        if witness is not None:
            return QuotientResult("no", witness, details)
        if model.status == RESIDUAL:
            undecided = True
            details.append(f"{p}: residual system, undecided")
        else:
            raise RuntimeError(f"A(k) is not identically zero on {p} but no sampled point shows it")
    return QuotientResult("unknown" if undecided else "yes", None, details)


@dataclass
class FiniteTypeVerdict:
    verdict: str
    witnesses: list[dict]
    max_len: int
    condition_n_violations: list[dict]

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "witnesses": self.witnesses, "max_len": self.max_len,
                "condition_n_violations": self.condition_n_violations}


def finite_type_report(presentation: AlgebraPresentation, max_len: int | None = None,
                       samples: int = 16, seed: int = 0) -> FiniteTypeVerdict:
    """Sound but incomplete finite-uniserial-type test over masts up to ``max_len``."""
    if max_len is None:
        max_len = presentation.loewy_bound - 1
    witnesses: list[dict] = []
    if presentation.loewy_bound >= 2:
        for a, b in presentation.quiver.double_arrows():
            witnesses.append({"sequence": [a.source, a.target], "path": f"{a.name}, {b.name}",
                              "reason": "double arrow"})
    if max_len < 1:
        verdict = "infinite" if witnesses else "finite"
        return FiniteTypeVerdict(verdict, witnesses, max_len, [])
    survey = survey_masts(presentation, max_len, seed)
    violations = [{"arrow": a, "mast": str(p)} for a, p in condition_N(presentation, [e.path for e in survey])]
    undecided = False
    for e in survey:
        if e.status == RESIDUAL:
            undecided = True
            continue
        d = e.model.dimension
        g = generic_fiber_dim(e.model, samples, seed)
        if d > g:
            witnesses.append({"sequence": list(e.path.vertices), "path": str(e.path),
                              "reason": f"dim V_p = {d} > generic fibre dim {g}"})
    if witnesses:
        verdict = "infinite"
    elif undecided:
        verdict = UNKNOWN
    else:
        verdict = "finite"
    return FiniteTypeVerdict(verdict, witnesses, max_len, violations)
