"""Exhaustive sweeps of tensor spaces with predicate/classifier comparison.

A sweep walks every ``r`` in ``V (x) V`` over the algebra's base field (all
``q^(n^2)`` big-endian encodings), evaluates a *predicate* (e.g. "solves
CYBE") and optionally a *classifier* (a closed-form solution description),
and reports the counts plus any disagreements.  Selectors name both roles:

``cybe`` | ``qybe`` | ``strongly-symmetric`` | ``alpha-beta-symmetric`` |
``prop16-case`` | ``coboundary`` | ``triangular`` | ``symmetric`` |
``im-one-minus-tau``

Each selector has two independent evaluation routes that are kept in lock
step by construction and cross-checked in the test suite:

* an object route (:func:`selector_predicate`) evaluating one tensor at a
  time with field elements, and
* a compiled route (:func:`build_selector_system`) that replays the same
  generic code over a polynomial ring and hands the frozen system to the
  vectorized evaluator in :mod:`baxter._kernel`.

Sweeps are deterministic: candidates are processed in ascending encoding
order in fixed-size chunks, and chunk results are merged in order, so the
report is identical for any worker count.  Worker processes are used when
``workers > 1`` (default from the ``YBE_WORKERS`` environment variable).
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from . import bialgebra, ybe
from ._kernel import CompiledSystem, compile_polys, solutions_in_range
from ._poly import PolyRing
from .algebra import AssocAlgebra, LieAlgebra
from .errors import InputError, SweepTooLarge
from .tensor import Tensor2, im_one_minus_tau_member, named_view

__all__ = [
    "MAX_SWEEP",
    "COUNTEREXAMPLE_CAP",
    "LEDGER_CAP",
    "SELECTOR_NAMES",
    "tensor_count",
    "enumerate_tensors",
    "strong_symmetric_enumerate",
    "build_selector_system",
    "compile_selector",
    "selector_predicate",
    "resolve_workers",
    "SweepSpec",
    "sweep",
    "SolutionReport",
    "LedgerEntry",
    "DiscrepancyLedger",
]

MAX_SWEEP = 1 << 40
COUNTEREXAMPLE_CAP = 16
LEDGER_CAP = 16


# ---------------------------------------------------------------------------
# plain enumeration


def tensor_count(field, dim: int) -> int:
    return field.q ** (dim * dim)


def enumerate_tensors(field, dim: int):
    """Yield every tensor in ascending encoding order."""
    total = tensor_count(field, dim)
    if total > MAX_SWEEP:
        raise SweepTooLarge(total, MAX_SWEEP)
    for code in range(total):
        yield Tensor2.decode(field, dim, code)


def strong_symmetric_enumerate(field, dim: int) -> list[Tensor2]:
    """All strongly symmetric tensors, ascending by encoding.

    Built from the rank-one normal form (zero plus ``c * v (x) v`` over all
    scales and vectors, deduplicated) rather than by filtering the full
    space, so it stays cheap even when ``q^(n^2)`` is not.
    """
    seen = {0}
    out = [Tensor2.zero(field, dim)]
    zero = field.zero()
    for c in field.elements():
        if c == zero:
            continue
        for vcode in range(field.q ** dim):
            digits = []
            tmp = vcode
            for _ in range(dim):
                digits.append(tmp % field.q)
                tmp //= field.q
            digits.reverse()
            v = [field.element(d) for d in digits]
            t = ybe.rank1_tensor(field, c, v)
            code = t.encode()
            if code not in seen:
                seen.add(code)
                out.append(t)
    out.sort(key=lambda t: t.encode())
    return out


# ---------------------------------------------------------------------------
# selector registry

SELECTOR_NAMES = (
    "cybe",
    "qybe",
    "strongly-symmetric",
    "alpha-beta-symmetric",
    "prop16-case",
    "coboundary",
    "triangular",
    "symmetric",
    "im-one-minus-tau",
)

_LIE_SELECTORS = {"cybe", "coboundary", "triangular"}
_ASSOC_SELECTORS = {"qybe"}


def _check_selector(algebra, name: str) -> None:
    if name not in SELECTOR_NAMES:
        raise InputError(
            f"unknown selector {name!r}; valid: {', '.join(SELECTOR_NAMES)}"
        )
    if name in _LIE_SELECTORS and not isinstance(algebra, LieAlgebra):
        raise InputError(f"selector {name!r} needs a Lie algebra")
    if name in _ASSOC_SELECTORS and not isinstance(algebra, AssocAlgebra):
        raise InputError(f"selector {name!r} needs an associative algebra")


def _family_params(algebra, name: str, *attrs):
    params = getattr(algebra, "params", None)
    values = []
    for attr in attrs:
        v = getattr(params, attr, None) if params is not None else None
        if v is None:
            raise InputError(
                f"selector {name!r} needs an algebra with a "
                f"{'/'.join(attrs)} parameterization"
            )
        values.append(v)
    return tuple(values)


class _Lifted:
    """An algebra's structure constants lifted into a polynomial ring."""

    __slots__ = ("field", "dim", "c")

    def __init__(self, algebra, ring: PolyRing):
        self.field = ring
        self.dim = algebra.dim
        self.c = tuple(
            tuple(
                tuple(ring.const(v) for v in row)
                for row in plane
            )
            for plane in algebra.c
        )


def _var_tensor(ring: PolyRing, n: int) -> Tensor2:
    return Tensor2(
        ring, n,
        [[ring.var(i * n + j) for j in range(n)] for i in range(n)],
    )


def _im_polys(field, kt: Tensor2):
    """Membership of Im(1 - tau) as linear relations.

    Characteristic 2: symmetric with zero diagonal; otherwise alternating.
    """
    n = kt.dim
    k = kt.rows
    out = [k[i][i] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if field.p == 2:
                out.append(k[i][j] - k[j][i])
            else:
                out.append(k[i][j] + k[j][i])
    return out


def build_selector_system(algebra, name: str, ring: PolyRing):
    """Symbolic polynomials whose common zeros are the selector's members."""
    _check_selector(algebra, name)
    n = algebra.dim
    if ring.nvars != n * n:
        raise InputError(
            f"ring has {ring.nvars} variables, expected {n * n}"
        )
    kt = _var_tensor(ring, n)
    if name == "cybe":
        lifted = _Lifted(algebra, ring)
        return [v for _, _, _, v in ybe.cybe_residual(lifted, kt).entries()]
    if name == "qybe":
        lifted = _Lifted(algebra, ring)
        lhs, rhs = ybe.qybe_sides(lifted, kt)
        return [
            lv - rv
            for (_, _, _, lv), (_, _, _, rv)
            in zip(lhs.entries(), rhs.entries())
        ]
    if name == "strongly-symmetric":
        return ybe.strong_symmetry_equations(kt.rows, n)
    if name == "alpha-beta-symmetric":
        alpha, beta = _family_params(algebra, name, "alpha", "beta")
        return ybe.ab_symmetric_equations(
            named_view(kt), ring.const(alpha), ring.const(beta)
        )
    if name == "prop16-case":
        beta, delta = _family_params(algebra, name, "beta", "delta")
        case = ybe.bd_case_of(beta, delta)
        return ybe.bd_case_equations(
            case, named_view(kt),
            ring.const(beta), ring.const(delta), ring.one(),
        )
    if name == "coboundary":
        lifted = _Lifted(algebra, ring)
        out = _im_polys(algebra.field, kt)
        for defect in bialgebra.cojacobi_defect(lifted, kt):
            out.extend(v for _, _, _, v in defect.entries())
        return out
    if name == "triangular":
        lifted = _Lifted(algebra, ring)
        out = _im_polys(algebra.field, kt)
        out.extend(
            v for _, _, _, v in ybe.cybe_residual(lifted, kt).entries()
        )
        return out
    if name == "symmetric":
        k = kt.rows
        return [
            k[i][j] - k[j][i] for i in range(n) for j in range(i + 1, n)
        ]
    if name == "im-one-minus-tau":
        return _im_polys(algebra.field, kt)
    raise AssertionError(name)


def compile_selector(algebra, name: str) -> CompiledSystem:
    n = algebra.dim
    ring = PolyRing(algebra.field, n * n)
    return compile_polys(ring, build_selector_system(algebra, name, ring))


def selector_predicate(algebra, name: str):
    """Object-route membership test for one tensor at a time."""
    _check_selector(algebra, name)
    if name == "cybe":
        return lambda r: ybe.is_cybe_solution(algebra, r)
    if name == "qybe":
        return lambda r: ybe.is_qybe_solution(algebra, r)
    if name == "strongly-symmetric":
        return ybe.is_strongly_symmetric
    if name == "alpha-beta-symmetric":
        alpha, beta = _family_params(algebra, name, "alpha", "beta")
        return lambda r: ybe.is_alpha_beta_symmetric(r, alpha, beta)
    if name == "prop16-case":
        beta, delta = _family_params(algebra, name, "beta", "delta")
        return lambda r: ybe.is_bd_case_solution(r, beta, delta)
    if name == "coboundary":
        return lambda r: bialgebra.is_coboundary(algebra, r)
    if name == "triangular":
        return lambda r: bialgebra.is_triangular(algebra, r)
    if name == "symmetric":
        return lambda r: r.is_symmetric()
    if name == "im-one-minus-tau":
        return im_one_minus_tau_member
    raise AssertionError(name)


# ---------------------------------------------------------------------------
# sweeps


def resolve_workers(explicit: int | None = None) -> int:
    """Worker count: explicit argument, else ``YBE_WORKERS``, else 1."""
    if explicit is not None:
        if explicit < 1:
            raise InputError("workers must be >= 1")
        return explicit
    env = os.environ.get("YBE_WORKERS")
    if env is None or not env.strip():
        return 1
    try:
        w = int(env)
    except ValueError:
        raise InputError(f"YBE_WORKERS must be an integer, got {env!r}")
    if w < 1:
        raise InputError("YBE_WORKERS must be >= 1")
    return w


@dataclass
class SweepSpec:
    """What to sweep: an algebra, a predicate, and an optional classifier."""

    algebra: object
    predicate: str
    classifier: str | None = None
    claim: str | None = None
    chunk: int = 1 << 20
    workers: int | None = None
    keep_solutions: bool = False


def _run_chunk(args):
    pred_sys, class_sys, start, stop = args
    pred = solutions_in_range(pred_sys, start, stop, chunk=stop - start)
    out_pred = pred.tolist()
    if class_sys is None:
        return out_pred, None
    cls = solutions_in_range(class_sys, start, stop, chunk=stop - start)
    return out_pred, cls.tolist()


@dataclass
class SolutionReport:
    """Outcome of one sweep; serializes deterministically.

    ``canonical_json`` drops ``duration_ms`` so byte-identical output is
    reproducible across runs and worker counts.
    """

    claim: str | None
    predicate: str
    classifier: str | None
    field: str
    algebra: str
    params: dict
    total: int
    predicate_count: int
    classifier_count: int | None
    pred_only_count: int
    class_only_count: int
    agreement: bool | None
    counterexamples: list
    duration_ms: float
    solutions: list | None = None

    def to_dict(self, include_duration: bool = True) -> dict:
        d = {
            "claim": self.claim,
            "predicate": self.predicate,
            "classifier": self.classifier,
            "field": self.field,
            "algebra": self.algebra,
            "params": dict(self.params),
            "total": self.total,
            "predicate_count": self.predicate_count,
            "classifier_count": self.classifier_count,
            "diff_pred_only": self.pred_only_count,
            "diff_class_only": self.class_only_count,
            "agreement": self.agreement,
            "counterexamples": list(self.counterexamples),
        }
        if self.solutions is not None:
            d["solutions"] = list(self.solutions)
        if include_duration:
            d["duration_ms"] = self.duration_ms
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def canonical_json(self) -> str:
        return json.dumps(
            self.to_dict(include_duration=False),
            sort_keys=True,
            separators=(",", ":"),
        )


def sweep(spec: SweepSpec) -> SolutionReport:
    """Run the sweep described by ``spec`` over the whole tensor space."""
    algebra = spec.algebra
    f = algebra.field
    n = algebra.dim
    total = tensor_count(f, n)
    if total > MAX_SWEEP:
        raise SweepTooLarge(total, MAX_SWEEP)
    if spec.chunk < 1:
        raise InputError("chunk must be positive")
    ring = PolyRing(f, n * n)
    pred_sys = compile_polys(
        ring, build_selector_system(algebra, spec.predicate, ring)
    )
    class_sys = None
    if spec.classifier is not None:
        class_sys = compile_polys(
            ring, build_selector_system(algebra, spec.classifier, ring)
        )
    workers = resolve_workers(spec.workers)
    jobs = [
        (pred_sys, class_sys, s, min(s + spec.chunk, total))
        for s in range(0, total, spec.chunk)
    ]
    t0 = time.perf_counter()
    if workers == 1 or len(jobs) == 1:
        results = [_run_chunk(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_run_chunk, jobs))
    duration_ms = (time.perf_counter() - t0) * 1000.0

    pred_solutions: list[int] = []
    class_solutions: list[int] = []
    for pr, cl in results:
        pred_solutions.extend(pr)
        if cl is not None:
            class_solutions.extend(cl)

    if spec.classifier is None:
        classifier_count = None
        pred_only: list[int] = []
        class_only: list[int] = []
        agreement = None
    else:
        pred_set = set(pred_solutions)
        class_set = set(class_solutions)
        classifier_count = len(class_solutions)
        pred_only = [e for e in pred_solutions if e not in class_set]
        class_only = [e for e in class_solutions if e not in pred_set]
        agreement = not pred_only and not class_only

    counterexamples = []
    pi = ci = 0
    while (
        len(counterexamples) < COUNTEREXAMPLE_CAP
        and (pi < len(pred_only) or ci < len(class_only))
    ):
        take_pred = ci >= len(class_only) or (
            pi < len(pred_only) and pred_only[pi] < class_only[ci]
        )
        code = pred_only[pi] if take_pred else class_only[ci]
        if take_pred:
            pi += 1
        else:
            ci += 1
        counterexamples.append(
            {
                "encoding": code,
                "tensor": Tensor2.decode(f, n, code).literal(),
                "predicate": take_pred,
                "classifier": not take_pred,
            }
        )

    params = algebra.params.as_dict() if algebra.params else {}
    return SolutionReport(
        claim=spec.claim,
        predicate=spec.predicate,
        classifier=spec.classifier,
        field=f.literal(),
        algebra=algebra.label,
        params=params,
        total=total,
        predicate_count=len(pred_solutions),
        classifier_count=classifier_count,
        pred_only_count=len(pred_only),
        class_only_count=len(class_only),
        agreement=agreement,
        counterexamples=counterexamples,
        duration_ms=duration_ms,
        solutions=pred_solutions if spec.keep_solutions else None,
    )


# ---------------------------------------------------------------------------
# discrepancy ledger


@dataclass(frozen=True)
class LedgerEntry:
    """One predicate/classifier disagreement, pinned for regression."""

    claim: str
    field: str
    params: tuple
    encoding: int
    tensor: str
    predicate: bool
    classifier: bool

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "field": self.field,
            "params": dict(self.params),
            "encoding": self.encoding,
            "tensor": self.tensor,
            "predicate": self.predicate,
            "classifier": self.classifier,
        }


class DiscrepancyLedger:
    """Ordered, capped record of predicate/classifier disagreements.

    At most :data:`LEDGER_CAP` entries are kept per (claim, params) pair, in
    ascending encoding order, so ledgers are stable regression artifacts.
    """

    def __init__(self):
        self.entries: list[LedgerEntry] = []
        self._per_key: dict[tuple, int] = {}

    def record(self, entry: LedgerEntry) -> bool:
        key = (entry.claim, entry.params)
        have = self._per_key.get(key, 0)
        if have >= LEDGER_CAP:
            return False
        self._per_key[key] = have + 1
        self.entries.append(entry)
        return True

    def record_report(self, report: SolutionReport) -> int:
        """Pin every counterexample of a report; returns how many stuck."""
        added = 0
        params = tuple(sorted(report.params.items()))
        for ce in report.counterexamples:
            entry = LedgerEntry(
                claim=report.claim or "",
                field=report.field,
                params=params,
                encoding=ce["encoding"],
                tensor=ce["tensor"],
                predicate=ce["predicate"],
                classifier=ce["classifier"],
            )
            if self.record(entry):
                added += 1
        return added

    def is_empty(self) -> bool:
        return not self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def to_list(self) -> list[dict]:
        return [e.to_dict() for e in self.entries]

    def to_json_lines(self) -> str:
        return "\n".join(
            json.dumps(d, sort_keys=True) for d in self.to_list()
        )
