"""Vectorized evaluation of polynomial systems over small finite fields.

A :class:`CompiledSystem` is a plain, picklable description of a conjunction
of multivariate polynomials over GF(p^m): every poly is a tuple of
``(coeff_encoding, variable_index_tuple)`` monomials.  Systems are produced
by replaying the generic object-level checks over a symbolic polynomial ring
(:mod:`baxter._poly`), so this module never re-derives any mathematics -- it
only evaluates.

Evaluation walks a contiguous range of big-endian base-q tensor encodings in
chunks, extracts per-variable digit arrays, folds each monomial through
precomputed q-by-q multiplication tables (with the coefficient fused into the
first pairwise product), and compresses the candidate set to the survivors
after every polynomial.  Characteristic 2 accumulates with XOR; other
characteristics go through an addition table.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np

from .gf import Field

__all__ = [
    "CompiledSystem",
    "compile_polys",
    "solutions_in_range",
    "evaluate_code",
]

_MAX_ORDER = 256  # digit arrays are uint8


class CompiledSystem(NamedTuple):
    p: int
    m: int
    modulus: int | None
    nvars: int
    # tuple of polys; each poly a tuple of (coeff_encoding, var_indices)
    polys: tuple[tuple[tuple[int, tuple[int, ...]], ...], ...]

    @property
    def order(self) -> int:
        return self.p ** self.m

    def field(self) -> Field:
        return Field.make(self.p, self.m, self.modulus)


def compile_polys(ring, polys: Iterable) -> CompiledSystem:
    """Freeze symbolic polynomials into a picklable system.

    Identically-zero polynomials are dropped and duplicates are kept once,
    preserving first-occurrence order.
    """
    base = ring.base
    if base.q > _MAX_ORDER:
        raise ValueError(
            f"vectorized evaluation supports field orders up to {_MAX_ORDER},"
            f" got {base.q}"
        )
    out = []
    seen = set()
    for poly in polys:
        if poly.ring is not ring:
            raise ValueError("polynomial from a different ring")
        normalized = tuple(sorted(poly.terms.items()))
        if not normalized:
            continue
        if normalized in seen:
            continue
        seen.add(normalized)
        out.append(tuple((coeff, vs) for vs, coeff in normalized))
    return CompiledSystem(base.p, base.m, base.modulus, ring.nvars, tuple(out))


# -- table cache, per field and worker process -------------------------------

_TABLES: dict[tuple, dict] = {}


def _tables(system: CompiledSystem) -> dict:
    key = (system.p, system.m, system.modulus)
    cached = _TABLES.get(key)
    if cached is not None:
        return cached
    f = system.field()
    q = f.q
    mul = np.zeros((q, q), dtype=np.uint8)
    for x in range(q):
        for y in range(x, q):
            v = f.mul_i(x, y)
            mul[x, y] = v
            mul[y, x] = v
    add = None
    if f.p != 2:
        add = np.zeros((q, q), dtype=np.uint8)
        for x in range(q):
            for y in range(x, q):
                v = f.add_i(x, y)
                add[x, y] = v
                add[y, x] = v
    cached = {"q": q, "mul": mul, "add": add, "fold": {}}
    _TABLES[key] = cached
    return cached


def _fold_table(tables: dict, coeff: int) -> np.ndarray:
    """q-by-q table of ``coeff * x * y``."""
    tab = tables["fold"].get(coeff)
    if tab is None:
        row = tables["mul"][coeff]
        tab = row[tables["mul"]]
        tables["fold"][coeff] = tab
    return tab


def _decode_digits(codes: np.ndarray, q: int, nvars: int) -> np.ndarray:
    """Per-variable digit arrays of big-endian base-q encodings."""
    digits = np.empty((nvars, codes.size), dtype=np.uint8)
    if q & (q - 1) == 0:
        e = q.bit_length() - 1
        mask = np.uint64(q - 1)
        for v in range(nvars):
            shift = np.uint64(e * (nvars - 1 - v))
            digits[v] = ((codes >> shift) & mask).astype(np.uint8)
        return digits
    tmp = codes.copy()
    qq = np.uint64(q)
    for v in range(nvars - 1, -1, -1):
        digits[v] = (tmp % qq).astype(np.uint8)
        tmp //= qq
    return digits


def _eval_block(
    system: CompiledSystem, tables: dict, codes: np.ndarray
) -> np.ndarray:
    """Survivor encodings (ascending) of one contiguous candidate block."""
    digits = _decode_digits(codes, tables["q"], system.nvars)
    mul = tables["mul"]
    add = tables["add"]
    char2 = system.p == 2
    for poly in system.polys:
        if codes.size == 0:
            break
        acc = np.zeros(codes.size, dtype=np.uint8)
        for coeff, vs in poly:
            if not vs:
                val = np.full(codes.size, coeff, dtype=np.uint8)
            elif len(vs) == 1:
                val = mul[coeff][digits[vs[0]]]
            else:
                val = _fold_table(tables, coeff)[digits[vs[0]], digits[vs[1]]]
                for v in vs[2:]:
                    val = mul[val, digits[v]]
            if char2:
                acc ^= val
            else:
                acc = add[acc, val]
        keep = acc == 0
        codes = codes[keep]
        digits = digits[:, keep]
    return codes


def solutions_in_range(
    system: CompiledSystem,
    start: int,
    stop: int,
    chunk: int = 1 << 20,
) -> np.ndarray:
    """All encodings in ``[start, stop)`` satisfying every polynomial.

    Returns a sorted ``uint64`` array.  Walking a range in chunks keeps peak
    memory at ``O(chunk * nvars)`` bytes regardless of range size.
    """
    if chunk < 1:
        raise ValueError("chunk must be positive")
    parts = []
    for cs in range(start, stop, chunk):
        ce = min(cs + chunk, stop)
        codes = np.arange(cs, ce, dtype=np.uint64)
        parts.append(_eval_block(system, _tables(system), codes))
    if not parts:
        return np.empty(0, dtype=np.uint64)
    return np.concatenate(parts)


def evaluate_code(system: CompiledSystem, code: int) -> bool:
    """Reference single-candidate check, in pure field arithmetic."""
    f = system.field()
    q = f.q
    digits = []
    tmp = code
    for _ in range(system.nvars):
        digits.append(tmp % q)
        tmp //= q
    digits.reverse()
    for poly in system.polys:
        acc = 0
        for coeff, vs in poly:
            term = coeff
            for v in vs:
                term = f.mul_i(term, digits[v])
            acc = f.add_i(acc, term)
        if acc != 0:
            return False
    return True
