"""Finitely supported trigonometric coefficient sequences.

The basic objects are :class:`Coeff1D` (a complex sequence over a
contiguous integer window) and :class:`CoeffND` (its d-dimensional
analogue, a dense complex block with one integer offset per axis).
Everything outside the stored block is implicitly zero.  On top of the
data model this module provides the weighting map ``a_k -> k^q a_k``,
the log-weighted sufficiency sums, direct evaluation of the associated
sine/cosine series, and boundary (face) vanishing diagnostics.

Values are always complex double precision; indices are plain Python
ints.  Instances are treated as immutable after construction and are
safe to share between threads.
"""

from __future__ import annotations

import itertools
import json
import os
import tempfile
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

import numpy as np

__all__ = [
    "Coeff1D",
    "CoeffND",
    "ParityVector",
    "WeightExponent",
    "FaceCheck",
    "BoundaryReport",
    "l1_norm",
    "weight_apply",
    "log_weighted_sum",
    "series_eval",
    "boundary_vanish_check",
    "load_sequence",
    "save_sequence",
]


@dataclass(frozen=True)
class Coeff1D:
    """A finitely supported complex sequence over the integers.

    ``values[i]`` is the coefficient at integer index ``offset + i``;
    indices outside ``[offset, offset + len(values))`` are zero.
    """

    offset: int
    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.complex128).reshape(-1)
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "offset", int(self.offset))

    @classmethod
    def from_dict(cls, entries: Mapping[int, complex]) -> "Coeff1D":
        """Build a sequence from an ``{index: value}`` mapping."""
        if not entries:
            return cls(0, np.zeros(0))
        lo, hi = min(entries), max(entries)
        vals = np.zeros(hi - lo + 1, dtype=np.complex128)
        for k, v in entries.items():
            vals[k - lo] = v
        return cls(lo, vals)

    @classmethod
    def impulse(cls, k: int, value: complex = 1.0) -> "Coeff1D":
        """The unit impulse e_k (single entry ``value`` at index ``k``)."""
        return cls(k, np.array([value]))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> complex:
        """Coefficient at integer index ``k`` (0 outside the block)."""
        i = k - self.offset
        if 0 <= i < len(self.values):
            return complex(self.values[i])
        return 0.0 + 0.0j

    def indices(self) -> np.ndarray:
        return self.offset + np.arange(len(self.values))

    @property
    def support(self) -> tuple[int, int]:
        """Inclusive index window ``(lo, hi)`` of the stored block."""
        return self.offset, self.offset + len(self.values) - 1

    def trim(self) -> "Coeff1D":
        """Drop leading/trailing zero entries.  Idempotent."""
        nz = np.nonzero(self.values)[0]
        if len(nz) == 0:
            return Coeff1D(0, np.zeros(0))
        lo, hi = nz[0], nz[-1]
        return Coeff1D(self.offset + int(lo), self.values[lo : hi + 1].copy())

    def scaled(self, c: complex) -> "Coeff1D":
        return Coeff1D(self.offset, c * self.values)

    def __add__(self, other: "Coeff1D") -> "Coeff1D":
        if len(self) == 0:
            return other
        if len(other) == 0:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.support[1], other.support[1])
        vals = np.zeros(hi - lo + 1, dtype=np.complex128)
        vals[self.offset - lo : self.offset - lo + len(self)] += self.values
        vals[other.offset - lo : other.offset - lo + len(other)] += other.values
        return Coeff1D(lo, vals)

    def as_nd(self) -> "CoeffND":
        return CoeffND((self.offset,), self.values.reshape(-1))


@dataclass(frozen=True)
class CoeffND:
    """A finitely supported d-dimensional coefficient block.

    ``values`` is a dense complex array; entry ``values[i1, ..., id]``
    carries multi-index ``(offsets[0] + i1, ..., offsets[-1] + id)``.
    """

    offsets: tuple[int, ...]
    values: np.ndarray

    def __post_init__(self):
        offs = tuple(int(o) for o in self.offsets)
        arr = np.asarray(self.values, dtype=np.complex128)
        if arr.ndim != len(offs):
            raise ValueError(
                f"offsets have length {len(offs)} but values have {arr.ndim} axes"
            )
        if arr.ndim < 1:
            raise ValueError("CoeffND requires at least one axis")
        object.__setattr__(self, "offsets", offs)
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_dict(cls, d: int, entries: Mapping[tuple, complex]) -> "CoeffND":
        if not entries:
            return cls((0,) * d, np.zeros((0,) * d))
        keys = list(entries)
        lo = tuple(min(k[j] for k in keys) for j in range(d))
        hi = tuple(max(k[j] for k in keys) for j in range(d))
        vals = np.zeros(tuple(h - l + 1 for l, h in zip(lo, hi)), dtype=np.complex128)
        for k, v in entries.items():
            vals[tuple(kj - lj for kj, lj in zip(k, lo))] = v
        return cls(lo, vals)

    @classmethod
    def impulse(cls, index: Sequence[int], value: complex = 1.0) -> "CoeffND":
        return cls(tuple(index), np.full((1,) * len(tuple(index)), value))

    @property
    def ndim(self) -> int:
        return self.values.ndim

    @property
    def dims(self) -> tuple[int, ...]:
        return self.values.shape

    def __getitem__(self, index) -> complex:
        if isinstance(index, (int, np.integer)):
            index = (index,)
        if len(index) != self.ndim:
            raise ValueError(f"index has {len(index)} axes, block has {self.ndim}")
        idx = tuple(int(i) - o for i, o in zip(index, self.offsets))
        if all(0 <= i < n for i, n in zip(idx, self.values.shape)):
            return complex(self.values[idx])
        return 0.0 + 0.0j

    def axis_indices(self, axis: int) -> np.ndarray:
        return self.offsets[axis] + np.arange(self.values.shape[axis])

    def slice1d(self, axis: int, fixed: Sequence[int]) -> Coeff1D:
        """The 1-D sequence along ``axis`` with the other indices fixed.

        ``fixed`` lists the frozen integer indices of the remaining axes
        in order; indices outside the block give the zero sequence.
        """
        fixed = tuple(int(i) for i in fixed)
        if len(fixed) != self.ndim - 1:
            raise ValueError(f"need {self.ndim - 1} fixed indices, got {len(fixed)}")
        sel: list = []
        it = iter(fixed)
        for ax in range(self.ndim):
            if ax == axis:
                sel.append(slice(None))
                continue
            i = next(it) - self.offsets[ax]
            if not 0 <= i < self.values.shape[ax]:
                return Coeff1D(0, np.zeros(0))
            sel.append(i)
        return Coeff1D(self.offsets[axis], self.values[tuple(sel)])

    @property
    def support(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (o, o + n - 1) for o, n in zip(self.offsets, self.values.shape)
        )

    def trim(self) -> "CoeffND":
        """Shrink the block to the smallest box containing all nonzeros."""
        if self.values.size == 0 or not np.any(self.values):
            return CoeffND((0,) * self.ndim, np.zeros((0,) * self.ndim))
        slices = []
        offs = []
        for ax in range(self.ndim):
            other = tuple(i for i in range(self.ndim) if i != ax)
            mask = np.any(self.values != 0, axis=other) if other else self.values != 0
            nz = np.nonzero(mask)[0]
            slices.append(slice(int(nz[0]), int(nz[-1]) + 1))
            offs.append(self.offsets[ax] + int(nz[0]))
        return CoeffND(tuple(offs), self.values[tuple(slices)].copy())

    def scaled(self, c: complex) -> "CoeffND":
        return CoeffND(self.offsets, c * self.values)

    def as_coeff1d(self) -> Coeff1D:
        if self.ndim != 1:
            raise ValueError(f"cannot view a {self.ndim}-dimensional block as 1-D")
        return Coeff1D(self.offsets[0], self.values.reshape(-1))


CoeffLike = Union[Coeff1D, CoeffND]


def _as_nd(a: CoeffLike) -> CoeffND:
    return a.as_nd() if isinstance(a, Coeff1D) else a


@dataclass(frozen=True)
class ParityVector:
    """Per-axis parity selector: 1 = cosine, 0 = sine."""

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"parity bits must be 0 or 1, got {bits}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, s: str) -> "ParityVector":
        if not s or any(c not in "01" for c in s):
            raise ValueError(f"parity string must be nonempty over {{0,1}}: {s!r}")
        return cls(tuple(int(c) for c in s))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, j: int) -> int:
        return self.bits[j]

    @property
    def weight(self) -> int:
        return sum(self.bits)

    @property
    def complement(self) -> "ParityVector":
        return ParityVector(tuple(1 - b for b in self.bits))


@dataclass(frozen=True)
class WeightExponent:
    """Per-axis nonnegative integer weight exponents q_j (k^q = prod k_j^q_j)."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(q) for q in self.exponents)
        if any(q < 0 for q in exps):
            raise ValueError(f"weight exponents must be >= 0, got {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def zero(cls, d: int) -> "WeightExponent":
        return cls((0,) * d)

    def __len__(self) -> int:
        return len(self.exponents)

    def __getitem__(self, j: int) -> int:
        return self.exponents[j]

    @property
    def is_zero(self) -> bool:
        return all(q == 0 for q in self.exponents)


def _check_dim(d: int, obj, name: str) -> None:
    if len(obj) != d:
        raise ValueError(f"{name} has length {len(obj)}, expected {d}")


def l1_norm(a: CoeffLike) -> float:
    """Sum of absolute values over the support; 0 iff a is zero."""
    nd = _as_nd(a)
    return float(np.sum(np.abs(nd.values)))


def _axis_weights(nd: CoeffND, q: WeightExponent) -> list[np.ndarray]:
    """Per-axis vectors k_j^{q_j} as floats (0^0 = 1, 0^q = 0 for q > 0)."""
    out = []
    for ax in range(nd.ndim):
        k = nd.axis_indices(ax).astype(float)
        out.append(k ** q[ax] if q[ax] > 0 else np.ones_like(k))
    return out


def weight_apply(a: CoeffLike, q: WeightExponent) -> CoeffLike:
    """Multiply entrywise by k^q = prod_j k_j^{q_j}.

    Entries at k_j = 0 map to 0 when q_j > 0.  Entries at negative
    indices are rejected on any axis with q_j > 0 (the weighted theory
    lives on Z_+^d).
    """
    nd = _as_nd(a)
    _check_dim(nd.ndim, q, "weight exponent")
    if q.is_zero:
        return a
    for ax in range(nd.ndim):
        if q[ax] > 0 and nd.values.size and nd.offsets[ax] < 0:
            neg = nd.values[
                tuple(
                    slice(0, -nd.offsets[ax]) if i == ax else slice(None)
                    for i in range(nd.ndim)
                )
            ]
            if np.any(neg):
                raise ValueError(
                    f"weight_apply with q[{ax}]={q[ax]} > 0 requires "
                    "support in k >= 0 on that axis"
                )
    vals = nd.values.copy()
    for ax, w in enumerate(_axis_weights(nd, q)):
        shape = [1] * nd.ndim
        shape[ax] = -1
        vals = vals * w.reshape(shape)
    out = CoeffND(nd.offsets, vals)
    return out.as_coeff1d() if isinstance(a, Coeff1D) else out


def log_weighted_sum(a: CoeffLike, q: WeightExponent) -> float:
    """The sufficiency sum  sum_k k^q |a_k| prod_j ln(k_j + 1).

    Natural logarithm throughout.  Requires support in Z_+^d.
    """
    nd = _as_nd(a)
    _check_dim(nd.ndim, q, "weight exponent")
    if nd.values.size == 0:
        return 0.0
    acc = np.abs(nd.values)
    for ax in range(nd.ndim):
        k = nd.axis_indices(ax).astype(float)
        if k.size and k[0] < 0:
            if np.any(np.moveaxis(acc, ax, 0)[: int(-k[0])]):
                raise ValueError("log_weighted_sum requires support in k >= 0")
        w = np.zeros_like(k)
        pos = k >= 0
        w[pos] = (k[pos] ** q[ax] if q[ax] > 0 else 1.0) * np.log(k[pos] + 1.0)
        shape = [1] * nd.ndim
        shape[ax] = -1
        acc = acc * w.reshape(shape)
    return float(np.sum(acc))


def _basis_matrix(k: np.ndarray, t: np.ndarray, parity: int, q: int) -> np.ndarray:
    """Rows k, columns t: cos(k t + q pi/2) for parity 1, sin(...) else."""
    arg = np.outer(k, t) + q * np.pi / 2.0
    return np.cos(arg) if parity == 1 else np.sin(arg)


def series_eval(
    a: CoeffLike,
    eta: ParityVector,
    q: WeightExponent,
    t: Sequence[float],
) -> complex:
    """Evaluate the (q-times differentiated) trigonometric series at a point.

    Computes  sum_k k^q a_k prod_{eta_j=1} cos(k_j t_j + q_j pi/2)
                           prod_{eta_j=0} sin(k_j t_j + q_j pi/2)
    as an exact finite sum over the support.  Real-valued for real
    coefficients; the complex sum is returned as-is otherwise.
    """
    nd = _as_nd(a)
    d = nd.ndim
    _check_dim(d, eta, "parity vector")
    _check_dim(d, q, "weight exponent")
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if t.shape != (d,):
        raise ValueError(f"evaluation point has shape {t.shape}, expected ({d},)")
    if nd.values.size == 0:
        return 0.0 + 0.0j
    acc = nd.values
    for ax in range(d):
        k = nd.axis_indices(ax).astype(float)
        w = k ** q[ax] if q[ax] > 0 else np.ones_like(k)
        basis = _basis_matrix(k, t[ax : ax + 1], eta[ax], q[ax])[:, 0]
        acc = np.tensordot(acc, w * basis, axes=([0], [0]))
    return complex(acc)


@dataclass(frozen=True)
class FaceCheck:
    """One boundary-vanishing check: derivative order, face, observed size."""

    order: tuple[int, ...]
    axis: int
    face: float
    max_abs: float
    passed: bool


@dataclass(frozen=True)
class BoundaryReport:
    """Face-vanishing diagnostics for the weighted re-expansion hypotheses."""

    checks: tuple[FaceCheck, ...]
    moment_sums: tuple[tuple[complex, complex], ...]
    tol: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


_FACE_PROBES = 17  # sample points per free axis when probing a face


def boundary_vanish_check(
    a: CoeffLike,
    eta: ParityVector,
    q: WeightExponent,
    tol: float,
) -> BoundaryReport:
    """Check D^s f on the faces t_j in {0, pi} for every order s with s_j < q_j.

    Faces are probed on a dense sample grid (not symbolically), so a
    pass means "vanishes at every probe point within tol".  The report
    also carries, per axis j, the two moment sums  sum_k a_k  and
    sum_k (-1)^{k_j} a_k  (the coefficient form of f(0) = f(pi) = 0
    in the one-dimensional case).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    nd = _as_nd(a)
    d = nd.ndim
    _check_dim(d, eta, "parity vector")
    _check_dim(d, q, "weight exponent")

    checks: list[FaceCheck] = []
    grid = np.linspace(0.0, np.pi, _FACE_PROBES)
    for s in itertools.product(*(range(qj) for qj in q.exponents)):
        sw = WeightExponent(s)
        for ax in range(d):
            for face in (0.0, np.pi):
                free = [i for i in range(d) if i != ax]
                worst = 0.0
                for pt in itertools.product(*(grid for _ in free)):
                    t = np.empty(d)
                    t[ax] = face
                    for i, v in zip(free, pt):
                        t[i] = v
                    worst = max(worst, abs(series_eval(nd, eta, sw, t)))
                checks.append(
                    FaceCheck(tuple(s), ax, float(face), worst, worst <= tol)
                )

    moments = []
    for ax in range(d):
        total = complex(np.sum(nd.values)) if nd.values.size else 0.0 + 0.0j
        signs = (-1.0) ** (nd.axis_indices(ax) % 2)
        shape = [1] * d
        shape[ax] = -1
        alt = (
            complex(np.sum(nd.values * signs.reshape(shape)))
            if nd.values.size
            else 0.0 + 0.0j
        )
        moments.append((total, alt))
    return BoundaryReport(tuple(checks), tuple(moments), float(tol))


# ---------------------------------------------------------------------------
# sequence file format
#
# JSON document {"dims": [...], "offsets": [...], "values": [[re, im], ...]}
# with values flattened in row-major order; 1-D sequences use dims of
# length 1.


def save_sequence(a: CoeffLike, path: str) -> None:
    """Write a sequence to ``path`` in the JSON interchange format.

    The write is atomic (write to a temp file, then rename).
    """
    nd = _as_nd(a)
    flat = nd.values.reshape(-1)
    doc = {
        "dims": list(nd.dims),
        "offsets": list(nd.offsets),
        "values": [[float(v.real), float(v.imag)] for v in flat],
    }
    dirname = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=dirname, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, indent=0)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_sequence(path: str) -> CoeffLike:
    """Read a sequence file; returns Coeff1D for dims of length 1, else CoeffND."""
    with open(path) as fh:
        doc = json.load(fh)
    try:
        dims = [int(n) for n in doc["dims"]]
        offsets = [int(o) for o in doc["offsets"]]
        pairs = doc["values"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed sequence file {path}: {exc}") from exc
    if len(dims) != len(offsets):
        raise ValueError(f"{path}: dims and offsets lengths differ")
    count = int(np.prod(dims)) if dims else 0
    if len(pairs) != count:
        raise ValueError(f"{path}: expected {count} values, found {len(pairs)}")
    vals = np.array(
        [complex(re, im) for re, im in pairs], dtype=np.complex128
    ).reshape(dims)
    nd = CoeffND(tuple(offsets), vals)
    return nd.as_coeff1d() if len(dims) == 1 else nd
