"""Tensor-space matrices for diagrams: R-matrices, local blocks, and rho0.

Rows and columns are indexed by sequences in {1,2}^n, encoded as integers
with 1 before 2 lexicographically: seq s maps to sum (s_i - 1) * 2^(n-i).

The matrix of a diagram multiplies one factor per line: a propagating line
(i, j') forces v_i = w_j; a northern arc (i, j), i < j, forces v_i != v_j
and contributes u^+1 on (1,2) and u^-1 on (2,1), where u is the arc unit
(u = x by default, so u^2 = q); southern arcs act the same on w.  The
orientation is calibrated so that the (12,12) entry of a single cup-cap
generator is q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .rings import CycloInt, CycloLaurent, LaurentInt, element_from_json, element_to_json

__all__ = [
    "SparseRepMatrix",
    "seq_to_index",
    "index_to_seq",
    "r_matrix",
    "mask",
    "mask_eq",
    "product_summand_counts",
    "local_u_matrix",
    "place_local",
    "Rho0Config",
    "Rho0Rep",
    "rho0",
    "matrix_to_json",
    "matrix_from_json",
]

_RING_ONE = {"laurent": LaurentInt.one, "cyclo": CycloLaurent.one}
_RING_ZERO = {"laurent": LaurentInt.zero, "cyclo": CycloLaurent.zero}


def _ring_of(elem):
    if isinstance(elem, LaurentInt):
        return "laurent"
    if isinstance(elem, CycloLaurent):
        return "cyclo"
    raise TypeError(f"not a ring element: {type(elem).__name__}")


def seq_to_index(seq):
    idx = 0
    for s in seq:
        idx = (idx << 1) | (s - 1)
    return idx


def index_to_seq(idx, n):
    return tuple(((idx >> (n - 1 - i)) & 1) + 1 for i in range(n))


@dataclass(frozen=True, eq=False)
class SparseRepMatrix:
    """A sparse matrix on ({1,2}^rows) x ({1,2}^cols) over one of the rings."""

    rows_log2: int
    cols_log2: int
    entries: dict
    ring: str

    def __post_init__(self):
        object.__setattr__(
            self, "entries", {k: v for k, v in self.entries.items() if v}
        )

    @classmethod
    def identity(cls, n_log2, ring="laurent"):
        one = _RING_ONE[ring]()
        return cls(n_log2, n_log2, {(i, i): one for i in range(1 << n_log2)}, ring)

    def shape(self):
        return (1 << self.rows_log2, 1 << self.cols_log2)

    def nnz(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, SparseRepMatrix):
            return NotImplemented
        return (self.rows_log2, self.cols_log2, self.ring) == \
            (other.rows_log2, other.cols_log2, other.ring) and \
            self.entries == other.entries

    def mul(self, other):
        if self.cols_log2 != other.rows_log2 or self.ring != other.ring:
            raise ValueError("shape or ring mismatch in matrix product")
        rows_of_b = {}
        for (r, c), v in other.entries.items():
            rows_of_b.setdefault(r, []).append((c, v))
        out = {}
        for (u, w), a in self.entries.items():
            for c, b in rows_of_b.get(w, ()):
                key = (u, c)
                s = out.get(key)
                t = a * b
                out[key] = t if s is None else s + t
        return SparseRepMatrix(self.rows_log2, other.cols_log2, out, self.ring)

    def scalar_mul(self, c):
        return SparseRepMatrix(
            self.rows_log2, self.cols_log2,
            {k: c * v for k, v in self.entries.items()}, self.ring
        )

    def sub(self, other):
        if (self.rows_log2, self.cols_log2, self.ring) != \
                (other.rows_log2, other.cols_log2, other.ring):
            raise ValueError("shape or ring mismatch in matrix difference")
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k)
            out[k] = -v if s is None else s - v
        return SparseRepMatrix(self.rows_log2, self.cols_log2, out, self.ring)

    def ratio_to(self, other):
        """The scalar c with self == c * other, or None if no such c exists."""
        if not other.entries:
            return None
        if not self.entries:
            return _RING_ZERO[self.ring]()
        c = None
        keys = sorted(other.entries)
        for k in keys:
            if other.entries[k].is_unit_monomial():
                c = self.entries.get(k, _RING_ZERO[self.ring]()) \
                    * other.entries[k].unit_inverse()
                break
        if c is None:
            for k in keys:
                if k not in self.entries:
                    continue
                try:
                    c = self.entries[k].divexact(other.entries[k])
                    break
                except ArithmeticError:
                    continue
        if c is None:
            return None
        return c if self == other.scalar_mul(c) else None

    def flatten(self):
        """The matrix as a sparse vector keyed by (row, col)."""
        return dict(self.entries)

    def to_cyclo(self):
        if self.ring == "cyclo":
            return self
        return SparseRepMatrix(
            self.rows_log2, self.cols_log2,
            {k: CycloLaurent.from_laurent(v) for k, v in self.entries.items()},
            "cyclo",
        )


def mask(a):
    """The set of nonzero positions of a matrix."""
    return frozenset(a.entries)


def mask_eq(a, b):
    if (a.rows_log2, a.cols_log2) != (b.rows_log2, b.cols_log2):
        raise ValueError("shape mismatch in mask comparison")
    return mask(a) == mask(b)


def r_matrix(d, unit=None):
    """The tensor-space matrix of a planar diagram.

    ``unit`` is the invertible arc weight (default: x over the integer
    Laurent ring); passing a different unit, possibly in the cyclotomic
    ring, realizes the same matrix at an independent formal parameter.
    """
    if unit is None:
        unit = LaurentInt.x_power(1)
    ring = _ring_of(unit)
    inv = unit.unit_inverse()
    n, m = d.n, d.m
    # One option list per line; an option assigns values and adds an exponent.
    options = []
    for a, b in d.pairs:
        if b < n:  # northern arc
            options.append([(((0, a, 1), (0, b, 2)), 1),
                            (((0, a, 2), (0, b, 1)), -1)])
        elif a >= n:  # southern arc
            i, j = a - n, b - n
            options.append([(((1, i, 1), (1, j, 2)), 1),
                            (((1, i, 2), (1, j, 1)), -1)])
        else:  # propagating line: equal values, no weight
            j = b - n
            options.append([(((0, a, 1), (1, j, 1)), 0),
                            (((0, a, 2), (1, j, 2)), 0)])
    entries = {}
    for combo in itertools.product(*options):
        v = [0] * n
        w = [0] * m
        exp = 0
        for assigns, e in combo:
            exp += e
            for which, pos, val in assigns:
                if which == 0:
                    v[pos] = val
                else:
                    w[pos] = val
        coeff = unit ** exp if exp >= 0 else inv ** (-exp)
        entries[(seq_to_index(v), seq_to_index(w))] = coeff
    return SparseRepMatrix(n, m, entries, ring)


def product_summand_counts(a, b):
    """For each product position, how many intermediate indices contribute."""
    rows_of_b = {}
    for (r, c), v in b.entries.items():
        rows_of_b.setdefault(r, []).append((c, v))
    counts = {}
    for (u, w), _ in a.entries.items():
        for c, _ in rows_of_b.get(w, ()):
            counts[(u, c)] = counts.get((u, c), 0) + 1
    return counts


def local_u_matrix(chi, param):
    """The 4x4 generator block in basis order (11, 12, 21, 22).

    The middle block is [[q, 1], [1, 1/q]] at q = param; the (22,22) corner
    holds chi (zero in the plain cup-cap case).
    """
    one = _RING_ONE[_ring_of(param)]()
    entries = {
        (1, 1): param,
        (1, 2): one,
        (2, 1): one,
        (2, 2): param.unit_inverse(),
    }
    if chi:
        entries[(3, 3)] = chi
    return SparseRepMatrix(2, 2, entries, _ring_of(param))


def place_local(local, i, total, sign=-1):
    """Embed a 4x4 block at tensor positions (i, i+1) of ``total`` factors.

    Acts as the identity on every other factor; ``sign=-1`` places the
    negated block.
    """
    if not 1 <= i <= total - 1:
        raise ValueError(f"position {i} out of range 1..{total - 1}")
    high_bits = i - 1
    low_bits = total - 1 - i
    entries = {}
    for (r, c), v in local.entries.items():
        val = -v if sign == -1 else v
        for high in range(1 << high_bits):
            for low in range(1 << low_bits):
                row = (high << (total - high_bits)) | (r << low_bits) | low
                col = (high << (total - high_bits)) | (c << low_bits) | low
                entries[(row, col)] = val
    return SparseRepMatrix(total, total, entries, local.ring)


@dataclass(frozen=True)
class Rho0Config:
    """Size and weight parameters of the explicit blob tensor representation.

    The coefficient ring is Z[a, x, x^-1]/(a^4 + 1) with q = x^2; the three
    placement weights are r = a^2 q^m, s = a^5 x and t = a^3 x.
    """

    n: int
    m: int

    @property
    def r_param(self):
        return CycloLaurent({2 * self.m: CycloInt.a_power(2)})

    @property
    def s_param(self):
        return CycloLaurent({1: CycloInt.a_power(5)})

    @property
    def t_param(self):
        return CycloLaurent({1: CycloInt.a_power(3)})


@dataclass(frozen=True)
class Rho0Rep:
    """Generator images of rho0 on 2n tensor factors.

    ``u_factors`` keeps the two placements of each cup-cap image separately;
    mirror certification constrains the factors, not just their product.
    """

    config: Rho0Config
    e: SparseRepMatrix
    u_factors: dict = field(default_factory=dict)
    u: dict = field(default_factory=dict)

    def letter_images(self):
        images = {"e": self.e}
        images.update(self.u)
        return images


def rho0(config):
    """Build the blob tensor representation on 2n factors.

    The blob image is a^-2 times the weight-r placement at the middle
    position; the i-th cup-cap image is the product of the weight-s
    placement at position n-i and the weight-t placement at position n+i
    (disjoint positions, so the factor order is immaterial).
    """
    n, total = config.n, 2 * config.n
    a_inv2 = CycloLaurent.a_power(-2)
    e_mat = place_local(local_u_matrix(None, config.r_param), n, total).scalar_mul(a_inv2)
    factors = {}
    products = {}
    for i in range(1, n):
        x_i = place_local(local_u_matrix(None, config.s_param), n - i, total)
        y_i = place_local(local_u_matrix(None, config.t_param), n + i, total)
        factors[i] = (x_i, y_i)
        products[i] = x_i.mul(y_i)
    return Rho0Rep(config, e_mat, factors, products)


def matrix_to_json(a):
    entries = []
    for (r, c) in sorted(a.entries):
        elem = element_to_json(a.entries[(r, c)])
        entries.append([r, c, elem["coeffs"]])
    return {
        "rows_log2": a.rows_log2,
        "cols_log2": a.cols_log2,
        "ring": a.ring,
        "entries": entries,
    }


def matrix_from_json(obj):
    ring = obj["ring"]
    entries = {}
    for r, c, coeffs in obj["entries"]:
        entries[(int(r), int(c))] = element_from_json({"ring": ring, "coeffs": coeffs})
    return SparseRepMatrix(int(obj["rows_log2"]), int(obj["cols_log2"]), entries, ring)
