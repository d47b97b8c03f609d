"""Symmetric polynomials in finitely many variables.

SymPoly coefficients are ints or QSeries (for q-weighted polynomials such as
the Rogers-Szego family).  Everything is exact.
"""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement

from .partitions import Partition, SkewShape
from .qseries import QSeries, euler_inverse, inv_pochhammer, q_one, q_zero, qmultinomial
from .strips import BorderStrip


def _is_zero_coeff(c) -> bool:
    if isinstance(c, QSeries):
        return c.is_zero()
    return c == 0


class SymPoly:
    """Map from exponent vectors (tuples of length nvars) to coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} has wrong length")
                if not _is_zero_coeff(coeff):
                    self.terms[tuple(exps)] = coeff

    @staticmethod
    def one(nvars: int) -> "SymPoly":
        return SymPoly(nvars, {(0,) * nvars: 1})

    @staticmethod
    def zero(nvars: int) -> "SymPoly":
        return SymPoly(nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SymPoly") -> "SymPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return SymPoly(self.nvars, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, QSeries)):
            return SymPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return SymPoly(self.nvars, out)

    __rmul__ = __mul__

    def scale_coeffs(self, factor) -> "SymPoly":
        return SymPoly(self.nvars, {e: factor * c for e, c in self.terms.items()})

    def eval_ones(self):
        """Sum of coefficients (the value at x_1 = ... = x_n = 1)."""
        total = 0
        for c in self.terms.values():
            total = c + total
        return total

    def is_symmetric_under(self, i: int, j: int) -> bool:
        """Check invariance under swapping variables i and j (0-indexed)."""
        for e, c in self.terms.items():
            swapped = list(e)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            other = self.terms.get(tuple(swapped))
            if other is None or other != c:
                return False
        return True

    def to_records(self) -> list[dict]:
        out = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if isinstance(c, QSeries):
                rec = {"exps": list(e), "coeff": list(c.coeffs)}
            else:
                rec = {"exps": list(e), "coeff": c}
            out.append(rec)
        return out

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        return f"SymPoly(nvars={self.nvars}, nterms={len(self.terms)})"


def elementary(m: int, nvars: int) -> SymPoly:
    """e_m: sum of squarefree degree-m monomials; zero for m < 0 or m > nvars."""
    if m < 0 or m > nvars:
        return SymPoly.zero(nvars)
    terms = {}
    for idx in combinations(range(nvars), m):
        e = [0] * nvars
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = 1
    return SymPoly(nvars, terms)


def complete(m: int, nvars: int) -> SymPoly:
    """h_m: sum of all degree-m monomials; zero for m < 0."""
    if m < 0:
        return SymPoly.zero(nvars)
    terms = {}
    for idx in combinations_with_replacement(range(nvars), m):
        e = [0] * nvars
        for i in idx:
            e[i] += 1
        terms[tuple(e)] = 1
    return SymPoly(nvars, terms)


def _det(matrix: list[list[SymPoly]], nvars: int) -> SymPoly:
    """Determinant by first-column minor expansion with subset memoization."""
    size = len(matrix)
    if size == 0:
        return SymPoly.one(nvars)
    memo: dict[tuple[int, ...], SymPoly] = {}

    def minor(rows: tuple[int, ...]) -> SymPoly:
        if not rows:
            return SymPoly.one(nvars)
        if rows in memo:
            return memo[rows]
        col = size - len(rows)
        acc = SymPoly.zero(nvars)
        for pos, r in enumerate(rows):
            entry = matrix[r][col]
            if entry.is_zero():
                continue
            sub = minor(rows[:pos] + rows[pos + 1:])
            term = entry * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        memo[rows] = acc
        return acc

    return minor(tuple(range(size)))


def _sst_fillings(shape: SkewShape, nvars: int):
    """Yield all semi-standard fillings as dicts cell -> entry in 1..nvars."""
    cells = shape.cells()
    filling: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield dict(filling)
            return
        i, j = cells[idx]
        lo = 1
        left = filling.get((i, j - 1))
        if left is not None:
            lo = max(lo, left)
        up = filling.get((i - 1, j))
        if up is not None:
            lo = max(lo, up + 1)
        for v in range(lo, nvars + 1):
            filling[(i, j)] = v
            yield from rec(idx + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def schur_skew(shape: SkewShape, nvars: int, method: str = "jt_h") -> SymPoly:
    """Skew Schur polynomial by determinant (jt_h, jt_e) or tableau sum (sst)."""
    lam, mu = shape.outer, shape.inner
    if method == "jt_h":
        r = len(lam)
        matrix = [
            [complete(lam[i] - mu[j] - i + j, nvars) for j in range(1, r + 1)]
            for i in range(1, r + 1)
        ]
        return _det(matrix, nvars)
    if method == "jt_e":
        lc, mc = lam.conjugate(), mu.conjugate()
        s = len(lc)
        matrix = [
            [elementary(lc[i] - mc[j] - i + j, nvars) for j in range(1, s + 1)]
            for i in range(1, s + 1)
        ]
        return _det(matrix, nvars)
    if method == "sst":
        acc: dict = {}
        for filling in _sst_fillings(shape, nvars):
            e = [0] * nvars
            for v in filling.values():
                e[v - 1] += 1
            e = tuple(e)
            acc[e] = acc.get(e, 0) + 1
        return SymPoly(nvars, acc)
    raise ValueError(f"unknown method {method!r}")


def littlewood_richardson(shape: SkewShape) -> dict[Partition, int]:
    """Expand s_{lambda/mu} = sum_nu c^nu s_nu by leading-monomial subtraction."""
    nvars = max(shape.size(), 1)
    poly = schur_skew(shape, nvars, "jt_h")
    out: dict[Partition, int] = {}
    while not poly.is_zero():
        lead = max(poly.terms)
        coeff = poly.terms[lead]
        nu_parts = [e for e in lead if e != 0]
        if list(lead) != sorted(lead, reverse=True):
            raise AssertionError(f"leading exponent {lead} is not a partition")
        if coeff < 0:
            raise AssertionError(f"negative expansion coefficient at {lead}")
        nu = Partition(nu_parts)
        out[nu] = coeff
        poly = poly - schur_skew(SkewShape(nu), nvars, "jt_h") * coeff
    return out


def strip_schur(strip: BorderStrip, nvars: int) -> SymPoly:
    """Skew Schur polynomial of a border strip via the column recurrence.

    Peeling j columns off the left end contributes (-1)^{j-1} e_{(sum of those
    column heights)}; since e_m vanishes for m > nvars the recursion is shallow.
    """
    cols = strip.cols
    cache: list[SymPoly | None] = [None] * (len(cols) + 1)
    cache[0] = SymPoly.one(nvars)

    def upto(j: int) -> SymPoly:
        if cache[j] is not None:
            return cache[j]
        acc = SymPoly.zero(nvars)
        height = 0
        for t in range(1, j + 1):
            height += cols[j - t]
            if height > nvars:
                break
            e = elementary(height, nvars)
            term = e * upto(j - t)
            acc = acc + (term if t % 2 == 1 else -term)
        cache[j] = acc
        return acc

    return upto(len(cols))


def sl2_strip_product(rows) -> SymPoly:
    """s_<a_1..a_r> at n=2 as a product of complete symmetric polynomials."""
    rows = list(rows)
    if not rows:
        return SymPoly.one(2)
    if len(rows) == 1:
        return schur_skew(BorderStrip.from_rows(rows, 2).shape, 2, "jt_h")
    if rows[0] < 1 or rows[-1] < 1 or any(a < 2 for a in rows[1:-1]):
        raise ValueError(f"invalid n=2 strip rows {rows}")
    poly = SymPoly.one(2)
    r = len(rows)
    for i, a in enumerate(rows, start=1):
        drop = 1 if i in (1, r) else 2
        poly = poly * complete(a - drop, 2)
    return poly


def exps_to_fw(exps) -> tuple[int, ...]:
    """Monomial exponents (c_1..c_n) -> fundamental-weight coordinates
    (c_1-c_2, ..., c_{n-1}-c_n)."""
    return tuple(exps[j] - exps[j + 1] for j in range(len(exps) - 1))


def weight_projection(poly: SymPoly) -> dict[tuple[int, ...], object]:
    """Collapse a SymPoly onto fundamental-weight coordinates (x_1...x_n = 1)."""
    out: dict = {}
    for e, c in poly.terms.items():
        w = exps_to_fw(e)
        out[w] = out[w] + c if w in out else c
    return {w: c for w, c in out.items() if not _is_zero_coeff(c)}


def stabilization_check(cols, n: int, nvars: int | None = None) -> bool:
    """True iff appending a full column of height n leaves the weight-projected
    Schur polynomial unchanged (nvars = n)."""
    if nvars is None:
        nvars = n
    if nvars != n:
        raise ValueError("stabilization lives on the rank-n torus: nvars must be n")
    base = BorderStrip.from_cols(cols, n)
    extended = BorderStrip.from_cols(list(base.cols) + [n], n)
    p1 = schur_skew(base.shape, n, "jt_h")
    p2 = schur_skew(extended.shape, n, "jt_h")
    return weight_projection(p1) == weight_projection(p2)


def rogers_szego(total: int, nvars: int, qmax: int) -> SymPoly:
    """H_N: sum over compositions of N into nvars parts of qmultinomial * monomial."""
    if total < 0:
        raise ValueError("N must be >= 0")
    terms: dict = {}

    def rec(pos, remaining, exps):
        if pos == nvars - 1:
            comp = exps + [remaining]
            terms[tuple(comp)] = qmultinomial(comp, qmax)
            return
        for v in range(remaining + 1):
            rec(pos + 1, remaining - v, exps + [v])

    rec(0, total, [])
    return SymPoly(nvars, terms)


def rs_generating_check(nmax: int, nvars: int, qmax: int) -> bool:
    """Verify sum_N H_N t^N/(q)_N = prod_i (t x_i; q)_inf^{-1} through t^nmax.

    The right side's t^N coefficient is expanded independently via the
    single-variable expansion 1/(t z; q)_inf = sum_j z^j t^j / (q)_j.
    """
    for total in range(nmax + 1):
        lhs = rogers_szego(total, nvars, qmax).scale_coeffs(
            inv_pochhammer(total, qmax)
        )
        rhs_terms: dict = {}

        def rec(pos, remaining, exps, coeff):
            if pos == nvars - 1:
                comp = tuple(exps + [remaining])
                c = coeff * inv_pochhammer(remaining, qmax)
                rhs_terms[comp] = rhs_terms[comp] + c if comp in rhs_terms else c
                return
            for v in range(remaining + 1):
                rec(pos + 1, remaining - v, exps + [v],
                    coeff * inv_pochhammer(v, qmax))

        rec(0, total, [], q_one(qmax))
        rhs = SymPoly(nvars, rhs_terms)
        if lhs != rhs:
            return False
    return True
