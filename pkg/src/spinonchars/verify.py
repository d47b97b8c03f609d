"""Verification suites: each case checks one identity and reports a locus on
failure.  The CLI runs these; the desk profile pins the reproduction bounds."""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import affine, qseries, strips, symfunc, yangian
from .partitions import Partition, SkewShape, all_partitions_upto, partitions_of
from .qseries import ZPolyQ, q_one, q_zero


@dataclass
class Case:
    id: str
    params: dict
    run: Callable[[], object]  # returns None on pass, else a locus


@dataclass
class CaseResult:
    id: str
    params: dict
    passed: bool
    locus: object
    seconds: float


@dataclass
class VerificationReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "cases": [
                {
                    "id": c.id,
                    "params": c.params,
                    "pass": c.passed,
                    "locus": c.locus,
                    "seconds": round(c.seconds, 4),
                }
                for c in self.cases
            ],
        }


def default_jobs() -> int:
    env = os.environ.get("SPINONCHARS_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def run_cases(suite: str, cases: list[Case], jobs: int | None = None) -> VerificationReport:
    if jobs is None:
        jobs = default_jobs()

    def execute(case: Case) -> CaseResult:
        start = time.perf_counter()
        try:
            locus = case.run()
        except Exception as exc:  # identity bugs must surface, not crash the run
            locus = f"exception: {exc}"
        elapsed = time.perf_counter() - start
        return CaseResult(case.id, case.params, locus is None, locus, elapsed)

    if jobs == 1:
        results = [execute(c) for c in cases]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(execute, cases))
    results.sort(key=lambda r: r.id)
    return VerificationReport(suite, results)


def _series_locus(a, b):
    """First differing exponent between two QSeries, or None."""
    if a.offset != b.offset:
        return f"offset {a.offset} != {b.offset}"
    for d in range(min(a.qmax, b.qmax) + 1):
        if a.coeffs[d] != b.coeffs[d]:
            return {"q_degree": d, "lhs": a.coeffs[d], "rhs": b.coeffs[d]}
    return None


def _table_locus(a, b):
    diff = a.first_difference(b)
    if diff is None:
        return None
    w, d, x, y = diff
    return {"weight": list(w), "q_degree": d, "lhs": x, "rhs": y}


# ---------------------------------------------------------------------------
# suite: qids

def qids_cases(qmax: int = 30, d3_qmax: int = 20, m_bound: int = 10,
               zprod_nmax: int = 8, rs_nmax: int = 4) -> list[Case]:
    cases = []
    for m in range(-m_bound, m_bound + 1):
        cases.append(Case(
            f"durfee[m={m:+03d}]", {"m": m, "qmax": qmax},
            lambda m=m: None if qseries.durfee_check(m, qmax) else "sum != 1/(q)oo",
        ))
    for big_m in range(m_bound + 1):
        for big_n in range(m_bound + 1):
            for variant in ("i", "ii"):
                cases.append(Case(
                    f"lemma-d3[{variant}][M={big_m:02d},N={big_n:02d}]",
                    {"M": big_m, "N": big_n, "variant": variant, "qmax": d3_qmax},
                    lambda M=big_m, N=big_n, v=variant: None
                    if qseries.lemma_d3_check(M, N, v, d3_qmax)
                    else "sides differ",
                ))

    def zprod_check(n_val):
        zdeg = n_val + 2
        lhs = qseries.pochhammer_z_expansion(n_val, qmax)
        rhs = qseries.inv_pochhammer_z_expansion(n_val, zdeg, qmax)
        prod = (lhs * rhs).truncate_z(zdeg)
        one = ZPolyQ([q_one(qmax)] + [q_zero(qmax)] * zdeg)
        for j in range(zdeg + 1):
            locus = _series_locus(prod[j], one[j])
            if locus is not None:
                return {"z_degree": j, **locus}
        return None

    for n_val in range(1, zprod_nmax + 1):
        cases.append(Case(
            f"z-expansion-product[N={n_val}]", {"N": n_val, "qmax": qmax},
            lambda n_val=n_val: zprod_check(n_val),
        ))
    for nvars in range(1, 4):
        cases.append(Case(
            f"rs-generating[nvars={nvars}]",
            {"Nmax": rs_nmax, "nvars": nvars, "qmax": 4},
            lambda nv=nvars: None
            if symfunc.rs_generating_check(rs_nmax, nv, 4)
            else "generating function mismatch",
        ))
    return cases


# ---------------------------------------------------------------------------
# suite: schur

def _sub_partitions(lam: Partition):
    if not lam.parts:
        yield Partition()
        return
    for size in range(lam.size() + 1):
        for mu in partitions_of(size, max_part=lam.parts[0], max_len=len(lam)):
            if lam.contains(mu):
                yield mu


def schur_cases(max_outer: int = 6, max_nvars: int = 4) -> list[Case]:
    cases = []

    def check_shape(shape, nvars):
        base = symfunc.schur_skew(shape, nvars, "jt_h")
        for method in ("jt_e", "sst"):
            other = symfunc.schur_skew(shape, nvars, method)
            if base != other:
                return {"method": method, "shape": repr(shape)}
        return None

    for lam in all_partitions_upto(max_outer):
        for mu in _sub_partitions(lam):
            shape = SkewShape(lam, mu)
            for nvars in range(1, max_nvars + 1):
                cases.append(Case(
                    f"schur[{lam.parts}/{mu.parts},v={nvars}]",
                    {"outer": list(lam.parts), "inner": list(mu.parts),
                     "nvars": nvars},
                    lambda s=shape, v=nvars: check_shape(s, v),
                ))

    def check_lr(strip):
        coeffs = symfunc.littlewood_richardson(strip.shape)
        nvars = max(strip.size(), 1)
        lhs = symfunc.schur_skew(strip.shape, nvars, "jt_h").eval_ones()
        rhs = 0
        for nu, c in coeffs.items():
            if c < 0:
                return {"nu": list(nu.parts), "coeff": c}
            rhs += c * symfunc.schur_skew(SkewShape(nu), nvars, "jt_h").eval_ones()
        return None if lhs == rhs else {"dim_lhs": lhs, "dim_rhs": rhs}

    for n_rank in (2, 3):
        for size in range(7):
            for strip in strips.enumerate_border_strips(n_rank, size, reduced=False):
                cases.append(Case(
                    f"lr[n={n_rank},rows={list(strip.rows)}]",
                    {"n": n_rank, "rows": list(strip.rows)},
                    lambda s=strip: check_lr(s),
                ))

    for a in range(1, 7):
        for b in range(1, 7):
            def check_h(a=a, b=b):
                lhs = (symfunc.complete(a, 2) * symfunc.complete(b, 2)
                       - symfunc.complete(a + b, 2))
                rhs = (symfunc.elementary(2, 2)
                       * symfunc.complete(a - 1, 2)
                       * symfunc.complete(b - 1, 2))
                return None if lhs == rhs else {"a": a, "b": b}
            cases.append(Case(
                f"h-rewrite[a={a},b={b}]", {"a": a, "b": b}, check_h,
            ))
    return cases


# ---------------------------------------------------------------------------
# suite: bijections

def bijection_cases(max_size: int = 6, ranks=(2, 3)) -> list[Case]:
    cases = []
    for n in ranks:
        for size in range(max_size + 1):
            for strip in strips.enumerate_border_strips(n, size, reduced=True):

                def round_trips(strip=strip, n=n):
                    seq = strips.strip_to_rapidity(strip)
                    if strips.rapidity_to_strip(seq, n) != strip:
                        return "strip->rapidity->strip failed"
                    motif = strips.rapidity_to_motif(seq)
                    if strips.motif_to_rapidity(motif) != seq:
                        return "rapidity->motif->rapidity failed"
                    if strips.motif_to_strip(motif) != strip:
                        return "square construction disagrees with rapidity route"
                    return None

                cases.append(Case(
                    f"roundtrip[n={n},rows={list(strip.rows)}]",
                    {"n": n, "rows": list(strip.rows)}, round_trips,
                ))
                cases.append(Case(
                    f"energy-forms[n={n},rows={list(strip.rows)}]",
                    {"n": n, "rows": list(strip.rows)},
                    lambda s=strip: (strips.energy(s), None)[1],
                ))

    def mode_lists(n: int, max_modes: int, max_value: int):
        # a run of equal modes stacks a column, so runs are capped at height n
        def rec(prefix, last, run):
            if prefix:
                yield list(prefix)
            if len(prefix) == max_modes:
                return
            for v in range(last, max_value + 1):
                if v > (max(prefix) + 1 if prefix else 0):
                    break
                new_run = run + 1 if prefix and v == last else 1
                if new_run <= n:
                    yield from rec(prefix + [v], v, new_run)

        yield from rec([], 0, 0)

    for n in ranks:
        for modes in mode_lists(n, 6, 4):
            cases.append(Case(
                f"modes[n={n},{modes}]", {"n": n, "modes": modes},
                lambda m=modes, n=n: _modes_case(m, n),
            ))
    cases.append(Case(
        "rapidity-convention-harness", {"max_size": max_size, "ranks": list(ranks)},
        _harness_case,
    ))
    return cases


def _modes_case(modes, n):
    try:
        strips.modes_to_strip(modes, n)
    except ValueError:
        return "rejected admissible mode list"
    except AssertionError as exc:
        return str(exc)
    return None


def _harness_case():
    report = strips.discover_rapidity_convention()
    for name in ("literal", "tail"):
        data = report["conventions"].get(name)
        if data is None:
            return f"missing convention {name}"
        if data["mismatch_count"] != len(data["mismatches"]):
            return "mismatch records inconsistent"
    if "conclusion" not in report:
        return "no conclusion"
    return None


# ---------------------------------------------------------------------------
# suite: spinon-cut

def small_norm_weights(n: int, k: int, max_extra=2):
    """Class-k weights with |lambda|^2/2 - Delta_k <= max_extra."""
    delta = affine.conformal_dimension(n, k)
    bound = 6
    out = []

    def rec(pos, vec):
        if pos == n - 1:
            if affine.weight_class(vec, n) != k:
                return
            if affine.weight_norm(vec, n) / 2 - delta <= max_extra:
                out.append(tuple(vec))
            return
        for m in range(-bound, bound + 1):
            rec(pos + 1, vec + [m])

    rec(0, [])
    return sorted(out)


def spinon_cut_cases(qmax: int = 8, ranks=(2, 3, 4)) -> list[Case]:
    cases = []
    for n in ranks:
        for k in range(n):
            for coords in small_norm_weights(n, k):
                cases.append(Case(
                    f"spinon-cut[n={n},k={k},w={list(coords)}]",
                    {"n": n, "k": k, "weight": list(coords), "qmax": qmax},
                    lambda n=n, k=k, c=coords: None
                    if affine.verify_spinon_cut(n, k, c, qmax)
                    else "cut sum != closed form",
                ))
                for n_spinons in range(k, 3 * n + 1, n):
                    cases.append(Case(
                        f"cut-forms[n={n},k={k},w={list(coords)},N={n_spinons}]",
                        {"n": n, "k": k, "weight": list(coords), "N": n_spinons},
                        lambda n=n, k=k, c=coords, N=n_spinons: _series_locus(
                            affine.spinon_string_function(n, k, c, N, "multisum", qmax),
                            affine.spinon_string_function(n, k, c, N, "alternating", qmax),
                        ),
                    ))
    return cases


# ---------------------------------------------------------------------------
# suite: sl2

def sl2_cases(qmax: int = 10) -> list[Case]:
    cases = []
    for k in (0, 1):
        def four_way(k=k):
            bos = affine.bosonic_character(2, k, qmax)
            for name, table in (
                ("fermionic-root", affine.sl2_fermionic_character(k, "root", qmax)),
                ("fermionic-spinon", affine.sl2_fermionic_character(k, "spinon", qmax)),
                ("spinon-enum", affine.sl2_spinon_enumeration(k, qmax)),
            ):
                locus = _table_locus(bos, table)
                if locus is not None:
                    return {"kind": name, **locus}
            return None

        cases.append(Case(
            f"sl2-four-way[k={k}]", {"k": k, "qmax": qmax}, four_way,
        ))
    return cases


# ---------------------------------------------------------------------------
# suite: decomposition

def decomposition_cases(bounds=None) -> list[Case]:
    if bounds is None:
        bounds = [(2, None, 8), (3, None, 5), (4, (0, 1), 3)]
    cases = []
    for n, ks, qmax in bounds:
        for k in (range(n) if ks is None else ks):
            cases.append(Case(
                f"yangian[n={n},k={k},qmax={qmax}]",
                {"n": n, "k": k, "qmax": qmax},
                lambda n=n, k=k, q=qmax: _table_locus(
                    affine.bosonic_character(n, k, q),
                    yangian.yangian_decomposition(n, k, q),
                ),
            ))
    for k in (0, 1):
        cases.append(Case(
            f"sl2-yangian[k={k},qmax=8]", {"k": k, "qmax": 8},
            lambda k=k: _table_locus(
                affine.bosonic_character(2, k, 8),
                yangian.sl2_yangian_decomposition(k, 8),
            ),
        ))
    for n_spinons in range(6):
        for size in range(6):
            for lam in partitions_of(size, max_len=n_spinons):
                cases.append(Case(
                    f"hw-module[lam={list(lam.parts)},N={n_spinons}]",
                    {"lam": list(lam.parts), "N": n_spinons},
                    lambda lam=lam, N=n_spinons: _hw_case(lam, N),
                ))
    return cases


def _hw_case(lam, n_spinons):
    try:
        yangian.hw_module_table(lam, n_spinons)
    except AssertionError as exc:
        return str(exc)
    return None


# ---------------------------------------------------------------------------
# suite: gz (branching schemes and Drinfel'd polynomial cross-checks)

def gz_cases(max_outer: int = 5, ranks=(2, 3), n_spinons_max: int = 2) -> list[Case]:
    cases = []
    for lam in all_partitions_upto(max_outer):
        for mu in _sub_partitions(lam):
            for n in ranks:
                for n_spinons in range(n_spinons_max + 1):
                    if len(mu) > n_spinons or len(lam) > n_spinons + n:
                        continue
                    cases.append(Case(
                        f"gz[{lam.parts}/{mu.parts},n={n},N={n_spinons}]",
                        {"outer": list(lam.parts), "inner": list(mu.parts),
                         "n": n, "N": n_spinons},
                        lambda l=lam, m=mu, n=n, N=n_spinons: _gz_case(l, m, n, N),
                    ))
    for lam in all_partitions_upto(6):
        for n in (2, 3, 4):
            if len(lam) > n:
                continue
            cases.append(Case(
                f"drinfeld[{lam.parts},n={n}]",
                {"lam": list(lam.parts), "n": n},
                lambda l=lam, n=n: _drinfeld_case(l, n),
            ))
    return cases


def _gz_case(lam, mu, n, n_spinons):
    schemes = yangian.gz_schemes(lam, mu, n, n_spinons)
    shape = SkewShape(lam, mu)
    weights: dict = {}
    for s in schemes:
        w = yangian.gz_weight(s)
        weights[w] = weights.get(w, 0) + 1
        tab = yangian.gz_to_sst(s)
        if yangian.sst_to_gz(tab, lam, mu, n, n_spinons) != s:
            return {"scheme": repr(s), "fault": "sst round trip"}
    schur = symfunc.schur_skew(shape, n, "sst")
    expected = symfunc.weight_projection(schur)
    # gz weights live on the N+n-variable torus; compare full monomial records
    monomials: dict = {}
    for e, c in schur.terms.items():
        monomials[symfunc.exps_to_fw(e)] = monomials.get(
            symfunc.exps_to_fw(e), 0) + c
    if weights != monomials:
        return {"fault": "weight multiset mismatch",
                "gz": {str(k): v for k, v in sorted(weights.items())},
                "schur": {str(k): v for k, v in sorted(monomials.items())}}
    return None


def _drinfeld_case(lam, n):
    ev = yangian.drinfeld_evaluation(lam, n)
    tame = yangian.drinfeld_tame(SkewShape(lam), n)
    if ev != tame:
        return {"fault": "evaluation != tame", "ev": ev.to_json_dict(),
                "tame": tame.to_json_dict()}
    for roots in ev.roots:
        if roots and list(roots) != list(range(roots[0], roots[-1] + 1, 2)):
            return {"fault": "roots not a unit string", "roots": list(roots)}
    return None


def _suite_qids(n=None, qmax=None):
    if qmax is None:
        return qids_cases()
    return qids_cases(qmax=qmax, d3_qmax=min(qmax, 20))


def _suite_spinon_cut(n=None, qmax=None):
    ranks = (n,) if n else (2, 3, 4)
    return spinon_cut_cases(qmax=qmax or 8, ranks=ranks)


def _suite_sl2(n=None, qmax=None):
    return sl2_cases(qmax=qmax or 10)


def _suite_bijections(n=None, qmax=None):
    return bijection_cases(ranks=(n,) if n else (2, 3))


def _suite_decomposition(n=None, qmax=None):
    if n is None and qmax is None:
        return decomposition_cases()
    defaults = {2: 8, 3: 5, 4: 3}
    ranks = [n] if n else [2, 3, 4]
    bounds = []
    for rank in ranks:
        ks = (0, 1) if rank >= 4 and qmax is None else None
        bounds.append((rank, ks, qmax or defaults.get(rank, 3)))
    return decomposition_cases(bounds)


def _suite_gz(n=None, qmax=None):
    return gz_cases(ranks=(n,) if n else (2, 3))


SUITES = {
    "qids": _suite_qids,
    "schur": lambda n=None, qmax=None: schur_cases(),
    "bijections": _suite_bijections,
    "spinon-cut": _suite_spinon_cut,
    "sl2": _suite_sl2,
    "decomposition": _suite_decomposition,
    "gz": _suite_gz,
}


def build_suite(name: str, n: int | None = None, qmax: int | None = None) -> list[Case]:
    if name == "all":
        cases = []
        for key in sorted(SUITES):
            cases.extend(SUITES[key](n=n, qmax=qmax))
        return cases
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](n=n, qmax=qmax)
