"""Exhaustive verification of the counting and q-counting identities.

Each identity is checked cell by cell over a parameter grid. A cell computes
an enumerated left side and a closed-form (or independently built) right
side; the report passes exactly when the two are equal. Cells are
independent, so a grid can be spread over a process pool; reports always
come back in parameter order.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, factorial, perm
from typing import Callable, Iterable

from . import bijections, permbij, qpoly
from .permcore import (
    Permutation,
    check_cap,
    descent_set,
    enumerate_C,
    enumerate_Pi,
    enumerate_Sn,
    idescent_set,
    inverse,
    lis_length,
)
from .tableau import (
    TableauPair,
    enumerate_Crsk,
    enumerate_D,
    enumerate_Pirsk,
    rsk,
    rsk_inverse,
    tableau_descent_set,
    tableau_maj,
)

DEFAULT_MAX_N = 9
RSK_RANDOM_N = 50
RSK_RANDOM_SAMPLES = 1000
RSK_EXHAUSTIVE_MAX_N = 7


@dataclass
class VerificationReport:
    identity: str
    n: int
    k: int | None
    lhs: object
    rhs: object
    status: str
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def cells(self, timings: bool = False) -> list[str]:
        return [
            self.identity,
            str(self.n),
            "" if self.k is None else str(self.k),
            _text(self.lhs),
            _text(self.rhs),
            self.status,
            f"{self.elapsed * 1000:.1f}" if timings else "",
        ]

    def to_json(self, timings: bool = False) -> dict:
        out = dict(zip(CSV_COLUMNS, self.cells(timings)))
        out["n"] = self.n
        out["k"] = self.k
        out["elapsed_ms"] = round(self.elapsed * 1000, 1) if timings else None
        return out


CSV_COLUMNS = ["identity", "n", "k", "lhs", "rhs", "status", "elapsed_ms"]


def _text(value) -> str:
    if isinstance(value, qpoly.QPolynomial):
        return value.to_text()
    return str(value)


def set_digest(pairs: Iterable[TableauPair]) -> str:
    """``"<size>:<hash>"`` of the canonical row-list encoding of a pair set."""
    keys = sorted(p.key() for p in pairs)
    h = hashlib.sha256(repr(keys).encode()).hexdigest()[:12]
    return f"{len(keys)}:{h}"


# closed forms

def count_pi(n: int, k: int, cap: int | None = None) -> int:
    return sum(1 for _ in enumerate_Pi(n, k, cap))


def alternating_count(n: int, k: int) -> int:
    return sum((-1) ** (k - r) * comb(k, r) * perm(n, r) for r in range(k + 1))


def thm1_rhs(n: int, k: int) -> int:
    if k < 0 or n < 2 * k:
        raise ValueError(f"the closed form is only asserted for n >= 2k, got n={n}, k={k}")
    return alternating_count(n, k)


# cells: each returns (lhs, rhs) or raises

def _cell_thm1(n, k, explore=False):
    rhs = alternating_count(n, k) if explore else thm1_rhs(n, k)
    return count_pi(n, k), rhs


def _cell_thm2(n, k, explore=False):
    rhs = qpoly.alternating_falling_sum(n, k) if explore else qpoly.thm2_rhs(n, k)
    return qpoly.imaj_gf(enumerate_Pi(n, k)), rhs


def _cell_recurrence(n, k):
    lhs = sum(comb(k, s) * count_pi(n, s) for s in range(k + 1))
    rhs = comb(n, k) * factorial(k)
    if rhs != factorial(n) // factorial(n - k):
        raise AssertionError("C(n,k) k! differs from n!/(n-k)!")
    return lhs, rhs


def _cell_q_recurrence(n, k):
    lhs = qpoly.QPolynomial()
    for s in range(k + 1):
        lhs = lhs + comb(k, s) * qpoly.imaj_gf(enumerate_Pi(n, k - s))
    return lhs, qpoly.q_falling(n, k)


def _cell_setie(n, k):
    bijections.e_chain(n, k)
    return set_digest(enumerate_Pirsk(n, k)), set_digest(bijections.setie_rhs(n, k))


def _cell_dnks(n, k, s):
    direct = set(enumerate_D(n, k, s))
    rebuilt = {
        bijections.c_to_d(pair, a, k)
        for pair in enumerate_Crsk(n, k - s)
        for a in combinations(range(n - k + 1, n + 1), s)
    }
    if rebuilt != direct:
        raise AssertionError("c_to_d image differs from the directly built D set")
    maj_gf = qpoly.stat_gf(tableau_maj(p.P) for p in direct)
    if maj_gf != comb(k, s) * qpoly.q_falling(n, k - s):
        raise AssertionError("maj(P) generating function over D is wrong")
    return len(direct), comb(k, s) * factorial(n) // factorial(n - k + s)


def _cell_cns(n, s):
    return sum(1 for _ in enumerate_C(n, s)), factorial(n) // factorial(n - s)


def _cell_permsets(n, k):
    levels = permbij.permset_chain(n, k)
    return count_pi(n, k), permbij.chain_count(levels)


def _cell_lemma_qinv(n, s):
    if not qpoly.verify_lemma_qinv(n, s):
        raise AssertionError("P-partition factorization does not match")
    return qpoly.wp_via_linear_extensions(n, s), qpoly.q_falling(n, s)


def _rsk_ok(w: Permutation) -> bool:
    P, Q = rsk(w).P, rsk(w).Q
    if rsk_inverse(TableauPair(P, Q)) != w:
        return False
    if len(P.rows[0]) != lis_length(w):
        return False
    back = rsk(inverse(w))
    if back.P != Q or back.Q != P:
        return False
    return tableau_descent_set(P) == idescent_set(w) and tableau_descent_set(Q) == descent_set(w)


def _cell_rsk(n):
    perms = list(enumerate_Sn(n))
    return len(perms), sum(_rsk_ok(w) for w in perms)


def _cell_rsk_random(n, samples, seed):
    rng = random.Random(seed)
    ok = 0
    for _ in range(samples):
        word = list(range(1, n + 1))
        rng.shuffle(word)
        w = Permutation(tuple(word))
        ok += rsk_inverse(rsk(w)) == w
    return samples, ok


def _run_cell(cell) -> VerificationReport:
    identity, n, k, fn, args, explore = cell
    start = time.perf_counter()
    try:
        lhs, rhs = fn(*args)
        if explore:
            status = "explore"
        else:
            status = "pass" if lhs == rhs else "fail"
    except Exception as exc:  # report, don't abort the grid
        lhs, rhs, status = "error", f"{type(exc).__name__}: {exc}", "fail"
    return VerificationReport(identity, n, k, lhs, rhs, status, time.perf_counter() - start)


def _execute(specs: list, jobs: int = 1) -> list[VerificationReport]:
    if jobs <= 1 or len(specs) <= 1:
        return [_run_cell(cell) for cell in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_cell, specs))


def _grid(max_n: int, cap: int | None = None, min_n: int = 2):
    check_cap(max_n, cap)
    for n in range(min_n, max_n + 1):
        for k in range(n // 2 + 1):
            yield n, k


def verify_thm1(max_n: int = DEFAULT_MAX_N, explore: bool = False, jobs: int = 1, cap=None):
    specs = [("thm1", n, k, _cell_thm1, (n, k), False) for n, k in _grid(max_n, cap)]
    if explore:
        specs += [
            ("thm1", n, k, _cell_thm1, (n, k, True), True)
            for n in range(2, max_n + 1)
            for k in range(n // 2 + 1, n + 1)
        ]
    return _execute(specs, jobs)


def verify_thm2(max_n: int = DEFAULT_MAX_N, explore: bool = False, jobs: int = 1, cap=None):
    specs = [("thm2", n, k, _cell_thm2, (n, k), False) for n, k in _grid(max_n, cap)]
    if explore:
        specs += [
            ("thm2", n, k, _cell_thm2, (n, k, True), True)
            for n in range(2, max_n + 1)
            for k in range(n // 2 + 1, n + 1)
        ]
    return _execute(specs, jobs)


def verify_recurrence(max_n: int = DEFAULT_MAX_N, jobs: int = 1, cap=None):
    specs = [("recurrence", n, k, _cell_recurrence, (n, k), False) for n, k in _grid(max_n, cap)]
    return _execute(specs, jobs)


def verify_q_recurrence(max_n: int = DEFAULT_MAX_N, jobs: int = 1, cap=None):
    specs = [
        ("q_recurrence", n, k, _cell_q_recurrence, (n, k), False) for n, k in _grid(max_n, cap)
    ]
    return _execute(specs, jobs)


def verify_setie(max_n: int = DEFAULT_MAX_N, jobs: int = 1, cap=None):
    specs = [("setie", n, k, _cell_setie, (n, k), False) for n, k in _grid(max_n, cap)]
    return _execute(specs, jobs)


def verify_dnks_count(max_n: int = DEFAULT_MAX_N, jobs: int = 1, cap=None):
    specs = [
        (f"dnks[s={s}]", n, k, _cell_dnks, (n, k, s), False)
        for n, k in _grid(max_n, cap)
        for s in range(k + 1)
    ]
    return _execute(specs, jobs)


def verify_cns_count(max_n: int = DEFAULT_MAX_N, jobs: int = 1, cap=None):
    check_cap(max_n, cap)
    specs = [
        ("cns", n, s, _cell_cns, (n, s), False)
        for n in range(1, max_n + 1)
        for s in range(n + 1)
    ]
    return _execute(specs, jobs)


def verify_permsets(max_n: int = DEFAULT_MAX_N, jobs: int = 1, cap=None):
    specs = [("permsets", n, k, _cell_permsets, (n, k), False) for n, k in _grid(max_n, cap)]
    return _execute(specs, jobs)


def verify_lemma_qinv(max_n: int = DEFAULT_MAX_N, jobs: int = 1, cap=None):
    """Rows carry ``s`` in the ``k`` column."""
    check_cap(max_n, cap)
    specs = [
        ("lemma_qinv", n, s, _cell_lemma_qinv, (n, s), False)
        for n in range(1, max_n + 1)
        for s in range(n + 1)
    ]
    return _execute(specs, jobs)


def verify_rsk(max_n: int = DEFAULT_MAX_N, seed: int = 0, jobs: int = 1, cap=None,
               samples: int = RSK_RANDOM_SAMPLES, random_n: int = RSK_RANDOM_N):
    """Exhaustive RSK properties up to ``min(max_n, 7)`` plus random round trips."""
    check_cap(max_n, cap)
    top = min(max_n, RSK_EXHAUSTIVE_MAX_N)
    specs = [("rsk", n, None, _cell_rsk, (n,), False) for n in range(1, top + 1)]
    specs.append(("rsk_random", random_n, None, _cell_rsk_random, (random_n, samples, seed), False))
    return _execute(specs, jobs)


IDENTITIES: dict[str, Callable[..., list[VerificationReport]]] = {
    "thm1": verify_thm1,
    "thm2": verify_thm2,
    "recurrence": verify_recurrence,
    "q-recurrence": verify_q_recurrence,
    "setie": verify_setie,
    "dnks": verify_dnks_count,
    "cns": verify_cns_count,
    "permsets": verify_permsets,
    "lemma-qinv": verify_lemma_qinv,
    "rsk": verify_rsk,
}


def run(name: str, max_n: int = DEFAULT_MAX_N, explore: bool = False, jobs: int = 1,
        seed: int = 0, cap: int | None = None) -> list[VerificationReport]:
    names = list(IDENTITIES) if name == "all" else [name]
    reports: list[VerificationReport] = []
    for ident in names:
        fn = IDENTITIES[ident]
        kwargs = {"jobs": jobs, "cap": cap}
        if ident in ("thm1", "thm2"):
            kwargs["explore"] = explore
        if ident == "rsk":
            kwargs["seed"] = seed
        reports.extend(fn(max_n, **kwargs))
    return reports


def to_csv(reports: Iterable[VerificationReport], timings: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rep in reports:
        writer.writerow(rep.cells(timings))
    return buf.getvalue()


def to_json_lines(reports: Iterable[VerificationReport], timings: bool = False) -> str:
    return "".join(json.dumps(r.to_json(timings)) + "\n" for r in reports)


def all_passed(reports: Iterable[VerificationReport]) -> bool:
    return all(r.status in ("pass", "explore") for r in reports)
