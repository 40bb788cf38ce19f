"""Registry of (claim, n) checks aggregated into verification suites."""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Iterable

from . import characters as ch
from . import clifford as cl
from . import core, parking, shifted
from . import symfunc as sf
from .serialize import fmt_q, naive_to_json, odd_to_json

SUITES = ("identities", "combinatorics", "characters", "clifford")

# oracle checks are exponential in n; symmetric-function checks are cheap
BRUTE_CAP = 5
MAX_N_CAP = 8


@dataclass
class CheckResult:
    suite: str
    claim: str
    n: int
    ok: bool
    detail: str = ""
    counterexample: Any = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return f"{status}  [{self.suite}] {self.claim} (n={self.n}){tail}"


@dataclass(frozen=True)
class Bounds:
    max_n: int = 6
    brute_bound: int = 5
    seed: int = 20240101


Outcome = tuple[bool, str, Any]
_CHECKS: dict[str, tuple[str, Callable[[int, Bounds], Outcome], Callable[[Bounds], Iterable[int]]]] = {}


def check(suite: str, claim: str, ns: Callable[[Bounds], Iterable[int]]):
    def deco(fn):
        _CHECKS[claim] = (suite, fn, ns)
        return fn

    return deco


def _upto(b: Bounds) -> range:
    return range(1, b.max_n + 1)


def _brute(b: Bounds) -> range:
    return range(1, min(b.brute_bound, b.max_n) + 1)


def _first_diff(f: sf.SymFunc, g: sf.SymFunc) -> dict[str, Any]:
    for lam in list(f.coeffs) + list(g.coeffs):
        if f[lam] != g[lam]:
            return {"partition": list(lam), "left": fmt_q(f[lam]), "right": fmt_q(g[lam])}
    return {}


# ---- identities ---------------------------------------------------------

@check("identities", "P-relation", _upto)
def _p_relation(k: int, b: Bounds) -> Outcome:
    return sf.p_relation_check(k), f"k={k}", None


@check("identities", "P-def three forms", _upto)
def _p_def(k: int, b: Bounds) -> Outcome:
    return sf.p_def_forms(k), f"k={k}", None


@check("identities", "SH_n V-expansion is OKrew", _upto)
def _odd_v(n: int, b: Bounds) -> Outcome:
    got = sf.expand_odd_v(sf.sh_symfunc(n))
    via_naive = sf.expand_odd_v(sf.combine_v(sf.naive_v_expansion(n), n))
    want = {lam: Fraction(core.okrew(lam)) for lam in core.partitions_of(n, "odd")}
    ok = got == want == via_naive
    bad = {str(list(k)): fmt_q(v) for k, v in got.items()} if not ok else None
    return ok, "", bad


@check("identities", "naive V-expansion reconstructs SH_n", _upto)
def _naive_v(n: int, b: Bounds) -> Outcome:
    f = sf.combine_v(sf.naive_v_expansion(n), n)
    return f == sf.sh_symfunc(n), "", _first_diff(f, sf.sh_symfunc(n)) or None


@check("identities", "odd Kreweras ratio", _upto)
def _okrew_ratio(n: int, b: Bounds) -> Outcome:
    bad = [lam for lam in core.partitions_of(n, "odd") if not core.okrew_ratio_check(lam)]
    return not bad, "", [list(x) for x in bad] or None


def _random_symfunc(rng: random.Random, n: int) -> sf.SymFunc:
    return sf.SymFunc(
        n,
        {
            lam: Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            for lam in core.partitions_of(n)
            if rng.random() < 0.7
        },
    )


@check("identities", "shiftification is self-adjoint (200 random pairs)", lambda b: [min(b.max_n, 6)])
def _self_adjoint(n: int, b: Bounds) -> Outcome:
    rng = random.Random(b.seed)
    for _ in range(200):
        d = rng.randint(0, n)
        f, g = _random_symfunc(rng, d), _random_symfunc(rng, d)
        if sf.hall_inner(sf.shift(f), g) != sf.hall_inner(f, sf.shift(g)):
            return False, f"degree {d}", {"f": repr(f), "g": repr(g)}
    return True, "", None


@check("identities", "Kronecker with 2P_n is shiftification on h_lambda", lambda b: range(1, min(b.max_n, 7) + 1))
def _kron_shift(n: int, b: Bounds) -> Outcome:
    two_p = sf.scale(2, sf.big_p(n))
    for lam in core.partitions_of(n):
        f = sf.h_prod(lam)
        if sf.kronecker(f, two_p) != sf.shift(f):
            return False, f"h_{list(lam)}", list(lam)
    return True, "", None


@check("identities", "sum of V over sorted odd objects is SH_n", _upto)
def _odd_sum(n: int, b: Bounds) -> Outcome:
    shapes = Counter(parking.shape(y.p) for y in shifted.enumerate_sorted_odd(n))
    f = sf.combine_v(shapes, n)
    return f == sf.sh_symfunc(n), "", _first_diff(f, sf.sh_symfunc(n)) or None


@check("identities", "sum of R over garages is SH_n", _upto)
def _garage_sum(n: int, b: Bounds) -> Outcome:
    shapes = Counter(parking.shape(g.p) for g in shifted.enumerate_garages(n))
    f = sf.sum_of((sf.scale(c, sf.r_func(lam)) for lam, c in shapes.items()), n)
    return f == sf.sh_symfunc(n), "", _first_diff(f, sf.sh_symfunc(n)) or None


@check("identities", "t-graded naive and odd sums agree", _upto)
def _t_graded(n: int, b: Bounds) -> Outcome:
    naive, odd = sf.t_graded(n)
    if naive == odd:
        return True, "", None
    for lam in list(naive.coeffs) + list(odd.coeffs):
        a = naive.coeffs.get(lam, sf.TPoly())
        c = odd.coeffs.get(lam, sf.TPoly())
        if a != c:
            return False, f"coefficient of p_{list(lam)} differs", {
                "partition": list(lam),
                "naive": [fmt_q(x) for x in a.coeffs],
                "odd": [fmt_q(x) for x in c.coeffs],
            }
    return False, "", None


@check("identities", "t-graded sums specialize to SH_n at t=1", _upto)
def _t_one(n: int, b: Bounds) -> Outcome:
    naive, odd = sf.t_graded(n)
    return naive.evaluate(1) == sf.sh_symfunc(n) == odd.evaluate(1), "", None


@check("identities", "t-graded pairings with h_n agree", _upto)
def _t_pairing(n: int, b: Bounds) -> Outcome:
    naive, odd = sf.t_graded(n)
    return sf.t_graded_h_pairing(naive) == sf.t_graded_h_pairing(odd), "", None


@check("identities", "dimension audit", _upto)
def _dimension(n: int, b: Bounds) -> Outcome:
    ones = (1,) * n
    total = sum(
        core.okrew(lam) * factorial(n) * sf.v_func(lam)[ones] for lam in core.partitions_of(n, "odd")
    )
    want = 2**n * (n + 1) ** (n - 1)
    return total == want, f"{total} vs {want}", None


# ---- combinatorics ------------------------------------------------------

@check("combinatorics", "enumeration counts", _upto)
def _counts(n: int, b: Bounds) -> Outcome:
    got = {
        "sorted-pf": sum(1 for _ in parking.enumerate_sorted_pf(n)),
        "sorted-naive": sum(1 for _ in parking.enumerate_sorted_naive(n)),
        "sorted-odd": sum(1 for _ in shifted.enumerate_sorted_odd(n)),
        "krew-sum": sum(core.krew(lam) for lam in core.partitions_of(n)),
    }
    want = {
        "sorted-pf": core.catalan(n),
        "sorted-naive": core.schroeder(n),
        "sorted-odd": core.schroeder(n),
        "krew-sum": core.catalan(n),
    }
    if n <= 6:
        got["pf"] = sum(1 for _ in parking.enumerate_pf(n))
        want["pf"] = (n + 1) ** (n - 1)
    return got == want, "", None if got == want else {"got": got, "want": want}


@check("combinatorics", "Schroeder path bijection", _upto)
def _schroeder(n: int, b: Bounds) -> Outcome:
    images = [parking.to_schroeder_path(x) for x in parking.enumerate_sorted_naive(n)]
    ok = sorted(images) == sorted(parking.enumerate_schroeder_paths(n)) and len(set(images)) == len(images)
    return ok, f"{len(images)} paths", None


@check("combinatorics", "naive/odd bijection is area preserving", _upto)
def _bijection(n: int, b: Bounds) -> Outcome:
    naive = list(parking.enumerate_sorted_naive(n))
    odd = set(shifted.enumerate_sorted_odd(n))
    images = set()
    for x in naive:
        y = shifted.naive_to_odd(x)
        if y not in odd or shifted.odd_to_naive(y) != x or shifted.area_o(y) != parking.area(x.p):
            return False, "", naive_to_json(x)
        images.add(y)
    ok = images == odd and all(shifted.naive_to_odd(shifted.odd_to_naive(y)) == y for y in odd)
    return ok, "", None


@check("combinatorics", "garage predicates agree", _upto)
def _garage_preds(n: int, b: Bounds) -> Outcome:
    for x in parking.enumerate_sorted_naive(n):
        if not (shifted.is_garage(x) == shifted.is_garage_by_word(x) == shifted.is_garage_by_steps(x)):
            return False, "", naive_to_json(x)
    return True, "", None


@check("combinatorics", "garage classes partition sorted naive objects", _upto)
def _garage_partition(n: int, b: Bounds) -> Outcome:
    seen: list[parking.SortedNaiveShifted] = []
    for g in shifted.enumerate_garages(n):
        cls = shifted.garage_class(g)
        if any(shifted.garage_of(x) != g for x in cls):
            return False, "", naive_to_json(g)
        seen.extend(cls)
    everything = list(parking.enumerate_sorted_naive(n))
    ok = len(seen) == len(set(seen)) and set(seen) == set(everything)
    return ok, "", None


@check("combinatorics", "odd fibers partition sorted odd objects", _upto)
def _odd_partition(n: int, b: Bounds) -> Outcome:
    seen = []
    for g in shifted.enumerate_garages(n):
        fiber = shifted.odd_class(g)
        if any(shifted.phi_o(y) != g for y in fiber):
            return False, "", naive_to_json(g)
        seen.extend(fiber)
    odd = list(shifted.enumerate_sorted_odd(n))
    return len(seen) == len(set(seen)) and set(seen) == set(odd), "", None


@check("combinatorics", "path pigeonhole bound", _upto)
def _pigeonhole(n: int, b: Bounds) -> Outcome:
    for x in parking.enumerate_sorted_naive(n):
        ups = shifted.upsilon(x)
        for i, k in shifted.path_matching(shifted.matching_path(x)):
            if sum(ups[i - 1 : k - 1]) < k - i:
                return False, f"arc {(i, k)}", naive_to_json(x)
    return True, "", None


@check("combinatorics", "fiber V sums equal R of the garage", _upto)
def _fiber_bookkeeping(n: int, b: Bounds) -> Outcome:
    for g in shifted.enumerate_garages(n):
        target = sf.r_func(parking.shape(g.p))
        naive = sf.sum_of((sf.v_func(parking.shape(x.p)) for x in shifted.garage_class(g)), n)
        odd = sf.sum_of((sf.v_func(parking.shape(y.p)) for y in shifted.odd_class(g)), n)
        if not naive == target == odd:
            return False, "", naive_to_json(g)
    return True, "", None


@check("combinatorics", "sorted odd enumeration equals sort image of all triples", _brute)
def _odd_sort_image(n: int, b: Bounds) -> Outcome:
    from itertools import product

    image = set()
    for p in parking.enumerate_pf(n):
        if not core.is_odd(parking.shape(p)):
            continue
        values = sorted(set(p))
        for tau in shifted.noncrossing_matchings(values):
            for sigma in product((1, -1), repeat=n):
                if shifted.is_odd_shifted(p, sigma, tau):
                    image.add(shifted.OddShifted(p, sigma, tau).sort())
    direct = set(shifted.enumerate_sorted_odd(n))
    return image == direct, f"{len(direct)} objects", None


# ---- characters ---------------------------------------------------------

@check("characters", "parking character: cycle reduction matches full scan", _brute)
def _pf_scan(n: int, b: Bounds) -> Outcome:
    return ch.pf_character(n) == ch.pf_character_by_scan(n), "", None


@check("characters", "Frobenius image of the parking character is PF_n", _upto)
def _pf_frob(n: int, b: Bounds) -> Outcome:
    return ch.frobenius(ch.pf_character(n)) == sf.pf_symfunc(n), "", None


@check("characters", "exterior algebra character is 2P_n, halves P_n", _upto)
def _exterior(n: int, b: Bounds) -> Outcome:
    full = ch.frobenius(ch.exterior_character_by_subsets(n))
    even = ch.frobenius(ch.exterior_character_by_subsets(n, 0))
    odd = ch.frobenius(ch.exterior_character_by_subsets(n, 1))
    ok = (
        ch.exterior_character_by_subsets(n) == ch.exterior_character(n)
        and full == sf.scale(2, sf.big_p(n))
        and even == odd == sf.big_p(n)
    )
    return ok, "", None


@check("characters", "Frobenius image of the naive character is SH_n", _upto)
def _naive_frob(n: int, b: Bounds) -> Outcome:
    f = ch.frobenius(ch.naive_character(n))
    return f == sf.sh_symfunc(n), "", _first_diff(f, sf.sh_symfunc(n)) or None


@check("characters", "naive character matches the signed trace oracle", _brute)
def _naive_oracle(n: int, b: Bounds) -> Outcome:
    return ch.naive_character_by_oracle(n) == ch.naive_character(n), "", None


@check("characters", "class and fiber characters are V and R functions", _brute)
def _class_chars(n: int, b: Bounds) -> Outcome:
    rep = ch.verify_class_characters(n)
    return rep.ok, f"{rep.checked} modules", rep.failures[:3] or None


@check("characters", "Kronecker with 2P_n is shiftification on characters", lambda b: range(1, min(b.max_n, 7) + 1))
def _kron_chars(n: int, b: Bounds) -> Outcome:
    two_p = sf.scale(2, sf.big_p(n))
    for chi in (ch.pf_character(n), ch.trivial_character(n), ch.sign_character(n)):
        f = ch.frobenius(chi)
        if sf.kronecker(f, two_p) != sf.shift(f):
            return False, "", None
    return True, "", None


# ---- clifford -----------------------------------------------------------

@check("clifford", "trace of positive representatives and ch'(C_n)", _upto)
def _clifford(n: int, b: Bounds) -> Outcome:
    rep = cl.verify_clifford_spin(n)
    return rep.ok, "", rep.failures or None


@check("clifford", "double cover relations with z = -1", _upto)
def _relations(n: int, b: Bounds) -> Outcome:
    minus_one = cl.CliffordElement.scalar(n, -1)
    gens = [cl.embed_generator(i, n) for i in range(1, n)]
    for i, s in enumerate(gens, start=1):
        if s * s != minus_one:
            return False, f"s_{i}^2", None
        for j, t in enumerate(gens, start=1):
            if abs(i - j) >= 2 and s * t != -(t * s):
                return False, f"s_{i} s_{j}", None
            # (s_i s_{i+1})^3 = z, i.e. the braid relation holds with no sign
            if j == i + 1 and (s * t * s != t * s * t or s * t * s * t * s * t != minus_one):
                return False, f"braid {i}", None
    return True, "", None


@check("clifford", "spin character of Pf (x) C_n is 2^(n/2) SH_n", _upto)
def _spin_naive(n: int, b: Bounds) -> Outcome:
    return ch.spin_naive_matches(n), "", None


# ---- driver -------------------------------------------------------------

def _run_one(task: tuple[str, int, Bounds]) -> CheckResult:
    claim, n, bounds = task
    suite, fn, _ = _CHECKS[claim]
    try:
        ok, detail, cex = fn(n, bounds)
    except Exception as exc:  # report, never crash the suite
        ok, detail, cex = False, f"error: {type(exc).__name__}: {exc}", None
    return CheckResult(suite, claim, n, bool(ok), detail, None if ok else cex)


def plan(suite: str, bounds: Bounds) -> list[tuple[str, int, Bounds]]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    tasks = []
    for claim, (s, _, ns) in _CHECKS.items():
        if suite in ("all", s):
            tasks.extend((claim, n, bounds) for n in ns(bounds))
    return tasks


def run_suite(suite: str, bounds: Bounds, jobs: int = 1) -> list[CheckResult]:
    """Results come back in plan order whatever the worker count."""
    tasks = plan(suite, bounds)
    if jobs <= 1:
        return [_run_one(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, tasks))


def results_to_json(results: list[CheckResult]) -> list[dict[str, Any]]:
    return [asdict(r) for r in results]
