"""Named property suites: exhaustive or seeded sweeps with a per-case check.

Every suite is a pair of functions: one lists the cases for a parameter
set, the other checks a single case and returns ``None`` or a failure
message.  Cases are listed identically in every worker, and worker ``k``
of ``m`` keeps the cases whose index is ``k`` mod ``m``.  The resulting
reports merge associatively.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from itertools import product

from ..columns import (
    Column,
    all_columns,
    admissible_columns,
    contract,
    is_admissible,
    is_coadmissible,
    phi_inverse,
    phi_map,
    split,
    strict_factors_admissible,
)
from ..crystal import (
    Word,
    enumerate_component,
    epsilon,
    f_op,
    phi_coeff,
    replay,
    same_position,
    to_highest,
)
from ..errors import ComponentOverflow, InvalidInput
from ..insertion import p_symbol
from ..plactic import elementary_rewrites
from ..rs import count_rs_pairs, highest_weight_word, q_symbol, rs_inverse, rs_map
from ..sjdt import CornerPolicy, psi_two_column, rectify, rectify_all_orders, sjdt_slide
from ..tableaux import (
    SymplecticTableau,
    enumerate_skew_tableaux,
    enumerate_tableaux,
    highest_weight_tableau,
    inner_corners,
    is_kn_tableau,
    is_symplectic,
    random_skew_tableau,
    weight_from_shape,
)
from .reference import oracle_p_symbol, theta_map


@dataclass(frozen=True)
class Failure:
    suite: str
    index: int
    message: str
    counterexample: str
    original: str


@dataclass
class SuiteReport:
    name: str
    params: dict
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def merge(self, other):
        """Combine two reports of disjoint case sets."""
        failures = sorted(self.failures + other.failures, key=lambda f: (f.suite, f.index))
        return SuiteReport(self.name, self.params, self.cases + other.cases, failures)

    def to_dict(self):
        return {
            "suite": self.name,
            "params": self.params,
            "cases": self.cases,
            "failures": [f.__dict__ for f in self.failures],
            "ok": self.ok,
        }

    def summary(self):
        status = "PASS" if self.ok else "FAIL"
        lines = [f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures"]
        for f in self.failures[:10]:
            lines.append(f"  [{f.suite} #{f.index}] {f.message}: {f.counterexample}")
        return "\n".join(lines)


# -- case sources ------------------------------------------------------------


def _words(n, min_len, max_len):
    letters = tuple(range(1, n + 1)) + tuple(range(-n, 0))
    for length in range(min_len, max_len + 1):
        for w in product(letters, repeat=length):
            yield Word._raw(n, w)


def _all_column_cases(n):
    for h in range(2 * n + 1):
        yield from all_columns(n, h)


def _shapes(n, max_columns, max_size=None):
    """Shapes as weakly decreasing column heights in 1..n."""

    def grow(prefix, top):
        if prefix:
            yield tuple(prefix)
        if len(prefix) == max_columns:
            return
        for h in range(1, top + 1):
            if max_size is None or sum(prefix) + h <= max_size:
                yield from grow(prefix + [h], h)

    return list(grow([], n))


def _fits(n, outer, inner):
    # admissible columns are at most n cells tall
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    return all(o - i <= n for o, i in zip(outer, inner))


DEFAULT_SMALL_SHAPES = (
    ((2, 1), (1,)),
    ((2, 2), (1,)),
    ((3, 2), (1,)),
    ((3, 2), (2,)),
    ((2, 2, 1), (1, 1)),
    ((3, 2, 1), (1,)),
    ((3, 3), (2, 1)),
    ((3, 1, 1), (2,)),
    ((2, 2, 2), (1, 1)),
)

DEFAULT_LARGE_SHAPES = (
    ((4, 3, 2), (2, 1)),
    ((3, 3, 2, 1), (2, 1, 1)),
    ((5, 4, 2, 1), (3, 2, 1)),
    ((4, 4, 3), (3, 1)),
    ((5, 3, 3, 2), (2, 2, 1)),
    ((4, 4, 3, 2), (3, 2, 1)),
    ((5, 4, 4, 2, 1), (4, 2, 2)),
)


def _random_tableaux(n, shapes, samples, seed):
    rng = random.Random(seed)
    usable = [s for s in shapes if _fits(n, *s)]
    out = []
    for k in range(samples if usable else 0):
        outer, inner = usable[k % len(usable)]
        t = random_skew_tableau(n, outer, inner, rng)
        if t is not None:
            out.append(t)
    return out


# -- suites --------------------------------------------------------------------


def _crystal_cases(p):
    n = p["n"]
    source, target = (Word.parse(s, n) for s in p["words"])
    top = to_highest(target)[0]
    return [(v, top) for v in enumerate_component(source).vertices]


def _crystal_check(case, p):
    v, top = case
    _, path = to_highest(v)
    u = replay(top, path)
    if u is None or not same_position(v, u):
        return "no vertex in the same position"
    for i in range(1, v.n + 1):
        if (f_op(v, i) is None) != (f_op(u, i) is None):
            return f"f_{i} defined on only one side"
        if epsilon(v, i) != epsilon(u, i) or phi_coeff(v, i) != phi_coeff(u, i):
            return f"epsilon/phi differ for colour {i}"
    return None


def _columns_cases(p):
    return list(_all_column_cases(p["n"]))


def _columns_check(col, p):
    try:
        split(col)
        splittable = True
    except InvalidInput:
        splittable = False
    if is_admissible(col) != splittable:
        return "admissible and splittable disagree"
    if splittable:
        star = phi_map(col)
        if not is_coadmissible(star) or len(star) != len(col):
            return "Phi image is not a coadmissible column of the same height"
        if phi_inverse(star) != col:
            return "Phi^-1(Phi(C)) != C"
    elif strict_factors_admissible(col):
        small = contract(col)
        if not is_admissible(small) or len(small) != len(col) - 2:
            return "contraction is not an admissible column two cells shorter"
    if is_coadmissible(col) and phi_map(phi_inverse(col)) != col:
        return "Phi(Phi^-1(D)) != D"
    return None


def _word_cases(p):
    return list(_words(p["n"], p.get("min_len", 0), p["max_len"]))


def _pdiff_check(w, p):
    mine, ref = p_symbol(w), oracle_p_symbol(w)
    if mine != ref:
        return f"insertion gives {mine}, oracle gives {ref}"
    return None


def _plactic_check(w, p):
    n = w.n
    for step in elementary_rewrites(w):
        v = step.result
        tag = f"{step.rule} {step.direction} at {step.position}"
        if not same_position(w, v):
            return f"{tag} leaves the position"
        for i in range(1, n + 1):
            if epsilon(w, i) != epsilon(v, i) or phi_coeff(w, i) != phi_coeff(v, i):
                return f"{tag} changes epsilon/phi of colour {i}"
            fw, fv = f_op(w, i), f_op(v, i)
            if (fw is None) != (fv is None):
                return f"{tag} and f_{i} disagree on being defined"
            if fw is not None and not same_position(fw, fv):
                return f"{tag} does not commute with f_{i}"
    return None


def _rs_cases(p):
    cases = [("word", w) for w in _word_cases(p)]
    cases += [("count", length) for length in range(p["count_len"] + 1)]
    return cases


def _rs_check(case, p):
    kind, payload = case
    if kind == "count":
        n = p["n"]
        words, pairs = (2 * n) ** payload, count_rs_pairs(n, payload)
        return None if words == pairs else f"{words} words but {pairs} pairs"
    w = payload
    pair = rs_map(w)
    if rs_inverse(pair) != w:
        return "rs_inverse(rs_map(w)) != w"
    top = to_highest(w)[0]
    q = pair.q
    if q_symbol(top) != q:
        return "Q differs from Q of the highest weight vertex"
    if highest_weight_word(q, w.n) != top:
        return "Q does not determine the component"
    return None


def _confluence_cases(p):
    n = p["n"]
    out = []
    crowded = []
    for outer, inner in p["shapes"]:
        if not _fits(n, outer, inner):
            continue
        try:
            out.extend(enumerate_skew_tableaux(n, outer, inner, cap=p["cap"]))
        except ComponentOverflow:
            crowded.append((outer, inner))
    # shapes too large to enumerate are sampled along with the large shapes
    out.extend(_random_tableaux(n, crowded + list(p["large_shapes"]), p["samples"], p["seed"]))
    return out


def _confluence_check(t, p):
    expected = p_symbol(t.reading())
    if len(inner_corners(t)) <= p["max_corners"]:
        got = rectify_all_orders(t)
    else:
        got = {rectify(t), rectify(t, CornerPolicy(reverse=True))}
    if got != {expected}:
        return f"rectifications {sorted(map(str, got))} != P = {expected}"
    return None


def _slide_cases(p):
    return _random_tableaux(p["n"], p["shapes"], p["samples"], p["seed"])


def _slide_check(t, p):
    w = t.reading()
    for corner in inner_corners(t):
        if not same_position(w, sjdt_slide(t, corner).reading()):
            return f"slide into {corner} breaks congruence"
    return None


def _kn_cases(p):
    n = p["n"]
    cases = []
    for shape in _shapes(n, p["max_columns"]):
        for cols in product(*(all_columns(n, h) for h in shape)):
            cases.append(("filling", SymplecticTableau._unchecked(n, cols)))
    cases += [("shape", s) for s in _shapes(n, p["max_size"], p["max_size"])]
    return cases


def _kn_check(case, p):
    kind, payload = case
    if kind == "filling":
        if is_symplectic(payload) != is_kn_tableau(payload):
            return "split criterion and configuration criterion disagree"
        return None
    n = p["n"]
    top = highest_weight_tableau(weight_from_shape(payload, n))
    readings = {t.reading() for t in enumerate_tableaux(n, payload)}
    component = set(enumerate_component(top.reading()).vertices)
    if readings != component:
        return f"{len(readings)} readings vs {len(component)} vertices"
    return None


def _theta_cases(p):
    n = p["n"]
    return [Word._raw(n, c.cells) for h in range(n + 1) for c in admissible_columns(n, h)]


def _theta_check(w, p):
    image = theta_map(w)
    for i in range(1, w.n):
        fw = f_op(w, i)
        fi = f_op(image, i)
        if fw is None:
            if fi is not None:
                return f"f_{i} kills w but not Theta(w)"
        elif theta_map(fw) != fi:
            return f"Theta does not commute with f_{i}"
    return None


def _two_column_cases(p):
    n, m = p["n"], p["max_height"]
    cases = []
    for q in range(1, m + 1):
        for pp in range(1, q + 1):
            for k in range(1, pp + 1):
                for t in enumerate_skew_tableaux(n, (q, pp), (k,)):
                    cases.append((t.reading(), (q, pp, k)))
    return cases


def _two_column_check(case, p):
    w, (q, pp, k) = case
    image = psi_two_column(w, q, pp, k)
    for i in range(1, w.n + 1):
        fw = f_op(w, i)
        fi = f_op(image, i)
        if fw is None:
            if fi is not None:
                return f"f_{i} kills w but not Psi(w)"
        elif psi_two_column(fw, q, pp, k) != fi:
            return f"Psi does not commute with f_{i}"
    return None


SUITES = {
    "crystal-figures": (_crystal_cases, _crystal_check, {"n": 2, "words": ("1 2 1", "1 1 2")}),
    "columns": (_columns_cases, _columns_check, {"n": 3}),
    "p-differential": (_word_cases, _pdiff_check, {"n": 2, "max_len": 5, "min_len": 0}),
    "plactic": (_word_cases, _plactic_check, {"n": 2, "max_len": 4, "min_len": 0}),
    "rs": (_rs_cases, _rs_check, {"n": 2, "max_len": 4, "min_len": 0, "count_len": 4}),
    "confluence": (
        _confluence_cases,
        _confluence_check,
        {
            "n": 2,
            "shapes": DEFAULT_SMALL_SHAPES,
            "large_shapes": DEFAULT_LARGE_SHAPES,
            "samples": 20,
            "cap": 20_000,
            "max_corners": 3,
        },
    ),
    "slide": (_slide_cases, _slide_check, {"n": 3, "shapes": DEFAULT_SMALL_SHAPES, "samples": 200}),
    "kn": (_kn_cases, _kn_check, {"n": 2, "max_columns": 3, "max_size": 5}),
    "theta": (_theta_cases, _theta_check, {"n": 3}),
    "two-column": (_two_column_cases, _two_column_check, {"n": 3, "max_height": 3}),
}

# parameters that "all" forwards to a suite when the suite knows them
_SHARED = ("n", "max_len", "seed", "samples", "cap")


def suite_names():
    return sorted(SUITES)


def _shrink(value):
    """Smaller candidates: drop one letter, or lower the rank by one."""
    if isinstance(value, (Word, Column)):
        items = value.letters if isinstance(value, Word) else value.cells
        for k in range(len(items)):
            yield type(value)(value.n, items[:k] + items[k + 1 :])
        if value.n > 1 and all(abs(x) < value.n for x in items):
            yield type(value)(value.n - 1, items)


def _fails(check, case, p):
    try:
        return check(case, p)
    except Exception as exc:  # a crash on a case is a failure of that case
        return f"{type(exc).__name__}: {exc}"


def minimize(check, case, p):
    """Greedy shrink of a failing word or column while the failure persists."""
    current = case
    improved = True
    while improved:
        improved = False
        for smaller in _shrink(current):
            if _fails(check, smaller, dict(p, n=smaller.n)) is not None:
                current = smaller
                improved = True
                break
    return current


def _resolve(name, params):
    if name not in SUITES:
        raise InvalidInput(f"unknown suite {name!r}; choose from {', '.join(suite_names())}")
    _, _, defaults = SUITES[name]
    merged = dict(defaults)
    merged.setdefault("seed", 0)
    merged.update({k: v for k, v in params.items() if v is not None})
    return merged


def _run_shard(name, params, shard, workers):
    cases_fn, check, _ = SUITES[name]
    report = SuiteReport(name, params)
    for index, case in enumerate(cases_fn(params)):
        if index % workers != shard:
            continue
        report.cases += 1
        message = _fails(check, case, params)
        if message is None:
            continue
        small = minimize(check, case, params) if isinstance(case, (Word, Column)) else case
        report.failures.append(Failure(name, index, message, _describe(small), _describe(case)))
    return report


def _describe(case):
    if isinstance(case, tuple):
        return " ; ".join(_describe(c) for c in case)
    if isinstance(case, (Word, Column)):
        return f"[n={case.n}] {case}"
    return str(case)


def run_suite(name, workers=1, **params):
    """Run a named suite and return its :class:`SuiteReport`.

    ``"all"`` runs every suite, passing on the shared parameters each
    suite understands, and merges the reports.
    """
    if name == "all":
        reports = []
        for sub in suite_names():
            defaults = SUITES[sub][2]
            shared = {k: params[k] for k in _SHARED if k in params and (k in defaults or k == "seed")}
            reports.append(run_suite(sub, workers, **shared))
        merged = reduce(SuiteReport.merge, reports)
        return SuiteReport("all", dict(params), merged.cases, merged.failures)
    p = _resolve(name, params)
    if workers <= 1:
        return _run_shard(name, p, 0, 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_shard, [name] * workers, [p] * workers, range(workers), [workers] * workers))
    return reduce(SuiteReport.merge, parts)


__all__ = ["Failure", "SUITES", "SuiteReport", "minimize", "run_suite", "suite_names"]
