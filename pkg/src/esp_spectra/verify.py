"""Independent oracles and randomized exact verification suites.

Every suite returns a :class:`Report`. Sampling is reproducible: trial ``i``
draws from ``numpy.random.default_rng([seed, i])`` (PCG64 seeded through a
``SeedSequence``), so trials can run in any order or in worker processes and
the merged report is the same.
"""

from __future__ import annotations

import json
import os
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial

import numpy as np

from .errors import DegreeError, GuardExceeded, NotHyperbolicError, PoleError
from .graph import (Graph, LabeledGraph, Vertex, assign_weights, build_G, numeric_reduced_laplacian,
                    reduced_laplacian, spanning_tree_polynomial, weighted_laplacian)
from .linalg import det_exact, det_polynomial
from .pencil import (LinearFormsSystem, Verdict, build_esp_pencil, derivative_cone_pencil,
                     hkk_product, hkk_product_polynomial, membership, pencil_eval,
                     pencil_polynomial_matrix)
from .poly import (Polynomial, _as_fraction, directional_derivative, elem_sym, elem_sym_values,
                   partial_derivative, restrict_univariate)

IDENTITY_MIN_RANGE = 10**6
RNG_NAME = "numpy.PCG64"
THREADS_ENV = "ESP_SPECTRA_THREADS"
MAX_LISTED_FAILURES = 20


@dataclass(frozen=True)
class TrialConfig:
    seed: int = 0
    trials: int = 50
    coordinate_range: int = IDENTITY_MIN_RANGE

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.coordinate_range < 1:
            raise ValueError("coordinate range must be positive")

    def rng(self, trial: int) -> np.random.Generator:
        return np.random.default_rng([self.seed & (2**64 - 1), trial])

    def integer_point(self, rng: np.random.Generator, n: int, low: int | None = None) -> list[Fraction]:
        lo = -self.coordinate_range if low is None else low
        return [Fraction(int(v)) for v in rng.integers(lo, self.coordinate_range, size=n, endpoint=True)]

    def as_dict(self) -> dict:
        return {"seed": self.seed, "trials": self.trials,
                "coordinate_range": self.coordinate_range, "rng": RNG_NAME}


def _require_identity_range(cfg: TrialConfig) -> None:
    if cfg.coordinate_range < IDENTITY_MIN_RANGE:
        raise ValueError(
            f"identity testing needs coordinate_range >= {IDENTITY_MIN_RANGE}, got {cfg.coordinate_range}")


def _fmt(v) -> str:
    return str(v) if not isinstance(v, (list, tuple)) else "(" + ", ".join(map(str, v)) + ")"


@dataclass
class Report:
    """Outcome of one verification suite; ``to_json`` output is deterministic."""

    suite: str
    params: dict
    config: dict | None = None
    checked: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)
    constants: dict[str, Fraction] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    inconclusive: bool = False
    guard_skipped: bool = False

    @property
    def passed(self) -> bool:
        if self.guard_skipped:
            return not self.failures
        return not self.failures and not self.inconclusive and self.checked > 0

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "config": self.config,
            "passed": self.passed,
            "checked": self.checked,
            "skipped": self.skipped,
            "inconclusive": self.inconclusive,
            "guard_skipped": self.guard_skipped,
            "constants": {k: str(v) for k, v in self.constants.items()},
            "failures": self.failures[:MAX_LISTED_FAILURES],
            "failure_count": len(self.failures),
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"suite {self.suite}: {params}"]
        if self.config:
            lines.append("  config: " + " ".join(f"{k}={v}" for k, v in self.config.items()))
        lines.append(f"  checked={self.checked} skipped={self.skipped}")
        for name, value in self.constants.items():
            lines.append(f"  {name} = {value}")
        lines.extend(f"  note: {n}" for n in self.notes)
        lines.extend(f"  FAIL: {f}" for f in self.failures[:MAX_LISTED_FAILURES])
        if len(self.failures) > MAX_LISTED_FAILURES:
            lines.append(f"  ... {len(self.failures) - MAX_LISTED_FAILURES} more failures")
        if self.guard_skipped:
            status = "SKIPPED"
        elif self.inconclusive:
            status = "INCONCLUSIVE"
        else:
            status = "PASS" if self.passed else "FAIL"
        lines.append(f"  result: {status}")
        return "\n".join(lines)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _map_trials(fn: Callable, items: Sequence) -> list:
    workers = min(_workers(), len(items))
    if workers <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


# ---------------------------------------------------------------------------
# gamma products


@dataclass(frozen=True)
class GammaValue:
    k: int
    r: int
    point: tuple[Fraction, ...]
    value: Fraction


def gamma_value(n: int, k: int, r: int, point: Sequence) -> GammaValue:
    """``prod_{|S| = k} e_{r-k}([n] - S)(x) ** k!`` at a point."""
    if not 0 <= k <= r <= n:
        raise DegreeError(f"need 0 <= k <= r <= n, got k={k}, r={r}, n={n}")
    x = tuple(_as_fraction(v) for v in point)
    value = Fraction(1)
    for s in combinations(range(n), k):
        rest = [x[i] for i in range(n) if i not in s]
        value *= elem_sym_values(rest, r - k)[r - k] ** factorial(k)
    return GammaValue(k, r, x, value)


def gamma_polynomial(n: int, k: int, r: int) -> Polynomial:
    if not 0 <= k <= r <= n:
        raise DegreeError(f"need 0 <= k <= r <= n, got k={k}, r={r}, n={n}")
    out = Polynomial.constant(n, 1)
    full = set(range(1, n + 1))
    for s in combinations(sorted(full), k):
        out = out * elem_sym(n, full - set(s), r - k) ** factorial(k)
    return out


# ---------------------------------------------------------------------------
# membership oracles


def oracle_membership_esp(n: int, k: int, point: Sequence) -> Verdict:
    """Decide ``x`` in the hyperbolicity cone of ``e_{k+1}`` from the signs of ``e_1..e_{k+1}``."""
    if not 1 <= k <= n - 1:
        raise DegreeError(f"k out of range: need 1 <= k <= n-1, got n={n}, k={k}")
    if len(point) != n:
        raise ValueError("point does not match n")
    values = elem_sym_values(point, k + 1)[1:]
    if any(v < 0 for v in values):
        return Verdict.OUTSIDE
    return Verdict.INTERIOR if all(v > 0 for v in values) else Verdict.BOUNDARY


def root_oracle_membership(h: Polynomial, e: Sequence, point: Sequence) -> Verdict:
    """Decide membership from the roots of ``t -> h(x + t e)``: all must be nonpositive.

    Raises ``NotHyperbolicError`` when the restriction has non-real roots
    or drops degree (``h(e) = 0``).
    """
    f = restrict_univariate(h, point, e)
    if f.degree != h.degree:
        raise NotHyperbolicError("h(e) vanishes; e is not a hyperbolicity direction")
    if not f.is_real_rooted():
        raise NotHyperbolicError(f"restriction of h through {_fmt([str(v) for v in point])} is not real-rooted")
    boundary = f(0) == 0
    if boundary:
        # strip the factor t so that 0 is not a root of what remains
        coeffs = list(f.coefficients)
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
        f = type(f)(coeffs)
    if f.degree >= 1 and f.count_roots(Fraction(0), None) > 0:
        return Verdict.OUTSIDE
    return Verdict.BOUNDARY if boundary else Verdict.INTERIOR


# ---------------------------------------------------------------------------
# matrix-tree theorem


def verify_matrix_tree(g: Graph) -> Report:
    """Compare brute-force ``T_G`` with ``det`` of every reduced Laplacian, symbolically."""
    params = {"vertices": g.num_vertices, "edges": g.num_edges}
    if isinstance(g, LabeledGraph):
        params = {"n": g.n, "k": g.k, **params}
    report = Report("matrix-tree", params)
    tree_poly = spanning_tree_polynomial(g)
    lap = weighted_laplacian(g)
    report.notes.append(f"spanning trees: {len(tree_poly)}")
    for v in g.vertices:
        reduced = reduced_laplacian(lap, v)
        det = det_polynomial(reduced.polynomial_matrix()) if reduced.size else Polynomial.constant(g.num_edges, 1)
        report.checked += 1
        if det != tree_poly:
            report.fail(f"det of Laplacian with vertex {v} deleted differs from T_G")
    return report


# ---------------------------------------------------------------------------
# H_{k,r} and the step recursion


def hkr_value(n: int, k: int, r: int, point: Sequence) -> Fraction:
    """``H_{k,r}(x)``: determinant of the reduced weighted Laplacian of ``G_{n,k}`` at ``x``.

    Raises ``PoleError`` when some edge weight has a vanishing denominator.
    """
    g = _graph(n, k)
    values = _weights(n, k, r).values(point)
    return det_exact(numeric_reduced_laplacian(g, values, Vertex.sink()))


_GRAPHS: dict = {}
_WEIGHTS: dict = {}


def _graph(n: int, k: int) -> LabeledGraph:
    if (n, k) not in _GRAPHS:
        _GRAPHS[(n, k)] = build_G(n, k)
    return _GRAPHS[(n, k)]


def _weights(n: int, k: int, r: int):
    if (n, k, r) not in _WEIGHTS:
        _WEIGHTS[(n, k, r)] = assign_weights(_graph(n, k), r)
    return _WEIGHTS[(n, k, r)]


def _step_trial(args) -> tuple[str, object]:
    n, k, r, cfg, trial = args
    x = cfg.integer_point(cfg.rng(trial), n)
    try:
        h_k = hkr_value(n, k, r, x)
        h_prev = hkr_value(n, k - 1, r, x)
    except PoleError:
        return "skip", None
    g_prev = gamma_value(n, k - 1, r, x).value
    g_k = gamma_value(n, k, r, x).value
    if not h_prev or not g_prev or not g_k:
        return "skip", None
    ratio = h_k * g_k / (h_prev * g_prev ** (n - k + 1))
    base = None
    if k == 1:
        e = elem_sym_values(x, r + 1)
        if e[r] and e[r + 1]:
            base = h_prev / (e[r + 1] / e[r])
    return "ok", (ratio, base, x)


def verify_step_recursion(n: int, k: int, r: int, cfg: TrialConfig) -> Report:
    """Check that ``H_{k,r} / (H_{k-1,r} gamma_{k-1,r}^{n-k+1} / gamma_{k,r})`` is one positive constant.

    When ``k = 1`` the base case ``H_{0,r} = (r+1)! e_{r+1} / e_r`` is also checked exactly.
    """
    if not 1 <= k <= r <= n - 1:
        raise DegreeError(f"need 1 <= k <= r <= n-1, got n={n}, k={k}, r={r}")
    _require_identity_range(cfg)
    report = Report("step", {"n": n, "k": k, "r": r}, cfg.as_dict())
    results = _map_trials(_step_trial, [(n, k, r, cfg, t) for t in range(cfg.trials)])
    constant = None
    expected_base = Fraction(factorial(r + 1))
    for trial, (status, payload) in enumerate(results):
        if status == "skip":
            report.skipped += 1
            continue
        ratio, base, x = payload
        report.checked += 1
        if constant is None:
            constant = ratio
            if ratio <= 0:
                report.fail(f"trial {trial}: ratio {ratio} is not positive")
        elif ratio != constant:
            report.fail(f"trial {trial}: ratio {ratio} differs from {constant} at {_fmt(x)}")
        if base is not None and base != expected_base:
            report.fail(f"trial {trial}: H_0,{r} / (e_{r + 1}/e_{r}) = {base}, expected {expected_base}")
    if constant is None:
        report.inconclusive = True
        report.notes.append("every sample was a pole")
    else:
        report.constants[f"C_{k},{r}"] = constant
        if k == 1:
            report.constants[f"C_0,{r}"] = expected_base
    return report


# ---------------------------------------------------------------------------
# H_{k,k} closed form


def _hkk_trial(args) -> tuple[Fraction, Fraction, list]:
    n, k, cfg, trial = args
    x = cfg.integer_point(cfg.rng(trial), n)
    P = build_esp_pencil(n, k)
    return det_exact(pencil_eval(P, x)), hkk_product(n, k, x), x


def verify_hkk_identity(n: int, k: int, cfg: TrialConfig, symbolic: bool | None = None) -> Report:
    """``det(sum x_j B_j) = C_k * e_{k+1} * prod (d^S e_k)^(|S|!(n-|S|-1))`` at random points.

    ``C_k`` is inferred from the first sample with a nonzero right-hand side
    and must match every other sample and the all-ones value stored in the
    pencil. For ``n <= 3`` (or when ``symbolic`` is forced) the identity is
    also checked coefficient by coefficient.
    """
    if not 1 <= k <= n - 1:
        raise DegreeError(f"k out of range: need 1 <= k <= n-1, got n={n}, k={k}")
    _require_identity_range(cfg)
    P = build_esp_pencil(n, k)
    report = Report("hkk", {"n": n, "k": k, "m": P.m}, cfg.as_dict())
    constant = None
    for trial, (det, rhs, x) in enumerate(_map_trials(_hkk_trial, [(n, k, cfg, t) for t in range(cfg.trials)])):
        report.checked += 1
        if not rhs:
            if det:
                report.fail(f"trial {trial}: right side vanishes but det = {det}")
            continue
        ratio = det / rhs
        if constant is None:
            constant = ratio
        elif ratio != constant:
            report.fail(f"trial {trial}: det / rhs = {ratio}, expected {constant} at {_fmt(x)}")
    if constant is None:
        report.inconclusive = True
        return report
    if constant <= 0:
        report.fail(f"inferred constant {constant} is not positive")
    if constant != P.constant:
        report.fail(f"sampled constant {constant} differs from all-ones constant {P.constant}")
    report.constants["C_k"] = constant
    if symbolic if symbolic is not None else n <= 3:
        det_poly = det_polynomial(pencil_polynomial_matrix(P))
        report.checked += 1
        if det_poly != hkk_product_polynomial(n, k) * constant:
            report.fail("symbolic determinant differs from C_k times the closed form")
        else:
            report.notes.append("symbolic identity verified coefficient by coefficient")
    return report


# ---------------------------------------------------------------------------
# sampling points around the cone of e_{k+1}


def _solve_for_zero(values: list[Fraction], index: int, j: int) -> list[Fraction] | None:
    """Replace coordinate ``index`` so that ``e_j`` of the vector is exactly zero (``e_j`` is affine in it)."""
    rest = values[:index] + values[index + 1:]
    e = elem_sym_values(rest, j)
    if not e[j - 1]:
        return None
    out = list(values)
    out[index] = -e[j] / e[j - 1]
    return out


def sample_cone_points(n: int, k: int, cfg: TrialConfig, trial: int) -> tuple[str, list[Fraction]]:
    """One sample for the cone suites, cycling through five constructions.

    ``box``: integer point; ``above``/``below``: integer point shifted along
    the all-ones direction to just past / just short of the boundary of the
    cone of ``e_{k+1}``; ``boundary``: positive point with one coordinate
    solved so that ``e_{k+1}`` vanishes exactly (a boundary point);
    ``zero``: random point with one coordinate solved so that some ``e_j``,
    ``j <= k+1``, vanishes exactly.
    """
    rng = cfg.rng(trial)
    kind = ("box", "above", "below", "boundary", "zero")[trial % 5]
    h = elem_sym(n, range(1, n + 1), k + 1)
    ones = [1] * n
    if kind in ("above", "below"):
        y = cfg.integer_point(rng, n)
        width = Fraction(1, 2 ** int(rng.integers(4, 24)))
        bracket = restrict_univariate(h, y, ones).largest_root_bracket(width)
        shift = bracket[1] if kind == "above" else bracket[0]
        return kind, [v + shift for v in y]
    if kind == "boundary":
        y = cfg.integer_point(rng, n, low=1)
        index = int(rng.integers(0, n))
        return kind, _solve_for_zero(y, index, k + 1)
    if kind == "zero":
        y = cfg.integer_point(rng, n)
        j = int(rng.integers(1, k + 2))
        solved = _solve_for_zero(y, int(rng.integers(0, n)), j)
        if solved is not None:
            return kind, solved
    return "box", cfg.integer_point(rng, n)


def special_points(n: int) -> list[tuple[str, list[Fraction]]]:
    one = Fraction(1)
    pts = [("ones", [one] * n), ("minus-ones", [-one] * n), ("origin", [Fraction(0)] * n)]
    for i in range(n):
        pts.append((f"delta{i + 1}", [one if j == i else Fraction(0) for j in range(n)]))
    return pts


def _cone_trial(args):
    n, k, cfg, trial = args
    kind, x = sample_cone_points(n, k, cfg, trial)
    return _three_verdicts(n, k, kind, x)


def _three_verdicts(n: int, k: int, kind: str, x: list[Fraction]):
    P = build_esp_pencil(n, k)
    h = elem_sym(n, range(1, n + 1), k + 1)
    return (kind, x, membership(P, x), oracle_membership_esp(n, k, x),
            root_oracle_membership(h, [1] * n, x))


def verify_cone_equivalence(n: int, k: int, cfg: TrialConfig) -> Report:
    """Pencil PSD test, ``e_j``-sign oracle and Sturm root oracle must agree everywhere sampled."""
    if not 1 <= k <= n - 1:
        raise DegreeError(f"k out of range: need 1 <= k <= n-1, got n={n}, k={k}")
    report = Report("cone", {"n": n, "k": k}, cfg.as_dict())
    outcomes = [_three_verdicts(n, k, kind, x) for kind, x in special_points(n)]
    outcomes += _map_trials(_cone_trial, [(n, k, cfg, t) for t in range(cfg.trials)])
    tally: dict[str, int] = {}
    for kind, x, pencil_v, sign_v, root_v in outcomes:
        report.checked += 1
        tally[pencil_v.value] = tally.get(pencil_v.value, 0) + 1
        if not pencil_v == sign_v == root_v:
            report.fail(f"{kind} point {_fmt(x)}: pencil={pencil_v.value} "
                        f"signs={sign_v.value} roots={root_v.value}")
        if kind == "boundary" and sign_v is not Verdict.BOUNDARY:
            report.fail(f"constructed boundary point {_fmt(x)} classified {sign_v.value}")
    report.notes.append("verdicts: " + ", ".join(f"{k}={v}" for k, v in sorted(tally.items())))
    return report


# ---------------------------------------------------------------------------
# factor cones


def _member_sample(n: int, k: int, cfg: TrialConfig, trial: int) -> list[Fraction] | None:
    # only the constructions that always land in the cone
    kind, x = sample_cone_points(n, k, cfg, 5 * (trial // 2) + (1 if trial % 2 == 0 else 3))
    return x


def _inclusion_trial(args):
    n, k, cfg, trial, factors = args
    x = _member_sample(n, k, cfg, trial)
    ones = [1] * n
    bad = []
    for subset, poly in factors:
        if not root_oracle_membership(poly, ones, x).is_member:
            bad.append(subset)
    return x, oracle_membership_esp(n, k, x), bad


def factor_polynomials(n: int, k: int) -> list[tuple[tuple[int, ...], Polynomial]]:
    """``(S, d^S e_k)`` for every ``S`` with ``|S| <= k-1``."""
    ek = elem_sym(n, range(1, n + 1), k)
    return [(s, partial_derivative(ek, s))
            for size in range(k) for s in combinations(range(1, n + 1), size)]


def verify_factor_cone_inclusion(n: int, k: int, cfg: TrialConfig) -> Report:
    """Sampled members of the cone of ``e_{k+1}`` must lie in the cone of every ``d^S e_k``, ``|S| <= k-1``."""
    if not 1 <= k <= n - 1:
        raise DegreeError(f"k out of range: need 1 <= k <= n-1, got n={n}, k={k}")
    report = Report("inclusion", {"n": n, "k": k}, cfg.as_dict())
    factors = factor_polynomials(n, k)
    ones = [Fraction(1)] * n
    items = [(n, k, cfg, t, factors) for t in range(cfg.trials)]
    outcomes = [(ones, oracle_membership_esp(n, k, ones),
                 [s for s, p in factors if not root_oracle_membership(p, [1] * n, ones).is_member])]
    outcomes += _map_trials(_inclusion_trial, items)
    for x, verdict, bad in outcomes:
        if not verdict.is_member:
            report.fail(f"sampler produced non-member {_fmt(x)}")
            continue
        report.checked += 1
        for s in bad:
            report.fail(f"member {_fmt(x)} outside the cone of d^S e_{k} for S={set(s) or '{}'}")
    report.notes.append(f"factor cones per point: {len(factors)}")
    return report


# ---------------------------------------------------------------------------
# derivative cones of polyhedral cones


def derivative_polynomial(F: LinearFormsSystem, kderiv: int) -> Polynomial:
    """``D_e^kderiv (l_1 ... l_d)`` by repeated directional differentiation."""
    h = F.product_polynomial()
    for _ in range(kderiv):
        h = directional_derivative(h, F.base_point)
    return h


def random_forms_system(rng: np.random.Generator, d: int, n: int, bound: int = 4) -> LinearFormsSystem:
    """Random integer forms with a random integer base point at which none vanishes."""
    while True:
        rows = [[int(v) for v in rng.integers(-bound, bound, size=n, endpoint=True)] for _ in range(d)]
        e = [int(v) for v in rng.integers(-bound, bound, size=n, endpoint=True)]
        if all(sum(a * b for a, b in zip(row, e)) for row in rows):
            return LinearFormsSystem(tuple(map(tuple, rows)), tuple(e))


def _derivative_trial(args):
    F, kderiv, cfg, trial, h = args
    rng = cfg.rng(trial)
    x = cfg.integer_point(rng, F.n)
    if trial % 3:
        bracket = restrict_univariate(h, x, F.base_point).largest_root_bracket(
            Fraction(1, 2 ** int(rng.integers(4, 20))))
        if bracket is not None:
            shift = bracket[1] if trial % 3 == 1 else bracket[0]
            x = [v + shift * b for v, b in zip(x, F.base_point)]
    return x


def verify_derivative_cone(F: LinearFormsSystem, kderiv: int, cfg: TrialConfig) -> Report:
    """Derivative-cone pencil membership against the root oracle on ``D_e^kderiv h``."""
    report = Report("derivative-cone", {"d": F.d, "n": F.n, "kderiv": kderiv}, cfg.as_dict())
    P = derivative_cone_pencil(F, kderiv)
    h = derivative_polynomial(F, kderiv)
    at_e = membership(P, F.base_point)
    report.checked += 1
    if at_e is not Verdict.INTERIOR:
        report.fail(f"pencil at the base point is {at_e.value}, expected PD")
    points = [_derivative_trial((F, kderiv, cfg, t, h)) for t in range(cfg.trials)]
    for x in points:
        report.checked += 1
        pv = membership(P, x)
        rv = root_oracle_membership(h, F.base_point, x)
        if pv != rv:
            report.fail(f"point {_fmt(x)}: pencil={pv.value} roots={rv.value}")
    return report


# ---------------------------------------------------------------------------
# combined runner used by the CLI


def run_suite(suite: str, n: int, k: int, r: int | None, cfg: TrialConfig,
              cone_cfg: TrialConfig | None = None) -> list[Report]:
    """Run one named suite, or all of them, for ``(n, k)``.

    In ``all`` mode the matrix-tree suite is skipped with a note when
    ``G_{n,k}`` is beyond the brute-force edge guard; requesting it alone
    raises ``GuardExceeded`` instead.
    """
    cone_cfg = cone_cfg or cfg
    reports = []
    if suite in ("matrix-tree", "all"):
        g = build_G(n, k)
        try:
            reports.append(verify_matrix_tree(g))
        except GuardExceeded as exc:
            if suite != "all":
                raise
            skipped = Report("matrix-tree", {"n": n, "k": k, "edges": g.num_edges})
            skipped.notes.append(f"skipped: {exc}")
            skipped.guard_skipped = True
            reports.append(skipped)
    if suite in ("step", "all"):
        reports.append(verify_step_recursion(n, k, r if r is not None else k, cfg))
    if suite in ("hkk", "all"):
        reports.append(verify_hkk_identity(n, k, cfg))
    if suite in ("cone", "all"):
        reports.append(verify_cone_equivalence(n, k, cone_cfg))
    if suite in ("inclusion", "all"):
        reports.append(verify_factor_cone_inclusion(n, k, cone_cfg))
    if not reports:
        raise ValueError(f"unknown suite {suite!r}")
    return reports
