"""Structural verification sweeps over grids of weight pairs.

``run_sweep`` evaluates a battery of exact consistency checks — closed form
against brute force, gradings against classical tensor decompositions,
symmetries, dimension identities — for every pair of dominant weights with
coordinates up to a bound.  Failures are returned as data in a deterministic
report (the sweep never raises on a failed property), and pairs can be
distributed over worker processes.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .characters import tensor_decompose
from .closedform import direct_decomposition, fusion_dim, graded_character
from .fusion_oracle import fusion_graded_character, graded_decomposition_oracle
from .qseries import (
    decomposition_at_q1,
    involute_decomposition,
    qp_degree,
    qp_eval_one,
)
from .weights import Weight, dominant_weights_up_to, involute, size, weyl_dim

__all__ = ["CHECK_NAMES", "SweepConfig", "SweepReport", "run_sweep"]

#: All checks, in evaluation and report order.
CHECK_NAMES = (
    "dimension",
    "tensor",
    "leading",
    "grade_bound",
    "involution",
    "symmetry",
    "multiplicity_free",
    "direct",
    "oracle",
    "z_independence",
)


@dataclass(frozen=True)
class SweepConfig:
    """What to sweep and how hard.

    ``max_coord`` bounds both coordinates of both weights; ``checks`` selects
    and orders the battery; oracle-backed checks are skipped for pairs whose
    product dimension exceeds ``oracle_dim_bound``.  ``evaluation_params``
    lists the evaluation-point pairs: the first is used for the oracle
    comparison, all of them for the z-independence check.  ``jobs`` > 1
    spreads pairs over that many worker processes (same report either way).
    """

    max_coord: int = 2
    oracle_dim_bound: int = 100
    evaluation_params: tuple = ((0, 1), (2, 5))
    checks: tuple = CHECK_NAMES
    jobs: int = 1

    def json_safe(self) -> dict:
        return {
            "max_coord": self.max_coord,
            "oracle_dim_bound": self.oracle_dim_bound,
            "evaluation_params": [
                [str(Fraction(a)), str(Fraction(b))] for a, b in self.evaluation_params
            ],
            "checks": list(self.checks),
            "jobs": self.jobs,
        }


def _first_difference(got: dict, expected: dict) -> str:
    keys = sorted(set(got) | set(expected))
    for key in keys:
        a = got.get(key)
        b = expected.get(key)
        if a != b:
            return f"at {key}: got {a}, expected {b}"
    return "no difference found"


def _evaluate_pair(config: SweepConfig, lam: Weight, mu: Weight) -> list[tuple[str, str, str | None]]:
    """Run every configured check on one pair; returns (check, status, detail)."""
    dec = graded_character(lam, mu)
    dim_product = weyl_dim(lam) * weyl_dim(mu)
    zs = [(Fraction(a), Fraction(b)) for a, b in config.evaluation_params]
    oracle_sized = dim_product <= config.oracle_dim_bound
    results: list[tuple[str, str, str | None]] = []
    for check in config.checks:
        status = "pass"
        detail: str | None = None
        if check == "dimension":
            got = fusion_dim(lam, mu)
            mass = sum(weyl_dim(nu) * qp_eval_one(p) for nu, p in dec.items())
            if got != dim_product:
                status, detail = "fail", f"fusion_dim = {got}, expected {dim_product}"
            elif mass != dim_product:
                status, detail = "fail", f"decomposition mass = {mass}, expected {dim_product}"
        elif check == "tensor":
            got_q1 = decomposition_at_q1(dec)
            expected = tensor_decompose(lam, mu)
            if got_q1 != expected:
                status, detail = "fail", _first_difference(got_q1, expected)
        elif check == "leading":
            lead = {nu: p[0] for nu, p in dec.items() if p and p[0]}
            top = (lam[0] + mu[0], lam[1] + mu[1])
            if lead != {top: 1}:
                status, detail = "fail", f"grade-0 part is {lead}, expected {{{top}: 1}}"
        elif check == "grade_bound":
            bound = min(size(lam), size(mu))
            worst = max((qp_degree(p) for p in dec.values()), default=0)
            if worst > bound:
                status, detail = "fail", f"max grade {worst} exceeds min(|lam|,|mu|) = {bound}"
        elif check == "involution":
            got = graded_character(involute(lam), involute(mu))
            expected = involute_decomposition(dec)
            if got != expected:
                status, detail = "fail", _first_difference(got, expected)
        elif check == "symmetry":
            got = graded_character(mu, lam)
            if got != dec:
                status, detail = "fail", _first_difference(got, dec)
        elif check == "multiplicity_free":
            if mu[1] == 0 and 1 <= mu[0] <= lam[0]:
                bad = {nu: p for nu, p in dec.items() if qp_eval_one(p) != 1}
                if bad:
                    status, detail = "fail", f"repeated summands: {sorted(bad)}"
            else:
                status = "skip"
        elif check == "direct":
            got = direct_decomposition(lam, mu)
            if got != dec:
                status, detail = "fail", _first_difference(got, dec)
        elif check == "oracle":
            if oracle_sized and zs:
                got = graded_decomposition_oracle(
                    lam, mu, z=zs[0], dim_bound=config.oracle_dim_bound
                )
                if got != dec:
                    status, detail = "fail", _first_difference(got, dec)
            else:
                status = "skip"
        elif check == "z_independence":
            if oracle_sized and len(zs) >= 2:
                baseline = fusion_graded_character(
                    lam, mu, z=zs[0], dim_bound=config.oracle_dim_bound
                )
                for z in zs[1:]:
                    other = fusion_graded_character(
                        lam, mu, z=z, dim_bound=config.oracle_dim_bound
                    )
                    if other != baseline:
                        status = "fail"
                        detail = f"census at z = {z} differs: " + _first_difference(
                            other, baseline
                        )
                        break
            else:
                status = "skip"
        else:
            raise ValueError(f"unknown check {check!r}")
        results.append((check, status, detail))
    return results


def _evaluate_pair_star(args) -> list[tuple[str, str, str | None]]:
    return _evaluate_pair(*args)


@dataclass
class SweepReport:
    """Deterministic outcome of a sweep: per-check counters plus failures."""

    config: SweepConfig
    pair_count: int
    counts: dict[str, dict[str, int]]
    failures: list[dict]
    elapsed_seconds: float

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_payload(self, include_timing: bool = True) -> dict:
        payload = {
            "config": self.config.json_safe(),
            "pairs": self.pair_count,
            "counts": self.counts,
            "failures": self.failures,
            "ok": self.ok,
        }
        if include_timing:
            payload["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return payload

    def summary_lines(self) -> list[str]:
        lines = []
        for check in self.config.checks:
            c = self.counts[check]
            lines.append(
                f"check {check}: pass={c['pass']} fail={c['fail']} skip={c['skip']}"
            )
        for failure in self.failures:
            lines.append(
                "FAIL {check} lambda={lam} mu={mu}: {detail}".format(
                    check=failure["check"],
                    lam=tuple(failure["lambda"]),
                    mu=tuple(failure["mu"]),
                    detail=failure["detail"],
                )
            )
        verdict = "ok" if self.ok else f"FAILURES: {len(self.failures)}"
        lines.append(
            f"{verdict} ({self.pair_count} pairs, {self.elapsed_seconds:.2f}s)"
        )
        return lines


def run_sweep(config: SweepConfig = SweepConfig()) -> SweepReport:
    """Evaluate every configured check on every pair in the grid."""
    for check in config.checks:
        if check not in CHECK_NAMES:
            raise ValueError(f"unknown check {check!r}; known: {', '.join(CHECK_NAMES)}")
    for z in config.evaluation_params:
        a, b = Fraction(z[0]), Fraction(z[1])
        if a == b:
            raise ValueError("evaluation points must be distinct")
    start = time.monotonic()
    grid = list(dominant_weights_up_to(config.max_coord))
    pairs = [(lam, mu) for lam in grid for mu in grid]
    if config.jobs > 1 and len(pairs) > 1:
        tasks = [(config, lam, mu) for lam, mu in pairs]
        chunk = max(1, len(tasks) // (4 * config.jobs))
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(pool.map(_evaluate_pair_star, tasks, chunksize=chunk))
    else:
        outcomes = [_evaluate_pair(config, lam, mu) for lam, mu in pairs]
    counts = {check: {"pass": 0, "fail": 0, "skip": 0} for check in config.checks}
    failures: list[dict] = []
    for (lam, mu), results in zip(pairs, outcomes):
        for check, status, detail in results:
            counts[check][status] += 1
            if status == "fail":
                failures.append(
                    {
                        "check": check,
                        "lambda": list(lam),
                        "mu": list(mu),
                        "detail": detail,
                    }
                )
    failures.sort(key=lambda f: (f["check"], f["lambda"], f["mu"]))
    return SweepReport(
        config=config,
        pair_count=len(pairs),
        counts=counts,
        failures=failures,
        elapsed_seconds=time.monotonic() - start,
    )
