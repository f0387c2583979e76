"""Seeded randomized property suites, shared by the CLI and the test suite.

All sampling goes through random.Random(seed), so a fixed seed gives a
byte-identical report. Samples are evaluated sequentially in sample order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .calculus import CalculusConfig, check_homogeneity, derivative, q_bracket
from .cyclotomic import Q, CycQ, q_power
from .differential import differential, differential_power
from .forms import Form, FormMonomial, swap_scalar
from .parser import render
from .polynomial import Poly

SUITE_NAMES = ("assoc", "leibniz", "d3", "prop2", "swap")


@dataclass
class SuiteResult:
    """Outcome of one suite: a flag plus human-readable detail lines."""

    name: str
    passed: bool
    lines: list[str] = field(default_factory=list)


def random_cycq(rng: random.Random, lo: int = -5, hi: int = 5) -> CycQ:
    return CycQ(rng.randint(lo, hi), rng.randint(lo, hi))


def random_poly(
    rng: random.Random,
    truncated: bool = False,
    max_degree: int = 6,
    max_terms: int = 3,
) -> Poly:
    top = min(max_degree, 2) if truncated else max_degree
    coeffs: dict[int, CycQ] = {}
    for _ in range(rng.randint(1, max_terms)):
        coeffs[rng.randint(0, top)] = random_cycq(rng)
    return Poly(coeffs, truncated)


def random_form(
    rng: random.Random,
    cfg: CalculusConfig,
    max_degree: int = 6,
    max_dx: int = 2,
    max_d2x: int = 3,
    max_terms: int = 3,
) -> Form:
    terms: dict[FormMonomial, Poly] = {}
    for _ in range(rng.randint(1, max_terms)):
        mon = FormMonomial(rng.randint(0, max_dx), rng.randint(0, max_d2x))
        terms[mon] = random_poly(rng, cfg.anyonic, max_degree)
    return Form(terms, cfg.anyonic)


def random_homogeneous_form(
    rng: random.Random,
    cfg: CalculusConfig,
    max_degree: int = 6,
    max_d2x: int = 3,
) -> Form:
    grade = rng.randint(0, 2 + 2 * max_d2x)
    candidates = [
        FormMonomial(k, (grade - k) // 2)
        for k in range(3)
        if (grade - k) % 2 == 0 and 0 <= (grade - k) // 2 <= max_d2x
    ]
    picked = rng.sample(candidates, rng.randint(1, len(candidates)))
    terms = {mon: random_poly(rng, cfg.anyonic, max_degree) for mon in picked}
    return Form(terms, cfg.anyonic)


def random_odd_form(
    rng: random.Random,
    cfg: CalculusConfig,
    max_degree: int = 6,
    max_d2x: int = 3,
    max_terms: int = 3,
) -> Form:
    # odd grade forces dx power 1
    terms: dict[FormMonomial, Poly] = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[FormMonomial(1, rng.randint(0, max_d2x))] = random_poly(
            rng, cfg.anyonic, max_degree
        )
    return Form(terms, cfg.anyonic)


def random_closed_even_form(
    rng: random.Random,
    cfg: CalculusConfig,
    max_degree: int = 6,
    max_d2x: int = 3,
) -> Form:
    """An even form built to be closed: pair each f at d2x**k with
    derivative(f) at dx**2 * d2x**(k-1)."""
    terms: dict[FormMonomial, Poly] = {}
    for k in range(1, rng.randint(1, max_d2x) + 1):
        f = random_poly(rng, cfg.anyonic, max_degree)
        terms[FormMonomial(0, k)] = f
        terms[FormMonomial(2, k - 1)] = derivative(f, cfg)
    return Form(terms, cfg.anyonic)


def run_assoc(cfg: CalculusConfig, seed: int, samples: int, max_degree: int) -> SuiteResult:
    rng = random.Random(seed)
    for i in range(samples):
        u = random_form(rng, cfg, max_degree)
        v = random_form(rng, cfg, max_degree)
        w = random_form(rng, cfg, max_degree)
        if u.mul(v, cfg).mul(w, cfg) != u.mul(v.mul(w, cfg), cfg):
            return SuiteResult(
                "assoc",
                False,
                [
                    f"sample {i}: (u*v)*w != u*(v*w)",
                    f"u = {render(u)}",
                    f"v = {render(v)}",
                    f"w = {render(w)}",
                ],
            )
    return SuiteResult("assoc", True, [f"product associated on {samples} random triples"])


def run_leibniz(cfg: CalculusConfig, seed: int, samples: int, max_degree: int) -> SuiteResult:
    rng = random.Random(seed)
    for i in range(samples):
        u = random_homogeneous_form(rng, cfg, max_degree)
        v = random_form(rng, cfg, max_degree)
        lhs = differential(u.mul(v, cfg), cfg)
        rhs = differential(u, cfg).mul(v, cfg) + u.mul(differential(v, cfg), cfg).left_mul(
            q_power(u.grade() or 0)
        )
        if lhs != rhs:
            return SuiteResult(
                "leibniz",
                False,
                [
                    f"sample {i}: d(u*v) != d(u)*v + q^|u| * u*d(v)",
                    f"u = {render(u)}",
                    f"v = {render(v)}",
                ],
            )
    return SuiteResult(
        "leibniz", True, [f"graded Leibniz rule held on {samples} random pairs"]
    )


def run_d3(cfg: CalculusConfig, seed: int, samples: int, max_degree: int) -> SuiteResult:
    rng = random.Random(seed)
    for i in range(samples):
        u = random_form(rng, cfg, max_degree)
        if not differential_power(u, 3, cfg).is_zero():
            return SuiteResult(
                "d3", False, [f"sample {i}: d^3 != 0", f"u = {render(u)}"]
            )
    return SuiteResult("d3", True, [f"d^3 vanished on {samples} random forms"])


def run_prop2(cfg: CalculusConfig, seed: int, samples: int, max_degree: int) -> SuiteResult:
    if cfg.alpha == Q:
        ok = check_homogeneity(cfg, max_degree)
        line = (
            f"q-bracket vanished on x^m for every m <= {max_degree}"
            if ok
            else f"q-bracket failed to vanish below degree {max_degree} at alpha = q"
        )
        return SuiteResult("prop2", ok, [line])
    witness = q_bracket(Poly.x(cfg.anyonic), cfg)
    expected = Poly.constant(cfg.alpha - Q, cfg.anyonic)
    ok = bool(witness) and witness == expected
    line = (
        f"FAIL-as-expected: q-bracket(x) = {witness} is nonzero, "
        "so homogeneity fails for this alpha as it must"
    )
    if not ok:
        line = f"q-bracket(x) = {witness}, expected the nonzero value {expected}"
    return SuiteResult("prop2", ok, [line])


def run_swap(cfg: CalculusConfig, seed: int, samples: int, max_degree: int) -> SuiteResult:
    checked = 0
    for r in range(5):
        for j in range(3):
            lhs = Form.basis(0, r, cfg.anyonic).mul(Form.basis(j, 0, cfg.anyonic), cfg)
            rhs = Form.basis(j, r, cfg.anyonic).left_mul(swap_scalar(r, j))
            if lhs != rhs:
                return SuiteResult(
                    "swap",
                    False,
                    [f"d2x^{r} * dx^{j} reduced to {render(lhs)}, expected {render(rhs)}"],
                )
            checked += 1
    return SuiteResult(
        "swap", True, [f"rewriter matched the q^(2rj) closed form on {checked} words"]
    )


_RUNNERS = {
    "assoc": run_assoc,
    "leibniz": run_leibniz,
    "d3": run_d3,
    "prop2": run_prop2,
    "swap": run_swap,
}


def run_suites(
    names: tuple[str, ...] | list[str],
    cfg: CalculusConfig,
    seed: int,
    samples: int,
    max_degree: int,
) -> list[SuiteResult]:
    return [_RUNNERS[name](cfg, seed, samples, max_degree) for name in names]
