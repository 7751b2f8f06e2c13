"""Acceptance criteria, runnable from the CLI (``selftest``) and from pytest.

Every check is exact.  Randomized checks use fixed seeds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Callable

from .chow import ChowClass, degree, epsilon_override, exp, todd_class
from .cohomology import BundleDescriptor, is_cohomologically_trivial, line_bundle_table
from .curves import CurveSheafData, LineType, grr_pushforward, lines, QUOTIENT_TWIST
from .deformation import thooft_component_dimension, transform_deformation_report
from .instanton import InstantonData, is_admissible_charge, monad_chern_character, monad_shape
from .sheafdata import (
    ChernData,
    TwistDescriptor,
    chi_line_bundle,
    euler_characteristic,
    euler_fraction,
    from_chern_character,
    hrr_euler,
    is_parity_consistent,
    locally_free_verdict_reflexive_rank2,
)
from .transform import ElementaryData, catalog_step, iterate_transforms, transform_charge

T = TwistDescriptor


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.name}: {self.detail}"


def _result(number, name, failures, cases):
    if failures:
        return CriterionResult(number, name, False, f"{len(failures)}/{cases} failed, first: {failures[0]}")
    return CriterionResult(number, name, True, f"{cases} cases exact")


def golden_values() -> CriterionResult:
    expected = {(0, 0): 1, (2, -1): 9, (0, -1): 0, (1, 0): 4}
    failures = [(t, chi_line_bundle(T(*t)), v) for t, v in expected.items() if chi_line_bundle(T(*t)) != v]
    table = tuple(line_bundle_table(2, -1))
    if table != (9, 0, 0, 0):
        failures.append(("table O(2,-1)", table))
    return _result(1, "golden chi values and h*(O(2H-E))", failures, len(expected) + 1)


def vanishing_block() -> CriterionResult:
    cases = [(p, q) for p in range(-3, 0) for q in range(0, 3)]
    failures = [c for c in cases if not is_cohomologically_trivial(BundleDescriptor.line(*c))]
    return _result(2, "O(p,q) acyclic for -3<=p<=-1, 0<=q<=2", failures, len(cases))


SWEEP = range(-30, 31)


def h1_h2_product() -> CriterionResult:
    failures = []
    for p, q in product(SWEEP, SWEEP):
        t = line_bundle_table(p, q)
        if t.h1 * t.h2 != 0:
            failures.append((p, q, tuple(t)))
    return _result(3, "h1*h2 = 0 for line bundles", failures, len(SWEEP) ** 2)


def serre_symmetry() -> CriterionResult:
    failures = []
    for p, q in product(SWEEP, SWEEP):
        if line_bundle_table(p, q) != line_bundle_table(-4 - p, 2 - q).reversed():
            failures.append((p, q))
    return _result(4, "Serre duality symmetry of tables", failures, len(SWEEP) ** 2)


def random_chern_data(rng: random.Random, rank=None, parity=True) -> ChernData:
    r = rng.randint(0, 4) if rank is None else rank
    a, b, k, l, m = (rng.randint(-10, 10) for _ in range(5))
    d = ChernData(r, a, b, k, l, m, check=False)
    if parity and not is_parity_consistent(d):
        m += 1
    return ChernData(r, a, b, k, l, m, check=parity)


def todd_cross_oracle() -> CriterionResult:
    failures = []
    td = todd_class()
    grid = range(-10, 11)
    for p, q in product(grid, grid):
        value = degree(exp(ChowClass.divisor(p, q)) * td)
        if value != chi_line_bundle(T(p, q)):
            failures.append(("line", p, q, value))
    rng = random.Random(20240505)
    for _ in range(500):
        d = random_chern_data(rng)
        t = T(rng.randint(-10, 10), rng.randint(-10, 10))
        if euler_characteristic(d, t) != hrr_euler(d, t):
            failures.append((d.as_dict(), t))
    return _result(5, "HRR with the Todd class = closed forms", failures, len(grid) ** 2 + 500)


def monad_identities() -> CriterionResult:
    failures, cases = [], 0
    for k, l, g in product(range(9), repeat=3):
        if not is_admissible_charge(2, k, l):
            continue
        cases += 1
        ch = monad_chern_character(monad_shape(InstantonData.of_charge(k, l, gamma=g)))
        back = from_chern_character(ch)
        if (back.r, back.a, back.b, back.k, back.l, back.m) != (2, 0, 0, k, l, 0):
            failures.append((k, l, g, str(ch)))
    return _result(6, "monad alternating rank, c1, c2 via the Chow ring", failures, cases)


def instanton_chi() -> CriterionResult:
    failures, cases = [], 0
    for k, l in product(range(-20, 21), repeat=2):
        cases += 1
        if euler_characteristic(ChernData(2, 0, 0, k, l, 0), T(-2, 1)) != 0:
            failures.append((k, l))
    return _result(7, "chi(F(-2,1)) = 0 for rank 2, c1 = 0, c3 = 0", failures, cases)


def grr_quotient() -> CriterionResult:
    failures, cases = [], 0
    tags = (LineType.PULLBACK, LineType.FIBER, LineType.EXCEPTIONAL)
    for n in range(1, 6):
        for combo in combinations_with_replacement(tags, n):
            cases += 1
            ch = grr_pushforward(CurveSheafData.theta(lines(combo)), QUOTIENT_TWIST)
            if degree(ch) != 0 or ch.deg0 != 0 or ch.part(1) != ChowClass():
                failures.append(("".join(t.value for t in combo), str(ch)))
    return _result(8, "ch3 of i_*L(2,-1) vanishes", failures, cases)


def transform_charges() -> CriterionResult:
    failures, cases = [], 0
    for k, l in product(range(11), repeat=2):
        if not is_admissible_charge(2, k, l):
            continue
        seed = InstantonData.of_charge(k, l)
        for tag, want in ((LineType.PULLBACK, (k + 1, l)), (LineType.FIBER, (k + 1, l + 1))):
            cases += 1
            got = transform_charge(ElementaryData(catalog_step(tag), seed)).charge
            if got != want:
                failures.append((k, l, tag.value, got))
        for n in range(1, 4):
            for seq in product("PFX", repeat=n):
                cases += 1
                traj = iterate_transforms(seed, [catalog_step(t) for t in seq])
                union = transform_charge(ElementaryData(CurveSheafData.theta(lines(seq)), seed))
                d1, d2 = seq.count("P") + seq.count("F"), seq.count("F") - seq.count("X")
                if traj[-1].data.charge != union.charge or union.charge != (k + d1, l + d2):
                    failures.append((k, l, "".join(seq), traj[-1].data.charge, union.charge))
    return _result(9, "transform charges and concatenation", failures, cases)


def deformation_totals() -> CriterionResult:
    failures, cases = [], 0
    for k, l in product(range(11), repeat=2):
        if not is_admissible_charge(2, k, l):
            continue
        for tag, ext1, h0 in (("P", 8 * (k + 1) - 4 * l - 3, 5), ("F", 8 * k - 4 * l + 1, 3)):
            cases += 1
            rep = transform_deformation_report(k, l, tag)
            ok = (
                rep.ext1 == ext1
                and rep.h0_local_ext == h0
                and rep.ext1 == rep.h0_local_ext + rep.h1_hom
                and rep.ext1 == thooft_component_dimension(*rep.boundary_component)
                and rep.h1_local_ext == 0
                and rep.smooth
            )
            if not ok:
                failures.append((k, l, tag, rep.as_dict()))
    return _result(10, "deformation totals and boundary coherence", failures, cases)


def parity_and_local_freeness() -> CriterionResult:
    failures = []
    rng = random.Random(11)
    grid = range(-5, 6)
    for _ in range(200):
        d = ChernData(*(rng.randint(-10, 10) if i else rng.randint(0, 4) for i in range(6)), check=False)
        integral = all(euler_fraction(d, T(p, q)).denominator == 1 for p, q in product(grid, grid))
        if integral != is_parity_consistent(d):
            failures.append(("parity", d.as_dict()))
        d2 = ChernData(2, d.a, d.b, d.k, d.l, d.m, check=False)
        if locally_free_verdict_reflexive_rank2(d2) != (d2.m == 0):
            failures.append(("locally free", d2.as_dict()))
    return _result(11, "parity criterion and local freeness", failures, 200)


CRITERIA: tuple[Callable[[], CriterionResult], ...] = (
    golden_values,
    vanishing_block,
    h1_h2_product,
    serre_symmetry,
    todd_cross_oracle,
    monad_identities,
    instanton_chi,
    grr_quotient,
    transform_charges,
    deformation_totals,
    parity_and_local_freeness,
)


def run_all() -> list[CriterionResult]:
    # every criterion is stated for deg(E^3) = +1
    with epsilon_override(1):
        return [c() for c in CRITERIA]
