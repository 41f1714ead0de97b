"""Equivalence classes of the two families by length, and the end-to-end
verification suite."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from . import z4core
from .codefam import FamilyParams, binary_image, family_params_table, hadamard_code, perfect_code
from .constructions import equivalence_invariant_match, plotkin_double, recurrent_build, same_codewords
from .invariants import (
    even_projection,
    identity_gate,
    kernel,
    min_distance,
    odd_projection,
    rank,
    weight_distribution,
)
from .qmatrix import build_A, code_type, is_orthogonal

# Expected matrices A^{r1,r2}, one string per row.
REFERENCE_MATRICES: dict[tuple[int, int], list[str]] = {
    (0, 0): ["1"],
    (0, 1): ["11", "02"],
    (1, 0): ["1111", "0123"],
    (0, 2): ["1111", "0022", "0202"],
    (1, 1): ["11111111", "00112233", "02020202"],
    (0, 3): ["11111111", "00002222", "00220022", "02020202"],
    (2, 0): ["1111111111111111", "0000111122223333", "0123012301230123"],
}

ENUMERATION_LOG2 = 16


class ClassificationError(AssertionError):
    pass


@dataclass
class ClassificationRow:
    k: int
    family: str
    representatives: list[tuple[FamilyParams, int]]
    classes: list[list[FamilyParams]]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def expected_count(self) -> int:
        return (self.k - 1) // 2 if self.family == "H" else (self.k + 1) // 2

    def to_lines(self) -> list[str]:
        invariant = "kernel_size" if self.family == "H" else "rank"
        lines = [f"k={self.k} family={self.family} classes={self.class_count}"]
        for p, value in self.representatives:
            cls = next(i for i, c in enumerate(self.classes) if p in c)
            lines.append(f"  r1={p.r1} r2={p.r2} {invariant}={value} class={cls}")
        return lines


def classify_hadamard(k: int) -> ClassificationRow:
    """Kernel sizes separate the classes; every r1 <= 1 code is linear and
    these collapse into a single class."""
    if not 3 <= k <= 7:
        raise ValueError("Hadamard classification supports 3 <= k <= 7")
    reps, classes, linear = [], [], []
    linear_weights = set()
    for p in family_params_table(k):
        B = binary_image(hadamard_code(p))
        ksize = kernel(B).cardinality
        reps.append((p, ksize))
        if p.r1 <= 1:
            if ksize != B.cardinality:
                raise ClassificationError(f"H^{p.r1},{p.r2} should be linear")
            linear.append(p)
            linear_weights.add(tuple(weight_distribution(B).items()))
        else:
            classes.append([p])
    if len(linear_weights) > 1:
        raise ClassificationError("linear Hadamard codes of one length differ in weight distribution")
    classes.insert(0, linear)
    sizes = [next(v for q, v in reps if q == c[0]) for c in classes]
    if len(set(sizes)) != len(classes):
        raise ClassificationError(f"kernel sizes do not separate the classes: {sizes}")
    row = ClassificationRow(k, "H", reps, classes)
    if row.class_count != row.expected_count:
        raise ClassificationError(f"k={k}: {row.class_count} classes, expected {row.expected_count}")
    return row


@lru_cache(maxsize=None)
def fast_rank_validated() -> bool:
    """Gate for the generator-span rank: the Gray addition identity must hold
    on all scalar pairs and both rank strategies must agree on every family
    code small enough to enumerate."""
    identity_gate()
    for k in range(1, 8):
        for p in family_params_table(k):
            codes = [hadamard_code(p)]
            if perfect_code(p).log2_cardinality <= ENUMERATION_LOG2:
                codes.append(perfect_code(p))
            for C in codes:
                B = binary_image(C)
                if rank(B, "enumeration") != rank(B, "generator_span"):
                    raise ClassificationError(f"rank strategies disagree on {C.label}")
    return True


@lru_cache(maxsize=None)
def _perfect_rank(p: FamilyParams, strategy: str) -> int:
    C = perfect_code(p)
    if strategy == "auto":
        strategy = "enumeration" if C.log2_cardinality <= ENUMERATION_LOG2 else "generator_span"
    if strategy == "generator_span":
        fast_rank_validated()
    return rank(binary_image(C), strategy)


def perfect_rank(p: FamilyParams | tuple, strategy: str = "auto") -> int:
    """Rank of the binary image of C^{r1,r2}; ``auto`` enumerates up to 2^16
    codewords and otherwise uses the validated generator-span path."""
    return _perfect_rank(FamilyParams(*p), strategy)


def classify_perfect(k: int, strategy: str = "auto") -> ClassificationRow:
    """Ranks separate the classes; each (r1, r2) is its own class."""
    if not 4 <= k <= 7:
        raise ValueError("perfect-code classification supports 4 <= k <= 7")
    reps = [(p, perfect_rank(p, strategy)) for p in family_params_table(k)]
    ranks = [v for _, v in reps]
    if len(set(ranks)) != len(ranks):
        raise ClassificationError(f"ranks are not pairwise distinct: {ranks}")
    row = ClassificationRow(k, "C", reps, [[p] for p, _ in reps])
    if row.class_count != row.expected_count:
        raise ClassificationError(f"k={k}: {row.class_count} classes, expected {row.expected_count}")
    return row


# -- verification suite ----------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    computed: object
    expected: object

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} computed={self.computed} expected={self.expected}"


@dataclass
class VerifyReport:
    max_k: int
    slow: bool
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def text(self) -> str:
        lines = ["# format=1", f"# verify max_k={self.max_k} slow={str(self.slow).lower()}"]
        lines += [r.line() for r in self.results]
        lines.append(f"summary passed={sum(r.passed for r in self.results)} failed={len(self.failures())}")
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(map(str, v)) + "]"
    return str(v)


class _Collector:
    def __init__(self, report: VerifyReport):
        self.report = report

    def check(self, name: str, computed, expected, passed: bool | None = None) -> None:
        if passed is None:
            passed = computed == expected
        self.report.results.append(CheckResult(name, bool(passed), _fmt(computed), _fmt(expected)))

    def guarded(self, name: str, fn: Callable[[], None]) -> None:
        try:
            fn()
        except Exception as exc:  # a crashing check is reported, not raised
            self.report.results.append(CheckResult(name, False, f"error:{type(exc).__name__}", "no error"))


def gray_isometry_trials(lengths=(1, 2, 4, 8, 16, 32, 64), pairs: int = 10_000, seed: int = 0) -> int:
    """Count pairs with ``d_L(a, b) != d(phi(a), phi(b))`` over random pairs."""
    rng = np.random.default_rng(seed)
    bad = 0
    for n in lengths:
        a = rng.integers(0, 4, size=(pairs, n))
        b = rng.integers(0, 4, size=(pairs, n))
        lee = z4core.LEE[(b - a) % 4].sum(axis=1)
        ga = np.concatenate([z4core.BETA[a], z4core.GAMMA[a]], axis=1)
        gb = np.concatenate([z4core.BETA[b], z4core.GAMMA[b]], axis=1)
        ham = (ga ^ gb).sum(axis=1)
        bad += int(np.count_nonzero(lee != ham))
    return bad


def verify_suite(
    max_k: int = 5,
    include_slow: bool = False,
    reference_matrices: dict[tuple[int, int], list[str]] | None = None,
) -> VerifyReport:
    """Run every reproduction check up to length 2^max_k.

    Checks that enumerate 2^26 codewords (k = 5 perfect codes) only run
    with ``include_slow``.  Results are listed in a fixed order.
    """
    if not 3 <= max_k <= 7:
        raise ValueError("max_k must lie in 3..7")
    refs = REFERENCE_MATRICES if reference_matrices is None else reference_matrices
    report = VerifyReport(max_k, include_slow)
    c = _Collector(report)
    params = [p for k in range(1, max_k + 1) for p in family_params_table(k)]

    def enumerable(p: FamilyParams) -> bool:
        return p.k <= 4 or (p.k == 5 and include_slow)

    # identity gate first: nothing downstream trusts the fast rank without it
    c.check("identity_gate", z4core.check_gray_addition_identity(), True)

    for (r1, r2), rows in sorted(refs.items(), key=lambda kv: (2 * kv[0][0] + kv[0][1], kv[0])):
        if 2 * r1 + r2 + 1 > max_k:
            continue
        c.check(f"matrix A^{r1},{r2}", build_A(r1, r2).to_text().splitlines()[1:], rows)

    c.check("gray_isometry mismatches", gray_isometry_trials(), 0)

    for p in params:
        def duality(p=p):
            H, C = hadamard_code(p), perfect_code(p)
            orth = is_orthogonal(C.generator, build_A(p.r1, p.r2))
            total = code_type(H.generator).log2_size + code_type(C.generator).log2_size
            c.check(f"duality r1={p.r1} r2={p.r2}", (orth, total), (True, 2 * p.n))
        c.guarded(f"duality r1={p.r1} r2={p.r2}", duality)

    for p in params:
        B = binary_image(hadamard_code(p))
        c.check(
            f"hadamard_params r1={p.r1} r2={p.r2}",
            (B.length, B.cardinality, min_distance(B)),
            (p.N, 2 * p.N, p.N // 2),
        )

    for p in params:
        if p.k < 2 or not enumerable(p):
            continue
        B = binary_image(perfect_code(p))
        c.check(
            f"perfect_params r1={p.r1} r2={p.r2}",
            (B.length, B.log2_cardinality, min_distance(B)),
            (p.N, p.N - p.k - 1, 4),
        )

    # (3,1) sits at k = 8; its code has only 512 words, so it rides along with max_k = 7
    kernel_params = params + ([FamilyParams(3, 1)] if max_k == 7 else [])
    for p in kernel_params:
        if p.r1 <= 1:
            expected = 2 * p.N
        elif (p.r1, p.r2) in {(2, 0), (2, 1), (2, 2), (3, 0), (3, 1)}:
            expected = 2 ** (p.r1 + p.r2 + 2)
        else:
            continue
        H = hadamard_code(p, max_k=8)
        c.check(f"kernel_size r1={p.r1} r2={p.r2}", kernel(binary_image(H)).cardinality, expected)

    named = {(1, 1): 13, (0, 3): 11, (0, 4): 27, (1, 2): 28, (2, 0): 29}
    for (r1, r2), expected in named.items():
        p = FamilyParams(r1, r2)
        if p.k > max_k:
            continue
        B = binary_image(perfect_code(p))
        if enumerable(p):
            c.check(f"rank_enumeration r1={r1} r2={r2}", perfect_rank(p, "enumeration"), expected)
        c.check(f"rank_generator_span r1={r1} r2={r2}", rank(B, "generator_span"), expected)

    for p in params:
        if not enumerable(p):
            continue
        r = perfect_rank(p, "enumeration")
        bound = p.N - p.r1 - p.r2 - 1
        c.check(f"rank_bound r1={p.r1} r2={p.r2}", r, f"<={bound}", r <= bound)
        tight_a = p.r1 >= 1 and 2 * p.r1 + p.r2 >= 3
        tight_b = (p.r1 >= 1 and p.r2 >= 1) or p.r2 >= 4
        if tight_a or tight_b:
            c.check(f"rank_formula r1={p.r1} r2={p.r2}", r, bound)

    for p in params:
        if p.k < 2 or not (p.k <= 4 or (p.k == 5 and include_slow)):
            continue
        lower = FamilyParams(p.r1, p.r2 - 1) if p.r2 > 0 else FamilyParams(p.r1 - 1, 1)
        B = binary_image(perfect_code(p))
        target = binary_image(perfect_code(lower)).materialize()
        c.check(f"projection even r1={p.r1} r2={p.r2}", even_projection(B) == target, True)
        c.check(f"projection odd r1={p.r1} r2={p.r2}", odd_projection(B) == target, True)

    for r2 in range(max_k - 1):
        c.check(
            f"plotkin_double_exact r2={r2}",
            same_codewords(plotkin_double(hadamard_code((0, r2))), hadamard_code((0, r2 + 1))),
            True,
        )
    for p in params:
        m = equivalence_invariant_match(recurrent_build(p), hadamard_code(p))
        c.check(f"recurrent_build r1={p.r1} r2={p.r2}", m.mismatches, [])

    for k in range(3, max_k + 1):
        def had(k=k):
            row = classify_hadamard(k)
            c.check(f"classify_hadamard k={k}", row.class_count, (k - 1) // 2)
        c.guarded(f"classify_hadamard k={k}", had)
    for k in range(4, max_k + 1):
        def perf(k=k):
            strategy = "enumeration" if k == 5 and include_slow else "auto"
            row = classify_perfect(k, strategy)
            c.check(f"classify_perfect k={k}", row.class_count, (k + 1) // 2)
        c.guarded(f"classify_perfect k={k}", perf)
    return report

