"""Matrix semantics: valuations, evaluation, models, entailment, classification."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator

from .formula import And, Formula, FormulaSet, Letter, Neg, Or, letters
from .matrix import Matrix, Value

Valuation = dict[str, Value]


class EvaluationError(ValueError):
    """A formula mentions a letter the valuation does not assign."""


def evaluate(m: Matrix, valuation: Valuation, f: Formula) -> Value:
    """Recursive truth value of `f` under `valuation` in matrix `m`."""
    if isinstance(f, Letter):
        try:
            return valuation[f.name]
        except KeyError:
            raise EvaluationError(f"unassigned letter: {f.name}") from None
    if isinstance(f, Neg):
        return m.neg[evaluate(m, valuation, f.child)]
    left = evaluate(m, valuation, f.left)
    right = evaluate(m, valuation, f.right)
    if isinstance(f, Or):
        return m.or_[(left, right)]
    if isinstance(f, And):
        return m.and_[(left, right)]
    return m.imp[(left, right)]


def valuations(m: Matrix, names: Iterable[str]) -> Iterator[Valuation]:
    """All |values|^|names| valuations over `names`, in a fixed order.

    Letters iterate lexicographically, values ascending; the empty letter set
    yields the single empty valuation.
    """
    sorted_names = sorted(set(names))
    for combo in product(m.values, repeat=len(sorted_names)):
        yield dict(zip(sorted_names, combo))


def _is_model(m: Matrix, v: Valuation, gamma: FormulaSet) -> bool:
    return all(evaluate(m, v, g) in m.designated for g in gamma)


def models(
    m: Matrix, gamma: FormulaSet, names: Iterable[str] | None = None
) -> list[Valuation]:
    """The models of `gamma`, restricted to the given letter domain."""
    domain = gamma.letters() if names is None else set(names)
    if not gamma.letters() <= domain:
        raise ValueError("letter domain must cover the letters of gamma")
    return [v for v in valuations(m, domain) if _is_model(m, v, gamma)]


@dataclass
class EntailmentResult:
    holds: bool
    countermodel: Valuation | None = None

    def __bool__(self) -> bool:
        return self.holds


def entails(m: Matrix, gamma: FormulaSet, alpha: Formula) -> EntailmentResult:
    """Does every model of `gamma` designate `alpha`?

    Decided over the letters of `gamma` and `alpha`; enlarging the domain by
    fresh letters does not change the verdict.
    """
    domain = gamma.letters() | letters(alpha)
    for v in valuations(m, domain):
        if _is_model(m, v, gamma) and evaluate(m, v, alpha) not in m.designated:
            return EntailmentResult(False, v)
    return EntailmentResult(True)


class Classification(Enum):
    TAUTOLOGY = "tautology"
    CONTRADICTION = "contradiction"
    UNSATISFIABLE_NONDEGENERATE = "unsatisfiable_nondegenerate"
    CONTINGENT = "contingent"


def classify(m: Matrix, alpha: Formula) -> Classification:
    """Tautology / contradiction / unsatisfiable-but-not-always-0 / contingent.

    The contradiction class (value 0 under every valuation) only applies when
    the matrix has a non-designated value 0; otherwise unsatisfiable formulas
    all land in UNSATISFIABLE_NONDEGENERATE.
    """
    zero = Fraction(0)
    zero_available = zero in m.values and zero not in m.designated
    ever_designated = False
    all_designated = True
    always_zero = zero_available
    for v in valuations(m, letters(alpha)):
        value = evaluate(m, v, alpha)
        if value in m.designated:
            ever_designated = True
        else:
            all_designated = False
        if value != zero:
            always_zero = False
    if all_designated:
        return Classification.TAUTOLOGY
    if not ever_designated:
        if always_zero:
            return Classification.CONTRADICTION
        return Classification.UNSATISFIABLE_NONDEGENERATE
    return Classification.CONTINGENT


def is_consistent(m: Matrix, gamma: FormulaSet) -> bool:
    """Consistency of a finite set, decided by satisfiability.

    A model of `gamma` extends with a fresh letter mapped to a non-designated
    value (the designated set is proper), so some formula escapes the
    consequences of `gamma`; conversely a modelless set entails everything.
    """
    for v in valuations(m, gamma.letters()):
        if _is_model(m, v, gamma):
            return True
    return False


def tautology_free_check(m: Matrix, names: Iterable[str], max_depth: int) -> bool:
    """True iff every formula over `names` up to `max_depth` takes value 1/2
    under the valuation assigning 1/2 everywhere.

    Walks the same level-by-level order as `formula.enumerate_formulas`,
    computing each formula's value from its parts' values.
    """
    half = Fraction(1, 2)
    if half not in m.values:
        raise ValueError("matrix has no 1/2 value")
    sorted_names = sorted(set(names))
    if not sorted_names:
        raise ValueError("letter set must be nonempty")
    pool: list[Value] = [half] * len(sorted_names)
    prev_start = 0
    for _ in range(max_depth):
        level: list[Value] = []
        for value in pool[prev_start:]:
            out = m.neg[value]
            if out != half:
                return False
            level.append(out)
        for table in (m.or_, m.and_, m.imp):
            for i, a in enumerate(pool):
                for j, b in enumerate(pool):
                    if i >= prev_start or j >= prev_start:
                        out = table[(a, b)]
                        if out != half:
                            return False
                        level.append(out)
        prev_start = len(pool)
        pool.extend(level)
    return True
