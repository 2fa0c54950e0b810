"""Necessary-condition screening for design parameters, in exact arithmetic.

Each condition is one classical counting or bound argument; a report lists
every condition with pass / fail / not-applicable and the exact numbers
that decided it.  "Admissible" means no applicable condition failed; it
never asserts existence.

Conditions and their hypotheses:

* integrality-all-s: lambda * C(v-s, t-s) must be divisible by
  C(k-s, t-s) for every s in 1..t.  Always applicable.
* tits-bound: v >= (t+1)(k-t+1) for nontrivial Steiner parameters.
* cameron-bound: v-t+1 >= (k-t+2)(k-t+1) for nontrivial Steiner
  parameters with t > 2.
* cameron-equality-list: when the previous bound is met with equality,
  (t,k,v) must be one of the five known quintuples; strict inequality
  passes.
* fisher-bound: b >= v, applied through the reduction of a t-design
  (t >= 2) to a 2-design with index lambda_2; holds for any lambda.
* ray-chaudhuri-wilson: b >= C(v,s) for t=2s when v >= k+s, and
  b >= 2*C(v-1,s) for t=2s+1 when v-1 >= k+s; any lambda.
* nontrivial-range: informational marker for t < k < v; trivial
  parameter sets make the bound conditions not-applicable rather than
  failing (complete designs exist and must stay admissible).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .designs import DesignParameters, lambda_s


class Condition(enum.Enum):
    NONTRIVIAL_RANGE = "nontrivial-range"
    INTEGRALITY_ALL_S = "integrality-all-s"
    TITS_BOUND = "tits-bound"
    CAMERON_BOUND = "cameron-bound"
    CAMERON_EQUALITY_LIST = "cameron-equality-list"
    FISHER_BOUND = "fisher-bound"
    RAY_CHAUDHURI_WILSON = "ray-chaudhuri-wilson"


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


CAMERON_EQUALITY_CASES = ((3, 4, 8), (3, 6, 22), (3, 12, 112), (4, 7, 23), (5, 8, 24))


@dataclass(frozen=True)
class ConditionOutcome:
    condition: Condition
    status: Status
    witness: dict

    def json_witness(self):
        """Exact integers/rationals rendered as decimal strings."""
        out = {}
        for key, value in self.witness.items():
            if isinstance(value, bool):
                out[key] = value
            elif isinstance(value, (int, Fraction)):
                out[key] = str(value)
            elif isinstance(value, (list, tuple)):
                out[key] = [str(item) for item in value]
            else:
                out[key] = value
        return out


@dataclass(frozen=True)
class AdmissibilityReport:
    params: DesignParameters
    outcomes: tuple
    admissible: bool

    def outcome(self, condition):
        for out in self.outcomes:
            if out.condition is condition:
                return out
        raise KeyError(condition)

    def failures(self):
        return [out for out in self.outcomes if out.status is Status.FAIL]

    def to_json_dict(self):
        p = self.params
        return {
            "params": {"t": p.t, "v": p.v, "k": p.k, "lambda": p.lam},
            "admissible": self.admissible,
            "conditions": [
                {
                    "condition": out.condition.value,
                    "status": out.status.value,
                    "witness": out.json_witness(),
                }
                for out in self.outcomes
            ],
        }


def _integrality_outcome(params):
    table = []
    failing = []
    for s in range(1, params.t + 1):
        value = lambda_s(params, s)
        table.append(value)
        if value.denominator != 1:
            failing.append((s, value))
    if not failing:
        witness = {"lambda_s": table, "b": lambda_s(params, 0)}
        return ConditionOutcome(Condition.INTEGRALITY_ALL_S, Status.PASS, witness)
    # headline the deepest failing s: lambda_{t-1} is the first counting
    # obstruction one meets walking down from s = t
    s_max, value_max = failing[-1]
    witness = {
        "s": s_max,
        "lambda_s": value_max,
        "all_failing_s": [s for s, _ in failing],
        "all_failing_values": [value for _, value in failing],
    }
    return ConditionOutcome(Condition.INTEGRALITY_ALL_S, Status.FAIL, witness)


def check(params):
    """Evaluate every condition on a parameter quadruple."""
    t, v, k, lam = params.t, params.v, params.k, params.lam
    nontrivial = params.nontrivial()
    steiner = lam == 1
    b = lambda_s(params, 0)
    outcomes = []

    if nontrivial:
        outcomes.append(
            ConditionOutcome(Condition.NONTRIVIAL_RANGE, Status.PASS, {"t": t, "k": k, "v": v})
        )
    else:
        outcomes.append(
            ConditionOutcome(
                Condition.NONTRIVIAL_RANGE,
                Status.NOT_APPLICABLE,
                {"t": t, "k": k, "v": v, "note": "trivial parameters; bounds not applicable"},
            )
        )

    outcomes.append(_integrality_outcome(params))

    if nontrivial and steiner:
        rhs = (t + 1) * (k - t + 1)
        status = Status.PASS if v >= rhs else Status.FAIL
        outcomes.append(
            ConditionOutcome(
                Condition.TITS_BOUND,
                status,
                {"v": v, "bound": rhs, "equality": v == rhs},
            )
        )
    else:
        outcomes.append(ConditionOutcome(Condition.TITS_BOUND, Status.NOT_APPLICABLE, {}))

    cameron_applicable = nontrivial and steiner and t > 2
    if cameron_applicable:
        lhs = v - t + 1
        rhs = (k - t + 2) * (k - t + 1)
        status = Status.PASS if lhs >= rhs else Status.FAIL
        outcomes.append(
            ConditionOutcome(
                Condition.CAMERON_BOUND,
                status,
                {"v_minus_t_plus_1": lhs, "bound": rhs, "equality": lhs == rhs},
            )
        )
        if lhs > rhs:
            outcomes.append(
                ConditionOutcome(
                    Condition.CAMERON_EQUALITY_LIST, Status.PASS, {"strict": True}
                )
            )
        elif lhs == rhs:
            listed = (t, k, v) in CAMERON_EQUALITY_CASES
            outcomes.append(
                ConditionOutcome(
                    Condition.CAMERON_EQUALITY_LIST,
                    Status.PASS if listed else Status.FAIL,
                    {"strict": False, "case": (t, k, v), "listed": listed},
                )
            )
        else:
            outcomes.append(
                ConditionOutcome(
                    Condition.CAMERON_EQUALITY_LIST,
                    Status.NOT_APPLICABLE,
                    {"note": "bound already failed"},
                )
            )
    else:
        outcomes.append(ConditionOutcome(Condition.CAMERON_BOUND, Status.NOT_APPLICABLE, {}))
        outcomes.append(
            ConditionOutcome(Condition.CAMERON_EQUALITY_LIST, Status.NOT_APPLICABLE, {})
        )

    if t >= 2 and nontrivial:
        status = Status.PASS if b >= v else Status.FAIL
        outcomes.append(
            ConditionOutcome(
                Condition.FISHER_BOUND,
                status,
                {"b": b, "v": v, "via": "2-design reduction", "lambda_2": lambda_s(params, 2)},
            )
        )
    else:
        outcomes.append(ConditionOutcome(Condition.FISHER_BOUND, Status.NOT_APPLICABLE, {}))

    if t % 2 == 0:
        s = t // 2
        if v >= k + s:
            bound = comb(v, s)
            status = Status.PASS if b >= bound else Status.FAIL
            outcomes.append(
                ConditionOutcome(
                    Condition.RAY_CHAUDHURI_WILSON,
                    status,
                    {"b": b, "bound": bound, "s": s, "parity": "even"},
                )
            )
        else:
            outcomes.append(
                ConditionOutcome(
                    Condition.RAY_CHAUDHURI_WILSON,
                    Status.NOT_APPLICABLE,
                    {"note": "needs v >= k+s", "s": s},
                )
            )
    else:
        s = (t - 1) // 2
        if v - 1 >= k + s:
            bound = 2 * comb(v - 1, s)
            status = Status.PASS if b >= bound else Status.FAIL
            outcomes.append(
                ConditionOutcome(
                    Condition.RAY_CHAUDHURI_WILSON,
                    status,
                    {"b": b, "bound": bound, "s": s, "parity": "odd"},
                )
            )
        else:
            outcomes.append(
                ConditionOutcome(
                    Condition.RAY_CHAUDHURI_WILSON,
                    Status.NOT_APPLICABLE,
                    {"note": "needs v-1 >= k+s", "s": s},
                )
            )

    admissible = all(out.status is not Status.FAIL for out in outcomes)
    return AdmissibilityReport(params=params, outcomes=tuple(outcomes), admissible=admissible)


def scan(t, lam, v_max, k_range=None):
    """All admissible nontrivial quadruples with v <= v_max, sorted by (v, k).

    Iterates k inside v and, for Steiner parameters, breaks the k loop as
    soon as the monotone Tits bound excludes the rest.
    """
    if t < 1 or lam < 1:
        raise ValueError("need t >= 1 and lambda >= 1")
    if v_max < t + 2:
        raise ValueError("v_max must be at least t+2 for a nontrivial range")
    k_lo, k_hi = (k_range if k_range is not None else (t + 1, v_max - 1))
    found = []
    for v in range(t + 2, v_max + 1):
        for k in range(max(t + 1, k_lo), min(v - 1, k_hi) + 1):
            if lam == 1 and v < (t + 1) * (k - t + 1):
                break  # Tits bound is monotone in k
            params = DesignParameters(t, v, k, lam)
            if check(params).admissible:
                found.append(params)
    return found


@dataclass(frozen=True)
class BoundsSummary:
    """Both sides of the four bounds, with the binding side annotated."""

    params: DesignParameters
    tits_min_v: int
    tits_holds: bool
    cameron_min_v: int
    cameron_holds: bool
    cameron_applicable: bool
    cameron_equality_case: tuple | None
    binding: str  # "tits" | "cameron" | "both-equal"
    boundary_min_v: int  # both bounds demand v >= t^2 - 1 at k = 2(t-1)
    fisher_b: Fraction
    fisher_holds: bool
    rw_bound: int | None
    rw_holds: bool | None

    def to_json_dict(self):
        return {
            "tits_min_v": str(self.tits_min_v),
            "tits_holds": self.tits_holds,
            "cameron_min_v": str(self.cameron_min_v),
            "cameron_holds": self.cameron_holds,
            "cameron_applicable": self.cameron_applicable,
            "cameron_equality_case": list(self.cameron_equality_case)
            if self.cameron_equality_case
            else None,
            "binding": self.binding,
            "boundary_min_v": str(self.boundary_min_v),
            "fisher_b": str(self.fisher_b),
            "fisher_holds": self.fisher_holds,
            "rw_bound": str(self.rw_bound) if self.rw_bound is not None else None,
            "rw_holds": self.rw_holds,
        }


def bounds_summary(params):
    """Evaluate the bound pair on nontrivial Steiner parameters.

    The smaller-k bound binds below k = 2(t-1), the quadratic one above;
    at the boundary both demand v >= t^2 - 1.
    """
    t, v, k, lam = params.t, params.v, params.k, params.lam
    if lam != 1 or not params.nontrivial():
        raise ValueError("bounds summary requires nontrivial Steiner parameters")
    tits_min_v = (t + 1) * (k - t + 1)
    cameron_min_v = (k - t + 2) * (k - t + 1) + t - 1
    if k < 2 * (t - 1):
        binding = "tits"
    elif k > 2 * (t - 1):
        binding = "cameron"
    else:
        binding = "both-equal"
    equality_case = None
    if t > 2 and v == cameron_min_v and (t, k, v) in CAMERON_EQUALITY_CASES:
        equality_case = (t, k, v)
    b = lambda_s(params, 0)
    if t % 2 == 0:
        s = t // 2
        rw_bound = comb(v, s) if v >= k + s else None
    else:
        s = (t - 1) // 2
        rw_bound = 2 * comb(v - 1, s) if v - 1 >= k + s else None
    return BoundsSummary(
        params=params,
        tits_min_v=tits_min_v,
        tits_holds=v >= tits_min_v,
        cameron_min_v=cameron_min_v,
        cameron_holds=v >= cameron_min_v,
        cameron_applicable=t > 2,
        cameron_equality_case=equality_case,
        binding=binding,
        boundary_min_v=t * t - 1,
        fisher_b=b,
        fisher_holds=b >= v,
        rw_bound=rw_bound,
        rw_holds=(b >= rw_bound) if rw_bound is not None else None,
    )
