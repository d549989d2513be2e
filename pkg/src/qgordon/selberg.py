"""The Rogers-Selberg system of q-difference equations and its unique solution.

For a level k >= 1 the system couples k+1 series F_0, ..., F_k in x and q:

    F_i(x, q) - (xq)^i F_(k-i)(xq, q) = F_(i-1)(x, q)     for i = 1..k
    F_0(x, q) = F_k(xq, q)

subject to F_i in 1 + xq[[x, q]]. Under that initial condition the solution
is unique, and ``solve`` constructs it degree by degree in x: writing
F_i = sum_m a_(i,m)(q) x^m, telescoping the first equation over i and
substituting the second gives

    a_(k,m) (1 - q^m) = q^m (a_(k-1,m-1) + a_(k-2,m-2) + ... )

whose right side involves only x-degrees below m, so a_(k,m) follows by
multiplying with the geometric series for 1/(1 - q^m); then
a_(0,m) = q^m a_(k,m) and a_(i,m) = a_(i-1,m) + q^m a_(k-i,m-i) fill in the
rest. Every step is exact in the truncated ring.

``check_recursions`` re-evaluates all k+1 residuals from scratch, so a
solved family is always audited against the system itself rather than
against the solver's own schedule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import BiSeries


@dataclass(frozen=True)
class WeightData:
    """Normalization data of the dominant weight k0*L0 + k1*L1.

    h is the conformal weight k1(k1+2)/(4(k+2)) and charge_offset = k1/2;
    a full character equals x^charge_offset q^h times the member series.
    """

    k0: int
    k1: int
    h: Fraction
    charge_offset: Fraction


def weight_data(k0: int, k1: int) -> WeightData:
    if k0 < 0 or k1 < 0 or k0 + k1 < 1:
        raise ValueError("need k0, k1 >= 0 with k0 + k1 >= 1")
    k = k0 + k1
    return WeightData(
        k0=k0,
        k1=k1,
        h=Fraction(k1 * (k1 + 2), 4 * (k + 2)),
        charge_offset=Fraction(k1, 2),
    )


@dataclass(frozen=True)
class RecursionFamily:
    """The solved members F_0 ... F_k at a common truncation window."""

    k: int
    x_order: int
    q_order: int
    members: tuple[BiSeries, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("need k >= 1")
        if len(self.members) != self.k + 1:
            raise ValueError(f"expected {self.k + 1} members, got {len(self.members)}")
        for f in self.members:
            if f.x_order != self.x_order or f.q_order != self.q_order:
                raise ValueError("member orders do not match the family window")

    def member_weight_data(self, i: int) -> WeightData:
        """Weight data of member i, whose dominant weight is i*L0 + (k-i)*L1."""
        return weight_data(i, self.k - i)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "x_order": self.x_order,
            "q_order": self.q_order,
            "F": [f.to_json_dict() for f in self.members],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> RecursionFamily:
        try:
            k = int(obj["k"])
            R = int(obj["x_order"])
            N = int(obj["q_order"])
            members = tuple(BiSeries.from_json_dict(f) for f in obj["F"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed family object: {exc}") from None
        return cls(k=k, x_order=R, q_order=N, members=members)


# -- univariate helpers (rows of fixed x-degree) --------------------------------


def _mul_trunc(u: list[int], v: list[int], N: int) -> list[int]:
    out = [0] * (N + 1)
    for a, ca in enumerate(u):
        if ca:
            for b in range(N + 1 - a):
                cb = v[b]
                if cb:
                    out[a + b] += ca * cb
    return out


def _shift_q(u: list[int], m: int, N: int) -> list[int]:
    if m > N:
        return [0] * (N + 1)
    return [0] * m + u[: N + 1 - m]


def _geometric(m: int, N: int) -> list[int]:
    out = [0] * (N + 1)
    for b in range(0, N + 1, m):
        out[b] = 1
    return out


# -- solver ---------------------------------------------------------------------


def solve(k: int, x_order: int, q_order: int) -> RecursionFamily:
    """Solve the level-k system on the window (x_order, q_order)."""
    if k < 1:
        raise ValueError("need k >= 1")
    if x_order < 0 or q_order < 0:
        raise ValueError("orders must be nonnegative")
    R, N = x_order, q_order
    # a[i][m]: q-coefficients of x^m in F_i
    a = [[[0] * (N + 1) for _ in range(R + 1)] for _ in range(k + 1)]
    for i in range(k + 1):
        a[i][0][0] = 1
    for m in range(1, R + 1):
        total = [0] * (N + 1)
        for j in range(1, min(k, m) + 1):
            src = a[k - j][m - j]
            for b in range(N + 1):
                total[b] += src[b]
        top = _mul_trunc(_shift_q(total, m, N), _geometric(m, N), N)
        a[k][m] = top
        a[0][m] = _shift_q(top, m, N)
        for i in range(1, k + 1):
            prev = a[i - 1][m]
            if m - i >= 0:
                bump = _shift_q(a[k - i][m - i], m, N)
                a[i][m] = [p + s for p, s in zip(prev, bump)]
            else:
                a[i][m] = list(prev)
    members = tuple(BiSeries(R, N, a[i]) for i in range(k + 1))
    return RecursionFamily(k=k, x_order=R, q_order=N, members=members)


# -- residual checks --------------------------------------------------------------


def check_recursions(fam: RecursionFamily) -> list[BiSeries]:
    """Residuals of the full system; entry i-1 is the i-th difference
    equation F_i - (xq)^i F_(k-i)(xq,q) - F_(i-1), and the last entry is
    the shift relation F_0 - F_k(xq,q). All must vanish identically.
    """
    F = fam.members
    k = fam.k
    residuals = []
    for i in range(1, k + 1):
        residuals.append(F[i] - F[k - i].qshift(1).mul_monomial(i, i) - F[i - 1])
    residuals.append(F[0] - F[k].qshift(1))
    return residuals


def check_rr_recursion(series: BiSeries) -> BiSeries:
    """Residual of the Rogers-Ramanujan recursion
    F(x,q) - F(xq,q) - xq F(xq^2,q); zero iff the series satisfies it."""
    return series - series.qshift(1) - series.qshift(2).mul_monomial(1, 1)


def check_k2_example(fam: RecursionFamily) -> list[BiSeries]:
    """Residuals of the three level-2 equations in their worked form:

        F_1 - xq F_1(xq,q) = F_0
        F_2 - (xq)^2 F_0(xq,q) = F_1
        F_0 = F_2(xq,q)
    """
    if fam.k != 2:
        raise ValueError("the worked example is the level-2 system")
    F0, F1, F2 = fam.members
    return [
        F1 - F1.qshift(1).mul_monomial(1, 1) - F0,
        F2 - F0.qshift(1).mul_monomial(2, 2) - F1,
        F0 - F2.qshift(1),
    ]


def unnormalize(
    series: BiSeries, wd: WeightData
) -> tuple[tuple[Fraction, Fraction], BiSeries]:
    """Pair the series with the monomial prefactor (charge_offset, h) that
    turns it into the full character x^offset q^h * series.

    Fractional exponents never enter the integer-graded series; they exist
    only in the returned prefactor pair.
    """
    return (wd.charge_offset, wd.h), series
