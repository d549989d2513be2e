"""Truncated bivariate formal power series with exact integer coefficients.

A :class:`BiSeries` is a series in two formal variables, x (tracking charge)
and q (tracking weight), truncated to the rectangular window
0 <= a <= x_order, 0 <= b <= q_order. Coefficients are plain Python ints,
so every operation is exact: there is no floating point and no overflow
anywhere in this package. A product term falling outside the window is
discarded; every retained coefficient is the true one.

Values are immutable after construction and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class BiSeries:
    """Dense truncated series sum_{a<=R, b<=N} c[a][b] * x^a * q^b."""

    __slots__ = ("x_order", "q_order", "_rows")

    def __init__(self, x_order: int, q_order: int, rows: Iterable[Iterable[int]]):
        if x_order < 0 or q_order < 0:
            raise ValueError("orders must be nonnegative")
        frozen = tuple(tuple(row) for row in rows)
        if len(frozen) != x_order + 1 or any(len(r) != q_order + 1 for r in frozen):
            raise ValueError(
                f"coefficient table must be {x_order + 1} x {q_order + 1}"
            )
        for row in frozen:
            for c in row:
                if not isinstance(c, int):
                    raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "x_order", x_order)
        object.__setattr__(self, "q_order", q_order)
        object.__setattr__(self, "_rows", frozen)

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    # -- access ------------------------------------------------------------

    def coeff(self, a: int, b: int) -> int:
        """Coefficient of x^a q^b; zero for indices outside the window."""
        if 0 <= a <= self.x_order and 0 <= b <= self.q_order:
            return self._rows[a][b]
        return 0

    def __getitem__(self, key: tuple[int, int]) -> int:
        a, b = key
        return self.coeff(a, b)

    def row(self, a: int) -> tuple[int, ...]:
        """All q-coefficients at x-degree a."""
        return self._rows[a]

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Nonzero terms as (a, b, coeff), lexicographic in (a, b)."""
        for a, row in enumerate(self._rows):
            for b, c in enumerate(row):
                if c:
                    yield (a, b, c)

    def is_zero(self) -> bool:
        return all(c == 0 for row in self._rows for c in row)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (
            self.x_order == other.x_order
            and self.q_order == other.q_order
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.x_order, self.q_order, self._rows))

    def __repr__(self) -> str:
        n = sum(1 for _ in self.terms())
        return f"BiSeries(x_order={self.x_order}, q_order={self.q_order}, {n} nonzero terms)"

    def __str__(self) -> str:
        parts = []
        for a, b, c in self.terms():
            mono = "".join(
                (
                    f"x^{a}" if a > 1 else "x" if a == 1 else "",
                    f"q^{b}" if b > 1 else "q" if b == 1 else "",
                )
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}{mono}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    # -- ring operations ----------------------------------------------------

    def _require_same_orders(self, other: BiSeries) -> None:
        if self.x_order != other.x_order or self.q_order != other.q_order:
            raise ValueError(
                f"order mismatch: ({self.x_order},{self.q_order}) vs "
                f"({other.x_order},{other.q_order})"
            )

    def __add__(self, other: BiSeries) -> BiSeries:
        self._require_same_orders(other)
        return BiSeries(
            self.x_order,
            self.q_order,
            [
                [c1 + c2 for c1, c2 in zip(r1, r2)]
                for r1, r2 in zip(self._rows, other._rows)
            ],
        )

    def __sub__(self, other: BiSeries) -> BiSeries:
        self._require_same_orders(other)
        return BiSeries(
            self.x_order,
            self.q_order,
            [
                [c1 - c2 for c1, c2 in zip(r1, r2)]
                for r1, r2 in zip(self._rows, other._rows)
            ],
        )

    def __neg__(self) -> BiSeries:
        return BiSeries(
            self.x_order, self.q_order, [[-c for c in row] for row in self._rows]
        )

    def __mul__(self, other: BiSeries) -> BiSeries:
        self._require_same_orders(other)
        R, N = self.x_order, self.q_order
        rows = [[0] * (N + 1) for _ in range(R + 1)]
        for a1, row1 in enumerate(self._rows):
            for b1, c1 in enumerate(row1):
                if not c1:
                    continue
                for a2 in range(R - a1 + 1):
                    row2 = other._rows[a2]
                    target = rows[a1 + a2]
                    for b2 in range(N - b1 + 1):
                        c2 = row2[b2]
                        if c2:
                            target[b1 + b2] += c1 * c2
        return BiSeries(R, N, rows)

    def qshift(self, m: int) -> BiSeries:
        """Substitute x -> x q^m: the term x^a q^b moves to x^a q^(b + m a).

        Terms pushed past q_order are discarded. Negative m is rejected;
        only forward shifts keep the rectangular truncation faithful.
        """
        if m < 0:
            raise ValueError("negative q-shift is not supported")
        R, N = self.x_order, self.q_order
        rows = []
        for a, row in enumerate(self._rows):
            shift = m * a
            if shift > N:
                rows.append([0] * (N + 1))
            else:
                rows.append([0] * shift + list(row[: N + 1 - shift]))
        return BiSeries(R, N, rows)

    def mul_monomial(self, a0: int, b0: int) -> BiSeries:
        """Multiply by x^a0 q^b0, discarding terms leaving the window."""
        if a0 < 0 or b0 < 0:
            raise ValueError("monomial exponents must be nonnegative")
        R, N = self.x_order, self.q_order
        rows = [[0] * (N + 1) for _ in range(R + 1)]
        for a in range(R - a0 + 1):
            src = self._rows[a]
            dst = rows[a + a0]
            for b in range(N - b0 + 1):
                dst[b + b0] = src[b]
        return BiSeries(R, N, rows)

    def restrict(self, x_order: int, q_order: int) -> BiSeries:
        """Truncate to a smaller window."""
        if x_order > self.x_order or q_order > self.q_order:
            raise ValueError("restrict cannot enlarge the window")
        return BiSeries(
            x_order,
            q_order,
            [row[: q_order + 1] for row in self._rows[: x_order + 1]],
        )

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        """JSON form: nonzero terms only, coefficients as decimal strings."""
        return {
            "x_order": self.x_order,
            "q_order": self.q_order,
            "terms": [[a, b, str(c)] for a, b, c in self.terms()],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> BiSeries:
        try:
            R = int(obj["x_order"])
            N = int(obj["q_order"])
            raw_terms = obj["terms"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed series object: {exc}") from None
        if not isinstance(raw_terms, list):
            raise ValueError("malformed series object: terms must be a list")
        rows = [[0] * (N + 1) for _ in range(R + 1)]
        for entry in raw_terms:
            try:
                a, b, c = int(entry[0]), int(entry[1]), int(str(entry[2]), 10)
            except (TypeError, ValueError, IndexError) as exc:
                raise ValueError(f"malformed term {entry!r}: {exc}") from None
            if not (0 <= a <= R and 0 <= b <= N):
                raise ValueError(f"term ({a},{b}) outside declared window ({R},{N})")
            rows[a][b] = c
        return cls(R, N, rows)


# -- constructors -------------------------------------------------------------


def zero(x_order: int, q_order: int) -> BiSeries:
    return BiSeries(x_order, q_order, [[0] * (q_order + 1) for _ in range(x_order + 1)])


def one(x_order: int, q_order: int) -> BiSeries:
    rows = [[0] * (q_order + 1) for _ in range(x_order + 1)]
    rows[0][0] = 1
    return BiSeries(x_order, q_order, rows)


def from_terms(
    x_order: int, q_order: int, terms: dict[tuple[int, int], int]
) -> BiSeries:
    """Build a series from a {(a, b): coeff} mapping; out-of-window keys rejected."""
    rows = [[0] * (q_order + 1) for _ in range(x_order + 1)]
    for (a, b), c in terms.items():
        if not (0 <= a <= x_order and 0 <= b <= q_order):
            raise ValueError(f"term ({a},{b}) outside window ({x_order},{q_order})")
        rows[a][b] = c
    return BiSeries(x_order, q_order, rows)


def monomial(a: int, b: int, x_order: int, q_order: int) -> BiSeries:
    return from_terms(x_order, q_order, {(a, b): 1})


def invert_one_minus_q_power(m: int, x_order: int, q_order: int) -> BiSeries:
    """The geometric series 1 + q^m + q^2m + ..., the exact inverse of 1 - q^m.

    Within the window, (1 - q^m) * result == 1 holds identically.
    """
    if m < 1:
        raise ValueError("need m >= 1: 1 - q^0 = 0 has no inverse")
    rows = [[0] * (q_order + 1) for _ in range(x_order + 1)]
    for b in range(0, q_order + 1, m):
        rows[0][b] = 1
    return BiSeries(x_order, q_order, rows)


def specialize_x(series: BiSeries, mode: str) -> tuple[BiSeries, int]:
    """Specialize the x variable, producing a univariate q-series.

    mode "x=1" sums coefficients over the x-degree at each fixed q-power;
    nothing can be dropped. mode "x=q" sends x^a q^b to q^(a+b); terms with
    a + b beyond q_order fall off the window. Returns (series, dropped)
    where dropped counts the nonzero terms lost at the truncation boundary.
    The caller decides whether a nonzero drop count matters.
    """
    N = series.q_order
    out = [0] * (N + 1)
    dropped = 0
    if mode == "x=1":
        for _a, b, c in series.terms():
            out[b] += c
    elif mode == "x=q":
        if series.x_order > N:
            raise ValueError("x=q specialization requires x_order <= q_order")
        for a, b, c in series.terms():
            if a + b <= N:
                out[a + b] += c
            else:
                dropped += 1
    else:
        raise ValueError(f"unknown specialization mode {mode!r}; use 'x=1' or 'x=q'")
    return BiSeries(0, N, [out]), dropped
