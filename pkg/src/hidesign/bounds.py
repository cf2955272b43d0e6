"""Fisher-type cardinality lower bound b_{n,t} and its large-t limit.

For a harmonic-index t-design X on S^{n-1}, comparing the double kernel sum
of c + Q_{n,t} with its diagonal part gives |X| >= b_{n,t} := 1 + dim/c,
where c = -min of Q_{n,t} on [-1,1] and dim is the harmonic dimension.
The large-t behaviour is governed by Bessel functions via the Mehler-Heine
scaling of the kernels.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .exactnum import QuadExt
from .orthopoly import KernelSpec, bessel_first_zero, bessel_j, dim_harmonic, q_min

__all__ = [
    "BoundReport",
    "AsymptoteReport",
    "fisher_bound",
    "bound_table",
    "asymptotic_bound",
    "tight_inner_product",
    "format_bound",
    "table_text",
    "table_csv",
    "table_json",
]

INTEGRALITY_TOL = 1e-9
ODD_T_NOTE = "odd degree: any antipodal pair is a design, so the minimum size is 2"


@dataclass(frozen=True)
class BoundReport:
    """Fisher-type bound b = 1 + dim/c at one (n, t)."""

    n: int
    t: int
    c: float
    b: float
    argmin: float
    integral: bool
    closed_form: Optional[Fraction]  # exact value, available for t in {2, 4}
    note: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "c": self.c,
            "b": self.b,
            "argmin": self.argmin,
            "integral": self.integral,
            "closed_form": str(self.closed_form) if self.closed_form is not None else None,
            "note": self.note,
        }


def fisher_bound(n: int, t: int) -> BoundReport:
    """Compute b_{n,t}; odd t is allowed and annotated (two points suffice)."""
    if n < 2:
        raise ValueError(f"ambient dimension must be >= 2, got {n}")
    if t < 1:
        raise ValueError(f"degree must be >= 1, got {t}")
    report = q_min(KernelSpec(n, t))
    b = 1 + dim_harmonic(n, t) / report.c
    closed: Optional[Fraction] = None
    if t == 2:
        closed = Fraction(n)
    elif t == 4:
        closed = Fraction((n + 1) * (n + 2), 6)
    return BoundReport(
        n=n,
        t=t,
        c=report.c,
        b=b,
        argmin=report.argmin,
        integral=abs(b - round(b)) < INTEGRALITY_TOL,
        closed_form=closed,
        note=ODD_T_NOTE if t % 2 else None,
    )


def bound_table(n_values: Iterable[int], t_values: Iterable[int]) -> list[BoundReport]:
    """Grid of bound reports, iterated with t outermost (one row per degree)."""
    n_list, t_list = list(n_values), list(t_values)
    if not n_list or not t_list:
        raise ValueError("empty range")
    return [fisher_bound(n, t) for t in t_list for n in n_list]


def format_bound(b: float, decimals: int = 2) -> str:
    """Display convention for tabulated bounds.

    Integral values print bare; others are truncated (not rounded) after
    ``decimals`` fractional digits and suffixed with "..".  When the kept
    digits are all zero, more digits are appended until a nonzero one
    appears, so 27.00401... prints as "27.004.." rather than hiding its
    fractional part.
    """
    if abs(b - round(b)) < INTEGRALITY_TOL:
        return str(round(b))
    whole = f"{b:.14f}"
    intpart, frac = whole.split(".")
    k = decimals
    while k < len(frac) and set(frac[:k]) == {"0"}:
        k += 1
    return f"{intpart}.{frac[:k]}.."


def table_text(reports: list[BoundReport], truncate: Optional[int] = None) -> str:
    """Render the grid as aligned text, one row per degree t."""
    n_values = sorted({r.n for r in reports})
    t_values = sorted({r.t for r in reports})
    cell = {(r.n, r.t): r for r in reports}

    def show(r: BoundReport) -> str:
        return format_bound(r.b, truncate) if truncate is not None else format(r.b, ".10g")

    header = ["t\\n"] + [str(n) for n in n_values]
    rows = [header]
    for t in t_values:
        rows.append([str(t)] + [show(cell[(n, t)]) for n in n_values])
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in rows]
    notes = sorted({r.note for r in reports if r.note})
    return "\n".join(lines + [f"note: {n}" for n in notes])


def table_csv(reports: list[BoundReport]) -> str:
    """CSV with columns n,t,c,b,b_printed,integral."""
    out = io.StringIO()
    out.write("n,t,c,b,b_printed,integral\n")
    for r in reports:
        out.write(
            f"{r.n},{r.t},{format(r.c, '.17g')},{format(r.b, '.17g')},"
            f"{format_bound(r.b)},{str(r.integral).lower()}\n"
        )
    return out.getvalue()


def table_json(reports: list[BoundReport]) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=2)


@dataclass(frozen=True)
class AsymptoteReport:
    """Large-t description of b_{n,t} in terms of Bessel data.

    With alpha = (n-3)/2, F_n(z) = (z/2)^(-alpha) J_alpha(z) and j1 the
    first positive zero of J_{alpha+1}, the scaled kernel minimum converges
    to F_n(j1) < 0.  ``limit`` is the conventional value 1 - 1/F_n(j1); the
    sequence b_{n,t} itself converges to ``limit_corrected`` =
    1 - 1/(Gamma(alpha+1) * F_n(j1)), because the harmonic dimension grows
    like t^alpha / Gamma(alpha+1) once the binomial C(t+alpha, t) is
    expanded, not like t^alpha.  The two agree exactly when alpha is 0 or 1
    (n = 3 or 5).
    """

    n: int
    j1: float
    Fvalue: float
    limit: float
    limit_corrected: float

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "j1": self.j1,
            "F": self.Fvalue,
            "limit": self.limit,
            "limit_corrected": self.limit_corrected,
            "equiangular_absolute_bound": self.n * (self.n + 1) // 2,
        }


def asymptotic_bound(n: int) -> AsymptoteReport:
    """Evaluate the Bessel-function limit data of b_{n,t} for fixed n >= 3."""
    if n < 3:
        raise ValueError(f"asymptote requires n >= 3, got {n}")
    alpha = (n - 3) / 2
    j1 = bessel_first_zero((n - 1) / 2)
    F = (j1 / 2) ** (-alpha) * bessel_j(alpha, j1)
    return AsymptoteReport(
        n=n,
        j1=j1,
        Fvalue=F,
        limit=1 - 1 / F,
        limit_corrected=1 - 1 / (math.gamma(alpha + 1) * F),
    )


def tight_inner_product(n: int) -> QuadExt:
    """The only inner product +-alpha a minimum-size degree-4 design can have.

    alpha = sqrt(3/(n+4)), returned exactly as an element of Q(sqrt(d)).
    """
    if n < 2:
        raise ValueError(f"ambient dimension must be >= 2, got {n}")
    return QuadExt.sqrt(Fraction(3, n + 4))
