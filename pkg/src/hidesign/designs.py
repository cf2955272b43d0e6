"""Point sets on spheres: generators, kernel-criterion verification, lifting.

A finite set X on S^{n-1} annihilates every degree-t harmonic polynomial
exactly when the double kernel sum sum_{x,y in X} Q_{n,t}(<x,y>) vanishes,
since the addition formula writes that sum as a sum of squares.  Everything
here reduces to that one scalar criterion plus explicit coordinate
constructions.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .exactnum import RationalPoly
from .orthopoly import KernelSpec, dim_harmonic, q_eval

__all__ = [
    "InvalidPointSetError",
    "PointSet",
    "KernelCertificate",
    "InnerProductSet",
    "verify_harmonic_index",
    "verify_spherical_design",
    "harmonic_index_spectrum",
    "inner_product_set",
    "lift_design",
    "generate",
    "list_generators",
    "separated_component_sums",
    "eval_h4_basis_sum",
    "FIVE_POINT_Z_OCTICS",
    "FIVE_POINT_Z_MINPOLY",
    "FIVE_POINT_Z_SCALE",
]

NORM_TOL = 1e-12
DISTINCT_TOL = 1e-9
DEFAULT_VERIFY_TOL = 1e-9
GOLDEN = (1 + math.sqrt(5)) / 2


class InvalidPointSetError(ValueError):
    """A point-set invariant (unit norm, distinctness, nonemptiness) failed."""


@dataclass(frozen=True)
class PointSet:
    """Finite list of unit vectors in R^dim with optional labels and provenance.

    Invariants checked at construction: nonempty; every point has unit norm
    within 1e-12; points are pairwise distinct (minimum distance > 1e-9).
    The coordinate array is made read-only.
    """

    dim: int
    points: np.ndarray
    labels: Optional[tuple[str, ...]] = None
    source: str = ""

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] == 0:
            raise InvalidPointSetError("point set must be a nonempty list of vectors")
        if pts.shape[1] != self.dim:
            raise InvalidPointSetError(
                f"points have {pts.shape[1]} coordinates, expected dim={self.dim}"
            )
        norms = np.linalg.norm(pts, axis=1)
        worst = np.abs(norms - 1.0).max()
        if worst > NORM_TOL:
            raise InvalidPointSetError(
                f"point norms deviate from 1 by up to {worst:.3e} (tolerance {NORM_TOL:g})"
            )
        if len(pts) > 1:
            diff = pts[:, None, :] - pts[None, :, :]
            dist = np.linalg.norm(diff, axis=2)
            np.fill_diagonal(dist, np.inf)
            dmin = dist.min()
            if dmin <= DISTINCT_TOL:
                raise InvalidPointSetError(
                    f"points are not pairwise distinct (min distance {dmin:.3e})"
                )
        if self.labels is not None and len(self.labels) != len(pts):
            raise InvalidPointSetError("label count does not match point count")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return self.points.shape[0]

    def gram(self) -> np.ndarray:
        return self.points @ self.points.T

    def transformed(self, rotation: np.ndarray) -> "PointSet":
        """Apply an orthogonal matrix to every point."""
        return PointSet(self.dim, self.points @ np.asarray(rotation).T,
                        self.labels, self.source + "+rotated")

    def with_flipped(self, indices: Iterable[int]) -> "PointSet":
        """Replace the chosen points by their antipodes."""
        pts = self.points.copy()
        for i in indices:
            pts[i] = -pts[i]
        return PointSet(self.dim, pts, None, self.source + "+flipped")

    def union_with_antipodes(self) -> "PointSet":
        return PointSet(self.dim, np.vstack([self.points, -self.points]),
                        None, self.source + "+antipodes")

    # -- JSON file format ---------------------------------------------------
    # {"dim": n, "points": [["...", ...], ...], "labels": [...] | null,
    #  "source": "..."}; coordinates are decimal strings with 17 significant
    # digits so files round-trip bit-exactly.

    def to_json(self) -> str:
        body = {
            "dim": self.dim,
            "points": [[format(v, ".17g") for v in row] for row in self.points],
            "labels": list(self.labels) if self.labels is not None else None,
            "source": self.source,
        }
        return json.dumps(body, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "PointSet":
        try:
            body = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidPointSetError(f"not valid JSON: {exc}") from exc
        if not isinstance(body, dict) or "dim" not in body or "points" not in body:
            raise InvalidPointSetError('expected an object with "dim" and "points"')
        try:
            pts = np.array([[float(v) for v in row] for row in body["points"]], dtype=float)
        except (TypeError, ValueError) as exc:
            raise InvalidPointSetError(f"points are not parseable numbers: {exc}") from exc
        labels = body.get("labels")
        return cls(int(body["dim"]), pts,
                   tuple(labels) if labels is not None else None,
                   str(body.get("source", "")))

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json() + "\n")

    @classmethod
    def load(cls, path) -> "PointSet":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(fh.read())


@dataclass(frozen=True)
class KernelCertificate:
    """Kernel-sum verification result, one row per checked degree.

    relative_residual = |raw_sum| / (|X| * Q(1)), the raw sum divided by its
    diagonal contribution; a degree passes when the residual is <= tol.
    """

    dim: int
    degrees: tuple[int, ...]
    raw_sums: tuple[float, ...]
    residuals: tuple[float, ...]
    tol: float

    @property
    def passes(self) -> tuple[bool, ...]:
        return tuple(r <= self.tol for r in self.residuals)

    @property
    def passed(self) -> bool:
        return all(self.passes)

    def residual_at(self, degree: int) -> float:
        return self.residuals[self.degrees.index(degree)]

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "degrees": list(self.degrees),
            "raw_sums": list(self.raw_sums),
            "relative_residuals": list(self.residuals),
            "tolerance": self.tol,
            "verdicts": ["pass" if p else "fail" for p in self.passes],
            "passed": self.passed,
        }


def _kernel_sum(gram: np.ndarray, n: int, t: int) -> float:
    return float(q_eval(KernelSpec(n, t), gram).sum())


def verify_harmonic_index(X: PointSet, t: int, tol: float = DEFAULT_VERIFY_TOL) -> KernelCertificate:
    """Check the single-degree kernel criterion for X at degree t."""
    if t < 1:
        raise ValueError("degree must be >= 1")
    raw = _kernel_sum(X.gram(), X.dim, t)
    residual = abs(raw) / (len(X) * dim_harmonic(X.dim, t))
    return KernelCertificate(X.dim, (t,), (raw,), (residual,), tol)


def verify_spherical_design(X: PointSet, t: int, tol: float = DEFAULT_VERIFY_TOL) -> KernelCertificate:
    """Check the kernel criterion at every degree 1..t (full design test)."""
    if t < 1:
        raise ValueError("degree must be >= 1")
    gram = X.gram()
    m = len(X)
    raws, residuals = [], []
    for j in range(1, t + 1):
        raw = _kernel_sum(gram, X.dim, j)
        raws.append(raw)
        residuals.append(abs(raw) / (m * dim_harmonic(X.dim, j)))
    return KernelCertificate(X.dim, tuple(range(1, t + 1)), tuple(raws), tuple(residuals), tol)


def harmonic_index_spectrum(X: PointSet, t_max: int, tol: float = DEFAULT_VERIFY_TOL) -> list[int]:
    """Degrees t <= t_max at which X passes the kernel criterion."""
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    gram = X.gram()
    m = len(X)
    out = []
    for t in range(1, t_max + 1):
        raw = _kernel_sum(gram, X.dim, t)
        if abs(raw) / (m * dim_harmonic(X.dim, t)) <= tol:
            out.append(t)
    return out


@dataclass(frozen=True)
class InnerProductSet:
    """Distinct off-diagonal inner products of a point set, clustered."""

    values: tuple[float, ...]
    multiplicities: tuple[int, ...]
    symmetric: bool
    merge_tol: float


def inner_product_set(X: PointSet, merge_tol: float = 1e-8) -> InnerProductSet:
    """Cluster the inner products <x,y>, x != y, at the given tolerance.

    Multiplicities count unordered pairs.  The set is flagged symmetric when
    every value has its negative present (within the merge tolerance).
    """
    gram = X.gram()
    iu = np.triu_indices(len(X), k=1)
    vals = np.sort(gram[iu])
    clusters: list[list[float]] = []
    for v in vals:
        if clusters and v - clusters[-1][-1] <= merge_tol:
            clusters[-1].append(v)
        else:
            clusters.append([v])
    centers = tuple(float(np.mean(c)) for c in clusters)
    mults = tuple(len(c) for c in clusters)
    # -1 counts as self-paired: its mirror +1 cannot occur between distinct
    # unit vectors, yet antipodally closed sets always produce -1
    symmetric = all(
        abs(c + 1) <= merge_tol or any(abs(c + other) <= merge_tol for other in centers)
        for c in centers
    )
    return InnerProductSet(centers, mults, symmetric, merge_tol)


def lift_design(base: PointSet, t: int, r: float, root_tol: float = 1e-9) -> PointSet:
    """Lift a spherical t-design on S^(n-2) to a harmonic-index set on S^(n-1).

    The lifted set is {(r, sqrt(1-r^2) x) : x in base} where r must be a root
    of Q_{n,t} with n = base.dim + 1; the kernel components separate along a
    product basis and the base design kills every component except the purely
    radial one, which the root condition kills.  The base is trusted to be a
    spherical t-design; only the root condition is checked here, at
    |Q(r)| < root_tol * Q(1).
    """
    n = base.dim + 1
    if abs(r) > 1:
        raise ValueError(f"radius must lie in [-1, 1], got {r}")
    spec = KernelSpec(n, t)
    qr = q_eval(spec, r)
    if abs(qr) >= root_tol * dim_harmonic(n, t):
        raise ValueError(
            f"r={r!r} is not a root of the degree-{t} kernel in dimension {n} "
            f"(|Q(r)| = {abs(qr):.3e})"
        )
    scale = math.sqrt(1 - r * r)
    pts = np.hstack([np.full((len(base), 1), float(r)), scale * base.points])
    return PointSet(n, pts, base.labels, f"lift(t={t}, r={r!r}) of {base.source or 'base'}")


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def _lex_positive_half(points: np.ndarray) -> np.ndarray:
    """One representative per antipodal pair: first nonzero coordinate > 0."""
    reps = []
    seen = set()
    for p in points:
        first = next((c for c in p if abs(c) > 1e-12), 1.0)
        q = p if first > 0 else -p
        key = tuple(np.round(q, 12))
        if key not in seen:
            seen.add(key)
            reps.append(q)
    reps.sort(key=lambda v: tuple(v))
    return np.array(reps)


def regular_polygon(m: int) -> PointSet:
    """Regular m-gon on the unit circle; a spherical (m-1)-design."""
    if m < 2:
        raise ValueError("polygon needs at least 2 vertices")
    ang = 2 * np.pi * np.arange(m) / m
    return PointSet(2, np.column_stack([np.cos(ang), np.sin(ang)]), None, f"regular_polygon({m})")


def two_point_s1(e: int, j: int) -> PointSet:
    """Two unit vectors at angle j*pi/(2e), j odd; a harmonic-index 2e design."""
    if e < 1:
        raise ValueError("e must be >= 1")
    if j % 2 == 0:
        raise ValueError("j must be odd")
    theta = j * math.pi / (2 * e)
    pts = np.array([[1.0, 0.0], [math.cos(theta), math.sin(theta)]])
    return PointSet(2, pts, None, f"two_point_s1(e={e}, j={j})")


def cross_polytope_half(n: int) -> PointSet:
    """Orthonormal basis e_1..e_n, an antipodal half of the cross-polytope."""
    if n < 2:
        raise ValueError("dimension must be >= 2")
    return PointSet(n, np.eye(n), None, f"cross_polytope_half({n})")


def simplex(n: int) -> PointSet:
    """Regular simplex: n+1 unit vectors in R^n with all inner products -1/n."""
    if n < 2:
        raise ValueError("dimension must be >= 2")
    # Helmert basis of the hyperplane orthogonal to the all-ones vector
    H = np.zeros((n, n + 1))
    for k in range(1, n + 1):
        H[k - 1, :k] = 1.0
        H[k - 1, k] = -k
        H[k - 1] /= math.sqrt(k * (k + 1))
    pts = (H * math.sqrt((n + 1) / n)).T
    return PointSet(n, pts, None, f"simplex({n})")


def icosahedron_half() -> PointSet:
    """Six vertices of a regular icosahedron, one per antipodal pair."""
    verts = []
    for s1 in (1.0, -1.0):
        for s2 in (1.0, -1.0):
            v = np.array([0.0, s1, s2 * GOLDEN])
            for r in range(3):
                verts.append(np.roll(v, r))
    verts = np.array(verts) / math.sqrt(1 + GOLDEN ** 2)
    return PointSet(3, _lex_positive_half(verts), None, "icosahedron_half")


def e8_half() -> PointSet:
    """120 points on S^7: an antipodal half of the 240 unit-scaled E8 roots.

    The full system is the 112 vectors (+-e_i +- e_j)/sqrt(2) and the 128
    vectors with all coordinates +-1/2 and an even number of minus signs,
    scaled to unit norm.
    """
    roots = []
    for i in range(8):
        for j in range(i + 1, 8):
            for si in (1.0, -1.0):
                for sj in (1.0, -1.0):
                    v = np.zeros(8)
                    v[i], v[j] = si, sj
                    roots.append(v)
    for bits in range(256):
        signs = np.array([1.0 if (bits >> k) & 1 else -1.0 for k in range(8)])
        if (signs < 0).sum() % 2 == 0:
            roots.append(signs * 0.5)
    roots = np.array(roots) / math.sqrt(2)
    return PointSet(8, _lex_positive_half(roots), None, "e8_half")


def cell600_half() -> PointSet:
    """60 points on S^3: an antipodal half of the 120 vertices of the 600-cell.

    Standard presentation: 8 permutations of (+-1,0,0,0), the 16 vectors
    (+-1/2,...,+-1/2), and 96 even permutations of
    (+-phi, +-1, +-1/phi, 0)/2, already unit length.
    """
    verts = []
    for i in range(4):
        for s in (1.0, -1.0):
            v = np.zeros(4)
            v[i] = s
            verts.append(v)
    for bits in range(16):
        verts.append(np.array([0.5 if (bits >> k) & 1 else -0.5 for k in range(4)]))
    base = np.array([GOLDEN / 2, 0.5, 1 / (2 * GOLDEN), 0.0])
    for perm in _even_permutations(4):
        for s1 in (1.0, -1.0):
            for s2 in (1.0, -1.0):
                for s3 in (1.0, -1.0):
                    v = np.zeros(4)
                    v[perm[0]] = s1 * base[0]
                    v[perm[1]] = s2 * base[1]
                    v[perm[2]] = s3 * base[2]
                    verts.append(v)
    return PointSet(4, _lex_positive_half(np.array(verts)), None, "cell600_half")


def _even_permutations(k: int) -> list[tuple[int, ...]]:
    from itertools import permutations

    out = []
    for p in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if p[i] > p[j])
        if inv % 2 == 0:
            out.append(p)
    return out


def _x0(sign: int) -> PointSet:
    """The five-point harmonic-index 4-design on S^2 with first coordinate
    sqrt(525 + sign*70*sqrt(30))/35 (sign=+1 gives the small pentagon)."""
    s30 = math.sqrt(30)
    s5 = math.sqrt(5)
    r = math.sqrt(525 + sign * 70 * s30) / 35
    w = math.sqrt(700 - sign * 70 * s30) / 35
    cos72, sin72 = (s5 - 1) / 4, math.sqrt(10 + 2 * s5) / 4
    cos144, sin144 = -(s5 + 1) / 4, math.sqrt(10 - 2 * s5) / 4
    pts = np.array([
        [r, w, 0.0],
        [r, w * cos72, w * sin72],
        [r, w * cos144, w * sin144],
        [r, w * cos144, -w * sin144],
        [r, w * cos72, -w * sin72],
    ])
    return PointSet(3, pts, None, "x0_plus" if sign > 0 else "x0_minus")


def x0_plus() -> PointSet:
    return _x0(+1)


def x0_minus() -> PointSet:
    return _x0(-1)


_GENERATORS = {
    "regular_polygon": regular_polygon,
    "two_point_s1": two_point_s1,
    "cross_polytope_half": cross_polytope_half,
    "simplex": simplex,
    "icosahedron_half": icosahedron_half,
    "e8_half": e8_half,
    "cell600_half": cell600_half,
    "x0_plus": x0_plus,
    "x0_minus": x0_minus,
}


def list_generators() -> list[str]:
    return sorted(_GENERATORS)


def generate(kind: str, **params) -> PointSet:
    """Build one of the named point sets; hyphens in the name are accepted."""
    key = kind.replace("-", "_")
    if key not in _GENERATORS:
        raise ValueError(f"unknown generator {kind!r}; known: {', '.join(list_generators())}")
    return _GENERATORS[key](**params)


# ---------------------------------------------------------------------------
# separated-basis diagnostics for the lift (base sphere S^1 only)
# ---------------------------------------------------------------------------


def separated_component_sums(base: PointSet, r: float, t: int) -> list[float]:
    """Component magnitudes of the lift of a circle design, one per j = 0..t.

    Lifting X on S^1 to {(r, sqrt(1-r^2) x)} on S^2, the degree-t harmonics
    split into blocks indexed by j: the block-j functions restrict to
    (cos j*theta, sin j*theta) * (1-s^2)^(j/2) * Q_{2j+3, t-j}(s) with s = r
    fixed.  Returned is the Euclidean magnitude of the sum over the lifted
    set for each block; the j = 0 entry equals |X| * |Q_{3,t}(r)|.  The sums
    are raw (unnormalized) magnitudes.
    """
    if base.dim != 2:
        raise ValueError("only a base design on S^1 (dim 2) is supported")
    if abs(r) > 1:
        raise ValueError("radius must lie in [-1, 1]")
    theta = np.arctan2(base.points[:, 1], base.points[:, 0])
    out = []
    for j in range(t + 1):
        radial = (1 - r * r) ** (j / 2) * q_eval(KernelSpec(3 + 2 * j, t - j), r)
        if j == 0:
            out.append(abs(len(base) * radial))
        else:
            c = float(np.cos(j * theta).sum())
            s = float(np.sin(j * theta).sum())
            out.append(math.hypot(c, s) * abs(radial))
    return out


# ---------------------------------------------------------------------------
# explicit degree-4 harmonic basis on R^3 (independent verification route)
# ---------------------------------------------------------------------------


def eval_h4_basis_sum(X: PointSet) -> np.ndarray:
    """Sums over X of an explicit 9-element basis of the degree-4 harmonics
    on R^3.  All nine sums vanish exactly when X is a harmonic-index
    4-design, giving an oracle for the kernel criterion at (n, t) = (3, 4).
    """
    if X.dim != 3:
        raise ValueError("the explicit degree-4 basis lives on R^3")
    x, y, z = X.points[:, 0], X.points[:, 1], X.points[:, 2]
    basis = [
        x**3 * y - x * y**3,
        x**3 * z - 3 * x * y**2 * z,
        3 * x**2 * y * z - y**3 * z,
        x**4 - 6 * x**2 * y**2 + y**4,
        4 * x * z**3 - 3 * x**3 * z - 3 * x * y**2 * z,
        4 * y * z**3 - 3 * x**2 * y * z - 3 * y**3 * z,
        6 * x * y * z**2 - x**3 * y - x * y**3,
        6 * x**2 * z**2 - x**4 - 6 * y**2 * z**2 + y**4,
        8 * z**4 - 24 * x**2 * z**2 - 24 * y**2 * z**2 + 3 * x**4 + 6 * x**2 * y**2 + 3 * y**4,
    ]
    return np.array([float(b.sum()) for b in basis])


# ---------------------------------------------------------------------------
# exact data for the five-point analysis on S^2
# ---------------------------------------------------------------------------

# In the normalized position (first point at (1,0,0), second in the xy-plane),
# the z-coordinate of the last point of any 5-point harmonic-index 4-design
# satisfies the monic degree-16 polynomial below.  Over Q it splits into the
# two even octics, each with eight simple real roots.

FIVE_POINT_Z_OCTICS = (
    RationalPoly([9, 0, -126, 0, 627, 0, -1302, 0, 931]),
    RationalPoly([9, 0, -144, 0, 732, 0, -1428, 0, 931]),
)

FIVE_POINT_Z_SCALE = 866761  # = 931^2, the product of the octics' leading terms

FIVE_POINT_Z_MINPOLY = RationalPoly([
    Fraction(81, 866761),
    0,
    Fraction(-2430, 866761),
    0,
    Fraction(30375, 866761),
    0,
    Fraction(-207090, 866761),
    0,
    Fraction(843138, 866761),
    0,
    Fraction(-299970, 123823),
    0,
    Fraction(63765, 17689),
    0,
    Fraction(-390, 133),
    0,
    1,
])
