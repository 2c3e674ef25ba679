"""Exact simplicial homology over Q or GF(p), and the recognition predicates
built on it: homology sphere/ball/manifold, orientability, Eulerian and
semi-Eulerian complexes.

Reduced Betti numbers are computed from ranks of augmented boundary matrices.
Everything is exact: ranks over Q use integer-preserving sparse elimination
(cross-multiplication with gcd normalization, no floating point), GF(2) uses
bitmask rows, GF(p) uses sparse rows mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .complexes import SimplicialComplex, face_key
from .errors import ArgumentOutOfRange


# ---------------------------------------------------------------------------
# fields


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (p=None) or the prime field GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ArgumentOutOfRange(f"{self.p} is not prime")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


RATIONALS = FieldSpec(None)
GF2 = FieldSpec(2)


# ---------------------------------------------------------------------------
# exact rank computation


def _rank_gf2(rows: list[int]) -> int:
    rank = 0
    basis: list[int] = []
    for row in rows:
        for b in basis:
            low = b & -b
            if row & low:
                row ^= b
        if row:
            basis.append(row)
            rank += 1
    return rank


def _rank_gfp(rows: list[dict], p: int) -> int:
    rank = 0
    pivots: list[tuple[int, dict]] = []
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        for c, prow in pivots:
            if c in row:
                f = row.pop(c)
                for cc, vv in prow.items():
                    if cc == c:
                        continue
                    nv = (row.get(cc, 0) - f * vv) % p
                    if nv:
                        row[cc] = nv
                    elif cc in row:
                        del row[cc]
        if row:
            c = min(row)
            inv = pow(row[c], p - 2, p)
            row = {cc: (vv * inv) % p for cc, vv in row.items()}
            pivots.append((c, row))
            rank += 1
    return rank


def _gcd_normalize(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for k in row:
            row[k] //= g
    return row


def _rank_exact_int(rows: list[dict]) -> int:
    """Rank over Q of an integer sparse matrix, exactly and without division.

    Each row is reduced against the registered pivot rows (one per leading
    column); a nonzero remainder becomes a new pivot.  Elimination against a
    non-unit pivot cross-multiplies and renormalizes by the gcd, so entries
    stay integral; boundary matrices almost always keep unit pivots.
    """
    pivots: dict[int, dict] = {}  # leading column -> pivot row
    rank = 0
    for row in sorted((r for r in rows if r), key=len):
        row = dict(row)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = _gcd_normalize(row)
                rank += 1
                break
            pv = p[c]
            a = row.pop(c)
            if pv == 1:
                for k, v in p.items():
                    if k == c:
                        continue
                    nv = row.get(k, 0) - a * v
                    if nv:
                        row[k] = nv
                    elif k in row:
                        del row[k]
            elif pv == -1:
                for k, v in p.items():
                    if k == c:
                        continue
                    nv = row.get(k, 0) + a * v
                    if nv:
                        row[k] = nv
                    elif k in row:
                        del row[k]
            else:
                g = gcd(a, pv)
                mr, mp = pv // g, a // g
                for k in row:
                    row[k] *= mr
                for k, v in p.items():
                    if k == c:
                        continue
                    nv = row.get(k, 0) - mp * v
                    if nv:
                        row[k] = nv
                    elif k in row:
                        del row[k]
                _gcd_normalize(row)
    return rank


def matrix_rank(rows: list[dict], field: FieldSpec) -> int:
    """Exact rank of a sparse integer matrix over the given field."""
    if field.is_rationals:
        return _rank_exact_int(rows)
    if field.p == 2:
        packed = []
        for r in rows:
            m = 0
            for c, v in r.items():
                if v % 2:
                    m |= 1 << c
            packed.append(m)
        return _rank_gf2(packed)
    return _rank_gfp(rows, field.p)


# ---------------------------------------------------------------------------
# boundary matrices and Betti numbers


def _boundary_rows(faces_k: list, index_km1: dict) -> list[dict]:
    """Columns = k-faces: emit row dicts keyed by (k-1)-face index, one row per
    k-face (rank is transpose-invariant)."""
    rows = []
    for f in faces_k:
        row = {}
        for j in range(len(f)):
            sub = f[:j] + f[j + 1:]
            row[index_km1[sub]] = -1 if j % 2 else 1
        rows.append(row)
    return rows


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers (beta_-1, beta_0, ..., beta_{d-1}) over a field."""

    field: FieldSpec
    reduced_betti: tuple

    def get(self, i: int) -> int:
        """Reduced Betti number in dimension i (i from -1); 0 outside range."""
        j = i + 1
        if 0 <= j < len(self.reduced_betti):
            return self.reduced_betti[j]
        return 0

    @property
    def top_dim(self) -> int:
        return len(self.reduced_betti) - 2

    def alternating_sum(self) -> int:
        return sum((-1) ** (j - 1) * b for j, b in enumerate(self.reduced_betti))

    def positive_range(self) -> tuple:
        """(beta_0, ..., beta_{d-1}) without the empty-face slot."""
        return self.reduced_betti[1:]

    def is_sphere(self, dim: int) -> bool:
        """Exactly the reduced homology of S^dim (dim may be -1)."""
        if self.top_dim != dim:
            return False
        want = tuple(1 if i == dim else 0 for i in range(-1, dim + 1))
        return self.reduced_betti == want

    def is_point(self) -> bool:
        return all(b == 0 for b in self.reduced_betti)


def betti(K: SimplicialComplex, field: FieldSpec = RATIONALS) -> BettiVector:
    """Reduced Betti numbers of K via exact ranks of boundary matrices."""
    d = K.dim
    if d == -1:  # only the empty face: reduced homology of the (-1)-sphere
        return BettiVector(field, (1,))
    faces_by_dim = [sorted(K.all_faces(i), key=face_key) for i in range(0, d + 1)]
    ranks = [0] * (d + 2)  # ranks[k] = rank of boundary_k, k = 0..d
    ranks[0] = 1  # augmentation: every vertex maps to the empty face
    for k in range(1, d + 1):
        index = {f: i for i, f in enumerate(faces_by_dim[k - 1])}
        rows = _boundary_rows(faces_by_dim[k], index)
        ranks[k] = matrix_rank(rows, field)
    values = [0]  # beta_-1 = 0 for nonempty complexes
    for i in range(0, d + 1):
        fi = len(faces_by_dim[i])
        values.append(fi - ranks[i] - ranks[i + 1])
    return BettiVector(field, tuple(values))


def euler_characteristic(K: SimplicialComplex) -> int:
    """Unreduced Euler characteristic, the alternating face-count sum."""
    fv = K.f_vector
    return sum((-1) ** i * fv[i + 1] for i in range(0, K.dim + 1))


def sphere_euler(dim: int) -> int:
    """Euler characteristic of S^dim (0 for odd dim, 2 for even; 0 for S^-1)."""
    if dim < 0:
        return 0
    return 1 + (-1) ** dim


# ---------------------------------------------------------------------------
# recognition predicates


def is_homology_sphere(K: SimplicialComplex, field: FieldSpec = RATIONALS) -> bool:
    """Every link, including the whole complex as the link of the empty face,
    has the reduced homology of a sphere of the matching dimension."""
    K.require_pure("homology sphere test")
    if not betti(K, field).is_sphere(K.dim):
        return False
    for rho in K.faces():
        if not rho:
            continue
        L = K.link(rho)
        if not betti(L, field).is_sphere(K.dim - len(rho)):
            return False
    return True


def is_homology_ball(K: SimplicialComplex, field: FieldSpec = RATIONALS) -> bool:
    """Homology of a point, with links that are spheres or balls as demanded
    of a homology manifold, and nonempty boundary."""
    K.require_pure("homology ball test")
    if not betti(K, field).is_point():
        return False
    rep = manifold_report(K, field, require_connected=False)
    return rep.is_homology_manifold and rep.boundary is not None


@dataclass(frozen=True)
class ManifoldReport:
    is_homology_manifold: bool
    boundary: SimplicialComplex | None  # None when empty
    orientable: bool
    closed: bool
    witness: tuple | None  # a face whose link fails, when not a manifold
    field: FieldSpec


def _link_class(K: SimplicialComplex, rho, field: FieldSpec) -> str:
    """'sphere', 'ball', or 'bad' for the link of a nonempty face."""
    L = K.link(rho)
    expect = K.dim - len(rho)
    b = betti(L, field)
    if b.is_sphere(expect):
        return "sphere"
    if b.is_point():
        return "ball"
    return "bad"


def manifold_report(K: SimplicialComplex, field: FieldSpec = RATIONALS, require_connected: bool = True) -> ManifoldReport:
    """Check every nonempty face's link for sphere-or-ball homology.

    The boundary consists of the faces whose link has ball homology, i.e.
    vanishing top homology; ``closed`` means empty boundary and orientable.
    """
    K.require_pure("manifold recognition")
    if require_connected:
        K.require_connected("manifold recognition")
    boundary_faces = []
    for rho in K.faces():
        if not rho:
            continue
        cls = _link_class(K, rho, field)
        if cls == "bad":
            return ManifoldReport(False, None, False, False, rho, field)
        if cls == "ball":
            boundary_faces.append(rho)
    boundary = SimplicialComplex(boundary_faces) if boundary_faces else None
    orientable = _orientable(K, boundary, field)
    closed = boundary is None and orientable
    return ManifoldReport(True, boundary, orientable, closed, None, field)


def _orientable(K: SimplicialComplex, boundary: SimplicialComplex | None, field: FieldSpec) -> bool:
    """rank H_{d-1}(K, boundary) == 1, computed from the relative top kernel."""
    d = K.dim
    if d < 0:
        return True
    bfaces = set()
    if boundary is not None:
        bfaces = {f for f in boundary.faces() if f}
    top = sorted(K.all_faces(d), key=face_key)
    mid = sorted((f for f in K.all_faces(d - 1) if f not in bfaces), key=face_key) if d >= 1 else []
    index = {f: i for i, f in enumerate(mid)}
    rows = []
    for f in top:
        row = {}
        for j in range(len(f)):
            sub = f[:j] + f[j + 1:]
            if sub in index:
                row[index[sub]] = -1 if j % 2 else 1
        rows.append(row)
    r = matrix_rank(rows, field)
    return len(top) - r == 1


def is_semi_eulerian(K: SimplicialComplex) -> bool:
    """chi(link rho) = chi(S^{d-|rho|-1}) for every nonempty face rho."""
    K.require_pure("semi-Eulerian test")
    d = K.dim
    for rho in K.faces():
        if not rho:
            continue
        if euler_characteristic(K.link(rho)) != sphere_euler(d - len(rho)):
            return False
    return True


def is_eulerian(K: SimplicialComplex) -> bool:
    return is_semi_eulerian(K) and euler_characteristic(K) == sphere_euler(K.dim)
