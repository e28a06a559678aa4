"""The catalog of involutions of SO0(2,m) commuting with the Cartan involution.

Each entry carries the literal conjugating matrix; everything else (fixed
subalgebras, diagram data, parities, holomorphy) is derived from it by exact
computation.  Derivations such as the quarter-turn exponential identities are
verification targets, not constructors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .chevalley import build_chevalley
from .exact import GaussianRational, Q
from .liealg import (
    ExactMatrix,
    bracket,
    build_context,
    g0_standard_basis,
    h_generator,
    in_g,
    standard_coordinates,
    theta,
)
from .realform import RealBasis
from .roots import Root, RootSystem, T0, T0_PRIME, build_root_system

SIGMA = "sigma"  # diag(-I_2p, I_rest), holomorphic
SIGMA_J = "sigma_J"  # J-block conjugators sigma_{l-1}, sigma_l (family D)
SIGMA_0 = "sigma_0"  # sigma_{l-1} sigma_l at l = 3
SIGMA_0_PRIME = "sigma'_0"  # alternating diagonal at l = 3
TAU = "tau"
TAU_PRIME = "tau'"
MU = "mu"
SIGMA_1 = "sigma_1"  # m = 2 only
ETA = "eta"  # m = 2 only

HOLOMORPHIC = "holomorphic"
ANTIHOLOMORPHIC = "antiholomorphic"
MIXED = "mixed"


@dataclass(frozen=True)
class Involution:
    m: int
    family: str
    kind: str
    param: int | None
    name: str
    variant: str
    conjugator: ExactMatrix
    theta_composed: bool = False

    def apply(self, x: ExactMatrix) -> ExactMatrix:
        c = self.conjugator
        return c @ x @ c.transpose()

    def composed_with_theta(self) -> "Involution":
        ctx = build_context(self.m)
        if self.theta_composed:
            name = self.name.removesuffix("*theta")
        else:
            name = self.name + "*theta"
        return Involution(
            m=self.m,
            family=self.family,
            kind=self.kind,
            param=self.param,
            name=name,
            variant=self.variant,
            conjugator=self.conjugator @ ctx.theta_conjugator,
            theta_composed=not self.theta_composed,
        )

    def __str__(self) -> str:
        return f"{self.name} (m={self.m})"


def _diag(values: list[int]) -> ExactMatrix:
    return ExactMatrix.diagonal(values)


def _signature_block(p: int, q: int) -> list[int]:
    return [-1] * p + [1] * q


def _j_block(p: int, q: int) -> ExactMatrix:
    """J_{p,q} = [[0, I_{p,q}], [-I_{p,q}, 0]] of size 2(p+q)."""
    size = p + q
    entries = {}
    for i in range(1, size + 1):
        s = GaussianRational(-1 if i <= p else 1)
        entries[(i, size + i)] = s
        entries[(size + i, i)] = -s
    return ExactMatrix(2 * size, entries)


def _block_diag(blocks: list[ExactMatrix]) -> ExactMatrix:
    n = sum(b.n for b in blocks)
    entries = {}
    offset = 0
    for b in blocks:
        for (i, j), v in b.entries.items():
            entries[(offset + i, offset + j)] = v
        offset += b.n
    return ExactMatrix(n, entries)


@lru_cache(maxsize=None)
def catalog(m: int) -> tuple[Involution, ...]:
    """All involutions commuting with theta (and distinct from it), in table order."""
    ctx = build_context(m)
    l, n = ctx.l, ctx.n
    out: list[Involution] = []

    def add(kind, param, name, variant, conjugator):
        out.append(
            Involution(
                m=m,
                family=ctx.family,
                kind=kind,
                param=param,
                name=name,
                variant=variant,
                conjugator=conjugator,
            )
        )

    if ctx.family == "B":
        for p in range(2, l + 1):
            add(SIGMA, p, f"sigma_{p}", T0, _diag(_signature_block(2 * p, n - 2 * p)))
        for p in range(1, l + 1):
            add(
                TAU,
                p,
                f"tau_{p}",
                T0,
                _diag([-1] + [1] * (2 * p - 1) + [-1] * (2 * l - 2 * p + 1)),
            )
        return tuple(out)

    if l == 2:
        j01 = _j_block(0, 1)
        add(SIGMA_1, 1, "sigma_1", T0, _block_diag([-j01, j01]))
        add(ETA, 1, "eta_1", T0, ExactMatrix(4, {
            (1, 3): GaussianRational(1), (2, 4): GaussianRational(1),
            (3, 1): GaussianRational(1), (4, 2): GaussianRational(1),
        }))
        add(ETA, 2, "eta_2", T0, ExactMatrix(4, {
            (1, 3): GaussianRational(-1), (2, 4): GaussianRational(1),
            (3, 1): GaussianRational(-1), (4, 2): GaussianRational(1),
        }))
        add(MU, 1, "mu_1", T0, _diag([-1, 1, 1, -1]))
        add(TAU_PRIME, 1, "tau'_1", T0, _diag([-1, -1, 1, -1]))
        add(TAU, 1, "tau_1", T0, _diag([-1, 1, -1, -1]))
        return tuple(out)

    for p in range(2, l - 1):
        add(SIGMA, p, f"sigma_{p}", T0, _diag(_signature_block(2 * p, n - 2 * p)))
    for p in range(1, l - 1):
        add(
            TAU,
            p,
            f"tau_{p}",
            T0,
            _diag([-1] + [1] * (2 * p - 1) + [-1] * (2 * l - 2 * p)),
        )
    for p in range(1, l - 1):
        add(
            MU,
            p,
            f"mu_{p}",
            T0,
            _diag([-1, 1] + [-1] * (2 * p - 2) + [1] * (2 * l - 2 * p - 1) + [-1]),
        )
    for p in range(1, l - 1):
        add(
            TAU_PRIME,
            p,
            f"tau'_{p}",
            T0,
            _diag([-1] * (2 * p) + [1] * (2 * l - 2 * p - 1) + [-1]),
        )
    j0 = _block_diag([_j_block(0, 1), _j_block(0, l - 1)])
    j0_prime = _block_diag([_j_block(0, 1), _j_block(l - 2, 1)])
    add(SIGMA_J, l, f"sigma_{l}", T0_PRIME, j0)
    add(SIGMA_J, l - 1, f"sigma_{l-1}", T0_PRIME, j0_prime)
    if l == 3:
        add(SIGMA_0, 0, "sigma_0", T0_PRIME, j0_prime @ j0)
        add(SIGMA_0_PRIME, 0, "sigma'_0", T0_PRIME, _diag([-1, 1, -1, 1, -1, 1]))
    return tuple(out)


def catalog_entry(m: int, name: str) -> Involution:
    for inv in catalog(m):
        if inv.name == name:
            return inv
    raise KeyError(f"no involution named {name!r} in the catalog for m={m}")


# -- verification ----------------------------------------------------------


@dataclass
class InvolutionReport:
    involution: str
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_involution(inv: Involution, pair_samples: int = 200) -> InvolutionReport:
    """Check the involution axioms on the standard basis of g0.

    Bracket-compatibility is checked on all basis pairs for m <= 5 and on
    seeded random pairs for larger m.
    """
    ctx = build_context(inv.m)
    report = InvolutionReport(involution=inv.name)
    c = inv.conjugator
    if not c.is_real() or not (c @ c.transpose() - ExactMatrix.identity(ctx.n)).is_zero():
        report.failures.append("conjugator is not a real orthogonal matrix")
        return report
    square = c @ c
    ident = ExactMatrix.identity(ctx.n)
    if not (square - ident).is_zero() and not (square + ident).is_zero():
        report.failures.append("conjugator squared is not +-identity")
    basis = g0_standard_basis(ctx)
    images = [inv.apply(b) for b in basis]
    for b, image in zip(basis, images):
        if not image.is_real() or not in_g(ctx, image):
            report.failures.append("involution does not preserve g0")
            break
    else:
        for b, image in zip(basis, images):
            if not (inv.apply(image) - b).is_zero():
                report.failures.append("involution squared is not the identity on g0")
                break
        for b in basis:
            if not (inv.apply(theta(ctx, b)) - theta(ctx, inv.apply(b))).is_zero():
                report.failures.append("involution does not commute with theta")
                break
        if inv.m <= 5:
            pairs = [(x, y) for i, x in enumerate(basis) for y in basis[i:]]
        else:
            rng = random.Random(20240801 + inv.m)
            pairs = [
                (rng.choice(basis), rng.choice(basis)) for _ in range(pair_samples)
            ]
        for x, y in pairs:
            if not (inv.apply(bracket(x, y)) - bracket(inv.apply(x), inv.apply(y))).is_zero():
                report.failures.append("involution is not a bracket automorphism")
                break
    return report


# -- fixed subalgebras -----------------------------------------------------


@dataclass
class FixedSubalgebra:
    g0_fixed_dim: int
    k0_fixed_dim: int
    p0_fixed_dim: int
    p0_fixed_basis: list[ExactMatrix]


def _rational_rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    mat = [row[:] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = Q(1) / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [v - f * p for v, p in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def rational_kernel(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the kernel of the matrix (rows are equations)."""
    ncols = len(rows[0]) if rows else 0
    rref, pivots = _rational_rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Q(0)] * ncols
        vec[f] = Q(1)
        for r, piv in enumerate(pivots):
            vec[piv] = -rref[r][f]
        basis.append(vec)
    return basis


def rational_det(rows: list[list[Fraction]]) -> Fraction:
    mat = [row[:] for row in rows]
    n = len(mat)
    det = Q(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if mat[i][col] != 0), None)
        if pivot is None:
            return Q(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = Q(1) / mat[col][col]
        for i in range(col + 1, n):
            if mat[i][col] != 0:
                f = mat[i][col] * inv
                mat[i] = [v - f * p for v, p in zip(mat[i], mat[col])]
    return det


def _action_on_standard_basis(inv: Involution) -> list[list[Fraction]]:
    """Matrix of the involution on g0 in the standard F/S basis (columns)."""
    ctx = build_context(inv.m)
    basis = g0_standard_basis(ctx)
    cols = []
    for b in basis:
        coords = standard_coordinates(ctx, inv.apply(b))
        col = []
        for c in coords:
            if not c.is_real():
                raise ValueError("involution image has nonreal coordinates")
            col.append(c.re)
        cols.append(col)
    n = len(basis)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def fixed_subalgebra(inv: Involution) -> FixedSubalgebra:
    """Exact eigenspace dimensions of the involution on g0 = k0 + p0."""
    ctx = build_context(inv.m)
    k_dim = ctx.dim_k0
    action = _action_on_standard_basis(inv)
    n = len(action)
    for i in range(k_dim):
        for j in range(k_dim, n):
            if action[i][j] != 0 or action[j][i] != 0:
                raise ValueError("involution mixes k0 and p0 (does it commute with theta?)")
    k_block = [[action[i][j] - (1 if i == j else 0) for j in range(k_dim)] for i in range(k_dim)]
    p_block = [
        [action[k_dim + i][k_dim + j] - (1 if i == j else 0) for j in range(n - k_dim)]
        for i in range(n - k_dim)
    ]
    k_fixed = rational_kernel(k_block)
    p_fixed = rational_kernel(p_block)
    basis = g0_standard_basis(ctx)[k_dim:]
    p_mats = []
    for vec in p_fixed:
        mat = ExactMatrix.zero(ctx.n)
        for c, b in zip(vec, basis):
            if c != 0:
                mat = mat + b.scale(GaussianRational(c))
        p_mats.append(mat)
    return FixedSubalgebra(
        g0_fixed_dim=len(k_fixed) + len(p_fixed),
        k0_fixed_dim=len(k_fixed),
        p0_fixed_dim=len(p_fixed),
        p0_fixed_basis=p_mats,
    )


# -- Vogan data ------------------------------------------------------------


@dataclass
class VoganData:
    m: int
    variant: str
    vertices: list[str]
    vertex_roots: dict[str, Root]
    action: dict[str, str]
    signs: dict[str, int]
    colors: dict[str, str]
    marks: dict[str, int]
    center_action: dict[str, str]

    def circled(self) -> frozenset[str]:
        return frozenset(v for v, s in self.signs.items() if s == -1)

    def swapped_pairs(self) -> list[tuple[str, str]]:
        seen = set()
        pairs = []
        for v, w in self.action.items():
            if v != w and (w, v) not in seen:
                seen.add((v, w))
                pairs.append((v, w))
        return pairs

    def adjacent(self, v: str, w: str) -> bool:
        return v != w and self.vertex_roots[v].dot(self.vertex_roots[w]) != 0


def _vertex_table(rs: RootSystem) -> tuple[list[str], dict[str, Root], dict[str, int]]:
    l = rs.ctx.l
    if rs.ctx.m == 2:
        labels = ["phi_1", "phi_2", "-phi_1", "-phi_2"]
        roots = {
            "phi_1": rs.simples[0],
            "phi_2": rs.simples[1],
            "-phi_1": -rs.simples[0],
            "-phi_2": -rs.simples[1],
        }
        marks = {v: 1 for v in labels}
        return labels, roots, marks
    labels = [f"phi_{j}" for j in range(1, l + 1)] + ["-delta"]
    roots = {f"phi_{j}": rs.simples[j - 1] for j in range(1, l + 1)}
    roots["-delta"] = -rs.highest_root()
    mark_values = rs.highest_root_marks()
    marks = {f"phi_{j}": mark_values[j - 1] for j in range(1, l + 1)}
    marks["-delta"] = 1
    return labels, roots, marks


def vogan_data(inv: Involution) -> VoganData:
    """Action, signs and colors on the affine-diagram vertices.

    The action permutes the simple-root spaces together with the lowest-root
    space; when a vertex is fixed the sign of the involution on that root
    space is recorded, and when two vertices are swapped only the swap is.
    """
    cb = build_chevalley(inv.m, inv.variant)
    rs = cb.rs
    for j in range(1, rs.ctx.l + 1):
        image = inv.apply(rs.cartan_generator(j))
        rs.cartan_coefficients(image)  # raises if the Cartan is not normalized
    labels, roots, marks = _vertex_table(rs)
    root_to_label = {roots[v]: v for v in labels}
    action: dict[str, str] = {}
    signs: dict[str, int] = {}
    for v in labels:
        image = inv.apply(cb.E[roots[v]])
        target, scalar = cb.scalar_action(image)
        if target not in root_to_label:
            raise ValueError(f"{inv.name} maps vertex {v} outside the diagram")
        w = root_to_label[target]
        action[v] = w
        if v == w:
            if scalar == 1:
                signs[v] = 1
            elif scalar == GaussianRational(-1):
                signs[v] = -1
            else:
                raise ValueError(f"{inv.name} acts on {v} by non-unit scalar {scalar}")
    colors = {v: ("white" if roots[v].is_compact else "black") for v in labels}
    center = {}
    if inv.m == 2:
        coweights = rs.fundamental_coweights()
        names = ["H_w1", "H_w2"]
        for i, h in enumerate(coweights):
            image = inv.apply(h)
            for j, target in enumerate(coweights):
                if (image - target).is_zero():
                    center[names[i]] = names[j]
                    break
                if (image + target).is_zero():
                    center[names[i]] = "-" + names[j]
                    break
            else:
                raise ValueError(f"{inv.name} does not permute the center lines")
    return VoganData(
        m=inv.m,
        variant=inv.variant,
        vertices=labels,
        vertex_roots=roots,
        action=action,
        signs=signs,
        colors=colors,
        marks=marks,
        center_action=center,
    )


def almost_double_parity(vd: VoganData) -> tuple[frozenset[str], int]:
    """Marked vertices O (circles plus adjacent swapped pairs) and sum parity."""
    members = set(vd.circled())
    for v, w in vd.swapped_pairs():
        if vd.adjacent(v, w):
            members.add(v)
            members.add(w)
    total = sum(vd.marks[v] for v in members)
    return frozenset(members), total % 2


# -- extendability of k0 Vogan diagrams -------------------------------------


@dataclass(frozen=True)
class K0Diagram:
    """A Vogan diagram of the compact-part Dynkin diagram D_k.

    Vertices are indexed 2..l (the compact simple roots); the center action
    says whether the sought extension fixes (+1) or swaps (-1) the two
    noncompact vertices.
    """

    m: int
    automorphism: tuple[tuple[int, int], ...]  # pairs (j, image)
    circled: frozenset[int]
    z_action: int


class MalformedDiagramError(ValueError):
    pass


def _component_split(indices: list[int], roots: dict[int, Root]) -> list[list[int]]:
    remaining = set(indices)
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            v = frontier.pop()
            for w in list(remaining - comp):
                if roots[v].dot(roots[w]) != 0:
                    comp.add(w)
                    frontier.append(w)
        comps.append(sorted(comp))
        remaining -= comp
    return comps


def extendability(diagram: K0Diagram) -> bool:
    """Whether the k0 Vogan diagram extends to a parity-even affine diagram."""
    rs = build_root_system(diagram.m, T0)
    l = rs.ctx.l
    if rs.ctx.m == 2:
        raise MalformedDiagramError("extendability requires m >= 3")
    auto = dict(diagram.automorphism)
    indices = list(range(2, l + 1))
    if sorted(auto) != indices or sorted(auto.values()) != indices:
        raise MalformedDiagramError("automorphism must permute the compact vertices")
    roots = {j: rs.simples[j - 1] for j in indices}
    for j in indices:
        if auto[auto[j]] != j:
            raise MalformedDiagramError("automorphism must have order at most 2")
        for k in indices:
            if roots[j].dot(roots[k]) != roots[auto[j]].dot(roots[auto[k]]):
                raise MalformedDiagramError("automorphism must preserve the diagram")
    for j in diagram.circled:
        if j not in indices:
            raise MalformedDiagramError(f"circled vertex {j} is not a compact vertex")
        if auto[j] != j:
            raise MalformedDiagramError("circled vertices must be fixed")
    for comp in _component_split(indices, roots):
        comp_highest = _subsystem_highest(rs, comp)
        for j in diagram.circled:
            if j in comp and comp_highest[j] not in (1, 2):
                raise MalformedDiagramError(
                    f"circled vertex {j} has forbidden mark {comp_highest[j]}"
                )
        if len(diagram.circled & set(comp)) > 1:
            raise MalformedDiagramError("at most one circled vertex per component")
    if diagram.z_action not in (1, -1):
        raise MalformedDiagramError("center action must be +1 or -1")

    # The affine extension is forced: the given map on compact vertices plus
    # the black pair fixed (z = id) or interchanged (z = -id).
    delta = rs.highest_root()
    vroots = {f"phi_{j}": rs.simples[j - 1] for j in range(1, l + 1)}
    vroots["-delta"] = -delta
    marks = {f"phi_{j}": rs.highest_root_marks()[j - 1] for j in range(1, l + 1)}
    marks["-delta"] = 1
    g = {f"phi_{j}": f"phi_{auto[j]}" for j in indices}
    if diagram.z_action == 1:
        g["phi_1"] = "phi_1"
        g["-delta"] = "-delta"
    else:
        g["phi_1"] = "-delta"
        g["-delta"] = "phi_1"
    labels = list(vroots)
    for v in labels:
        if marks[g[v]] != marks[v]:
            return False
        for w in labels:
            if vroots[g[v]].dot(vroots[g[w]]) != vroots[v].dot(vroots[w]):
                return False

    base = {f"phi_{j}" for j in diagram.circled}
    swapped = set()
    for v in labels:
        w = g[v]
        if w != v and vroots[v].dot(vroots[w]) != 0:
            swapped.add(v)
            swapped.add(w)
    black_fixed = [v for v in ("phi_1", "-delta") if g[v] == v]
    for mask in range(1 << len(black_fixed)):
        chosen = {v for i, v in enumerate(black_fixed) if mask >> i & 1}
        total = sum(marks[v] for v in base | chosen | swapped)
        if total % 2 == 0:
            return True
    return False


def _subsystem_highest(rs: RootSystem, comp: list[int]) -> dict[int, int]:
    """Coefficients of the component's highest root over its simple roots."""
    simple = {j: rs.simples[j - 1] for j in comp}
    members = [
        r
        for r in rs.positives
        if all(
            c == 0
            for pos, c in enumerate(rs.simple_coefficients(r), start=1)
            if pos not in comp
        )
    ]
    best = max(members, key=lambda r: sum(rs.simple_coefficients(r)))
    coeffs = rs.simple_coefficients(best)
    return {j: coeffs[j - 1] for j in comp}


def k0_diagram_of(inv: Involution) -> K0Diagram:
    """Extract the compact-part Vogan diagram of a catalog involution."""
    vd = vogan_data(inv)
    if inv.m == 2:
        raise ValueError("k0 diagrams are defined for m >= 3")
    l = build_context(inv.m).l
    auto = []
    circled = []
    for j in range(2, l + 1):
        label = f"phi_{j}"
        target = vd.action[label]
        auto.append((j, int(target.split("_")[1])))
        if vd.signs.get(label) == -1:
            circled.append(j)
    holo = holomorphy_class(inv)
    return K0Diagram(
        m=inv.m,
        automorphism=tuple(auto),
        circled=frozenset(circled),
        z_action=1 if holo == HOLOMORPHIC else -1,
    )


# -- holomorphy --------------------------------------------------------------


def holomorphy_class(inv: Involution) -> str:
    """Classify by the action on the center of k0.

    For m >= 3 the center is spanned by H_1 and the class is holomorphic or
    antiholomorphic according to the sign.  For m = 2 the center is
    two-dimensional; only involutions fixing it pointwise are holomorphic,
    only -id is antiholomorphic, and everything else (factor swaps and mixed
    signs) is mixed.
    """
    ctx = build_context(inv.m)
    h1 = h_generator(ctx, 1)
    image1 = inv.apply(h1)
    if inv.m >= 3:
        if (image1 - h1).is_zero():
            return HOLOMORPHIC
        if (image1 + h1).is_zero():
            return ANTIHOLOMORPHIC
        raise ValueError(f"{inv.name} does not act by +-1 on the center")
    h2 = h_generator(ctx, 2)
    image2 = inv.apply(h2)
    if (image1 - h1).is_zero() and (image2 - h2).is_zero():
        return HOLOMORPHIC
    if (image1 + h1).is_zero() and (image2 + h2).is_zero():
        return ANTIHOLOMORPHIC
    return MIXED


# -- quarter-turn exponentials ----------------------------------------------

_SIN_QUARTER = [0, 1, 0, -1]
_COS_QUARTER = [1, 0, -1, 0]


def cayley_exp(x: ExactMatrix, quarter_turns: int) -> ExactMatrix:
    """exp(t x) for t = quarter_turns * pi/4, for x with x^2 = -c^2 P.

    Requires x^3 = -c^2 x for a positive integer c (so P = -x^2/c^2 is a
    projector commuting with x) and c * quarter_turns even, which makes the
    sine and cosine values exact integers.
    """
    if x.is_zero():
        return ExactMatrix.identity(x.n)
    square = x @ x
    cube = square @ x
    c_squared = None
    for key, v in cube.entries.items():
        base = x.get(*key)
        if not base.is_zero():
            ratio = v / base
            if not ratio.is_real() or ratio.re >= 0:
                raise ValueError("matrix does not satisfy x^3 = -c^2 x")
            c_squared = -ratio.re
            break
    if c_squared is None or not (cube + x.scale(GaussianRational(c_squared))).is_zero():
        raise ValueError("matrix does not satisfy x^3 = -c^2 x")
    c = _exact_sqrt(c_squared)
    if (c * quarter_turns) % 2 != 0:
        raise ValueError("angle is not a multiple of pi/2 after scaling")
    u = (c * quarter_turns) // 2
    sin_v = _SIN_QUARTER[u % 4]
    cos_v = _COS_QUARTER[u % 4]
    out = ExactMatrix.identity(x.n)
    if sin_v:
        out = out + x.scale(GaussianRational(Q(sin_v, c)))
    if cos_v != 1:
        out = out + square.scale(GaussianRational(Q(1 - cos_v) / c_squared))
    return out


def _exact_sqrt(value: Fraction) -> int:
    if value.denominator != 1 or value < 0:
        raise ValueError(f"{value} is not a perfect integer square")
    n = int(value.numerator)
    r = int(n**0.5)
    for candidate in (r - 1, r, r + 1):
        if candidate >= 0 and candidate * candidate == n:
            return candidate
    raise ValueError(f"{value} is not a perfect square")


# -- Ad matrices in the lattice bases ----------------------------------------


@dataclass
class AdMatrixReport:
    involution: str
    basis_label: str
    rows: list[list[Fraction]]
    all_rational: bool
    all_integral: bool


def ad_matrix_in_lattice_basis(inv: Involution, basis: RealBasis) -> AdMatrixReport:
    """Matrix of the involution on g0 in the basis B or B'.

    Entries must be rational (this is what places the differential in the
    arithmetic group); integrality is reported, not assumed.
    """
    if basis.variant != inv.variant:
        raise ValueError("basis variant does not match the involution's Cartan")
    cols = []
    rational = True
    for b in basis.vectors:
        coords = basis.coordinates(inv.apply(b))
        col = []
        for c in coords:
            if not c.is_real():
                rational = False
                raise ValueError(
                    f"{inv.name}: nonrational entry {c} in the {basis.label} basis"
                )
            col.append(c.re)
        cols.append(col)
    n = len(cols)
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    integral = all(v.denominator == 1 for row in rows for v in row)
    return AdMatrixReport(
        involution=inv.name,
        basis_label=basis.label,
        rows=rows,
        all_rational=rational,
        all_integral=integral,
    )
