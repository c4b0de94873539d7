"""Quantization of finite sets with involution.

A `RealSet` is a finite set with an involutive permutation tau; a `RealBundle`
puts a coordinate space over each point together with identifications
phi_x: F_x -> F_tau(x) whose antilinear composites square to the identity.
`reflect` sums the fibers into a single module whose involution permutes the
summands through phi; bundle maps reflect to equivariant homs.

The internal complex number algebra (`internal_complex`) is the rank-2 module
with entrywise conjugation as involution and the usual multiplication table;
all commutative monoid axioms are checked as matrix identities.

Quantization takes a fixed-point-free Real set, reflects its trivial line
bundle, and equips the result with the multiplication-by-i endomorphism
(+i on each orbit representative's line, -i on the partner's) and the pairing
that matches each point with its partner at weight one.  The result is a
self-dual module whose extracted Hermitian space is the standard inner product
on the orbit set.  Points fixed by tau admit no equivariant complex structure
and are rejected.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvariantViolation, ShapeError
from .hermitian import SelfDualRealModule, extract_hermitian
from .linalg import Matrix, inverse, kron, kron_swap, vec
from .modules import RealModule, RealHom, is_real_hom, random_invertible, random_involution
from .scalars import I, ONE, ZERO


# -- internal complex numbers ------------------------------------------------------


@dataclass(frozen=True, slots=True)
class InternalComplex:
    """The complex line as a commutative involutive monoid on two coordinates."""

    carrier: RealModule
    mult: Matrix       # 2 x 4
    unit: Matrix       # 2 x 1
    conj_endo: Matrix  # 2 x 2

    def check(self) -> None:
        self.carrier.check()
        c = self.carrier
        if self.mult.shape != (2, 4) or self.unit.shape != (2, 1):
            raise ShapeError("multiplication must be 2x4 and unit 2x1")
        two = Matrix.identity(2)
        # multiplication and unit are equivariant for the tensor involutions
        if not is_real_hom(RealModule(4, kron(c.inv, c.inv)), c, self.mult):
            raise InvariantViolation("multiplication is not equivariant")
        if not is_real_hom(RealModule(1, Matrix.identity(1)), c, self.unit):
            raise InvariantViolation("unit is not equivariant")
        if self.mult @ kron(self.mult, two) != self.mult @ kron(two, self.mult):
            raise InvariantViolation("multiplication is not associative")
        if self.mult @ kron(self.unit, two) != two:
            raise InvariantViolation("left unit law fails")
        if self.mult @ kron(two, self.unit) != two:
            raise InvariantViolation("right unit law fails")
        if self.mult @ kron_swap(2, 2) != self.mult:
            raise InvariantViolation("multiplication is not commutative")
        if self.conj_endo @ self.mult != self.mult @ kron(self.conj_endo, self.conj_endo):
            raise InvariantViolation("conjugation is not multiplicative")
        if not (self.conj_endo @ self.conj_endo).is_identity():
            raise InvariantViolation("conjugation endo is not involutive")


def internal_complex() -> InternalComplex:
    """Coordinates (real part, imaginary part); involution is conjugation."""
    conj_endo = Matrix.diagonal([ONE, -ONE])
    carrier = RealModule(2, conj_endo)
    mult = Matrix.from_rows([
        [ONE, ZERO, ZERO, -ONE],
        [ZERO, ONE, ONE, ZERO],
    ])
    unit = Matrix.from_rows([[ONE], [ZERO]])
    out = InternalComplex(carrier, mult, unit, conj_endo)
    out.check()
    return out


# -- finite sets with involution ---------------------------------------------------


@dataclass(frozen=True, slots=True)
class RealSet:
    size: int
    tau: tuple  # involutive permutation of range(size)

    def check(self) -> None:
        if self.size < 0:
            raise InvariantViolation("size must be nonnegative")
        if sorted(self.tau) != list(range(self.size)):
            raise InvariantViolation("tau is not a permutation")
        for x in range(self.size):
            if self.tau[self.tau[x]] != x:
                raise InvariantViolation("tau is not involutive")

    def fixed_points(self) -> tuple:
        return tuple(x for x in range(self.size) if self.tau[x] == x)

    def orbit_representatives(self) -> tuple:
        """Smallest element of each orbit, ascending."""
        return tuple(x for x in range(self.size) if x <= self.tau[x])


def trivial_realset(n: int) -> RealSet:
    """Every point its own partner."""
    return RealSet(n, tuple(range(n)))


def free_realset(n: int) -> RealSet:
    """n orbit representatives 0..n-1 with partners n..2n-1; no fixed points."""
    return RealSet(2 * n, tuple(list(range(n, 2 * n)) + list(range(n))))


@dataclass(frozen=True, slots=True)
class RealSetMap:
    source: RealSet
    target: RealSet
    values: tuple

    def check(self) -> None:
        self.source.check()
        self.target.check()
        if len(self.values) != self.source.size:
            raise ShapeError("map must assign every point")
        for x, y in enumerate(self.values):
            if not 0 <= y < self.target.size:
                raise InvariantViolation("map leaves the target set")
            if self.values[self.source.tau[x]] != self.target.tau[y]:
                raise InvariantViolation("map does not commute with the involutions")

    def __call__(self, x: int) -> int:
        return self.values[x]


# -- bundles over Real sets --------------------------------------------------------


@dataclass(frozen=True, slots=True)
class RealBundle:
    """Coordinate spaces over the points, glued along tau by the phi matrices.

    phi[x] maps the fiber at x to the fiber at tau(x); the antilinear maps
    v -> phi[x] conj(v) compose over an orbit to the identity.
    """

    base: RealSet
    fibers: tuple  # fiber dimensions
    phi: tuple     # phi[x]: fibers[x] -> fibers[tau(x)]

    def check(self) -> None:
        self.base.check()
        if len(self.fibers) != self.base.size or len(self.phi) != self.base.size:
            raise ShapeError("one fiber and one identification per point")
        for x in range(self.base.size):
            tx = self.base.tau[x]
            if self.phi[x].shape != (self.fibers[tx], self.fibers[x]):
                raise ShapeError(f"phi[{x}] has the wrong shape")
            if self.phi[tx] @ self.phi[x].conj() != Matrix.identity(self.fibers[x]):
                raise InvariantViolation(f"identification over point {x} does not square to the identity")

    def total_dim(self) -> int:
        return sum(self.fibers)

    def offsets(self) -> tuple:
        out = []
        acc = 0
        for d in self.fibers:
            out.append(acc)
            acc += d
        return tuple(out)


def trivial_line_bundle(base: RealSet) -> RealBundle:
    one = Matrix.identity(1)
    return RealBundle(base, (1,) * base.size, (one,) * base.size)


@dataclass(frozen=True, slots=True)
class RealBundleMap:
    """Fiberwise maps over a map of Real sets, compatible with the gluing."""

    source: RealBundle
    target: RealBundle
    base_map: RealSetMap
    mats: tuple  # mats[x]: source fiber at x -> target fiber at base_map(x)

    def check(self) -> None:
        self.source.check()
        self.target.check()
        self.base_map.check()
        if self.base_map.source != self.source.base or self.base_map.target != self.target.base:
            raise InvariantViolation("base map does not match the bundles")
        if len(self.mats) != self.source.base.size:
            raise ShapeError("one fiber map per point")
        f = self.base_map
        for x in range(self.source.base.size):
            tx = self.source.base.tau[x]
            if self.mats[x].shape != (self.target.fibers[f(x)], self.source.fibers[x]):
                raise ShapeError(f"fiber map at {x} has the wrong shape")
            if self.mats[tx] @ self.source.phi[x] != self.target.phi[f(x)] @ self.mats[x].conj():
                raise InvariantViolation(f"fiber maps at point {x} break the gluing")


def identity_base_map(base: RealSet) -> RealSetMap:
    return RealSetMap(base, base, tuple(range(base.size)))


def pullback(f: RealSetMap, bundle: RealBundle) -> RealBundle:
    """Fibers and identifications read back along f."""
    if bundle.base != f.target:
        raise InvariantViolation("bundle does not live over the map's target")
    fibers = tuple(bundle.fibers[f(x)] for x in range(f.source.size))
    phi = tuple(bundle.phi[f(x)] for x in range(f.source.size))
    out = RealBundle(f.source, fibers, phi)
    out.check()
    return out


def pushforward(f: RealSetMap, bundle: RealBundle) -> RealBundle:
    """Direct sum over preimages, slots in ascending point order."""
    if bundle.base != f.source:
        raise InvariantViolation("bundle does not live over the map's source")
    preimages = {y: [x for x in range(f.source.size) if f(x) == y]
                 for y in range(f.target.size)}
    fibers = tuple(sum(bundle.fibers[x] for x in preimages[y]) for y in range(f.target.size))
    phi = []
    for y in range(f.target.size):
        ty = f.target.tau[y]
        src = preimages[y]
        dst = preimages[ty]
        rows = fibers[ty]
        cols = fibers[y]
        dst_off = {}
        acc = 0
        for x in dst:
            dst_off[x] = acc
            acc += bundle.fibers[x]
        blocks = [[ZERO] * cols for _ in range(rows)]
        col = 0
        for x in src:
            tx = f.source.tau[x]
            r0 = dst_off[tx]
            p = bundle.phi[x]
            for i in range(p.rows):
                for j in range(p.cols):
                    blocks[r0 + i][col + j] = p[i, j]
            col += bundle.fibers[x]
        phi.append(Matrix.from_rows(blocks) if rows and cols else Matrix.zero(rows, cols))
    out = RealBundle(f.target, fibers, tuple(phi))
    out.check()
    return out


def product_realset(a: RealSet, b: RealSet) -> RealSet:
    """Pairs (x, y) flattened as x * b.size + y."""
    tau = tuple(a.tau[x] * b.size + b.tau[y]
                for x in range(a.size) for y in range(b.size))
    return RealSet(a.size * b.size, tau)


def external_tensor(b1: RealBundle, b2: RealBundle) -> RealBundle:
    base = product_realset(b1.base, b2.base)
    fibers = tuple(b1.fibers[x] * b2.fibers[y]
                   for x in range(b1.base.size) for y in range(b2.base.size))
    phi = tuple(kron(b1.phi[x], b2.phi[y])
                for x in range(b1.base.size) for y in range(b2.base.size))
    out = RealBundle(base, fibers, phi)
    out.check()
    return out


def complex_to_real_bundle(n: int) -> RealBundle:
    """A plain rank-n space as a bundle over the free two-point orbit."""
    ident = Matrix.identity(n)
    out = RealBundle(free_realset(1), (n, n), (ident, ident))
    out.check()
    return out


# -- reflection into modules -------------------------------------------------------


def reflect(bundle: RealBundle) -> RealModule:
    """Total space; the involution permutes fiber blocks through phi."""
    bundle.check()
    d = bundle.total_dim()
    off = bundle.offsets()
    rows = [[ZERO] * d for _ in range(d)]
    for x in range(bundle.base.size):
        tx = bundle.base.tau[x]
        p = bundle.phi[x]
        for i in range(p.rows):
            for j in range(p.cols):
                rows[off[tx] + i][off[x] + j] = p[i, j]
    module = RealModule(d, Matrix.from_rows(rows) if d else Matrix.zero(0, 0))
    module.check()
    return module


def reflect_map(bmap: RealBundleMap) -> RealHom:
    bmap.check()
    src = reflect(bmap.source)
    tgt = reflect(bmap.target)
    soff = bmap.source.offsets()
    toff = bmap.target.offsets()
    rows = [[ZERO] * src.dim for _ in range(tgt.dim)]
    for x in range(bmap.source.base.size):
        y = bmap.base_map(x)
        m = bmap.mats[x]
        for i in range(m.rows):
            for j in range(m.cols):
                rows[toff[y] + i][soff[x] + j] = m[i, j]
    mat = Matrix.from_rows(rows) if rows and src.dim else Matrix.zero(tgt.dim, src.dim)
    hom = RealHom(src, tgt, mat)
    hom.check()
    return hom


# -- quantization ------------------------------------------------------------------


def imaginary_unit_endo(base: RealSet) -> RealBundleMap:
    """Multiplication by i on the trivial line bundle: +i on each orbit
    representative, -i on its partner.  Needs tau fixed-point-free."""
    if base.fixed_points():
        raise InvariantViolation("points fixed by the involution admit no complex structure")
    bundle = trivial_line_bundle(base)
    reps = set(base.orbit_representatives())
    mats = tuple(Matrix.from_rows([[I if x in reps else -I]]) for x in range(base.size))
    out = RealBundleMap(bundle, bundle, identity_base_map(base), mats)
    out.check()
    return out


def quantize_set(base: RealSet) -> SelfDualRealModule:
    """Self-dual module of a fixed-point-free Real set.

    The pairing matches each point with its partner at weight one, so each
    orbit line has unit norm; the extracted Hermitian space is asserted to be
    the identity gram on the orbits.
    """
    base.check()
    module = reflect(trivial_line_bundle(base))
    icplx = reflect_map(imaginary_unit_endo(base)).mat
    pair_mat = module.inv  # the tau permutation, symmetric since tau is involutive
    s = SelfDualRealModule(module, vec(pair_mat).transpose(), vec(inverse(pair_mat)), icplx)
    s.check()
    h = extract_hermitian(s)
    if h.gram != Matrix.identity(h.dim):
        raise InvariantViolation("quantization did not produce the standard inner product")
    return s


def quantize(n: int) -> SelfDualRealModule:
    """Quantize the free Real set on n orbits: an n-dimensional Hilbert space
    with icplx diag(+i..,-i..) and the partner pairing."""
    return quantize_set(free_realset(n))


def random_realset(rng: random.Random, size: int, free: bool = False) -> RealSet:
    """Random involutive permutation; `free` forbids fixed points (size even)."""
    if free and size % 2:
        raise ValueError("a fixed-point-free involution needs an even size")
    points = list(range(size))
    rng.shuffle(points)
    tau = list(range(size))
    while points:
        x = points.pop()
        if not points:
            break
        if free or rng.random() < 0.7:
            y = points.pop(rng.randrange(len(points)))
            tau[x], tau[y] = y, x
    return RealSet(size, tuple(tau))


def random_real_bundle(rng: random.Random, base: RealSet, max_dim: int = 2) -> RealBundle:
    """Random fibers with valid gluing: free choice on orbit representatives,
    forced inverse-conjugate on partners, involutive structure on fixed points."""
    dims = [0] * base.size
    phi = [None] * base.size
    for x in base.orbit_representatives():
        tx = base.tau[x]
        d = rng.randrange(1, max_dim + 1)
        dims[x] = d
        dims[tx] = d
        if tx == x:
            phi[x] = random_involution(rng, d)
        else:
            phi[x] = random_invertible(rng, d)
            phi[tx] = inverse(phi[x].conj())
    out = RealBundle(base, tuple(dims), tuple(phi))
    out.check()
    return out
