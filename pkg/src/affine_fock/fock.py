"""Charged fermionic Fock space with exact rational coefficients.

Basis labels are pairs (charge, partition). The fermion psi_j deletes the
particle at half-integer position j (dropping the charge by one) and
psi_star_j inserts one; both carry the sign (-1)**(number of particles
strictly below j). The degree-n Heisenberg operator heis(n) is the sum of
all single-particle hops by n steps with the fermionic sign, which on
partition labels reproduces the border-strip expansion.

The same fermions arise as coefficients of the kernel fields

    Psi(z)      = Gplus(z)^{-1} Gminus(z) [charge -= 1] z^{-charge_in}
    Psi_star(z) = Gplus(z) Gminus(z)^{-1} [charge += 1] z^{+charge_in}

where Gplus(z) = exp(sum_m z^m heis(-m)/m) and Gminus(z) =
exp(sum_m z^{-m} heis(m)/m); psi_j is the z^{j-1/2} coefficient of Psi and
psi_star_j the z^{-j-1/2} coefficient of Psi_star. verify_boson_fermion
compares the two routes mode by mode.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from . import maya
from .maya import HALF, Maya
from .partitions import enumerate_partitions

# Sign carried by psi/psi_star for each particle strictly below the acted
# position. Flipping it desynchronizes the direct fermions from the kernel
# fields, which the mutation-sensitivity suite checks.
FERMION_SIGN = -1


class DegreeOverflowError(Exception):
    """An operator output left the requested degree window."""


class Vec:
    """Finite linear combination of hashable basis labels over Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict = {}
        if terms:
            for label, coeff in dict(terms).items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[label] = clean.get(label, 0) + coeff
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def basis(cls, label) -> "Vec":
        return cls({label: Fraction(1)})

    @classmethod
    def zero(cls) -> "Vec":
        return cls()

    def coeff(self, label) -> Fraction:
        return self.terms.get(label, Fraction(0))

    def __add__(self, other: "Vec") -> "Vec":
        out = dict(self.terms)
        for label, coeff in other.terms.items():
            out[label] = out.get(label, 0) + coeff
        return Vec(out)

    def __sub__(self, other: "Vec") -> "Vec":
        out = dict(self.terms)
        for label, coeff in other.terms.items():
            out[label] = out.get(label, 0) - coeff
        return Vec(out)

    def __neg__(self) -> "Vec":
        return Vec({label: -coeff for label, coeff in self.terms.items()})

    def __mul__(self, scalar) -> "Vec":
        scalar = Fraction(scalar)
        return Vec({label: coeff * scalar for label, coeff in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Vec) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def apply(self, fn) -> "Vec":
        """Extend fn: label -> Vec linearly."""
        out: dict = {}
        for label, coeff in self.terms.items():
            for out_label, out_coeff in fn(label).terms.items():
                out[out_label] = out.get(out_label, 0) + coeff * out_coeff
        return Vec(out)

    def __repr__(self) -> str:
        if not self.terms:
            return "Vec(0)"
        bits = [f"{coeff}*{label}" for label, coeff in sorted(
            self.terms.items(), key=lambda t: repr(t[0]))]
        return "Vec(" + " + ".join(bits) + ")"


def label_sort_key(label):
    """Graded order on (charge, partition) labels: size, charge, then parts
    in the descending-lexicographic enumeration order."""
    c, lam = label
    return (sum(lam), c, tuple(-p for p in lam))


def vacuum(charge: int = 0) -> Vec:
    return Vec.basis((int(charge), ()))


def _maya_of(label) -> Maya:
    c, lam = label
    return maya.from_charge_partition(c, lam)


def _label_of(m: Maya):
    return maya.to_charge_partition(m)


def _count_below(m: Maya, j: Fraction) -> int:
    """Number of particles strictly below position j."""
    count = sum(1 for p in m.particles_below if p < j)
    if j > 0:
        count += int(j - HALF) - sum(1 for h in m.holes_above if h < j)
    return count


def _with_particle_removed(m: Maya, j: Fraction) -> Maya:
    if j < 0:
        return Maya([p for p in m.particles_below if p != j], m.holes_above)
    return Maya(m.particles_below, m.holes_above + (j,))


def _with_particle_inserted(m: Maya, j: Fraction) -> Maya:
    if j < 0:
        return Maya(m.particles_below + (j,), m.holes_above)
    return Maya(m.particles_below, [h for h in m.holes_above if h != j])


def psi(j, v: Vec) -> Vec:
    """Delete the particle at position j; charge drops by one."""
    j = maya._check_half_integer(j)

    def on_basis(label) -> Vec:
        m = _maya_of(label)
        if maya.evaluate(m, j) != 1:
            return Vec.zero()
        sign = FERMION_SIGN ** _count_below(m, j)
        return Vec({_label_of(_with_particle_removed(m, j)): sign})

    return v.apply(on_basis)


def psi_star(j, v: Vec) -> Vec:
    """Insert a particle at position j; charge rises by one."""
    j = maya._check_half_integer(j)

    def on_basis(label) -> Vec:
        m = _maya_of(label)
        if maya.evaluate(m, j) != -1:
            return Vec.zero()
        sign = FERMION_SIGN ** _count_below(m, j)
        return Vec({_label_of(_with_particle_inserted(m, j)): sign})

    return v.apply(on_basis)


_HEIS_CACHE: dict = {}


def _heis_on_shape(n: int, lam) -> dict:
    """heis(n) on the charge-zero label of shape lam: hops p -> p + n.

    The hop sign is the parity of the number of particles strictly between
    the two positions, which is what the pair of fermion signs contracts to.
    The result is charge independent, so it is cached by shape alone.
    """
    key = (n, lam)
    cached = _HEIS_CACHE.get(key)
    if cached is not None:
        return cached
    m = maya.from_partition(lam)
    candidates = set(m.particles_below)
    candidates.update(h - n for h in m.holes_above)
    h = HALF
    while h < -n:
        candidates.add(h)
        h += 1
    out: dict = {}
    for p in sorted(candidates):
        q = p + n
        if maya.evaluate(m, p) != 1 or maya.evaluate(m, q) != -1:
            continue
        lo = p if n > 0 else q
        between = sum(
            1 for step in range(1, abs(n))
            if maya.evaluate(m, lo + step) == 1
        )
        _, target = _label_of(
            _with_particle_inserted(_with_particle_removed(m, p), q)
        )
        sign = (-1) ** between
        out[target] = out.get(target, 0) + sign
    out = {shape: coeff for shape, coeff in out.items() if coeff}
    _HEIS_CACHE[key] = out
    return out


def heis(n: int, v: Vec) -> Vec:
    """Degree-n Heisenberg operator; n < 0 raises degree by -n."""
    n = int(n)
    if n == 0:
        raise ValueError("the degree-zero mode is excluded")

    def on_basis(label) -> Vec:
        c, lam = label
        return Vec({(c, mu): coeff for mu, coeff in _heis_on_shape(n, lam).items()})

    return v.apply(on_basis)


def charge_shift(v: Vec, s: int) -> Vec:
    return Vec({(c + s, lam): coeff for (c, lam), coeff in v.terms.items()})


def degree(v: Vec) -> int:
    """Largest partition size in the support (0 for the zero vector)."""
    return max((sum(lam) for (_, lam) in v.terms), default=0)


def _check_window(v: Vec, window) -> Vec:
    if window is not None and degree(v) > window:
        raise DegreeOverflowError(
            f"output degree {degree(v)} exceeds window {window}"
        )
    return v


_GAMMA_CACHE: dict = {}


def _gamma_on_shape(sign: int, d: int, inverse: bool, lam) -> dict:
    """Shape part of the Gamma kernel coefficient (charge independent)."""
    key = (sign, d, inverse, lam)
    cached = _GAMMA_CACHE.get(key)
    if cached is not None:
        return cached
    total: dict = {}
    for nu in enumerate_partitions(d):
        coeff = Fraction(1)
        mult: dict[int, int] = {}
        for part in nu:
            mult[part] = mult.get(part, 0) + 1
        for part, k in mult.items():
            coeff /= Fraction(part**k * factorial(k))
        if inverse and len(nu) % 2:
            coeff = -coeff
        layer = {lam: coeff}
        for part in nu:
            nxt: dict = {}
            for shape, c0 in layer.items():
                for mu, c1 in _heis_on_shape(
                    -part if sign == 1 else part, shape
                ).items():
                    nxt[mu] = nxt.get(mu, 0) + c0 * c1
            layer = {s: c for s, c in nxt.items() if c}
            if not layer:
                break
        for shape, c0 in layer.items():
            total[shape] = total.get(shape, 0) + c0
    total = {shape: coeff for shape, coeff in total.items() if coeff}
    _GAMMA_CACHE[key] = total
    return total


def gamma_coeff(sign: int, d: int, v: Vec, inverse: bool = False, window=None) -> Vec:
    """Coefficient of z^(sign*d) in the Gamma kernel applied to v.

    sign=+1 selects Gplus (built from the raising generators heis(-m),
    z-exponent +d), sign=-1 selects Gminus (heis(+m), z-exponent -d).
    inverse=True applies the inverse kernel, which negates every generator.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if d < 0:
        raise ValueError("coefficient degree must be nonnegative")

    def on_basis(label) -> Vec:
        c, lam = label
        return Vec(
            {(c, mu): coeff for mu, coeff in _gamma_on_shape(sign, d, inverse, lam).items()}
        )

    return _check_window(v.apply(on_basis), window)


def fermion_field_coeff(kind: str, j, v: Vec, window=None) -> Vec:
    """Mode of the kernel field: the second route to psi / psi_star.

    kind="psi" extracts the z^(j-1/2) coefficient of Psi(z), kind="psi_star"
    the z^(-j-1/2) coefficient of Psi_star(z). Applied right to left: the
    charge power of z, the charge shift, the Gminus part, then the Gplus
    part.
    """
    j = maya._check_half_integer(j)
    if kind not in ("psi", "psi_star"):
        raise ValueError(f"kind must be 'psi' or 'psi_star', got {kind!r}")
    total: dict = {}
    for label, coeff in v.terms.items():
        c, lam = label
        if kind == "psi":
            target = j - HALF + c  # z^{-c} already extracted
            out_charge = c - 1
            plus_inverse, minus_inverse = True, False
        else:
            target = -j - HALF - c
            out_charge = c + 1
            plus_inverse, minus_inverse = False, True
        for b in range(sum(lam) + 1):
            a = target + b
            if a < 0 or a != int(a):
                continue
            for shape, c1 in _gamma_on_shape(-1, b, minus_inverse, lam).items():
                for mu, c2 in _gamma_on_shape(1, int(a), plus_inverse, shape).items():
                    key = (out_charge, mu)
                    total[key] = total.get(key, 0) + coeff * c1 * c2
    return _check_window(Vec(total), window)


def clifford_check(positions, states) -> list:
    """Anticommutator defects of the fermions on the given basis states.

    Returns a list of (relation, position pair, label) triples that fail;
    empty means psi/psi_star satisfy the Clifford relations there.
    """
    bad = []
    for label in states:
        v = Vec.basis(label)
        for x in positions:
            for y in positions:
                lhs = psi(x, psi_star(y, v)) + psi_star(y, psi(x, v))
                rhs = v if x == y else Vec.zero()
                if lhs != rhs:
                    bad.append(("psi psi* + psi* psi", (x, y), label))
                if psi(x, psi(y, v)) + psi(y, psi(x, v)):
                    bad.append(("psi psi + psi psi", (x, y), label))
                if psi_star(x, psi_star(y, v)) + psi_star(y, psi_star(x, v)):
                    bad.append(("psi* psi* + psi* psi*", (x, y), label))
    return bad


def fock_labels(max_degree: int, charges=(0,)) -> list:
    """All (charge, partition) labels with the given charges, graded order."""
    out = []
    for n in range(max_degree + 1):
        for lam in enumerate_partitions(n):
            for c in charges:
                out.append((c, lam))
    return sorted(out, key=label_sort_key)


def verify_boson_fermion(max_degree: int = 6, max_charge: int = 2) -> dict:
    """Compare direct fermions with kernel-field coefficients mode by mode.

    Runs over all charges |c| <= max_charge, partitions of size <=
    max_degree, and every mode whose image can stay in the window. Returns
    a report dict with a failures list.
    """
    failures = []
    charges = range(-max_charge, max_charge + 1)
    reach = max_degree + max_charge + 2
    modes = [Fraction(2 * k + 1, 2) for k in range(-reach, reach)]
    for label in fock_labels(max_degree, charges):
        v = Vec.basis(label)
        c, lam = label
        for j in modes:
            for kind, direct_fn in (("psi", psi), ("psi_star", psi_star)):
                shift = j - HALF + c if kind == "psi" else -j - HALF - c
                if sum(lam) + shift > max_degree:
                    continue  # image leaves the degree window
                direct = direct_fn(j, v)
                kernel = fermion_field_coeff(kind, j, v)
                if direct != kernel:
                    failures.append(
                        {
                            "generator": f"{kind}({j})",
                            "lambda": {"charge": label[0], "partition": list(label[1])},
                            "lhs": vec_json(direct),
                            "rhs": vec_json(kernel),
                        }
                    )
    return {
        "status": "ok" if not failures else "mismatch",
        "degree": max_degree,
        "charge_bound": max_charge,
        "failures": failures,
    }


def fock_label_json(label) -> dict:
    c, lam = label
    return {"charge": c, "partition": list(lam)}


def vec_json(v: Vec, label_json=fock_label_json, sort_key=label_sort_key) -> list:
    """Deterministic JSON form of a vector: coefficient/label pairs."""
    return [
        {"coeff": str(v.terms[label]), "label": label_json(label)}
        for label in sorted(v.terms, key=sort_key)
    ]


def operator_matrix(apply_fn, source_labels, sort_key):
    """Sparse matrix of a linear map on an ordered list of basis labels.

    Returns (rows, cols, entries) where entries maps (row_index, col_index)
    to a nonzero Fraction, cols is the given source order, and rows are the
    output labels in sort_key order.
    """
    cols = list(source_labels)
    images = [apply_fn(label) for label in cols]
    row_set = set()
    for image in images:
        row_set.update(image.terms)
    rows = sorted(row_set, key=sort_key)
    row_index = {label: r for r, label in enumerate(rows)}
    entries = {}
    for col, image in enumerate(images):
        for label, coeff in image.terms.items():
            entries[(row_index[label], col)] = coeff
    return rows, cols, entries
