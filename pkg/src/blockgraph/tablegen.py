"""Character tables of small permutation groups by the Dixon-Schneider
method; the independent oracle behind the bundled table corpus.

The pipeline: enumerate the group, partition it into conjugacy classes,
then diagonalize the class-sum matrices simultaneously over F_rho for a
prime rho = 1 (mod exponent) large enough that every lift is forced.  The
common eigenvectors are the central characters mod rho; degrees follow
from the second orthogonality relation, and the character values are
recovered per class by an order-o discrete Fourier transform over F_rho
whose coefficients are the (small, nonnegative) root-of-unity
multiplicities, lifted verbatim.

The solver itself only consumes abstract class data (sizes, element
orders, power maps, and a callback producing class-sum matrices), so other
element representations can reuse it; the PermGroup front end here is the
bounded desk-scale oracle that tests and the dixon CLI subcommand use.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from ._numtheory import factorize, is_prime
from .chartab import CharacterTable, _canonicalize, validate
from .cyclotomic import cyc_make
from .errors import SizeExceeded, ValidationError

__all__ = [
    "PermGroup",
    "enumerate_group",
    "conjugacy_classes",
    "dixon_table",
    "table_from_class_data",
]

DEFAULT_BOUND = 10**6


# -- permutation groups -------------------------------------------------------


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # apply b first, then a
    return tuple(a[x] for x in b)


def _inverse(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _perm_order(a: tuple[int, ...]) -> int:
    order = 1
    seen = [False] * len(a)
    for start in range(len(a)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = a[x]
            length += 1
        order = order * length // gcd(order, length)
    return order


@dataclass(frozen=True)
class PermGroup:
    degree: int
    generators: tuple[tuple[int, ...], ...]
    elements: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def enumerate_group(generators, bound: int = DEFAULT_BOUND) -> PermGroup:
    """Closure of the generators under products, breadth-first."""
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("at least one generator required")
    degree = len(gens[0])
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise ValueError(f"not a permutation of {degree} points: {g}")
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    elements = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = _compose(x, g)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
                    elements.append(y)
                    if len(elements) > bound:
                        raise SizeExceeded(f"group order exceeds bound {bound}")
        frontier = new
    return PermGroup(degree, tuple(gens), tuple(elements))


@dataclass(frozen=True)
class ClassData:
    """Everything the Dixon solver needs, detached from group elements."""

    order: int
    sizes: tuple[int, ...]
    element_orders: tuple[int, ...]
    power_maps: tuple[tuple[int, ...], ...]  # power_maps[k][j] = class of rep_k^j
    identity_class: int


def conjugacy_classes(group: PermGroup) -> tuple[ClassData, tuple[int, ...], list[list[int]]]:
    """Class data plus the element -> class map and per-class element lists."""
    index_of = {x: i for i, x in enumerate(group.elements)}
    inv_gens = [_inverse(g) for g in group.generators]
    class_of = [-1] * group.order
    members: list[list[int]] = []
    reps: list[int] = []
    for start in range(group.order):
        if class_of[start] != -1:
            continue
        cls = len(members)
        reps.append(start)
        class_of[start] = cls
        orbit = [start]
        queue = [start]
        while queue:
            i = queue.pop()
            x = group.elements[i]
            for g, gi in zip(group.generators, inv_gens):
                j = index_of[_compose(gi, _compose(x, g))]
                if class_of[j] == -1:
                    class_of[j] = cls
                    orbit.append(j)
                    queue.append(j)
        members.append(orbit)

    sizes = tuple(len(m) for m in members)
    orders = tuple(_perm_order(group.elements[r]) for r in reps)
    power_maps = []
    for r, o in zip(reps, orders):
        rep = group.elements[r]
        acc = tuple(range(group.degree))
        row = []
        for _ in range(o):
            row.append(class_of[index_of[acc]])
            acc = _compose(acc, rep)
        power_maps.append(tuple(row))
    identity_class = class_of[index_of[tuple(range(group.degree))]]
    data = ClassData(group.order, sizes, orders, tuple(power_maps), identity_class)
    return data, tuple(class_of), members


def _class_matrix_builder(group: PermGroup, class_of, members, reps_idx):
    index_of = {x: i for i, x in enumerate(group.elements)}

    def build(i: int) -> list[list[int]]:
        c = len(members)
        mat = [[0] * c for _ in range(c)]
        reps = [group.elements[r] for r in reps_idx]
        for xi in members[i]:
            x_inv = _inverse(group.elements[xi])
            for k, z in enumerate(reps):
                j = class_of[index_of[_compose(x_inv, z)]]
                mat[j][k] += 1
        return mat

    return build


# -- the solver over F_rho ----------------------------------------------------


def _choose_modulus(order: int, max_size: int, exponent: int) -> int:
    floor = 2 * isqrt(order) * max_size
    rho = exponent + 1
    while rho <= floor or not is_prime(rho):
        rho += exponent
    return rho


def _element_of_order(m: int, rho: int) -> int:
    if m == 1:
        return 1
    cofactor = (rho - 1) // m
    primes = list(factorize(m))
    for a in range(2, rho):
        z = pow(a, cofactor, rho)
        if z != 1 and all(pow(z, m // ell, rho) != 1 for ell in primes):
            return z
    raise ArithmeticError("no element of the requested order mod rho")


def _sqrt_mod(a: int, rho: int) -> int:
    # Tonelli-Shanks; rho is an odd prime, a a quadratic residue.
    if a == 0:
        return 0
    if rho % 4 == 3:
        return pow(a, (rho + 1) // 4, rho)
    q, s = rho - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = next(z for z in range(2, rho) if pow(z, (rho - 1) // 2, rho) == rho - 1)
    c = pow(z, q, rho)
    x = pow(a, (q + 1) // 2, rho)
    t = pow(a, q, rho)
    m = s
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % rho
            i += 1
        b = pow(c, 1 << (m - i - 1), rho)
        x = x * b % rho
        t = t * b % rho * b % rho
        c = b * b % rho
        m = i
    return x


def _poly_roots(f: list[int], rho: int) -> list[int]:
    """Distinct roots in F_rho of a polynomial splitting over F_rho."""

    def poly_mod(a, b):
        b_lead_inv = pow(b[-1], -1, rho)
        a = a[:]
        while len(a) >= len(b) and any(a):
            c = a[-1] * b_lead_inv % rho
            if c:
                off = len(a) - len(b)
                for i in range(len(b)):
                    a[off + i] = (a[off + i] - c * b[i]) % rho
            while a and a[-1] == 0:
                a.pop()
        return a

    def poly_gcd(a, b):
        a, b = a[:], b[:]
        while b and any(b):
            a, b = b, poly_mod(a, b)
        return a

    def pow_x_mod(e, f):
        # x^e mod f by square and multiply over F_rho
        result = [1]
        base = [0, 1] if len(f) > 2 else poly_mod([0, 1], f)
        while e:
            if e & 1:
                result = poly_mod(_poly_mul(result, base), f)
            base = poly_mod(_poly_mul(base, base), f)
            e >>= 1
        return result

    def _poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] = (out[i + j] + ca * cb) % rho
        return out

    f = [c % rho for c in f]
    while f and f[-1] == 0:
        f.pop()
    if len(f) <= 1:
        return []
    # keep only distinct linear factors: gcd(x^rho - x, f)
    xr = pow_x_mod(rho, f)
    xr_minus_x = xr[:] + [0] * max(0, 2 - len(xr))
    xr_minus_x[1] = (xr_minus_x[1] - 1) % rho
    g = poly_gcd(f, xr_minus_x)
    g = [c * pow(g[-1], -1, rho) % rho for c in g]

    roots: list[int] = []
    stack = [g]
    while stack:
        h = stack.pop()
        if len(h) == 1:
            continue
        if len(h) == 2:
            roots.append((-h[0]) * pow(h[1], -1, rho) % rho)
            continue
        a = 0
        while True:
            # gcd with (x+a)^((rho-1)/2) - 1 splits the roots on average
            base = [a % rho, 1]
            power = [1]
            e = (rho - 1) // 2
            b = base
            while e:
                if e & 1:
                    power = poly_mod(_poly_mul(power, b), h)
                b = poly_mod(_poly_mul(b, b), h)
                e >>= 1
            power = power[:] + [0] * max(0, 1 - len(power))
            power[0] = (power[0] - 1) % rho
            split = poly_gcd(h, power)
            if 1 < len(split) < len(h):
                split = [c * pow(split[-1], -1, rho) % rho for c in split]
                stack.append(split)
                quotient = _poly_quotient(h, split, rho)
                stack.append(quotient)
                break
            a += 1
    return sorted(roots)


def _poly_quotient(a: list[int], b: list[int], rho: int) -> list[int]:
    a = a[:]
    quot = [0] * (len(a) - len(b) + 1)
    inv = pow(b[-1], -1, rho)
    for i in range(len(quot) - 1, -1, -1):
        c = a[i + len(b) - 1] * inv % rho
        quot[i] = c
        if c:
            for j in range(len(b)):
                a[i + j] = (a[i + j] - c * b[j]) % rho
    return quot


def _charpoly(a: list[list[int]], rho: int) -> list[int]:
    """Characteristic polynomial mod rho via Hessenberg reduction."""
    n = len(a)
    h = [row[:] for row in a]
    for col in range(n - 2):
        pivot = next((r for r in range(col + 1, n) if h[r][col] % rho), None)
        if pivot is None:
            continue
        if pivot != col + 1:
            h[pivot], h[col + 1] = h[col + 1], h[pivot]
            for r in range(n):
                h[r][pivot], h[r][col + 1] = h[r][col + 1], h[r][pivot]
        inv = pow(h[col + 1][col] % rho, -1, rho)
        for r in range(col + 2, n):
            factor = h[r][col] * inv % rho
            if factor:
                for cc in range(n):
                    h[r][cc] = (h[r][cc] - factor * h[col + 1][cc]) % rho
                for rr in range(n):
                    h[rr][col + 1] = (h[rr][col + 1] + factor * h[rr][r]) % rho
    # p_k = charpoly of leading k x k Hessenberg block
    polys = [[1]]
    for k in range(1, n + 1):
        poly = [0] + polys[k - 1]  # x * p_{k-1}
        diag = h[k - 1][k - 1] % rho
        poly = [(c - diag * pc) % rho for c, pc in zip(poly, polys[k - 1] + [0])]
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = prod * h[i][i - 1] % rho
            term = prod * h[i - 1][k - 1] % rho
            if term:
                lower = polys[i - 1] + [0] * (len(poly) - len(polys[i - 1]))
                poly = [(c - term * lc) % rho for c, lc in zip(poly, lower)]
        polys.append(poly)
    return polys[n]


def _nullspace(mat: list[list[int]], rho: int) -> list[list[int]]:
    n = len(mat)
    m = len(mat[0])
    a = [row[:] for row in mat]
    pivots = []
    r = 0
    for c in range(m):
        pivot = next((i for i in range(r, n) if a[i][c] % rho), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = pow(a[r][c] % rho, -1, rho)
        a[r] = [v * inv % rho for v in a[r]]
        for i in range(n):
            if i != r and a[i][c] % rho:
                f = a[i][c] % rho
                a[i] = [(v - f * w) % rho for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * m
        vec[fc] = 1
        for row_i, pc in enumerate(pivots):
            vec[pc] = (-a[row_i][fc]) % rho
        basis.append(vec)
    return basis


def table_from_class_data(
    name: str, data: ClassData, class_matrix, provenance: str | None = None
) -> CharacterTable:
    """Run Dixon-Schneider on abstract class data.

    class_matrix(i) must return the matrix M_i with M_i[j][k] counting the
    pairs (x, y) in K_i x K_j with x*y = z_k; it is called lazily, in
    ascending class-size order, until the class algebra is fully split.
    """
    c = len(data.sizes)
    exponent = 1
    for o in data.element_orders:
        exponent = exponent * o // gcd(exponent, o)
    rho = _choose_modulus(data.order, max(data.sizes), exponent)
    z = _element_of_order(exponent, rho)

    # simultaneous eigenspaces of the class matrices, ascending class size
    spaces: list[list[list[int]]] = [[[1 if i == j else 0 for j in range(c)] for i in range(c)]]
    processing = sorted(
        (i for i in range(c) if i != data.identity_class),
        key=lambda i: (data.sizes[i], i),
    )
    for i in processing:
        if all(len(s) == 1 for s in spaces):
            break
        mat = class_matrix(i)
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            d = len(basis)
            images = [
                [sum(mat[j][k] * v[k] for k in range(c)) % rho for j in range(c)] for v in basis
            ]
            coords = _coordinates(basis, images, rho)
            a_t = [[coords[s][r] for s in range(d)] for r in range(d)]
            split_total = 0
            for lam in _poly_roots(_charpoly(a_t, rho), rho):
                shifted = [
                    [(a_t[r][s] - (lam if r == s else 0)) % rho for s in range(d)]
                    for r in range(d)
                ]
                sub = [
                    [sum(coeff[s] * basis[s][k] for s in range(d)) % rho for k in range(c)]
                    for coeff in _nullspace(shifted, rho)
                ]
                split_total += len(sub)
                new_spaces.append(sub)
            if split_total != d:
                raise ArithmeticError("eigenspace split lost dimensions")
        spaces = new_spaces
    if not all(len(s) == 1 for s in spaces):
        raise ArithmeticError("class algebra failed to split; corrupt class data")

    identity = data.identity_class
    omegas = []
    for (vec,) in spaces:
        inv = pow(vec[identity] % rho, -1, rho)
        omegas.append([v * inv % rho for v in vec])

    inverse_class = [pm[o - 1] if o > 1 else k for k, (pm, o) in enumerate(zip(data.power_maps, data.element_orders))]
    size_inv = [pow(s, -1, rho) for s in data.sizes]
    bound = isqrt(data.order)
    rows = []
    for omega in omegas:
        s_val = sum(omega[k] * omega[inverse_class[k]] % rho * size_inv[k] for k in range(c)) % rho
        degree_sq = data.order * pow(s_val, -1, rho) % rho
        root = _sqrt_mod(degree_sq, rho)
        degree = min(root, rho - root)
        if degree < 1 or degree > bound or degree * degree % rho != degree_sq:
            raise ArithmeticError("degree recovery failed; modulus too small")
        chi_mod = [degree * omega[k] % rho * size_inv[k] % rho for k in range(c)]
        values = []
        for k in range(c):
            o = data.element_orders[k]
            z_o = pow(z, exponent // o, rho)
            inv_o = pow(o, -1, rho)
            terms = []
            total = 0
            for t in range(o):
                m_t = (
                    sum(
                        chi_mod[data.power_maps[k][u]] * pow(z_o, -u * t % o, rho)
                        for u in range(o)
                    )
                    * inv_o
                    % rho
                )
                if m_t > bound:
                    raise ArithmeticError("multiplicity lift out of range")
                total += m_t
                if m_t:
                    terms.append((t, m_t))
            if total != degree:
                raise ArithmeticError("root-of-unity multiplicities do not sum to the degree")
            values.append(cyc_make(o, terms))
        rows.append(values)

    from .chartab import ConjClass

    classes = [
        ConjClass(size, order) for size, order in zip(data.sizes, data.element_orders)
    ]
    table = _canonicalize(name, data.order, classes, rows, provenance)
    violations = validate(table)
    if violations:
        raise ValidationError(violations)
    return table


def _coordinates(basis: list[list[int]], images: list[list[int]], rho: int) -> list[list[int]]:
    """Coordinates of each image in the span of basis (rows)."""
    d, c = len(basis), len(basis[0])
    work = [row[:] + [1 if i == j else 0 for j in range(d)] for i, row in enumerate(basis)]
    pivots = []
    r = 0
    for col in range(c):
        pivot = next((i for i in range(r, d) if work[i][col] % rho), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = pow(work[r][col] % rho, -1, rho)
        work[r] = [v * inv % rho for v in work[r]]
        for i in range(d):
            if i != r and work[i][col] % rho:
                f = work[i][col]
                work[i] = [(v - f * w) % rho for v, w in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == d:
            break
    coords = []
    for image in images:
        rem = image[:]
        coeff_on_reduced = []
        for row_i, col in enumerate(pivots):
            f = rem[col] % rho
            coeff_on_reduced.append(f)
            if f:
                rem = [(v - f * w) % rho for v, w in zip(rem, work[row_i][:c])]
        if any(v % rho for v in rem):
            raise ArithmeticError("image left the invariant subspace")
        # translate from reduced-basis coefficients back to original basis
        original = [0] * d
        for row_i, f in enumerate(coeff_on_reduced):
            if f:
                for j in range(d):
                    original[j] = (original[j] + f * work[row_i][c + j]) % rho
        coords.append(original)
    return coords


def dixon_table(group: PermGroup, name: str = "G", provenance: str | None = None) -> CharacterTable:
    """Character table of an enumerated permutation group."""
    data, class_of, members = conjugacy_classes(group)
    reps_idx = [m[0] for m in members]
    build = _class_matrix_builder(group, class_of, members, reps_idx)
    return table_from_class_data(name, data, build, provenance)
