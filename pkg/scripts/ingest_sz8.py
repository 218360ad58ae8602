"""Build the Sz(8) character table from its 4x4 symplectic matrix generators.

Sz(q), q = 2^(2m+1), sigma: x -> x^(2^(m+1)), is generated inside Sp_4(q) by
the unipotent family S(a, b), the torus diag(l^(1+2^m), l^(2^m), l^(-2^m),
l^(-1-2^m)) and the antidiagonal involution.  For q = 8: sigma(x) = x^4.
Everything is verified by brute force: the closure must have order exactly
q^2 (q^2+1)(q-1) = 29120, and the emitted table must pass the package
validator (both orthogonality relations) before it is written.

Run from the repository root:  python3 scripts/ingest_sz8.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from blockgraph.chartab import print_table
from blockgraph.tablegen import ClassData, table_from_class_data

Q = 8
MOD_POLY = 0b1011  # t^3 + t + 1


def _f8_mul(a: int, b: int) -> int:
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        if a & 0b1000:
            a ^= MOD_POLY
        b >>= 1
    return acc


MUL = [[_f8_mul(a, b) for b in range(8)] for a in range(8)]
POW = [[1] * 8 for _ in range(8)]
for a in range(8):
    for e in range(1, 8):
        POW[a][e] = MUL[POW[a][e - 1]][a]


def fpow(a: int, e: int) -> int:
    if a == 0:
        return 0 if e else 1
    return POW[a][e % 7]


def sigma(x: int) -> int:
    return fpow(x, 4)


def mat_mul(x, y):
    return tuple(
        tuple(
            MUL[x[i][0]][y[0][j]] ^ MUL[x[i][1]][y[1][j]] ^ MUL[x[i][2]][y[2][j]] ^ MUL[x[i][3]][y[3][j]]
            for j in range(4)
        )
        for i in range(4)
    )


def s_elt(a: int, b: int):
    a_sigma = sigma(a)
    row3_0 = MUL[a][a_sigma] ^ b  # a^(1+sigma) + b
    row4_0 = MUL[MUL[a][a]][a_sigma] ^ MUL[a][b] ^ sigma(b)  # a^(2+sigma) + ab + b^sigma
    return (
        (1, 0, 0, 0),
        (a, 1, 0, 0),
        (row3_0, a_sigma, 1, 0),
        (row4_0, b, a, 1),
    )


def torus(l: int):
    return (
        (fpow(l, 3), 0, 0, 0),
        (0, fpow(l, 2), 0, 0),
        (0, 0, fpow(l, 5), 0),
        (0, 0, 0, fpow(l, 4)),
    )


FLIP = ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))
IDENTITY = tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4))


def enumerate_group(gens, bound=40000):
    seen = {IDENTITY}
    frontier = [IDENTITY]
    elements = [IDENTITY]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mat_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
                    elements.append(y)
                    if len(elements) > bound:
                        raise RuntimeError("closure exceeded bound; wrong generators")
        frontier = new
    return elements


def mat_order(x):
    acc = x
    n = 1
    while acc != IDENTITY:
        acc = mat_mul(acc, x)
        n += 1
    return n


def mat_inverse(x, order_cache):
    o = order_cache
    acc = x
    for _ in range(o - 2):
        acc = mat_mul(acc, x)
    return acc


def main():
    gens = [s_elt(1, 0), s_elt(0, 1), s_elt(2, 0), torus(2), FLIP]
    elements = enumerate_group(gens)
    order = len(elements)
    print("order:", order)
    assert order == 29120, "Sz(8) construction is wrong"

    index_of = {x: i for i, x in enumerate(elements)}
    inv_gens = [mat_inverse(g, mat_order(g)) for g in gens]

    class_of = [-1] * order
    members = []
    reps = []
    for start in range(order):
        if class_of[start] != -1:
            continue
        cls = len(members)
        reps.append(start)
        class_of[start] = cls
        orbit = [start]
        queue = [start]
        while queue:
            i = queue.pop()
            x = elements[i]
            for g, gi in zip(gens, inv_gens):
                j = index_of[mat_mul(gi, mat_mul(x, g))]
                if class_of[j] == -1:
                    class_of[j] = cls
                    orbit.append(j)
                    queue.append(j)
        members.append(orbit)
    sizes = tuple(len(m) for m in members)
    print("classes:", len(sizes), sizes)
    orders = tuple(mat_order(elements[r]) for r in reps)
    print("element orders:", orders)

    power_maps = []
    for r, o in zip(reps, orders):
        rep = elements[r]
        acc = IDENTITY
        row = []
        for _ in range(o):
            row.append(class_of[index_of[acc]])
            acc = mat_mul(acc, rep)
        power_maps.append(tuple(row))
    identity_class = class_of[index_of[IDENTITY]]

    def class_matrix(i):
        c = len(sizes)
        mat = [[0] * c for _ in range(c)]
        rep_elts = [elements[r] for r in reps]
        for xi in members[i]:
            x = elements[xi]
            x_inv = mat_inverse(x, mat_order(x))
            for k, z in enumerate(rep_elts):
                mat[class_of[index_of[mat_mul(x_inv, z)]]][k] += 1
        return mat

    data = ClassData(order, sizes, orders, tuple(power_maps), identity_class)
    table = table_from_class_data(
        "Sz(8)",
        data,
        class_matrix,
        provenance=(
            "computed by scripts/ingest_sz8.py: Suzuki group as 4x4 matrices "
            "over GF(8) (unipotent S(a,b) family, torus, antidiagonal "
            "involution), full enumeration to order 29120, classes by "
            "conjugation orbits, Dixon-Schneider lift; certified by the "
            "package validator"
        ),
    )
    print("degrees:", table.degrees())
    out = Path(__file__).resolve().parent.parent / "src" / "blockgraph" / "corpusdata" / "Sz8.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(print_table(table))
    print("wrote", out)


if __name__ == "__main__":
    main()
