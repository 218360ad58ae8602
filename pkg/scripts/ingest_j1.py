"""Build the J1 character table from Janko's 7x7 matrix generators over GF(11).

The two generators are the order-7 cyclic permutation matrix Y and Janko's
orthogonal matrix Z; their closure must have order exactly 175560, which is
asserted after full enumeration.  Conjugacy classes, power maps and the
class-sum matrices are computed by brute force (numpy-batched), and the
table is produced by the package's Dixon-Schneider solver and certified by
the package validator before being written.

Run from the repository root:  python3 scripts/ingest_j1.py  (takes a few minutes)
"""

import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from blockgraph.chartab import print_table
from blockgraph.tablegen import ClassData, table_from_class_data

P = 11

Y = np.zeros((7, 7), dtype=np.int64)
for i in range(7):
    Y[i][(i + 1) % 7] = 1

Z = np.array(
    [
        [-3, +2, -1, -1, -3, -1, -3],
        [-2, +1, +1, +3, +1, +3, +3],
        [-1, -1, -3, -1, -3, -3, +2],
        [-1, -3, -1, -3, -3, +2, -1],
        [-3, -1, -3, -3, +2, -1, -1],
        [+1, +3, +3, -2, +1, +1, +3],
        [+3, +3, -2, +1, +1, +3, +1],
    ],
    dtype=np.int64,
) % P

IDENTITY = np.eye(7, dtype=np.int64)


def keys_of(batch: np.ndarray) -> np.ndarray:
    """Pack a (n,7,7) batch of mod-11 matrices into void keys for hashing."""
    flat = np.ascontiguousarray(batch.reshape(len(batch), 49).astype(np.uint8))
    return flat.view([("", np.uint8)] * 49).reshape(len(batch))


def batch_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.einsum("nij,jk->nik", a, b) % P


def single_order(x: np.ndarray) -> int:
    acc = x.copy()
    n = 1
    while not np.array_equal(acc, IDENTITY):
        acc = acc @ x % P
        n += 1
    return n


def batch_power(batch: np.ndarray, e: int) -> np.ndarray:
    result = np.broadcast_to(IDENTITY, batch.shape).copy()
    base = batch.copy()
    while e:
        if e & 1:
            result = np.einsum("nij,njk->nik", result, base) % P
        base = np.einsum("nij,njk->nik", base, base) % P
        e >>= 1
    return result


def main():
    t0 = time.time()
    gens = [Y, Z]
    print("orders of generators:", [single_order(g) for g in gens])

    index: dict[bytes, int] = {}
    elements = np.zeros((200000, 7, 7), dtype=np.int64)

    def register(batch):
        nonlocal count
        ks = keys_of(batch)
        fresh = []
        for row, key in enumerate(ks):
            kb = key.tobytes()
            if kb not in index:
                index[kb] = count
                elements[count] = batch[row]
                count += 1
                fresh.append(row)
        return batch[fresh] if fresh else None

    count = 0
    register(IDENTITY[None, :, :])
    frontier = elements[:1]
    while frontier is not None and len(frontier):
        new = []
        for g in gens:
            batch = batch_mul(frontier, g)
            kept = register(batch)
            if kept is not None:
                new.append(kept)
        frontier = np.concatenate(new) if new else None
    order = count
    print(f"order: {order}  ({time.time()-t0:.1f}s)")
    assert order == 175560, "J1 generators are wrong"
    elements = elements[:order]

    # conjugacy classes: orbit partition under conjugation by the generators
    inv_gens = [np.linalg.matrix_power(g, single_order(g) - 1).astype(np.int64) % P for g in gens]
    class_of = np.full(order, -1, dtype=np.int64)
    members = []
    reps = []
    for start in range(order):
        if class_of[start] != -1:
            continue
        cls = len(members)
        reps.append(start)
        class_of[start] = cls
        orbit = [start]
        frontier_idx = np.array([start])
        while len(frontier_idx):
            batch = elements[frontier_idx]
            new_idx = []
            for g, gi in zip(gens, inv_gens):
                conj = np.einsum("ij,njk,kl->nil", gi, batch, g) % P
                for key in keys_of(conj):
                    j = index[key.tobytes()]
                    if class_of[j] == -1:
                        class_of[j] = cls
                        orbit.append(j)
                        new_idx.append(j)
            frontier_idx = np.array(new_idx, dtype=np.int64)
        members.append(np.array(orbit, dtype=np.int64))
    sizes = tuple(len(m) for m in members)
    print("classes:", len(sizes), sizes, f"({time.time()-t0:.1f}s)")

    orders = tuple(single_order(elements[r]) for r in reps)
    print("element orders:", orders)
    power_maps = []
    for r, o in zip(reps, orders):
        rep = elements[r]
        acc = IDENTITY
        row = []
        for _ in range(o):
            row.append(int(class_of[index[keys_of(acc[None])[0].tobytes()]]))
            acc = acc @ rep % P
        power_maps.append(tuple(row))
    identity_class = int(class_of[index[keys_of(IDENTITY[None])[0].tobytes()]])

    rep_stack = np.stack([elements[r] for r in reps])

    def class_matrix(i):
        c = len(sizes)
        mat = [[0] * c for _ in range(c)]
        idx = members[i]
        x = elements[idx]
        x_inv = batch_power(x, orders[i] - 1)
        for k in range(c):
            prod = np.einsum("nij,jk->nik", x_inv, rep_stack[k]) % P
            for key in keys_of(prod):
                mat[class_of[index[key.tobytes()]]][k] += 1
        print(f"  class matrix {i} (size {sizes[i]}) done ({time.time()-t0:.1f}s)")
        return mat

    data = ClassData(order, sizes, orders, tuple(power_maps), identity_class)
    table = table_from_class_data(
        "J1",
        data,
        class_matrix,
        provenance=(
            "computed by scripts/ingest_j1.py: Janko's 7x7 GF(11) generators "
            "(cyclic Y, orthogonal Z), full enumeration to order 175560, "
            "classes by conjugation orbits, Dixon-Schneider lift; certified "
            "by the package validator"
        ),
    )
    print("degrees:", table.degrees())
    out = Path(__file__).resolve().parent.parent / "src" / "blockgraph" / "corpusdata" / "J1.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(print_table(table))
    print("wrote", out, f"({time.time()-t0:.1f}s)")


if __name__ == "__main__":
    main()
