"""Weyl groups of Picard lattices: enumeration, orbits, stabilizers.

The group W is generated by reflections in the simple roots
E_i - E_{i+1} and L - E1 - E2 - E3.  Enumeration is a breadth-first
search whose visited-set keys are the orbit of a single regular marker
vector (a vector pairing strictly positively with every positive root):
since no reflection fixes it, markers are in bijection with group
elements, and a toric system carried in lockstep with the marker visits
every point of its orbit exactly once.

All array arithmetic is int64 numpy; packing into uint64 keys asserts
its range bounds, so overflow is impossible rather than unlikely.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import numpy as np

from .errors import InputError, InternalError, ResourceError
from .picard import Divisor, PicardLattice, vneg
from .toric import ToricSystem

#: Environment variable capping the memory (bytes) used by an orbit's
#: visited set and frontier together.
MEMORY_BUDGET_ENV = "DELPEZZO_ORBIT_MEMORY_BYTES"


def _memory_budget() -> int | None:
    raw = os.environ.get(MEMORY_BUDGET_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"{MEMORY_BUDGET_ENV} must be an integer, got {raw!r}") from exc


def simple_reflection_roots(lattice: PicardLattice) -> tuple[Divisor, ...]:
    """Simple roots generating W: E_i - E_{i+1}, plus L - E1 - E2 - E3."""
    if not lattice.is_standard:
        raise InputError("Weyl enumeration is defined on standard lattices")
    m = lattice.num_exceptional
    roots = []
    for i in range(1, m):
        roots.append(
            tuple(1 if j == i else (-1 if j == i + 1 else 0) for j in range(m + 1))
        )
    if m >= 3:
        roots.append(tuple(1 if j == 0 else (-1 if j <= 3 else 0) for j in range(m + 1)))
    return tuple(roots)


def reflection_matrix(lattice: PicardLattice, root: Divisor) -> np.ndarray:
    """Matrix M with M @ v = v + (v.root) root, acting on coefficient vectors."""
    if lattice.classify_r(root) != -2 or lattice.k_product(root) != 0:
        raise InputError(f"{root} is not a (-2)-class root")
    r = lattice.rank
    gram = np.array(lattice.gram, dtype=np.int64)
    rt = np.array(root, dtype=np.int64)
    return np.eye(r, dtype=np.int64) + np.outer(rt, gram @ rt)


@lru_cache(maxsize=None)
def regular_marker(lattice: PicardLattice) -> Divisor:
    """An integer vector pairing 1 with every simple root (hence positively
    with every positive root), so its W-stabilizer is trivial."""
    m = lattice.num_exceptional
    if m < 2:
        v = (0,) * lattice.rank
    elif m == 2:
        v = (0, 1, 2)
    else:
        t = -((m + 1) // 2)
        es = tuple(t + i for i in range(m))
        v = (1 - (es[0] + es[1] + es[2]),) + es
    for root in simple_reflection_roots(lattice):
        if lattice.intersect(v, root) != 1:
            raise InternalError(f"marker {v} is not dominant-regular at {root}")
    return v


# -- uint64 packing -----------------------------------------------------
#
# Coordinate 0 gets 8 bits, the others 7 bits each; rank <= 9 fits a
# uint64 exactly.  Bounds are asserted on every call.

_PACK_LEAD_BITS = 8
_PACK_TAIL_BITS = 7


def pack_rows(arr: np.ndarray) -> np.ndarray:
    """Pack integer vectors [..., rank] into uint64 keys, checking bounds."""
    rank = arr.shape[-1]
    if _PACK_LEAD_BITS + (rank - 1) * _PACK_TAIL_BITS > 64:
        raise InternalError(f"rank {rank} does not fit the packing scheme")
    lead = arr[..., 0]
    tail = arr[..., 1:]
    if lead.min(initial=0) < -128 or lead.max(initial=0) > 127:
        raise InternalError("leading coordinate out of packing range [-128, 127]")
    if tail.size and (tail.min() < -64 or tail.max() > 63):
        raise InternalError("coordinate out of packing range [-64, 63]")
    key = (lead.astype(np.int64) + 128).astype(np.uint64)
    seven = np.uint64(_PACK_TAIL_BITS)
    for i in range(rank - 1):
        key = (key << seven) | (tail[..., i].astype(np.int64) + 64).astype(np.uint64)
    return key


def _isin_sorted(keys: np.ndarray, sorted_set: np.ndarray) -> np.ndarray:
    """Membership of keys in a sorted uint64 array."""
    if sorted_set.size == 0:
        return np.zeros(keys.shape, dtype=bool)
    pos = np.searchsorted(sorted_set, keys)
    pos = np.minimum(pos, sorted_set.size - 1)
    return sorted_set[pos] == keys


# -- orbit BFS ----------------------------------------------------------


@dataclass
class OrbitLayer:
    """One BFS layer: markers and the payload carried in lockstep."""

    index: int
    markers: np.ndarray  # [N, rank] int64
    payload: np.ndarray | None  # [N, P, rank] int64
    total_so_far: int


def orbit_layers(
    lattice: PicardLattice,
    payload0: np.ndarray | None = None,
    *,
    memory_budget: int | None = None,
    checkpoint_dir: str | Path | None = None,
    resume: bool = False,
    max_layers: int | None = None,
    chunks: int = 1,
):
    """Yield the W-orbit of (marker, payload) as BFS layers.

    The payload (any stack of lattice vectors, e.g. the terms of a toric
    system or the rows of an identity matrix) is transformed by the same
    reflections as the marker.  Deterministic: layers are sorted by
    packed marker key.  `chunks` splits frontier matrix products into
    pieces; it never changes the emitted layers.

    With `checkpoint_dir`, the visited set and frontier are written after
    every layer and `resume=True` continues from the latest checkpoint.
    """
    if memory_budget is None:
        memory_budget = _memory_budget()
    roots = simple_reflection_roots(lattice)
    if not roots:
        raise InputError("trivial Weyl group: no simple roots on this lattice")
    gens = np.stack([reflection_matrix(lattice, r) for r in roots])
    gens_t = np.ascontiguousarray(gens.transpose(0, 2, 1))
    marker0 = np.array(regular_marker(lattice), dtype=np.int64)

    start_layer = 0
    total = 0
    if checkpoint_dir is not None:
        checkpoint_dir = Path(checkpoint_dir)
        checkpoint_dir.mkdir(parents=True, exist_ok=True)
    if resume:
        if checkpoint_dir is None:
            raise InputError("resume requires a checkpoint directory")
        state = _load_checkpoint(checkpoint_dir)
        if state is None:
            raise InputError(f"no checkpoint found in {checkpoint_dir}")
        start_layer, total, visited, markers, payload = state
        if payload0 is None:
            payload = None
    else:
        markers = marker0[None, :]
        payload = (
            None
            if payload0 is None
            else np.asarray(payload0, dtype=np.int64)[None, :, :]
        )
        visited = np.sort(pack_rows(markers))
        total = 1
        yield OrbitLayer(0, markers, payload, total)
        start_layer = 1
        if checkpoint_dir is not None:
            _save_checkpoint(checkpoint_dir, 0, total, visited, markers, payload)

    layer_index = start_layer
    while markers.shape[0] > 0:
        if max_layers is not None and layer_index > max_layers:
            return
        n = markers.shape[0]
        if memory_budget is not None:
            # candidates (markers + payload) for all generators, plus keys
            per = markers.itemsize * markers.shape[1]
            if payload is not None:
                per += payload.itemsize * payload.shape[1] * payload.shape[2]
            needed = visited.nbytes + len(gens) * n * (per + 8) * 2
            if needed > memory_budget:
                raise ResourceError(
                    f"orbit frontier needs ~{needed} bytes, over the budget "
                    f"{memory_budget}; shard the traversal or raise "
                    f"{MEMORY_BUDGET_ENV}"
                )
        cand_markers = []
        cand_payload = []
        for lo in range(0, n, max(1, -(-n // max(1, chunks)))):
            hi = min(n, lo + max(1, -(-n // max(1, chunks))))
            part_m = markers[lo:hi]
            cand_markers.append(
                np.einsum("nr,gsr->gns", part_m, gens).reshape(-1, part_m.shape[1])
            )
            if payload is not None:
                part_p = payload[lo:hi]
                cand_payload.append(
                    (part_p[None, :, :, :] @ gens_t[:, None, :, :]).reshape(
                        -1, part_p.shape[1], part_p.shape[2]
                    )
                )
        cm = np.concatenate(cand_markers)
        cp = np.concatenate(cand_payload) if payload is not None else None
        keys = pack_rows(cm)
        order = np.argsort(keys, kind="stable")
        keys = keys[order]
        cm = cm[order]
        if cp is not None:
            cp = cp[order]
        first = np.ones(keys.shape[0], dtype=bool)
        first[1:] = keys[1:] != keys[:-1]
        if cp is not None and not first.all():
            # Freeness audit: a repeated marker must carry the same payload.
            # Duplicates are adjacent after the sort, so adjacent
            # comparison within runs covers every duplicate.
            dup = np.nonzero(~first)[0]
            if np.any(cp[dup] != cp[dup - 1]):
                raise InternalError(
                    "duplicate marker carries a different payload: "
                    "the action is not free (internal invariant violated)"
                )
        keys = keys[first]
        cm = cm[first]
        if cp is not None:
            cp = cp[first]
        fresh = ~_isin_sorted(keys, visited)
        markers = cm[fresh]
        payload = cp[fresh] if cp is not None else None
        if markers.shape[0] == 0:
            return
        visited = np.concatenate([visited, keys[fresh]])
        visited.sort()
        total += markers.shape[0]
        yield OrbitLayer(layer_index, markers, payload, total)
        if checkpoint_dir is not None:
            _save_checkpoint(
                checkpoint_dir, layer_index, total, visited, markers, payload
            )
        layer_index += 1


def _save_checkpoint(directory: Path, layer, total, visited, markers, payload):
    tmp = directory / "state.npz.tmp"
    data = {
        "layer": np.int64(layer),
        "total": np.int64(total),
        "visited": visited,
        "markers": markers,
    }
    if payload is not None:
        data["payload"] = payload
    with open(tmp, "wb") as fh:
        np.savez_compressed(fh, **data)
    os.replace(tmp, directory / "state.npz")


def _load_checkpoint(directory: Path):
    path = Path(directory) / "state.npz"
    if not path.exists():
        return None
    with np.load(path) as data:
        layer = int(data["layer"])
        total = int(data["total"])
        visited = data["visited"]
        markers = data["markers"]
        payload = data["payload"] if "payload" in data.files else None
    return layer + 1, total, visited, markers, payload


# -- group enumeration --------------------------------------------------


@dataclass(frozen=True)
class WeylElement:
    """Group element as the images of the basis vectors."""

    lattice: PicardLattice
    images: tuple[Divisor, ...]  # images[i] = w(e_i)

    def apply(self, d: Divisor) -> Divisor:
        out = [0] * self.lattice.rank
        for coeff, image in zip(d, self.images, strict=True):
            if coeff:
                for j, x in enumerate(image):
                    out[j] += coeff * x
        return tuple(out)

    def matrix(self) -> np.ndarray:
        """M with M @ v = w(v) on coefficient vectors."""
        return np.array(self.images, dtype=np.int64).T

    def verify(self) -> None:
        lat = self.lattice
        for i in range(lat.rank):
            for j in range(i, lat.rank):
                if lat.intersect(self.images[i], self.images[j]) != lat.gram[i][j]:
                    raise InternalError("Weyl element does not preserve the form")
        if self.apply(lat.canonical) != lat.canonical:
            raise InternalError("Weyl element does not fix K")


def identity_element(lattice: PicardLattice) -> WeylElement:
    eye = tuple(
        tuple(int(i == j) for j in range(lattice.rank)) for i in range(lattice.rank)
    )
    return WeylElement(lattice, eye)


def enumerate_group(degree: int, *, verify_every: int = 10_000, verify_all: bool = False):
    """Stream every element of W exactly once (deterministic order).

    Carries the identity's rows through the orbit BFS, so each payload is
    the stack of basis-vector images.  Gram/K preservation is asserted on
    a sample (or everywhere with verify_all).
    """
    lattice = _lattice_for_degree(degree)
    eye = np.eye(lattice.rank, dtype=np.int64)
    count = 0
    for layer in orbit_layers(lattice, eye):
        for row in layer.payload:
            el = WeylElement(lattice, tuple(tuple(int(x) for x in img) for img in row))
            count += 1
            if verify_all or count % verify_every == 0:
                el.verify()
            yield el


def _lattice_for_degree(degree: int) -> PicardLattice:
    if not 1 <= degree <= 7:
        raise InputError(f"Weyl enumeration supports degrees 1..7, got {degree}")
    return PicardLattice.standard(degree)


@lru_cache(maxsize=None)
def group_order(degree: int) -> int:
    """|W| by marker-only BFS."""
    lattice = _lattice_for_degree(degree)
    if not simple_reflection_roots(lattice):
        return 1
    total = 0
    for layer in orbit_layers(lattice):
        total = layer.total_so_far
    return total


def orbit_of_toric_system(A0: ToricSystem, *, check_freeness: bool = False):
    """Stream the |W| distinct images of A0, each exactly once.

    With check_freeness, every emitted system is additionally recorded
    (as packed bytes) and a repeat raises an internal error.
    """
    lattice = A0.lattice
    payload0 = np.array(A0.terms, dtype=np.int64)
    seen: set[bytes] = set()
    for layer in orbit_layers(lattice, payload0):
        for row in layer.payload:
            if check_freeness:
                key = row.tobytes()
                if key in seen:
                    raise InternalError("orbit revisited a toric system (not free)")
                seen.add(key)
            yield ToricSystem(lattice, tuple(tuple(int(x) for x in t) for t in row))


def orbit_system_arrays(A0: ToricSystem, **kwargs):
    """Raw layer arrays [N, n, rank] of the orbit of A0 (census fast path)."""
    payload0 = np.array(A0.terms, dtype=np.int64)
    for layer in orbit_layers(A0.lattice, payload0, **kwargs):
        yield layer


# -- stabilizers of root sets -------------------------------------------


def stabilizer_elements_of_root_set(
    degree: int, roots: tuple[Divisor, ...]
) -> tuple[WeylElement, ...]:
    """All w in W permuting the given root set, as explicit elements.

    Two methods, both exact:

    * If the roots together with K span the lattice over Q and the degree
      is at most 2 (where every integral isometry fixing K lies in W),
      candidates are the product-preserving permutations of the root set;
      each determines a unique rational matrix, kept iff integral.
    * Otherwise the full group is enumerated and filtered (degrees >= 3,
      where |W| <= 51840).
    """
    lattice = _lattice_for_degree(degree)
    roots = tuple(roots)
    for r in roots:
        if lattice.classify_r(r) != -2 or lattice.k_product(r) != 0:
            raise InputError(f"{r} is not a (-2)-class root")
    if not roots:
        if group_order(degree) > 100_000:
            raise ResourceError(
                "empty root set: the stabilizer is all of W; enumerate it "
                "explicitly only for small degrees"
            )
        return tuple(enumerate_group(degree))
    span = np.array(list(roots) + [lattice.canonical], dtype=np.int64)
    full_rank = np.linalg.matrix_rank(span.astype(float)) == lattice.rank
    if degree <= 2 and full_rank:
        return _stabilizer_by_permutations(lattice, roots)
    if degree <= 2:
        return stabilizers_for_root_sets(degree, (roots,))[0]
    out = []
    target = frozenset(roots)
    for el in enumerate_group(degree):
        if frozenset(el.apply(r) for r in roots) == target:
            out.append(el)
    return tuple(out)


def stabilizers_for_root_sets(
    degree: int, root_sets
) -> tuple[tuple[WeylElement, ...], ...]:
    """Setwise stabilizers of several root sets in one full-group pass.

    The whole group is streamed once as basis-image stacks; for every
    root set, elements whose image of the set (as a sorted key tuple)
    matches the original are collected.  Quadratic-free: one matrix
    product per (layer, root set).
    """
    lattice = _lattice_for_degree(degree)
    root_sets = tuple(tuple(rs) for rs in root_sets)
    root_arrays = [np.array(rs, dtype=np.int64) for rs in root_sets]
    targets = [np.sort(pack_rows(arr)) for arr in root_arrays]
    found: list[list[WeylElement]] = [[] for _ in root_sets]
    eye = np.eye(lattice.rank, dtype=np.int64)
    for layer in orbit_layers(lattice, eye):
        payload = layer.payload  # [N, rank, rank]; rows are images of e_i
        for which, (arr, target) in enumerate(zip(root_arrays, targets)):
            if arr.size == 0:
                continue
            # w(v) = v @ images for a row vector v.
            images = arr[None, :, :] @ payload  # [N, k, rank]
            keys = np.sort(pack_rows(images), axis=1)
            mask = np.all(keys == target[None, :], axis=1)
            for idx in np.nonzero(mask)[0]:
                el = WeylElement(
                    lattice,
                    tuple(tuple(int(x) for x in img) for img in payload[idx]),
                )
                el.verify()
                found[which].append(el)
    return tuple(tuple(f) for f in found)


def _stabilizer_by_permutations(
    lattice: PicardLattice, roots: tuple[Divisor, ...]
) -> tuple[WeylElement, ...]:
    k = len(roots)
    prod = [
        [lattice.intersect(roots[i], roots[j]) for j in range(k)] for i in range(k)
    ]
    basis = np.array(list(roots) + [lattice.canonical], dtype=np.int64)  # rows
    # For images B (rows), the matrix M with M @ basis_row_i = image_row_i
    # acting on coefficient columns satisfies  M @ basis.T = images.T.
    out: list[WeylElement] = []
    perm: list[int] = []
    used = [False] * k

    def extend():
        if len(perm) == k:
            el = _solve_isometry(lattice, basis, perm, roots)
            if el is not None:
                out.append(el)
            return
        i = len(perm)
        for j in range(k):
            if used[j]:
                continue
            if all(prod[perm[a]][j] == prod[a][i] for a in range(i)):
                used[j] = True
                perm.append(j)
                extend()
                perm.pop()
                used[j] = False

    extend()
    return tuple(out)


def _solve_isometry(lattice, basis, perm, roots):
    images = np.array(
        [roots[j] for j in perm] + [lattice.canonical], dtype=np.float64
    )
    # Want M with M @ r_i = s_i for basis rows r_i, image rows s_i;
    # equivalently M.T = basis^{-1} @ images on row stacks.
    try:
        m = np.linalg.solve(basis.astype(np.float64), images).T
    except np.linalg.LinAlgError:
        return None
    m = np.rint(m).astype(np.int64)
    # Exact verification: correct images and Gram preservation.
    if not np.array_equal(m @ basis.T, np.array(
        [roots[j] for j in perm] + [lattice.canonical], dtype=np.int64
    ).T):
        return None
    gram = np.array(lattice.gram, dtype=np.int64)
    if not np.array_equal(m.T @ gram @ m, gram):
        return None
    el = WeylElement(
        lattice,
        tuple(tuple(int(x) for x in m[:, i]) for i in range(lattice.rank)),
    )
    el.verify()
    return el


def stabilizer_order_of_root_set(degree: int, roots) -> int:
    roots = tuple(roots)
    if not roots:
        return group_order(degree)
    order = len(stabilizer_elements_of_root_set(degree, roots))
    if group_order(degree) % order != 0:
        raise InternalError("stabilizer order does not divide the group order")
    return order
