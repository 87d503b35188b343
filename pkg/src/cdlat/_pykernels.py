"""Pure numpy fallback for the hot Cayley-table kernels.

Mirrors the API of the compiled ``_ckernels.CKernel``.  Subgroup element
sets cross the boundary as Python int bitmasks (bit i = element id i).
"""

from __future__ import annotations

import numpy as np

from .bitset import full_mask, mask_from_bool, mask_to_bool, mask_to_indices

_CHUNK = 2_000_000


class PyKernel:
    """Set-algebra and closure kernels over one Cayley table."""

    backend_name = "py"

    def __init__(self, mul: np.ndarray):
        mul = np.ascontiguousarray(mul, dtype=np.int32)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
            raise ValueError("multiplication table must be square")
        self.mul = mul
        self.n = int(mul.shape[0])
        self._inv = None
        self._commute = None

    # -- basic tables ----------------------------------------------------

    def inverses(self) -> np.ndarray:
        if self._inv is None:
            self._inv = (self.mul == 0).argmax(axis=1).astype(np.int32)
        return self._inv

    def element_orders(self) -> np.ndarray:
        n = self.n
        mul = self.mul
        orders = np.ones(n, dtype=np.int64)
        idx = np.arange(n)
        cur = idx.copy()
        alive = cur != 0
        while alive.any():
            sub = idx[alive]
            cur[sub] = mul[cur[sub], sub]
            orders[sub] += 1
            alive[sub] = cur[sub] != 0
        return orders

    def is_latin(self) -> bool:
        n = self.n
        ref = np.arange(n, dtype=np.int32)
        rows = np.sort(self.mul, axis=1)
        cols = np.sort(self.mul, axis=0)
        return bool((rows == ref).all() and (cols == ref[:, None]).all())

    def is_associative_exhaustive(self) -> bool:
        mul = self.mul
        for z in range(self.n):
            col = mul[:, z]
            if not np.array_equal(col[mul], mul[:, col]):
                return False
        return True

    def is_associative_sampled(self, triples: np.ndarray) -> bool:
        mul = self.mul
        x, y, z = triples[:, 0], triples[:, 1], triples[:, 2]
        return bool(np.array_equal(mul[mul[x, y], z], mul[x, mul[y, z]]))

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    # -- subgroup closure ------------------------------------------------

    def extend(self, base_mask: int, gen: int) -> int:
        """Subgroup generated by a closed subgroup plus one extra element.

        Walks the coset graph: every newly reached coset H*t is filled in
        one shot, so the cost is linear in the size of the result.
        """
        n = self.n
        if base_mask == 0:
            base_mask = 1
        if (base_mask >> gen) & 1:
            return base_mask
        mul = self.mul
        base_ids = mask_to_indices(base_mask, n)
        gens = np.append(base_ids, gen)
        member = np.zeros(n, dtype=bool)
        member[base_ids] = True
        queue = [0]
        while queue:
            r = queue.pop()
            ts = mul[r, gens]
            for t in ts[~member[ts]]:
                if member[t]:
                    continue
                member[mul[base_ids, t]] = True
                queue.append(int(t))
        return mask_from_bool(member)

    def closure(self, seed) -> int:
        mask = 1
        for x in seed:
            x = int(x)
            if not (mask >> x) & 1:
                mask = self.extend(mask, x)
        return mask

    # -- centralizer family ----------------------------------------------

    def _commute_matrix(self) -> np.ndarray:
        if self._commute is None:
            self._commute = self.mul == self.mul.T
        return self._commute

    def centralizer(self, mask: int) -> int:
        ids = mask_to_indices(mask, self.n)
        if ids.size == 0:
            return full_mask(self.n)
        rows = self._commute_matrix()[ids]
        return mask_from_bool(np.logical_and.reduce(rows, axis=0))

    def normalizer(self, mask: int) -> int:
        n = self.n
        mul = self.mul
        inv = self.inverses()
        ids = mask_to_indices(mask, n)
        member = mask_to_bool(mask, n)
        out = np.ones(n, dtype=bool)
        chunk = max(1, _CHUNK // max(1, ids.size))
        for lo in range(0, n, chunk):
            xs = np.arange(lo, min(lo + chunk, n))
            prods = mul[np.ix_(ids, xs)]
            conj = mul[inv[xs][None, :], prods]
            out[xs] = member[conj].all(axis=0)
        return mask_from_bool(out)

    def conjugate(self, mask: int, x: int) -> int:
        ids = mask_to_indices(mask, self.n)
        inv = self.inverses()
        moved = self.mul[inv[x], self.mul[ids, x]]
        out = np.zeros(self.n, dtype=bool)
        out[moved] = True
        return mask_from_bool(out)

    def right_coset(self, mask: int, x: int) -> int:
        ids = mask_to_indices(mask, self.n)
        out = np.zeros(self.n, dtype=bool)
        out[self.mul[ids, x]] = True
        return mask_from_bool(out)

    def commutator_set(self, amask: int, bmask: int) -> int:
        """Set of commutators x^-1 y^-1 x y over x in a, y in b (not closed)."""
        n = self.n
        mul = self.mul
        inv = self.inverses()
        a = mask_to_indices(amask, n)
        b = mask_to_indices(bmask, n)
        out = np.zeros(n, dtype=bool)
        if a.size == 0 or b.size == 0:
            out[0] = True
            return mask_from_bool(out)
        chunk = max(1, _CHUNK // max(1, b.size))
        for lo in range(0, a.size, chunk):
            arows = a[lo : lo + chunk]
            left = mul[np.ix_(inv[arows], inv[b])]
            right = mul[np.ix_(arows, b)]
            out[mul[left, right].ravel()] = True
        return mask_from_bool(out)
