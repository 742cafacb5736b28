"""Exact dense linear algebra over a prime field F_p.

Matrices are plain ``numpy`` int64 arrays whose entries are residues in
``[0, p)``. Every basis this module returns is read off a reduced row
echelon form, so identical inputs always give bit-identical outputs.
"""
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

# A FieldMatrix is an int64 array of residues mod p (zero-size shapes allowed).
FieldMatrix = np.ndarray

# Keeps p * p * n inside int64 for every matrix size this toolkit builds.
MAX_PRIME = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class PrimeField:
    """Arithmetic and Gaussian elimination over F_p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not a prime")
        if p >= MAX_PRIME:
            raise ValueError(f"prime {p} is too large (must be below {MAX_PRIME})")
        self.p = p

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    # --- Construction ---

    def matrix(self, data, rows: Optional[int] = None, cols: Optional[int] = None) -> FieldMatrix:
        m = np.array(data, dtype=np.int64)
        if rows is not None and cols is not None:
            m = m.reshape(rows, cols)
        return m % self.p

    def zeros(self, rows: int, cols: int) -> FieldMatrix:
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, n: int) -> FieldMatrix:
        return np.eye(n, dtype=np.int64)

    def random_matrix(self, rng: np.random.Generator, rows: int, cols: int) -> FieldMatrix:
        return rng.integers(0, self.p, size=(rows, cols), dtype=np.int64)

    # --- Arithmetic ---

    def mul(self, a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
        if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
            return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        return (a @ b) % self.p

    def add(self, a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
        return (a + b) % self.p

    def sub(self, a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
        return (a - b) % self.p

    def scale(self, c: int, a: FieldMatrix) -> FieldMatrix:
        return (int(c) % self.p * a) % self.p

    def inv_scalar(self, x: int) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(x, self.p - 2, self.p)

    def power(self, a: FieldMatrix, k: int) -> FieldMatrix:
        result = self.identity(a.shape[0])
        base = a % self.p
        while k > 0:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    # --- Elimination ---

    def rref(self, m: FieldMatrix) -> Tuple[FieldMatrix, List[int]]:
        """Reduced row echelon form and the pivot column list."""
        p = self.p
        R = np.array(m, dtype=np.int64) % p
        rows, cols = R.shape
        pivots: List[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(R[r:, c])[0]
            if nz.size == 0:
                continue
            k = r + int(nz[0])
            if k != r:
                R[[r, k]] = R[[k, r]]
            R[r] = (R[r] * self.inv_scalar(R[r, c])) % p
            col = R[:, c].copy()
            col[r] = 0
            others = np.nonzero(col)[0]
            if others.size:
                R[others] = (R[others] - np.outer(col[others], R[r])) % p
            pivots.append(c)
            r += 1
        return R, pivots

    def rank(self, m: FieldMatrix) -> int:
        if m.size == 0:
            return 0
        return len(self.rref(m)[1])

    def kernel_basis(self, m: FieldMatrix) -> FieldMatrix:
        """Columns form the canonical basis of the right null space of m."""
        cols = m.shape[1]
        if m.shape[0] == 0:
            return self.identity(cols)
        R, pivots = self.rref(m)
        pivot_set = set(pivots)
        free = [c for c in range(cols) if c not in pivot_set]
        K = self.zeros(cols, len(free))
        for j, f in enumerate(free):
            K[f, j] = 1
            for i, pc in enumerate(pivots):
                K[pc, j] = (-R[i, f]) % self.p
        return K

    def image_basis(self, m: FieldMatrix) -> FieldMatrix:
        """Columns form the canonical basis of the column space of m."""
        rows = m.shape[0]
        if m.shape[1] == 0:
            return self.zeros(rows, 0)
        R, pivots = self.rref(m.T)
        return np.ascontiguousarray(R[: len(pivots)].T)

    def solve(self, m: FieldMatrix, b: FieldMatrix) -> Optional[FieldMatrix]:
        """x with m @ x = b, free variables set to 0; None if inconsistent."""
        if m.shape[0] != b.shape[0]:
            raise ValueError(f"row counts differ: {m.shape[0]} vs {b.shape[0]}")
        cols = m.shape[1]
        if m.shape[0] == 0:
            return self.zeros(cols, b.shape[1])
        R, pivots = self.rref(np.hstack([m % self.p, b % self.p]))
        if pivots and pivots[-1] >= cols:
            return None
        x = self.zeros(cols, b.shape[1])
        for i, pc in enumerate(pivots):
            x[pc] = R[i, cols:]
        return x

    def cokernel_projection(self, m: FieldMatrix) -> FieldMatrix:
        """Surjection q from the codomain of m with kernel image(m)."""
        return np.ascontiguousarray(self.kernel_basis(m.T).T)

    def inverse(self, m: FieldMatrix) -> Optional[FieldMatrix]:
        n = m.shape[0]
        if m.shape[1] != n or self.rank(m) != n:
            return None
        return self.solve(m, self.identity(n))

    def right_inverse(self, m: FieldMatrix) -> FieldMatrix:
        """s with m @ s = 1, for m of full row rank."""
        s = self.solve(m, self.identity(m.shape[0]))
        if s is None:
            raise ValueError("matrix has no right inverse")
        return s

    def coordinates(self, basis: FieldMatrix, vectors: FieldMatrix) -> FieldMatrix:
        """Coordinates of the columns of `vectors` in the column basis `basis`."""
        x = self.solve(basis, vectors)
        if x is None:
            raise ValueError("vectors do not lie in the span of the basis")
        return x

    def in_span(self, basis: FieldMatrix, vectors: FieldMatrix) -> bool:
        if vectors.shape[1] == 0:
            return True
        return self.solve(basis, vectors) is not None

    # --- Scalar polynomials ---

    def eval_poly(self, coeffs: List[int], x: int) -> int:
        """Horner evaluation, coefficients from the constant term upward."""
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def roots(self, coeffs: List[int]) -> List[int]:
        return [x for x in range(self.p) if self.eval_poly(coeffs, x) == 0]


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


# --- Operations on the session field ---

def rank(m: FieldMatrix, p: int) -> int:
    return prime_field(p).rank(m)


def kernel_basis(m: FieldMatrix, p: int) -> FieldMatrix:
    return prime_field(p).kernel_basis(m)


def solve(m: FieldMatrix, b: FieldMatrix, p: int) -> Optional[FieldMatrix]:
    return prime_field(p).solve(m, b)


def cokernel_projection(m: FieldMatrix, p: int) -> FieldMatrix:
    return prime_field(p).cokernel_projection(m)
