"""Dense complex linear algebra primitives.

Provides the four operations every other module leans on: Hermitian
eigendecomposition, the principal PSD square root, unitary congruence
diagonalization of complex symmetric matrices (Takagi-type, built from the
real 2l x 2l lift), and orthogonal balancing of the diagonal of a real
matrix.  All functions are pure and operate on plain numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePairing, NonHermitianInput, NotPositiveSemidefinite, NotSymmetric

TOL_HERM = 1e-10
TOL_PSD = 1e-10


def _as_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def mult_i_lift(l: int) -> np.ndarray:
    """Real 2l x 2l lift J of scalar multiplication by i."""
    z = np.zeros((l, l))
    i = np.eye(l)
    return np.block([[z, -i], [i, z]])


@dataclass(frozen=True)
class RealificationPair:
    """A complex dimension together with the real 2l x 2l lift of a map.

    Linear maps lift to matrices commuting with ``mult_i_lift(l)``;
    antilinear maps (a unitary composed with complex conjugation) lift to
    matrices anticommuting with it.
    """

    complex_dim: int
    real_matrix: np.ndarray

    @classmethod
    def from_linear(cls, w: np.ndarray) -> "RealificationPair":
        w = _as_square(w)
        l = w.shape[0]
        a, b = w.real, w.imag
        return cls(l, np.block([[a, -b], [b, a]]))

    @classmethod
    def from_antilinear(cls, omega: np.ndarray) -> "RealificationPair":
        """Lift of x -> omega @ conj(x)."""
        omega = _as_square(omega)
        l = omega.shape[0]
        a, b = omega.real, omega.imag
        return cls(l, np.block([[a, b], [b, -a]]))


def hermitian_eig(m: np.ndarray, tol: float = TOL_HERM) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    m : complex Hermitian matrix.
    tol : relative Frobenius tolerance for the Hermiticity check.

    Returns
    -------
    (eigenvalues, eigenvectors) with eigenvalues ascending and eigenvectors
    as orthonormal columns, so that ``V @ diag(w) @ V.conj().T == m``.

    Raises
    ------
    NonHermitianInput if ``||m - m^dag||_F > tol * ||m||_F``.
    """
    m = _as_square(m)
    scale = np.linalg.norm(m)
    dev = np.linalg.norm(m - m.conj().T)
    if dev > tol * scale:
        raise NonHermitianInput(f"||m - m^dag|| = {dev:.3e} exceeds {tol:.1e} * ||m|| = {tol * scale:.3e}")
    w, v = np.linalg.eigh(m)
    return w, v


def psd_sqrt(m: np.ndarray, tol: float = TOL_PSD) -> np.ndarray:
    """Principal square root of a Hermitian positive semidefinite matrix.

    Eigenvalues in ``[-tol * |w|_max, 0)`` are clamped to zero (roundoff on
    analytically PSD inputs); anything more negative raises
    NotPositiveSemidefinite.
    """
    w, v = hermitian_eig(m, tol=tol)
    scale = max(abs(w[0]), abs(w[-1]))
    if w[0] < -tol * scale:
        raise NotPositiveSemidefinite(f"minimum eigenvalue {w[0]:.3e} below -{tol:.1e} * {scale:.3e}")
    r = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    return 0.5 * (r + r.conj().T)


def symmetric_congruence_diag(
    eta: np.ndarray, tol: float = TOL_HERM
) -> tuple[np.ndarray, np.ndarray]:
    """Unitary congruence diagonalization of a complex symmetric matrix.

    Returns a unitary ``u`` and nonnegative, nonincreasing ``lam`` with
    ``u @ eta @ u.T == diag(lam)``.  This is not a similarity
    diagonalization of ``eta``; it diagonalizes the real symmetric lift of
    the antilinear map ``x -> eta @ conj(x)``.

    The construction: the 2l x 2l lift anticommutes with the
    multiplication-by-i lift J, so its spectrum comes in (+lam, -lam)
    pairs.  One eigenvector per pair is kept, the orthogonal matrix
    ``(v_0 ... v_{l-1} Jv_0 ... Jv_{l-1})`` commutes with J and therefore
    is the lift of a unitary, which is returned (as its adjoint).  The
    ``lam`` values equal the singular values of ``eta``.

    Raises
    ------
    NotSymmetric if ``eta != eta.T`` beyond ``tol`` (relative).
    DegeneratePairing if the pairing of numerically-zero eigenvalues with
    their J-images cannot be completed.
    """
    eta = _as_square(eta)
    l = eta.shape[0]
    scale = np.linalg.norm(eta)
    if np.linalg.norm(eta - eta.T) > tol * max(scale, 1e-300):
        raise NotSymmetric(f"||eta - eta.T|| exceeds {tol:.1e} * ||eta||")

    a, b = eta.real, eta.imag
    lift = np.block([[a, b], [b, -a]])  # real symmetric, anticommutes with J
    w, vecs = np.linalg.eigh(lift)
    jmat = mult_i_lift(l)

    mag = max(np.max(np.abs(w)), 1e-300) if w.size else 1e-300
    zero_tol = 1e-12 * mag
    pos = [i for i in range(2 * l) if w[i] > zero_tol]
    zero = [i for i in range(2 * l) if abs(w[i]) <= zero_tol]
    if len(zero) % 2 != 0 or len(pos) + len(zero) // 2 != l:
        raise DegeneratePairing(
            f"cannot split spectrum into +/- pairs: {len(pos)} positive, {len(zero)} near zero"
        )

    cols = [vecs[:, i] for i in pos]
    lam = [w[i] for i in pos]
    # Zero eigenspace is J-invariant: pick half of it, each new vector
    # orthogonalized against the chosen ones and their J-images.
    chosen: list[np.ndarray] = []
    basis = vecs[:, zero]
    for _ in range(len(zero) // 2):
        for k in range(basis.shape[1]):
            v = basis[:, k].copy()
            for c in chosen:
                v -= (c @ v) * c
                jc = jmat @ c
                v -= (jc @ v) * jc
            nv = np.linalg.norm(v)
            if nv > 1e-6:
                chosen.append(v / nv)
                break
        else:
            raise DegeneratePairing("Gram-Schmidt against J-images exhausted the zero eigenspace")
    cols.extend(chosen)
    lam.extend([0.0] * len(chosen))

    order = np.argsort(-np.asarray(lam), kind="stable")
    sel = np.column_stack([cols[i] for i in order])
    lam = np.asarray([lam[i] for i in order])

    # o = (v's | Jv's) is orthogonal and commutes with J, hence the lift of a
    # unitary; the congruence that diagonalizes eta is its adjoint.
    u = (sel[:l, :] + 1j * sel[l:, :]).conj().T
    resid = np.linalg.norm(u @ eta @ u.T - np.diag(lam))
    if resid > 1e-8 * max(scale, 1.0):
        raise DegeneratePairing(f"congruence residual {resid:.3e} too large (coincident eigenvalues?)")
    return u, lam


def orthogonal_diag_balance(a: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Real orthogonal ``o`` making every diagonal entry of ``o @ a @ o.T``
    equal to ``trace(a) / l``.

    Works for any real square matrix.  Repeatedly picks a diagonal entry
    above the average and one below, and zeroes the deviation of the first
    with a Givens rotation whose angle is found by bisection (the rotated
    diagonal entry is continuous in the angle, so a root exists between 0
    and pi/2).
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square real matrix, got shape {a.shape}")
    l = a.shape[0]
    if l <= 1:
        return np.eye(l)
    target = np.trace(a) / l
    scale = max(1.0, np.max(np.abs(np.diag(a))), abs(target))
    b = a.copy()
    o = np.eye(l)
    for i in range(l - 1):
        if abs(b[i, i] - target) <= tol * scale:
            continue
        side = np.sign(b[i, i] - target)
        opposite = [j for j in range(i + 1, l) if np.sign(b[j, j] - target) == -side]
        if not opposite:
            continue  # remaining deviations are below resolution
        j = max(opposite, key=lambda q: abs(b[q, q] - target))

        def rotated_entry(t: float) -> float:
            c, s = np.cos(t), np.sin(t)
            return c * c * b[i, i] + s * s * b[j, j] - c * s * (b[i, j] + b[j, i]) - target

        lo, hi = 0.0, 0.5 * np.pi
        flo = rotated_entry(lo)
        if flo * rotated_entry(hi) > 0.0:
            continue
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if rotated_entry(mid) * flo <= 0.0:
                hi = mid
            else:
                lo = mid
                flo = rotated_entry(lo)
            if hi - lo < 1e-16:
                break
        t = 0.5 * (lo + hi)
        g = np.eye(l)
        c, s = np.cos(t), np.sin(t)
        g[i, i] = c
        g[i, j] = -s
        g[j, i] = s
        g[j, j] = c
        b = g @ b @ g.T
        o = g @ o
    return o
