"""Exact symbolic Pauli-string algebra and Jordan-Wigner fermion mapping.

Conventions used throughout the package:

* A Pauli string is a scalar coefficient times a tensor product of X/Y/Z
  factors on 0-based qubit indices.  Identity factors are never stored, so
  ``locality()`` is simply the number of stored factors.
* Fermionic spin-orbitals are 1-based, ordered by non-decreasing energy.
  Orbital ``j`` maps to qubit ``j - 1``.  All CLI output reports 1-based
  orbitals and 0-based qubits.
* Ladder operators follow ``a_j^dag = 1/2 [prod_{k<j} Z_k] (X_j - i Y_j)``
  and ``a_j = 1/2 [prod_{k<j} Z_k] (X_j + i Y_j)``, so the reference state
  with orbitals 1..n_e occupied is ``|1...1 0...0>``.

Excitation operators are composed symbolically from the ladder operators
and canonicalized, rather than transcribed from any displayed closed form.
A consequence worth knowing: for a double excitation ``i > j > alpha > beta``
the Z-chains of the two creation (and two annihilation) factors cancel
pairwise, so the eight resulting strings act on ``[beta, alpha] u [j, i]``
and have locality ``(alpha-beta+1) + (i-j+1)``.  Only when ``j = alpha+1``
does this equal the contiguous span ``i - beta + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

AXES = ("X", "Y", "Z")

# Tolerance below which a canonicalized coefficient is treated as zero.
COEFF_TOL = 1e-12

# Single-qubit products: (a, b) -> (phase, result axis or None for identity).
_MUL_TABLE = {
    ("X", "X"): (1.0, None),
    ("Y", "Y"): (1.0, None),
    ("Z", "Z"): (1.0, None),
    ("X", "Y"): (1j, "Z"),
    ("Y", "X"): (-1j, "Z"),
    ("Y", "Z"): (1j, "X"),
    ("Z", "Y"): (-1j, "X"),
    ("Z", "X"): (1j, "Y"),
    ("X", "Z"): (-1j, "Y"),
}


@dataclass(frozen=True)
class PauliString:
    """A phase-carrying tensor product of Pauli factors on indexed qubits.

    ``factors`` is a tuple of ``(qubit, axis)`` pairs sorted by qubit index;
    absent qubits carry the identity.  Instances are immutable and safe to
    share across threads.
    """

    coefficient: complex = 1.0
    factors: tuple[tuple[int, str], ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.factors))
        seen = set()
        for qubit, axis in ordered:
            if qubit < 0:
                raise ValueError(f"negative qubit index {qubit}")
            if axis not in AXES:
                raise ValueError(f"unknown Pauli axis {axis!r}")
            if qubit in seen:
                raise ValueError(f"duplicate factor on qubit {qubit}")
            seen.add(qubit)
        object.__setattr__(self, "factors", ordered)
        object.__setattr__(self, "coefficient", complex(self.coefficient))

    @classmethod
    def from_map(cls, coefficient: complex, factor_map: dict[int, str]) -> "PauliString":
        return cls(coefficient, tuple(factor_map.items()))

    @classmethod
    def identity(cls, coefficient: complex = 1.0) -> "PauliString":
        return cls(coefficient, ())

    def factor_map(self) -> dict[int, str]:
        return dict(self.factors)

    def locality(self) -> int:
        """Number of qubits acted on non-trivially."""
        return len(self.factors)

    def qubits(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def adjoint(self) -> "PauliString":
        return PauliString(self.coefficient.conjugate(), self.factors)

    def with_coefficient(self, coefficient: complex) -> "PauliString":
        return PauliString(coefficient, self.factors)

    def __mul__(self, other: "PauliString") -> "PauliString":
        return pauli_mul(self, other)

    def label(self) -> str:
        if not self.factors:
            return "I"
        return " ".join(f"{axis}{qubit}" for qubit, axis in self.factors)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"PauliString({self.coefficient:+g}, {self.label()})"


def pauli_mul(a: PauliString, b: PauliString) -> PauliString:
    """Canonical product of two Pauli strings, phase accumulated per qubit.

    The result coefficient is ``a.coefficient * b.coefficient * phase`` where
    the phase has modulus 1; for unit-coefficient inputs the product is again
    unit-modulus.
    """
    coeff = a.coefficient * b.coefficient
    out = dict(a.factors)
    for qubit, axis in b.factors:
        prev = out.get(qubit)
        if prev is None:
            out[qubit] = axis
            continue
        phase, result = _MUL_TABLE[(prev, axis)]
        coeff *= phase
        if result is None:
            del out[qubit]
        else:
            out[qubit] = result
    return PauliString.from_map(coeff, out)


@dataclass(frozen=True)
class PauliSum:
    """A linear combination of Pauli strings (Hamiltonians, mapped operators).

    Construction canonicalizes: terms with identical factor maps are merged
    by coefficient addition and terms with ``|coeff| < COEFF_TOL`` dropped.
    Term order is deterministic (sorted by factor tuple).
    """

    terms: tuple[PauliString, ...] = field(default=())

    def __post_init__(self) -> None:
        merged: dict[tuple[tuple[int, str], ...], complex] = {}
        for term in self.terms:
            merged[term.factors] = merged.get(term.factors, 0.0) + term.coefficient
        canonical = tuple(
            PauliString(coeff, factors)
            for factors, coeff in sorted(merged.items())
            if abs(coeff) >= COEFF_TOL
        )
        object.__setattr__(self, "terms", canonical)

    @classmethod
    def of(cls, *terms: PauliString) -> "PauliSum":
        return cls(tuple(terms))

    @classmethod
    def zero(cls) -> "PauliSum":
        return cls(())

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: "PauliSum") -> "PauliSum":
        return PauliSum(self.terms + other.terms)

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + other.scale(-1.0)

    def scale(self, factor: complex) -> "PauliSum":
        return PauliSum(tuple(t.with_coefficient(t.coefficient * factor) for t in self.terms))

    def __matmul__(self, other: "PauliSum") -> "PauliSum":
        return PauliSum(tuple(pauli_mul(a, b) for a in self.terms for b in other.terms))

    def adjoint(self) -> "PauliSum":
        return PauliSum(tuple(t.adjoint() for t in self.terms))

    def is_hermitian(self, tol: float = COEFF_TOL) -> bool:
        return all(abs(t.coefficient.imag) <= tol for t in self.terms)

    def is_anti_hermitian(self, tol: float = COEFF_TOL) -> bool:
        return all(abs(t.coefficient.real) <= tol for t in self.terms)

    def max_qubit(self) -> int:
        """Largest qubit index acted on, or -1 for identity/empty sums."""
        qubits = [q for t in self.terms for q in t.qubits()]
        return max(qubits) if qubits else -1

    def localities(self) -> tuple[int, ...]:
        return tuple(t.locality() for t in self.terms)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        body = " + ".join(f"({t.coefficient:+g})*{t.label()}" for t in self.terms)
        return f"PauliSum[{body or '0'}]"


def identity_sum(coefficient: complex = 1.0) -> PauliSum:
    return PauliSum.of(PauliString.identity(coefficient))


def jw_ladder(j: int, kind: str) -> PauliSum:
    """Jordan-Wigner image of a ladder operator on 1-based orbital ``j``.

    ``kind`` is ``"create"`` or ``"annihilate"``.  The result is a two-term
    sum with 1/2 prefactors and a Z chain on qubits ``0 .. j-2``.
    """
    if j < 1:
        raise ValueError(f"orbital index must be >= 1, got {j}")
    if kind not in ("create", "annihilate"):
        raise ValueError(f"kind must be 'create' or 'annihilate', got {kind!r}")
    chain = tuple((q, "Z") for q in range(j - 1))
    x_term = PauliString(0.5, chain + ((j - 1, "X"),))
    y_sign = -0.5j if kind == "create" else 0.5j
    y_term = PauliString(y_sign, chain + ((j - 1, "Y"),))
    return PauliSum.of(x_term, y_term)


def single_excitation_strings(i: int, alpha: int) -> PauliSum:
    """JW image of ``a_i^dag a_alpha - a_alpha^dag a_i`` for ``i > alpha >= 1``.

    The coefficients come from composing the ladder products symbolically.
    The result has exactly 2 strings, each ``(i - alpha + 1)``-local, and is
    anti-Hermitian.
    """
    if not (i > alpha >= 1):
        raise ValueError(f"need i > alpha >= 1, got i={i}, alpha={alpha}")
    forward = jw_ladder(i, "create") @ jw_ladder(alpha, "annihilate")
    return forward - forward.adjoint()


def double_excitation_strings(i: int, j: int, alpha: int, beta: int) -> PauliSum:
    """JW image of ``a_i^dag a_j^dag a_alpha a_beta - h.c.`` (canonical order).

    Requires ``i > j > alpha > beta >= 1``.  Yields exactly 8 anti-Hermitian
    strings supported on ``[beta, alpha] u [j, i]`` (orbital ranges), i.e.
    locality ``(alpha - beta + 1) + (i - j + 1)``.
    """
    if not (i > j > alpha > beta >= 1):
        raise ValueError(
            f"need i > j > alpha > beta >= 1, got ({i}, {j}, {alpha}, {beta})"
        )
    forward = (
        jw_ladder(i, "create")
        @ jw_ladder(j, "create")
        @ jw_ladder(alpha, "annihilate")
        @ jw_ladder(beta, "annihilate")
    )
    return forward - forward.adjoint()


def single_excitation_locality(i: int, alpha: int) -> int:
    """Locality of both strings of a single excitation, without composing."""
    return i - alpha + 1


def double_excitation_locality(i: int, j: int, alpha: int, beta: int) -> int:
    """Locality of all eight strings of a double excitation, without composing.

    The support is ``[beta, alpha] u [j, i]``; the contiguous-span value
    ``i - beta + 1`` (used by the printed depth accounting) is an upper bound,
    attained only when ``j = alpha + 1``.
    """
    return (alpha - beta + 1) + (i - j + 1)
